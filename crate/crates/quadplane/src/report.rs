//! JSON rendering of certificates, verdicts, transcripts, and witnesses.
//!
//! Every rational is rendered as its exact `"n"`/`"n/d"` string; binary64
//! appears only in clearly-labeled `approx` fields and numeric-step
//! tolerances. The schemas here are stable and covered by golden tests.

use serde_json::{json, Value};

use crate::fiber::{Coord, Fiber, PreimagePoint, Witness, WitnessKind};
use crate::invert::{InvertibilityVerdict, LatticeReport};
use crate::quadform::{FormClass, FormTriple, LightVectors};
use crate::reduce::{CanonicalForm, ReductionOutcome, ReductionTranscript, Step};
use crate::rootcert::{CubicCert, CubicVerdict, QuarticBranch, QuarticCert};
use crate::sturm::{RootCount, RootLoc};

pub fn root_loc_json(loc: &RootLoc) -> Value {
    match loc {
        RootLoc::Exact(r) => json!({ "exact": r.to_string(), "approx": r.to_f64() }),
        RootLoc::Interval(a, b) => json!({
            "interval": [a.to_string(), b.to_string()],
            "approx": (a.to_f64() + b.to_f64()) / 2.0,
        }),
    }
}

pub fn root_count_json(rc: &RootCount) -> Value {
    json!({
        "distinct_real": rc.distinct_real,
        "isolating_intervals": rc.roots.iter().map(|r| root_loc_json(&r.loc)).collect::<Vec<_>>(),
        "multiplicities": rc.roots.iter().map(|r| r.multiplicity).collect::<Vec<_>>(),
    })
}

pub fn form_triple_json(t: &FormTriple) -> Value {
    json!({
        "alpha": t.alpha.to_string(),
        "beta": t.beta.to_string(),
        "gamma": t.gamma.to_string(),
    })
}

pub fn form_class_json(c: &FormClass) -> Value {
    json!({
        "tag": c.tag.to_string(),
        "det_omega1": c.det_omega1.to_string(),
    })
}

pub fn light_vectors_json(lv: &LightVectors) -> Value {
    match lv {
        LightVectors::AllVectors => json!({ "kind": "all_vectors" }),
        LightVectors::None => json!({ "kind": "none" }),
        LightVectors::Single(v) => json!({
            "kind": "single",
            "directions": [[v[0].to_string(), v[1].to_string()]],
        }),
        LightVectors::PairRational(v, w) => json!({
            "kind": "pair_rational",
            "directions": [
                [v[0].to_string(), v[1].to_string()],
                [w[0].to_string(), w[1].to_string()],
            ],
        }),
        LightVectors::PairSurd { slope_poly, roots } => json!({
            "kind": "pair_surd",
            "slope_poly_ascending": slope_poly.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "slopes": roots.iter().map(root_loc_json).collect::<Vec<_>>(),
            "note": "directions are (t, 1) for each isolated slope t",
        }),
    }
}

pub fn coord_json(c: &Coord) -> Value {
    match c {
        Coord::Exact(r) => Value::String(r.to_string()),
        Coord::Boxed(a, b) => json!({
            "interval": [a.to_string(), b.to_string()],
            "approx": (a.to_f64() + b.to_f64()) / 2.0,
        }),
    }
}

pub fn preimage_json(pt: &PreimagePoint) -> Value {
    json!([coord_json(&pt.p), coord_json(&pt.q)])
}

pub fn witness_json(w: &Witness) -> Value {
    let kind = match w.kind {
        WitnessKind::Collision => "Collision",
        WitnessKind::MissingValue => "MissingValue",
    };
    json!({
        "kind": kind,
        "target": [w.target.0.to_string(), w.target.1.to_string()],
        "preimages": w.preimages.iter().map(preimage_json).collect::<Vec<_>>(),
        "certificate": w.certificate,
    })
}

pub fn fiber_json(f: &Fiber) -> Value {
    json!({
        "target": [f.target.0.to_string(), f.target.1.to_string()],
        "resolvent_ascending": f.resolvent.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "resolvent_roots": root_count_json(&f.resolvent_roots),
        "preimages": f.preimages.iter().map(preimage_json).collect::<Vec<_>>(),
        "count": f.count(),
    })
}

fn canonical_form_json(form: &CanonicalForm) -> Value {
    match form {
        CanonicalForm::Shear => json!({ "name": "shear" }),
        CanonicalForm::Indefinite => json!({ "name": "indefinite" }),
        CanonicalForm::SemiDefinite { a10 } => json!({
            "name": "semi-definite",
            "a10": a10.to_string(),
        }),
        CanonicalForm::Definite { a10, a01 } => json!({
            "name": "definite",
            "a10": a10.to_string(),
            "a01": a01.to_string(),
        }),
    }
}

fn step_json(s: &Step) -> Value {
    let mut v = s.map.to_json();
    let obj = v.as_object_mut().unwrap();
    obj.insert("side".into(), json!(s.side.to_string()));
    obj.insert("rule".into(), json!(s.rule));
    obj.insert("numeric".into(), json!(s.numeric));
    if s.numeric {
        // binary64 rendering of the dyadic entries, for human audit
        obj.insert(
            "matrix_approx".into(),
            json!([
                [s.map.m11.to_f64(), s.map.m12.to_f64()],
                [s.map.m21.to_f64(), s.map.m22.to_f64()],
            ]),
        );
    }
    v
}

pub fn transcript_json(t: &ReductionTranscript) -> Value {
    let outcome = match &t.outcome {
        ReductionOutcome::Canonical(form) => json!({
            "kind": "canonical",
            "form": canonical_form_json(form),
        }),
        ReductionOutcome::CanonicalNumeric { form, max_rel_err } => json!({
            "kind": "canonical_numeric",
            "form": canonical_form_json(form),
            "max_rel_err": max_rel_err,
        }),
        ReductionOutcome::Obstructed { reason } => json!({
            "kind": "obstructed",
            "reason": reason,
        }),
    };
    let (pa, pb) = t.final_map.display_rows();
    json!({
        "initial": t.initial.to_json(),
        "steps": t.steps.iter().map(step_json).collect::<Vec<_>>(),
        "final": t.final_map.to_json(),
        "final_display": { "p": pa, "q": pb },
        "outcome": outcome,
    })
}

pub fn verdict_json(v: &InvertibilityVerdict) -> Value {
    let inverse = v.inverse.as_ref().map(|inv| {
        let (pa, pb) = inv.display_rows();
        json!({
            "map": inv.to_json(),
            "display": { "p": pa, "q": pb },
        })
    });
    json!({
        "status": v.status.to_string(),
        "class": form_class_json(&v.class),
        "form_triple": form_triple_json(&v.map.associated_form()),
        "justification": v.justification,
        "transcript": v.transcript.as_ref().map(transcript_json),
        "inverse": inverse,
        "witness": v.witness.as_ref().map(witness_json),
    })
}

pub fn lattice_json(rep: &LatticeReport) -> Value {
    json!({
        "bijective_on_lattice": rep.bijective_on_lattice,
        "reason": rep.reason,
    })
}

pub fn cubic_cert_json(c: &CubicCert) -> Value {
    let verdict = match c.verdict {
        CubicVerdict::OneSimpleReal => "OneSimpleReal",
        CubicVerdict::ThreeDistinctReal => "ThreeDistinctReal",
        CubicVerdict::RepeatedRootCase => "RepeatedRootCase",
    };
    json!({
        "alpha1": c.alpha1.to_string(),
        "alpha2": c.alpha2.to_string(),
        "alpha3": c.alpha3.to_string(),
        "D3": c.d3.to_string(),
        "verdict": verdict,
        "distinct_real_count": c.distinct_real_count,
        "multiplicities": c.multiplicities.iter().map(|(loc, m)| json!({
            "root": root_loc_json(loc),
            "multiplicity": m,
        })).collect::<Vec<_>>(),
    })
}

pub fn quartic_cert_json(c: &QuarticCert) -> Value {
    let branch = match c.branch {
        QuarticBranch::GenericSimpleRoots => "GenericSimpleRoots",
        QuarticBranch::DoubleRootBranch => "DoubleRootBranch",
        QuarticBranch::QuadrupleBranch => "QuadrupleBranch",
        QuarticBranch::TwoDoubleRealBranch => "TwoDoubleRealBranch",
    };
    json!({
        "a1": c.a1.to_string(),
        "a2": c.a2.to_string(),
        "a3": c.a3.to_string(),
        "a4": c.a4.to_string(),
        "D4": c.d4.to_string(),
        "A0": c.aux.a0.to_string(),
        "A1": c.aux.a1.to_string(),
        "B2": c.aux.b2.to_string(),
        "D2_special": c.aux.d2_special.to_string(),
        "exactly_one_real": c.exactly_one_real,
        "branch": branch,
        "x0": c.x0.as_ref().map(|r| r.to_string()),
        "factor": c.factor.as_ref().map(|f| json!({
            "b1": f.b1.to_string(),
            "b2": f.b2.to_string(),
            "D2": f.d2.to_string(),
        })),
    })
}
