//! Command-line interface: JSON in, JSON report out.
//!
//! Exit codes: 0 success, 1 malformed input (structured error object on
//! stdout), 2 certificate/oracle disagreement in `verify` (an invariant
//! violation that must never occur).

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::cuboid::{cubic_param_transform, cuboid_char_eval};
use crate::error::Error;
use crate::fiber::{falsify, preimage_count, Coord, FalsifyResult};
use crate::invert::{decide_invertibility, invert, InvertStatus};
use crate::poly::Poly1;
use crate::quadmap::QuadMap;
use crate::rat::Rat;
use crate::reduce::precanonicalize;
use crate::report;
use crate::rootcert::{cubic_classify, quartic_exactly_one_real};
use crate::sturm::sturm_count;

#[derive(Parser)]
#[command(
    name = "quadplane",
    about = "Exact invertibility analysis of quadratic transformations of the plane, \
             with real-root certificates for cubics and quartics",
    disable_help_subcommand = true
)]
struct Cli {
    /// Seed for the randomized sampling used by `verify FILE`.
    #[arg(long, global = true, default_value_t = 0xC0FFEE)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify a map's associated quadratic form and decide invertibility.
    Classify { file: PathBuf },
    /// Reduce a map toward its pre-canonical shape, printing the transcript.
    Reduce {
        file: PathBuf,
        /// Allow flagged binary64 steps for irrational scalings.
        #[arg(long)]
        numeric: bool,
    },
    /// Compute the exact preimage of a target under an invertible map.
    Invert {
        file: PathBuf,
        /// Target point, two rationals.
        #[arg(long, num_args = 2, value_names = ["P", "Q"], allow_hyphen_values = true)]
        target: Vec<String>,
    },
    /// Search for a non-invertibility witness over the half-integer grid.
    Witness {
        file: PathBuf,
        #[arg(long, default_value_t = 4)]
        bound: u32,
    },
    /// Closed-form real-root certificates.
    Roots {
        #[command(subcommand)]
        which: RootsCmd,
    },
    /// Cross-check a certificate or verdict against the Sturm oracle.
    Verify {
        /// Map file to verify end to end.
        file: Option<PathBuf>,
        /// Monic quartic coefficients a1 a2 a3 a4.
        #[arg(long, num_args = 4, value_names = ["A1", "A2", "A3", "A4"], allow_hyphen_values = true)]
        quartic: Option<Vec<String>>,
        #[arg(long, default_value_t = 4)]
        bound: u32,
    },
    /// Cuboid characteristic polynomial demo.
    Cuboid {
        #[command(subcommand)]
        which: CuboidCmd,
    },
}

#[derive(Subcommand)]
enum RootsCmd {
    /// Certificate for x^3 + a1 x^2 + a2 x + a3.
    Cubic {
        #[arg(allow_hyphen_values = true)]
        a1: String,
        #[arg(allow_hyphen_values = true)]
        a2: String,
        #[arg(allow_hyphen_values = true)]
        a3: String,
    },
    /// Certificate for x^4 + a1 x^3 + a2 x^2 + a3 x + a4.
    Quartic {
        #[arg(allow_hyphen_values = true)]
        a1: String,
        #[arg(allow_hyphen_values = true)]
        a2: String,
        #[arg(allow_hyphen_values = true)]
        a3: String,
        #[arg(allow_hyphen_values = true)]
        a4: String,
    },
}

#[derive(Subcommand)]
enum CuboidCmd {
    /// Evaluate the degree-10 characteristic polynomial at integer (t, p, q).
    Eval {
        #[arg(allow_hyphen_values = true)]
        t: String,
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Apply the involutive parameter transform (B q^3 - p, q).
    Transform {
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
}

/// Run the CLI on the given argv (including the program name). Prints one
/// JSON document to stdout and returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let start = Instant::now();
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            // clap renders its own message (incl. --help); still emit a
            // structured object for machine callers
            let _ = e.print();
            let doc = json!({ "error": { "kind": "usage", "message": e.to_string() } });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match execute(&cli.cmd, cli.seed) {
        Ok(Executed {
            command,
            input,
            result,
            crosscheck,
        }) => {
            let agreed = crosscheck
                .as_ref()
                .and_then(|c| c.get("agreed"))
                .and_then(Value::as_bool);
            let mut doc = json!({
                "command": command,
                "input": input,
                "result": result,
                "timing_ms": start.elapsed().as_secs_f64() * 1e3,
            });
            if let Some(c) = crosscheck {
                doc.as_object_mut()
                    .unwrap()
                    .insert("oracle_crosscheck".into(), c);
            }
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            match agreed {
                Some(false) => 2,
                _ => 0,
            }
        }
        Err(err) => {
            let doc = json!({ "error": { "kind": error_kind(&err), "message": err.to_string() } });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            1
        }
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::MalformedInput(_) | Error::ParseRational(_) | Error::ZeroDenominator => "input",
        Error::DegenerateFiber(_) => "degenerate_fiber",
        Error::NotInvertible(_) => "not_invertible",
        _ => "error",
    }
}

struct Executed {
    command: String,
    input: Value,
    result: Value,
    crosscheck: Option<Value>,
}

fn parse_rat(s: &str) -> Result<Rat, Error> {
    s.parse()
}

fn parse_bigint(s: &str) -> Result<BigInt, Error> {
    s.trim()
        .parse()
        .map_err(|_| Error::MalformedInput(format!("not an integer: {s:?}")))
}

fn load_map(path: &PathBuf) -> Result<(QuadMap, Value), Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::MalformedInput(format!("cannot read {}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| Error::MalformedInput(format!("invalid JSON in {}: {e}", path.display())))?;
    let map = QuadMap::from_json(&value)?;
    Ok((map, value))
}

fn sample_rat(rng: &mut ChaCha8Rng) -> Rat {
    Rat::frac(rng.gen_range(-60..=60), rng.gen_range(1..=9))
}

fn execute(cmd: &Cmd, seed: u64) -> Result<Executed, Error> {
    match cmd {
        Cmd::Classify { file } => {
            let (map, input) = load_map(file)?;
            let triple = map.associated_form();
            let verdict = decide_invertibility(&map, 4);
            let result = json!({
                "form_triple": report::form_triple_json(&triple),
                "class": report::form_class_json(&triple.classify()),
                "light_vectors": report::light_vectors_json(&triple.light_vectors()),
                "verdict": report::verdict_json(&verdict),
            });
            Ok(Executed {
                command: "classify".into(),
                input,
                result,
                crosscheck: None,
            })
        }
        Cmd::Reduce { file, numeric } => {
            let (map, input) = load_map(file)?;
            let transcript = precanonicalize(&map, *numeric)?;
            Ok(Executed {
                command: "reduce".into(),
                input,
                result: report::transcript_json(&transcript),
                crosscheck: None,
            })
        }
        Cmd::Invert { file, target } => {
            let (map, input) = load_map(file)?;
            let tp = parse_rat(&target[0])?;
            let tq = parse_rat(&target[1])?;
            let verdict = decide_invertibility(&map, 4);
            match verdict.status {
                InvertStatus::InvertibleQuadratic | InvertStatus::InvertibleAffine => {}
                status => {
                    return Err(Error::NotInvertible(format!(
                        "cannot invert: status {status} ({})",
                        verdict.justification
                    )))
                }
            }
            let (p, q) = invert(&verdict, &tp, &tq)?;
            let result = json!({
                "target": [tp.to_string(), tq.to_string()],
                "preimage": [p.to_string(), q.to_string()],
                "inverse": verdict.inverse.as_ref().map(|inv| {
                    let (dp, dq) = inv.display_rows();
                    json!({ "map": inv.to_json(), "display": { "p": dp, "q": dq } })
                }),
            });
            Ok(Executed {
                command: "invert".into(),
                input,
                result,
                crosscheck: None,
            })
        }
        Cmd::Witness { file, bound } => {
            let (map, input) = load_map(file)?;
            let result = match falsify(&map, *bound) {
                FalsifyResult::Found(w) => json!({ "witness": report::witness_json(&w) }),
                FalsifyResult::NotFound { targets_scanned } => json!({
                    "witness": null,
                    "targets_scanned": targets_scanned,
                }),
            };
            Ok(Executed {
                command: "witness".into(),
                input,
                result,
                crosscheck: None,
            })
        }
        Cmd::Roots { which } => match which {
            RootsCmd::Cubic { a1, a2, a3 } => {
                let (a1, a2, a3) = (parse_rat(a1)?, parse_rat(a2)?, parse_rat(a3)?);
                let cert = cubic_classify(&a1, &a2, &a3);
                Ok(Executed {
                    command: "roots cubic".into(),
                    input: json!([a1.to_string(), a2.to_string(), a3.to_string()]),
                    result: report::cubic_cert_json(&cert),
                    crosscheck: None,
                })
            }
            RootsCmd::Quartic { a1, a2, a3, a4 } => {
                let (a1, a2, a3, a4) =
                    (parse_rat(a1)?, parse_rat(a2)?, parse_rat(a3)?, parse_rat(a4)?);
                let cert = quartic_exactly_one_real(&a1, &a2, &a3, &a4);
                Ok(Executed {
                    command: "roots quartic".into(),
                    input: json!([
                        a1.to_string(),
                        a2.to_string(),
                        a3.to_string(),
                        a4.to_string()
                    ]),
                    result: report::quartic_cert_json(&cert),
                    crosscheck: None,
                })
            }
        },
        Cmd::Verify {
            file,
            quartic,
            bound,
        } => match (file, quartic) {
            (None, Some(coeffs)) => verify_quartic(coeffs),
            (Some(path), None) => verify_map(path, *bound, seed),
            _ => Err(Error::MalformedInput(
                "verify takes either FILE or --quartic A1 A2 A3 A4".into(),
            )),
        },
        Cmd::Cuboid { which } => match which {
            CuboidCmd::Eval { t, p, q } => {
                let (t, p, q) = (parse_bigint(t)?, parse_bigint(p)?, parse_bigint(q)?);
                let eval = cuboid_char_eval(&t, &p, &q);
                Ok(Executed {
                    command: "cuboid eval".into(),
                    input: json!([t.to_string(), p.to_string(), q.to_string()]),
                    result: json!({
                        "value": eval.value.to_string(),
                        "warnings": eval.warnings,
                    }),
                    crosscheck: None,
                })
            }
            CuboidCmd::Transform { b, p, q } => {
                let (b, p, q) = (parse_bigint(b)?, parse_bigint(p)?, parse_bigint(q)?);
                let (ip, iq) = cubic_param_transform(&b, &p, &q);
                Ok(Executed {
                    command: "cuboid transform".into(),
                    input: json!([b.to_string(), p.to_string(), q.to_string()]),
                    result: json!({ "image": [ip.to_string(), iq.to_string()] }),
                    crosscheck: None,
                })
            }
        },
    }
}

fn verify_quartic(coeffs: &[String]) -> Result<Executed, Error> {
    let a: Vec<Rat> = coeffs
        .iter()
        .map(|s| parse_rat(s))
        .collect::<Result<_, _>>()?;
    let cert = quartic_exactly_one_real(&a[0], &a[1], &a[2], &a[3]);
    let p4 = Poly1::monic_quartic(&a[0], &a[1], &a[2], &a[3]);
    let oracle = sturm_count(&p4, None, None)?;
    let agreed = cert.exactly_one_real == (oracle.distinct_real == 1);
    Ok(Executed {
        command: "verify quartic".into(),
        input: json!(coeffs),
        result: report::quartic_cert_json(&cert),
        crosscheck: Some(json!({
            "agreed": agreed,
            "oracle": report::root_count_json(&oracle),
        })),
    })
}

fn verify_map(path: &PathBuf, bound: u32, seed: u64) -> Result<Executed, Error> {
    let (map, input) = load_map(path)?;
    let verdict = decide_invertibility(&map, bound);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks: Vec<Value> = Vec::new();
    let mut agreed = true;
    let note = |checks: &mut Vec<Value>, name: &str, ok: bool, detail: String| {
        checks.push(json!({ "check": name, "ok": ok, "detail": detail }));
        ok
    };

    match verdict.status {
        InvertStatus::InvertibleQuadratic | InvertStatus::InvertibleAffine => {
            // exact round trips at seeded sample points
            let mut ok = true;
            for _ in 0..25 {
                let (p, q) = (sample_rat(&mut rng), sample_rat(&mut rng));
                let (tp, tq) = map.eval(&p, &q);
                match invert(&verdict, &tp, &tq) {
                    Ok(back) => ok &= back == (p, q),
                    Err(_) => ok = false,
                }
            }
            agreed &= note(
                &mut checks,
                "inverse_round_trip",
                ok,
                "25 seeded points, exact equality".into(),
            );
            // the falsifier must come up empty
            let none = matches!(falsify(&map, 3), FalsifyResult::NotFound { .. });
            agreed &= note(
                &mut checks,
                "falsifier_finds_nothing",
                none,
                "grid bound 3".into(),
            );
            // every sampled fiber has exactly one point
            let mut ok = true;
            for _ in 0..10 {
                let (p, q) = (sample_rat(&mut rng), sample_rat(&mut rng));
                let (tp, tq) = map.eval(&p, &q);
                ok &= matches!(preimage_count(&map, &tp, &tq), Ok(f) if f.count() == 1);
            }
            agreed &= note(
                &mut checks,
                "sampled_fibers_singleton",
                ok,
                "10 seeded image points".into(),
            );
        }
        InvertStatus::NotInvertible => {
            if let Some(w) = &verdict.witness {
                // exact preimages hit the target exactly
                let mut ok = true;
                let mut exact = 0;
                for pt in &w.preimages {
                    if let (Coord::Exact(p), Coord::Exact(q)) = (&pt.p, &pt.q) {
                        exact += 1;
                        ok &= map.eval(p, q) == (w.target.0.clone(), w.target.1.clone());
                    }
                }
                agreed &= note(
                    &mut checks,
                    "witness_exact_preimages",
                    ok,
                    format!("{exact} exact preimages re-evaluated"),
                );
                // independent fiber recount at the witness target
                let recount = preimage_count(&map, &w.target.0, &w.target.1)
                    .map(|f| f.count())
                    .ok();
                let ok = recount.is_some_and(|c| c != 1);
                agreed &= note(
                    &mut checks,
                    "witness_fiber_recount",
                    ok,
                    format!("recount = {recount:?}"),
                );
            } else {
                agreed &= note(
                    &mut checks,
                    "witness_present",
                    true,
                    "no witness within bound; verdict rests on the classification theorem".into(),
                );
            }
        }
        InvertStatus::DegenerateConstant => {
            let ok = map.eval(&Rat::zero(), &Rat::zero()) == map.eval(&Rat::one(), &Rat::one());
            agreed &= note(&mut checks, "constant_map", ok, "two probe points".into());
        }
    }

    Ok(Executed {
        command: "verify map".into(),
        input,
        result: report::verdict_json(&verdict),
        crosscheck: Some(json!({ "agreed": agreed, "checks": checks })),
    })
}
