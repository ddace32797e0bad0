fn main() {
    std::process::exit(quadplane::cli::run(std::env::args_os()));
}
