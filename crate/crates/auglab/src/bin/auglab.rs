fn main() {
    let mut out = std::io::stdout();
    let code = auglab::cli::run(std::env::args().collect(), &mut out);
    std::process::exit(code);
}
