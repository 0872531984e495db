use std::io::Write;

fn main() {
    let out = fockbasis::cli::run(std::env::args_os());
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    if !out.stderr.is_empty() {
        let _ = std::io::stderr().write_all(out.stderr.as_bytes());
        if !out.stderr.ends_with('\n') {
            eprintln!();
        }
    }
    std::process::exit(out.code);
}
