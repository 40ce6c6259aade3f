use std::io::Write;

fn main() {
    let out = multispec::run(std::env::args_os());
    // a closed pipe downstream is not an error of ours
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stdout().flush();
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    std::process::exit(out.code);
}
