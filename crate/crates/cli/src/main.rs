use std::io::Write;

fn main() {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = ordconf_cli::run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock());
    std::io::stdout().flush().ok();
    std::process::exit(code);
}
