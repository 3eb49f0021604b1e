use std::io::IsTerminal;

fn main() {
    let color = lutz_cli::color_enabled(std::env::var_os("NO_COLOR"), std::io::stderr().is_terminal());
    let code = lutz_cli::run(
        std::env::args_os(),
        &mut std::io::stdin().lock(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
        color,
    );
    std::process::exit(code);
}
