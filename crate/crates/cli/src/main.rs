use std::process::ExitCode;

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let status = graph_energy::main_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr());
    ExitCode::from(status.code())
}
