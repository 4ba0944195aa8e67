use clap::Parser;

fn main() {
    theta_forge::init_threads_from_env();
    let cli = match theta_forge::Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                // input errors exit 1, reserving 2 for Unknown verdicts
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match theta_forge::run(cli) {
        Ok(report) => {
            println!("{}", report.rendered());
            std::process::exit(report.exit_code);
        }
        Err(message) => {
            eprintln!("error: {message}");
            std::process::exit(1);
        }
    }
}
