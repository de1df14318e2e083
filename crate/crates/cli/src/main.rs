use clap::Parser;

fn main() {
    let cli = zariski_cli::Cli::parse();
    let out = zariski_cli::run(&cli);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::process::exit(out.code);
}
