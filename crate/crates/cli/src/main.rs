fn main() {
    let run = indmatch_cli::run_cli(std::env::args_os());
    print!("{}", run.stdout);
    eprint!("{}", run.stderr);
    std::process::exit(run.code);
}
