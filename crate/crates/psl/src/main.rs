fn main() {
    std::process::exit(psl_cli::main_with_args(std::env::args_os()));
}
