fn main() {
    std::process::exit(cpmackey::cli::main_with_args(std::env::args_os()));
}
