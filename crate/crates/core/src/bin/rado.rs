fn main() {
    std::process::exit(rado::cli::main_with_args(std::env::args_os()));
}
