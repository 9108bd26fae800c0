fn main() {
    std::process::exit(symdefect::cli::main_with_args(std::env::args_os()));
}
