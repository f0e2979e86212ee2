fn main() {
    std::process::exit(regdepth::cli::main_with_args(std::env::args_os()));
}
