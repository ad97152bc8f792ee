fn main() {
    std::process::exit(paramrec_cli::main_with(std::env::args_os()));
}
