fn main() {
    std::process::exit(qtsym::cli::main_with(std::env::args_os()));
}
