fn main() {
    std::process::exit(twistlie::cli::main_with(std::env::args_os()));
}
