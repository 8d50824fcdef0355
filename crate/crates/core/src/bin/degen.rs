fn main() {
    std::process::exit(degen_core::cli::run(std::env::args_os()));
}
