fn main() {
    std::process::exit(lkrep::cli::run(std::env::args_os()));
}
