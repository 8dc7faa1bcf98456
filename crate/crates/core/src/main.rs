fn main() {
    std::process::exit(subword_count::cli::run(std::env::args_os()));
}
