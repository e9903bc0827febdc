fn main() {
    std::process::exit(chroma::cli::run(std::env::args_os()));
}
