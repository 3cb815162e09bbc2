fn main() {
    std::process::exit(paltriples::cli::run(std::env::args_os()));
}
