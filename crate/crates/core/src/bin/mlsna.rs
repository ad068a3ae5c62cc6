fn main() {
    std::process::exit(mlsna::cli::run(std::env::args_os()));
}
