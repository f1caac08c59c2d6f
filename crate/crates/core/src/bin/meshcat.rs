fn main() {
    std::process::exit(meshcat::cli::run(std::env::args_os()));
}
