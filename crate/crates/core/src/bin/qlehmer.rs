fn main() {
    std::process::exit(qlehmer::cli::run(std::env::args_os()));
}
