fn main() {
    std::process::exit(qlga::cli::run(std::env::args_os()));
}
