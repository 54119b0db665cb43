fn main() {
    std::process::exit(hbdiff::cli::run(std::env::args_os()));
}
