fn main() {
    std::process::exit(sphertop::cli::run(std::env::args_os()));
}
