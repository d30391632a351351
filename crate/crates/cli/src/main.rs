fn main() {
    std::process::exit(bduplex_cli::run(std::env::args_os()));
}
