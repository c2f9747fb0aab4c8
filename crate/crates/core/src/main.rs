fn main() {
    std::process::exit(flatmorse::cli::cli_main(std::env::args_os()));
}
