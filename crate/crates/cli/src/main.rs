fn main() {
    std::process::exit(leibcx_cli::run(std::env::args_os()));
}
