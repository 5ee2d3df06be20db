fn main() {
    std::process::exit(augtwist_cli::run(std::env::args_os()));
}
