fn main() {
    std::process::exit(dv11_cli::run(std::env::args_os()));
}
