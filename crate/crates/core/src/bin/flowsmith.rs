fn main() {
    std::process::exit(flowsmith::cli::run(std::env::args_os()));
}
