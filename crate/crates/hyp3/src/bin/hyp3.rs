fn main() {
    std::process::exit(hyp3::cli::run(std::env::args_os()));
}
