fn main() {
    std::process::exit(qlogic::cli::run_main());
}
