fn main() {
    std::process::exit(gridfault::cli::run());
}
