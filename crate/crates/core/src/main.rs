fn main() {
    std::process::exit(barnes_core::cli::main());
}
