fn main() {
    std::process::exit(hopfcyclic::cli::main());
}
