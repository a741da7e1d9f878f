fn main() {
    std::process::exit(antikekule::cli::main());
}
