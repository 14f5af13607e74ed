fn main() {
    std::process::exit(casimir_lattice::cli::main_with_args(std::env::args_os()));
}
