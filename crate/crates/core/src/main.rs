fn main() {
    std::process::exit(dihedral_k::cli::main_with_args(std::env::args_os()));
}
