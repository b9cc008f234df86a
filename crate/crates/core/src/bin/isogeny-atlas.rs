fn main() {
    std::process::exit(isogeny_atlas::cli::main_with_args(std::env::args_os()));
}
