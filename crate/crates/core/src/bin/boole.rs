fn main() {
    std::process::exit(boole_core::cli::main_with_args(std::env::args_os()));
}
