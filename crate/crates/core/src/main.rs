fn main() -> std::process::ExitCode {
    polycodes::cli::main_with(std::env::args_os())
}
