fn main() -> std::process::ExitCode {
    bipcon::cli::main()
}
