fn main() -> std::process::ExitCode {
    fiblie::cli::main()
}
