fn main() -> std::process::ExitCode {
    pcentered::cli::main()
}
