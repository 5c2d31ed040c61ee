fn main() -> std::process::ExitCode {
    vortex_coherence::cli::main()
}
