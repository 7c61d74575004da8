fn main() -> std::process::ExitCode {
    wilf_collapse::cli::main()
}
