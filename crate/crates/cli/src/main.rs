fn main() -> std::process::ExitCode {
    rootzone_cli::main_entry().into()
}
