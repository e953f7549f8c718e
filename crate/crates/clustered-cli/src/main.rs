fn main() {
    std::process::exit(clustered_cli::app::run());
}
