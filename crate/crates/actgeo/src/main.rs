fn main() {
    std::process::exit(actgeo::cli::run());
}
