fn main() {
    std::process::exit(qsl2::cli::run());
}
