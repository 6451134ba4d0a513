fn main() {
    std::process::exit(covert_uav::cli::run());
}
