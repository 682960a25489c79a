fn main() {
    std::process::exit(conekit::run());
}
