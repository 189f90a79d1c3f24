fn main() {
    std::process::exit(porism_lab::run(std::env::args_os()));
}
