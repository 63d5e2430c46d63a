fn main() {
    std::process::exit(prolate::cli::main_entry());
}
