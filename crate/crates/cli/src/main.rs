fn main() {
    std::process::exit(bbw_cli::main_with_std_args());
}
