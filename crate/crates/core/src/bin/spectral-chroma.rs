fn main() {
    std::process::exit(spectral_chroma::cli::main_entry());
}
