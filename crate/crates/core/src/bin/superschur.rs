fn main() {
    superschur::cli::init_threads();
    let code = superschur::cli::run(std::env::args_os(), &mut std::io::stdout().lock());
    std::process::exit(code);
}
