fn main() {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("AOS_LOG", "warn")).format_timestamp(None).init();
    std::process::exit(aos::cli::run(std::env::args_os()));
}
