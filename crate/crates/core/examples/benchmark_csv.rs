//! Drive the `bench` subcommand programmatically and print its CSV.

fn main() {
    let code =
        pcentered::cli::run(["pcentered", "bench", "--family", "ktree3", "--n", "100", "--p", "1..3", "--seeds", "3"]);
    std::process::exit(code);
}
