//! Runs every cross-check on the built-in corpus.

use khovanov_potts::verify::{run_all, Corpus, VerifyConfig};

fn main() {
    let reports = run_all(&Corpus::builtin(), &VerifyConfig::default());
    for r in &reports {
        println!("{r}");
    }
    if reports.iter().any(|r| !r.passed) {
        std::process::exit(1);
    }
}
