//! Runs one acceptance suite and prints its report.

use twistlie::acceptance::{run, Options, Suite};

fn main() {
    let suite: Suite = std::env::args().nth(1).as_deref().unwrap_or("projcat").parse().expect("suite name");
    let report = run(suite, &Options::new(42));
    print!("{}", report.to_tsv());
    eprint!("{}", report.timings());
}
