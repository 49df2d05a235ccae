//! The full law suite: pentagon and triangle identities on explicit
//! instances, then a seeded corpus run over every law.
//!
//! ```bash
//! cargo run -p opencat --example coherence_laws
//! ```

use opencat::harness::fixtures;
use opencat::harness::laws::{run_laws, LawRunConfig};
use opencat::LawChecker;

fn main() -> opencat::Result<()> {
    // One explicit pentagon and triangle on the worked example.
    let of2 = fixtures::of2();
    let mut checker = LawChecker::new();
    println!("{}", checker.check_pentagon(&of2, &of2, &of2, &of2)?);
    println!("{}", checker.check_triangle(&of2, &of2)?);

    // A corpus run: seeded, deterministic, one tally line per law.
    let cfg = LawRunConfig {
        seed: 7,
        count: 10,
        ..LawRunConfig::default()
    };
    let outcome = run_laws(&cfg)?;
    print!("{}", outcome.render());
    println!(
        "corpus verdict: {}",
        if outcome.all_hold() { "all hold" } else { "failures found" }
    );
    Ok(())
}
