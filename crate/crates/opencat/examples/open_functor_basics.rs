//! Open functors: a presheaf of external interactions plus a result functor
//! out of its category of elements. Applying one needs both an input and an
//! interaction.
//!
//! ```bash
//! cargo run -p opencat --example open_functor_basics
//! ```

use opencat::harness::fixtures;
use opencat::{ElementValue, FinFunctor, OpenFunctor};

fn main() -> opencat::Result<()> {
    // The worked example: on the walking arrow, b has two interactions.
    // Under x1 the arrow f is kept; under x2 everything collapses to a.
    let of2 = fixtures::of2();
    println!("open functor: {}", of2.validate());
    for c in of2.dom().objects() {
        for x in of2.fiber(c) {
            println!("  beta({c}, {x}) = {}", of2.apply_object(c, x)?);
        }
    }
    println!(
        "  beta(f, x1) = {}, beta(f, x2) = {}",
        of2.apply_arrow(&"f".into(), &ElementValue::atom("x1"))?,
        of2.apply_arrow(&"f".into(), &ElementValue::atom("x2"))?,
    );

    // Unknown interactions are rejected.
    let err = of2
        .apply_object(&"b".into(), &ElementValue::atom("x0"))
        .unwrap_err();
    println!("  beta(b, x0) -> {err}");

    // The identity open functor has a single interaction everywhere, and any
    // classical functor lifts the same way.
    let id = OpenFunctor::identity(of2.dom());
    println!(
        "identity open functor sends (b, *) to {}",
        id.apply_object(&"b".into(), &ElementValue::Star)?
    );
    let lifted = OpenFunctor::from_classical(&FinFunctor::identity(of2.dom()));
    assert_eq!(lifted, id);
    println!("from_classical(identity functor) = identity open functor");
    Ok(())
}
