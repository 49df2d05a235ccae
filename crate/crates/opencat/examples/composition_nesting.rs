//! Open functor composition pairs interactions up, and the pair nesting
//! records the composition nesting. Composing with identities therefore
//! changes the value: the composition is neither strictly unital nor
//! strictly associative.
//!
//! ```bash
//! cargo run -p opencat --example composition_nesting
//! ```

use opencat::harness::fixtures;
use opencat::{compose_open, OpenFunctor};

fn main() -> opencat::Result<()> {
    let of2 = fixtures::of2();
    let id = OpenFunctor::identity(of2.cod());

    // Composing with the identity wraps every interaction in a pair.
    let left_unit = compose_open(&id, &of2)?;
    println!("fibers of Id . F over b:");
    for pair in left_unit.fiber(&"b".into()) {
        println!(
            "  {pair} |-> {}",
            left_unit.apply_object(&"b".into(), pair)?
        );
    }
    assert_ne!(left_unit, of2);
    println!("Id . F = F? no: the fibers are pairs now");

    // Reassociating a triple changes the nesting, not the content.
    let inner_first = compose_open(&of2, &compose_open(&of2, &of2)?)?;
    let outer_first = compose_open(&compose_open(&of2, &of2)?, &of2)?;
    assert_ne!(inner_first, outer_first);
    println!("fibers over b of the two triple composites:");
    for (label, composite) in [("F . (F . F)", &inner_first), ("(F . F) . F", &outer_first)] {
        let fiber: Vec<String> = composite
            .fiber(&"b".into())
            .iter()
            .map(ToString::to_string)
            .collect();
        println!("  {label}: {}", fiber.join(", "));
    }
    println!("same count, different nesting; the associator repairs this");
    Ok(())
}
