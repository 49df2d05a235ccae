//! The structural 2-cells: left and right unitors and the associator, all
//! invertible, all with identity result components, plus their naturality
//! squares checked as strict equalities.
//!
//! ```bash
//! cargo run -p opencat --example unitors_and_associator
//! ```

use opencat::harness::fixtures;
use opencat::{associator, left_unitor, right_unitor, ElementValue, LawChecker, OpenNatTrans};

fn main() -> opencat::Result<()> {
    let of2 = fixtures::of2();

    let lu = left_unitor(&of2);
    let ru = right_unitor(&of2);
    let x1 = ElementValue::atom("x1");
    println!("left unitor alpha at b: {x1} <-> {}", lu.alpha().apply_po(&"b".into(), &x1)?);
    println!("right unitor alpha at b: {x1} <-> {}", ru.alpha().apply_po(&"b".into(), &x1)?);
    println!("left unitor valid: {}", lu.validate());
    println!("invertible: {}", lu.inverse().is_some());

    let assoc = associator(&of2, &of2, &of2)?;
    let sample = assoc
        .alpha()
        .components_po()
        .get(&"b".into())
        .and_then(|comp| comp.iter().next())
        .expect("nonempty fiber");
    println!("associator alpha rewrites {} to {}", sample.0, sample.1);
    println!("associator valid: {}", assoc.validate());
    println!("invertible: {}", assoc.inverse().is_some());

    // Naturality: both unitor squares and the associator square commute on
    // the nose for any cells, here the identity cell of the fixture.
    let mut checker = LawChecker::new();
    let theta = OpenNatTrans::identity(&of2);
    let (left, right) = checker.check_unitor_naturality(&theta)?;
    println!("{left}");
    println!("{right}");
    let report = checker.check_associator_naturality(&theta, &theta, &theta)?;
    println!("{report}");
    Ok(())
}
