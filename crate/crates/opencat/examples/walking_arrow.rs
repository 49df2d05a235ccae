//! Build finite categories with explicit composition tables, validate them
//! exhaustively, and see what a validation report looks like when an axiom
//! breaks.
//!
//! ```bash
//! cargo run -p opencat --example walking_arrow
//! ```

use opencat::FinCategory;

fn main() -> opencat::Result<()> {
    // The walking arrow: one arrow f : a -> b plus identities. The builder
    // fills in identity arrows and every unit composition entry.
    let arrow = FinCategory::builder()
        .object("a")
        .object("b")
        .arrow("f", "a", "b")
        .build();
    println!("walking arrow: {}", arrow.validate());
    println!("  id_b . f = {}", arrow.compose(&"id_b".into(), &"f".into())?);

    // Non-identity composites are declared explicitly. Here: the free
    // category on a -> b -> c, where composition is path concatenation.
    let path = FinCategory::builder()
        .object("a")
        .object("b")
        .object("c")
        .arrow("f", "a", "b")
        .arrow("g", "b", "c")
        .arrow("gf", "a", "c")
        .compose("g", "f", "gf")
        .build();
    println!("free path category: {}", path.validate());
    println!("  g . f = {}", path.compose(&"g".into(), &"f".into())?);

    // Composing arrows whose endpoints do not meet is an error, not a
    // validation failure.
    let err = arrow.compose(&"f".into(), &"f".into()).unwrap_err();
    println!("  f . f -> {err}");

    // Remapping one table entry breaks the right identity law; the report
    // names the violated axiom and the witnessing arrows.
    let broken = FinCategory::builder()
        .object("a")
        .object("b")
        .arrow("f", "a", "b")
        .compose("f", "id_a", "id_a")
        .build();
    println!("broken table:\n{}", broken.validate());
    Ok(())
}
