//! Presheaves into the opposite of finite sets and their categories of
//! elements: fibers of interactions over each object, restriction maps
//! running backwards along arrows, and the contravariant functor induced
//! on the glued-together element categories.
//!
//! ```bash
//! cargo run -p opencat --example category_of_elements
//! ```

use opencat::harness::fixtures;
use opencat::{compose_functors, vcomp_presheaf_morphism, FinFunctor, PresheafMorphism};

fn main() -> opencat::Result<()> {
    // Fibers {u} over a and {v, w} over b; the restriction along f : a -> b
    // collapses both v and w onto u.
    let p2 = fixtures::presheaf_p2();
    println!("presheaf: {}", p2.validate());

    let elements = p2.category_of_elements();
    println!("category of elements: {}", elements.validate());
    for obj in elements.objects() {
        println!("  object {obj}");
    }
    for (arrow, endpoints) in elements.arrows() {
        println!("  arrow {arrow}: {} -> {}", endpoints.src, endpoints.tgt);
    }

    // A morphism of presheaves acts on elements contravariantly: the induced
    // functor runs from the codomain's elements to the domain's, merging the
    // fibers the components collapse.
    let theta = fixtures::fiber_collapse_morphism();
    let functor = theta.elements_functor();
    println!("elements functor: {}", functor.validate());
    println!(
        "  (b|v) and (b|w) both land on {}",
        functor.obj_image(&"(b|v)".into())?
    );

    // The construction is functorial: identities map to identities, and a
    // vertical composite maps to the reversed composite of functors.
    let id = PresheafMorphism::identity(&p2);
    assert_eq!(
        id.elements_functor(),
        FinFunctor::identity(&p2.category_of_elements())
    );
    let id_cod = PresheafMorphism::identity(theta.cod());
    let composite = vcomp_presheaf_morphism(&id_cod, &theta)?;
    assert_eq!(
        composite.elements_functor(),
        compose_functors(&theta.elements_functor(), &id_cod.elements_functor())?
    );
    println!("identity and composite functoriality: exact");
    Ok(())
}
