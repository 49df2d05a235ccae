//! Small canonical instances shared by tests, examples and documentation.

use std::collections::BTreeMap;

use crate::elements::{ElementValue, Presheaf, PresheafMorphism};
use crate::fincat::{compose_functors, FinCategory, FinFunctor, NatTrans, ObjId};
use crate::openfun::OpenFunctor;
use crate::opennat::OpenNatTrans;

/// The walking arrow: objects `a`, `b` and one arrow `f : a -> b`.
pub fn walking_arrow() -> FinCategory {
    FinCategory::builder()
        .object("a")
        .object("b")
        .arrow("f", "a", "b")
        .build()
}

/// The free category on the graph `a -> b -> c`: arrows `f`, `g` and their
/// concatenation `gf`.
pub fn dag_path() -> FinCategory {
    FinCategory::builder()
        .object("a")
        .object("b")
        .object("c")
        .arrow("f", "a", "b")
        .arrow("g", "b", "c")
        .arrow("gf", "a", "c")
        .compose("g", "f", "gf")
        .build()
}

/// Two parallel arrows `p, q : u -> v`.
pub fn parallel_pair() -> FinCategory {
    FinCategory::builder()
        .object("u")
        .object("v")
        .arrow("p", "u", "v")
        .arrow("q", "u", "v")
        .build()
}

/// One object `m` with an idempotent endomorphism `s`.
pub fn idempotent_monoid() -> FinCategory {
    FinCategory::builder()
        .object("m")
        .arrow("s", "m", "m")
        .compose("s", "s", "s")
        .build()
}

/// A presheaf on the walking arrow with a collapsing action:
/// fibers `{u}` over `a` and `{v, w}` over `b`, both restricted to `u`.
pub fn presheaf_p2() -> Presheaf {
    let base = walking_arrow();
    let u = ElementValue::atom("u");
    let v = ElementValue::atom("v");
    let w = ElementValue::atom("w");
    let on_obj = BTreeMap::from([
        (ObjId::from("a"), vec![u.clone()]),
        (ObjId::from("b"), vec![v.clone(), w.clone()]),
    ]);
    let on_arr = BTreeMap::from([
        ("id_a".into(), BTreeMap::from([(u.clone(), u.clone())])),
        (
            "id_b".into(),
            BTreeMap::from([(v.clone(), v.clone()), (w.clone(), w.clone())]),
        ),
        ("f".into(), BTreeMap::from([(v, u.clone()), (w, u)])),
    ]);
    Presheaf::new(base, on_obj, on_arr)
}

/// A presheaf morphism collapsing the two-element fiber of [`presheaf_p2`]
/// onto one element of a presheaf with separated restrictions.
pub fn fiber_collapse_morphism() -> PresheafMorphism {
    let base = walking_arrow();
    let (u1, u2) = (ElementValue::atom("u1"), ElementValue::atom("u2"));
    let (v1, v2) = (ElementValue::atom("v1"), ElementValue::atom("v2"));
    let on_obj = BTreeMap::from([
        (ObjId::from("a"), vec![u1.clone(), u2.clone()]),
        (ObjId::from("b"), vec![v1.clone(), v2.clone()]),
    ]);
    let on_arr = BTreeMap::from([
        (
            "id_a".into(),
            BTreeMap::from([(u1.clone(), u1.clone()), (u2.clone(), u2.clone())]),
        ),
        (
            "id_b".into(),
            BTreeMap::from([(v1.clone(), v1.clone()), (v2.clone(), v2.clone())]),
        ),
        (
            "f".into(),
            BTreeMap::from([(v1.clone(), u1.clone()), (v2, u2)]),
        ),
    ]);
    let separated = Presheaf::new(base, on_obj, on_arr);

    let p2 = presheaf_p2();
    let components_po = BTreeMap::from([
        (
            ObjId::from("a"),
            BTreeMap::from([(ElementValue::atom("u"), u1)]),
        ),
        (
            ObjId::from("b"),
            BTreeMap::from([
                (ElementValue::atom("v"), v1.clone()),
                (ElementValue::atom("w"), v1),
            ]),
        ),
    ]);
    PresheafMorphism::new(separated, p2, components_po)
}

/// The standard worked example: an open endofunctor of the walking arrow
/// whose interaction presheaf is `{x0}` over `a` and `{x1, x2}` over `b`,
/// with `x1` producing `f` and `x2` collapsing to `a`.
pub fn of2() -> OpenFunctor {
    let cat2 = walking_arrow();
    let x0 = ElementValue::atom("x0");
    let x1 = ElementValue::atom("x1");
    let x2 = ElementValue::atom("x2");
    let on_obj = BTreeMap::from([
        (ObjId::from("a"), vec![x0.clone()]),
        (ObjId::from("b"), vec![x1.clone(), x2.clone()]),
    ]);
    let on_arr = BTreeMap::from([
        ("id_a".into(), BTreeMap::from([(x0.clone(), x0.clone())])),
        (
            "id_b".into(),
            BTreeMap::from([(x1.clone(), x1.clone()), (x2.clone(), x2.clone())]),
        ),
        (
            "f".into(),
            BTreeMap::from([(x1, x0.clone()), (x2, x0)]),
        ),
    ]);
    let alpha = Presheaf::new(cat2.clone(), on_obj, on_arr);
    let beta_obj = [("(a|x0)", "a"), ("(b|x1)", "b"), ("(b|x2)", "a")]
        .into_iter()
        .map(|(k, v)| (k.into(), v.into()))
        .collect();
    let beta_arr = [
        ("(id_a|x0)", "id_a"),
        ("(id_b|x1)", "id_b"),
        ("(id_b|x2)", "id_a"),
        ("(f|x1)", "f"),
        ("(f|x2)", "id_a"),
    ]
    .into_iter()
    .map(|(k, v)| (k.into(), v.into()))
    .collect();
    let beta = FinFunctor::new(
        alpha.category_of_elements(),
        cat2.clone(),
        beta_obj,
        beta_arr,
    );
    OpenFunctor::new(cat2.clone(), cat2, alpha, beta)
}

/// A natural transformation into the parallel pair whose component at `b`
/// must be `p` for naturality to hold.
pub fn parallel_pair_nat() -> (FinCategory, NatTrans) {
    let cat2 = walking_arrow();
    let pp = parallel_pair();
    let constant = FinFunctor::constant(&cat2, &pp, &"u".into()).unwrap();
    let picking = FinFunctor::new(
        cat2.clone(),
        pp.clone(),
        BTreeMap::from([("a".into(), "u".into()), ("b".into(), "v".into())]),
        BTreeMap::from([
            ("id_a".into(), "id_u".into()),
            ("id_b".into(), "id_v".into()),
            ("f".into(), "p".into()),
        ]),
    );
    let components = BTreeMap::from([("a".into(), "id_u".into()), ("b".into(), "p".into())]);
    (pp, NatTrans::new(constant, picking, components))
}

/// The open form of [`parallel_pair_nat`], between lifted classical functors.
pub fn parallel_pair_open_nat() -> OpenNatTrans {
    let (_, nat) = parallel_pair_nat();
    let dom = OpenFunctor::from_classical(nat.dom());
    let cod = OpenFunctor::from_classical(nat.cod());
    let alpha = PresheafMorphism::new(dom.alpha().clone(), cod.alpha().clone(), {
        dom.alpha()
            .fibers()
            .keys()
            .map(|c| {
                (
                    c.clone(),
                    BTreeMap::from([(ElementValue::Star, ElementValue::Star)]),
                )
            })
            .collect()
    });
    let beta_dom = compose_functors(dom.beta(), &alpha.elements_functor()).unwrap();
    let components = BTreeMap::from([
        ("(a|*)".into(), "id_u".into()),
        ("(b|*)".into(), "p".into()),
    ]);
    let beta = NatTrans::new(beta_dom, cod.beta().clone(), components);
    OpenNatTrans::new(dom, cod, alpha, beta)
}

/// An open functor from the walking arrow into the idempotent monoid,
/// constant at `m`. Its unitors can be broken by swapping an identity
/// component for `s`.
pub fn monoid_valued() -> OpenFunctor {
    let cat2 = walking_arrow();
    let monoid = idempotent_monoid();
    OpenFunctor::from_classical(&FinFunctor::constant(&cat2, &monoid, &"m".into()).unwrap())
}
