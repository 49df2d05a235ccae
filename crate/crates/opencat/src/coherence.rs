//! Unitors, associator, and the executable law suite.
//!
//! Open functor composition is associative and unital only up to the
//! invertible 2-cells built here: unitors strip a star coordinate, the
//! associator reassociates pair nesting, and both have identity result parts.
//! The `check_*` functions state each law as a strict structural equality of
//! two composite transformations and report the first differing component on
//! failure. No equality-up-to-isomorphism search is ever performed.

use std::collections::HashMap;
use std::fmt;

use crate::elements::{ElementValue, PresheafMorphism};
use crate::error::{Error, Result};
use crate::fincat::{FinCategory, NatTrans};
use crate::openfun::{compose_open, OpenFunctor};
use crate::opennat::{hcomp_open, vcomp_open, OpenNatTrans};

/// The left unitor of `F : C ⊸ D`, from `Id_D ∘ F` to `F`: pairs an
/// interaction with the star, `x <-> <x,*>`, with identity result components.
pub fn left_unitor(f: &OpenFunctor) -> OpenNatTrans {
    let id_d = OpenFunctor::identity(f.cod());
    let dom = compose_open(&id_d, f).expect("identity open functor shares the boundary category");
    let components = f
        .alpha()
        .fibers()
        .iter()
        .map(|(c, fiber)| {
            let comp = fiber
                .iter()
                .map(|x| {
                    (
                        x.clone(),
                        ElementValue::pair(x.clone(), ElementValue::Star),
                    )
                })
                .collect();
            (c.clone(), comp)
        })
        .collect();
    let alpha = PresheafMorphism::new(dom.alpha().clone(), f.alpha().clone(), components);
    let beta = NatTrans::identity(f.beta());
    OpenNatTrans::new(dom, f.clone(), alpha, beta)
}

/// The right unitor of `F : C ⊸ D`, from `F ∘ Id_C` to `F`: `x <-> <*,x>`,
/// with identity result components.
pub fn right_unitor(f: &OpenFunctor) -> OpenNatTrans {
    let id_c = OpenFunctor::identity(f.dom());
    let dom = compose_open(f, &id_c).expect("identity open functor shares the boundary category");
    let components = f
        .alpha()
        .fibers()
        .iter()
        .map(|(c, fiber)| {
            let comp = fiber
                .iter()
                .map(|x| {
                    (
                        x.clone(),
                        ElementValue::pair(ElementValue::Star, x.clone()),
                    )
                })
                .collect();
            (c.clone(), comp)
        })
        .collect();
    let alpha = PresheafMorphism::new(dom.alpha().clone(), f.alpha().clone(), components);
    let beta = NatTrans::identity(f.beta());
    OpenNatTrans::new(dom, f.clone(), alpha, beta)
}

/// The associator of a composable triple, from `H ∘ (G ∘ F)` to
/// `(H ∘ G) ∘ F`: the pure nesting rewrite `<x,<y,z>> <-> <<x,y>,z>` with
/// identity result components.
pub fn associator(f: &OpenFunctor, g: &OpenFunctor, h: &OpenFunctor) -> Result<OpenNatTrans> {
    let gf = compose_open(g, f)?;
    let hg = compose_open(h, g)?;
    let dom = compose_open(h, &gf)?;
    let cod = compose_open(&hg, f)?;
    let components = cod
        .alpha()
        .fibers()
        .iter()
        .map(|(c, fiber)| {
            let comp = fiber
                .iter()
                .map(|e| {
                    let ElementValue::Pair(x, yz) = e else {
                        unreachable!("composite fibers hold pairs only");
                    };
                    let ElementValue::Pair(y, z) = yz.as_ref() else {
                        unreachable!("composite fibers hold pairs only");
                    };
                    let nested_left = ElementValue::pair(
                        ElementValue::pair(x.as_ref().clone(), y.as_ref().clone()),
                        z.as_ref().clone(),
                    );
                    (e.clone(), nested_left)
                })
                .collect();
            (c.clone(), comp)
        })
        .collect();
    let alpha = PresheafMorphism::new(dom.alpha().clone(), cod.alpha().clone(), components);
    let beta = NatTrans::identity(cod.beta());
    Ok(OpenNatTrans::new(dom, cod, alpha, beta))
}

/// Whether a law held on one instance, with the first differing component
/// when it did not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(Difference),
}

/// The first point where two transformations disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Difference {
    pub location: String,
    pub left: String,
    pub right: String,
}

/// Outcome of one law check on one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawReport {
    pub law: String,
    pub instance: String,
    pub verdict: Verdict,
}

impl LawReport {
    pub fn holds(&self) -> bool {
        matches!(self.verdict, Verdict::Holds)
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.verdict {
            Verdict::Holds => write!(f, "{}: holds on {}", self.law, self.instance),
            Verdict::Fails(d) => write!(
                f,
                "{}: FAILS on {} at {}: left = {}, right = {}",
                self.law, self.instance, d.location, d.left, d.right
            ),
        }
    }
}

/// Compare two transformations as the two sides of a named law.
pub fn compare_as_law(
    law: &str,
    instance: &str,
    left: &OpenNatTrans,
    right: &OpenNatTrans,
) -> LawReport {
    let verdict = match first_difference(left, right) {
        None => Verdict::Holds,
        Some(d) => Verdict::Fails(d),
    };
    LawReport {
        law: law.to_owned(),
        instance: instance.to_owned(),
        verdict,
    }
}

/// Locate the first structural difference between two transformations, in a
/// fixed traversal order: boundaries, then alpha components object by object,
/// then beta components.
pub fn first_difference(left: &OpenNatTrans, right: &OpenNatTrans) -> Option<Difference> {
    if let Some(d) = diff_open_functors("dom", left.dom(), right.dom()) {
        return Some(d);
    }
    if let Some(d) = diff_open_functors("cod", left.cod(), right.cod()) {
        return Some(d);
    }
    let keys: std::collections::BTreeSet<_> = left
        .alpha()
        .components_po()
        .keys()
        .chain(right.alpha().components_po().keys())
        .collect();
    for c in keys {
        let l = left.alpha().components_po().get(c);
        let r = right.alpha().components_po().get(c);
        if l == r {
            continue;
        }
        let elems: std::collections::BTreeSet<_> = l
            .into_iter()
            .flat_map(|m| m.keys())
            .chain(r.into_iter().flat_map(|m| m.keys()))
            .collect();
        for e in elems {
            let lv = l.and_then(|m| m.get(e));
            let rv = r.and_then(|m| m.get(e));
            if lv != rv {
                return Some(Difference {
                    location: format!("alpha[{c}]({e})"),
                    left: describe_option(lv),
                    right: describe_option(rv),
                });
            }
        }
    }
    let keys: std::collections::BTreeSet<_> = left
        .beta()
        .components()
        .keys()
        .chain(right.beta().components().keys())
        .collect();
    for obj in keys {
        let lv = left.beta().components().get(obj);
        let rv = right.beta().components().get(obj);
        if lv != rv {
            return Some(Difference {
                location: format!("beta[{obj}]"),
                left: describe_option(lv),
                right: describe_option(rv),
            });
        }
    }
    if left == right {
        None
    } else {
        Some(Difference {
            location: "structure".into(),
            left: "differs outside the component tables".into(),
            right: String::new(),
        })
    }
}

fn describe_option<T: fmt::Display>(v: Option<&T>) -> String {
    v.map_or_else(|| "absent".to_owned(), T::to_string)
}

fn diff_open_functors(label: &str, left: &OpenFunctor, right: &OpenFunctor) -> Option<Difference> {
    if left == right {
        return None;
    }
    for c in left.dom().objects() {
        if left.fiber(c) != right.fiber(c) {
            return Some(Difference {
                location: format!("{label}.alpha({c})"),
                left: describe_fiber(left.fiber(c)),
                right: describe_fiber(right.fiber(c)),
            });
        }
    }
    Some(Difference {
        location: format!("{label} open functor"),
        left: describe_open_functor(left),
        right: describe_open_functor(right),
    })
}

fn describe_fiber(fiber: &[ElementValue]) -> String {
    let inner: Vec<String> = fiber.iter().map(ElementValue::to_string).collect();
    format!("{{{}}}", inner.join(", "))
}

fn describe_open_functor(f: &OpenFunctor) -> String {
    let interactions: usize = f.alpha().fibers().values().map(Vec::len).sum();
    format!(
        "{} -> {} with {} interactions",
        describe_category(f.dom()),
        describe_category(f.cod()),
        interactions
    )
}

fn describe_category(c: &FinCategory) -> String {
    format!("{}obj/{}arr", c.objects().len(), c.arrows().len())
}

/// Default bound on the fiber size a law checker will build per object.
pub const DEFAULT_MAX_FIBER: usize = 512;

/// Runs the law suite, with a size guard and a cache of open functor
/// composites keyed by the composed pair.
///
/// The cache makes the checker single-threaded by design; corpus runs spawn
/// one checker per worker.
pub struct LawChecker {
    max_fiber: usize,
    memo: HashMap<(OpenFunctor, OpenFunctor), OpenFunctor>,
}

impl Default for LawChecker {
    fn default() -> Self {
        LawChecker::new()
    }
}

impl LawChecker {
    pub fn new() -> Self {
        LawChecker::with_max_fiber(DEFAULT_MAX_FIBER)
    }

    pub fn with_max_fiber(max_fiber: usize) -> Self {
        LawChecker {
            max_fiber,
            memo: HashMap::new(),
        }
    }

    /// Guarded, memoized open functor composition.
    pub fn compose(&mut self, g: &OpenFunctor, f: &OpenFunctor) -> Result<OpenFunctor> {
        let key = (g.clone(), f.clone());
        if let Some(hit) = self.memo.get(&key) {
            return Ok(hit.clone());
        }
        for c in f.dom().objects() {
            let mut size = 0usize;
            for x in f.fiber(c) {
                size += g.fiber(&f.apply_object(c, x)?).len();
                if size > self.max_fiber {
                    return Err(Error::FiberBound {
                        object: c.to_string(),
                        size,
                        bound: self.max_fiber,
                    });
                }
            }
        }
        let composed = compose_open(g, f)?;
        self.memo.insert(key, composed.clone());
        Ok(composed)
    }

    /// Both unitor naturality squares for a single transformation
    /// `theta : F => G`: the left square composes through `Id_D`, the right
    /// one through `Id_C`.
    pub fn check_unitor_naturality(
        &mut self,
        theta: &OpenNatTrans,
    ) -> Result<(LawReport, LawReport)> {
        let f = theta.dom();
        let g = theta.cod();
        let instance = format!(
            "theta between {} and {}",
            describe_open_functor(f),
            describe_open_functor(g)
        );
        self.compose(&OpenFunctor::identity(f.cod()), f)?;

        let id_d = OpenNatTrans::identity(&OpenFunctor::identity(f.cod()));
        let left_lhs = vcomp_open(&left_unitor(g), &hcomp_open(&id_d, theta)?)?;
        let left_rhs = vcomp_open(theta, &left_unitor(f))?;
        let left = compare_as_law("unitor-nat-left", &instance, &left_lhs, &left_rhs);

        let id_c = OpenNatTrans::identity(&OpenFunctor::identity(f.dom()));
        let right_lhs = vcomp_open(&right_unitor(g), &hcomp_open(theta, &id_c)?)?;
        let right_rhs = vcomp_open(theta, &right_unitor(f))?;
        let right = compare_as_law("unitor-nat-right", &instance, &right_lhs, &right_rhs);
        Ok((left, right))
    }

    /// The associator naturality square for a composable triple of
    /// transformations.
    pub fn check_associator_naturality(
        &mut self,
        theta: &OpenNatTrans,
        phi: &OpenNatTrans,
        psi: &OpenNatTrans,
    ) -> Result<LawReport> {
        let instance = format!(
            "cells over {} / {} / {}",
            describe_category(theta.dom().dom()),
            describe_category(phi.dom().dom()),
            describe_category(psi.dom().dom())
        );
        let inner = self.compose(phi.dom(), theta.dom())?;
        self.compose(psi.dom(), &inner)?;
        let before = associator(theta.dom(), phi.dom(), psi.dom())?;
        let after = associator(theta.cod(), phi.cod(), psi.cod())?;
        let lhs = vcomp_open(&after, &hcomp_open(psi, &hcomp_open(phi, theta)?)?)?;
        let rhs = vcomp_open(&hcomp_open(&hcomp_open(psi, phi)?, theta)?, &before)?;
        Ok(compare_as_law("assoc-nat", &instance, &lhs, &rhs))
    }

    /// The pentagon identity for a composable quadruple of open functors.
    pub fn check_pentagon(
        &mut self,
        f: &OpenFunctor,
        g: &OpenFunctor,
        h: &OpenFunctor,
        i: &OpenFunctor,
    ) -> Result<LawReport> {
        let instance = format!(
            "{} / {} / {} / {}",
            describe_open_functor(f),
            describe_open_functor(g),
            describe_open_functor(h),
            describe_open_functor(i)
        );
        let gf = self.compose(g, f)?;
        let hg = self.compose(h, g)?;
        let ih = self.compose(i, h)?;
        let h_gf = self.compose(h, &gf)?;
        self.compose(i, &h_gf)?;
        let hg_f = self.compose(&hg, f)?;
        self.compose(i, &hg_f)?;
        let ih_g = self.compose(&ih, g)?;
        self.compose(&ih_g, f)?;

        // Three steps down one side of the pentagon...
        let step1 = hcomp_open(&OpenNatTrans::identity(i), &associator(f, g, h)?)?;
        let step2 = associator(f, &hg, i)?;
        let step3 = hcomp_open(&associator(g, h, i)?, &OpenNatTrans::identity(f))?;
        let long_way = vcomp_open(&step3, &vcomp_open(&step2, &step1)?)?;
        // ...against two steps down the other.
        let short_way = vcomp_open(&associator(f, g, &ih)?, &associator(&gf, h, i)?)?;
        Ok(compare_as_law("pentagon", &instance, &long_way, &short_way))
    }

    /// The triangle identity for `F : B ⊸ C` and `G : C ⊸ D`, composed
    /// through the identity open functor of the middle category.
    pub fn check_triangle(&mut self, f: &OpenFunctor, g: &OpenFunctor) -> Result<LawReport> {
        if f.cod() != g.dom() {
            return Err(Error::BoundaryMismatch(
                "the triangle needs composable open functors".into(),
            ));
        }
        let instance = format!(
            "{} / {}",
            describe_open_functor(f),
            describe_open_functor(g)
        );
        let id_mid = OpenFunctor::identity(f.cod());
        let id_f = self.compose(&id_mid, f)?;
        self.compose(g, &id_f)?;
        let g_id = self.compose(g, &id_mid)?;
        self.compose(&g_id, f)?;

        let reassociate = associator(f, &id_mid, g)?;
        let lhs = vcomp_open(
            &hcomp_open(&right_unitor(g), &OpenNatTrans::identity(f))?,
            &reassociate,
        )?;
        let rhs = hcomp_open(&OpenNatTrans::identity(g), &left_unitor(f))?;
        Ok(compare_as_law("triangle", &instance, &lhs, &rhs))
    }

    /// The interchange law for vertically composable pairs on both sides of
    /// a horizontal composition.
    pub fn check_interchange(
        &mut self,
        theta: &OpenNatTrans,
        theta2: &OpenNatTrans,
        phi: &OpenNatTrans,
        phi2: &OpenNatTrans,
    ) -> Result<LawReport> {
        let instance = format!(
            "cells over {} then {}",
            describe_category(theta.dom().dom()),
            describe_category(phi.dom().dom())
        );
        self.compose(phi.dom(), theta.dom())?;
        self.compose(phi2.cod(), theta2.cod())?;
        let lhs = hcomp_open(&vcomp_open(phi2, phi)?, &vcomp_open(theta2, theta)?)?;
        let rhs = vcomp_open(&hcomp_open(phi2, theta2)?, &hcomp_open(phi, theta)?)?;
        Ok(compare_as_law("interchange", &instance, &lhs, &rhs))
    }

    /// Category laws for vertical composition over a family of cells: both
    /// unit laws for every cell, and associativity for every vertically
    /// composable triple found in the family.
    pub fn check_hom_category_laws(&self, cells: &[OpenNatTrans]) -> Vec<LawReport> {
        let mut reports = Vec::new();
        for (i, theta) in cells.iter().enumerate() {
            let instance = format!("cell #{i}");
            let left = vcomp_open(&OpenNatTrans::identity(theta.cod()), theta)
                .map(|composite| compare_as_law("homcat-left-unit", &instance, &composite, theta));
            let right = vcomp_open(theta, &OpenNatTrans::identity(theta.dom()))
                .map(|composite| compare_as_law("homcat-right-unit", &instance, &composite, theta));
            for report in [left, right] {
                reports.push(report.unwrap_or_else(|e| LawReport {
                    law: "homcat-unit".into(),
                    instance: instance.clone(),
                    verdict: Verdict::Fails(Difference {
                        location: "construction".into(),
                        left: e.to_string(),
                        right: String::new(),
                    }),
                }));
            }
        }
        for (i, theta) in cells.iter().enumerate() {
            for (j, phi) in cells.iter().enumerate() {
                if phi.dom() != theta.cod() {
                    continue;
                }
                for (k, psi) in cells.iter().enumerate() {
                    if psi.dom() != phi.cod() {
                        continue;
                    }
                    let instance = format!("triple (#{i}, #{j}, #{k})");
                    let report = (|| -> Result<LawReport> {
                        let lhs = vcomp_open(psi, &vcomp_open(phi, theta)?)?;
                        let rhs = vcomp_open(&vcomp_open(psi, phi)?, theta)?;
                        Ok(compare_as_law("homcat-assoc", &instance, &lhs, &rhs))
                    })();
                    if let Ok(report) = report {
                        reports.push(report);
                    }
                }
            }
        }
        reports
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::ObjId;
    use crate::harness::fixtures;
    use crate::opennat::open_nat_equal;
    use std::collections::BTreeMap;

    #[test]
    fn left_unitor_pairs_with_star_on_the_right() {
        let of2 = fixtures::of2();
        let lu = left_unitor(&of2);
        assert!(lu.validate().is_valid());
        let x1 = ElementValue::atom("x1");
        assert_eq!(
            lu.alpha().apply_po(&"b".into(), &x1).unwrap(),
            &ElementValue::pair(x1.clone(), ElementValue::Star)
        );
        for arrow in lu.beta().components().values() {
            assert!(of2.cod().is_identity(arrow));
        }
    }

    #[test]
    fn right_unitor_pairs_with_star_on_the_left() {
        let of2 = fixtures::of2();
        let ru = right_unitor(&of2);
        assert!(ru.validate().is_valid());
        let x1 = ElementValue::atom("x1");
        assert_eq!(
            ru.alpha().apply_po(&"b".into(), &x1).unwrap(),
            &ElementValue::pair(ElementValue::Star, x1.clone())
        );
        for arrow in ru.beta().components().values() {
            assert!(of2.cod().is_identity(arrow));
        }
    }

    #[test]
    fn unitors_are_invertible_and_the_inverse_strips_the_star() {
        let of2 = fixtures::of2();
        let lu = left_unitor(&of2);
        let inverse = lu.inverse().expect("unitors are isomorphisms");
        let x1 = ElementValue::atom("x1");
        assert_eq!(
            inverse
                .alpha()
                .apply_po(
                    &"b".into(),
                    &ElementValue::pair(x1.clone(), ElementValue::Star)
                )
                .unwrap(),
            &x1
        );
        assert!(right_unitor(&of2).inverse().is_some());
    }

    #[test]
    fn associator_reassociates_nesting() {
        let of2 = fixtures::of2();
        let assoc = associator(&of2, &of2, &of2).unwrap();
        assert!(assoc.validate().is_valid());
        assert!(assoc.inverse().is_some());
        for (c, comp) in assoc.alpha().components_po() {
            for (from, to) in comp {
                let ElementValue::Pair(x, yz) = from else { unreachable!() };
                let ElementValue::Pair(y, z) = yz.as_ref() else {
                    unreachable!()
                };
                assert_eq!(
                    to,
                    &ElementValue::pair(
                        ElementValue::pair(x.as_ref().clone(), y.as_ref().clone()),
                        z.as_ref().clone()
                    ),
                    "wrong reassociation at {c}"
                );
            }
        }
    }

    #[test]
    fn associator_beta_components_are_identities_of_the_triple_image() {
        let of2 = fixtures::of2();
        let assoc = associator(&of2, &of2, &of2).unwrap();
        let cod = assoc.cod().clone();
        for c in cod.dom().objects() {
            for e in cod.fiber(c) {
                let obj = crate::elements::element_object_id(c, e);
                let component = assoc.beta().component(&obj).unwrap();
                let expected = cod
                    .cod()
                    .identity(&cod.apply_object(c, e).unwrap())
                    .unwrap()
                    .clone();
                assert_eq!(component, &expected);
            }
        }
    }

    #[test]
    fn associator_on_lifted_identities_rewrites_stars() {
        let cat2 = fixtures::walking_arrow();
        let lifted = OpenFunctor::from_classical(&crate::fincat::FinFunctor::identity(&cat2));
        let assoc = associator(&lifted, &lifted, &lifted).unwrap();
        let star = ElementValue::Star;
        let from = ElementValue::pair(star.clone(), ElementValue::pair(star.clone(), star.clone()));
        let to = ElementValue::pair(ElementValue::pair(star.clone(), star.clone()), star);
        assert_eq!(assoc.alpha().apply_po(&"a".into(), &from).unwrap(), &to);
    }

    #[test]
    fn unitor_naturality_holds_on_fixture_cells() {
        let of2 = fixtures::of2();
        let mut checker = LawChecker::new();
        let (l, r) = checker
            .check_unitor_naturality(&OpenNatTrans::identity(&of2))
            .unwrap();
        assert!(l.holds(), "{l}");
        assert!(r.holds(), "{r}");
        // The unitor itself is a transformation between valid open functors.
        let (l, r) = checker.check_unitor_naturality(&left_unitor(&of2)).unwrap();
        assert!(l.holds(), "{l}");
        assert!(r.holds(), "{r}");
    }

    #[test]
    fn mutated_unitor_fails_with_a_pinpointed_component() {
        let open = fixtures::monoid_valued();
        let lu = left_unitor(&open);
        let mut comps = lu.beta().components().clone();
        let key = ObjId::from("(b|*)");
        assert!(comps.contains_key(&key));
        comps.insert(key.clone(), "s".into());
        let broken = OpenNatTrans::new(
            lu.dom().clone(),
            lu.cod().clone(),
            lu.alpha().clone(),
            NatTrans::new(lu.beta().dom().clone(), lu.beta().cod().clone(), comps),
        );
        let id_d = OpenNatTrans::identity(&OpenFunctor::identity(open.cod()));
        let theta = OpenNatTrans::identity(&open);
        let lhs = vcomp_open(&broken, &hcomp_open(&id_d, &theta).unwrap()).unwrap();
        let rhs = vcomp_open(&theta, &left_unitor(&open)).unwrap();
        let report = compare_as_law("unitor-nat-left", "mutated unitor", &lhs, &rhs);
        let Verdict::Fails(d) = &report.verdict else {
            panic!("expected a failure, got {report}");
        };
        assert_eq!(d.location, format!("beta[{key}]"));
        assert_eq!((d.left.as_str(), d.right.as_str()), ("s", "id_m"));
    }

    #[test]
    fn associator_naturality_holds_on_identity_and_unitor_triples() {
        let of2 = fixtures::of2();
        let mut checker = LawChecker::new();
        let id = OpenNatTrans::identity(&of2);
        let report = checker
            .check_associator_naturality(&id, &id, &id)
            .unwrap();
        assert!(report.holds(), "{report}");
        let lu = left_unitor(&of2);
        let report = checker
            .check_associator_naturality(&lu, &lu, &lu)
            .unwrap();
        assert!(report.holds(), "{report}");
    }

    #[test]
    fn mutated_associator_fails() {
        let open = fixtures::monoid_valued();
        let id_m = OpenFunctor::identity(open.cod());
        let assoc = associator(&open, &id_m, &id_m).unwrap();
        let mut comps = assoc.beta().components().clone();
        let key = comps.keys().next().unwrap().clone();
        comps.insert(key.clone(), "s".into());
        let broken = OpenNatTrans::new(
            assoc.dom().clone(),
            assoc.cod().clone(),
            assoc.alpha().clone(),
            NatTrans::new(
                assoc.beta().dom().clone(),
                assoc.beta().cod().clone(),
                comps,
            ),
        );
        let report = compare_as_law("assoc-nat", "mutated associator", &broken, &assoc);
        let Verdict::Fails(d) = &report.verdict else {
            panic!("expected a failure, got {report}");
        };
        assert_eq!(d.location, format!("beta[{key}]"));
    }

    #[test]
    fn pentagon_holds_on_lifted_identities_and_of2() {
        let cat2 = fixtures::walking_arrow();
        let mut checker = LawChecker::new();
        let lifted = OpenFunctor::from_classical(&crate::fincat::FinFunctor::identity(&cat2));
        let report = checker
            .check_pentagon(&lifted, &lifted, &lifted, &lifted)
            .unwrap();
        assert!(report.holds(), "{report}");
        let of2 = fixtures::of2();
        let report = checker.check_pentagon(&of2, &of2, &of2, &of2).unwrap();
        assert!(report.holds(), "{report}");
    }

    #[test]
    fn triangle_holds_on_lifted_identities_and_of2() {
        let cat2 = fixtures::walking_arrow();
        let mut checker = LawChecker::new();
        let lifted = OpenFunctor::from_classical(&crate::fincat::FinFunctor::identity(&cat2));
        let report = checker.check_triangle(&lifted, &lifted).unwrap();
        assert!(report.holds(), "{report}");
        let of2 = fixtures::of2();
        let report = checker.check_triangle(&of2, &of2).unwrap();
        assert!(report.holds(), "{report}");
    }

    #[test]
    fn mutated_right_unitor_breaks_the_triangle() {
        // Interactions as in the worked example, but every result lands on
        // the idempotent monoid, so any mutation stays composable.
        let of2 = fixtures::of2();
        let monoid = fixtures::idempotent_monoid();
        let alpha = of2.alpha().clone();
        let beta = crate::fincat::FinFunctor::constant(
            &alpha.category_of_elements(),
            &monoid,
            &"m".into(),
        )
        .unwrap();
        let g = OpenFunctor::new(of2.dom().clone(), monoid, alpha, beta);
        let ru = right_unitor(&g);
        let mut comps = ru.alpha().components_po().clone();
        let b = ObjId::from("b");
        let x1 = ElementValue::atom("x1");
        let x2 = ElementValue::atom("x2");
        let swapped = BTreeMap::from([
            (x1.clone(), ElementValue::pair(ElementValue::Star, x2.clone())),
            (x2, ElementValue::pair(ElementValue::Star, x1)),
        ]);
        comps.insert(b, swapped);
        let broken_ru = OpenNatTrans::new(
            ru.dom().clone(),
            ru.cod().clone(),
            PresheafMorphism::new(ru.alpha().dom().clone(), ru.alpha().cod().clone(), comps),
            ru.beta().clone(),
        );
        let id_mid = OpenFunctor::identity(of2.cod());
        let lhs = vcomp_open(
            &hcomp_open(&broken_ru, &OpenNatTrans::identity(&of2)).unwrap(),
            &associator(&of2, &id_mid, &g).unwrap(),
        )
        .unwrap();
        let rhs = hcomp_open(&OpenNatTrans::identity(&g), &left_unitor(&of2)).unwrap();
        let report = compare_as_law("triangle", "mutated right unitor", &lhs, &rhs);
        assert!(!report.holds());
    }

    #[test]
    fn interchange_and_hom_laws_hold_on_identity_cells() {
        let of2 = fixtures::of2();
        let mut checker = LawChecker::new();
        let inner = OpenNatTrans::identity(&of2);
        let outer = OpenNatTrans::identity(&OpenFunctor::identity(of2.cod()));
        let report = checker
            .check_interchange(&inner, &inner, &outer, &outer)
            .unwrap();
        assert!(report.holds(), "{report}");
        let reports = checker.check_hom_category_laws(&[inner]);
        assert!(!reports.is_empty());
        assert!(reports.iter().all(LawReport::holds));
    }

    #[test]
    fn differing_cells_are_pinpointed() {
        let of2 = fixtures::of2();
        let cells = crate::harness::generate::enumerate_open_nats(&of2, &of2, 8);
        let id = OpenNatTrans::identity(&of2);
        let other = cells
            .iter()
            .find(|c| !open_nat_equal(c, &id))
            .expect("fixture admits a non-identity cell");
        let report = compare_as_law("homcat-assoc", "distinct cells", &id, other);
        let Verdict::Fails(d) = &report.verdict else {
            panic!("expected a failure");
        };
        assert!(d.location.starts_with("alpha[") || d.location.starts_with("beta["));
    }

    #[test]
    fn fiber_guard_refuses_oversized_instances() {
        let of2 = fixtures::of2();
        let mut checker = LawChecker::with_max_fiber(3);
        let err = checker
            .check_pentagon(&of2, &of2, &of2, &of2)
            .unwrap_err();
        assert!(matches!(err, Error::FiberBound { .. }));
    }
}
