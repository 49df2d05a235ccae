//! Open natural transformations and their vertical and horizontal
//! compositions.
//!
//! An open natural transformation `theta : F => G` between open functors
//! `F, G : C ⊸ D` is a morphism `theta_alpha : F_alpha => G_alpha` of
//! interaction presheaves together with a classical natural transformation
//! `theta_beta` from `F_beta ∘ (∫theta_alpha)^po` to `G_beta`, indexed over
//! the category of elements of `G_alpha`.
//!
//! Compositions are computed by their explicit component formulas; in debug
//! builds the vertical composition cross-checks itself against the equivalent
//! construction by whiskering in [`crate::fincat`].

use std::collections::BTreeMap;

use crate::elements::{
    element_object_id, vcomp_presheaf_morphism, ElementValue, PresheafMorphism,
};
use crate::error::{Error, Result};
use crate::fincat::{compose_functors, NatTrans, ValidationReport, ViolationKind};
use crate::openfun::{compose_open, OpenFunctor};

/// An open natural transformation between two open functors with the same
/// domain and codomain categories.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OpenNatTrans {
    dom: OpenFunctor,
    cod: OpenFunctor,
    alpha: PresheafMorphism,
    beta: NatTrans,
}

impl OpenNatTrans {
    pub fn new(
        dom: OpenFunctor,
        cod: OpenFunctor,
        alpha: PresheafMorphism,
        beta: NatTrans,
    ) -> Self {
        OpenNatTrans {
            dom,
            cod,
            alpha,
            beta,
        }
    }

    /// The identity open natural transformation of an open functor: the
    /// identity morphism on the interaction presheaf and the identity
    /// transformation on the result part.
    pub fn identity(f: &OpenFunctor) -> Self {
        OpenNatTrans {
            dom: f.clone(),
            cod: f.clone(),
            alpha: PresheafMorphism::identity(f.alpha()),
            beta: NatTrans::identity(f.beta()),
        }
    }

    pub fn dom(&self) -> &OpenFunctor {
        &self.dom
    }

    pub fn cod(&self) -> &OpenFunctor {
        &self.cod
    }

    pub fn alpha(&self) -> &PresheafMorphism {
        &self.alpha
    }

    pub fn beta(&self) -> &NatTrans {
        &self.beta
    }

    /// Aggregate both naturality checks plus all boundary checks.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        if self.dom.dom() != self.cod.dom() || self.dom.cod() != self.cod.cod() {
            report.push(
                ViolationKind::BoundaryMismatch,
                "the two open functors are not parallel",
            );
        }
        report.absorb("alpha", self.alpha.validate());
        if self.alpha.dom() != self.dom.alpha() {
            report.push(
                ViolationKind::BoundaryMismatch,
                "the alpha part does not start at the domain's interaction presheaf",
            );
        }
        if self.alpha.cod() != self.cod.alpha() {
            report.push(
                ViolationKind::BoundaryMismatch,
                "the alpha part does not end at the codomain's interaction presheaf",
            );
        }
        report.absorb("beta", self.beta.validate());
        match compose_functors(self.dom.beta(), &self.alpha.elements_functor()) {
            Ok(expected) => {
                if self.beta.dom() != &expected {
                    report.push(
                        ViolationKind::BoundaryMismatch,
                        "the domain of beta is not the domain result part reindexed along alpha",
                    );
                }
            }
            Err(e) => report.push(
                ViolationKind::BoundaryMismatch,
                format!("cannot reindex the domain result part along alpha: {e}"),
            ),
        }
        if self.beta.cod() != self.cod.beta() {
            report.push(
                ViolationKind::BoundaryMismatch,
                "the codomain of beta is not the codomain result part",
            );
        }
        report
    }

    /// The inverse transformation, when every alpha component is a bijection
    /// and every beta component is an isomorphism; verified by composing both
    /// ways against the identities.
    pub fn inverse(&self) -> Option<OpenNatTrans> {
        let mut inv_components = BTreeMap::new();
        for (c, comp) in self.alpha.components_po() {
            let mut inverted = BTreeMap::new();
            for (y, x) in comp {
                if inverted.insert(x.clone(), y.clone()).is_some() {
                    return None; // not injective
                }
            }
            if inverted.len() != self.dom.alpha().fiber(c).len() {
                return None; // not surjective
            }
            inv_components.insert(c.clone(), inverted);
        }
        let inv_alpha = PresheafMorphism::new(
            self.cod.alpha().clone(),
            self.dom.alpha().clone(),
            inv_components,
        );
        let target = self.dom.cod();
        let mut components = BTreeMap::new();
        for c in self.dom.dom().objects() {
            for x in self.dom.alpha().fiber(c) {
                let y = inv_alpha.apply_po(c, x).ok()?;
                let forward = self.beta.component(&element_object_id(c, y)).ok()?;
                let backward = target.inverse_arrow(forward)?;
                components.insert(element_object_id(c, x), backward);
            }
        }
        let beta_dom = compose_functors(self.cod.beta(), &inv_alpha.elements_functor()).ok()?;
        let candidate = OpenNatTrans::new(
            self.cod.clone(),
            self.dom.clone(),
            inv_alpha,
            NatTrans::new(beta_dom, self.dom.beta().clone(), components),
        );
        let left = vcomp_open(&candidate, self).ok()?;
        let right = vcomp_open(self, &candidate).ok()?;
        (left == OpenNatTrans::identity(&self.dom) && right == OpenNatTrans::identity(&self.cod))
            .then_some(candidate)
    }
}

/// Structural equality of open natural transformations: same domain and
/// codomain open functors, pointwise equal alpha functions, pointwise equal
/// beta components.
pub fn open_nat_equal(a: &OpenNatTrans, b: &OpenNatTrans) -> bool {
    a == b
}

/// Vertical composition `phi • theta` of `theta : F => G` and `phi : G => H`.
///
/// The alpha parts compose as presheaf morphisms; the beta component at an
/// object `(c, z)` of the elements of `H_alpha` is
/// `phi_beta[c,z] · theta_beta[c, phi_alpha[c]^po(z)]`.
pub fn vcomp_open(phi: &OpenNatTrans, theta: &OpenNatTrans) -> Result<OpenNatTrans> {
    if theta.cod != phi.dom {
        return Err(Error::BoundaryMismatch(
            "vertical composition needs the codomain of the first transformation to equal the domain of the second".into(),
        ));
    }
    let alpha = vcomp_presheaf_morphism(&phi.alpha, &theta.alpha)?;
    let target = theta.dom.cod();
    let mut components = BTreeMap::new();
    for c in phi.cod.dom().objects() {
        for z in phi.cod.alpha().fiber(c) {
            let mid = phi.alpha.apply_po(c, z)?;
            let outer = phi.beta.component(&element_object_id(c, z))?;
            let inner = theta.beta.component(&element_object_id(c, mid))?;
            components.insert(element_object_id(c, z), target.compose(outer, inner)?);
        }
    }
    let beta_dom = compose_functors(theta.dom.beta(), &alpha.elements_functor())?;
    let beta = NatTrans::new(beta_dom, phi.cod.beta().clone(), components);
    #[cfg(debug_assertions)]
    {
        // Same transformation built compositionally: whisker theta's beta
        // with the elements functor of phi's alpha, then compose vertically.
        use crate::fincat::{hcomp_nat, vcomp_nat};
        let reindex = NatTrans::identity(&phi.alpha.elements_functor());
        if let Ok(whiskered) = hcomp_nat(&theta.beta, &reindex) {
            if let Ok(composed) = vcomp_nat(&phi.beta, &whiskered) {
                debug_assert_eq!(beta, composed, "component formula drifted from whiskering");
            }
        }
    }
    Ok(OpenNatTrans::new(
        theta.dom.clone(),
        phi.cod.clone(),
        alpha,
        beta,
    ))
}

/// Horizontal composition `phi ∘ theta` of `theta : F => F' : C ⊸ D` and
/// `phi : G => G' : D ⊸ E`, running from `G ∘ F` to `G' ∘ F'`.
///
/// On a pair `<x', y'>` the alpha part applies `theta_alpha` to the first
/// coordinate and the arrow component of `phi_alpha` at `theta_beta[c,x']` to
/// the second; the beta component at `(c, <x', y'>)` is the arrow component
/// of `phi_beta` at the elements arrow `(theta_beta[c,x'], y')`.
pub fn hcomp_open(phi: &OpenNatTrans, theta: &OpenNatTrans) -> Result<OpenNatTrans> {
    if theta.dom.cod() != phi.dom.dom() {
        return Err(Error::BoundaryMismatch(
            "horizontal composition needs the transformations to live over consecutive categories"
                .into(),
        ));
    }
    let dom = compose_open(&phi.dom, &theta.dom)?;
    let cod = compose_open(&phi.cod, &theta.cod)?;
    let base = theta.dom.dom();

    let mut alpha_components = BTreeMap::new();
    let mut beta_components = BTreeMap::new();
    for c in base.objects() {
        let mut comp = BTreeMap::new();
        for pair in cod.alpha().fiber(c) {
            let ElementValue::Pair(x_cod, y_cod) = pair else {
                unreachable!("composite fibers hold pairs only");
            };
            let x_dom = theta.alpha.apply_po(c, x_cod)?.clone();
            let mediating = theta.beta.component(&element_object_id(c, x_cod))?;
            let y_dom = phi
                .alpha
                .arrow_component_po(mediating)?
                .remove(y_cod.as_ref())
                .ok_or_else(|| Error::UnknownElement {
                    object: format!("target of {mediating}"),
                    element: y_cod.to_string(),
                })?;
            comp.insert(pair.clone(), ElementValue::pair(x_dom, y_dom));

            let elements_arrow = crate::elements::element_arrow_id(mediating, y_cod);
            beta_components.insert(
                element_object_id(c, pair),
                phi.beta.arrow_component(&elements_arrow)?,
            );
        }
        alpha_components.insert(c.clone(), comp);
    }
    let alpha = PresheafMorphism::new(dom.alpha().clone(), cod.alpha().clone(), alpha_components);
    let beta_dom = compose_functors(dom.beta(), &alpha.elements_functor())?;
    let beta = NatTrans::new(beta_dom, cod.beta().clone(), beta_components);
    Ok(OpenNatTrans::new(dom, cod, alpha, beta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::fixtures;
    use crate::harness::generate::enumerate_open_nats;
    use crate::fincat::ObjId;

    #[test]
    fn identity_parts_are_identities() {
        let of2 = fixtures::of2();
        let id = OpenNatTrans::identity(&of2);
        assert!(id.validate().is_valid());
        for (c, comp) in id.alpha().components_po() {
            for (y, x) in comp {
                assert_eq!(y, x, "alpha component at {c} moves {y}");
            }
        }
        for (obj, arrow) in id.beta().components() {
            assert!(of2.cod().is_identity(arrow), "beta at {obj} is {arrow}");
        }
    }

    #[test]
    fn vertical_units_hold() {
        let of2 = fixtures::of2();
        for theta in enumerate_open_nats(&of2, &of2, 8) {
            assert_eq!(
                vcomp_open(&theta, &OpenNatTrans::identity(theta.dom())).unwrap(),
                theta
            );
            assert_eq!(
                vcomp_open(&OpenNatTrans::identity(theta.cod()), &theta).unwrap(),
                theta
            );
        }
    }

    #[test]
    fn vertical_composition_is_associative_on_endo_transformations() {
        let of2 = fixtures::of2();
        let nats = enumerate_open_nats(&of2, &of2, 8);
        assert!(nats.len() >= 2, "fixture should admit a non-identity cell");
        let mut checked = 0;
        for theta in &nats {
            for phi in &nats {
                for psi in &nats {
                    let left =
                        vcomp_open(psi, &vcomp_open(phi, theta).unwrap()).unwrap();
                    let right =
                        vcomp_open(&vcomp_open(psi, phi).unwrap(), theta).unwrap();
                    assert_eq!(left, right);
                    checked += 1;
                }
            }
        }
        assert!(checked >= 8);
    }

    #[test]
    fn vertical_beta_component_formula_spot_check() {
        let of2 = fixtures::of2();
        let nats = enumerate_open_nats(&of2, &of2, 8);
        let target = of2.cod();
        for theta in &nats {
            for phi in &nats {
                let composed = vcomp_open(phi, theta).unwrap();
                assert!(composed.validate().is_valid());
                for c in of2.dom().objects() {
                    for z in phi.cod().alpha().fiber(c) {
                        let mid = phi.alpha().apply_po(c, z).unwrap();
                        let expected = target
                            .compose(
                                phi.beta().component(&element_object_id(c, z)).unwrap(),
                                theta.beta().component(&element_object_id(c, mid)).unwrap(),
                            )
                            .unwrap();
                        assert_eq!(
                            composed
                                .beta()
                                .component(&element_object_id(c, z))
                                .unwrap(),
                            &expected
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn horizontal_composition_of_identities_is_the_identity_of_the_composite() {
        let of2 = fixtures::of2();
        let id_d = OpenFunctor::identity(of2.cod());
        let composite = compose_open(&id_d, &of2).unwrap();
        let composed = hcomp_open(
            &OpenNatTrans::identity(&id_d),
            &OpenNatTrans::identity(&of2),
        )
        .unwrap();
        assert_eq!(composed, OpenNatTrans::identity(&composite));
    }

    #[test]
    fn interchange_holds_on_enumerated_cells() {
        let of2 = fixtures::of2();
        let inner = enumerate_open_nats(&of2, &of2, 4);
        let outer = enumerate_open_nats(&of2, &of2, 4);
        let mut checked = 0;
        for theta in &inner {
            for theta2 in &inner {
                if theta2.dom() != theta.cod() {
                    continue;
                }
                for phi in &outer {
                    for phi2 in &outer {
                        if phi2.dom() != phi.cod() {
                            continue;
                        }
                        let left = hcomp_open(
                            &vcomp_open(phi2, phi).unwrap(),
                            &vcomp_open(theta2, theta).unwrap(),
                        )
                        .unwrap();
                        let right = vcomp_open(
                            &hcomp_open(phi2, theta2).unwrap(),
                            &hcomp_open(phi, theta).unwrap(),
                        )
                        .unwrap();
                        assert_eq!(left, right);
                        checked += 1;
                    }
                }
            }
        }
        assert!(checked >= 16);
    }

    #[test]
    fn horizontal_alpha_first_coordinate_ignores_the_second() {
        let of2 = fixtures::of2();
        let nats = enumerate_open_nats(&of2, &of2, 4);
        let theta = &nats[nats.len() - 1];
        let phi = &nats[0];
        let composed = hcomp_open(phi, theta).unwrap();
        assert!(composed.validate().is_valid());
        for (c, comp) in composed.alpha().components_po() {
            for (from, to) in comp {
                let (ElementValue::Pair(x_cod, _), ElementValue::Pair(x_dom, _)) = (from, to)
                else {
                    unreachable!()
                };
                assert_eq!(
                    theta.alpha().apply_po(c, x_cod).unwrap(),
                    x_dom.as_ref()
                );
            }
        }
    }

    #[test]
    fn equality_separates_identity_from_other_endo_cells() {
        let of2 = fixtures::of2();
        let nats = enumerate_open_nats(&of2, &of2, 8);
        let id = OpenNatTrans::identity(&of2);
        assert!(open_nat_equal(&id, &id));
        assert!(nats.iter().any(|n| open_nat_equal(n, &id)));
        let others: Vec<_> = nats.iter().filter(|n| !open_nat_equal(n, &id)).collect();
        assert!(!others.is_empty(), "fixture should admit a non-identity cell");
    }

    #[test]
    fn identity_is_its_own_inverse() {
        let of2 = fixtures::of2();
        let id = OpenNatTrans::identity(&of2);
        assert_eq!(id.inverse().unwrap(), id);
    }

    #[test]
    fn non_bijective_alpha_has_no_inverse() {
        let of2 = fixtures::of2();
        let nats = enumerate_open_nats(&of2, &of2, 8);
        let id = OpenNatTrans::identity(&of2);
        let collapsing = nats
            .iter()
            .find(|n| !open_nat_equal(n, &id))
            .expect("fixture admits a non-identity cell");
        assert!(collapsing.inverse().is_none());
    }

    #[test]
    fn wrong_parallel_beta_component_breaks_naturality() {
        let theta = fixtures::parallel_pair_open_nat();
        assert!(theta.validate().is_valid());
        let mut comps = theta.beta().components().clone();
        comps.insert(ObjId::from("(b|*)"), "q".into());
        let broken = OpenNatTrans::new(
            theta.dom().clone(),
            theta.cod().clone(),
            theta.alpha().clone(),
            NatTrans::new(theta.beta().dom().clone(), theta.beta().cod().clone(), comps),
        );
        assert!(broken.validate().contains(ViolationKind::Naturality));
    }

    #[test]
    fn boundary_mismatch_is_an_error() {
        let of2 = fixtures::of2();
        let other = OpenNatTrans::identity(&OpenFunctor::identity(&fixtures::dag_path()));
        assert!(matches!(
            vcomp_open(&other, &OpenNatTrans::identity(&of2)),
            Err(Error::BoundaryMismatch(_))
        ));
        assert!(matches!(
            hcomp_open(&other, &OpenNatTrans::identity(&of2)),
            Err(Error::BoundaryMismatch(_))
        ));
    }
}
