//! Open functors: a presheaf of external interactions plus a functor out of
//! its category of elements.
//!
//! An open functor `F` from `C` to `D` carries two parts: `alpha`, a presheaf
//! on `C` listing for each input the interactions available to it, and
//! `beta`, an ordinary functor from the category of elements of `alpha` into
//! `D` producing the result of each input under each interaction.
//!
//! Composition pairs interactions up: the composite of `F : C ⊸ D` and
//! `G : D ⊸ E` has fiber elements `<x,y>` where `x` is an `F`-interaction for
//! `c` and `y` a `G`-interaction for the intermediate result `F_beta(c,x)`.
//! This composition is *not* strictly associative or unital — the pair
//! nesting records the composition nesting — which is exactly why the
//! [`crate::coherence`] module exists.

use std::collections::BTreeMap;

use crate::elements::{element_arrow_id, element_object_id, ElementValue, Presheaf};
use crate::error::{Error, Result};
use crate::fincat::{ArrId, FinCategory, FinFunctor, ObjId, ValidationReport, ViolationKind};

/// An open functor between finite categories.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OpenFunctor {
    dom: FinCategory,
    cod: FinCategory,
    alpha: Presheaf,
    beta: FinFunctor,
}

impl OpenFunctor {
    pub fn new(dom: FinCategory, cod: FinCategory, alpha: Presheaf, beta: FinFunctor) -> Self {
        OpenFunctor {
            dom,
            cod,
            alpha,
            beta,
        }
    }

    /// The identity open functor: one interaction `*` per object, and a
    /// result part that projects `(c,*)` back to `c`.
    pub fn identity(c: &FinCategory) -> Self {
        let alpha = Presheaf::terminal(c);
        let on_obj = c
            .objects()
            .iter()
            .map(|o| (element_object_id(o, &ElementValue::Star), o.clone()))
            .collect();
        let on_arr = c
            .arrows()
            .keys()
            .map(|f| (element_arrow_id(f, &ElementValue::Star), f.clone()))
            .collect();
        let beta = FinFunctor::new(alpha.category_of_elements(), c.clone(), on_obj, on_arr);
        OpenFunctor::new(c.clone(), c.clone(), alpha, beta)
    }

    /// Lift a classical functor to an open functor with no external
    /// information: a singleton interaction set for every input.
    pub fn from_classical(f: &FinFunctor) -> Self {
        let alpha = Presheaf::terminal(f.dom());
        let on_obj = f
            .object_map()
            .iter()
            .map(|(c, d)| (element_object_id(c, &ElementValue::Star), d.clone()))
            .collect();
        let on_arr = f
            .arrow_map()
            .iter()
            .map(|(a, b)| (element_arrow_id(a, &ElementValue::Star), b.clone()))
            .collect();
        let beta = FinFunctor::new(alpha.category_of_elements(), f.cod().clone(), on_obj, on_arr);
        OpenFunctor::new(f.dom().clone(), f.cod().clone(), alpha, beta)
    }

    pub fn dom(&self) -> &FinCategory {
        &self.dom
    }

    pub fn cod(&self) -> &FinCategory {
        &self.cod
    }

    pub fn alpha(&self) -> &Presheaf {
        &self.alpha
    }

    pub fn beta(&self) -> &FinFunctor {
        &self.beta
    }

    /// The interactions available for an object.
    pub fn fiber(&self, c: &ObjId) -> &[ElementValue] {
        self.alpha.fiber(c)
    }

    /// The result of applying the open functor to `c` under interaction `x`.
    pub fn apply_object(&self, c: &ObjId, x: &ElementValue) -> Result<ObjId> {
        if !self.dom.has_object(c) {
            return Err(Error::UnknownObject(c.to_string()));
        }
        if !self.alpha.fiber(c).contains(x) {
            return Err(Error::UnknownElement {
                object: c.to_string(),
                element: x.to_string(),
            });
        }
        Ok(self.beta.obj_image(&element_object_id(c, x))?.clone())
    }

    /// The result arrow for `f : c -> c'` under an interaction `x'` for `c'`;
    /// it runs from the image of `(c, alpha(f)^po(x'))` to that of `(c', x')`.
    pub fn apply_arrow(&self, f: &ArrId, x: &ElementValue) -> Result<ArrId> {
        let arr = self
            .dom
            .arrow(f)
            .ok_or_else(|| Error::UnknownArrow(f.to_string()))?;
        if !self.alpha.fiber(&arr.tgt).contains(x) {
            return Err(Error::UnknownElement {
                object: arr.tgt.to_string(),
                element: x.to_string(),
            });
        }
        Ok(self.beta.arr_image(&element_arrow_id(f, x))?.clone())
    }

    /// Aggregate the presheaf, functor and boundary checks.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        report.absorb("alpha", self.alpha.validate());
        if self.alpha.base() != &self.dom {
            report.push(
                ViolationKind::BoundaryMismatch,
                "alpha is not a presheaf over the domain category",
            );
        }
        report.absorb("beta", self.beta.validate());
        if self.beta.dom() != &self.alpha.category_of_elements() {
            report.push(
                ViolationKind::BoundaryMismatch,
                "the domain of beta is not the category of elements of alpha",
            );
        }
        if self.beta.cod() != &self.cod {
            report.push(
                ViolationKind::BoundaryMismatch,
                "the codomain of beta is not the codomain category",
            );
        }
        report
    }
}

/// Compose two open functors, `g` after `f`.
///
/// The composite fiber over `c` holds `<x,y>` for each `x` in the fiber of
/// `f` and each `y` in the fiber of `g` over the intermediate result; the
/// composite restriction pairs the two restrictions, and the composite result
/// part evaluates `g` at the result of `f`. The fiber order is the
/// lexicographic sweep of the two stored orders.
pub fn compose_open(g: &OpenFunctor, f: &OpenFunctor) -> Result<OpenFunctor> {
    if f.cod != g.dom {
        return Err(Error::BoundaryMismatch(
            "open functor composition needs the codomain of the inner functor to equal the domain of the outer one".into(),
        ));
    }
    let base = &f.dom;
    let mut on_obj = BTreeMap::new();
    for c in base.objects() {
        let mut fiber = Vec::new();
        for x in f.fiber(c) {
            let mid = f.apply_object(c, x)?;
            for y in g.fiber(&mid) {
                fiber.push(ElementValue::pair(x.clone(), y.clone()));
            }
        }
        on_obj.insert(c.clone(), fiber);
    }
    let mut on_arr = BTreeMap::new();
    for (a, arr) in base.arrows() {
        let mut action = BTreeMap::new();
        for pair in on_obj.get(&arr.tgt).map_or(&[][..], Vec::as_slice) {
            let ElementValue::Pair(x_tgt, y_tgt) = pair else {
                unreachable!("composite fibers hold pairs only");
            };
            let x_src = f.alpha.restrict(a, x_tgt)?.clone();
            let mid_arr = f.apply_arrow(a, x_tgt)?;
            let y_src = g.alpha.restrict(&mid_arr, y_tgt)?.clone();
            action.insert(pair.clone(), ElementValue::pair(x_src, y_src));
        }
        on_arr.insert(a.clone(), action);
    }
    let alpha = Presheaf::new(base.clone(), on_obj, on_arr);

    let mut beta_obj = BTreeMap::new();
    for c in base.objects() {
        for pair in alpha.fiber(c) {
            let ElementValue::Pair(x, y) = pair else {
                unreachable!("composite fibers hold pairs only");
            };
            let mid = f.apply_object(c, x)?;
            beta_obj.insert(element_object_id(c, pair), g.apply_object(&mid, y)?);
        }
    }
    let mut beta_arr = BTreeMap::new();
    for (a, arr) in base.arrows() {
        for pair in alpha.fiber(&arr.tgt) {
            let ElementValue::Pair(x, y) = pair else {
                unreachable!("composite fibers hold pairs only");
            };
            let mid_arr = f.apply_arrow(a, x)?;
            beta_arr.insert(element_arrow_id(a, pair), g.apply_arrow(&mid_arr, y)?);
        }
    }
    let beta = FinFunctor::new(
        alpha.category_of_elements(),
        g.cod.clone(),
        beta_obj,
        beta_arr,
    );
    Ok(OpenFunctor::new(base.clone(), g.cod.clone(), alpha, beta))
}
