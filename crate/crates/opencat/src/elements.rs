//! Presheaves valued in the opposite of finite sets, and their categories of
//! elements.
//!
//! A [`Presheaf`] assigns each object a finite set of [`ElementValue`]s and
//! each arrow `f : c -> c'` a *restriction* running the other way,
//! `P(f)^po : P(c') -> P(c)`. The category of elements glues the base
//! category together with these fibers: its objects are pairs `(c, x)` and
//! its arrows are pairs `(f, x')` from `(c, P(f)^po(x'))` to `(c', x')`.
//!
//! Objects and arrows of a category of elements get the canonical identifiers
//! `(c|x)` and `(f|x')`, so two independent constructions of the same
//! category of elements are structurally equal. The encoding is injective
//! because element tokens never contain `|` (atom labels exclude it, see
//! [`ElementValue::atom_label_error`]), so the split point is always the last
//! `|` of the identifier.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::fincat::{ArrId, FinCategory, FinFunctor, ObjId, ValidationReport, ViolationKind};

/// An element of a presheaf fiber.
///
/// `Star` is the single interaction of identity open functors; `Pair` is the
/// element form produced by composition, and its nesting is meaningful:
/// `<x,<y,z>>` and `<<x,y>,z>` are different elements.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ElementValue {
    Atom(String),
    Star,
    Pair(Box<ElementValue>, Box<ElementValue>),
}

impl ElementValue {
    pub fn atom(label: impl Into<String>) -> Self {
        let label = label.into();
        debug_assert!(
            ElementValue::atom_label_error(&label).is_none(),
            "bad atom label `{label}`"
        );
        ElementValue::Atom(label)
    }

    pub fn pair(left: ElementValue, right: ElementValue) -> Self {
        ElementValue::Pair(Box::new(left), Box::new(right))
    }

    /// Why `label` is not usable as an atom, if it is not.
    ///
    /// `*` is reserved for [`ElementValue::Star`], and the delimiters of the
    /// canonical token syntax are excluded so that tokens parse unambiguously
    /// and `(c|x)` identifiers stay injective.
    pub fn atom_label_error(label: &str) -> Option<String> {
        if label.is_empty() {
            return Some("atom labels must be nonempty".into());
        }
        if label == "*" {
            return Some("`*` is reserved for the star element".into());
        }
        if let Some(bad) = label.chars().find(|c| "<>,|()*".contains(*c)) {
            return Some(format!("atom labels may not contain `{bad}`"));
        }
        None
    }

    /// Parse the canonical token syntax: `*`, an atom label, or `<l,r>`.
    pub fn parse_token(text: &str) -> Result<Self> {
        let (value, rest) = Self::parse_prefix(text.trim())?;
        if !rest.is_empty() {
            return Err(Error::Schema(format!(
                "trailing input `{rest}` after element `{value}`"
            )));
        }
        Ok(value)
    }

    fn parse_prefix(text: &str) -> Result<(Self, &str)> {
        if let Some(rest) = text.strip_prefix('<') {
            let (left, rest) = Self::parse_prefix(rest)?;
            let rest = rest
                .strip_prefix(',')
                .ok_or_else(|| Error::Schema(format!("expected `,` in pair near `{rest}`")))?;
            let (right, rest) = Self::parse_prefix(rest)?;
            let rest = rest
                .strip_prefix('>')
                .ok_or_else(|| Error::Schema(format!("expected `>` in pair near `{rest}`")))?;
            return Ok((ElementValue::pair(left, right), rest));
        }
        if let Some(rest) = text.strip_prefix('*') {
            return Ok((ElementValue::Star, rest));
        }
        let end = text
            .char_indices()
            .find(|(_, c)| "<>,|()*".contains(*c))
            .map_or(text.len(), |(i, _)| i);
        let (label, rest) = text.split_at(end);
        if let Some(reason) = Self::atom_label_error(label) {
            return Err(Error::Schema(format!("bad element `{text}`: {reason}")));
        }
        Ok((ElementValue::Atom(label.to_owned()), rest))
    }
}

impl fmt::Display for ElementValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementValue::Atom(label) => f.write_str(label),
            ElementValue::Star => f.write_str("*"),
            ElementValue::Pair(l, r) => write!(f, "<{l},{r}>"),
        }
    }
}

/// Identifier of the object `(c, x)` in a category of elements.
pub fn element_object_id(c: &ObjId, x: &ElementValue) -> ObjId {
    ObjId::new(format!("({c}|{x})"))
}

/// Identifier of the arrow `(f, x')` in a category of elements.
pub fn element_arrow_id(f: &ArrId, x: &ElementValue) -> ArrId {
    ArrId::new(format!("({f}|{x})"))
}

/// A functor from a finite category into the opposite of finite sets: a fiber
/// of elements per object and a restriction map per arrow.
///
/// Fibers are ordered sequences with set semantics; the order is preserved
/// for deterministic serialization but two presheaves with reordered fibers
/// are equal. Empty fibers are allowed.
#[derive(Clone, Debug)]
pub struct Presheaf {
    base: FinCategory,
    on_obj: BTreeMap<ObjId, Vec<ElementValue>>,
    on_arr: BTreeMap<ArrId, BTreeMap<ElementValue, ElementValue>>,
}

impl PartialEq for Presheaf {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base
            && fiber_sets(&self.on_obj) == fiber_sets(&other.on_obj)
            && self.on_arr == other.on_arr
    }
}

impl Eq for Presheaf {}

impl Hash for Presheaf {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.base.hash(state);
        fiber_sets(&self.on_obj).hash(state);
        self.on_arr.hash(state);
    }
}

fn fiber_sets(
    fibers: &BTreeMap<ObjId, Vec<ElementValue>>,
) -> BTreeMap<&ObjId, Vec<&ElementValue>> {
    fibers
        .iter()
        .map(|(c, xs)| {
            let mut xs: Vec<&ElementValue> = xs.iter().collect();
            xs.sort();
            (c, xs)
        })
        .collect()
}

impl Presheaf {
    pub fn new(
        base: FinCategory,
        on_obj: BTreeMap<ObjId, Vec<ElementValue>>,
        on_arr: BTreeMap<ArrId, BTreeMap<ElementValue, ElementValue>>,
    ) -> Self {
        Presheaf {
            base,
            on_obj,
            on_arr,
        }
    }

    /// The terminal presheaf: every fiber is `{*}`, every action is identity.
    pub fn terminal(base: &FinCategory) -> Self {
        let on_obj = base
            .objects()
            .iter()
            .map(|c| (c.clone(), vec![ElementValue::Star]))
            .collect();
        let on_arr = base
            .arrows()
            .keys()
            .map(|f| {
                (
                    f.clone(),
                    BTreeMap::from([(ElementValue::Star, ElementValue::Star)]),
                )
            })
            .collect();
        Presheaf::new(base.clone(), on_obj, on_arr)
    }

    pub fn base(&self) -> &FinCategory {
        &self.base
    }

    pub fn fibers(&self) -> &BTreeMap<ObjId, Vec<ElementValue>> {
        &self.on_obj
    }

    pub fn actions(&self) -> &BTreeMap<ArrId, BTreeMap<ElementValue, ElementValue>> {
        &self.on_arr
    }

    pub fn fiber(&self, c: &ObjId) -> &[ElementValue] {
        self.on_obj.get(c).map_or(&[], Vec::as_slice)
    }

    pub fn action(&self, f: &ArrId) -> Option<&BTreeMap<ElementValue, ElementValue>> {
        self.on_arr.get(f)
    }

    /// Apply the restriction of `f : c -> c'` to an element of the fiber
    /// over `c'`.
    pub fn restrict(&self, f: &ArrId, x: &ElementValue) -> Result<&ElementValue> {
        self.on_arr
            .get(f)
            .ok_or_else(|| Error::UnknownArrow(f.to_string()))?
            .get(x)
            .ok_or_else(|| Error::UnknownElement {
                object: format!("target of {f}"),
                element: x.to_string(),
            })
    }

    /// Check functoriality: identity actions are identities, composite
    /// actions compose contravariantly, and every action maps the target
    /// fiber into the source fiber.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        for c in self.base.objects() {
            match self.on_obj.get(c) {
                None => report.push(
                    ViolationKind::MissingFiber,
                    format!("object `{c}` has no fiber"),
                ),
                Some(xs) => {
                    let mut seen = BTreeSet::new();
                    for x in xs {
                        if !seen.insert(x) {
                            report.push(
                                ViolationKind::DuplicateElement,
                                format!("fiber over `{c}` repeats `{x}`"),
                            );
                        }
                    }
                }
            }
        }
        for c in self.on_obj.keys() {
            if !self.base.has_object(c) {
                report.push(
                    ViolationKind::UnknownEndpoint,
                    format!("fiber over unknown object `{c}`"),
                );
            }
        }
        for (f, arr) in self.base.arrows() {
            let Some(action) = self.on_arr.get(f) else {
                report.push(
                    ViolationKind::MissingAction,
                    format!("arrow `{f}` has no action"),
                );
                continue;
            };
            let dom: BTreeSet<_> = self.fiber(&arr.tgt).iter().collect();
            let img: BTreeSet<_> = self.fiber(&arr.src).iter().collect();
            let keys: BTreeSet<_> = action.keys().collect();
            if keys != dom {
                report.push(
                    ViolationKind::ActionDomain,
                    format!("action of `{f}` is not defined exactly on the fiber over `{}`", arr.tgt),
                );
            }
            for v in action.values() {
                if !img.contains(v) {
                    report.push(
                        ViolationKind::ActionDomain,
                        format!("action of `{f}` sends an element to `{v}`, outside the fiber over `{}`", arr.src),
                    );
                }
            }
        }
        for f in self.on_arr.keys() {
            if self.base.arrow(f).is_none() {
                report.push(
                    ViolationKind::UnknownEndpoint,
                    format!("action for unknown arrow `{f}`"),
                );
            }
        }
        for (c, i) in self.base.identity_table() {
            let Some(action) = self.on_arr.get(i) else { continue };
            for x in self.fiber(c) {
                if action.get(x).is_some_and(|y| y != x) {
                    report.push(
                        ViolationKind::IdentityAction,
                        format!("action of `{i}` moves `{x}`"),
                    );
                }
            }
        }
        for ((g, f), gf) in self.base.composite_table() {
            let (Some(act_g), Some(act_f), Some(act_gf)) = (
                self.on_arr.get(g),
                self.on_arr.get(f),
                self.on_arr.get(gf),
            ) else {
                continue;
            };
            for (x, via_g) in act_g {
                let composite = act_f.get(via_g);
                let direct = act_gf.get(x);
                if let (Some(l), Some(r)) = (composite, direct) {
                    if l != r {
                        report.push(
                            ViolationKind::CompositionAction,
                            format!(
                                "action of `{gf}` sends `{x}` to `{r}` but the actions of `{f}` and `{g}` give `{l}`"
                            ),
                        );
                    }
                }
            }
        }
        report
    }

    /// Build the category of elements.
    ///
    /// Assumes a valid presheaf; entries a broken presheaf fails to provide
    /// are skipped, keeping the construction total and deterministic.
    pub fn category_of_elements(&self) -> FinCategory {
        let mut objects = Vec::new();
        let mut arrows = BTreeMap::new();
        let mut composites = BTreeMap::new();
        let mut identities = BTreeMap::new();
        for c in self.base.objects() {
            for x in self.fiber(c) {
                objects.push(element_object_id(c, x));
            }
        }
        for (f, arr) in self.base.arrows() {
            let Some(action) = self.on_arr.get(f) else { continue };
            for x_tgt in self.fiber(&arr.tgt) {
                let Some(x_src) = action.get(x_tgt) else { continue };
                arrows.insert(
                    element_arrow_id(f, x_tgt),
                    crate::fincat::Arrow {
                        src: element_object_id(&arr.src, x_src),
                        tgt: element_object_id(&arr.tgt, x_tgt),
                    },
                );
            }
        }
        for c in self.base.objects() {
            let Some(i) = self.base.identity(c) else { continue };
            for x in self.fiber(c) {
                identities.insert(element_object_id(c, x), element_arrow_id(i, x));
            }
        }
        for ((g, f), gf) in self.base.composite_table() {
            let Some(g_tgt) = self.base.tgt(g) else { continue };
            let Some(act_g) = self.on_arr.get(g) else { continue };
            for x in self.fiber(g_tgt) {
                let Some(x_mid) = act_g.get(x) else { continue };
                composites.insert(
                    (element_arrow_id(g, x), element_arrow_id(f, x_mid)),
                    element_arrow_id(gf, x),
                );
            }
        }
        FinCategory::new(objects, arrows, composites, identities)
    }
}

/// A morphism of presheaves `theta : F => G`, carried by the component
/// functions `theta[c]^po : G(c) -> F(c)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PresheafMorphism {
    dom: Presheaf,
    cod: Presheaf,
    components_po: BTreeMap<ObjId, BTreeMap<ElementValue, ElementValue>>,
}

impl PresheafMorphism {
    pub fn new(
        dom: Presheaf,
        cod: Presheaf,
        components_po: BTreeMap<ObjId, BTreeMap<ElementValue, ElementValue>>,
    ) -> Self {
        PresheafMorphism {
            dom,
            cod,
            components_po,
        }
    }

    /// The identity morphism of a presheaf.
    pub fn identity(p: &Presheaf) -> Self {
        let components_po = p
            .fibers()
            .iter()
            .map(|(c, xs)| {
                (
                    c.clone(),
                    xs.iter().map(|x| (x.clone(), x.clone())).collect(),
                )
            })
            .collect();
        PresheafMorphism::new(p.clone(), p.clone(), components_po)
    }

    pub fn dom(&self) -> &Presheaf {
        &self.dom
    }

    pub fn cod(&self) -> &Presheaf {
        &self.cod
    }

    pub fn components_po(&self) -> &BTreeMap<ObjId, BTreeMap<ElementValue, ElementValue>> {
        &self.components_po
    }

    pub fn component_po(&self, c: &ObjId) -> Result<&BTreeMap<ElementValue, ElementValue>> {
        self.components_po
            .get(c)
            .ok_or_else(|| Error::UnknownObject(c.to_string()))
    }

    /// Apply the component at `c` to an element of the codomain fiber.
    pub fn apply_po(&self, c: &ObjId, y: &ElementValue) -> Result<&ElementValue> {
        self.component_po(c)?
            .get(y)
            .ok_or_else(|| Error::UnknownElement {
                object: c.to_string(),
                element: y.to_string(),
            })
    }

    /// The arrow component at `d : g -> g'` read as a function: the diagonal
    /// `F(d)^po ∘ theta[g']^po = theta[g]^po ∘ G(d)^po` from `G(g')` to `F(g)`.
    pub fn arrow_component_po(&self, d: &ArrId) -> Result<BTreeMap<ElementValue, ElementValue>> {
        let arr = self
            .dom
            .base()
            .arrow(d)
            .ok_or_else(|| Error::UnknownArrow(d.to_string()))?;
        let mut out = BTreeMap::new();
        for y in self.cod.fiber(&arr.tgt) {
            let mid = self.apply_po(&arr.tgt, y)?;
            out.insert(y.clone(), self.dom.restrict(d, mid)?.clone());
        }
        Ok(out)
    }

    /// Check that both presheaves share a base, components are functions on
    /// the right fibers, and every naturality square commutes.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        if self.dom.base() != self.cod.base() {
            report.push(
                ViolationKind::BoundaryMismatch,
                "the two presheaves live over different categories",
            );
            return report;
        }
        let base = self.dom.base();
        for c in base.objects() {
            let Some(comp) = self.components_po.get(c) else {
                report.push(
                    ViolationKind::MissingComponent,
                    format!("no component at `{c}`"),
                );
                continue;
            };
            let dom_fiber: BTreeSet<_> = self.cod.fiber(c).iter().collect();
            let img_fiber: BTreeSet<_> = self.dom.fiber(c).iter().collect();
            let keys: BTreeSet<_> = comp.keys().collect();
            if keys != dom_fiber {
                report.push(
                    ViolationKind::ActionDomain,
                    format!("component at `{c}` is not defined exactly on the codomain fiber"),
                );
            }
            for v in comp.values() {
                if !img_fiber.contains(v) {
                    report.push(
                        ViolationKind::ActionDomain,
                        format!("component at `{c}` maps into `{v}`, outside the domain fiber"),
                    );
                }
            }
        }
        for c in self.components_po.keys() {
            if !base.has_object(c) {
                report.push(
                    ViolationKind::UnknownEndpoint,
                    format!("component at unknown object `{c}`"),
                );
            }
        }
        for (f, arr) in base.arrows() {
            for y in self.cod.fiber(&arr.tgt) {
                let via_dom = self
                    .apply_po(&arr.tgt, y)
                    .and_then(|mid| self.dom.restrict(f, mid));
                let via_cod = self
                    .cod
                    .restrict(f, y)
                    .and_then(|y_src| self.apply_po(&arr.src, y_src));
                if let (Ok(l), Ok(r)) = (via_dom, via_cod) {
                    if l != r {
                        report.push(
                            ViolationKind::Naturality,
                            format!("naturality fails at `{f}` on `{y}`: `{l}` vs `{r}`"),
                        );
                    }
                }
            }
        }
        report
    }

    /// The functor between categories of elements induced by this morphism,
    /// running contravariantly from the codomain's to the domain's.
    pub fn elements_functor(&self) -> FinFunctor {
        let from = self.cod.category_of_elements();
        let to = self.dom.category_of_elements();
        let mut on_obj = BTreeMap::new();
        let mut on_arr = BTreeMap::new();
        for c in self.cod.base().objects() {
            let Some(comp) = self.components_po.get(c) else { continue };
            for y in self.cod.fiber(c) {
                let Some(x) = comp.get(y) else { continue };
                on_obj.insert(element_object_id(c, y), element_object_id(c, x));
            }
        }
        for (f, arr) in self.cod.base().arrows() {
            let Some(comp) = self.components_po.get(&arr.tgt) else { continue };
            for y in self.cod.fiber(&arr.tgt) {
                if self.cod.restrict(f, y).is_err() {
                    continue;
                }
                let Some(x) = comp.get(y) else { continue };
                on_arr.insert(element_arrow_id(f, y), element_arrow_id(f, x));
            }
        }
        FinFunctor::new(from, to, on_obj, on_arr)
    }
}

/// Vertical composition `phi • theta` of `theta : F => G` and `phi : G => H`;
/// the carried functions compose in reversed order.
pub fn vcomp_presheaf_morphism(
    phi: &PresheafMorphism,
    theta: &PresheafMorphism,
) -> Result<PresheafMorphism> {
    if theta.cod != phi.dom {
        return Err(Error::BoundaryMismatch(
            "vertical composition needs the codomain of the first morphism to equal the domain of the second".into(),
        ));
    }
    let mut components_po = BTreeMap::new();
    for c in theta.dom.base().objects() {
        let mut comp = BTreeMap::new();
        for z in phi.cod.fiber(c) {
            let mid = phi.apply_po(c, z)?;
            comp.insert(z.clone(), theta.apply_po(c, mid)?.clone());
        }
        components_po.insert(c.clone(), comp);
    }
    Ok(PresheafMorphism::new(
        theta.dom.clone(),
        phi.cod.clone(),
        components_po,
    ))
}
