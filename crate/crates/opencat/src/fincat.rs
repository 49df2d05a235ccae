//! Finite categories, functors and natural transformations.
//!
//! Everything in this module is finite and explicit: a [`FinCategory`] stores
//! its composition table as data rather than computing it, so the category
//! axioms — and every law built on top of them — can be checked exhaustively
//! and compared by structural equality. Categories are compared by content:
//! the order of the object list is preserved for deterministic serialization
//! but carries no meaning.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};

/// Identifier of an object, unique within one category.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjId(String);

/// Identifier of an arrow, unique within one category.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArrId(String);

macro_rules! id_impls {
    ($t:ty) => {
        impl $t {
            pub fn new(id: impl Into<String>) -> Self {
                Self(id.into())
            }

            pub fn as_str(&self) -> &str {
                &self.0
            }
        }

        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }

        impl fmt::Debug for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{:?}", self.0)
            }
        }

        impl From<&str> for $t {
            fn from(s: &str) -> Self {
                Self(s.to_owned())
            }
        }

        impl From<String> for $t {
            fn from(s: String) -> Self {
                Self(s)
            }
        }
    };
}

id_impls!(ObjId);
id_impls!(ArrId);

/// Endpoints of an arrow.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub src: ObjId,
    pub tgt: ObjId,
}

impl Arrow {
    pub fn new(src: impl Into<ObjId>, tgt: impl Into<ObjId>) -> Self {
        Arrow {
            src: src.into(),
            tgt: tgt.into(),
        }
    }
}

/// What a validator found wrong, as matchable data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    DuplicateObject,
    DuplicateElement,
    UnknownEndpoint,
    MissingIdentity,
    IdentityEndpoints,
    MissingComposite,
    SpuriousComposite,
    CompositeEndpoints,
    LeftIdentity,
    RightIdentity,
    Associativity,
    MissingImage,
    UnknownImage,
    EndpointPreservation,
    IdentityPreservation,
    CompositionPreservation,
    MissingComponent,
    ComponentEndpoints,
    Naturality,
    MissingFiber,
    MissingAction,
    ActionDomain,
    IdentityAction,
    CompositionAction,
    BoundaryMismatch,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// One violated axiom together with the witnesses that break it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub message: String,
}

/// Outcome of a validator: empty means valid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn contains(&self, kind: ViolationKind) -> bool {
        self.violations.iter().any(|v| v.kind == kind)
    }

    pub fn push(&mut self, kind: ViolationKind, message: impl Into<String>) {
        self.violations.push(Violation {
            kind,
            message: message.into(),
        });
    }

    /// Merge another report, prefixing each message with a location label.
    pub fn absorb(&mut self, prefix: &str, other: ValidationReport) {
        for v in other.violations {
            self.violations.push(Violation {
                kind: v.kind,
                message: format!("{prefix}: {}", v.message),
            });
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[{}] {}", v.kind, v.message)?;
        }
        Ok(())
    }
}

/// A finite category: objects, arrows with endpoints, identities, and a
/// composition table defined exactly on the composable pairs.
///
/// The table entry for `(g, f)` holds `g · f`, the composite of `f : c -> c'`
/// followed by `g : c' -> c''`.
#[derive(Clone, Debug)]
pub struct FinCategory {
    objects: Vec<ObjId>,
    arrows: BTreeMap<ArrId, Arrow>,
    composites: BTreeMap<(ArrId, ArrId), ArrId>,
    identities: BTreeMap<ObjId, ArrId>,
}

impl PartialEq for FinCategory {
    fn eq(&self, other: &Self) -> bool {
        sorted(&self.objects) == sorted(&other.objects)
            && self.arrows == other.arrows
            && self.composites == other.composites
            && self.identities == other.identities
    }
}

impl Eq for FinCategory {}

impl Hash for FinCategory {
    fn hash<H: Hasher>(&self, state: &mut H) {
        sorted(&self.objects).hash(state);
        self.arrows.hash(state);
        self.composites.hash(state);
        self.identities.hash(state);
    }
}

fn sorted<T: Ord + Clone>(xs: &[T]) -> Vec<T> {
    let mut out = xs.to_vec();
    out.sort();
    out
}

impl FinCategory {
    pub fn new(
        objects: Vec<ObjId>,
        arrows: BTreeMap<ArrId, Arrow>,
        composites: BTreeMap<(ArrId, ArrId), ArrId>,
        identities: BTreeMap<ObjId, ArrId>,
    ) -> Self {
        FinCategory {
            objects,
            arrows,
            composites,
            identities,
        }
    }

    /// The category with no objects and no arrows.
    pub fn empty() -> Self {
        FinCategory::new(Vec::new(), BTreeMap::new(), BTreeMap::new(), BTreeMap::new())
    }

    pub fn builder() -> CategoryBuilder {
        CategoryBuilder::default()
    }

    pub fn objects(&self) -> &[ObjId] {
        &self.objects
    }

    pub fn arrows(&self) -> &BTreeMap<ArrId, Arrow> {
        &self.arrows
    }

    pub fn composite_table(&self) -> &BTreeMap<(ArrId, ArrId), ArrId> {
        &self.composites
    }

    pub fn identity_table(&self) -> &BTreeMap<ObjId, ArrId> {
        &self.identities
    }

    pub fn has_object(&self, c: &ObjId) -> bool {
        self.objects.contains(c)
    }

    pub fn arrow(&self, f: &ArrId) -> Option<&Arrow> {
        self.arrows.get(f)
    }

    pub fn src(&self, f: &ArrId) -> Option<&ObjId> {
        self.arrows.get(f).map(|a| &a.src)
    }

    pub fn tgt(&self, f: &ArrId) -> Option<&ObjId> {
        self.arrows.get(f).map(|a| &a.tgt)
    }

    pub fn identity(&self, c: &ObjId) -> Option<&ArrId> {
        self.identities.get(c)
    }

    pub fn is_identity(&self, f: &ArrId) -> bool {
        self.identities.values().any(|i| i == f)
    }

    /// All arrows from `a` to `b`, in identifier order.
    pub fn hom(&self, a: &ObjId, b: &ObjId) -> Vec<ArrId> {
        self.arrows
            .iter()
            .filter(|(_, arr)| &arr.src == a && &arr.tgt == b)
            .map(|(f, _)| f.clone())
            .collect()
    }

    /// Look up `g · f` in the composition table.
    pub fn compose(&self, g: &ArrId, f: &ArrId) -> Result<ArrId> {
        let fa = self
            .arrows
            .get(f)
            .ok_or_else(|| Error::UnknownArrow(f.to_string()))?;
        let ga = self
            .arrows
            .get(g)
            .ok_or_else(|| Error::UnknownArrow(g.to_string()))?;
        if fa.tgt != ga.src {
            return Err(Error::NotComposable {
                g: g.to_string(),
                f: f.to_string(),
                detail: format!("target `{}` differs from source `{}`", fa.tgt, ga.src),
            });
        }
        self.composites
            .get(&(g.clone(), f.clone()))
            .cloned()
            .ok_or_else(|| Error::NotComposable {
                g: g.to_string(),
                f: f.to_string(),
                detail: "no table entry".into(),
            })
    }

    /// An inverse of `f`, if one exists in the table.
    pub fn inverse_arrow(&self, f: &ArrId) -> Option<ArrId> {
        let fa = self.arrows.get(f)?;
        let id_src = self.identities.get(&fa.src)?;
        let id_tgt = self.identities.get(&fa.tgt)?;
        self.hom(&fa.tgt, &fa.src).into_iter().find(|g| {
            self.composites.get(&(g.clone(), f.clone())) == Some(id_src)
                && self.composites.get(&(f.clone(), g.clone())) == Some(id_tgt)
        })
    }

    /// Exhaustively check the category axioms; an empty report means valid.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let mut objects = BTreeSet::new();
        for c in &self.objects {
            if !objects.insert(c.clone()) {
                report.push(
                    ViolationKind::DuplicateObject,
                    format!("object `{c}` listed more than once"),
                );
            }
        }
        for (f, arr) in &self.arrows {
            if !objects.contains(&arr.src) {
                report.push(
                    ViolationKind::UnknownEndpoint,
                    format!("arrow `{f}` has unknown source `{}`", arr.src),
                );
            }
            if !objects.contains(&arr.tgt) {
                report.push(
                    ViolationKind::UnknownEndpoint,
                    format!("arrow `{f}` has unknown target `{}`", arr.tgt),
                );
            }
        }
        for c in &objects {
            match self.identities.get(c) {
                None => report.push(
                    ViolationKind::MissingIdentity,
                    format!("object `{c}` has no identity arrow"),
                ),
                Some(i) => match self.arrows.get(i) {
                    None => report.push(
                        ViolationKind::UnknownEndpoint,
                        format!("identity `{i}` of `{c}` is not an arrow"),
                    ),
                    Some(a) if a.src != *c || a.tgt != *c => report.push(
                        ViolationKind::IdentityEndpoints,
                        format!("identity `{i}` of `{c}` runs {} -> {}", a.src, a.tgt),
                    ),
                    _ => {}
                },
            }
        }
        for c in self.identities.keys() {
            if !objects.contains(c) {
                report.push(
                    ViolationKind::UnknownEndpoint,
                    format!("identity listed for unknown object `{c}`"),
                );
            }
        }
        for ((g, f), h) in &self.composites {
            let (Some(fa), Some(ga)) = (self.arrows.get(f), self.arrows.get(g)) else {
                report.push(
                    ViolationKind::UnknownEndpoint,
                    format!("composite entry ({g}, {f}) names an unknown arrow"),
                );
                continue;
            };
            if fa.tgt != ga.src {
                report.push(
                    ViolationKind::SpuriousComposite,
                    format!("table entry for non-composable pair `{g}` after `{f}`"),
                );
                continue;
            }
            match self.arrows.get(h) {
                None => report.push(
                    ViolationKind::UnknownEndpoint,
                    format!("composite `{h}` of ({g}, {f}) is not an arrow"),
                ),
                Some(ha) if ha.src != fa.src || ha.tgt != ga.tgt => report.push(
                    ViolationKind::CompositeEndpoints,
                    format!(
                        "compose({g}, {f}) = `{h}` runs {} -> {}, expected {} -> {}",
                        ha.src, ha.tgt, fa.src, ga.tgt
                    ),
                ),
                _ => {}
            }
        }
        for (g, ga) in &self.arrows {
            for (f, fa) in &self.arrows {
                if fa.tgt == ga.src && !self.composites.contains_key(&(g.clone(), f.clone())) {
                    report.push(
                        ViolationKind::MissingComposite,
                        format!("no table entry for composable pair `{g}` after `{f}`"),
                    );
                }
            }
        }
        for (f, fa) in &self.arrows {
            if let Some(i) = self.identities.get(&fa.tgt) {
                if let Some(r) = self.composites.get(&(i.clone(), f.clone())) {
                    if r != f {
                        report.push(
                            ViolationKind::LeftIdentity,
                            format!("compose({i}, {f}) = `{r}`, expected `{f}`"),
                        );
                    }
                }
            }
            if let Some(i) = self.identities.get(&fa.src) {
                if let Some(r) = self.composites.get(&(f.clone(), i.clone())) {
                    if r != f {
                        report.push(
                            ViolationKind::RightIdentity,
                            format!("compose({f}, {i}) = `{r}`, expected `{f}`"),
                        );
                    }
                }
            }
        }
        // Associativity over every composable triple for which the table has
        // the needed entries; missing entries were already reported above.
        for ((g, f), gf) in &self.composites {
            let Some(ga) = self.arrows.get(g) else { continue };
            for (h, ha) in &self.arrows {
                if ha.src != ga.tgt {
                    continue;
                }
                let left = self
                    .composites
                    .get(&(h.clone(), gf.clone()));
                let right = self
                    .composites
                    .get(&(h.clone(), g.clone()))
                    .and_then(|hg| self.composites.get(&(hg.clone(), f.clone())));
                if let (Some(l), Some(r)) = (left, right) {
                    if l != r {
                        report.push(
                            ViolationKind::Associativity,
                            format!("({h} · {g}) · {f} = `{r}` but {h} · ({g} · {f}) = `{l}`"),
                        );
                    }
                }
            }
        }
        report
    }
}

/// Convenience constructor for finite categories.
///
/// Identity arrows are added automatically as `id_<object>`, along with every
/// composition entry involving an identity. Non-identity composites must be
/// declared with [`CategoryBuilder::compose`]; an explicit entry overrides an
/// automatic one, which is how deliberately broken fixtures are made.
#[derive(Default)]
pub struct CategoryBuilder {
    objects: Vec<ObjId>,
    arrows: Vec<(ArrId, Arrow)>,
    composites: Vec<(ArrId, ArrId, ArrId)>,
}

impl CategoryBuilder {
    pub fn object(mut self, id: impl Into<ObjId>) -> Self {
        self.objects.push(id.into());
        self
    }

    pub fn arrow(
        mut self,
        id: impl Into<ArrId>,
        src: impl Into<ObjId>,
        tgt: impl Into<ObjId>,
    ) -> Self {
        self.arrows.push((id.into(), Arrow::new(src, tgt)));
        self
    }

    /// Declare `g · f = to`.
    pub fn compose(
        mut self,
        g: impl Into<ArrId>,
        f: impl Into<ArrId>,
        to: impl Into<ArrId>,
    ) -> Self {
        self.composites.push((g.into(), f.into(), to.into()));
        self
    }

    pub fn build(self) -> FinCategory {
        let mut arrows: BTreeMap<ArrId, Arrow> = BTreeMap::new();
        for (id, arr) in &self.arrows {
            let clash = arrows.insert(id.clone(), arr.clone());
            assert!(clash.is_none(), "duplicate arrow id `{id}`");
        }
        let mut identities = BTreeMap::new();
        for c in &self.objects {
            let id = ArrId::new(format!("id_{c}"));
            assert!(
                !arrows.contains_key(&id),
                "arrow id `{id}` is reserved for the identity of `{c}`"
            );
            arrows.insert(id.clone(), Arrow::new(c.clone(), c.clone()));
            identities.insert(c.clone(), id);
        }
        let mut composites = BTreeMap::new();
        for (f, fa) in &arrows {
            if let Some(i) = identities.get(&fa.tgt) {
                composites.insert((i.clone(), f.clone()), f.clone());
            }
            if let Some(i) = identities.get(&fa.src) {
                composites.insert((f.clone(), i.clone()), f.clone());
            }
        }
        for (g, f, to) in self.composites {
            composites.insert((g, f), to);
        }
        FinCategory::new(self.objects, arrows, composites, identities)
    }
}

/// A functor between finite categories, stored as total maps on objects and
/// arrows. The domain and codomain are kept by value so a functor is a
/// self-contained, serializable datum.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinFunctor {
    dom: FinCategory,
    cod: FinCategory,
    on_obj: BTreeMap<ObjId, ObjId>,
    on_arr: BTreeMap<ArrId, ArrId>,
}

impl FinFunctor {
    pub fn new(
        dom: FinCategory,
        cod: FinCategory,
        on_obj: BTreeMap<ObjId, ObjId>,
        on_arr: BTreeMap<ArrId, ArrId>,
    ) -> Self {
        FinFunctor {
            dom,
            cod,
            on_obj,
            on_arr,
        }
    }

    /// The identity functor of a category.
    pub fn identity(c: &FinCategory) -> Self {
        let on_obj = c.objects().iter().map(|o| (o.clone(), o.clone())).collect();
        let on_arr = c.arrows().keys().map(|f| (f.clone(), f.clone())).collect();
        FinFunctor::new(c.clone(), c.clone(), on_obj, on_arr)
    }

    /// The functor collapsing everything onto one object of the codomain.
    pub fn constant(dom: &FinCategory, cod: &FinCategory, at: &ObjId) -> Result<Self> {
        if !cod.has_object(at) {
            return Err(Error::UnknownObject(at.to_string()));
        }
        let id = cod
            .identity(at)
            .ok_or_else(|| Error::UnknownArrow(format!("id of {at}")))?
            .clone();
        let on_obj = dom.objects().iter().map(|o| (o.clone(), at.clone())).collect();
        let on_arr = dom.arrows().keys().map(|f| (f.clone(), id.clone())).collect();
        Ok(FinFunctor::new(dom.clone(), cod.clone(), on_obj, on_arr))
    }

    pub fn dom(&self) -> &FinCategory {
        &self.dom
    }

    pub fn cod(&self) -> &FinCategory {
        &self.cod
    }

    pub fn object_map(&self) -> &BTreeMap<ObjId, ObjId> {
        &self.on_obj
    }

    pub fn arrow_map(&self) -> &BTreeMap<ArrId, ArrId> {
        &self.on_arr
    }

    pub fn obj_image(&self, c: &ObjId) -> Result<&ObjId> {
        self.on_obj
            .get(c)
            .ok_or_else(|| Error::UnknownObject(c.to_string()))
    }

    pub fn arr_image(&self, f: &ArrId) -> Result<&ArrId> {
        self.on_arr
            .get(f)
            .ok_or_else(|| Error::UnknownArrow(f.to_string()))
    }

    /// Check that the maps preserve endpoints, identities and composition.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        for c in self.dom.objects() {
            match self.on_obj.get(c) {
                None => report.push(
                    ViolationKind::MissingImage,
                    format!("object `{c}` has no image"),
                ),
                Some(d) if !self.cod.has_object(d) => report.push(
                    ViolationKind::UnknownImage,
                    format!("image `{d}` of `{c}` is not a codomain object"),
                ),
                _ => {}
            }
        }
        for c in self.on_obj.keys() {
            if !self.dom.has_object(c) {
                report.push(
                    ViolationKind::UnknownEndpoint,
                    format!("object map defined on unknown object `{c}`"),
                );
            }
        }
        for (f, fa) in self.dom.arrows() {
            let Some(ff) = self.on_arr.get(f) else {
                report.push(
                    ViolationKind::MissingImage,
                    format!("arrow `{f}` has no image"),
                );
                continue;
            };
            let Some(ffa) = self.cod.arrow(ff) else {
                report.push(
                    ViolationKind::UnknownImage,
                    format!("image `{ff}` of `{f}` is not a codomain arrow"),
                );
                continue;
            };
            let (src_img, tgt_img) = (self.on_obj.get(&fa.src), self.on_obj.get(&fa.tgt));
            if src_img.is_some_and(|s| *s != ffa.src) || tgt_img.is_some_and(|t| *t != ffa.tgt) {
                report.push(
                    ViolationKind::EndpointPreservation,
                    format!(
                        "`{f}` runs {} -> {} but its image `{ff}` runs {} -> {}",
                        fa.src, fa.tgt, ffa.src, ffa.tgt
                    ),
                );
            }
        }
        for f in self.on_arr.keys() {
            if self.dom.arrow(f).is_none() {
                report.push(
                    ViolationKind::UnknownEndpoint,
                    format!("arrow map defined on unknown arrow `{f}`"),
                );
            }
        }
        for (c, i) in self.dom.identity_table() {
            let (Some(ci), Some(ii)) = (self.on_obj.get(c), self.on_arr.get(i)) else {
                continue;
            };
            if self.cod.identity(ci) != Some(ii) {
                report.push(
                    ViolationKind::IdentityPreservation,
                    format!("image of `{i}` is `{ii}`, not the identity of `{ci}`"),
                );
            }
        }
        for ((g, f), gf) in self.dom.composite_table() {
            let (Some(gg), Some(ff), Some(ggf)) = (
                self.on_arr.get(g),
                self.on_arr.get(f),
                self.on_arr.get(gf),
            ) else {
                continue;
            };
            match self.cod.composites.get(&(gg.clone(), ff.clone())) {
                Some(r) if r == ggf => {}
                Some(r) => report.push(
                    ViolationKind::CompositionPreservation,
                    format!("image of `{gf}` is `{ggf}` but `{gg}` · `{ff}` = `{r}`"),
                ),
                None => report.push(
                    ViolationKind::CompositionPreservation,
                    format!("images of `{g}` and `{f}` are not composable"),
                ),
            }
        }
        report
    }
}

/// Compose two functors, `g` after `f`.
pub fn compose_functors(g: &FinFunctor, f: &FinFunctor) -> Result<FinFunctor> {
    if f.cod != g.dom {
        return Err(Error::BoundaryMismatch(
            "functor composition needs the codomain of the inner functor to equal the domain of the outer one".into(),
        ));
    }
    let mut on_obj = BTreeMap::new();
    for (c, m) in &f.on_obj {
        on_obj.insert(c.clone(), g.obj_image(m)?.clone());
    }
    let mut on_arr = BTreeMap::new();
    for (a, m) in &f.on_arr {
        on_arr.insert(a.clone(), g.arr_image(m)?.clone());
    }
    Ok(FinFunctor::new(f.dom.clone(), g.cod.clone(), on_obj, on_arr))
}

/// A natural transformation between parallel functors, stored as its family
/// of components in the codomain category.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NatTrans {
    dom: FinFunctor,
    cod: FinFunctor,
    components: BTreeMap<ObjId, ArrId>,
}

impl NatTrans {
    pub fn new(dom: FinFunctor, cod: FinFunctor, components: BTreeMap<ObjId, ArrId>) -> Self {
        NatTrans {
            dom,
            cod,
            components,
        }
    }

    /// The identity natural transformation of a functor.
    pub fn identity(f: &FinFunctor) -> Self {
        let components = f
            .dom()
            .objects()
            .iter()
            .filter_map(|c| {
                let img = f.on_obj.get(c)?;
                Some((c.clone(), f.cod().identity(img)?.clone()))
            })
            .collect();
        NatTrans::new(f.clone(), f.clone(), components)
    }

    pub fn dom(&self) -> &FinFunctor {
        &self.dom
    }

    pub fn cod(&self) -> &FinFunctor {
        &self.cod
    }

    pub fn components(&self) -> &BTreeMap<ObjId, ArrId> {
        &self.components
    }

    pub fn component(&self, c: &ObjId) -> Result<&ArrId> {
        self.components
            .get(c)
            .ok_or_else(|| Error::UnknownObject(c.to_string()))
    }

    /// The arrow component at `f : c -> c'`: the diagonal of the naturality
    /// square, `G(f) · θ[c] = θ[c'] · F(f)`.
    pub fn arrow_component(&self, f: &ArrId) -> Result<ArrId> {
        let base = self.dom.dom();
        let target = self.dom.cod();
        let arr = base
            .arrow(f)
            .ok_or_else(|| Error::UnknownArrow(f.to_string()))?;
        target.compose(self.cod.arr_image(f)?, self.component(&arr.src)?)
    }

    /// Check component endpoints and every naturality square.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        if self.dom.dom() != self.cod.dom() || self.dom.cod() != self.cod.cod() {
            report.push(
                ViolationKind::BoundaryMismatch,
                "the two functors are not parallel",
            );
            return report;
        }
        let base = self.dom.dom();
        let target = self.dom.cod();
        for c in base.objects() {
            let Some(comp) = self.components.get(c) else {
                report.push(
                    ViolationKind::MissingComponent,
                    format!("no component at `{c}`"),
                );
                continue;
            };
            let Some(arr) = target.arrow(comp) else {
                report.push(
                    ViolationKind::UnknownImage,
                    format!("component `{comp}` at `{c}` is not a codomain arrow"),
                );
                continue;
            };
            let (f_c, g_c) = (self.dom.on_obj.get(c), self.cod.on_obj.get(c));
            if f_c.is_some_and(|o| *o != arr.src) || g_c.is_some_and(|o| *o != arr.tgt) {
                report.push(
                    ViolationKind::ComponentEndpoints,
                    format!("component at `{c}` runs {} -> {}", arr.src, arr.tgt),
                );
            }
        }
        for c in self.components.keys() {
            if !base.has_object(c) {
                report.push(
                    ViolationKind::UnknownEndpoint,
                    format!("component at unknown object `{c}`"),
                );
            }
        }
        for (f, fa) in base.arrows() {
            let lhs = self
                .cod
                .arr_image(f)
                .and_then(|gf| target.compose(gf, self.component(&fa.src)?));
            let rhs = self
                .component(&fa.tgt)
                .and_then(|comp| target.compose(comp, self.dom.arr_image(f)?));
            if let (Ok(l), Ok(r)) = (lhs, rhs) {
                if l != r {
                    report.push(
                        ViolationKind::Naturality,
                        format!("naturality fails at `{f}`: `{l}` vs `{r}`"),
                    );
                }
            }
        }
        report
    }
}

/// Vertical composition `phi • theta` of `theta : F => G` and `phi : G => H`.
pub fn vcomp_nat(phi: &NatTrans, theta: &NatTrans) -> Result<NatTrans> {
    if theta.cod != phi.dom {
        return Err(Error::BoundaryMismatch(
            "vertical composition needs the codomain of the first transformation to equal the domain of the second".into(),
        ));
    }
    let target = theta.dom.cod();
    let mut components = BTreeMap::new();
    for (c, t) in &theta.components {
        components.insert(c.clone(), target.compose(phi.component(c)?, t)?);
    }
    Ok(NatTrans::new(
        theta.dom.clone(),
        phi.cod.clone(),
        components,
    ))
}

/// Horizontal composition `phi ∘ theta` of `theta : F => F' : C -> D` and
/// `phi : G => G' : D -> E`, with components `phi[theta[c]]`.
pub fn hcomp_nat(phi: &NatTrans, theta: &NatTrans) -> Result<NatTrans> {
    if theta.dom.cod() != phi.dom.dom() {
        return Err(Error::BoundaryMismatch(
            "horizontal composition needs the transformations to live over consecutive categories"
                .into(),
        ));
    }
    let dom = compose_functors(&phi.dom, &theta.dom)?;
    let cod = compose_functors(&phi.cod, &theta.cod)?;
    let mut components = BTreeMap::new();
    for (c, t) in &theta.components {
        components.insert(c.clone(), phi.arrow_component(t)?);
    }
    Ok(NatTrans::new(dom, cod, components))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::fixtures;

    #[test]
    fn walking_arrow_is_valid() {
        let cat2 = fixtures::walking_arrow();
        assert!(cat2.validate().is_valid());
        assert_eq!(cat2.objects().len(), 2);
        assert_eq!(cat2.arrows().len(), 3);
    }

    #[test]
    fn broken_right_identity_is_reported() {
        let broken = FinCategory::builder()
            .object("a")
            .object("b")
            .arrow("f", "a", "b")
            .compose("f", "id_a", "id_a")
            .build();
        let report = broken.validate();
        assert!(!report.is_valid());
        assert!(report.contains(ViolationKind::RightIdentity));
        let msg = report
            .violations()
            .iter()
            .find(|v| v.kind == ViolationKind::RightIdentity)
            .unwrap();
        assert!(msg.message.contains('f'));
    }

    #[test]
    fn free_dag_category_is_valid() {
        // Independently derived from path concatenation on a -> b -> c.
        let dag = fixtures::dag_path();
        assert!(dag.validate().is_valid());
        assert_eq!(
            dag.compose(&"g".into(), &"f".into()).unwrap(),
            ArrId::from("gf")
        );
    }

    #[test]
    fn compose_identity_and_mismatch() {
        let cat2 = fixtures::walking_arrow();
        assert_eq!(
            cat2.compose(&"id_b".into(), &"f".into()).unwrap(),
            ArrId::from("f")
        );
        let err = cat2.compose(&"f".into(), &"f".into()).unwrap_err();
        assert!(matches!(err, Error::NotComposable { .. }));
    }

    #[test]
    fn identity_and_constant_functors_validate() {
        let cat2 = fixtures::walking_arrow();
        assert!(FinFunctor::identity(&cat2).validate().is_valid());
        let collapse = FinFunctor::constant(&cat2, &cat2, &"a".into()).unwrap();
        assert!(collapse.validate().is_valid());
    }

    #[test]
    fn functor_breaking_composition_is_reported() {
        let dag = fixtures::dag_path();
        let mut on_arr: BTreeMap<ArrId, ArrId> =
            dag.arrows().keys().map(|f| (f.clone(), f.clone())).collect();
        on_arr.insert("gf".into(), "f".into());
        let on_obj = dag.objects().iter().map(|o| (o.clone(), o.clone())).collect();
        let broken = FinFunctor::new(dag.clone(), dag, on_obj, on_arr);
        let report = broken.validate();
        assert!(report.contains(ViolationKind::CompositionPreservation));
    }

    #[test]
    fn functor_composition_is_strictly_unital_and_associative() {
        let dag = fixtures::dag_path();
        let f = FinFunctor::constant(&dag, &dag, &"a".into()).unwrap();
        let id_dom = FinFunctor::identity(f.dom());
        let id_cod = FinFunctor::identity(f.cod());
        assert_eq!(compose_functors(&id_cod, &f).unwrap(), f);
        assert_eq!(compose_functors(&f, &id_dom).unwrap(), f);

        let g = FinFunctor::identity(&dag);
        let h = FinFunctor::constant(&dag, &dag, &"c".into()).unwrap();
        let left = compose_functors(&compose_functors(&h, &g).unwrap(), &f).unwrap();
        let right = compose_functors(&h, &compose_functors(&g, &f).unwrap()).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn functor_boundary_mismatch_is_an_error() {
        let cat2 = fixtures::walking_arrow();
        let dag = fixtures::dag_path();
        let f = FinFunctor::identity(&cat2);
        let g = FinFunctor::identity(&dag);
        assert!(matches!(
            compose_functors(&g, &f),
            Err(Error::BoundaryMismatch(_))
        ));
    }

    #[test]
    fn identity_nat_components_are_identities() {
        let cat2 = fixtures::walking_arrow();
        let id = NatTrans::identity(&FinFunctor::identity(&cat2));
        assert_eq!(id.component(&"a".into()).unwrap(), &ArrId::from("id_a"));
        assert_eq!(id.component(&"b".into()).unwrap(), &ArrId::from("id_b"));
        assert!(id.validate().is_valid());
    }

    /// The unique transformation from the constant functor at `a` to the
    /// identity functor on the walking arrow.
    fn const_to_identity() -> NatTrans {
        let cat2 = fixtures::walking_arrow();
        let constant = FinFunctor::constant(&cat2, &cat2, &"a".into()).unwrap();
        let ident = FinFunctor::identity(&cat2);
        let components = [("a", "id_a"), ("b", "f")]
            .into_iter()
            .map(|(c, x)| (ObjId::from(c), ArrId::from(x)))
            .collect();
        NatTrans::new(constant, ident, components)
    }

    #[test]
    fn arrow_component_on_identity_arrow_is_the_component() {
        let theta = const_to_identity();
        assert!(theta.validate().is_valid());
        assert_eq!(
            theta.arrow_component(&"id_b".into()).unwrap(),
            *theta.component(&"b".into()).unwrap()
        );
    }

    #[test]
    fn arrow_component_agrees_with_both_naturality_routes() {
        let theta = const_to_identity();
        let cat2 = theta.dom().dom().clone();
        for (f, fa) in cat2.arrows() {
            let via_cod = cat2
                .compose(
                    theta.cod().arr_image(f).unwrap(),
                    theta.component(&fa.src).unwrap(),
                )
                .unwrap();
            let via_dom = cat2
                .compose(
                    theta.component(&fa.tgt).unwrap(),
                    theta.dom().arr_image(f).unwrap(),
                )
                .unwrap();
            assert_eq!(via_cod, via_dom);
            assert_eq!(theta.arrow_component(f).unwrap(), via_cod);
        }
        // Direct table lookup on the walking arrow: the component at the
        // non-identity arrow is the component at its target.
        assert_eq!(theta.arrow_component(&"f".into()).unwrap(), ArrId::from("f"));
    }

    #[test]
    fn vertical_units_hold() {
        let theta = const_to_identity();
        let id_dom = NatTrans::identity(theta.dom());
        let id_cod = NatTrans::identity(theta.cod());
        assert_eq!(vcomp_nat(&theta, &id_dom).unwrap(), theta);
        assert_eq!(vcomp_nat(&id_cod, &theta).unwrap(), theta);
    }

    #[test]
    fn horizontal_unit_with_identity_functor() {
        let theta = const_to_identity();
        let id_d = NatTrans::identity(&FinFunctor::identity(theta.dom().cod()));
        let composed = hcomp_nat(&id_d, &theta).unwrap();
        assert_eq!(composed, theta);
    }

    #[test]
    fn exchange_law_holds_exhaustively() {
        // All natural transformations between endofunctors of the walking
        // arrow, checked against the exchange law in every composable way.
        let cat2 = fixtures::walking_arrow();
        let functors = vec![
            FinFunctor::identity(&cat2),
            FinFunctor::constant(&cat2, &cat2, &"a".into()).unwrap(),
            FinFunctor::constant(&cat2, &cat2, &"b".into()).unwrap(),
        ];
        let mut nats = Vec::new();
        for f in &functors {
            for g in &functors {
                nats.extend(crate::harness::generate::enumerate_nat_trans(f, g, 16));
            }
        }
        assert!(nats.len() >= 5);
        // Vertical composition is associative on every composable triple.
        for theta in &nats {
            for phi in nats.iter().filter(|n| n.dom() == theta.cod()) {
                for psi in nats.iter().filter(|n| n.dom() == phi.cod()) {
                    assert_eq!(
                        vcomp_nat(psi, &vcomp_nat(phi, theta).unwrap()).unwrap(),
                        vcomp_nat(&vcomp_nat(psi, phi).unwrap(), theta).unwrap()
                    );
                }
            }
        }
        let mut quadruples = 0;
        for theta in &nats {
            for theta2 in &nats {
                if theta2.dom() != theta.cod() {
                    continue;
                }
                for phi in &nats {
                    if phi.dom().dom() != theta.dom().cod() {
                        continue;
                    }
                    for phi2 in &nats {
                        if phi2.dom() != phi.cod() {
                            continue;
                        }
                        let left = hcomp_nat(
                            &vcomp_nat(phi2, phi).unwrap(),
                            &vcomp_nat(theta2, theta).unwrap(),
                        )
                        .unwrap();
                        let right = vcomp_nat(
                            &hcomp_nat(phi2, theta2).unwrap(),
                            &hcomp_nat(phi, theta).unwrap(),
                        )
                        .unwrap();
                        assert_eq!(left, right);
                        quadruples += 1;
                    }
                }
            }
        }
        assert!(quadruples > 0);
    }

    #[test]
    fn horizontal_arrow_components_flatten() {
        // (phi ∘ theta)[f] = phi[theta[f]] for all arrows of the fixture.
        let theta = const_to_identity();
        let phi = NatTrans::identity(&FinFunctor::identity(theta.dom().cod()));
        let composed = hcomp_nat(&phi, &theta).unwrap();
        for f in theta.dom().dom().arrows().keys() {
            let inner = theta.arrow_component(f).unwrap();
            assert_eq!(
                composed.arrow_component(f).unwrap(),
                phi.arrow_component(&inner).unwrap()
            );
        }
    }

    #[test]
    fn broken_naturality_is_reported() {
        let (_, theta) = fixtures::parallel_pair_nat();
        let mut components = theta.components().clone();
        components.insert("b".into(), "q".into());
        let broken = NatTrans::new(theta.dom().clone(), theta.cod().clone(), components);
        assert!(broken.validate().contains(ViolationKind::Naturality));
    }

    #[test]
    fn empty_category_is_valid_and_inert() {
        let empty = FinCategory::empty();
        assert!(empty.validate().is_valid());
        let id = FinFunctor::identity(&empty);
        assert!(id.validate().is_valid());
        assert!(NatTrans::identity(&id).validate().is_valid());
    }

    #[test]
    fn functor_validation_matches_brute_force_on_all_candidate_maps() {
        // Every (object map, arrow map) pair between walking arrows, accepted
        // iff it preserves endpoints, identities and composition.
        let cat2 = fixtures::walking_arrow();
        let objects = cat2.objects().to_vec();
        let arrows: Vec<ArrId> = cat2.arrows().keys().cloned().collect();
        let mut accepted = 0;
        for obj_choice in 0..objects.len().pow(objects.len() as u32) {
            let mut on_obj = BTreeMap::new();
            let mut rem = obj_choice;
            for c in &objects {
                on_obj.insert(c.clone(), objects[rem % objects.len()].clone());
                rem /= objects.len();
            }
            for arr_choice in 0..arrows.len().pow(arrows.len() as u32) {
                let mut on_arr = BTreeMap::new();
                let mut rem = arr_choice;
                for f in &arrows {
                    on_arr.insert(f.clone(), arrows[rem % arrows.len()].clone());
                    rem /= arrows.len();
                }
                let preserves_endpoints = cat2.arrows().iter().all(|(f, fa)| {
                    let img = cat2.arrow(&on_arr[f]).unwrap();
                    img.src == on_obj[&fa.src] && img.tgt == on_obj[&fa.tgt]
                });
                let preserves_identities = cat2
                    .identity_table()
                    .iter()
                    .all(|(c, i)| cat2.identity(&on_obj[c]) == Some(&on_arr[i]));
                let preserves_composition = cat2.composite_table().iter().all(|((g, f), gf)| {
                    cat2.compose(&on_arr[g], &on_arr[f]).ok() == Some(on_arr[gf].clone())
                });
                let lawful = preserves_endpoints && preserves_identities && preserves_composition;
                let functor = FinFunctor::new(cat2.clone(), cat2.clone(), on_obj.clone(), on_arr);
                assert_eq!(functor.validate().is_valid(), lawful);
                if lawful {
                    accepted += 1;
                }
            }
        }
        // The identity and the two constant functors.
        assert_eq!(accepted, 3);
    }

    #[test]
    fn equality_ignores_object_order() {
        let cat2 = fixtures::walking_arrow();
        let reversed = FinCategory::new(
            cat2.objects().iter().rev().cloned().collect(),
            cat2.arrows().clone(),
            cat2.composite_table().clone(),
            cat2.identity_table().clone(),
        );
        assert_eq!(cat2, reversed);
    }

    #[test]
    fn inverse_arrow_finds_inverses() {
        let cat2 = fixtures::walking_arrow();
        assert_eq!(
            cat2.inverse_arrow(&"id_a".into()),
            Some(ArrId::from("id_a"))
        );
        assert_eq!(cat2.inverse_arrow(&"f".into()), None);
    }
}
