//! Deterministic, seeded generation of categories, presheaves, open functors
//! and open natural transformations, plus exhaustive enumeration of natural
//! families on small instances.
//!
//! Nothing here is rejection-sampled into validity: every construction is a
//! category (or presheaf, or functor) by construction. Categories come from
//! free categories on random acyclic graphs, thin categories from reflexive
//! transitive closures, and products of smaller instances. Presheaves over
//! free categories extend arbitrary edge actions along paths; over anything
//! else they are coproducts of representables, whose actions precompose.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::elements::{
    element_arrow_id, element_object_id, ElementValue, Presheaf, PresheafMorphism,
};
use crate::fincat::{compose_functors, ArrId, FinCategory, FinFunctor, NatTrans, ObjId};
use crate::openfun::OpenFunctor;
use crate::opennat::OpenNatTrans;

/// How [`gen_category`] builds its instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CategoryStyle {
    /// Free category on a random acyclic graph; composition is path
    /// concatenation.
    DagFree,
    /// Thin category from the reflexive transitive closure of a random
    /// relation.
    Preorder,
    /// Product of two smaller instances.
    Product,
}

/// Parameters for the generators. Identical parameters give identical
/// output.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenParams {
    pub seed: u64,
    pub max_objects: usize,
    pub max_extra_arrows: usize,
    pub max_fiber: usize,
    pub style: CategoryStyle,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams {
            seed: 0,
            max_objects: 3,
            max_extra_arrows: 4,
            max_fiber: 3,
            style: CategoryStyle::DagFree,
        }
    }
}

impl GenParams {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    /// A derived parameter set with an independent stream.
    pub fn derive(&self, salt: u64) -> Self {
        GenParams {
            seed: mix(self.seed, salt),
            ..*self
        }
    }
}

/// SplitMix64 step, for deriving independent seeds.
pub fn mix(seed: u64, salt: u64) -> u64 {
    let mut z = seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random acyclic multigraph; edges always point from a lower to a higher
/// node index.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Dag {
    nodes: usize,
    edges: Vec<(usize, usize)>,
}

fn gen_dag(params: &GenParams) -> Dag {
    let mut rng = rng_for(mix(params.seed, 0x0da6));
    let nodes = rng.gen_range(1..=params.max_objects.max(1));
    let mut edges = Vec::new();
    if nodes >= 2 {
        for _ in 0..rng.gen_range(0..=params.max_extra_arrows) {
            let src = rng.gen_range(0..nodes - 1);
            let tgt = rng.gen_range(src + 1..nodes);
            edges.push((src, tgt));
        }
    }
    Dag { nodes, edges }
}

/// The free category on a DAG together with its path structure.
struct FreeCat {
    cat: FinCategory,
    dag: Dag,
    /// Every nonempty path, as edge indices in traversal order.
    paths: Vec<Vec<usize>>,
}

fn obj_id(i: usize) -> ObjId {
    ObjId::new(format!("o{i}"))
}

fn edge_id(k: usize) -> ArrId {
    ArrId::new(format!("e{k}"))
}

/// Path arrows are named by their edges in composition order, so the path
/// that traverses `e0` then `e2` is the arrow `e2.e0`.
fn path_id(path: &[usize]) -> ArrId {
    let names: Vec<String> = path.iter().rev().map(|k| format!("e{k}")).collect();
    ArrId::new(names.join("."))
}

fn free_cat_from(params: &GenParams) -> FreeCat {
    let dag = gen_dag(params);
    let mut paths: Vec<Vec<usize>> = (0..dag.edges.len()).map(|k| vec![k]).collect();
    let mut frontier = paths.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for path in &frontier {
            let end = dag.edges[*path.last().unwrap()].1;
            for (k, (src, _)) in dag.edges.iter().enumerate() {
                if *src == end {
                    let mut longer = path.clone();
                    longer.push(k);
                    next.push(longer);
                }
            }
        }
        paths.extend(next.iter().cloned());
        frontier = next;
    }
    let mut builder = FinCategory::builder();
    for i in 0..dag.nodes {
        builder = builder.object(obj_id(i));
    }
    for path in &paths {
        let src = dag.edges[path[0]].0;
        let tgt = dag.edges[*path.last().unwrap()].1;
        builder = builder.arrow(path_id(path), obj_id(src), obj_id(tgt));
    }
    for p in &paths {
        for q in &paths {
            if dag.edges[*p.last().unwrap()].1 == dag.edges[q[0]].0 {
                let mut joined = p.clone();
                joined.extend(q.iter().copied());
                builder = builder.compose(path_id(q), path_id(p), path_id(&joined));
            }
        }
    }
    FreeCat {
        cat: builder.build(),
        dag,
        paths,
    }
}

#[allow(clippy::needless_range_loop)] // index pairs into the closure matrix
fn preorder_category(params: &GenParams) -> FinCategory {
    let mut rng = rng_for(mix(params.seed, 0x09d3));
    let n = rng.gen_range(1..=params.max_objects.max(1));
    let mut reach = vec![vec![false; n]; n];
    for (i, row) in reach.iter_mut().enumerate() {
        row[i] = true;
    }
    if n >= 2 {
        for _ in 0..rng.gen_range(0..=params.max_extra_arrows) {
            let i = rng.gen_range(0..n);
            let j = rng.gen_range(0..n);
            reach[i][j] = true;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if reach[i][k] && reach[k][j] {
                    reach[i][j] = true;
                }
            }
        }
    }
    let rel_id = |i: usize, j: usize| ArrId::new(format!("r_o{i}_o{j}"));
    let arrow_for = |i: usize, j: usize| {
        if i == j {
            ArrId::new(format!("id_o{i}"))
        } else {
            rel_id(i, j)
        }
    };
    let mut builder = FinCategory::builder();
    for i in 0..n {
        builder = builder.object(obj_id(i));
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && reach[i][j] {
                builder = builder.arrow(rel_id(i, j), obj_id(i), obj_id(j));
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i == j || !reach[i][j] {
                continue;
            }
            for k in 0..n {
                if j == k || !reach[j][k] {
                    continue;
                }
                builder = builder.compose(rel_id(j, k), rel_id(i, j), arrow_for(i, k));
            }
        }
    }
    builder.build()
}

fn product_object(a: &ObjId, b: &ObjId) -> ObjId {
    ObjId::new(format!("{a}x{b}"))
}

fn product_category(a: &FinCategory, b: &FinCategory) -> FinCategory {
    let arrow_name = |f1: &ArrId, f2: &ArrId| {
        if a.is_identity(f1) && b.is_identity(f2) {
            let o1 = a.src(f1).expect("identity endpoints exist");
            let o2 = b.src(f2).expect("identity endpoints exist");
            ArrId::new(format!("id_{}", product_object(o1, o2)))
        } else {
            ArrId::new(format!("{f1}x{f2}"))
        }
    };
    let mut builder = FinCategory::builder();
    for o1 in a.objects() {
        for o2 in b.objects() {
            builder = builder.object(product_object(o1, o2));
        }
    }
    for (f1, arr1) in a.arrows() {
        for (f2, arr2) in b.arrows() {
            if a.is_identity(f1) && b.is_identity(f2) {
                continue; // added by the builder
            }
            builder = builder.arrow(
                arrow_name(f1, f2),
                product_object(&arr1.src, &arr2.src),
                product_object(&arr1.tgt, &arr2.tgt),
            );
        }
    }
    for ((g1, f1), c1) in a.composite_table() {
        for ((g2, f2), c2) in b.composite_table() {
            let g = arrow_name(g1, g2);
            let f = arrow_name(f1, f2);
            builder = builder.compose(g, f, arrow_name(c1, c2));
        }
    }
    builder.build()
}

/// Generate a finite category; valid by construction.
pub fn gen_category(params: &GenParams) -> FinCategory {
    match params.style {
        CategoryStyle::DagFree => free_cat_from(params).cat,
        CategoryStyle::Preorder => preorder_category(params),
        CategoryStyle::Product => {
            let small = GenParams {
                max_objects: 2,
                max_extra_arrows: 2,
                ..*params
            };
            let left = free_cat_from(&small.derive(0xa1)).cat;
            let right = preorder_category(&small.derive(0xb2));
            product_category(&left, &right)
        }
    }
}

fn free_action_presheaf(params: &GenParams, free: &FreeCat) -> Presheaf {
    let mut rng = rng_for(mix(params.seed, 0xf1be));
    let mut sizes: Vec<usize> = (0..free.dag.nodes)
        .map(|_| rng.gen_range(0..=params.max_fiber))
        .collect();
    // An empty source fiber admits no function out of a nonempty target
    // fiber, so emptiness flows forward along the edges.
    let mut edges = free.dag.edges.clone();
    edges.sort_unstable();
    for (src, tgt) in &edges {
        if sizes[*src] == 0 {
            sizes[*tgt] = 0;
        }
    }
    let fibers: Vec<Vec<ElementValue>> = sizes
        .iter()
        .map(|n| (0..*n).map(|i| ElementValue::atom(format!("e{i}"))).collect())
        .collect();
    let edge_actions: Vec<BTreeMap<ElementValue, ElementValue>> = free
        .dag
        .edges
        .iter()
        .map(|(src, tgt)| {
            fibers[*tgt]
                .iter()
                .map(|y| (y.clone(), fibers[*src][rng.gen_range(0..sizes[*src].max(1))].clone()))
                .collect()
        })
        .collect();
    let mut on_obj = BTreeMap::new();
    for (i, fiber) in fibers.iter().enumerate() {
        on_obj.insert(obj_id(i), fiber.clone());
    }
    let mut on_arr = BTreeMap::new();
    for (i, fiber) in fibers.iter().enumerate() {
        let identity = free.cat.identity(&obj_id(i)).expect("built with identities");
        on_arr.insert(
            identity.clone(),
            fiber.iter().map(|x| (x.clone(), x.clone())).collect(),
        );
    }
    for path in &free.paths {
        let tgt = free.dag.edges[*path.last().unwrap()].1;
        let mut action = BTreeMap::new();
        for y in &fibers[tgt] {
            let mut value = y.clone();
            for k in path.iter().rev() {
                value = edge_actions[*k][&value].clone();
            }
            action.insert(y.clone(), value);
        }
        on_arr.insert(path_id(path), action);
    }
    Presheaf::new(free.cat.clone(), on_obj, on_arr)
}

fn representable_coproduct(params: &GenParams, base: &FinCategory) -> Presheaf {
    let mut rng = rng_for(mix(params.seed, 0x4e94));
    let mut apexes: Vec<ObjId> = base.objects().to_vec();
    apexes.shuffle(&mut rng);
    let attempts = if apexes.is_empty() {
        0
    } else {
        rng.gen_range(0..=params.max_fiber.max(1))
    };
    let mut summands: Vec<ObjId> = Vec::new();
    let mut sizes: BTreeMap<ObjId, usize> = base.objects().iter().map(|c| (c.clone(), 0)).collect();
    for s in 0..attempts {
        let apex = apexes[s % apexes.len()].clone();
        let grown: BTreeMap<ObjId, usize> = sizes
            .iter()
            .map(|(c, n)| (c.clone(), n + base.hom(c, &apex).len()))
            .collect();
        if grown.values().any(|n| *n > params.max_fiber) {
            break;
        }
        sizes = grown;
        summands.push(apex);
    }
    let element = |s: usize, a: &ArrId| ElementValue::atom(format!("h{s}.{a}"));
    let mut on_obj = BTreeMap::new();
    for c in base.objects() {
        let mut fiber = Vec::new();
        for (s, apex) in summands.iter().enumerate() {
            for a in base.hom(c, apex) {
                fiber.push(element(s, &a));
            }
        }
        on_obj.insert(c.clone(), fiber);
    }
    let mut on_arr = BTreeMap::new();
    for (f, arr) in base.arrows() {
        let mut action = BTreeMap::new();
        for (s, apex) in summands.iter().enumerate() {
            for a in base.hom(&arr.tgt, apex) {
                let restricted = base.compose(&a, f).expect("valid base category");
                action.insert(element(s, &a), element(s, &restricted));
            }
        }
        on_arr.insert(f.clone(), action);
    }
    Presheaf::new(base.clone(), on_obj, on_arr)
}

/// Generate a presheaf over `base`; functorial by construction.
///
/// When `base` is the free category these parameters generate, the fiber
/// sets and edge actions are arbitrary and extended along paths; otherwise
/// the presheaf is a coproduct of representables.
pub fn gen_presheaf(params: &GenParams, base: &FinCategory) -> Presheaf {
    if params.style == CategoryStyle::DagFree {
        let free = free_cat_from(params);
        if &free.cat == base {
            return free_action_presheaf(params, &free);
        }
    }
    representable_coproduct(params, base)
}

/// Generate a classical functor: the constant functor at a random codomain
/// object, or the identity when the two categories coincide.
pub fn gen_functor(params: &GenParams, dom: &FinCategory, cod: &FinCategory) -> FinFunctor {
    let mut rng = rng_for(mix(params.seed, 0xfc70));
    if dom == cod && rng.gen_bool(0.5) {
        return FinFunctor::identity(dom);
    }
    if cod.objects().is_empty() {
        return FinFunctor::new(dom.clone(), cod.clone(), BTreeMap::new(), BTreeMap::new());
    }
    let at = cod.objects()[rng.gen_range(0..cod.objects().len())].clone();
    FinFunctor::constant(dom, cod, &at).expect("object drawn from the codomain")
}

fn empty_presheaf(base: &FinCategory) -> Presheaf {
    Presheaf::new(
        base.clone(),
        base.objects().iter().map(|c| (c.clone(), Vec::new())).collect(),
        base.arrows().keys().map(|f| (f.clone(), BTreeMap::new())).collect(),
    )
}

fn constant_beta(alpha: &Presheaf, cod: &FinCategory, at: &ObjId) -> FinFunctor {
    let elements = alpha.category_of_elements();
    FinFunctor::constant(&elements, cod, at).expect("object drawn from the codomain")
}

/// Freely choose images for the generating edges of the category of elements
/// of a presheaf over a free category, then extend along paths.
fn free_beta(
    rng: &mut ChaCha8Rng,
    free: &FreeCat,
    alpha: &Presheaf,
    cod: &FinCategory,
) -> Option<FinFunctor> {
    let elements = alpha.category_of_elements();
    'attempt: for _ in 0..8 {
        let mut obj_assign: BTreeMap<ObjId, ObjId> = BTreeMap::new();
        for el in elements.objects() {
            let at = cod.objects()[rng.gen_range(0..cod.objects().len())].clone();
            obj_assign.insert(el.clone(), at);
        }
        // Images of generating edges, keyed by (edge index, target element).
        let mut edge_img: BTreeMap<(usize, ElementValue), ArrId> = BTreeMap::new();
        for (k, (src, tgt)) in free.dag.edges.iter().enumerate() {
            let action = alpha.action(&edge_id(k)).expect("presheaf over this dag");
            for y in alpha.fiber(&obj_id(*tgt)) {
                let x = &action[y];
                let from = &obj_assign[&element_object_id(&obj_id(*src), x)];
                let to = &obj_assign[&element_object_id(&obj_id(*tgt), y)];
                let hom = cod.hom(from, to);
                if hom.is_empty() {
                    continue 'attempt;
                }
                edge_img.insert((k, y.clone()), hom[rng.gen_range(0..hom.len())].clone());
            }
        }
        let mut on_arr = BTreeMap::new();
        for c in (0..free.dag.nodes).map(obj_id) {
            let identity = free.cat.identity(&c).expect("built with identities");
            for x in alpha.fiber(&c) {
                let img_obj = &obj_assign[&element_object_id(&c, x)];
                on_arr.insert(
                    element_arrow_id(identity, x),
                    cod.identity(img_obj).expect("valid codomain").clone(),
                );
            }
        }
        for path in free.paths.iter() {
            let tgt = free.dag.edges[*path.last().unwrap()].1;
            for y in alpha.fiber(&obj_id(tgt)) {
                // Walk the path backwards, restricting the element as we go,
                // and compose the chosen edge images.
                let mut pieces = Vec::new();
                let mut element = y.clone();
                for k in path.iter().rev() {
                    pieces.push(edge_img[&(*k, element.clone())].clone());
                    element = alpha
                        .action(&edge_id(*k))
                        .expect("presheaf over this dag")[&element]
                        .clone();
                }
                let mut composed = pieces.pop().expect("paths are nonempty");
                for piece in pieces.into_iter().rev() {
                    composed = cod.compose(&piece, &composed).expect("valid codomain");
                }
                on_arr.insert(element_arrow_id(&path_id(path), y), composed);
            }
        }
        return Some(FinFunctor::new(elements, cod.clone(), obj_assign, on_arr));
    }
    None
}

/// Generate an open functor from `dom` to `cod`; valid by construction.
pub fn gen_open_functor(
    params: &GenParams,
    dom: &FinCategory,
    cod: &FinCategory,
) -> OpenFunctor {
    let mut rng = rng_for(mix(params.seed, 0x0f0f));
    if cod.objects().is_empty() {
        let alpha = empty_presheaf(dom);
        let beta = FinFunctor::new(
            alpha.category_of_elements(),
            cod.clone(),
            BTreeMap::new(),
            BTreeMap::new(),
        );
        return OpenFunctor::new(dom.clone(), cod.clone(), alpha, beta);
    }
    let roll = rng.gen_range(0..10u32);
    if roll >= 8 {
        return OpenFunctor::from_classical(&gen_functor(&params.derive(0x11), dom, cod));
    }
    let alpha = gen_presheaf(params, dom);
    if roll < 6 && params.style == CategoryStyle::DagFree {
        let free = free_cat_from(params);
        if &free.cat == dom {
            if let Some(beta) = free_beta(&mut rng, &free, &alpha, cod) {
                return OpenFunctor::new(dom.clone(), cod.clone(), alpha, beta);
            }
        }
    }
    let at = cod.objects()[rng.gen_range(0..cod.objects().len())].clone();
    let beta = constant_beta(&alpha, cod, &at);
    OpenFunctor::new(dom.clone(), cod.clone(), alpha, beta)
}

/// All functions from the set `dom` into the set `cod`, in lexicographic
/// order of choices; capped.
fn enumerate_functions(
    dom: &[ElementValue],
    cod: &[ElementValue],
    cap: usize,
) -> Vec<BTreeMap<ElementValue, ElementValue>> {
    if dom.is_empty() {
        return vec![BTreeMap::new()];
    }
    if cod.is_empty() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut choice = vec![0usize; dom.len()];
    loop {
        out.push(
            dom.iter()
                .zip(&choice)
                .map(|(x, i)| (x.clone(), cod[*i].clone()))
                .collect(),
        );
        if out.len() >= cap {
            return out;
        }
        let mut pos = 0;
        loop {
            choice[pos] += 1;
            if choice[pos] < cod.len() {
                break;
            }
            choice[pos] = 0;
            pos += 1;
            if pos == dom.len() {
                return out;
            }
        }
    }
}

/// All presheaf morphisms from `dom` to `cod`, by backtracking over objects
/// with per-arrow naturality pruning; capped.
pub fn enumerate_presheaf_morphisms(
    dom: &Presheaf,
    cod: &Presheaf,
    cap: usize,
) -> Vec<PresheafMorphism> {
    if dom.base() != cod.base() {
        return Vec::new();
    }
    let base = dom.base();
    let objects: Vec<ObjId> = base.objects().to_vec();
    let mut out = Vec::new();
    let mut stack: Vec<BTreeMap<ObjId, BTreeMap<ElementValue, ElementValue>>> =
        vec![BTreeMap::new()];
    while let Some(partial) = stack.pop() {
        if out.len() >= cap {
            break;
        }
        let Some(next) = objects.iter().find(|c| !partial.contains_key(*c)) else {
            out.push(PresheafMorphism::new(
                dom.clone(),
                cod.clone(),
                partial.clone(),
            ));
            continue;
        };
        let candidates = enumerate_functions(cod.fiber(next), dom.fiber(next), 64);
        // Reverse so the stack pops candidates in lexicographic order.
        for candidate in candidates.into_iter().rev() {
            let mut extended = partial.clone();
            extended.insert(next.clone(), candidate);
            if presheaf_naturality_ok(dom, cod, &extended) {
                stack.push(extended);
            }
        }
    }
    out
}

fn presheaf_naturality_ok(
    dom: &Presheaf,
    cod: &Presheaf,
    components: &BTreeMap<ObjId, BTreeMap<ElementValue, ElementValue>>,
) -> bool {
    for (f, arr) in dom.base().arrows() {
        let (Some(at_src), Some(at_tgt)) = (components.get(&arr.src), components.get(&arr.tgt))
        else {
            continue;
        };
        for y in cod.fiber(&arr.tgt) {
            let via_dom = dom.restrict(f, &at_tgt[y]);
            let via_cod = cod.restrict(f, y).map(|y_src| &at_src[y_src]);
            match (via_dom, via_cod) {
                (Ok(l), Ok(r)) if l == r => {}
                _ => return false,
            }
        }
    }
    true
}

/// All natural transformations between two parallel functors, by
/// backtracking over objects with per-arrow naturality pruning; capped.
pub fn enumerate_nat_trans(dom: &FinFunctor, cod: &FinFunctor, cap: usize) -> Vec<NatTrans> {
    if dom.dom() != cod.dom() || dom.cod() != cod.cod() {
        return Vec::new();
    }
    let base = dom.dom();
    let target = dom.cod();
    let objects: Vec<ObjId> = base.objects().to_vec();
    let mut out = Vec::new();
    let mut stack: Vec<BTreeMap<ObjId, ArrId>> = vec![BTreeMap::new()];
    while let Some(partial) = stack.pop() {
        if out.len() >= cap {
            break;
        }
        let Some(next) = objects.iter().find(|c| !partial.contains_key(*c)) else {
            out.push(NatTrans::new(dom.clone(), cod.clone(), partial.clone()));
            continue;
        };
        let (Ok(from), Ok(to)) = (dom.obj_image(next), cod.obj_image(next)) else {
            continue;
        };
        for candidate in target.hom(from, to).into_iter().rev() {
            let mut extended = partial.clone();
            extended.insert(next.clone(), candidate);
            if nat_trans_naturality_ok(dom, cod, &extended) {
                stack.push(extended);
            }
        }
    }
    out
}

fn nat_trans_naturality_ok(
    dom: &FinFunctor,
    cod: &FinFunctor,
    components: &BTreeMap<ObjId, ArrId>,
) -> bool {
    let base = dom.dom();
    let target = dom.cod();
    for (f, arr) in base.arrows() {
        let (Some(at_src), Some(at_tgt)) = (components.get(&arr.src), components.get(&arr.tgt))
        else {
            continue;
        };
        let (Ok(ff), Ok(gf)) = (dom.arr_image(f), cod.arr_image(f)) else {
            return false;
        };
        match (target.compose(gf, at_src), target.compose(at_tgt, ff)) {
            (Ok(l), Ok(r)) if l == r => {}
            _ => return false,
        }
    }
    true
}

/// All open natural transformations between two parallel open functors:
/// enumerate natural alpha parts, then natural beta parts over each. The
/// identity is always listed first when the two open functors coincide.
pub fn enumerate_open_nats(
    dom: &OpenFunctor,
    cod: &OpenFunctor,
    cap: usize,
) -> Vec<OpenNatTrans> {
    if dom.dom() != cod.dom() || dom.cod() != cod.cod() {
        return Vec::new();
    }
    let mut out = Vec::new();
    if dom == cod {
        out.push(OpenNatTrans::identity(dom));
    }
    for alpha in enumerate_presheaf_morphisms(dom.alpha(), cod.alpha(), cap.max(4) * 2) {
        if out.len() >= cap {
            break;
        }
        let Ok(beta_dom) = compose_functors(dom.beta(), &alpha.elements_functor()) else {
            continue;
        };
        for beta in enumerate_nat_trans(&beta_dom, cod.beta(), cap) {
            let candidate = OpenNatTrans::new(dom.clone(), cod.clone(), alpha.clone(), beta);
            if !out.contains(&candidate) {
                out.push(candidate);
            }
            if out.len() >= cap {
                break;
            }
        }
    }
    out
}

/// Default cap on enumerated open natural transformations.
pub const DEFAULT_ONT_CAP: usize = 16;

/// Generate (by exhaustive enumeration) the open natural transformations
/// between two open functors, up to [`DEFAULT_ONT_CAP`]. The sequence is
/// empty when none exists.
pub fn gen_open_nat(
    _params: &GenParams,
    dom: &OpenFunctor,
    cod: &OpenFunctor,
) -> Vec<OpenNatTrans> {
    enumerate_open_nats(dom, cod, DEFAULT_ONT_CAP)
}
