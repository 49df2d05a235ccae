//! The canonical on-disk document format.
//!
//! Every artifact is one JSON document with a `format_version`, a `kind` tag
//! and a `payload`. Serialization is canonical: object keys come out sorted,
//! fiber element lists keep their stored order, and function tables are
//! sorted by their source element. Elements render as strings for atoms,
//! the reserved token `*` for the star, and two-element arrays for pairs.
//!
//! Parsing is strict: unknown fields, duplicate identifiers and reserved
//! atom labels are rejected up front, while the semantic axioms stay with
//! the `validate_*` operations.

use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;

use serde::de::{self, MapAccess, SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::elements::{ElementValue, Presheaf, PresheafMorphism};
use crate::error::{Error, Result};
use crate::fincat::{ArrId, Arrow, FinCategory, FinFunctor, NatTrans, ObjId};
use crate::harness::generate::{CategoryStyle, GenParams};
use crate::openfun::OpenFunctor;
use crate::opennat::OpenNatTrans;

pub const FORMAT_VERSION: u32 = 1;

/// A parsed top-level document.
#[derive(Clone, Debug, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub enum Document {
    Category(FinCategory),
    Presheaf(Presheaf),
    Functor(FinFunctor),
    NatTrans(NatTrans),
    OpenFunctor(OpenFunctor),
    OpenNatTrans(OpenNatTrans),
    LawRequest(LawRequest),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Category(_) => "category",
            Document::Presheaf(_) => "presheaf",
            Document::Functor(_) => "functor",
            Document::NatTrans(_) => "nattrans",
            Document::OpenFunctor(_) => "open_functor",
            Document::OpenNatTrans(_) => "open_nat_trans",
            Document::LawRequest(_) => "law_request",
        }
    }
}

/// A stored request for a law corpus run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LawRequest {
    pub law: String,
    pub seed: u64,
    pub count: usize,
    pub max_objects: usize,
    pub max_extra_arrows: usize,
    pub max_fiber: usize,
}

impl LawRequest {
    pub fn gen_params(&self) -> GenParams {
        GenParams {
            seed: self.seed,
            max_objects: self.max_objects,
            max_extra_arrows: self.max_extra_arrows,
            max_fiber: self.max_fiber,
            style: CategoryStyle::DagFree,
        }
    }
}

impl Serialize for ElementValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ElementValue::Atom(label) => serializer.serialize_str(label),
            ElementValue::Star => serializer.serialize_str("*"),
            ElementValue::Pair(l, r) => {
                let mut seq = serializer.serialize_seq(Some(2))?;
                seq.serialize_element(l)?;
                seq.serialize_element(r)?;
                seq.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for ElementValue {
    fn deserialize<D: Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        struct ElementVisitor;

        impl<'de> Visitor<'de> for ElementVisitor {
            type Value = ElementValue;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an atom label, \"*\", or a two-element array")
            }

            fn visit_str<E: de::Error>(self, text: &str) -> std::result::Result<Self::Value, E> {
                if text == "*" {
                    return Ok(ElementValue::Star);
                }
                match ElementValue::atom_label_error(text) {
                    None => Ok(ElementValue::Atom(text.to_owned())),
                    Some(reason) => Err(E::custom(reason)),
                }
            }

            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<Self::Value, A::Error> {
                let left: ElementValue = seq
                    .next_element()?
                    .ok_or_else(|| de::Error::custom("a pair needs two coordinates"))?;
                let right: ElementValue = seq
                    .next_element()?
                    .ok_or_else(|| de::Error::custom("a pair needs two coordinates"))?;
                if seq.next_element::<ElementValue>()?.is_some() {
                    return Err(de::Error::custom("a pair has exactly two coordinates"));
                }
                Ok(ElementValue::pair(left, right))
            }
        }

        deserializer.deserialize_any(ElementVisitor)
    }
}

/// Deserialize a JSON object into a map, rejecting duplicate keys.
fn unique_map<'de, D, K, V>(deserializer: D) -> std::result::Result<BTreeMap<K, V>, D::Error>
where
    D: Deserializer<'de>,
    K: Deserialize<'de> + Ord + fmt::Display,
    V: Deserialize<'de>,
{
    struct UniqueMapVisitor<K, V>(PhantomData<(K, V)>);

    impl<'de, K, V> Visitor<'de> for UniqueMapVisitor<K, V>
    where
        K: Deserialize<'de> + Ord + fmt::Display,
        V: Deserialize<'de>,
    {
        type Value = BTreeMap<K, V>;

        fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            f.write_str("a map with unique keys")
        }

        fn visit_map<A: MapAccess<'de>>(
            self,
            mut access: A,
        ) -> std::result::Result<Self::Value, A::Error> {
            let mut map = BTreeMap::new();
            while let Some((key, value)) = access.next_entry::<K, V>()? {
                if map.contains_key(&key) {
                    return Err(de::Error::custom(format!("duplicate id `{key}`")));
                }
                map.insert(key, value);
            }
            Ok(map)
        }
    }

    deserializer.deserialize_map(UniqueMapVisitor(PhantomData))
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArrowDoc {
    src: String,
    tgt: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CategoryDoc {
    objects: Vec<String>,
    #[serde(deserialize_with = "unique_map")]
    arrows: BTreeMap<String, ArrowDoc>,
    compose: Vec<(String, String, String)>,
    #[serde(deserialize_with = "unique_map")]
    identities: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PresheafDoc {
    base: CategoryDoc,
    #[serde(deserialize_with = "unique_map")]
    on_obj: BTreeMap<String, Vec<ElementValue>>,
    #[serde(deserialize_with = "unique_map")]
    on_arr: BTreeMap<String, Vec<(ElementValue, ElementValue)>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FunctorDoc {
    dom: CategoryDoc,
    cod: CategoryDoc,
    #[serde(deserialize_with = "unique_map")]
    on_obj: BTreeMap<String, String>,
    #[serde(deserialize_with = "unique_map")]
    on_arr: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct NatTransDoc {
    dom: FunctorDoc,
    cod: FunctorDoc,
    #[serde(deserialize_with = "unique_map")]
    components: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MorphismDoc {
    dom: PresheafDoc,
    cod: PresheafDoc,
    #[serde(deserialize_with = "unique_map")]
    components_po: BTreeMap<String, Vec<(ElementValue, ElementValue)>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct OpenFunctorDoc {
    dom: CategoryDoc,
    cod: CategoryDoc,
    alpha: PresheafDoc,
    beta: FunctorDoc,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct OpenNatTransDoc {
    dom: OpenFunctorDoc,
    cod: OpenFunctorDoc,
    alpha: MorphismDoc,
    beta: NatTransDoc,
}

fn category_doc(c: &FinCategory) -> CategoryDoc {
    CategoryDoc {
        objects: c.objects().iter().map(ObjId::to_string).collect(),
        arrows: c
            .arrows()
            .iter()
            .map(|(f, arr)| {
                (
                    f.to_string(),
                    ArrowDoc {
                        src: arr.src.to_string(),
                        tgt: arr.tgt.to_string(),
                    },
                )
            })
            .collect(),
        compose: c
            .composite_table()
            .iter()
            .map(|((g, f), to)| (g.to_string(), f.to_string(), to.to_string()))
            .collect(),
        identities: c
            .identity_table()
            .iter()
            .map(|(o, i)| (o.to_string(), i.to_string()))
            .collect(),
    }
}

fn category_from(doc: CategoryDoc) -> Result<FinCategory> {
    let mut composites = BTreeMap::new();
    for (g, f, to) in doc.compose {
        let key = (ArrId::new(g), ArrId::new(f));
        if composites.contains_key(&key) {
            return Err(Error::Schema(format!(
                "duplicate compose entry ({}, {})",
                key.0, key.1
            )));
        }
        composites.insert(key, ArrId::new(to));
    }
    Ok(FinCategory::new(
        doc.objects.into_iter().map(ObjId::new).collect(),
        doc.arrows
            .into_iter()
            .map(|(f, arr)| (ArrId::new(f), Arrow::new(arr.src, arr.tgt)))
            .collect(),
        composites,
        doc.identities
            .into_iter()
            .map(|(o, i)| (ObjId::new(o), ArrId::new(i)))
            .collect(),
    ))
}

fn function_doc(map: &BTreeMap<ElementValue, ElementValue>) -> Vec<(ElementValue, ElementValue)> {
    map.iter().map(|(k, v)| (k.clone(), v.clone())).collect()
}

fn function_from(
    label: &str,
    pairs: Vec<(ElementValue, ElementValue)>,
) -> Result<BTreeMap<ElementValue, ElementValue>> {
    let mut map = BTreeMap::new();
    for (from, to) in pairs {
        if map.contains_key(&from) {
            return Err(Error::Schema(format!(
                "duplicate mapping for `{from}` in {label}"
            )));
        }
        map.insert(from, to);
    }
    Ok(map)
}

fn presheaf_doc(p: &Presheaf) -> PresheafDoc {
    PresheafDoc {
        base: category_doc(p.base()),
        on_obj: p
            .fibers()
            .iter()
            .map(|(c, fiber)| (c.to_string(), fiber.clone()))
            .collect(),
        on_arr: p
            .actions()
            .iter()
            .map(|(f, action)| (f.to_string(), function_doc(action)))
            .collect(),
    }
}

fn presheaf_from(doc: PresheafDoc) -> Result<Presheaf> {
    let base = category_from(doc.base)?;
    let mut on_arr = BTreeMap::new();
    for (f, pairs) in doc.on_arr {
        let action = function_from(&format!("the action of `{f}`"), pairs)?;
        on_arr.insert(ArrId::new(f), action);
    }
    Ok(Presheaf::new(
        base,
        doc.on_obj
            .into_iter()
            .map(|(c, fiber)| (ObjId::new(c), fiber))
            .collect(),
        on_arr,
    ))
}

fn functor_doc(f: &FinFunctor) -> FunctorDoc {
    FunctorDoc {
        dom: category_doc(f.dom()),
        cod: category_doc(f.cod()),
        on_obj: f
            .object_map()
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect(),
        on_arr: f
            .arrow_map()
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect(),
    }
}

fn functor_from(doc: FunctorDoc) -> Result<FinFunctor> {
    Ok(FinFunctor::new(
        category_from(doc.dom)?,
        category_from(doc.cod)?,
        doc.on_obj
            .into_iter()
            .map(|(a, b)| (ObjId::new(a), ObjId::new(b)))
            .collect(),
        doc.on_arr
            .into_iter()
            .map(|(a, b)| (ArrId::new(a), ArrId::new(b)))
            .collect(),
    ))
}

fn nat_trans_doc(t: &NatTrans) -> NatTransDoc {
    NatTransDoc {
        dom: functor_doc(t.dom()),
        cod: functor_doc(t.cod()),
        components: t
            .components()
            .iter()
            .map(|(c, a)| (c.to_string(), a.to_string()))
            .collect(),
    }
}

fn nat_trans_from(doc: NatTransDoc) -> Result<NatTrans> {
    Ok(NatTrans::new(
        functor_from(doc.dom)?,
        functor_from(doc.cod)?,
        doc.components
            .into_iter()
            .map(|(c, a)| (ObjId::new(c), ArrId::new(a)))
            .collect(),
    ))
}

fn morphism_doc(m: &PresheafMorphism) -> MorphismDoc {
    MorphismDoc {
        dom: presheaf_doc(m.dom()),
        cod: presheaf_doc(m.cod()),
        components_po: m
            .components_po()
            .iter()
            .map(|(c, comp)| (c.to_string(), function_doc(comp)))
            .collect(),
    }
}

fn morphism_from(doc: MorphismDoc) -> Result<PresheafMorphism> {
    let mut components_po = BTreeMap::new();
    for (c, pairs) in doc.components_po {
        let comp = function_from(&format!("the component at `{c}`"), pairs)?;
        components_po.insert(ObjId::new(c), comp);
    }
    Ok(PresheafMorphism::new(
        presheaf_from(doc.dom)?,
        presheaf_from(doc.cod)?,
        components_po,
    ))
}

fn open_functor_doc(f: &OpenFunctor) -> OpenFunctorDoc {
    OpenFunctorDoc {
        dom: category_doc(f.dom()),
        cod: category_doc(f.cod()),
        alpha: presheaf_doc(f.alpha()),
        beta: functor_doc(f.beta()),
    }
}

fn open_functor_from(doc: OpenFunctorDoc) -> Result<OpenFunctor> {
    Ok(OpenFunctor::new(
        category_from(doc.dom)?,
        category_from(doc.cod)?,
        presheaf_from(doc.alpha)?,
        functor_from(doc.beta)?,
    ))
}

fn open_nat_trans_doc(t: &OpenNatTrans) -> OpenNatTransDoc {
    OpenNatTransDoc {
        dom: open_functor_doc(t.dom()),
        cod: open_functor_doc(t.cod()),
        alpha: morphism_doc(t.alpha()),
        beta: nat_trans_doc(t.beta()),
    }
}

fn open_nat_trans_from(doc: OpenNatTransDoc) -> Result<OpenNatTrans> {
    Ok(OpenNatTrans::new(
        open_functor_from(doc.dom)?,
        open_functor_from(doc.cod)?,
        morphism_from(doc.alpha)?,
        nat_trans_from(doc.beta)?,
    ))
}

/// Serialize to the canonical textual form: sorted keys, two-space indent,
/// trailing newline.
pub fn serialize(doc: &Document) -> String {
    let payload = match doc {
        Document::Category(c) => serde_json::to_value(category_doc(c)),
        Document::Presheaf(p) => serde_json::to_value(presheaf_doc(p)),
        Document::Functor(f) => serde_json::to_value(functor_doc(f)),
        Document::NatTrans(t) => serde_json::to_value(nat_trans_doc(t)),
        Document::OpenFunctor(f) => serde_json::to_value(open_functor_doc(f)),
        Document::OpenNatTrans(t) => serde_json::to_value(open_nat_trans_doc(t)),
        Document::LawRequest(r) => serde_json::to_value(r),
    }
    .expect("documents always serialize");
    let envelope = serde_json::json!({
        "format_version": FORMAT_VERSION,
        "kind": doc.kind(),
        "payload": payload,
    });
    let mut text = serde_json::to_string_pretty(&envelope).expect("documents always serialize");
    text.push('\n');
    text
}

#[derive(Deserialize)]
struct Header {
    format_version: u32,
    kind: String,
}

#[derive(Deserialize)]
struct Envelope<T> {
    #[allow(dead_code)]
    format_version: u32,
    #[allow(dead_code)]
    kind: String,
    payload: T,
}

fn payload<'de, T: Deserialize<'de>>(text: &'de str) -> Result<T> {
    Ok(serde_json::from_str::<Envelope<T>>(text)?.payload)
}

/// Parse a document, with positions for syntax errors and schema errors for
/// duplicate identifiers, reserved labels and unknown kinds or versions.
pub fn parse(text: &str) -> Result<Document> {
    let header: Header = serde_json::from_str(text)?;
    if header.format_version != FORMAT_VERSION {
        return Err(Error::Schema(format!(
            "unsupported format_version {} (expected {FORMAT_VERSION})",
            header.format_version
        )));
    }
    match header.kind.as_str() {
        "category" => category_from(payload(text)?).map(Document::Category),
        "presheaf" => presheaf_from(payload(text)?).map(Document::Presheaf),
        "functor" => functor_from(payload(text)?).map(Document::Functor),
        "nattrans" => nat_trans_from(payload(text)?).map(Document::NatTrans),
        "open_functor" => open_functor_from(payload(text)?).map(Document::OpenFunctor),
        "open_nat_trans" => open_nat_trans_from(payload(text)?).map(Document::OpenNatTrans),
        "law_request" => Ok(Document::LawRequest(payload(text)?)),
        other => Err(Error::Schema(format!("unknown document kind `{other}`"))),
    }
}
