//! The on-disk interchange format.
//!
//! A document is a JSON object with a `type` tag and, depending on the kind:
//! `elements` (carrier, in carrier order), `order` (all related pairs),
//! `relation` (frames), `f`/`g` (algebras, element-to-element maps), and
//! `signature` (algebras). Serialization is canonical: object keys sorted,
//! pair lists sorted by name, so equal objects produce identical bytes and
//! golden files diff cleanly. Parsing reconstructs and fully validates
//! exactly one toolkit object.

use crate::bits::{BitMatrix, Subset};
use crate::frame::{FrameError, GCFrame};
use crate::galois::{GaloisError, GaloisPair};
use crate::lattice::{FiniteLattice, LatticeError};
use crate::order::{OrderError, QuasiOrder};
use crate::Signature;
use serde_json::{json, Map, Value};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DocError {
    #[error("invalid document: {0}")]
    Malformed(String),
    #[error("poset document is not antisymmetric: {0} and {1} are mutually related")]
    NotAntisymmetric(String, String),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Frame(#[from] FrameError),
    #[error(transparent)]
    Galois(#[from] GaloisError),
}

/// Any object the toolkit reads or writes.
#[derive(Debug, Clone, PartialEq)]
pub enum Object {
    Poset(QuasiOrder),
    Lattice(FiniteLattice),
    Frame(GCFrame),
    Algebra { pair: GaloisPair, signature: Signature },
}

impl Object {
    pub fn type_tag(&self) -> &'static str {
        match self {
            Object::Poset(_) => "poset",
            Object::Lattice(_) => "lattice",
            Object::Frame(_) => "frame",
            Object::Algebra { .. } => "algebra",
        }
    }
}

fn pair_list(names: &[String], pairs: &[(usize, usize)]) -> Value {
    let mut out: Vec<(String, String)> =
        pairs.iter().map(|&(x, y)| (names[x].clone(), names[y].clone())).collect();
    out.sort();
    Value::Array(out.into_iter().map(|(x, y)| json!([x, y])).collect())
}

fn map_object(names: &[String], map: &[usize]) -> Value {
    // serde_json's default map is a BTreeMap, so keys serialize sorted.
    let mut obj = Map::new();
    for (x, &y) in map.iter().enumerate() {
        obj.insert(names[x].clone(), Value::String(names[y].clone()));
    }
    Value::Object(obj)
}

/// Canonical text of an object: sorted keys, sorted pairs, trailing newline.
pub fn serialize(obj: &Object) -> String {
    let mut root = Map::new();
    match obj {
        Object::Poset(q) => {
            root.insert("type".into(), json!("poset"));
            root.insert("elements".into(), json!(q.carrier()));
            root.insert("order".into(), pair_list(q.carrier(), &q.relation_pairs()));
        }
        Object::Lattice(l) => {
            root.insert("type".into(), json!("lattice"));
            root.insert("elements".into(), json!(l.carrier()));
            root.insert("order".into(), pair_list(l.carrier(), &l.relation_pairs()));
        }
        Object::Frame(f) => {
            let names = f.order().carrier();
            root.insert("type".into(), json!("frame"));
            root.insert("elements".into(), json!(names));
            root.insert("order".into(), pair_list(names, &f.order().relation_pairs()));
            root.insert("relation".into(), pair_list(names, &f.relation_pairs()));
        }
        Object::Algebra { pair, signature } => {
            let l = pair.lattice();
            root.insert("type".into(), json!("algebra"));
            root.insert("signature".into(), json!(signature.to_string()));
            root.insert("elements".into(), json!(l.carrier()));
            root.insert("order".into(), pair_list(l.carrier(), &l.relation_pairs()));
            root.insert("f".into(), map_object(l.carrier(), pair.f()));
            root.insert("g".into(), map_object(l.carrier(), pair.g()));
        }
    }
    let mut text = serde_json::to_string_pretty(&Value::Object(root)).expect("valid json value");
    text.push('\n');
    text
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value, DocError> {
    obj.get(key).ok_or_else(|| DocError::Malformed(format!("missing field '{key}'")))
}

fn string_list(value: &Value, what: &str) -> Result<Vec<String>, DocError> {
    value
        .as_array()
        .ok_or_else(|| DocError::Malformed(format!("{what} must be an array")))?
        .iter()
        .map(|v| {
            v.as_str()
                .map(str::to_string)
                .ok_or_else(|| DocError::Malformed(format!("{what} entries must be strings")))
        })
        .collect()
}

fn index_pairs(
    value: &Value,
    names: &[String],
    what: &str,
) -> Result<Vec<(usize, usize)>, DocError> {
    let lookup = |name: &str| {
        names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| DocError::Malformed(format!("{what} mentions unknown element {name}")))
    };
    value
        .as_array()
        .ok_or_else(|| DocError::Malformed(format!("{what} must be an array of pairs")))?
        .iter()
        .map(|p| {
            let pair = p
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| DocError::Malformed(format!("{what} entries must be pairs")))?;
            let x = pair[0]
                .as_str()
                .ok_or_else(|| DocError::Malformed(format!("{what} entries must be strings")))?;
            let y = pair[1]
                .as_str()
                .ok_or_else(|| DocError::Malformed(format!("{what} entries must be strings")))?;
            Ok((lookup(x)?, lookup(y)?))
        })
        .collect()
}

fn index_map(value: &Value, names: &[String], what: &str) -> Result<Vec<usize>, DocError> {
    let obj = value
        .as_object()
        .ok_or_else(|| DocError::Malformed(format!("{what} must be an object")))?;
    let mut out = Vec::with_capacity(names.len());
    for name in names {
        let target = obj
            .get(name)
            .ok_or_else(|| DocError::Malformed(format!("{what} misses element {name}")))?
            .as_str()
            .ok_or_else(|| DocError::Malformed(format!("{what} values must be strings")))?;
        out.push(names.iter().position(|n| n == target).ok_or_else(|| {
            DocError::Malformed(format!("{what} maps {name} to unknown element {target}"))
        })?);
    }
    if obj.len() != names.len() {
        return Err(DocError::Malformed(format!(
            "{what} has {} entries for {} elements",
            obj.len(),
            names.len()
        )));
    }
    Ok(out)
}

fn quasiorder_from(doc: &Map<String, Value>) -> Result<QuasiOrder, DocError> {
    let elements = string_list(field(doc, "elements")?, "elements")?;
    let pairs = index_pairs(field(doc, "order")?, &elements, "order")?;
    Ok(QuasiOrder::from_pairs(elements, &pairs)?)
}

/// Parses and validates a document into exactly one toolkit object.
pub fn parse(text: &str) -> Result<Object, DocError> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| DocError::Malformed(e.to_string()))?;
    let doc = value
        .as_object()
        .ok_or_else(|| DocError::Malformed("document must be a JSON object".into()))?;
    let tag = field(doc, "type")?
        .as_str()
        .ok_or_else(|| DocError::Malformed("'type' must be a string".into()))?;
    match tag {
        "poset" => {
            let q = quasiorder_from(doc)?;
            if let Some((x, y)) = q.antisymmetry_witness() {
                return Err(DocError::NotAntisymmetric(
                    q.name(x).to_string(),
                    q.name(y).to_string(),
                ));
            }
            Ok(Object::Poset(q))
        }
        "lattice" => {
            let q = quasiorder_from(doc)?;
            let matrix = BitMatrix::from_subset_rows(q.rows());
            Ok(Object::Lattice(FiniteLattice::from_order(q.carrier().to_vec(), matrix)?))
        }
        "frame" => {
            let q = quasiorder_from(doc)?;
            let n = q.len();
            let pairs = index_pairs(field(doc, "relation")?, q.carrier(), "relation")?;
            let mut rows = vec![Subset::empty(n); n];
            for (x, y) in pairs {
                rows[x].insert(y);
            }
            Ok(Object::Frame(GCFrame::validate(q, rows)?))
        }
        "algebra" => {
            let signature: Signature = field(doc, "signature")?
                .as_str()
                .ok_or_else(|| DocError::Malformed("'signature' must be a string".into()))?
                .parse()
                .map_err(DocError::Malformed)?;
            let q = quasiorder_from(doc)?;
            let matrix = BitMatrix::from_subset_rows(q.rows());
            let lattice = FiniteLattice::from_order(q.carrier().to_vec(), matrix)?;
            let f = index_map(field(doc, "f")?, lattice.carrier(), "f")?;
            let g = index_map(field(doc, "g")?, lattice.carrier(), "g")?;
            let pair = GaloisPair::validate(lattice, f, g)?;
            Ok(Object::Algebra { pair, signature })
        }
        other => Err(DocError::Malformed(format!("unknown type '{other}'"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{gen_algebra, gen_frame, gen_lattice, gen_poset, InstanceSpec, Kind};

    fn spec(kind: Kind, size: usize, seed: u64) -> InstanceSpec {
        InstanceSpec { kind, size, seed, density: 0.4, signature: Signature::Hgc }
    }

    #[test]
    fn poset_round_trip() {
        let q = gen_poset(&spec(Kind::Poset, 5, 42)).unwrap();
        let text = serialize(&Object::Poset(q.clone()));
        assert_eq!(parse(&text).unwrap(), Object::Poset(q));
    }

    #[test]
    fn lattice_round_trip() {
        let l = gen_lattice(&spec(Kind::Lattice, 3, 7)).unwrap();
        let text = serialize(&Object::Lattice(l.clone()));
        assert_eq!(parse(&text).unwrap(), Object::Lattice(l));
    }

    #[test]
    fn frame_round_trip() {
        let f = gen_frame(&spec(Kind::Frame, 5, 9)).unwrap();
        let text = serialize(&Object::Frame(f.clone()));
        assert_eq!(parse(&text).unwrap(), Object::Frame(f));
    }

    #[test]
    fn algebra_round_trip() {
        let pair = gen_algebra(&spec(Kind::Algebra, 3, 21)).unwrap();
        let obj = Object::Algebra { pair, signature: Signature::Hbgc };
        let text = serialize(&obj);
        assert_eq!(parse(&text).unwrap(), obj);
    }

    #[test]
    fn serialization_is_canonical() {
        let q = gen_poset(&spec(Kind::Poset, 6, 5)).unwrap();
        let a = serialize(&Object::Poset(q.clone()));
        let b = serialize(&Object::Poset(q));
        assert_eq!(a, b);
        // Keys appear sorted in the rendered text.
        let elements_at = a.find("\"elements\"").unwrap();
        let order_at = a.find("\"order\"").unwrap();
        let type_at = a.find("\"type\"").unwrap();
        assert!(elements_at < order_at && order_at < type_at);
    }

    #[test]
    fn equal_specs_produce_identical_document_bytes() {
        let s = InstanceSpec {
            kind: Kind::Algebra,
            size: 4,
            seed: 12345,
            density: 0.35,
            signature: Signature::Hbgc,
        };
        let text = |spec: &InstanceSpec| {
            serialize(&Object::Algebra {
                pair: gen_algebra(spec).unwrap(),
                signature: spec.signature,
            })
        };
        assert_eq!(text(&s), text(&s));
    }

    #[test]
    fn malformed_documents_are_rejected() {
        assert!(matches!(parse("not json"), Err(DocError::Malformed(_))));
        assert!(matches!(parse("{}"), Err(DocError::Malformed(_))));
        assert!(matches!(
            parse(r#"{"type": "widget"}"#),
            Err(DocError::Malformed(_))
        ));
        let missing_pair = r#"{
            "type": "poset",
            "elements": ["a", "b"],
            "order": [["a", "zzz"]]
        }"#;
        assert!(matches!(parse(missing_pair), Err(DocError::Malformed(_))));
    }

    #[test]
    fn poset_documents_must_be_antisymmetric() {
        let text = r#"{
            "type": "poset",
            "elements": ["a", "b"],
            "order": [["a", "a"], ["a", "b"], ["b", "a"], ["b", "b"]]
        }"#;
        assert_eq!(parse(text).unwrap_err(), DocError::NotAntisymmetric("a".into(), "b".into()));
    }

    #[test]
    fn invalid_algebra_maps_are_rejected() {
        let text = r#"{
            "type": "algebra",
            "signature": "BDLGC",
            "elements": ["0", "1"],
            "order": [["0", "0"], ["0", "1"], ["1", "1"]],
            "f": {"0": "1", "1": "1"},
            "g": {"0": "0", "1": "1"}
        }"#;
        assert!(matches!(parse(text), Err(DocError::Galois(_))));
    }

    #[test]
    fn unvalidatable_order_surfaces_the_order_error() {
        let text = r#"{
            "type": "poset",
            "elements": ["a", "b"],
            "order": [["a", "b"], ["b", "b"]]
        }"#;
        assert!(matches!(parse(text), Err(DocError::Order(OrderError::NotReflexive(_)))));
    }
}
