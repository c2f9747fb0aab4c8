//! JSON files for graphs, functions and diagrams.
//!
//! ```text
//! graph:    {"vertices": [0, 1, 2], "edges": [[0, 1], [1, 2]]}
//! function: {"vertex_values": {"0": "0", "1": "1"}, "edge_values": {"0-1": "9/2"}}
//! diagram:  {"finite_pairs": [[3, 6]], "essential_h0": [0], "essential_h1": []}
//! ```
//!
//! Function values are strings holding exact rationals (`"p"` or `"p/q"`).

use std::collections::BTreeMap;
use std::fmt;

use serde::de::DeserializeOwned;
use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::graph::{Edge, Graph, Simplex, VertexId};
use crate::morse::{MorseError, MorseFunction};
use crate::persistence::PersistenceDiagram;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("invalid JSON at {path}: {message}")]
    Json { path: String, message: String },
    #[error("bad key {key:?}: {reason}")]
    Key { key: String, reason: &'static str },
    #[error("{0} is given twice")]
    Duplicate(Simplex),
}

fn from_json<T: DeserializeOwned>(text: &str) -> Result<T, IoError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let value = serde_path_to_error::deserialize(de).map_err(|e| IoError::Json {
        path: e.path().to_string(),
        message: e.inner().to_string(),
    })?;
    // Reject trailing content after the document.
    serde_json::Deserializer::from_str(text)
        .into_iter::<serde_json::Value>()
        .nth(1)
        .map_or(Ok(()), |_| Err(IoError::Json { path: ".".into(), message: "trailing content".into() }))?;
    Ok(value)
}

pub fn parse_graph(text: &str) -> Result<Graph, IoError> {
    from_json(text)
}

pub fn parse_diagram(text: &str) -> Result<PersistenceDiagram, IoError> {
    from_json(text)
}

/// Function values as read from a file, before validation against a graph.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RawFunction {
    pub vertex_values: BTreeMap<VertexId, Rational>,
    pub edge_values: BTreeMap<Edge, Rational>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFunctionRepr {
    vertex_values: BTreeMap<String, Rational>,
    edge_values: BTreeMap<String, Rational>,
}

fn parse_vertex_key(key: &str) -> Result<VertexId, IoError> {
    key.trim().parse().map_err(|_| IoError::Key { key: key.to_string(), reason: "expected a vertex id" })
}

fn parse_edge_key(key: &str) -> Result<Edge, IoError> {
    let bad = |reason| IoError::Key { key: key.to_string(), reason };
    let (a, b) = key.split_once('-').ok_or(bad("expected \"a-b\""))?;
    let a = parse_vertex_key(a).map_err(|_| bad("expected \"a-b\""))?;
    let b = parse_vertex_key(b).map_err(|_| bad("expected \"a-b\""))?;
    Edge::try_new(a, b).ok_or(bad("self-loop"))
}

pub fn parse_function(text: &str) -> Result<RawFunction, IoError> {
    let repr: RawFunctionRepr = from_json(text)?;
    let mut raw = RawFunction::default();
    for (k, x) in repr.vertex_values {
        let v = parse_vertex_key(&k)?;
        if raw.vertex_values.insert(v, x).is_some() {
            return Err(IoError::Duplicate(Simplex::Vertex(v)));
        }
    }
    for (k, x) in repr.edge_values {
        let e = parse_edge_key(&k)?;
        if raw.edge_values.insert(e, x).is_some() {
            return Err(IoError::Duplicate(Simplex::Edge(e)));
        }
    }
    Ok(raw)
}

impl RawFunction {
    pub fn from_function(f: &MorseFunction) -> Self {
        let mut raw = RawFunction::default();
        for (s, x) in f.values() {
            match s {
                Simplex::Vertex(v) => raw.vertex_values.insert(v, x.clone()),
                Simplex::Edge(e) => raw.edge_values.insert(e, x.clone()),
            };
        }
        raw
    }

    pub fn value_map(&self) -> BTreeMap<Simplex, Rational> {
        let vertices = self.vertex_values.iter().map(|(&v, x)| (Simplex::Vertex(v), x.clone()));
        let edges = self.edge_values.iter().map(|(&e, x)| (Simplex::Edge(e), x.clone()));
        vertices.chain(edges).collect()
    }

    pub fn validate(&self, g: &Graph) -> Result<MorseFunction, MorseError> {
        MorseFunction::validate(g, &self.value_map())
    }
}

/// Serializes a map in the given key order.
struct Ordered<'a, K: fmt::Display>(&'a BTreeMap<K, Rational>);

impl<K: fmt::Display> Serialize for Ordered<'_, K> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, x) in self.0 {
            map.serialize_entry(&k.to_string(), x)?;
        }
        map.end()
    }
}

impl Serialize for RawFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("vertex_values", &Ordered(&self.vertex_values))?;
        map.serialize_entry("edge_values", &Ordered(&self.edge_values))?;
        map.end()
    }
}

fn pretty<T: Serialize + ?Sized>(x: &T) -> String {
    serde_json::to_string_pretty(x).expect("in-memory serialization cannot fail")
}

pub fn graph_to_json(g: &Graph) -> String {
    pretty(g)
}

/// Keys ascend numerically (vertices by id, edges by endpoints).
pub fn function_to_json(f: &MorseFunction) -> String {
    pretty(&RawFunction::from_function(f))
}

/// A single line, so diagrams can be streamed one per line.
pub fn diagram_to_json(d: &PersistenceDiagram) -> String {
    serde_json::to_string(d).expect("in-memory serialization cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    #[test]
    fn single_vertex_graph() {
        let g = parse_graph(r#"{"vertices":[0],"edges":[]}"#).unwrap();
        assert_eq!(g, Graph::new([0], []).unwrap());
    }

    #[test]
    fn errors_carry_a_path() {
        let err = parse_graph(r#"{"vertices":[0, "x"],"edges":[]}"#).unwrap_err();
        assert!(matches!(&err, IoError::Json { path, .. } if path == "vertices[1]"), "{err}");
        let err = parse_function(r#"{"vertex_values":{"0":"1/0"},"edge_values":{}}"#).unwrap_err();
        assert!(matches!(&err, IoError::Json { path, .. } if path == "vertex_values.0"), "{err}");
        assert!(parse_graph(r#"{"vertices":[0],"edges":[],"extra":1}"#).is_err());
        assert!(parse_graph(r#"{"vertices":[0],"edges":[[0,0]]}"#).is_err());
        assert!(parse_graph(r#"{"vertices":[0],"edges":[]} {}"#).is_err());
    }

    #[test]
    fn function_keys() {
        let raw = parse_function(r#"{"vertex_values":{"0":"0","1":"9/2"},"edge_values":{"1-0":"9/2"}}"#).unwrap();
        assert_eq!(raw.edge_values[&Edge::new(0, 1)], Rational::new(9, 2));
        assert!(matches!(
            parse_function(r#"{"vertex_values":{"a":"0"},"edge_values":{}}"#),
            Err(IoError::Key { .. })
        ));
        assert_eq!(
            parse_function(r#"{"vertex_values":{},"edge_values":{"0-1":"1","1-0":"1"}}"#).unwrap_err(),
            IoError::Duplicate(Simplex::edge(0, 1))
        );
    }

    #[test]
    fn reference_function_round_trip() {
        let f = samples::reference_function();
        let text = function_to_json(&f);
        assert!(text.find("\"5\"").unwrap() < text.find("\"45\"").unwrap());
        let back = parse_function(&text).unwrap().validate(f.graph()).unwrap();
        assert_eq!(back, f);
        assert_eq!(back.criticals().len(), 11);
        let g = parse_graph(&graph_to_json(f.graph())).unwrap();
        assert_eq!(&g, f.graph());
    }

    #[test]
    fn diagram_format() {
        let d = PersistenceDiagram::connected(vec![(5, 10), (3, 6)], vec![]);
        assert_eq!(
            diagram_to_json(&d),
            r#"{"finite_pairs":[[3,6],[5,10]],"essential_h0":[0],"essential_h1":[]}"#
        );
        assert_eq!(parse_diagram(&diagram_to_json(&d)).unwrap(), d);
        let short = parse_diagram(r#"{"finite_pairs":[[2,3]],"essential_h0":[0]}"#).unwrap();
        assert!(short.essential_h1().is_empty());
    }
}
