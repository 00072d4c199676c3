use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

/// Wire form: `{"p": 4, "edges": [[0, 1], …]}` with 0-based indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub p: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson { p: g.order(), edges: g.edges().iter().map(|&(u, v)| [u, v]).collect() }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = GraphError;

    fn try_from(raw: GraphJson) -> Result<Self, GraphError> {
        Graph::new(raw.p, raw.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GraphJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = GraphJson::deserialize(d)?;
        Graph::try_from(raw).map_err(serde::de::Error::custom)
    }
}

impl Graph {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Graph, GraphError> {
        serde_json::from_str(text).map_err(|e| GraphError::Parse(e.to_string()))
    }

    /// Graphviz rendering. Vertices are labeled by index, or by
    /// `index: label` when `vertex_labels` is given; edges carry `edge_labels`
    /// when given.
    pub fn to_dot(&self, vertex_labels: Option<&[u64]>, edge_labels: Option<&[u64]>) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.order() {
            match vertex_labels {
                Some(ls) => writeln!(out, "  {v} [label=\"{v}: {}\"];", ls[v]),
                None => writeln!(out, "  {v} [label=\"{v}\"];"),
            }
            .unwrap();
        }
        for (e, &(u, v)) in self.edges().iter().enumerate() {
            match edge_labels {
                Some(ls) => writeln!(out, "  {u} -- {v} [label=\"{}\"];", ls[e]),
                None => writeln!(out, "  {u} -- {v};"),
            }
            .unwrap();
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_is_canonical() {
        let a = Graph::from_json(r#"{"p":3,"edges":[[2,1],[0,1]]}"#).unwrap();
        assert_eq!(a.to_json(), r#"{"p":3,"edges":[[0,1],[1,2]]}"#);
        assert_eq!(Graph::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn json_rejects_bad_graphs() {
        assert!(matches!(Graph::from_json(r#"{"p":2,"edges":[[0,0]]}"#), Err(GraphError::Parse(_))));
        assert!(matches!(Graph::from_json(r#"{"p":2,"edges":[[0,1],[1,0]]}"#), Err(GraphError::Parse(_))));
        assert!(matches!(Graph::from_json(r#"{"p":2,"edges":[[0,1]],"directed":true}"#), Err(GraphError::Parse(_))));
        let err = Graph::from_json("{\"p\":2,\n\"edges\":[[0,1]").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
    }

    #[test]
    fn dot_output() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(g.to_dot(None, None), "graph G {\n  0 [label=\"0\"];\n  1 [label=\"1\"];\n  0 -- 1;\n}\n");
        let dot = g.to_dot(Some(&[1, 1]), Some(&[1]));
        assert!(dot.contains("0 [label=\"0: 1\"]") && dot.contains("0 -- 1 [label=\"1\"]"));
    }
}
