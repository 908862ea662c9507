//! Provenance records. A recipe names the construction, the canonical
//! certificates of its inputs, the parameters needed to replay it, and the
//! certificate of the result.
//!
//! Vertex-valued parameters refer to the canonical labelling of the parent
//! they belong to, so a recipe replays from certificates alone. Indices at
//! or beyond the parent's order denote vertices the construction appended.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Certificate, Graph};

/// Registered construction names.
pub const OPERATIONS: &[&str] = &[
    "seed",
    "amalgamate",
    "moore_tree_double",
    "subdivide_two",
    "subdivide_three",
    "subdivide_merge",
    "delete_edges_add_vertices",
    "delete_vertices",
    "remove_biggs_tree",
    "remove_perfect_matching",
    "circulant",
    "quartic_parity_graph",
    "gdgp",
    "canonical_double_cover",
];

const RESERVED: &[&str] = &["op", "parents", "out"];

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ParamValue {
    Int(i64),
    List(Vec<i64>),
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(x) => write!(f, "{x}"),
            ParamValue::List(xs) => {
                f.write_str("[")?;
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str("]")
            }
        }
    }
}

impl FromStr for ParamValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<ParamValue> {
        let bad = || Error::Recipe(format!("bad parameter value {s:?}"));
        if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            if inner.is_empty() {
                return Ok(ParamValue::List(Vec::new()));
            }
            let xs = inner
                .split(',')
                .map(|t| t.parse::<i64>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            Ok(ParamValue::List(xs))
        } else {
            s.parse().map(ParamValue::Int).map_err(|_| bad())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Recipe {
    pub operation: String,
    pub parents: Vec<Certificate>,
    pub params: BTreeMap<String, ParamValue>,
    pub output: Certificate,
}

impl Recipe {
    pub fn new(
        operation: &str,
        parents: Vec<Certificate>,
        params: BTreeMap<String, ParamValue>,
        output: Certificate,
    ) -> Result<Recipe> {
        if !OPERATIONS.contains(&operation) {
            return Err(Error::Recipe(format!("unknown operation {operation:?}")));
        }
        if let Some(k) = params.keys().find(|k| !valid_key(k)) {
            return Err(Error::Recipe(format!("invalid parameter name {k:?}")));
        }
        Ok(Recipe {
            operation: operation.to_string(),
            parents,
            params,
            output,
        })
    }

    /// Recipe for a graph taken as given.
    pub fn seed(g: &Graph) -> Recipe {
        let cert = crate::graph::canonical_certificate(g);
        Recipe {
            operation: "seed".into(),
            parents: vec![cert.clone()],
            params: BTreeMap::new(),
            output: cert,
        }
    }

    pub fn int(&self, key: &str) -> Result<i64> {
        match self.params.get(key) {
            Some(ParamValue::Int(x)) => Ok(*x),
            _ => Err(Error::Recipe(format!(
                "{}: missing integer parameter {key}",
                self.operation
            ))),
        }
    }

    pub fn list(&self, key: &str) -> Result<&[i64]> {
        match self.params.get(key) {
            Some(ParamValue::List(xs)) => Ok(xs),
            _ => Err(Error::Recipe(format!(
                "{}: missing list parameter {key}",
                self.operation
            ))),
        }
    }

    /// Rebuilds the graph from the parent certificates and checks that the
    /// result carries the recorded output certificate.
    pub fn replay(&self) -> Result<Graph> {
        let g = crate::constructions::replay(self)?;
        let got = crate::graph::canonical_certificate(&g);
        if got != self.output {
            return Err(Error::Recipe(format!(
                "{} replay produced {got}, recorded {}",
                self.operation, self.output
            )));
        }
        Ok(g)
    }
}

fn valid_key(k: &str) -> bool {
    !k.is_empty()
        && !RESERVED.contains(&k)
        && k.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "op={} parents=", self.operation)?;
        for (i, p) in self.parents.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        for (k, v) in &self.params {
            write!(f, " {k}={v}")?;
        }
        write!(f, " out={}", self.output)
    }
}

impl FromStr for Recipe {
    type Err = Error;

    fn from_str(line: &str) -> Result<Recipe> {
        let mut op = None;
        let mut parents = None;
        let mut out = None;
        let mut params = BTreeMap::new();
        for token in line.split_whitespace() {
            let (key, value) = token
                .split_once('=')
                .ok_or_else(|| Error::Recipe(format!("token without '=': {token:?}")))?;
            match key {
                "op" => op = Some(value.to_string()),
                "parents" => {
                    parents = Some(if value.is_empty() {
                        Vec::new()
                    } else {
                        value
                            .split(',')
                            .map(Certificate::from_str)
                            .collect::<Result<Vec<_>>>()?
                    })
                }
                "out" => out = Some(value.parse::<Certificate>()?),
                _ => {
                    if params.insert(key.to_string(), value.parse()?).is_some() {
                        return Err(Error::Recipe(format!("duplicate parameter {key}")));
                    }
                }
            }
        }
        let missing = |what: &str| Error::Recipe(format!("recipe line lacks {what}"));
        Recipe::new(
            &op.ok_or_else(|| missing("op"))?,
            parents.ok_or_else(|| missing("parents"))?,
            params,
            out.ok_or_else(|| missing("out"))?,
        )
    }
}

/// A constructed graph with its provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Built {
    pub graph: Graph,
    pub recipe: Recipe,
}

impl Built {
    pub fn certificate(&self) -> &Certificate {
        &self.recipe.output
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canonical_certificate;
    use crate::named;

    #[test]
    fn line_round_trip() {
        let p = canonical_certificate(&named::petersen());
        let k4 = canonical_certificate(&named::complete(4));
        let mut params = BTreeMap::new();
        params.insert("e1".to_string(), ParamValue::List(vec![0, 1]));
        params.insert("mode".to_string(), ParamValue::Int(0));
        params.insert("empty".to_string(), ParamValue::List(Vec::new()));
        let r = Recipe::new("amalgamate", vec![p.clone(), k4], params, p).unwrap();
        let line = r.to_string();
        assert!(line.starts_with("op=amalgamate parents="));
        assert_eq!(line.parse::<Recipe>().unwrap(), r);
    }

    #[test]
    fn rejects_bad_lines() {
        let p = canonical_certificate(&named::petersen());
        for bad in [
            "parents= out=C~".to_string(),
            format!("op=nonsense parents= out={p}"),
            format!("op=seed parents={p}"),
            format!("op=seed parents={p} x=[1,a] out={p}"),
            format!("op=seed parents={p} x=1 x=2 out={p}"),
            format!("op=seed parents={p} bare out={p}"),
        ] {
            assert!(bad.parse::<Recipe>().is_err(), "{bad}");
        }
    }

    #[test]
    fn seed_replays() {
        let r = Recipe::seed(&named::heawood());
        let g = r.replay().unwrap();
        assert!(crate::graph::is_isomorphic(&g, &named::heawood()));
    }
}
