use serde::{Deserialize, Serialize};

use super::{build_graph, Bipartition, Graph, GraphError, Poset};

/// On-disk graph format. `vertices` is in priority order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parts: Option<PartsJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PartsJson {
    #[serde(rename = "X")]
    pub x: Vec<String>,
    #[serde(rename = "Y")]
    pub y: Vec<String>,
}

/// `{"elements": [...], "relations": [["p", "q"], ...]}` with `p <= q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetJson {
    pub elements: Vec<String>,
    #[serde(default)]
    pub relations: Vec<[String; 2]>,
}

impl GraphJson {
    pub fn parse(text: &str) -> Result<Graph, GraphError> {
        let raw: GraphJson = serde_json::from_str(text)?;
        raw.into_graph()
    }

    pub fn into_graph(self) -> Result<Graph, GraphError> {
        let edges: Vec<(String, String)> = self.edges.into_iter().map(|[a, b]| (a, b)).collect();
        let g = build_graph(&self.vertices, &edges)?;
        match self.parts {
            None => Ok(g),
            Some(parts) => {
                let lookup = |names: &[String]| -> Result<Vec<usize>, GraphError> {
                    names
                        .iter()
                        .map(|n| g.index_of(n).ok_or_else(|| GraphError::UnknownEndpoint(n.clone())))
                        .collect()
                };
                let bip = Bipartition {
                    x: lookup(&parts.x)?,
                    y: lookup(&parts.y)?,
                };
                g.with_parts(bip)
            }
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        let labels = g.labels();
        let edges = g.edges().map(|(a, b)| [labels[a].clone(), labels[b].clone()]).collect();
        let parts = g.parts().map(|p| PartsJson {
            x: p.x.iter().map(|&v| labels[v].clone()).collect(),
            y: p.y.iter().map(|&v| labels[v].clone()).collect(),
        });
        Self {
            vertices: labels,
            edges,
            parts,
        }
    }

    pub fn to_string_pretty(g: &Graph) -> String {
        serde_json::to_string_pretty(&Self::from_graph(g)).expect("graph JSON serializes")
    }
}

impl PosetJson {
    pub fn parse(text: &str) -> Result<Poset, GraphError> {
        let raw: PosetJson = serde_json::from_str(text)?;
        let index = |name: &str| {
            raw.elements
                .iter()
                .position(|e| e == name)
                .ok_or_else(|| GraphError::NotPartialOrder(format!("unknown element `{name}`")))
        };
        let rel = raw
            .relations
            .iter()
            .map(|[p, q]| Ok((index(p)?, index(q)?)))
            .collect::<Result<Vec<_>, GraphError>>()?;
        Poset::new(raw.elements.clone(), &rel)
    }
}
