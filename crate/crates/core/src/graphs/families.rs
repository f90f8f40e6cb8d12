use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Bipartition, Graph, GraphError, Vertex, VertexKind};

/// Named graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    Friendship(usize),
    Fan(usize),
}

fn at_least(name: &'static str, value: usize, min: usize) -> Result<(), GraphError> {
    if value < min {
        Err(GraphError::BadParameter { name, min, value })
    } else {
        Ok(())
    }
}

fn base_vertices(n: usize) -> Vec<Vertex> {
    (0..n)
        .map(|i| Vertex {
            kind: VertexKind::Base(i),
            label: format!("x{}", i + 1),
        })
        .collect()
}

/// `n` isolated vertices `x1..xn`.
pub fn edgeless(n: usize) -> Graph {
    Graph::from_parts(base_vertices(n), []).expect("edgeless graph is valid")
}

pub fn standard_family(family: Family) -> Result<Graph, GraphError> {
    match family {
        Family::Path(n) => {
            at_least("n", n, 1)?;
            Graph::from_parts(base_vertices(n), (1..n).map(|i| (i - 1, i)))
        }
        Family::Cycle(n) => {
            at_least("n", n, 3)?;
            Graph::from_parts(base_vertices(n), (0..n).map(|i| (i, (i + 1) % n)))
        }
        Family::Complete(n) => {
            at_least("n", n, 1)?;
            let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
            Graph::from_parts(base_vertices(n), edges)
        }
        Family::CompleteBipartite(a, b) => {
            at_least("a", a, 1)?;
            at_least("b", b, 1)?;
            let edges = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j)));
            Graph::from_parts(base_vertices(a + b), edges)?.with_parts(Bipartition {
                x: (0..a).collect(),
                y: (a..a + b).collect(),
            })
        }
        Family::Star(n) => {
            at_least("n", n, 1)?;
            Ok(cone(&edgeless(n)))
        }
        Family::Friendship(n) => {
            at_least("n", n, 1)?;
            let k2 = standard_family(Family::Path(2))?;
            let copies = vec![k2; n];
            Ok(cone(&disjoint_union(&copies)))
        }
        Family::Fan(n) => {
            at_least("n", n, 1)?;
            Ok(cone(&standard_family(Family::Path(n))?))
        }
    }
}

/// Disjoint union, vertices relabelled `x1..` in block order.
pub fn disjoint_union(graphs: &[Graph]) -> Graph {
    let mut edges = Vec::new();
    let mut offset = 0;
    for g in graphs {
        edges.extend(g.edges().map(|(a, b)| (a + offset, b + offset)));
        offset += g.vertex_count();
    }
    Graph::from_parts(base_vertices(offset), edges).expect("disjoint union is valid")
}

/// Adds a universal vertex, placed last in priority.
pub fn cone(g: &Graph) -> Graph {
    attach(&edgeless(1), std::slice::from_ref(g)).expect("one host, one attached graph")
}

/// The attachment construction: every vertex of `hs[i]` is joined to base
/// vertex `i` of `g`. Priority is the attached blocks in host order, each in
/// its own order, followed by the base vertices.
///
/// Attached vertices are labelled `z{j}` when there is a single host and
/// `z{i}_{j}` otherwise; base vertices become `x{i}`.
pub fn attach(g: &Graph, hs: &[Graph]) -> Result<Graph, GraphError> {
    let n = g.vertex_count();
    if hs.len() != n {
        return Err(GraphError::LengthMismatch {
            expected: n,
            found: hs.len(),
        });
    }
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    let mut blocks = Vec::with_capacity(n);
    for (host, h) in hs.iter().enumerate() {
        let offset = vertices.len();
        for index in 0..h.vertex_count() {
            let label = if n == 1 {
                format!("z{}", index + 1)
            } else {
                format!("z{}_{}", host + 1, index + 1)
            };
            vertices.push(Vertex {
                kind: VertexKind::Attached { host, index },
                label,
            });
        }
        edges.extend(h.edges().map(|(a, b)| (a + offset, b + offset)));
        blocks.push(offset..offset + h.vertex_count());
    }
    let base_offset = vertices.len();
    vertices.extend(base_vertices(n));
    edges.extend(g.edges().map(|(a, b)| (a + base_offset, b + base_offset)));
    for (host, block) in blocks.into_iter().enumerate() {
        edges.extend(block.map(|z| (base_offset + host, z)));
    }
    Graph::from_parts(vertices, edges)
}

/// A finite poset given by a generating relation; stored as its reflexive
/// transitive closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    leq: Vec<Vec<bool>>,
}

impl Poset {
    /// `relations` holds pairs `(p, q)` meaning `p <= q`, by element index.
    pub fn new(labels: Vec<String>, relations: &[(usize, usize)]) -> Result<Self, GraphError> {
        let n = labels.len();
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(p, q) in relations {
            if p >= n || q >= n {
                return Err(GraphError::NotPartialOrder(format!(
                    "element #{} out of range",
                    p.max(q)
                )));
            }
            leq[p][q] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    let row_k = leq[k].clone();
                    for (cell, &above) in leq[i].iter_mut().zip(&row_k) {
                        *cell |= above;
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if leq[i][j] && leq[j][i] {
                    return Err(GraphError::NotPartialOrder(format!(
                        "`{}` and `{}` are mutually related",
                        labels[i], labels[j]
                    )));
                }
            }
        }
        Ok(Self { labels, leq })
    }

    pub fn antichain(n: usize) -> Self {
        Self::new((1..=n).map(|i| format!("p{i}")).collect(), &[]).unwrap()
    }

    pub fn chain(n: usize) -> Self {
        let rel: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::new((1..=n).map(|i| format!("p{i}")).collect(), &rel).unwrap()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn leq(&self, p: usize, q: usize) -> bool {
        self.leq[p][q]
    }
}

/// Bipartite graph on `a_p, b_p` with `{a_p, b_q}` an edge iff `p <= q`.
pub fn cm_bipartite_from_poset(p: &Poset) -> Graph {
    let n = p.len();
    let mut vertices = Vec::with_capacity(2 * n);
    for i in 0..n {
        vertices.push(Vertex {
            kind: VertexKind::Base(i),
            label: format!("a{}", i + 1),
        });
    }
    for i in 0..n {
        vertices.push(Vertex {
            kind: VertexKind::Base(n + i),
            label: format!("b{}", i + 1),
        });
    }
    let edges: Vec<_> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| p.leq(i, j)).map(move |j| (i, n + j)))
        .collect();
    Graph::from_parts(vertices, edges)
        .and_then(|g| {
            g.with_parts(Bipartition {
                x: (0..n).collect(),
                y: (n..2 * n).collect(),
            })
        })
        .expect("poset graph is bipartite by construction")
}

/// Pendant leaves on the X side and pendant triangles on the Y side of a
/// connected bipartite graph. `leaves[k]` and `triangles[k]` are counts for
/// the k-th vertex of X and Y respectively.
pub fn cameron_walker(bipartite: &Graph, leaves: &[usize], triangles: &[usize]) -> Result<Graph, GraphError> {
    if bipartite.edge_count() == 0 || !bipartite.is_connected() {
        return Err(GraphError::NotConnected);
    }
    let parts = match bipartite.parts() {
        Some(p) => p.clone(),
        None => bipartite.bipartition().ok_or(GraphError::NotBipartite)?,
    };
    if leaves.len() != parts.x.len() {
        return Err(GraphError::LengthMismatch {
            expected: parts.x.len(),
            found: leaves.len(),
        });
    }
    if triangles.len() != parts.y.len() {
        return Err(GraphError::LengthMismatch {
            expected: parts.y.len(),
            found: triangles.len(),
        });
    }
    for &c in leaves {
        at_least("leaves", c, 1)?;
    }
    for &c in triangles {
        at_least("triangles", c, 1)?;
    }
    let k2 = standard_family(Family::Path(2))?;
    let mut hs = vec![edgeless(0); bipartite.vertex_count()];
    for (&v, &c) in parts.x.iter().zip(leaves) {
        hs[v] = edgeless(c);
    }
    for (&v, &c) in parts.y.iter().zip(triangles) {
        hs[v] = disjoint_union(&vec![k2.clone(); c]);
    }
    attach(bipartite, &hs)
}

/// Erdős–Rényi graph on `x1..xn`, deterministic in `seed`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                edges.insert((i, j));
            }
        }
    }
    Graph::from_parts(base_vertices(n), edges).expect("random graph is simple")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge_labels(g: &Graph) -> Vec<(String, String)> {
        let l = g.labels();
        g.edges().map(|(a, b)| (l[a].clone(), l[b].clone())).collect()
    }

    #[test]
    fn family_sizes() {
        let p3 = standard_family(Family::Path(3)).unwrap();
        assert_eq!(p3.edge_count(), 2);
        let f2 = standard_family(Family::Friendship(2)).unwrap();
        assert_eq!((f2.vertex_count(), f2.edge_count()), (5, 6));
        let fan3 = standard_family(Family::Fan(3)).unwrap();
        assert_eq!((fan3.vertex_count(), fan3.edge_count()), (4, 5));
        assert_eq!(fan3.labels().last().unwrap(), "x1");
        assert!(standard_family(Family::Path(0)).is_err());
        assert!(standard_family(Family::Cycle(2)).is_err());
    }

    #[test]
    fn friendship_counts_grow_linearly() {
        for n in 1..5 {
            let g = standard_family(Family::Friendship(n)).unwrap();
            assert_eq!((g.vertex_count(), g.edge_count()), (2 * n + 1, 3 * n));
        }
    }

    #[test]
    fn cone_examples() {
        let k2 = standard_family(Family::Path(2)).unwrap();
        let tri = cone(&k2);
        assert_eq!((tri.vertex_count(), tri.edge_count()), (3, 3));
        assert_eq!(tri.labels(), vec!["z1", "z2", "x1"]);
        let two_k2 = disjoint_union(&[k2.clone(), k2]);
        assert_eq!(cone(&two_k2), standard_family(Family::Friendship(2)).unwrap());
    }

    #[test]
    fn attach_examples() {
        let k2 = standard_family(Family::Path(2)).unwrap();
        let g = attach(&k2, &[k2.clone(), k2.clone()]).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 7));
        assert_eq!(g.labels(), vec!["z1_1", "z1_2", "z2_1", "z2_2", "x1", "x2"]);
        let star = attach(&edgeless(1), &[edgeless(3)]).unwrap();
        assert_eq!(star.labels(), vec!["z1", "z2", "z3", "x1"]);
        assert_eq!(star.degree(3), 3);
        assert!(matches!(
            attach(&k2, std::slice::from_ref(&k2)),
            Err(GraphError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn attach_single_host_is_cone() {
        for n in 1..5 {
            let h = standard_family(Family::Path(n)).unwrap();
            assert_eq!(attach(&edgeless(1), std::slice::from_ref(&h)).unwrap(), cone(&h));
        }
    }

    #[test]
    fn poset_graphs() {
        let g = cm_bipartite_from_poset(&Poset::antichain(1));
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 1));
        let chain = cm_bipartite_from_poset(&Poset::chain(2));
        assert_eq!(
            edge_labels(&chain),
            vec![
                ("a1".into(), "b1".into()),
                ("a1".into(), "b2".into()),
                ("a2".into(), "b2".into())
            ]
        );
        let two = cm_bipartite_from_poset(&Poset::antichain(2));
        assert_eq!(two.edge_count(), 2);
        assert!(Poset::new(vec!["p".into(), "q".into()], &[(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn cameron_walker_examples() {
        let k2 = standard_family(Family::CompleteBipartite(1, 1)).unwrap();
        let g = cameron_walker(&k2, &[1], &[1]).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (5, 5));
        let g2 = cameron_walker(&k2, &[2], &[1]).unwrap();
        assert_eq!((g2.vertex_count(), g2.edge_count()), (6, 6));
        let c3 = standard_family(Family::Cycle(3)).unwrap();
        assert!(matches!(
            cameron_walker(&c3, &[1], &[1, 1]),
            Err(GraphError::NotBipartite)
        ));
        assert!(cameron_walker(&k2, &[0], &[1]).is_err());
        let disconnected = disjoint_union(&[k2.clone(), k2]);
        assert!(matches!(
            cameron_walker(&disconnected, &[1, 1], &[1, 1]),
            Err(GraphError::NotConnected)
        ));
    }

    #[test]
    fn random_graph_is_seeded() {
        assert_eq!(random_graph(8, 0.4, 7), random_graph(8, 0.4, 7));
        assert_eq!(random_graph(6, 1.0, 1).edge_count(), 15);
    }
}
