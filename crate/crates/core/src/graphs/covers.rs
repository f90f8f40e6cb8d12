use fixedbitset::FixedBitSet;

use super::Graph;

/// A set of vertex indices, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexCover {
    members: Vec<usize>,
}

impl VertexCover {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        Self { members }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn covers(&self, g: &Graph) -> bool {
        g.edges().all(|(a, b)| self.contains(a) || self.contains(b))
    }

    /// Covers, and dropping any single member exposes an edge.
    pub fn is_minimal_cover(&self, g: &Graph) -> bool {
        self.covers(g)
            && self
                .members
                .iter()
                .all(|&v| g.neighbors(v).ones().any(|w| !self.contains(w)))
    }

    pub fn labels(&self, g: &Graph) -> Vec<String> {
        self.members.iter().map(|&v| g.vertices()[v].label.clone()).collect()
    }

    /// 0/1 indicator in vertex priority order; comparing these lexicographically
    /// compares the cover monomials under lex.
    pub fn indicator(&self, n: usize) -> Vec<u8> {
        let mut out = vec![0; n];
        for &v in &self.members {
            out[v] = 1;
        }
        out
    }
}

/// Maximal independent sets, as maximal cliques of the complement found by
/// Bron–Kerbosch with Tomita pivoting.
pub fn maximal_independent_sets(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let complement: Vec<FixedBitSet> = (0..n)
        .map(|v| {
            let mut s = FixedBitSet::with_capacity(n);
            s.insert_range(..);
            s.difference_with(g.neighbors(v));
            s.set(v, false);
            s
        })
        .collect();
    let mut out = Vec::new();
    let mut r = Vec::new();
    let mut p = FixedBitSet::with_capacity(n);
    p.insert_range(..);
    let x = FixedBitSet::with_capacity(n);
    bron_kerbosch(&complement, &mut r, p, x, &mut out);
    out
}

fn bron_kerbosch(
    adj: &[FixedBitSet],
    r: &mut Vec<usize>,
    mut p: FixedBitSet,
    mut x: FixedBitSet,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_clear() {
        if x.is_clear() {
            out.push(r.clone());
        }
        return;
    }
    let pivot = p
        .ones()
        .chain(x.ones())
        .max_by_key(|&u| p.intersection(&adj[u]).count())
        .expect("p is nonempty");
    let mut candidates = p.clone();
    candidates.difference_with(&adj[pivot]);
    for v in candidates.ones() {
        r.push(v);
        let mut p2 = p.clone();
        p2.intersect_with(&adj[v]);
        let mut x2 = x.clone();
        x2.intersect_with(&adj[v]);
        bron_kerbosch(adj, r, p2, x2, out);
        r.pop();
        p.set(v, false);
        x.insert(v);
    }
}

/// All inclusion-minimal vertex covers, ordered so that the cover monomials
/// decrease under lex in vertex priority order.
pub fn minimal_vertex_covers(g: &Graph) -> Vec<VertexCover> {
    let n = g.vertex_count();
    let mut covers: Vec<VertexCover> = maximal_independent_sets(g)
        .into_iter()
        .map(|indep| {
            let mut in_set = vec![false; n];
            for v in indep {
                in_set[v] = true;
            }
            VertexCover::new((0..n).filter(|&v| !in_set[v]).collect())
        })
        .collect();
    covers.sort_by_cached_key(|c| std::cmp::Reverse(c.indicator(n)));
    covers
}

/// All minimal vertex covers have the same size.
pub fn is_unmixed(g: &Graph) -> bool {
    let covers = minimal_vertex_covers(g);
    covers.windows(2).all(|w| w[0].len() == w[1].len())
}

/// Lexicographic breadth-first search order.
fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by(|&a, &b| labels[a].cmp(&labels[b]).then(b.cmp(&a)))
            .expect("unvisited vertex remains");
        visited[v] = true;
        order.push(v);
        for w in g.neighbors(v).ones() {
            if !visited[w] {
                labels[w].push(n - step);
            }
        }
    }
    order
}

/// Chordality via a LexBFS order, whose reverse is a perfect elimination
/// ordering exactly when the graph is chordal.
pub fn is_chordal(g: &Graph) -> bool {
    let order = lex_bfs(g);
    let n = order.len();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // In the elimination order (reverse LexBFS) the later neighbours of v are
    // the neighbours visited earlier by LexBFS.
    for &v in &order {
        let earlier: Vec<usize> = g.neighbors(v).ones().filter(|&w| pos[w] < pos[v]).collect();
        if let Some(&parent) = earlier.iter().max_by_key(|&&w| pos[w]) {
            if earlier.iter().any(|&w| w != parent && !g.has_edge(parent, w)) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{build_graph, random_graph, standard_family, Family};
    use proptest::prelude::*;

    fn label_sets(g: &Graph) -> Vec<Vec<String>> {
        minimal_vertex_covers(g).iter().map(|c| c.labels(g)).collect()
    }

    fn brute_force_covers(g: &Graph) -> Vec<VertexCover> {
        let n = g.vertex_count();
        let all: Vec<VertexCover> = (0u32..1 << n)
            .map(|mask| VertexCover::new((0..n).filter(|&v| mask >> v & 1 == 1).collect()))
            .filter(|c| c.covers(g))
            .collect();
        let mut minimal: Vec<VertexCover> = all
            .iter()
            .filter(|c| {
                !all.iter()
                    .any(|d| d.len() < c.len() && d.members().iter().all(|&v| c.contains(v)))
            })
            .cloned()
            .collect();
        minimal.sort();
        minimal
    }

    #[test]
    fn cover_examples() {
        let k2 = standard_family(Family::Path(2)).unwrap();
        assert_eq!(label_sets(&k2), vec![vec!["x1"], vec!["x2"]]);
        let p3 = standard_family(Family::Path(3)).unwrap();
        assert_eq!(label_sets(&p3), vec![vec!["x1", "x3"], vec!["x2"]]);
        let c4 = standard_family(Family::Cycle(4)).unwrap();
        assert_eq!(label_sets(&c4), vec![vec!["x1", "x3"], vec!["x2", "x4"]]);
    }

    #[test]
    fn edgeless_graph_has_empty_cover() {
        let g = build_graph::<&str>(&["a", "b"], &[]).unwrap();
        let covers = minimal_vertex_covers(&g);
        assert_eq!(covers.len(), 1);
        assert!(covers[0].is_empty());
    }

    #[test]
    fn unmixed_and_chordal_examples() {
        let c4 = standard_family(Family::Cycle(4)).unwrap();
        assert!(is_unmixed(&c4));
        assert!(!is_chordal(&c4));
        let p3 = standard_family(Family::Path(3)).unwrap();
        assert!(!is_unmixed(&p3));
        assert!(is_chordal(&p3));
        let tri = standard_family(Family::Complete(3)).unwrap();
        assert!(is_unmixed(&tri) && is_chordal(&tri));
        assert!(!is_chordal(&standard_family(Family::Cycle(5)).unwrap()));
        assert!(is_chordal(&standard_family(Family::Fan(4)).unwrap()));
    }

    /// Chordal iff repeatedly deleting simplicial vertices empties the graph.
    fn chordal_by_elimination(g: &Graph) -> bool {
        let n = g.vertex_count();
        let mut alive = vec![true; n];
        for _ in 0..n {
            let simplicial = (0..n).find(|&v| {
                alive[v] && {
                    let nb: Vec<usize> = g.neighbors(v).ones().filter(|&w| alive[w]).collect();
                    nb.iter().all(|&a| nb.iter().all(|&b| a == b || g.has_edge(a, b)))
                }
            });
            match simplicial {
                Some(v) => alive[v] = false,
                None => return false,
            }
        }
        true
    }

    proptest! {
        #[test]
        fn covers_match_brute_force(n in 1usize..=12, p in 0.0f64..1.0, seed in any::<u64>()) {
            let g = random_graph(n, p, seed);
            let covers = minimal_vertex_covers(&g);
            for c in &covers {
                prop_assert!(c.is_minimal_cover(&g));
                for &v in c.members() {
                    let smaller = VertexCover::new(c.members().iter().copied().filter(|&w| w != v).collect());
                    prop_assert!(!smaller.covers(&g));
                }
            }
            let mut sorted = covers.clone();
            sorted.sort();
            prop_assert_eq!(sorted, brute_force_covers(&g));
            for w in covers.windows(2) {
                prop_assert!(w[0].indicator(n) > w[1].indicator(n));
            }
        }

        #[test]
        fn covers_complement_independent_sets(n in 1usize..=10, p in 0.0f64..1.0, seed in any::<u64>()) {
            let g = random_graph(n, p, seed);
            let mis = maximal_independent_sets(&g);
            let covers = minimal_vertex_covers(&g);
            prop_assert_eq!(mis.len(), covers.len());
            for c in &covers {
                let comp: Vec<usize> = (0..n).filter(|&v| !c.contains(v)).collect();
                // independent and maximal
                prop_assert!(comp.iter().all(|&a| comp.iter().all(|&b| !g.has_edge(a, b))));
                prop_assert!(c.members().iter().all(|&v| comp.iter().any(|&w| g.has_edge(v, w))));
            }
        }

        #[test]
        fn chordality_matches_elimination(n in 1usize..=9, p in 0.0f64..1.0, seed in any::<u64>()) {
            let g = random_graph(n, p, seed);
            prop_assert_eq!(is_chordal(&g), chordal_by_elimination(&g));
        }
    }
}
