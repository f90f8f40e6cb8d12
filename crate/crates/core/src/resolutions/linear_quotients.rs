use std::collections::HashSet;

use serde::Serialize;

use super::ResolutionError;
use crate::monomials::{colon, Monomial};

/// Which stage of [`find_linear_quotients_order`] produced the order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderSource {
    Given,
    Ascending,
    Descending,
    Search,
}

/// An ordering `f_1, ..., f_m` with, for every position `j` and every
/// earlier `i`, an earlier `l` such that `f_l : f_j` is a single variable
/// dividing `f_i : f_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearQuotientsCertificate {
    pub ordering: Vec<Monomial>,
    /// `witnesses[j]` holds `(i, l)` for every `i < j` (zero-based).
    pub witnesses: Vec<Vec<(usize, usize)>>,
    pub source: OrderSource,
}

impl LinearQuotientsCertificate {
    /// Re-checks every witness against the ordering.
    pub fn verify(&self) -> bool {
        let f = &self.ordering;
        self.witnesses.len() == f.len()
            && self.witnesses.iter().enumerate().all(|(j, w)| {
                w.len() == j
                    && w.iter().enumerate().all(|(i0, &(i, l))| {
                        let lin = colon(&f[l], &f[j]);
                        i0 == i && i < j && l < j && lin.degree() == 1 && lin.divides(&colon(&f[i], &f[j]))
                    })
            })
    }
}

/// The first position whose colon ideal is not generated by variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinearQuotientsFailure {
    /// One-based position in the ordering.
    pub position: usize,
    /// One-based position of an earlier generator with no witness.
    pub unwitnessed: usize,
}

/// Witnesses at position `j`, or the first earlier index lacking one.
fn witnesses_at(f: &[Monomial], j: usize) -> Result<Vec<(usize, usize)>, usize> {
    let colons: Vec<Monomial> = (0..j).map(|i| colon(&f[i], &f[j])).collect();
    let linear: Vec<usize> = (0..j).filter(|&l| colons[l].degree() == 1).collect();
    (0..j)
        .map(|i| {
            linear
                .iter()
                .find(|&&l| colons[l].divides(&colons[i]))
                .map(|&l| (i, l))
                .ok_or(i)
        })
        .collect()
}

pub fn check_linear_quotients(ordered: &[Monomial]) -> Result<LinearQuotientsCertificate, LinearQuotientsFailure> {
    let mut witnesses = Vec::with_capacity(ordered.len());
    for j in 0..ordered.len() {
        match witnesses_at(ordered, j) {
            Ok(w) => witnesses.push(w),
            Err(i) => {
                return Err(LinearQuotientsFailure {
                    position: j + 1,
                    unwitnessed: i + 1,
                })
            }
        }
    }
    Ok(LinearQuotientsCertificate {
        ordering: ordered.to_vec(),
        witnesses,
        source: OrderSource::Given,
    })
}

fn is_permutation_of(candidate: &[Monomial], gens: &[Monomial]) -> bool {
    if candidate.len() != gens.len() {
        return false;
    }
    let a: HashSet<&Monomial> = candidate.iter().collect();
    a.len() == gens.len() && gens.iter().all(|g| a.contains(g))
}

/// Searches for an order of linear quotients on `gens`.
///
/// Tries `hint` (or `gens` ascending under lex when no hint is given), then
/// its reverse, then an exhaustive search over generator subsets. `None`
/// means no order exists.
pub fn find_linear_quotients_order(
    gens: &[Monomial],
    hint: Option<&[Monomial]>,
    max_gens: usize,
) -> Result<Option<LinearQuotientsCertificate>, ResolutionError> {
    let mut distinct: Vec<Monomial> = gens.to_vec();
    distinct.sort_by(|a, b| a.exponents().cmp(b.exponents()));
    distinct.dedup();
    let ascending = match hint {
        Some(h) if is_permutation_of(h, &distinct) => h.to_vec(),
        _ => distinct.clone(),
    };
    if let Ok(mut cert) = check_linear_quotients(&ascending) {
        cert.source = OrderSource::Ascending;
        return Ok(Some(cert));
    }
    let descending: Vec<Monomial> = ascending.iter().rev().cloned().collect();
    if let Ok(mut cert) = check_linear_quotients(&descending) {
        cert.source = OrderSource::Descending;
        return Ok(Some(cert));
    }
    let m = distinct.len();
    if m > max_gens || m > 63 {
        return Err(ResolutionError::TooManyGenerators {
            found: m,
            bound: max_gens.min(63),
        });
    }
    let colons: Vec<Vec<Monomial>> = (0..m)
        .map(|i| (0..m).map(|j| colon(&distinct[i], &distinct[j])).collect())
        .collect();
    let appendable = |set: u64, j: usize| -> bool {
        let members = (0..m).filter(|&i| set >> i & 1 == 1);
        members.clone().all(|i| {
            members
                .clone()
                .any(|l| colons[l][j].degree() == 1 && colons[l][j].divides(&colons[i][j]))
        })
    };
    let mut dead: HashSet<u64> = HashSet::new();
    let mut path = Vec::with_capacity(m);
    let full = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    if search(0, full, m, &appendable, &mut dead, &mut path) {
        let ordering: Vec<Monomial> = path.iter().map(|&i| distinct[i].clone()).collect();
        let mut cert = check_linear_quotients(&ordering).expect("search only appends linear positions");
        cert.source = OrderSource::Search;
        return Ok(Some(cert));
    }
    Ok(None)
}

fn search(
    set: u64,
    full: u64,
    m: usize,
    appendable: &impl Fn(u64, usize) -> bool,
    dead: &mut HashSet<u64>,
    path: &mut Vec<usize>,
) -> bool {
    if set == full {
        return true;
    }
    if dead.contains(&set) {
        return false;
    }
    for j in 0..m {
        if set >> j & 1 == 0 && appendable(set, j) {
            path.push(j);
            if search(set | 1 << j, full, m, appendable, dead, path) {
                return true;
            }
            path.pop();
        }
    }
    dead.insert(set);
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomials::Universe;
    use proptest::prelude::*;

    fn monos(u: &Universe, s: &[&str]) -> Vec<Monomial> {
        s.iter().map(|m| u.parse(m).unwrap()).collect()
    }

    fn u4() -> Universe {
        Universe::base((1..=4).map(|i| format!("x{i}")).collect())
    }

    #[test]
    fn check_examples() {
        let u = u4();
        let cert = check_linear_quotients(&monos(&u, &["x2^2", "x1*x2*x3", "x1^2*x3^2"])).unwrap();
        assert!(cert.verify());
        // position 3: f_1 = x2^2 is witnessed by f_2, whose colon is x2
        assert_eq!(cert.witnesses[2], vec![(0, 1), (1, 1)]);
        let fail = check_linear_quotients(&monos(&u, &["x1^2*x3^2", "x1*x2*x3", "x2^2"])).unwrap_err();
        assert_eq!(fail.position, 2);
        assert!(check_linear_quotients(&monos(&u, &["x1"])).unwrap().verify());
    }

    #[test]
    fn divisible_generators_fail() {
        let u = u4();
        assert!(check_linear_quotients(&monos(&u, &["x1", "x1*x2"])).is_err());
    }

    #[test]
    fn find_examples() {
        let u = u4();
        let gens = monos(&u, &["x1^2*x3^2", "x1*x2*x3", "x2^2"]);
        let cert = find_linear_quotients_order(&gens, None, 24).unwrap().unwrap();
        assert_eq!(cert.source, OrderSource::Ascending);
        assert_eq!(cert.ordering, monos(&u, &["x2^2", "x1*x2*x3", "x1^2*x3^2"]));
        assert_eq!(
            find_linear_quotients_order(&monos(&u, &["x1*x3", "x2*x4"]), None, 24).unwrap(),
            None
        );
        assert!(find_linear_quotients_order(&monos(&u, &["x1"]), None, 24)
            .unwrap()
            .is_some());
    }

    #[test]
    fn search_finds_orders_the_heuristics_miss() {
        let u = u4();
        // edges of the 4-cycle; the hint and its reverse both open with a
        // disjoint pair of edges
        let hint = monos(&u, &["x1*x2", "x3*x4", "x2*x3", "x1*x4"]);
        let gens = hint.clone();
        let cert = find_linear_quotients_order(&gens, Some(&hint), 24).unwrap().unwrap();
        assert_eq!(cert.source, OrderSource::Search);
        assert!(cert.verify());
    }

    #[test]
    fn bound_applies_only_to_search() {
        let u = Universe::base((1..=6).map(|i| format!("x{i}")).collect());
        let gens = monos(&u, &["x1*x2", "x3*x4", "x5*x6"]);
        assert!(matches!(
            find_linear_quotients_order(&gens, None, 2),
            Err(ResolutionError::TooManyGenerators { .. })
        ));
        let easy = monos(&u, &["x1", "x2", "x3"]);
        assert!(find_linear_quotients_order(&easy, None, 2).unwrap().is_some());
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    proptest! {
        #[test]
        fn search_agrees_with_permutations(
            raw in proptest::collection::vec(proptest::collection::vec(0u32..3, 3), 1..=5)
        ) {
            let mut gens: Vec<Monomial> = raw.into_iter().map(Monomial::from_exponents).collect();
            gens.sort_by(|a, b| a.exponents().cmp(b.exponents()));
            gens.dedup();
            let exists = permutations(gens.len()).iter().any(|p| {
                let order: Vec<Monomial> = p.iter().map(|&i| gens[i].clone()).collect();
                check_linear_quotients(&order).is_ok()
            });
            let found = find_linear_quotients_order(&gens, None, 24).unwrap();
            prop_assert_eq!(found.is_some(), exists);
            if let Some(c) = found {
                prop_assert!(c.verify());
            }
        }
    }
}
