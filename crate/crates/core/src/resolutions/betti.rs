//! Multigraded Betti numbers of monomial ideals via upper Koszul simplicial
//! complexes: `beta_{i,b}(I) = dim H~_{i-1}(K^b(I))`, where `K^b(I)` is the
//! set of squarefree `tau` with `x^b / tau` in `I`. Only multidegrees in the
//! lcm lattice of the minimal generators can carry nonzero Betti numbers.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write as _;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::ResolutionError;
use crate::monomials::{Monomial, MonomialIdeal, Universe};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BettiConfig {
    pub max_gens: usize,
    pub max_lattice: usize,
}

impl Default for BettiConfig {
    fn default() -> Self {
        Self {
            max_gens: 18,
            max_lattice: 4096,
        }
    }
}

/// Betti numbers at one lcm-lattice multidegree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultidegreeBetti {
    pub multidegree: Monomial,
    /// `ranks[i] = beta_{i, b}`.
    pub ranks: Vec<u64>,
    /// Reduced Euler characteristic of `K^b`, from its face counts.
    pub reduced_euler: i64,
}

impl MultidegreeBetti {
    /// `sum_i (-1)^i beta_{i,b} = -chi~(K^b)`.
    pub fn euler_consistent(&self) -> bool {
        let alt: i64 = self
            .ranks
            .iter()
            .enumerate()
            .map(|(i, &r)| if i % 2 == 0 { r as i64 } else { -(r as i64) })
            .sum();
        alt == -self.reduced_euler
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    universe: Arc<Universe>,
    /// `(i, j) -> beta_{i,j}`, nonzero entries only.
    entries: BTreeMap<(usize, u32), u64>,
    multigraded: Vec<MultidegreeBetti>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiEntryJson {
    pub i: usize,
    pub j: u32,
    pub rank: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultigradedEntryJson {
    pub i: usize,
    pub multidegree: String,
    pub rank: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiTableJson {
    pub entries: Vec<BettiEntryJson>,
    pub multigraded: Vec<MultigradedEntryJson>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(usize, u32), u64> {
        &self.entries
    }

    pub fn multigraded(&self) -> &[MultidegreeBetti] {
        &self.multigraded
    }

    /// Largest homological index with a nonzero entry.
    pub fn length(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|(&(ii, _), _)| ii == i)
            .map(|(_, &r)| r)
            .sum()
    }

    /// Macaulay-style layout: columns are homological degrees `i`, rows are
    /// `j - i`, zeros print as `.`.
    pub fn to_text(&self) -> String {
        let Some(len) = self.length() else {
            return "(zero)\n".to_string();
        };
        let rows: Vec<u32> = {
            let mut r: Vec<u32> = self.entries.keys().map(|&(i, j)| j - i as u32).collect();
            r.sort_unstable();
            r.dedup();
            r
        };
        let cell = |v: u64| if v == 0 { ".".to_string() } else { v.to_string() };
        let mut columns: Vec<Vec<String>> = Vec::new();
        for i in 0..=len {
            let mut col = vec![i.to_string(), self.total(i).to_string()];
            col.extend(rows.iter().map(|&r| cell(self.get(i, r + i as u32))));
            columns.push(col);
        }
        let widths: Vec<usize> = columns
            .iter()
            .map(|c| c.iter().map(String::len).max().unwrap_or(1))
            .collect();
        let mut labels = vec![String::new(), "total:".to_string()];
        labels.extend(rows.iter().map(|r| format!("{r}:")));
        let label_width = labels.iter().map(String::len).max().unwrap_or(0);
        let mut out = String::new();
        for (row, label) in labels.iter().enumerate() {
            let _ = write!(out, "{label:>label_width$}");
            for (col, w) in columns.iter().zip(&widths) {
                let _ = write!(out, " {:>w$}", col[row], w = *w);
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> BettiTableJson {
        BettiTableJson {
            entries: self
                .entries
                .iter()
                .map(|(&(i, j), &rank)| BettiEntryJson { i, j, rank })
                .collect(),
            multigraded: self
                .multigraded
                .iter()
                .flat_map(|m| {
                    m.ranks
                        .iter()
                        .enumerate()
                        .filter(|(_, &r)| r > 0)
                        .map(|(i, &rank)| MultigradedEntryJson {
                            i,
                            multidegree: self.universe.format(&m.multidegree),
                            rank,
                        })
                })
                .collect(),
        }
    }
}

/// All lcms of nonempty subsets of `gens`.
pub fn lcm_lattice(gens: &[Monomial], max_size: usize) -> Result<Vec<Monomial>, ResolutionError> {
    let mut seen: HashSet<Monomial> = gens.iter().cloned().collect();
    let mut frontier: Vec<Monomial> = seen.iter().cloned().collect();
    while let Some(m) = frontier.pop() {
        for g in gens {
            let l = m.lcm(g);
            if seen.insert(l.clone()) {
                if seen.len() > max_size {
                    return Err(ResolutionError::LatticeTooLarge { bound: max_size });
                }
                frontier.push(l);
            }
        }
    }
    if seen.len() > max_size {
        return Err(ResolutionError::LatticeTooLarge { bound: max_size });
    }
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| b.exponents().cmp(a.exponents()))
    });
    Ok(out)
}

/// Faces of the upper Koszul complex at `b`, as sorted lists of variable
/// indices, grouped by size (index 0 holds the empty face if present).
pub fn upper_koszul_faces(gens: &[Monomial], b: &Monomial) -> Vec<Vec<Vec<usize>>> {
    let relevant: Vec<&Monomial> = gens.iter().filter(|g| g.divides(b)).collect();
    let support: Vec<usize> = b.support().collect();
    let member = |face: &[usize]| {
        let mut e = b.exponents().to_vec();
        for &v in face {
            e[v] -= 1;
        }
        let m = Monomial::from_exponents(e);
        relevant.iter().any(|g| g.divides(&m))
    };
    let mut levels: Vec<Vec<Vec<usize>>> = Vec::new();
    if !member(&[]) {
        return levels;
    }
    levels.push(vec![Vec::new()]);
    loop {
        let last = levels.last().unwrap();
        let mut next = Vec::new();
        for face in last {
            let start = face
                .last()
                .map_or(0, |&v| support.iter().position(|&s| s == v).unwrap() + 1);
            for &v in &support[start..] {
                let mut bigger = face.clone();
                bigger.push(v);
                if member(&bigger) {
                    next.push(bigger);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        levels.push(next);
    }
    levels
}

/// Rank over the rationals by fraction-free (Bareiss) elimination.
#[allow(clippy::needless_range_loop)]
pub fn rank_over_rationals(mut rows: Vec<Vec<BigInt>>) -> usize {
    let nrows = rows.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        let Some(pivot) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (top, rest) = rows.split_at_mut(rank + 1);
        let p = &top[rank];
        for row in rest.iter_mut() {
            if row[col].is_zero() {
                for c in col + 1..ncols {
                    row[c] = &p[col] * &row[c] / &prev;
                }
            } else {
                for c in col + 1..ncols {
                    row[c] = (&p[col] * &row[c] - &row[col] * &p[c]) / &prev;
                }
                row[col] = BigInt::zero();
            }
        }
        prev = p[col].clone();
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// Dimensions of reduced homology `H~_d` for `d = -1, 0, 1, ...`.
fn reduced_homology(levels: &[Vec<Vec<usize>>]) -> Vec<u64> {
    // boundary_ranks[s] = rank of the map from size-s faces to size-(s-1) faces
    let mut boundary_ranks = vec![0usize; levels.len() + 1];
    for s in 1..levels.len() {
        let index: HashMap<&[usize], usize> = levels[s - 1]
            .iter()
            .enumerate()
            .map(|(i, f)| (f.as_slice(), i))
            .collect();
        let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); levels[s - 1].len()]; levels[s].len()];
        for (r, face) in levels[s].iter().enumerate() {
            for drop in 0..face.len() {
                let mut sub = face.clone();
                sub.remove(drop);
                let c = index[sub.as_slice()];
                rows[r][c] = if drop % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            }
        }
        boundary_ranks[s] = rank_over_rationals(rows);
    }
    (0..levels.len())
        .map(|s| (levels[s].len() - boundary_ranks[s] - boundary_ranks[s + 1]) as u64)
        .collect()
}

fn reduced_euler(levels: &[Vec<Vec<usize>>]) -> i64 {
    levels
        .iter()
        .enumerate()
        .map(|(s, faces)| {
            if s % 2 == 1 {
                faces.len() as i64
            } else {
                -(faces.len() as i64)
            }
        })
        .sum()
}

pub fn betti_table(ideal: &MonomialIdeal, config: BettiConfig) -> Result<BettiTable, ResolutionError> {
    let gens = ideal.generators();
    if gens.len() > config.max_gens {
        return Err(ResolutionError::TooManyGenerators {
            found: gens.len(),
            bound: config.max_gens,
        });
    }
    let lattice = lcm_lattice(gens, config.max_lattice)?;
    let mut entries = BTreeMap::new();
    let mut multigraded = Vec::with_capacity(lattice.len());
    for b in lattice {
        let levels = upper_koszul_faces(gens, &b);
        let homology = reduced_homology(&levels);
        // beta_{i,b} = H~_{i-1}; homology[0] is H~_{-1}
        let ranks = homology;
        for (i, &r) in ranks.iter().enumerate() {
            if r > 0 {
                *entries.entry((i, b.degree())).or_insert(0) += r;
            }
        }
        multigraded.push(MultidegreeBetti {
            reduced_euler: reduced_euler(&levels),
            multidegree: b,
            ranks,
        });
    }
    Ok(BettiTable {
        universe: ideal.universe().clone(),
        entries,
        multigraded,
    })
}

/// Equigenerated in some degree `d` with `beta_{i,j} = 0` unless `j = i + d`.
pub fn has_linear_resolution(ideal: &MonomialIdeal, config: BettiConfig) -> Result<bool, ResolutionError> {
    if !ideal.is_equigenerated() {
        return Ok(false);
    }
    let Some(d) = ideal.min_degree() else { return Ok(true) };
    let table = betti_table(ideal, config)?;
    Ok(table.entries.keys().all(|&(i, j)| j == i as u32 + d))
}
