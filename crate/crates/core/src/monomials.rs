//! Exponent-vector monomials over a fixed variable universe, the lex-type
//! orders used by the Rees pipeline, and monomial ideals.
//!
//! A [`Universe`] lays its variables out as `s_1..s_n, y_1..y_q, t`: the base
//! ring variables in priority order, then the Rees variables, then the
//! optional auxiliary `t`. Monomials store a dense exponent vector in that
//! layout.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::graphs::{minimal_vertex_covers, Graph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MonomialError {
    #[error("universe mismatch: expected {expected} variables, got {found}")]
    UniverseMismatch { expected: usize, found: usize },
    #[error("cannot parse monomial `{text}`: {reason}")]
    Parse { text: String, reason: String },
    #[error("power exponent must be at least 1")]
    ZeroPower,
}

/// The variables of a polynomial ring: base variables, Rees variables and an
/// optional elimination variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Universe {
    s_names: Vec<String>,
    y_count: usize,
    has_t: bool,
}

impl Universe {
    /// Base ring only.
    pub fn base(s_names: Vec<String>) -> Self {
        Self {
            s_names,
            y_count: 0,
            has_t: false,
        }
    }

    pub fn new(s_names: Vec<String>, y_count: usize, has_t: bool) -> Self {
        Self {
            s_names,
            y_count,
            has_t,
        }
    }

    /// Same base variables with `y_count` Rees variables and optionally `t`.
    pub fn extend(&self, y_count: usize, has_t: bool) -> Self {
        Self {
            s_names: self.s_names.clone(),
            y_count,
            has_t,
        }
    }

    pub fn len(&self) -> usize {
        self.s_names.len() + self.y_count + usize::from(self.has_t)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn s_count(&self) -> usize {
        self.s_names.len()
    }

    pub fn y_count(&self) -> usize {
        self.y_count
    }

    pub fn has_t(&self) -> bool {
        self.has_t
    }

    pub fn s_names(&self) -> &[String] {
        &self.s_names
    }

    pub fn s_range(&self) -> std::ops::Range<usize> {
        0..self.s_names.len()
    }

    pub fn y_range(&self) -> std::ops::Range<usize> {
        let n = self.s_names.len();
        n..n + self.y_count
    }

    /// Index of the Rees variable `y_{j+1}`.
    pub fn y_index(&self, j: usize) -> usize {
        self.s_names.len() + j
    }

    pub fn t_index(&self) -> Option<usize> {
        self.has_t.then(|| self.s_names.len() + self.y_count)
    }

    pub fn name(&self, var: usize) -> String {
        let n = self.s_names.len();
        if var < n {
            self.s_names[var].clone()
        } else if var < n + self.y_count {
            format!("y{}", var - n + 1)
        } else {
            "t".to_string()
        }
    }

    pub fn s_degree(&self, m: &Monomial) -> u32 {
        m.exps[self.s_range()].iter().sum()
    }

    pub fn y_degree(&self, m: &Monomial) -> u32 {
        m.exps[self.y_range()].iter().sum()
    }

    pub fn t_degree(&self, m: &Monomial) -> u32 {
        self.t_index().map_or(0, |t| m.exps[t])
    }

    pub fn check(&self, m: &Monomial) -> Result<(), MonomialError> {
        if m.len() == self.len() {
            Ok(())
        } else {
            Err(MonomialError::UniverseMismatch {
                expected: self.len(),
                found: m.len(),
            })
        }
    }

    /// Renders `m` as `x1^2*x3*y2`, or `1` for the unit monomial.
    pub fn format(&self, m: &Monomial) -> String {
        let parts: Vec<String> = m
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    self.name(i)
                } else {
                    format!("{}^{}", self.name(i), e)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// Parses the `format` syntax. Repeated factors multiply.
    pub fn parse(&self, text: &str) -> Result<Monomial, MonomialError> {
        let err = |reason: &str| MonomialError::Parse {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = text.trim();
        let mut exps = vec![0u32; self.len()];
        if trimmed == "1" {
            return Ok(Monomial::from_exponents(exps));
        }
        if trimmed.is_empty() {
            return Err(err("empty"));
        }
        for factor in trimmed.split('*') {
            let factor = factor.trim();
            let (name, power) = match factor.split_once('^') {
                Some((n, p)) => (n.trim(), p.trim().parse::<u32>().map_err(|_| err("bad exponent"))?),
                None => (factor, 1),
            };
            let var = (0..self.len())
                .find(|&i| self.name(i) == name)
                .ok_or_else(|| err(&format!("unknown variable `{name}`")))?;
            exps[var] = exps[var].checked_add(power).ok_or_else(|| err("exponent overflow"))?;
        }
        Ok(Monomial::from_exponents(exps))
    }
}

/// A monomial as a dense exponent vector with cached total degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u32]>,
    degree: u32,
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.exps[..])
    }
}

fn add_exp(a: u32, b: u32) -> u32 {
    a.checked_add(b).expect("monomial exponent overflow")
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self {
            exps: vec![0; nvars].into_boxed_slice(),
            degree: 0,
        }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Self::from_exponents(exps)
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        let degree = exps.iter().fold(0u32, |acc, &e| add_exp(acc, e));
        Self {
            exps: exps.into_boxed_slice(),
            degree,
        }
    }

    /// Squarefree monomial on the given variable indices.
    pub fn squarefree(nvars: usize, support: impl IntoIterator<Item = usize>) -> Self {
        let mut exps = vec![0; nvars];
        for i in support {
            exps[i] = 1;
        }
        Self::from_exponents(exps)
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(&a, &b)| add_exp(a, b))
            .collect();
        Monomial::from_exponents(exps)
    }

    /// Exact quotient, `None` unless `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let exps = self.exps.iter().zip(other.exps.iter()).map(|(&a, &b)| a - b).collect();
        Some(Monomial::from_exponents(exps))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(&a, &b)| a.max(b))
            .collect();
        Monomial::from_exponents(exps)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(&a, &b)| a.min(b))
            .collect();
        Monomial::from_exponents(exps)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        let exps = self
            .exps
            .iter()
            .map(|&a| a.checked_mul(k).expect("monomial exponent overflow"))
            .collect();
        Monomial::from_exponents(exps)
    }

    /// Keeps the first `n` coordinates.
    pub fn truncate(&self, n: usize) -> Monomial {
        Monomial::from_exponents(self.exps[..n].to_vec())
    }

    /// Pads with zero exponents up to `n` coordinates.
    pub fn extend(&self, n: usize) -> Monomial {
        let mut exps = self.exps.to_vec();
        exps.resize(n, 0);
        Monomial {
            exps: exps.into_boxed_slice(),
            degree: self.degree,
        }
    }
}

/// `u / gcd(u, v)`; the generator of the colon ideal `(u) : v`.
pub fn colon(u: &Monomial, v: &Monomial) -> Monomial {
    let exps = u
        .exps
        .iter()
        .zip(v.exps.iter())
        .map(|(&a, &b)| a.saturating_sub(b))
        .collect();
    Monomial::from_exponents(exps)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Lex on the base variables; remaining blocks break ties.
    LexOnS,
    /// Lex on `y_1 > ... > y_q`; remaining blocks break ties.
    LexOnY,
    /// Lex on the Rees variables, ties broken by lex on the base variables.
    Sharp,
    /// Degree in `t` first, then `Sharp`.
    ElimSharp,
}

/// A lex order given by an explicit variable priority over a universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    kind: OrderKind,
    universe: Arc<Universe>,
    priority: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, universe: Arc<Universe>) -> Self {
        let s = universe.s_range();
        let y = universe.y_range();
        let t = universe.t_index();
        let mut priority: Vec<usize> = Vec::with_capacity(universe.len());
        match kind {
            OrderKind::LexOnS => {
                priority.extend(s);
                priority.extend(y);
                priority.extend(t);
            }
            OrderKind::LexOnY | OrderKind::Sharp => {
                priority.extend(y);
                priority.extend(s);
                priority.extend(t);
            }
            OrderKind::ElimSharp => {
                priority.extend(t);
                priority.extend(y);
                priority.extend(s);
            }
        }
        Self {
            kind,
            universe,
            priority,
        }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    /// Total comparison; callers guarantee both monomials live in this universe.
    pub fn cmp(&self, u: &Monomial, v: &Monomial) -> Ordering {
        for &i in &self.priority {
            match u.exps[i].cmp(&v.exps[i]) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    pub fn compare(&self, u: &Monomial, v: &Monomial) -> Result<Ordering, MonomialError> {
        self.universe.check(u)?;
        self.universe.check(v)?;
        Ok(self.cmp(u, v))
    }

    pub fn max<'a>(&self, u: &'a Monomial, v: &'a Monomial) -> &'a Monomial {
        if self.cmp(u, v) == Ordering::Less {
            v
        } else {
            u
        }
    }
}

/// A monomial ideal kept as its inclusion-minimal generating set, sorted
/// descending under the universe's sharp order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    universe: Arc<Universe>,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(universe: Arc<Universe>) -> Self {
        Self {
            universe,
            gens: Vec::new(),
        }
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.gens.iter().map(Monomial::degree).min()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.gens.iter().map(Monomial::degree).max()
    }

    pub fn is_equigenerated(&self) -> bool {
        self.min_degree() == self.max_degree()
    }

    pub fn format(&self) -> Vec<String> {
        self.gens.iter().map(|g| self.universe.format(g)).collect()
    }
}

/// Inclusion-minimal generators of the ideal generated by `gens`.
pub fn minimalize(
    universe: Arc<Universe>,
    gens: impl IntoIterator<Item = Monomial>,
) -> Result<MonomialIdeal, MonomialError> {
    let mut all: Vec<Monomial> = gens.into_iter().collect();
    for g in &all {
        universe.check(g)?;
    }
    all.sort_by_key(Monomial::degree);
    let mut kept: Vec<Monomial> = Vec::new();
    for g in all {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    let order = MonomialOrder::new(OrderKind::Sharp, universe.clone());
    kept.sort_by(|a, b| order.cmp(b, a));
    Ok(MonomialIdeal { universe, gens: kept })
}

/// Minimal generators of `I^k`, by expanding every k-fold product of
/// generators.
pub fn power(ideal: &MonomialIdeal, k: u32) -> Result<MonomialIdeal, MonomialError> {
    if k == 0 {
        return Err(MonomialError::ZeroPower);
    }
    let gens = ideal.generators();
    let mut products = std::collections::HashSet::new();
    let mut choice = vec![0usize; k as usize];
    if !gens.is_empty() {
        loop {
            let product = choice
                .iter()
                .fold(Monomial::one(ideal.universe.len()), |acc, &i| acc.mul(&gens[i]));
            products.insert(product);
            // next multiset in non-decreasing index order
            let mut pos = choice.len();
            while pos > 0 && choice[pos - 1] == gens.len() - 1 {
                pos -= 1;
            }
            if pos == 0 {
                break;
            }
            let next = choice[pos - 1] + 1;
            for c in &mut choice[pos - 1..] {
                *c = next;
            }
        }
    }
    minimalize(ideal.universe.clone(), products)
}

/// All monomials of degree `d` in the universe's variables.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(var: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if var + 1 == exps.len() {
            exps[var] = left;
            out.push(Monomial::from_exponents(exps.clone()));
            exps[var] = 0;
            return;
        }
        for e in (0..=left).rev() {
            exps[var] = e;
            rec(var + 1, left - e, exps, out);
        }
        exps[var] = 0;
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(0, d, &mut vec![0; nvars], &mut out);
    out
}

/// The ideal generated by the degree-`j` monomials of `I`.
pub fn component(ideal: &MonomialIdeal, j: u32) -> MonomialIdeal {
    let n = ideal.universe.len();
    let mut out = std::collections::HashSet::new();
    for g in ideal.generators().iter().filter(|g| g.degree() <= j) {
        for m in monomials_of_degree(n, j - g.degree()) {
            out.insert(g.mul(&m));
        }
    }
    minimalize(ideal.universe.clone(), out).expect("component stays in its universe")
}

/// The cover ideal `(u_C : C minimal vertex cover)` in the graph's variables.
pub fn cover_ideal(g: &Graph) -> MonomialIdeal {
    let universe = Arc::new(Universe::base(g.labels()));
    let n = g.vertex_count();
    let gens = minimal_vertex_covers(g)
        .into_iter()
        .map(|c| Monomial::squarefree(n, c.members().iter().copied()));
    minimalize(universe, gens).expect("cover monomials live in the graph universe")
}
