//! Buchberger's algorithm for ideals generated by pure-difference binomials
//! `u - v`, and toric kernels of monomial maps by elimination.
//!
//! Every S-pair and every reduction step of a pure difference is again a pure
//! difference (or zero), so coefficients never leave `{+1, -1}` and no field
//! arithmetic is needed.

use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, HashSet};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::monomials::{minimalize, Monomial, MonomialError, MonomialIdeal, MonomialOrder, OrderKind, Universe};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GbError {
    #[error("S-pair of degree {degree} exceeds the degree cap {cap}")]
    DegreeCapExceeded { degree: u32, cap: u32 },
    #[error("initial ideal requested from a basis that is not reduced")]
    NotReduced,
    #[error(transparent)]
    Monomial(#[from] MonomialError),
}

/// `lead - trail` with `lead > trail` in the order it was built with.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Binomial {
    lead: Monomial,
    trail: Monomial,
}

impl Binomial {
    /// Orients `a - b` under `order`; `None` when the terms cancel.
    pub fn new(a: Monomial, b: Monomial, order: &MonomialOrder) -> Option<Self> {
        match order.cmp(&a, &b) {
            Ordering::Equal => None,
            Ordering::Greater => Some(Self { lead: a, trail: b }),
            Ordering::Less => Some(Self { lead: b, trail: a }),
        }
    }

    pub fn lead(&self) -> &Monomial {
        &self.lead
    }

    pub fn trail(&self) -> &Monomial {
        &self.trail
    }

    pub fn format(&self, universe: &Universe) -> String {
        format!("{} - {}", universe.format(&self.lead), universe.format(&self.trail))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GbConfig {
    /// Largest total degree of an S-pair lcm before giving up.
    pub degree_cap: u32,
    /// Also skip pairs by Buchberger's chain criterion.
    pub chain_criterion: bool,
}

impl Default for GbConfig {
    fn default() -> Self {
        Self {
            degree_cap: 40,
            chain_criterion: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    elements: Vec<Binomial>,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn universe(&self) -> &Arc<Universe> {
        self.order.universe()
    }

    pub fn elements(&self) -> &[Binomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Whether `b` lies in the ideal, by reduction to zero.
    pub fn reduces_to_zero(&self, b: &Binomial) -> bool {
        reduce(b, &self.elements, &self.order).is_none()
    }

    /// Buchberger's criterion: every S-pair reduces to zero.
    pub fn all_s_pairs_reduce(&self) -> bool {
        let e = &self.elements;
        (0..e.len()).all(|i| {
            (i + 1..e.len()).all(|j| match s_pair(&e[i], &e[j], &self.order) {
                None => true,
                Some(s) => reduce(&s, e, &self.order).is_none(),
            })
        })
    }

    /// One `lead - trail` line per element, in canonical order.
    pub fn dump(&self) -> String {
        let u = self.universe();
        self.elements.iter().map(|b| b.format(u) + "\n").collect()
    }
}

impl fmt::Display for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.dump())
    }
}

/// Rewrites `m` until no lead of `basis` divides it.
fn normal_form(mut m: Monomial, basis: &[Binomial]) -> Monomial {
    'outer: loop {
        for g in basis {
            if let Some(q) = m.div(&g.lead) {
                m = q.mul(&g.trail);
                continue 'outer;
            }
        }
        return m;
    }
}

/// Fully reduces both terms of `b`; `None` when they meet.
pub fn reduce(b: &Binomial, basis: &[Binomial], order: &MonomialOrder) -> Option<Binomial> {
    let lead = normal_form(b.lead.clone(), basis);
    let trail = normal_form(b.trail.clone(), basis);
    Binomial::new(lead, trail, order)
}

pub fn s_pair(f: &Binomial, g: &Binomial, order: &MonomialOrder) -> Option<Binomial> {
    let lcm = f.lead.lcm(&g.lead);
    let a = lcm.div(&f.lead).expect("lcm is a multiple").mul(&f.trail);
    let b = lcm.div(&g.lead).expect("lcm is a multiple").mul(&g.trail);
    Binomial::new(a, b, order)
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &[Binomial], order: &MonomialOrder, config: GbConfig) -> Result<GroebnerBasis, GbError> {
    for g in gens {
        order.universe().check(&g.lead)?;
        order.universe().check(&g.trail)?;
    }
    let nvars = order.universe().len();
    // variable ranks under the order, highest first
    let mut ranked: Vec<usize> = (0..nvars).collect();
    ranked.sort_by(|&i, &j| order.cmp(&Monomial::var(nvars, j), &Monomial::var(nvars, i)));
    let key = |m: &Monomial| -> Vec<u32> { ranked.iter().map(|&i| m.exponent(i)).collect() };

    let mut basis: Vec<Binomial> = Vec::new();
    let mut queue: BinaryHeap<Reverse<(Vec<u32>, usize, usize)>> = BinaryHeap::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    let push = |basis: &mut Vec<Binomial>,
                queue: &mut BinaryHeap<Reverse<(Vec<u32>, usize, usize)>>,
                pending: &mut HashSet<(usize, usize)>,
                h: Binomial| {
        let j = basis.len();
        for (i, g) in basis.iter().enumerate() {
            queue.push(Reverse((key(&g.lead.lcm(&h.lead)), i, j)));
            pending.insert((i, j));
        }
        basis.push(h);
    };

    for g in gens {
        if let Some(h) = reduce(g, &basis, order) {
            push(&mut basis, &mut queue, &mut pending, h);
        }
    }

    while let Some(Reverse((_, i, j))) = queue.pop() {
        pending.remove(&(i, j));
        let (fi, fj) = (&basis[i], &basis[j]);
        if fi.lead.is_coprime(&fj.lead) {
            continue;
        }
        let lcm = fi.lead.lcm(&fj.lead);
        if config.chain_criterion {
            let chained = (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && basis[k].lead.divides(&lcm)
                    && !pending.contains(&(i.min(k), i.max(k)))
                    && !pending.contains(&(j.min(k), j.max(k)))
            });
            if chained {
                continue;
            }
        }
        if lcm.degree() > config.degree_cap {
            return Err(GbError::DegreeCapExceeded {
                degree: lcm.degree(),
                cap: config.degree_cap,
            });
        }
        let Some(s) = s_pair(fi, fj, order) else { continue };
        if let Some(h) = reduce(&s, &basis, order) {
            push(&mut basis, &mut queue, &mut pending, h);
        }
    }

    Ok(GroebnerBasis {
        order: order.clone(),
        elements: interreduce(basis, order),
        reduced: true,
    })
}

/// Minimal leads, fully reduced trails, sorted by lead descending.
fn interreduce(basis: Vec<Binomial>, order: &MonomialOrder) -> Vec<Binomial> {
    let mut minimal: Vec<Binomial> = Vec::new();
    for (idx, b) in basis.iter().enumerate() {
        let dominated = basis
            .iter()
            .enumerate()
            .any(|(other, c)| other != idx && c.lead.divides(&b.lead) && (c.lead != b.lead || other < idx));
        if !dominated {
            minimal.push(b.clone());
        }
    }
    let mut out: Vec<Binomial> = minimal
        .iter()
        .map(|b| Binomial {
            lead: b.lead.clone(),
            trail: normal_form(b.trail.clone(), &minimal),
        })
        .collect();
    out.sort_by(|a, b| order.cmp(&b.lead, &a.lead).then_with(|| order.cmp(&b.trail, &a.trail)));
    out
}

/// Kernel of `K[S, y_1..y_q] -> K[S, t]`, `x -> x`, `y_j -> images[j]`.
///
/// `images` live in `s_universe` extended by `t`. The result is the reduced
/// Gröbner basis of the kernel under the sharp order on `S ∪ Y`, obtained by
/// eliminating `t` from `(y_j - images[j])`.
pub fn toric_kernel(s_universe: &Universe, images: &[Monomial], config: GbConfig) -> Result<GroebnerBasis, GbError> {
    let q = images.len();
    let image_universe = s_universe.extend(0, true);
    for m in images {
        image_universe.check(m)?;
    }
    let big = Arc::new(s_universe.extend(q, true));
    let n = s_universe.s_count();
    let t = big.t_index().expect("elimination universe has t");
    let elim = MonomialOrder::new(OrderKind::ElimSharp, big.clone());
    let gens: Vec<Binomial> = images
        .iter()
        .enumerate()
        .filter_map(|(j, img)| {
            let mut exps = vec![0u32; big.len()];
            exps[..n].copy_from_slice(&img.exponents()[..n]);
            exps[t] = img.exponent(n);
            Binomial::new(
                Monomial::var(big.len(), big.y_index(j)),
                Monomial::from_exponents(exps),
                &elim,
            )
        })
        .collect();
    let full = buchberger(&gens, &elim, config)?;

    let target = Arc::new(s_universe.extend(q, false));
    let sharp = MonomialOrder::new(OrderKind::Sharp, target.clone());
    let width = target.len();
    let mut elements: Vec<Binomial> = full
        .elements
        .iter()
        .filter(|b| b.lead.exponent(t) == 0 && b.trail.exponent(t) == 0)
        .map(|b| {
            Binomial::new(b.lead.truncate(width), b.trail.truncate(width), &sharp)
                .expect("distinct terms stay distinct")
        })
        .collect();
    elements.sort_by(|a, b| sharp.cmp(&b.lead, &a.lead));
    Ok(GroebnerBasis {
        order: sharp,
        elements,
        reduced: true,
    })
}

/// The minimal generators of the initial ideal of a reduced basis.
pub fn initial_ideal(basis: &GroebnerBasis) -> Result<MonomialIdeal, GbError> {
    if !basis.reduced {
        return Err(GbError::NotReduced);
    }
    Ok(minimalize(
        basis.universe().clone(),
        basis.elements.iter().map(|b| b.lead.clone()),
    )?)
}
