//! Rees algebra presentations of monomial ideals.
//!
//! For `I = (u_1, ..., u_q)` with `u_1 > ... > u_q` under lex, the presentation
//! map sends `y_j` to `u_j t`. Its kernel `J` is computed under the sharp
//! order (lex on `y_1 > ... > y_q`, ties broken by lex on the base variables).

use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::binomial_gb::{initial_ideal, toric_kernel, GbConfig, GbError, GroebnerBasis};
use crate::monomials::{power, Monomial, MonomialError, MonomialIdeal, MonomialOrder, OrderKind, Universe};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReesError {
    #[error("the zero ideal has no Rees presentation")]
    ZeroIdeal,
    #[error(transparent)]
    Gb(#[from] GbError),
    #[error(transparent)]
    Monomial(#[from] MonomialError),
}

#[derive(Debug, Clone)]
pub struct ReesPresentation {
    ideal: MonomialIdeal,
    /// `u_1 > ... > u_q` under lex; `y_j` maps to `generators[j-1] * t`.
    generators: Vec<Monomial>,
    basis: GroebnerBasis,
    initial: MonomialIdeal,
}

impl ReesPresentation {
    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn q(&self) -> usize {
        self.generators.len()
    }

    pub fn basis(&self) -> &GroebnerBasis {
        &self.basis
    }

    /// The initial ideal of `J` under the sharp order.
    pub fn initial_ideal(&self) -> &MonomialIdeal {
        &self.initial
    }

    pub fn universe(&self) -> &Arc<Universe> {
        self.basis.universe()
    }

    /// `I = (1)`: one generator, trivial kernel.
    pub fn is_degenerate(&self) -> bool {
        self.ideal.is_unit()
    }

    /// Image of a monomial of `T` in `S[t]`, as (base part, t-degree).
    pub fn evaluate(&self, m: &Monomial) -> (Monomial, u32) {
        let u = self.universe();
        let n = u.s_count();
        let mut image = m.truncate(n);
        let mut t = 0;
        for j in 0..self.q() {
            let e = m.exponent(u.y_index(j));
            if e > 0 {
                image = image.mul(&self.generators[j].pow(e));
                t += e;
            }
        }
        (image, t)
    }

    /// Product of the generators indexed by a pure `y` monomial.
    pub fn mapped_product(&self, y_monomial: &Monomial) -> Monomial {
        self.evaluate(y_monomial).0
    }
}

/// Presentation of `I` with its kernel basis under the sharp order.
pub fn rees_presentation(ideal: &MonomialIdeal, config: GbConfig) -> Result<ReesPresentation, ReesError> {
    if ideal.is_zero() {
        return Err(ReesError::ZeroIdeal);
    }
    let s = ideal.universe().clone();
    let lex = MonomialOrder::new(OrderKind::LexOnS, s.clone());
    let mut generators = ideal.generators().to_vec();
    generators.sort_by(|a, b| lex.cmp(b, a));
    let with_t = s.extend(0, true);
    let t = with_t.t_index().expect("t present");
    let images: Vec<Monomial> = generators
        .iter()
        .map(|g| {
            let mut e = g.extend(with_t.len()).exponents().to_vec();
            e[t] = 1;
            Monomial::from_exponents(e)
        })
        .collect();
    let basis = toric_kernel(&s, &images, config)?;
    let initial = initial_ideal(&basis)?;
    Ok(ReesPresentation {
        ideal: ideal.clone(),
        generators,
        basis,
        initial,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XConditionReport {
    pub holds: bool,
    /// Minimal generators of `in(J)` of base degree at least two.
    pub offending_generators: Vec<Monomial>,
    pub quadratic: bool,
    /// Minimal generators of `in(J)` whose total degree is not two.
    pub quadratic_offenders: Vec<Monomial>,
}

/// Wire form of the x-condition report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReesReportJson {
    pub x_condition: bool,
    pub quadratic: bool,
    pub offenders: Vec<String>,
    #[serde(rename = "in_J_generators")]
    pub in_j_generators: Vec<String>,
    pub basis_size: usize,
}

pub fn x_condition(p: &ReesPresentation) -> XConditionReport {
    let u = p.universe();
    let gens = p.initial.generators();
    let offending_generators: Vec<Monomial> = gens.iter().filter(|g| u.s_degree(g) > 1).cloned().collect();
    let quadratic_offenders: Vec<Monomial> = gens.iter().filter(|g| g.degree() != 2).cloned().collect();
    XConditionReport {
        holds: offending_generators.is_empty(),
        offending_generators,
        quadratic: quadratic_offenders.is_empty(),
        quadratic_offenders,
    }
}

impl XConditionReport {
    pub fn to_json(&self, p: &ReesPresentation) -> ReesReportJson {
        let u = p.universe();
        ReesReportJson {
            x_condition: self.holds,
            quadratic: self.quadratic,
            offenders: self.offending_generators.iter().map(|m| u.format(m)).collect(),
            in_j_generators: p.initial.format(),
            basis_size: p.basis.len(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardMonomialSet {
    pub k: u32,
    /// Degree-`k` monomials in `y` outside `in(J)`, ascending under lex on `y`.
    pub members: Vec<Monomial>,
    /// `u_{i_1} ... u_{i_k}` for each member, in the same order.
    pub mapped_generators: Vec<Monomial>,
    /// Set when the presentation is degenerate and nothing was enumerated.
    pub diagnostic: Option<String>,
}

/// Standard monomials of bidegree `(*, k)` that involve only `y`.
pub fn standard_monomials(p: &ReesPresentation, k: u32) -> StandardMonomialSet {
    if p.is_degenerate() {
        return StandardMonomialSet {
            k,
            members: Vec::new(),
            mapped_generators: Vec::new(),
            diagnostic: Some("unit ideal: the presentation has no relations to test".into()),
        };
    }
    let u = p.universe();
    let q = p.q();
    // only pure-y generators can divide a pure-y monomial
    let pure_y: Vec<&Monomial> = p.initial.generators().iter().filter(|g| u.s_degree(g) == 0).collect();
    let mut members = Vec::new();
    let mut exps = vec![0u32; u.len()];
    enumerate_multisets(u, q, k, 0, &mut exps, &pure_y, &mut members);
    let sharp = MonomialOrder::new(OrderKind::Sharp, u.clone());
    members.sort_by(|a, b| sharp.cmp(a, b));
    let mapped_generators = members.iter().map(|m| p.mapped_product(m)).collect();
    StandardMonomialSet {
        k,
        members,
        mapped_generators,
        diagnostic: None,
    }
}

fn enumerate_multisets(
    u: &Universe,
    q: usize,
    left: u32,
    from: usize,
    exps: &mut Vec<u32>,
    pure_y: &[&Monomial],
    out: &mut Vec<Monomial>,
) {
    let current = Monomial::from_exponents(exps.clone());
    if pure_y.iter().any(|g| g.divides(&current)) {
        return;
    }
    if left == 0 {
        out.push(current);
        return;
    }
    for j in from..q {
        let var = u.y_index(j);
        exps[var] += 1;
        enumerate_multisets(u, q, left - 1, j, exps, pure_y, out);
        exps[var] -= 1;
    }
}

/// Whether the mapped standard monomials of degree `k` are exactly the
/// minimal generators of `I^k`.
pub fn minimal_generation_check(p: &ReesPresentation, k: u32) -> Result<bool, ReesError> {
    let std = standard_monomials(p, k);
    let target = power(p.ideal(), k)?;
    let mut mapped = std.mapped_generators.clone();
    let n = mapped.len();
    mapped.sort_by(|a, b| a.exponents().cmp(b.exponents()));
    mapped.dedup();
    if mapped.len() != n || n != target.len() {
        return Ok(false);
    }
    Ok(mapped.iter().all(|m| target.generators().contains(m)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomial_gb::Binomial;
    use crate::graphs::{attach, edgeless, standard_family, Family, Graph};
    use crate::monomials::cover_ideal;

    fn present(g: &Graph) -> ReesPresentation {
        rees_presentation(&cover_ideal(g), GbConfig::default()).unwrap()
    }

    #[test]
    fn cover_ideal_examples() {
        assert_eq!(
            cover_ideal(&standard_family(Family::Path(2)).unwrap()).format(),
            vec!["x1", "x2"]
        );
        assert_eq!(
            cover_ideal(&standard_family(Family::Path(3)).unwrap()).format(),
            vec!["x1*x3", "x2"]
        );
        assert_eq!(
            cover_ideal(&standard_family(Family::Cycle(4)).unwrap()).format(),
            vec!["x1*x3", "x2*x4"]
        );
        let unit = cover_ideal(&edgeless(2));
        assert!(unit.is_unit());
    }

    #[test]
    fn presentation_examples() {
        assert_eq!(
            present(&standard_family(Family::Path(2)).unwrap()).basis().dump(),
            "x2*y1 - x1*y2\n"
        );
        let p3 = present(&standard_family(Family::Path(3)).unwrap());
        assert_eq!(p3.basis().dump(), "x2*y1 - x1*x3*y2\n");
        assert_eq!(p3.universe().format(&p3.generators()[0]), "x1*x3");
        let c4 = present(&standard_family(Family::Cycle(4)).unwrap());
        assert_eq!(c4.basis().dump(), "x2*x4*y1 - x1*x3*y2\n");
    }

    #[test]
    fn zero_ideal_is_rejected() {
        let u = Arc::new(Universe::base(vec!["x1".into()]));
        let zero = MonomialIdeal::zero(u);
        assert!(matches!(
            rees_presentation(&zero, GbConfig::default()),
            Err(ReesError::ZeroIdeal)
        ));
    }

    #[test]
    fn unit_ideal_is_degenerate() {
        let p = present(&edgeless(3));
        assert!(p.is_degenerate());
        assert_eq!(p.q(), 1);
        assert!(p.basis().is_empty());
        let std = standard_monomials(&p, 2);
        assert!(std.members.is_empty());
        assert!(std.diagnostic.is_some());
    }

    #[test]
    fn x_condition_examples() {
        let p3 = x_condition(&present(&standard_family(Family::Path(3)).unwrap()));
        assert!(p3.holds && p3.quadratic);
        let c4p = present(&standard_family(Family::Cycle(4)).unwrap());
        let c4 = x_condition(&c4p);
        assert!(!c4.holds);
        assert_eq!(c4p.universe().format(&c4.offending_generators[0]), "x2*x4*y1");
        let star = present(&standard_family(Family::Star(3)).unwrap());
        assert_eq!(star.basis().dump(), "x1*y1 - z1*z2*z3*y2\n");
        assert!(x_condition(&star).holds);
    }

    #[test]
    fn report_json_shape() {
        let p = present(&standard_family(Family::Path(3)).unwrap());
        let json = serde_json::to_string(&x_condition(&p).to_json(&p)).unwrap();
        assert_eq!(
            json,
            r#"{"x_condition":true,"quadratic":true,"offenders":[],"in_J_generators":["x2*y1"],"basis_size":1}"#
        );
    }

    #[test]
    fn standard_monomial_examples() {
        let p3 = present(&standard_family(Family::Path(3)).unwrap());
        let std = standard_monomials(&p3, 2);
        let u = p3.universe();
        let names: Vec<String> = std.members.iter().map(|m| u.format(m)).collect();
        assert_eq!(names, vec!["y2^2", "y1*y2", "y1^2"]);
        let mapped: Vec<String> = std
            .mapped_generators
            .iter()
            .map(|m| u.format(&m.extend(u.len())))
            .collect();
        assert_eq!(mapped, vec!["x2^2", "x1*x2*x3", "x1^2*x3^2"]);
        let k2 = present(&standard_family(Family::Path(2)).unwrap());
        assert_eq!(standard_monomials(&k2, 1).members.len(), 2);
    }

    #[test]
    fn pure_y_leads_prune_standard_monomials() {
        // the triangle's kernel has a pure-y lead
        let tri = present(&standard_family(Family::Complete(3)).unwrap());
        let u = tri.universe().clone();
        let pure: Vec<_> = tri
            .initial_ideal()
            .generators()
            .iter()
            .filter(|g| u.s_degree(g) == 0)
            .cloned()
            .collect();
        let std = standard_monomials(&tri, 2);
        for m in &std.members {
            assert!(pure.iter().all(|g| !g.divides(m)));
        }
        let all_pairs = 6; // multisets of size 2 from 3
        assert_eq!(
            std.members.len() + pure.iter().filter(|g| g.degree() == 2).count(),
            all_pairs
        );
    }

    #[test]
    fn minimal_generation_examples() {
        let p3 = present(&standard_family(Family::Path(3)).unwrap());
        assert!(minimal_generation_check(&p3, 2).unwrap());
        let k2 = present(&standard_family(Family::Path(2)).unwrap());
        assert!(minimal_generation_check(&k2, 3).unwrap());
    }

    #[test]
    fn basis_elements_evaluate_equal() {
        let k2 = standard_family(Family::Path(2)).unwrap();
        for g in [
            standard_family(Family::Fan(3)).unwrap(),
            standard_family(Family::Friendship(2)).unwrap(),
            attach(&k2, &[k2.clone(), k2.clone()]).unwrap(),
            standard_family(Family::Cycle(5)).unwrap(),
        ] {
            let p = present(&g);
            for b in p.basis().elements() {
                assert_eq!(p.evaluate(b.lead()), p.evaluate(b.trail()));
            }
            let lex = MonomialOrder::new(OrderKind::LexOnS, p.ideal().universe().clone());
            for w in p.generators().windows(2) {
                assert_eq!(lex.cmp(&w[0], &w[1]), std::cmp::Ordering::Greater);
            }
        }
    }

    #[test]
    fn kernel_contains_every_low_degree_collision() {
        let p = present(&standard_family(Family::Fan(3)).unwrap());
        let u = p.universe().clone();
        let q = p.q();
        let mut ys = Vec::new();
        for a in 0..q {
            for b in a..q {
                let mut e = vec![0; u.len()];
                e[u.y_index(a)] += 1;
                e[u.y_index(b)] += 1;
                ys.push(Monomial::from_exponents(e));
            }
            ys.push(Monomial::var(u.len(), u.y_index(a)));
        }
        for a in &ys {
            for b in &ys {
                if a != b && p.evaluate(a) == p.evaluate(b) {
                    let bin = Binomial::new(a.clone(), b.clone(), p.basis().order()).unwrap();
                    assert!(p.basis().reduces_to_zero(&bin));
                }
            }
        }
    }
}
