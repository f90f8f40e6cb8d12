//! Linear quotients, Betti numbers, linear resolutions and componentwise
//! linearity for monomial ideals.

mod betti;
mod linear_quotients;

use serde::Serialize;
use thiserror::Error;

pub use betti::{
    betti_table, has_linear_resolution, lcm_lattice, rank_over_rationals, upper_koszul_faces, BettiConfig,
    BettiEntryJson, BettiTable, BettiTableJson, MultidegreeBetti, MultigradedEntryJson,
};
pub use linear_quotients::{
    check_linear_quotients, find_linear_quotients_order, LinearQuotientsCertificate, LinearQuotientsFailure,
    OrderSource,
};

use crate::monomials::{component, MonomialIdeal};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ResolutionError {
    #[error("{found} generators exceed the bound of {bound}")]
    TooManyGenerators { found: usize, bound: usize },
    #[error("lcm lattice exceeds {bound} multidegrees")]
    LatticeTooLarge { bound: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentwiseReport {
    pub componentwise_linear: bool,
    /// `(j, verdict)` for each degree `j` checked.
    pub per_degree: Vec<(u32, bool)>,
    /// Only degrees between the smallest and largest generator degree are
    /// examined.
    pub range_limited: bool,
}

/// Checks `has_linear_resolution` on the degree-`j` component of `I` for
/// every `j` from the smallest to the largest generator degree.
pub fn is_componentwise_linear(
    ideal: &MonomialIdeal,
    config: BettiConfig,
) -> Result<ComponentwiseReport, ResolutionError> {
    let (Some(lo), Some(hi)) = (ideal.min_degree(), ideal.max_degree()) else {
        return Ok(ComponentwiseReport {
            componentwise_linear: true,
            per_degree: Vec::new(),
            range_limited: true,
        });
    };
    let mut per_degree = Vec::new();
    for j in lo..=hi {
        per_degree.push((j, has_linear_resolution(&component(ideal, j), config)?));
    }
    Ok(ComponentwiseReport {
        componentwise_linear: per_degree.iter().all(|&(_, ok)| ok),
        per_degree,
        range_limited: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomials::{minimalize, Universe};
    use std::sync::Arc;

    fn ideal(n: usize, gens: &[&str]) -> MonomialIdeal {
        let u = Arc::new(Universe::base((1..=n).map(|i| format!("x{i}")).collect()));
        minimalize(u.clone(), gens.iter().map(|g| u.parse(g).unwrap())).unwrap()
    }

    #[test]
    fn componentwise_examples() {
        let r = is_componentwise_linear(&ideal(3, &["x2", "x1*x3"]), BettiConfig::default()).unwrap();
        assert!(r.componentwise_linear);
        assert_eq!(r.per_degree, vec![(1, true), (2, true)]);
        let ci = is_componentwise_linear(&ideal(4, &["x1*x3", "x2*x4"]), BettiConfig::default()).unwrap();
        assert!(!ci.componentwise_linear);
        assert!(
            is_componentwise_linear(&ideal(2, &["x1*x2^3"]), BettiConfig::default())
                .unwrap()
                .componentwise_linear
        );
    }

    #[test]
    fn powers_of_the_maximal_ideal_are_linear() {
        let m = ideal(2, &["x1", "x2"]);
        for k in 1..=3 {
            let p = crate::monomials::power(&m, k).unwrap();
            assert!(has_linear_resolution(&p, BettiConfig::default()).unwrap());
        }
    }
}
