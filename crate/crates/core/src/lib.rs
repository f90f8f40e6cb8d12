//! Cover ideals of graphs, their Rees algebra presentations, and the
//! resolution-side checks (linear quotients, Betti numbers, componentwise
//! linearity) used to test the x-condition on them.

pub mod binomial_gb;
pub mod graphs;
pub mod monomials;
pub mod rees;
pub mod resolutions;

pub use binomial_gb::{toric_kernel, Binomial, GbConfig, GbError, GroebnerBasis};
pub use graphs::{Graph, GraphError, GraphJson};
pub use monomials::{cover_ideal, Monomial, MonomialError, MonomialIdeal, MonomialOrder, OrderKind, Universe};
pub use rees::{
    minimal_generation_check, rees_presentation, standard_monomials, x_condition, ReesError, ReesPresentation,
    XConditionReport,
};
pub use resolutions::{BettiConfig, BettiTable, ComponentwiseReport, LinearQuotientsCertificate, ResolutionError};
