//! Varchenko-Gelfand rings of the type A and B braid arrangements in four
//! presentations, with Gröbner normal forms, standard monomial bases, group
//! actions and the sign-invariant subring.

mod action;
mod basis;
mod character;
mod fixed;
mod graph;
mod poly;
mod reduce;
mod relations;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::combinatorics::CombinatoricsError;

pub use action::{act, act_monomial, change_basis, gamma, BasisChange};
pub use basis::{hilbert_series, hilbert_series_bigraded, standard_basis, BigradedSeries};
pub use character::{
    component_basis, fixed_part_character, subspace_character, trace, Selector,
};
pub use fixed::{factor_quadratics, fixed_basis, pairing_phi, quad_generators};
pub use graph::{monomial_multigraph, ClBlock, Multigraph};
pub use poly::{Alphabet, Monomial, Polynomial, Var};
pub use reduce::{normal_form, s_pair_failures, Reducer};
pub use relations::{relations, Relation};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum VgError {
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("{0} does not belong to the alphabet of {1}")]
    VariableMismatch(String, RingSpec),
    #[error("the {0} presentation accepts only unsigned permutations, got {1}")]
    SignedActionOnTypeA(Presentation, String),
    #[error("{0} is not a standard monomial of the type A presentation for n = {1}")]
    NotStandard(String, usize),
    #[error("selector {0} is not valid for {1}")]
    InvalidSelector(String, RingSpec),
    #[error("no representative of the class {0}")]
    MissingClass(String),
    #[error("image of {0} under {1} leaves the span of the basis")]
    LeavesSpan(String, String),
    #[error(transparent)]
    Combinatorics(#[from] CombinatoricsError),
}

/// The four presentations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Presentation {
    /// Type A in the variables `t_ij`.
    At,
    /// Type B in `u_i, u⁺_ij, u⁻_ij`.
    Bu,
    /// Type B in `u_i, v_ij, w_ij`.
    Bvw,
    /// Associated graded of the `u`-adic filtration, in `u_i, v_ij, w_ij`.
    BvwGr,
}

impl Presentation {
    pub const ALL: [Presentation; 4] = [
        Presentation::At,
        Presentation::Bu,
        Presentation::Bvw,
        Presentation::BvwGr,
    ];

    pub fn alphabet(self) -> Alphabet {
        match self {
            Presentation::At => Alphabet::T,
            Presentation::Bu => Alphabet::UPlusMinus,
            Presentation::Bvw | Presentation::BvwGr => Alphabet::VW,
        }
    }

    pub fn is_type_b(self) -> bool {
        self != Presentation::At
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Presentation::At => "a-t",
            Presentation::Bu => "b-u",
            Presentation::Bvw => "b-vw",
            Presentation::BvwGr => "b-vw-gr",
        })
    }
}

impl FromStr for Presentation {
    type Err = VgError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "a-t" => Ok(Presentation::At),
            "b-u" => Ok(Presentation::Bu),
            "b-vw" => Ok(Presentation::Bvw),
            "b-vw-gr" => Ok(Presentation::BvwGr),
            _ => Err(VgError::Parse(s.to_string())),
        }
    }
}

/// A presentation together with the rank `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingSpec {
    pub n: usize,
    pub presentation: Presentation,
}

impl RingSpec {
    pub fn new(presentation: Presentation, n: usize) -> Self {
        RingSpec { n, presentation }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.presentation.alphabet()
    }

    /// Errors unless every variable of `p` belongs to this ring.
    pub fn check(&self, p: &Polynomial) -> Result<(), VgError> {
        for m in p.terms().keys() {
            for &(v, _) in m.factors() {
                if !v.in_alphabet(self.alphabet()) || v.max_index() > self.n {
                    return Err(VgError::VariableMismatch(v.to_string(), *self));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (n = {})", self.presentation, self.n)
    }
}
