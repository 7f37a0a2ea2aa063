//! Quadratic Gröbner bases of the four presentations, with their marked
//! initial terms.

use super::poly::{Monomial, Polynomial, Var};
use super::{Presentation, RingSpec};
use crate::rational::{int, Q};

/// A generator of the defining ideal and its marked initial monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub poly: Polynomial,
    pub lead: Monomial,
}

impl Relation {
    pub fn lead_coefficient(&self) -> Q {
        self.poly.coefficient(&self.lead)
    }
}

/// Builds `Σ c · x·y` from a list of quadratic terms.
fn quad(terms: &[(i64, Var, Var)]) -> Polynomial {
    Polynomial::from_terms(
        terms
            .iter()
            .map(|&(c, x, y)| (Monomial::from_vars([x, y]), int(c))),
    )
}

fn square(x: Var) -> Relation {
    Relation {
        poly: quad(&[(1, x, x)]),
        lead: Monomial::from_vars([x, x]),
    }
}

/// `terms` followed by the marked term `lead_coeff · a·b`.
fn marked(terms: &[(i64, Var, Var)], lead: (i64, Var, Var)) -> Relation {
    let mut all = terms.to_vec();
    all.push(lead);
    Relation {
        poly: quad(&all),
        lead: Monomial::from_vars([lead.1, lead.2]),
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (u8, u8)> {
    (1..=n as u8).flat_map(move |i| (i + 1..=n as u8).map(move |j| (i, j)))
}

fn triples(n: usize) -> impl Iterator<Item = (u8, u8, u8)> {
    pairs(n).flat_map(move |(i, j)| (j + 1..=n as u8).map(move |k| (i, j, k)))
}

/// The generator list of the presentation, in table order.
pub fn relations(spec: &RingSpec) -> Vec<Relation> {
    let n = spec.n;
    let mut out = Vec::new();
    match spec.presentation {
        Presentation::At => {
            use Var::T;
            out.extend(pairs(n).map(|(i, j)| square(T(i, j))));
            for (i, j, k) in triples(n) {
                out.push(marked(
                    &[(1, T(i, j), T(j, k)), (-1, T(i, k), T(i, j))],
                    (-1, T(i, k), T(j, k)),
                ));
            }
        }
        Presentation::Bu => {
            use Var::{UMinus as M, UPlus as P, U};
            for (i, j) in pairs(n) {
                out.push(square(P(i, j)));
                out.push(square(M(i, j)));
            }
            out.extend((1..=n as u8).map(|i| square(U(i))));
            for (i, j) in pairs(n) {
                out.push(marked(
                    &[(1, U(i), P(i, j)), (-1, U(i), M(i, j))],
                    (-1, P(i, j), M(i, j)),
                ));
                out.push(marked(
                    &[(1, U(i), P(i, j)), (-1, U(i), U(j))],
                    (-1, P(i, j), U(j)),
                ));
                out.push(marked(
                    &[(1, U(i), U(j)), (-1, U(i), M(i, j))],
                    (-1, U(j), M(i, j)),
                ));
            }
            for (i, j, k) in triples(n) {
                out.push(marked(
                    &[(1, P(i, j), P(j, k)), (-1, P(i, j), P(i, k))],
                    (-1, P(i, k), P(j, k)),
                ));
                out.push(marked(
                    &[(1, M(i, j), P(j, k)), (-1, M(i, j), M(i, k))],
                    (-1, M(i, k), P(j, k)),
                ));
                out.push(marked(
                    &[(-1, M(i, j), M(j, k)), (1, M(i, j), P(i, k))],
                    (-1, P(i, k), M(j, k)),
                ));
                out.push(marked(
                    &[(-1, P(i, j), M(j, k)), (1, P(i, j), M(i, k))],
                    (-1, M(i, k), M(j, k)),
                ));
            }
        }
        Presentation::Bvw | Presentation::BvwGr => {
            use Var::{U, V, W};
            let graded = spec.presentation == Presentation::BvwGr;
            out.extend((1..=n as u8).map(|i| square(U(i))));
            for (i, j) in pairs(n) {
                out.push(marked(&[], (1, V(i, j), W(i, j))));
                out.push(marked(&[(1, U(i), W(i, j))], (-1, U(j), V(i, j))));
                if graded {
                    out.push(square(V(i, j)));
                    out.push(square(W(i, j)));
                    out.push(marked(&[(1, U(i), V(i, j))], (-1, U(j), W(i, j))));
                } else {
                    out.push(marked(&[(-2, U(i), W(i, j))], (1, V(i, j), V(i, j))));
                    out.push(marked(&[(2, U(i), W(i, j))], (1, W(i, j), W(i, j))));
                    out.push(marked(
                        &[(1, U(i), V(i, j)), (-2, U(i), U(j))],
                        (-1, U(j), W(i, j)),
                    ));
                }
            }
            for (i, j, k) in triples(n) {
                out.push(marked(
                    &[(1, V(i, j), W(j, k)), (-1, W(i, j), W(i, k))],
                    (-1, V(i, k), V(j, k)),
                ));
                out.push(marked(
                    &[(1, W(i, j), W(j, k)), (-1, V(i, j), W(i, k))],
                    (-1, W(i, k), W(j, k)),
                ));
                out.push(marked(
                    &[(1, V(i, j), V(j, k)), (-1, V(i, j), V(i, k))],
                    (-1, V(i, k), W(j, k)),
                ));
                out.push(marked(
                    &[(1, W(i, j), V(j, k)), (-1, W(i, j), V(i, k))],
                    (-1, W(i, k), V(j, k)),
                ));
            }
        }
    }
    out
}
