//! Normal forms by multivariate division against the marked relations.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::poly::{Monomial, Polynomial, Var};
use super::relations::{relations, Relation};
use super::{RingSpec, VgError};

/// Division engine for one ring; relations indexed by their largest
/// initial variable.
#[derive(Debug)]
pub struct Reducer {
    spec: RingSpec,
    relations: Vec<Relation>,
    by_var: HashMap<Var, Vec<usize>>,
}

type ReducerCache = Mutex<HashMap<RingSpec, Arc<Reducer>>>;

impl Reducer {
    pub fn new(spec: RingSpec) -> Self {
        let relations = relations(&spec);
        let mut by_var: HashMap<Var, Vec<usize>> = HashMap::new();
        for (k, r) in relations.iter().enumerate() {
            let top = r.lead.factors().last().expect("nonconstant lead").0;
            by_var.entry(top).or_default().push(k);
        }
        Reducer {
            spec,
            relations,
            by_var,
        }
    }

    /// A reducer shared across callers; relation tables never change once
    /// built.
    pub fn shared(spec: RingSpec) -> Arc<Reducer> {
        static CACHE: OnceLock<ReducerCache> = OnceLock::new();
        let mut cache = CACHE.get_or_init(Default::default).lock().unwrap();
        Arc::clone(cache.entry(spec).or_insert_with(|| Arc::new(Reducer::new(spec))))
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// A relation whose initial term divides `m`.
    pub fn reducer_for(&self, m: &Monomial) -> Option<&Relation> {
        m.factors().iter().find_map(|(v, _)| {
            self.by_var
                .get(v)?
                .iter()
                .map(|&k| &self.relations[k])
                .find(|r| r.lead.divides(m))
        })
    }

    pub fn is_standard(&self, m: &Monomial) -> bool {
        self.reducer_for(m).is_none()
    }

    pub fn reduce(&self, p: &Polynomial) -> Result<Polynomial, VgError> {
        self.spec.check(p)?;
        Ok(self.reduce_unchecked(p.clone()))
    }

    pub(crate) fn reduce_unchecked(&self, mut p: Polynomial) -> Polynomial {
        let mut rem = Polynomial::zero();
        // every division step only creates terms below the one removed
        while let Some((m, c)) = p.pop_leading() {
            match self.reducer_for(&m) {
                None => rem.add_term(m, c),
                Some(r) => {
                    let q = r.lead.quotient_of(&m).expect("lead divides");
                    let factor = -(c / r.lead_coefficient());
                    let mut step = r.poly.mul_term(&q, &factor);
                    let cancelled = step.terms().contains_key(&m);
                    debug_assert!(cancelled);
                    step = Polynomial::from_terms(
                        step.terms().iter().filter(|(k, _)| **k != m).map(|(k, x)| (k.clone(), x.clone())),
                    );
                    p.add_assign(&step);
                }
            }
        }
        rem
    }
}

pub fn normal_form(p: &Polynomial, spec: &RingSpec) -> Result<Polynomial, VgError> {
    Reducer::shared(*spec).reduce(p)
}

/// S-pairs of relations with overlapping initial terms whose S-polynomial
/// does not reduce to zero; empty exactly when the relations form a
/// Gröbner basis (Buchberger's criterion).
pub fn s_pair_failures(spec: &RingSpec) -> Vec<(usize, usize, Polynomial)> {
    let reducer = Reducer::shared(*spec);
    let rels = reducer.relations();
    let mut failures = Vec::new();
    for a in 0..rels.len() {
        for b in a + 1..rels.len() {
            let (ra, rb) = (&rels[a], &rels[b]);
            let lcm = ra.lead.lcm(&rb.lead);
            if lcm.degree() == ra.lead.degree() + rb.lead.degree() {
                continue;
            }
            let qa = ra.lead.quotient_of(&lcm).expect("divides lcm");
            let qb = rb.lead.quotient_of(&lcm).expect("divides lcm");
            let sa = ra.poly.mul_term(&qa, &(ra.lead_coefficient().recip()));
            let sb = rb.poly.mul_term(&qb, &(rb.lead_coefficient().recip()));
            let rem = reducer.reduce_unchecked(sa.sub(&sb));
            if !rem.is_zero() {
                failures.push((a, b, rem));
            }
        }
    }
    failures
}

#[cfg(test)]
mod tests {
    use super::super::Presentation;
    use super::*;

    fn nf(s: &str, pres: Presentation, n: usize) -> String {
        let p = Polynomial::monomial(s.parse().unwrap());
        normal_form(&p, &RingSpec::new(pres, n)).unwrap().to_string()
    }

    #[test]
    fn table_reductions() {
        assert_eq!(nf("t12^2", Presentation::At, 2), "0");
        assert_eq!(nf("v12*w12", Presentation::Bvw, 2), "0");
        assert_eq!(nf("u2*w12", Presentation::Bvw, 2), "u1*v12 - 2*u1*u2");
        assert_eq!(nf("u2*w12", Presentation::BvwGr, 2), "u1*v12");
        assert_eq!(nf("t13*t23", Presentation::At, 3), "t12*t23 - t12*t13");
    }

    #[test]
    fn alphabet_is_checked() {
        let p = Polynomial::monomial("v12".parse().unwrap());
        assert!(normal_form(&p, &RingSpec::new(Presentation::Bu, 2)).is_err());
        let p = Polynomial::monomial("t14".parse().unwrap());
        assert!(normal_form(&p, &RingSpec::new(Presentation::At, 3)).is_err());
    }

    #[test]
    fn groebner_bases() {
        for pres in Presentation::ALL {
            for n in 1..=4 {
                let bad = s_pair_failures(&RingSpec::new(pres, n));
                assert!(bad.is_empty(), "{pres} n={n}: {:?}", bad.first());
            }
        }
    }
}
