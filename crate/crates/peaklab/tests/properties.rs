use peaklab::combinatorics::{partitions_of, Permutation, SignedPermutation};
use peaklab::group_algebra::GroupElement;
use peaklab::rational::{int, Q};
use peaklab::symfunc::SymFunc;
use peaklab::vg::{act, change_basis, normal_form, BasisChange, Monomial, Polynomial, Presentation, RingSpec, Var};
use proptest::prelude::*;

fn signed(n: usize) -> impl Strategy<Value = SignedPermutation> {
    (0..SignedPermutation::order(n)).prop_map(move |r| SignedPermutation::unrank(n, r))
}

fn variables(spec: &RingSpec) -> Vec<Var> {
    let n = spec.n as u8;
    let mut out = Vec::new();
    if spec.presentation.is_type_b() {
        out.extend((1..=n).map(Var::U));
    }
    for i in 1..=n {
        for j in i + 1..=n {
            match spec.presentation {
                Presentation::At => out.push(Var::T(i, j)),
                Presentation::Bu => out.extend([Var::UPlus(i, j), Var::UMinus(i, j)]),
                Presentation::Bvw | Presentation::BvwGr => out.extend([Var::V(i, j), Var::W(i, j)]),
            }
        }
    }
    out
}

/// Sums of up to four products of up to four variables, small integer
/// coefficients.
fn polynomial(spec: RingSpec) -> impl Strategy<Value = Polynomial> {
    let vars = variables(&spec);
    let k = vars.len();
    prop::collection::vec((prop::collection::vec(0..k, 0..=4), -3i64..=3), 1..=4).prop_map(move |terms| {
        Polynomial::from_terms(
            terms
                .into_iter()
                .map(|(idx, c)| (Monomial::from_vars(idx.into_iter().map(|i| vars[i])), int(c))),
        )
    })
}

fn spec_and_polys() -> impl Strategy<Value = (RingSpec, Polynomial, Polynomial)> {
    (prop::sample::select(Presentation::ALL.to_vec()), 2usize..=4)
        .prop_flat_map(|(p, n)| {
            let spec = RingSpec::new(p, n);
            (Just(spec), polynomial(spec), polynomial(spec))
        })
}

fn symfunc(max_degree: usize) -> impl Strategy<Value = SymFunc> {
    prop::collection::vec((1..=max_degree, any::<prop::sample::Index>(), -4i64..=4), 1..=3).prop_map(|terms| {
        let mut f = SymFunc::zero();
        for (d, idx, c) in terms {
            let ps = partitions_of(d);
            f.add_term(idx.get(&ps).clone(), int(c));
        }
        f
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn forgetting_signs_is_multiplicative((a, b) in (1usize..=6).prop_flat_map(|n| (signed(n), signed(n)))) {
        let ab = GroupElement::mul(&a, &b);
        prop_assert_eq!(ab.forget_signs(), GroupElement::mul(&a.forget_signs(), &b.forget_signs()));
    }

    #[test]
    fn action_composes(
        (g, h, p) in (2usize..=4).prop_flat_map(|n| {
            (signed(n), signed(n), polynomial(RingSpec::new(Presentation::Bvw, n)))
        })
    ) {
        let spec = RingSpec::new(Presentation::Bvw, g.n());
        let lhs = act(&g, &act(&h, &p, &spec).unwrap(), &spec).unwrap();
        let rhs = act(&GroupElement::mul(&g, &h), &p, &spec).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn unsigned_action_on_type_a_composes(
        (a, b, p) in (2usize..=4).prop_flat_map(|n| {
            let all = Permutation::all(n);
            (prop::sample::select(all.clone()), prop::sample::select(all), polynomial(RingSpec::new(Presentation::At, n)))
        })
    ) {
        let spec = RingSpec::new(Presentation::At, a.n());
        let (ga, gb) = (SignedPermutation::from(&a), SignedPermutation::from(&b));
        let lhs = act(&ga, &act(&gb, &p, &spec).unwrap(), &spec).unwrap();
        let rhs = act(&SignedPermutation::from(&a.compose(&b).unwrap()), &p, &spec).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn normal_form_is_idempotent_and_linear((spec, p, q) in spec_and_polys(), a in -3i64..=3, b in -3i64..=3) {
        let np = normal_form(&p, &spec).unwrap();
        prop_assert_eq!(normal_form(&np, &spec).unwrap(), np.clone());
        let nq = normal_form(&q, &spec).unwrap();
        let combo = p.scale(&int(a)).add(&q.scale(&int(b)));
        let expect = np.scale(&int(a)).add(&nq.scale(&int(b)));
        prop_assert_eq!(normal_form(&combo, &spec).unwrap(), expect);
    }

    #[test]
    fn normal_form_is_multiplicative((spec, p, q) in spec_and_polys()) {
        let np = normal_form(&p, &spec).unwrap();
        let nq = normal_form(&q, &spec).unwrap();
        prop_assert_eq!(
            normal_form(&p.mul(&q), &spec).unwrap(),
            normal_form(&np.mul(&nq), &spec).unwrap()
        );
    }

    #[test]
    fn action_respects_relations((g, p) in (2usize..=4).prop_flat_map(|n| (signed(n), polynomial(RingSpec::new(Presentation::Bu, n))))) {
        let spec = RingSpec::new(Presentation::Bu, g.n());
        let via_nf = normal_form(&act(&g, &normal_form(&p, &spec).unwrap(), &spec).unwrap(), &spec).unwrap();
        let direct = normal_form(&act(&g, &p, &spec).unwrap(), &spec).unwrap();
        prop_assert_eq!(via_nf, direct);
    }

    #[test]
    fn basis_change_round_trips(p in (2usize..=4).prop_flat_map(|n| polynomial(RingSpec::new(Presentation::Bvw, n)))) {
        let there = change_basis(&p, BasisChange::VwToPlusMinus).unwrap();
        prop_assert_eq!(change_basis(&there, BasisChange::PlusMinusToVw).unwrap(), p);
    }

    #[test]
    fn symmetric_products_commute(f in symfunc(4), g in symfunc(4)) {
        prop_assert_eq!(f.multiply(&g), g.multiply(&f));
    }

    #[test]
    fn restriction_is_a_derivation(f in symfunc(4), g in symfunc(4)) {
        let lhs = f.multiply(&g).restrict();
        let rhs = f.restrict().multiply(&g).add(&f.multiply(&g.restrict()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn induction_is_multiplication_by_p1(f in symfunc(5)) {
        prop_assert_eq!(f.induct(), SymFunc::p_k(1).multiply(&f));
        let q: Q = int(2);
        prop_assert_eq!(f.scale(&q).restrict(), f.restrict().scale(&q));
    }
}
