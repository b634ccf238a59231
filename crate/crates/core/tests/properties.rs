use g2forms::catalog::{self, sweep_pairs, AlgebraId, Family};
use g2forms::linalg;
use g2forms::multivector::masks;
use g2forms::scalar::q;
use g2forms::subspace::{gram, is_definite, TwoFormFamily};
use g2forms::{classify_3d, decide, Bianchi3Class, KForm, LieAlgebra, LinearMap, Q};
use proptest::prelude::*;

fn small_form(n: usize, k: usize) -> impl Strategy<Value = KForm> {
    let len = masks(n, k).len();
    prop::collection::vec(-3i64..=3, len).prop_map(move |c| KForm::from_vec(n, k, &c.into_iter().map(q).collect::<Vec<_>>()))
}

fn invertible(n: usize) -> impl Strategy<Value = Vec<Vec<Q>>> {
    prop::collection::vec(-2i64..=2, n * n)
        .prop_map(move |c| (0..n).map(|i| (0..n).map(|j| q(c[i * n + j])).collect()).collect::<Vec<Vec<Q>>>())
        .prop_filter("singular", |m| linalg::det(m) != q(0))
}

fn pair_algebra(i: usize) -> LieAlgebra {
    let pairs = sweep_pairs();
    let (a, b) = &pairs[i % pairs.len()];
    catalog::instantiate_sum(&[a.clone(), b.clone()]).unwrap()
}

fn id_of(c: &Bianchi3Class) -> AlgebraId {
    match c {
        Bianchi3Class::R3Mu(m) => AlgebraId::new(Family::R3Mu, vec![m.clone()]).unwrap(),
        Bianchi3Class::R3PrimeMu(m) => AlgebraId::new(Family::R3PrimeMu, vec![m.clone()]).unwrap(),
        other => catalog::parse(&other.name()).unwrap(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn d_squared_vanishes_on_monomials(i in 0usize..10_000, k in 1usize..6) {
        let g = pair_algebra(i);
        for m in masks(7, k) {
            let f = KForm::<Q>::from_vec(7, k, &masks(7, k).iter().map(|x| q((*x == m) as i64)).collect::<Vec<_>>());
            prop_assert!(g.differential(&g.differential(&f)).is_zero());
        }
    }

    #[test]
    fn d_squared_vanishes_on_random_forms(i in 0usize..10_000, f in small_form(7, 3)) {
        let g = pair_algebra(i);
        prop_assert!(g.differential(&g.differential(&f)).is_zero());
    }

    #[test]
    fn leibniz_rule(i in 0usize..10_000, a in small_form(7, 1), b in small_form(7, 2)) {
        let g = pair_algebra(i);
        let lhs = g.differential(&a.wedge(&b));
        let rhs = &g.differential(&a).wedge(&b) - &a.wedge(&g.differential(&b));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn wedge_is_associative(a in small_form(5, 1), b in small_form(5, 2), c in small_form(5, 2)) {
        prop_assert_eq!(a.wedge(&b).wedge(&c), a.wedge(&b.wedge(&c)));
    }

    #[test]
    fn wedge_is_graded_commutative(a in small_form(6, 1), b in small_form(6, 2), c in small_form(6, 3)) {
        prop_assert_eq!(a.wedge(&b), b.wedge(&a));
        prop_assert_eq!(a.wedge(&c), -&c.wedge(&a));
        prop_assert_eq!(a.wedge(&a), KForm::zero(6, 2));
        prop_assert_eq!(b.wedge(&c), c.wedge(&b));
        prop_assert_eq!(c.wedge(&c), KForm::zero(6, 6));
    }

    #[test]
    fn pullback_respects_wedge(p in invertible(4), a in small_form(4, 1), b in small_form(4, 2)) {
        let m = LinearMap::new(p, 4).unwrap();
        prop_assert_eq!(m.pullback(&a.wedge(&b)).unwrap(), m.pullback(&a).unwrap().wedge(&m.pullback(&b).unwrap()));
    }

    #[test]
    fn change_of_coframe_commutes_with_d(i in 0usize..10_000, p in invertible(7), f in small_form(7, 2)) {
        let g = pair_algebra(i);
        let h = g.in_coframe(&p).unwrap();
        let m = LinearMap::new(p, 7).unwrap();
        prop_assert_eq!(g.differential(&m.pullback(&f).unwrap()), m.pullback(&h.differential(&f)).unwrap());
        prop_assert_eq!(g.cohomology(), h.cohomology());
    }

    #[test]
    fn definite_gram_means_every_combination_has_length_two(
        fs in prop::collection::vec(small_form(4, 2), 1..=3),
        x in prop::collection::vec(-4i64..=4, 3),
    ) {
        let fam = TwoFormFamily::new(fs.clone(), KForm::e(4, &[1, 2, 3, 4])).unwrap();
        let h = gram(&fam).unwrap();
        prop_assume!(is_definite(&h));
        let mut w = KForm::zero(4, 2);
        for (f, c) in fs.iter().zip(&x) {
            w = &w + &f.scale(&q(*c));
        }
        prop_assume!(!w.is_zero());
        prop_assert_eq!(w.two_form_length(), 2);
    }

    #[test]
    fn decide_is_invariant_under_scrambling_g3(i in 0usize..10_000, p in invertible(3)) {
        let pairs = sweep_pairs();
        let (g4, g3) = &pairs[i % pairs.len()];
        let scrambled = g3.instantiate().unwrap().in_coframe(&p).unwrap();
        let back = id_of(&classify_3d(&scrambled).unwrap());
        let (a, b) = (decide(g4, g3).unwrap(), decide(g4, &back).unwrap());
        prop_assert_eq!(a.exists, b.exists);
        prop_assert_eq!(a.route, b.route);
        prop_assert_eq!(a.obstruction, b.obstruction);
        prop_assert_eq!(a.branch, b.branch);
    }
}
