use std::sync::Arc;

use num_bigint::BigInt;
use proptest::prelude::*;
use strong_gelfand::character::{family_table, induce, induce_along, inner_product, restrict, restrict_along};
use strong_gelfand::gelfand::GelfandAnalyzer;
use strong_gelfand::group::{all_subgroups, construct, generated_subgroup, Family, FiniteGroup, Subgroup};
use strong_gelfand::{Cyclotomic, Rational};

const ORDERS: [usize; 12] = [1, 2, 3, 4, 5, 6, 8, 10, 12, 15, 20, 24];

fn arb_cyclotomic() -> impl Strategy<Value = Cyclotomic> {
    prop::sample::select(&ORDERS[..]).prop_flat_map(|n| {
        prop::collection::vec((0..n as i64, -6i64..=6, 1i64..=4), 0..6).prop_map(move |terms| {
            Cyclotomic::from_exponents(n, terms.into_iter().map(|(k, p, q)| (k, Rational::new(p.into(), q.into()))))
                .unwrap()
        })
    })
}

fn arb_family() -> impl Strategy<Value = Family> {
    prop_oneof![
        (1usize..=12).prop_map(Family::Cyclic),
        (1usize..=10).prop_map(Family::Dihedral),
        (1usize..=6).prop_map(Family::Dicyclic),
    ]
}

fn close(a: num_complex::Complex64, b: num_complex::Complex64) -> bool {
    (a - b).norm() < 1e-9 * (1.0 + a.norm().max(b.norm()))
}

fn nth<T: Clone>(items: &[T], i: usize) -> T {
    items[i % items.len()].clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn zeta_to_its_order_is_one(n in 1usize..=60, k in -100i64..100) {
        prop_assert_eq!(Cyclotomic::zeta(n, k).unwrap().pow(n as u32), Cyclotomic::one());
    }

    #[test]
    fn roots_of_unity_sum_to_zero(n in 2usize..=40) {
        let total: Cyclotomic = (0..n as i64).map(|k| Cyclotomic::zeta(n, k).unwrap()).sum();
        prop_assert!(total.is_zero());
    }

    #[test]
    fn conjugation_is_a_ring_homomorphism(a in arb_cyclotomic(), b in arb_cyclotomic()) {
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
        prop_assert_eq!(a.conj().conj(), a.clone());
    }

    #[test]
    fn approx_is_a_ring_homomorphism(a in arb_cyclotomic(), b in arb_cyclotomic()) {
        prop_assert!(close((&a * &b).approx(), a.approx() * b.approx()));
        prop_assert!(close((&a + &b).approx(), a.approx() + b.approx()));
        prop_assert!(close(a.conj().approx(), a.approx().conj()));
    }

    #[test]
    fn field_axioms(a in arb_cyclotomic(), b in arb_cyclotomic(), c in arb_cyclotomic()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn rendering_round_trips(a in arb_cyclotomic()) {
        let text = a.to_string();
        let back: Cyclotomic = text.parse().unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn equal_values_render_identically(terms in prop::collection::vec((0i64..12, -4i64..=4), 0..8)) {
        let built = Cyclotomic::from_exponents(12, terms.iter().map(|&(k, c)| (k, Rational::from_integer(c.into())))).unwrap();
        let summed: Cyclotomic = terms
            .iter()
            .map(|&(k, c)| Cyclotomic::zeta(12, k).unwrap().scale(&Rational::from_integer(c.into())))
            .fold(Cyclotomic::zero().lift(12).unwrap(), |acc, x| acc + x);
        prop_assert_eq!(built.to_string(), summed.to_string());
    }

    #[test]
    fn lifting_preserves_value(a in arb_cyclotomic(), k in 1usize..=4) {
        let lifted = a.lift(a.order() * k).unwrap();
        prop_assert_eq!(&lifted, &a);
        prop_assert!(close(lifted.approx(), a.approx()));
    }

    #[test]
    fn group_axioms(family in arb_family(), x in 0usize..1000, y in 0usize..1000, z in 0usize..1000) {
        let g = construct(&family).unwrap();
        let n = g.order();
        let (x, y, z) = (x % n, y % n, z % n);
        prop_assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
        prop_assert_eq!(g.mul(x, g.inv(x)), g.identity());
        prop_assert_eq!(g.classes().class_of[g.conjugate(x, y)], g.classes().class_of[x]);
    }

    #[test]
    fn frobenius_reciprocity(family in arb_family(), hi in 0usize..1000, pi in 0usize..1000, ci in 0usize..1000) {
        let g = construct(&family).unwrap();
        let h = nth(&all_subgroups(&g).unwrap(), hi);
        let model = h.model().unwrap();
        let psi = nth(family_table(&model.group).unwrap().irreducibles(), pi);
        let chi = nth(family_table(&g).unwrap().irreducibles(), ci);
        let up = induce_along(&psi, &g, &model.preimage).unwrap();
        let down = restrict_along(&chi, &model.group, &model.embedding).unwrap();
        prop_assert_eq!(inner_product(&up, &chi).unwrap(), inner_product(&psi, &down).unwrap());
    }

    #[test]
    fn induction_is_transitive(family in arb_family(), ki in 0usize..1000, hi in 0usize..1000, pi in 0usize..1000) {
        let g = construct(&family).unwrap();
        let subs = all_subgroups(&g).unwrap();
        let k = nth(&subs, ki);
        let above: Vec<Subgroup> = subs.into_iter().filter(|h| k.is_subgroup_of(h)).collect();
        let h = nth(&above, hi);
        let (km, hm) = (k.model().unwrap(), h.model().unwrap());
        let psi = nth(family_table(&km.group).unwrap().irreducibles(), pi);
        let k_in_h: Vec<Option<usize>> = hm.embedding.iter().map(|&x| km.preimage[x]).collect();
        let via_h = induce_along(&induce_along(&psi, &hm.group, &k_in_h).unwrap(), &g, &hm.preimage).unwrap();
        let direct = induce(&psi, &k).unwrap();
        prop_assert!(via_h.same_values(&direct));
    }

    #[test]
    fn restriction_then_induction_scales_the_trivial_character(family in arb_family(), hi in 0usize..1000) {
        let g = construct(&family).unwrap();
        let h = nth(&all_subgroups(&g).unwrap(), hi);
        let table = family_table(&g).unwrap();
        let trivial = &table.irreducibles()[table.trivial_index().unwrap()];
        let down = restrict(trivial, &h).unwrap();
        let up = induce(&down, &h).unwrap();
        prop_assert_eq!(up.degree().clone(), Cyclotomic::from_integer(h.index() as i64));
        prop_assert_eq!(inner_product(&up, trivial).unwrap(), Cyclotomic::one());
    }

    #[test]
    fn strong_gelfand_is_conjugation_invariant(family in arb_family(), hi in 0usize..1000, xi in 0usize..1000) {
        let g = construct(&family).unwrap();
        let h = nth(&all_subgroups(&g).unwrap(), hi);
        let x = xi % g.order();
        let conj_gens: Vec<usize> = h.generators().iter().map(|&s| g.conjugate(s, x)).collect();
        let h2 = generated_subgroup(&g, &conj_gens).unwrap();
        let analyzer = GelfandAnalyzer::new(&g).unwrap();
        prop_assert_eq!(analyzer.is_strong_gelfand(&h).unwrap().holds, analyzer.is_strong_gelfand(&h2).unwrap().holds);
        prop_assert_eq!(analyzer.is_gelfand(&h).unwrap(), analyzer.is_gelfand(&h2).unwrap());
    }
}

#[test]
fn prime_order_roots_sum_to_minus_one_off_the_identity() {
    for p in [2usize, 3, 5, 7, 11, 13, 17, 19, 23] {
        let total: Cyclotomic = (1..p as i64).map(|k| Cyclotomic::zeta(p, k).unwrap()).sum();
        assert_eq!(total, Cyclotomic::from_integer(-1), "p = {p}");
    }
}

#[test]
fn strong_gelfand_is_monotone_up_the_lattice() {
    let groups: Vec<Arc<FiniteGroup>> = (1..=12)
        .map(|n| FiniteGroup::dihedral(n).unwrap())
        .chain((1..=6).map(|n| FiniteGroup::dicyclic(n).unwrap()))
        .collect();
    for g in groups {
        let analyzer = GelfandAnalyzer::new(&g).unwrap();
        let report = analyzer.classify(256).unwrap();
        for (k, rk) in report.subgroups.iter().zip(&report.records) {
            for (h, rh) in report.subgroups.iter().zip(&report.records) {
                if rk.strong_gelfand && k.is_subgroup_of(h) {
                    assert!(rh.strong_gelfand, "{}: {} is SGP but {} ≥ it is not", g.name(), rk.desc, rh.desc);
                }
            }
        }
    }
}

#[test]
fn multiplicity_rows_account_for_the_induced_degree() {
    for g in [FiniteGroup::dihedral(12).unwrap(), FiniteGroup::dicyclic(6).unwrap()] {
        let analyzer = GelfandAnalyzer::new(&g).unwrap();
        for h in all_subgroups(&g).unwrap() {
            let m = analyzer.multiplicity_matrix(&h).unwrap();
            for (row, d) in m.entries.iter().zip(&m.row_degrees) {
                let total: u64 = row.iter().zip(&m.col_degrees).map(|(e, c)| e * c).sum();
                assert_eq!(BigInt::from(total), BigInt::from(h.index() as u64 * d));
            }
        }
    }
}
