use std::sync::Arc;

use num_bigint::BigInt;
use strong_gelfand::character::{
    constructive_family_table, decompose, family_table, induce, inner_product, linear_characters_bruteforce, restrict,
    validate_table, CharacterTable, ClassFunction, Provenance,
};
use strong_gelfand::cyclo::cyclotomic_polynomial;
use strong_gelfand::gelfand::{audit, classify_subgroups, is_gelfand, is_strong_gelfand, multiplicity_matrix, predict};
use strong_gelfand::group::{
    all_subgroups, describe_subgroup, generated_subgroup, FamilyKind, FiniteGroup, Subgroup, SubgroupKind,
};
use strong_gelfand::Cyclotomic;

fn z(n: usize, k: i64) -> Cyclotomic {
    Cyclotomic::zeta(n, k).unwrap()
}

fn int(v: i64) -> Cyclotomic {
    Cyclotomic::from_integer(v)
}

fn sub(g: &Arc<FiniteGroup>, labels: &[&str]) -> Subgroup {
    let gens: Vec<usize> = labels.iter().map(|l| g.parse_label(l).unwrap()).collect();
    generated_subgroup(g, &gens).unwrap()
}

fn row<'a>(t: &'a CharacterTable, name: &str) -> &'a ClassFunction {
    t.row(name).unwrap_or_else(|| panic!("no row {name}"))
}

#[test]
fn cyclotomic_examples() {
    assert_eq!(z(1, 0), int(1));
    assert_eq!(z(2, 1), int(-1));
    assert_eq!(z(6, 3), int(-1));
    assert_eq!(z(3, 1) + z(3, 2), int(-1));
    assert_eq!(z(4, 1) * z(4, 1), int(-1));
    assert_eq!((z(5, 1) + z(5, 4)) * (z(5, 2) + z(5, 3)), int(-1));
    assert_eq!((z(1, 0) + z(1, 0)).as_rational_integer(), Some(BigInt::from(2)));
    assert_eq!(z(5, 1).as_rational_integer(), None);
    assert_eq!((z(3, 1) + z(3, 2)).as_rational_integer(), Some(BigInt::from(-1)));
    assert_eq!(z(3, 1).lift(6).unwrap(), z(6, 2));
    let i = z(4, 1).approx();
    assert!(i.re.abs() < 1e-12 && (i.im - 1.0).abs() < 1e-12);
    let golden = (z(5, 1) + z(5, 4)).approx();
    assert!((golden.re - 0.618_033_988_749_895).abs() < 1e-9 && golden.im.abs() < 1e-9);
}

#[test]
fn cyclotomic_polynomial_examples() {
    let as_ints =
        |n| cyclotomic_polynomial(n).unwrap().into_iter().map(|c| i64::try_from(c).unwrap()).collect::<Vec<_>>();
    assert_eq!(as_ints(1), vec![-1, 1]);
    assert_eq!(as_ints(4), vec![1, 0, 1]);
    assert_eq!(as_ints(12), vec![1, 0, -1, 0, 1]);
}

#[test]
fn group_examples() {
    let d6 = FiniteGroup::dihedral(3).unwrap();
    let ba = d6.parse_label("ba").unwrap();
    assert_eq!(d6.order(), 6);
    assert_eq!(d6.mul(ba, ba), d6.identity());

    let dic12 = FiniteGroup::dicyclic(3).unwrap();
    assert_eq!(dic12.order(), 12);
    assert_eq!(dic12.element_order(dic12.parse_label("b").unwrap()), 4);

    let c2 = FiniteGroup::cyclic(2).unwrap();
    let v4 = FiniteGroup::product(&c2, &c2).unwrap();
    assert_eq!(v4.order(), 4);
    assert!((0..4).all(|x| v4.mul(x, x) == v4.identity()));
}

#[test]
fn subgroup_examples() {
    let d10 = FiniteGroup::dihedral(5).unwrap();
    let dic12 = FiniteGroup::dicyclic(3).unwrap();
    let b = sub(&d10, &["b"]);
    assert_eq!(b.order(), 2);
    assert_eq!(sub(&dic12, &["b"]).order(), 4);
    assert_eq!(sub(&d10, &["1"]).order(), 1);

    assert_eq!(all_subgroups(&FiniteGroup::dihedral(6).unwrap()).unwrap().len(), 16);
    let c6: Vec<usize> = all_subgroups(&FiniteGroup::cyclic(6).unwrap()).unwrap().iter().map(Subgroup::order).collect();
    assert_eq!(c6, vec![1, 2, 3, 6]);
    let mut dic: Vec<usize> = all_subgroups(&dic12).unwrap().iter().map(Subgroup::order).collect();
    dic.sort();
    assert_eq!(dic, vec![1, 2, 3, 4, 4, 4, 6, 12]);

    assert!(matches!(describe_subgroup(&b), SubgroupKind::Reflection { .. }));
    assert_eq!(describe_subgroup(&sub(&d10, &["a"])), SubgroupKind::Cyclic { order: 5 });
    assert!(matches!(describe_subgroup(&sub(&dic12, &["b"])), SubgroupKind::BaType { .. }));
}

#[test]
fn character_examples() {
    let d10 = FiniteGroup::dihedral(5).unwrap();
    let t = family_table(&d10).unwrap();
    assert_eq!(t.names(), vec!["χ_1", "χ_2", "ψ_1", "ψ_2"]);
    assert_eq!(inner_product(row(&t, "χ_1"), row(&t, "χ_1")).unwrap(), int(1));

    let b = sub(&d10, &["b"]);
    let mu0 = ClassFunction::trivial(&b.model().unwrap().group);
    let up = induce(&mu0, &b).unwrap();
    assert_eq!(inner_product(&up, row(&t, "ψ_1")).unwrap(), int(1));
    assert_eq!(decompose(&up, &t).unwrap(), vec![1, 0, 1, 1]);
    assert_eq!(decompose(row(&t, "χ_1"), &t).unwrap(), vec![1, 0, 0, 0]);
    assert_eq!(decompose(&ClassFunction::regular(&d10), &t).unwrap(), vec![1, 1, 2, 2]);

    for n in [9usize, 15] {
        let g = FiniteGroup::dihedral(n).unwrap();
        let t = family_table(&g).unwrap();
        for m in (2..n).filter(|m| n % m == 0) {
            let cm = sub(&g, &[&format!("a^{}", n / m)]);
            let down = restrict(row(&t, &format!("ψ_{m}")), &cm).unwrap();
            let mu0 = ClassFunction::trivial(&cm.model().unwrap().group);
            assert_eq!(inner_product(&down, &mu0).unwrap(), int(2), "n = {n}, m = {m}");
        }
    }

    let c4 = FiniteGroup::cyclic(4).unwrap();
    let t = family_table(&c4).unwrap();
    let g = c4.generators()[0];
    for k in 0..4 {
        for r in 0..4 {
            assert_eq!(*row(&t, &format!("μ_{k}")).value_at(c4.pow(g, r)), z(4, (k * r) as i64));
        }
    }

    let dic12 = FiniteGroup::dicyclic(3).unwrap();
    let t = family_table(&dic12).unwrap();
    let b = dic12.parse_label("b").unwrap();
    assert_eq!(*row(&t, "θ_3").value_at(b), z(4, 1));
    assert_eq!(*row(&t, "θ_4").value_at(b), z(4, 3));
    assert_eq!(t.names(), vec!["θ_1", "θ_2", "θ_3", "θ_4", "π_1", "γ_1"]);
}

#[test]
fn validation_examples() {
    for g in [FiniteGroup::dihedral(7).unwrap(), FiniteGroup::dicyclic(5).unwrap()] {
        assert!(validate_table(&family_table(&g).unwrap()).passed());
    }
    let d10 = FiniteGroup::dihedral(5).unwrap();
    let t = family_table(&d10).unwrap();
    let mut rows = t.irreducibles().to_vec();
    rows[1] = rows[0].clone();
    let broken = CharacterTable::new(d10, rows, Provenance::Constructive).unwrap();
    assert!(!validate_table(&broken).passed());
}

#[test]
fn oracle_examples() {
    let d10 = FiniteGroup::dihedral(5).unwrap();
    assert_eq!(linear_characters_bruteforce(&d10).len(), 2);
    assert_eq!(linear_characters_bruteforce(&FiniteGroup::dihedral(6).unwrap()).len(), 4);
    let dic12 = FiniteGroup::dicyclic(3).unwrap();
    let lin = linear_characters_bruteforce(&dic12);
    let b = dic12.parse_label("b").unwrap();
    assert_eq!(lin.len(), 4);
    assert!(lin.iter().any(|c| *c.value_at(b) == z(4, 1)));
    assert!(lin.iter().any(|c| *c.value_at(b) == z(4, 3)));

    assert!(family_table(&d10).unwrap().equals_up_to_row_permutation(&constructive_family_table(&d10).unwrap()));
    let q8 = constructive_family_table(&FiniteGroup::dicyclic(2).unwrap()).unwrap();
    assert_eq!(q8.degrees().iter().filter(|&&d| d == 2).count(), 1);
    let c7 = FiniteGroup::cyclic(7).unwrap();
    assert!(family_table(&c7).unwrap().equals_up_to_row_permutation(&constructive_family_table(&c7).unwrap()));
}

#[test]
fn gelfand_examples() {
    let d10 = FiniteGroup::dihedral(5).unwrap();
    assert!(is_gelfand(&sub(&d10, &["b"])).unwrap());
    assert!(is_gelfand(&Subgroup::whole(&d10)).unwrap());
    let q8 = FiniteGroup::dicyclic(2).unwrap();
    let center = sub(&q8, &["b^2"]);
    assert!(is_gelfand(&center).unwrap());
    assert_eq!(multiplicity_matrix(&center).unwrap().trivial_row(), &[1, 1, 1, 1, 0]);

    assert!(is_strong_gelfand(&sub(&d10, &["a"])).unwrap().holds);
    let trivial = is_strong_gelfand(&Subgroup::trivial(&d10)).unwrap();
    assert!(!trivial.holds);
    let w = trivial.witness.unwrap();
    assert_eq!((w.psi.as_str(), w.chi.as_str(), w.mult), ("μ_0", "ψ_1", 2));

    for n in [9usize, 15] {
        let g = FiniteGroup::dihedral(n).unwrap();
        for m in (2..n).filter(|m| n % m == 0) {
            let verdict = is_strong_gelfand(&sub(&g, &[&format!("a^{}", n / m)])).unwrap();
            assert!(!verdict.holds);
            assert_eq!(verdict.witness.unwrap().mult, 2);
        }
    }
}

#[test]
fn classification_examples() {
    let d10 = classify_subgroups(&FiniteGroup::dihedral(5).unwrap()).unwrap();
    assert_eq!(d10.records.len(), 8);
    for r in &d10.records {
        assert_eq!(r.strong_gelfand, r.order != 1, "{}", r.desc);
    }

    let dic12 = classify_subgroups(&FiniteGroup::dicyclic(3).unwrap()).unwrap();
    let mut sgp: Vec<String> = dic12.records.iter().filter(|r| r.strong_gelfand).map(|r| r.desc.clone()).collect();
    sgp.sort();
    assert_eq!(sgp.len(), 6);
    assert_eq!(dic12.records.iter().filter(|r| r.strong_gelfand && r.order == 4).count(), 3);
    let not: Vec<usize> = dic12.records.iter().filter(|r| !r.strong_gelfand).map(|r| r.order).collect();
    assert_eq!(not, vec![1, 2]);

    for n in 1..=12 {
        assert!(classify_subgroups(&FiniteGroup::cyclic(n).unwrap()).unwrap().records.iter().all(|r| r.strong_gelfand));
    }
}

#[test]
fn prediction_examples() {
    let d10 = FiniteGroup::dihedral(5).unwrap();
    let p = predict(d10.family()).unwrap();
    assert!(p.predicts_strong_gelfand(&sub(&d10, &["a"])).unwrap());
    assert!(!p.predicts_strong_gelfand(&Subgroup::trivial(&d10)).unwrap());

    let d12 = FiniteGroup::dihedral(6).unwrap();
    let a2 = sub(&d12, &["a^2"]);
    assert_eq!((a2.order(), a2.index()), (3, 4));
    assert!(predict(d12.family()).unwrap().predicts_strong_gelfand(&a2).unwrap());

    let dic12 = FiniteGroup::dicyclic(3).unwrap();
    let p = predict(dic12.family()).unwrap();
    assert!(p.predicts_strong_gelfand(&sub(&dic12, &["a"])).unwrap());
    assert!(p.predicts_strong_gelfand(&sub(&dic12, &["a^2"])).unwrap());
    assert!(!p.predicts_strong_gelfand(&sub(&dic12, &["b^2"])).unwrap());
}

#[test]
fn audit_examples() {
    let clean = audit(FamilyKind::Dihedral, &[3, 5, 6, 7]).unwrap();
    assert!(!clean.has_discrepancies());

    let d8 = audit(FamilyKind::Dihedral, &[4]).unwrap();
    let found = &d8.entries[0].discrepancies;
    assert_eq!(found.len(), 1);
    assert_eq!(found[0].generators, vec!["a^2"]);
    assert!(found[0].predicted && !found[0].computed);
    let w = found[0].witness.as_ref().unwrap();
    assert_eq!((w.psi.as_str(), w.chi.as_str(), w.mult), ("μ_1", "ψ_1", 2));

    let q8 = audit(FamilyKind::Dicyclic, &[2]).unwrap();
    let found = &q8.entries[0].discrepancies;
    assert_eq!(found.len(), 1);
    assert_eq!(found[0].order, 2);
    assert!(found[0].witness.as_ref().unwrap().mult >= 2);
}
