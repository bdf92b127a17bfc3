//! Ideal operations against brute-force membership on a bounded box of
//! exponent vectors.

use monohom::{Monomial, MonomialIdeal};
use proptest::prelude::*;

const NV: usize = 3;
const BOX: u32 = 7;

fn mono(e: Vec<u32>) -> Monomial {
    Monomial::from_exponents(e).unwrap()
}

fn monomial_strategy(max: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max, NV).prop_map(mono)
}

fn ideal_strategy() -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(monomial_strategy(4), 1..=4).prop_map(|g| MonomialIdeal::minimalize(NV, g).unwrap())
}

fn box_monomials() -> Vec<Monomial> {
    let mut out = Vec::new();
    for a in 0..=BOX {
        for b in 0..=BOX {
            for c in 0..=BOX {
                out.push(mono(vec![a, b, c]));
            }
        }
    }
    out
}

fn member(i: &MonomialIdeal, u: &Monomial) -> bool {
    i.gens().iter().any(|g| g.divides(u))
}

fn all_degree(k: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for a in 0..=k {
        for b in 0..=k - a {
            out.push(mono(vec![a, b, k - a - b]));
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generators_are_minimal_and_sorted(i in ideal_strategy()) {
        let g = i.gens();
        for (k, a) in g.iter().enumerate() {
            for (l, b) in g.iter().enumerate() {
                prop_assert!(k == l || !a.divides(b));
            }
        }
        prop_assert!(g.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(g.windows(2).all(|w| w[0].degree() <= w[1].degree()));
    }

    #[test]
    fn sum_intersection_product(i in ideal_strategy(), j in ideal_strategy()) {
        let s = i.sum(&j).unwrap();
        let m = i.intersect(&j).unwrap();
        let p = i.product(&j).unwrap();
        for u in box_monomials() {
            prop_assert_eq!(s.contains(&u).unwrap(), member(&i, &u) || member(&j, &u));
            prop_assert_eq!(m.contains(&u).unwrap(), member(&i, &u) && member(&j, &u));
            let in_p = i.gens().iter().any(|a| j.gens().iter().any(|b| a.mul(b).unwrap().divides(&u)));
            prop_assert_eq!(p.contains(&u).unwrap(), in_p);
        }
        prop_assert!(p.contains_ideal(&MonomialIdeal::zero(NV)).unwrap());
        prop_assert!(m.contains_ideal(&p).unwrap());
    }

    #[test]
    fn colon_membership(i in ideal_strategy(), j in ideal_strategy()) {
        let c = i.colon(&j).unwrap();
        for u in box_monomials().into_iter().filter(|u| u.exponents().iter().all(|&e| e <= 3)) {
            let expected = j.gens().iter().all(|g| member(&i, &u.mul(g).unwrap()));
            prop_assert_eq!(c.contains(&u).unwrap(), expected, "u = {:?}", u);
        }
        // (I : J) J ⊆ I and I ⊆ (I : J)
        prop_assert!(i.contains_ideal(&c.product(&j).unwrap()).unwrap());
        prop_assert!(c.contains_ideal(&i).unwrap());
    }

    #[test]
    fn radical_membership(i in ideal_strategy()) {
        let r = i.radical();
        for u in box_monomials().into_iter().filter(|u| u.exponents().iter().all(|&e| e <= 2)) {
            prop_assert_eq!(r.contains(&u).unwrap(), member(&i, &u.pow(4).unwrap()));
        }
        prop_assert!(r.gens().iter().all(|g| g.exponents().iter().all(|&e| e <= 1)));
    }

    #[test]
    fn saturation_by_maximal(i in ideal_strategy()) {
        let sat = i.saturation(&MonomialIdeal::maximal(NV)).unwrap();
        // Generators have exponents at most 4, so degree 12 suffices.
        let big = all_degree(12);
        for u in box_monomials().into_iter().filter(|u| u.exponents().iter().all(|&e| e <= 4)) {
            let expected = big.iter().all(|v| member(&i, &u.mul(v).unwrap()));
            prop_assert_eq!(sat.contains(&u).unwrap(), expected, "u = {:?}", u);
        }
    }

    #[test]
    fn colength_counts_standard_monomials(i in ideal_strategy(), k in 1u32..4) {
        let j = i.sum(&MonomialIdeal::maximal_power(NV, k + 2)).unwrap();
        let brute = box_monomials().iter().filter(|u| !member(&j, u)).count();
        prop_assert!(j.is_finite_colength());
        prop_assert_eq!(j.length().unwrap(), brute);
        prop_assert_eq!(j.dimension(), if j.is_unit() { -1 } else { 0 });
    }

    #[test]
    fn dimension_of_principal(u in monomial_strategy(3)) {
        prop_assume!(!u.is_one());
        prop_assert_eq!(MonomialIdeal::principal(u).dimension(), NV as i32 - 1);
    }

    #[test]
    fn monomial_gcd_lcm(a in monomial_strategy(5), b in monomial_strategy(5)) {
        let g = a.gcd(&b);
        let l = a.lcm(&b);
        prop_assert_eq!(g.mul(&l).unwrap(), a.mul(&b).unwrap());
        prop_assert!(g.divides(&a) && g.divides(&b) && a.divides(&l) && b.divides(&l));
        prop_assert_eq!(a.colon(&b).mul(&b).unwrap(), l);
    }
    #[test]
    fn minimalize_idempotent_and_order_independent(gens in prop::collection::vec(monomial_strategy(4), 0..6)) {
        let a = MonomialIdeal::minimalize(NV, gens.clone()).unwrap();
        let b = MonomialIdeal::minimalize(NV, a.gens().to_vec()).unwrap();
        let mut rev = gens;
        rev.reverse();
        let c = MonomialIdeal::minimalize(NV, rev).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(&a, &c);
    }

    #[test]
    fn lattice_and_colon_laws(i in ideal_strategy(), j in ideal_strategy(), u in monomial_strategy(3), v in monomial_strategy(3)) {
        let m = i.intersect(&j).unwrap();
        let s = i.sum(&j).unwrap();
        prop_assert!(i.contains_ideal(&m).unwrap());
        prop_assert!(s.contains_ideal(&i).unwrap());
        prop_assert!(i.colon(&j).unwrap().contains_ideal(&i).unwrap());
        let left = i.colon_monomial(&u).unwrap().colon_monomial(&v).unwrap();
        prop_assert_eq!(left, i.colon_monomial(&u.mul(&v).unwrap()).unwrap());
    }

    #[test]
    fn saturation_is_a_fixpoint(i in ideal_strategy(), j in ideal_strategy()) {
        prop_assume!(!j.is_zero());
        let sat = i.saturation(&j).unwrap();
        prop_assert_eq!(sat.colon(&j).unwrap(), sat);
    }

    #[test]
    fn dimension_ignores_radical(i in ideal_strategy()) {
        prop_assert_eq!(i.dimension(), i.radical().dimension());
    }
}
