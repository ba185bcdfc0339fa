mod common;

use proptest::prelude::*;

use common::arb_algebra;
use lie_entropy::lie_algebra::{
    adjoint_matrix, center, centralizer_in, derived_and_lower_central_series, killing_form, nilradical,
    quotient_algebra, solvable_radical, validate_algebra, LieAlgebra,
};
use lie_entropy::linalg::int;
use lie_entropy::{Rational, SubspaceBasis};

fn dot(u: &[Rational], v: &[Rational]) -> Rational {
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

fn kappa(k: &lie_entropy::MatrixQ, x: &[Rational], y: &[Rational]) -> Rational {
    dot(x, &k.mul_vec(y).unwrap())
}

fn combination(basis: &[Vec<Rational>], coeffs: &[i64], n: usize) -> Vec<Rational> {
    let mut v = vec![int(0); n];
    for (b, c) in basis.iter().zip(coeffs.iter().cycle()) {
        for (vi, bi) in v.iter_mut().zip(b) {
            *vi += bi * int(*c);
        }
    }
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn scrambled_algebras_stay_valid(a in arb_algebra()) {
        prop_assert!(validate_algebra(&a).is_valid());
    }

    #[test]
    fn killing_form_is_symmetric_and_invariant(a in arb_algebra()) {
        let k = killing_form(&a);
        prop_assert_eq!(&k.transpose(), &k);
        let n = a.dim();
        for i in 0..n {
            for j in 0..n {
                let (x, y) = (a.basis_vector(i), a.basis_vector(j));
                let xy = a.bracket(&x, &y).unwrap();
                for l in 0..n {
                    let z = a.basis_vector(l);
                    let yz = a.bracket(&y, &z).unwrap();
                    prop_assert_eq!(kappa(&k, &xy, &z), kappa(&k, &x, &yz));
                }
            }
        }
    }

    #[test]
    fn radical_chain(a in arb_algebra()) {
        let r = solvable_radical(&a).unwrap().space;
        let nil = nilradical(&a).unwrap().space;
        prop_assert!(a.is_ideal(&r).unwrap());
        prop_assert!(a.is_ideal(&nil).unwrap());
        prop_assert!(solvable_within(&a, &r));
        let derived = a.bracket_space(&r, &r).unwrap();
        prop_assert!(derived.is_subspace_of(&nil));
        prop_assert!(nil.is_subspace_of(&r));
        for b in nil.basis() {
            prop_assert!(a.is_ad_nilpotent(b).unwrap());
        }
    }

    /// The nilradical is the set of ad-nilpotent elements of the radical.
    #[test]
    fn nilradical_is_maximal(a in arb_algebra(), coeffs in prop::collection::vec(-3i64..=3, 1..6)) {
        let r = solvable_radical(&a).unwrap().space;
        let nil = nilradical(&a).unwrap().space;
        let x = combination(r.basis(), &coeffs, a.dim());
        prop_assert_eq!(a.is_ad_nilpotent(&x).unwrap(), nil.contains(&x));
        for b in r.basis() {
            prop_assert_eq!(a.is_ad_nilpotent(b).unwrap(), nil.contains(b));
        }
    }

    #[test]
    fn center_is_centralizer_of_everything(a in arb_algebra()) {
        let z = center(&a).space;
        let full = SubspaceBasis::full(a.dim());
        prop_assert_eq!(&centralizer_in(&a, &full).unwrap(), &z);
        for v in z.basis() {
            prop_assert!(adjoint_matrix(&a, v).unwrap().is_zero_matrix());
        }
    }

    #[test]
    fn quotients_by_ideals_are_algebras(a in arb_algebra()) {
        let n = a.dim();
        for ideal in [nilradical(&a).unwrap().space, solvable_radical(&a).unwrap().space, center(&a).space] {
            let q = quotient_algebra(&a, &ideal).unwrap();
            prop_assert!(validate_algebra(&q.algebra).is_valid());
            prop_assert_eq!(q.algebra.dim(), n - ideal.dim());
            prop_assert!(q.projection.mul(&q.section).unwrap().is_identity());
            for b in ideal.basis() {
                prop_assert!(q.projection.mul_vec(b).unwrap().iter().all(|c| *c == int(0)));
            }
        }
    }

    #[test]
    fn derived_series_decreases(a in arb_algebra()) {
        let s = derived_and_lower_central_series(&a);
        for w in s.derived.windows(2) {
            prop_assert!(w[1].is_subspace_of(&w[0]));
        }
        for w in s.lower_central.windows(2) {
            prop_assert!(w[1].is_subspace_of(&w[0]));
        }
        prop_assert_eq!(s.solvable, s.derived.last().unwrap().is_zero());
        prop_assert!(!s.nilpotent || s.solvable);
    }
}

/// Derived series of a subalgebra, computed inside it.
fn solvable_within(a: &LieAlgebra, space: &SubspaceBasis) -> bool {
    let mut s = space.clone();
    for _ in 0..=a.dim() {
        if s.is_zero() {
            return true;
        }
        s = a.bracket_space(&s, &s).unwrap();
    }
    false
}
