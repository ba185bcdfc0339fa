mod common;

use proptest::prelude::*;

use common::{arb_int_matrix, basis_change, small_rational, to_z};
use lie_entropy::group::{
    check_toral_induced_finite_order, quotient_by_torus, toral_lattice, toral_lattice_in, topological_entropy,
    validate_endomorphism, validate_presentation, PresentedGroup,
};
use lie_entropy::lie_algebra::{nilradical, solvable_radical, LieAlgebra};
use lie_entropy::linalg::int;
use lie_entropy::torus::{TorusEndo, Verdict};
use lie_entropy::{MatrixQ, Rational, DEFAULT_TOL};

/// Abelian with a random sublattice, Heisenberg with a central circle, or
/// E(2) with its rotation circle, each with or without its lattice.
fn piece(kind: u8, rank: usize, scale: i64, entries: &[i64]) -> PresentedGroup {
    let (name, algebra, lattice): (&str, LieAlgebra, Vec<Vec<Rational>>) = match kind % 3 {
        0 => {
            let n = 3;
            let rows = basis_change(n, entries, 0).to_rows();
            ("abelian", LieAlgebra::abelian(n), rows.into_iter().take(rank % (n + 1)).collect())
        }
        1 => {
            let l = if rank.is_multiple_of(2) { vec![] } else { vec![vec![int(0), int(0), int(scale)]] };
            ("heisenberg", LieAlgebra::heisenberg(), l)
        }
        _ => {
            let l = if rank.is_multiple_of(2) { vec![] } else { vec![vec![int(scale), int(0), int(0)]] };
            ("e2", LieAlgebra::euclidean(), l)
        }
    };
    PresentedGroup::new(name, algebra, lattice).unwrap()
}

fn arb_group() -> impl Strategy<Value = PresentedGroup> {
    prop::collection::vec((0u8..3, 0usize..4, 1i64..=3, prop::collection::vec(-2i64..=2, 3)), 1..=3).prop_map(
        |parts| {
            parts
                .iter()
                .map(|(k, r, s, e)| piece(*k, *r, *s, e))
                .reduce(|a, b| a.direct_product(&b))
                .unwrap()
        },
    )
}

/// `ℝᵃ × Tᵇ` with `dφ = [[P, 0], [Q, M]]`; the lattice is the last `b`
/// coordinates, so the torus action is `M`.
fn cylinder(p: &[Vec<i64>], q: &[Vec<i64>], m: &[Vec<i64>]) -> (PresentedGroup, MatrixQ) {
    let (a, b) = (p.len(), m.len());
    let n = a + b;
    let lattice = (a..n).map(|i| (0..n).map(|j| int((i == j) as i64)).collect()).collect();
    let g = PresentedGroup::new("cylinder", LieAlgebra::abelian(n), lattice).unwrap();
    let mut rows = vec![vec![int(0); n]; n];
    for i in 0..a {
        for j in 0..a {
            rows[i][j] = int(p[i][j]);
        }
    }
    for i in 0..b {
        for j in 0..a {
            rows[a + i][j] = int(q[i % q.len()][j % q[0].len()]);
        }
        for j in 0..b {
            rows[a + i][a + j] = int(m[i][j]);
        }
    }
    (g, MatrixQ::from_rows(rows).unwrap())
}

fn e2_endo(sign: bool, a: Rational, b: Rational) -> MatrixQ {
    let z = int(0);
    let rows = if sign {
        vec![vec![int(1), z.clone(), z.clone()], vec![z.clone(), a.clone(), -b.clone()], vec![z, b, a]]
    } else {
        vec![vec![int(-1), z.clone(), z.clone()], vec![z.clone(), a.clone(), b.clone()], vec![z, b, -a]]
    };
    MatrixQ::from_rows(rows).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_presentations_are_valid(g in arb_group()) {
        prop_assert!(validate_presentation(&g).is_valid());
    }

    #[test]
    fn quotient_by_torus_has_no_torus(g in arb_group()) {
        let q = quotient_by_torus(&g).unwrap();
        prop_assert!(toral_lattice(&q).unwrap().is_trivial());
        prop_assert_eq!(q.dim(), g.dim() - toral_lattice(&g).unwrap().lattice.rank());
    }

    #[test]
    fn toral_lattices_coincide(g in arb_group()) {
        let lambda = toral_lattice(&g).unwrap().lattice;
        let r = solvable_radical(&g.algebra).unwrap().space;
        let n = nilradical(&g.algebra).unwrap().space;
        prop_assert_eq!(&toral_lattice_in(&g, &r).unwrap(), &lambda);
        prop_assert_eq!(&toral_lattice_in(&g, &n).unwrap(), &lambda);
    }

    /// With `P` invertible the whole group is the eventual image and the
    /// pipeline must reproduce the entropy of `M` on the torus.
    #[test]
    fn pipeline_matches_torus_entropy(
        p in arb_int_matrix(2, 2),
        q in arb_int_matrix(2, 2),
        m in (1usize..=3).prop_flat_map(|b| arb_int_matrix(b, 3)),
    ) {
        prop_assume!(to_z(&p).det().unwrap() != 0.into());
        let (g, d) = cylinder(&p, &q, &m);
        let e = validate_endomorphism(&g, &d).unwrap();
        let r = topological_entropy(&g, &e, DEFAULT_TOL).unwrap();
        let torus = TorusEndo::new(to_z(&m)).unwrap().entropy(DEFAULT_TOL).unwrap();
        prop_assert!((r.entropy.value - torus.value).abs() <= 1e-12);
        prop_assert_eq!(r.entropy.exact_zero, torus.exact_zero);
        prop_assert!(r.entropy.value <= r.bowen_bound.value + 2e-9);
        if let Some(ly) = r.li_yorke {
            prop_assert_eq!(ly.verdict == Verdict::LiYorkeAllPowers, torus.is_positive());
        }
    }

    #[test]
    fn group_power_law(p in arb_int_matrix(1, 2), q in arb_int_matrix(2, 2), m in arb_int_matrix(2, 2), k in 2u32..=4) {
        let (g, d) = cylinder(&p, &q, &m);
        let e = validate_endomorphism(&g, &d).unwrap();
        let h1 = topological_entropy(&g, &e, DEFAULT_TOL).unwrap().entropy.value;
        let hk = topological_entropy(&g, &e.pow(k), DEFAULT_TOL).unwrap().entropy.value;
        prop_assert!((hk - k as f64 * h1).abs() <= 2e-9);
    }

    #[test]
    fn direct_products_add(m1 in arb_int_matrix(2, 2), m2 in arb_int_matrix(2, 2)) {
        let (g1, d1) = cylinder(&[vec![1]], &[vec![0], vec![0]], &m1);
        let (g2, d2) = cylinder(&[vec![2]], &[vec![1], vec![0]], &m2);
        let e1 = validate_endomorphism(&g1, &d1).unwrap();
        let e2 = validate_endomorphism(&g2, &d2).unwrap();
        let g = g1.direct_product(&g2);
        let e = validate_endomorphism(&g, &e1.direct_sum(&e2).d_phi).unwrap();
        let h = |g: &PresentedGroup, e| topological_entropy(g, e, DEFAULT_TOL).unwrap().entropy.value;
        prop_assert!((h(&g, &e) - h(&g1, &e1) - h(&g2, &e2)).abs() <= 2e-9);
    }

    /// E(2)-type endomorphisms: the induced map on the torus of `R/N` is
    /// `±1` on the rotation circle.
    #[test]
    fn euclidean_toral_order(sign in any::<bool>(), a in small_rational(), b in small_rational()) {
        prop_assume!(a != int(0) || b != int(0));
        let g = piece(2, 1, 1, &[0]);
        let e = validate_endomorphism(&g, &e2_endo(sign, a, b)).unwrap();
        let check = check_toral_induced_finite_order(&g, &e).unwrap();
        prop_assert_eq!(check.order, if sign { 1 } else { 2 });
        let r = topological_entropy(&g, &e, DEFAULT_TOL).unwrap();
        prop_assert!(r.entropy.exact_zero);
        prop_assert_eq!(r.li_yorke.unwrap().verdict, Verdict::SomePowerLiYorkeFree);
    }
}

#[test]
fn non_surjective_maps_get_no_verdict() {
    let (g, d) = cylinder(&[vec![0]], &[vec![0]], &[vec![2]]);
    let e = validate_endomorphism(&g, &d).unwrap();
    assert!(!e.surjective);
    let r = topological_entropy(&g, &e, DEFAULT_TOL).unwrap();
    assert!(r.li_yorke.is_none());
    assert!((r.entropy.value - 2f64.ln()).abs() < 1e-12);
}

#[test]
fn lattice_leaving_map_is_rejected() {
    let (g, _) = cylinder(&[vec![1]], &[vec![0]], &[vec![1]]);
    let d = MatrixQ::from_rows(vec![vec![int(1), int(0)], vec![int(0), lie_entropy::linalg::rat(1, 2)]]).unwrap();
    assert!(validate_endomorphism(&g, &d).is_err());
}
