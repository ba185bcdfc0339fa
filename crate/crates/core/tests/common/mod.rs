#![allow(dead_code)]

use proptest::prelude::*;

use lie_entropy::lie_algebra::LieAlgebra;
use lie_entropy::linalg::{int, rat};
use lie_entropy::{MatrixQ, MatrixZ, Rational};

pub fn block(kind: u8) -> LieAlgebra {
    match kind % 6 {
        0 => LieAlgebra::abelian(1),
        1 => LieAlgebra::heisenberg(),
        2 => LieAlgebra::euclidean(),
        3 => LieAlgebra::sl2(),
        4 => LieAlgebra::affine_line(),
        _ => LieAlgebra::abelian(2),
    }
}

/// Structure constants of `a` in the basis given by the columns of `p`.
pub fn change_basis(a: &LieAlgebra, p: &MatrixQ) -> LieAlgebra {
    let n = a.dim();
    let inv = p.inverse().unwrap().expect("invertible change of basis");
    let cols: Vec<Vec<Rational>> = (0..n).map(|j| p.column(j)).collect();
    let structure = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| inv.mul_vec(&a.bracket(&cols[i], &cols[j]).unwrap()).unwrap())
                .collect()
        })
        .collect();
    LieAlgebra::new(a.names().to_vec(), structure).unwrap()
}

/// Unit upper-triangular integer matrix times a permutation: always invertible.
pub fn basis_change(n: usize, entries: &[i64], shift: usize) -> MatrixQ {
    let mut rows = vec![vec![int(0); n]; n];
    let mut k = 0;
    for i in 0..n {
        for j in 0..n {
            let src = (j + shift) % n;
            rows[i][src] = if i == j {
                int(1)
            } else if j > i {
                let v = entries[k % entries.len()];
                k += 1;
                int(v)
            } else {
                int(0)
            };
        }
    }
    MatrixQ::from_rows(rows).unwrap()
}

/// Direct sums of small standard algebras in a scrambled basis.
pub fn arb_algebra() -> impl Strategy<Value = LieAlgebra> {
    (
        prop::collection::vec(0u8..6, 1..=3),
        prop::collection::vec(-2i64..=2, 1..12),
        0usize..7,
    )
        .prop_map(|(kinds, entries, shift)| {
            let a = kinds[1..].iter().fold(block(kinds[0]), |acc, &k| acc.direct_sum(&block(k)));
            let p = basis_change(a.dim(), &entries, shift);
            change_basis(&a, &p)
        })
}

pub fn arb_int_matrix(n: usize, bound: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-bound..=bound, n), n)
}

pub fn to_z(rows: &[Vec<i64>]) -> MatrixZ {
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    MatrixZ::from_i64(&refs).unwrap()
}

pub fn mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

/// Unit upper-triangular matrix and its exact inverse.
pub fn unimodular_pair(n: usize, entries: &[i64]) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let p = basis_change(n, entries, 0);
    let inv = p.inverse().unwrap().unwrap();
    let to_i64 = |m: &MatrixQ| -> Vec<Vec<i64>> {
        m.to_integer()
            .unwrap()
            .to_rows()
            .iter()
            .map(|r| r.iter().map(|x| x.to_string().parse().unwrap()).collect())
            .collect()
    };
    (to_i64(&p), to_i64(&inv))
}

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| rat(p, q))
}
