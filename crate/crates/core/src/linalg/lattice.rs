use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::MatrixQ;
use super::rational::Rational;
use super::subspace::{combine, SubspaceBasis};
use crate::{Error, Result};

/// A ℤ-module of rank equal to the number of generators, stored in row-style
/// Hermite normal form. Generators may be rational (lattices of
/// log-coordinates); the form is computed on a common-denominator scaling,
/// which commutes with the normalization.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeBasis {
    ambient_dim: usize,
    generators: Vec<Vec<Rational>>,
}

impl LatticeBasis {
    pub fn empty(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            generators: Vec::new(),
        }
    }

    pub fn standard(ambient_dim: usize) -> Self {
        Self::from_integer(
            ambient_dim,
            &(0..ambient_dim)
                .map(|i| {
                    let mut v = vec![BigInt::zero(); ambient_dim];
                    v[i] = BigInt::one();
                    v
                })
                .collect::<Vec<_>>(),
        )
        .expect("unit vectors")
    }

    pub fn from_integer(ambient_dim: usize, generators: &[Vec<BigInt>]) -> Result<Self> {
        check_lengths(ambient_dim, generators)?;
        let rows = hnf_rows(generators.to_vec(), ambient_dim);
        Ok(Self {
            ambient_dim,
            generators: rows
                .into_iter()
                .map(|r| r.into_iter().map(Rational::from_integer).collect())
                .collect(),
        })
    }

    pub fn from_rational(ambient_dim: usize, generators: &[Vec<Rational>]) -> Result<Self> {
        check_lengths(ambient_dim, generators)?;
        let denom = common_denominator(generators);
        let scaled: Vec<Vec<BigInt>> = generators
            .iter()
            .map(|g| g.iter().map(|x| (x * &denom).to_integer()).collect())
            .collect();
        let rows = hnf_rows(scaled, ambient_dim);
        let d = Rational::from_integer(denom);
        Ok(Self {
            ambient_dim,
            generators: rows
                .into_iter()
                .map(|r| r.into_iter().map(|x| Rational::from_integer(x) / &d).collect())
                .collect(),
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generators(&self) -> &[Vec<Rational>] {
        &self.generators
    }

    /// Integer generators, when every entry is integral.
    pub fn integer_generators(&self) -> Option<Vec<Vec<BigInt>>> {
        self.generators
            .iter()
            .map(|g| {
                g.iter()
                    .map(|x| x.is_integer().then(|| x.to_integer()))
                    .collect()
            })
            .collect()
    }

    pub fn span(&self) -> SubspaceBasis {
        SubspaceBasis::from_vectors(self.ambient_dim, &self.generators)
            .expect("generator lengths checked at construction")
    }

    /// Integer coordinates of `v` in the basis, when `v` is a lattice point.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<BigInt>> {
        if v.len() != self.ambient_dim {
            return None;
        }
        let mut rest = v.to_vec();
        let mut coords = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            let p = g.iter().position(|x| !x.is_zero()).expect("nonzero HNF row");
            let c = &rest[p] / &g[p];
            if !c.is_integer() {
                return None;
            }
            for (r, x) in rest.iter_mut().zip(g) {
                *r -= &c * x;
            }
            coords.push(c.to_integer());
        }
        rest.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }
}

fn check_lengths<T>(ambient_dim: usize, generators: &[Vec<T>]) -> Result<()> {
    match generators.iter().find(|g| g.len() != ambient_dim) {
        Some(g) => Err(Error::Dimension(format!(
            "generator of length {} in dimension {ambient_dim}",
            g.len()
        ))),
        None => Ok(()),
    }
}

fn common_denominator(vectors: &[Vec<Rational>]) -> BigInt {
    vectors
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Row-style Hermite normal form of the ℤ-module spanned by `rows`: echelon,
/// positive pivots, entries above each pivot reduced into `[0, pivot)`, zero
/// rows dropped.
pub fn hnf_rows(rows: Vec<Vec<BigInt>>, ncols: usize) -> Vec<Vec<BigInt>> {
    let (mut m, rank) = integer_echelon(rows, ncols, ncols);
    m.truncate(rank);
    // Reduce above pivots.
    for r in 0..rank {
        let p = m[r].iter().position(|x| !x.is_zero()).unwrap();
        let pivot = m[r][p].clone();
        for above in 0..r {
            let q = m[above][p].div_floor(&pivot);
            if !q.is_zero() {
                let row = m[r].clone();
                for (a, b) in m[above].iter_mut().zip(&row) {
                    *a -= &q * b;
                }
            }
        }
    }
    m
}

/// Unimodular row reduction to echelon form on the first `pivot_cols` columns.
/// Returns the transformed rows and the number of pivot rows; the remaining
/// rows vanish on the first `pivot_cols` columns.
fn integer_echelon(
    mut m: Vec<Vec<BigInt>>,
    ncols: usize,
    pivot_cols: usize,
) -> (Vec<Vec<BigInt>>, usize) {
    let nrows = m.len();
    let mut r = 0;
    for c in 0..pivot_cols.min(ncols) {
        if r == nrows {
            break;
        }
        // Euclid on column c among rows r.. until one nonzero entry remains.
        loop {
            let nonzero: Vec<usize> = (r..nrows).filter(|&i| !m[i][c].is_zero()).collect();
            if nonzero.len() <= 1 {
                if let Some(&i) = nonzero.first() {
                    m.swap(r, i);
                }
                break;
            }
            let &min_row = nonzero
                .iter()
                .min_by(|&&a, &&b| m[a][c].abs().cmp(&m[b][c].abs()))
                .unwrap();
            m.swap(r, min_row);
            let pivot_row = m[r].clone();
            for i in r + 1..nrows {
                if m[i][c].is_zero() {
                    continue;
                }
                let q = m[i][c].div_floor(&pivot_row[c]);
                for (a, b) in m[i].iter_mut().zip(&pivot_row) {
                    *a -= &q * b;
                }
            }
        }
        if m[r][c].is_zero() {
            continue;
        }
        if m[r][c].is_negative() {
            for a in m[r].iter_mut() {
                *a = -&*a;
            }
        }
        r += 1;
    }
    (m, r)
}

/// HNF basis of the module generated by integer vectors.
pub fn hnf_lattice(ambient_dim: usize, generators: &[Vec<BigInt>]) -> Result<LatticeBasis> {
    LatticeBasis::from_integer(ambient_dim, generators)
}

/// Basis of `{x ∈ span_ℤ(l) : x ∈ span_ℚ(v)}`.
///
/// With `P` a matrix of functionals cutting out `v`, a lattice point `c·L`
/// lies in `v` exactly when `c·(L·P) = 0`; the integer left kernel of `L·P`
/// comes from a unimodular echelon reduction of `[L·P | I]`.
pub fn lattice_intersect_subspace(l: &LatticeBasis, v: &SubspaceBasis) -> Result<LatticeBasis> {
    let n = l.ambient_dim();
    if v.ambient_dim() != n {
        return Err(Error::Dimension(format!(
            "lattice in dimension {n}, subspace in dimension {}",
            v.ambient_dim()
        )));
    }
    let k = l.rank();
    if k == 0 {
        return Ok(LatticeBasis::empty(n));
    }
    let ann = v.annihilator();
    if ann.is_empty() {
        return Ok(l.clone());
    }
    let lm = MatrixQ::from_rows(l.generators().to_vec())?;
    let f = MatrixQ::from_columns(n, &ann)?;
    let a = lm.mul(&f)?;
    // Clear denominators; the kernel is unchanged.
    let denom = common_denominator(&a.to_rows());
    let m = ann.len();
    let rows: Vec<Vec<BigInt>> = (0..k)
        .map(|i| {
            let mut row: Vec<BigInt> = a
                .row(i)
                .iter()
                .map(|x| (x * &denom).to_integer())
                .collect();
            row.extend((0..k).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
            row
        })
        .collect();
    let (reduced, rank) = integer_echelon(rows, m + k, m);
    let kernel: Vec<Vec<Rational>> = reduced[rank..]
        .iter()
        .map(|row| {
            let c: Vec<Rational> = row[m..]
                .iter()
                .map(|x| Rational::from_integer(x.clone()))
                .collect();
            combine(&c, l.generators(), n)
        })
        .collect();
    LatticeBasis::from_rational(n, &kernel)
}
