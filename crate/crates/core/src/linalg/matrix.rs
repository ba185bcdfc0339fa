use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{Num, One, Signed, Zero};

use super::poly::{IntPolynomial, RatPolynomial};
use super::rational::{is_integer, Rational};
use super::subspace::SubspaceBasis;
use crate::{Error, Result};

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type MatrixQ = Matrix<Rational>;
pub type MatrixZ = Matrix<BigInt>;

impl<T: Clone + Num> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != ncols) {
            return Err(Error::Dimension(format!(
                "row {i} has {} entries, expected {ncols}",
                r.len()
            )));
        }
        Ok(Self {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(nrows: usize, columns: &[Vec<T>]) -> Result<Self> {
        let mut m = Self::zeros(nrows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != nrows {
                return Err(Error::Dimension(format!(
                    "column {j} has {} entries, expected {nrows}",
                    c.len()
                )));
            }
            for (i, v) in c.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        Ok(m)
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension("matrix sum of different shapes".into()));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn scale(&self, c: &T) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        self.require_square()?;
        let mut result = Self::identity(self.rows);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = &self[(i, j)];
                    if i == j {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    /// Block-diagonal sum `diag(self, other)`.
    pub fn block_diag(&self, other: &Self) -> Self {
        let mut m = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        m
    }

    /// Sub-block with rows `r0..r1` and columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        let mut m = Self::zeros(r1 - r0, c1 - c0);
        for i in r0..r1 {
            for j in c0..c1 {
                m[(i - r0, j - c0)] = self[(i, j)].clone();
            }
        }
        m
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::Dimension(format!(
                "expected a square matrix, got {}x{}",
                self.rows, self.cols
            )))
        }
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl MatrixZ {
    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    pub fn to_rational(&self) -> MatrixQ {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|v| Rational::from_integer(v.clone()))
                .collect(),
        }
    }

    pub fn det(&self) -> Result<BigInt> {
        Ok(self.to_rational().det()?.to_integer())
    }

    pub fn char_poly(&self) -> Result<IntPolynomial> {
        let p = self.to_rational().char_poly()?;
        p.to_int_exact()
            .ok_or_else(|| Error::InvariantViolation("integer matrix with non-integer char poly".into()))
    }

    /// Largest absolute entry, as used for overflow-free float bounds.
    pub fn max_abs(&self) -> BigInt {
        self.data.iter().map(|v| v.abs()).max().unwrap_or_default()
    }
}

impl MatrixQ {
    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Ok(MatrixZ::from_i64(rows)?.to_rational())
    }

    /// Exact integer matrix when every entry is an integer.
    pub fn to_integer(&self) -> Option<MatrixZ> {
        if !self.data.iter().all(is_integer) {
            return None;
        }
        Some(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v.to_integer()).collect(),
        })
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (MatrixQ, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                m[(r, j)] = &m[(r, j)] * &inv;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in c..m.cols {
                        let delta = &f * &m[(r, j)];
                        m[(i, j)] -= delta;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{x : self·x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![Rational::zero(); self.cols];
                x[f] = Rational::one();
                for (row, &p) in pivots.iter().enumerate() {
                    x[p] = -r[(row, f)].clone();
                }
                x
            })
            .collect()
    }

    pub fn column_space(&self) -> SubspaceBasis {
        SubspaceBasis::from_vectors(
            self.rows,
            &(0..self.cols).map(|j| self.column(j)).collect::<Vec<_>>(),
        )
        .expect("columns have matching length")
    }

    pub fn det(&self) -> Result<Rational> {
        self.require_square()?;
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det *= &pivot;
            for i in c + 1..n {
                if !m[(i, c)].is_zero() {
                    let f = &m[(i, c)] / &pivot;
                    for j in c..n {
                        let delta = &f * &m[(c, j)];
                        m[(i, j)] -= delta;
                    }
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Option<MatrixQ>> {
        self.require_square()?;
        let n = self.rows;
        let mut aug = MatrixQ::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rational::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.iter().filter(|&&p| p < n).count() < n {
            return Ok(None);
        }
        Ok(Some(r.block(0, n, n, 2 * n)))
    }

    /// Some solution of `self·x = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
        if b.len() != self.rows {
            return Err(Error::Dimension(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let mut aug = MatrixQ::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r[(row, self.cols)].clone();
        }
        Ok(Some(x))
    }

    /// `det(tI − self)` by the Faddeev–LeVerrier recursion.
    pub fn char_poly(&self) -> Result<RatPolynomial> {
        self.require_square()?;
        let n = self.rows;
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        let mut aux = MatrixQ::zeros(n, n);
        for k in 1..=n {
            // aux_k = A·aux_{k-1} + c_{n-k+1}·I
            aux = self.mul(&aux)?;
            for i in 0..n {
                aux[(i, i)] += &coeffs[n - k + 1];
            }
            let t = self.mul(&aux)?.trace();
            coeffs[n - k] = -t / Rational::from_integer(BigInt::from(k));
        }
        Ok(RatPolynomial::new(coeffs))
    }

    /// Monic minimal polynomial, found as the first linear dependency among
    /// `I, A, A², …`.
    pub fn min_poly(&self) -> Result<RatPolynomial> {
        self.require_square()?;
        let n = self.rows;
        let mut powers: Vec<Vec<Rational>> = vec![MatrixQ::identity(n).data];
        let mut current = MatrixQ::identity(n);
        for k in 1..=n {
            current = current.mul(self)?;
            powers.push(current.data.clone());
            let stacked = MatrixQ::from_columns(n * n, &powers)?;
            let kernel = stacked.nullspace();
            if let Some(v) = kernel.first() {
                let lead = v[k].clone();
                let coeffs = v.iter().map(|c| c / &lead).collect();
                return Ok(RatPolynomial::new(coeffs));
            }
        }
        // n = 0: the empty matrix is annihilated by 1.
        Ok(RatPolynomial::one())
    }

    /// `p(self)` by Horner's rule.
    pub fn eval_poly(&self, p: &RatPolynomial) -> Result<MatrixQ> {
        self.require_square()?;
        let n = self.rows;
        let mut acc = MatrixQ::zeros(n, n);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self)?;
            for i in 0..n {
                acc[(i, i)] += c;
            }
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::{int, rat};

    fn q(rows: &[&[i64]]) -> MatrixQ {
        MatrixQ::from_i64(rows).unwrap()
    }

    fn poly(c: &[i64]) -> RatPolynomial {
        RatPolynomial::new(c.iter().map(|&v| int(v)).collect())
    }

    #[test]
    fn char_poly_examples() {
        assert_eq!(q(&[&[2, 0], &[0, 2]]).char_poly().unwrap(), poly(&[4, -4, 1]));
        // det(tI - [[2,1],[1,1]]) = (t-2)(t-1) - 1
        assert_eq!(q(&[&[2, 1], &[1, 1]]).char_poly().unwrap(), poly(&[1, -3, 1]));
        assert_eq!(q(&[&[0, -1], &[1, 0]]).char_poly().unwrap(), poly(&[1, 0, 1]));
        assert_eq!(MatrixQ::zeros(0, 0).char_poly().unwrap(), poly(&[1]));
    }

    #[test]
    fn char_poly_rejects_non_square() {
        let m = MatrixQ::zeros(2, 3);
        assert!(matches!(m.char_poly(), Err(Error::Dimension(_))));
        assert!(matches!(m.min_poly(), Err(Error::Dimension(_))));
    }

    #[test]
    fn min_poly_examples() {
        assert_eq!(q(&[&[1, 1], &[0, 1]]).min_poly().unwrap(), poly(&[1, -2, 1]));
        assert_eq!(q(&[&[2, 0], &[0, 2]]).min_poly().unwrap(), poly(&[-2, 1]));
        // ad(H) on e(2): cube equals minus itself.
        let ad_h = q(&[&[0, 0, 0], &[0, 0, -1], &[0, 1, 0]]);
        let cube = ad_h.pow(3).unwrap();
        assert_eq!(cube, ad_h.scale(&int(-1)));
        assert_eq!(ad_h.min_poly().unwrap(), poly(&[0, 1, 0, 1]));
    }

    #[test]
    fn det_inverse_and_solve() {
        let m = q(&[&[2, 1], &[1, 1]]);
        assert_eq!(m.det().unwrap(), int(1));
        let inv = m.inverse().unwrap().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
        assert!(q(&[&[1, 2], &[2, 4]]).inverse().unwrap().is_none());
        let x = m.solve(&[int(3), int(2)]).unwrap().unwrap();
        assert_eq!(x, vec![int(1), int(1)]);
        assert!(q(&[&[1, 1], &[1, 1]]).solve(&[int(1), int(2)]).unwrap().is_none());
        let half = MatrixQ::from_rows(vec![vec![rat(1, 2)]]).unwrap();
        assert_eq!(half.det().unwrap(), rat(1, 2));
    }

    #[test]
    fn nullspace_is_annihilated() {
        let m = q(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!(m.mul_vec(&v).unwrap().iter().all(Zero::is_zero));
        }
    }
}
