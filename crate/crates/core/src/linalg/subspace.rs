use num_traits::{One, Zero};

use super::matrix::MatrixQ;
use super::rational::Rational;
use crate::{Error, Result};

/// Rational subspace stored as the nonzero rows of a reduced echelon form,
/// so equal subspaces have identical entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubspaceBasis {
    ambient_dim: usize,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim).map(|i| unit(ambient_dim, i)).collect();
        Self {
            ambient_dim,
            basis,
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn from_vectors(ambient_dim: usize, vectors: &[Vec<Rational>]) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(Error::Dimension(format!(
                "vector of length {} in a {ambient_dim}-dimensional space",
                v.len()
            )));
        }
        if vectors.is_empty() {
            return Ok(Self::zero(ambient_dim));
        }
        let m = MatrixQ::from_rows(vectors.to_vec())?;
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Ok(Self {
            ambient_dim,
            basis,
            pivots,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the echelon basis, when `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if v.len() != self.ambient_dim {
            return None;
        }
        let coords: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rest = v.to_vec();
        for (c, b) in coords.iter().zip(&self.basis) {
            for (r, x) in rest.iter_mut().zip(b) {
                *r -= c * x;
            }
        }
        rest.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &SubspaceBasis) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }

    pub fn sum(&self, other: &SubspaceBasis) -> Result<SubspaceBasis> {
        self.check_same_ambient(other)?;
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Self::from_vectors(self.ambient_dim, &all)
    }

    /// Linear functionals (as column vectors) whose common kernel is the subspace.
    pub fn annihilator(&self) -> Vec<Vec<Rational>> {
        if self.basis.is_empty() {
            return (0..self.ambient_dim).map(|i| unit(self.ambient_dim, i)).collect();
        }
        MatrixQ::from_rows(self.basis.clone())
            .expect("rectangular basis")
            .nullspace()
    }

    pub fn intersect(&self, other: &SubspaceBasis) -> Result<SubspaceBasis> {
        self.check_same_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ambient_dim));
        }
        // x = c·B with (c·B)·f = 0 for every functional f annihilating `other`.
        let ann = other.annihilator();
        if ann.is_empty() {
            return Ok(self.clone());
        }
        let b = MatrixQ::from_rows(self.basis.clone())?;
        let f = MatrixQ::from_columns(self.ambient_dim, &ann)?;
        let cond = b.mul(&f)?.transpose();
        let coeffs = cond.nullspace();
        let vectors: Vec<Vec<Rational>> = coeffs
            .iter()
            .map(|c| combine(c, &self.basis, self.ambient_dim))
            .collect();
        Self::from_vectors(self.ambient_dim, &vectors)
    }

    /// Image under a linear map acting on column vectors.
    pub fn image(&self, map: &MatrixQ) -> Result<SubspaceBasis> {
        let imgs: Vec<Vec<Rational>> = self
            .basis
            .iter()
            .map(|b| map.mul_vec(b))
            .collect::<Result<_>>()?;
        Self::from_vectors(map.nrows(), &imgs)
    }

    /// Standard basis vectors at the non-pivot columns: the lexicographically
    /// first echelon complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient_dim)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    fn check_same_ambient(&self, other: &SubspaceBasis) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::Dimension(format!(
                "subspaces of dimension-{} and dimension-{} spaces",
                self.ambient_dim, other.ambient_dim
            )));
        }
        Ok(())
    }
}

pub(crate) fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

pub(crate) fn combine(coeffs: &[Rational], vectors: &[Vec<Rational>], n: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n];
    for (c, v) in coeffs.iter().zip(vectors) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            *o += c * x;
        }
    }
    out
}
