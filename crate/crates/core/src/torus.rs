//! Torus endomorphisms `ℝⁿ/ℤⁿ → ℝⁿ/ℤⁿ` induced by integer matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::linalg::{cyclotomic_split, log_mahler, strip_t_power, EntropyValue, LatticeBasis, MatrixQ, MatrixZ};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusEndo {
    matrix: MatrixZ,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Order {
    Finite(u64),
    Infinite,
}

impl Order {
    pub fn is_finite(&self) -> bool {
        matches!(self, Order::Finite(_))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Every power `φⁿ` has a Li-Yorke pair.
    LiYorkeAllPowers,
    /// Some power `φⁿ` has no Li-Yorke pair.
    SomePowerLiYorkeFree,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::LiYorkeAllPowers => "li_yorke_all_powers",
            Verdict::SomePowerLiYorkeFree => "some_power_li_yorke_free",
        }
    }
}

impl TorusEndo {
    pub fn new(matrix: MatrixZ) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::Dimension(format!(
                "torus endomorphism needs a square matrix, got {}x{}",
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        Ok(Self { matrix })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::new(MatrixZ::from_i64(rows)?)
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &MatrixZ {
        &self.matrix
    }

    pub fn det(&self) -> BigInt {
        self.matrix.det().expect("square")
    }

    pub fn is_surjective(&self) -> bool {
        !self.det().is_zero()
    }

    pub fn is_automorphism(&self) -> bool {
        self.det().magnitude().is_one()
    }

    pub fn pow(&self, k: u32) -> TorusEndo {
        TorusEndo {
            matrix: self.matrix.pow(k).expect("square"),
        }
    }

    pub fn block_diag(&self, other: &TorusEndo) -> TorusEndo {
        TorusEndo {
            matrix: self.matrix.block_diag(&other.matrix),
        }
    }

    /// `Σ_{|λ|>1} log|λ|` over the eigenvalues of the matrix.
    pub fn entropy(&self, tol: f64) -> Result<EntropyValue> {
        let cp = self.matrix.char_poly()?;
        log_mahler(&cp, tol)
    }

    /// Least `k ≥ 1` with `Aᵏ = I`. Finite exactly when the minimal
    /// polynomial is a squarefree product of cyclotomic polynomials, and then
    /// `k` is the lcm of their indices.
    pub fn finite_order(&self) -> Order {
        let n = self.dim();
        if n == 0 {
            return Order::Finite(1);
        }
        let min = self.matrix.to_rational().min_poly().expect("square");
        if !min.is_squarefree() {
            return Order::Infinite;
        }
        let Some(min) = min.to_int_exact() else {
            return Order::Infinite;
        };
        let split = cyclotomic_split(&min).expect("nonzero minimal polynomial");
        if split.rest.degree() != Some(0) {
            return Order::Infinite;
        }
        let k = split.indices().fold(1u64, |acc, m| acc.lcm(&m));
        let identity = MatrixZ::identity(n);
        assert!(
            self.matrix.pow(k as u32).expect("square") == identity,
            "cyclotomic order {k} failed the matrix power check"
        );
        Order::Finite(k)
    }

    /// No eigenvalue is a root of unity.
    pub fn is_ergodic(&self) -> Result<bool> {
        self.require_surjective("ergodicity")?;
        let cp = self.matrix.char_poly()?;
        let split = cyclotomic_split(&cp)?;
        Ok(split.factors.is_empty())
    }

    /// Positive entropy is decided exactly: after removing `t`-powers and
    /// cyclotomic factors from the (monic) characteristic polynomial, any
    /// non-constant remainder has a root off the unit circle by Kronecker's
    /// theorem, and since the product of its roots is a nonzero integer, one
    /// lies strictly outside.
    pub fn li_yorke_verdict(&self) -> Result<Verdict> {
        self.require_surjective("the Li-Yorke verdict")?;
        Ok(if self.has_positive_entropy()? {
            Verdict::LiYorkeAllPowers
        } else {
            Verdict::SomePowerLiYorkeFree
        })
    }

    pub fn has_positive_entropy(&self) -> Result<bool> {
        let cp = self.matrix.char_poly()?;
        let (_, no_t) = strip_t_power(&cp);
        let split = cyclotomic_split(&no_t)?;
        Ok(split.rest.degree().unwrap_or(0) > 0)
    }

    /// Matrix of the action on an invariant sublattice, in the sublattice's
    /// basis: column `j` holds the coordinates of `A·b_j`.
    pub fn restrict_to_sublattice(&self, sub: &LatticeBasis) -> Result<TorusEndo> {
        Self::from_linear_action(&self.matrix.to_rational(), sub)
    }

    /// Torus endomorphism induced on `span(sub)/sub` by a rational linear
    /// map that carries `sub` into itself.
    pub fn from_linear_action(map: &MatrixQ, sub: &LatticeBasis) -> Result<TorusEndo> {
        let n = map.nrows();
        if !map.is_square() || sub.ambient_dim() != n {
            return Err(Error::Dimension(format!(
                "sublattice of a rank-{} space for a {}x{} map",
                sub.ambient_dim(),
                map.nrows(),
                map.ncols()
            )));
        }
        let r = sub.rank();
        let mut data = vec![BigInt::zero(); r * r];
        for (j, g) in sub.generators().iter().enumerate() {
            let image = map.mul_vec(g)?;
            let coords = sub.coordinates(&image).ok_or_else(|| {
                Error::SublatticeNotInvariant(format!("image of generator {j} leaves the sublattice"))
            })?;
            for (i, c) in coords.into_iter().enumerate() {
                data[i * r + j] = c;
            }
        }
        TorusEndo::new(MatrixZ::new(r, r, data)?)
    }

    fn require_surjective(&self, what: &str) -> Result<()> {
        if self.is_surjective() {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "{what} needs a surjective torus endomorphism, but det = 0"
            )))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    const TOL: f64 = 1e-9;

    fn t(rows: &[&[i64]]) -> TorusEndo {
        TorusEndo::from_i64(rows).unwrap()
    }

    #[test]
    fn entropy_examples() {
        let h = t(&[&[2, 0], &[0, 2]]).entropy(TOL).unwrap();
        assert!((h.value - 2.0 * 2f64.ln()).abs() < TOL);
        assert_eq!(h.expanding_count, 2);
        let h = t(&[&[1, 1], &[0, 1]]).entropy(TOL).unwrap();
        assert_eq!(h.value, 0.0);
        assert!(h.exact_zero);
        let h = t(&[&[2, 1], &[1, 1]]).entropy(TOL).unwrap();
        assert!((h.value - ((3.0 + 5f64.sqrt()) / 2.0).ln()).abs() < TOL);
        assert!((h.value - 0.962424).abs() < 1e-6);
    }

    #[test]
    fn singular_matrices_still_have_entropy() {
        let h = t(&[&[3, 0], &[0, 0]]).entropy(TOL).unwrap();
        assert!((h.value - 3f64.ln()).abs() < TOL);
        assert!(t(&[&[3, 0], &[0, 0]]).is_ergodic().is_err());
        assert!(t(&[&[0]]).li_yorke_verdict().is_err());
    }

    #[test]
    fn finite_order_examples() {
        assert_eq!(t(&[&[0, -1], &[1, 0]]).finite_order(), Order::Finite(4));
        assert_eq!(t(&[&[-1, 0], &[0, -1]]).finite_order(), Order::Finite(2));
        assert_eq!(t(&[&[1, 1], &[0, 1]]).finite_order(), Order::Infinite);
        assert_eq!(t(&[&[1, 0], &[0, 1]]).finite_order(), Order::Finite(1));
        // order 6 from Φ₃ ⊕ Φ₂
        let m = t(&[&[0, -1, 0], &[1, -1, 0], &[0, 0, -1]]);
        assert_eq!(m.finite_order(), Order::Finite(6));
        assert_eq!(t(&[&[2]]).finite_order(), Order::Infinite);
    }

    #[test]
    fn ergodicity_examples() {
        assert!(t(&[&[2, 1], &[1, 1]]).is_ergodic().unwrap());
        assert!(!t(&[&[1, 1], &[0, 1]]).is_ergodic().unwrap());
        assert!(t(&[&[2]]).is_ergodic().unwrap());
    }

    #[test]
    fn verdict_examples() {
        assert_eq!(t(&[&[2]]).li_yorke_verdict().unwrap(), Verdict::LiYorkeAllPowers);
        assert_eq!(t(&[&[0, -1], &[1, 0]]).li_yorke_verdict().unwrap(), Verdict::SomePowerLiYorkeFree);
        assert_eq!(t(&[&[1, 1], &[0, 1]]).li_yorke_verdict().unwrap(), Verdict::SomePowerLiYorkeFree);
    }

    #[test]
    fn restriction_examples() {
        let sub = LatticeBasis::from_rational(2, &[vec![int(1), int(0)]]).unwrap();
        assert_eq!(t(&[&[2, 0], &[0, 3]]).restrict_to_sublattice(&sub).unwrap(), t(&[&[2]]));
        let cat = t(&[&[2, 1], &[1, 1]]);
        assert_eq!(cat.restrict_to_sublattice(&LatticeBasis::standard(2)).unwrap(), cat);
        let diag = LatticeBasis::from_rational(2, &[vec![int(1), int(1)]]).unwrap();
        assert_eq!(t(&[&[2, 0], &[0, 2]]).restrict_to_sublattice(&diag).unwrap(), t(&[&[2]]));
        assert!(matches!(
            cat.restrict_to_sublattice(&sub),
            Err(Error::SublatticeNotInvariant(_))
        ));
    }

    #[test]
    fn empty_torus() {
        let e = TorusEndo::new(MatrixZ::zeros(0, 0)).unwrap();
        assert_eq!(e.entropy(TOL).unwrap().value, 0.0);
        assert_eq!(e.finite_order(), Order::Finite(1));
    }
}
