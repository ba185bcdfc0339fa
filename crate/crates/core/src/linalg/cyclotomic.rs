use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::IntPolynomial;
use crate::{Error, Result};

pub fn euler_phi(mut m: u64) -> u64 {
    let mut result = m;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// `Φ_m`, from `t^m − 1 = ∏_{d | m} Φ_d`.
pub fn cyclotomic_polynomial(m: u64) -> IntPolynomial {
    let mut cache = BTreeMap::new();
    cyclotomic_cached(m, &mut cache)
}

fn cyclotomic_cached(m: u64, cache: &mut BTreeMap<u64, IntPolynomial>) -> IntPolynomial {
    assert!(m >= 1, "cyclotomic index must be positive");
    if let Some(p) = cache.get(&m) {
        return p.clone();
    }
    let mut num = vec![BigInt::zero(); m as usize + 1];
    num[0] = BigInt::from(-1);
    num[m as usize] = BigInt::from(1);
    let mut p = IntPolynomial::new(num);
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        let phi_d = cyclotomic_cached(d, cache);
        p = p.div_exact(&phi_d).expect("Φ_d divides t^m - 1");
    }
    cache.insert(m, p.clone());
    p
}

/// Splits off the power of `t`: `p = t^k · rest` with `rest(0) ≠ 0`.
pub fn strip_t_power(p: &IntPolynomial) -> (usize, IntPolynomial) {
    let k = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    if p.is_zero() {
        return (0, IntPolynomial::zero());
    }
    (k, IntPolynomial::new(p.coeffs()[k..].to_vec()))
}

/// Cyclotomic factors of a polynomial, with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicSplit {
    /// `(m, multiplicity)` for each `Φ_m` dividing the input, ascending in `m`.
    pub factors: Vec<(u64, usize)>,
    pub cyclo: IntPolynomial,
    pub rest: IntPolynomial,
}

impl CyclotomicSplit {
    pub fn indices(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(m, _)| m)
    }
}

/// Trial division by every `Φ_m` with `φ(m) ≤ deg p`; such `m` satisfy
/// `m ≤ 2·deg² + 1`, which bounds the enumeration.
pub fn cyclotomic_split(p: &IntPolynomial) -> Result<CyclotomicSplit> {
    let Some(deg) = p.degree() else {
        return Err(Error::Domain("cyclotomic part of the zero polynomial".into()));
    };
    let mut rest = p.clone();
    let mut cyclo = IntPolynomial::one();
    let mut factors = Vec::new();
    let mut cache = BTreeMap::new();
    let bound = 2 * (deg as u64).pow(2) + 1;
    for m in 1..=bound {
        let phi = euler_phi(m);
        if phi as usize > rest.degree().unwrap_or(0) {
            continue;
        }
        let phi_m = cyclotomic_cached(m, &mut cache);
        let mut mult = 0;
        while let Some(q) = rest.div_exact(&phi_m) {
            rest = q;
            cyclo = cyclo.mul(&phi_m);
            mult += 1;
        }
        if mult > 0 {
            factors.push((m, mult));
        }
    }
    Ok(CyclotomicSplit {
        factors,
        cyclo,
        rest,
    })
}

/// `(cyclo, rest)` with `p = cyclo · rest` and `cyclo` the product of all
/// cyclotomic factors of `p`.
pub fn cyclotomic_part(p: &IntPolynomial) -> Result<(IntPolynomial, IntPolynomial)> {
    let s = cyclotomic_split(p)?;
    Ok((s.cyclo, s.rest))
}
