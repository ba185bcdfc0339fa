use num_complex::Complex64;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::cyclotomic::{cyclotomic_split, strip_t_power};
use super::poly::IntPolynomial;
use crate::{Error, Result};

/// Entropy as `Σ_{|λ|>1} log|λ|` over the roots of `certificate`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EntropyValue {
    pub value: f64,
    #[serde(with = "int_poly_serde")]
    pub certificate: IntPolynomial,
    /// Roots with certified modulus `> 1`, counted with multiplicity.
    pub expanding_count: usize,
    /// Certified bound on `|value − true value|`.
    pub error_bound: f64,
    /// Decided symbolically: nothing remains after removing `t`-powers and
    /// cyclotomic factors.
    pub exact_zero: bool,
    /// Decided symbolically: the remainder is monic, non-constant and has a
    /// nonzero constant term, so by Kronecker's theorem some root lies
    /// strictly outside the unit circle.
    pub certified_positive: bool,
}

impl EntropyValue {
    pub fn zero(certificate: IntPolynomial) -> Self {
        Self {
            value: 0.0,
            certificate,
            expanding_count: 0,
            error_bound: 0.0,
            exact_zero: true,
            certified_positive: false,
        }
    }

    /// Positivity decided without comparing floats whenever the certificate
    /// allows it; otherwise from the certified enclosure.
    pub fn is_positive(&self) -> bool {
        if self.exact_zero {
            return false;
        }
        self.certified_positive || self.value > self.error_bound
    }
}

pub(crate) mod int_poly_serde {
    use super::IntPolynomial;
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(p: &IntPolynomial, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(p.coeffs().iter().map(ToString::to_string))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<IntPolynomial, D::Error> {
        let raw: Vec<String> = Vec::deserialize(d)?;
        let coeffs = raw
            .iter()
            .map(|c| c.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntPolynomial::new(coeffs))
    }
}

/// Logarithmic Mahler measure restricted to the roots, `Σ_{|λ|>1} log|λ|`,
/// with absolute error at most `tol`.
///
/// Powers of `t` and cyclotomic factors are removed exactly. The remainder is
/// split into squarefree parts, whose roots are approximated by Aberth
/// iteration and enclosed in discs from the Weierstrass inclusion theorem.
pub fn log_mahler(p: &IntPolynomial, tol: f64) -> Result<EntropyValue> {
    if p.is_zero() {
        return Err(Error::Domain("log-Mahler measure of the zero polynomial".into()));
    }
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    let (_, no_t) = strip_t_power(p);
    let split = cyclotomic_split(&no_t)?;
    let rest = split.rest;
    if rest.degree() == Some(0) {
        return Ok(EntropyValue::zero(p.clone()));
    }
    let certified_positive = rest.leading().is_some_and(|l| l.abs().is_one());

    let mut value = 0.0;
    let mut error = 0.0;
    let mut expanding = 0;
    for (factor, mult) in rest.to_rational().squarefree_decomposition() {
        let f = factor.to_primitive_int();
        for cluster in certified_clusters(&f)? {
            let c = cluster.contribution();
            value += mult as f64 * c.estimate;
            error += mult as f64 * c.error;
            if cluster.modulus_lo > 1.0 {
                expanding += mult * cluster.count;
            }
        }
    }
    if error > tol {
        return Err(Error::Precision {
            achieved: error,
            requested: tol,
        });
    }
    Ok(EntropyValue {
        value,
        certificate: p.clone(),
        expanding_count: expanding,
        error_bound: error,
        exact_zero: false,
        certified_positive,
    })
}

/// A connected group of inclusion discs holding exactly `count` roots.
#[derive(Clone, Debug)]
struct RootCluster {
    count: usize,
    moduli: Vec<f64>,
    modulus_lo: f64,
    modulus_hi: f64,
}

struct Contribution {
    estimate: f64,
    error: f64,
}

impl RootCluster {
    fn contribution(&self) -> Contribution {
        let k = self.count as f64;
        if self.modulus_hi <= 1.0 {
            return Contribution {
                estimate: 0.0,
                error: 0.0,
            };
        }
        let estimate: f64 = self.moduli.iter().map(|m| m.max(1.0).ln()).sum();
        let lo = k * self.modulus_lo.max(1.0).ln();
        let hi = k * self.modulus_hi.ln();
        Contribution {
            estimate,
            error: (hi - estimate).max(estimate - lo).max(0.0),
        }
    }
}

const UNIT_ROUNDOFF: f64 = f64::EPSILON / 2.0;

/// Roots of a squarefree integer polynomial, grouped into certified clusters.
fn certified_clusters(f: &IntPolynomial) -> Result<Vec<RootCluster>> {
    let n = f.degree().unwrap_or(0);
    if n == 0 {
        return Ok(vec![]);
    }
    let coeffs = f.to_f64();
    if coeffs.iter().any(|c| !c.is_finite()) {
        return Err(Error::Precision {
            achieved: f64::INFINITY,
            requested: 0.0,
        });
    }
    if n == 1 {
        // Rational root -a0/a1; its modulus rounds with relative error ≤ u.
        let m = (coeffs[0] / coeffs[1]).abs();
        let r = 4.0 * UNIT_ROUNDOFF * m;
        return Ok(vec![RootCluster {
            count: 1,
            moduli: vec![m],
            modulus_lo: m - r,
            modulus_hi: m + r,
        }]);
    }
    let roots = aberth(&coeffs);
    let radii = inclusion_radii(&coeffs, &roots);
    Ok(cluster(&roots, &radii))
}

fn horner(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// Simultaneous root approximation, started on a circle of Fujiwara-bound
/// radius with an angular offset that breaks conjugate symmetry.
fn aberth(coeffs: &[f64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let bound = (0..n)
        .map(|k| (coeffs[k] / lead).abs().powf(1.0 / (n - k) as f64))
        .fold(0.0, f64::max)
        * 2.0;
    let radius = if bound > 0.0 { bound } else { 1.0 };
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = std::f64::consts::TAU * k as f64 / n as f64 + 0.4;
            Complex64::from_polar(radius, theta)
        })
        .collect();
    for _ in 0..2000 {
        let mut max_step: f64 = 0.0;
        for i in 0..n {
            let (p, dp) = horner(coeffs, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let step = ratio / (Complex64::one() - ratio * repulsion);
            if step.is_finite() {
                z[i] -= step;
                max_step = max_step.max(step.norm() / z[i].norm().max(1e-300));
            }
        }
        if max_step < 1e-15 {
            break;
        }
    }
    // Newton polish on each root.
    for zi in z.iter_mut() {
        for _ in 0..3 {
            let (p, dp) = horner(coeffs, *zi);
            let step = p / dp;
            if step.is_finite() {
                *zi -= step;
            }
        }
    }
    z
}

/// Radii `n·|p(zᵢ)| / (|aₙ|·∏|zᵢ − zⱼ|)` with the Horner rounding bound added
/// to `|p(zᵢ)|`.
fn inclusion_radii(coeffs: &[f64], z: &[Complex64]) -> Vec<f64> {
    let n = z.len();
    let lead = coeffs[n].abs();
    z.iter()
        .enumerate()
        .map(|(i, &zi)| {
            let (p, _) = horner(coeffs, zi);
            let abs_sum: f64 = coeffs
                .iter()
                .rev()
                .fold(0.0, |acc, c| acc * zi.norm() + c.abs());
            let rounding = (4 * n + 4) as f64 * UNIT_ROUNDOFF * abs_sum;
            let denom: f64 = z
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &zj)| (zi - zj).norm())
                .product::<f64>()
                * lead;
            let r = n as f64 * (p.norm() + rounding) / denom;
            if r.is_finite() {
                r * (1.0 + 1e-10)
            } else {
                f64::INFINITY
            }
        })
        .collect()
}

fn cluster(z: &[Complex64], r: &[f64]) -> Vec<RootCluster> {
    let n = z.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        let mut i = i;
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    for i in 0..n {
        for j in i + 1..n {
            if (z[i] - z[j]).norm() <= r[i] + r[j] {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..n {
        let root = find(&mut parent, i);
        groups.entry(root).or_default().push(i);
    }
    groups
        .into_values()
        .map(|members| {
            let lo = members
                .iter()
                .map(|&i| z[i].norm() - r[i])
                .fold(f64::INFINITY, f64::min)
                .max(0.0);
            let hi = members
                .iter()
                .map(|&i| z[i].norm() + r[i])
                .fold(0.0, f64::max);
            RootCluster {
                count: members.len(),
                moduli: members.iter().map(|&i| z[i].norm()).collect(),
                modulus_lo: lo,
                modulus_hi: hi,
            }
        })
        .collect()
}
