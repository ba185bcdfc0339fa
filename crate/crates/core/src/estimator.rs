//! Numerical entropy estimates and Li-Yorke pair search on tori.
//!
//! Everything here is a falsification oracle for the exact pipeline: a count
//! that disagrees with the exact entropy refutes it, agreement proves
//! nothing. Points live on the grid `(1/N)ℤⁿ/ℤⁿ` and orbits are computed
//! exactly in `ℤ/N`; floats appear only when a distance is compared to `ε`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::linalg::MatrixZ;
use crate::torus::TorusEndo;
use crate::{Error, Result};

/// Largest grid the counting routines will allocate, in points.
pub const MAX_GRID_POINTS: u64 = 1 << 24;

/// `x ↦ Ax mod 1` on `ℝⁿ/ℤⁿ` with the max-coordinate circle distance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridDynamics {
    dim: usize,
    matrix: Vec<i64>,
}

impl GridDynamics {
    pub fn new(matrix: &MatrixZ) -> Result<Self> {
        let dim = matrix.nrows();
        if !matrix.is_square() || dim == 0 || dim > 3 {
            return Err(Error::Parameter(format!(
                "grid dynamics needs a square matrix of size 1 to 3, got {}x{}",
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        let entries = matrix
            .entries()
            .iter()
            .map(|x| i64::try_from(x).ok().filter(|v| v.abs() < 1 << 24))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Parameter("matrix entries too large for grid dynamics".into()))?;
        Ok(Self { dim, matrix: entries })
    }

    pub fn from_torus(e: &TorusEndo) -> Result<Self> {
        Self::new(e.matrix())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> MatrixZ {
        MatrixZ::from_i64(
            &self
                .matrix
                .chunks(self.dim)
                .collect::<Vec<_>>(),
        )
        .expect("square")
    }

    /// One step on residues mod `modulus`.
    fn step(&self, x: &[i64; 3], modulus: i64) -> [i64; 3] {
        let mut out = [0i64; 3];
        for (i, o) in out.iter_mut().enumerate().take(self.dim) {
            let mut acc: i128 = 0;
            for j in 0..self.dim {
                acc += self.matrix[i * self.dim + j] as i128 * x[j] as i128;
            }
            *o = acc.rem_euclid(modulus as i128) as i64;
        }
        out
    }

    /// Max-coordinate circle distance of a residue vector from 0, in units
    /// of `1/modulus`.
    fn norm(&self, x: &[i64; 3], modulus: i64) -> i64 {
        x[..self.dim]
            .iter()
            .map(|&r| r.min(modulus - r))
            .max()
            .unwrap_or(0)
    }

    fn spectral_radius_bound(&self) -> f64 {
        // Max absolute row sum bounds every eigenvalue.
        self.matrix
            .chunks(self.dim)
            .map(|row| row.iter().map(|x| x.unsigned_abs() as f64).sum::<f64>())
            .fold(1.0, f64::max)
    }
}

/// Grid denominator used when none is given: the finest grid under
/// `MAX_GRID_POINTS`.
pub fn auto_resolution(dim: usize) -> u64 {
    match dim {
        1 => 1 << 24,
        2 => 1 << 12,
        _ => 1 << 8,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpanningEstimate {
    pub n_values: Vec<usize>,
    /// Greedy `(n, ε)`-spanning set sizes (upper counts).
    pub counts: Vec<u64>,
    /// Greedy `(n, 2ε)`-separated set sizes (lower counts).
    pub lower_counts: Vec<u64>,
    pub epsilon: f64,
    pub resolution: u64,
    /// Least-squares slope of `ln counts` against `n` over the last half.
    pub slope: f64,
    pub slope_stderr: f64,
    pub lower_slope: f64,
}

impl SpanningEstimate {
    /// `slope ± 2·stderr`.
    pub fn band(&self) -> (f64, f64) {
        (self.slope - 2.0 * self.slope_stderr, self.slope + 2.0 * self.slope_stderr)
    }
}

/// Offsets of the grid box `|δ|∞ ≤ radius` with the first time their orbit
/// leaves that box, capped at `n_max`. Translation invariance makes the Bowen
/// ball around any point the same set of offsets.
struct ExitTable {
    offsets: Vec<[i64; 3]>,
    exit: Vec<usize>,
}

impl ExitTable {
    fn build(g: &GridDynamics, modulus: i64, radius: i64, n_max: usize) -> Self {
        let side = 2 * radius + 1;
        let total = (side as usize).pow(g.dim as u32);
        let decode = |mut idx: usize| {
            let mut d = [0i64; 3];
            for slot in d.iter_mut().take(g.dim) {
                *slot = (idx % side as usize) as i64 - radius;
                idx /= side as usize;
            }
            d
        };
        let (offsets, exit): (Vec<_>, Vec<_>) = (0..total)
            .into_par_iter()
            .map(|idx| {
                let delta = decode(idx);
                let mut x = [0i64; 3];
                for i in 0..g.dim {
                    x[i] = delta[i].rem_euclid(modulus);
                }
                let mut t = 0;
                while t < n_max && g.norm(&x, modulus) <= radius {
                    x = g.step(&x, modulus);
                    t += 1;
                }
                (delta, t)
            })
            .unzip();
        Self { offsets, exit }
    }

    /// `B_n = {δ : d(Aⁱδ, 0) ≤ radius for 0 ≤ i < n}`.
    fn ball(&self, n: usize) -> Vec<[i64; 3]> {
        self.offsets
            .iter()
            .zip(&self.exit)
            .filter(|(_, &t)| t >= n)
            .map(|(d, _)| *d)
            .collect()
    }
}

/// Greedy scan: every unmarked grid point becomes a center and marks its
/// translate of `ball`.
fn greedy_count(dim: usize, modulus: usize, ball: &[[i64; 3]]) -> u64 {
    let total = modulus.pow(dim as u32);
    let mut marked = vec![0u64; total.div_ceil(64)];
    let m = modulus as i64;
    let mut count = 0;
    for idx in 0..total {
        if marked[idx / 64] >> (idx % 64) & 1 == 1 {
            continue;
        }
        count += 1;
        let mut p = [0i64; 3];
        let mut rest = idx;
        for slot in p.iter_mut().take(dim) {
            *slot = (rest % modulus) as i64;
            rest /= modulus;
        }
        for d in ball {
            let mut j = 0usize;
            for k in (0..dim).rev() {
                j = j * modulus + (p[k] + d[k]).rem_euclid(m) as usize;
            }
            marked[j / 64] |= 1 << (j % 64);
        }
    }
    count
}

/// Least-squares slope and its standard error.
fn fit_slope(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    let k = xs.len() as f64;
    if xs.len() < 2 {
        return (0.0, f64::INFINITY);
    }
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    if xs.len() < 3 {
        return (slope, 0.0);
    }
    let rss: f64 = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| (y - my - slope * (x - mx)).powi(2))
        .sum();
    (slope, (rss / (k - 2.0) / sxx).sqrt())
}

fn tail_slope(n_values: &[usize], counts: &[u64]) -> (f64, f64) {
    let start = n_values.len() / 2;
    let xs: Vec<f64> = n_values[start..].iter().map(|&n| n as f64).collect();
    let ys: Vec<f64> = counts[start..].iter().map(|&c| (c as f64).ln()).collect();
    fit_slope(&xs, &ys)
}

/// Bowen–Dinaburg counts `s_n(ε)` for `n = 1..=n_max` and the fitted growth
/// rate. `resolution` is the grid denominator `N`; `None` picks
/// [`auto_resolution`].
pub fn spanning_entropy_estimate(
    g: &GridDynamics,
    n_max: usize,
    epsilon: f64,
    resolution: Option<u64>,
) -> Result<SpanningEstimate> {
    if n_max == 0 {
        return Err(Error::Parameter("n_max must be positive".into()));
    }
    if !(epsilon > 0.0 && epsilon < 0.25) {
        return Err(Error::Parameter(format!("epsilon must lie in (0, 1/4), got {epsilon}")));
    }
    let modulus = resolution.unwrap_or_else(|| auto_resolution(g.dim));
    if modulus < 2 || (modulus as f64) * epsilon / 4.0 <= 1.0 {
        return Err(Error::Parameter(format!(
            "grid 1/{modulus} is not finer than epsilon/4 = {}",
            epsilon / 4.0
        )));
    }
    let points = (modulus as u128).pow(g.dim as u32);
    if points > MAX_GRID_POINTS as u128 {
        return Err(Error::Parameter(format!(
            "grid of {points} points exceeds the limit of {MAX_GRID_POINTS}"
        )));
    }
    if n_max as f64 * g.spectral_radius_bound().ln() > 700.0 {
        return Err(Error::Parameter("n_max·log(spectral radius) leaves float range".into()));
    }
    let m = modulus as i64;
    let r = (epsilon * modulus as f64).floor() as i64;
    let r2 = (2.0 * epsilon * modulus as f64).floor() as i64;
    let cover = ExitTable::build(g, m, r, n_max);
    let pack = ExitTable::build(g, m, r2, n_max);
    let n_values: Vec<usize> = (1..=n_max).collect();
    let (counts, lower_counts): (Vec<u64>, Vec<u64>) = n_values
        .par_iter()
        .map(|&n| {
            let upper = greedy_count(g.dim, modulus as usize, &cover.ball(n));
            let lower = greedy_count(g.dim, modulus as usize, &pack.ball(n));
            (upper, lower)
        })
        .unzip();
    let (slope, slope_stderr) = tail_slope(&n_values, &counts);
    let (lower_slope, _) = tail_slope(&n_values, &lower_counts);
    Ok(SpanningEstimate {
        n_values,
        counts,
        lower_counts,
        epsilon,
        resolution: modulus,
        slope,
        slope_stderr,
        lower_slope,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BundleReport {
    pub slope_total: f64,
    pub slope_base: f64,
    pub fiber_entropy: f64,
    pub exact_total: f64,
    pub exact_base: f64,
    pub rhs: f64,
    pub slack: f64,
    pub passed: bool,
    /// `|slope_total − rhs| ≤ slack`.
    pub equality_within_slack: bool,
    pub citation: String,
}

/// Numerical check of `h(φ) ≤ h(φ̄) + h(τ)` for a torus bundle: `total` acts
/// on `T^{a+b}` block-triangularly with diagonal blocks `base` and `fiber`.
pub fn bundle_inequality_check(
    total: &GridDynamics,
    base: &GridDynamics,
    fiber: &TorusEndo,
    n_max: usize,
    epsilon: f64,
) -> Result<BundleReport> {
    let (a, b) = (base.dim, fiber.dim());
    if total.dim != a + b {
        return Err(Error::Domain(format!(
            "total dimension {} is not base {a} + fiber {b}",
            total.dim
        )));
    }
    let t = total.matrix();
    let fiber_m = fiber.matrix();
    let base_m = base.matrix();
    let n = a + b;
    let blocks_ok = t.block(0, a, 0, a) == base_m && t.block(a, n, a, n) == *fiber_m;
    let triangular = t.block(0, a, a, n).is_zero_matrix() || t.block(a, n, 0, a).is_zero_matrix();
    if !blocks_ok || !triangular {
        return Err(Error::Domain(
            "total map is not block-triangular over the base with the fiber action".into(),
        ));
    }
    let tol = crate::DEFAULT_TOL;
    let slope_total = spanning_entropy_estimate(total, n_max, epsilon, None)?.slope;
    let slope_base = spanning_entropy_estimate(base, n_max, epsilon, None)?.slope;
    let fiber_entropy = fiber.entropy(tol)?.value;
    let exact_total = TorusEndo::new(t.clone())?.entropy(tol)?.value;
    let exact_base = TorusEndo::new(base_m)?.entropy(tol)?.value;
    let rhs = slope_base + fiber_entropy;
    let slack = 0.2 * rhs.abs();
    Ok(BundleReport {
        slope_total,
        slope_base,
        fiber_entropy,
        exact_total,
        exact_base,
        rhs,
        slack,
        passed: slope_total <= rhs + slack,
        equality_within_slack: (slope_total - rhs).abs() <= slack,
        citation: crate::group::citation::BUNDLE_INEQUALITY.into(),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LiYorkeParams {
    pub horizon: usize,
    pub pair_budget: usize,
    /// Largest initial separation of a sampled pair.
    pub pair_radius: f64,
    pub eps_low: f64,
    pub eps_high: f64,
    pub seed: u64,
    pub modulus: u64,
}

impl Default for LiYorkeParams {
    fn default() -> Self {
        Self {
            horizon: 1000,
            pair_budget: 64,
            pair_radius: 1e-4,
            eps_low: 0.01,
            eps_high: 0.25,
            seed: 0x5eed,
            modulus: 1_000_003,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LiYorkeCandidate {
    pub a: Vec<f64>,
    pub b: Vec<f64>,
    /// Minimum distance over the tail window `[horizon/2, horizon)`.
    pub liminf_estimate: f64,
    /// Maximum distance over the same window.
    pub limsup_estimate: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LiYorkeSearch {
    pub candidates: Vec<LiYorkeCandidate>,
    pub pairs_tested: usize,
    pub params: LiYorkeParams,
    pub note: String,
}

/// Samples close pairs on the grid `(1/modulus)ℤⁿ` and keeps those whose
/// distance along the orbit both nearly vanishes and exceeds `eps_high`
/// within the tail window. Heuristic evidence only.
pub fn li_yorke_search(g: &GridDynamics, params: &LiYorkeParams) -> Result<LiYorkeSearch> {
    if params.horizon < 2 || params.pair_budget == 0 {
        return Err(Error::Parameter("horizon must be ≥ 2 and pair budget positive".into()));
    }
    if !(params.pair_radius > 0.0 && params.eps_low > 0.0 && params.eps_high > params.eps_low) {
        return Err(Error::Parameter("need pair_radius > 0 and 0 < eps_low < eps_high".into()));
    }
    let m = params.modulus as i64;
    let reach = ((params.pair_radius * m as f64).floor() as i64).max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let samples: Vec<([i64; 3], [i64; 3])> = (0..params.pair_budget)
        .map(|_| {
            let mut a = [0i64; 3];
            let mut delta = [0i64; 3];
            for i in 0..g.dim {
                a[i] = rng.gen_range(0..m);
                delta[i] = rng.gen_range(-reach..=reach);
            }
            if delta[..g.dim].iter().all(|&d| d == 0) {
                delta[0] = 1;
            }
            (a, delta)
        })
        .collect();
    let scale = 1.0 / m as f64;
    let window = params.horizon / 2;
    let candidates: Vec<LiYorkeCandidate> = samples
        .par_iter()
        .filter_map(|(a, delta)| {
            // d(Tⁿa, Tⁿb) = |Aⁿδ| by translation invariance.
            let mut x = [0i64; 3];
            for i in 0..g.dim {
                x[i] = delta[i].rem_euclid(m);
            }
            let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
            for n in 0..params.horizon {
                if n >= window {
                    let d = g.norm(&x, m) as f64 * scale;
                    lo = lo.min(d);
                    hi = hi.max(d);
                }
                x = g.step(&x, m);
            }
            (lo < params.eps_low && hi > params.eps_high).then(|| LiYorkeCandidate {
                a: a[..g.dim].iter().map(|&v| v as f64 * scale).collect(),
                b: (0..g.dim)
                    .map(|i| (a[i] + delta[i]).rem_euclid(m) as f64 * scale)
                    .collect(),
                liminf_estimate: lo,
                limsup_estimate: hi,
            })
        })
        .collect();
    Ok(LiYorkeSearch {
        candidates,
        pairs_tested: params.pair_budget,
        params: params.clone(),
        note: "heuristic evidence only: finite-horizon statistics on a rational grid".into(),
    })
}
