//! Finite-dimensional Lie algebras over ℚ given by structure constants.
//!
//! Vectors are coordinate columns in the defining basis. Every computation is
//! exact; subspaces come back in reduced echelon form so that equal subspaces
//! compare equal entry by entry.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::linalg::{int, MatrixQ, Rational, SubspaceBasis};
use crate::{Error, Result};

/// `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    names: Vec<String>,
    structure: Vec<Vec<Vec<Rational>>>,
}

impl LieAlgebra {
    pub fn new(names: Vec<String>, structure: Vec<Vec<Vec<Rational>>>) -> Result<Self> {
        let n = names.len();
        let shape_ok = structure.len() == n
            && structure
                .iter()
                .all(|row| row.len() == n && row.iter().all(|c| c.len() == n));
        if !shape_ok {
            return Err(Error::Dimension(format!(
                "structure constants must be a {n}x{n}x{n} array"
            )));
        }
        Ok(Self { names, structure })
    }

    /// Builds from sparse triples `(i, j, k, c)` setting `c[i][j][k] = c`.
    /// Unless `(j, i, k)` is listed too, its entry is filled in as `−c`; listing
    /// both keeps both as given (and a validator will see any asymmetry).
    pub fn from_sparse(names: Vec<String>, triples: &[(usize, usize, usize, Rational)]) -> Result<Self> {
        let n = names.len();
        let mut structure = vec![vec![vec![Rational::zero(); n]; n]; n];
        let mut explicit = std::collections::BTreeSet::new();
        for (pos, (i, j, k, _)) in triples.iter().enumerate() {
            if *i >= n || *j >= n || *k >= n {
                return Err(Error::Dimension(format!(
                    "bracket entry {pos} has index out of range for dimension {n}"
                )));
            }
            if !explicit.insert((*i, *j, *k)) {
                return Err(Error::Domain(format!(
                    "bracket entry {pos} repeats index triple ({i}, {j}, {k})"
                )));
            }
        }
        for (i, j, k, c) in triples {
            structure[*i][*j][*k] = c.clone();
            if !explicit.contains(&(*j, *i, *k)) && i != j {
                structure[*j][*i][*k] = -c.clone();
            }
        }
        Self::new(names, structure)
    }

    fn named(names: &[&str], triples: &[(usize, usize, usize, i64)]) -> Self {
        let t: Vec<_> = triples.iter().map(|&(i, j, k, c)| (i, j, k, int(c))).collect();
        Self::from_sparse(names.iter().map(|s| s.to_string()).collect(), &t)
            .expect("well-formed built-in algebra")
    }

    pub fn abelian(n: usize) -> Self {
        let names = (1..=n).map(|i| format!("e{i}")).collect::<Vec<_>>();
        Self::from_sparse(names, &[]).expect("abelian algebra")
    }

    /// `[X, Y] = Z`.
    pub fn heisenberg() -> Self {
        Self::named(&["X", "Y", "Z"], &[(0, 1, 2, 1)])
    }

    /// Euclidean algebra e(2): `[H, X] = Y`, `[H, Y] = −X`.
    pub fn euclidean() -> Self {
        Self::named(&["H", "X", "Y"], &[(0, 1, 2, 1), (0, 2, 1, -1)])
    }

    /// `[H, E] = 2E`, `[H, F] = −2F`, `[E, F] = H`.
    pub fn sl2() -> Self {
        Self::named(&["H", "E", "F"], &[(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)])
    }

    /// The ax+b algebra: `[H, X] = X`.
    pub fn affine_line() -> Self {
        Self::named(&["H", "X"], &[(0, 1, 1, 1)])
    }

    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let (n, m) = (self.dim(), other.dim());
        let d = n + m;
        let mut structure = vec![vec![vec![Rational::zero(); d]; d]; d];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    structure[i][j][k] = self.structure[i][j][k].clone();
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    structure[n + i][n + j][n + k] = other.structure[i][j][k].clone();
                }
            }
        }
        let mut names = self.names.clone();
        names.extend(other.names.iter().cloned());
        LieAlgebra { names, structure }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.structure[i][j][k]
    }

    /// Nonzero structure constants as `(i, j, k, c)`, `i < j`.
    pub fn sparse_triples(&self) -> Vec<(usize, usize, usize, Rational)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = &self.structure[i][j][k];
                    let partner_ok = self.structure[j][i][k] == -c.clone();
                    if !c.is_zero() && (i < j || !partner_ok) {
                        out.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        let n = self.dim();
        if x.len() != n || y.len() != n {
            return Err(Error::Dimension(format!(
                "bracket of vectors of length {} and {} in dimension {n}",
                x.len(),
                y.len()
            )));
        }
        let mut out = vec![Rational::zero(); n];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let coef = xi * yj;
                for (k, c) in self.structure[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &coef * c;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = Rational::one();
        v
    }

    /// Span of all brackets `[u, v]` with `u` in `a` and `v` in `b`.
    pub fn bracket_space(&self, a: &SubspaceBasis, b: &SubspaceBasis) -> Result<SubspaceBasis> {
        let mut vecs = Vec::new();
        for u in a.basis() {
            for v in b.basis() {
                vecs.push(self.bracket(u, v)?);
            }
        }
        SubspaceBasis::from_vectors(self.dim(), &vecs)
    }

    pub fn is_ideal(&self, space: &SubspaceBasis) -> Result<bool> {
        Ok(self
            .bracket_space(&SubspaceBasis::full(self.dim()), space)?
            .is_subspace_of(space))
    }

    pub fn is_subalgebra(&self, space: &SubspaceBasis) -> Result<bool> {
        Ok(self.bracket_space(space, space)?.is_subspace_of(space))
    }

    pub fn is_ad_nilpotent(&self, x: &[Rational]) -> Result<bool> {
        Ok(adjoint_matrix(self, x)?.pow(self.dim() as u32)?.is_zero_matrix())
    }
}

/// Violations of antisymmetry and of the Jacobi identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraValidation {
    /// Pairs `(i, j)`, `i ≤ j`, with `[e_i, e_j] ≠ −[e_j, e_i]`.
    pub antisymmetry: Vec<(usize, usize)>,
    /// Triples `(i, j, k)`, `i ≤ j ≤ k`, where the Jacobi sum is nonzero.
    pub jacobi: Vec<(usize, usize, usize)>,
}

impl AlgebraValidation {
    pub fn is_valid(&self) -> bool {
        self.antisymmetry.is_empty() && self.jacobi.is_empty()
    }
}

pub fn validate_algebra(a: &LieAlgebra) -> AlgebraValidation {
    let n = a.dim();
    let mut report = AlgebraValidation::default();
    for i in 0..n {
        for j in i..n {
            let ok = (0..n).all(|k| (&a.structure[i][j][k] + &a.structure[j][i][k]).is_zero());
            if !ok {
                report.antisymmetry.push((i, j));
            }
        }
    }
    let e: Vec<_> = (0..n).map(|i| a.basis_vector(i)).collect();
    let br = |x: &[Rational], y: &[Rational]| a.bracket(x, y).expect("basis vectors");
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                let t1 = br(&e[i], &br(&e[j], &e[k]));
                let t2 = br(&e[j], &br(&e[k], &e[i]));
                let t3 = br(&e[k], &br(&e[i], &e[j]));
                if t1.iter().zip(&t2).zip(&t3).any(|((a, b), c)| !(a + b + c).is_zero()) {
                    report.jacobi.push((i, j, k));
                }
            }
        }
    }
    report
}

/// Matrix of `y ↦ [x, y]`.
pub fn adjoint_matrix(a: &LieAlgebra, x: &[Rational]) -> Result<MatrixQ> {
    let n = a.dim();
    if x.len() != n {
        return Err(Error::Dimension(format!(
            "adjoint of a vector of length {} in dimension {n}",
            x.len()
        )));
    }
    let columns: Vec<Vec<Rational>> = (0..n)
        .map(|j| a.bracket(x, &a.basis_vector(j)))
        .collect::<Result<_>>()?;
    MatrixQ::from_columns(n, &columns)
}

fn basis_adjoints(a: &LieAlgebra) -> Vec<MatrixQ> {
    (0..a.dim())
        .map(|i| adjoint_matrix(a, &a.basis_vector(i)).expect("basis vector"))
        .collect()
}

/// `κ(e_i, e_j) = tr(ad e_i ∘ ad e_j)`.
pub fn killing_form(a: &LieAlgebra) -> MatrixQ {
    let ads = basis_adjoints(a);
    let n = a.dim();
    let mut k = MatrixQ::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = ads[i].mul(&ads[j]).expect("square").trace();
            k[(i, j)] = v.clone();
            k[(j, i)] = v;
        }
    }
    k
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IdealKind {
    Center,
    Radical,
    Nilradical,
    Derived,
    Custom,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealData {
    pub space: SubspaceBasis,
    pub kind: IdealKind,
}

impl IdealData {
    /// Wraps a subspace after checking `[g, space] ⊆ space`.
    pub fn custom(a: &LieAlgebra, space: SubspaceBasis) -> Result<Self> {
        if space.ambient_dim() != a.dim() {
            return Err(Error::Dimension("ideal in a different ambient space".into()));
        }
        if !a.is_ideal(&space)? {
            return Err(Error::Domain("subspace is not an ideal".into()));
        }
        Ok(Self {
            space,
            kind: IdealKind::Custom,
        })
    }
}

/// Solutions `x` of `c·x = 0` for every row functional `c`, as a subspace.
fn common_kernel(n: usize, functionals: Vec<Vec<Rational>>) -> SubspaceBasis {
    if functionals.is_empty() {
        return SubspaceBasis::full(n);
    }
    let m = MatrixQ::from_rows(functionals).expect("functionals of equal length");
    SubspaceBasis::from_vectors(n, &m.nullspace()).expect("kernel vectors")
}

/// Restricts a set of functionals to `sub`, returning the vectors of `sub`
/// they all annihilate.
fn kernel_within(sub: &SubspaceBasis, functionals: &[Vec<Rational>]) -> SubspaceBasis {
    let n = sub.ambient_dim();
    if sub.is_zero() {
        return SubspaceBasis::zero(n);
    }
    if functionals.is_empty() {
        return sub.clone();
    }
    let restricted: Vec<Vec<Rational>> = functionals
        .iter()
        .map(|f| {
            sub.basis()
                .iter()
                .map(|b| f.iter().zip(b).map(|(x, y)| x * y).sum())
                .collect()
        })
        .collect();
    let coeffs = MatrixQ::from_rows(restricted).expect("rectangular").nullspace();
    let vecs: Vec<Vec<Rational>> = coeffs
        .iter()
        .map(|c| crate::linalg::subspace_combine(c, sub.basis(), n))
        .collect();
    SubspaceBasis::from_vectors(n, &vecs).expect("combinations of basis vectors")
}

pub fn center(a: &LieAlgebra) -> IdealData {
    let n = a.dim();
    // [x, e_j]_k = Σ_i x_i c[i][j][k] = 0 for all j, k.
    let mut rows = Vec::with_capacity(n * n);
    for j in 0..n {
        for k in 0..n {
            rows.push((0..n).map(|i| a.structure[i][j][k].clone()).collect());
        }
    }
    IdealData {
        space: common_kernel(n, rows),
        kind: IdealKind::Center,
    }
}

/// `{x ∈ sub : [x, y] = 0 for all y ∈ sub}`, the center of the subalgebra.
pub fn centralizer_in(a: &LieAlgebra, sub: &SubspaceBasis) -> Result<SubspaceBasis> {
    let n = a.dim();
    if sub.ambient_dim() != n {
        return Err(Error::Dimension(format!(
            "subspace of a {}-dimensional space in a {n}-dimensional algebra",
            sub.ambient_dim()
        )));
    }
    if !a.is_subalgebra(sub)? {
        return Err(Error::Domain("subspace is not closed under the bracket".into()));
    }
    let mut functionals = Vec::new();
    for y in sub.basis() {
        let ad_y = adjoint_matrix(a, y)?;
        // [x, y] = −ad(y)x; each row of ad(y) is a functional on x.
        for r in 0..n {
            functionals.push(ad_y.row(r).to_vec());
        }
    }
    Ok(kernel_within(sub, &functionals))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralSeries {
    /// `g⁽⁰⁾ = g`, `g⁽ⁱ⁺¹⁾ = [g⁽ⁱ⁾, g⁽ⁱ⁾]`, up to the first repeat.
    pub derived: Vec<SubspaceBasis>,
    /// `g¹ = g`, `gⁱ⁺¹ = [g, gⁱ]`, up to the first repeat.
    pub lower_central: Vec<SubspaceBasis>,
    pub solvable: bool,
    pub nilpotent: bool,
}

fn stabilize(
    start: SubspaceBasis,
    mut step: impl FnMut(&SubspaceBasis) -> Result<SubspaceBasis>,
) -> Result<Vec<SubspaceBasis>> {
    let mut chain = vec![start];
    loop {
        let next = step(chain.last().unwrap())?;
        if &next == chain.last().unwrap() {
            return Ok(chain);
        }
        chain.push(next);
    }
}

pub fn derived_and_lower_central_series(a: &LieAlgebra) -> CentralSeries {
    let full = SubspaceBasis::full(a.dim());
    let derived = stabilize(full.clone(), |s| a.bracket_space(s, s)).expect("same ambient");
    let lower_central = stabilize(full.clone(), |s| a.bracket_space(&full, s)).expect("same ambient");
    CentralSeries {
        solvable: derived.last().unwrap().is_zero(),
        nilpotent: lower_central.last().unwrap().is_zero(),
        derived,
        lower_central,
    }
}

/// Derived series of a subalgebra reaches zero.
fn subalgebra_is_solvable(a: &LieAlgebra, sub: &SubspaceBasis) -> Result<bool> {
    let chain = stabilize(sub.clone(), |s| a.bracket_space(s, s))?;
    Ok(chain.last().unwrap().is_zero())
}

/// `𝔯 = {x : κ(x, [g, g]) = 0}`, post-checked to be a solvable ideal with a
/// semisimple quotient.
pub fn solvable_radical(a: &LieAlgebra) -> Result<IdealData> {
    let n = a.dim();
    let kappa = killing_form(a);
    let full = SubspaceBasis::full(n);
    let derived = a.bracket_space(&full, &full)?;
    let functionals: Vec<Vec<Rational>> = derived
        .basis()
        .iter()
        .map(|y| kappa.mul_vec(y).expect("square"))
        .collect();
    let radical = common_kernel(n, functionals);
    if !a.is_ideal(&radical)? {
        return Err(Error::InvariantViolation(
            "Killing-orthogonal of [g, g] is not an ideal; structure constants are inconsistent".into(),
        ));
    }
    if !subalgebra_is_solvable(a, &radical)? {
        return Err(Error::InvariantViolation(
            "computed radical is not solvable; structure constants are inconsistent".into(),
        ));
    }
    let quotient = quotient_algebra(a, &radical)?;
    if quotient.algebra.dim() > 0 && killing_form(&quotient.algebra).det()?.is_zero() {
        return Err(Error::InvariantViolation(
            "quotient by the radical has a degenerate Killing form".into(),
        ));
    }
    Ok(IdealData {
        space: radical,
        kind: IdealKind::Radical,
    })
}

/// Largest ideal acting nilpotently in the adjoint representation.
///
/// Starts from `𝔯 ∩ ker κ` and adds, for a generic `y ∈ 𝔯`, the conditions
/// `tr(ad x · ad(y)^k) = 0`, `0 ≤ k ≤ dim`. Over ℂ the adjoint action of `𝔯`
/// is simultaneously triangular with weights `λᵢ`, and these conditions read
/// `Σᵢ λᵢ(x) λᵢ(y)^k = 0`; when the `λᵢ(y)` separate the distinct weights a
/// Vandermonde argument leaves exactly `{x ∈ 𝔯 : λᵢ(x) = 0 ∀ i}`. Every
/// condition holds on the nilradical, so the candidate always contains it and
/// the post-check (basis vectors ad-nilpotent) certifies equality.
pub fn nilradical(a: &LieAlgebra) -> Result<IdealData> {
    let n = a.dim();
    let radical = solvable_radical(a)?.space;
    let kappa = killing_form(a);
    let ads = basis_adjoints(a);
    let mut functionals: Vec<Vec<Rational>> = (0..n).map(|i| kappa.row(i).to_vec()).collect();
    let mut candidate = kernel_within(&radical, &functionals);

    const ATTEMPTS: usize = 8;
    for attempt in 0..ATTEMPTS {
        if verify_nilradical(a, &radical, &candidate)? {
            return Ok(IdealData {
                space: candidate,
                kind: IdealKind::Nilradical,
            });
        }
        let y = generic_element(&radical, attempt);
        let ad_y = adjoint_matrix(a, &y)?;
        let mut power = MatrixQ::identity(n);
        for _ in 0..=n {
            functionals.push(ads.iter().map(|ad_e| ad_e.mul(&power).expect("square").trace()).collect());
            power = power.mul(&ad_y)?;
        }
        candidate = kernel_within(&radical, &functionals);
    }
    if verify_nilradical(a, &radical, &candidate)? {
        return Ok(IdealData {
            space: candidate,
            kind: IdealKind::Nilradical,
        });
    }
    Err(Error::InvariantViolation(
        "nilradical candidate failed verification after all generic elements".into(),
    ))
}

/// Deterministic sequence of elements of `sub` with rapidly growing,
/// pairwise distinct coefficients.
fn generic_element(sub: &SubspaceBasis, attempt: usize) -> Vec<Rational> {
    let base = BigInt::from(attempt as u64 * 7 + 3);
    let mut coeff = BigInt::one();
    let mut y = vec![Rational::zero(); sub.ambient_dim()];
    for b in sub.basis() {
        coeff = &coeff * &base + BigInt::one();
        let c = Rational::from_integer(coeff.clone());
        for (yi, bi) in y.iter_mut().zip(b) {
            *yi += &c * bi;
        }
    }
    y
}

fn verify_nilradical(a: &LieAlgebra, radical: &SubspaceBasis, cand: &SubspaceBasis) -> Result<bool> {
    if !cand.is_subspace_of(radical) || !a.is_ideal(cand)? {
        return Ok(false);
    }
    for b in cand.basis() {
        if !a.is_ad_nilpotent(b)? {
            return Ok(false);
        }
    }
    let derived_radical = a.bracket_space(radical, radical)?;
    Ok(derived_radical.is_subspace_of(cand))
}

/// `g / I` in the basis of standard vectors at the non-pivot columns of `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub algebra: LieAlgebra,
    /// `dim(g/I) × dim(g)` matrix of the projection.
    pub projection: MatrixQ,
    /// `dim(g) × dim(g/I)` inclusion of the complement; `projection · section = I`.
    pub section: MatrixQ,
}

pub fn quotient_algebra(a: &LieAlgebra, ideal: &SubspaceBasis) -> Result<Quotient> {
    let n = a.dim();
    if ideal.ambient_dim() != n {
        return Err(Error::Dimension("ideal in a different ambient space".into()));
    }
    if !a.is_ideal(ideal)? {
        return Err(Error::Domain("quotient by a subspace that is not an ideal".into()));
    }
    let comp = ideal.complement_indices();
    let q = comp.len();
    let position = |c: usize| comp.iter().position(|&x| x == c);
    // e_p ≡ −Σ_c row[c] e_c modulo the ideal, for pivot p of an echelon row.
    let mut projection = MatrixQ::zeros(q, n);
    for (qi, &c) in comp.iter().enumerate() {
        projection[(qi, c)] = Rational::one();
    }
    for (row, &p) in ideal.basis().iter().zip(ideal.pivots()) {
        for (c, v) in row.iter().enumerate() {
            if let Some(qi) = position(c) {
                projection[(qi, p)] = -v.clone();
            }
        }
    }
    let mut section = MatrixQ::zeros(n, q);
    for (qi, &c) in comp.iter().enumerate() {
        section[(c, qi)] = Rational::one();
    }
    let mut structure = vec![vec![vec![Rational::zero(); q]; q]; q];
    for (i, &ci) in comp.iter().enumerate() {
        for (j, &cj) in comp.iter().enumerate() {
            let b = a.bracket(&a.basis_vector(ci), &a.basis_vector(cj))?;
            structure[i][j] = projection.mul_vec(&b)?;
        }
    }
    let names = comp.iter().map(|&c| a.names[c].clone()).collect();
    let algebra = LieAlgebra::new(names, structure)?;
    if !validate_algebra(&algebra).is_valid() {
        return Err(Error::InvariantViolation("quotient algebra fails the Jacobi identity".into()));
    }
    Ok(Quotient {
        algebra,
        projection,
        section,
    })
}
