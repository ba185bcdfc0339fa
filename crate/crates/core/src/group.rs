//! Connected Lie groups `G = G̃/Γ̃` given by a Lie algebra and log-generators
//! of a central lattice, their endomorphisms, and the entropy pipeline.
//!
//! `Γ̃` is the free abelian group generated by `exp(2π·Wᵢ)`. Keeping the `2π`
//! in the convention lets every `Wᵢ` stay rational.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::lie_algebra::{
    adjoint_matrix, center, centralizer_in, derived_and_lower_central_series, nilradical,
    quotient_algebra, validate_algebra, LieAlgebra,
};
use crate::linalg::{
    format_rational, lattice_intersect_subspace, log_mahler, EntropyValue, LatticeBasis, MatrixQ,
    MatrixZ, RatPolynomial, Rational, SubspaceBasis,
};
use crate::torus::{Order, TorusEndo, Verdict};
use crate::{Error, Result};

/// Result tags carried in reports and errors.
pub mod citation {
    pub const CENTER_CRITERION: &str = "Thm. 2.5";
    pub const TORAL_COINCIDENCE: &str = "Prop. 3.2";
    pub const QUOTIENT_TORUS_TRIVIAL: &str = "Prop. 3.3";
    pub const TORAL_FINITE_ORDER: &str = "Thm. 4.3";
    pub const LI_YORKE_BUNDLE: &str = "Prop. 5.1";
    pub const TRIVIAL_TORUS_NO_LI_YORKE: &str = "Cor. 5.4";
    pub const BUNDLE_INEQUALITY: &str = "Prop. 6.1";
    pub const MAIN_THEOREM: &str = "Thm. 6.2";
    pub const TORUS_LI_YORKE: &str = "Prop. 6.3";
    pub const GROUP_LI_YORKE: &str = "Prop. 6.4";
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentedGroup {
    pub name: String,
    pub algebra: LieAlgebra,
    pub lattice_logs: Vec<Vec<Rational>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PresentationIssue {
    Antisymmetry { i: usize, j: usize },
    Jacobi { i: usize, j: usize, k: usize },
    WrongLength { index: usize, len: usize },
    NotCommuting { i: usize, j: usize },
    NotSemisimple { index: usize, min_poly: String },
    SpectrumNotImaginaryInteger { index: usize, factor: String },
    LinearlyDependent,
}

impl fmt::Display for PresentationIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Antisymmetry { i, j } => write!(f, "structure constants not antisymmetric at ({i}, {j})"),
            Self::Jacobi { i, j, k } => write!(f, "Jacobi identity fails on ({i}, {j}, {k})"),
            Self::WrongLength { index, len } => write!(f, "lattice generator {index} has length {len}"),
            Self::NotCommuting { i, j } => write!(f, "lattice generators {i} and {j} do not commute"),
            Self::NotSemisimple { index, min_poly } => write!(
                f,
                "ad of lattice generator {index} is not semisimple (minimal polynomial {min_poly})"
            ),
            Self::SpectrumNotImaginaryInteger { index, factor } => write!(
                f,
                "ad of lattice generator {index} has eigenvalues outside iℤ (factor {factor})"
            ),
            Self::LinearlyDependent => write!(f, "lattice generators are linearly dependent"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PresentationReport {
    pub issues: Vec<PresentationIssue>,
}

impl PresentationReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

impl PresentedGroup {
    /// Builds a presentation, rejecting it unless every check passes.
    pub fn new(name: impl Into<String>, algebra: LieAlgebra, lattice_logs: Vec<Vec<Rational>>) -> Result<Self> {
        let g = Self {
            name: name.into(),
            algebra,
            lattice_logs,
        };
        g.ensure_valid()?;
        Ok(g)
    }

    pub fn ensure_valid(&self) -> Result<()> {
        match validate_presentation(self).issues.first() {
            None => Ok(()),
            Some(issue) => Err(Error::InvalidPresentation(issue.to_string())),
        }
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn lattice(&self) -> Result<LatticeBasis> {
        LatticeBasis::from_rational(self.dim(), &self.lattice_logs)
    }

    pub fn direct_product(&self, other: &PresentedGroup) -> PresentedGroup {
        let (n, m) = (self.dim(), other.dim());
        let pad = |v: &Vec<Rational>, before: usize, after: usize| {
            let mut out = vec![Rational::zero(); before];
            out.extend(v.iter().cloned());
            out.extend(std::iter::repeat_n(Rational::zero(), after));
            out
        };
        let mut logs: Vec<_> = self.lattice_logs.iter().map(|w| pad(w, 0, m)).collect();
        logs.extend(other.lattice_logs.iter().map(|w| pad(w, n, 0)));
        PresentedGroup {
            name: format!("{} x {}", self.name, other.name),
            algebra: self.algebra.direct_sum(&other.algebra),
            lattice_logs: logs,
        }
    }
}

/// Checks that the `Wᵢ` commute, have semisimple adjoints with spectrum in
/// `iℤ`, and are linearly independent. Together these place them in a
/// compactly embedded abelian subalgebra, so each `exp(2πWᵢ)` is central.
pub fn validate_presentation(g: &PresentedGroup) -> PresentationReport {
    let mut issues = Vec::new();
    let algebra_report = validate_algebra(&g.algebra);
    issues.extend(
        algebra_report
            .antisymmetry
            .iter()
            .map(|&(i, j)| PresentationIssue::Antisymmetry { i, j }),
    );
    issues.extend(
        algebra_report
            .jacobi
            .iter()
            .map(|&(i, j, k)| PresentationIssue::Jacobi { i, j, k }),
    );
    let n = g.dim();
    for (index, w) in g.lattice_logs.iter().enumerate() {
        if w.len() != n {
            issues.push(PresentationIssue::WrongLength { index, len: w.len() });
        }
    }
    if !issues.is_empty() {
        return PresentationReport { issues };
    }
    let logs = &g.lattice_logs;
    for i in 0..logs.len() {
        for j in i + 1..logs.len() {
            let b = g.algebra.bracket(&logs[i], &logs[j]).expect("lengths checked");
            if b.iter().any(|x| !x.is_zero()) {
                issues.push(PresentationIssue::NotCommuting { i, j });
            }
        }
    }
    for (index, w) in logs.iter().enumerate() {
        let min = adjoint_matrix(&g.algebra, w)
            .and_then(|ad| ad.min_poly())
            .expect("square adjoint");
        if !min.is_squarefree() {
            issues.push(PresentationIssue::NotSemisimple {
                index,
                min_poly: min.to_string(),
            });
        } else if let Err(factor) = imaginary_integer_spectrum(&min) {
            issues.push(PresentationIssue::SpectrumNotImaginaryInteger { index, factor });
        }
    }
    if !logs.is_empty() {
        let rank = MatrixQ::from_rows(logs.clone()).map(|m| m.rank()).unwrap_or(0);
        if rank < logs.len() {
            issues.push(PresentationIssue::LinearlyDependent);
        }
    }
    PresentationReport { issues }
}

/// For a squarefree monic `μ`, checks `μ | t·∏_{m≥1}(t² + m²)`. On failure
/// returns the offending factor.
fn imaginary_integer_spectrum(min: &RatPolynomial) -> std::result::Result<(), String> {
    let coeffs = min.coeffs();
    let shift = coeffs.iter().take_while(|c| c.is_zero()).count();
    let rest = RatPolynomial::new(coeffs[shift..].to_vec());
    if rest.coeffs().iter().skip(1).step_by(2).any(|c| !c.is_zero()) {
        return Err(rest.to_string());
    }
    // rest(t) = σ(t²) with σ monic; σ must split as ∏(s + m²).
    let sigma = RatPolynomial::new(rest.coeffs().iter().step_by(2).cloned().collect());
    let deg = sigma.degree().unwrap_or(0);
    if deg == 0 {
        return Ok(());
    }
    let Some(sigma_int) = sigma.to_int_exact() else {
        return Err(rest.to_string());
    };
    // Each root −m² divides σ(0) = ∏ m².
    let constant = sigma_int.coeffs()[0].magnitude().clone();
    let mut found = 0;
    let mut m = num_bigint::BigUint::one();
    while found < deg && &m * &m <= constant {
        let s = -Rational::from_integer((&m * &m).into());
        if sigma.eval(&s).is_zero() {
            found += 1;
        }
        m += 1u32;
        if m.bits() > 24 {
            break;
        }
    }
    if found == deg {
        Ok(())
    } else {
        Err(rest.to_string())
    }
}

/// An endomorphism `φ` of `G` through its derivative on `𝔤` and the action on
/// the lattice generators, `dφ·Wᵢ = Σⱼ Mⱼᵢ Wⱼ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupEndomorphism {
    pub d_phi: MatrixQ,
    pub lattice_action: MatrixZ,
    pub surjective: bool,
}

impl GroupEndomorphism {
    pub fn pow(&self, k: u32) -> GroupEndomorphism {
        let d_phi = self.d_phi.pow(k).expect("square");
        GroupEndomorphism {
            surjective: !d_phi.det().expect("square").is_zero(),
            lattice_action: self.lattice_action.pow(k).expect("square"),
            d_phi,
        }
    }

    pub fn direct_sum(&self, other: &GroupEndomorphism) -> GroupEndomorphism {
        GroupEndomorphism {
            d_phi: self.d_phi.block_diag(&other.d_phi),
            lattice_action: self.lattice_action.block_diag(&other.lattice_action),
            surjective: self.surjective && other.surjective,
        }
    }
}

pub fn validate_endomorphism(g: &PresentedGroup, d: &MatrixQ) -> Result<GroupEndomorphism> {
    g.ensure_valid()?;
    let n = g.dim();
    if d.nrows() != n || d.ncols() != n {
        return Err(Error::Dimension(format!(
            "endomorphism is {}x{} on a {n}-dimensional algebra",
            d.nrows(),
            d.ncols()
        )));
    }
    let a = &g.algebra;
    let images: Vec<Vec<Rational>> = (0..n).map(|j| d.column(j)).collect();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = d.mul_vec(&a.bracket(&a.basis_vector(i), &a.basis_vector(j))?)?;
            let rhs = a.bracket(&images[i], &images[j])?;
            if lhs != rhs {
                return Err(Error::NotEndomorphism(i, j));
            }
        }
    }
    let k = g.lattice_logs.len();
    let mut action = MatrixZ::zeros(k, k);
    if k > 0 {
        let w = MatrixQ::from_columns(n, &g.lattice_logs)?;
        for (i, wi) in g.lattice_logs.iter().enumerate() {
            let image = d.mul_vec(wi)?;
            let coords = w.solve(&image)?.ok_or_else(|| Error::LatticeNotPreserved {
                index: i,
                reason: "leaves the span of the lattice generators".into(),
            })?;
            for (j, c) in coords.iter().enumerate() {
                if !c.is_integer() {
                    return Err(Error::LatticeNotPreserved {
                        index: i,
                        reason: format!("has non-integer coordinate {} on generator {j}", format_rational(c)),
                    });
                }
                action[(j, i)] = c.to_integer();
            }
        }
    }
    Ok(GroupEndomorphism {
        d_phi: d.clone(),
        lattice_action: action,
        surjective: !d.det()?.is_zero(),
    })
}

/// `𝔤_φ = im(dφ^{dim 𝔤})`, the algebra of the largest connected subgroup
/// mapped onto itself.
pub fn eventual_image(g: &PresentedGroup, e: &GroupEndomorphism) -> Result<SubspaceBasis> {
    let n = g.dim();
    let image = e.d_phi.pow(n as u32)?.column_space();
    if image.image(&e.d_phi)? != image {
        return Err(Error::InvariantViolation(
            "dφ does not map the stabilized image onto itself".into(),
        ));
    }
    if !g.algebra.is_subalgebra(&image)? {
        return Err(Error::InvariantViolation(
            "stabilized image is not closed under the bracket".into(),
        ));
    }
    Ok(image)
}

/// Lattice of a central torus in log coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusData {
    pub lattice: LatticeBasis,
    pub subspace: SubspaceBasis,
    pub action: Option<TorusEndo>,
}

impl TorusData {
    fn new(lattice: LatticeBasis) -> Self {
        Self {
            subspace: lattice.span(),
            lattice,
            action: None,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.lattice.is_empty()
    }
}

/// `Λ = span_ℤ(Wᵢ) ∩ 𝔷(𝔤)`, the lattice of `T(G)`.
pub fn toral_lattice(g: &PresentedGroup) -> Result<TorusData> {
    g.ensure_valid()?;
    let lattice = lattice_intersect_subspace(&g.lattice()?, &center(&g.algebra).space)?;
    Ok(TorusData::new(lattice))
}

/// `(L ∩ sub) ∩ 𝔷(sub)` for a subalgebra `sub`: the toral lattice of the
/// connected subgroup it generates.
pub fn toral_lattice_in(g: &PresentedGroup, sub: &SubspaceBasis) -> Result<LatticeBasis> {
    let inside = lattice_intersect_subspace(&g.lattice()?, sub)?;
    let z = centralizer_in(&g.algebra, sub)?;
    lattice_intersect_subspace(&inside, &z)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StageRecord {
    pub name: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainLink {
    pub citation: String,
    pub claim: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiYorkeReport {
    pub verdict: Verdict,
    pub citation: String,
    pub chain: Vec<ChainLink>,
    pub torus_rank: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AnalysisReport {
    /// `h(φ) = h(φ|_{T(G_φ)})`.
    pub entropy: EntropyValue,
    /// `Σ_{|λ|>1} log|λ|` over all eigenvalues of `dφ`.
    pub bowen_bound: EntropyValue,
    pub g_phi: SubspaceBasis,
    pub lattice_phi: LatticeBasis,
    pub center_phi: SubspaceBasis,
    pub torus: TorusData,
    pub li_yorke: Option<LiYorkeReport>,
    pub stages: Vec<StageRecord>,
    pub validations: Vec<String>,
    pub citation: String,
}

fn stage<T>(name: &str, r: Result<T>) -> Result<T> {
    r.map_err(|e| e.at_stage(name))
}

pub fn topological_entropy(g: &PresentedGroup, e: &GroupEndomorphism, tol: f64) -> Result<AnalysisReport> {
    if !(tol > 0.0) {
        return Err(Error::Parameter(format!("tolerance must be positive, got {tol}")));
    }
    g.ensure_valid()?;
    let n = g.dim();
    let mut stages = Vec::new();
    let mut record = |name: &str, detail: String| {
        stages.push(StageRecord {
            name: name.into(),
            detail,
        })
    };

    let g_phi = stage("eventual_image", eventual_image(g, e))?;
    record("eventual_image", format!("dim 𝔤_φ = {} of {n}", g_phi.dim()));

    let lattice_phi = stage(
        "lattice_restriction",
        g.lattice().and_then(|l| lattice_intersect_subspace(&l, &g_phi)),
    )?;
    record("lattice_restriction", format!("rank L_φ = {}", lattice_phi.rank()));

    let center_phi = stage("center", centralizer_in(&g.algebra, &g_phi))?;
    record("center", format!("dim 𝔷(𝔤_φ) = {}", center_phi.dim()));

    let torus_lattice = stage("toral_lattice", lattice_intersect_subspace(&lattice_phi, &center_phi))?;
    record("toral_lattice", format!("rank Λ_φ = {}", torus_lattice.rank()));

    let action = stage("restriction", TorusEndo::from_linear_action(&e.d_phi, &torus_lattice))?;
    record("restriction", format!("torus action {}", action.matrix()));

    let entropy = stage("entropy", action.entropy(tol))?;
    record("entropy", format!("h = {}", entropy.value));

    let bowen_poly = stage("bowen_bound", e.d_phi.char_poly())?.to_primitive_int();
    let bowen_bound = stage("bowen_bound", log_mahler(&bowen_poly, tol))?;

    let li_yorke = if e.surjective { Some(li_yorke_report(g, e)?) } else { None };
    let mut torus = TorusData::new(torus_lattice);
    torus.action = Some(action);
    Ok(AnalysisReport {
        entropy,
        bowen_bound,
        g_phi,
        lattice_phi,
        center_phi,
        torus,
        li_yorke,
        stages,
        validations: vec![
            "presentation: commuting semisimple generators with spectrum in iℤ".into(),
            "endomorphism: brackets preserved, lattice mapped into itself".into(),
        ],
        citation: citation::MAIN_THEOREM.into(),
    })
}

/// Order of the map induced on the torus `T(A)` of `A = R/N`, for a solvable
/// group with simply-connected nilradical. The order is always finite; an
/// infinite order is reported as an error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteOrderCheck {
    pub order: u64,
    pub induced: TorusEndo,
    pub quotient_dim: usize,
}

pub fn check_toral_induced_finite_order(g: &PresentedGroup, e: &GroupEndomorphism) -> Result<FiniteOrderCheck> {
    g.ensure_valid()?;
    let hypothesis = |reason: &str| Error::HypothesisNotMet {
        citation: citation::TORAL_FINITE_ORDER.into(),
        reason: reason.into(),
    };
    if !derived_and_lower_central_series(&g.algebra).solvable {
        return Err(hypothesis("the algebra is not solvable"));
    }
    if !e.surjective {
        return Err(hypothesis("the endomorphism is not surjective"));
    }
    let nil = nilradical(&g.algebra)?.space;
    let lattice = g.lattice()?;
    if !lattice_intersect_subspace(&lattice, &nil)?.is_empty() {
        return Err(hypothesis(
            "the nilradical is not simply connected: the lattice meets 𝔫",
        ));
    }
    if !nil.image(&e.d_phi)?.is_subspace_of(&nil) {
        return Err(Error::InvariantViolation("dφ does not preserve the nilradical".into()));
    }
    let q = quotient_algebra(&g.algebra, &nil)?;
    let induced_map = q.projection.mul(&e.d_phi)?.mul(&q.section)?;
    let projected: Vec<Vec<Rational>> = g
        .lattice_logs
        .iter()
        .map(|w| q.projection.mul_vec(w))
        .collect::<Result<_>>()?;
    let quotient_lattice = LatticeBasis::from_rational(q.algebra.dim(), &projected)?;
    // A = R/N is abelian, so every lattice direction is central.
    let induced = TorusEndo::from_linear_action(&induced_map, &quotient_lattice)?;
    match induced.finite_order() {
        Order::Finite(order) => Ok(FiniteOrderCheck {
            order,
            induced,
            quotient_dim: q.algebra.dim(),
        }),
        Order::Infinite => Err(Error::TheoremViolation {
            citation: citation::TORAL_FINITE_ORDER.into(),
            reason: format!("induced toral map {} has infinite order", induced.matrix()),
        }),
    }
}

/// Presentation of `G/T(G)`: the quotient algebra by `span(Λ)` with the
/// projected lattice in Hermite normal form.
pub fn quotient_by_torus(g: &PresentedGroup) -> Result<PresentedGroup> {
    let torus = toral_lattice(g)?;
    let q = quotient_algebra(&g.algebra, &torus.subspace)?;
    let projected: Vec<Vec<Rational>> = g
        .lattice_logs
        .iter()
        .map(|w| q.projection.mul_vec(w))
        .collect::<Result<_>>()?;
    let lattice = LatticeBasis::from_rational(q.algebra.dim(), &projected)?;
    let quotient = PresentedGroup {
        name: format!("{} / T", g.name),
        algebra: q.algebra,
        lattice_logs: lattice.generators().to_vec(),
    };
    quotient.ensure_valid().map_err(|e| {
        Error::InvariantViolation(format!("quotient by the torus is not a valid presentation: {e}"))
    })?;
    if !toral_lattice(&quotient)?.is_trivial() {
        return Err(Error::InvariantViolation(format!(
            "quotient by the torus still has a torus ({})",
            citation::QUOTIENT_TORUS_TRIVIAL
        )));
    }
    Ok(quotient)
}

fn link(citation: &str, claim: impl Into<String>) -> ChainLink {
    ChainLink {
        citation: citation.into(),
        claim: claim.into(),
    }
}

/// Li-Yorke verdict for a surjective endomorphism, decided exactly from the
/// action on `T(G)` and justified by a chain of cited results.
pub fn li_yorke_report(g: &PresentedGroup, e: &GroupEndomorphism) -> Result<LiYorkeReport> {
    if !e.surjective {
        return Err(Error::HypothesisNotMet {
            citation: citation::GROUP_LI_YORKE.into(),
            reason: "φ(G₀) = G₀ requires dφ to be invertible".into(),
        });
    }
    let torus = toral_lattice(g)?;
    let rank = torus.lattice.rank();
    if torus.is_trivial() {
        return Ok(LiYorkeReport {
            verdict: Verdict::SomePowerLiYorkeFree,
            citation: citation::TRIVIAL_TORUS_NO_LI_YORKE.into(),
            chain: vec![link(
                citation::TRIVIAL_TORUS_NO_LI_YORKE,
                "T(G) is trivial, so some power of φ has no Li-Yorke pair",
            )],
            torus_rank: 0,
        });
    }
    let action = stage("li_yorke", TorusEndo::from_linear_action(&e.d_phi, &torus.lattice))?;
    if action.has_positive_entropy()? {
        return Ok(LiYorkeReport {
            verdict: Verdict::LiYorkeAllPowers,
            citation: citation::GROUP_LI_YORKE.into(),
            chain: vec![
                link(citation::MAIN_THEOREM, "h(φ) = h(φ|T(G)) > 0: the torus action has an eigenvalue off the unit circle"),
                link(citation::TORUS_LI_YORKE, "φⁿ|T(G) has a Li-Yorke pair for every n"),
                link(citation::GROUP_LI_YORKE, "h(φ) > 0, so φⁿ has a Li-Yorke pair for every n"),
            ],
            torus_rank: rank,
        });
    }
    Ok(LiYorkeReport {
        verdict: Verdict::SomePowerLiYorkeFree,
        citation: citation::GROUP_LI_YORKE.into(),
        chain: vec![
            link(citation::MAIN_THEOREM, "h(φ) = h(φ|T(G)) = 0: the torus action has all eigenvalues on the unit circle"),
            link(citation::TORUS_LI_YORKE, "some power of φ|T(G) has no Li-Yorke pair"),
            link(citation::QUOTIENT_TORUS_TRIVIAL, "T(G/T(G)) is trivial"),
            link(citation::TRIVIAL_TORUS_NO_LI_YORKE, "some power of the induced map on G/T(G) has no Li-Yorke pair"),
            link(citation::LI_YORKE_BUNDLE, "base and fiber combine: some power of φ has no Li-Yorke pair"),
        ],
        torus_rank: rank,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, rat};

    const TOL: f64 = 1e-9;

    fn v(x: &[i64]) -> Vec<Rational> {
        x.iter().map(|&a| int(a)).collect()
    }

    fn q(rows: &[&[i64]]) -> MatrixQ {
        MatrixQ::from_i64(rows).unwrap()
    }

    fn group(a: LieAlgebra, logs: &[&[i64]]) -> PresentedGroup {
        PresentedGroup::new("test", a, logs.iter().map(|w| v(w)).collect()).unwrap()
    }

    fn cstar() -> PresentedGroup {
        group(LieAlgebra::abelian(2), &[&[0, 1]])
    }

    #[test]
    fn presentation_examples() {
        let e2 = PresentedGroup {
            name: "e2".into(),
            algebra: LieAlgebra::euclidean(),
            lattice_logs: vec![v(&[1, 0, 0])],
        };
        assert!(validate_presentation(&e2).is_valid());
        let heis = PresentedGroup {
            name: "h".into(),
            algebra: LieAlgebra::heisenberg(),
            lattice_logs: vec![v(&[1, 0, 0])],
        };
        let report = validate_presentation(&heis);
        assert!(matches!(report.issues[0], PresentationIssue::NotSemisimple { index: 0, .. }));
        assert!(validate_presentation(&cstar()).is_valid());
    }

    #[test]
    fn presentation_rejects_bad_spectrum_and_dependence() {
        // ad(2H) has eigenvalues 0, ±2i: fine. ad(H/2) has ±i/2: not in iℤ.
        let ok = PresentedGroup {
            name: "e2".into(),
            algebra: LieAlgebra::euclidean(),
            lattice_logs: vec![v(&[2, 0, 0])],
        };
        assert!(validate_presentation(&ok).is_valid());
        let half = PresentedGroup {
            lattice_logs: vec![vec![rat(1, 2), int(0), int(0)]],
            ..ok.clone()
        };
        assert!(matches!(
            validate_presentation(&half).issues[0],
            PresentationIssue::SpectrumNotImaginaryInteger { .. }
        ));
        // ax+b: ad(H) has real eigenvalue 1.
        let real = PresentedGroup {
            name: "axb".into(),
            algebra: LieAlgebra::affine_line(),
            lattice_logs: vec![v(&[1, 0])],
        };
        assert!(!validate_presentation(&real).is_valid());
        let dep = PresentedGroup {
            name: "t".into(),
            algebra: LieAlgebra::abelian(2),
            lattice_logs: vec![v(&[1, 0]), v(&[2, 0])],
        };
        assert_eq!(validate_presentation(&dep).issues, vec![PresentationIssue::LinearlyDependent]);
    }

    #[test]
    fn endomorphism_examples() {
        let g = cstar();
        let e = validate_endomorphism(&g, &q(&[&[2, 0], &[0, 2]])).unwrap();
        assert_eq!(e.lattice_action, MatrixZ::from_i64(&[&[2]]).unwrap());
        let half = MatrixQ::from_rows(vec![vec![int(2), int(0)], vec![int(0), rat(1, 2)]]).unwrap();
        assert!(matches!(
            validate_endomorphism(&g, &half),
            Err(Error::LatticeNotPreserved { index: 0, .. })
        ));
        let e = validate_endomorphism(&g, &MatrixQ::identity(2)).unwrap();
        assert!(e.lattice_action.is_identity());
        let h = group(LieAlgebra::heisenberg(), &[&[0, 0, 1]]);
        // X ↦ 2X, Y ↦ Y, Z ↦ Z breaks [X, Y] = Z.
        assert_eq!(
            validate_endomorphism(&h, &q(&[&[2, 0, 0], &[0, 1, 0], &[0, 0, 1]])),
            Err(Error::NotEndomorphism(0, 1))
        );
    }

    #[test]
    fn eventual_image_examples() {
        let g = group(LieAlgebra::abelian(2), &[]);
        let e = validate_endomorphism(&g, &q(&[&[2, 0], &[0, 0]])).unwrap();
        assert_eq!(
            eventual_image(&g, &e).unwrap(),
            SubspaceBasis::from_vectors(2, &[v(&[1, 0])]).unwrap()
        );
        let e = validate_endomorphism(&g, &q(&[&[0, 1], &[0, 0]])).unwrap();
        assert!(eventual_image(&g, &e).unwrap().is_zero());
        let e = validate_endomorphism(&g, &q(&[&[1, 1], &[0, 1]])).unwrap();
        assert_eq!(eventual_image(&g, &e).unwrap(), SubspaceBasis::full(2));
    }

    #[test]
    fn toral_lattice_examples() {
        assert_eq!(toral_lattice(&cstar()).unwrap().lattice.generators(), &[v(&[0, 1])]);
        assert!(toral_lattice(&group(LieAlgebra::abelian(2), &[])).unwrap().is_trivial());
        assert!(toral_lattice(&group(LieAlgebra::euclidean(), &[&[1, 0, 0]])).unwrap().is_trivial());
        let h = group(LieAlgebra::heisenberg(), &[&[0, 0, 1]]);
        assert_eq!(toral_lattice(&h).unwrap().lattice.generators(), &[v(&[0, 0, 1])]);
    }

    fn entropy_of(g: &PresentedGroup, d: &MatrixQ) -> AnalysisReport {
        let e = validate_endomorphism(g, d).unwrap();
        topological_entropy(g, &e, TOL).unwrap()
    }

    #[test]
    fn pipeline_examples() {
        let ln2 = 2f64.ln();
        let sq = q(&[&[2, 0], &[0, 2]]);
        let t2 = group(LieAlgebra::abelian(2), &[&[1, 0], &[0, 1]]);
        assert!((entropy_of(&t2, &sq).entropy.value - 2.0 * ln2).abs() < TOL);
        let r2 = entropy_of(&group(LieAlgebra::abelian(2), &[]), &sq);
        assert!(r2.entropy.exact_zero && r2.entropy.value == 0.0);
        let c = entropy_of(&cstar(), &sq);
        assert!((c.entropy.value - ln2).abs() < TOL);
        assert!((c.bowen_bound.value - 2.0 * ln2).abs() < TOL);
        let e2 = group(LieAlgebra::euclidean(), &[&[1, 0, 0]]);
        let r = entropy_of(&e2, &q(&[&[1, 0, 0], &[0, 3, -4], &[0, 4, 3]]));
        assert!(r.entropy.exact_zero);
        assert_eq!(r.li_yorke.unwrap().citation, citation::TRIVIAL_TORUS_NO_LI_YORKE);
        let h = group(LieAlgebra::heisenberg(), &[&[0, 0, 1]]);
        let r = entropy_of(&h, &q(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 2]]));
        assert!((r.entropy.value - ln2).abs() < TOL);
        assert_eq!(r.torus.action.unwrap().matrix(), &MatrixZ::from_i64(&[&[2]]).unwrap());
    }

    #[test]
    fn non_surjective_pipeline_uses_the_eventual_image() {
        let t2 = group(LieAlgebra::abelian(2), &[&[1, 0], &[0, 1]]);
        let r = entropy_of(&t2, &q(&[&[3, 0], &[0, 0]]));
        assert!((r.entropy.value - 3f64.ln()).abs() < TOL);
        assert!(r.li_yorke.is_none());
        let e = validate_endomorphism(&t2, &q(&[&[3, 0], &[0, 0]])).unwrap();
        assert!(matches!(li_yorke_report(&t2, &e), Err(Error::HypothesisNotMet { .. })));
    }

    #[test]
    fn finite_order_examples() {
        let e2 = group(LieAlgebra::euclidean(), &[&[1, 0, 0]]);
        let rot = validate_endomorphism(&e2, &q(&[&[1, 0, 0], &[0, 1, -2], &[0, 2, 1]])).unwrap();
        assert_eq!(check_toral_induced_finite_order(&e2, &rot).unwrap().order, 1);
        let refl = validate_endomorphism(&e2, &q(&[&[-1, 0, 0], &[0, 1, 2], &[0, 2, -1]])).unwrap();
        assert_eq!(check_toral_induced_finite_order(&e2, &refl).unwrap().order, 2);
        let h = group(LieAlgebra::heisenberg(), &[&[0, 0, 1]]);
        let id = validate_endomorphism(&h, &MatrixQ::identity(3)).unwrap();
        assert!(matches!(
            check_toral_induced_finite_order(&h, &id),
            Err(Error::HypothesisNotMet { .. })
        ));
    }

    #[test]
    fn quotient_by_torus_examples() {
        let r = quotient_by_torus(&cstar()).unwrap();
        assert_eq!(r.dim(), 1);
        assert!(r.lattice_logs.is_empty());
        let e2 = group(LieAlgebra::euclidean(), &[&[1, 0, 0]]);
        let same = quotient_by_torus(&e2).unwrap();
        assert_eq!(same.algebra, e2.algebra);
        assert_eq!(same.lattice_logs, e2.lattice_logs);
        let t2 = group(LieAlgebra::abelian(2), &[&[1, 0], &[0, 1]]);
        assert_eq!(quotient_by_torus(&t2).unwrap().dim(), 0);
    }

    #[test]
    fn li_yorke_examples() {
        let t2 = group(LieAlgebra::abelian(2), &[&[1, 0], &[0, 1]]);
        let sq = validate_endomorphism(&t2, &q(&[&[2, 0], &[0, 2]])).unwrap();
        assert_eq!(li_yorke_report(&t2, &sq).unwrap().verdict, Verdict::LiYorkeAllPowers);
        let shear = validate_endomorphism(&t2, &q(&[&[1, 1], &[0, 1]])).unwrap();
        let r = li_yorke_report(&t2, &shear).unwrap();
        assert_eq!(r.verdict, Verdict::SomePowerLiYorkeFree);
        assert_eq!(r.chain.len(), 5);
    }
}
