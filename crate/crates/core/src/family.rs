//! One-parameter families of weighted stable curves as blow-down sequences.
//!
//! A family is recorded from its desingularized total space `C_0` down to a
//! ruled surface `C_N`. Step `i` contracts one (-1)-curve of `C_i` that meets
//! `r1` light and `r2` heavy sections. In concrete mode the steps name the
//! sections and the terminal self-intersections are given, so every level's
//! intersection matrix is computable. In abstract mode only the counts are
//! known, which is all the potential functions `F_*` need.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::classes::{BoundaryKey, DivisorClass, WeightVector};
use crate::error::{Error, Result};
use crate::positivity::CoefficientVector;
use crate::rational::{int, q, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlowdownStep {
    /// 1-based section indices met by the contracted curve.
    Concrete {
        sigma: BTreeSet<u32>,
        tau: BTreeSet<u32>,
    },
    Abstract { r1: u32, r2: u32 },
}

impl BlowdownStep {
    pub fn concrete(
        sigma: impl IntoIterator<Item = u32>,
        tau: impl IntoIterator<Item = u32>,
    ) -> Self {
        BlowdownStep::Concrete {
            sigma: sigma.into_iter().collect(),
            tau: tau.into_iter().collect(),
        }
    }

    /// `(r1, r2)`.
    pub fn counts(&self) -> (u32, u32) {
        match self {
            BlowdownStep::Concrete { sigma, tau } => (sigma.len() as u32, tau.len() as u32),
            BlowdownStep::Abstract { r1, r2 } => (*r1, *r2),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Concrete,
    Abstract,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyModel {
    weights: WeightVector,
    mode: Mode,
    steps: Vec<BlowdownStep>,
    final_e_sigma: Vec<i64>,
    final_e_tau: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub path: String,
    pub message: String,
}

impl Violation {
    fn new(path: impl Into<String>, message: impl Into<String>) -> Self {
        Violation {
            path: path.into(),
            message: message.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.path, self.message)
    }
}

/// Degrees of the tautological classes on the base curve `B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionReport {
    pub psi_sigma_b: Rational,
    pub psi_tau_b: Rational,
    pub delta_s_b: Rational,
    pub delta_b: Rational,
    /// Nodes per aggregated boundary divisor, one per blow-down step.
    pub boundary_counts: BTreeMap<BoundaryKey, u64>,
}

/// Values of `(F_Delta, F_sigma, F_tau, F_sigma_tau)` at one level, or the
/// drop between two consecutive levels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FValues {
    pub delta: Rational,
    pub sigma: Rational,
    pub tau: Rational,
    pub sigma_tau: Rational,
}

impl FValues {
    pub fn zero() -> Self {
        FValues {
            delta: Rational::zero(),
            sigma: Rational::zero(),
            tau: Rational::zero(),
            sigma_tau: Rational::zero(),
        }
    }

    pub fn minus(&self, other: &FValues) -> FValues {
        FValues {
            delta: &self.delta - &other.delta,
            sigma: &self.sigma - &other.sigma,
            tau: &self.tau - &other.tau,
            sigma_tau: &self.sigma_tau - &other.sigma_tau,
        }
    }

    fn add_assign(&mut self, other: &FValues) {
        self.delta += &other.delta;
        self.sigma += &other.sigma;
        self.tau += &other.tau;
        self.sigma_tau += &other.sigma_tau;
    }
}

/// Closed-form drops `F(i) - F(i+1)` at a step meeting `r1` light and `r2`
/// heavy sections. Denominators that vanish (`n <= 1`, `m <= 1`, `nm = 0`)
/// make the corresponding function identically zero.
pub fn step_drops(w: &WeightVector, r1: u32, r2: u32) -> FValues {
    let (n, m) = (i64::from(w.n()), i64::from(w.m()));
    let (r1, r2) = (i64::from(r1), i64::from(r2));
    FValues {
        delta: int(1),
        sigma: if n >= 2 {
            q(r1 * (n - r1), n - 1)
        } else {
            Rational::zero()
        },
        tau: if m >= 2 {
            q(r2 * (m - r2), m - 1)
        } else {
            Rational::zero()
        },
        sigma_tau: if n * m != 0 {
            q(r1 * (m - r2) + r2 * (n - r1), n * m)
        } else {
            Rational::zero()
        },
    }
}

pub type Matrix = Vec<Vec<i64>>;

impl FamilyModel {
    pub fn new_abstract(weights: WeightVector, steps: &[(u32, u32)]) -> Self {
        FamilyModel {
            weights,
            mode: Mode::Abstract,
            steps: steps
                .iter()
                .map(|&(r1, r2)| BlowdownStep::Abstract { r1, r2 })
                .collect(),
            final_e_sigma: Vec::new(),
            final_e_tau: Vec::new(),
        }
    }

    pub fn new_concrete(
        weights: WeightVector,
        steps: Vec<BlowdownStep>,
        final_e_sigma: Vec<i64>,
        final_e_tau: Vec<i64>,
    ) -> Self {
        FamilyModel {
            weights,
            mode: Mode::Concrete,
            steps,
            final_e_sigma,
            final_e_tau,
        }
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn steps(&self) -> &[BlowdownStep] {
        &self.steps
    }

    /// Number of blow-downs `N`.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn final_e_sigma(&self) -> &[i64] {
        &self.final_e_sigma
    }

    pub fn final_e_tau(&self) -> &[i64] {
        &self.final_e_tau
    }

    /// The same family forgetting which sections each step meets.
    pub fn abstraction(&self) -> FamilyModel {
        let counts: Vec<(u32, u32)> = self.steps.iter().map(BlowdownStep::counts).collect();
        FamilyModel::new_abstract(self.weights, &counts)
    }

    /// Structural problems that make the level matrices undefined.
    fn structural_violations(&self) -> Vec<Violation> {
        let w = &self.weights;
        let mut out = Vec::new();
        for (idx, step) in self.steps.iter().enumerate() {
            match (self.mode, step) {
                (Mode::Concrete, BlowdownStep::Abstract { .. }) => out.push(Violation::new(
                    format!("steps[{idx}]"),
                    "concrete family needs explicit section sets",
                )),
                (_, BlowdownStep::Concrete { sigma, tau }) => {
                    if let Some(bad) = sigma.iter().find(|&&s| s == 0 || s > w.n()) {
                        out.push(Violation::new(
                            format!("steps[{idx}].sigma"),
                            format!("index {bad} outside 1..={}", w.n()),
                        ));
                    }
                    if let Some(bad) = tau.iter().find(|&&t| t == 0 || t > w.m()) {
                        out.push(Violation::new(
                            format!("steps[{idx}].tau"),
                            format!("index {bad} outside 1..={}", w.m()),
                        ));
                    }
                }
                (Mode::Abstract, BlowdownStep::Abstract { r1, r2 }) => {
                    if *r1 > w.n() {
                        out.push(Violation::new(
                            format!("steps[{idx}].r1"),
                            format!("r1 = {r1} exceeds n = {}", w.n()),
                        ));
                    }
                    if *r2 > w.m() {
                        out.push(Violation::new(
                            format!("steps[{idx}].r2"),
                            format!("r2 = {r2} exceeds m = {}", w.m()),
                        ));
                    }
                }
            }
        }
        if self.mode == Mode::Concrete {
            if self.final_e_sigma.len() != w.n() as usize {
                out.push(Violation::new(
                    "final_e_sigma",
                    format!("expected {} entries, got {}", w.n(), self.final_e_sigma.len()),
                ));
            }
            if self.final_e_tau.len() != w.m() as usize {
                out.push(Violation::new(
                    "final_e_tau",
                    format!("expected {} entries, got {}", w.m(), self.final_e_tau.len()),
                ));
            }
            let mut parities = self
                .final_e_sigma
                .iter()
                .chain(&self.final_e_tau)
                .map(|e| e.rem_euclid(2));
            if let Some(first) = parities.next() {
                if parities.any(|p| p != first) {
                    out.push(Violation::new(
                        "final_e",
                        "terminal self-intersections must share one parity",
                    ));
                }
            }
        } else if !self.final_e_sigma.is_empty() || !self.final_e_tau.is_empty() {
            out.push(Violation::new(
                "final_e",
                "abstract family carries no terminal self-intersections",
            ));
        }
        out
    }

    /// Every violated invariant, each naming the offending step or entry.
    pub fn validate(&self) -> Vec<Violation> {
        let w = self.weights;
        let mut out = self.structural_violations();
        let structural_ok = out.is_empty();
        for (idx, step) in self.steps.iter().enumerate() {
            let (r1, r2) = step.counts();
            if r1 > w.n() || r2 > w.m() {
                continue;
            }
            if !w.side_is_heavy(r1, r2) {
                out.push(Violation::new(
                    format!("steps[{idx}]"),
                    format!(
                        "contracted component is unstable: r1/k + r2 = {} is not > 1",
                        q(r1.into(), w.k().into()) + int(r2.into())
                    ),
                ));
            }
            if !w.side_is_heavy(w.n() - r1, w.m() - r2) {
                out.push(Violation::new(
                    format!("steps[{idx}]"),
                    format!(
                        "complement is unstable: (n-r1)/k + (m-r2) = {} is not > 1",
                        q((w.n() - r1).into(), w.k().into()) + int((w.m() - r2).into())
                    ),
                ));
            }
        }
        if self.mode == Mode::Concrete && structural_ok {
            let mat = self.matrix_at(0);
            let n = w.n() as usize;
            for (a, row) in mat.iter().enumerate() {
                for (b, &value) in row.iter().enumerate().skip(a + 1) {
                    if (a >= n || b >= n) && value != 0 {
                        out.push(Violation::new(
                            format!("level0[{},{}]", self.section_name(a), self.section_name(b)),
                            format!("heavy section meets another section ({value})"),
                        ));
                    } else if a < n && b < n && value < 0 {
                        out.push(Violation::new(
                            format!("level0[{},{}]", self.section_name(a), self.section_name(b)),
                            format!("distinct sections meet negatively ({value})"),
                        ));
                    }
                }
            }
        }
        out
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let violations = self.validate();
        if violations.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidFamily(violations))
        }
    }

    fn section_name(&self, idx: usize) -> String {
        let n = self.weights.n() as usize;
        if idx < n {
            format!("sigma{}", idx + 1)
        } else {
            format!("tau{}", idx - n + 1)
        }
    }

    /// Matrix at `level`, assuming structural validity.
    fn matrix_at(&self, level: usize) -> Matrix {
        let n = self.weights.n() as usize;
        let e: Vec<i64> = self
            .final_e_sigma
            .iter()
            .chain(&self.final_e_tau)
            .copied()
            .collect();
        let size = e.len();
        let mut mat = vec![vec![0i64; size]; size];
        for a in 0..size {
            for b in 0..size {
                mat[a][b] = if a == b { e[a] } else { (e[a] + e[b]) / 2 };
            }
        }
        for step in self.steps[level..].iter().rev() {
            if let BlowdownStep::Concrete { sigma, tau } = step {
                let members: Vec<usize> = sigma
                    .iter()
                    .map(|&s| s as usize - 1)
                    .chain(tau.iter().map(|&t| n + t as usize - 1))
                    .collect();
                for &a in &members {
                    for &b in &members {
                        mat[a][b] -= 1;
                    }
                }
            }
        }
        mat
    }

    fn require_concrete(&self) -> Result<()> {
        match self.mode {
            Mode::Concrete => Ok(()),
            Mode::Abstract => Err(Error::ConcreteOnly),
        }
    }

    fn check_level(&self, level: usize) -> Result<()> {
        if level > self.len() {
            return Err(Error::LevelOutOfRange {
                level,
                max: self.len(),
            });
        }
        Ok(())
    }

    /// Intersection matrix of the section images on `C_level`, sections
    /// ordered `sigma_1..sigma_n, tau_1..tau_m`.
    pub fn level_matrix(&self, level: usize) -> Result<Matrix> {
        self.require_concrete()?;
        self.ensure_valid()?;
        self.check_level(level)?;
        Ok(self.matrix_at(level))
    }

    /// `-tau_j^2` on `C_0` for each heavy section.
    pub fn psi_tau_sections(&self) -> Result<Vec<Rational>> {
        let mat = self.level_matrix(0)?;
        let n = self.weights.n() as usize;
        Ok((n..mat.len()).map(|t| int(-mat[t][t])).collect())
    }

    fn boundary_counts(&self) -> BTreeMap<BoundaryKey, u64> {
        let mut counts = BTreeMap::new();
        for step in &self.steps {
            let (r1, r2) = step.counts();
            *counts
                .entry(BoundaryKey::canonical(r1, r2, &self.weights))
                .or_insert(0) += 1;
        }
        counts
    }

    pub fn intersection_numbers(&self) -> Result<IntersectionReport> {
        let mat = self.level_matrix(0)?;
        let n = self.weights.n() as usize;
        let size = mat.len();
        let psi_sigma: i64 = -(0..n).map(|a| mat[a][a]).sum::<i64>();
        let psi_tau: i64 = -(n..size).map(|a| mat[a][a]).sum::<i64>();
        let delta_s: i64 = (0..n)
            .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
            .map(|(a, b)| mat[a][b])
            .sum();
        Ok(IntersectionReport {
            psi_sigma_b: int(psi_sigma),
            psi_tau_b: int(psi_tau),
            delta_s_b: int(delta_s),
            delta_b: int(self.len() as i64),
            boundary_counts: self.boundary_counts(),
        })
    }

    fn telescoped(&self, level: usize) -> FValues {
        let mut acc = FValues::zero();
        for step in &self.steps[level..] {
            let (r1, r2) = step.counts();
            acc.add_assign(&step_drops(&self.weights, r1, r2));
        }
        acc
    }

    /// The potential functions from their defining sums of squares.
    fn squares_at(&self, level: usize) -> FValues {
        let mat = self.matrix_at(level);
        let n = self.weights.n() as usize;
        let size = mat.len();
        let sq = |a: usize, b: usize| mat[a][a] + mat[b][b] - 2 * mat[a][b];
        let pairs = |lo: usize, hi: usize| -> i64 {
            (lo..hi)
                .flat_map(|a| ((a + 1)..hi).map(move |b| (a, b)))
                .map(|(a, b)| sq(a, b))
                .sum()
        };
        let (ni, mi) = (n as i64, (size - n) as i64);
        FValues {
            delta: int((self.len() - level) as i64),
            sigma: if ni >= 2 {
                q(-pairs(0, n), ni - 1)
            } else {
                Rational::zero()
            },
            tau: if mi >= 2 {
                q(-pairs(n, size), mi - 1)
            } else {
                Rational::zero()
            },
            sigma_tau: if ni * mi != 0 {
                let total: i64 = (0..n)
                    .flat_map(|a| (n..size).map(move |b| (a, b)))
                    .map(|(a, b)| sq(a, b))
                    .sum();
                q(-total, ni * mi)
            } else {
                Rational::zero()
            },
        }
    }

    /// `(F_Delta, F_sigma, F_tau, F_sigma_tau)` at `level`. Concrete families
    /// are computed both by telescoping and from the level matrix, and the
    /// two must agree.
    pub fn f_values(&self, level: usize) -> Result<FValues> {
        self.ensure_valid()?;
        self.check_level(level)?;
        let telescoped = self.telescoped(level);
        if self.mode == Mode::Concrete {
            let direct = self.squares_at(level);
            if direct != telescoped {
                return Err(Error::ConcreteAbstractMismatch {
                    level,
                    detail: format!("{direct:?} vs {telescoped:?}"),
                });
            }
        }
        Ok(telescoped)
    }

    /// `f_values` at every level `0..=N`.
    pub fn f_series(&self) -> Result<Vec<FValues>> {
        (0..=self.len()).map(|i| self.f_values(i)).collect()
    }

    /// Degree of `cls` on the base curve.
    pub fn evaluate_class(&self, cls: &DivisorClass) -> Result<Rational> {
        if cls.ambient() != &self.weights {
            return Err(Error::AmbientMismatch(
                cls.ambient().to_string(),
                self.weights.to_string(),
            ));
        }
        let tau = cls.psi_tau_aggregate().ok_or(Error::UnequalTauCoefficients)?;
        let report = self.intersection_numbers()?;
        let mut value = &cls.psi_sigma * &report.psi_sigma_b
            + tau * &report.psi_tau_b
            + &cls.delta_s * &report.delta_s_b
            + &cls.delta * &report.delta_b;
        for (key, count) in &report.boundary_counts {
            value += cls.boundary_coeff(key) * int(*count as i64);
        }
        Ok(value)
    }

    /// `a F_sigma(0) + b F_sigma_tau(0) + ((m-b)/m) F_tau(0) - F_Delta(0)`.
    pub fn combination_value(&self, a: &Rational, b: &Rational) -> Result<Rational> {
        let coeffs = CoefficientVector::from_ab(self.weights.m(), a, b)?;
        Ok(coeffs.apply(&self.f_values(0)?))
    }

    /// Recovers the tautological degrees from the abstract counts via the
    /// boundary identities for `F(0)`. Needs `n >= 2` and `m >= 2`.
    pub fn reconstruct_intersections(&self) -> Result<IntersectionReport> {
        let (n, m) = (self.weights.n(), self.weights.m());
        if n < 2 || m < 2 {
            return Err(Error::Underdetermined(format!(
                "reconstruction needs n >= 2 and m >= 2, got n = {n}, m = {m}"
            )));
        }
        let f = self.f_values(0)?;
        let (n, m) = (int(n.into()), int(m.into()));
        let psi_tau_b = f.tau.clone();
        let psi_sigma_b = &n * (&f.sigma_tau - &psi_tau_b / &m);
        let delta_s_b = (&n - int(1)) / int(2) * (&f.sigma - &psi_sigma_b);
        Ok(IntersectionReport {
            psi_sigma_b,
            psi_tau_b,
            delta_s_b,
            delta_b: f.delta,
            boundary_counts: self.boundary_counts(),
        })
    }
}

/// Splits a class of shape `a psi_sigma + b delta_s + c (psi_tau - delta)`
/// into `(a, b, c)`.
fn functorial_shape(cls: &DivisorClass) -> Result<(Rational, Rational, Rational)> {
    if cls.has_nonzero_boundary() {
        return Err(Error::ShapeNotFunctorial(
            "boundary coefficients are present".to_string(),
        ));
    }
    let c = -cls.delta.clone();
    if cls.ambient().m() > 0 {
        let tau = cls.psi_tau_aggregate().ok_or_else(|| {
            Error::ShapeNotFunctorial("psi_tau coefficients differ".to_string())
        })?;
        if tau != c {
            return Err(Error::ShapeNotFunctorial(format!(
                "psi_tau coefficient {tau} is not minus the delta coefficient {}",
                cls.delta
            )));
        }
    }
    Ok((cls.psi_sigma.clone(), cls.delta_s.clone(), c))
}

/// Degree of `cls` on a curve spread over boundary factors: each part is a
/// family on one factor (other factors held fixed) and the class restricts
/// to the class of the same name on every factor.
pub fn stratified_evaluate(
    cls: &DivisorClass,
    parts: &[(WeightVector, FamilyModel)],
) -> Result<Rational> {
    let (a, b, c) = functorial_shape(cls)?;
    let mut total = Rational::zero();
    for (w, family) in parts {
        if w != family.weights() {
            return Err(Error::AmbientMismatch(
                w.to_string(),
                family.weights().to_string(),
            ));
        }
        let r = family.intersection_numbers()?;
        total += &a * &r.psi_sigma_b + &b * &r.delta_s_b + &c * (&r.psi_tau_b - &r.delta_b);
    }
    Ok(total)
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawStep {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    sigma: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    tau: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    r1: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    r2: Option<u32>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFamily {
    n: i64,
    m: i64,
    k: i64,
    mode: Mode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    final_e_sigma: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    final_e_tau: Option<Vec<i64>>,
    #[serde(default)]
    steps: Vec<RawStep>,
}

fn index_set(idx: usize, field: &str, values: Vec<u32>) -> Result<BTreeSet<u32>> {
    let len = values.len();
    let set: BTreeSet<u32> = values.into_iter().collect();
    if set.len() != len {
        return Err(Error::Parse(format!("steps[{idx}].{field}: repeated index")));
    }
    Ok(set)
}

impl FamilyModel {
    /// Reads the TOML family file format.
    pub fn from_toml_str(text: &str) -> Result<Self> {
        let raw: RawFamily = toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let weights = WeightVector::new(raw.n, raw.m, raw.k)?;
        let mut steps = Vec::with_capacity(raw.steps.len());
        for (idx, step) in raw.steps.into_iter().enumerate() {
            let parsed = match raw.mode {
                Mode::Concrete => {
                    if step.r1.is_some() || step.r2.is_some() {
                        return Err(Error::Parse(format!(
                            "steps[{idx}]: concrete steps list sigma/tau, not r1/r2"
                        )));
                    }
                    BlowdownStep::Concrete {
                        sigma: index_set(idx, "sigma", step.sigma.unwrap_or_default())?,
                        tau: index_set(idx, "tau", step.tau.unwrap_or_default())?,
                    }
                }
                Mode::Abstract => {
                    if step.sigma.is_some() || step.tau.is_some() {
                        return Err(Error::Parse(format!(
                            "steps[{idx}]: abstract steps give r1/r2, not sigma/tau"
                        )));
                    }
                    match (step.r1, step.r2) {
                        (Some(r1), Some(r2)) => BlowdownStep::Abstract { r1, r2 },
                        _ => {
                            return Err(Error::Parse(format!(
                                "steps[{idx}]: abstract steps need both r1 and r2"
                            )))
                        }
                    }
                }
            };
            steps.push(parsed);
        }
        let (final_e_sigma, final_e_tau) = match raw.mode {
            Mode::Concrete => (
                raw.final_e_sigma
                    .ok_or_else(|| Error::Parse("concrete family needs final_e_sigma".into()))?,
                raw.final_e_tau.unwrap_or_default(),
            ),
            Mode::Abstract => {
                if raw.final_e_sigma.is_some() || raw.final_e_tau.is_some() {
                    return Err(Error::Parse(
                        "abstract family takes no final_e_sigma/final_e_tau".into(),
                    ));
                }
                (Vec::new(), Vec::new())
            }
        };
        Ok(FamilyModel {
            weights,
            mode: raw.mode,
            steps,
            final_e_sigma,
            final_e_tau,
        })
    }

    pub fn to_toml_string(&self) -> String {
        let steps = self
            .steps
            .iter()
            .map(|step| match step {
                BlowdownStep::Concrete { sigma, tau } => RawStep {
                    sigma: Some(sigma.iter().copied().collect()),
                    tau: Some(tau.iter().copied().collect()),
                    r1: None,
                    r2: None,
                },
                BlowdownStep::Abstract { r1, r2 } => RawStep {
                    sigma: None,
                    tau: None,
                    r1: Some(*r1),
                    r2: Some(*r2),
                },
            })
            .collect();
        let concrete = self.mode == Mode::Concrete;
        let raw = RawFamily {
            n: self.weights.n().into(),
            m: self.weights.m().into(),
            k: self.weights.k().into(),
            mode: self.mode,
            final_e_sigma: concrete.then(|| self.final_e_sigma.clone()),
            final_e_tau: concrete.then(|| self.final_e_tau.clone()),
            steps,
        };
        toml::to_string(&raw).expect("family record always serializes")
    }
}
