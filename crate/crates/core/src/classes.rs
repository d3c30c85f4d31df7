//! Weight vectors and divisor classes in the tautological basis.
//!
//! A weight vector `(n, m, k)` stands for `n` marked points of weight `1/k`
//! and `m` of weight 1. Divisor classes are exact coefficient records over
//! `psi_sigma`, the per-section `psi_tau_j`, the collision divisor
//! `delta_s`, the nodal boundary `delta`, and the aggregated nodal boundary
//! divisors `Delta_{i,j}`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rational::{self, int, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightVector {
    n: u32,
    m: u32,
    k: u32,
}

impl WeightVector {
    /// Validates `m + n/k > 2`, `k >= 1`, `n, m >= 0`.
    pub fn new(n: i64, m: i64, k: i64) -> Result<Self> {
        let bad = |reason: &str| Error::InvalidWeights {
            n,
            m,
            k,
            reason: reason.to_string(),
        };
        if k < 1 {
            return Err(bad("k must be at least 1"));
        }
        if n < 0 || m < 0 {
            return Err(bad("counts must be non-negative"));
        }
        if n > i64::from(u32::MAX) || m > i64::from(u32::MAX) || k > i64::from(u32::MAX) {
            return Err(bad("counts too large"));
        }
        // m + n/k > 2  <=>  m*k + n > 2k
        if m * k + n <= 2 * k {
            return Err(bad("need m + n/k > 2"));
        }
        Ok(WeightVector {
            n: n as u32,
            m: m as u32,
            k: k as u32,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Total weight `m + n/k`.
    pub fn total_weight(&self) -> Rational {
        int(self.m.into()) + rational::q(self.n.into(), self.k.into())
    }

    /// Dimension of the moduli space, `n + m - 3`.
    pub fn dimension(&self) -> i64 {
        i64::from(self.n) + i64::from(self.m) - 3
    }

    /// Same counts, different `k`, validated.
    pub fn with_k(&self, k: u32) -> Result<Self> {
        Self::new(self.n.into(), self.m.into(), k.into())
    }

    /// `r1` light and `r2` heavy points carry weight `> 1`.
    pub fn side_is_heavy(&self, r1: u32, r2: u32) -> bool {
        // r1/k + r2 > 1  <=>  r1 + r2*k > k
        u64::from(r1) + u64::from(r2) * u64::from(self.k) > u64::from(self.k)
    }

    /// Both sides of a split carry weight `> 1`: the split is a nodal
    /// boundary divisor.
    pub fn split_is_admissible(&self, r1: u32, r2: u32) -> bool {
        r1 <= self.n
            && r2 <= self.m
            && self.side_is_heavy(r1, r2)
            && self.side_is_heavy(self.n - r1, self.m - r2)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.n, self.m, self.k)
    }
}

/// Key of an aggregated nodal boundary divisor `Delta_{i,j}`: one side of the
/// node carries `i` light and `j` heavy points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoundaryKey {
    pub i: u32,
    pub j: u32,
}

impl BoundaryKey {
    /// Canonical representative of the split `(i, j) | (n-i, m-j)`: the
    /// lexicographically smaller side. Does not check admissibility.
    pub fn canonical(i: u32, j: u32, w: &WeightVector) -> BoundaryKey {
        let other = (w.n - i.min(w.n), w.m - j.min(w.m));
        if (i, j) <= other {
            BoundaryKey { i, j }
        } else {
            BoundaryKey {
                i: other.0,
                j: other.1,
            }
        }
    }

    /// Canonical key if the split is a boundary divisor of `w`.
    pub fn admissible(i: u32, j: u32, w: &WeightVector) -> Option<BoundaryKey> {
        w.split_is_admissible(i, j)
            .then(|| BoundaryKey::canonical(i, j, w))
    }

    pub fn is_valid_for(&self, w: &WeightVector) -> bool {
        w.split_is_admissible(self.i, self.j) && BoundaryKey::canonical(self.i, self.j, w) == *self
    }

    /// All admissible canonical keys of `w`.
    pub fn all(w: &WeightVector) -> Vec<BoundaryKey> {
        let mut keys = Vec::new();
        for i in 0..=w.n {
            for j in 0..=w.m {
                if let Some(key) = BoundaryKey::admissible(i, j, w) {
                    if key == (BoundaryKey { i, j }) {
                        keys.push(key);
                    }
                }
            }
        }
        keys
    }
}

impl fmt::Display for BoundaryKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.i, self.j)
    }
}

#[derive(Debug, Clone)]
pub struct DivisorClass {
    ambient: WeightVector,
    pub psi_sigma: Rational,
    /// One entry per weight-1 section; empty when `m = 0`.
    pub psi_tau: Vec<Rational>,
    pub delta_s: Rational,
    pub delta: Rational,
    boundary: BTreeMap<BoundaryKey, Rational>,
}

impl DivisorClass {
    pub fn zero(ambient: WeightVector) -> Self {
        DivisorClass {
            ambient,
            psi_sigma: Rational::zero(),
            psi_tau: vec![Rational::zero(); ambient.m as usize],
            delta_s: Rational::zero(),
            delta: Rational::zero(),
            boundary: BTreeMap::new(),
        }
    }

    /// `D_k(c) = c psi_sigma + (2c - 1) delta_s + psi_tau - delta`.
    pub fn dk(ambient: WeightVector, c: &Rational) -> Self {
        DivisorClass {
            ambient,
            psi_sigma: c.clone(),
            psi_tau: vec![Rational::one(); ambient.m as usize],
            delta_s: c * int(2) - int(1),
            delta: -Rational::one(),
            boundary: BTreeMap::new(),
        }
    }

    pub fn ambient(&self) -> &WeightVector {
        &self.ambient
    }

    pub fn boundary(&self) -> &BTreeMap<BoundaryKey, Rational> {
        &self.boundary
    }

    /// Coefficient of `Delta_{key}`; zero when absent.
    pub fn boundary_coeff(&self, key: &BoundaryKey) -> Rational {
        self.boundary.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    /// Sets the coefficient of `Delta_{i,j}` (any representative of the split).
    pub fn set_boundary(&mut self, i: u32, j: u32, coeff: Rational) -> Result<()> {
        let key = BoundaryKey::admissible(i, j, &self.ambient).ok_or_else(|| {
            Error::UnsupportedCoefficient(format!(
                "Delta_{{{i},{j}}} is not a boundary divisor of {}",
                self.ambient
            ))
        })?;
        self.boundary.insert(key, coeff);
        Ok(())
    }

    /// Adds to the coefficient of `Delta_{key}`, keeping the entry even when
    /// the sum is zero.
    pub(crate) fn add_boundary(&mut self, key: BoundaryKey, coeff: &Rational) {
        let entry = self.boundary.entry(key).or_insert_with(Rational::zero);
        *entry += coeff;
    }

    pub fn has_nonzero_boundary(&self) -> bool {
        self.boundary.values().any(|v| !v.is_zero())
    }

    /// The common `psi_tau` coefficient, if all entries agree (zero for `m = 0`).
    pub fn psi_tau_aggregate(&self) -> Option<Rational> {
        match self.psi_tau.split_first() {
            None => Some(Rational::zero()),
            Some((first, rest)) => rest.iter().all(|x| x == first).then(|| first.clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.psi_sigma.is_zero()
            && self.psi_tau.iter().all(Zero::is_zero)
            && self.delta_s.is_zero()
            && self.delta.is_zero()
            && !self.has_nonzero_boundary()
    }

    pub fn scaled(&self, factor: &Rational) -> Self {
        DivisorClass {
            ambient: self.ambient,
            psi_sigma: &self.psi_sigma * factor,
            psi_tau: self.psi_tau.iter().map(|x| x * factor).collect(),
            delta_s: &self.delta_s * factor,
            delta: &self.delta * factor,
            boundary: self
                .boundary
                .iter()
                .map(|(k, v)| (*k, v * factor))
                .collect(),
        }
    }

    fn add_assign_scaled(&mut self, other: &DivisorClass, factor: &Rational) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(
                self.ambient.to_string(),
                other.ambient.to_string(),
            ));
        }
        self.psi_sigma += &other.psi_sigma * factor;
        for (a, b) in self.psi_tau.iter_mut().zip(&other.psi_tau) {
            *a += b * factor;
        }
        self.delta_s += &other.delta_s * factor;
        self.delta += &other.delta * factor;
        for (key, v) in &other.boundary {
            self.add_boundary(*key, &(v * factor));
        }
        Ok(())
    }

    /// Exact linear combination `sum lambda_i D_i`. An empty list has no
    /// ambient space and is rejected.
    pub fn combine(terms: &[(Rational, &DivisorClass)]) -> Result<DivisorClass> {
        let (_, first) = terms.first().ok_or_else(|| {
            Error::InvalidCoefficients("empty linear combination".to_string())
        })?;
        let mut acc = DivisorClass::zero(first.ambient);
        for (lambda, class) in terms {
            acc.add_assign_scaled(class, lambda)?;
        }
        Ok(acc)
    }

    /// Flat `key=value` record (see the crate README for the format).
    pub fn to_record(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("n={}\nm={}\nk={}\n", self.ambient.n, self.ambient.m, self.ambient.k));
        out.push_str(&format!("psi_sigma={}\n", self.psi_sigma));
        for (j, v) in self.psi_tau.iter().enumerate() {
            out.push_str(&format!("psi_tau[{}]={}\n", j + 1, v));
        }
        out.push_str(&format!("delta_s={}\n", self.delta_s));
        out.push_str(&format!("delta={}\n", self.delta));
        for (key, v) in &self.boundary {
            out.push_str(&format!("boundary[{},{}]={}\n", key.i, key.j, v));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let boundary: serde_json::Map<String, Value> = self
            .boundary
            .iter()
            .map(|(k, v)| (k.to_string(), Value::String(v.to_string())))
            .collect();
        json!({
            "n": self.ambient.n,
            "m": self.ambient.m,
            "k": self.ambient.k,
            "psi_sigma": self.psi_sigma.to_string(),
            "psi_tau": self.psi_tau.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "delta_s": self.delta_s.to_string(),
            "delta": self.delta.to_string(),
            "boundary": boundary,
        })
    }
}

impl PartialEq for DivisorClass {
    /// Componentwise equality; absent boundary keys count as zero.
    fn eq(&self, other: &Self) -> bool {
        if self.ambient != other.ambient
            || self.psi_sigma != other.psi_sigma
            || self.psi_tau != other.psi_tau
            || self.delta_s != other.delta_s
            || self.delta != other.delta
        {
            return false;
        }
        self.boundary
            .keys()
            .chain(other.boundary.keys())
            .all(|key| self.boundary_coeff(key) == other.boundary_coeff(key))
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_record())
    }
}

impl FromStr for DivisorClass {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut fields: Vec<(String, String)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Parse(format!("line {}: expected key=value, got {line:?}", lineno + 1))
            })?;
            fields.push((key.trim().to_string(), value.trim().to_string()));
        }
        let lookup = |name: &str| -> Result<i64> {
            let (_, v) = fields
                .iter()
                .find(|(k, _)| k == name)
                .ok_or_else(|| Error::Parse(format!("missing key {name}")))?;
            v.parse::<i64>()
                .map_err(|_| Error::Parse(format!("{name}: not an integer: {v:?}")))
        };
        let ambient = WeightVector::new(lookup("n")?, lookup("m")?, lookup("k")?)?;
        let mut class = DivisorClass::zero(ambient);
        for (key, value) in &fields {
            match key.as_str() {
                "n" | "m" | "k" => {}
                "psi_sigma" => class.psi_sigma = rational::parse(value)?,
                "delta_s" => class.delta_s = rational::parse(value)?,
                "delta" => class.delta = rational::parse(value)?,
                other => {
                    if let Some(idx) = other
                        .strip_prefix("psi_tau[")
                        .and_then(|s| s.strip_suffix(']'))
                    {
                        let j: usize = idx
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad index in {other}")))?;
                        if j == 0 || j > class.psi_tau.len() {
                            return Err(Error::Parse(format!(
                                "{other}: index out of range 1..={}",
                                class.psi_tau.len()
                            )));
                        }
                        class.psi_tau[j - 1] = rational::parse(value)?;
                    } else if let Some(idx) = other
                        .strip_prefix("boundary[")
                        .and_then(|s| s.strip_suffix(']'))
                    {
                        let (i, j) = idx
                            .split_once(',')
                            .ok_or_else(|| Error::Parse(format!("bad key {other}")))?;
                        let i: u32 = i
                            .trim()
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad key {other}")))?;
                        let j: u32 = j
                            .trim()
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad key {other}")))?;
                        class.set_boundary(i, j, rational::parse(value)?)?;
                    } else {
                        return Err(Error::Parse(format!("unknown key {other}")));
                    }
                }
            }
        }
        Ok(class)
    }
}

/// `K + alpha*Delta = psi + (alpha - 2) Delta` on the unweighted space, with
/// its normalization `c psi - Delta`, `c = 1/(2 - alpha)`.
#[derive(Debug, Clone, PartialEq)]
pub struct LogCanonical {
    pub class: DivisorClass,
    pub c: Rational,
    pub normalized: DivisorClass,
}

pub fn log_canonical_class(n: u32, alpha: &Rational) -> Result<LogCanonical> {
    if alpha < &Rational::zero() || alpha > &Rational::one() {
        return Err(Error::AlphaOutOfRange(alpha.to_string()));
    }
    let ambient = WeightVector::new(n.into(), 0, 1)?;
    let mut class = DivisorClass::zero(ambient);
    class.psi_sigma = Rational::one();
    class.delta = alpha - int(2);
    let c = alpha_to_c(alpha)?;
    let normalized = class.scaled(&c);
    Ok(LogCanonical {
        class,
        c,
        normalized,
    })
}

/// `c = 1/(2 - alpha)`.
pub fn alpha_to_c(alpha: &Rational) -> Result<Rational> {
    let denom = int(2) - alpha;
    if denom.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(denom.recip())
}

/// `alpha = 2 - 1/c`.
pub fn c_to_alpha(c: &Rational) -> Result<Rational> {
    if c.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(int(2) - c.recip())
}
