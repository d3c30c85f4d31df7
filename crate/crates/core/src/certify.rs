//! Positivity certificates for `D_k(c)` on `M_{0,(n,m,k)}`.
//!
//! A curve either has a generically smooth fiber, or it lies in a boundary
//! stratum where `psi_sigma`, `delta_s` and `psi_tau - delta` restrict
//! factor by factor. The certifier therefore enumerates every boundary
//! factor `(n', m'+1, k)` reachable from `(n, m, k)` and checks each with the
//! drop functions.
//!
//! Three routes are used:
//!
//! * `classical` (`k = 1`): no collisions are possible, so a nonconstant
//!   family has a singular fiber and positive drops suffice. The free
//!   parameter `b` is chosen to maximize the smallest drop.
//! * `functoriality` (`c = (k+1)/(2k)`): `D_k(c)` pulls back to `D_{k-1}(c)`
//!   with no exceptional term, so the certificate for `k-1` at the same `c`
//!   carries over.
//! * `convex` (`(k+2)/(2k+2) <= c < (k+1)/(2k)`): per stratum, `D_k(c)` is a
//!   convex combination `mu D_k(c0) + (1 - mu) D_k((k+1)/(2k))` with `c0`
//!   from the threshold table. The effective drops are `mu H_{c0}`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::classes::{BoundaryKey, WeightVector};
use crate::error::{Error, Result};
use crate::positivity::{
    admissible_pairs, ample_interval, c0_lower, drop_value, representable, substitution,
    CoefficientVector, DropEvaluation,
};
use crate::rational::{self, int, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Verdict {
    StrictlyPositive,
    NonnegativeZeroCharacterized,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::StrictlyPositive => "strictly_positive",
            Verdict::NonnegativeZeroCharacterized => "nonnegative_zero_characterized",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Generic,
    Classical,
    Functoriality,
    Convex,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Generic => "generic",
            Route::Classical => "classical",
            Route::Functoriality => "functoriality",
            Route::Convex => "convex",
        })
    }
}

/// How one boundary factor was checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumRecord {
    pub weights: WeightVector,
    pub route: Route,
    pub a: Rational,
    pub b: Rational,
    /// The comparison point of the convex route.
    pub c0: Option<Rational>,
    pub mu: Option<Rational>,
    /// Effective drops over the admissible pairs, in lexicographic order.
    pub drops: Vec<DropEvaluation>,
    pub status: Verdict,
}

impl StratumRecord {
    /// Smallest effective drop, first pair among ties.
    pub fn min(&self) -> Option<&DropEvaluation> {
        self.drops.iter().fold(None, |best: Option<&DropEvaluation>, d| match best {
            Some(b) if b.value <= d.value => Some(b),
            _ => Some(d),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub verdict: Verdict,
    pub weights: WeightVector,
    pub c: Rational,
    pub route: Route,
    /// `(a, b)` used on the top space, when drops were evaluated there.
    pub a: Option<Rational>,
    pub b: Option<Rational>,
    /// Stratum and pair realizing the margin.
    pub witness: Option<(WeightVector, DropEvaluation)>,
    /// Smallest effective drop over every checked stratum; `None` when no
    /// stratum admits a singular fiber.
    pub margin: Option<Rational>,
    pub strata_checked: Vec<WeightVector>,
    pub zero_strata: Vec<WeightVector>,
    pub strata: Vec<StratumRecord>,
    /// The `k-1` certificate behind a functoriality step.
    pub endpoint: Option<Box<Certificate>>,
    pub notes: Vec<String>,
}

impl Certificate {
    pub fn report(&self) -> String {
        let opt = |x: &Option<Rational>| x.as_ref().map_or("-".to_string(), |v| v.to_string());
        let list = |ws: &[WeightVector]| {
            if ws.is_empty() {
                "-".to_string()
            } else {
                ws.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" ")
            }
        };
        let mut out = String::new();
        out.push_str(&format!("verdict\t{}\n", self.verdict));
        out.push_str(&format!(
            "weights\tn={}\tm={}\tk={}\n",
            self.weights.n(),
            self.weights.m(),
            self.weights.k()
        ));
        out.push_str(&format!("c\t{}\n", self.c));
        out.push_str(&format!("route\t{}\n", self.route));
        out.push_str(&format!("a\t{}\n", opt(&self.a)));
        out.push_str(&format!("b\t{}\n", opt(&self.b)));
        match &self.witness {
            Some((w, d)) => out.push_str(&format!(
                "witness\t{}\tr1={}\tr2={}\tvalue={}\n",
                w, d.r1, d.r2, d.value
            )),
            None => out.push_str("witness\t-\n"),
        }
        out.push_str(&format!(
            "margin\t{}\n",
            self.margin.as_ref().map_or("unbounded".to_string(), |m| m.to_string())
        ));
        out.push_str(&format!("strata\t{}\n", list(&self.strata_checked)));
        out.push_str(&format!("zero_strata\t{}\n", list(&self.zero_strata)));
        for s in &self.strata {
            out.push_str(&format!(
                "stratum\t{}\t{}\ta={}\tb={}\tmu={}\tmin={}\t{}\n",
                s.weights,
                s.route,
                s.a,
                s.b,
                opt(&s.mu),
                s.min().map_or("none".to_string(), |d| d.to_string()),
                s.status
            ));
        }
        if let Some(endpoint) = &self.endpoint {
            out.push_str(&format!(
                "endpoint\t{}\tc={}\t{}\n",
                endpoint.weights, endpoint.c, endpoint.verdict
            ));
        }
        for note in &self.notes {
            out.push_str(&format!("note\t{note}\n"));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let s = |x: &Rational| Value::String(x.to_string());
        let opt = |x: &Option<Rational>| x.as_ref().map_or(Value::Null, s);
        let ws = |list: &[WeightVector]| {
            list.iter()
                .map(|w| json!([w.n(), w.m(), w.k()]))
                .collect::<Vec<_>>()
        };
        json!({
            "verdict": self.verdict.to_string(),
            "n": self.weights.n(),
            "m": self.weights.m(),
            "k": self.weights.k(),
            "c": s(&self.c),
            "route": self.route.to_string(),
            "a": opt(&self.a),
            "b": opt(&self.b),
            "witness": self.witness.as_ref().map_or(Value::Null, |(w, d)| json!({
                "stratum": [w.n(), w.m(), w.k()],
                "r1": d.r1,
                "r2": d.r2,
                "value": s(&d.value),
            })),
            "margin": opt(&self.margin),
            "strata_checked": ws(&self.strata_checked),
            "zero_strata": ws(&self.zero_strata),
            "strata": self.strata.iter().map(|r| json!({
                "stratum": [r.weights.n(), r.weights.m(), r.weights.k()],
                "route": r.route.to_string(),
                "a": s(&r.a),
                "b": s(&r.b),
                "c0": opt(&r.c0),
                "mu": opt(&r.mu),
                "min": r.min().map_or(Value::Null, |d| json!({"r1": d.r1, "r2": d.r2, "value": s(&d.value)})),
                "status": r.status.to_string(),
            })).collect::<Vec<_>>(),
            "endpoint": self.endpoint.as_ref().map_or(Value::Null, |e| e.to_json()),
            "notes": self.notes,
        })
    }
}

/// Coefficients added to the drops at steps of each boundary type. Keys are
/// read in the stratum being checked; either representative of a split
/// matches.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Perturbation {
    pub entries: BTreeMap<BoundaryKey, Rational>,
    /// Applied to every key without an explicit entry.
    pub uniform: Rational,
}

impl Perturbation {
    pub fn uniform(value: Rational) -> Self {
        Perturbation {
            entries: BTreeMap::new(),
            uniform: value,
        }
    }

    pub fn single(i: u32, j: u32, value: Rational) -> Self {
        let mut p = Perturbation::default();
        p.entries.insert(BoundaryKey { i, j }, value);
        p
    }

    /// Parses `i,j=p/q`.
    pub fn parse_entry(text: &str) -> Result<(BoundaryKey, Rational)> {
        let bad = || Error::Parse(format!("expected i,j=p/q, got {text:?}"));
        let (key, value) = text.split_once('=').ok_or_else(bad)?;
        let (i, j) = key.split_once(',').ok_or_else(bad)?;
        let i: u32 = i.trim().parse().map_err(|_| bad())?;
        let j: u32 = j.trim().parse().map_err(|_| bad())?;
        Ok((BoundaryKey { i, j }, rational::parse(value)?))
    }

    pub fn is_zero(&self) -> bool {
        self.uniform.is_zero() && self.entries.values().all(Zero::is_zero)
    }

    /// Coefficient of the boundary divisor a step `(r1, r2)` of `w` adds a
    /// node to.
    pub fn at(&self, w: &WeightVector, r1: u32, r2: u32) -> Rational {
        let key = BoundaryKey::canonical(r1, r2, w);
        let other = BoundaryKey {
            i: w.n() - key.i,
            j: w.m() - key.j,
        };
        self.entries
            .get(&key)
            .or_else(|| self.entries.get(&other))
            .cloned()
            .unwrap_or_else(|| self.uniform.clone())
    }
}

/// All boundary factors reachable from `w`, including `w` itself.
pub fn boundary_strata(w: &WeightVector) -> Vec<WeightVector> {
    let mut seen = BTreeSet::new();
    let mut stack = vec![*w];
    while let Some(top) = stack.pop() {
        if !seen.insert(top) {
            continue;
        }
        let (n, m, k) = (top.n(), top.m(), top.k());
        for n1 in 0..=n {
            for m1 in 0..=m {
                let f1 = WeightVector::new(n1.into(), i64::from(m1) + 1, k.into());
                let f2 = WeightVector::new((n - n1).into(), i64::from(m - m1) + 1, k.into());
                if let (Ok(f1), Ok(f2)) = (f1, f2) {
                    stack.push(f1);
                    stack.push(f2);
                }
            }
        }
    }
    let mut out = vec![*w];
    out.extend(seen.into_iter().filter(|s| s != w));
    out
}

/// The `b` maximizing the smallest drop of `D_1(c)` on `w`, where the
/// collision divisor vanishes and `a = c - b/n` is forced.
fn classical_parameters(w: &WeightVector, c: &Rational) -> (Rational, Rational) {
    let (n, m) = (w.n(), w.m());
    let ni = int(n.into());
    let a_of = |b: &Rational| if n >= 1 { c - b / &ni } else { Rational::zero() };
    let fixed = |b: Rational| (a_of(&b), b);
    match (m, n) {
        (0, _) => return fixed(Rational::zero()),
        (1, _) => return fixed(Rational::one()),
        (_, 0) => return fixed(Rational::zero()),
        (_, 1) => return fixed(c.clone()),
        _ => {}
    }
    let eval = |b: &Rational, r1: u32, r2: u32| {
        let coeffs = CoefficientVector::from_ab(m, &a_of(b), b).expect("m >= 2");
        drop_value(w, &coeffs, r1, r2)
    };
    let lines: Vec<(Rational, Rational)> = admissible_pairs(w)
        .into_iter()
        .map(|(r1, r2)| {
            let t = eval(&Rational::zero(), r1, r2);
            let s = eval(&Rational::one(), r1, r2) - &t;
            (s, t)
        })
        .collect();
    if lines.is_empty() {
        return fixed(Rational::zero());
    }
    // All slopes of one strict sign: the envelope is unbounded, so take the
    // first b putting every drop at 1 or above.
    if lines.iter().all(|(s, _)| s.is_positive()) || lines.iter().all(|(s, _)| s.is_negative()) {
        let needed = lines.iter().map(|(s, t)| (int(1) - t) / s);
        let b = if lines[0].0.is_positive() {
            needed.max().expect("nonempty")
        } else {
            needed.min().expect("nonempty")
        };
        return fixed(b);
    }
    let mut candidates = vec![Rational::zero()];
    for (i, (s1, t1)) in lines.iter().enumerate() {
        for (s2, t2) in &lines[i + 1..] {
            if s1 != s2 {
                candidates.push((t2 - t1) / (s1 - s2));
            }
        }
    }
    let envelope = |b: &Rational| {
        lines
            .iter()
            .map(|(s, t)| s * b + t)
            .min()
            .expect("nonempty")
    };
    let mut best: Option<(Rational, Rational)> = None;
    for b in candidates {
        let value = envelope(&b);
        let better = match &best {
            None => true,
            Some((bb, bv)) => value > *bv || (value == *bv && b < *bb),
        };
        if better {
            best = Some((b, value));
        }
    }
    fixed(best.expect("nonempty").0)
}

/// Runs certifications and records which spaces had their drops evaluated.
#[derive(Debug, Default)]
pub struct Certifier {
    trace: Vec<WeightVector>,
}

impl Certifier {
    pub fn new() -> Self {
        Certifier::default()
    }

    /// Every space whose drops were minimized, in call order.
    pub fn trace(&self) -> &[WeightVector] {
        &self.trace
    }

    fn drops(&mut self, w: &WeightVector, coeffs: &CoefficientVector, scale: &Rational) -> Vec<DropEvaluation> {
        self.trace.push(*w);
        admissible_pairs(w)
            .into_iter()
            .map(|(r1, r2)| DropEvaluation {
                r1,
                r2,
                value: drop_value(w, coeffs, r1, r2) * scale,
            })
            .collect()
    }

    /// Positivity of `D_k(c)` on generically smooth families of `w` from the
    /// drops at the substituted `(a, b)`.
    pub fn certify_generic(&mut self, w: &WeightVector, c: &Rational) -> Certificate {
        let (a, b) = substitution(w.n(), c);
        let mut cert = Certificate {
            verdict: Verdict::Inconclusive,
            weights: *w,
            c: c.clone(),
            route: Route::Generic,
            a: Some(a.clone()),
            b: Some(b.clone()),
            witness: None,
            margin: None,
            strata_checked: vec![*w],
            zero_strata: Vec::new(),
            strata: Vec::new(),
            endpoint: None,
            notes: Vec::new(),
        };
        if !representable(w.m(), &b) {
            cert.notes.push(format!(
                "b = {b} does not reproduce D_k(c) when m = {}; the combination misses psi_tau",
                w.m()
            ));
            return cert;
        }
        let coeffs = CoefficientVector::from_ab(w.m(), &a, &b).expect("representable");
        let drops = self.drops(w, &coeffs, &Rational::one());
        let record = StratumRecord {
            weights: *w,
            route: Route::Generic,
            a,
            b,
            c0: None,
            mu: None,
            drops,
            status: Verdict::Inconclusive,
        };
        match record.min().cloned() {
            None => {
                cert.verdict = Verdict::NonnegativeZeroCharacterized;
                cert.zero_strata.push(*w);
                cert.notes.push(
                    "no admissible blow-down: every generically smooth family is a P^1-bundle and has degree 0"
                        .to_string(),
                );
            }
            Some(min) => {
                cert.verdict = if min.value.is_positive() {
                    Verdict::StrictlyPositive
                } else if min.value.is_zero() {
                    Verdict::NonnegativeZeroCharacterized
                } else {
                    Verdict::Inconclusive
                };
                if cert.verdict == Verdict::NonnegativeZeroCharacterized {
                    cert.zero_strata.push(*w);
                }
                cert.margin = Some(min.value.clone());
                cert.witness = Some((*w, min));
                cert.notes.push(
                    "families with no singular fiber have degree exactly 0".to_string(),
                );
            }
        }
        cert.strata.push(StratumRecord {
            status: cert.verdict,
            ..record
        });
        cert
    }

    /// Certifies that `D_k(c)` has positive degree on every curve of `w`, for
    /// `c` in the ample interval (lower endpoint included for `k >= 2`).
    pub fn certify_interval(&mut self, w: &WeightVector, c: &Rational) -> Result<Certificate> {
        self.check_range(w, c)?;
        if w.k() == 1 {
            return Ok(self.classical(w, c, &Perturbation::default(), false));
        }
        let hi = ample_interval(w.k()).hi.expect("k >= 2");
        if c == &hi {
            return self.functoriality(w, c);
        }
        self.convex(w, c, &Perturbation::default(), false)
    }

    /// As `certify_interval` for `D_k(c) + sum eps_{i,j} Delta_{i,j}`. A zero
    /// adjusted drop leaves the verdict at `nonnegative_zero_characterized`.
    pub fn perturbed_certify(
        &mut self,
        w: &WeightVector,
        c: &Rational,
        eps: &Perturbation,
    ) -> Result<Certificate> {
        if eps.is_zero() {
            return self.certify_interval(w, c);
        }
        self.check_range(w, c)?;
        if w.k() == 1 {
            return Ok(self.classical(w, c, eps, true));
        }
        let hi = ample_interval(w.k()).hi.expect("k >= 2");
        if c == &hi {
            let mut cert = self.functoriality(w, c)?;
            cert.verdict = Verdict::Inconclusive;
            cert.notes.push(
                "the endpoint certificate has no drop margin, so nonzero perturbations are not covered"
                    .to_string(),
            );
            return Ok(cert);
        }
        self.convex(w, c, eps, true)
    }

    fn check_range(&self, w: &WeightVector, c: &Rational) -> Result<()> {
        let interval = ample_interval(w.k());
        let ok = if w.k() == 1 {
            interval.contains(c)
        } else {
            c >= &interval.lo && interval.hi.as_ref().is_some_and(|hi| c <= hi)
        };
        if ok {
            Ok(())
        } else {
            let range = if w.k() == 1 {
                interval.to_string()
            } else {
                format!("[{}, {}]", interval.lo, interval.hi.expect("k >= 2"))
            };
            Err(Error::COutOfInterval {
                c: c.to_string(),
                range,
            })
        }
    }

    fn base_certificate(&self, w: &WeightVector, c: &Rational, route: Route) -> Certificate {
        Certificate {
            verdict: Verdict::Inconclusive,
            weights: *w,
            c: c.clone(),
            route,
            a: None,
            b: None,
            witness: None,
            margin: None,
            strata_checked: boundary_strata(w),
            zero_strata: Vec::new(),
            strata: Vec::new(),
            endpoint: None,
            notes: Vec::new(),
        }
    }

    /// Folds per-stratum records into the top-level certificate.
    fn finish(&self, mut cert: Certificate, records: Vec<StratumRecord>) -> Certificate {
        if let Some(top) = records.first() {
            cert.a = Some(top.a.clone());
            cert.b = Some(top.b.clone());
        }
        for r in &records {
            if let Some(min) = r.min() {
                let better = cert
                    .margin
                    .as_ref()
                    .is_none_or(|m| min.value < *m);
                if better {
                    cert.margin = Some(min.value.clone());
                    cert.witness = Some((r.weights, min.clone()));
                }
            }
            if r.status == Verdict::NonnegativeZeroCharacterized {
                cert.zero_strata.push(r.weights);
            }
        }
        cert.verdict = records
            .iter()
            .map(|r| r.status)
            .max()
            .unwrap_or(Verdict::StrictlyPositive);
        cert.strata = records;
        cert
    }

    fn classical(&mut self, w: &WeightVector, c: &Rational, eps: &Perturbation, perturbed: bool) -> Certificate {
        let mut cert = self.base_certificate(w, c, Route::Classical);
        let mut records = Vec::new();
        for s in cert.strata_checked.clone() {
            let (a, b) = classical_parameters(&s, c);
            let coeffs = CoefficientVector::from_ab(s.m(), &a, &b).expect("representable by construction");
            let mut drops = self.drops(&s, &coeffs, &Rational::one());
            if perturbed {
                for d in &mut drops {
                    d.value += eps.at(&s, d.r1, d.r2);
                }
            }
            let mut record = StratumRecord {
                weights: s,
                route: Route::Classical,
                a,
                b,
                c0: None,
                mu: None,
                drops,
                status: Verdict::StrictlyPositive,
            };
            record.status = match record.min() {
                None => Verdict::StrictlyPositive,
                Some(d) if d.value.is_positive() => Verdict::StrictlyPositive,
                Some(d) if d.value.is_zero() => Verdict::NonnegativeZeroCharacterized,
                Some(_) => Verdict::Inconclusive,
            };
            records.push(record);
        }
        cert.notes.push(
            "k = 1: distinct sections of a P^1-bundle family cannot meet, so a nonconstant family has a singular fiber"
                .to_string(),
        );
        self.finish(cert, records)
    }

    fn functoriality(&mut self, w: &WeightVector, c: &Rational) -> Result<Certificate> {
        let k = w.k();
        let lower = w.with_k(k - 1)?;
        let sub = self.certify_interval(&lower, c)?;
        let mut cert = self.base_certificate(w, c, Route::Functoriality);
        let zero_ok = sub
            .zero_strata
            .iter()
            .all(|s| s.n() == k && s.m() == 1 && s.k() == k - 1);
        cert.verdict = match sub.verdict {
            Verdict::StrictlyPositive => Verdict::StrictlyPositive,
            Verdict::NonnegativeZeroCharacterized if zero_ok => Verdict::StrictlyPositive,
            _ => Verdict::Inconclusive,
        };
        if cert.verdict == Verdict::StrictlyPositive {
            cert.margin = Some(Rational::zero());
            cert.notes.push(format!(
                "pulls back to D_{}({c}) on {lower} with exceptional coefficient 0; that class vanishes at most on curves contracted by the reduction",
                k - 1
            ));
            cert.notes.push(
                "margin 0: the endpoint is certified by pull-back, not by drops".to_string(),
            );
        } else {
            cert.notes.push(format!(
                "the certificate on {lower} is {} with zero strata outside the contracted shape",
                sub.verdict
            ));
        }
        cert.endpoint = Some(Box::new(sub));
        Ok(cert)
    }

    fn convex(&mut self, w: &WeightVector, c: &Rational, eps: &Perturbation, perturbed: bool) -> Result<Certificate> {
        let k = w.k();
        let hi = ample_interval(k).hi.expect("k >= 2");
        let endpoint = self.certify_interval(w, &hi)?;
        let endpoint_ok = endpoint.verdict == Verdict::StrictlyPositive;
        let mut cert = self.base_certificate(w, c, Route::Convex);
        let mut records = Vec::new();
        for s in cert.strata_checked.clone() {
            let c0 = c0_lower(&s).c0;
            let (a, b) = substitution(s.n(), &c0);
            let mu = (&hi - c) / (&hi - &c0);
            let coeffs = CoefficientVector::from_ab(s.m(), &a, &b)
                .expect("threshold values are representable");
            debug_assert!(representable(s.m(), &b));
            let mut drops = self.drops(&s, &coeffs, &mu);
            if perturbed {
                for d in &mut drops {
                    d.value += eps.at(&s, d.r1, d.r2);
                }
            }
            let mut record = StratumRecord {
                weights: s,
                route: Route::Convex,
                a,
                b,
                c0: Some(c0),
                mu: Some(mu.clone()),
                drops,
                status: Verdict::Inconclusive,
            };
            let min = record.min().map(|d| d.value.clone());
            let negative = min.as_ref().is_some_and(Signed::is_negative);
            let touches_zero = min.as_ref().is_some_and(Zero::is_zero);
            record.status = if negative {
                Verdict::Inconclusive
            } else if mu.is_one() {
                // c = c0: families without singular fibers have degree 0.
                Verdict::NonnegativeZeroCharacterized
            } else if !endpoint_ok {
                Verdict::Inconclusive
            } else if perturbed && touches_zero {
                Verdict::NonnegativeZeroCharacterized
            } else {
                Verdict::StrictlyPositive
            };
            records.push(record);
        }
        if !endpoint_ok {
            cert.notes.push(format!(
                "endpoint certificate at c = {hi} is {}",
                endpoint.verdict
            ));
        }
        cert.endpoint = Some(Box::new(endpoint));
        Ok(self.finish(cert, records))
    }
}

pub fn certify_generic(w: &WeightVector, c: &Rational) -> Certificate {
    Certifier::new().certify_generic(w, c)
}

pub fn certify_interval(w: &WeightVector, c: &Rational) -> Result<Certificate> {
    Certifier::new().certify_interval(w, c)
}

pub fn perturbed_certify(w: &WeightVector, c: &Rational, eps: &Perturbation) -> Result<Certificate> {
    Certifier::new().perturbed_certify(w, c, eps)
}
