//! The derived-parameter ledger.
//!
//! [`derive_and_validate`] fills every constant the recovery pipeline and its
//! analysis refer to, then evaluates each constraint between them. Violations
//! are reported by name and never abort: desk-scale instances sit far outside
//! the asymptotic regime and the pipeline still runs there.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Which of the three recovery variants is running.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgorithmType {
    RandomizedSublinear,
    RandomizedSubquadratic,
    DeterministicSuperquadratic,
}

impl AlgorithmType {
    pub const ALL: [AlgorithmType; 3] = [
        AlgorithmType::RandomizedSublinear,
        AlgorithmType::RandomizedSubquadratic,
        AlgorithmType::DeterministicSuperquadratic,
    ];

    pub fn is_randomized(self) -> bool {
        !matches!(self, AlgorithmType::DeterministicSuperquadratic)
    }

    pub fn short_name(self) -> &'static str {
        match self {
            AlgorithmType::RandomizedSublinear => "sublinear",
            AlgorithmType::RandomizedSubquadratic => "subquadratic",
            AlgorithmType::DeterministicSuperquadratic => "deterministic",
        }
    }
}

impl fmt::Display for AlgorithmType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for AlgorithmType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('_', "-").as_str() {
            "sublinear" | "randomized-sublinear" => Ok(AlgorithmType::RandomizedSublinear),
            "subquadratic" | "randomized-subquadratic" => Ok(AlgorithmType::RandomizedSubquadratic),
            "deterministic" | "deterministic-superquadratic" => {
                Ok(AlgorithmType::DeterministicSuperquadratic)
            }
            other => Err(Error::InvalidConfiguration(format!(
                "unknown algorithm type '{other}'"
            ))),
        }
    }
}

/// Matching threshold used by collision detection.
pub fn omega_for(algo: AlgorithmType, params: &DerivedParams) -> f64 {
    match algo {
        AlgorithmType::RandomizedSublinear => 0.0,
        AlgorithmType::RandomizedSubquadratic | AlgorithmType::DeterministicSuperquadratic => {
            params.beta
        }
    }
}

/// A named constraint of the parameter ledger.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Constraint {
    AlphaInit,
    EpsilonSet,
    VSet,
    Rho1,
    Rho2,
    V2,
    Rho2Alpha0,
    Alpha0Rho0,
    Median,
    VAlpha0,
    VSet1,
    SupportQ0,
    D0Sel,
    D1Sel,
    U2Log,
    U2Const,
    AlphaRange,
}

impl Constraint {
    pub const ALL: [Constraint; 17] = [
        Constraint::AlphaInit,
        Constraint::EpsilonSet,
        Constraint::VSet,
        Constraint::Rho1,
        Constraint::Rho2,
        Constraint::V2,
        Constraint::Rho2Alpha0,
        Constraint::Alpha0Rho0,
        Constraint::Median,
        Constraint::VAlpha0,
        Constraint::VSet1,
        Constraint::SupportQ0,
        Constraint::D0Sel,
        Constraint::D1Sel,
        Constraint::U2Log,
        Constraint::U2Const,
        Constraint::AlphaRange,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Constraint::AlphaInit => "alpha-init",
            Constraint::EpsilonSet => "epsilon-set",
            Constraint::VSet => "v-set",
            Constraint::Rho1 => "rho1",
            Constraint::Rho2 => "rho2",
            Constraint::V2 => "v2",
            Constraint::Rho2Alpha0 => "rho2-alpha0",
            Constraint::Alpha0Rho0 => "alpha0-rho0",
            Constraint::Median => "median",
            Constraint::VAlpha0 => "v-alpha0",
            Constraint::VSet1 => "v-set1",
            Constraint::SupportQ0 => "support-q0",
            Constraint::D0Sel => "d0-sel",
            Constraint::D1Sel => "d1-sel",
            Constraint::U2Log => "u2-log",
            Constraint::U2Const => "u2-const",
            Constraint::AlphaRange => "alpha-range",
        }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Fields a caller may pin; anything left `None` gets its default.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ParamOverrides {
    pub epsilon: Option<f64>,
    pub alpha: Option<f64>,
    pub rho0: Option<f64>,
    pub rho1: Option<f64>,
    pub rho2: Option<f64>,
    pub v: Option<usize>,
    pub u1: Option<usize>,
    pub u2: Option<usize>,
    pub alpha0: Option<f64>,
    pub d0: Option<f64>,
    pub d1: Option<f64>,
    pub gamma: Option<f64>,
    pub tau: Option<f64>,
    pub window_override: Option<usize>,
}

impl ParamOverrides {
    /// Fields set in `other` replace ours.
    pub fn merged_with(&self, other: &ParamOverrides) -> ParamOverrides {
        ParamOverrides {
            epsilon: other.epsilon.or(self.epsilon),
            alpha: other.alpha.or(self.alpha),
            rho0: other.rho0.or(self.rho0),
            rho1: other.rho1.or(self.rho1),
            rho2: other.rho2.or(self.rho2),
            v: other.v.or(self.v),
            u1: other.u1.or(self.u1),
            u2: other.u2.or(self.u2),
            alpha0: other.alpha0.or(self.alpha0),
            d0: other.d0.or(self.d0),
            d1: other.d1.or(self.d1),
            gamma: other.gamma.or(self.gamma),
            tau: other.tau.or(self.tau),
            window_override: other.window_override.or(self.window_override),
        }
    }
}

pub const DEFAULT_X: u32 = 10;
pub const DEFAULT_EPSILON: f64 = 0.05;
pub const DEFAULT_V: usize = 10;
pub const DEFAULT_U1: usize = 4;
pub const DEFAULT_D0: f64 = 2.0;
pub const DEFAULT_D1: f64 = 2.0;
pub const DEFAULT_GAMMA: f64 = 0.0;
pub const DEFAULT_TAU: f64 = 1.0;
pub const MIN_WINDOW: usize = 4;

/// The full constant ledger for one alphabet size and sequence length.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivedParams {
    pub t: usize,
    pub x: u32,
    /// Longest input sequence length; every `log n` is `log2(n)`.
    pub n: usize,
    pub epsilon: f64,
    /// `e^(-epsilon^2/3)`
    pub c: f64,
    pub rho0: f64,
    pub rho1: f64,
    pub rho2: f64,
    pub v: usize,
    pub u1: usize,
    pub u2: usize,
    pub alpha0: f64,
    pub alpha: f64,
    /// `2 alpha + 2 epsilon`
    pub beta: f64,
    /// `r(v)`
    pub r: f64,
    /// `q(v)`
    pub q0: f64,
    pub d0: f64,
    pub d1: f64,
    /// `ln(1/c) / 2`
    pub delta_c: f64,
    /// `1 / 2^x`
    pub varsigma0: f64,
    /// `phi(v) = (v + u1) * 2 c^v / (1 - c)`
    pub phi_v: f64,
    pub gamma: f64,
    pub tau: f64,
    pub window_override: Option<usize>,
    violations: Vec<Constraint>,
}

fn check_unit_open(name: &str, value: f64) -> Result<()> {
    if value > 0.0 && value < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidConfiguration(format!(
            "{name} must lie in (0, 1), got {value}"
        )))
    }
}

fn check_positive(name: &str, value: f64) -> Result<()> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidConfiguration(format!(
            "{name} must be positive, got {value}"
        )))
    }
}

/// Computes the ledger for alphabet size `t`, failure exponent `x` and
/// longest sequence length `n`, then records every violated constraint.
pub fn derive_and_validate(
    t: usize,
    x: u32,
    overrides: &ParamOverrides,
    n: usize,
) -> Result<DerivedParams> {
    if t < 2 {
        return Err(Error::InvalidConfiguration(format!(
            "alphabet size must be at least 2, got {t}"
        )));
    }
    if x < 1 {
        return Err(Error::InvalidConfiguration("x must be at least 1".into()));
    }
    if n < 4 {
        return Err(Error::InvalidConfiguration(format!(
            "sequence length must be at least 4, got {n}"
        )));
    }
    let tf = t as f64;
    let two_x = 2f64.powi(x as i32);

    let alpha = overrides.alpha.unwrap_or(0.0);
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::InvalidConfiguration(format!(
            "alpha must lie in [0, 1), got {alpha}"
        )));
    }
    let epsilon = overrides.epsilon.unwrap_or(DEFAULT_EPSILON);
    check_unit_open("epsilon", epsilon)?;
    let rho0 = overrides.rho0.unwrap_or((tf - 1.0) / (4.0 * tf));
    check_unit_open("rho0", rho0)?;
    let slack = 1.0 - (2.0 / (tf - 1.0) + 4.0 / two_x + 5.0 * epsilon);
    let rho1 = overrides.rho1.unwrap_or((slack / 2.0).clamp(1e-6, 0.999));
    check_unit_open("rho1", rho1)?;
    let rho2 = overrides.rho2.unwrap_or(rho1 / 2.0);
    check_unit_open("rho2", rho2)?;
    let v = overrides.v.unwrap_or(DEFAULT_V);
    if v < 1 {
        return Err(Error::InvalidConfiguration("v must be at least 1".into()));
    }
    let u1 = overrides.u1.unwrap_or(DEFAULT_U1);
    if u1 < 1 {
        return Err(Error::InvalidConfiguration("u1 must be at least 1".into()));
    }
    let log_n = (n as f64).log2();
    let u2 = overrides.u2.unwrap_or(log_n.log2().ceil().max(0.0) as usize);
    let alpha0 = overrides
        .alpha0
        .unwrap_or((rho2 / (4.0 * v as f64 - 3.0)).min(rho0) / 2.0);
    check_unit_open("alpha0", alpha0)?;
    let d0 = overrides.d0.unwrap_or(DEFAULT_D0);
    check_positive("d0", d0)?;
    let d1 = overrides.d1.unwrap_or(DEFAULT_D1);
    check_positive("d1", d1)?;
    let gamma = overrides.gamma.unwrap_or(DEFAULT_GAMMA);
    if !(0.0..1.0).contains(&gamma) {
        return Err(Error::InvalidConfiguration(format!(
            "gamma must lie in [0, 1), got {gamma}"
        )));
    }
    let tau = overrides.tau.unwrap_or(DEFAULT_TAU);
    check_positive("tau", tau)?;
    if let Some(w) = overrides.window_override {
        if w < MIN_WINDOW {
            return Err(Error::InvalidConfiguration(format!(
                "window_override must be at least {MIN_WINDOW}, got {w}"
            )));
        }
    }

    let ln_c = -epsilon * epsilon / 3.0;
    let c = ln_c.exp();
    let one_minus_c = -ln_c.exp_m1();
    let tail = |y: f64| (y * ln_c).exp() / one_minus_c;
    let vf = v as f64;

    let mut params = DerivedParams {
        t,
        x,
        n,
        epsilon,
        c,
        rho0,
        rho1,
        rho2,
        v,
        u1,
        u2,
        alpha0,
        alpha,
        beta: 2.0 * alpha + 2.0 * epsilon,
        r: 1.0 / (tf - 1.0) + tail(vf),
        q0: 2.0 * (vf - 1.0) * alpha + 2.0 * tail(vf),
        d0,
        d1,
        delta_c: -ln_c / 2.0,
        varsigma0: 1.0 / two_x,
        phi_v: (vf + u1 as f64) * 2.0 * tail(vf),
        gamma,
        tau,
        window_override: overrides.window_override,
        violations: Vec::new(),
    };
    params.violations = params.evaluate_constraints();
    Ok(params)
}

impl DerivedParams {
    pub fn violations(&self) -> &[Constraint] {
        &self.violations
    }

    /// True when every ledger constraint holds.
    pub fn in_guarantee_regime(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn log_n(&self) -> f64 {
        (self.n as f64).log2()
    }

    fn ln_c(&self) -> f64 {
        -self.epsilon * self.epsilon / 3.0
    }

    fn one_minus_c(&self) -> f64 {
        -self.ln_c().exp_m1()
    }

    /// `c^y / (1 - c)`
    fn tail(&self, y: f64) -> f64 {
        (y * self.ln_c()).exp() / self.one_minus_c()
    }

    /// `r(y) = 1/(t-1) + c^y/(1-c)`
    pub fn r_of(&self, y: f64) -> f64 {
        1.0 / (self.t as f64 - 1.0) + self.tail(y)
    }

    /// `q(y) = 2(v-1) alpha + 2 c^y/(1-c)`
    pub fn q_of(&self, y: f64) -> f64 {
        2.0 * (self.v as f64 - 1.0) * self.alpha + 2.0 * self.tail(y)
    }

    /// Resolved comparison window length.
    pub fn window(&self) -> usize {
        self.window_override
            .unwrap_or_else(|| ((self.d0 * self.log_n()).ceil() as usize).max(MIN_WINDOW))
    }

    /// Per-block sample count `M(L)`.
    pub fn m_of(&self, block: f64) -> f64 {
        let log_n = self.log_n();
        (3.0 * log_n + self.x as f64).sqrt() / (1.0 - self.gamma).sqrt() * block.sqrt() * log_n
    }

    /// `M_1(L) = delta_{1/4} M(L) / log n`
    pub fn m1_of(&self, block: f64) -> f64 {
        let delta_quarter = 4f64.ln() / 2.0;
        delta_quarter * self.m_of(block) / self.log_n()
    }

    /// Block sizes below `(log n)^(3+tau)/100` select every position.
    pub fn sampling_threshold(&self) -> f64 {
        self.log_n().powf(3.0 + self.tau) / 100.0
    }

    /// The independent fields as a fully pinned override set.
    pub fn overrides(&self) -> ParamOverrides {
        ParamOverrides {
            epsilon: Some(self.epsilon),
            alpha: Some(self.alpha),
            rho0: Some(self.rho0),
            rho1: Some(self.rho1),
            rho2: Some(self.rho2),
            v: Some(self.v),
            u1: Some(self.u1),
            u2: Some(self.u2),
            alpha0: Some(self.alpha0),
            d0: Some(self.d0),
            d1: Some(self.d1),
            gamma: Some(self.gamma),
            tau: Some(self.tau),
            window_override: self.window_override,
        }
    }

    /// Re-evaluates every constraint from the stored fields.
    pub fn evaluate_constraints(&self) -> Vec<Constraint> {
        Constraint::ALL
            .into_iter()
            .filter(|&k| !self.holds(k))
            .collect()
    }

    pub fn holds(&self, constraint: Constraint) -> bool {
        let tf = self.t as f64;
        let two_x = 2f64.powi(self.x as i32);
        let fifth = 1.0 / (5.0 * two_x);
        let v = self.v as f64;
        let vu1 = v + self.u1 as f64;
        let one_minus_c = self.one_minus_c();
        let tail_v = self.tail(v);
        let eps = self.epsilon;
        let base = 2.0 / (tf - 1.0) + 4.0 / two_x + 5.0 * eps;
        let log_n = self.log_n();
        match constraint {
            Constraint::AlphaInit => self.rho0 < (tf - 1.0) / (2.0 * tf),
            Constraint::EpsilonSet => {
                let bound = ((tf - 1.0) / tf - (2.0 * self.rho0 + 2.0 * eps))
                    .min((1.0 - 2.0 / (tf - 1.0) - 4.0 / two_x) / 5.0)
                    .min(1.0 / 3.0);
                eps < bound
            }
            Constraint::VSet => {
                // sup over v >= 0 of y c^y with y = v + u1 >= u1
                let peak = 1.0 / -self.ln_c();
                let y = (self.u1 as f64).max(peak);
                let sup = y * (y * self.ln_c()).exp();
                2.0 * sup / (one_minus_c * one_minus_c) <= fifth
            }
            Constraint::Rho1 => base + self.rho1 < 1.0,
            Constraint::Rho2 => 6.0 * vu1 * tail_v + self.rho2 < self.rho1,
            Constraint::V2 => 1.0 / two_x + vu1 * tail_v + tail_v + fifth <= 0.5,
            Constraint::Rho2Alpha0 => 4.0 * (v - 1.0) * self.alpha0 + self.alpha0 < self.rho2,
            Constraint::Alpha0Rho0 => self.alpha0 < self.rho0,
            Constraint::Median => {
                base + 6.0 * vu1 * tail_v + (4.0 * (v - 1.0) * self.alpha0 + self.alpha0) < 1.0
            }
            Constraint::VAlpha0 => {
                2.0 * ((2.0 * (v - 1.0) * self.alpha0 + tail_v)
                    + self.r
                    + 2.0 * (self.varsigma0 + self.phi_v)
                    + 2.0 * eps)
                    + (self.alpha0 + eps)
                    < 1.0
            }
            Constraint::VSet1 => {
                2.0 * (self.q0 + self.r + 2.0 * (self.varsigma0 + self.phi_v) + 2.0 * eps)
                    + (self.alpha0 + eps)
                    < 1.0
            }
            Constraint::SupportQ0 => {
                (1.0 / two_x + vu1 * tail_v + tail_v + fifth) + self.q0 <= 0.75
            }
            Constraint::D0Sel => {
                // n^3 c^(d0 log n) < 1/(5 2^x), in log space
                3.0 * (self.n as f64).ln() + self.d0 * log_n * self.ln_c() < fifth.ln()
            }
            Constraint::D1Sel => vu1.ln() + self.d1 * log_n * self.ln_c() < fifth.ln(),
            Constraint::U2Log => {
                self.d1 * log_n * vu1 * self.tail(v + self.u2 as f64) <= fifth
            }
            Constraint::U2Const => vu1 * self.tail(v + self.u2 as f64) < fifth,
            Constraint::AlphaRange => self.alpha <= self.alpha0,
        }
    }
}

/// Smallest integer `k >= lo` with `pred(k)`, for predicates that stay true
/// once they become true.
fn smallest_satisfying(lo: u64, pred: impl Fn(u64) -> bool) -> Option<u64> {
    if pred(lo) {
        return Some(lo);
    }
    let mut hi = lo.max(1);
    loop {
        hi = hi.checked_mul(2)?;
        if hi > 1 << 52 {
            return None;
        }
        if pred(hi) {
            break;
        }
    }
    let mut low = hi / 2;
    while hi - low > 1 {
        let mid = low + (hi - low) / 2;
        if pred(mid) {
            hi = mid;
        } else {
            low = mid;
        }
    }
    Some(hi)
}

/// Builds an assignment with no violated constraint, choosing constants in
/// dependency order: rho0, epsilon, u1, rho1, v with rho2, alpha0, then the
/// length-dependent d0, d1 and u2.
pub fn feasible_params(t: usize, x: u32, n: usize) -> Result<DerivedParams> {
    if t < 4 {
        return Err(Error::InvalidConfiguration(format!(
            "no feasible assignment is constructed for t < 4 (got {t})"
        )));
    }
    if n < 4 {
        return Err(Error::InvalidConfiguration(format!(
            "sequence length must be at least 4, got {n}"
        )));
    }
    let tf = t as f64;
    let two_x = 2f64.powi(x as i32);
    let fifth = 1.0 / (5.0 * two_x);
    let infeasible = |what: &str| Error::InvalidConfiguration(format!("no feasible {what}"));

    let rho0 = (tf - 1.0) / (4.0 * tf);
    let eps_bound = (((tf - 1.0) / tf - 2.0 * rho0) / 3.0)
        .min((1.0 - 2.0 / (tf - 1.0) - 4.0 / two_x) / 5.0)
        .min(1.0 / 3.0);
    if eps_bound <= 0.0 {
        return Err(infeasible("epsilon"));
    }
    let epsilon = eps_bound / 2.0;
    let ln_c = -epsilon * epsilon / 3.0;
    let one_minus_c = -ln_c.exp_m1();
    let tail = |y: f64| (y * ln_c).exp() / one_minus_c;

    let peak = (1.0 / -ln_c).ceil() as u64;
    let u1 = smallest_satisfying(peak, |u| {
        let y = u as f64;
        2.0 * y * (y * ln_c).exp() / (one_minus_c * one_minus_c) <= fifth
    })
    .ok_or_else(|| infeasible("u1"))?;
    let u1f = u1 as f64;

    let rho1 = (1.0 - (2.0 / (tf - 1.0) + 4.0 / two_x + 5.0 * epsilon)) / 2.0;
    let v = smallest_satisfying(1, |v| {
        let vf = v as f64;
        let tv = tail(vf);
        (8.0 * (vf + u1f) + 8.0) * tv <= rho1 / 4.0
            && 1.0 / two_x + (vf + u1f) * tv + tv + fifth <= 0.5
    })
    .ok_or_else(|| infeasible("v"))?;
    let vf = v as f64;
    let rho2 = (rho1 - 6.0 * (vf + u1f) * tail(vf)) / 2.0;
    let alpha0 = (rho2 / (4.0 * vf - 3.0)).min(rho0) / 2.0;

    let log_n = (n as f64).log2();
    let d0 = (3.0 * (n as f64).ln() - fifth.ln()) / (log_n * -ln_c) * 1.001;
    let d1 = ((vf + u1f).ln() - fifth.ln()) / (log_n * -ln_c) * 1.001;
    let u2 = smallest_satisfying(0, |u2| {
        let tv = tail(vf + u2 as f64);
        d1 * log_n * (vf + u1f) * tv <= fifth && (vf + u1f) * tv < fifth
    })
    .ok_or_else(|| infeasible("u2"))?;

    let overrides = ParamOverrides {
        epsilon: Some(epsilon),
        alpha: Some(alpha0),
        rho0: Some(rho0),
        rho1: Some(rho1),
        rho2: Some(rho2),
        v: Some(v as usize),
        u1: Some(u1 as usize),
        u2: Some(u2 as usize),
        alpha0: Some(alpha0),
        d0: Some(d0),
        d1: Some(d1),
        gamma: Some(DEFAULT_GAMMA),
        tau: Some(DEFAULT_TAU),
        window_override: None,
    };
    derive_and_validate(t, x, &overrides, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel_close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-12 * a.abs().max(b.abs()).max(1e-300)
    }

    fn with(f: impl FnOnce(&mut ParamOverrides)) -> ParamOverrides {
        let mut o = ParamOverrides::default();
        f(&mut o);
        o
    }

    #[test]
    fn closed_forms_at_reference_point() {
        let o = with(|o| {
            o.epsilon = Some(0.05);
            o.alpha = Some(0.01);
        });
        let p = derive_and_validate(4, 10, &o, 1024).unwrap();
        // independent evaluation of the closed forms
        let c = (-0.05f64 * 0.05 / 3.0).exp();
        assert!((p.c - 0.999167).abs() < 1e-6);
        assert!(rel_close(p.c, c));
        assert!(rel_close(p.beta, 0.12));
        let cv = c.powi(p.v as i32);
        assert!((p.r - (1.0 / 3.0 + cv / (1.0 - c))).abs() <= 1e-9 * p.r);
        assert!((p.q0 - (2.0 * 9.0 * 0.01 + 2.0 * cv / (1.0 - c))).abs() <= 1e-9 * p.q0);
        assert!(rel_close(p.delta_c, -c.ln() / 2.0));
        assert!(rel_close(p.r, p.r_of(p.v as f64)));
        assert!(rel_close(p.q0, p.q_of(p.v as f64)));
    }

    #[test]
    fn rho0_at_boundary_violates_alpha_init() {
        let o = with(|o| o.rho0 = Some(0.40));
        let p = derive_and_validate(4, 10, &o, 1024).unwrap();
        assert!(p.violations().contains(&Constraint::AlphaInit));
        let o = with(|o| o.rho0 = Some(0.30));
        let p = derive_and_validate(4, 10, &o, 1024).unwrap();
        assert!(!p.violations().contains(&Constraint::AlphaInit));
    }

    #[test]
    fn zero_alpha_drops_mutation_term() {
        let o = with(|o| o.alpha = Some(0.0));
        let p = derive_and_validate(4, 10, &o, 1024).unwrap();
        let c = p.c;
        let expected = 2.0 * c.powi(p.v as i32) / (1.0 - c);
        assert!((p.q0 - expected).abs() <= 1e-9 * expected);
        assert!(rel_close(p.beta, 2.0 * p.epsilon));
    }

    #[test]
    fn rejects_invalid_configuration() {
        assert!(derive_and_validate(1, 10, &ParamOverrides::default(), 100).is_err());
        let o = with(|o| o.alpha = Some(1.0));
        assert!(derive_and_validate(4, 10, &o, 100).is_err());
        let o = with(|o| o.alpha = Some(-0.1));
        assert!(derive_and_validate(4, 10, &o, 100).is_err());
        let o = with(|o| o.window_override = Some(3));
        assert!(derive_and_validate(4, 10, &o, 100).is_err());
        assert!(derive_and_validate(4, 10, &ParamOverrides::default(), 3).is_err());
    }

    #[test]
    fn omega_switch() {
        let p = derive_and_validate(4, 10, &ParamOverrides::default(), 600).unwrap();
        assert_eq!(omega_for(AlgorithmType::RandomizedSublinear, &p), 0.0);
        assert_eq!(omega_for(AlgorithmType::RandomizedSubquadratic, &p), p.beta);
        assert_eq!(omega_for(AlgorithmType::DeterministicSuperquadratic, &p), p.beta);
    }

    #[test]
    fn window_resolution() {
        let p = derive_and_validate(4, 10, &ParamOverrides::default(), 1024).unwrap();
        assert_eq!(p.window(), 20);
        let p = derive_and_validate(4, 10, &ParamOverrides::default(), 4).unwrap();
        assert_eq!(p.window(), 4);
        let o = with(|o| o.window_override = Some(12));
        let p = derive_and_validate(4, 10, &o, 1024).unwrap();
        assert_eq!(p.window(), 12);
    }

    #[test]
    fn sample_count_reference_value() {
        let p = derive_and_validate(4, 10, &ParamOverrides::default(), 1024).unwrap();
        let m = p.m_of(4096.0);
        assert!((m - 40f64.sqrt() * 10.0 * 64.0).abs() < 1e-9);
        assert_eq!(m.ceil() as usize, 4048);
    }

    #[test]
    fn feasible_assignment_has_no_violations() {
        for t in 4..=8 {
            for n in [16usize, 600, 1 << 16, 1 << 24] {
                let p = feasible_params(t, 10, n).unwrap();
                assert!(
                    p.violations().is_empty(),
                    "t={t} n={n}: {:?}",
                    p.violations()
                );
                assert!(p.in_guarantee_regime());
            }
        }
        assert!(feasible_params(3, 10, 100).is_err());
    }

    #[test]
    fn desk_defaults_are_flagged_outside_regime() {
        let p = derive_and_validate(4, 10, &ParamOverrides::default(), 600).unwrap();
        assert!(!p.in_guarantee_regime());
        assert!(p.violations().contains(&Constraint::D0Sel));
    }

    #[test]
    fn rederiving_is_a_fixed_point() {
        let o = with(|o| {
            o.epsilon = Some(0.1);
            o.alpha = Some(0.02);
            o.window_override = Some(12);
        });
        let p = derive_and_validate(4, 10, &o, 600).unwrap();
        let q = derive_and_validate(4, 10, &p.overrides(), 600).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn stored_flags_match_reevaluation() {
        let p = derive_and_validate(5, 7, &ParamOverrides::default(), 5000).unwrap();
        assert_eq!(p.violations(), p.evaluate_constraints().as_slice());
    }

    #[test]
    fn algorithm_names_parse() {
        for a in AlgorithmType::ALL {
            assert_eq!(a.short_name().parse::<AlgorithmType>().unwrap(), a);
        }
        assert_eq!(
            "RANDOMIZED_SUBQUADRATIC".parse::<AlgorithmType>().unwrap(),
            AlgorithmType::RandomizedSubquadratic
        );
        assert!("fast".parse::<AlgorithmType>().is_err());
    }
}
