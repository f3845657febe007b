//! Cross-checks between the Fock-space computation, the symmetric-function
//! inner product and the closed formula.

pub mod invariants;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{pow2, Rational};
use crate::barcore::{bar_quotient, check_bar_core, cores_up_to, enumerate_class_by_quotient, from_core_quotient, is_rock};
use crate::error::{Error, Result};
use crate::fock::{chi_convert, chi_exponent, monomial_composite, monomial_single, r_apply_divided, r_apply_omega, r_form, ChiDirection, RFockVector};
use crate::params::GlobalParams;
use crate::partitions::{compositions, horizontal_strips, k_coeff, q_skew, vertical_strips, ColoredComposition, Partition};
use crate::symfunc::{build_pi, build_pi_omega, closed_formula, colorings, sym_inner, SymElement};

/// `f(μ, j) u_ρ`
pub fn apply_composite(rho: &Partition, cc: &ColoredComposition, params: &GlobalParams) -> Result<RFockVector> {
    r_apply_divided(&monomial_composite(cc, params)?, &RFockVector::basis(rho.clone()), params)
}

/// `(f(μ, j) u_ρ, f(ω_d) u_ρ)` in the reduced Fock space.
pub fn fock_side(rho: &Partition, d: u32, cc: &ColoredComposition, params: &GlobalParams) -> Result<Rational> {
    check_degree(cc, d)?;
    let omega = r_apply_omega(d, &RFockVector::basis(rho.clone()), params)?;
    Ok(r_form(&apply_composite(rho, cc, params)?, &omega, params))
}

fn check_degree(cc: &ColoredComposition, d: u32) -> Result<()> {
    if cc.d() != d {
        return Err(Error::InvalidComposition(format!("{cc} does not sum to {d}")));
    }
    Ok(())
}

/// `(f(μ, j) u_ρ, f(ν, i) u_ρ)` next to `(Π_{μ, j}, Π_{ν, i})_Sym`.
pub fn pairing_check(
    rho: &Partition,
    a: &ColoredComposition,
    b: &ColoredComposition,
    params: &GlobalParams,
) -> Result<(Rational, Rational)> {
    let fock = r_form(&apply_composite(rho, a, params)?, &apply_composite(rho, b, params)?, params);
    let sym = sym_inner(&build_pi(a, params)?, &build_pi(b, params)?);
    Ok((fock, sym))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientMismatch {
    pub partition: Partition,
    pub engine: String,
    pub expected: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CoefficientReport {
    pub checked: usize,
    pub mismatches: Vec<CoefficientMismatch>,
}

impl CoefficientReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn compare(engine: &RFockVector, expected: &RFockVector) -> CoefficientReport {
    let mut keys: Vec<&Partition> = engine.support().chain(expected.support()).collect();
    keys.sort();
    keys.dedup();
    let mut report = CoefficientReport {
        checked: keys.len(),
        ..Default::default()
    };
    for k in keys {
        let (a, b) = (engine.coeff(k), expected.coeff(k));
        if a != b {
            report.mismatches.push(CoefficientMismatch {
                partition: k.clone(),
                engine: a.to_string(),
                expected: b.to_string(),
            });
        }
    }
    report
}

/// Compares `f(μ, j) u_ρ` with `Σ_λ K(quot(λ); μ, j) 2^{-h(λ^(0))} u_λ` over
/// the strict partitions of core `ρ` and weight `d`.
pub fn expansion_check(rho: &Partition, d: u32, cc: &ColoredComposition, params: &GlobalParams) -> Result<CoefficientReport> {
    check_degree(cc, d)?;
    let engine = apply_composite(rho, cc, params)?;
    let mut expected = RFockVector::zero();
    for lambda in enumerate_class_by_quotient(rho, d, true, params)? {
        let quot = bar_quotient(&lambda, params)?;
        let k = k_coeff(&quot, cc, params);
        if k.is_zero() {
            continue;
        }
        let c = Rational::from_integer(k) * pow2(-(quot.component(0).len() as i64));
        expected.add_term(lambda, c);
    }
    Ok(compare(&engine, &expected))
}

/// The partitions whose quotient arises from `quot(α)` by adding `k` nodes to
/// components `j` (no two in a column) and `j + 1` (no two in a row), with
/// strict 0th component, each with `q(λ^(0)/α^(0))`.
fn quotient_neighbours(rho: &Partition, alpha: &Partition, k: u32, j: usize, params: &GlobalParams) -> Result<Vec<(Partition, Partition, u32)>> {
    let quot = bar_quotient(alpha, params)?;
    let mut out = Vec::new();
    for a in 0..=k {
        for h in horizontal_strips(quot.component(j), a, None) {
            if j == 0 && !h.is_strict() {
                continue;
            }
            for v in vertical_strips(quot.component(j + 1), k - a, None) {
                let q = quot.with_component(j, h.clone()).with_component(j + 1, v);
                let lambda = from_core_quotient(rho, &q, params)?;
                let zero = q.component(0).clone();
                let qs = q_skew(&zero, quot.component(0))?;
                out.push((lambda, zero, qs));
            }
        }
    }
    Ok(out)
}

fn check_alpha(rho: &Partition, alpha: &Partition, params: &GlobalParams) -> Result<()> {
    check_bar_core(rho, params)?;
    if !alpha.is_strict() {
        return Err(Error::NotStrict(alpha.to_string()));
    }
    let core = crate::barcore::bar_core(alpha, params)?;
    if &core != rho {
        return Err(Error::Invariant(format!("{alpha} has core {core}, not {rho}")));
    }
    Ok(())
}

/// Checks `f(k, j) u_α = Σ_λ 2^{q(λ^(0)/α^(0)) + h(α^(0)) - h(λ^(0))} u_λ`.
pub fn cmatt_check(rho: &Partition, k: u32, j: usize, alpha: &Partition, params: &GlobalParams) -> Result<CoefficientReport> {
    check_alpha(rho, alpha, params)?;
    let engine = r_apply_divided(&monomial_single(k, j, params)?, &RFockVector::basis(alpha.clone()), params)?;
    let h_alpha = alpha.h_p(params.p) as i64;
    let mut expected = RFockVector::zero();
    for (lambda, zero, qs) in quotient_neighbours(rho, alpha, k, j, params)? {
        let e = qs as i64 + h_alpha - zero.len() as i64;
        expected.add_term(lambda, pow2(e));
    }
    Ok(compare(&engine, &expected))
}

/// Checks the same action in the χ basis:
/// `f(k, j) χ_α = Σ_λ 2^{q + (k(2 ell - 1) + h(α^(0)) - h(λ^(0)) + p_α - p_λ)/2} χ_λ`.
pub fn lmatt_check(rho: &Partition, k: u32, j: usize, alpha: &Partition, params: &GlobalParams) -> Result<CoefficientReport> {
    check_alpha(rho, alpha, params)?;
    let chi_alpha = RFockVector::basis(alpha.clone()).scale(&pow2(chi_exponent(alpha, params)?));
    let engine_u = r_apply_divided(&monomial_single(k, j, params)?, &chi_alpha, params)?;
    let engine = chi_convert(&engine_u, ChiDirection::ToChi, params)?;
    let h_alpha = alpha.h_p(params.p) as i64;
    let p_alpha = alpha.parity()? as i64;
    let mut expected = RFockVector::zero();
    for (lambda, zero, qs) in quotient_neighbours(rho, alpha, k, j, params)? {
        let num = k as i64 * (2 * params.ell as i64 - 1) + h_alpha - zero.len() as i64 + p_alpha - lambda.parity()? as i64;
        if num % 2 != 0 {
            return Err(Error::Invariant(format!("odd exponent {num} for {lambda}")));
        }
        expected.add_term(lambda, pow2(qs as i64 + num / 2));
    }
    Ok(compare(&engine, &expected))
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepConfig {
    pub ells: Vec<usize>,
    pub d_max: u32,
    pub n_max: usize,
    pub cores_per_case: usize,
    /// Also evaluate both sides for the empty core, which is RoCK only for
    /// `d = 0`; these rows are recorded but never counted as mismatches.
    pub include_non_rock: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            ells: vec![1, 2],
            d_max: 3,
            n_max: 3,
            cores_per_case: 1,
            include_non_rock: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum InstanceStatus {
    Agree,
    Mismatch,
    /// Outside the RoCK hypothesis; the Fock value is only recorded.
    OutsideHypothesis,
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceResult {
    pub ell: usize,
    pub core: Partition,
    pub d: u32,
    pub mu: Vec<u32>,
    pub colors: Vec<usize>,
    pub rock: bool,
    pub fock_value: String,
    pub sym_value: String,
    pub formula_value: String,
    pub status: InstanceStatus,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub instances: Vec<InstanceResult>,
    pub mismatches: usize,
    pub status: String,
}

impl SweepReport {
    pub fn all_agree(&self) -> bool {
        self.mismatches == 0
    }
}

/// The first `count` RoCK cores for weight `d`, by size.
pub fn rock_cores(d: u32, count: usize, params: &GlobalParams) -> Vec<Partition> {
    let mut bound = 8u32;
    loop {
        let found: Vec<Partition> = cores_up_to(bound, params)
            .into_iter()
            .filter(|rho| is_rock(rho, d, params).unwrap_or(false))
            .take(count)
            .collect();
        if found.len() >= count || bound > 1 << 14 {
            return found;
        }
        bound *= 2;
    }
}

/// All colored compositions of `d` with `1..=n_max` parts.
pub fn colored_compositions(d: u32, n_max: usize, params: &GlobalParams) -> Vec<ColoredComposition> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for mu in compositions(d, n) {
            for colors in colorings(n as u32, params) {
                out.push(ColoredComposition::new(mu.clone(), colors, params).expect("colors in J"));
            }
        }
    }
    out
}

fn run_case(
    rho: &Partition,
    d: u32,
    n_max: usize,
    pi_omega: &SymElement,
    params: &GlobalParams,
) -> Result<Vec<InstanceResult>> {
    let rock = is_rock(rho, d, params)?;
    let omega = r_apply_omega(d, &RFockVector::basis(rho.clone()), params)?;
    colored_compositions(d, n_max, params)
        .into_par_iter()
        .map(|cc| {
            let fock = r_form(&apply_composite(rho, &cc, params)?, &omega, params);
            let sym = sym_inner(&build_pi(&cc, params)?, pi_omega);
            let formula = Rational::from_integer(closed_formula(&cc, params));
            let status = if !rock {
                InstanceStatus::OutsideHypothesis
            } else if fock == sym && sym == formula && fock.is_integer() {
                InstanceStatus::Agree
            } else {
                InstanceStatus::Mismatch
            };
            Ok(InstanceResult {
                ell: params.ell,
                core: rho.clone(),
                d,
                mu: cc.mu().to_vec(),
                colors: cc.colors().to_vec(),
                rock,
                fock_value: fock.to_string(),
                sym_value: sym.to_string(),
                formula_value: formula.to_string(),
                status,
            })
        })
        .collect()
}

/// Runs the three-way comparison over every rank, weight, RoCK core and
/// colored composition allowed by `config`.
pub fn full_sweep(config: &SweepConfig) -> Result<SweepReport> {
    let mut instances = Vec::new();
    for &ell in &config.ells {
        let params = GlobalParams::new(ell)?;
        for d in 0..=config.d_max {
            let pi_omega = build_pi_omega(d, &params)?;
            let mut cores = rock_cores(d, config.cores_per_case, &params);
            if cores.is_empty() {
                return Err(Error::Invariant(format!("no RoCK core found for ell = {ell}, d = {d}")));
            }
            if config.include_non_rock && d > 0 {
                cores.push(Partition::empty());
            }
            for rho in &cores {
                instances.extend(run_case(rho, d, config.n_max, &pi_omega, &params)?);
            }
        }
    }
    let mismatches = instances
        .iter()
        .filter(|r| r.status == InstanceStatus::Mismatch)
        .count();
    Ok(SweepReport {
        config: config.clone(),
        status: if mismatches == 0 { "all-agree" } else { "mismatch" }.to_string(),
        instances,
        mismatches,
    })
}

/// Exact integer value of a rational, if it is one.
pub fn as_integer(x: &Rational) -> Option<BigInt> {
    x.denom().is_one().then(|| x.numer().clone())
}
