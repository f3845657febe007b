//! The ring `Ω ⊗ Λ^{⊗ell}` in the basis
//! `π_λ = P_{λ^(0)} ⊗ s_{λ^(1)} ⊗ ... ⊗ s_{λ^(ell)}`, indexed by multipartitions
//! with strict 0th component.
//!
//! Products are only ever taken with the generators `q_r` (on the 0th
//! factor), `h_r` and `e_r` (on the others), through Pieri rules. The inner
//! product pairs `P_λ` with `Q_λ = 2^{h(λ)} P_λ` and `s_λ` with itself, so it is
//! diagonal in `π` with weight `2^{-h(λ^(0))}`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{multinomial, pow2, Rational};
use crate::error::{Error, Result};
use crate::params::GlobalParams;
use crate::partitions::{horizontal_strips, q_skew, vertical_strips, ColoredComposition, Multipartition};

/// Sparse element `Σ c_λ π_λ` with no zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymElement {
    terms: BTreeMap<Multipartition, Rational>,
}

impl SymElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one(params: &GlobalParams) -> Self {
        Self::basis(Multipartition::empty(params))
    }

    pub fn basis(key: Multipartition) -> Self {
        let mut v = Self::zero();
        v.add_term(key, Rational::one());
        v
    }

    pub fn add_term(&mut self, key: Multipartition, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&mut self, other: &SymElement) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &Rational) -> SymElement {
        let mut out = SymElement::zero();
        for (k, x) in &self.terms {
            out.add_term(k.clone(), x * c);
        }
        out
    }

    pub fn coeff(&self, key: &Multipartition) -> Rational {
        self.terms.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Multipartition, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_string_map(&self) -> BTreeMap<String, String> {
        self.terms
            .iter()
            .map(|(k, c)| (k.to_string(), c.to_string()))
            .collect()
    }
}

impl fmt::Display for SymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| format!("({c}) π[{k}]"))
            .collect();
        write!(f, "{}", s.join(" + "))
    }
}

impl Serialize for SymElement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_string_map().serialize(serializer)
    }
}

fn check_plain_component(comp: usize, params: &GlobalParams) -> Result<()> {
    if comp == 0 || comp > params.ell {
        return Err(Error::IndexOutOfRange {
            index: comp,
            max: params.ell,
        });
    }
    Ok(())
}

/// Multiplies by `h_r` in component `comp` (horizontal strips).
pub fn mult_pieri_h(v: &SymElement, comp: usize, r: u32, params: &GlobalParams) -> Result<SymElement> {
    check_plain_component(comp, params)?;
    let mut out = SymElement::zero();
    for (k, c) in v.terms() {
        for mu in horizontal_strips(k.component(comp), r, None) {
            out.add_term(k.with_component(comp, mu), c.clone());
        }
    }
    Ok(out)
}

/// Multiplies by `e_r` in component `comp` (vertical strips).
pub fn mult_pieri_e(v: &SymElement, comp: usize, r: u32, params: &GlobalParams) -> Result<SymElement> {
    check_plain_component(comp, params)?;
    let mut out = SymElement::zero();
    for (k, c) in v.terms() {
        for mu in vertical_strips(k.component(comp), r, None) {
            out.add_term(k.with_component(comp, mu), c.clone());
        }
    }
    Ok(out)
}

/// Multiplies by `q_r` in component 0:
/// `P_λ q_r = Σ_μ 2^{q(μ/λ)} P_μ` over strict `μ` with `μ/λ` a horizontal strip
/// of size `r`; `q_0 = 1`.
pub fn mult_pieri_q(v: &SymElement, r: u32) -> SymElement {
    if r == 0 {
        return v.clone();
    }
    let mut out = SymElement::zero();
    for (k, c) in v.terms() {
        let lambda = k.component(0);
        for mu in horizontal_strips(lambda, r, None) {
            if !mu.is_strict() {
                continue;
            }
            let q = q_skew(&mu, lambda).expect("strip contains its base");
            out.add_term(k.with_component(0, mu), c * pow2(q as i64));
        }
    }
    out
}

/// `(v, w) = Σ v_λ w_λ 2^{-h(λ^(0))}`
pub fn sym_inner(v: &SymElement, w: &SymElement) -> Rational {
    let mut out = Rational::zero();
    for (k, c) in v.terms() {
        if let Some(d) = w.terms.get(k) {
            out += c * d * pow2(-(k.component(0).len() as i64));
        }
    }
    out
}

/// Multiplies by `Π_{(m), j}`: `Σ_k q_k ⊗ e_{m-k}` on components 0, 1 when
/// `j = 0`, and `Σ_k h_k ⊗ e_{m-k}` on components `j`, `j + 1` otherwise.
pub fn mult_pi_single(v: &SymElement, m: u32, j: usize, params: &GlobalParams) -> Result<SymElement> {
    params.check_color(j)?;
    let mut out = SymElement::zero();
    for k in 0..=m {
        let left = if j == 0 {
            mult_pieri_q(v, k)
        } else {
            mult_pieri_h(v, j, k, params)?
        };
        out.add(&mult_pieri_e(&left, j + 1, m - k, params)?);
    }
    Ok(out)
}

/// `Π_{(d), j}`
pub fn build_pi_single(d: u32, j: usize, params: &GlobalParams) -> Result<SymElement> {
    mult_pi_single(&SymElement::one(params), d, j, params)
}

/// `Π_{μ, j} = Π_{(μ_1), j_1} ... Π_{(μ_n), j_n}`
pub fn build_pi(cc: &ColoredComposition, params: &GlobalParams) -> Result<SymElement> {
    let mut out = SymElement::one(params);
    for (m, j) in cc.parts() {
        out = mult_pi_single(&out, m, j, params)?;
    }
    Ok(out)
}

/// All colorings `J^d`.
pub fn colorings(d: u32, params: &GlobalParams) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|c| {
                params.j_set().map(move |j| {
                    let mut c = c.clone();
                    c.push(j);
                    c
                })
            })
            .collect();
    }
    out
}

/// `Π_{ω_d} = Σ_{j ∈ J^d} Π_{ω_d, j}`
pub fn build_pi_omega(d: u32, params: &GlobalParams) -> Result<SymElement> {
    let parts = colorings(d, params)
        .into_par_iter()
        .map(|c| build_pi(&ColoredComposition::omega(c, params)?, params))
        .collect::<Result<Vec<_>>>()?;
    let mut out = SymElement::zero();
    for p in &parts {
        out.add(p);
    }
    Ok(out)
}

/// `Σ_{k_0 + ... + k_ell = d} 2^{k_1 + ... + k_{ell-1}} (d; k) q_1^{k_0} ⊗ s_1^{k_1} ⊗ ... ⊗ s_1^{k_ell}`
pub fn pi_omega_closed_form(d: u32, params: &GlobalParams) -> Result<SymElement> {
    let mut out = SymElement::zero();
    for k in crate::partitions::compositions(d, params.ell + 1) {
        let middle: u32 = k[1..params.ell].iter().sum();
        let coeff = Rational::from_integer(multinomial(&k.iter().map(|&x| x as u64).collect::<Vec<_>>()))
            * pow2(middle as i64);
        let mut term = SymElement::one(params);
        for _ in 0..k[0] {
            term = mult_pieri_q(&term, 1);
        }
        for (i, &ki) in k.iter().enumerate().skip(1) {
            for _ in 0..ki {
                term = mult_pieri_h(&term, i, 1, params)?;
            }
        }
        out.add(&term.scale(&coeff));
    }
    Ok(out)
}

/// An `n × (ell + 1)` matrix whose row `r` sums to `μ_r` and is supported on
/// columns `j_r` and `j_r + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ColorMatrix {
    pub entries: Vec<Vec<u32>>,
}

impl ColorMatrix {
    pub fn validate(&self, cc: &ColoredComposition, params: &GlobalParams) -> Result<()> {
        if self.entries.len() != cc.n() {
            return Err(Error::InvalidMatrix(format!("expected {} rows", cc.n())));
        }
        for (r, ((m, j), row)) in cc.parts().zip(&self.entries).enumerate() {
            if row.len() != params.ell + 1 {
                return Err(Error::InvalidMatrix(format!("row {r} has wrong width")));
            }
            if row.iter().sum::<u32>() != m {
                return Err(Error::InvalidMatrix(format!("row {r} does not sum to {m}")));
            }
            if row.iter().enumerate().any(|(i, &a)| a != 0 && i != j && i != j + 1) {
                return Err(Error::InvalidMatrix(format!("row {r} leaves columns {j}, {}", j + 1)));
            }
        }
        Ok(())
    }

    /// `|a_{*, i}|`
    pub fn column_sum(&self, i: usize) -> u32 {
        self.entries.iter().map(|row| row[i]).sum()
    }
}

/// `M(μ, j)`: all matrices compatible with the colored composition.
pub fn enumerate_m(cc: &ColoredComposition, params: &GlobalParams) -> Vec<ColorMatrix> {
    let mut out = vec![Vec::new()];
    for (m, j) in cc.parts() {
        let mut next = Vec::new();
        for rows in &out {
            for a in 0..=m {
                let mut row = vec![0u32; params.ell + 1];
                row[j] = a;
                row[j + 1] = m - a;
                let mut rows: Vec<Vec<u32>> = rows.clone();
                rows.push(row);
                next.push(rows);
            }
        }
        out = next;
    }
    out.into_iter().map(|entries| ColorMatrix { entries }).collect()
}

/// `ψ_A`: `q_{a_{r,0}}` in component 0, `h_{a_{r,j_r}}` and `e_{a_{r,j_r+1}}`
/// elsewhere, multiplied over all rows.
pub fn psi_a(a: &ColorMatrix, cc: &ColoredComposition, params: &GlobalParams) -> Result<SymElement> {
    a.validate(cc, params)?;
    let mut out = SymElement::one(params);
    for (row, (_, j)) in a.entries.iter().zip(cc.parts()) {
        out = if j == 0 {
            mult_pieri_q(&out, row[0])
        } else {
            mult_pieri_h(&out, j, row[j], params)?
        };
        out = mult_pieri_e(&out, j + 1, row[j + 1], params)?;
    }
    Ok(out)
}

/// `q_1^{k_0} ⊗ s_1^{k_1} ⊗ ... ⊗ s_1^{k_ell}`
pub fn power_element(k: &[u32], params: &GlobalParams) -> Result<SymElement> {
    let mut out = SymElement::one(params);
    for _ in 0..k[0] {
        out = mult_pieri_q(&out, 1);
    }
    for (i, &ki) in k.iter().enumerate().skip(1) {
        for _ in 0..ki {
            out = mult_pieri_h(&out, i, 1, params)?;
        }
    }
    Ok(out)
}

/// `2^{|a_{*,0}|} Π_i (|a_{*,i}|; a_{*,i})` when the column sums are `k`, else 0.
pub fn individual_inner_formula(a: &ColorMatrix, k: &[u32]) -> BigInt {
    let width = k.len();
    if (0..width).any(|i| a.column_sum(i) != k[i]) {
        return BigInt::zero();
    }
    let mut out = BigInt::one() << a.column_sum(0);
    for i in 0..width {
        let col: Vec<u64> = a.entries.iter().map(|row| row[i] as u64).collect();
        out *= multinomial(&col);
    }
    out
}

/// `Σ_{A ∈ M(μ, j)} 2^{d - |a_{*,ell}|} Π_r (μ_r; a_{r,*})`
pub fn to_prove_sum(cc: &ColoredComposition, params: &GlobalParams) -> BigInt {
    let d = cc.d();
    enumerate_m(cc, params)
        .iter()
        .map(|a| {
            let mut t = BigInt::one() << (d - a.column_sum(params.ell));
            for row in &a.entries {
                t *= multinomial(&row.iter().map(|&x| x as u64).collect::<Vec<_>>());
            }
            t
        })
        .sum()
}

/// `(Π_{μ, j}, Π_{ω_d})_Sym`
pub fn theorem_inner(cc: &ColoredComposition, params: &GlobalParams) -> Result<Rational> {
    theorem_inner_with(cc, &build_pi_omega(cc.d(), params)?, params)
}

/// As [`theorem_inner`] with `Π_{ω_d}` supplied by the caller.
pub fn theorem_inner_with(cc: &ColoredComposition, pi_omega: &SymElement, params: &GlobalParams) -> Result<Rational> {
    Ok(sym_inner(&build_pi(cc, params)?, pi_omega))
}

/// `(d; μ) 4^{d - m} 3^m` with `m = Σ_{j_r = ell - 1} μ_r`.
pub fn closed_formula(cc: &ColoredComposition, params: &GlobalParams) -> BigInt {
    let d = cc.d();
    let m = cc.top_color_weight(params);
    let mu: Vec<u64> = cc.mu().iter().map(|&x| x as u64).collect();
    multinomial(&mu) * num_traits::pow(BigInt::from(4), (d - m) as usize) * num_traits::pow(BigInt::from(3), m as usize)
}
