//! The quantum Fock space over `Z[q, q^-1]` with basis `u_λ` (λ p-strict), and
//! the reduced Fock space at `q = 1` over the rationals with basis `u_λ` (λ
//! strict).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{factorial, is_dyadic, pow2, q_i_exponent, LaurentPoly, Rational};
use crate::error::{Error, Result};
use crate::params::GlobalParams;
use crate::partitions::{addable_removable, node_coeff_addable, node_coeff_removable, ColoredComposition, Partition};

/// Sparse vector `Σ c_λ u_λ` with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockVector<C> {
    terms: BTreeMap<Partition, C>,
}

pub type QFockVector = FockVector<LaurentPoly>;
pub type RFockVector = FockVector<Rational>;

/// Coefficient rings used by the two Fock spaces.
pub trait Coeff: Clone + PartialEq + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
}

impl Coeff for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

impl Coeff for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

impl<C: Coeff> Default for FockVector<C> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<C: Coeff> FockVector<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(lambda: Partition) -> Self {
        let mut v = Self::zero();
        v.add_term(lambda, C::one());
        v
    }

    pub fn add_term(&mut self, lambda: Partition, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&lambda) {
            Some(slot) => {
                *slot = slot.add(&c);
                if slot.is_zero() {
                    self.terms.remove(&lambda);
                }
            }
            None => {
                self.terms.insert(lambda, c);
            }
        }
    }

    pub fn add_vector(&mut self, other: &Self) {
        for (l, c) in &other.terms {
            self.add_term(l.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero();
        for (l, x) in &self.terms {
            out.add_term(l.clone(), x.mul(c));
        }
        out
    }

    pub fn coeff(&self, lambda: &Partition) -> C {
        self.terms.get(lambda).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &C)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.terms.keys()
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

    /// `{partition: coefficient}` with keys in string order.
    pub fn to_string_map(&self) -> BTreeMap<String, String> {
        self.terms
            .iter()
            .map(|(l, c)| (l.to_string(), c.to_string()))
            .collect()
    }
}

impl<C: Coeff> FromIterator<(Partition, C)> for FockVector<C> {
    fn from_iter<T: IntoIterator<Item = (Partition, C)>>(iter: T) -> Self {
        let mut v = Self::zero();
        for (l, c) in iter {
            v.add_term(l, c);
        }
        v
    }
}

impl<C: Coeff> fmt::Display for FockVector<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(l, c)| format!("({c}) u[{l}]"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<C: Coeff> Serialize for FockVector<C> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_string_map().serialize(serializer)
    }
}

// Quantum Fock space.

pub fn q_apply_f(i: usize, v: &QFockVector, params: &GlobalParams) -> QFockVector {
    let mut out = QFockVector::zero();
    for (lambda, c) in v.terms() {
        for b in addable_removable(lambda, i, params).proper_addable {
            let d = node_coeff_addable(lambda, b, i, params).expect("proper node");
            out.add_term(lambda.add_node(b).expect("addable"), c * &d.value);
        }
    }
    out
}

pub fn q_apply_e(i: usize, v: &QFockVector, params: &GlobalParams) -> QFockVector {
    let mut out = QFockVector::zero();
    for (lambda, c) in v.terms() {
        for a in addable_removable(lambda, i, params).proper_removable {
            let d = node_coeff_removable(lambda, a, i, params).expect("proper node");
            out.add_term(lambda.remove_node(a).expect("removable"), c * &d.value);
        }
    }
    out
}

/// Exponent `k` with `T_i u_λ = q^k u_λ`, namely `(α_i | Λ_0 - cont(λ))`.
pub fn t_exponent(i: usize, lambda: &Partition, params: &GlobalParams) -> i64 {
    let cont = lambda.content(params);
    let from_l0 = params.gram(0, 0) / 2 * i64::from(i == 0);
    from_l0 - params.i_set().map(|j| cont[j] as i64 * params.gram(j, i)).sum::<i64>()
}

/// `T_i^{±1}`
pub fn q_apply_t(i: usize, v: &QFockVector, inverse: bool, params: &GlobalParams) -> QFockVector {
    let sign = if inverse { -1 } else { 1 };
    v.terms()
        .map(|(l, c)| (l.clone(), c.shift(sign * t_exponent(i, l, params))))
        .collect()
}

/// `(T_i - T_i^{-1}) / (q_i - q_i^{-1})`, which is diagonal with quantum-integer
/// entries.
pub fn q_apply_cartan_bracket(i: usize, v: &QFockVector, params: &GlobalParams) -> Result<QFockVector> {
    let s = q_i_exponent(i, params);
    let den = LaurentPoly::from_terms([(s, 1), (-s, -1)]);
    let mut out = QFockVector::zero();
    for (l, c) in v.terms() {
        let k = t_exponent(i, l, params);
        let num = LaurentPoly::from_terms([(k, 1), (-k, -1)]);
        out.add_term(l.clone(), c * &num.div_exact(&den)?);
    }
    Ok(out)
}

/// `(v, w)_q = Σ v_λ w_λ ||λ||_q`
pub fn q_form(v: &QFockVector, w: &QFockVector, params: &GlobalParams) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (l, c) in v.terms() {
        let d = w.coeff(l);
        if !d.is_zero() {
            out += &(&(c * &d) * &l.norm_q(params.p));
        }
    }
    out
}

/// `F_{i_1} ... F_{i_n} u_∅`, with the last index acting first.
pub fn q_apply_word(word: &[usize], v: &QFockVector, params: &GlobalParams) -> QFockVector {
    word.iter()
        .rev()
        .fold(v.clone(), |acc, &i| q_apply_f(i, &acc, params))
}

/// Sets `q = 1` and drops the non-strict partitions.
pub fn specialize(v: &QFockVector) -> RFockVector {
    v.terms()
        .filter(|(l, _)| l.is_strict())
        .map(|(l, c)| (l.clone(), Rational::from_integer(c.eval_q1())))
        .collect()
}

// Reduced Fock space.

/// `f_i u_λ = Σ c(λ, B) u_{λ^B}` over properly addable `B` with `λ^B` strict;
/// `c(λ, B) = 2` when adding `B` lowers `h_p`, otherwise 1.
pub fn r_apply_f(i: usize, v: &RFockVector, params: &GlobalParams) -> RFockVector {
    let mut out = RFockVector::zero();
    let p = params.p;
    for (lambda, c) in v.terms() {
        let hp = lambda.h_p(p);
        for b in addable_removable(lambda, i, params).proper_addable {
            let next = lambda.add_node(b).expect("addable");
            if !next.is_strict() {
                continue;
            }
            let factor = if next.h_p(p) + 1 == hp {
                Rational::from_integer(BigInt::from(2))
            } else {
                <Rational as One>::one()
            };
            out.add_term(next, c * factor);
        }
    }
    out
}

/// `f_i^{(m)} = f_i^m / m!`
pub fn r_apply_divided_power(i: usize, m: u32, v: &RFockVector, params: &GlobalParams) -> Result<RFockVector> {
    let mut cur = v.clone();
    for _ in 0..m {
        cur = r_apply_f(i, &cur, params);
    }
    let inv = Rational::new(BigInt::one(), factorial(m as u64));
    let out = cur.scale(&inv);
    if let Some((l, c)) = out.terms().find(|(_, c)| !is_dyadic(c)) {
        return Err(Error::Invariant(format!(
            "f_{i}^({m}) produced non-dyadic coefficient {c} at {l}"
        )));
    }
    Ok(out)
}

/// `(v, w) = Σ v_λ w_λ 2^{h_p(λ)}`
pub fn r_form(v: &RFockVector, w: &RFockVector, params: &GlobalParams) -> Rational {
    let mut out = <Rational as Zero>::zero();
    for (l, c) in v.terms() {
        let d = w.coeff(l);
        if !Zero::is_zero(&d) {
            out += c * d * pow2(l.h_p(params.p) as i64);
        }
    }
    out
}

/// A product of divided powers `f_{i_1}^{(m_1)} ... f_{i_t}^{(m_t)}`, written
/// left to right, so the last factor acts first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct DividedMonomial {
    pub factors: Vec<(usize, u32)>,
}

impl DividedMonomial {
    pub fn new(factors: Vec<(usize, u32)>) -> Self {
        Self { factors }
    }

    pub fn identity() -> Self {
        Self::default()
    }

    /// `self * other`: `other` acts first.
    pub fn then_after(&self, other: &DividedMonomial) -> Self {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        Self { factors }
    }

    /// Moves `-Σ m α_i` of weight, as root coordinates.
    pub fn weight(&self, params: &GlobalParams) -> Vec<i64> {
        let mut w = vec![0i64; params.ell + 1];
        for &(i, m) in &self.factors {
            w[i] += m as i64;
        }
        w
    }
}

impl fmt::Display for DividedMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self
            .factors
            .iter()
            .filter(|&&(_, m)| m > 0)
            .map(|&(i, m)| if m == 1 { format!("f{i}") } else { format!("f{i}^({m})") })
            .collect();
        if s.is_empty() {
            return write!(f, "1");
        }
        write!(f, "{}", s.join(" "))
    }
}

/// Parses `;`-separated factors written left to right (the rightmost acts
/// first). A factor is `f<i>`, `f<i>^(<k>)` or `(<m>,<j>)` for `f(m, j)`.
pub fn parse_monomial(text: &str, params: &GlobalParams) -> Result<DividedMonomial> {
    let bad = || Error::Parse {
        what: "monomial",
        input: text.to_string(),
    };
    let mut out = DividedMonomial::identity();
    for token in text.split(';').map(str::trim).filter(|t| !t.is_empty()) {
        let factor = if let Some(inner) = token.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
            let (m, j) = inner.split_once(',').ok_or_else(bad)?;
            let m: u32 = m.trim().parse().map_err(|_| bad())?;
            let j: usize = j.trim().parse().map_err(|_| bad())?;
            monomial_single(m, j, params)?
        } else if let Some(rest) = token.strip_prefix('f') {
            let (i, k) = match rest.split_once('^') {
                Some((i, k)) => {
                    let k = k.strip_prefix('(').and_then(|k| k.strip_suffix(')')).unwrap_or(k);
                    (i, k.parse::<u32>().map_err(|_| bad())?)
                }
                None => (rest, 1),
            };
            let i: usize = i.parse().map_err(|_| bad())?;
            params.check_index(i)?;
            DividedMonomial::new(vec![(i, k)])
        } else {
            return Err(bad());
        };
        out = out.then_after(&factor);
    }
    Ok(out)
}

pub fn r_apply_divided(mono: &DividedMonomial, v: &RFockVector, params: &GlobalParams) -> Result<RFockVector> {
    let mut cur = v.clone();
    for &(i, m) in mono.factors.iter().rev() {
        params.check_index(i)?;
        cur = r_apply_divided_power(i, m, &cur, params)?;
        if cur.is_zero() {
            break;
        }
    }
    Ok(cur)
}

/// `f(m, j) = f_j^{(m)} ... f_1^{(m)} f_0^{(2m)} f_1^{(m)} ... f_j^{(m)}
/// f_{j+1}^{(2m)} ... f_{ell-1}^{(2m)} f_ell^{(m)}`, the identity when `m = 0`.
pub fn monomial_single(m: u32, j: usize, params: &GlobalParams) -> Result<DividedMonomial> {
    params.check_color(j)?;
    if m == 0 {
        return Ok(DividedMonomial::identity());
    }
    let mut f = Vec::new();
    f.extend((1..=j).rev().map(|i| (i, m)));
    f.push((0, 2 * m));
    f.extend((1..=j).map(|i| (i, m)));
    f.extend((j + 1..params.ell).map(|i| (i, 2 * m)));
    f.push((params.ell, m));
    Ok(DividedMonomial::new(f))
}

/// `f(μ, j) = f(μ_n, j_n) ... f(μ_1, j_1)`
pub fn monomial_composite(cc: &ColoredComposition, params: &GlobalParams) -> Result<DividedMonomial> {
    let mut out = DividedMonomial::identity();
    for (m, j) in cc.parts() {
        out = monomial_single(m, j, params)?.then_after(&out);
    }
    Ok(out)
}

/// The `ell^d` monomials `f(ω_d, j)` whose sum is `f(ω_d)`.
pub fn omega_monomials(d: u32, params: &GlobalParams) -> Result<Vec<DividedMonomial>> {
    let mut colorings: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..d {
        colorings = colorings
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
    colorings
        .into_iter()
        .map(|c| monomial_composite(&ColoredComposition::omega(c, params)?, params))
        .collect()
}

/// `f(ω_d) v`, computed as `(Σ_j f(1, j))^d v`.
pub fn r_apply_omega(d: u32, v: &RFockVector, params: &GlobalParams) -> Result<RFockVector> {
    let singles = params
        .j_set()
        .map(|j| monomial_single(1, j, params))
        .collect::<Result<Vec<_>>>()?;
    let mut cur = v.clone();
    for _ in 0..d {
        let mut next = RFockVector::zero();
        for m in &singles {
            next.add_vector(&r_apply_divided(m, &cur, params)?);
        }
        cur = next;
    }
    Ok(cur)
}

/// The exponent `e` with `χ_λ = 2^e u_λ`, i.e. `(p_λ - h_p(λ) - c_{≠0}) / 2`.
pub fn chi_exponent(lambda: &Partition, params: &GlobalParams) -> Result<i64> {
    let raw = lambda.parity()? as i64 - lambda.h_p(params.p) as i64 - lambda.content_nonzero(params) as i64;
    if raw % 2 != 0 {
        return Err(Error::Invariant(format!("odd chi exponent {raw} for {lambda}")));
    }
    Ok(raw / 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChiDirection {
    /// From `u` coordinates to `χ` coordinates.
    ToChi,
    /// From `χ` coordinates to `u` coordinates.
    FromChi,
}

pub fn chi_convert(v: &RFockVector, direction: ChiDirection, params: &GlobalParams) -> Result<RFockVector> {
    let mut out = RFockVector::zero();
    for (l, c) in v.terms() {
        let e = chi_exponent(l, params)?;
        let factor = match direction {
            ChiDirection::ToChi => pow2(-e),
            ChiDirection::FromChi => pow2(e),
        };
        out.add_term(l.clone(), c * factor);
    }
    Ok(out)
}
