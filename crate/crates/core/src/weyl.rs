//! Weights in the basis `Λ_0, α_0, ..., α_ell`, simple reflections, and the
//! extremal vectors `v_w` of the basic module.

use std::fmt;
use std::str::FromStr;

use num_traits::One;
use serde::Serialize;

use crate::barcore::is_rock;
use crate::error::{Error, Result};
use crate::fock::{r_apply_divided, DividedMonomial, RFockVector};
use crate::params::GlobalParams;
use crate::partitions::Partition;

/// `lambda0 Λ_0 + Σ alpha[i] α_i`
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Weight {
    pub lambda0: i64,
    pub alpha: Vec<i64>,
}

impl Weight {
    pub fn lambda0(params: &GlobalParams) -> Self {
        Self {
            lambda0: 1,
            alpha: vec![0; params.ell + 1],
        }
    }

    pub fn root(coords: Vec<i64>) -> Self {
        Self {
            lambda0: 0,
            alpha: coords,
        }
    }

    pub fn delta(params: &GlobalParams) -> Self {
        Self::root(params.delta())
    }

    /// `(x | α_i)`, using `(Λ_0 | α_i) = δ_{i0}`.
    pub fn form_with_root(&self, i: usize, params: &GlobalParams) -> i64 {
        let from_l0 = if i == 0 { self.lambda0 * params.gram(0, 0) / 2 } else { 0 };
        from_l0
            + self
                .alpha
                .iter()
                .enumerate()
                .map(|(j, &a)| a * params.gram(j, i))
                .sum::<i64>()
    }
}

/// `(x | α_i^∨) = 2 (x | α_i) / (α_i | α_i)`
pub fn pair(x: &Weight, i: usize, params: &GlobalParams) -> i64 {
    2 * x.form_with_root(i, params) / params.gram(i, i)
}

/// `r_i(x) = x - (x | α_i^∨) α_i`
pub fn reflect(x: &Weight, i: usize, params: &GlobalParams) -> Weight {
    let mut out = x.clone();
    out.alpha[i] -= pair(x, i, params);
    out
}

/// A word `r_{i_t} ... r_{i_1}`, written left to right, so the last letter
/// acts first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct WeylWord {
    pub letters: Vec<usize>,
}

impl WeylWord {
    pub fn new(letters: Vec<usize>, params: &GlobalParams) -> Result<Self> {
        for &i in &letters {
            params.check_index(i)?;
        }
        Ok(Self { letters })
    }

    /// Letters in the order they act.
    pub fn acting_order(&self) -> impl Iterator<Item = usize> + '_ {
        self.letters.iter().rev().copied()
    }

    pub fn apply(&self, x: &Weight, params: &GlobalParams) -> Weight {
        self.acting_order().fold(x.clone(), |acc, i| reflect(&acc, i, params))
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.letters.iter().map(usize::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for WeylWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = crate::partitions::parse_list(s, "Weyl word")?;
        Ok(Self { letters })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Exponents {
    /// `a_1, ..., a_t` in acting order.
    pub a: Vec<i64>,
    /// All `a_k >= 0`.
    pub admissible: bool,
}

/// `a_k = (r_{i_{k-1}} ... r_{i_1} Λ_0 | α_{i_k}^∨)`
pub fn exponents(word: &WeylWord, params: &GlobalParams) -> Exponents {
    let mut x = Weight::lambda0(params);
    let mut a = Vec::with_capacity(word.letters.len());
    for i in word.acting_order() {
        a.push(pair(&x, i, params));
        x = reflect(&x, i, params);
    }
    let admissible = a.iter().all(|&k| k >= 0);
    Exponents { a, admissible }
}

/// `Λ_0 - w Λ_0` in root coordinates.
pub fn lambda0_minus_w_lambda0(word: &WeylWord, params: &GlobalParams) -> Vec<i64> {
    let w = word.apply(&Weight::lambda0(params), params);
    w.alpha.iter().map(|a| -a).collect()
}

/// The divided-power monomial `f_{i_t}^{(a_t)} ... f_{i_1}^{(a_1)}`.
pub fn extremal_monomial(word: &WeylWord, params: &GlobalParams) -> Result<DividedMonomial> {
    let ex = exponents(word, params);
    if !ex.admissible {
        return Err(Error::Invariant(format!(
            "word {word} has a negative exponent: {:?}",
            ex.a
        )));
    }
    let factors = word
        .acting_order()
        .zip(ex.a.iter().map(|&a| a as u32))
        .collect::<Vec<_>>()
        .into_iter()
        .rev()
        .collect();
    Ok(DividedMonomial::new(factors))
}

/// Applies the extremal monomial of `word` to `u_∅` and returns the single
/// partition it produces.
pub fn core_from_word(word: &WeylWord, params: &GlobalParams) -> Result<Partition> {
    let mono = extremal_monomial(word, params)?;
    let v = r_apply_divided(&mono, &RFockVector::basis(Partition::empty()), params)?;
    let mut terms = v.terms();
    match (terms.next(), terms.next()) {
        (Some((lambda, c)), None) if c.is_one() => Ok(lambda.clone()),
        _ => Err(Error::Invariant(format!(
            "word {word} gives {v} instead of a single basis vector"
        ))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaData {
    pub theta: Weight,
    pub rock: bool,
}

/// `θ = cont(ρ) + dδ` together with the RoCK flag.
pub fn theta_decompose(rho: &Partition, d: u32, params: &GlobalParams) -> Result<ThetaData> {
    let rock = is_rock(rho, d, params)?;
    Ok(ThetaData {
        theta: Weight::root(crate::barcore::theta(rho, d, params)),
        rock,
    })
}

/// Every word of length `len` over `I`.
pub fn all_words(len: usize, params: &GlobalParams) -> Vec<WeylWord> {
    let mut out = vec![WeylWord::default()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                params.i_set().map(move |i| {
                    let mut letters = w.letters.clone();
                    letters.push(i);
                    WeylWord { letters }
                })
            })
            .collect();
    }
    out
}
