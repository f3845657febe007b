//! Colored tableaux and the coefficients `K(λ; μ, j)`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{horizontal_strips, q_skew, vertical_strips, ColoredComposition, Multipartition};
use crate::params::GlobalParams;

/// A colored tableau, stored as the chain of shapes `T^{-1}({1, ..., k})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredTableau {
    /// `chain[k]` is the shape filled by the entries `1..=k`; `chain[0]` is
    /// empty and the last entry is the full shape.
    pub chain: Vec<Multipartition>,
    /// `q_k(T)` for `k = 1..=n`.
    pub q: Vec<u32>,
}

impl ColoredTableau {
    pub fn q_total(&self) -> u32 {
        self.q.iter().sum()
    }
}

/// Enumerates the colored tableaux of shape `shape` and type `cc`.
///
/// Entry `k` fills a horizontal strip of component `j_k` and a vertical strip
/// of component `j_k + 1`. Every intermediate shape must have a strict 0th
/// component, so a shape whose 0th component is not strict has no tableaux.
pub fn colored_tableaux(
    shape: &Multipartition,
    cc: &ColoredComposition,
    params: &GlobalParams,
) -> Vec<ColoredTableau> {
    let mut out = Vec::new();
    if shape.size() != cc.d() || shape.components().len() != params.ell + 1 {
        return out;
    }
    let mut chain = vec![Multipartition::empty(params)];
    let mut q = Vec::new();
    extend(shape, cc, 0, &mut chain, &mut q, &mut out);
    out
}

fn extend(
    shape: &Multipartition,
    cc: &ColoredComposition,
    k: usize,
    chain: &mut Vec<Multipartition>,
    q: &mut Vec<u32>,
    out: &mut Vec<ColoredTableau>,
) {
    let cur = chain.last().unwrap().clone();
    if k == cc.n() {
        if &cur == shape {
            out.push(ColoredTableau {
                chain: chain.clone(),
                q: q.clone(),
            });
        }
        return;
    }
    let (m, j) = (cc.mu()[k], cc.colors()[k]);
    for a in 0..=m {
        let hs = horizontal_strips(cur.component(j), a, Some(shape.component(j)));
        if hs.is_empty() {
            continue;
        }
        let vs = vertical_strips(cur.component(j + 1), m - a, Some(shape.component(j + 1)));
        for h in &hs {
            if j == 0 && !h.is_strict() {
                continue;
            }
            let qk = if j == 0 {
                q_skew(h, cur.component(0)).expect("strip contains its base")
            } else {
                0
            };
            for v in &vs {
                let next = cur.with_component(j, h.clone()).with_component(j + 1, v.clone());
                chain.push(next);
                q.push(qk);
                extend(shape, cc, k + 1, chain, q, out);
                q.pop();
                chain.pop();
            }
        }
    }
}

/// `K(λ; μ, j) = Σ_T 2^{q(T)}`.
pub fn k_coeff(shape: &Multipartition, cc: &ColoredComposition, params: &GlobalParams) -> BigInt {
    colored_tableaux(shape, cc, params)
        .iter()
        .fold(BigInt::zero(), |acc, t| acc + (BigInt::from(1) << t.q_total()))
}
