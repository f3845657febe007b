//! Bar-cores, bar-quotients and the RoCK condition.
//!
//! Parts are placed on `p` runners by their residue mod `p`. Runners `i` and
//! `p - i` (for `1 <= i <= ell`) are read together as one Maya diagram: position
//! `k >= 0` is occupied when `i + kp` is a part, and position `-k-1` is
//! occupied when `(p - i) + kp` is *not* a part. The charge of that diagram
//! survives bar removal and the partition it encodes is the `i`th quotient
//! component; the 0th component collects the parts divisible by `p`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::GlobalParams;
use crate::partitions::{
    multipartitions, p_strict_partitions, strict_multipartitions, Multipartition, Partition,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoreQuotientData {
    pub core: Partition,
    pub weight: u32,
    pub quotient: Multipartition,
}

fn sorted_desc(mut v: Vec<u32>) -> Partition {
    v.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(v).expect("positive parts")
}

/// All partitions reachable from `parts` by removing one p-bar.
fn bar_removals(parts: &[u32], p: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for (idx, &x) in parts.iter().enumerate() {
        if x > p {
            let mut v = parts.to_vec();
            v[idx] = x - p;
            if sorted_desc(v.clone()).is_p_strict(p) {
                out.push(v);
            }
        } else if x == p {
            let mut v = parts.to_vec();
            v.remove(idx);
            out.push(v);
        }
        for (jdx, &y) in parts.iter().enumerate().skip(idx + 1) {
            if x + y == p {
                let v = parts
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != idx && k != jdx)
                    .map(|(_, &z)| z)
                    .collect();
                out.push(v);
            }
        }
    }
    out
}

/// The p-bar-core, obtained by removing p-bars until none is left.
pub fn bar_core(lambda: &Partition, params: &GlobalParams) -> Result<Partition> {
    lambda.check_p_strict(params.p)?;
    let mut cur = lambda.parts().to_vec();
    while let Some(next) = bar_removals(&cur, params.p).into_iter().next() {
        cur = next;
    }
    Ok(sorted_desc(cur))
}

/// Every core reachable by some sequence of bar removals; used to check that
/// the removal order does not matter.
pub fn all_reachable_cores(lambda: &Partition, params: &GlobalParams) -> BTreeSet<Partition> {
    let mut seen = BTreeSet::new();
    let mut cores = BTreeSet::new();
    let mut stack = vec![sorted_desc(lambda.parts().to_vec())];
    while let Some(cur) = stack.pop() {
        if !seen.insert(cur.clone()) {
            continue;
        }
        let next = bar_removals(cur.parts(), params.p);
        if next.is_empty() {
            cores.insert(cur);
        }
        stack.extend(next.into_iter().map(sorted_desc));
    }
    cores
}

pub fn is_bar_core(lambda: &Partition, params: &GlobalParams) -> bool {
    lambda.is_p_strict(params.p) && bar_removals(lambda.parts(), params.p).is_empty()
}

pub fn check_bar_core(rho: &Partition, params: &GlobalParams) -> Result<()> {
    if is_bar_core(rho, params) {
        Ok(())
    } else {
        Err(Error::NotBarCore {
            partition: rho.to_string(),
            p: params.p,
        })
    }
}

pub fn bar_weight(lambda: &Partition, params: &GlobalParams) -> Result<u32> {
    let core = bar_core(lambda, params)?;
    Ok((lambda.size() - core.size()) / params.p)
}

/// Charge of the runner pair `(i, p - i)`, `1 <= i <= ell`.
pub fn charge(lambda: &Partition, i: usize, params: &GlobalParams) -> i64 {
    let p = params.p;
    let i = i as u32;
    let on = |r: u32| lambda.parts().iter().filter(|&&x| x % p == r).count() as i64;
    on(i) - on(p - i)
}

/// Charges `(c_1, ..., c_ell)`.
pub fn charges(lambda: &Partition, params: &GlobalParams) -> Vec<i64> {
    (1..=params.ell).map(|i| charge(lambda, i, params)).collect()
}

/// The partition encoded by the Maya diagram on runners `i` and `p - i`.
fn runner_partition(lambda: &Partition, i: usize, params: &GlobalParams) -> Partition {
    let p = params.p;
    let i = i as u32;
    let mut occupied: BTreeSet<i64> = BTreeSet::new();
    let mut low = -1i64;
    for &x in lambda.parts() {
        if x % p == i {
            occupied.insert(((x - i) / p) as i64);
        } else if x % p == p - i {
            low = low.min(-(((x - (p - i)) / p) as i64) - 1);
        }
    }
    let absent: BTreeSet<i64> = lambda
        .parts()
        .iter()
        .filter(|&&x| x % p == p - i)
        .map(|&x| -(((x - (p - i)) / p) as i64) - 1)
        .collect();
    for n in low..0 {
        if !absent.contains(&n) {
            occupied.insert(n);
        }
    }
    let c = charge(lambda, i as usize, params);
    // Positions below `low` are all occupied and contribute zero parts.
    let parts: Vec<u32> = occupied
        .iter()
        .rev()
        .enumerate()
        .map(|(k, &m)| (m - c + k as i64 + 1) as u32)
        .filter(|&x| x > 0)
        .collect();
    Partition::new(parts).expect("Maya diagram yields a partition")
}

/// The bar-quotient `(λ^(0), ..., λ^(ell))`.
pub fn bar_quotient(lambda: &Partition, params: &GlobalParams) -> Result<Multipartition> {
    lambda.check_p_strict(params.p)?;
    let p = params.p;
    let zero = Partition::new(
        lambda
            .parts()
            .iter()
            .filter(|&&x| x % p == 0)
            .map(|&x| x / p)
            .collect(),
    )
    .expect("subsequence of a partition");
    let mut comps = vec![zero];
    comps.extend((1..=params.ell).map(|i| runner_partition(lambda, i, params)));
    Multipartition::new(comps, params)
}

pub fn core_quotient(lambda: &Partition, params: &GlobalParams) -> Result<CoreQuotientData> {
    let core = bar_core(lambda, params)?;
    Ok(CoreQuotientData {
        weight: (lambda.size() - core.size()) / params.p,
        quotient: bar_quotient(lambda, params)?,
        core,
    })
}

/// Rebuilds the partition with the given core and quotient.
pub fn from_core_quotient(
    core: &Partition,
    quotient: &Multipartition,
    params: &GlobalParams,
) -> Result<Partition> {
    check_bar_core(core, params)?;
    let p = params.p;
    let mut parts: Vec<u32> = quotient.component(0).parts().iter().map(|&x| x * p).collect();
    for i in 1..=params.ell {
        let c = charge(core, i, params);
        let pi = quotient.component(i);
        let count = pi.len() as i64 + c.max(0) + 1;
        let positions: Vec<i64> = (1..=count)
            .map(|k| pi.part(k as usize) as i64 + c - k)
            .collect();
        let bottom = *positions.last().unwrap();
        let occupied: BTreeSet<i64> = positions.iter().copied().collect();
        let iu = i as u32;
        for &m in &positions {
            if m >= 0 {
                parts.push(iu + m as u32 * p);
            }
        }
        for n in bottom..0 {
            if !occupied.contains(&n) {
                parts.push((p - iu) + (-n - 1) as u32 * p);
            }
        }
    }
    Ok(sorted_desc(parts))
}

/// All p-strict partitions of core `rho` and weight `d`, by filtering the
/// p-strict partitions of `|rho| + pd`.
pub fn enumerate_class(
    rho: &Partition,
    d: u32,
    strict_only: bool,
    params: &GlobalParams,
) -> Result<Vec<Partition>> {
    check_bar_core(rho, params)?;
    let n = rho.size() + params.p * d;
    let mut out = Vec::new();
    for l in p_strict_partitions(n, params.p) {
        if strict_only && !l.is_strict() {
            continue;
        }
        if &bar_core(&l, params)? == rho {
            out.push(l);
        }
    }
    out.sort();
    Ok(out)
}

/// The same set as [`enumerate_class`], built by inverting the quotient map.
pub fn enumerate_class_by_quotient(
    rho: &Partition,
    d: u32,
    strict_only: bool,
    params: &GlobalParams,
) -> Result<Vec<Partition>> {
    check_bar_core(rho, params)?;
    let comps = params.ell + 1;
    let quots = if strict_only {
        strict_multipartitions(d, comps)
    } else {
        multipartitions(d, comps)
    };
    let mut out = quots
        .iter()
        .map(|q| from_core_quotient(rho, q, params))
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

/// `(θ | α_i^∨)` for `θ = Σ θ_j α_j`.
pub(crate) fn pair_root_coords(theta: &[i64], i: usize, params: &GlobalParams) -> i64 {
    let s: i64 = params.i_set().map(|j| theta[j] * params.gram(j, i)).sum();
    2 * s / params.gram(i, i)
}

/// `θ = cont(ρ) + dδ` in root coordinates.
pub fn theta(rho: &Partition, d: u32, params: &GlobalParams) -> Vec<i64> {
    rho.content(params)
        .iter()
        .zip(params.delta())
        .map(|(&c, dl)| c as i64 + d as i64 * dl)
        .collect()
}

/// RoCK condition for the block of `rho` and weight `d`:
/// `(θ | α_0^∨) >= 2d` and `(θ | α_i^∨) >= d - 1` for `1 <= i < ell`.
///
/// The coroot `α_ell^∨` is left out: since `δ` is null, the pairings with all
/// coroots satisfy a linear relation that the lower bounds for every `i` up
/// to `ell` would contradict once `d >= 2`.
pub fn is_rock(rho: &Partition, d: u32, params: &GlobalParams) -> Result<bool> {
    check_bar_core(rho, params)?;
    let th = theta(rho, d, params);
    let d = d as i64;
    let ok0 = pair_root_coords(&th, 0, params) >= 2 * d;
    let ok = (1..params.ell).all(|i| pair_root_coords(&th, i, params) >= d - 1);
    Ok(ok0 && ok)
}

/// The p-bar-core with charges `(c_1, ..., c_ell)`.
pub fn core_from_charges(charges: &[i64], params: &GlobalParams) -> Partition {
    let p = params.p as i64;
    let mut parts = Vec::new();
    for (idx, &c) in charges.iter().enumerate() {
        let i = idx as i64 + 1;
        let r = if c >= 0 { i } else { p - i };
        for k in 0..c.abs() {
            parts.push((r + k * p) as u32);
        }
    }
    sorted_desc(parts)
}

fn core_size_for_charge(c: i64, i: i64, p: i64) -> i64 {
    let a = c.abs();
    let r = if c >= 0 { i } else { p - i };
    a * r + p * a * (a - 1) / 2
}

/// All p-bar-cores of size at most `max_size` that are RoCK for weight `d`,
/// ordered by size and then by parts.
pub fn find_rock_cores(d: u32, params: &GlobalParams, max_size: u32) -> Vec<Partition> {
    let mut out: Vec<Partition> = cores_up_to(max_size, params)
        .into_iter()
        .filter(|rho| is_rock(rho, d, params).unwrap_or(false))
        .collect();
    out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.cmp(b)));
    out
}

/// All p-bar-cores of size at most `max_size`, enumerated through their
/// charge vectors.
pub fn cores_up_to(max_size: u32, params: &GlobalParams) -> Vec<Partition> {
    let p = params.p as i64;
    let budget = max_size as i64;
    let mut out = Vec::new();
    let mut charges = Vec::with_capacity(params.ell);
    charges_rec(params.ell, p, budget, &mut charges, &mut |c| {
        out.push(core_from_charges(c, params))
    });
    out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.cmp(b)));
    out
}

fn charges_rec(ell: usize, p: i64, budget: i64, acc: &mut Vec<i64>, emit: &mut dyn FnMut(&[i64])) {
    if acc.len() == ell {
        emit(acc);
        return;
    }
    let i = acc.len() as i64 + 1;
    for sign in [1i64, -1] {
        let mut a = if sign == 1 { 0 } else { 1 };
        loop {
            let c = sign * a;
            let cost = core_size_for_charge(c, i, p);
            if cost > budget {
                break;
            }
            acc.push(c);
            charges_rec(ell, p, budget - cost, acc, emit);
            acc.pop();
            a += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn params(ell: usize) -> GlobalParams {
        GlobalParams::new(ell).unwrap()
    }

    #[test]
    fn worked_example_core() {
        let p = params(2);
        let l = part(&[16, 11, 10, 10, 9, 4, 1]);
        assert_eq!(bar_core(&l, &p).unwrap(), part(&[1]));
        assert_eq!(bar_weight(&l, &p).unwrap(), 12);
        let q = bar_quotient(&l, &p).unwrap();
        assert_eq!(q.component(0), &part(&[2, 2]));
        assert_eq!(q.size(), 12);
        assert_eq!(from_core_quotient(&part(&[1]), &q, &p).unwrap(), l);
    }

    #[test]
    fn trivial_cores() {
        for ell in 1..4 {
            let p = params(ell);
            assert_eq!(bar_core(&part(&[p.p]), &p).unwrap(), Partition::empty());
            for m in 1..4 {
                let q = bar_quotient(&part(&[p.p * m]), &p).unwrap();
                assert_eq!(q.component(0), &part(&[m]));
                assert!(q.components()[1..].iter().all(Partition::is_empty));
            }
            for rho in cores_up_to(15, &p) {
                assert_eq!(bar_core(&rho, &p).unwrap(), rho);
                assert!(bar_quotient(&rho, &p).unwrap().is_empty());
            }
        }
        assert!(bar_core(&part(&[2, 2]), &params(2)).is_err());
    }

    #[test]
    fn charge_enumeration_matches_filter() {
        for ell in 1..=3 {
            let p = params(ell);
            let filtered: Vec<Partition> = (0..=18)
                .flat_map(|n| p_strict_partitions(n, p.p))
                .filter(|l| is_bar_core(l, &p))
                .collect();
            let mut a = filtered.clone();
            a.sort();
            let mut b = cores_up_to(18, &p);
            b.sort();
            assert_eq!(a, b, "ell = {ell}");
        }
    }

    #[test]
    fn rock_examples() {
        let p = params(2);
        assert!(is_rock(&part(&[2, 1]), 1, &p).unwrap());
        assert!(!is_rock(&part(&[1]), 1, &p).unwrap());
        assert!(!is_rock(&Partition::empty(), 1, &p).unwrap());
        assert_eq!(find_rock_cores(1, &p, 10)[0], part(&[2, 1]));
        assert_eq!(find_rock_cores(2, &p, 40)[0], part(&[12, 7, 6, 2, 1]));
        assert_eq!(find_rock_cores(3, &p, 80)[0], part(&[22, 17, 12, 11, 7, 6, 2, 1]));
        let p1 = params(1);
        assert_eq!(find_rock_cores(1, &p1, 10)[0], part(&[1]));
        assert_eq!(find_rock_cores(2, &p1, 10)[0], part(&[4, 1]));
        assert_eq!(find_rock_cores(3, &p1, 20)[0], part(&[7, 4, 1]));
        let all = find_rock_cores(0, &p1, 2);
        assert!(all.contains(&Partition::empty()) && all.contains(&part(&[1])));
        assert!(find_rock_cores(1, &p, 0).is_empty());
    }
}
