use super::{Multipartition, Partition};

fn partitions_bounded(n: u32, max: u32, prefix: &mut Vec<u32>, keep: &dyn Fn(&[u32]) -> bool, out: &mut Vec<Partition>) {
    if n == 0 {
        if keep(prefix) {
            out.push(Partition(prefix.clone()));
        }
        return;
    }
    for k in (1..=max.min(n)).rev() {
        prefix.push(k);
        partitions_bounded(n - k, k, prefix, keep, out);
        prefix.pop();
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    partitions_bounded(n, n, &mut Vec::new(), &|_| true, &mut out);
    out
}

pub fn strict_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    strict_rec(n, n, &mut Vec::new(), &mut out);
    out
}

fn strict_rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition(prefix.clone()));
        return;
    }
    for k in (1..=max.min(n)).rev() {
        prefix.push(k);
        strict_rec(n - k, k - 1, prefix, out);
        prefix.pop();
    }
}

/// All `p`-strict partitions of `n`.
pub fn p_strict_partitions(n: u32, p: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    p_strict_rec(n, n, p, &mut Vec::new(), &mut out);
    out
}

fn p_strict_rec(n: u32, max: u32, p: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition(prefix.clone()));
        return;
    }
    for k in (1..=max.min(n)).rev() {
        prefix.push(k);
        let next = if k % p == 0 { k } else { k - 1 };
        p_strict_rec(n - k, next, p, prefix, out);
        prefix.pop();
    }
}

/// All compositions of `d` into `n` nonnegative parts.
pub fn compositions(d: u32, n: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in compositions(d - first, n - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn multi_rec(
    d: u32,
    comps: usize,
    strict_first: bool,
    prefix: &mut Vec<Partition>,
    out: &mut Vec<Multipartition>,
) {
    if prefix.len() + 1 == comps {
        let last = if comps == 1 && strict_first {
            strict_partitions(d)
        } else {
            partitions(d)
        };
        for p in last {
            prefix.push(p);
            out.push(Multipartition::from_components(prefix.clone()));
            prefix.pop();
        }
        return;
    }
    for k in 0..=d {
        let here = if prefix.is_empty() && strict_first {
            strict_partitions(k)
        } else {
            partitions(k)
        };
        for p in here {
            prefix.push(p);
            multi_rec(d - k, comps, strict_first, prefix, out);
            prefix.pop();
        }
    }
}

/// All multipartitions of `d` with `comps` components.
pub fn multipartitions(d: u32, comps: usize) -> Vec<Multipartition> {
    let mut out = Vec::new();
    if comps > 0 {
        multi_rec(d, comps, false, &mut Vec::new(), &mut out);
    }
    out
}

/// Multipartitions of `d` with `comps` components whose 0th component is
/// strict.
pub fn strict_multipartitions(d: u32, comps: usize) -> Vec<Multipartition> {
    let mut out = Vec::new();
    if comps > 0 {
        multi_rec(d, comps, true, &mut Vec::new(), &mut out);
    }
    out
}

/// All `β ⊇ α` with `|β/α| = a` and no two nodes of `β/α` in one column,
/// optionally staying inside `bound`.
pub fn horizontal_strips(alpha: &Partition, a: u32, bound: Option<&Partition>) -> Vec<Partition> {
    let rows = alpha.len() + 1;
    let mut out = Vec::new();
    let mut parts = Vec::with_capacity(rows);
    h_rec(alpha, a, bound, 1, rows, &mut parts, &mut out);
    out
}

fn h_rec(
    alpha: &Partition,
    left: u32,
    bound: Option<&Partition>,
    r: usize,
    rows: usize,
    parts: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if r > rows {
        if left == 0 {
            out.push(Partition::from_unsorted(parts.clone()));
        }
        return;
    }
    let base = alpha.part(r);
    // Row r may grow up to the old length of row r - 1.
    let mut cap = if r == 1 { base + left } else { alpha.part(r - 1) };
    if let Some(b) = bound {
        cap = cap.min(b.part(r));
    }
    if cap < base {
        return;
    }
    for add in 0..=(cap - base).min(left) {
        parts.push(base + add);
        h_rec(alpha, left - add, bound, r + 1, rows, parts, out);
        parts.pop();
    }
}

/// All `β ⊇ α` with `|β/α| = a` and no two nodes of `β/α` in one row,
/// optionally staying inside `bound`.
pub fn vertical_strips(alpha: &Partition, a: u32, bound: Option<&Partition>) -> Vec<Partition> {
    let rows = alpha.len() + a as usize;
    let mut out = Vec::new();
    let mut parts = Vec::with_capacity(rows);
    v_rec(alpha, a, bound, 1, rows, &mut parts, &mut out);
    out
}

fn v_rec(
    alpha: &Partition,
    left: u32,
    bound: Option<&Partition>,
    r: usize,
    rows: usize,
    parts: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if left == 0 {
        let mut full = parts.clone();
        full.extend((r..=alpha.len()).map(|k| alpha.part(k)));
        out.push(Partition::from_unsorted(full));
        return;
    }
    if r > rows {
        return;
    }
    let base = alpha.part(r);
    let above = if r == 1 { u32::MAX } else { parts[r - 2] };
    for add in [0u32, 1] {
        let v = base + add;
        if add > left || v > above || bound.is_some_and(|b| v > b.part(r)) {
            continue;
        }
        if v == 0 {
            // Nothing below an empty row can be filled.
            continue;
        }
        parts.push(v);
        v_rec(alpha, left - add, bound, r + 1, rows, parts, out);
        parts.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::super::part;
    use super::*;

    #[test]
    fn counts() {
        let p: Vec<usize> = (0..10).map(|n| partitions(n).len()).collect();
        assert_eq!(p, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
        let s: Vec<usize> = (0..10).map(|n| strict_partitions(n).len()).collect();
        assert_eq!(s, [1, 1, 1, 2, 2, 3, 4, 5, 6, 8]);
        for n in 0..12 {
            let brute = partitions(n).into_iter().filter(|l| l.is_p_strict(3)).count();
            assert_eq!(p_strict_partitions(n, 3).len(), brute);
        }
        assert_eq!(compositions(3, 2).len(), 4);
        assert_eq!(compositions(0, 3), vec![vec![0, 0, 0]]);
        // bipartitions of 3
        assert_eq!(multipartitions(3, 2).len(), 10);
        assert_eq!(strict_multipartitions(2, 2).len(), 1 + 2 + 1);
    }

    fn brute_strips(alpha: &Partition, a: u32, horizontal: bool) -> Vec<Partition> {
        let mut out: Vec<Partition> = partitions(alpha.size() + a)
            .into_iter()
            .filter(|b| b.contains(alpha))
            .filter(|b| {
                if horizontal {
                    (1..=b.part(1)).all(|c| b.column_len(c) - alpha.column_len(c) <= 1)
                } else {
                    (1..=b.len()).all(|r| b.part(r) - alpha.part(r) <= 1)
                }
            })
            .collect();
        out.sort();
        out
    }

    #[test]
    fn strips_match_brute_force() {
        for n in 0..6 {
            for alpha in partitions(n) {
                for a in 0..4 {
                    let mut h = horizontal_strips(&alpha, a, None);
                    h.sort();
                    assert_eq!(h, brute_strips(&alpha, a, true), "{alpha} h{a}");
                    let mut v = vertical_strips(&alpha, a, None);
                    v.sort();
                    assert_eq!(v, brute_strips(&alpha, a, false), "{alpha} v{a}");
                }
            }
        }
    }

    #[test]
    fn bounded_strips() {
        let b = part(&[2, 1]);
        let mut h = horizontal_strips(&part(&[1]), 1, Some(&b));
        h.sort();
        assert_eq!(h, vec![part(&[1, 1]), part(&[2])]);
        assert_eq!(vertical_strips(&part(&[1]), 2, Some(&b)), vec![part(&[2, 1])]);
        assert!(vertical_strips(&part(&[2]), 2, Some(&b)).is_empty());
    }
}
