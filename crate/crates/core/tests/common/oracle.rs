//! Symmetric polynomials in ten variables built from their tableau
//! definitions, used as an independent check on the Pieri engines.
//!
//! Products are expanded as honest polynomials; the result is decomposed back
//! into a basis by peeling off leading dominant monomials, with the basis
//! coefficients counted directly from tableaux of fixed content.

use std::collections::{BTreeMap, HashMap};

pub const NVARS: usize = 10;
pub type Mono = [u8; NVARS];
pub type Poly = HashMap<Mono, i64>;

/// Which family of tableaux defines the basis.
#[derive(Clone, Copy, Debug)]
pub enum Basis {
    /// Schur functions: semistandard tableaux.
    Schur,
    /// Schur P-functions: marked shifted tableaux with unmarked diagonal.
    SchurP,
}

/// Visits every filling of `shape` by the tableau rules of `basis`, with
/// letters `1..=n`, and hands the content to `emit`. When `budget` is set
/// only fillings of exactly that content are visited.
fn fill(basis: Basis, shape: &[u32], n: usize, budget: Option<&[u8]>, emit: &mut dyn FnMut(&Mono)) {
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| {
            let start = if matches!(basis, Basis::SchurP) { r } else { 0 };
            (start..start + len as usize).map(move |c| (r, c))
        })
        .collect();
    let width = cells.iter().map(|&(_, c)| c + 1).max().unwrap_or(0);
    let mut grid = vec![vec![0u8; width]; shape.len()];
    let mut content = [0u8; NVARS];
    let mut remaining: Mono = [0; NVARS];
    if let Some(b) = budget {
        remaining[..b.len()].copy_from_slice(b);
    }
    rec(basis, &cells, 0, n, budget.is_some(), &mut grid, &mut content, &mut remaining, emit);
}

// Letters are coded so that plain order is the tableau order:
// Schur letters k as k; marked alphabet 1' < 1 < 2' < ... as 2k - 1 (marked) and 2k.
#[allow(clippy::too_many_arguments)]
fn rec(
    basis: Basis,
    cells: &[(usize, usize)],
    idx: usize,
    n: usize,
    budgeted: bool,
    grid: &mut Vec<Vec<u8>>,
    content: &mut Mono,
    remaining: &mut Mono,
    emit: &mut dyn FnMut(&Mono),
) {
    if idx == cells.len() {
        emit(content);
        return;
    }
    let (r, c) = cells[idx];
    let shifted = matches!(basis, Basis::SchurP);
    let first_col = if shifted { r } else { 0 };
    let left = (c > first_col).then(|| grid[r][c - 1]);
    let above = (r > 0).then(|| grid[r - 1][c]);
    let codes: Vec<u8> = match basis {
        Basis::Schur => (1..=n as u8).collect(),
        Basis::SchurP => (1..=2 * n as u8).collect(),
    };
    for code in codes {
        let (letter, marked) = match basis {
            Basis::Schur => (code as usize, false),
            Basis::SchurP => (code.div_ceil(2) as usize, code % 2 == 1),
        };
        if left.is_some_and(|l| code < l) || above.is_some_and(|a| code < a) {
            continue;
        }
        match basis {
            Basis::Schur => {
                if above.is_some_and(|a| code == a) {
                    continue;
                }
            }
            Basis::SchurP => {
                if marked && (left == Some(code) || c == r) {
                    continue;
                }
                if !marked && above == Some(code) {
                    continue;
                }
            }
        }
        let v = letter - 1;
        if budgeted && remaining[v] == 0 {
            continue;
        }
        if budgeted {
            remaining[v] -= 1;
        }
        content[v] += 1;
        grid[r][c] = code;
        rec(basis, cells, idx + 1, n, budgeted, grid, content, remaining, emit);
        content[v] -= 1;
        if budgeted {
            remaining[v] += 1;
        }
    }
}

/// The basis element of `shape` as a polynomial in ten variables.
pub fn basis_poly(basis: Basis, shape: &[u32]) -> Poly {
    let mut out = Poly::new();
    fill(basis, shape, NVARS, None, &mut |m| *out.entry(*m).or_insert(0) += 1);
    out
}

/// Coefficient of `x^content` in the basis element of `shape`.
pub fn tableau_count(basis: Basis, shape: &[u32], content: &[u32]) -> i64 {
    let budget: Vec<u8> = content.iter().map(|&x| x as u8).collect();
    let mut count = 0;
    fill(basis, shape, content.len(), Some(&budget), &mut |_| count += 1);
    count
}

fn monomials_of_degree(r: u32, emit: &mut dyn FnMut(&Mono)) {
    fn go(pos: usize, left: u32, cur: &mut Mono, emit: &mut dyn FnMut(&Mono)) {
        if pos == NVARS - 1 {
            cur[pos] = left as u8;
            emit(cur);
            cur[pos] = 0;
            return;
        }
        for k in 0..=left {
            cur[pos] = k as u8;
            go(pos + 1, left - k, cur, emit);
        }
        cur[pos] = 0;
    }
    let mut cur = [0u8; NVARS];
    go(0, r, &mut cur, emit);
}

/// `h_r = Σ_{|a| = r} x^a`
pub fn h_poly(r: u32) -> Poly {
    let mut out = Poly::new();
    monomials_of_degree(r, &mut |m| {
        out.insert(*m, 1);
    });
    out
}

/// `e_r = Σ x^a` over square-free `a` of degree `r`.
pub fn e_poly(r: u32) -> Poly {
    let mut out = Poly::new();
    monomials_of_degree(r, &mut |m| {
        if m.iter().all(|&x| x <= 1) {
            out.insert(*m, 1);
        }
    });
    out
}

/// `q_r`, the degree-`r` part of `Π (1 + x_i t) / (1 - x_i t)`: each
/// monomial carries `2^{number of variables present}`.
pub fn q_poly(r: u32) -> Poly {
    let mut out = Poly::new();
    monomials_of_degree(r, &mut |m| {
        let support = m.iter().filter(|&&x| x > 0).count() as u32;
        out.insert(*m, 1 << support);
    });
    out
}

/// All partitions of `n`, largest first in lexicographic order.
pub fn partitions_desc(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            go(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn to_mono(lambda: &[u32]) -> Mono {
    let mut m = [0u8; NVARS];
    for (i, &x) in lambda.iter().enumerate() {
        m[i] = x as u8;
    }
    m
}

/// Coefficients of `f g` on the dominant monomials `x^λ`, `λ ⊢ degree`.
pub fn product_dominant(f: &Poly, g: &Poly, degree: u32) -> BTreeMap<Vec<u32>, i64> {
    let mut out = BTreeMap::new();
    for lambda in partitions_desc(degree) {
        if lambda.len() > NVARS {
            continue;
        }
        let target = to_mono(&lambda);
        let mut total = 0i64;
        let mut beta = [0u8; NVARS];
        loop {
            let mut rest = [0u8; NVARS];
            for i in 0..NVARS {
                rest[i] = target[i] - beta[i];
            }
            if let (Some(a), Some(b)) = (f.get(&beta), g.get(&rest)) {
                total += a * b;
            }
            // Odometer over 0 <= beta <= target.
            let mut i = 0;
            while i < NVARS {
                if beta[i] < target[i] {
                    beta[i] += 1;
                    break;
                }
                beta[i] = 0;
                i += 1;
            }
            if i == NVARS {
                break;
            }
        }
        out.insert(lambda, total);
    }
    out
}

/// Writes a symmetric polynomial, given by its dominant coefficients, in
/// `basis`. Panics if a leading term is not a basis shape or the residue does
/// not vanish.
pub fn decompose(basis: Basis, dominant: &BTreeMap<Vec<u32>, i64>) -> BTreeMap<Vec<u32>, i64> {
    let mut residual = dominant.clone();
    let mut out = BTreeMap::new();
    let order: Vec<Vec<u32>> = dominant.keys().rev().cloned().collect();
    for nu in &order {
        let c = residual[nu];
        if c == 0 {
            continue;
        }
        let strict = nu.windows(2).all(|w| w[0] > w[1]);
        assert!(
            matches!(basis, Basis::Schur) || strict,
            "leading term x^{nu:?} is not a strict shape"
        );
        let lead = tableau_count(basis, nu, nu);
        assert!(lead != 0 && c % lead == 0, "leading coefficient of {nu:?}");
        let coeff = c / lead;
        for lambda in &order {
            if lambda <= nu {
                let k = tableau_count(basis, nu, lambda);
                *residual.get_mut(lambda).expect("dominant key") -= coeff * k;
            }
        }
        out.insert(nu.clone(), coeff);
    }
    assert!(residual.values().all(|&x| x == 0), "residue does not vanish");
    out
}

/// `s_α · f` (or `P_α · f`) in the basis, by polynomial expansion.
pub fn multiply(basis: Basis, alpha: &[u32], factor: &Poly, r: u32) -> BTreeMap<Vec<u32>, i64> {
    let size: u32 = alpha.iter().sum();
    let f = basis_poly(basis, alpha);
    decompose(basis, &product_dominant(&f, factor, size + r))
}
