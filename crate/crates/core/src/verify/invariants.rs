//! Exhaustive property checks. Each function walks a bounded family of inputs
//! and returns the number of cases it checked, or the first violation as an
//! [`Error::Invariant`].

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{pow2, q_i_exponent, LaurentPoly, Rational};
use crate::barcore::{
    all_reachable_cores, bar_core, bar_quotient, cores_up_to, enumerate_class, enumerate_class_by_quotient,
    find_rock_cores, is_bar_core,
};
use crate::error::{Error, Result};
use crate::fock::{
    chi_convert, chi_exponent, q_apply_cartan_bracket, q_apply_e, q_apply_f, q_apply_t, q_apply_word, q_form,
    r_apply_f, r_form, specialize, ChiDirection, QFockVector, RFockVector,
};
use crate::params::GlobalParams;
use crate::partitions::{
    addable_removable, compositions, k_coeff, multipartitions, node_coeff_addable, node_coeff_removable,
    p_strict_partitions, strict_multipartitions, strict_partitions, ColoredComposition, Partition,
};
use crate::symfunc::{
    build_pi, build_pi_omega, closed_formula, colorings, enumerate_m, individual_inner_formula, mult_pieri_e,
    mult_pieri_h, mult_pieri_q, pi_omega_closed_form, power_element, psi_a, sym_inner, to_prove_sum, SymElement,
};
use crate::verify::{apply_composite, cmatt_check, colored_compositions, lmatt_check, pairing_check};
use crate::weyl::{all_words, core_from_word, exponents, lambda0_minus_w_lambda0, Weight, WeylWord};

fn fail<T>(msg: String) -> Result<T> {
    Err(Error::Invariant(msg))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        fail(msg())
    }
}

fn p_strict_upto(max_size: u32, p: u32) -> impl Iterator<Item = Partition> {
    (0..=max_size).flat_map(move |n| p_strict_partitions(n, p))
}

fn strict_upto(max_size: u32) -> impl Iterator<Item = Partition> {
    (0..=max_size).flat_map(strict_partitions)
}

/// Adding a properly addable node and removing it again is the identity;
/// proper addable and removable sets are disjoint; the content moves by `α_i`.
pub fn node_surgery(ell: usize, max_size: u32) -> Result<usize> {
    let params = GlobalParams::new(ell)?;
    let mut count = 0;
    for lambda in p_strict_upto(max_size, params.p) {
        let cont = lambda.content(&params);
        for i in params.i_set() {
            let s = addable_removable(&lambda, i, &params);
            ensure(s.proper_addable.iter().all(|b| !s.proper_removable.contains(b)), || {
                format!("{lambda}: proper addable and removable nodes overlap")
            })?;
            for &b in &s.proper_addable {
                let up = lambda.add_node(b).ok_or_else(|| Error::Invariant(format!("{lambda} + {b}")))?;
                ensure(up.remove_node(b).as_ref() == Some(&lambda), || format!("{lambda} +- {b}"))?;
                let mut expect = cont.clone();
                expect[i] += 1;
                ensure(up.content(&params) == expect, || format!("content of {lambda} + {b}"))?;
                count += 1;
            }
        }
    }
    Ok(count)
}

fn block_value(lambda: &Partition, l: u32, p: u32) -> BigInt {
    if l == 0 || !l.is_multiple_of(p) {
        return BigInt::one();
    }
    let m = lambda.parts().iter().filter(|&&x| x == l).count();
    BigInt::from(if m % 2 == 0 { 0 } else { 2 })
}

/// The node coefficients at `q = 1` are 0, 1 or 2 according to the parity of
/// the multiplicity of a `p`-divisible part next to the node.
pub fn node_coefficients_at_one(ell: usize, max_size: u32) -> Result<usize> {
    let params = GlobalParams::new(ell)?;
    let mut count = 0;
    for lambda in p_strict_upto(max_size, params.p) {
        for i in params.i_set() {
            let s = addable_removable(&lambda, i, &params);
            for &b in &s.proper_addable {
                let v = node_coeff_addable(&lambda, b, i, &params)?.value.eval_q1();
                ensure(v == block_value(&lambda, b.col - 1, params.p), || format!("d^{b}({lambda}) = {v}"))?;
                count += 1;
            }
            for &a in &s.proper_removable {
                let v = node_coeff_removable(&lambda, a, i, &params)?.value.eval_q1();
                ensure(v == block_value(&lambda, a.col, params.p), || format!("d_{a}({lambda}) = {v}"))?;
                count += 1;
            }
        }
    }
    Ok(count)
}

/// `p_λ - h_p(λ) - c_{≠0}(λ)` is even for every strict `λ`.
pub fn chi_exponent_parity(ell: usize, max_size: u32) -> Result<usize> {
    let params = GlobalParams::new(ell)?;
    let mut count = 0;
    for lambda in strict_upto(max_size) {
        chi_exponent(&lambda, &params)?;
        count += 1;
    }
    Ok(count)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for perm in permutations(n - 1) {
        for pos in 0..=perm.len() {
            let mut p = perm.clone();
            p.insert(pos, n - 1);
            out.push(p);
        }
    }
    out
}

/// `K(λ; μ, j)` is unchanged when `μ` and `j` are permuted together, and it
/// equals the `π_λ` coefficient of `Π_{μ, j}`.
pub fn k_coefficients(ell: usize, d_max: u32, n_max: usize) -> Result<usize> {
    let params = GlobalParams::new(ell)?;
    let mut count = 0;
    for d in 0..=d_max {
        let shapes = strict_multipartitions(d, ell + 1);
        for cc in colored_compositions(d, n_max, &params) {
            let pi = build_pi(&cc, &params)?;
            for shape in &shapes {
                let k = k_coeff(shape, &cc, &params);
                ensure(Rational::from_integer(k.clone()) == pi.coeff(shape), || {
                    format!("K({shape}; {cc}) = {k} but Π has {}", pi.coeff(shape))
                })?;
                for perm in permutations(cc.n()) {
                    let mu = perm.iter().map(|&r| cc.mu()[r]).collect();
                    let colors = perm.iter().map(|&r| cc.colors()[r]).collect();
                    let permuted = ColoredComposition::new(mu, colors, &params)?;
                    ensure(k_coeff(shape, &permuted, &params) == k, || {
                        format!("K({shape}; {cc}) changes under {perm:?}")
                    })?;
                }
                count += 1;
            }
            // Shapes with a non-strict 0th component never occur.
            ensure(pi.terms().all(|(key, _)| key.is_strict()), || format!("Π({cc}) has a non-strict key"))?;
        }
    }
    Ok(count)
}

/// `cont(λ) = cont(core(λ)) + wt(λ) δ`, and every order of bar removals ends
/// at the same core.
pub fn core_content(ell: usize, max_size: u32) -> Result<usize> {
    let params = GlobalParams::new(ell)?;
    let delta = params.delta();
    let mut count = 0;
    for lambda in p_strict_upto(max_size, params.p) {
        let core = bar_core(&lambda, &params)?;
        ensure(is_bar_core(&core, &params), || format!("{core} is not a core"))?;
        let w = (lambda.size() - core.size()) / params.p;
        ensure(core.size() + w * params.p == lambda.size(), || format!("size of {lambda}"))?;
        let expect: Vec<u32> = core
            .content(&params)
            .iter()
            .zip(&delta)
            .map(|(&c, &dl)| c + w * dl as u32)
            .collect();
        ensure(lambda.content(&params) == expect, || format!("content of {lambda} vs core {core}"))?;
        let reach = all_reachable_cores(&lambda, &params);
        ensure(reach.len() == 1, || format!("{lambda} reaches cores {reach:?}"))?;
        let quot = bar_quotient(&lambda, &params)?;
        ensure(quot.size() == w, || format!("quotient of {lambda} has size {}", quot.size()))?;
        ensure(quot.is_strict() == lambda.is_strict(), || format!("strictness of {lambda}"))?;
        count += 1;
    }
    Ok(count)
}

/// The quotient map is a bijection from the class of `(ρ, d)` onto all
/// multipartitions of `d`, and from its strict part onto the strict ones.
pub fn quotient_bijection(ell: usize, max_core: u32, d_max: u32) -> Result<usize> {
    let params = GlobalParams::new(ell)?;
    let mut count = 0;
    for rho in cores_up_to(max_core, &params) {
        for d in 0..=d_max {
            for strict in [false, true] {
                let by_filter = enumerate_class(&rho, d, strict, &params)?;
                let by_quot = enumerate_class_by_quotient(&rho, d, strict, &params)?;
                ensure(by_filter == by_quot, || format!("class ({rho}, {d}, strict={strict}) differs"))?;
                let mut quots: Vec<_> = by_filter
                    .iter()
                    .map(|l| bar_quotient(l, &params))
                    .collect::<Result<_>>()?;
                quots.sort();
                let mut all = if strict {
                    strict_multipartitions(d, ell + 1)
                } else {
                    multipartitions(d, ell + 1)
                };
                all.sort();
                ensure(quots == all, || format!("quotients of ({rho}, {d}) are not all multipartitions"))?;
                count += by_filter.len();
            }
        }
    }
    Ok(count)
}

/// Every `Λ_0 - wΛ_0` reached by words of length `<= max_len` is the content
/// of exactly one core, and every core of content in that set is reached.
pub fn cores_are_weyl_orbit(ell: usize, max_len: usize, max_core: u32) -> Result<usize> {
    let params = GlobalParams::new(ell)?;
    let mut orbit = std::collections::BTreeSet::new();
    let mut frontier = vec![Weight::lambda0(&params)];
    orbit.insert(vec![0i64; ell + 1]);
    for _ in 0..max_len {
        let mut next = Vec::new();
        for x in &frontier {
            for i in params.i_set() {
                let y = crate::weyl::reflect(x, i, &params);
                let key: Vec<i64> = y.alpha.iter().map(|a| -a).collect();
                if orbit.insert(key) {
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    let mut count = 0;
    for lambda in p_strict_upto(max_core, params.p) {
        let c: Vec<i64> = lambda.content(&params).iter().map(|&x| x as i64).collect();
        if is_bar_core(&lambda, &params) {
            ensure(orbit.contains(&c), || format!("core {lambda} not in the orbit"))?;
        } else {
            ensure(!orbit.contains(&c), || format!("non-core {lambda} has orbit content"))?;
        }
        count += 1;
    }
    Ok(count)
}

/// For every admissible word, the extremal monomial sends `u_∅` to `u_ρ` with
/// coefficient 1 and `cont(ρ) = Λ_0 - wΛ_0`; words with the same action give
/// the same core.
pub fn extremal_vectors(ell: usize, max_len: usize) -> Result<usize> {
    let params = GlobalParams::new(ell)?;
    let mut by_action: BTreeMap<(usize, Vec<Vec<i64>>), Partition> = BTreeMap::new();
    let mut count = 0;
    for len in 0..=max_len {
        for w in all_words(len, &params) {
            if !exponents(&w, &params).admissible {
                continue;
            }
            let rho = core_from_word(&w, &params)?;
            let c: Vec<i64> = rho.content(&params).iter().map(|&x| x as i64).collect();
            ensure(c == lambda0_minus_w_lambda0(&w, &params), || format!("content of core for {w}"))?;
            let action = word_action(&w, &params);
            if let Some(prev) = by_action.get(&(len, action.clone())) {
                ensure(prev == &rho, || format!("{w} gives {rho}, another word gave {prev}"))?;
            } else {
                by_action.insert((len, action), rho);
            }
            count += 1;
        }
    }
    Ok(count)
}

fn word_action(w: &WeylWord, params: &GlobalParams) -> Vec<Vec<i64>> {
    let mut images = vec![flatten(&w.apply(&Weight::lambda0(params), params))];
    for i in params.i_set() {
        let mut a = vec![0; params.ell + 1];
        a[i] = 1;
        images.push(flatten(&w.apply(&Weight::root(a), params)));
    }
    images
}

fn flatten(x: &Weight) -> Vec<i64> {
    let mut v = vec![x.lambda0];
    v.extend(&x.alpha);
    v
}

/// `E_i F_j - F_j E_i = δ_{ij} (T_i - T_i^{-1}) / (q_i - q_i^{-1})` on every
/// basis vector `u_λ`, `|λ| <= max_size`.
pub fn serre_relations(ell: usize, max_size: u32) -> Result<usize> {
    let params = GlobalParams::new(ell)?;
    let mut count = 0;
    for lambda in p_strict_upto(max_size, params.p) {
        let v = QFockVector::basis(lambda.clone());
        for i in params.i_set() {
            for j in params.i_set() {
                let ef = q_apply_e(i, &q_apply_f(j, &v, &params), &params);
                let fe = q_apply_f(j, &q_apply_e(i, &v, &params), &params);
                let mut lhs = ef;
                lhs.add_vector(&fe.scale(&LaurentPoly::constant(-1)));
                let rhs = if i == j {
                    q_apply_cartan_bracket(i, &v, &params)?
                } else {
                    QFockVector::zero()
                };
                ensure(lhs == rhs, || format!("[E_{i}, F_{j}] on u[{lambda}]: {lhs} vs {rhs}"))?;
                count += 1;
            }
        }
    }
    Ok(count)
}

/// `(F_i u_λ, u_μ)_q = (u_λ, q_i^{-1} T_i E_i u_μ)_q` for all `|λ| <= max_size`
/// and all `μ` one node larger.
pub fn adjointness(ell: usize, max_size: u32) -> Result<usize> {
    let params = GlobalParams::new(ell)?;
    let mut count = 0;
    for lambda in p_strict_upto(max_size, params.p) {
        let v = QFockVector::basis(lambda.clone());
        for mu in p_strict_partitions(lambda.size() + 1, params.p) {
            let w = QFockVector::basis(mu.clone());
            for i in params.i_set() {
                let lhs = q_form(&q_apply_f(i, &v, &params), &w, &params);
                let te = q_apply_t(i, &q_apply_e(i, &w, &params), false, &params);
                let rhs = q_form(&v, &te, &params).shift(-q_i_exponent(i, &params));
                ensure(lhs == rhs, || format!("adjointness of F_{i} at ({lambda}, {mu})"))?;
                count += 1;
            }
        }
    }
    Ok(count)
}

/// For all index words of length `len <= max_len`, the quantum form of
/// `F_{i_1} ... F_{i_n} u_∅` and `F_{j_1} ... F_{j_n} u_∅` at `q = 1` equals the
/// reduced form of the corresponding `f`-images.
pub fn specialization(ell: usize, max_len: usize) -> Result<usize> {
    let params = GlobalParams::new(ell)?;
    let empty_q = QFockVector::basis(Partition::empty());
    let empty_r = RFockVector::basis(Partition::empty());
    let mut count = 0;
    for len in 0..=max_len {
        let words: Vec<Vec<usize>> = all_words(len, &params).into_iter().map(|w| w.letters).collect();
        let mut images = Vec::new();
        for w in &words {
            let q = q_apply_word(w, &empty_q, &params);
            let r = w.iter().rev().fold(empty_r.clone(), |acc, &i| r_apply_f(i, &acc, &params));
            ensure(specialize(&q) == r, || format!("F-word {w:?} does not specialize to the f-word"))?;
            if !r.is_zero() || !q.is_zero() {
                images.push((w, q, r));
            }
        }
        for (a, qa, ra) in &images {
            for (b, qb, rb) in &images {
                let lhs = Rational::from_integer(q_form(qa, qb, &params).eval_q1());
                let rhs = r_form(ra, rb, &params);
                ensure(lhs == rhs, || format!("forms of {a:?}, {b:?}: {lhs} vs {rhs}"))?;
                count += 1;
            }
        }
    }
    Ok(count)
}

/// In the χ basis, `f_i χ_λ = Σ a(λ, B) χ_{λ^B}` with `a = 2` exactly when
/// `p_λ = 1` and `p_{λ^B} = 0`.
pub fn chi_action(ell: usize, max_size: u32) -> Result<usize> {
    let params = GlobalParams::new(ell)?;
    let mut count = 0;
    for lambda in strict_upto(max_size) {
        let chi = RFockVector::basis(lambda.clone()).scale(&pow2(chi_exponent(&lambda, &params)?));
        let pl = lambda.parity()?;
        for i in params.i_set() {
            let image = chi_convert(&r_apply_f(i, &chi, &params), ChiDirection::ToChi, &params)?;
            let mut expect = RFockVector::zero();
            for b in addable_removable(&lambda, i, &params).proper_addable {
                let next = lambda.add_node(b).expect("addable");
                if !next.is_strict() {
                    continue;
                }
                let a = if pl == 1 && next.parity()? == 0 { 2 } else { 1 };
                expect.add_term(next, Rational::from_integer(BigInt::from(a)));
            }
            ensure(image == expect, || format!("f_{i} χ[{lambda}]: {image} vs {expect}"))?;
            count += 1;
        }
    }
    Ok(count)
}

/// `f(μ, j) u_ρ` is supported on strict partitions of core `ρ` and weight
/// `|μ|` for RoCK cores; divided powers stay dyadic throughout.
pub fn monomial_support(ell: usize, d_max: u32, n_max: usize) -> Result<usize> {
    let params = GlobalParams::new(ell)?;
    let mut count = 0;
    for d in 0..=d_max {
        let rho = first_rock(d, &params)?;
        let class: std::collections::BTreeSet<Partition> =
            enumerate_class_by_quotient(&rho, d, true, &params)?.into_iter().collect();
        for cc in colored_compositions(d, n_max, &params) {
            let v = apply_composite(&rho, &cc, &params)?;
            for l in v.support() {
                ensure(class.contains(l), || format!("f({cc}) u[{rho}] leaves the class at {l}"))?;
            }
            count += 1;
        }
    }
    Ok(count)
}

fn first_rock(d: u32, params: &GlobalParams) -> Result<Partition> {
    crate::verify::rock_cores(d, 1, params)
        .into_iter()
        .next()
        .ok_or_else(|| Error::Invariant(format!("no RoCK core for d = {d}")))
}

/// The single-step action `f(k, j) u_α` (and its χ-basis form) on every strict
/// `α` in the classes `(ρ, c)`, `c + k <= d`, for the first RoCK core `ρ` of
/// weight `d`.
pub fn single_step_actions(ell: usize, d: u32) -> Result<usize> {
    let params = GlobalParams::new(ell)?;
    let rho = first_rock(d, &params)?;
    let mut count = 0;
    for c in 0..=d {
        for alpha in enumerate_class_by_quotient(&rho, c, true, &params)? {
            for k in 0..=(d - c) {
                for j in params.j_set() {
                    let r = cmatt_check(&rho, k, j, &alpha, &params)?;
                    ensure(r.ok(), || format!("f({k},{j}) u[{alpha}]: {:?}", r.mismatches))?;
                    let r = lmatt_check(&rho, k, j, &alpha, &params)?;
                    ensure(r.ok(), || format!("f({k},{j}) χ[{alpha}]: {:?}", r.mismatches))?;
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}

/// `Π_{μ, j} = Σ_A ψ_A`, the sum identity over `M(μ, j)`, and the individual
/// inner products `(ψ_A, q_1^{k_0} ⊗ s_1^{k_1} ⊗ ...)`.
pub fn matrix_expansion(ell: usize, d_max: u32, n_max: usize) -> Result<usize> {
    let params = GlobalParams::new(ell)?;
    let mut count = 0;
    for d in 0..=d_max {
        let powers: Vec<(Vec<u32>, SymElement)> = compositions(d, ell + 1)
            .into_iter()
            .map(|k| power_element(&k, &params).map(|e| (k, e)))
            .collect::<Result<_>>()?;
        for cc in colored_compositions(d, n_max, &params) {
            let pi = build_pi(&cc, &params)?;
            let mut sum = SymElement::zero();
            for a in enumerate_m(&cc, &params) {
                let psi = psi_a(&a, &cc, &params)?;
                for (k, e) in &powers {
                    let got = sym_inner(&psi, e);
                    let expect = Rational::from_integer(individual_inner_formula(&a, k));
                    ensure(got == expect, || format!("(ψ_A, power {k:?}) for {cc}, A = {:?}", a.entries))?;
                }
                sum.add(&psi);
            }
            ensure(sum == pi, || format!("Π({cc}) differs from Σ ψ_A"))?;
            let lhs = to_prove_sum(&cc, &params);
            let rhs = closed_formula(&cc, &params) / crate::arith::multinomial(
                &cc.mu().iter().map(|&x| x as u64).collect::<Vec<_>>(),
            );
            ensure(lhs == rhs, || format!("matrix sum for {cc}: {lhs} vs {rhs}"))?;
            count += 1;
        }
    }
    Ok(count)
}

/// The sum of `Π_{ω_d, j}` over `j ∈ J^d` has the multinomial closed form.
pub fn omega_closed_form(ell: usize, d_max: u32) -> Result<usize> {
    let params = GlobalParams::new(ell)?;
    for d in 0..=d_max {
        let a = build_pi_omega(d, &params)?;
        let b = pi_omega_closed_form(d, &params)?;
        ensure(a == b, || format!("Π(ω_{d}) differs from its closed form"))?;
    }
    Ok(d_max as usize + 1)
}

/// `[q_{s_1} ... q_{s_t}, q_1^r] = 2^r (r; s)` and
/// `(f_{s_1} ... f_{s_t}, s_1^r) = (r; s)` with each `f` either `h` or `e`.
pub fn regular_pairings(r_max: u32) -> Result<usize> {
    let params = GlobalParams::new(1)?;
    let one = SymElement::one(&params);
    let mut count = 0;
    for r in 0..=r_max {
        let mut q1 = one.clone();
        let mut s1 = one.clone();
        for _ in 0..r {
            q1 = mult_pieri_q(&q1, 1);
            s1 = mult_pieri_h(&s1, 1, 1, &params)?;
        }
        for total in 0..=r_max {
            for t in 1..=3usize {
                for s in compositions(total, t) {
                    let expect = if total == r {
                        crate::arith::multinomial(&s.iter().map(|&x| x as u64).collect::<Vec<_>>())
                    } else {
                        BigInt::zero()
                    };
                    let qs = s.iter().fold(one.clone(), |acc, &k| mult_pieri_q(&acc, k));
                    let got = sym_inner(&qs, &q1);
                    let want = Rational::from_integer(expect.clone()) * pow2(r as i64);
                    ensure(got == want, || format!("[q_{s:?}, q_1^{r}] = {got}"))?;
                    for mask in 0..(1u32 << t) {
                        let mut f = one.clone();
                        for (idx, &k) in s.iter().enumerate() {
                            f = if mask >> idx & 1 == 1 {
                                mult_pieri_e(&f, 1, k, &params)?
                            } else {
                                mult_pieri_h(&f, 1, k, &params)?
                            };
                        }
                        let got = sym_inner(&f, &s1);
                        ensure(got == Rational::from_integer(expect.clone()), || {
                            format!("(f_{s:?}, s_1^{r}) with mask {mask} = {got}")
                        })?;
                    }
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}

/// `(f(μ, j) u_ρ, f(ν, i) u_ρ) = (Π_{μ, j}, Π_{ν, i})_Sym` for all pairs of
/// colored compositions of `d` with at most `n_max` parts, for the first RoCK
/// core of weight `d`.
pub fn pairings(ell: usize, d: u32, n_max: usize) -> Result<usize> {
    let params = GlobalParams::new(ell)?;
    let rho = first_rock(d, &params)?;
    let ccs = colored_compositions(d, n_max, &params);
    let mut count = 0;
    for a in &ccs {
        for b in &ccs {
            let (fock, sym) = pairing_check(&rho, a, b, &params)?;
            ensure(fock == sym, || format!("pairing ({a}, {b}): {fock} vs {sym}"))?;
            count += 1;
        }
    }
    Ok(count)
}

/// Sanity on the RoCK search: every returned core is a core and RoCK, and
/// no smaller core is missed.
pub fn rock_search(ell: usize, d_max: u32, max_size: u32) -> Result<usize> {
    let params = GlobalParams::new(ell)?;
    let mut count = 0;
    for d in 0..=d_max {
        let found = find_rock_cores(d, &params, max_size);
        let brute: Vec<Partition> = p_strict_upto(max_size, params.p)
            .filter(|l| is_bar_core(l, &params))
            .filter(|l| crate::barcore::is_rock(l, d, &params).unwrap_or(false))
            .collect();
        let mut a = found.clone();
        a.sort();
        let mut b = brute;
        b.sort();
        ensure(a == b, || format!("RoCK cores for d = {d} differ"))?;
        count += found.len();
    }
    Ok(count)
}

/// The colorings helper enumerates `J^n`.
pub fn coloring_count(ell: usize, n: u32) -> Result<usize> {
    let params = GlobalParams::new(ell)?;
    let c = colorings(n, &params);
    ensure(c.len() == ell.pow(n), || "wrong number of colorings".to_string())?;
    Ok(c.len())
}
