//! Characters of `gl(m|n)` and `gl(m+n)` modules and their Weyl-type
//! alternating sums.
//!
//! For `gl(m|n)` the universe is `x[-m..-1]` (inverse side) and `y[1..n]`;
//! the `x` variables enter with positive exponents, so the filtration is the
//! total degree in the `x_i^{-1}`. For `gl(m+n)` it is `x[-m..-1]` (inverse
//! side) and `x[1..n]`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::json;

use crate::coxeter::{star_even, star_super, CosetElement};
use crate::error::{Error, Result};
use crate::partitions::{GeneralizedPartition, Partition};
use crate::report::{combine, compare, VerifyReport};
use crate::sab::{accumulate_levels, sab_via_lr, CosetCutoff, SabRequest};
use crate::schur::{hook_schur, hook_universe, hook_x_names, hook_y_names, permutations, rational_schur, Letters};
use crate::series::{binomial_product, expand_inverse_product, GradedAlphabet, LaurentSeries, Parity, Side, Universe};

fn check_dominant(block: &[i64], what: &str) -> Result<()> {
    if block.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Weight(format!("{what} block {block:?} is not dominant")));
    }
    Ok(())
}

fn fmt_blocks(f: &mut fmt::Formatter<'_>, neg: &[i64], pos: &[i64]) -> fmt::Result {
    let j = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
    write!(f, "({} | {})", j(neg), j(pos))
}

/// A weight of `gl(m|n)`: `neg = (Λ_{-m}, …, Λ_{-1})`, `pos = (Λ_1, …, Λ_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SuperWeight {
    neg: Vec<i64>,
    pos: Vec<i64>,
}

impl SuperWeight {
    /// A dominant weight.
    pub fn new(neg: Vec<i64>, pos: Vec<i64>) -> Result<Self> {
        check_dominant(&neg, "even")?;
        check_dominant(&pos, "odd")?;
        Ok(SuperWeight { neg, pos })
    }

    pub fn zero(m: usize, n: usize) -> Self {
        SuperWeight {
            neg: vec![0; m],
            pos: vec![0; n],
        }
    }

    pub fn m(&self) -> usize {
        self.neg.len()
    }

    pub fn n(&self) -> usize {
        self.pos.len()
    }

    pub fn neg(&self) -> &[i64] {
        &self.neg
    }

    pub fn pos(&self) -> &[i64] {
        &self.pos
    }

    /// `Λ_{-1}`, or 0 when `m = 0`.
    pub fn lambda_minus_one(&self) -> i64 {
        self.neg.last().copied().unwrap_or(0)
    }

    /// Membership in the class of weights of hook Schur characters: all
    /// entries nonnegative and `ℓ(Λ^{>0}) ≤ Λ_{-1}`, so that `λ(Λ)` is a
    /// partition.
    pub fn is_hook_class(&self) -> bool {
        self.neg.iter().chain(&self.pos).all(|&v| v >= 0)
            && (self.m() == 0 || self.pos.iter().filter(|&&v| v > 0).count() as i64 <= self.lambda_minus_one())
    }

    /// `λ(Λ) = (Λ_{-m}, …, Λ_{-1}, (Λ^{>0})')`.
    pub fn hook_partition(&self) -> Result<Partition> {
        if !self.is_hook_class() {
            return Err(Error::Weight(format!("{self} is not in the hook class")));
        }
        let pos = Partition::new(self.pos.iter().map(|&v| v as usize).collect())?;
        let mut parts: Vec<usize> = self.neg.iter().map(|&v| v as usize).collect();
        parts.extend(pos.conjugate().parts());
        Partition::new(parts)
    }

    /// Inverse of [`hook_partition`](Self::hook_partition).
    pub fn from_hook_partition(lambda: &Partition, m: usize, n: usize) -> Result<Self> {
        if !lambda.is_hook(m, n) {
            return Err(Error::Weight(format!("{lambda} is not an ({m}|{n}) hook partition")));
        }
        let neg = (0..m).map(|i| lambda.part(i) as i64).collect();
        let tail = Partition::new(lambda.parts().iter().skip(m).copied().collect())?.conjugate();
        let pos = (0..n).map(|j| tail.part(j) as i64).collect();
        Ok(SuperWeight { neg, pos })
    }
}

impl fmt::Display for SuperWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_blocks(f, &self.neg, &self.pos)
    }
}

/// A weight of `gl(m+n)` indexed by `[-m] ∪ [n]`, dominant for `gl(m) ⊕ gl(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EvenWeight {
    neg: Vec<i64>,
    pos: Vec<i64>,
}

impl EvenWeight {
    pub fn new(neg: Vec<i64>, pos: Vec<i64>) -> Result<Self> {
        check_dominant(&neg, "[-m]")?;
        check_dominant(&pos, "[n]")?;
        Ok(EvenWeight { neg, pos })
    }

    pub fn m(&self) -> usize {
        self.neg.len()
    }

    pub fn n(&self) -> usize {
        self.pos.len()
    }

    pub fn neg(&self) -> &[i64] {
        &self.neg
    }

    pub fn pos(&self) -> &[i64] {
        &self.pos
    }

    /// The weight as a vector in `Z^{m+n}`.
    pub fn to_vec(&self) -> Vec<i64> {
        self.neg.iter().chain(&self.pos).copied().collect()
    }
}

impl fmt::Display for EvenWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_blocks(f, &self.neg, &self.pos)
    }
}

/// `x[-m..-1]` on the inverse side followed by `x[1..n]`.
pub fn unitary_universe(m: usize, n: usize) -> Arc<Universe> {
    Universe::new(
        (1..=m as i64)
            .rev()
            .map(|i| (format!("x[-{i}]"), Side::Inverse))
            .chain((1..=n).map(|j| (format!("x[{j}]"), Side::Direct))),
    )
    .expect("distinct names")
}

fn pos_names(n: usize) -> Vec<String> {
    (1..=n).map(|j| format!("x[{j}]")).collect()
}

/// `x[-m], …, x[-1]` in declaration order.
fn neg_names(m: usize) -> Vec<String> {
    let mut v = hook_x_names(m);
    v.reverse();
    v
}

fn letters(u: &Arc<Universe>, names: &[String]) -> Letters {
    Letters::with_power(u, names.iter().map(String::as_str), 1).expect("own symbols")
}

fn block_schur(block: &[i64], l: &Letters) -> Result<LaurentSeries> {
    if block.is_empty() {
        return Ok(LaurentSeries::one(l.universe()));
    }
    rational_schur(&GeneralizedPartition::new(block.to_vec())?, l)
}

/// `∏_{i,j} x_i^{-1} t_j` monomials for `i ∈ [-m]` and `t_j` the second block.
fn kernel_monomials(u: &Arc<Universe>, m: usize, second: &[String]) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    for x in neg_names(m) {
        for t in second {
            let mut mono = u.unit();
            mono[u.index(&x).expect("own")] = -1;
            mono[u.index(t).expect("own")] = 1;
            out.push(mono);
        }
    }
    out
}

/// `ch K(Λ) = s_{Λ^{<0}}(x) s_{Λ^{>0}}(y) ∏(1 + x_i^{-1} y_j)`.
pub fn kac_character(weight: &SuperWeight) -> Result<LaurentSeries> {
    kac_blocks(weight.neg(), weight.pos())
}

fn kac_blocks(neg: &[i64], pos: &[i64]) -> Result<LaurentSeries> {
    let (m, n) = (neg.len(), pos.len());
    let u = hook_universe(m, n);
    let x = letters(&u, &neg_names(m));
    let y = letters(&u, &hook_y_names(n));
    let kernel: Vec<_> = kernel_monomials(&u, m, &hook_y_names(n))
        .into_iter()
        .map(|k| (1, k))
        .collect();
    Ok(&(&block_schur(neg, &x)? * &block_schur(pos, &y)?) * &binomial_product(&u, &kernel))
}

/// `ch L(Λ)`, the hook Schur polynomial of `λ(Λ)`.
pub fn irreducible_super(weight: &SuperWeight) -> Result<LaurentSeries> {
    Ok(hook_schur(&weight.hook_partition()?, weight.m(), weight.n()))
}

/// `(x_{-m}⋯x_{-1})^{-d} ch L(Λ)` next to `S_ν^{[n]/[-m]'}` with
/// `ν = λ' - (m^d)`, both exact.
pub fn hook_bridge(weight: &SuperWeight, d: usize) -> Result<(LaurentSeries, LaurentSeries)> {
    let lambda = weight.hook_partition()?;
    if d < lambda.first() {
        return Err(Error::Invalid(format!("need d ≥ λ_1 = {}", lambda.first())));
    }
    let (m, n) = (weight.m(), weight.n());
    let u = hook_universe(m, n);
    let shift = letters(&u, &neg_names(m)).monomial(&vec![-(d as i64); m]);
    let left = irreducible_super(weight)?.mul_monomial(&shift);
    let alpha = GradedAlphabet::new(Side::Direct, hook_y_names(n).into_iter().map(|s| (s, Parity::Even)));
    let beta = GradedAlphabet::new(Side::Inverse, neg_names(m).into_iter().map(|s| (s, Parity::Odd)));
    let nu = crate::coxeter::hook_to_nu(&lambda, m, d);
    let right = sab_via_lr(&SabRequest::in_universe(nu, alpha, beta, None, u)?)?;
    Ok((left, right))
}

/// `Σ_{ℓ(w) = level} (-1)^{ℓ(w)} ch K(w∗Λ)` truncated at absolute inverse
/// degree `t`, with its number of nonvanishing terms.
fn hook_level(lambda: &Partition, m: usize, n: usize, d: usize, level: usize, t: i64) -> (LaurentSeries, usize) {
    let u = hook_universe(m, n);
    let terms: Vec<LaurentSeries> = Partition::all_of(level)
        .into_par_iter()
        .filter_map(|mu| {
            let w = CosetElement::new(mu);
            let (neg, pos) = star_super(&w, lambda, m, n, d).ok()?;
            let k = kac_blocks(&neg, &pos).ok()?.truncate(t);
            if k.is_zero() {
                return None;
            }
            Some(if w.sign() < 0 { -&k } else { k })
        })
        .collect();
    let c = terms.len();
    (
        terms
            .into_iter()
            .fold(LaurentSeries::zero(&u).truncate(t), |a, b| &a + &b),
        c,
    )
}

/// `ch L(Λ) = Σ_{w ∈ 𝒲_{m|n}(Λ)} (-1)^{ℓ(w)} ch K(w∗Λ)` below relative
/// order `n_trunc`. For a typical weight (`Λ_{-1} ≥ n`) with a single
/// surviving term, the exact equality `ch L = ch K` is checked as well.
pub fn check_weyl_hook(weight: &SuperWeight, n_trunc: i64, cutoff: CosetCutoff) -> Result<VerifyReport> {
    let lambda = weight.hook_partition()?;
    let (m, n) = (weight.m(), weight.n());
    let d = lambda.first().max(1);
    let t = n_trunc - weight.neg().iter().sum::<i64>();
    let used = std::cell::Cell::new((0, 0));
    let params = json!({ "weight": weight.to_string(), "lambda": lambda.to_string(), "m": m, "n": n });
    let rep = compare("weyl-hook", params.clone(), || {
        let zero = LaurentSeries::zero(&hook_universe(m, n)).truncate(t);
        let (sum, l, c) = accumulate_levels(zero, cutoff, |level| hook_level(&lambda, m, n, d, level, t));
        used.set((l, c));
        Ok((irreducible_super(weight)?.truncate(t), sum))
    })?;
    let (l, c) = used.get();
    let rep = rep.with_terms(c).with_note(format!("cutoff L={l}"));
    if weight.lambda_minus_one() >= n as i64 && c == 1 && rep.passed() {
        let exact = compare("weyl-hook", params, || {
            Ok((irreducible_super(weight)?, kac_character(weight)?))
        })?;
        return Ok(exact.with_terms(1).with_note("typical: single Kac term"));
    }
    Ok(rep)
}

/// All `(m|n)` hook partitions of size `≤ max_size`, checked with
/// [`check_weyl_hook`].
pub fn check_weyl_hook_matrix(
    m: usize,
    n: usize,
    max_size: usize,
    n_trunc: i64,
    cutoff: CosetCutoff,
) -> Result<VerifyReport> {
    let reps: Vec<VerifyReport> = Partition::all_up_to(max_size)
        .into_par_iter()
        .filter(|l| l.is_hook(m, n))
        .map(|l| check_weyl_hook(&SuperWeight::from_hook_partition(&l, m, n)?, n_trunc, cutoff))
        .collect::<Result<_>>()?;
    Ok(combine(
        "weyl-hook",
        json!({ "m": m, "n": n, "max_size": max_size }),
        &reps,
    ))
}

/// The `gl(m|n)` denominator identity
/// `∏_{i<i'}(x_i - x_{i'}) ∏_{j<j'}(y_j - y_{j'}) = ∏_{i,j}(x_i + y_j) · Σ_{ℓ(μ)≤m,n} (-1)^{|μ|} a_x(μ*+δ_m - n) a_y(μ+δ_n)`
/// with `δ_m = (m-1, …, 0)` and `δ_n = (n-1, …, 0)`, below relative order `n_trunc`.
pub fn check_denominator_super(m: usize, n: usize, n_trunc: i64) -> Result<VerifyReport> {
    let u = hook_universe(m, n);
    let xs = neg_names(m);
    let ys = hook_y_names(n);
    let base = (m * n) as i64 - (m * m.saturating_sub(1) / 2) as i64;
    let t = n_trunc + base;
    let count = std::cell::Cell::new(0);
    let rep = compare("denominator", json!({ "m": m, "n": n }), || {
        let mut vander = LaurentSeries::one(&u);
        for names in [&xs, &ys] {
            for a in 0..names.len() {
                for b in a + 1..names.len() {
                    let f = &LaurentSeries::var(&u, &names[a], 1)? - &LaurentSeries::var(&u, &names[b], 1)?;
                    vander = &vander * &f;
                }
            }
        }
        let mut sum = LaurentSeries::zero(&u).truncate(t);
        let mut c = 0;
        for mu in Partition::all_up_to(n_trunc.max(0) as usize) {
            if mu.len() > m.min(n) {
                continue;
            }
            c += 1;
            let ex: Vec<i64> = (0..m)
                .map(|k| -(mu.part(m - 1 - k) as i64) + (m - 1 - k) as i64 - n as i64)
                .collect();
            let ey: Vec<i64> = (0..n).map(|k| mu.part(k) as i64 + (n - 1 - k) as i64).collect();
            let ax = alternant(&u, &xs, &ex);
            let ay = alternant(&u, &ys, &ey);
            let term = (&ax * &ay).truncate(t);
            sum = if mu.weight() % 2 == 1 {
                &sum - &term
            } else {
                &sum + &term
            };
        }
        count.set(c);
        let mut kernel = LaurentSeries::one(&u);
        for x in &xs {
            for y in &ys {
                kernel = &kernel * &(&LaurentSeries::var(&u, x, 1)? + &LaurentSeries::var(&u, y, 1)?);
            }
        }
        Ok((vander, &kernel * &sum))
    })?;
    Ok(rep.with_terms(count.get()))
}

/// `Σ_{σ} sgn(σ) t^{σ(e)}` over the named variables.
fn alternant(u: &Arc<Universe>, names: &[String], e: &[i64]) -> LaurentSeries {
    let mut out = LaurentSeries::zero(u);
    for (perm, sign) in permutations(names.len()) {
        let mut mono = u.unit();
        for (k, &p) in perm.iter().enumerate() {
            mono[u.index(&names[p]).expect("own")] = e[k] as i32;
        }
        out.add_term(mono, BigInt::from(sign));
    }
    out
}

/// `Λ(λ) = (-d, …, -d, -λ⁻_q - d, …, -λ⁻_1 - d; λ⁺_1, …, λ⁺_p, 0, …, 0)`.
pub fn howe_weight(lambda: &GeneralizedPartition, m: usize, n: usize) -> Result<EvenWeight> {
    let (plus, minus) = (lambda.plus(), lambda.minus());
    if plus.len() > n || minus.len() > m {
        return Err(Error::Weight(format!("{lambda} does not fit m = {m}, n = {n}")));
    }
    let d = lambda.d() as i64;
    EvenWeight::new(
        (0..m).rev().map(|i| -(minus.part(i) as i64) - d).collect(),
        (0..n).map(|j| plus.part(j) as i64).collect(),
    )
}

/// `ch V(Λ) = s_{Λ^{<0}}(x_{[-m]}) s_{Λ^{>0}}(x_{[n]}) / ∏(1 - x_i^{-1}x_j)`
/// expanded `n_trunc` steps past its leading term.
pub fn verma_character(weight: &EvenWeight, n_trunc: i64) -> Result<LaurentSeries> {
    verma_blocks(weight.neg(), weight.pos(), n_trunc)
}

fn verma_blocks(neg: &[i64], pos: &[i64], n_trunc: i64) -> Result<LaurentSeries> {
    let (m, n) = (neg.len(), pos.len());
    let u = unitary_universe(m, n);
    let head = &block_schur(neg, &letters(&u, &neg_names(m)))? * &block_schur(pos, &letters(&u, &pos_names(n)))?;
    let kernel: Vec<_> = kernel_monomials(&u, m, &pos_names(n))
        .into_iter()
        .map(|k| (1, k))
        .collect();
    Ok(&head * &expand_inverse_product(&u, &kernel, n_trunc)?)
}

/// `ch V(Λ)` known up to absolute inverse degree `t`.
fn verma_to(neg: &[i64], pos: &[i64], t: i64) -> Result<LaurentSeries> {
    let lead = -neg.iter().sum::<i64>();
    if t < lead {
        return Ok(LaurentSeries::zero(&unitary_universe(neg.len(), pos.len())).truncate(t));
    }
    Ok(verma_blocks(neg, pos, t - lead)?.truncate(t))
}

fn unitary_request(lambda: &GeneralizedPartition, m: usize, n: usize, trunc: Option<i64>) -> Result<SabRequest> {
    let u = unitary_universe(m, n);
    let alpha = GradedAlphabet::new(Side::Direct, pos_names(n).into_iter().map(|s| (s, Parity::Even)));
    let beta = GradedAlphabet::new(Side::Inverse, neg_names(m).into_iter().map(|s| (s, Parity::Even)));
    SabRequest::in_universe(lambda.clone(), alpha, beta, trunc, u)
}

/// `ch L(Λ(λ)) = (x_{-m}⋯x_{-1})^{-d} S_λ^{[n]/[-m]}`, with `S` truncated at
/// `n_trunc`; the result is known up to absolute order `n_trunc + md`.
pub fn irreducible_even(lambda: &GeneralizedPartition, m: usize, n: usize, n_trunc: i64) -> Result<LaurentSeries> {
    howe_weight(lambda, m, n)?;
    let req = unitary_request(lambda, m, n, Some(n_trunc))?;
    let shift = letters(req.universe(), &neg_names(m)).monomial(&vec![-(lambda.d() as i64); m]);
    Ok(sab_via_lr(&req)?.mul_monomial(&shift))
}

fn unitary_level(
    lambda: &GeneralizedPartition,
    m: usize,
    n: usize,
    level: usize,
    t: i64,
) -> Result<(LaurentSeries, usize)> {
    let u = unitary_universe(m, n);
    let terms: Vec<LaurentSeries> = Partition::all_of(level)
        .into_par_iter()
        .map(|mu| {
            let w = CosetElement::new(mu);
            let Ok((neg, pos)) = star_even(&w, lambda, m, n) else {
                return Ok(None);
            };
            let v = verma_to(&neg, &pos, t)?;
            Ok((!v.is_zero()).then(|| if w.sign() < 0 { -&v } else { v }))
        })
        .filter_map(|r: Result<Option<LaurentSeries>>| r.transpose())
        .collect::<Result<_>>()?;
    let c = terms.len();
    Ok((
        terms
            .into_iter()
            .fold(LaurentSeries::zero(&u).truncate(t), |a, b| &a + &b),
        c,
    ))
}

/// `ch L(Λ(λ)) = Σ_{w ∈ 𝒲_{m+n}(Λ)} (-1)^{ℓ(w)} ch V(w∗Λ)` below relative
/// order `n_trunc`.
pub fn check_weyl_unitary(
    lambda: &GeneralizedPartition,
    m: usize,
    n: usize,
    n_trunc: i64,
    cutoff: CosetCutoff,
) -> Result<VerifyReport> {
    let weight = howe_weight(lambda, m, n)?;
    let t = n_trunc + (m * lambda.d()) as i64;
    let used = std::cell::Cell::new((0, 0));
    let params = json!({ "lambda": lambda.to_string(), "weight": weight.to_string(), "m": m, "n": n });
    let rep = compare("weyl-unitary", params, || {
        let zero = LaurentSeries::zero(&unitary_universe(m, n)).truncate(t);
        let err = std::sync::Mutex::new(None);
        let (sum, l, c) = accumulate_levels(zero.clone(), cutoff, |level| {
            unitary_level(lambda, m, n, level, t).unwrap_or_else(|e| {
                *err.lock().expect("unpoisoned") = Some(e);
                (zero.clone(), 0)
            })
        });
        if let Some(e) = err.into_inner().expect("unpoisoned") {
            return Err(e);
        }
        used.set((l, c));
        Ok((irreducible_even(lambda, m, n, n_trunc)?.truncate(t), sum))
    })?;
    let (l, c) = used.get();
    Ok(rep.with_terms(c).with_note(format!("cutoff L={l}")))
}

/// The closed sum `Σ_{μ⊆(m^n)} (-1)^{|μ|} s_{μ'+(d^m)}(x_{[-m]}^{-1}) s_μ(x_{[n]}) / ∏(1 - x_i^{-1}x_j)`
/// proposed for `ch L(-d·1_m, 0_n)`, to relative order `n_trunc`.
pub fn unitary_zero_box_sum(d: usize, m: usize, n: usize, n_trunc: i64) -> Result<(LaurentSeries, usize)> {
    let u = unitary_universe(m, n);
    let t = n_trunc + (m * d) as i64;
    let xinv = Letters::with_power(&u, neg_names(m).iter().map(String::as_str), -1)?;
    let xs = letters(&u, &pos_names(n));
    let kernel: Vec<_> = kernel_monomials(&u, m, &pos_names(n))
        .into_iter()
        .map(|k| (1, k))
        .collect();
    let geo = expand_inverse_product(&u, &kernel, n_trunc)?;
    let boxed = Partition::in_box(n, m);
    let mut sum = LaurentSeries::zero(&u);
    for mu in &boxed {
        let a = crate::schur::schur(&mu.conjugate().add(&Partition::rectangle(m, d)), &xinv);
        let term = &(&a * &crate::schur::schur(mu, &xs)) * &geo;
        sum = if mu.weight() % 2 == 1 {
            &sum - &term
        } else {
            &sum + &term
        };
    }
    Ok((sum.truncate(t), boxed.len()))
}

/// Compares `ch L(Λ(0_d))` with [`unitary_zero_box_sum`], `d ≥ 1`.
pub fn check_unitary_zero_box(d: usize, m: usize, n: usize, n_trunc: i64) -> Result<VerifyReport> {
    if d == 0 {
        return Err(Error::Invalid("d must be positive".into()));
    }
    let count = std::cell::Cell::new(0);
    let rep = compare("unitary-zero-box", json!({ "d": d, "m": m, "n": n }), || {
        let (sum, c) = unitary_zero_box_sum(d, m, n, n_trunc)?;
        count.set(c);
        Ok((irreducible_even(&GeneralizedPartition::zero(d), m, n, n_trunc)?, sum))
    })?;
    Ok(rep.with_terms(count.get()))
}

/// `ch L(Λ(λ)) = det(ch L(Λ(λ_i - i + j)))` for `d ≤ 3`.
pub fn check_jacobi_trudi_unitary(
    lambda: &GeneralizedPartition,
    m: usize,
    n: usize,
    n_trunc: i64,
) -> Result<VerifyReport> {
    let d = lambda.d();
    if d > 3 {
        return Err(Error::Invalid(format!("determinant check limited to d ≤ 3, got {d}")));
    }
    let t = n_trunc + (m * d) as i64;
    compare(
        "jacobi-trudi-unitary",
        json!({ "lambda": lambda.to_string(), "m": m, "n": n }),
        || {
            let u = unitary_universe(m, n);
            let mut matrix = Vec::new();
            for i in 0..d {
                let mut row = Vec::new();
                for j in 0..d {
                    let k = lambda.parts()[i] - i as i64 + j as i64;
                    let req = unitary_request(&GeneralizedPartition::new(vec![k])?, m, n, Some(n_trunc))?;
                    let shift = letters(&u, &neg_names(m)).monomial(&vec![-1; m]);
                    row.push(sab_via_lr(&req)?.mul_monomial(&shift));
                }
                matrix.push(row);
            }
            let det = crate::series::determinant(&u, &matrix).truncate(t);
            let req = unitary_request(lambda, m, n, Some(n_trunc))?;
            let shift = letters(&u, &neg_names(m)).monomial(&vec![-(d as i64); m]);
            Ok((sab_via_lr(&req)?.mul_monomial(&shift).truncate(t), det))
        },
    )
}

/// Whether `check_weyl_hook` should see exactly one Kac term.
pub fn is_typical(weight: &SuperWeight) -> bool {
    weight.lambda_minus_one() >= weight.n() as i64
}
