//! Minimal length right coset representatives of the parabolic subgroup
//! `W_{Z^×}` in the infinite symmetric group on `Z^×`, labelled by
//! partitions, and the shifted action `w∘λ` on generalized partitions.
//!
//! Weight vectors live on a window `[-p] ∪ [q]` stored in window order:
//! position `k < p` holds index `-(p-k)`, position `k ≥ p` holds `k-p+1`.

use std::fmt;

use crate::error::{Error, Result};
use crate::partitions::{GeneralizedPartition, Partition};
use crate::schur::delta;

/// A coset representative, stored by its partition label `μ`.
///
/// On a window, `w(δ) - δ` has coefficient `μ_j` at index `j > 0` and
/// `-μ'_k` at index `-k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CosetElement {
    label: Partition,
}

impl CosetElement {
    pub fn new(label: Partition) -> Self {
        CosetElement { label }
    }

    pub fn identity() -> Self {
        CosetElement {
            label: Partition::empty(),
        }
    }

    pub fn label(&self) -> &Partition {
        &self.label
    }

    /// `ℓ(w) = |μ|`.
    pub fn length(&self) -> usize {
        self.label.weight()
    }

    pub fn sign(&self) -> i64 {
        if self.length().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Whether `w` lies in `W_{I(p,q)}`: `ℓ(μ) ≤ q` and `μ_1 ≤ p`.
    pub fn fits(&self, p: usize, q: usize) -> bool {
        self.label.len() <= q && self.label.first() <= p
    }

    /// The permutation of the window `[-p] ∪ [q]` representing `w`.
    pub fn realize(&self, p: usize, q: usize) -> Result<WindowPermutation> {
        if !self.fits(p, q) {
            return Err(Error::WindowTooSmall {
                mu: self.label.to_string(),
                p,
                q,
            });
        }
        let mu = &self.label;
        let muc = mu.conjugate();
        let mut inverse = vec![0usize; p + q];
        for j in 1..=q {
            inverse[p + j - 1] = p + j - 1 - mu.part(j - 1);
        }
        for k in 1..=p {
            inverse[p - k] = p - k + muc.part(k - 1);
        }
        let w = WindowPermutation { p, q, inverse };
        debug_assert!(w.is_permutation() && w.is_inverse_shuffle());
        Ok(w)
    }

    /// `w(δ_{p,q}) - δ_{p,q}` in window order.
    pub fn delta_action(&self, p: usize, q: usize) -> Result<Vec<i64>> {
        let w = self.realize(p, q)?;
        let del = delta(p, q);
        Ok(w.apply(&del).iter().zip(&del).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for CosetElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w[{}]", self.label)
    }
}

/// A permutation of window positions, stored through its inverse `π`;
/// it acts on weight vectors by `(w v)[k] = v[π(k)]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowPermutation {
    p: usize,
    q: usize,
    inverse: Vec<usize>,
}

impl WindowPermutation {
    pub fn identity(p: usize, q: usize) -> Self {
        WindowPermutation {
            p,
            q,
            inverse: (0..p + q).collect(),
        }
    }

    pub fn window(&self) -> (usize, usize) {
        (self.p, self.q)
    }

    pub fn inverse(&self) -> &[usize] {
        &self.inverse
    }

    /// Images `w(k)` of the positions.
    pub fn images(&self) -> Vec<usize> {
        let mut w = vec![0; self.inverse.len()];
        for (k, &src) in self.inverse.iter().enumerate() {
            w[src] = k;
        }
        w
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        self.inverse.iter().map(|&src| v[src]).collect()
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let n = self.inverse.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.inverse[i] > self.inverse[j])
            .count()
    }

    pub fn is_permutation(&self) -> bool {
        let mut seen = vec![false; self.inverse.len()];
        for &x in &self.inverse {
            if x >= seen.len() || seen[x] {
                return false;
            }
            seen[x] = true;
        }
        true
    }

    /// `π` increases on the negative block and on the positive block.
    pub fn is_inverse_shuffle(&self) -> bool {
        self.inverse[..self.p].windows(2).all(|w| w[0] < w[1]) && self.inverse[self.p..].windows(2).all(|w| w[0] < w[1])
    }

    /// The index in `[-p] ∪ [q]` at window position `k`.
    pub fn index_at(&self, k: usize) -> i64 {
        window_index(self.p, k)
    }
}

pub fn window_index(p: usize, k: usize) -> i64 {
    if k < p {
        -((p - k) as i64)
    } else {
        (k - p + 1) as i64
    }
}

impl fmt::Display for WindowPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let images = self.images();
        let parts: Vec<String> = (0..images.len())
            .filter(|&k| images[k] != k)
            .map(|k| format!("{}→{}", self.index_at(k), self.index_at(images[k])))
            .collect();
        if parts.is_empty() {
            f.write_str("id")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

/// All coset elements with `ℓ(w) ≤ max_len`, by length and then by label.
pub fn enumerate_cosets(max_len: usize) -> Vec<CosetElement> {
    Partition::all_up_to(max_len)
        .into_iter()
        .map(CosetElement::new)
        .collect()
}

/// Coset elements lying in `W_{I(p,q)}`; there are `C(p+q, p)` of them.
pub fn cosets_in_window(p: usize, q: usize) -> Vec<CosetElement> {
    Partition::all_up_to(p * q)
        .into_iter()
        .map(CosetElement::new)
        .filter(|w| w.fits(p, q))
        .collect()
}

/// The window used by [`lambda_pm`].
pub fn auto_window(w: &CosetElement, lambda: &GeneralizedPartition) -> (usize, usize) {
    let slack = w.label().len() + w.label().first();
    let p = 1.max(-lambda.last()).max(0) as usize + slack;
    let q = 1.max(lambda.first()).max(0) as usize + slack;
    (p, q)
}

/// Whether `(p, q)` satisfies both window conditions for `(w, λ)`.
pub fn window_admissible(w: &CosetElement, lambda: &GeneralizedPartition, p: usize, q: usize) -> bool {
    p > 0 && q > 0 && -(p as i64) <= lambda.last() && lambda.first() <= q as i64 && w.fits(p, q)
}

/// `w∘λ = w(μ + δ) - δ - d·1⁻_p` with `μ = (λ + (p^d))'`, in window order.
pub fn shifted_action(w: &CosetElement, lambda: &GeneralizedPartition, p: usize, q: usize) -> Result<Vec<i64>> {
    if !window_admissible(w, lambda, p, q) {
        return Err(Error::WindowTooSmall {
            mu: w.label().to_string(),
            p,
            q,
        });
    }
    let d = lambda.d() as i64;
    let mu = lambda.shifted_partition(p as i64)?.conjugate();
    let del = delta(p, q);
    let v: Vec<i64> = (0..p + q).map(|k| mu.part(k) as i64 + del[k]).collect();
    let wv = w.realize(p, q)?.apply(&v);
    Ok((0..p + q).map(|k| wv[k] - del[k] - if k < p { d } else { 0 }).collect())
}

/// `(λ^{w,+}, λ^{w,-})` computed on a given admissible window.
pub fn lambda_pm_in_window(
    w: &CosetElement,
    lambda: &GeneralizedPartition,
    p: usize,
    q: usize,
) -> Result<(Partition, Partition)> {
    let c = shifted_action(w, lambda, p, q)?;
    let sigma: Vec<i64> = (1..=p).map(|i| -c[p - i]).collect();
    let tau: Vec<i64> = (1..=q).map(|j| c[p + j - 1]).collect();
    let as_partition = |v: Vec<i64>| -> Result<Partition> {
        if v.iter().any(|&x| x < 0) {
            return Err(Error::Invalid(format!("shifted action of {w} on {lambda} left {v:?}")));
        }
        Partition::new(v.into_iter().map(|x| x as usize).collect())
    };
    let sigma = as_partition(sigma)?;
    let tau = as_partition(tau)?;
    Ok((tau.conjugate(), sigma.conjugate()))
}

/// `(λ^{w,+}, λ^{w,-})` on an automatically chosen window.
pub fn lambda_pm(w: &CosetElement, lambda: &GeneralizedPartition) -> (Partition, Partition) {
    let (p, q) = auto_window(w, lambda);
    lambda_pm_in_window(w, lambda, p, q).expect("automatic window is admissible")
}

/// `w∗Λ` for a hook weight given by its partition `λ(Λ)`, computed with
/// `ν = λ' - (m^d)`. Returns `(Λ^{<0}, Λ^{>0})`.
pub fn star_super(w: &CosetElement, hook: &Partition, m: usize, n: usize, d: usize) -> Result<(Vec<i64>, Vec<i64>)> {
    if d < hook.first() || d == 0 {
        return Err(Error::Invalid(format!(
            "need d ≥ max(λ_1, 1), got d = {d} for λ = {hook}"
        )));
    }
    let nu = hook_to_nu(hook, m, d);
    let (plus, minus) = lambda_pm(w, &nu);
    let rho = minus.conjugate();
    if rho.len() > m || plus.len() > n {
        return Err(Error::Weight(format!(
            "{w} is not admissible for λ = {hook}, m = {m}, n = {n}"
        )));
    }
    let neg = (0..m).rev().map(|i| d as i64 - rho.part(i) as i64).collect();
    let pos = (0..n).map(|j| plus.part(j) as i64).collect();
    Ok((neg, pos))
}

/// `ν = λ' - (m^d)` as a generalized partition of length `d`.
pub fn hook_to_nu(hook: &Partition, m: usize, d: usize) -> GeneralizedPartition {
    let c = hook.conjugate();
    GeneralizedPartition::new((0..d).map(|i| c.part(i) as i64 - m as i64).collect()).expect("conjugate decreases")
}

/// `w∗Λ(λ) = ((λ^{w,-} + (d^m))^*, λ^{w,+})`. Returns `(Λ^{<0}, Λ^{>0})`.
pub fn star_even(w: &CosetElement, lambda: &GeneralizedPartition, m: usize, n: usize) -> Result<(Vec<i64>, Vec<i64>)> {
    let (plus, minus) = lambda_pm(w, lambda);
    if minus.len() > m || plus.len() > n {
        return Err(Error::Weight(format!(
            "{w} is not admissible for λ = {lambda}, m = {m}, n = {n}"
        )));
    }
    let d = lambda.d() as i64;
    let neg = (0..m).rev().map(|i| -(minus.part(i) as i64 + d)).collect();
    let pos = (0..n).map(|j| plus.part(j) as i64).collect();
    Ok((neg, pos))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn g(v: &[i64]) -> GeneralizedPartition {
        GeneralizedPartition::new(v.to_vec()).unwrap()
    }

    fn w(v: &[usize]) -> CosetElement {
        CosetElement::new(p(v))
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_cosets(0), vec![CosetElement::identity()]);
        assert_eq!(enumerate_cosets(3).len(), 7);
        assert_eq!(cosets_in_window(2, 2).len(), 6);
        assert_eq!(cosets_in_window(2, 3).len(), 10);
        for e in enumerate_cosets(4) {
            assert_eq!(e.sign(), if e.length() % 2 == 0 { 1 } else { -1 });
        }
    }

    #[test]
    fn realizations() {
        for (pp, q) in [(1, 1), (2, 3), (4, 1)] {
            let id = CosetElement::identity().realize(pp, q).unwrap();
            assert_eq!(id, WindowPermutation::identity(pp, q));
        }
        let r0 = w(&[1]).realize(1, 1).unwrap();
        assert_eq!(r0.images(), vec![1, 0]);
        assert_eq!(r0.to_string(), "-1→1 1→-1");
        assert_eq!(w(&[1]).delta_action(2, 2).unwrap(), vec![0, -1, 1, 0]);
        assert!(matches!(w(&[1, 1, 1]).realize(3, 2), Err(Error::WindowTooSmall { .. })));
    }

    #[test]
    fn realizations_are_inverse_shuffles_of_the_right_length() {
        for e in enumerate_cosets(6) {
            let (pp, q) = (e.label().first().max(1) + 1, e.label().len().max(1) + 2);
            let r = e.realize(pp, q).unwrap();
            assert!(r.is_permutation() && r.is_inverse_shuffle());
            assert_eq!(r.length(), e.length());
        }
    }

    #[test]
    fn delta_pattern_is_conjugate() {
        for e in enumerate_cosets(6) {
            let mu = e.label();
            let (pp, q) = (mu.first() + 2, mu.len() + 1);
            let a = e.delta_action(pp, q).unwrap();
            let pos: Vec<i64> = (0..q).map(|j| a[pp + j]).collect();
            let neg: Vec<i64> = (1..=pp).map(|k| -a[pp - k]).collect();
            let expect_pos: Vec<i64> = (0..q).map(|j| mu.part(j) as i64).collect();
            let expect_neg: Vec<i64> = (0..pp).map(|k| mu.conjugate().part(k) as i64).collect();
            assert_eq!(pos, expect_pos, "{mu}");
            assert_eq!(neg, expect_neg, "{mu}");
            let ext = e.delta_action(pp + 2, q + 1).unwrap();
            assert_eq!(ext[2..2 + a.len()], a[..], "window extension");
            assert!(ext[..2].iter().chain(&ext[2 + a.len()..]).all(|&x| x == 0));
        }
    }

    #[test]
    fn identity_gives_plus_minus() {
        for lam in GeneralizedPartition::all_in_range(3, -3, 3) {
            assert_eq!(lambda_pm(&CosetElement::identity(), &lam), (lam.plus(), lam.minus()));
        }
    }

    #[test]
    fn window_stability_and_balance() {
        for d in 1..=3 {
            for lam in GeneralizedPartition::all_in_range(d, -2, 2) {
                for e in enumerate_cosets(5) {
                    let (pp, q) = auto_window(&e, &lam);
                    let base = lambda_pm_in_window(&e, &lam, pp, q).unwrap();
                    for (a, b) in [(pp + 1, q + 2), (pp + 3, q + 1)] {
                        assert_eq!(lambda_pm_in_window(&e, &lam, a, b).unwrap(), base);
                    }
                    let pmin = (-lam.last()).max(1).max(e.label().first() as i64) as usize;
                    let qmin = lam.first().max(1).max(e.label().len() as i64) as usize;
                    assert_eq!(lambda_pm_in_window(&e, &lam, pmin, qmin).unwrap(), base, "{e} {lam}");
                    let (plus, minus) = base;
                    assert_eq!(plus.weight() as i64 - minus.weight() as i64, lam.sum());
                    assert!(minus.weight() >= e.length());
                }
            }
        }
    }

    #[test]
    fn injectivity() {
        for d in 1..=2 {
            for lam in GeneralizedPartition::all_in_range(d, -2, 2) {
                let mut seen = HashSet::new();
                for e in enumerate_cosets(5) {
                    assert!(seen.insert(lambda_pm(&e, &lam)), "{e} on {lam}");
                }
            }
        }
    }

    #[test]
    fn zero_weight_closed_form() {
        for d in 1..=3 {
            for e in enumerate_cosets(6) {
                let mu = e.label();
                let r = mu.rank();
                let box_rows = Partition::new(vec![d; r]).unwrap();
                let plus = mu.add(&box_rows).conjugate();
                let minus = mu.conjugate().add(&box_rows).conjugate();
                assert_eq!(
                    lambda_pm(&e, &GeneralizedPartition::zero(d)),
                    (plus, minus),
                    "{mu} d={d}"
                );
            }
        }
        // the single-row label with d = 1
        assert_eq!(lambda_pm(&w(&[1]), &g(&[0])), (p(&[1, 1]), p(&[1, 1])));
    }

    #[test]
    fn star_super_examples() {
        assert_eq!(
            star_super(&CosetElement::identity(), &p(&[1]), 1, 1, 1).unwrap(),
            (vec![1], vec![0])
        );
        for k in 1..=4 {
            let col = CosetElement::new(Partition::new(vec![1; k]).unwrap());
            assert_eq!(
                star_super(&col, &p(&[]), 1, 1, 1).unwrap(),
                (vec![-(k as i64)], vec![k as i64])
            );
            let row = CosetElement::new(Partition::row(k));
            if k > 1 {
                assert!(star_super(&row, &p(&[]), 1, 1, 1).is_err());
            }
        }
    }

    #[test]
    fn star_super_independent_of_d() {
        for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
            for lam in Partition::all_up_to(4).into_iter().filter(|l| l.is_hook(m, n)) {
                for e in enumerate_cosets(4) {
                    let d0 = lam.first().max(1);
                    let a = star_super(&e, &lam, m, n, d0);
                    let b = star_super(&e, &lam, m, n, d0 + 1);
                    assert_eq!(a.is_ok(), b.is_ok());
                    if let (Ok(a), Ok(b)) = (a, b) {
                        assert_eq!(a, b);
                        assert!(a.0.windows(2).all(|x| x[0] >= x[1]) && a.1.windows(2).all(|x| x[0] >= x[1]));
                    }
                }
            }
        }
    }

    #[test]
    fn star_even_examples() {
        for d in 1..=3 {
            let zero = GeneralizedPartition::zero(d);
            assert_eq!(
                star_even(&CosetElement::identity(), &zero, 2, 2).unwrap(),
                (vec![-(d as i64); 2], vec![0, 0])
            );
        }
        // λ = 0_d, m = n = 1: the label (1) is admissible only when d = 1... check dominance generally
        for d in 1..=2 {
            let zero = GeneralizedPartition::zero(d);
            for e in enumerate_cosets(5) {
                if let Ok((neg, pos)) = star_even(&e, &zero, 2, 2) {
                    assert!(neg.windows(2).all(|x| x[0] >= x[1]) && pos.windows(2).all(|x| x[0] >= x[1]));
                }
            }
        }
    }
}
