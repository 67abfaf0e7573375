//! Classical, skew, rational, super and hook Schur polynomials, and the Weyl
//! bialternant on a finite window.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::partitions::{GeneralizedPartition, Partition, SkewShape};
use crate::series::{determinant, divide_by_difference, GradedAlphabet, LaurentSeries, Parity, Side, Universe};
use crate::tableaux::for_each_ssyt;

/// An ordered list of variables of a universe. A symbol on the
/// [`Side::Inverse`] side enters as `x_b^{-1}`.
#[derive(Clone, Debug)]
pub struct Letters {
    universe: Arc<Universe>,
    slots: Vec<(usize, i32)>,
}

impl Letters {
    pub fn new<'a>(universe: &Arc<Universe>, names: impl IntoIterator<Item = &'a str>) -> Result<Self> {
        let slots = names
            .into_iter()
            .map(|n| {
                let i = universe.index(n)?;
                Ok((i, if universe.side(i) == Side::Direct { 1 } else { -1 }))
            })
            .collect::<Result<_>>()?;
        Ok(Letters {
            universe: universe.clone(),
            slots,
        })
    }

    /// Letters entering as `t^power` regardless of their side.
    pub fn with_power<'a>(
        universe: &Arc<Universe>,
        names: impl IntoIterator<Item = &'a str>,
        power: i32,
    ) -> Result<Self> {
        let slots = names
            .into_iter()
            .map(|n| Ok((universe.index(n)?, power)))
            .collect::<Result<_>>()?;
        Ok(Letters {
            universe: universe.clone(),
            slots,
        })
    }

    /// Letters of one parity from a graded alphabet.
    pub fn of_parity(universe: &Arc<Universe>, alphabet: &GradedAlphabet, parity: Parity) -> Result<Self> {
        Letters::new(universe, alphabet.names_of(parity))
    }

    /// Every symbol of the universe, in declaration order.
    pub fn all(universe: &Arc<Universe>) -> Self {
        Letters::new(universe, universe.names().iter().map(String::as_str)).expect("own symbols")
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    /// The monomial `∏ t_k^{e_k}` where `t_k` is the `k`-th letter.
    pub fn monomial(&self, exps: &[i64]) -> Vec<i32> {
        let mut m = self.universe.unit();
        for (&(slot, power), &e) in self.slots.iter().zip(exps) {
            m[slot] += power * e as i32;
        }
        m
    }
}

/// Universe `x[prefix_start]..` of `n` symbols on one side.
pub fn variables(prefix: &str, indices: impl IntoIterator<Item = i64>, side: Side) -> Arc<Universe> {
    Universe::new(indices.into_iter().map(|i| (format!("{prefix}[{i}]"), side))).expect("distinct indices")
}

/// `s_{λ/μ}` as the weight generating function of semistandard tableaux.
pub fn skew_schur(shape: &SkewShape, letters: &Letters) -> LaurentSeries {
    let mut out = LaurentSeries::zero(letters.universe());
    let k = letters.len();
    for_each_ssyt(shape, k, |t| {
        let content: Vec<i64> = t.content(k).into_iter().map(|c| c as i64).collect();
        out.add_term(letters.monomial(&content), BigInt::one());
    });
    out
}

pub fn schur(lambda: &Partition, letters: &Letters) -> LaurentSeries {
    skew_schur(&SkewShape::straight(lambda.clone()), letters)
}

/// Complete homogeneous symmetric polynomial `h_k`; zero for `k < 0`.
pub fn complete_homogeneous(k: i64, letters: &Letters) -> LaurentSeries {
    if k < 0 {
        return LaurentSeries::zero(letters.universe());
    }
    skew_schur(&SkewShape::straight(Partition::row(k as usize)), letters)
}

/// `s_{λ/μ} = det(h_{λ_i - μ_j - i + j})`.
pub fn skew_schur_jacobi_trudi(shape: &SkewShape, letters: &Letters) -> LaurentSeries {
    let n = shape.rows();
    let (outer, inner) = (shape.outer(), shape.inner());
    let hs: Vec<LaurentSeries> = (0..=outer.first() + n)
        .map(|k| complete_homogeneous(k as i64, letters))
        .collect();
    let zero = LaurentSeries::zero(letters.universe());
    let matrix: Vec<Vec<LaurentSeries>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let k = outer.part(i) as i64 - inner.part(j) as i64 - i as i64 + j as i64;
                    if k < 0 {
                        zero.clone()
                    } else {
                        hs[k as usize].clone()
                    }
                })
                .collect()
        })
        .collect();
    determinant(letters.universe(), &matrix)
}

/// `S_{λ/μ} = Σ_{μ⊆ν⊆λ} s_{ν/μ}(even) s_{λ'/ν'}(odd)`.
pub fn super_schur_split(shape: &SkewShape, even: &Letters, odd: &Letters) -> LaurentSeries {
    let (outer, inner) = (shape.outer(), shape.inner());
    let outer_c = outer.conjugate();
    let mut out = LaurentSeries::zero(even.universe());
    for nu in intermediate(inner, outer) {
        let left = skew_schur(&SkewShape::new(nu.clone(), inner.clone()).expect("μ ⊆ ν"), even);
        if left.is_zero() {
            continue;
        }
        let right = skew_schur(&SkewShape::new(outer_c.clone(), nu.conjugate()).expect("ν ⊆ λ"), odd);
        if right.is_zero() {
            continue;
        }
        out = &out + &(&left * &right);
    }
    out
}

/// Super Schur polynomial of a skew shape over a graded alphabet whose
/// symbols belong to `universe`.
pub fn super_schur(shape: &SkewShape, alphabet: &GradedAlphabet, universe: &Arc<Universe>) -> Result<LaurentSeries> {
    let even = Letters::of_parity(universe, alphabet, Parity::Even)?;
    let odd = Letters::of_parity(universe, alphabet, Parity::Odd)?;
    Ok(super_schur_split(shape, &even, &odd))
}

/// All partitions `ν` with `inner ⊆ ν ⊆ outer`.
pub fn intermediate(inner: &Partition, outer: &Partition) -> Vec<Partition> {
    fn rec(i: usize, inner: &Partition, outer: &Partition, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == outer.len() {
            out.push(Partition::new(cur.clone()).expect("built decreasing"));
            return;
        }
        let cap = if i == 0 {
            outer.part(0)
        } else {
            outer.part(i).min(cur[i - 1])
        };
        for v in inner.part(i)..=cap {
            cur.push(v);
            rec(i + 1, inner, outer, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if outer.contains(inner) {
        rec(0, inner, outer, &mut Vec::new(), &mut out);
    }
    out
}

/// Universe `x[-m], ..., x[-1], y[1], ..., y[n]`; the `x` symbols sit on the
/// inverse side.
pub fn hook_universe(m: usize, n: usize) -> Arc<Universe> {
    Universe::new(
        (1..=m as i64)
            .rev()
            .map(|i| (format!("x[-{i}]"), Side::Inverse))
            .chain((1..=n).map(|j| (format!("y[{j}]"), Side::Direct))),
    )
    .expect("distinct names")
}

/// Names `x[-1], ..., x[-m]`.
pub fn hook_x_names(m: usize) -> Vec<String> {
    (1..=m).map(|i| format!("x[-{i}]")).collect()
}

pub fn hook_y_names(n: usize) -> Vec<String> {
    (1..=n).map(|j| format!("y[{j}]")).collect()
}

/// Hook Schur polynomial `Σ_{μ⊆λ} s_μ(x) s_{λ'/μ'}(y)` in `hook_universe(m, n)`.
/// The `x` variables enter with positive exponents.
pub fn hook_schur(lambda: &Partition, m: usize, n: usize) -> LaurentSeries {
    let u = hook_universe(m, n);
    let x = Letters::with_power(&u, hook_x_names(m).iter().map(String::as_str), 1).expect("built");
    let y = Letters::new(&u, hook_y_names(n).iter().map(String::as_str)).expect("built");
    super_schur_split(&SkewShape::straight(lambda.clone()), &x, &y)
}

/// Rational Schur polynomial `(t_1⋯t_d)^{-p} s_{λ+(p^d)}(t)` with the minimal
/// shift `p = max(0, -λ_d)`.
pub fn rational_schur(lambda: &GeneralizedPartition, letters: &Letters) -> Result<LaurentSeries> {
    rational_schur_at_shift(lambda, letters, lambda.min_shift())
}

pub fn rational_schur_at_shift(lambda: &GeneralizedPartition, letters: &Letters, p: i64) -> Result<LaurentSeries> {
    if letters.len() != lambda.d() {
        return Err(Error::Invalid(format!(
            "rational Schur of length {} needs {} letters, got {}",
            lambda.d(),
            lambda.d(),
            letters.len()
        )));
    }
    let s = schur(&lambda.shifted_partition(p)?, letters);
    Ok(s.mul_monomial(&letters.monomial(&vec![-p; lambda.d()])))
}

/// Universe `x[-p], ..., x[-1], x[1], ..., x[q]` in window order.
pub fn window_universe(p: usize, q: usize) -> Arc<Universe> {
    variables("x", (1..=p as i64).rev().map(|i| -i).chain(1..=q as i64), Side::Direct)
}

/// `δ_{p,q}` in window order: `(p+q-1, ..., 1, 0)`.
pub fn delta(p: usize, q: usize) -> Vec<i64> {
    (0..p + q).rev().map(|k| k as i64).collect()
}

/// Weyl bialternant `Σ_w (-1)^{ℓ(w)} x^{w(μ+δ)-δ}` over all permutations of
/// the window `[-p] ∪ [q]`, divided exactly by `∏_{a<b} (1 - x_a^{-1} x_b)`.
pub fn weyl_bialternant(mu: &Partition, p: usize, q: usize) -> Result<LaurentSeries> {
    let n = p + q;
    if n > 7 {
        return Err(Error::Invalid(format!("window of size {n} exceeds 7")));
    }
    if mu.len() > n {
        return Err(Error::Invalid(format!("ℓ({mu}) > {n}")));
    }
    let u = window_universe(p, q);
    let del = delta(p, q);
    let shifted: Vec<i64> = (0..n).map(|k| mu.part(k) as i64 + del[k]).collect();
    let mut numerator = LaurentSeries::zero(&u);
    for (perm, sign) in permutations(n) {
        // (w v)[k] = v[w^{-1}(k)]; summing over all w, the labelling is immaterial
        let m: Vec<i32> = (0..n).map(|k| (shifted[perm[k]] - del[k]) as i32).collect();
        numerator.add_term(m, BigInt::from(sign));
    }
    let mut f = numerator;
    for a in 0..n {
        for b in a + 1..n {
            // 1 - x_a^{-1} x_b = x_a^{-1}(x_a - x_b)
            let mut xa = u.unit();
            xa[a] = 1;
            f = divide_by_difference(&f.mul_monomial(&xa), a, b)?;
        }
    }
    Ok(f)
}

/// Permutations of `0..n` with their signs, in lexicographic order.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
        if cur.len() == n {
            out.push((cur.clone(), sign));
            return;
        }
        for v in 0..n {
            if used[v] {
                continue;
            }
            // inversions contributed by placing v: larger values still unused come later
            let smaller_unused = (0..v).filter(|&w| !used[w]).count();
            used[v] = true;
            cur.push(v);
            rec(n, cur, used, if smaller_unused % 2 == 0 { sign } else { -sign }, out);
            cur.pop();
            used[v] = false;
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut vec![false; n], 1, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn xs(n: usize) -> Letters {
        Letters::all(&variables("x", 1..=n as i64, Side::Direct))
    }

    #[test]
    fn skew_examples() {
        let l = xs(2);
        assert_eq!(schur(&p(&[2, 1]), &l).to_text(), "1*x[1]^2*x[2] + 1*x[1]*x[2]^2");
        assert!(schur(&p(&[1, 1]), &xs(1)).is_zero());
        assert_eq!(skew_schur(&"2/1".parse().unwrap(), &l).to_text(), "1*x[1] + 1*x[2]");
    }

    #[test]
    fn super_examples() {
        let alpha = GradedAlphabet::parse("a:0,b:1", Side::Direct).unwrap();
        let u = Universe::from_alphabets(&[&alpha]).unwrap();
        let s = super_schur(&SkewShape::straight(p(&[1])), &alpha, &u).unwrap();
        assert_eq!(s.to_text(), "1*a + 1*b");
        let odd = GradedAlphabet::parse("b:1", Side::Direct).unwrap();
        let u = Universe::from_alphabets(&[&odd]).unwrap();
        assert_eq!(
            super_schur(&SkewShape::straight(p(&[1, 1])), &odd, &u)
                .unwrap()
                .to_text(),
            "1*b^2"
        );
        assert_eq!(
            super_schur(&SkewShape::straight(p(&[])), &odd, &u).unwrap().to_text(),
            "1"
        );
    }

    #[test]
    fn hook_examples() {
        assert_eq!(hook_schur(&p(&[1]), 1, 1).to_text(), "1*x[-1] + 1*y[1]");
        assert_eq!(hook_schur(&p(&[2]), 1, 1).to_text(), "1*x[-1]^2 + 1*x[-1]*y[1]");
        assert_eq!(hook_schur(&p(&[1, 1, 1]), 1, 1).to_text(), "1*x[-1]*y[1]^2 + 1*y[1]^3");
    }

    #[test]
    fn hook_vanishing_matches_hook_condition() {
        for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
            for lam in Partition::all_up_to(7) {
                assert_eq!(
                    hook_schur(&lam, m, n).is_zero(),
                    !lam.is_hook(m, n),
                    "{lam} m={m} n={n}"
                );
            }
        }
    }

    #[test]
    fn rational_examples() {
        let l1 = xs(1);
        let g = |v: &[i64]| GeneralizedPartition::new(v.to_vec()).unwrap();
        assert_eq!(rational_schur(&g(&[-1]), &l1).unwrap().to_text(), "1*x[1]^-1");
        assert_eq!(
            rational_schur(&g(&[1, -1]), &xs(2)).unwrap().to_text(),
            "1*x[1]*x[2]^-1 + 1 + 1*x[1]^-1*x[2]"
        );
        assert_eq!(rational_schur(&g(&[0, 0, 0]), &xs(3)).unwrap().to_text(), "1");
        for lam in GeneralizedPartition::all_in_range(3, -2, 2) {
            let base = rational_schur(&lam, &xs(3)).unwrap();
            for extra in 1..3 {
                let q = lam.min_shift() + extra;
                assert_eq!(rational_schur_at_shift(&lam, &xs(3), q).unwrap(), base);
            }
        }
    }

    #[test]
    fn tableaux_and_jacobi_trudi_agree() {
        for k in 1..=4 {
            let l = xs(k);
            for lam in Partition::all_up_to(8) {
                let shape = SkewShape::straight(lam.clone());
                assert_eq!(
                    skew_schur(&shape, &l),
                    skew_schur_jacobi_trudi(&shape, &l),
                    "{lam} in {k}"
                );
            }
        }
        let l = xs(3);
        for outer in Partition::all_up_to(6) {
            for inner in outer.subpartitions() {
                let shape = SkewShape::new(outer.clone(), inner).unwrap();
                assert_eq!(skew_schur(&shape, &l), skew_schur_jacobi_trudi(&shape, &l), "{shape}");
            }
        }
    }

    #[test]
    fn rotation_invariance() {
        let alpha = GradedAlphabet::parse("a:0,b:1,c:0", Side::Direct).unwrap();
        let u = Universe::from_alphabets(&[&alpha]).unwrap();
        for outer in Partition::all_up_to(7) {
            for inner in outer.subpartitions() {
                let shape = SkewShape::new(outer.clone(), inner).unwrap();
                if shape.size() > 8 {
                    continue;
                }
                let a = super_schur(&shape, &alpha, &u).unwrap();
                let b = super_schur(&shape.rotate180(), &alpha, &u).unwrap();
                assert_eq!(a, b, "{shape}");
            }
        }
    }

    #[test]
    fn super_specializations() {
        let alpha = GradedAlphabet::parse("a1:0,a2:0,b1:1,b2:1", Side::Direct).unwrap();
        let u = Universe::from_alphabets(&[&alpha]).unwrap();
        let even = Letters::new(&u, ["a1", "a2"]).unwrap();
        let odd = Letters::new(&u, ["b1", "b2"]).unwrap();
        for lam in Partition::all_up_to(5) {
            let s = super_schur(&SkewShape::straight(lam.clone()), &alpha, &u).unwrap();
            let no_odd = s.set_zero("b1").unwrap().set_zero("b2").unwrap();
            assert_eq!(no_odd, schur(&lam, &even));
            let no_even = s.set_zero("a1").unwrap().set_zero("a2").unwrap();
            assert_eq!(no_even, schur(&lam.conjugate(), &odd));
        }
    }

    #[test]
    fn weyl_examples() {
        for (pp, q) in [(1, 1), (2, 1), (1, 3), (3, 3)] {
            assert_eq!(weyl_bialternant(&p(&[]), pp, q).unwrap().to_text(), "1");
        }
        assert_eq!(weyl_bialternant(&p(&[1]), 1, 1).unwrap().to_text(), "1*x[-1] + 1*x[1]");
        let u = window_universe(1, 2);
        let l = Letters::all(&u);
        for mu in Partition::all_up_to(5).into_iter().filter(|m| m.len() <= 3) {
            assert_eq!(weyl_bialternant(&mu, 1, 2).unwrap(), schur(&mu, &l), "{mu}");
        }
        assert!(weyl_bialternant(&p(&[1]), 4, 4).is_err());
    }

    #[test]
    fn permutation_signs() {
        let perms = permutations(4);
        assert_eq!(perms.len(), 24);
        for (perm, sign) in perms {
            let inv = (0..4)
                .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
                .filter(|&(i, j)| perm[i] > perm[j])
                .count();
            assert_eq!(sign, if inv % 2 == 0 { 1 } else { -1 });
        }
    }
}
