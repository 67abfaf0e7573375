//! Semistandard tableaux, Littlewood-Richardson coefficients and the column
//! split used to factor Schur polynomials of shifted shapes.

use std::fmt;

use crate::error::{Error, Result};
use crate::partitions::{GeneralizedPartition, Partition, SkewShape};

/// A filling of a skew shape by letters `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// `rows[i]` lists the entries of row `i` from left to right.
    pub fn new(shape: SkewShape, rows: Vec<Vec<u32>>) -> Result<Self> {
        let mut rows = rows;
        while rows.len() > shape.rows() && rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        rows.resize(shape.rows(), Vec::new());
        for (i, r) in rows.iter().enumerate() {
            let (a, b) = shape.row_range(i);
            if r.len() != b - a {
                return Err(Error::Invalid(format!(
                    "row {i} has {} entries, shape needs {}",
                    r.len(),
                    b - a
                )));
            }
        }
        let t = Tableau { shape, rows };
        if !t.is_semistandard() {
            return Err(Error::Invalid(format!("filling {t} is not semistandard")));
        }
        Ok(t)
    }

    pub fn empty() -> Self {
        Tableau {
            shape: SkewShape::straight(Partition::empty()),
            rows: Vec::new(),
        }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry in row `i`, column `j` of the ambient diagram.
    pub fn entry(&self, i: usize, j: usize) -> Option<u32> {
        let (a, b) = self.shape.row_range(i);
        (a <= j && j < b).then(|| self.rows[i][j - a])
    }

    /// Multiplicity of each letter `1..=k`.
    pub fn content(&self, k: usize) -> Vec<usize> {
        let mut c = vec![0; k];
        for &e in self.rows.iter().flatten() {
            c[e as usize - 1] += 1;
        }
        c
    }

    pub fn max_entry(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn is_semistandard(&self) -> bool {
        for (i, r) in self.rows.iter().enumerate() {
            if r.contains(&0) || r.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
            if i == 0 {
                continue;
            }
            let (a, b) = self.shape.row_range(i);
            for j in a..b {
                if let Some(up) = self.entry(i - 1, j) {
                    if up >= self.rows[i][j - a] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "({})", rows.join(";"))
    }
}

struct Grid {
    shape: SkewShape,
    col_height: Vec<usize>,
    cells: Vec<(usize, usize)>,
    rows: Vec<Vec<u32>>,
}

impl Grid {
    fn new(shape: &SkewShape) -> Self {
        let rows = (0..shape.rows())
            .map(|i| {
                let (a, b) = shape.row_range(i);
                vec![0; b - a]
            })
            .collect();
        Grid {
            shape: shape.clone(),
            col_height: shape.outer().conjugate().parts().to_vec(),
            cells: shape.cells(),
            rows,
        }
    }

    fn get(&self, i: usize, j: usize) -> Option<u32> {
        let (a, b) = self.shape.row_range(i);
        (a <= j && j < b).then(|| self.rows[i][j - a])
    }

    fn set(&mut self, i: usize, j: usize, v: u32) {
        let a = self.shape.row_range(i).0;
        self.rows[i][j - a] = v;
    }

    fn snapshot(&self) -> Tableau {
        Tableau {
            shape: self.shape.clone(),
            rows: self.rows.clone(),
        }
    }
}

/// Visits every SSYT of `shape` with entries in `1..=k`, row-major with
/// smaller entries first.
pub fn for_each_ssyt(shape: &SkewShape, k: usize, mut visit: impl FnMut(&Tableau)) {
    fn rec(g: &mut Grid, idx: usize, k: u32, visit: &mut dyn FnMut(&Tableau)) {
        if idx == g.cells.len() {
            visit(&g.snapshot());
            return;
        }
        let (i, j) = g.cells[idx];
        let mut lo = 1;
        if j > 0 {
            if let Some(l) = g.get(i, j - 1) {
                lo = lo.max(l);
            }
        }
        if i > 0 {
            if let Some(u) = g.get(i - 1, j) {
                lo = lo.max(u + 1);
            }
        }
        let below = (g.col_height[j] - 1 - i) as u32;
        if below >= k {
            return;
        }
        for v in lo..=k - below {
            g.set(i, j, v);
            rec(g, idx + 1, k, visit);
        }
    }
    let mut g = Grid::new(shape);
    rec(&mut g, 0, k as u32, &mut visit);
}

pub fn enumerate_ssyt(shape: &SkewShape, k: usize) -> Vec<Tableau> {
    let mut out = Vec::new();
    for_each_ssyt(shape, k, |t| out.push(t.clone()));
    out
}

pub fn count_ssyt(shape: &SkewShape, k: usize) -> u64 {
    let mut n = 0u64;
    for_each_ssyt(shape, k, |_| n += 1);
    n
}

/// `c^λ_{μν}`: LR tableaux of shape `λ/μ` and content `ν` whose reverse
/// reading word is a lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !lambda.contains(mu) || !lambda.contains(nu) || lambda.weight() != mu.weight() + nu.weight() {
        return 0;
    }
    let shape = SkewShape::new(lambda.clone(), mu.clone()).expect("containment checked");
    let mut g = Grid::new(&shape);
    // top to bottom, right to left
    let order: Vec<(usize, usize)> = (0..shape.rows())
        .flat_map(|i| {
            let (a, b) = shape.row_range(i);
            (a..b).rev().map(move |j| (i, j))
        })
        .collect();
    let target = nu.parts().to_vec();
    let mut counts = vec![0usize; target.len()];

    fn rec(g: &mut Grid, order: &[(usize, usize)], idx: usize, target: &[usize], counts: &mut [usize]) -> u64 {
        if idx == order.len() {
            return 1;
        }
        let (i, j) = order[idx];
        let hi = g.get(i, j + 1).unwrap_or(u32::MAX).min(target.len() as u32);
        let lo = if i > 0 { g.get(i - 1, j).map_or(1, |u| u + 1) } else { 1 };
        let mut total = 0;
        for v in lo..=hi {
            let e = v as usize - 1;
            if counts[e] >= target[e] || (e > 0 && counts[e] >= counts[e - 1]) {
                continue;
            }
            counts[e] += 1;
            g.set(i, j, v);
            total += rec(g, order, idx + 1, target, counts);
            counts[e] -= 1;
        }
        total
    }
    rec(&mut g, &order, 0, &target, &mut counts)
}

/// `c^λ_{μ,ν*}` for the rational Schur product `s_μ s_{ν*}` in `d = ℓ(λ)`
/// variables.
pub fn rational_lr(lambda: &GeneralizedPartition, mu: &Partition, nu: &Partition) -> u64 {
    let q = (nu.first() as i64).max(-lambda.last()).max(0);
    rational_lr_at_shift(lambda, mu, nu, q)
}

/// Same coefficient evaluated as `c^{λ+(q^d)}_{μ, ν*+(q^d)}`; any admissible
/// `q` gives the same value.
pub fn rational_lr_at_shift(lambda: &GeneralizedPartition, mu: &Partition, nu: &Partition, q: i64) -> u64 {
    let d = lambda.d();
    if mu.len() > d || nu.len() > d {
        return 0;
    }
    assert!(q >= nu.first() as i64 && q >= -lambda.last(), "shift {q} too small");
    let nu_gen = nu.to_generalized(d).expect("length checked");
    let big = lambda.shifted_partition(q).expect("shift checked");
    let small = nu_gen.star().shifted_partition(q).expect("shift checked");
    lr_coefficient(&big, mu, &small)
}

fn check_split_hypothesis(lambda: &GeneralizedPartition, m: usize) -> Result<()> {
    if m == 0 || lambda.d() < m {
        return Err(Error::Hypothesis(format!(
            "need d ≥ m ≥ 1, got d = {}, m = {m}",
            lambda.d()
        )));
    }
    if lambda.parts()[m - 1] < 0 {
        return Err(Error::Hypothesis(format!("need λ_m ≥ 0 for λ = {lambda}, m = {m}")));
    }
    Ok(())
}

/// Cuts an SSYT of shape `(λ+(p^d))/μ` over `m` letters into its columns
/// past `p` (shape `λ⁺`) and its first `p` columns (shape `((p^d)+(λ⁻)*)/μ`).
pub fn split_tableau(t: &Tableau, lambda: &GeneralizedPartition, p: usize, m: usize) -> Result<(Tableau, Tableau)> {
    check_split_hypothesis(lambda, m)?;
    let outer = lambda.shifted_partition(p as i64)?;
    let inner = t.shape().inner();
    if t.shape().outer() != &outer {
        return Err(Error::Invalid(format!(
            "tableau shape {} is not ({lambda})+({p}^d)/μ",
            t.shape()
        )));
    }
    if inner.first() > p || inner.len() > lambda.d() {
        return Err(Error::Invalid(format!(
            "inner shape {inner} does not fit in ({p}^{})",
            lambda.d()
        )));
    }
    if t.max_entry() as usize > m {
        return Err(Error::Invalid(format!("entries exceed {m}")));
    }
    let mut right = Vec::new();
    let mut left = Vec::new();
    for (i, row) in t.rows().iter().enumerate() {
        let a = inner.part(i);
        let cut = p.saturating_sub(a).min(row.len());
        left.push(row[..cut].to_vec());
        right.push(row[cut..].to_vec());
    }
    let nu = Partition::new((0..outer.len()).map(|i| outer.part(i).min(p)).collect())?;
    let t1 = Tableau::new(SkewShape::straight(lambda.plus()), right)?;
    let t2 = Tableau::new(SkewShape::new(nu, inner.clone())?, left)?;
    Ok((t1, t2))
}

/// Inverse of [`split_tableau`].
pub fn join_tableaux(t1: &Tableau, t2: &Tableau, lambda: &GeneralizedPartition, p: usize, m: usize) -> Result<Tableau> {
    check_split_hypothesis(lambda, m)?;
    if t1.shape() != &SkewShape::straight(lambda.plus()) {
        return Err(Error::Invalid(format!(
            "first factor must have shape {}",
            lambda.plus()
        )));
    }
    let outer = lambda.shifted_partition(p as i64)?;
    let expected_nu = Partition::new((0..outer.len()).map(|i| outer.part(i).min(p)).collect())?;
    if t2.shape().outer() != &expected_nu {
        return Err(Error::Invalid(format!(
            "second factor must have outer shape {expected_nu}"
        )));
    }
    if t1.max_entry() as usize > m || t2.max_entry() as usize > m {
        return Err(Error::Invalid(format!("entries exceed {m}")));
    }
    let rows = (0..outer.len())
        .map(|i| {
            let mut r = t2.rows().get(i).cloned().unwrap_or_default();
            r.extend(t1.rows().get(i).cloned().unwrap_or_default());
            r
        })
        .collect();
    Tableau::new(SkewShape::new(outer, t2.shape().inner().clone())?, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeMap;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn g(v: &[i64]) -> GeneralizedPartition {
        GeneralizedPartition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn ssyt_examples() {
        let ts = enumerate_ssyt(&SkewShape::straight(p(&[2, 1])), 2);
        let shown: Vec<String> = ts.iter().map(|t| t.to_string()).collect();
        assert_eq!(shown, ["(1,1;2)", "(1,2;2)"]);
        assert_eq!(count_ssyt(&SkewShape::straight(p(&[1, 1])), 1), 0);
        assert_eq!(enumerate_ssyt(&SkewShape::straight(p(&[])), 3), vec![Tableau::empty()]);
        assert_eq!(count_ssyt(&"3,1/1".parse().unwrap(), 2), 6);
    }

    #[test]
    fn ssyt_counts_match_hook_content() {
        // s_{(2,1)}(1,1,1) = 8, s_{(2,2)}(1^3) = 6, s_{(3)}(1^4) = 20
        assert_eq!(count_ssyt(&SkewShape::straight(p(&[2, 1])), 3), 8);
        assert_eq!(count_ssyt(&SkewShape::straight(p(&[2, 2])), 3), 6);
        assert_eq!(count_ssyt(&SkewShape::straight(p(&[3])), 4), 20);
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[1]), &p(&[1, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[1])), 0);
        assert_eq!(lr_coefficient(&p(&[3, 1]), &p(&[2]), &p(&[1, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[2, 2]), &p(&[2]), &p(&[1, 1])), 0);
        assert_eq!(lr_coefficient(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), 2);
    }

    #[test]
    fn rational_lr_examples() {
        for k in 0..4 {
            assert_eq!(rational_lr(&g(&[0]), &Partition::row(k), &Partition::row(k)), 1);
        }
        assert_eq!(rational_lr(&g(&[1, 1]), &p(&[1, 1]), &p(&[])), 1);
        assert_eq!(rational_lr(&g(&[1, 1]), &p(&[1]), &p(&[1])), 0);
        assert_eq!(rational_lr(&g(&[1, -1]), &p(&[1]), &p(&[1])), 1);
    }

    #[test]
    fn rational_lr_is_shift_stable() {
        for lam in GeneralizedPartition::all_in_range(2, -2, 2) {
            for mu in Partition::bounded(4, 2, 4).into_iter().chain(Partition::all_up_to(3)) {
                for nu in Partition::all_up_to(3) {
                    if mu.len() > 2 || nu.len() > 2 {
                        continue;
                    }
                    let base = rational_lr(&lam, &mu, &nu);
                    let q = (nu.first() as i64).max(-lam.last()).max(0);
                    assert_eq!(rational_lr_at_shift(&lam, &mu, &nu, q + 1), base);
                    assert_eq!(rational_lr_at_shift(&lam, &mu, &nu, q + 2), base);
                }
            }
        }
    }

    type Poly = BTreeMap<Vec<i32>, i64>;

    fn pmul(a: &Poly, b: &Poly) -> Poly {
        let mut out = Poly::new();
        for (ma, ca) in a {
            for (mb, cb) in b {
                let m: Vec<i32> = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
                *out.entry(m).or_default() += ca * cb;
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    fn h(k: i64, n: usize) -> Poly {
        let mut out = Poly::new();
        if k < 0 {
            return out;
        }
        fn rec(n: usize, left: i32, cur: &mut Vec<i32>, out: &mut Poly) {
            if cur.len() == n - 1 {
                cur.push(left);
                out.insert(cur.clone(), 1);
                cur.pop();
                return;
            }
            for e in 0..=left {
                cur.push(e);
                rec(n, left - e, cur, out);
                cur.pop();
            }
        }
        rec(n, k as i32, &mut Vec::new(), &mut out);
        out
    }

    fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
        fn rec(n: usize, cur: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, i64)>) {
            if cur.len() == n {
                let inv = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .filter(|&(i, j)| cur[i] > cur[j])
                    .count();
                out.push((cur.clone(), if inv % 2 == 0 { 1 } else { -1 }));
                return;
            }
            for v in 0..n {
                if !cur.contains(&v) {
                    cur.push(v);
                    rec(n, cur, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(n, &mut Vec::new(), &mut out);
        out
    }

    /// `[x^{λ+δ}] a_{μ+δ} · det(h_{ν_i-i+j})` in `ℓ(λ)` variables.
    fn lr_oracle(lambda: &Partition, mu: &Partition, nu: &Partition) -> i64 {
        let n = lambda.len();
        if n == 0 {
            return i64::from(mu.is_empty() && nu.is_empty());
        }
        if mu.len() > n || nu.len() > n {
            return 0;
        }
        let perms = permutations(n);
        let mut alt = Poly::new();
        for (s, sign) in &perms {
            let m: Vec<i32> = (0..n).map(|i| (mu.part(s[i]) + n - 1 - s[i]) as i32).collect();
            *alt.entry(m).or_default() += sign;
        }
        let mut s_nu = Poly::new();
        for (s, sign) in &perms {
            let mut term: Poly = [(vec![0; n], *sign)].into_iter().collect();
            for i in 0..n {
                term = pmul(&term, &h(nu.part(i) as i64 - i as i64 + s[i] as i64, n));
            }
            for (m, c) in term {
                *s_nu.entry(m).or_default() += c;
            }
        }
        let prod = pmul(&alt, &s_nu);
        let key: Vec<i32> = (0..n).map(|i| (lambda.part(i) + n - 1 - i) as i32).collect();
        prod.get(&key).copied().unwrap_or(0)
    }

    #[test]
    fn lr_matches_polynomial_oracle() {
        for n in 0..=6 {
            for lam in Partition::all_of(n).into_iter().filter(|l| l.len() <= 4) {
                for mu in lam.subpartitions() {
                    for nu in Partition::all_of(n - mu.weight()) {
                        assert_eq!(
                            lr_coefficient(&lam, &mu, &nu) as i64,
                            lr_oracle(&lam, &mu, &nu),
                            "c^{lam}_{{{mu},{nu}}}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn lr_is_symmetric() {
        for n in 0..=8 {
            for lam in Partition::all_of(n) {
                for mu in lam.subpartitions() {
                    for nu in Partition::all_of(n - mu.weight()) {
                        assert_eq!(lr_coefficient(&lam, &mu, &nu), lr_coefficient(&lam, &nu, &mu));
                    }
                }
            }
        }
    }

    #[test]
    fn split_examples() {
        let shape: SkewShape = "3/1".parse().unwrap();
        let ts = enumerate_ssyt(&shape, 1);
        assert_eq!(ts.len(), 1);
        let (t1, t2) = split_tableau(&ts[0], &g(&[2]), 1, 1).unwrap();
        assert_eq!(t1.to_string(), "(1,1)");
        assert_eq!(t2.shape().size(), 0);

        let shape: SkewShape = "2,1/1".parse().unwrap();
        let lam = g(&[1, 0]);
        assert_eq!(count_ssyt(&shape, 2), 4);
        let mut seen = std::collections::HashSet::new();
        for t in enumerate_ssyt(&shape, 2) {
            let (a, b) = split_tableau(&t, &lam, 1, 2).unwrap();
            assert_eq!(a.shape(), &SkewShape::straight(p(&[1])));
            assert_eq!(b.shape(), &"1,1/1".parse().unwrap());
            assert_eq!(join_tableaux(&a, &b, &lam, 1, 2).unwrap(), t);
            seen.insert((a, b));
        }
        assert_eq!(seen.len(), 4);
    }

    #[test]
    fn split_refuses_outside_hypothesis() {
        let t = Tableau::empty();
        assert!(matches!(split_tableau(&t, &g(&[1]), 0, 2), Err(Error::Hypothesis(_))));
        assert!(matches!(
            split_tableau(&t, &g(&[0, -1]), 1, 2),
            Err(Error::Hypothesis(_))
        ));
    }

    proptest! {
        #[test]
        fn split_is_a_bijection(
            lam in prop::collection::vec(-2i64..3, 1..4),
            m in 1usize..4,
            extra in 0usize..2,
            inner in prop::collection::vec(0usize..3, 0..3),
        ) {
            let mut lam = lam;
            lam.sort_unstable_by(|a, b| b.cmp(a));
            let lam = g(&lam);
            let d = lam.d();
            prop_assume!(d >= m && lam.parts()[m - 1] >= 0);
            let pmin = lam.min_shift() as usize;
            let pp = pmin + extra;
            let mut inner = inner;
            inner.truncate(d);
            inner.iter_mut().for_each(|x| *x = (*x).min(pp));
            inner.sort_unstable_by(|a, b| b.cmp(a));
            let inner = p(&inner);
            let outer = lam.shifted_partition(pp as i64).unwrap();
            prop_assume!(outer.contains(&inner));
            let shape = SkewShape::new(outer, inner.clone()).unwrap();
            let mut pairs = std::collections::HashSet::new();
            let mut total = 0u64;
            for t in enumerate_ssyt(&shape, m) {
                let (a, b) = split_tableau(&t, &lam, pp, m).unwrap();
                prop_assert_eq!(join_tableaux(&a, &b, &lam, pp, m).unwrap(), t);
                pairs.insert((a, b));
                total += 1;
            }
            prop_assert_eq!(pairs.len() as u64, total);
            let nu = Partition::new((0..d).map(|i| (lam.parts()[i] + pp as i64).min(pp as i64) as usize).collect()).unwrap();
            let right = count_ssyt(&SkewShape::straight(lam.plus()), m);
            let left = count_ssyt(&SkewShape::new(nu, inner).unwrap(), m);
            prop_assert_eq!(total, right * left);
        }
    }
}
