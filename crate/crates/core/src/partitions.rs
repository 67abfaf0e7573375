//! Partitions, generalized partitions and skew shapes.
//!
//! A [`Partition`] drops trailing zeros; a [`GeneralizedPartition`] keeps its
//! exact length `d` because padding by rectangles `(p^d)` is meaningful for it.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl Partition {
    /// Builds a partition, normalizing trailing zeros away.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(join(&parts)));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(k)`.
    pub fn row(k: usize) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Partition(vec![k])
        }
    }

    /// The rectangle with `rows` rows of length `cols`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            Self::empty()
        } else {
            Partition(vec![cols; rows])
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first();
        let mut out = Vec::with_capacity(cols);
        for j in 1..=cols {
            out.push(self.0.iter().take_while(|&&r| r >= j).count());
        }
        Partition(out)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Componentwise sum.
    pub fn add(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        Partition((0..n).map(|i| self.part(i) + other.part(i)).collect())
    }

    /// Number of diagonal cells, i.e. `#{i : μ_i ≥ i}`.
    pub fn rank(&self) -> usize {
        self.0.iter().enumerate().take_while(|(i, &r)| r > *i).count()
    }

    pub fn frobenius(&self) -> FrobeniusCoords {
        let conj = self.conjugate();
        let r = self.rank();
        FrobeniusCoords {
            arms: (0..r).map(|i| self.0[i] - i - 1).collect(),
            legs: (0..r).map(|i| conj.0[i] - i - 1).collect(),
        }
    }

    /// Hook membership: `λ_{m+1} ≤ n`.
    pub fn is_hook(&self, m: usize, n: usize) -> bool {
        self.part(m) <= n
    }

    /// Pads to a generalized partition of length `d`.
    pub fn to_generalized(&self, d: usize) -> Result<GeneralizedPartition> {
        if self.len() > d {
            return Err(Error::Invalid(format!("partition {self} has more than {d} parts")));
        }
        GeneralizedPartition::new((0..d).map(|i| self.part(i) as i64).collect())
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        Self::bounded(n, usize::MAX, usize::MAX)
    }

    /// All partitions of weight `≤ n`, ordered by weight then reverse lex.
    pub fn all_up_to(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Self::all_of).collect()
    }

    /// Partitions of `n` with at most `max_len` parts, each at most `max_part`.
    pub fn bounded(n: usize, max_len: usize, max_part: usize) -> Vec<Partition> {
        fn rec(left: usize, cap: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if left == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if slots == 0 {
                return;
            }
            for k in (1..=cap.min(left)).rev() {
                cur.push(k);
                rec(left - k, k, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, max_part, max_len, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions fitting inside the `rows × cols` box, any weight.
    pub fn in_box(rows: usize, cols: usize) -> Vec<Partition> {
        (0..=rows * cols).flat_map(|n| Self::bounded(n, rows, cols)).collect()
    }

    /// All `ν` with `ν ⊆ self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn rec(outer: &[usize], i: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == outer.len() {
                out.push(Partition::new(cur.clone()).expect("decreasing by construction"));
                return;
            }
            for k in 0..=outer[i].min(cap) {
                cur.push(k);
                rec(outer, i + 1, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(&self.0, 0, usize::MAX, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&join(&self.0))
        }
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_list::<i64>(s)?;
        if parts.iter().any(|&p| p < 0) {
            return Err(Error::Parse(format!("negative part in partition `{s}`")));
        }
        Partition::new(parts.into_iter().map(|p| p as usize).collect())
    }
}

/// Diagonal hook coordinates `(α | β)` of a partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusCoords {
    pub arms: Vec<usize>,
    pub legs: Vec<usize>,
}

impl FrobeniusCoords {
    pub fn rank(&self) -> usize {
        self.arms.len()
    }

    /// Rebuilds the partition. Fails unless arms and legs are strictly
    /// decreasing sequences of equal length.
    pub fn to_partition(&self) -> Result<Partition> {
        let strict = |v: &[usize]| v.windows(2).all(|w| w[0] > w[1]);
        if self.arms.len() != self.legs.len() || !strict(&self.arms) || !strict(&self.legs) {
            return Err(Error::Invalid(format!("bad Frobenius coordinates {self:?}")));
        }
        let r = self.rank();
        let rows = if r == 0 { 0 } else { self.legs[0] + 1 };
        let parts = (1..=rows)
            .map(|i| {
                if i <= r {
                    self.arms[i - 1] + i
                } else {
                    (1..=r).filter(|&j| self.legs[j - 1] + j >= i).count()
                }
            })
            .collect();
        Partition::new(parts)
    }
}

/// A weakly decreasing integer sequence of fixed length `d ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct GeneralizedPartition(Vec<i64>);

impl TryFrom<Vec<i64>> for GeneralizedPartition {
    type Error = Error;

    fn try_from(parts: Vec<i64>) -> Result<Self> {
        GeneralizedPartition::new(parts)
    }
}

impl From<GeneralizedPartition> for Vec<i64> {
    fn from(p: GeneralizedPartition) -> Self {
        p.0
    }
}

impl GeneralizedPartition {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Invalid("generalized partition of length 0".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(join(&parts)));
        }
        Ok(GeneralizedPartition(parts))
    }

    /// The zero vector `0_d`.
    pub fn zero(d: usize) -> Self {
        GeneralizedPartition(vec![0; d.max(1)])
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn d(&self) -> usize {
        self.0.len()
    }

    pub fn first(&self) -> i64 {
        self.0[0]
    }

    pub fn last(&self) -> i64 {
        self.0[self.0.len() - 1]
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Adds the rectangle `(p^d)`; `p` may be negative.
    pub fn shift(&self, p: i64) -> GeneralizedPartition {
        GeneralizedPartition(self.0.iter().map(|x| x + p).collect())
    }

    pub fn add(&self, other: &GeneralizedPartition) -> Result<GeneralizedPartition> {
        if self.d() != other.d() {
            return Err(Error::Invalid("length mismatch".into()));
        }
        Ok(GeneralizedPartition(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }

    /// Smallest `p ≥ 0` with `λ + (p^d)` a partition.
    pub fn min_shift(&self) -> i64 {
        (-self.last()).max(0)
    }

    /// The partition `λ + (p^d)`; requires `p ≥ min_shift()`.
    pub fn shifted_partition(&self, p: i64) -> Result<Partition> {
        self.shift(p).to_partition()
    }

    pub fn is_partition(&self) -> bool {
        self.last() >= 0
    }

    pub fn to_partition(&self) -> Result<Partition> {
        if !self.is_partition() {
            return Err(Error::Invalid(format!("{self} has negative parts")));
        }
        Partition::new(self.0.iter().map(|&x| x as usize).collect())
    }

    /// `λ*`: negate and reverse.
    pub fn star(&self) -> GeneralizedPartition {
        GeneralizedPartition(self.0.iter().rev().map(|x| -x).collect())
    }

    pub fn plus(&self) -> Partition {
        Partition::new(self.0.iter().map(|&x| x.max(0) as usize).collect()).expect("clamped parts stay decreasing")
    }

    pub fn minus(&self) -> Partition {
        Partition::new(self.0.iter().rev().map(|&x| (-x).max(0) as usize).collect())
            .expect("clamped parts stay decreasing")
    }

    /// The split `(λ⁺, λ⁻, λ*)`.
    pub fn split_pm(&self) -> (Partition, Partition, GeneralizedPartition) {
        (self.plus(), self.minus(), self.star())
    }

    /// All generalized partitions of length `d` with parts in `[lo, hi]`.
    pub fn all_in_range(d: usize, lo: i64, hi: i64) -> Vec<GeneralizedPartition> {
        fn rec(d: usize, lo: i64, cap: i64, cur: &mut Vec<i64>, out: &mut Vec<GeneralizedPartition>) {
            if cur.len() == d {
                out.push(GeneralizedPartition(cur.clone()));
                return;
            }
            for v in (lo..=cap).rev() {
                cur.push(v);
                rec(d, lo, v, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if d > 0 && lo <= hi {
            rec(d, lo, hi, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Display for GeneralizedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.0))
    }
}

impl FromStr for GeneralizedPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GeneralizedPartition::new(parse_list(s)?)
    }
}

/// The skew diagram `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.weight() - self.inner.weight()
    }

    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Column range `[start, end)` occupied in row `i`.
    pub fn row_range(&self, i: usize) -> (usize, usize) {
        (self.inner.part(i), self.outer.part(i))
    }

    pub fn contains_cell(&self, i: usize, j: usize) -> bool {
        let (a, b) = self.row_range(i);
        a <= j && j < b
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (0..self.rows())
            .flat_map(|i| {
                let (a, b) = self.row_range(i);
                (a..b).map(move |j| (i, j))
            })
            .collect()
    }

    pub fn conjugate(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }

    /// Rotation by 180° inside the bounding box `ℓ(outer) × outer_1`.
    pub fn rotate180(&self) -> SkewShape {
        let r = self.outer.len();
        let c = self.outer.first();
        let outer = (0..r).map(|i| c - self.inner.part(r - 1 - i)).collect();
        let inner = (0..r).map(|i| c - self.outer.part(r - 1 - i)).collect();
        SkewShape::new(
            Partition::new(outer).expect("rotation keeps order"),
            Partition::new(inner).expect("rotation keeps order"),
        )
        .expect("rotation keeps containment")
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('/') {
            Some((o, i)) => SkewShape::new(o.parse()?, i.parse()?),
            None => Ok(SkewShape::straight(s.parse()?)),
        }
    }
}

fn join<T: fmt::Display>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn parse_list<T: FromStr>(s: &str) -> Result<Vec<T>> {
    let s = s.trim();
    if s.is_empty() || s == "∅" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<T>()
                .map_err(|_| Error::Parse(format!("bad integer `{}` in `{s}`", t.trim())))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn g(s: &str) -> GeneralizedPartition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p("3,1").conjugate(), p("2,1,1"));
        assert_eq!(p("2,2").conjugate(), p("2,2"));
    }

    #[test]
    fn normalizes_trailing_zeros() {
        assert_eq!(p("2,1,0,0"), p("2,1"));
        assert_eq!(p("0"), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("1,-1".parse::<Partition>().is_err());
    }

    #[test]
    fn split_pm_examples() {
        let (plus, minus, star) = g("2,0,-1").split_pm();
        assert_eq!(plus, p("2"));
        assert_eq!(minus, p("1"));
        assert_eq!(star, g("1,0,-2"));

        let (plus, minus, star) = GeneralizedPartition::zero(3).split_pm();
        assert!(plus.is_empty() && minus.is_empty());
        assert_eq!(star, GeneralizedPartition::zero(3));

        let (plus, minus, star) = g("-2").split_pm();
        assert!(plus.is_empty());
        assert_eq!(minus, p("2"));
        assert_eq!(star, g("2"));
    }

    #[test]
    fn frobenius_examples() {
        let f = Partition::empty().frobenius();
        assert_eq!(f.rank(), 0);
        let f = p("1").frobenius();
        assert_eq!((f.arms, f.legs), (vec![0], vec![0]));
        let f = p("3,2").frobenius();
        assert_eq!((f.arms.clone(), f.legs.clone()), (vec![2, 0], vec![1, 0]));
        assert_eq!(f.to_partition().unwrap(), p("3,2"));
    }

    #[test]
    fn frobenius_round_trip() {
        for mu in Partition::all_up_to(9) {
            assert_eq!(mu.frobenius().to_partition().unwrap(), mu);
        }
    }

    #[test]
    fn rectangle_shift_round_trips() {
        for d in 1..=3 {
            for lam in GeneralizedPartition::all_in_range(d, -3, 3) {
                for s in 0..4 {
                    assert_eq!(lam.shift(s).shift(-s), lam);
                }
                let (plus, minus, _) = lam.split_pm();
                let back = plus
                    .to_generalized(d)
                    .unwrap()
                    .add(&minus.to_generalized(d).unwrap().star())
                    .unwrap();
                assert_eq!(back, lam);
            }
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..8).map(|n| Partition::all_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        assert_eq!(Partition::in_box(2, 2).len(), 6);
        assert_eq!(p("2,1").subpartitions().len(), 5);
    }

    #[test]
    fn conjugation_reverses_complements_in_a_box() {
        // complement of λ inside a × b, conjugated, is the complement of λ' inside b × a
        let (a, b) = (3, 4);
        for lam in Partition::in_box(a, b) {
            let comp = SkewShape::new(Partition::rectangle(a, b), lam.clone())
                .unwrap()
                .rotate180();
            let comp_conj = SkewShape::new(Partition::rectangle(b, a), lam.conjugate())
                .unwrap()
                .rotate180();
            assert_eq!(comp.outer().conjugate(), *comp_conj.outer());
        }
    }

    #[test]
    fn skew_parse_and_rotate() {
        let s: SkewShape = "3,1/1".parse().unwrap();
        assert_eq!(s.size(), 3);
        assert_eq!(s.to_string(), "3,1/1");
        let r = s.rotate180();
        assert_eq!(r.outer(), &p("3,2"));
        assert_eq!(r.inner(), &p("2"));
        assert_eq!(r.rotate180(), s);
        assert!("1/2".parse::<SkewShape>().is_err());
    }
}
