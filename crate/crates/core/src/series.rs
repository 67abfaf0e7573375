//! Sparse multivariate Laurent series over the integers.
//!
//! A series lives over a [`Universe`] of named symbols, each tagged with a
//! [`Side`]. The *inverse degree* of a monomial is minus the total exponent of
//! its [`Side::Inverse`] symbols, so `x_b^{-2}` has inverse degree 2. A series
//! may carry a truncation order `N`: it is then known exactly for every
//! monomial of inverse degree `≤ N`, and nothing is stored above `N`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};

pub type Monomial = Vec<i32>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    /// Variables appear as `x_a`.
    Direct,
    /// Variables appear as `x_b^{-1}`.
    Inverse,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Letter {
    pub name: String,
    pub parity: Parity,
}

/// An ordered, `Z_2`-graded list of symbols placed on one side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedAlphabet {
    side: Side,
    letters: Vec<Letter>,
}

impl GradedAlphabet {
    pub fn new<S: Into<String>>(side: Side, letters: impl IntoIterator<Item = (S, Parity)>) -> Self {
        GradedAlphabet {
            side,
            letters: letters
                .into_iter()
                .map(|(name, parity)| Letter {
                    name: name.into(),
                    parity,
                })
                .collect(),
        }
    }

    pub fn empty(side: Side) -> Self {
        GradedAlphabet {
            side,
            letters: Vec::new(),
        }
    }

    /// `prefix[start]`, ..., one symbol per index, all of one parity.
    pub fn indexed(side: Side, prefix: &str, indices: impl IntoIterator<Item = i64>, parity: Parity) -> Self {
        GradedAlphabet::new(side, indices.into_iter().map(|i| (format!("{prefix}[{i}]"), parity)))
    }

    /// Parses `name:deg,name:deg,...` with `deg ∈ {0,1}`.
    pub fn parse(s: &str, side: Side) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty(side));
        }
        let mut letters = Vec::new();
        for item in s.split(',') {
            let (name, deg) = item
                .trim()
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected `name:degree`, got `{item}`")))?;
            let parity = match deg.trim() {
                "0" => Parity::Even,
                "1" => Parity::Odd,
                other => return Err(Error::Parse(format!("degree must be 0 or 1, got `{other}`"))),
            };
            if name.trim().is_empty() {
                return Err(Error::Parse(format!("empty symbol name in `{s}`")));
            }
            letters.push((name.trim().to_string(), parity));
        }
        Ok(GradedAlphabet::new(side, letters))
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn names_of(&self, parity: Parity) -> impl Iterator<Item = &str> {
        self.letters
            .iter()
            .filter(move |l| l.parity == parity)
            .map(|l| l.name.as_str())
    }

    pub fn count(&self, parity: Parity) -> usize {
        self.names_of(parity).count()
    }

    /// The same symbols with opposite grading.
    pub fn dual(&self) -> Self {
        GradedAlphabet {
            side: self.side,
            letters: self
                .letters
                .iter()
                .map(|l| Letter {
                    name: l.name.clone(),
                    parity: l.parity.flip(),
                })
                .collect(),
        }
    }

    pub fn spec_string(&self) -> String {
        self.letters
            .iter()
            .map(|l| format!("{}:{}", l.name, if l.parity == Parity::Even { 0 } else { 1 }))
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// The ordered set of symbols a series is written in.
#[derive(Debug, PartialEq, Eq)]
pub struct Universe {
    names: Vec<String>,
    sides: Vec<Side>,
    index: HashMap<String, usize>,
}

impl Universe {
    pub fn new<S: Into<String>>(symbols: impl IntoIterator<Item = (S, Side)>) -> Result<Arc<Self>> {
        let mut names = Vec::new();
        let mut sides = Vec::new();
        let mut index = HashMap::new();
        for (name, side) in symbols {
            let name = name.into();
            if index.insert(name.clone(), names.len()).is_some() {
                return Err(Error::DuplicateSymbol(name));
            }
            names.push(name);
            sides.push(side);
        }
        Ok(Arc::new(Universe { names, sides, index }))
    }

    /// Symbols of the given alphabets in declaration order.
    pub fn from_alphabets(alphabets: &[&GradedAlphabet]) -> Result<Arc<Self>> {
        Universe::new(
            alphabets
                .iter()
                .flat_map(|a| a.letters.iter().map(move |l| (l.name.clone(), a.side))),
        )
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn side(&self, i: usize) -> Side {
        self.sides[i]
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }

    pub fn inverse_degree(&self, mono: &[i32]) -> i64 {
        mono.iter()
            .zip(&self.sides)
            .filter(|(_, s)| **s == Side::Inverse)
            .map(|(e, _)| -(*e as i64))
            .sum()
    }

    pub fn unit(&self) -> Monomial {
        vec![0; self.len()]
    }

    /// Writes a monomial as `x^a*y^b`; the unit monomial is `1`.
    pub fn format_monomial(&self, mono: &[i32]) -> String {
        let factors: Vec<String> = mono
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| {
                if e == 1 {
                    self.names[i].clone()
                } else {
                    format!("{}^{}", self.names[i], e)
                }
            })
            .collect();
        if factors.is_empty() {
            "1".into()
        } else {
            factors.join("*")
        }
    }
}

/// First monomial (in canonical order) where two series disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub monomial: Monomial,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

#[derive(Clone, Debug)]
pub struct LaurentSeries {
    universe: Arc<Universe>,
    terms: BTreeMap<Monomial, BigInt>,
    trunc: Option<i64>,
}

impl PartialEq for LaurentSeries {
    fn eq(&self, other: &Self) -> bool {
        same_universe(&self.universe, &other.universe) && self.trunc == other.trunc && self.terms == other.terms
    }
}

impl Eq for LaurentSeries {}

fn same_universe(a: &Arc<Universe>, b: &Arc<Universe>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

fn min_opt(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl LaurentSeries {
    pub fn zero(universe: &Arc<Universe>) -> Self {
        LaurentSeries {
            universe: universe.clone(),
            terms: BTreeMap::new(),
            trunc: None,
        }
    }

    pub fn one(universe: &Arc<Universe>) -> Self {
        Self::monomial(universe, universe.unit(), BigInt::one())
    }

    pub fn constant(universe: &Arc<Universe>, c: impl Into<BigInt>) -> Self {
        Self::monomial(universe, universe.unit(), c.into())
    }

    pub fn monomial(universe: &Arc<Universe>, mono: Monomial, coeff: BigInt) -> Self {
        assert_eq!(mono.len(), universe.len(), "monomial length must match the universe");
        let mut s = Self::zero(universe);
        s.add_term(mono, coeff);
        s
    }

    /// The single variable `name^power`.
    pub fn var(universe: &Arc<Universe>, name: &str, power: i32) -> Result<Self> {
        let mut mono = universe.unit();
        mono[universe.index(name)?] = power;
        Ok(Self::monomial(universe, mono, BigInt::one()))
    }

    pub fn from_terms(universe: &Arc<Universe>, terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut s = Self::zero(universe);
        for (m, c) in terms {
            s.add_term(m, c);
        }
        s
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn trunc(&self) -> Option<i64> {
        self.trunc
    }

    pub fn is_exact(&self) -> bool {
        self.trunc.is_none()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn coeff(&self, mono: &[i32]) -> BigInt {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, mono: Monomial, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        if let Some(n) = self.trunc {
            if self.universe.inverse_degree(&mono) > n {
                return;
            }
        }
        let entry = self.terms.entry(mono);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Lowers the truncation order to `min(trunc, n)` and drops terms above it.
    pub fn truncate(mut self, n: i64) -> Self {
        let n = self.trunc.map_or(n, |t| t.min(n));
        self.trunc = Some(n);
        let u = self.universe.clone();
        self.terms.retain(|m, _| u.inverse_degree(m) <= n);
        self
    }

    /// Keeps only the monomials selected by `keep`. The truncation order is
    /// unchanged; callers are responsible for the meaning of the result.
    pub fn filter(mut self, mut keep: impl FnMut(&[i32]) -> bool) -> Self {
        self.terms.retain(|m, _| keep(m));
        self
    }

    pub fn min_inverse_degree(&self) -> Option<i64> {
        self.terms.keys().map(|m| self.universe.inverse_degree(m)).min()
    }

    pub fn max_inverse_degree(&self) -> Option<i64> {
        self.terms.keys().map(|m| self.universe.inverse_degree(m)).max()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_universe(&self.universe, &other.universe) {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        out.trunc = min_opt(self.trunc, other.trunc);
        if let Some(n) = out.trunc {
            let u = out.universe.clone();
            out.terms.retain(|m, _| u.inverse_degree(m) <= n);
        }
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    /// Truncation order up to which the product of `self` and `other` is
    /// determined by the stored terms.
    fn product_trunc(&self, other: &Self) -> Option<i64> {
        let (ta, tb) = (self.trunc, other.trunc);
        let (ma, mb) = (self.min_inverse_degree(), other.min_inverse_degree());
        let mut bound = None;
        if let (Some(t), Some(m)) = (tb, ma) {
            bound = min_opt(bound, Some(t + m));
        }
        if let (Some(t), Some(m)) = (ta, mb) {
            bound = min_opt(bound, Some(t + m));
        }
        if let (Some(x), Some(y)) = (ta, tb) {
            bound = min_opt(bound, Some(x + y + 1));
        }
        bound
    }

    /// Product. When either factor is truncated, the result carries the
    /// largest order at which it is still fully determined; for factors with
    /// a constant term this is the minimum of the two orders.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let trunc = self.product_trunc(other);
        let u = &self.universe;
        let mut out = LaurentSeries {
            universe: u.clone(),
            terms: BTreeMap::new(),
            trunc,
        };
        let other_degs: Vec<(i64, &Monomial, &BigInt)> =
            other.terms.iter().map(|(m, c)| (u.inverse_degree(m), m, c)).collect();
        for (ma, ca) in &self.terms {
            let da = u.inverse_degree(ma);
            for (db, mb, cb) in &other_degs {
                if let Some(n) = trunc {
                    if da + db > n {
                        continue;
                    }
                }
                let mono: Monomial = ma.iter().zip(mb.iter()).map(|(x, y)| x + y).collect();
                out.add_term(mono, ca * *cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = LaurentSeries {
            universe: self.universe.clone(),
            terms: BTreeMap::new(),
            trunc: self.trunc,
        };
        if !c.is_zero() {
            for (m, v) in &self.terms {
                out.terms.insert(m.clone(), v * c);
            }
        }
        out
    }

    /// Multiplies by a monomial; the truncation order moves with it.
    pub fn mul_monomial(&self, mono: &[i32]) -> Self {
        let shift = self.universe.inverse_degree(mono);
        LaurentSeries {
            universe: self.universe.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.iter().zip(mono).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
            trunc: self.trunc.map(|t| t + shift),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(&self.universe);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Specializes the symbol `name` to zero. Monomials with a negative
    /// exponent of an Inverse-side symbol are read as `(x^{-1})^k` and also
    /// vanish.
    pub fn set_zero(&self, name: &str) -> Result<Self> {
        let i = self.universe.index(name)?;
        let mut out = self.clone();
        out.terms.retain(|m, _| m[i] == 0);
        Ok(out)
    }

    /// Rewrites the series over a universe containing all of its symbols.
    pub fn embed(&self, target: &Arc<Universe>) -> Result<Self> {
        let map: Vec<usize> = self
            .universe
            .names()
            .iter()
            .map(|n| target.index(n))
            .collect::<Result<_>>()?;
        for (i, &j) in map.iter().enumerate() {
            if self.universe.side(i) != target.side(j) {
                return Err(Error::UniverseMismatch);
            }
        }
        let mut out = LaurentSeries::zero(target);
        for (m, c) in &self.terms {
            let mut mono = target.unit();
            for (i, &e) in m.iter().enumerate() {
                mono[map[i]] = e;
            }
            out.add_term(mono, c.clone());
        }
        out.trunc = self.trunc;
        Ok(out)
    }

    /// Compares two series below the smaller truncation order. Monomials are
    /// scanned in canonical (descending) order.
    pub fn first_mismatch(&self, other: &Self) -> Result<Option<Mismatch>> {
        self.check(other)?;
        let cap = min_opt(self.trunc, other.trunc);
        let u = &self.universe;
        let within = |m: &Monomial| cap.is_none_or(|n| u.inverse_degree(m) <= n);
        let mut keys: Vec<&Monomial> = self
            .terms
            .keys()
            .chain(other.terms.keys())
            .filter(|m| within(m))
            .collect();
        keys.sort_unstable_by(|a, b| b.cmp(a));
        keys.dedup();
        for m in keys {
            let (l, r) = (self.coeff(m), other.coeff(m));
            if l != r {
                return Ok(Some(Mismatch {
                    monomial: m.clone(),
                    lhs: l,
                    rhs: r,
                }));
            }
        }
        Ok(None)
    }

    pub fn agrees_with(&self, other: &Self) -> bool {
        matches!(self.first_mismatch(other), Ok(None))
    }

    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let body = if m.iter().all(|&e| e == 0) {
                c.abs().to_string()
            } else {
                format!("{}*{}", c.abs(), self.universe.format_monomial(m))
            };
            match (k, c.is_negative()) {
                (0, false) => out.push_str(&body),
                (0, true) => {
                    out.push('-');
                    out.push_str(&body)
                }
                (_, false) => {
                    out.push_str(" + ");
                    out.push_str(&body)
                }
                (_, true) => {
                    out.push_str(" - ");
                    out.push_str(&body)
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<_> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| json!({ "coeff": c.to_string(), "exponents": m }))
            .collect();
        json!({
            "symbols": self.universe.names(),
            "trunc": self.trunc,
            "terms": terms,
        })
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Neg for &LaurentSeries {
    type Output = LaurentSeries;

    fn neg(self) -> LaurentSeries {
        self.scale(&BigInt::from(-1))
    }
}

impl Add for &LaurentSeries {
    type Output = LaurentSeries;

    fn add(self, rhs: Self) -> LaurentSeries {
        self.try_add(rhs).expect("series over different universes")
    }
}

impl Sub for &LaurentSeries {
    type Output = LaurentSeries;

    fn sub(self, rhs: Self) -> LaurentSeries {
        self.try_sub(rhs).expect("series over different universes")
    }
}

impl Mul for &LaurentSeries {
    type Output = LaurentSeries;

    fn mul(self, rhs: Self) -> LaurentSeries {
        self.try_mul(rhs).expect("series over different universes")
    }
}

/// Expands `∏ (1 - sign·m)^{-1}` as a geometric series truncated at inverse
/// degree `n`. Every monomial must have positive inverse degree.
pub fn expand_inverse_product(universe: &Arc<Universe>, factors: &[(i32, Monomial)], n: i64) -> Result<LaurentSeries> {
    let mut out = LaurentSeries::one(universe).truncate(n);
    for (sign, m) in factors {
        let deg = universe.inverse_degree(m);
        if deg <= 0 {
            return Err(Error::NotGraded(universe.format_monomial(m)));
        }
        let mut geo = LaurentSeries::zero(universe).truncate(n);
        let mut k = 0i64;
        while k * deg <= n {
            let mono: Monomial = m.iter().map(|e| e * k as i32).collect();
            let c = if *sign < 0 && k % 2 == 1 {
                -BigInt::one()
            } else {
                BigInt::one()
            };
            geo.add_term(mono, c);
            k += 1;
        }
        out = &out * &geo;
    }
    Ok(out)
}

/// `∏ (1 + sign·m)` as an exact polynomial.
pub fn binomial_product(universe: &Arc<Universe>, factors: &[(i32, Monomial)]) -> LaurentSeries {
    let mut out = LaurentSeries::one(universe);
    for (sign, m) in factors {
        let mut f = LaurentSeries::one(universe);
        f.add_term(m.clone(), BigInt::from(*sign));
        out = &out * &f;
    }
    out
}

/// Exact quotient of an exact series by `x_a - x_b`; fails if the division
/// leaves a remainder.
pub fn divide_by_difference(f: &LaurentSeries, a: usize, b: usize) -> Result<LaurentSeries> {
    if !f.is_exact() {
        return Err(Error::InexactDivision);
    }
    let u = f.universe().clone();
    // group by the exponent of x_a
    let mut slices: BTreeMap<i32, LaurentSeries> = BTreeMap::new();
    for (m, c) in f.terms() {
        let mut rest = m.clone();
        let e = rest[a];
        rest[a] = 0;
        slices
            .entry(e)
            .or_insert_with(|| LaurentSeries::zero(&u))
            .add_term(rest, c.clone());
    }
    let (Some(&lo), Some(&hi)) = (slices.keys().next(), slices.keys().next_back()) else {
        return Ok(LaurentSeries::zero(&u));
    };
    let mut xb = u.unit();
    xb[b] = 1;
    let mut quotient = LaurentSeries::zero(&u);
    let mut carry = LaurentSeries::zero(&u);
    for e in (lo..=hi).rev() {
        let next = match slices.get(&e) {
            Some(g) => g + &carry.mul_monomial(&xb),
            None => carry.mul_monomial(&xb),
        };
        if e == lo {
            if !next.is_zero() {
                return Err(Error::InexactDivision);
            }
            break;
        }
        let mut xa = u.unit();
        xa[a] = e - 1;
        quotient = &quotient + &next.mul_monomial(&xa);
        carry = next;
    }
    Ok(quotient)
}

/// Determinant by expansion over column subsets. Exact zero entries are
/// skipped, so sparse band matrices stay cheap.
pub fn determinant(universe: &Arc<Universe>, matrix: &[Vec<LaurentSeries>]) -> LaurentSeries {
    let n = matrix.len();
    if n == 0 {
        return LaurentSeries::one(universe);
    }
    let mut layer: BTreeMap<u32, LaurentSeries> = BTreeMap::new();
    layer.insert(0, LaurentSeries::one(universe));
    for row in matrix.iter() {
        let mut next: BTreeMap<u32, LaurentSeries> = BTreeMap::new();
        for (&mask, acc) in &layer {
            for (j, entry) in row.iter().enumerate() {
                if mask & (1 << j) != 0 || (entry.is_zero() && entry.is_exact()) {
                    continue;
                }
                let above = (mask >> (j + 1)).count_ones();
                let mut term = acc * entry;
                if above % 2 == 1 {
                    term = -&term;
                }
                let key = mask | (1 << j);
                let slot = next.entry(key).or_insert_with(|| LaurentSeries::zero(universe));
                *slot = &*slot + &term;
            }
        }
        layer = next;
    }
    layer
        .remove(&((1u32 << n) - 1))
        .unwrap_or_else(|| LaurentSeries::zero(universe))
}
