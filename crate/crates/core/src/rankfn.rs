//! Rank functions of matroids, polymatroids and megamatroids.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, Violation};
use crate::matrix::exact_rank;
use crate::subset::{self, card, elements, full, is_subset, Mask, MAX_D};

/// Marker for an infinite rank value.
pub const INF: i64 = i64::MAX;

/// A point of `R^d` with exact rational coordinates.
pub type Point = Vec<BigRational>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Class {
    #[serde(rename = "M")]
    Matroid,
    #[serde(rename = "PM")]
    Polymatroid,
    #[serde(rename = "MM")]
    Megamatroid,
}

impl Class {
    pub fn tag(self) -> &'static str {
        match self {
            Class::Matroid => "M",
            Class::Polymatroid => "PM",
            Class::Megamatroid => "MM",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RankFunction {
    d: usize,
    values: Vec<i64>,
    class: Class,
}

fn add_rank(a: i64, b: i64) -> i64 {
    if a == INF || b == INF {
        INF
    } else {
        a + b
    }
}

/// Every violated axiom of `values`, with the first witness found for each.
pub fn violations(d: usize, values: &[i64], class: Class) -> Vec<Violation> {
    let mut out = Vec::new();
    let n = values.len();
    let top = full(d);
    if values[0] != 0 {
        out.push(Violation::NonZeroEmptySet);
    }
    if values[top as usize] == INF {
        out.push(Violation::InfiniteFullRank);
    }
    if class != Class::Megamatroid {
        if let Some(a) = (0..n).find(|&a| values[a] == INF) {
            out.push(Violation::InfiniteValueOutsideMegamatroid(a as Mask));
        }
        'mono: for a in 0..=top {
            for x in elements(!a & top) {
                let b = a | 1 << x;
                let (va, vb) = (values[a as usize], values[b as usize]);
                if va != INF && vb != INF && va > vb {
                    out.push(Violation::NotMonotone(a, b));
                    break 'mono;
                }
            }
        }
    }
    if class == Class::Matroid {
        if let Some(x) = (0..d).find(|&x| values[1 << x] != INF && values[1 << x] > 1) {
            out.push(Violation::SingletonRankExceedsOne(x + 1));
        }
    }
    'sub: for a in 0..=top {
        let va = values[a as usize];
        if va == INF {
            continue;
        }
        for b in a + 1..=top {
            let vb = values[b as usize];
            if vb == INF || is_subset(a, b) || is_subset(b, a) {
                continue;
            }
            let (u, i) = (values[(a | b) as usize], values[(a & b) as usize]);
            if u == INF || i == INF || u + i > va + vb {
                out.push(Violation::NotSubmodular(a, b));
                break 'sub;
            }
        }
    }
    out
}

impl RankFunction {
    /// Check the axioms of `class` and build the rank function.
    pub fn validate(d: usize, values: Vec<i64>, class: Class) -> Result<Self> {
        if d > MAX_D {
            return Err(Error::DimensionTooLarge(d));
        }
        if values.len() != 1 << d {
            return Err(Error::WrongLength { d, expected: 1 << d, got: values.len() });
        }
        let v = violations(d, &values, class);
        if v.is_empty() {
            Ok(RankFunction { d, values, class })
        } else {
            Err(Error::Invalid(v))
        }
    }

    pub fn from_fn(d: usize, class: Class, f: impl Fn(Mask) -> i64) -> Result<Self> {
        if d > MAX_D {
            return Err(Error::DimensionTooLarge(d));
        }
        Self::validate(d, (0..=full(d)).map(f).collect(), class)
    }

    /// Build without checking; callers guarantee the axioms.
    pub(crate) fn trusted(d: usize, values: Vec<i64>, class: Class) -> Self {
        debug_assert!(violations(d, &values, class).is_empty(), "axioms fail: {values:?}");
        RankFunction { d, values, class }
    }

    /// Reinterpret in another class, re-checking the axioms.
    pub fn with_class(&self, class: Class) -> Result<Self> {
        Self::validate(self.d, self.values.clone(), class)
    }

    pub fn uniform(r: usize, d: usize) -> Self {
        Self::trusted(d, (0..=full(d)).map(|a| card(a).min(r) as i64).collect(), Class::Matroid)
    }

    pub fn coloop() -> Self {
        Self::uniform(1, 1)
    }

    pub fn loop_() -> Self {
        Self::uniform(0, 1)
    }

    /// The unique rank function on the empty ground set.
    pub fn empty() -> Self {
        Self::trusted(0, vec![0], Class::Matroid)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn class(&self) -> Class {
        self.class
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// `rk(A)`, possibly [`INF`].
    #[inline]
    pub fn rk(&self, a: Mask) -> i64 {
        self.values[a as usize]
    }

    /// `rk` of the ground set.
    pub fn rank(&self) -> i64 {
        self.values[full(self.d) as usize]
    }

    pub fn is_finite(&self) -> bool {
        self.values.iter().all(|&v| v != INF)
    }

    fn check_subset(&self, a: Mask) -> Result<()> {
        if is_subset(a, full(self.d)) {
            Ok(())
        } else {
            Err(Error::NotASubset(a))
        }
    }

    /// Restriction to `a`, relabeled onto `1..|a|` in increasing order.
    pub fn restrict(&self, a: Mask) -> Result<Self> {
        self.check_subset(a)?;
        let values = (0..=full(card(a))).map(|c| self.rk(subset::expand(c, a))).collect();
        Ok(Self::trusted(card(a), values, self.class))
    }

    /// Contraction by `b`: `C -> rk(B ∪ C) - rk(B)` on the complement of `b`.
    pub fn contract(&self, b: Mask) -> Result<Self> {
        self.check_subset(b)?;
        let base = self.rk(b);
        if base == INF {
            return Err(Error::ContractInfiniteRank(b));
        }
        let rest = full(self.d) & !b;
        let values = (0..=full(card(rest)))
            .map(|c| match self.rk(b | subset::expand(c, rest)) {
                INF => INF,
                v => v - base,
            })
            .collect();
        Ok(Self::trusted(card(rest), values, self.class))
    }

    /// The minor `rk_{A/B}` for `B ⊆ A`, on `A \ B`.
    pub fn minor(&self, a: Mask, b: Mask) -> Result<Self> {
        if !is_subset(b, a) {
            return Err(Error::NotASubset(b));
        }
        self.restrict(a)?.contract(subset::compress(b, a))
    }

    /// `rk ⊞ other` on `d + e` elements; `other` occupies the last `e`.
    pub fn direct_sum(&self, other: &RankFunction) -> Result<Self> {
        let d = self.d + other.d;
        if d > MAX_D {
            return Err(Error::DimensionTooLarge(d));
        }
        let lo = full(self.d);
        let values = (0..=full(d))
            .map(|a| add_rank(self.rk(a & lo), other.rk(a >> self.d)))
            .collect();
        let class = self.class.max(other.class);
        Ok(Self::trusted(d, values, class))
    }

    /// `rk^N(A) = min_{X ⊆ A} rk(X) + N(|A| - |X|)`, always finite.
    pub fn truncate_above(&self, n: i64) -> Self {
        let values = (0..=full(self.d))
            .map(|a| {
                subset::subsets_of(a)
                    .filter(|&x| self.rk(x) != INF)
                    .map(|x| self.rk(x) + n * (card(a) - card(x)) as i64)
                    .min()
                    .expect("rk of the empty set is finite")
            })
            .collect();
        Self::trusted(self.d, values, Class::Megamatroid)
    }

    /// `rk ∘ σ⁻¹`: element `i` of `self` becomes element `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        check_perm(perm, self.d)?;
        let mut values = vec![0; self.values.len()];
        for a in 0..=full(self.d) {
            values[subset::permute(a, perm) as usize] = self.rk(a);
        }
        Ok(Self::trusted(self.d, values, self.class))
    }

    fn greedy_ints(&self, order: &[usize]) -> Result<Vec<i64>> {
        let mut y = vec![0; self.d];
        let (mut seen, mut prev) = (0 as Mask, 0);
        for &i in order {
            seen |= 1 << i;
            let cur = self.rk(seen);
            if cur == INF {
                return Err(Error::InfiniteChainRank(seen));
            }
            y[i] = cur - prev;
            prev = cur;
        }
        Ok(y)
    }

    /// Greedy point for the order `σ(1), …, σ(d)` given one-based.
    pub fn greedy_vertex(&self, sigma: &[usize]) -> Result<Point> {
        let order: Vec<usize> = sigma.iter().map(|&s| s.wrapping_sub(1)).collect();
        check_perm(&order, self.d)?;
        Ok(self.greedy_ints(&order)?.into_iter().map(int_q).collect())
    }

    fn vertex_set(&self) -> Result<BTreeSet<Vec<i64>>> {
        subset::permutations(self.d).iter().map(|p| self.greedy_ints(p)).collect()
    }

    /// Vertices of `Q(rk)`, deduplicated and sorted.
    pub fn vertices(&self) -> Result<Vec<Point>> {
        Ok(self
            .vertex_set()?
            .into_iter()
            .map(|v| v.into_iter().map(int_q).collect())
            .collect())
    }

    /// Affine dimension of `Q(rk)`.
    pub fn dim(&self) -> Result<i64> {
        let verts: Vec<Vec<i64>> = self.vertex_set()?.into_iter().collect();
        let Some(v0) = verts.first() else { return Ok(-1) };
        let diffs: Vec<Vec<i64>> = verts[1..]
            .iter()
            .map(|v| v.iter().zip(v0).map(|(a, b)| a - b).collect())
            .collect();
        Ok(exact_rank(&diffs) as i64)
    }

    /// Indicator of `Q(rk)` at `y`.
    pub fn membership(&self, y: &[BigRational]) -> bool {
        if y.len() != self.d {
            return false;
        }
        let sums = subset_sums(y);
        let r = self.rank();
        if sums[full(self.d) as usize] != int_q(r) {
            return false;
        }
        sums.iter()
            .zip(&self.values)
            .all(|(s, &v)| v == INF || *s <= int_q(v))
    }

    /// Sets `B` with `|B| = rk(B) = r`.
    pub fn bases(&self) -> Vec<Mask> {
        let r = self.rank();
        (0..=full(self.d)).filter(|&b| card(b) as i64 == r && self.rk(b) == r).collect()
    }

    /// Matroid with `rk(A) = max |A ∩ B|` over the given family.
    pub fn from_bases(d: usize, bases: &[Mask]) -> Result<Self> {
        Self::from_fn(d, Class::Matroid, |a| {
            bases.iter().map(|&b| card(a & b) as i64).max().unwrap_or(0)
        })
    }

    /// The same rank function with its own labels canonicalized: the
    /// lexicographically least value array over all relabelings.
    pub fn canonical_form(&self) -> Self {
        let mut best = self.values.clone();
        let mut values = vec![0; self.values.len()];
        for perm in subset::permutations(self.d) {
            for a in 0..=full(self.d) {
                values[subset::permute(a, &perm) as usize] = self.values[a as usize];
            }
            if values < best {
                best.clone_from(&values);
            }
        }
        Self::trusted(self.d, best, self.class)
    }
}

fn check_perm(perm: &[usize], d: usize) -> Result<()> {
    let mut seen = vec![false; d];
    if perm.len() != d {
        return Err(Error::BadPermutation(d));
    }
    for &p in perm {
        if p >= d || std::mem::replace(&mut seen[p], true) {
            return Err(Error::BadPermutation(d));
        }
    }
    Ok(())
}

pub(crate) fn int_q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// `Σ_{i∈A} y_i` for every subset `A`.
pub(crate) fn subset_sums(y: &[BigRational]) -> Vec<BigRational> {
    let mut sums = vec![BigRational::zero(); 1 << y.len()];
    for a in 1..sums.len() {
        let low = a.trailing_zeros() as usize;
        sums[a] = &sums[a & (a - 1)] + &y[low];
    }
    sums
}

impl fmt::Display for RankFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self
            .values
            .iter()
            .map(|&v| if v == INF { "inf".into() } else { v.to_string() })
            .collect();
        write!(f, "{}[d={}]({})", self.class.tag(), self.d, vals.join(","))
    }
}

/// Depth-first enumeration of rank functions by value intervals.
///
/// Subsets are visited by cardinality then numerically. Each value ranges
/// over the interval allowed by monotonicity against the one-element-smaller
/// sets and by the local submodular inequalities
/// `rk(A) + rk(A−x−y) ≤ rk(A−x) + rk(A−y)`; these local conditions imply
/// the global axioms, so every leaf is valid and none is produced twice.
pub struct RankEnumerator {
    d: usize,
    r: i64,
    matroid: bool,
    order: Vec<Mask>,
    values: Vec<i64>,
    stack: Vec<(i64, i64)>,
    state: EnumState,
}

#[derive(PartialEq, Eq)]
enum EnumState {
    Fresh,
    Running,
    Done,
}

impl RankEnumerator {
    fn new(d: usize, r: i64, matroid: bool) -> Self {
        RankEnumerator {
            d,
            r,
            matroid,
            order: subset::by_cardinality(d),
            values: vec![0; 1 << d],
            stack: Vec::new(),
            state: EnumState::Fresh,
        }
    }

    fn interval(&self, a: Mask) -> (i64, i64) {
        let v = &self.values;
        let mut lo = 0;
        let mut hi = self.r;
        let elems: Vec<usize> = elements(a).collect();
        for (k, &x) in elems.iter().enumerate() {
            let ax = v[(a & !(1 << x)) as usize];
            lo = lo.max(ax);
            if self.matroid {
                hi = hi.min(ax + 1);
            }
            for &y in &elems[k + 1..] {
                let ay = v[(a & !(1 << y)) as usize];
                let axy = v[(a & !(1 << x) & !(1 << y)) as usize];
                hi = hi.min(ax + ay - axy);
            }
        }
        if a == full(self.d) {
            if lo <= self.r && self.r <= hi {
                (self.r, self.r)
            } else {
                (1, 0)
            }
        } else {
            (lo, hi)
        }
    }

    fn depth_target(&self) -> usize {
        self.order.len() - 1
    }

    /// Extend the partial assignment to a leaf, backtracking as needed.
    fn descend(&mut self) -> bool {
        while self.stack.len() < self.depth_target() {
            let a = self.order[self.stack.len() + 1];
            let (lo, hi) = self.interval(a);
            if lo <= hi {
                self.values[a as usize] = lo;
                self.stack.push((lo, hi));
            } else if !self.backtrack() {
                return false;
            }
        }
        true
    }

    /// Advance the deepest position that still has room.
    fn backtrack(&mut self) -> bool {
        while let Some((cur, hi)) = self.stack.pop() {
            if cur < hi {
                let a = self.order[self.stack.len() + 1];
                self.values[a as usize] = cur + 1;
                self.stack.push((cur + 1, hi));
                return true;
            }
        }
        false
    }

    fn emit(&self) -> RankFunction {
        let class = if self.matroid { Class::Matroid } else { Class::Polymatroid };
        RankFunction::trusted(self.d, self.values.clone(), class)
    }
}

impl Iterator for RankEnumerator {
    type Item = RankFunction;

    fn next(&mut self) -> Option<RankFunction> {
        let found = match self.state {
            EnumState::Done => return None,
            EnumState::Fresh => {
                self.state = EnumState::Running;
                if self.d == 0 {
                    self.state = EnumState::Done;
                    return (self.r == 0).then(RankFunction::empty);
                }
                self.descend()
            }
            EnumState::Running => self.backtrack() && self.descend(),
        };
        if found {
            Some(self.emit())
        } else {
            self.state = EnumState::Done;
            None
        }
    }
}

/// Every matroid on `{1..d}` of rank `r`, each exactly once; `d ≤ 8`.
pub fn enumerate_matroids(d: usize, r: usize) -> Result<RankEnumerator> {
    if d > 8 {
        return Err(Error::SizeLimitExceeded { what: "matroid enumeration", limit: "d <= 8" });
    }
    Ok(RankEnumerator::new(d, r as i64, true))
}

/// Every polymatroid on `{1..d}` of rank `r`, each exactly once; `d, r ≤ 4`.
pub fn enumerate_polymatroids(d: usize, r: usize) -> Result<RankEnumerator> {
    if d > 4 || r > 4 {
        return Err(Error::SizeLimitExceeded {
            what: "polymatroid enumeration",
            limit: "d <= 4 and r <= 4",
        });
    }
    Ok(RankEnumerator::new(d, r as i64, false))
}

/// JSON shape: `{"d": 2, "class": "M", "values": [0, 1, 1, "inf"]}`.
#[derive(Serialize, Deserialize)]
struct RawRankFunction {
    d: usize,
    class: Class,
    values: Vec<RawValue>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RawValue {
    Int(i64),
    Word(String),
}

impl Serialize for RankFunction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawRankFunction {
            d: self.d,
            class: self.class,
            values: self
                .values
                .iter()
                .map(|&v| if v == INF { RawValue::Word("inf".into()) } else { RawValue::Int(v) })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RankFunction {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = RawRankFunction::deserialize(de)?;
        let values = raw_values(&raw.values).map_err(D::Error::custom)?;
        RankFunction::validate(raw.d, values, raw.class).map_err(D::Error::custom)
    }
}

fn raw_values(raw: &[RawValue]) -> Result<Vec<i64>> {
    raw.iter()
        .map(|v| match v {
            RawValue::Int(i) if *i != INF => Ok(*i),
            RawValue::Word(w) if w == "inf" => Ok(INF),
            _ => Err(Error::Parse("rank values are integers or \"inf\"".into())),
        })
        .collect()
}

/// Parse rank-function JSON, keeping axiom failures as a typed error
/// instead of a serde message.
pub fn parse_json(text: &str) -> Result<RankFunction> {
    let raw: RawRankFunction =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    RankFunction::validate(raw.d, raw_values(&raw.values)?, raw.class)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn validate_examples() {
        let u12 = RankFunction::validate(2, vec![0, 1, 1, 1], Class::Matroid).unwrap();
        assert_eq!(u12, RankFunction::uniform(1, 2));
        assert_eq!(
            RankFunction::validate(1, vec![1, 1], Class::Matroid),
            Err(Error::Invalid(vec![Violation::NonZeroEmptySet]))
        );
        assert_eq!(
            RankFunction::validate(2, vec![0, 2, 2, 2], Class::Matroid),
            Err(Error::Invalid(vec![Violation::SingletonRankExceedsOne(1)]))
        );
        assert!(RankFunction::validate(2, vec![0, 2, 2, 2], Class::Polymatroid).is_ok());
        assert!(matches!(
            RankFunction::validate(2, vec![0, 2, 1, 1], Class::Polymatroid),
            Err(Error::Invalid(v)) if v == vec![Violation::NotMonotone(1, 3)]
        ));
        assert!(matches!(
            RankFunction::validate(2, vec![0, 1, 1, 3], Class::Polymatroid),
            Err(Error::Invalid(v)) if v == vec![Violation::NotSubmodular(1, 2)]
        ));
        assert!(RankFunction::validate(2, vec![0, 2, 2, 4], Class::Polymatroid).is_ok());
        assert!(matches!(
            RankFunction::validate(2, vec![0, 1, INF, 1], Class::Polymatroid),
            Err(Error::Invalid(v)) if v.contains(&Violation::InfiniteValueOutsideMegamatroid(2))
        ));
        assert!(RankFunction::validate(2, vec![0, 1, INF, 1], Class::Megamatroid).is_ok());
    }

    #[test]
    fn minors() {
        let u12 = RankFunction::uniform(1, 2);
        assert_eq!(u12.restrict(0b01).unwrap().values(), &[0, 1]);
        assert_eq!(u12.contract(0b01).unwrap().values(), &[0, 0]);
        assert_eq!(u12.contract(0).unwrap(), u12);
        let mega = RankFunction::validate(2, vec![0, INF, 0, 1], Class::Megamatroid).unwrap();
        assert_eq!(mega.contract(1), Err(Error::ContractInfiniteRank(1)));
    }

    #[test]
    fn sums() {
        let s = RankFunction::coloop().direct_sum(&RankFunction::loop_()).unwrap();
        assert_eq!(s.values(), &[0, 1, 0, 1]);
        let u = RankFunction::uniform(1, 2);
        assert_eq!(u.direct_sum(&RankFunction::empty()).unwrap(), u);
        let uu = u.direct_sum(&u).unwrap();
        assert_eq!(uu.rank(), 2);
        assert!(uu.with_class(Class::Matroid).is_ok());
        assert_eq!(uu.rk(0b0101), 2);
        assert_eq!(uu.rk(0b0011), 1);
    }

    #[test]
    fn truncation() {
        let u = RankFunction::uniform(2, 3);
        assert_eq!(u.truncate_above(1).values(), u.values());
        assert!(u.truncate_above(0).values().iter().all(|&v| v == 0));
        let mega = RankFunction::validate(2, vec![0, INF, 0, 1], Class::Megamatroid).unwrap();
        let t = mega.truncate_above(1);
        assert_eq!(t.rk(1), 1);
        assert!(t.with_class(Class::Megamatroid).is_ok());
    }

    #[test]
    fn greedy_and_vertices() {
        let u = RankFunction::uniform(1, 2);
        assert_eq!(u.greedy_vertex(&[1, 2]).unwrap(), vec![q(1, 1), q(0, 1)]);
        assert_eq!(u.greedy_vertex(&[2, 1]).unwrap(), vec![q(0, 1), q(1, 1)]);
        let pm = RankFunction::validate(2, vec![0, 1, 2, 2], Class::Polymatroid).unwrap();
        let a = pm.greedy_vertex(&[1, 2]).unwrap();
        let b = pm.greedy_vertex(&[2, 1]).unwrap();
        assert_eq!(a, vec![q(1, 1), q(1, 1)]);
        assert_eq!(b, vec![q(0, 1), q(2, 1)]);
        assert!(pm.membership(&a) && pm.membership(&b));
        assert_eq!(u.greedy_vertex(&[1, 1]), Err(Error::BadPermutation(2)));

        let free = RankFunction::uniform(2, 2);
        assert_eq!(free.vertices().unwrap().len(), 1);
        assert_eq!(free.dim().unwrap(), 0);
        assert_eq!(u.vertices().unwrap().len(), 2);
        assert_eq!(u.dim().unwrap(), 1);
        let u24 = RankFunction::uniform(2, 4);
        assert_eq!(u24.vertices().unwrap().len(), 6);
        assert_eq!(u24.dim().unwrap(), 3);
    }

    #[test]
    fn membership_examples() {
        let u = RankFunction::uniform(1, 2);
        assert!(u.membership(&[q(1, 2), q(1, 2)]));
        assert!(!u.membership(&[q(2, 1), q(-1, 1)]));
        let m = RankFunction::from_bases(4, &[0b0101, 0b1001, 0b0110, 0b1010]).unwrap();
        assert!(m.membership(&[q(1, 2), q(1, 2), q(1, 2), q(1, 2)]));
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_matroids(1, 1).unwrap().count(), 1);
        assert_eq!(enumerate_matroids(2, 1).unwrap().count(), 3);
        assert_eq!(enumerate_matroids(2, 2).unwrap().count(), 1);
        assert_eq!(enumerate_matroids(0, 0).unwrap().count(), 1);
        assert_eq!(enumerate_matroids(0, 1).unwrap().count(), 0);
        assert_eq!(enumerate_matroids(2, 3).unwrap().count(), 0);
        assert!(enumerate_matroids(9, 1).is_err());
        assert!(enumerate_polymatroids(5, 1).is_err());
    }

    #[test]
    fn json_round_trip() {
        let mega = RankFunction::validate(2, vec![0, INF, 0, 1], Class::Megamatroid).unwrap();
        let text = serde_json::to_string(&mega).unwrap();
        assert_eq!(text, r#"{"d":2,"class":"MM","values":[0,"inf",0,1]}"#);
        assert_eq!(parse_json(&text).unwrap(), mega);
        let back: RankFunction = serde_json::from_str(&text).unwrap();
        assert_eq!(back, mega);
        assert!(matches!(
            parse_json(r#"{"d":1,"class":"M","values":[1,1]}"#),
            Err(Error::Invalid(_))
        ));
    }
}
