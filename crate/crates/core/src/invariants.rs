//! Valuative functions on labeled (poly)matroids and two invariants built
//! from them: the G-invariant and the Tutte polynomial.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::chain::{factorial, ChainScheme};
use crate::error::{Error, Result};
use crate::lyndon::Word;
use crate::par;
use crate::rankfn::{Class, RankFunction, INF};
use crate::subset::{card, full, permutations};

/// `1` iff `rk(X_j) = r_j` along the whole chain.
pub fn s_eval(scheme: &ChainScheme, rk: &RankFunction) -> u8 {
    let hit = scheme.d() == rk.d()
        && scheme.chain().iter().zip(scheme.ranks()).all(|(&x, &r)| rk.rk(x) == r);
    u8::from(hit)
}

/// `1` iff `rk(X_j) ≤ r_j` along the whole chain.
pub fn s_leq_eval(scheme: &ChainScheme, rk: &RankFunction) -> u8 {
    let hit = scheme.d() == rk.d()
        && scheme.chain().iter().zip(scheme.ranks()).all(|(&x, &r)| rk.rk(x) <= r);
    u8::from(hit)
}

/// Counts of rank-increment words over the `d!` maximal chains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GCoefficients {
    pub d: usize,
    pub r: i64,
    pub coeffs: BTreeMap<Word, u64>,
}

impl GCoefficients {
    pub fn get(&self, word: &[u32]) -> u64 {
        self.coeffs.get(word).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.coeffs.values().sum()
    }
}

/// Largest ground set for which the `d!` chains are walked.
pub const MAX_G_D: usize = 10;

/// The G-invariant: for every ordering of the ground set, the word of
/// increments `rk(S_i) − rk(S_{i−1})` along its initial segments.
pub fn g_invariant(rk: &RankFunction) -> Result<GCoefficients> {
    let d = rk.d();
    if d > MAX_G_D {
        return Err(Error::SizeLimitExceeded { what: "g_invariant", limit: "d <= 10" });
    }
    if let Some(a) = (0..=full(d)).find(|&a| rk.rk(a) == INF) {
        return Err(Error::InfiniteChainRank(a));
    }
    // Split by the first element so every worker owns (d−1)! orderings.
    let firsts: Vec<usize> = if d == 0 { vec![] } else { (0..d).collect() };
    let tails = permutations(d.saturating_sub(1));
    let parts = par::map(&firsts, |&first| -> Result<BTreeMap<Word, u64>> {
        let mut out = BTreeMap::new();
        let rest: Vec<usize> = (0..d).filter(|&i| i != first).collect();
        for tail in &tails {
            let mut word = Vec::with_capacity(d);
            let mut seg = 0u32;
            let mut prev = 0i64;
            for i in std::iter::once(first).chain(tail.iter().map(|&t| rest[t])) {
                seg |= 1 << i;
                let step = rk.rk(seg) - prev;
                prev = rk.rk(seg);
                word.push(u32::try_from(step).map_err(|_| {
                    Error::ClassMismatch("rank decreases along a chain; not a polymatroid".into())
                })?);
            }
            *out.entry(word).or_insert(0) += 1;
        }
        Ok(out)
    });
    let mut coeffs = BTreeMap::new();
    if d == 0 {
        coeffs.insert(vec![], 1);
    }
    for part in parts {
        for (w, c) in part? {
            *coeffs.entry(w).or_insert(0) += c;
        }
    }
    Ok(GCoefficients { d, r: rk.rank(), coeffs })
}

/// Integer polynomial in `x, y`, keyed by `(deg_x, deg_y)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(c: impl Into<BigInt>, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c.into());
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &other.terms {
                out.add_term(i + k, j + l, a * b);
            }
        }
        out
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(&(i, j), c)| c * x.pow(i) * y.pow(j))
            .sum()
    }
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(i, j), c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mut parts = Vec::new();
            if !mag.is_one() || (i == 0 && j == 0) {
                parts.push(mag.to_string());
            }
            for (v, e) in [("x", i), ("y", j)] {
                match e {
                    0 => {}
                    1 => parts.push(v.to_string()),
                    _ => parts.push(format!("{v}^{e}")),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl Serialize for BivariatePolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let triples: Vec<(u32, u32, serde_json::Value)> = self
            .terms
            .iter()
            .map(|(&(i, j), c)| (i, j, big_to_json(c)))
            .collect();
        triples.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BivariatePolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let triples: Vec<(u32, u32, serde_json::Value)> = Vec::deserialize(d)?;
        let mut p = Self::zero();
        for (i, j, c) in triples {
            p.add_term(i, j, json_to_big(&c).map_err(D::Error::custom)?);
        }
        Ok(p)
    }
}

pub(crate) fn big_to_json(c: &BigInt) -> serde_json::Value {
    match c.to_i64() {
        Some(v) => v.into(),
        None => c.to_string().into(),
    }
}

pub(crate) fn json_to_big(v: &serde_json::Value) -> std::result::Result<BigInt, String> {
    match v {
        serde_json::Value::Number(n) => {
            n.as_i64().map(BigInt::from).ok_or_else(|| format!("{n} is not an integer"))
        }
        serde_json::Value::String(s) => s.parse().map_err(|_| format!("{s} is not an integer")),
        other => Err(format!("{other} is not an integer")),
    }
}

/// `(x − 1)^a (y − 1)^b` expanded.
fn shifted_monomial(a: u32, b: u32) -> Vec<((u32, u32), BigInt)> {
    let mut out = Vec::new();
    for i in 0..=a {
        for j in 0..=b {
            let sign = if (a - i + b - j).is_multiple_of(2) { 1 } else { -1 };
            let c = binomial(BigInt::from(a), BigInt::from(i))
                * binomial(BigInt::from(b), BigInt::from(j))
                * sign;
            out.push(((i, j), c));
        }
    }
    out
}

/// Corank–nullity sum `Σ_A (x−1)^{r−rk(A)} (y−1)^{|A|−rk(A)}`.
pub fn tutte_direct(rk: &RankFunction) -> Result<BivariatePolynomial> {
    let r = rk.rank();
    let mut shifted: BTreeMap<(u32, u32), i64> = BTreeMap::new();
    for a in 0..=full(rk.d()) {
        let v = rk.rk(a);
        if v == INF {
            return Err(Error::InfiniteChainRank(a));
        }
        let nullity = card(a) as i64 - v;
        if nullity < 0 || r < v {
            return Err(Error::ClassMismatch(format!(
                "the corank-nullity sum has a negative exponent at {}",
                crate::subset::show(a)
            )));
        }
        *shifted.entry(((r - v) as u32, nullity as u32)).or_insert(0) += 1;
    }
    let mut out = BivariatePolynomial::zero();
    for ((a, b), n) in shifted {
        for ((i, j), c) in shifted_monomial(a, b) {
            out.add_term(i, j, c * n);
        }
    }
    Ok(out)
}

/// Tutte polynomial recovered from the G-invariant alone. Each ordering
/// meets exactly one `i`-subset at step `i`, and every `i`-subset is met by
/// `i!(d−i)!` orderings, so each step is weighted by `1/(i!(d−i)!)`.
pub fn tutte_from_g(g: &GCoefficients) -> Result<BivariatePolynomial> {
    let d = g.d;
    let r = g.r;
    let weights: Vec<BigRational> = (0..=d)
        .map(|i| {
            BigRational::new(BigInt::one(), BigInt::from(factorial(i)) * BigInt::from(factorial(d - i)))
        })
        .collect();
    let mut shifted: BTreeMap<(u32, u32), BigRational> = BTreeMap::new();
    for (word, &count) in &g.coeffs {
        if word.len() != d {
            return Err(Error::MalformedSequence(format!("word of length {} for d={d}", word.len())));
        }
        let mut partial = 0i64;
        for i in 0..=d {
            if i > 0 {
                partial += word[i - 1] as i64;
            }
            let (a, b) = (r - partial, i as i64 - partial);
            if a < 0 || b < 0 {
                return Err(Error::ClassMismatch("word is not a matroid increment word".into()));
            }
            *shifted.entry((a as u32, b as u32)).or_insert_with(BigRational::zero) +=
                &weights[i] * BigRational::from_integer(BigInt::from(count));
        }
    }
    let mut rational: BTreeMap<(u32, u32), BigRational> = BTreeMap::new();
    for ((a, b), w) in shifted {
        for (ij, c) in shifted_monomial(a, b) {
            *rational.entry(ij).or_insert_with(BigRational::zero) += &w * BigRational::from_integer(c);
        }
    }
    let mut out = BivariatePolynomial::zero();
    for ((i, j), c) in rational {
        if !c.is_integer() {
            return Err(Error::NonIntegralResult(format!("coefficient {c} of x^{i} y^{j}")));
        }
        out.add_term(i, j, c.to_integer());
    }
    Ok(out)
}

#[derive(Serialize, Deserialize)]
struct WordCount {
    word: Word,
    count: u64,
}

#[derive(Serialize, Deserialize)]
struct GJson {
    d: usize,
    r: i64,
    coeffs: Vec<WordCount>,
}

impl Serialize for GCoefficients {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GJson {
            d: self.d,
            r: self.r,
            coeffs: self.coeffs.iter().map(|(w, &c)| WordCount { word: w.clone(), count: c }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GCoefficients {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = GJson::deserialize(d)?;
        let mut coeffs = BTreeMap::new();
        for wc in raw.coeffs {
            if wc.word.len() != raw.d || wc.word.iter().map(|&c| c as i64).sum::<i64>() != raw.r {
                return Err(D::Error::custom(format!("word {:?} does not have length d and weight r", wc.word)));
            }
            *coeffs.entry(wc.word).or_insert(0) += wc.count;
        }
        Ok(GCoefficients { d: raw.d, r: raw.r, coeffs })
    }
}

/// Whether `g` could come from a matroid: every word is 0/1.
pub fn is_matroid_word_set(g: &GCoefficients) -> bool {
    g.coeffs.keys().all(|w| w.iter().all(|&c| c <= 1))
}

impl GCoefficients {
    /// Class suggested by the alphabet of the words.
    pub fn class(&self) -> Class {
        if is_matroid_word_set(self) {
            Class::Matroid
        } else {
            Class::Polymatroid
        }
    }
}
