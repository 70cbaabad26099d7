//! Chain schemes `(X̲, r̲)`, their canonical forms and the index sets built
//! from them.

use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rankfn::{int_q, Class, RankFunction};
use crate::subset::{self, card, full, is_subset, Mask, MAX_D};

/// Nested subsets `X_1 ⊂ … ⊂ X_k = {1..d}` with rank labels `r_1, …, r_k`.
///
/// Ordered by length, then chain masks, then ranks; this order fixes the
/// coordinate order of every expansion and matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChainScheme {
    d: usize,
    chain: Vec<Mask>,
    ranks: Vec<i64>,
    class: Class,
}

impl Ord for ChainScheme {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.d, self.chain.len(), &self.chain, &self.ranks, self.class).cmp(&(
            other.d,
            other.chain.len(),
            &other.chain,
            &other.ranks,
            other.class,
        ))
    }
}

impl PartialOrd for ChainScheme {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl ChainScheme {
    pub fn new(chain: Vec<Mask>, ranks: Vec<i64>, class: Class) -> Result<Self> {
        let bad = |m: &str| Err(Error::MalformedScheme(m.into()));
        if class == Class::Megamatroid {
            return bad("only M and PM schemes are materialized");
        }
        if chain.len() != ranks.len() {
            return bad("chain and ranks differ in length");
        }
        let d = chain.last().map_or(0, |&x| card(x));
        if d > MAX_D {
            return Err(Error::DimensionTooLarge(d));
        }
        if chain.last().is_some_and(|&x| x != full(d)) {
            return bad("the last set must be {1..d}");
        }
        if chain.first() == Some(&0) {
            return bad("chain sets must be nonempty");
        }
        if chain.windows(2).any(|w| w[0] == w[1] || !is_subset(w[0], w[1])) {
            return bad("chain sets must be strictly increasing");
        }
        if chain.is_empty() && ranks.iter().any(|&r| r != 0) {
            return bad("the empty chain has rank 0");
        }
        Ok(ChainScheme { d, chain, ranks, class })
    }

    pub(crate) fn raw(d: usize, chain: Vec<Mask>, ranks: Vec<i64>, class: Class) -> Self {
        ChainScheme { d, chain, ranks, class }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn chain(&self) -> &[Mask] {
        &self.chain
    }

    pub fn ranks(&self) -> &[i64] {
        &self.ranks
    }

    pub fn class(&self) -> Class {
        self.class
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    /// Total rank `r_k` (0 for the empty chain).
    pub fn rank(&self) -> i64 {
        self.ranks.last().copied().unwrap_or(0)
    }

    fn nullity(&self, j: usize) -> i64 {
        card(self.chain[j]) as i64 - self.ranks[j]
    }

    /// Apply the drop rules of the scheme's class until none fires.
    ///
    /// Returns the canonical scheme and whether it equals the input, or
    /// [`Error::EmptyPolytope`] when the cone has no points.
    pub fn canonicalize(&self) -> Result<(ChainScheme, bool)> {
        let mut s = self.clone();
        let matroid = s.class == Class::Matroid;
        loop {
            let k = s.chain.len();
            let drop = (0..k.saturating_sub(1)).find(|&i| {
                s.ranks[i + 1] <= s.ranks[i]
                    || (matroid && {
                        let before = if i == 0 { 0 } else { s.nullity(i - 1) };
                        before >= s.nullity(i)
                    })
            });
            match drop {
                Some(i) => {
                    s.chain.remove(i);
                    s.ranks.remove(i);
                }
                None => break,
            }
        }
        if s.is_void() {
            return Err(Error::EmptyPolytope);
        }
        let same = s == *self;
        Ok((s, same))
    }

    /// Emptiness test for a scheme on which no drop rule fires.
    fn is_void(&self) -> bool {
        let k = self.chain.len();
        if k == 0 {
            return false;
        }
        if self.ranks[0] < 0 {
            return true;
        }
        match self.class {
            Class::Matroid if k == 1 => self.ranks[0] > self.d as i64,
            Class::Matroid => self.nullity(k - 2) > self.nullity(k - 1),
            _ => false,
        }
    }

    pub fn is_canonical(&self) -> bool {
        matches!(self.canonicalize(), Ok((_, true)))
    }

    /// The initial-segment scheme with the same set sizes and ranks.
    pub fn symmetric(&self) -> ChainScheme {
        let chain = self.chain.iter().map(|&x| full(card(x))).collect();
        ChainScheme { chain, ..self.clone() }
    }

    pub fn is_symmetric(&self) -> bool {
        self.chain.iter().all(|&x| x == full(card(x)))
    }

    /// Number of labeled schemes with the same size sequence.
    pub fn orbit_size(&self) -> u64 {
        let mut total = factorial(self.d);
        let mut prev = 0;
        for &x in &self.chain {
            total /= factorial(card(x) - prev);
            prev = card(x);
        }
        total
    }

    /// Rank function of the cone `R(X̲, r̲)` intersected with the simplex
    /// (PM) or hypersimplex (M).
    pub fn cone_rank_fn(&self) -> Result<RankFunction> {
        let (s, _) = self.canonicalize()?;
        let d = s.d;
        let values: Vec<i64> = match s.class {
            Class::Matroid => (0..=full(d))
                .map(|a| {
                    s.chain
                        .iter()
                        .zip(&s.ranks)
                        .map(|(&x, &r)| r + card(a & !x) as i64)
                        .fold(card(a) as i64, i64::min)
                })
                .collect(),
            _ => (0..=full(d))
                .map(|a| {
                    if a == 0 {
                        0
                    } else {
                        let j = s.chain.iter().position(|&x| is_subset(a, x)).unwrap();
                        s.ranks[j]
                    }
                })
                .collect(),
        };
        Ok(RankFunction::trusted(d, values, s.class))
    }

    /// Indicator of the cone at `y`, from the raw chain inequalities and
    /// the simplex bounds of the class.
    pub fn contains(&self, y: &[BigRational]) -> bool {
        if y.len() != self.d {
            return false;
        }
        let zero = BigRational::zero();
        let one = BigRational::one();
        if y.iter().any(|v| *v < zero || (self.class == Class::Matroid && *v > one)) {
            return false;
        }
        let total: BigRational = y.iter().sum();
        if total != int_q(self.rank()) {
            return false;
        }
        self.chain.iter().zip(&self.ranks).all(|(&x, &r)| {
            let s: BigRational = subset::elements(x).map(|i| &y[i]).sum();
            s <= int_q(r)
        })
    }
}

pub(crate) fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

impl fmt::Display for ChainScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sets: Vec<String> = self.chain.iter().map(|&x| subset::show(x)).collect();
        let ranks: Vec<String> = self.ranks.iter().map(|r| r.to_string()).collect();
        write!(f, "{}({} ; {})", self.class.tag(), sets.join("<"), ranks.join(","))
    }
}

#[derive(Serialize, Deserialize)]
struct RawScheme {
    chain: Vec<Mask>,
    ranks: Vec<i64>,
    class: Class,
}

impl Serialize for ChainScheme {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawScheme { chain: self.chain.clone(), ranks: self.ranks.clone(), class: self.class }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ChainScheme {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = RawScheme::deserialize(de)?;
        ChainScheme::new(raw.chain, raw.ranks, raw.class).map_err(serde::de::Error::custom)
    }
}

/// All chains `X_1 ⊂ … ⊂ X_k = {1..d}` of nonempty sets (`k ≥ 1`), or the
/// single empty chain when `d = 0`.
pub fn all_chains(d: usize) -> Vec<Vec<Mask>> {
    fn grow(cur: &mut Vec<Mask>, top: Mask, out: &mut Vec<Vec<Mask>>) {
        let have = cur.last().copied().unwrap_or(0);
        if have == top {
            out.push(cur.clone());
            return;
        }
        let rest = top & !have;
        for t in subset::subsets_of(rest).skip(1) {
            cur.push(have | t);
            grow(cur, top, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    grow(&mut Vec::new(), full(d), &mut out);
    out
}

/// [`all_chains`] memoized for `d ≤ 8`.
pub fn chains_cached(d: usize) -> &'static [Vec<Mask>] {
    use std::sync::OnceLock;
    static CACHE: [OnceLock<Vec<Vec<Mask>>>; 9] = [const { OnceLock::new() }; 9];
    assert!(d <= 8, "chain cache covers d <= 8");
    CACHE[d].get_or_init(|| all_chains(d))
}

/// Chains made of initial segments, one per composition of `d`.
pub fn symmetric_chains(d: usize) -> Vec<Vec<Mask>> {
    all_chains(d)
        .into_iter()
        .filter(|c| c.iter().all(|&x| x == full(card(x))))
        .collect()
}

/// Canonical rank labelings of one chain.
fn canonical_labelings(chain: &[Mask], d: usize, r: i64, class: Class, out: &mut Vec<ChainScheme>) {
    let k = chain.len();
    if k == 0 {
        if r == 0 {
            out.push(ChainScheme::raw(d, vec![], vec![], class));
        }
        return;
    }
    let matroid = class == Class::Matroid;
    let top_null = d as i64 - r;
    if r < 0 || (matroid && top_null < 0) {
        return;
    }
    fn rec(
        j: usize,
        chain: &[Mask],
        ranks: &mut Vec<i64>,
        (d, r, matroid): (usize, i64, bool),
        out: &mut Vec<ChainScheme>,
        class: Class,
    ) {
        let k = chain.len();
        if j == k - 1 {
            ranks.push(r);
            out.push(ChainScheme::raw(d, chain.to_vec(), ranks.clone(), class));
            ranks.pop();
            return;
        }
        let prev_r = if j == 0 { -1 } else { ranks[j - 1] };
        let prev_n = if j == 0 { 0 } else { card(chain[j - 1]) as i64 - ranks[j - 1] };
        let size = card(chain[j]) as i64;
        for rj in (prev_r + 1).max(0)..r {
            let nj = size - rj;
            if matroid && (nj <= prev_n || nj > d as i64 - r) {
                continue;
            }
            ranks.push(rj);
            rec(j + 1, chain, ranks, (d, r, matroid), out, class);
            ranks.pop();
        }
    }
    rec(0, chain, &mut Vec::new(), (d, r, matroid), out, class);
}

fn check_class(class: Class) -> Result<()> {
    if class == Class::Megamatroid {
        Err(Error::MalformedScheme("index sets exist for M and PM only".into()))
    } else {
        Ok(())
    }
}

fn labelings_of(chains: &[Vec<Mask>], d: usize, r: i64, class: Class) -> Vec<ChainScheme> {
    let mut out = Vec::new();
    for c in chains {
        canonical_labelings(c, d, r, class, &mut out);
    }
    out.sort();
    out
}

/// The free basis index set of all canonical schemes, in canonical order.
pub fn enumerate_p(d: usize, r: i64, class: Class) -> Result<Vec<ChainScheme>> {
    check_class(class)?;
    if d > 8 {
        return Err(Error::SizeLimitExceeded { what: "index sets", limit: "d <= 8" });
    }
    Ok(labelings_of(&all_chains(d), d, r, class))
}

/// Canonical schemes whose chains are initial segments.
pub fn enumerate_p_sym(d: usize, r: i64, class: Class) -> Result<Vec<ChainScheme>> {
    check_class(class)?;
    if d > 8 {
        return Err(Error::SizeLimitExceeded { what: "index sets", limit: "d <= 8" });
    }
    Ok(labelings_of(&symmetric_chains(d), d, r, class))
}

/// The subset of canonical schemes indexing a basis of the additive part.
///
/// PM keeps schemes with `r_1 > 0` and `d ∉ X_{k-1}`; for `d = 1` every
/// scheme is kept, since the space has no codimension-two part. M further
/// needs `|X_{k-1}| - r_{k-1} < d - r` and `d ≥ 2`.
pub fn enumerate_t(d: usize, r: i64, class: Class) -> Result<Vec<ChainScheme>> {
    check_class(class)?;
    let matroid = class == Class::Matroid;
    if d == 0 || (matroid && d < 2) {
        return Err(Error::UndefinedForSize(format!(
            "the additive index set needs d >= {}",
            if matroid { 2 } else { 1 }
        )));
    }
    let all = enumerate_p(d, r, class)?;
    if !matroid && d == 1 {
        return Ok(all);
    }
    let last = 1 << (d - 1);
    Ok(all
        .into_iter()
        .filter(|s| {
            let k = s.len();
            let (prev_set, prev_null) =
                if k >= 2 { (s.chain[k - 2], s.nullity(k - 2)) } else { (0, 0) };
            s.ranks[0] > 0
                && prev_set & last == 0
                && (!matroid || prev_null < d as i64 - r)
        })
        .collect())
}

/// `a_i = r_j` for the least `j` with `i ∈ X_j`.
pub fn encode_a(s: &ChainScheme) -> Vec<i64> {
    (0..s.d)
        .map(|i| {
            let j = s.chain.iter().position(|&x| x >> i & 1 == 1).unwrap();
            s.ranks[j]
        })
        .collect()
}

/// Inverse of [`encode_a`]: ranks are the distinct entries, `X_j` the
/// positions with entry at most `r_j`.
pub fn decode_a(a: &[i64], r: i64) -> Result<ChainScheme> {
    if a.iter().any(|&v| v < 0 || v > r) {
        return Err(Error::MalformedSequence(format!("entries must lie in 0..={r}")));
    }
    if !a.contains(&r) {
        return Err(Error::MalformedSequence(format!("no entry equals {r}")));
    }
    let mut ranks: Vec<i64> = a.to_vec();
    ranks.sort_unstable();
    ranks.dedup();
    let chain = ranks
        .iter()
        .map(|&rj| a.iter().enumerate().filter(|(_, &v)| v <= rj).fold(0, |m, (i, _)| m | 1 << i))
        .collect();
    ChainScheme::new(chain, ranks, Class::Polymatroid)
}

/// Sequences in `{0..r}^d` with some entry equal to `r`, lexicographically.
pub fn enumerate_a(d: usize, r: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = vec![0; d];
    if r < 0 {
        return out;
    }
    loop {
        if cur.contains(&r) {
            out.push(cur.clone());
        }
        let Some(i) = (0..d).rev().find(|&i| cur[i] < r) else {
            return out;
        };
        cur[i] += 1;
        cur[i + 1..].iter_mut().for_each(|v| *v = 0);
    }
}
