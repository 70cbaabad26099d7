//! Coordinates of base-polytope indicators in the chain-scheme basis.

use std::collections::{BTreeMap, HashMap};
use std::ops::Deref;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::chain::{chains_cached, ChainScheme};
use crate::error::{Error, Result};
use crate::par;
use crate::rankfn::{Class, RankFunction, INF};
use crate::subset::{self, card, full, Mask};

/// Sparse integer combination of canonical chain schemes in `P(d, r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionVector {
    d: usize,
    r: i64,
    class: Class,
    coords: BTreeMap<ChainScheme, i64>,
}

impl ExpansionVector {
    pub fn zero(d: usize, r: i64, class: Class) -> Self {
        ExpansionVector { d, r, class, coords: BTreeMap::new() }
    }

    /// The basis vector of a canonical scheme.
    pub fn unit(key: &ChainScheme) -> Result<Self> {
        let (c, same) = key.canonicalize()?;
        if !same {
            return Err(Error::MalformedScheme(format!("{key} is not canonical")));
        }
        let mut v = Self::zero(c.d(), c.rank(), c.class());
        v.coords.insert(c, 1);
        Ok(v)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn class(&self) -> Class {
        self.class
    }

    pub fn coords(&self) -> &BTreeMap<ChainScheme, i64> {
        &self.coords
    }

    pub fn get(&self, key: &ChainScheme) -> i64 {
        self.coords.get(key).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn add_scaled(&mut self, other: &ExpansionVector, c: i64) {
        for (k, v) in &other.coords {
            self.add_term(k.clone(), c * v);
        }
    }

    fn add_term(&mut self, key: ChainScheme, c: i64) {
        if c == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coords.entry(key) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    pub fn sub(&self, other: &ExpansionVector) -> ExpansionVector {
        let mut out = self.clone();
        out.add_scaled(other, -1);
        out
    }

    /// Rebuild from `(key, coefficient)` pairs; keys must be canonical.
    pub fn from_entries(
        d: usize,
        r: i64,
        class: Class,
        entries: impl IntoIterator<Item = (ChainScheme, i64)>,
    ) -> Result<Self> {
        let mut v = Self::zero(d, r, class);
        for (k, c) in entries {
            if k.d() != d || k.rank() != r || k.class() != class || !k.is_canonical() {
                return Err(Error::MalformedScheme(format!("{k} is not a canonical key here")));
            }
            v.add_term(k, c);
        }
        Ok(v)
    }
}

/// An [`ExpansionVector`] whose keys all use initial-segment chains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymExpansionVector(ExpansionVector);

impl Deref for SymExpansionVector {
    type Target = ExpansionVector;

    fn deref(&self) -> &ExpansionVector {
        &self.0
    }
}

impl SymExpansionVector {
    pub fn into_inner(self) -> ExpansionVector {
        self.0
    }
}

fn scheme_class(class: Class) -> Result<Class> {
    match class {
        Class::Megamatroid => Err(Error::ClassMismatch(
            "expansion targets matroids and polymatroids".into(),
        )),
        c => Ok(c),
    }
}

/// Canonical key of a chain with the given ranks; no validation.
fn canonical_key(d: usize, chain: &[Mask], ranks: Vec<i64>, class: Class) -> ChainScheme {
    ChainScheme::raw(d, chain.to_vec(), ranks, class)
        .canonicalize()
        .map(|(c, _)| c)
        .expect("chains of a rank function never give an empty cone")
}

/// Coordinates of `[Q(rk)]`: the signed sum over all chains `X̲` of the
/// canonical cones `(X̲, rk(X̲))`, with sign `(-1)^(d - ℓ(X̲))`.
pub fn expand(rk: &RankFunction) -> Result<ExpansionVector> {
    let class = scheme_class(rk.class())?;
    if !rk.is_finite() {
        let a = (0..=full(rk.d())).find(|&a| rk.rk(a) == INF).unwrap();
        return Err(Error::InfiniteChainRank(a));
    }
    if rk.d() > 8 {
        return Err(Error::SizeLimitExceeded { what: "expansion", limit: "d <= 8" });
    }
    let d = rk.d();
    let chains = chains_cached(d);
    let terms: Vec<(ChainScheme, i64)> = par::map(chains, |c| {
        let ranks = c.iter().map(|&x| rk.rk(x)).collect();
        let sign = if (d - c.len()).is_multiple_of(2) { 1 } else { -1 };
        (canonical_key(d, c, ranks, class), sign)
    });
    let mut v = ExpansionVector::zero(d, rk.rank(), class);
    let mut acc: BTreeMap<ChainScheme, i64> = BTreeMap::new();
    for (k, s) in terms {
        *acc.entry(k).or_insert(0) += s;
    }
    v.coords = acc.into_iter().filter(|(_, c)| *c != 0).collect();
    Ok(v)
}

/// `Σ coeff · [cone](y)` from the raw cone inequalities.
pub fn evaluate_expansion(v: &ExpansionVector, y: &[BigRational]) -> i64 {
    v.coords.iter().filter(|(k, _)| k.contains(y)).map(|(_, c)| c).sum()
}

/// Merge each orbit of keys onto its initial-segment representative.
pub fn symmetrize(v: &ExpansionVector) -> SymExpansionVector {
    let mut acc: BTreeMap<ChainScheme, i64> = BTreeMap::new();
    for (k, c) in &v.coords {
        *acc.entry(k.symmetric()).or_insert(0) += c;
    }
    let coords = acc.into_iter().filter(|(_, c)| *c != 0).collect();
    SymExpansionVector(ExpansionVector { coords, ..v.clone() })
}

/// Coordinates of the product polytope `Π_1 × Π_2`, with the first factor
/// on the elements of `block` and the second on the complement.
pub fn product_expand(
    a: &ExpansionVector,
    b: &ExpansionVector,
    block: Mask,
) -> Result<ExpansionVector> {
    let d = a.d + b.d;
    if d > 8 {
        return Err(Error::SizeLimitExceeded { what: "expansion", limit: "d <= 8" });
    }
    if !subset::is_subset(block, full(d)) || card(block) != a.d {
        return Err(Error::BlockSizeMismatch(format!(
            "block {} must have {} elements inside 1..{}",
            subset::show(block),
            a.d,
            d
        )));
    }
    if a.class != b.class {
        return Err(Error::ClassMismatch("factors must share a class".into()));
    }
    let perm = block_permutation(d, block);
    let pairs: Vec<(&ChainScheme, i64, &ChainScheme, i64)> = a
        .coords
        .iter()
        .flat_map(|(ka, ca)| b.coords.iter().map(move |(kb, cb)| (ka, *ca, kb, *cb)))
        .collect();
    let mut cones: HashMap<&ChainScheme, RankFunction> = HashMap::new();
    for k in a.coords.keys().chain(b.coords.keys()) {
        if !cones.contains_key(k) {
            cones.insert(k, k.cone_rank_fn()?);
        }
    }
    let parts = par::map(&pairs, |(ka, ca, kb, cb)| -> Result<(ExpansionVector, i64)> {
        let rk = cones[ka].direct_sum(&cones[kb])?.relabel(&perm)?;
        Ok((expand(&rk)?, ca * cb))
    });
    let mut out = ExpansionVector::zero(d, a.r + b.r, a.class);
    let mut acc: BTreeMap<ChainScheme, i64> = BTreeMap::new();
    for part in parts {
        let (v, c) = part?;
        for (k, x) in v.coords {
            *acc.entry(k).or_insert(0) += c * x;
        }
    }
    out.coords = acc.into_iter().filter(|(_, c)| *c != 0).collect();
    Ok(out)
}

/// Positions `0..|block|` go to the elements of `block`, the rest to its
/// complement, both in increasing order.
pub(crate) fn block_permutation(d: usize, block: Mask) -> Vec<usize> {
    subset::elements(block).chain(subset::elements(full(d) & !block)).collect()
}

#[derive(Serialize, Deserialize)]
struct Entry {
    key: ChainScheme,
    coeff: i64,
}

impl Serialize for ExpansionVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<Entry> =
            self.coords.iter().map(|(k, &c)| Entry { key: k.clone(), coeff: c }).collect();
        entries.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExpansionVector {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let entries = Vec::<Entry>::deserialize(de)?;
        let first = entries
            .first()
            .ok_or_else(|| D::Error::custom("an empty list does not determine d and r"))?;
        let (d, r, class) = (first.key.d(), first.key.rank(), first.key.class());
        ExpansionVector::from_entries(d, r, class, entries.into_iter().map(|e| (e.key, e.coeff)))
            .map_err(D::Error::custom)
    }
}

impl Serialize for SymExpansionVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}
