//! Isomorphism classes of polymatroids under direct sum, with the
//! restriction/contraction coproduct and the chain antipode.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::rankfn::{enumerate_matroids, enumerate_polymatroids, Class, RankFunction};
use crate::subset::{full, subsets_of, Mask};

/// Canonical representative of the class of `rk`, tagged as a polymatroid
/// so that classes compare on values alone.
pub fn iso_class(rk: &RankFunction) -> Result<RankFunction> {
    let rk = match rk.class() {
        Class::Megamatroid => rk.with_class(Class::Polymatroid).map_err(|_| {
            Error::ClassMismatch("isomorphism classes are formed for polymatroids".into())
        })?,
        _ => rk.clone(),
    };
    let canon = rk.canonical_form();
    Ok(RankFunction::trusted(canon.d(), canon.values().to_vec(), Class::Polymatroid))
}

/// Integer combination of isomorphism classes.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymClassVector {
    terms: BTreeMap<RankFunction, i64>,
}

impl SymClassVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit: the class of the empty polymatroid.
    pub fn one() -> Self {
        Self::class_of(&RankFunction::empty()).expect("the empty class")
    }

    pub fn class_of(rk: &RankFunction) -> Result<Self> {
        let mut v = Self::zero();
        v.add_term(iso_class(rk)?, 1);
        Ok(v)
    }

    /// `c·[class]`; `class` must already be canonical.
    pub fn add_term(&mut self, class: RankFunction, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.terms.entry(class).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.retain(|_, v| *v != 0);
        }
    }

    pub fn terms(&self) -> &BTreeMap<RankFunction, i64> {
        &self.terms
    }

    pub fn get(&self, rk: &RankFunction) -> Result<i64> {
        Ok(self.terms.get(&iso_class(rk)?).copied().unwrap_or(0))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_scaled(&mut self, other: &Self, c: i64) {
        for (k, &v) in &other.terms {
            self.add_term(k.clone(), c * v);
        }
    }

    /// Product `[a]·[b] = [a ⊞ b]`, extended bilinearly.
    pub fn product(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                out.add_term(iso_class(&a.direct_sum(b)?)?, ca * cb);
            }
        }
        Ok(out)
    }

    /// Coefficient of the unit.
    pub fn counit(&self) -> i64 {
        self.terms.iter().filter(|(k, _)| k.d() == 0).map(|(_, &v)| v).sum()
    }
}

impl fmt::Display for SymClassVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(k, c)| format!("{c}*[{k}]")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Integer combination of tensors `[a] ⊗ [b]`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClassPairVector {
    terms: BTreeMap<(RankFunction, RankFunction), i64>,
}

impl ClassPairVector {
    pub fn add_term(&mut self, a: RankFunction, b: RankFunction, c: i64) {
        if c == 0 {
            return;
        }
        let key = (a, b);
        let slot = self.terms.entry(key.clone()).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> &BTreeMap<(RankFunction, RankFunction), i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((a, b), &c) in &other.terms {
            out.add_term(a.clone(), b.clone(), -c);
        }
        out
    }

    /// Componentwise product in the tensor square.
    pub fn product(&self, other: &Self) -> Result<Self> {
        let mut out = Self::default();
        for ((a1, b1), &c1) in &self.terms {
            for ((a2, b2), &c2) in &other.terms {
                out.add_term(
                    iso_class(&a1.direct_sum(a2)?)?,
                    iso_class(&b1.direct_sum(b2)?)?,
                    c1 * c2,
                );
            }
        }
        Ok(out)
    }
}

impl fmt::Display for ClassPairVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|((a, b), c)| format!("{c}*[{a}]⊗[{b}]")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `Δ[rk] = Σ_A [rk|_A] ⊗ [rk/A]`.
pub fn coproduct_sym(rk: &RankFunction) -> Result<ClassPairVector> {
    let mut out = ClassPairVector::default();
    for a in subsets_of(full(rk.d())) {
        out.add_term(iso_class(&rk.restrict(a)?)?, iso_class(&rk.contract(a)?)?, 1);
    }
    Ok(out)
}

/// `S[rk] = Σ_k (−1)^k Σ_{∅ = X_0 ⊊ … ⊊ X_k = X} ⊞_i [rk_{X_i / X_{i−1}}]`.
pub fn antipode_sym(rk: &RankFunction) -> Result<SymClassVector> {
    fn walk(
        rk: &RankFunction,
        prev: Mask,
        acc: &RankFunction,
        sign: i64,
        out: &mut SymClassVector,
    ) -> Result<()> {
        let top = full(rk.d());
        if prev == top {
            out.add_term(iso_class(acc)?, sign);
            return Ok(());
        }
        let rest = top & !prev;
        for b in subsets_of(rest).filter(|&b| b != 0) {
            let next = prev | b;
            let part = acc.direct_sum(&rk.minor(next, prev)?)?;
            walk(rk, next, &part, -sign, out)?;
        }
        Ok(())
    }
    let mut out = SymClassVector::zero();
    let start = RankFunction::empty().with_class(Class::Polymatroid)?;
    walk(rk, 0, &start, 1, &mut out)?;
    Ok(out)
}

/// `∇(S ⊗ id)Δ[rk] − ε[rk]·1`; zero when the antipode axiom holds.
pub fn antipode_left_defect(rk: &RankFunction) -> Result<SymClassVector> {
    let mut out = SymClassVector::zero();
    for ((a, b), &c) in coproduct_sym(rk)?.terms() {
        let term = antipode_sym(a)?.product(&SymClassVector::class_of(b)?)?;
        out.add_scaled(&term, c);
    }
    if rk.d() == 0 {
        out.add_scaled(&SymClassVector::one(), -1);
    }
    Ok(out)
}

/// `∇(id ⊗ S)Δ[rk] − ε[rk]·1`.
pub fn antipode_right_defect(rk: &RankFunction) -> Result<SymClassVector> {
    let mut out = SymClassVector::zero();
    for ((a, b), &c) in coproduct_sym(rk)?.terms() {
        let term = SymClassVector::class_of(a)?.product(&antipode_sym(b)?)?;
        out.add_scaled(&term, c);
    }
    if rk.d() == 0 {
        out.add_scaled(&SymClassVector::one(), -1);
    }
    Ok(out)
}

/// `Δ(a ⊞ b) − Δ(a)·Δ(b)`.
pub fn bialgebra_defect(a: &RankFunction, b: &RankFunction) -> Result<ClassPairVector> {
    let lhs = coproduct_sym(&a.direct_sum(b)?)?;
    let rhs = coproduct_sym(a)?.product(&coproduct_sym(b)?)?;
    Ok(lhs.sub(&rhs))
}

/// Polymatroid isomorphism classes on `d` elements of rank `r`.
pub fn polymatroid_classes(d: usize, r: usize) -> Result<Vec<RankFunction>> {
    let set: BTreeSet<RankFunction> =
        enumerate_polymatroids(d, r)?.map(|rk| iso_class(&rk)).collect::<Result<_>>()?;
    Ok(set.into_iter().collect())
}

/// Matroid isomorphism classes on `d` elements of rank `r`.
pub fn matroid_classes(d: usize, r: usize) -> Result<Vec<RankFunction>> {
    let set: BTreeSet<RankFunction> =
        enumerate_matroids(d, r)?.map(|rk| iso_class(&rk)).collect::<Result<_>>()?;
    Ok(set.into_iter().collect())
}
