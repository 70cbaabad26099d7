//! The graded dual of the symmetric valuative algebra: a free algebra on
//! composition words with `u_α · u_β = C(d+e, d) u_{αβ}`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::chain::factorial;
use crate::error::{Error, Result};
use crate::invariants::{BivariatePolynomial, GCoefficients};
use crate::lyndon::{show_word, standard_factorization, Word};

/// Scalars of the word algebra.
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, q: &BigRational) -> Self;
}

impl Coeff for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, q: &BigRational) -> Self {
        self * q
    }
}

/// Polynomials in `x, y` over the rationals.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QPoly(BTreeMap<(u32, u32), BigRational>);

impl QPoly {
    pub fn term(c: impl Into<BigRational>, i: u32, j: u32) -> Self {
        let mut p = QPoly::default();
        p.push(i, j, c.into());
        p
    }

    pub fn x() -> Self {
        Self::term(int(1), 1, 0)
    }

    pub fn y() -> Self {
        Self::term(int(1), 0, 1)
    }

    pub fn constant(c: i64) -> Self {
        Self::term(int(c), 0, 0)
    }

    fn push(&mut self, i: u32, j: u32, c: BigRational) {
        if Zero::is_zero(&c) {
            return;
        }
        let slot = self.0.entry((i, j)).or_insert_with(<BigRational as Zero>::zero);
        *slot += c;
        if Zero::is_zero(slot) {
            self.0.remove(&(i, j));
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&int(-1)))
    }

    /// The integer polynomial, if every coefficient is integral.
    pub fn to_integer(&self) -> Result<BivariatePolynomial> {
        let mut out = BivariatePolynomial::zero();
        for (&(i, j), c) in &self.0 {
            if !c.is_integer() {
                return Err(Error::NonIntegralResult(format!("coefficient {c} of x^{i} y^{j}")));
            }
            out.add_term(i, j, c.to_integer());
        }
        Ok(out)
    }
}

impl Coeff for QPoly {
    fn zero() -> Self {
        QPoly::default()
    }
    fn one() -> Self {
        QPoly::constant(1)
    }
    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &other.0 {
            out.push(i, j, c.clone());
        }
        out
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = QPoly::default();
        for (&(i, j), a) in &self.0 {
            for (&(k, l), b) in &other.0 {
                out.push(i + k, j + l, a * b);
            }
        }
        out
    }
    fn scale(&self, q: &BigRational) -> Self {
        let mut out = QPoly::default();
        for (&(i, j), c) in &self.0 {
            out.push(i, j, c * q);
        }
        out
    }
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Finite combination of words, truncated at a maximal word length.
#[derive(Clone, Debug, PartialEq)]
pub struct WordAlgebraElement<C: Coeff = BigRational> {
    terms: BTreeMap<Word, C>,
    max_len: usize,
}

/// Truncation for elements that are not truncated.
pub const UNTRUNCATED: usize = usize::MAX;

impl<C: Coeff> WordAlgebraElement<C> {
    pub fn zero() -> Self {
        WordAlgebraElement { terms: BTreeMap::new(), max_len: UNTRUNCATED }
    }

    /// The unit `u_()`.
    pub fn one() -> Self {
        Self::u_scaled(vec![], C::one())
    }

    pub fn u(word: Word) -> Self {
        Self::u_scaled(word, C::one())
    }

    pub fn u_scaled(word: Word, c: C) -> Self {
        let mut e = Self::zero();
        e.push(word, c);
        e
    }

    pub fn truncated(mut self, max_len: usize) -> Self {
        self.terms.retain(|w, _| w.len() <= max_len);
        self.max_len = self.max_len.min(max_len);
        self
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn terms(&self) -> &BTreeMap<Word, C> {
        &self.terms
    }

    pub fn coeff(&self, w: &[u32]) -> C {
        self.terms.get(w).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn push(&mut self, w: Word, c: C) {
        if c.is_zero() || w.len() > self.max_len {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(slot) => {
                *slot = slot.add(&c);
                if slot.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.max_len = self.max_len.min(other.max_len);
        out.terms.retain(|w, _| w.len() <= out.max_len);
        for (w, c) in &other.terms {
            out.push(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        self.map(|c| c.scale(q))
    }

    pub fn scale_by(&self, k: &C) -> Self {
        self.map(|c| c.mul(k))
    }

    fn map(&self, f: impl Fn(&C) -> C) -> Self {
        let mut out = WordAlgebraElement { terms: BTreeMap::new(), max_len: self.max_len };
        for (w, c) in &self.terms {
            out.push(w.clone(), f(c));
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&int(-1)))
    }

    /// Bilinear product, `u_α · u_β = C(|α|+|β|, |α|) u_{αβ}`.
    pub fn product(&self, other: &Self) -> Self {
        let max_len = self.max_len.min(other.max_len);
        let mut out = WordAlgebraElement { terms: BTreeMap::new(), max_len };
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if a.len() + b.len() > max_len {
                    continue;
                }
                let bin = binomial(BigInt::from(a.len() + b.len()), BigInt::from(a.len()));
                let w: Word = a.iter().chain(b).copied().collect();
                out.push(w, ca.mul(cb).scale(&BigRational::from_integer(bin)));
            }
        }
        out
    }

    /// `Σ_{k ≤ degree} a^k / k!`, keeping words of length at most `degree`.
    pub fn exp_truncated(&self, degree: usize) -> Result<Self> {
        if self.terms.keys().any(|w| w.is_empty()) {
            return Err(Error::ConstantTermNonzero);
        }
        let a = self.clone().truncated(degree);
        let mut out = Self::one().truncated(degree);
        let mut power = Self::one().truncated(degree);
        for k in 1..=degree {
            power = power.product(&a).scale(&BigRational::new(BigInt::one(), BigInt::from(k)));
            if power.is_zero() {
                break;
            }
            out = out.add(&power);
        }
        Ok(out)
    }

    /// `Σ_α c_α g_α` over the words of length `g.d`.
    pub fn pair_raw(&self, g: &GCoefficients) -> C {
        let mut acc = C::zero();
        for (w, &n) in &g.coeffs {
            if let Some(c) = self.terms.get(w) {
                acc = acc.add(&c.scale(&int(n as i64)));
            }
        }
        acc
    }

    /// `pair_raw / d!`: the value on a single class, since the counts in
    /// `g` add up to `d!`.
    pub fn pair(&self, g: &GCoefficients) -> C {
        let d = BigInt::from(factorial(g.d));
        self.pair_raw(g).scale(&BigRational::new(BigInt::one(), d))
    }
}

impl fmt::Display for WordAlgebraElement<BigRational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|(w, c)| format!("{c}*u_{}", show_word(w))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `b(α)`: `u_α` for a letter, otherwise the commutator of the brackets of
/// the standard factorization.
pub fn lyndon_bracket(alpha: &[u32]) -> Result<WordAlgebraElement> {
    if alpha.len() == 1 {
        return Ok(WordAlgebraElement::u(alpha.to_vec()));
    }
    let (beta, gamma) = standard_factorization(alpha)?;
    let b = lyndon_bracket(&beta)?;
    let c = lyndon_bracket(&gamma)?;
    Ok(b.product(&c).sub(&c.product(&b)))
}

/// `exp((y−1)u_0 + u_1) · exp(u_0 + (x−1)u_1)` up to word length `degree`;
/// its normalized pairing with `g` of a matroid is the Tutte polynomial.
pub fn tutte_element(degree: usize) -> WordAlgebraElement<QPoly> {
    let lin = |c0: QPoly, c1: QPoly| {
        WordAlgebraElement::u_scaled(vec![0], c0).add(&WordAlgebraElement::u_scaled(vec![1], c1))
    };
    let one = QPoly::constant(1);
    let a = lin(QPoly::y().sub(&one), one.clone());
    let b = lin(one.clone(), QPoly::x().sub(&one));
    let ea = a.exp_truncated(degree).expect("no constant term");
    let eb = b.exp_truncated(degree).expect("no constant term");
    ea.product(&eb)
}
