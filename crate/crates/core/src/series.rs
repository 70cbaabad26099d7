//! Truncated power series in `x, y` with exact rational coefficients.
//!
//! Storage is by homogeneous component: `comps[n][i]` is the coefficient of
//! `x^i y^(n−i)`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateSeries {
    comps: Vec<Vec<BigRational>>,
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn hom_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn hom_add(acc: &mut [BigRational], b: &[BigRational], scale: &BigRational) {
    for (s, x) in acc.iter_mut().zip(b) {
        *s += x * scale;
    }
}

impl BivariateSeries {
    /// Zero series known up to total degree `degree`.
    pub fn zero(degree: usize) -> Self {
        BivariateSeries { comps: (0..=degree).map(|n| vec![BigRational::zero(); n + 1]).collect() }
    }

    pub fn from_fn(degree: usize, f: impl Fn(usize, usize) -> BigRational) -> Self {
        BivariateSeries { comps: (0..=degree).map(|n| (0..=n).map(|i| f(i, n - i)).collect()).collect() }
    }

    /// A polynomial given by `(deg_x, deg_y, coefficient)` terms.
    pub fn polynomial(degree: usize, terms: &[(usize, usize, i64)]) -> Self {
        let mut s = Self::zero(degree);
        for &(i, j, c) in terms {
            if i + j <= degree {
                s.comps[i + j][i] += q(c);
            }
        }
        s
    }

    pub fn degree(&self) -> usize {
        self.comps.len() - 1
    }

    /// Coefficient of `x^i y^j`.
    pub fn coeff(&self, i: usize, j: usize) -> &BigRational {
        &self.comps[i + j][i]
    }

    pub fn set(&mut self, i: usize, j: usize, c: BigRational) {
        self.comps[i + j][i] = c;
    }

    fn constant(&self) -> &BigRational {
        &self.comps[0][0]
    }

    fn check(&self, other: &Self) -> usize {
        self.degree().min(other.degree())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.check(other);
        Self::from_fn(n, |i, j| self.coeff(i, j) + other.coeff(i, j))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.check(other);
        Self::from_fn(n, |i, j| self.coeff(i, j) - other.coeff(i, j))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_fn(self.degree(), |i, j| self.coeff(i, j) * c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.check(other);
        let mut out = Self::zero(n);
        for a in 0..=n {
            for b in 0..=n - a {
                let prod = hom_mul(&self.comps[a], &other.comps[b]);
                hom_add(&mut out.comps[a + b], &prod, &BigRational::one());
            }
        }
        out
    }

    /// `1/F`; needs a nonzero constant term.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = self.constant().clone();
        if c0.is_zero() {
            return Err(Error::MalformedSequence("reciprocal of a series without constant term".into()));
        }
        let inv = c0.recip();
        let n = self.degree();
        let mut out = Self::zero(n);
        out.comps[0][0] = inv.clone();
        for m in 1..=n {
            let mut acc = vec![BigRational::zero(); m + 1];
            for k in 1..=m {
                let prod = hom_mul(&self.comps[k], &out.comps[m - k]);
                hom_add(&mut acc, &prod, &BigRational::one());
            }
            out.comps[m] = acc.into_iter().map(|c| -c * &inv).collect();
        }
        Ok(out)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.reciprocal()?))
    }

    /// `log F` for `F(0) = 1`, from `E(F) = F·E(log F)` with `E` the Euler
    /// operator `x∂_x + y∂_y`.
    pub fn log(&self) -> Result<Self> {
        if !self.constant().is_one() {
            return Err(Error::MalformedSequence("log needs constant term 1".into()));
        }
        let n = self.degree();
        let mut out = Self::zero(n);
        for m in 1..=n {
            let mut acc: Vec<BigRational> = self.comps[m].iter().map(|c| c * q(m as i64)).collect();
            for k in 1..m {
                let prod = hom_mul(&out.comps[k], &self.comps[m - k]);
                hom_add(&mut acc, &prod, &q(-(k as i64)));
            }
            out.comps[m] = acc.into_iter().map(|c| c / q(m as i64)).collect();
        }
        Ok(out)
    }

    /// `exp G` for `G(0) = 0`.
    pub fn exp(&self) -> Result<Self> {
        if !self.constant().is_zero() {
            return Err(Error::ConstantTermNonzero);
        }
        let n = self.degree();
        let mut out = Self::zero(n);
        out.comps[0][0] = BigRational::one();
        for m in 1..=n {
            let mut acc = vec![BigRational::zero(); m + 1];
            for k in 1..=m {
                let prod = hom_mul(&self.comps[k], &out.comps[m - k]);
                hom_add(&mut acc, &prod, &q(k as i64));
            }
            out.comps[m] = acc.into_iter().map(|c| c / q(m as i64)).collect();
        }
        Ok(out)
    }

    /// Exact quotient by `x − y`; the result is known to one degree less.
    pub fn div_x_minus_y(&self) -> Result<Self> {
        let n = self.degree();
        if n == 0 {
            return Err(Error::MalformedSequence("nothing left after dividing by x - y".into()));
        }
        let mut out = Self::zero(n - 1);
        for m in 0..=n {
            let p = &self.comps[m];
            if m == 0 {
                if !p[0].is_zero() {
                    return Err(Error::MalformedSequence("constant term is not divisible by x - y".into()));
                }
                continue;
            }
            // (x − y)·Σ q_i x^i y^(m−1−i) has x^i y^(m−i) coefficient q_{i−1} − q_i.
            let mut qs = vec![BigRational::zero(); m];
            let mut prev = BigRational::zero();
            for i in 0..m {
                qs[i] = &prev - &p[i];
                prev = qs[i].clone();
            }
            if prev != p[m] {
                return Err(Error::MalformedSequence(format!("degree {m} part is not divisible by x - y")));
            }
            out.comps[m - 1] = qs;
        }
        Ok(out)
    }

    /// `e^{a x + b y}`.
    pub fn exponential(degree: usize, a: i64, b: i64) -> Self {
        let lin = Self::polynomial(degree, &[(1, 0, a), (0, 1, b)]);
        lin.exp().expect("no constant term")
    }

    /// `F(y, x)`.
    pub fn swap(&self) -> Self {
        Self::from_fn(self.degree(), |i, j| self.coeff(j, i).clone())
    }
}

impl fmt::Display for BivariateSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (n, comp) in self.comps.iter().enumerate() {
            for (i, c) in comp.iter().enumerate() {
                if !c.is_zero() {
                    parts.push(format!("{c}*x^{i}*y^{}", n - i));
                }
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{} + O(deg {})", parts.join(" + "), self.degree() + 1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric() {
        let one_minus = BivariateSeries::polynomial(6, &[(0, 0, 1), (1, 0, -1), (0, 1, -1)]);
        let g = one_minus.reciprocal().unwrap();
        // 1/(1−x−y) has x^i y^j coefficient C(i+j, i).
        assert_eq!(*g.coeff(2, 3), q(10));
        assert_eq!(g.mul(&one_minus), BivariateSeries::polynomial(6, &[(0, 0, 1)]));
    }

    #[test]
    fn log_exp_round_trip() {
        let f = BivariateSeries::exponential(7, 1, -2).add(&BivariateSeries::polynomial(7, &[(1, 1, 3)]));
        let l = f.log().unwrap();
        assert_eq!(l.exp().unwrap(), f);
        let lin = BivariateSeries::exponential(7, 1, -2).log().unwrap();
        assert_eq!(lin, BivariateSeries::polynomial(7, &[(1, 0, 1), (0, 1, -2)]));
    }

    #[test]
    fn division_by_x_minus_y() {
        // (x^3 − y^3)/(x − y) = x^2 + xy + y^2.
        let p = BivariateSeries::polynomial(4, &[(3, 0, 1), (0, 3, -1)]);
        let d = p.div_x_minus_y().unwrap();
        assert_eq!(d, BivariateSeries::polynomial(3, &[(2, 0, 1), (1, 1, 1), (0, 2, 1)]));
        assert!(BivariateSeries::polynomial(3, &[(1, 0, 1)]).div_x_minus_y().is_err());
    }
}
