//! Laurent polynomials in one variable `q` with big-integer coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(exp: i64, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c.into());
        p
    }

    /// `1 + q^k`.
    pub fn one_plus(k: i64) -> Self {
        let mut p = Self::one();
        p.add_term(k, BigInt::one());
        p
    }

    /// From coefficients of `q^0, q^1, ...`.
    pub fn from_coeffs<C: Into<BigInt>>(cs: impl IntoIterator<Item = C>) -> Self {
        let mut p = Self::zero();
        for (i, c) in cs.into_iter().enumerate() {
            p.add_term(i as i64, c.into());
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(exp).or_default();
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> &BTreeMap<i64, BigInt> {
        &self.coeffs
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitution `q -> q^k`.
    pub fn substitute(&self, k: i64) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.coeffs {
            out.add_term(e * k, c.clone());
        }
        out
    }

    pub fn product<'a>(factors: impl IntoIterator<Item = &'a QPoly>) -> Self {
        factors.into_iter().fold(Self::one(), |acc, f| acc.mul(f))
    }

    /// Palindromic over its support window and weakly rising then falling.
    pub fn is_symmetric_unimodal(&self) -> Result<bool> {
        let (lo, hi) = match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Err(Error::ZeroPolynomial),
        };
        let a: Vec<BigInt> = (lo..=hi).map(|e| self.coeff(e)).collect();
        let n = a.len();
        if (0..n).any(|i| a[i] != a[n - 1 - i]) {
            return Ok(false);
        }
        let mut i = 0;
        while i + 1 < n && a[i] <= a[i + 1] {
            i += 1;
        }
        while i + 1 < n && a[i] >= a[i + 1] {
            i += 1;
        }
        Ok(i + 1 == n)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.coeffs.iter().enumerate() {
            let neg = c < &BigInt::zero();
            if i > 0 {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            let abs = if neg { -c } else { c.clone() };
            match (*e, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{abs}q")?,
                (e, true) => write!(f, "q^{e}")?,
                (e, false) => write!(f, "{abs}q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unimodality_examples() {
        assert!(QPoly::one_plus(1).is_symmetric_unimodal().unwrap());
        let gap = QPoly::from_coeffs([1, 1, 0, 1]);
        assert!(!gap.is_symmetric_unimodal().unwrap());
        let p = QPoly::one_plus(1).mul(&QPoly::one_plus(2));
        assert_eq!(p, QPoly::from_coeffs([1, 1, 1, 1]));
        assert!(p.is_symmetric_unimodal().unwrap());
        assert!(!QPoly::from_coeffs([1, 0, 1]).is_symmetric_unimodal().unwrap());
        assert!(!QPoly::from_coeffs([2, 1, 2]).is_symmetric_unimodal().unwrap());
        assert!(QPoly::monomial(5, 3).is_symmetric_unimodal().unwrap());
        assert_eq!(QPoly::zero().is_symmetric_unimodal(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn display() {
        let p = QPoly::from_coeffs([1, -2, 0, 3]).shift(-1);
        assert_eq!(p.to_string(), "q^-1 - 2 + 3q^2");
    }

    #[test]
    fn substitution() {
        let p = QPoly::one_plus(1).substitute(2);
        assert_eq!(p, QPoly::one_plus(2));
    }
}
