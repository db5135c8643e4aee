use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// A weight in Dynkin-label coordinates: coordinate `i` is the pairing with
/// the simple coroot `alpha_i^vee`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(SmallVec<[i32; 8]>);

impl Weight {
    pub fn new(coords: impl IntoIterator<Item = i32>) -> Self {
        Weight(coords.into_iter().collect())
    }

    pub fn zero(rank: usize) -> Self {
        Weight(SmallVec::from_elem(0, rank))
    }

    /// The `i`-th fundamental weight (0-based).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.0[i] = 1;
        w
    }

    /// All labels equal to one.
    pub fn rho(rank: usize) -> Self {
        Weight(SmallVec::from_elem(1, rank))
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    pub fn coords_mut(&mut self) -> &mut [i32] {
        &mut self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_strictly_dominant(&self) -> bool {
        self.0.iter().all(|&c| c > 0)
    }

    pub fn scale(&self, k: i32) -> Self {
        Weight(self.0.iter().map(|&c| c * k).collect())
    }

    /// Halves a doubled weight, failing when some coordinate is odd.
    pub fn halve(&self) -> Option<Self> {
        if self.0.iter().any(|c| c % 2 != 0) {
            return None;
        }
        Some(Weight(self.0.iter().map(|&c| c / 2).collect()))
    }

    pub fn check_rank(&self, rank: usize) -> Result<()> {
        if self.rank() != rank {
            return Err(Error::RankMismatch {
                expected: rank,
                got: self.rank(),
            });
        }
        Ok(())
    }

    /// Parses `"a,b,c"`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty weight".into()));
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<i32>()
                    .map_err(|e| Error::Parse(format!("weight label `{t}`: {e}")))
            })
            .collect::<Result<SmallVec<_>>>()
            .map(Weight)
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|c| -c).collect())
    }
}

impl Mul<i32> for &Weight {
    type Output = Weight;
    fn mul(self, k: i32) -> Weight {
        self.scale(k)
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let w = Weight::parse("1, -2,3").unwrap();
        assert_eq!(w.coords(), &[1, -2, 3]);
        assert_eq!(w.to_string(), "(1,-2,3)");
        assert!(Weight::parse("1,x").is_err());
        assert!(Weight::parse("").is_err());
    }

    #[test]
    fn halve_rejects_odd() {
        assert_eq!(Weight::new([2, 4]).halve(), Some(Weight::new([1, 2])));
        assert_eq!(Weight::new([2, 3]).halve(), None);
    }
}
