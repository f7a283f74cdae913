//! Vertex weights as exact rationals.

use crate::error::{Error, Result};
use num::{BigInt, BigRational, One, Signed, Zero};

pub type Weight = BigRational;

/// Nonnegative rational weight per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMap {
    weights: Vec<Weight>,
}

impl WeightMap {
    pub fn new(weights: Vec<Weight>) -> Result<Self> {
        if let Some(v) = weights.iter().position(|w| w.is_negative()) {
            return Err(Error::NegativeWeight(v));
        }
        Ok(WeightMap { weights })
    }

    /// All-ones weights on `n` vertices.
    pub fn unit(n: usize) -> Self {
        WeightMap {
            weights: vec![Weight::one(); n],
        }
    }

    pub fn from_integers<I: IntoIterator<Item = i64>>(ints: I) -> Result<Self> {
        Self::new(
            ints.into_iter()
                .map(|i| Weight::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn get(&self, v: usize) -> &Weight {
        &self.weights[v]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Weight> {
        self.weights.iter()
    }

    pub fn sum<I: IntoIterator<Item = usize>>(&self, verts: I) -> Weight {
        verts
            .into_iter()
            .fold(Weight::zero(), |acc, v| acc + &self.weights[v])
    }

    pub fn total(&self) -> Weight {
        self.sum(0..self.len())
    }

    /// Weights for the subtournament on `verts`, in the given order.
    pub fn restrict(&self, verts: &[usize]) -> WeightMap {
        WeightMap {
            weights: verts.iter().map(|&v| self.weights[v].clone()).collect(),
        }
    }
}

/// Parses an exact rational: "p/q", an integer, or a finite decimal.
pub fn parse_weight(s: &str) -> Result<Weight> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational '{s}'"));
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| bad())?;
        let d: BigInt = den.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in '{s}'")));
        }
        Ok(Weight::new(n, d))
    } else if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int.trim_start().starts_with('-');
        let int: BigInt = if int.is_empty() || int == "-" {
            BigInt::zero()
        } else {
            int.parse().map_err(|_| bad())?
        };
        let frac_num: BigInt = frac.parse().map_err(|_| bad())?;
        let den = BigInt::from(10u32).pow(frac.len() as u32);
        let frac_part = Weight::new(frac_num, den);
        let int_part = Weight::from_integer(int);
        Ok(if negative {
            int_part - frac_part
        } else {
            int_part + frac_part
        })
    } else {
        let n: BigInt = s.parse().map_err(|_| bad())?;
        Ok(Weight::from_integer(n))
    }
}

/// Lowest terms; integers print without a denominator.
pub fn format_weight(w: &Weight) -> String {
    if w.is_integer() {
        w.numer().to_string()
    } else {
        format!("{}/{}", w.numer(), w.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_integers_decimals() {
        assert_eq!(parse_weight("3/6").unwrap(), Weight::new(1.into(), 2.into()));
        assert_eq!(parse_weight("7").unwrap(), Weight::from_integer(7.into()));
        assert_eq!(parse_weight("0.25").unwrap(), Weight::new(1.into(), 4.into()));
        assert_eq!(parse_weight("-1.5").unwrap(), Weight::new((-3).into(), 2.into()));
        assert!(parse_weight("1/0").is_err());
        assert!(parse_weight("x").is_err());
        assert!(parse_weight("1.2e3").is_err());
    }

    #[test]
    fn formats_in_lowest_terms() {
        assert_eq!(format_weight(&Weight::new(4.into(), 2.into())), "2");
        assert_eq!(format_weight(&Weight::new(2.into(), 4.into())), "1/2");
    }

    #[test]
    fn rejects_negative_weights() {
        assert!(WeightMap::new(vec![Weight::new((-1).into(), 2.into())]).is_err());
        assert!(WeightMap::from_integers([0, 3]).is_ok());
    }

    #[test]
    fn sums_subsets() {
        let w = WeightMap::from_integers([1, 2, 4]).unwrap();
        assert_eq!(w.sum([0, 2]), Weight::from_integer(5.into()));
        assert_eq!(w.total(), Weight::from_integer(7.into()));
    }
}
