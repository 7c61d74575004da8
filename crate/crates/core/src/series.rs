//! Truncated power series with exact integer coefficients.
//!
//! A series of order `N` stores the coefficients of `x^0..=x^N`; anything
//! beyond is unknown. Binary operations truncate to the smaller order.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<BigInt>,
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(1, 0, order)
    }

    /// `c·x^k` truncated to `order`.
    pub fn monomial(c: i64, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = BigInt::from(c);
        }
        s
    }

    /// Pads or truncates `coeffs` to exactly `order + 1` entries.
    pub fn from_coeffs<I, T>(coeffs: I, order: usize) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut c: Vec<BigInt> = coeffs.into_iter().take(order + 1).map(Into::into).collect();
        c.resize(order + 1, BigInt::zero());
        Self { coeffs: c }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Series {
        assert!(order <= self.order(), "cannot raise truncation order");
        Self {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn add(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        Self {
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] + &other.coeffs[k])
                .collect(),
        }
    }

    pub fn sub(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        Self {
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] - &other.coeffs[k])
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Series {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Series {
        let mut acc = Series::one(self.order());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse; the constant term must be `±1`.
    pub fn reciprocal(&self) -> Result<Series> {
        let c0 = &self.coeffs[0];
        if c0.abs() != BigInt::one() {
            return Err(Error::NonInvertible(c0.to_string()));
        }
        let mut r = Self::zero(self.order());
        r.coeffs[0] = c0.clone();
        for n in 1..=self.order() {
            let mut acc = BigInt::zero();
            for k in 1..=n {
                acc += &self.coeffs[k] * &r.coeffs[n - k];
            }
            // c0 is ±1, so dividing by it is multiplying by it
            r.coeffs[n] = -(acc * c0);
        }
        Ok(r)
    }

    pub fn series_arith(a: &Series, b: &Series, op: SeriesOp) -> Result<Series> {
        match op {
            SeriesOp::Add => Ok(a.add(b)),
            SeriesOp::Mul => Ok(a.mul(b)),
            SeriesOp::ReciprocalOfUnit => a.reciprocal(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Mul,
    ReciprocalOfUnit,
}

/// Coefficients of `numer / denom` up to `x^order`, by the linear
/// recurrence the denominator defines. Only a nonzero constant term is
/// required of `denom`; the division must come out integral.
pub fn expand_rational(numer: &[i64], denom: &[i64], order: usize) -> Result<Series> {
    let d0 = *denom.first().unwrap_or(&0);
    if d0 == 0 {
        return Err(Error::NonInvertible("0".into()));
    }
    let d0 = BigInt::from(d0);
    let mut c: Vec<BigInt> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut acc = BigInt::from(*numer.get(n).unwrap_or(&0));
        for (k, &d) in denom
            .iter()
            .enumerate()
            .skip(1)
            .take_while(|&(k, _)| k <= n)
        {
            acc -= BigInt::from(d) * &c[n - k];
        }
        if !(&acc % &d0).is_zero() {
            return Err(Error::NonInvertible(format!(
                "coefficient {n} is not integral over {d0}"
            )));
        }
        c.push(acc / &d0);
    }
    Ok(Series { coeffs: c })
}

/// Number of normalised pairs `(a, b)`, `0 ≤ a ≤ b`, `a + b = i`.
fn colours(i: usize) -> u32 {
    (i as u32 + 2) / 2
}

/// `x²/(1−x) · ∏_{i≥1} (1−x^i)^{−⌈(i+1)/2⌉}` truncated at `order`: the
/// number of multisets of normalised pair letters plus one terminal
/// monotone letter of size at least two.
pub fn partition_key_series(order: usize) -> Series {
    let mut acc = Series::monomial(1, 2, order);
    let geometric = Series::from_coeffs(std::iter::repeat_n(1, order + 1), order);
    acc = acc.mul(&geometric);
    for i in 1..=order {
        let mut factor = Series::one(order);
        factor.coeffs[i] = BigInt::from(-1);
        let inv = factor.reciprocal().expect("constant term is 1");
        acc = acc.mul(&inv.pow(colours(i)));
    }
    acc
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(", "))
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(s: &Series) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn ring_identities() {
        let a = Series::from_coeffs([1, 1], 4);
        let b = Series::from_coeffs([1, -1], 4);
        assert_eq!(ints(&a.mul(&b)), vec![1, 0, -1, 0, 0]);
        let x = Series::monomial(1, 1, 3);
        assert_eq!(ints(&x.add(&x)), vec![0, 2, 0, 0]);
        assert_eq!(ints(&b.reciprocal().unwrap()), vec![1; 5]);
        assert_eq!(a.mul(&Series::one(2)).order(), 2);
    }

    #[test]
    fn reciprocal_requires_unit() {
        let s = Series::from_coeffs([2, 1], 3);
        assert!(matches!(s.reciprocal(), Err(Error::NonInvertible(_))));
        assert!(Series::zero(3).reciprocal().is_err());
        let neg = Series::from_coeffs([-1, 1], 3);
        let r = neg.reciprocal().unwrap();
        assert_eq!(ints(&neg.mul(&r)), vec![1, 0, 0, 0]);
    }

    #[test]
    fn rational_expansions() {
        let x = expand_rational(&[1, -2], &[1, -4, 2], 4).unwrap();
        assert_eq!(ints(&x), vec![1, 2, 6, 20, 68]);
        assert_eq!(
            ints(&expand_rational(&[1], &[1, -1], 3).unwrap()),
            vec![1; 4]
        );
        // x + x² + 2x³/(1−x) over a common denominator: ((x + x²)(1 − x) + 2x³)/(1 − x)
        let a = expand_rational(&[0, 1, 0, 1], &[1, -1], 5).unwrap();
        assert_eq!(ints(&a), vec![0, 1, 1, 2, 2, 2]);
        assert!(expand_rational(&[1], &[0, 1], 3).is_err());
    }

    #[test]
    fn key_series_low_terms() {
        let s = partition_key_series(4);
        assert_eq!(ints(&s), vec![0, 0, 1, 2, 5]);
    }

    fn small_series(order: usize) -> impl Strategy<Value = Series> {
        prop::collection::vec(-20i64..20, order + 1)
            .prop_map(move |v| Series::from_coeffs(v, order))
    }

    proptest! {
        #[test]
        fn mul_commutes_and_associates(a in small_series(6), b in small_series(6), c in small_series(6)) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn rational_times_denominator_is_numerator(
            numer in prop::collection::vec(-5i64..5, 1..4),
            mut denom in prop::collection::vec(-5i64..5, 1..4),
        ) {
            denom[0] = 1;
            let order = 8;
            let q = expand_rational(&numer, &denom, order).unwrap();
            let back = q.mul(&Series::from_coeffs(denom.clone(), order));
            prop_assert_eq!(back, Series::from_coeffs(numer.clone(), order));
        }
    }
}
