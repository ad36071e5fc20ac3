//! Truncated power series in `q` with exact big-integer coefficients.

use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::congruence::PeriodicProduct;
use crate::error::{invalid, Result};

/// `c_0 + c_1 q + ... + c_N q^N`, all arithmetic modulo `q^{N+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<BigInt>,
}

/// Sign of the binomial `(1 ± q^j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Factor {
    /// `1 - q^j`
    Minus,
    /// `1 + q^j`
    Plus,
}

impl Series {
    pub fn zero(degree: usize) -> Self {
        Self { coeffs: vec![BigInt::zero(); degree + 1] }
    }

    pub fn one(degree: usize) -> Self {
        let mut s = Self::zero(degree);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// Takes `c_0..c_N`; an empty vector is read as the zero series of degree 0.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn truncation_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn truncate(&self, degree: usize) -> Series {
        let mut coeffs: Vec<BigInt> = self.coeffs.iter().take(degree + 1).cloned().collect();
        coeffs.resize(degree + 1, BigInt::zero());
        Series { coeffs }
    }

    pub fn is_unit(&self) -> bool {
        self.coeffs[0].abs().is_one()
    }

    /// Product truncated to the smaller of the two degrees.
    pub fn mul(&self, other: &Series) -> Series {
        let n = self.truncation_degree().min(other.truncation_degree());
        let mut out = Series::zero(n);
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }

    pub fn inverse(&self) -> Result<Series> {
        if !self.is_unit() {
            return Err(invalid("series with non-unit constant term has no inverse"));
        }
        let n = self.truncation_degree();
        let c0 = self.coeffs[0].clone();
        let mut inv = Series::zero(n);
        inv.coeffs[0] = c0.clone();
        for k in 1..=n {
            let mut acc = BigInt::zero();
            for i in 1..=k {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &inv.coeffs[k - i];
                }
            }
            // c0 = ±1, so dividing by c0 is multiplying by c0.
            inv.coeffs[k] = -(acc * &c0);
        }
        Ok(inv)
    }

    pub fn div(&self, divisor: &Series) -> Result<Series> {
        Ok(self.mul(&divisor.inverse()?))
    }

    /// Multiplies by `(1 ± q^j)^e`; negative `e` uses the truncated inverse.
    pub fn pow_factor(&self, j: usize, sign: Factor, e: &BigInt) -> Series {
        let mut out = self.clone();
        out.apply_factor(j, sign, e);
        out
    }

    pub(crate) fn apply_factor(&mut self, j: usize, sign: Factor, e: &BigInt) {
        let n = self.truncation_degree();
        if j == 0 || j > n || e.is_zero() {
            return;
        }
        match e.to_i64() {
            Some(small) if small.unsigned_abs() <= 4 => {
                for _ in 0..small.unsigned_abs() {
                    self.apply_simple(j, sign, small > 0);
                }
            }
            _ => self.apply_binomial(j, sign, e),
        }
    }

    /// One factor `(1 ± q^j)` (multiply) or its inverse, in place.
    fn apply_simple(&mut self, j: usize, sign: Factor, multiply: bool) {
        let n = self.truncation_degree();
        match (sign, multiply) {
            (Factor::Minus, true) => {
                for i in (j..=n).rev() {
                    let t = self.coeffs[i - j].clone();
                    self.coeffs[i] -= t;
                }
            }
            (Factor::Plus, true) => {
                for i in (j..=n).rev() {
                    let t = self.coeffs[i - j].clone();
                    self.coeffs[i] += t;
                }
            }
            (Factor::Minus, false) => {
                for i in j..=n {
                    let t = self.coeffs[i - j].clone();
                    self.coeffs[i] += t;
                }
            }
            (Factor::Plus, false) => {
                for i in j..=n {
                    let t = self.coeffs[i - j].clone();
                    self.coeffs[i] -= t;
                }
            }
        }
    }

    /// Generalized binomial expansion of `(1 ± q^j)^e`, valid for any integer `e`.
    fn apply_binomial(&mut self, j: usize, sign: Factor, e: &BigInt) {
        let n = self.truncation_degree();
        let terms = n / j;
        let mut binom = Vec::with_capacity(terms + 1);
        binom.push(BigInt::one());
        for t in 1..=terms {
            let prev: &BigInt = &binom[t - 1];
            let next = prev * (e - BigInt::from(t - 1)) / BigInt::from(t);
            binom.push(next);
        }
        if sign == Factor::Minus {
            for (t, b) in binom.iter_mut().enumerate() {
                if t % 2 == 1 {
                    *b = -b.clone();
                }
            }
        }
        let mut out = Series::zero(n);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (t, b) in binom.iter().enumerate().take((n - i) / j + 1) {
                out.coeffs[i + t * j] += c * b;
            }
        }
        *self = out;
    }
}

impl Mul for &Series {
    type Output = Series;

    fn mul(self, rhs: &Series) -> Series {
        Series::mul(self, rhs)
    }
}

/// Coefficients of `p` up to `q^degree`. Factors with `j > degree` are skipped.
pub fn expand(p: &PeriodicProduct, degree: usize) -> Series {
    let mut s = Series::one(degree);
    for j in 1..=degree {
        let minus = p.effective_exponent(j as u64);
        if minus != 0 {
            s.apply_factor(j, Factor::Minus, &BigInt::from(minus));
        }
        let plus = p.plus_exponent(j as u64);
        if plus != 0 {
            s.apply_factor(j, Factor::Plus, &BigInt::from(plus));
        }
    }
    s
}

/// Integers `e_1..e_N` with `∏ (1 - q^j)^{-e_j}` equal to a series, plus the
/// smallest period they exhibit, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentSequence {
    exponents: Vec<BigInt>,
    detected_period: Option<usize>,
}

impl ExponentSequence {
    /// `e_j` for `j = 1..=N`; index 0 holds `e_1`.
    pub fn exponents(&self) -> &[BigInt] {
        &self.exponents
    }

    pub fn exponent(&self, j: usize) -> &BigInt {
        &self.exponents[j - 1]
    }

    pub fn detected_period(&self) -> Option<usize> {
        self.detected_period
    }

    /// The periodic product `∏ (1 - q^j)^{-e_j}` with `E(r) = -e_r` over the
    /// detected period, or `None` without a period.
    pub fn to_product(&self) -> Option<PeriodicProduct> {
        let m = self.detected_period?;
        let mut p = PeriodicProduct::new(m as u64).ok()?;
        for r in 0..m {
            let j = if r == 0 { m } else { r };
            let e = self.exponents.get(j - 1)?.to_i64()?;
            p.add_to_class(r as i64, -e);
        }
        Some(p)
    }

    /// Plain class-list rendering (`1,1,3,4 mod 10`), no globals pulled out.
    pub fn to_class_list(&self) -> Option<String> {
        let m = self.detected_period?;
        let mut classes = Vec::new();
        for r in 1..=m {
            let e = self.exponents.get(r - 1)?;
            if e.is_negative() {
                return None;
            }
            let count = e.to_usize()?;
            let residue = r % m;
            classes.extend(std::iter::repeat_n(residue, count));
        }
        classes.sort_unstable();
        let list: Vec<String> = classes.iter().map(usize::to_string).collect();
        if list.is_empty() {
            Some(format!("mod {m}"))
        } else {
            Some(format!("{} mod {m}", list.join(",")))
        }
    }
}

/// Reads off `e_j` as the coefficient of `q^j` after the factors for
/// `1..j` have been divided out. Requires `c_0 = 1`.
pub fn fit_exponents(counts: &Series, max_modulus: usize) -> Result<ExponentSequence> {
    if !counts.coeff(0).is_one() {
        return Err(invalid("exponent fitting needs constant term 1"));
    }
    let n = counts.truncation_degree();
    let mut rest = counts.clone();
    let mut exponents = Vec::with_capacity(n);
    for j in 1..=n {
        let e = rest.coeff(j).clone();
        if !e.is_zero() {
            rest.apply_factor(j, Factor::Minus, &e);
        }
        exponents.push(e);
    }
    debug_assert!(rest.coeffs()[1..].iter().all(Zero::is_zero));
    let detected_period = detect_period(&exponents, max_modulus);
    Ok(ExponentSequence { exponents, detected_period })
}

fn detect_period(exponents: &[BigInt], max_modulus: usize) -> Option<usize> {
    let n = exponents.len();
    (1..=max_modulus.min(n / 2)).find(|&m| (m..n).all(|i| exponents[i] == exponents[i - m]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence::parse_residue_spec;

    fn ints(s: &Series) -> Vec<i64> {
        s.coeffs().iter().map(|c| c.to_i64().unwrap()).collect()
    }

    #[test]
    fn identity_and_geometric() {
        let p = PeriodicProduct::new(1).unwrap();
        assert_eq!(ints(&expand(&p, 5)), vec![1, 0, 0, 0, 0, 0]);
        let s = Series::one(4).pow_factor(1, Factor::Minus, &BigInt::from(-1));
        assert_eq!(ints(&s), vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn inverse_roundtrip() {
        let f = Series::one(12).pow_factor(2, Factor::Minus, &BigInt::one());
        let g = f.inverse().unwrap();
        assert_eq!(&f * &g, Series::one(12));
        let s = Series::from_i64(&[1, 3, -2, 7]);
        assert_eq!(s.mul(&Series::one(3)), s);
    }

    #[test]
    fn non_unit_division_fails() {
        let s = Series::from_i64(&[2, 1, 0]);
        assert!(Series::one(2).div(&s).is_err());
        assert!(Series::zero(3).inverse().is_err());
        let neg = Series::from_i64(&[-1, 1, 0]);
        assert_eq!(&neg * &neg.inverse().unwrap(), Series::one(2));
    }

    #[test]
    fn rogers_ramanujan_expansion() {
        let p = parse_residue_spec("1,4 mod 5").unwrap();
        let c = ints(&expand(&p, 10));
        assert_eq!(&c[1..], &[1, 1, 1, 2, 2, 3, 3, 4, 5, 6]);
    }

    #[test]
    fn binomial_path_agrees_with_repeated_factors() {
        let base = Series::from_i64(&[1, 2, -1, 0, 5, 3, 0, 1, 1, 0, 2]);
        for e in [-7i64, -5, 5, 9] {
            let fast = base.pow_factor(2, Factor::Minus, &BigInt::from(e));
            let mut slow = base.clone();
            for _ in 0..e.unsigned_abs() {
                slow.apply_simple(2, Factor::Minus, e > 0);
            }
            assert_eq!(fast, slow, "e = {e}");
            let fast = base.pow_factor(3, Factor::Plus, &BigInt::from(e));
            let mut slow = base.clone();
            for _ in 0..e.unsigned_abs() {
                slow.apply_simple(3, Factor::Plus, e > 0);
            }
            assert_eq!(fast, slow, "plus, e = {e}");
        }
    }

    #[test]
    fn fit_constant_series() {
        let fit = fit_exponents(&Series::one(10), 6).unwrap();
        assert!(fit.exponents().iter().all(Zero::is_zero));
        assert_eq!(fit.detected_period(), Some(1));
        assert!(fit_exponents(&Series::zero(3), 2).is_err());
    }

    #[test]
    fn fit_recovers_mod_5_classes() {
        let p = parse_residue_spec("1,4 mod 5").unwrap();
        let fit = fit_exponents(&expand(&p, 20), 10).unwrap();
        for j in 1..=20usize {
            let expected = i64::from(j % 5 == 1 || j % 5 == 4);
            assert_eq!(fit.exponent(j), &BigInt::from(expected));
        }
        assert_eq!(fit.detected_period(), Some(5));
        assert_eq!(fit.to_class_list().unwrap(), "1,4 mod 5");
    }

    #[test]
    fn period_needs_two_full_cycles() {
        let p = parse_residue_spec("1,4 mod 5").unwrap();
        let fit = fit_exponents(&expand(&p, 9), 10).unwrap();
        assert_eq!(fit.detected_period(), None);
        assert_eq!(fit.to_class_list(), None);
    }
}
