//! Exact polynomial arithmetic over the integers, with the q-analogues
//! and root-of-unity evaluations used by the sieving checks.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum QPolyError {
    #[error("value at a primitive root of order {order} is not an integer: the reduction has degree {degree}")]
    NotConstantAtRoot { order: u64, degree: usize },
}

/// A polynomial in one variable with integer coefficients. The
/// coefficient vector is kept trimmed, so the zero polynomial is the
/// empty vector.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![BigInt::one()] }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn monomial(coeff: BigInt, degree: usize) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = coeff;
        IntPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficients in ascending degree, with no trailing zeros.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> BigInt {
        self.coeffs.get(degree).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// The value at 1, the sum of the coefficients.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Quotient and remainder; requires a nonzero divisor. Fails only
    /// when a leading coefficient does not divide exactly, which cannot
    /// happen for monic divisors.
    pub fn div_rem(&self, divisor: &IntPolynomial) -> Option<(IntPolynomial, IntPolynomial)> {
        let dd = divisor.degree()?;
        let lead = divisor.coeffs.last().unwrap();
        if self.coeffs.len() <= dd {
            return Some((IntPolynomial::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dd;
        let mut quot = vec![BigInt::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = rem[i + dd].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                let sub = dc * &q;
                rem[i + j] -= sub;
            }
            quot[i] = q;
        }
        Some((IntPolynomial::from_coeffs(quot), IntPolynomial::from_coeffs(rem)))
    }

    /// Exact division; `None` if the division leaves a remainder.
    pub fn exact_div(&self, divisor: &IntPolynomial) -> Option<IntPolynomial> {
        let (q, r) = self.div_rem(divisor)?;
        r.is_zero().then_some(q)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}")?;
                    }
                    if i == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// The q-analogue of `n`: the sum of the powers of q below `n`.
pub fn q_int(n: u64) -> IntPolynomial {
    IntPolynomial::from_coeffs(vec![BigInt::one(); n as usize])
}

/// The q-factorial, a product of q-analogues.
pub fn q_factorial(n: u64) -> IntPolynomial {
    let mut acc = IntPolynomial::one();
    for i in 1..=n {
        acc = &acc * &q_int(i);
    }
    acc
}

/// The Gaussian binomial coefficient, computed by one exact division of
/// products of q-analogues.
pub fn q_binomial(n: u64, k: u64) -> IntPolynomial {
    if k > n {
        return IntPolynomial::zero();
    }
    let mut num = IntPolynomial::one();
    let mut den = IntPolynomial::one();
    for i in 1..=k {
        num = &num * &q_int(n - k + i);
        den = &den * &q_int(i);
    }
    num.exact_div(&den).expect("Gaussian binomials are polynomials")
}

/// The cyclotomic polynomial of the given order, by dividing q^d - 1 by
/// the cyclotomic polynomials of the proper divisors.
pub fn cyclotomic(d: u64) -> IntPolynomial {
    assert!(d >= 1, "cyclotomic polynomials are indexed from 1");
    let mut p = &IntPolynomial::monomial(BigInt::one(), d as usize) - &IntPolynomial::one();
    for e in 1..d {
        if d % e == 0 {
            p = p.exact_div(&cyclotomic(e)).expect("q^d - 1 is the product over divisors");
        }
    }
    p
}

/// The value of the polynomial at a primitive root of unity of the given
/// order. Defined only when the value is a rational integer, that is when
/// the remainder mod the cyclotomic polynomial is constant.
pub fn eval_at_root(p: &IntPolynomial, order: u64) -> Result<BigInt, QPolyError> {
    let phi = cyclotomic(order);
    let (_, r) = p.div_rem(&phi).expect("cyclotomic polynomials are monic");
    match r.degree() {
        None => Ok(BigInt::zero()),
        Some(0) => Ok(r.coeff(0)),
        Some(degree) => Err(QPolyError::NotConstantAtRoot { order, degree }),
    }
}

/// The q-count of two-row rectangular tableaux with `n` columns and `k`
/// repeated entries. A product of two Gaussian binomials divided exactly
/// by one q-analogue.
pub fn f_poly(n: u64, k: u64) -> IntPolynomial {
    assert!(n >= 1 && k < n, "need n >= 1 and 0 <= k < n");
    let num = &q_binomial(n - 1, k) * &q_binomial(2 * n - k, n - k - 1);
    num.exact_div(&q_int(n - k)).expect("the q-count is a polynomial")
}

/// Exponent of the leading power of q relating the major index generating
/// function to the q-count.
pub fn maj_shift(n: u64, k: u64) -> u64 {
    n + k * (k + 1) / 2
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * BigInt::from(n - k + i) / BigInt::from(i);
    }
    acc
}

pub(crate) fn exact_ratio(num: BigInt, den: BigInt) -> BigInt {
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "expected an exact integer ratio");
    q
}

/// Product-formula value of the q-count at a primitive root of unity of
/// order `d >= 2` dividing `2n - k`. Zero unless `d` divides `n` or
/// `n + 1`.
pub fn closed_form_f(n: u64, k: u64, d: u64) -> BigInt {
    assert!(d >= 2, "the product formula needs order at least 2");
    assert!(n >= 1 && k < n, "need n >= 1 and 0 <= k < n");
    assert!((2 * n - k) % d == 0, "the order must divide 2n - k");
    let t = (2 * n - k) / d;
    if n % d == 0 {
        let den = factorial(k / d)
            * factorial((n - k) / d)
            * factorial((n - k) / d - 1)
            * BigInt::from(n / d);
        exact_ratio(factorial(t), den)
    } else if (n + 1) % d == 0 {
        let a = factorial((n - k - 1) / d);
        let den = factorial((k + 2) / d - 1) * &a * &a * BigInt::from((n + 1) / d);
        exact_ratio(factorial(t), den)
    } else {
        BigInt::zero()
    }
}
