use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An element of `ℚ[λ]`, stored densely from the constant term upward
/// with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Coefficient(Vec<BigRational>);

impl Coefficient {
    pub fn zero() -> Self {
        Coefficient(Vec::new())
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The formal parameter `λ`.
    pub fn lambda() -> Self {
        Coefficient(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn constant(r: BigRational) -> Self {
        Self::from_coeffs(vec![r])
    }

    /// `r·λ^power`.
    pub fn monomial(r: BigRational, power: usize) -> Self {
        let mut v = vec![BigRational::zero(); power + 1];
        v[power] = r;
        Self::from_coeffs(v)
    }

    /// From coefficients of `λ⁰, λ¹, …`.
    pub fn from_coeffs(mut v: Vec<BigRational>) -> Self {
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        Coefficient(v)
    }

    /// Coefficients of `λ⁰, λ¹, …`.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    /// `Some(c)` when the coefficient does not involve `λ`.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.0.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.0[0].clone()),
            _ => None,
        }
    }

    pub fn lambda_degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Coefficient(self.0.iter().map(|c| c * r).collect())
    }

    /// Value at `λ = at`.
    pub fn eval(&self, at: &BigRational) -> BigRational {
        self.0
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * at + c)
    }

    pub fn specialize(&self, at: &BigRational) -> Self {
        Self::constant(self.eval(at))
    }

    fn add_into(&mut self, other: &Coefficient, sign: bool) {
        if self.0.len() < other.0.len() {
            self.0.resize(other.0.len(), BigRational::zero());
        }
        for (a, b) in self.0.iter_mut().zip(other.0.iter()) {
            if sign {
                *a += b;
            } else {
                *a -= b;
            }
        }
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
    }
}

impl AddAssign<&Coefficient> for Coefficient {
    fn add_assign(&mut self, rhs: &Coefficient) {
        self.add_into(rhs, true);
    }
}

impl SubAssign<&Coefficient> for Coefficient {
    fn sub_assign(&mut self, rhs: &Coefficient) {
        self.add_into(rhs, false);
    }
}

impl Add for &Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: &Coefficient) -> Coefficient {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: &Coefficient) -> Coefficient {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        Coefficient(self.0.iter().map(|c| -c).collect())
    }
}

impl Mul for &Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: &Coefficient) -> Coefficient {
        if self.is_zero() || rhs.is_zero() {
            return Coefficient::zero();
        }
        if rhs.0.len() == 1 {
            return self.scale(&rhs.0[0]);
        }
        if self.0.len() == 1 {
            return rhs.scale(&self.0[0]);
        }
        let mut v = vec![BigRational::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Coefficient::from_coeffs(v)
    }
}

impl From<i64> for Coefficient {
    fn from(n: i64) -> Self {
        Coefficient::from_int(n)
    }
}

/// `p` or `p/q`.
pub fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (k, a.is_one()) {
                (0, _) => f.write_str(&format_rational(&a))?,
                (_, true) => {}
                _ => write!(f, "{}*", format_rational(&a))?,
            }
            match k {
                0 => {}
                1 => f.write_str("l")?,
                _ => write!(f, "l^{k}")?,
            }
        }
        Ok(())
    }
}
