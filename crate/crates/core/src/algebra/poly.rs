use std::fmt;

use super::field::{Degree, Field};
use crate::error::{Error, Result};

/// Dense univariate polynomial over an exact field, lowest degree first.
/// Trailing zeros are never stored, so the leading coefficient of a nonzero
/// polynomial is nonzero.
#[derive(Clone, PartialEq)]
pub struct Polynomial<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> Polynomial<F> {
    pub fn new(field: F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Self { field, coeffs }
    }

    pub fn zero(field: F) -> Self {
        Self { field, coeffs: Vec::new() }
    }

    pub fn one(field: F) -> Self {
        let one = field.one();
        Self::new(field, vec![one])
    }

    pub fn constant(field: F, c: F::Elem) -> Self {
        Self::new(field, vec![c])
    }

    /// `c * X^degree`.
    pub fn monomial(field: F, c: F::Elem, degree: usize) -> Self {
        let mut coeffs = vec![field.zero(); degree];
        coeffs.push(c);
        Self::new(field, coeffs)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    /// Coefficient of `X^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> F::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| self.field.is_one(c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| f.add(&self.coeff(i), &other.coeff(i))).collect();
        Self::new(f.clone(), coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| f.sub(&self.coeff(i), &other.coeff(i))).collect();
        Self::new(f.clone(), coeffs)
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|c| self.field.neg(c)).collect();
        Self::new(self.field.clone(), coeffs)
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let coeffs = self.coeffs.iter().map(|a| self.field.mul(a, c)).collect();
        Self::new(self.field.clone(), coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field.clone());
        }
        let f = &self.field;
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(&out[i + j], &f.mul(a, b));
            }
        }
        Self::new(f.clone(), out)
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let f = &self.field;
        let lead = divisor.leading().ok_or(Error::DivisionByZeroPolynomial)?;
        let lead_inv = f.inv(lead)?;
        let d = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Ok((Self::zero(f.clone()), self.clone()));
        }
        let mut quot = vec![f.zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            if f.is_zero(&rem[i]) {
                continue;
            }
            let c = f.mul(&rem[i], &lead_inv);
            for (j, b) in divisor.coeffs.iter().enumerate() {
                let k = i - d + j;
                rem[k] = f.sub(&rem[k], &f.mul(&c, b));
            }
            quot[i - d] = c;
        }
        rem.truncate(d);
        Ok((Self::new(f.clone(), quot), Self::new(f.clone(), rem)))
    }

    /// Scales to leading coefficient one. The zero polynomial stays zero.
    pub fn monic(&self) -> Result<Self> {
        match self.leading() {
            None => Ok(self.clone()),
            Some(lc) => Ok(self.scale(&self.field.inv(lc)?)),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0)` is the zero polynomial.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `g = s * self + t * other` and `g` monic.
    pub fn extended_gcd(&self, other: &Self) -> Result<(Self, Self, Self)> {
        let f = self.field.clone();
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(f.clone()), Self::zero(f.clone()));
        let (mut t0, mut t1) = (Self::zero(f.clone()), Self::one(f.clone()));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading() {
            None => Ok((r0, s0, t0)),
            Some(lc) => {
                let inv = f.inv(lc)?;
                Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
            }
        }
    }

    pub fn derivative(&self) -> Self {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| f.mul(c, &f.from_i64(i as i64)))
            .collect();
        Self::new(f.clone(), coeffs)
    }

    pub fn eval(&self, x: &F::Elem) -> F::Elem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    /// True when the polynomial has no repeated factor, i.e. `gcd(p, p') = 1`.
    pub fn is_square_free(&self) -> Result<bool> {
        if self.is_zero() {
            return Ok(false);
        }
        Ok(self.gcd(&self.derivative())?.degree() == Degree::Finite(0))
    }
}

impl<F: Field> Polynomial<F>
where
    F::Elem: fmt::Display,
{
    /// Human-readable rendering in the variable `var`, highest degree first.
    pub fn display(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let f = &self.field;
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if f.is_zero(c) {
                continue;
            }
            let text = c.to_string();
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(rest) if !rest.contains(['+', '-']) => (true, rest.to_string()),
                _ => (false, text),
            };
            let compound = magnitude.contains(['+', '-', ' ']);
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let monomial = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if monomial.is_empty() {
                out.push_str(&magnitude);
            } else if magnitude == "1" {
                out.push_str(&monomial);
            } else if compound {
                out.push_str(&format!("({magnitude})*{monomial}"));
            } else {
                out.push_str(&format!("{magnitude}*{monomial}"));
            }
        }
        out
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}
