//! Towers `Q = F_0 ⊆ F_1 ⊆ … ⊆ F_d` where each `F_l = F_{l-1}[x_l]/(f_l)` for
//! a monic polynomial `f_l` over the previous level.
//!
//! An element of level `l` is stored as a flat vector of rational coordinates
//! over the monomial product basis. Chunking that vector into `deg f_l`
//! pieces of length `[F_{l-1} : Q]` yields its coefficients over the level
//! below, lowest power of the generator first.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::field::{rat, Field, Rational};
use super::matrix::Matrix;
use super::poly::Polynomial;
use crate::error::{Error, Result};

/// Definition of one extension level: a generator name and its monic
/// defining polynomial, coefficients given as flat coordinates over the
/// level below (lowest degree first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelSpec {
    pub name: String,
    pub min_poly: Vec<Vec<Rational>>,
}

impl LevelSpec {
    /// A level whose defining polynomial has rational coefficients only,
    /// embedded into the level below. `coeffs` are lowest degree first.
    pub fn rational(name: &str, coeffs: &[Rational], below_degree: usize) -> Self {
        let min_poly = coeffs
            .iter()
            .map(|c| {
                let mut v = vec![Rational::zero(); below_degree];
                v[0] = c.clone();
                v
            })
            .collect();
        Self { name: name.to_string(), min_poly }
    }

    pub fn integer(name: &str, coeffs: &[i64], below_degree: usize) -> Self {
        let coeffs: Vec<Rational> = coeffs.iter().map(|&c| rat(c)).collect();
        Self::rational(name, &coeffs, below_degree)
    }
}

#[derive(Debug, PartialEq, Eq)]
struct Extension {
    name: String,
    degree: usize,
    modulus: Vec<Vec<Rational>>,
}

/// Structure constants of one level over Q: `b_i b_j = Σ_k c_ijk b_k / den`
/// for the flat basis, stored sparsely with integer numerators.
#[derive(Debug, PartialEq, Eq)]
struct MulTable {
    dim: usize,
    den: BigInt,
    entries: Vec<Vec<(usize, BigInt)>>,
}

#[derive(Debug, PartialEq, Eq)]
struct TowerData {
    extensions: Vec<Extension>,
    abs_degrees: Vec<usize>,
    tables: Vec<MulTable>,
}

/// A finite tower of simple algebraic extensions over Q. Cheap to clone.
#[derive(Clone)]
pub struct FieldTower(Arc<TowerData>);

impl PartialEq for FieldTower {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for FieldTower {}

impl fmt::Debug for FieldTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_list();
        for level in 1..=self.top() {
            list.entry(&format!("{}: {}", self.name(level), self.modulus(level).display("T")));
        }
        list.finish()
    }
}

impl FieldTower {
    /// The trivial tower containing only Q.
    pub fn rationals() -> Self {
        FieldTower::build(Vec::new(), vec![1])
    }

    /// Builds a tower from its levels, bottom first. Irreducibility of the
    /// defining polynomials is not checked; a reducible one surfaces later
    /// as [`Error::NonInvertible`].
    pub fn new(levels: Vec<LevelSpec>) -> Result<Self> {
        let mut extensions = Vec::with_capacity(levels.len());
        let mut abs_degrees = vec![1usize];
        for (i, spec) in levels.into_iter().enumerate() {
            let below = *abs_degrees.last().unwrap();
            if spec.min_poly.len() < 2 {
                return Err(Error::InvalidTower(format!(
                    "level {} ({}) needs a defining polynomial of degree at least 1",
                    i + 1,
                    spec.name
                )));
            }
            if let Some(bad) = spec.min_poly.iter().position(|c| c.len() != below) {
                return Err(Error::InvalidTower(format!(
                    "level {} ({}): coefficient {bad} has {} coordinates, expected {below}",
                    i + 1,
                    spec.name,
                    spec.min_poly[bad].len()
                )));
            }
            let lead = spec.min_poly.last().unwrap();
            let monic = lead[0].is_one() && lead[1..].iter().all(Zero::is_zero);
            if !monic {
                return Err(Error::InvalidTower(format!(
                    "level {} ({}): defining polynomial is not monic",
                    i + 1,
                    spec.name
                )));
            }
            let degree = spec.min_poly.len() - 1;
            abs_degrees.push(below * degree);
            extensions.push(Extension { name: spec.name, degree, modulus: spec.min_poly });
        }
        Ok(FieldTower::build(extensions, abs_degrees))
    }

    fn build(extensions: Vec<Extension>, abs_degrees: Vec<usize>) -> Self {
        let mut data = TowerData { extensions, abs_degrees, tables: Vec::new() };
        for level in 0..data.abs_degrees.len() {
            let table = data.structure_table(level);
            data.tables.push(table);
        }
        FieldTower(Arc::new(data))
    }

    /// Index of the top level (0 for Q alone).
    pub fn top(&self) -> usize {
        self.0.extensions.len()
    }

    /// Degree of level `level` over the level below (1 for Q).
    pub fn degree(&self, level: usize) -> usize {
        if level == 0 {
            1
        } else {
            self.0.extensions[level - 1].degree
        }
    }

    /// Degree of level `level` over Q.
    pub fn abs_degree(&self, level: usize) -> usize {
        self.0.abs_degrees[level]
    }

    pub fn name(&self, level: usize) -> &str {
        if level == 0 {
            "Q"
        } else {
            &self.0.extensions[level - 1].name
        }
    }

    pub fn field(&self, level: usize) -> TowerField {
        assert!(level <= self.top(), "level {level} out of range");
        TowerField { tower: self.clone(), level }
    }

    /// The defining polynomial of `level` over the level below.
    pub fn modulus(&self, level: usize) -> Polynomial<TowerField> {
        assert!(level >= 1, "Q has no defining polynomial");
        let below = self.field(level - 1);
        let coeffs = self.0.extensions[level - 1]
            .modulus
            .iter()
            .map(|c| FieldElement { tower: self.clone(), level: level - 1, coords: c.clone() })
            .collect();
        Polynomial::new(below, coeffs)
    }

    pub fn level_spec(&self, level: usize) -> LevelSpec {
        let ext = &self.0.extensions[level - 1];
        LevelSpec { name: ext.name.clone(), min_poly: ext.modulus.clone() }
    }

    pub fn level_specs(&self) -> Vec<LevelSpec> {
        (1..=self.top()).map(|l| self.level_spec(l)).collect()
    }

    pub fn element(&self, level: usize, coords: Vec<Rational>) -> Result<FieldElement> {
        let expected = self.abs_degree(level);
        if coords.len() != expected {
            return Err(Error::LengthMismatch { expected, actual: coords.len() });
        }
        Ok(FieldElement { tower: self.clone(), level, coords })
    }

    pub fn zero(&self, level: usize) -> FieldElement {
        FieldElement {
            tower: self.clone(),
            level,
            coords: vec![Rational::zero(); self.abs_degree(level)],
        }
    }

    pub fn from_rational(&self, level: usize, q: &Rational) -> FieldElement {
        let mut e = self.zero(level);
        e.coords[0] = q.clone();
        e
    }

    pub fn from_i64(&self, level: usize, n: i64) -> FieldElement {
        self.from_rational(level, &rat(n))
    }

    pub fn one(&self, level: usize) -> FieldElement {
        self.from_i64(level, 1)
    }

    /// The generator `x_level`, as an element of its own level.
    pub fn generator(&self, level: usize) -> FieldElement {
        assert!(level >= 1, "Q has no generator");
        let mut e = self.zero(level);
        if self.degree(level) == 1 {
            // x satisfies x + c = 0
            let c = &self.0.extensions[level - 1].modulus[0];
            e.coords = c.iter().map(|v| -v).collect();
        } else {
            e.coords[self.abs_degree(level - 1)] = Rational::one();
        }
        e
    }

    /// Assembles an element of `level` from its coefficients over the level
    /// below. Missing trailing coefficients are zero.
    pub fn from_coeffs_below(&self, level: usize, coeffs: &[FieldElement]) -> Result<FieldElement> {
        assert!(level >= 1);
        let d = self.degree(level);
        if coeffs.len() > d {
            return Err(Error::LengthMismatch { expected: d, actual: coeffs.len() });
        }
        let mut e = self.zero(level);
        let s = self.abs_degree(level - 1);
        for (i, c) in coeffs.iter().enumerate() {
            if c.tower != *self || c.level != level - 1 {
                return Err(Error::TowerMismatch);
            }
            e.coords[i * s..(i + 1) * s].clone_from_slice(&c.coords);
        }
        Ok(e)
    }

    fn mul_flat(&self, level: usize, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let table = &self.0.tables[level];
        let (an, ad) = to_integers(a);
        let (bn, bd) = to_integers(b);
        let dim = table.dim;
        let mut acc = vec![BigInt::zero(); dim];
        for (i, x) in an.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in bn.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let p = x * y;
                for (k, c) in &table.entries[i * dim + j] {
                    if c.is_one() {
                        acc[*k] += &p;
                    } else {
                        acc[*k] += &p * c;
                    }
                }
            }
        }
        let den = ad * bd * &table.den;
        acc.into_iter()
            .map(|n| if n.is_zero() { Rational::zero() } else { Rational::new(n, den.clone()) })
            .collect()
    }

    /// Inverse by solving `a · x = 1` as a linear system over the level
    /// below. The system is inconsistent exactly when `a` is a zero divisor,
    /// i.e. the defining polynomial is reducible.
    fn inv_flat(&self, level: usize, a: &[Rational]) -> Result<Vec<Rational>> {
        if is_zero_flat(a) {
            return Err(Error::DivisionByZero);
        }
        if level == 0 {
            return Ok(vec![a[0].recip()]);
        }
        let d = self.degree(level);
        let a = FieldElement { tower: self.clone(), level, coords: a.to_vec() };
        let x = self.generator(level);
        let mut columns = Vec::with_capacity(d);
        let mut power = a;
        for j in 0..d {
            columns.push(power.coeffs_below());
            if j + 1 < d {
                power = &power * &x;
            }
        }
        let m = Matrix::from_columns(self.field(level - 1), d, &columns)?;
        let mut rhs = vec![self.zero(level - 1); d];
        rhs[0] = self.one(level - 1);
        match m.solve(&rhs)? {
            Some(sol) => Ok(self.from_coeffs_below(level, &sol)?.coords),
            None => Err(Error::NonInvertible { level, name: self.name(level).to_string() }),
        }
    }
}

impl TowerData {
    fn mul_recursive(&self, level: usize, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        if level == 0 {
            return vec![&a[0] * &b[0]];
        }
        let d = self.extensions[level - 1].degree;
        let s = self.abs_degrees[level - 1];
        let mut prod: Vec<Vec<Rational>> = vec![vec![Rational::zero(); s]; 2 * d - 1];
        for i in 0..d {
            let ai = &a[i * s..(i + 1) * s];
            if is_zero_flat(ai) {
                continue;
            }
            for j in 0..d {
                let bj = &b[j * s..(j + 1) * s];
                if is_zero_flat(bj) {
                    continue;
                }
                let p = self.mul_recursive(level - 1, ai, bj);
                add_assign_flat(&mut prod[i + j], &p);
            }
        }
        let modulus = &self.extensions[level - 1].modulus;
        for k in (d..2 * d - 1).rev() {
            let c = std::mem::replace(&mut prod[k], vec![Rational::zero(); s]);
            if is_zero_flat(&c) {
                continue;
            }
            for (j, mj) in modulus.iter().take(d).enumerate() {
                if is_zero_flat(mj) {
                    continue;
                }
                let p = self.mul_recursive(level - 1, &c, mj);
                sub_assign_flat(&mut prod[k - d + j], &p);
            }
        }
        prod.truncate(d);
        prod.into_iter().flatten().collect()
    }

    fn structure_table(&self, level: usize) -> MulTable {
        let dim = self.abs_degrees[level];
        let unit = |i: usize| {
            let mut v = vec![Rational::zero(); dim];
            v[i] = Rational::one();
            v
        };
        let products: Vec<Vec<Rational>> = (0..dim * dim)
            .map(|ij| self.mul_recursive(level, &unit(ij / dim), &unit(ij % dim)))
            .collect();
        let den = products
            .iter()
            .flatten()
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let entries = products
            .iter()
            .map(|p| {
                p.iter()
                    .enumerate()
                    .filter(|(_, q)| !q.is_zero())
                    .map(|(k, q)| (k, q.numer() * (&den / q.denom())))
                    .collect()
            })
            .collect();
        MulTable { dim, den, entries }
    }
}

fn to_integers(a: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let den = a.iter().fold(BigInt::one(), |acc, q| if q.denom().is_one() { acc } else { acc.lcm(q.denom()) });
    let numers = a
        .iter()
        .map(|q| if q.denom() == &den { q.numer().clone() } else { q.numer() * (&den / q.denom()) })
        .collect();
    (numers, den)
}

fn is_zero_flat(a: &[Rational]) -> bool {
    a.iter().all(Zero::is_zero)
}

fn add_assign_flat(acc: &mut [Rational], x: &[Rational]) {
    for (a, b) in acc.iter_mut().zip(x) {
        *a += b;
    }
}

fn sub_assign_flat(acc: &mut [Rational], x: &[Rational]) {
    for (a, b) in acc.iter_mut().zip(x) {
        *a -= b;
    }
}

/// An element of one level of a [`FieldTower`].
#[derive(Clone)]
pub struct FieldElement {
    tower: FieldTower,
    level: usize,
    coords: Vec<Rational>,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.level == other.level && self.coords == other.coords && self.tower == other.tower
    }
}

impl FieldElement {
    pub fn tower(&self) -> &FieldTower {
        &self.tower
    }

    pub fn level(&self) -> usize {
        self.level
    }

    /// Flat rational coordinates over the monomial product basis.
    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        is_zero_flat(&self.coords)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && is_zero_flat(&self.coords[1..])
    }

    /// Coefficients over the level directly below, lowest power first.
    pub fn coeffs_below(&self) -> Vec<FieldElement> {
        assert!(self.level >= 1, "rationals have no coefficients below");
        let s = self.tower.abs_degree(self.level - 1);
        self.coords
            .chunks(s)
            .map(|c| FieldElement { tower: self.tower.clone(), level: self.level - 1, coords: c.to_vec() })
            .collect()
    }

    /// Canonical image of this element in a higher level of its tower.
    pub fn embed(&self, level: usize) -> FieldElement {
        assert!(level >= self.level, "cannot embed into a lower level");
        let mut coords = self.coords.clone();
        coords.resize(self.tower.abs_degree(level), Rational::zero());
        FieldElement { tower: self.tower.clone(), level, coords }
    }

    /// True when this element lies in the image of level `level`.
    pub fn lies_in(&self, level: usize) -> bool {
        level >= self.level || is_zero_flat(&self.coords[self.tower.abs_degree(level)..])
    }

    fn check(&self, other: &FieldElement) {
        assert!(
            self.level == other.level && self.tower == other.tower,
            "arithmetic between elements of different fields"
        );
    }

    pub fn inv(&self) -> Result<FieldElement> {
        let coords = self.tower.inv_flat(self.level, &self.coords)?;
        Ok(FieldElement { tower: self.tower.clone(), level: self.level, coords })
    }

    pub fn checked_div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other);
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.tower.one(self.level);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn scale(&self, q: &Rational) -> FieldElement {
        let coords = self.coords.iter().map(|c| c * q).collect();
        FieldElement { tower: self.tower.clone(), level: self.level, coords }
    }
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.check(rhs);
        let coords = self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect();
        FieldElement { tower: self.tower.clone(), level: self.level, coords }
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.check(rhs);
        let coords = self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect();
        FieldElement { tower: self.tower.clone(), level: self.level, coords }
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.check(rhs);
        let coords = self.tower.mul_flat(self.level, &self.coords, &rhs.coords);
        FieldElement { tower: self.tower.clone(), level: self.level, coords }
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        let coords = self.coords.iter().map(|c| -c).collect();
        FieldElement { tower: self.tower.clone(), level: self.level, coords }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.level == 0 {
            return write!(f, "{}", self.coords[0]);
        }
        let p = Polynomial::new(self.tower.field(self.level - 1), self.coeffs_below());
        write!(f, "{}", p.display(self.tower.name(self.level)))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// One level of a tower viewed as a [`Field`].
#[derive(Clone, PartialEq)]
pub struct TowerField {
    tower: FieldTower,
    level: usize,
}

impl fmt::Debug for TowerField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TowerField({})", self.tower.name(self.level))
    }
}

impl TowerField {
    pub fn tower(&self) -> &FieldTower {
        &self.tower
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn degree_over_q(&self) -> usize {
        self.tower.abs_degree(self.level)
    }
}

impl Field for TowerField {
    type Elem = FieldElement;

    fn zero(&self) -> FieldElement {
        self.tower.zero(self.level)
    }
    fn one(&self) -> FieldElement {
        self.tower.one(self.level)
    }
    fn from_rational(&self, q: &Rational) -> FieldElement {
        self.tower.from_rational(self.level, q)
    }
    fn is_zero(&self, a: &FieldElement) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &FieldElement) -> bool {
        a.is_one()
    }
    fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        a + b
    }
    fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        a - b
    }
    fn neg(&self, a: &FieldElement) -> FieldElement {
        -a
    }
    fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        a * b
    }
    fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        a.inv()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y8_plus_1() -> FieldTower {
        FieldTower::new(vec![LevelSpec::integer("a", &[1, 0, 0, 0, 0, 0, 0, 0, 1], 1)]).unwrap()
    }

    #[test]
    fn alpha4_squared_is_minus_one() {
        let t = y8_plus_1();
        let a = t.generator(1);
        let a4 = a.pow(4);
        assert_eq!(&a4 * &a4, t.from_i64(1, -1));
    }

    #[test]
    fn alpha_inverse_is_minus_alpha7() {
        let t = y8_plus_1();
        let a = t.generator(1);
        let inv = a.inv().unwrap();
        assert_eq!(inv, -&a.pow(7));
        assert!((&a * &inv).is_one());
    }

    #[test]
    fn zero_has_no_inverse() {
        let t = y8_plus_1();
        assert_eq!(t.zero(1).inv().unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn reducible_modulus_is_reported() {
        // Y^2 - 1 = (Y - 1)(Y + 1)
        let t = FieldTower::new(vec![LevelSpec::integer("y", &[-1, 0, 1], 1)]).unwrap();
        let y = t.generator(1);
        let err = (&y - &t.one(1)).inv().unwrap_err();
        assert_eq!(err, Error::NonInvertible { level: 1, name: "y".into() });
    }

    #[test]
    fn two_level_tower_arithmetic() {
        // K = Q[h]/(h^4+1), L = K[a]/(a^8-3)
        let t = FieldTower::new(vec![
            LevelSpec::integer("h", &[1, 0, 0, 0, 1], 1),
            LevelSpec::integer("a", &[-3, 0, 0, 0, 0, 0, 0, 0, 1], 4),
        ])
        .unwrap();
        assert_eq!(t.abs_degree(2), 32);
        let a = t.generator(2);
        let h = t.generator(1).embed(2);
        assert_eq!(a.pow(8), t.from_i64(2, 3));
        assert_eq!(h.pow(4), t.from_i64(2, -1));
        let x = &(&a * &h) + &t.from_i64(2, 2);
        let xi = x.inv().unwrap();
        assert!((&x * &xi).is_one());
        assert_eq!(x.to_string(), "h*a + 2");
    }

    #[test]
    fn construction_rejects_bad_levels() {
        assert!(FieldTower::new(vec![LevelSpec::integer("a", &[1, 2], 1)]).is_err());
        assert!(FieldTower::new(vec![LevelSpec::integer("a", &[1], 1)]).is_err());
        let bad_shape = LevelSpec { name: "a".into(), min_poly: vec![vec![rat(1), rat(0)], vec![rat(1)]] };
        assert!(FieldTower::new(vec![bad_shape]).is_err());
    }

    #[test]
    fn display_of_elements() {
        let t = y8_plus_1();
        let a = t.generator(1);
        let x = &(&a.pow(2) + &a.pow(6)) - &t.from_i64(1, 3);
        assert_eq!(x.to_string(), "a^6 + a^2 - 3");
    }
}
