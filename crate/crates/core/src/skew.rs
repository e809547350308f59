//! The skew polynomial ring `L[X; θ]` of θ-polynomials `Σ p_i X^{θ^i}`,
//! where multiplication follows composition:
//! `(Σ p_i X^{θ^i}) · (Σ q_j X^{θ^j}) = Σ p_i θ^i(q_j) X^{θ^{i+j}}`.

use std::fmt;

use crate::algebra::{Degree, Echelon, FieldElement, Matrix};
use crate::error::{Error, Result};
use crate::galois::Automorphism;

#[derive(Clone)]
pub struct SkewPolynomial {
    theta: Automorphism,
    coeffs: Vec<FieldElement>,
}

impl PartialEq for SkewPolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.theta.same_as(&other.theta)
    }
}

impl SkewPolynomial {
    /// `Σ coeffs[i] X^{θ^i}`. Coefficients must lie in the top field.
    pub fn new(theta: &Automorphism, mut coeffs: Vec<FieldElement>) -> Self {
        for c in &coeffs {
            assert!(
                c.tower() == theta.tower() && c.level() == theta.top(),
                "coefficients must lie in the top field of θ"
            );
        }
        while coeffs.last().is_some_and(FieldElement::is_zero) {
            coeffs.pop();
        }
        Self { theta: theta.clone(), coeffs }
    }

    pub fn zero(theta: &Automorphism) -> Self {
        Self { theta: theta.clone(), coeffs: Vec::new() }
    }

    /// The unity `X^{θ^0}`.
    pub fn one(theta: &Automorphism) -> Self {
        Self::monomial(theta, theta.tower().one(theta.top()), 0)
    }

    /// `c · X^{θ^i}`.
    pub fn monomial(theta: &Automorphism, c: FieldElement, i: usize) -> Self {
        let mut coeffs = vec![theta.tower().zero(theta.top()); i];
        coeffs.push(c);
        Self::new(theta, coeffs)
    }

    /// `X^{θ^i}`.
    pub fn x_power(theta: &Automorphism, i: usize) -> Self {
        Self::monomial(theta, theta.tower().one(theta.top()), i)
    }

    pub fn theta(&self) -> &Automorphism {
        &self.theta
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.theta.tower().zero(self.theta.top()))
    }

    /// The θ-degree.
    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(FieldElement::is_one)
    }

    pub fn leading(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    fn check(&self, other: &Self) {
        assert!(self.theta.same_as(&other.theta), "θ-polynomials over different automorphisms");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect();
        Self::new(&self.theta, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) - &other.coeff(i)).collect();
        Self::new(&self.theta, coeffs)
    }

    pub fn neg(&self) -> Self {
        Self::new(&self.theta, self.coeffs.iter().map(|c| -c).collect())
    }

    /// `c · self`, scaling every coefficient on the left.
    pub fn scale_left(&self, c: &FieldElement) -> Self {
        Self::new(&self.theta, self.coeffs.iter().map(|p| c * p).collect())
    }

    /// The ring product `self · other`; evaluates as `self(other(v))`.
    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.theta);
        }
        let top = self.theta.top();
        let mut out = vec![self.theta.tower().zero(top); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, p) in self.coeffs.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for (j, q) in other.coeffs.iter().enumerate() {
                if q.is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + &(p * &self.theta.apply(q, i));
            }
        }
        Self::new(&self.theta, out)
    }

    /// `P(v) = Σ p_i θ^i(v)`.
    pub fn evaluate(&self, v: &FieldElement) -> FieldElement {
        let top = self.theta.top();
        let mut acc = self.theta.tower().zero(top);
        if v.is_zero() {
            return acc;
        }
        for (i, p) in self.coeffs.iter().enumerate() {
            if !p.is_zero() {
                acc = &acc + &(p * &self.theta.apply(v, i));
            }
        }
        acc
    }

    /// Left Euclidean division: `self = q · divisor + r`, `deg r < deg divisor`.
    pub fn left_div(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check(divisor);
        let lead = divisor.leading().ok_or(Error::DivisionByZeroPolynomial)?;
        let d = divisor.coeffs.len() - 1;
        let mut quot = Self::zero(&self.theta);
        let mut rem = self.clone();
        while rem.coeffs.len() > d {
            let e = rem.coeffs.len() - 1 - d;
            // (c X^e) · divisor has leading coefficient c θ^e(lead)
            let c = rem.leading().unwrap().checked_div(&self.theta.apply(lead, e))?;
            let step = Self::monomial(&self.theta, c, e);
            rem = rem.sub(&step.mul(divisor));
            quot = quot.add(&step);
        }
        Ok((quot, rem))
    }

    /// Right Euclidean division: `self = divisor · q + r`, `deg r < deg divisor`.
    pub fn right_div(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check(divisor);
        let lead = divisor.leading().ok_or(Error::DivisionByZeroPolynomial)?;
        let d = divisor.coeffs.len() - 1;
        let mut quot = Self::zero(&self.theta);
        let mut rem = self.clone();
        while rem.coeffs.len() > d {
            let e = rem.coeffs.len() - 1 - d;
            // divisor · (c X^e) has leading coefficient lead · θ^d(c)
            let c = self.theta.apply_inverse(&rem.leading().unwrap().checked_div(lead)?, d);
            let step = Self::monomial(&self.theta, c, e);
            rem = rem.sub(&divisor.mul(&step));
            quot = quot.add(&step);
        }
        Ok((quot, rem))
    }

    /// Matrix over K of the K-linear map `v ↦ P(v)` in the monomial basis of L.
    pub fn linear_map_matrix(&self) -> Matrix<crate::algebra::TowerField> {
        let tower = self.theta.tower();
        let top = self.theta.top();
        let m = tower.degree(top);
        let columns: Vec<Vec<FieldElement>> = (0..m)
            .map(|j| self.evaluate(&basis_element(&self.theta, j)).coeffs_below())
            .collect();
        Matrix::from_columns(self.theta.base_field(), m, &columns).expect("square by construction")
    }

    /// A K-basis of `{v ∈ L : P(v) = 0}`.
    pub fn root_space(&self) -> Result<Vec<FieldElement>> {
        let tower = self.theta.tower();
        let top = self.theta.top();
        self.linear_map_matrix()
            .kernel()?
            .into_iter()
            .map(|coords| tower.from_coeffs_below(top, &coords))
            .collect()
    }

    /// The unique monic θ-polynomial of θ-degree `dim_K span(V)` vanishing on
    /// `span_K(V)`, built one basis vector at a time as
    /// `P ← (X^{θ} - θ(P(v))/P(v) X^{θ^0}) · P`.
    ///
    /// Fails with [`Error::InadmissibleAutomorphism`] if `P(v) = 0` for a
    /// vector `v` outside the span so far, which cannot happen when the
    /// characteristic polynomial of θ is square-free.
    pub fn annihilator(theta: &Automorphism, vectors: &[FieldElement]) -> Result<Self> {
        let basis = k_basis(theta, vectors)?;
        let mut p = Self::one(theta);
        for v in &basis {
            let u = p.evaluate(v);
            if u.is_zero() {
                return Err(Error::InadmissibleAutomorphism(format!(
                    "the partial annihilator of degree {} vanishes at {v}, outside its span",
                    p.degree()
                )));
            }
            let ratio = theta.apply(&u, 1).checked_div(&u)?;
            let factor = Self::new(theta, vec![-&ratio, theta.tower().one(theta.top())]);
            p = factor.mul(&p);
        }
        Ok(p)
    }

    /// The monic right generator `min(I_X)` of the left ideal of
    /// θ-polynomials vanishing at every `x_j`. For degrees `s = 0, 1, …`
    /// solves `Σ_{i<s} a_i θ^i(x_j) = -θ^s(x_j)` over L and returns the
    /// first solvable `s`. The all-zero input gives the unity.
    pub fn min_ideal_poly(theta: &Automorphism, points: &[FieldElement]) -> Result<Self> {
        let points = points.iter().map(|x| theta.lift(x)).collect::<Result<Vec<_>>>()?;
        let n = theta.order();
        let orbits: Vec<Vec<FieldElement>> = points.iter().map(|x| theta.orbit(x, n + 1)).collect();
        // Rows are points, column i holds θ^i of each point. The first
        // non-pivot column s is the lowest power expressible through the
        // lower ones, and the reduced column gives the coefficients.
        let a = Matrix::from_fn(theta.top_field(), points.len(), n + 1, |j, i| orbits[j][i].clone());
        let Echelon { reduced, pivots } = a.echelon()?;
        if let Some(s) = (0..=n).find(|&s| pivots.get(s) != Some(&s)) {
            let mut coeffs: Vec<FieldElement> = (0..s).map(|i| -reduced.get(i, s)).collect();
            coeffs.push(theta.tower().one(theta.top()));
            return Ok(Self::new(theta, coeffs));
        }
        unreachable!("X^{{θ^n}} - X^{{θ^0}} vanishes on all of L")
    }
}

/// The `j`-th monomial basis element of L over K.
pub fn basis_element(theta: &Automorphism, j: usize) -> FieldElement {
    let tower = theta.tower();
    let top = theta.top();
    let mut coeffs = vec![tower.zero(top - 1); j];
    coeffs.push(tower.one(top - 1));
    tower.from_coeffs_below(top, &coeffs).expect("index below degree")
}

/// Greedy K-basis of `span_K(vectors)`, keeping vectors in input order.
pub fn k_basis(theta: &Automorphism, vectors: &[FieldElement]) -> Result<Vec<FieldElement>> {
    let m = theta.degree();
    let mut basis: Vec<FieldElement> = Vec::new();
    let mut columns: Vec<Vec<FieldElement>> = Vec::new();
    for v in vectors {
        let v = theta.lift(v)?;
        if v.is_zero() {
            continue;
        }
        columns.push(v.coeffs_below());
        let rank = Matrix::from_columns(theta.base_field(), m, &columns)?.rank()?;
        if rank == columns.len() {
            basis.push(v);
        } else {
            columns.pop();
        }
    }
    Ok(basis)
}

impl fmt::Display for SkewPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "X^{{θ^{i}}}")?;
            } else {
                write!(f, "({c})·X^{{θ^{i}}}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SkewPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;
    use crate::random::Sampler;

    fn random_poly(theta: &Automorphism, s: &mut Sampler, degree: usize) -> SkewPolynomial {
        let t = theta.tower();
        let mut coeffs: Vec<FieldElement> = (0..degree).map(|_| s.element(t, t.top())).collect();
        coeffs.push(s.nonzero_element(t, t.top()));
        SkewPolynomial::new(theta, coeffs)
    }

    #[test]
    fn x_times_alpha() {
        let theta = presets::roots8();
        let a = theta.tower().generator(1);
        let p = SkewPolynomial::x_power(&theta, 1).mul(&SkewPolynomial::monomial(&theta, a.clone(), 0));
        assert_eq!(p, SkewPolynomial::monomial(&theta, a.pow(3), 1));
    }

    #[test]
    fn unity_is_neutral() {
        let theta = presets::roots8();
        let mut s = Sampler::new(1);
        let p = random_poly(&theta, &mut s, 3);
        let one = SkewPolynomial::one(&theta);
        assert_eq!(p.mul(&one), p);
        assert_eq!(one.mul(&p), p);
    }

    #[test]
    fn composition_of_x_with_itself() {
        let theta = presets::roots8();
        let a = theta.tower().generator(1);
        let x = SkewPolynomial::x_power(&theta, 1);
        let xx = x.mul(&x);
        assert_eq!(xx.evaluate(&a), -&a);
        assert_eq!(xx.evaluate(&a), x.evaluate(&x.evaluate(&a)));
    }

    #[test]
    fn evaluation_examples() {
        let theta = presets::roots8();
        let t = theta.tower().clone();
        let a = t.generator(1);
        let p = SkewPolynomial::x_power(&theta, 1).sub(&SkewPolynomial::one(&theta));
        assert!(p.evaluate(&(&a.pow(2) + &a.pow(6))).is_zero());
        assert_eq!(p.evaluate(&a), &a.pow(3) - &a);
        assert!(!p.evaluate(&a).is_zero());
        assert!(p.evaluate(&t.zero(1)).is_zero());
    }

    #[test]
    fn division_edge_cases() {
        let theta = presets::cyclotomic(5, 2).unwrap();
        let mut s = Sampler::new(2);
        let b = random_poly(&theta, &mut s, 2);
        let one = SkewPolynomial::one(&theta);
        let zero = SkewPolynomial::zero(&theta);
        assert_eq!(b.left_div(&b).unwrap(), (one.clone(), zero.clone()));
        assert_eq!(b.right_div(&b).unwrap(), (one, zero.clone()));
        let a = random_poly(&theta, &mut s, 1);
        assert_eq!(a.left_div(&b).unwrap(), (zero.clone(), a.clone()));
        assert_eq!(a.right_div(&b).unwrap(), (zero.clone(), a.clone()));
        assert_eq!(a.left_div(&zero).unwrap_err(), Error::DivisionByZeroPolynomial);
        assert_eq!(a.right_div(&zero).unwrap_err(), Error::DivisionByZeroPolynomial);
    }

    #[test]
    fn division_round_trips() {
        let theta = presets::cyclotomic(7, 3).unwrap();
        let mut s = Sampler::new(3);
        for _ in 0..10 {
            let a = random_poly(&theta, &mut s, 5);
            let b = random_poly(&theta, &mut s, 2);
            let (q, r) = a.left_div(&b).unwrap();
            assert!(r.degree() < b.degree());
            assert_eq!(q.mul(&b).add(&r), a);
            let (q, r) = a.right_div(&b).unwrap();
            assert!(r.degree() < b.degree());
            assert_eq!(b.mul(&q).add(&r), a);
            let c = random_poly(&theta, &mut s, 2);
            assert_eq!(b.mul(&c).right_div(&b).unwrap(), (c.clone(), SkewPolynomial::zero(&theta)));
            assert_eq!(c.mul(&b).left_div(&b).unwrap(), (c, SkewPolynomial::zero(&theta)));
        }
    }

    #[test]
    fn roots8_root_space_has_dimension_two() {
        let theta = presets::roots8();
        let t = theta.tower().clone();
        let a = t.generator(1);
        let p = SkewPolynomial::x_power(&theta, 1).sub(&SkewPolynomial::one(&theta));
        let roots = p.root_space().unwrap();
        assert_eq!(roots.len(), 2);
        for r in &roots {
            assert!(p.evaluate(r).is_zero());
        }
        let mut with_expected = roots.clone();
        with_expected.push(t.one(1));
        with_expected.push(&a.pow(2) + &a.pow(6));
        assert_eq!(k_basis(&theta, &with_expected).unwrap().len(), 2);
    }

    #[test]
    fn unity_has_trivial_root_space() {
        let theta = presets::kummer();
        assert!(SkewPolynomial::one(&theta).root_space().unwrap().is_empty());
    }

    #[test]
    fn annihilator_base_cases() {
        let theta = presets::cyclotomic(5, 2).unwrap();
        let t = theta.tower().clone();
        let p = SkewPolynomial::annihilator(&theta, &[t.one(1)]).unwrap();
        assert_eq!(p, SkewPolynomial::x_power(&theta, 1).sub(&SkewPolynomial::one(&theta)));

        let v = &t.generator(1) + &t.from_i64(1, 2);
        let two_v = &v + &v;
        let p = SkewPolynomial::annihilator(&theta, &[v.clone(), two_v, v.clone()]).unwrap();
        assert_eq!(p.degree(), Degree::Finite(1));
        let ratio = theta.apply(&v, 1).checked_div(&v).unwrap();
        let expected = SkewPolynomial::new(&theta, vec![-&ratio, t.one(1)]);
        assert_eq!(p, expected);
        assert_eq!(SkewPolynomial::min_ideal_poly(&theta, &[v]).unwrap(), expected);
    }

    #[test]
    fn annihilator_under_roots8_hits_inadmissibility() {
        let theta = presets::roots8();
        let t = theta.tower().clone();
        let a = t.generator(1);
        let v = &a.pow(2) + &a.pow(6);
        let err = SkewPolynomial::annihilator(&theta, &[t.one(1), v]).unwrap_err();
        assert!(matches!(err, Error::InadmissibleAutomorphism(_)));
    }

    #[test]
    fn min_ideal_poly_of_zero_word_is_unity() {
        let theta = presets::roots8();
        let t = theta.tower().clone();
        let p = SkewPolynomial::min_ideal_poly(&theta, &[t.zero(1), t.zero(1)]).unwrap();
        assert_eq!(p, SkewPolynomial::one(&theta));
    }

    #[test]
    fn min_ideal_poly_of_rank_example_has_degree_four() {
        let theta = presets::roots8();
        let t = theta.tower().clone();
        let a = t.generator(1);
        let x = vec![
            t.one(1),
            a.clone(),
            a.pow(2),
            a.pow(4),
            a.pow(5),
            &a.pow(4).scale(&crate::algebra::rat(3)) + &t.from_i64(1, 2),
        ];
        let p = SkewPolynomial::min_ideal_poly(&theta, &x).unwrap();
        assert_eq!(p.degree(), Degree::Finite(4));
        assert!(p.is_monic());
        assert!(x.iter().all(|v| p.evaluate(v).is_zero()));
    }
}
