//! Automorphisms of the top extension `K ⊆ L` of a tower, where `K` is the
//! level directly below the top. An automorphism is determined by the image
//! of the top generator and fixes `K` pointwise.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{rat, Field, FieldElement, FieldTower, Matrix, Polynomial, TowerField};
use crate::error::{Error, Result};

/// The three hypotheses under which generalized Gabidulin codes behave like
/// their finite-field counterparts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdmissibilityReport {
    /// `gcd(χ, χ') = 1` for the characteristic polynomial `χ` of θ over K.
    pub square_free: bool,
    /// `ker(M - I)` is one-dimensional, i.e. the fixed field of θ is K.
    pub fixed_field_is_base: bool,
    /// θ has order `m = [L : K]`.
    pub full_order: bool,
    pub order: usize,
    pub degree: usize,
}

impl AdmissibilityReport {
    pub fn is_admissible(&self) -> bool {
        self.square_free && self.fixed_field_is_base && self.full_order
    }
}

struct Inner {
    tower: FieldTower,
    image: FieldElement,
    /// `powers[i]` is the matrix of θ^i over K, for `0 <= i < order`.
    powers: Vec<Matrix<TowerField>>,
    char_poly: Polynomial<TowerField>,
    fixed_dim: usize,
    report: AdmissibilityReport,
}

/// A K-automorphism θ of L. Cheap to clone; all derived data is computed at
/// construction.
#[derive(Clone)]
pub struct Automorphism(Arc<Inner>);

impl fmt::Debug for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "θ: {} ↦ {}", self.0.tower.name(self.top()), self.0.image)
    }
}

impl Automorphism {
    /// The automorphism sending the top generator to `image`.
    ///
    /// Fails unless the defining polynomial of the top level vanishes at
    /// `image` and some power θ^j with `1 <= j <= m` is the identity.
    pub fn new(tower: &FieldTower, image: FieldElement) -> Result<Self> {
        let top = tower.top();
        if top == 0 {
            return Err(Error::InvalidAutomorphism("the tower has no extension level".into()));
        }
        if image.tower() != tower || image.level() != top {
            return Err(Error::InvalidAutomorphism("image must lie in the top field of the tower".into()));
        }
        let m = tower.degree(top);
        let base = tower.field(top - 1);
        let at_image = tower
            .modulus(top)
            .coeffs()
            .iter()
            .rev()
            .fold(tower.zero(top), |acc, c| &(&acc * &image) + &c.embed(top));
        if !at_image.is_zero() {
            return Err(Error::InvalidAutomorphism(format!(
                "the defining polynomial of {} does not vanish at {image}",
                tower.name(top)
            )));
        }

        let mut columns = Vec::with_capacity(m);
        let mut power = tower.one(top);
        for _ in 0..m {
            columns.push(power.coeffs_below());
            power = &power * &image;
        }
        let matrix = Matrix::from_columns(base.clone(), m, &columns)?;
        let identity = Matrix::identity(base.clone(), m);

        let mut powers = vec![identity.clone()];
        let mut current = matrix.clone();
        let mut order = None;
        for j in 1..=m {
            if current == identity {
                order = Some(j);
                break;
            }
            powers.push(current.clone());
            current = matrix.mul(&current);
        }
        let Some(order) = order else {
            return Err(Error::InvalidAutomorphism(format!(
                "no power θ^j with j <= {m} is the identity"
            )));
        };

        let char_poly = characteristic_polynomial(&matrix)?;
        let fixed_dim = matrix.sub(&identity).kernel()?.len();
        let report = AdmissibilityReport {
            square_free: char_poly.is_square_free()?,
            fixed_field_is_base: fixed_dim == 1,
            full_order: order == m,
            order,
            degree: m,
        };
        Ok(Automorphism(Arc::new(Inner {
            tower: tower.clone(),
            image,
            powers,
            char_poly,
            fixed_dim,
            report,
        })))
    }

    /// The identity of L.
    pub fn identity(tower: &FieldTower) -> Result<Self> {
        Self::new(tower, tower.generator(tower.top()))
    }

    pub fn tower(&self) -> &FieldTower {
        &self.0.tower
    }

    pub fn top(&self) -> usize {
        self.0.tower.top()
    }

    /// L as a field.
    pub fn top_field(&self) -> TowerField {
        self.0.tower.field(self.top())
    }

    /// K as a field.
    pub fn base_field(&self) -> TowerField {
        self.0.tower.field(self.top() - 1)
    }

    /// `m = [L : K]`.
    pub fn degree(&self) -> usize {
        self.0.report.degree
    }

    pub fn order(&self) -> usize {
        self.0.report.order
    }

    pub fn generator_image(&self) -> &FieldElement {
        &self.0.image
    }

    /// Matrix of θ over the monomial basis of L over K.
    pub fn matrix(&self) -> &Matrix<TowerField> {
        &self.0.powers[1 % self.order()]
    }

    pub fn matrix_power(&self, i: usize) -> &Matrix<TowerField> {
        &self.0.powers[i % self.order()]
    }

    pub fn char_poly(&self) -> &Polynomial<TowerField> {
        &self.0.char_poly
    }

    /// `dim_K ker(M - I)`, the K-dimension of the fixed field of θ.
    pub fn fixed_field_dimension(&self) -> usize {
        self.0.fixed_dim
    }

    pub fn admissibility(&self) -> AdmissibilityReport {
        self.0.report
    }

    pub fn is_admissible(&self) -> bool {
        self.0.report.is_admissible()
    }

    /// Lifts `v` to L, rejecting elements of another tower.
    pub fn lift(&self, v: &FieldElement) -> Result<FieldElement> {
        if v.tower() != self.tower() {
            return Err(Error::TowerMismatch);
        }
        Ok(v.embed(self.top()))
    }

    /// θ^i(v), via the cached matrix power. `v` must lie in L.
    pub fn apply(&self, v: &FieldElement, i: usize) -> FieldElement {
        assert_eq!(v.level(), self.top(), "θ acts on the top field");
        if i % self.order() == 0 {
            return v.clone();
        }
        let coords = self.matrix_power(i).mul_vec(&v.coeffs_below());
        self.0.tower.from_coeffs_below(self.top(), &coords).expect("matrix preserves shape")
    }

    /// θ^i(v) by substituting the generator image into the coordinates of
    /// `v`, i times over.
    pub fn apply_by_substitution(&self, v: &FieldElement, i: usize) -> FieldElement {
        assert_eq!(v.level(), self.top(), "θ acts on the top field");
        let top = self.top();
        let mut x = v.clone();
        for _ in 0..i % self.order() {
            x = x
                .coeffs_below()
                .iter()
                .rev()
                .fold(self.0.tower.zero(top), |acc, c| &(&acc * &self.0.image) + &c.embed(top));
        }
        x
    }

    /// θ^{-i}(v).
    pub fn apply_inverse(&self, v: &FieldElement, i: usize) -> FieldElement {
        let n = self.order();
        self.apply(v, (n - i % n) % n)
    }

    /// `[θ^0(v), θ^1(v), …, θ^{count-1}(v)]`.
    pub fn orbit(&self, v: &FieldElement, count: usize) -> Vec<FieldElement> {
        (0..count).map(|i| self.apply(v, i)).collect()
    }

    /// Whether `self` and `other` act on the same tower by the same map.
    pub fn same_as(&self, other: &Automorphism) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.tower == other.0.tower && self.0.image == other.0.image)
    }
}

/// `det(Y·I - A)` by the Faddeev–LeVerrier recurrence. Needs characteristic
/// zero, which every level of a tower over Q has.
pub fn characteristic_polynomial<F: Field>(a: &Matrix<F>) -> Result<Polynomial<F>> {
    let f = a.field().clone();
    let n = a.rows();
    assert_eq!(n, a.cols(), "characteristic polynomial of a non-square matrix");
    let identity = Matrix::identity(f.clone(), n);
    let mut coeffs = vec![f.zero(); n + 1];
    coeffs[n] = f.one();
    let mut m_k = Matrix::zeros(f.clone(), n, n);
    for k in 1..=n {
        m_k = a.mul(&m_k).add(&identity.scale(&coeffs[n - k + 1]));
        let tr = a.mul(&m_k).trace();
        coeffs[n - k] = f.neg(&f.div(&tr, &f.from_rational(&rat(k as i64)))?);
    }
    Ok(Polynomial::new(f, coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{LevelSpec, Rationals};
    use crate::presets;
    use crate::random::Sampler;

    /// Independent route: interpolate `c ↦ det(c·I - A)` through `n + 1`
    /// integer points.
    fn char_poly_by_interpolation(a: &Matrix<TowerField>) -> Polynomial<TowerField> {
        let f = a.field().clone();
        let n = a.rows();
        let xs: Vec<i64> = (0..=n as i64).collect();
        let identity = Matrix::identity(f.clone(), n);
        let mut acc = Polynomial::zero(f.clone());
        for (i, &xi) in xs.iter().enumerate() {
            let yi = identity.scale(&f.from_i64(xi)).sub(a).determinant().unwrap();
            let mut basis = Polynomial::constant(f.clone(), yi);
            for (j, &xj) in xs.iter().enumerate() {
                if i == j {
                    continue;
                }
                let factor = Polynomial::new(f.clone(), vec![f.from_i64(-xj), f.one()]);
                let denom = f.inv(&f.from_i64(xi - xj)).unwrap();
                basis = basis.mul(&factor).scale(&denom);
            }
            acc = acc.add(&basis);
        }
        acc
    }

    fn q_poly(field: &TowerField, c: &[i64]) -> Polynomial<TowerField> {
        Polynomial::new(field.clone(), c.iter().map(|&x| field.from_i64(x)).collect())
    }

    #[test]
    fn roots8_generator_image_and_fixed_points() {
        let theta = presets::roots8();
        let t = theta.tower().clone();
        let a = t.generator(1);
        assert_eq!(theta.apply(&a, 1), a.pow(3));
        assert_eq!(theta.apply(&a, 2), -&a);
        assert!(theta.apply(&t.one(1), 1).is_one());
        let v = &a.pow(2) + &a.pow(6);
        assert_eq!(theta.apply(&v, 1), v);
    }

    #[test]
    fn roots8_char_poly_and_report() {
        let theta = presets::roots8();
        let expected = q_poly(&theta.base_field(), &[1, 0, 0, 0, -2, 0, 0, 0, 1]);
        assert_eq!(*theta.char_poly(), expected);
        assert_eq!(char_poly_by_interpolation(theta.matrix()), expected);
        let report = theta.admissibility();
        assert!(!report.square_free);
        assert!(!report.fixed_field_is_base);
        assert_eq!(report.order, 4);
        assert!(!report.full_order);
        assert_eq!(theta.fixed_field_dimension(), 2);
    }

    #[test]
    fn kummer_char_poly_is_y8_minus_1() {
        let theta = presets::kummer();
        let k = theta.base_field();
        assert_eq!(*theta.char_poly(), q_poly(&k, &[-1, 0, 0, 0, 0, 0, 0, 0, 1]));
        let report = theta.admissibility();
        assert!(report.is_admissible());
        assert_eq!(report.order, 8);
    }

    #[test]
    fn cyclotomic_orders() {
        let theta = presets::cyclotomic(5, 2).unwrap();
        assert_eq!(theta.order(), 4);
        assert!(theta.is_admissible());
        // gcd(3, 10) = 1 but 3 has order 5 modulo 11
        let theta = presets::cyclotomic(11, 3).unwrap();
        assert_eq!(theta.order(), 5);
        assert!(!theta.is_admissible());
        assert!(!theta.admissibility().full_order);
    }

    #[test]
    fn identity_char_poly_is_power_of_y_minus_1() {
        let t = FieldTower::new(vec![LevelSpec::integer("z", &[1, 1, 1, 1, 1], 1)]).unwrap();
        let id = Automorphism::identity(&t).unwrap();
        let f = id.base_field();
        let y_minus_1 = q_poly(&f, &[-1, 1]);
        let expected = (0..4).fold(Polynomial::one(f.clone()), |acc, _| acc.mul(&y_minus_1));
        assert_eq!(*id.char_poly(), expected);
        assert_eq!(id.order(), 1);
    }

    #[test]
    fn non_root_image_is_rejected() {
        let t = FieldTower::new(vec![LevelSpec::integer("a", &[1, 0, 0, 0, 0, 0, 0, 0, 1], 1)]).unwrap();
        let a = t.generator(1);
        assert!(matches!(Automorphism::new(&t, a.pow(2)), Err(Error::InvalidAutomorphism(_))));
        assert!(Automorphism::new(&FieldTower::rationals(), FieldTower::rationals().one(0)).is_err());
    }

    #[test]
    fn matrix_and_substitution_agree() {
        let mut s = Sampler::new(11);
        for theta in [presets::roots8(), presets::kummer(), presets::cyclotomic(7, 3).unwrap()] {
            let t = theta.tower().clone();
            for i in 0..10 {
                let v = s.element(&t, t.top());
                assert_eq!(theta.apply(&v, i), theta.apply_by_substitution(&v, i));
                assert_eq!(theta.apply_inverse(&theta.apply(&v, i), i), v);
            }
        }
    }

    #[test]
    fn homomorphism_and_base_fixing() {
        let mut s = Sampler::new(5);
        for theta in [presets::roots8(), presets::kummer(), presets::cyclotomic(5, 2).unwrap()] {
            let t = theta.tower().clone();
            let top = t.top();
            for _ in 0..50 {
                let a = s.element(&t, top);
                let b = s.element(&t, top);
                assert_eq!(theta.apply(&(&a + &b), 1), &theta.apply(&a, 1) + &theta.apply(&b, 1));
                assert_eq!(theta.apply(&(&a * &b), 1), &theta.apply(&a, 1) * &theta.apply(&b, 1));
                let c = s.element(&t, top - 1).embed(top);
                assert_eq!(theta.apply(&c, 1), c);
            }
        }
    }

    #[test]
    fn cayley_hamilton_and_square_free_implication() {
        for theta in [
            presets::roots8(),
            presets::kummer(),
            presets::cyclotomic(5, 2).unwrap(),
            presets::cyclotomic(7, 3).unwrap(),
            presets::cyclotomic(11, 3).unwrap(),
        ] {
            let m = theta.matrix();
            let f = m.field().clone();
            let n = m.rows();
            let value = theta.char_poly().coeffs().iter().rev().fold(Matrix::zeros(f.clone(), n, n), |acc, c| {
                acc.mul(m).add(&Matrix::identity(f.clone(), n).scale(c))
            });
            assert!(value.is_zero());
            let report = theta.admissibility();
            if report.square_free {
                assert!(report.fixed_field_is_base);
            }
        }
    }

    #[test]
    fn faddeev_leverrier_over_q() {
        let m = Matrix::from_rows(Rationals, vec![vec![rat(2), rat(1)], vec![rat(1), rat(3)]]).unwrap();
        let p = characteristic_polynomial(&m).unwrap();
        assert_eq!(p.coeffs(), &[rat(5), rat(-5), rat(1)]);
    }
}
