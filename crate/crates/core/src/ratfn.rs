//! Rational functions in (z, w) and the logarithmic Laplacian that turns
//! squared norms into metric data.
//!
//! Equality of fractions is decided by cross-multiplication, never by
//! sampling, so no gcd machinery is required for correctness. The stored
//! form is lightly canonicalized (common monomial factors stripped, the
//! denominator's lexicographically-leading coefficient scaled to 1) to
//! keep intermediate objects small and printing stable.

use std::fmt;

use crate::bipoly::{BiPoly, Var};
use crate::error::AlgebraError;
use crate::rational::GaussianRational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFn {
    num: BiPoly,
    den: BiPoly,
}

impl RatFn {
    pub fn new(num: BiPoly, den: BiPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        let mut f = Self { num, den };
        f.canonicalize();
        Ok(f)
    }

    pub fn zero() -> Self {
        Self {
            num: BiPoly::zero(),
            den: BiPoly::one(),
        }
    }

    pub fn from_poly(p: BiPoly) -> Self {
        Self {
            num: p,
            den: BiPoly::one(),
        }
    }

    pub fn num(&self) -> &BiPoly {
        &self.num
    }

    pub fn den(&self) -> &BiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn canonicalize(&mut self) {
        if self.num.is_zero() {
            self.den = BiPoly::one();
            return;
        }
        let (n, (na, nb)) = self.num.strip_monomial_content();
        let (d, (da, db)) = self.den.strip_monomial_content();
        let az = na.min(da);
        let aw = nb.min(db);
        self.num = BiPoly::monomial(na - az, nb - aw, GaussianRational::one()).mul(&n);
        self.den = BiPoly::monomial(da - az, db - aw, GaussianRational::one()).mul(&d);
        let lead = self
            .den
            .leading_coeff()
            .expect("nonzero denominator")
            .clone();
        if !lead.is_one() {
            let inv = lead.inverse().expect("nonzero leading coefficient");
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        let den = self.den.mul(&rhs.den);
        Self::new(num, den).expect("nonzero denominators")
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den)).expect("nonzero denominators")
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self::new(self.num.scale(c), self.den.clone()).expect("nonzero denominator")
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&GaussianRational::from_int(k))
    }
}

/// Exact equality of fractions: a·num · b·den == b·num · a·den as
/// polynomials.
pub fn ratfn_equal(a: &RatFn, b: &RatFn) -> bool {
    a.num.mul(&b.den) == b.num.mul(&a.den)
}

/// The cross-multiplied difference `a − b` as a single polynomial:
/// zero iff the fractions are equal. This is the residual witness
/// reported when an identity fails.
pub fn ratfn_residual(a: &RatFn, b: &RatFn) -> BiPoly {
    a.num.mul(&b.den).sub(&b.num.mul(&a.den))
}

/// ∂_w(∂_z p / p) for a polynomial, i.e. (p·p_zw − p_z·p_w)/p².
fn ddbar_log_poly(p: &BiPoly) -> Result<RatFn, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::LogOfZero);
    }
    let pz = p.derive(Var::Z);
    let pw = p.derive(Var::W);
    let pzw = pz.derive(Var::W);
    let num = p.mul(&pzw).sub(&pz.mul(&pw));
    RatFn::new(num, p.mul(p))
}

/// The symbolic ∂∂̄ log: additive on products and quotients, annihilates
/// factors depending on `z` alone or `w` alone. Applied to a squared norm
/// it produces the metric coefficient; negated and applied again, the
/// curvature coefficient.
pub fn ddbar_log(f: &RatFn) -> Result<RatFn, AlgebraError> {
    if f.is_zero() {
        return Err(AlgebraError::LogOfZero);
    }
    let n = ddbar_log_poly(&f.num)?;
    let d = ddbar_log_poly(&f.den)?;
    Ok(n.sub(&d))
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == BiPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_plus_zw() -> BiPoly {
        BiPoly::one().add(&BiPoly::monomial(1, 1, GaussianRational::one()))
    }

    #[test]
    fn equality_by_cross_multiplication() {
        // 1/(1+zw) == (1−zw)/(1−z²w²)
        let a = RatFn::new(BiPoly::one(), one_plus_zw()).unwrap();
        let one_minus_zw = BiPoly::one().sub(&BiPoly::monomial(1, 1, GaussianRational::one()));
        let b = RatFn::new(
            one_minus_zw.clone(),
            one_plus_zw().mul(&one_minus_zw),
        )
        .unwrap();
        assert!(ratfn_equal(&a, &b));
        assert!(ratfn_residual(&a, &b).is_zero());

        // 1/(1+zw) != 1/(1−zw)
        let c = RatFn::new(BiPoly::one(), one_minus_zw).unwrap();
        assert!(!ratfn_equal(&a, &c));
        assert!(!ratfn_residual(&a, &c).is_zero());

        // 0/1 == 0/(1+zw)
        let z1 = RatFn::zero();
        let z2 = RatFn::new(BiPoly::zero(), one_plus_zw()).unwrap();
        assert!(ratfn_equal(&z1, &z2));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RatFn::new(BiPoly::one(), BiPoly::zero()),
            Err(AlgebraError::ZeroDenominator)
        );
    }

    #[test]
    fn ddbar_log_examples() {
        // ∂∂̄ log(1+zw) = 1/(1+zw)²
        let h = one_plus_zw();
        let lam = ddbar_log(&RatFn::from_poly(h.clone())).unwrap();
        let expect = RatFn::new(BiPoly::one(), h.mul(&h)).unwrap();
        assert!(ratfn_equal(&lam, &expect));

        // constants are annihilated
        let c = RatFn::from_poly(BiPoly::constant(GaussianRational::from_ratio(7, 5)));
        assert!(ddbar_log(&c).unwrap().is_zero());

        // log rule: ddbar_log(h²) = 2 ddbar_log(h)
        let sq = ddbar_log(&RatFn::from_poly(h.mul(&h))).unwrap();
        assert!(ratfn_equal(&sq, &lam.scale_int(2)));

        // harmonic factors die: ddbar_log(zw) = 0
        let zw = RatFn::from_poly(BiPoly::monomial(1, 1, GaussianRational::one()));
        assert!(ddbar_log(&zw).unwrap().is_zero());

        // zero input is an error
        assert_eq!(ddbar_log(&RatFn::zero()), Err(AlgebraError::LogOfZero));
    }

    #[test]
    fn ddbar_log_additive_on_quotients() {
        let p = one_plus_zw();
        let q = BiPoly::one().add(&BiPoly::monomial(2, 2, GaussianRational::from_int(3)));
        let quot = RatFn::new(p.clone(), q.clone()).unwrap();
        let lhs = ddbar_log(&quot).unwrap();
        let rhs = ddbar_log(&RatFn::from_poly(p))
            .unwrap()
            .sub(&ddbar_log(&RatFn::from_poly(q)).unwrap());
        assert!(ratfn_equal(&lhs, &rhs));
    }
}
