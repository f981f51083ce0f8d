//! Exact bivariate polynomials over the Gaussian rationals.
//!
//! The two formal variables are `z` and `w`; throughout the engine `w`
//! plays the role of z̄, so complex conjugation of functions becomes the
//! algebraic involution [`BiPoly::conj_involution`] (swap z↔w, conjugate
//! coefficients) and "real-valued on the locus w = z̄" becomes the testable
//! symmetry `p == p.conj_involution()`.
//!
//! Invariant: no zero coefficient is ever stored, so the zero polynomial
//! is exactly the empty term map and structural equality is semantic
//! equality.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::rational::GaussianRational;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Formal variable selector for differentiation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Var {
    Z,
    W,
}

/// A sparse polynomial in `z` and `w`; keys are `(deg_z, deg_w)`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), GaussianRational>,
}

/// Term-count product above which multiplication switches to rayon.
#[cfg(feature = "parallel")]
const PAR_MUL_THRESHOLD: usize = 1 << 14;

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((0, 0), c);
        }
        Self { terms }
    }

    pub fn var(v: Var) -> Self {
        match v {
            Var::Z => Self::monomial(1, 0, GaussianRational::one()),
            Var::W => Self::monomial(0, 1, GaussianRational::one()),
        }
    }

    pub fn monomial(deg_z: u32, deg_w: u32, c: GaussianRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((deg_z, deg_w), c);
        }
        Self { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (u32, u32, GaussianRational)>) -> Self {
        let mut p = Self::zero();
        for (dz, dw, c) in it {
            p.add_term(dz, dw, c);
        }
        p
    }

    /// Univariate polynomial in `z` from dense coefficients, constant first.
    pub fn poly_z(coeffs: &[GaussianRational]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(d, c)| (d as u32, 0, c.clone())),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&k| k == (0, 0))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, deg_z: u32, deg_w: u32) -> GaussianRational {
        self.terms
            .get(&(deg_z, deg_w))
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn deg_z(&self) -> u32 {
        self.terms.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn deg_w(&self) -> u32 {
        self.terms.keys().map(|k| k.1).max().unwrap_or(0)
    }

    /// True when the polynomial involves only `z`.
    pub fn is_univariate_z(&self) -> bool {
        self.terms.keys().all(|k| k.1 == 0)
    }

    /// Leading coefficient in lexicographic (deg_z, deg_w) order.
    pub fn leading_coeff(&self) -> Option<&GaussianRational> {
        self.terms.iter().next_back().map(|(_, c)| c)
    }

    fn add_term(&mut self, dz: u32, dw: u32, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((dz, dw)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = &*e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&(dz, dw), c) in &rhs.terms {
            out.add_term(dz, dw, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&(dz, dw), c) in &rhs.terms {
            out.add_term(dz, dw, -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    /// Product; dispatches to the rayon path for large operands when the
    /// `parallel` feature is enabled.
    pub fn mul(&self, rhs: &Self) -> Self {
        #[cfg(feature = "parallel")]
        {
            if self.num_terms() * rhs.num_terms() >= PAR_MUL_THRESHOLD {
                return self.mul_parallel(rhs);
            }
        }
        self.mul_serial(rhs)
    }

    /// Single-threaded product. Always available; the public [`BiPoly::mul`]
    /// falls back to this when the `parallel` feature is off or the
    /// operands are small.
    pub fn mul_serial(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (&(az, aw), ac) in &self.terms {
            for (&(bz, bw), bc) in &rhs.terms {
                out.add_term(az + bz, aw + bw, ac * bc);
            }
        }
        out
    }

    /// Rayon product: partitions the left operand's terms and merges the
    /// partial term maps. Exact arithmetic makes the reduction order
    /// irrelevant to the result.
    #[cfg(feature = "parallel")]
    pub fn mul_parallel(&self, rhs: &Self) -> Self {
        let lhs: Vec<(&(u32, u32), &GaussianRational)> = self.terms.iter().collect();
        let chunk = (lhs.len() / rayon::current_num_threads().max(1)).max(1);
        lhs.par_chunks(chunk)
            .map(|part| {
                let mut acc = Self::zero();
                for &(&(az, aw), ac) in part {
                    for (&(bz, bw), bc) in &rhs.terms {
                        acc.add_term(az + bz, aw + bw, ac * bc);
                    }
                }
                acc
            })
            .reduce(Self::zero, |a, b| a.add(&b))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Exact formal partial derivative.
    pub fn derive(&self, var: Var) -> Self {
        let mut out = Self::zero();
        for (&(dz, dw), c) in &self.terms {
            match var {
                Var::Z if dz > 0 => {
                    out.add_term(dz - 1, dw, c * &GaussianRational::from_int(dz as i64))
                }
                Var::W if dw > 0 => {
                    out.add_term(dz, dw - 1, c * &GaussianRational::from_int(dw as i64))
                }
                _ => {}
            }
        }
        out
    }

    /// The symbolic model of complex conjugation: swap z↔w and conjugate
    /// every coefficient. Involutive and multiplicative; its fixed points
    /// are exactly the polynomials representing real-valued functions on
    /// the locus w = z̄.
    pub fn conj_involution(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(dz, dw), c)| ((dw, dz), c.conj()))
                .collect(),
        }
    }

    pub fn is_real_symmetric(&self) -> bool {
        *self == self.conj_involution()
    }

    /// Divides by `z^a w^b` where `a`/`b` are the largest powers dividing
    /// every term. Returns the stripped polynomial and (a, b).
    pub fn strip_monomial_content(&self) -> (Self, (u32, u32)) {
        if self.is_zero() {
            return (self.clone(), (0, 0));
        }
        let a = self.terms.keys().map(|k| k.0).min().unwrap();
        let b = self.terms.keys().map(|k| k.1).min().unwrap();
        if a == 0 && b == 0 {
            return (self.clone(), (0, 0));
        }
        let terms = self
            .terms
            .iter()
            .map(|(&(dz, dw), c)| ((dz - a, dw - b), c.clone()))
            .collect();
        (Self { terms }, (a, b))
    }

    /// Serialization as `(deg_z, deg_w, coefficient)` triples with the
    /// coefficient in the textual `a/b[±c/d i]` format.
    pub fn to_triples(&self) -> Vec<(u32, u32, String)> {
        self.terms
            .iter()
            .map(|(&(dz, dw), c)| (dz, dw, c.to_string()))
            .collect()
    }

    pub fn from_triples(triples: &[(u32, u32, String)]) -> Result<Self, crate::error::AlgebraError> {
        let mut p = Self::zero();
        for (dz, dw, s) in triples {
            p.add_term(*dz, *dw, s.parse()?);
        }
        Ok(p)
    }
}

/// Serde mirror of the triple list format.
#[derive(Serialize, Deserialize)]
#[serde(transparent)]
pub struct BiPolyTriples(pub Vec<(u32, u32, String)>);

impl From<&BiPoly> for BiPolyTriples {
    fn from(p: &BiPoly) -> Self {
        BiPolyTriples(p.to_triples())
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(dz, dw), c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            if dz > 0 {
                write!(f, "*z^{dz}")?;
            }
            if dw > 0 {
                write!(f, "*w^{dw}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gr(n: i64, d: i64) -> GaussianRational {
        GaussianRational::from_ratio(n, d)
    }

    #[test]
    fn conj_involution_on_monomial() {
        // (1+i)·z²w → (1−i)·z·w²
        let c = &GaussianRational::one() + &GaussianRational::i();
        let p = BiPoly::monomial(2, 1, c.clone());
        let q = p.conj_involution();
        assert_eq!(q, BiPoly::monomial(1, 2, c.conj()));
        // involutive
        assert_eq!(q.conj_involution(), p);
    }

    #[test]
    fn conj_involution_fixes_real_symmetric() {
        // 1 + zw is a fixed point
        let p = BiPoly::one().add(&BiPoly::monomial(1, 1, GaussianRational::one()));
        assert_eq!(p.conj_involution(), p);
        assert!(p.is_real_symmetric());
        // z → w
        assert_eq!(BiPoly::var(Var::Z).conj_involution(), BiPoly::var(Var::W));
    }

    #[test]
    fn derive_examples() {
        // ∂z(z²w) = 2zw
        let p = BiPoly::monomial(2, 1, GaussianRational::one());
        assert_eq!(p.derive(Var::Z), BiPoly::monomial(1, 1, gr(2, 1)));
        // ∂w(1+zw) = z
        let q = BiPoly::one().add(&BiPoly::monomial(1, 1, GaussianRational::one()));
        assert_eq!(q.derive(Var::W), BiPoly::var(Var::Z));
        // ∂z(c) = 0
        assert!(BiPoly::constant(gr(7, 3)).derive(Var::Z).is_zero());
        // partials commute
        let r = p.mul(&q).add(&BiPoly::monomial(3, 2, gr(-5, 4)));
        assert_eq!(r.derive(Var::Z).derive(Var::W), r.derive(Var::W).derive(Var::Z));
    }

    #[test]
    fn mul_matches_serial() {
        let p = BiPoly::from_terms((0..40).map(|k| (k % 7, k / 7, gr(k as i64 + 1, 3))));
        let q = BiPoly::from_terms((0..35).map(|k| (k / 5, k % 5, gr(2 * k as i64 - 9, 2))));
        assert_eq!(p.mul(&q), p.mul_serial(&q));
        #[cfg(feature = "parallel")]
        assert_eq!(p.mul_parallel(&q), p.mul_serial(&q));
    }

    #[test]
    fn no_zero_terms_survive() {
        let p = BiPoly::monomial(1, 1, gr(1, 1));
        let q = p.sub(&p);
        assert!(q.is_zero());
        assert_eq!(q.num_terms(), 0);
    }

    #[test]
    fn triples_round_trip() {
        let p = BiPoly::from_terms([
            (0, 0, gr(1, 2)),
            (2, 1, &gr(1, 3) + &GaussianRational::i()),
        ]);
        let t = p.to_triples();
        assert_eq!(BiPoly::from_triples(&t).unwrap(), p);
    }
}
