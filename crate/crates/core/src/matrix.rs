//! Small dense matrices over the Gaussian rationals and over polynomials.
//!
//! Dimensions here are tiny (the defining representations and the 2^n
//! spin spaces, n ≤ 6), so everything is row-major `Vec` storage with
//! straightforward O(n³) products. Determinants use column-subset dynamic
//! programming, which keeps minor extraction for Plücker coordinates at
//! O(2^k · k) ring products instead of k!.

use crate::bipoly::BiPoly;
use crate::rational::GaussianRational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    a: Vec<GaussianRational>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            a: vec![GaussianRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, GaussianRational::one());
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> &GaussianRational {
        &self.a[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: GaussianRational) {
        self.a[r * self.cols + c] = v;
    }

    /// Adds `v` to entry (r, c).
    pub fn bump(&mut self, r: usize, c: usize, v: &GaussianRational) {
        let cur = self.get(r, c).clone();
        self.set(r, c, &cur + v);
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|x| x.is_zero())
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|r| (0..self.cols).all(|c| r == c || self.get(r, c).is_zero()))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            a: self.a.iter().zip(&rhs.a).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            a: self.a.iter().zip(&rhs.a).map(|(x, y)| x - y).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            a: self.a.iter().map(|x| -x).collect(),
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            a: self.a.iter().map(|x| x * c).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let x = self.get(r, k);
                if x.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let y = rhs.get(k, c);
                    if !y.is_zero() {
                        out.bump(r, c, &(x * y));
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    /// Entrywise complex conjugate combined with transposition.
    pub fn conj_transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).conj());
            }
        }
        out
    }

    pub fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn mul_vec(&self, v: &[GaussianRational]) -> Vec<GaussianRational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = GaussianRational::zero();
                for c in 0..self.cols {
                    let x = self.get(r, c);
                    if !x.is_zero() && !v[c].is_zero() {
                        acc = &acc + &(x * &v[c]);
                    }
                }
                acc
            })
            .collect()
    }
}

/// Matrix with polynomial entries (used for exp(z·M) and curves of group
/// elements).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMat {
    pub rows: usize,
    pub cols: usize,
    a: Vec<BiPoly>,
}

impl PolyMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            a: vec![BiPoly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BiPoly::one());
        }
        m
    }

    pub fn from_scalar(m: &Mat) -> Self {
        let mut out = Self::zeros(m.rows, m.cols);
        for r in 0..m.rows {
            for c in 0..m.cols {
                if !m.get(r, c).is_zero() {
                    out.set(r, c, BiPoly::constant(m.get(r, c).clone()));
                }
            }
        }
        out
    }

    pub fn get(&self, r: usize, c: usize) -> &BiPoly {
        &self.a[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BiPoly) {
        self.a[r * self.cols + c] = v;
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            a: self.a.iter().zip(&rhs.a).map(|(x, y)| x.add(y)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let x = self.get(r, k);
                if x.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let y = rhs.get(k, c);
                    if !y.is_zero() {
                        let cur = out.get(r, c).add(&x.mul(y));
                        out.set(r, c, cur);
                    }
                }
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    if r == c {
                        *self.get(r, c) == BiPoly::one()
                    } else {
                        self.get(r, c).is_zero()
                    }
                })
            })
    }

    pub fn column(&self, c: usize) -> Vec<BiPoly> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    /// Congruence transport gᵀ·Q·g with a scalar Q, used to certify that a
    /// polynomial group-element curve preserves the bilinear form.
    pub fn congruence(&self, q: &Mat) -> Self {
        let qp = Self::from_scalar(q);
        self.transpose().mul(&qp).mul(self)
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }
}

/// Determinant of the square polynomial matrix formed by `rows` and the
/// column set `cols` (same length). Uses subset DP over columns.
pub fn poly_minor(m: &PolyMat, rows: &[usize], cols: &[usize]) -> BiPoly {
    let k = rows.len();
    assert_eq!(k, cols.len());
    if k == 0 {
        return BiPoly::one();
    }
    // dp over subsets of `cols`: determinant of the top |S| rows
    // restricted to column subset S, expanded along successive rows.
    let mut dp = vec![BiPoly::zero(); 1usize << k];
    dp[0] = BiPoly::one();
    for mask in 1usize..(1 << k) {
        let r = (mask.count_ones() - 1) as usize;
        let mut acc = BiPoly::zero();
        let mut sign_flip = false;
        for (j, &col) in cols.iter().enumerate() {
            if mask & (1 << j) == 0 {
                continue;
            }
            let entry = m.get(rows[r], col);
            if !entry.is_zero() {
                let sub = &dp[mask & !(1 << j)];
                if !sub.is_zero() {
                    let term = entry.mul(sub);
                    acc = if sign_flip { acc.sub(&term) } else { acc.add(&term) };
                }
            }
            sign_flip = !sign_flip;
        }
        dp[mask] = acc;
    }
    dp[(1 << k) - 1].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gr(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    #[test]
    fn scalar_matrix_algebra() {
        let mut a = Mat::zeros(2, 2);
        a.set(0, 1, gr(1));
        let mut b = Mat::zeros(2, 2);
        b.set(1, 0, gr(1));
        // [E12, E21] = E11 − E22
        let c = a.commutator(&b);
        assert_eq!(c.get(0, 0), &gr(1));
        assert_eq!(c.get(1, 1), &gr(-1));
        assert!(c.get(0, 1).is_zero());
    }

    #[test]
    fn poly_minor_matches_cofactor_expansion() {
        // rows (1, z, z²), (0, 1, 2z), (0, 0, 2): determinant 2
        let mut m = PolyMat::zeros(3, 3);
        let z = BiPoly::var(crate::bipoly::Var::Z);
        m.set(0, 0, BiPoly::one());
        m.set(0, 1, z.clone());
        m.set(0, 2, z.mul(&z));
        m.set(1, 1, BiPoly::one());
        m.set(1, 2, z.scale(&gr(2)));
        m.set(2, 2, BiPoly::constant(gr(2)));
        let det = poly_minor(&m, &[0, 1, 2], &[0, 1, 2]);
        assert_eq!(det, BiPoly::constant(gr(2)));
        // 2x2 minor of rows 0,1 and cols 1,2: z·2z − z²·1 = z²
        let minor = poly_minor(&m, &[0, 1], &[1, 2]);
        assert_eq!(minor, BiPoly::monomial(2, 0, gr(1)));
    }
}
