//! Root data and exact matrix realizations of sl(n+1), so(2n) and
//! so(2n+1).
//!
//! Basis conventions. For the orthogonal families the defining space has
//! basis e_1, …, e_n, f_1, …, f_n (and one extra vector u in the odd
//! case), with the bilinear form Q(e_i, f_i) = 1, all other pairings
//! zero, and Q(u, u) = 2. The value 2 keeps every structure constant
//! rational. With that choice the invariant Hermitian form is the
//! diagonal gram with weight 1 on e/f vectors and 2 on u, and the
//! lowering generators are the adjoints of the raising ones with respect
//! to that gram (plain transposes except for the last generator of the
//! odd family, which transposes out of so(Q) when Q(u,u) ≠ 1).
//!
//! The Cartan matrix is oriented so that [H_i, X_j] = C_ji · X_j; for
//! the odd family this puts the −2 entry in row n−1, column n, which is
//! the orientation under which the curvature/metric identities close
//! (the scenario reports record this convention).

use serde::Serialize;

use crate::error::LieError;
use crate::matrix::Mat;
use crate::rational::GaussianRational;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Family {
    A,
    B,
    D,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::D => 'D',
        }
    }

    pub fn min_rank(self) -> usize {
        match self {
            Family::A => 1,
            Family::B => 2,
            Family::D => 3,
        }
    }

    pub fn dim_v(self, rank: usize) -> usize {
        match self {
            Family::A => rank + 1,
            Family::B => 2 * rank + 1,
            Family::D => 2 * rank,
        }
    }
}

impl std::str::FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "D" => Ok(Family::D),
            other => Err(format!("unknown family `{other}` (expected A, B or D)")),
        }
    }
}

/// Type label, rank, Cartan matrix and defining-representation dimension.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootData {
    pub family: Family,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub dim_v: usize,
}

impl RootData {
    pub fn new(family: Family, rank: usize) -> Result<Self, LieError> {
        let cartan = cartan_matrix(family, rank)?;
        Ok(Self {
            family,
            rank,
            cartan,
            dim_v: family.dim_v(rank),
        })
    }
}

/// Standard Cartan matrix. Symmetric for A and D; the odd orthogonal
/// family carries its single asymmetric pair at (n−1, n)/(n, n−1).
pub fn cartan_matrix(family: Family, rank: usize) -> Result<Vec<Vec<i64>>, LieError> {
    if rank < family.min_rank() {
        return Err(LieError::UnsupportedRank {
            family: family.letter(),
            rank,
        });
    }
    let n = rank;
    let mut c = vec![vec![0i64; n]; n];
    for i in 0..n {
        c[i][i] = 2;
    }
    match family {
        Family::A => {
            for i in 0..n.saturating_sub(1) {
                c[i][i + 1] = -1;
                c[i + 1][i] = -1;
            }
        }
        Family::B => {
            for i in 0..n - 1 {
                c[i][i + 1] = -1;
                c[i + 1][i] = -1;
            }
            // short last root: row n−1 couples to the spin node with −2
            c[n - 2][n - 1] = -2;
            c[n - 1][n - 2] = -1;
        }
        Family::D => {
            // chain 1 … n−1, with node n attached to the trivalent node n−2
            for i in 0..n - 2 {
                c[i][i + 1] = -1;
                c[i + 1][i] = -1;
            }
            c[n - 3][n - 1] = -1;
            c[n - 1][n - 3] = -1;
            c[n - 2][n - 1] = 0;
            c[n - 1][n - 2] = 0;
        }
    }
    Ok(c)
}

/// Chevalley generators in the defining representation, together with the
/// bilinear form Q (orthogonal families) and the invariant Hermitian gram.
#[derive(Clone, Debug)]
pub struct ChevalleyData {
    pub root: RootData,
    pub raising: Vec<Mat>,
    pub lowering: Vec<Mat>,
    pub cartan_h: Vec<Mat>,
    /// Weight readers H'_i = E_{i,i} − E_{n+i,n+i} (orthogonal families):
    /// diagonal matrices dual to the L_i coordinates. Kept separate from
    /// the Chevalley coroots — the two weight bases are never identified.
    pub weight_h: Vec<Mat>,
    pub q: Option<Mat>,
    /// Diagonal invariant Hermitian gram on the defining space.
    pub gram: Mat,
}

fn unit(dim: usize, r: usize, c: usize, v: i64) -> Mat {
    let mut m = Mat::zeros(dim, dim);
    m.set(r, c, GaussianRational::from_int(v));
    m
}

impl ChevalleyData {
    pub fn family(&self) -> Family {
        self.root.family
    }

    pub fn rank(&self) -> usize {
        self.root.rank
    }

    pub fn dim_v(&self) -> usize {
        self.root.dim_v
    }

    /// Adjoint with respect to the diagonal gram: G⁻¹ Aᴴ G.
    pub fn gram_adjoint(&self, m: &Mat) -> Mat {
        let mt = m.conj_transpose();
        let dim = self.dim_v();
        let mut out = Mat::zeros(dim, dim);
        for r in 0..dim {
            for c in 0..dim {
                if mt.get(r, c).is_zero() {
                    continue;
                }
                let gr = self.gram.get(r, r).inverse().expect("positive gram");
                let gc = self.gram.get(c, c);
                out.set(r, c, &(&gr * mt.get(r, c)) * gc);
            }
        }
        out
    }
}

/// Builds the generators for the given root data and verifies the
/// Chevalley relations, so(Q) membership and gram-adjoint pairing before
/// returning. A failure here means a convention bug, not bad input.
pub fn chevalley_generators(root: &RootData) -> Result<ChevalleyData, LieError> {
    let n = root.rank;
    let dim = root.dim_v;
    let mut raising = Vec::with_capacity(n);
    let mut lowering = Vec::with_capacity(n);
    let mut cartan_h = Vec::with_capacity(n);
    let mut weight_h = Vec::with_capacity(n);
    let mut q = None;

    match root.family {
        Family::A => {
            for i in 0..n {
                raising.push(unit(dim, i, i + 1, 1));
                lowering.push(unit(dim, i + 1, i, 1));
                let h = unit(dim, i, i, 1).add(&unit(dim, i + 1, i + 1, -1));
                cartan_h.push(h);
                weight_h.push(unit(dim, i, i, 1));
            }
        }
        Family::B | Family::D => {
            // e_i ↦ index i−1, f_i ↦ index n+i−1, u ↦ index 2n (odd case)
            let mut qm = Mat::zeros(dim, dim);
            for i in 0..n {
                qm.set(i, n + i, GaussianRational::one());
                qm.set(n + i, i, GaussianRational::one());
            }
            if root.family == Family::B {
                qm.set(2 * n, 2 * n, GaussianRational::from_int(2));
            }
            for i in 0..n - 1 {
                // root L_{i+1} − L_{i+2}: e_{i+2} ↦ e_{i+1}, f_{i+1} ↦ −f_{i+2}
                let x = unit(dim, i, i + 1, 1).add(&unit(dim, n + i + 1, n + i, -1));
                lowering.push(x.transpose());
                raising.push(x);
                let h = unit(dim, i, i, 1)
                    .add(&unit(dim, i + 1, i + 1, -1))
                    .add(&unit(dim, n + i, n + i, -1))
                    .add(&unit(dim, n + i + 1, n + i + 1, 1));
                cartan_h.push(h);
            }
            match root.family {
                Family::D => {
                    // root L_{n−1} + L_n: f_n ↦ e_{n−1}, f_{n−1} ↦ −e_n
                    let x = unit(dim, n - 2, 2 * n - 1, 1).add(&unit(dim, n - 1, 2 * n - 2, -1));
                    lowering.push(x.transpose());
                    raising.push(x);
                    let h = unit(dim, n - 2, n - 2, 1)
                        .add(&unit(dim, n - 1, n - 1, 1))
                        .add(&unit(dim, 2 * n - 2, 2 * n - 2, -1))
                        .add(&unit(dim, 2 * n - 1, 2 * n - 1, -1));
                    cartan_h.push(h);
                }
                Family::B => {
                    // short root L_n: u ↦ 2e_n, f_n ↦ −u; the lowering
                    // partner is the gram-adjoint, not the transpose
                    let x = unit(dim, n - 1, 2 * n, 2).add(&unit(dim, 2 * n, 2 * n - 1, -1));
                    let y = unit(dim, 2 * n, n - 1, 1).add(&unit(dim, 2 * n - 1, 2 * n, -2));
                    raising.push(x);
                    lowering.push(y);
                    let h = unit(dim, n - 1, n - 1, 2).add(&unit(dim, 2 * n - 1, 2 * n - 1, -2));
                    cartan_h.push(h);
                }
                Family::A => unreachable!(),
            }
            for i in 0..n {
                weight_h.push(unit(dim, i, i, 1).add(&unit(dim, n + i, n + i, -1)));
            }
            q = Some(qm);
        }
    }

    let mut gram = Mat::identity(dim);
    if root.family == Family::B {
        gram.set(2 * n, 2 * n, GaussianRational::from_int(2));
    }

    let data = ChevalleyData {
        root: root.clone(),
        raising,
        lowering,
        cartan_h,
        weight_h,
        q,
        gram,
    };
    verify_generators(&data)?;
    Ok(data)
}

fn verify_generators(d: &ChevalleyData) -> Result<(), LieError> {
    let n = d.rank();
    let c = &d.root.cartan;
    for i in 0..n {
        for j in 0..n {
            // [H_i, X_j] = C_ji X_j and [H_i, Y_j] = −C_ji Y_j
            let cij = GaussianRational::from_int(c[j][i]);
            let bx = d.cartan_h[i].commutator(&d.raising[j]);
            if bx != d.raising[j].scale(&cij) {
                return Err(LieError::Inconsistent(format!(
                    "[H_{}, X_{}] != C[{}][{}] X_{}",
                    i + 1,
                    j + 1,
                    j + 1,
                    i + 1,
                    j + 1
                )));
            }
            let by = d.cartan_h[i].commutator(&d.lowering[j]);
            if by != d.lowering[j].scale(&-&cij) {
                return Err(LieError::Inconsistent(format!(
                    "[H_{}, Y_{}] != -C[{}][{}] Y_{}",
                    i + 1,
                    j + 1,
                    j + 1,
                    i + 1,
                    j + 1
                )));
            }
            // [X_i, Y_j] = δ_ij H_i
            let b = d.raising[i].commutator(&d.lowering[j]);
            let expect = if i == j {
                d.cartan_h[i].clone()
            } else {
                Mat::zeros(d.dim_v(), d.dim_v())
            };
            if b != expect {
                return Err(LieError::Inconsistent(format!(
                    "[X_{}, Y_{}] != delta H",
                    i + 1,
                    j + 1
                )));
            }
        }
        // gram-adjoint pairing (transpose for A/D, weighted for B)
        if d.gram_adjoint(&d.raising[i]) != d.lowering[i] {
            return Err(LieError::Inconsistent(format!(
                "gram adjoint of X_{} is not Y_{}",
                i + 1,
                i + 1
            )));
        }
    }
    if let Some(q) = &d.q {
        for m in d
            .raising
            .iter()
            .chain(d.lowering.iter())
            .chain(d.cartan_h.iter())
            .chain(d.weight_h.iter())
        {
            if !m.transpose().mul(q).add(&q.mul(m)).is_zero() {
                return Err(LieError::Inconsistent("generator not in so(Q)".into()));
            }
        }
    }
    Ok(())
}

/// The sum of the simple raising generators. Nilpotent; its index equals
/// dim V for the A family and is whatever repeated multiplication finds
/// for B/D.
pub fn principal_nilpotent(d: &ChevalleyData) -> Mat {
    let dim = d.dim_v();
    d.raising
        .iter()
        .fold(Mat::zeros(dim, dim), |acc, x| acc.add(x))
}

/// The sum of the simple lowering generators. Integral curves through the
/// base flag are exponentials of this element (the raising sum annihilates
/// every highest weight vector, so it generates only constant curves).
pub fn principal_lowering(d: &ChevalleyData) -> Mat {
    let dim = d.dim_v();
    d.lowering
        .iter()
        .fold(Mat::zeros(dim, dim), |acc, y| acc.add(y))
}

/// Smallest k with M^k = 0, or None if M is not nilpotent.
pub fn nilpotency_index(m: &Mat) -> Option<usize> {
    let dim = m.rows;
    let mut p = m.clone();
    for k in 1..=dim {
        if p.is_zero() {
            return Some(k);
        }
        p = p.mul(m);
    }
    if p.is_zero() {
        Some(dim + 1)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartan_matrix_examples() {
        assert_eq!(
            cartan_matrix(Family::A, 2).unwrap(),
            vec![vec![2, -1], vec![-1, 2]]
        );
        // D4: the trivalent node's row has three −1 entries
        let d4 = cartan_matrix(Family::D, 4).unwrap();
        let row = &d4[1];
        assert_eq!(row.iter().filter(|&&x| x == -1).count(), 3);
        // B2: one asymmetric pair, −2 in row n−1
        assert_eq!(
            cartan_matrix(Family::B, 2).unwrap(),
            vec![vec![2, -2], vec![-1, 2]]
        );
        // symmetry for A and D
        let d3 = cartan_matrix(Family::D, 3).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(d3[i][j], d3[j][i]);
            }
        }
        assert!(matches!(
            cartan_matrix(Family::D, 2),
            Err(LieError::UnsupportedRank { .. })
        ));
        assert!(matches!(
            cartan_matrix(Family::B, 1),
            Err(LieError::UnsupportedRank { .. })
        ));
    }

    #[test]
    fn a1_generators() {
        let root = RootData::new(Family::A, 1).unwrap();
        let d = chevalley_generators(&root).unwrap();
        assert_eq!(d.raising[0], unit(2, 0, 1, 1));
        assert_eq!(d.lowering[0], unit(2, 1, 0, 1));
        assert_eq!(d.cartan_h[0], unit(2, 0, 0, 1).add(&unit(2, 1, 1, -1)));
    }

    #[test]
    fn generators_self_verify_across_ranks() {
        for (fam, ranks) in [
            (Family::A, vec![1usize, 2, 3, 4, 5]),
            (Family::B, vec![2, 3, 4]),
            (Family::D, vec![3, 4]),
        ] {
            for r in ranks {
                let root = RootData::new(fam, r).unwrap();
                // construction runs the full verification internally
                let d = chevalley_generators(&root).unwrap();
                assert_eq!(d.raising.len(), r);
            }
        }
    }

    #[test]
    fn d_last_raising_generator_shape() {
        let root = RootData::new(Family::D, 3).unwrap();
        let d = chevalley_generators(&root).unwrap();
        // X_n = E_{n−1,2n} − E_{n,2n−1}
        let expect = unit(6, 1, 5, 1).add(&unit(6, 2, 4, -1));
        assert_eq!(d.raising[2], expect);
        // [X_n, Y_n] = H_n by direct multiplication
        assert_eq!(d.raising[2].commutator(&d.lowering[2]), d.cartan_h[2]);
    }

    #[test]
    fn b_last_generator_is_orthogonal() {
        let root = RootData::new(Family::B, 2).unwrap();
        let d = chevalley_generators(&root).unwrap();
        let q = d.q.as_ref().unwrap();
        let x = &d.raising[1];
        assert!(x.transpose().mul(q).add(&q.mul(x)).is_zero());
        // the raising generator mixes e_n with u
        assert!(!x.get(1, 4).is_zero());
        assert!(!x.get(4, 3).is_zero());
    }

    #[test]
    fn cartan_h_acts_diagonally_with_integer_weights() {
        for (fam, rank) in [(Family::A, 3), (Family::B, 3), (Family::D, 4)] {
            let d = chevalley_generators(&RootData::new(fam, rank).unwrap()).unwrap();
            for h in d.cartan_h.iter().chain(d.weight_h.iter()) {
                assert!(h.is_diagonal());
                for i in 0..d.dim_v() {
                    let v = h.get(i, i);
                    assert!(v.is_real());
                    assert!(v.re().is_integer());
                }
            }
        }
    }

    #[test]
    fn principal_nilpotent_a_family() {
        // single Jordan block: e^(n+1) = 0, e^n != 0
        for n in 1..=4usize {
            let d = chevalley_generators(&RootData::new(Family::A, n).unwrap()).unwrap();
            let e = principal_nilpotent(&d);
            assert_eq!(nilpotency_index(&e), Some(n + 1));
        }
    }

    #[test]
    fn principal_nilpotent_d3_is_nilpotent() {
        let d = chevalley_generators(&RootData::new(Family::D, 3).unwrap()).unwrap();
        let e = principal_nilpotent(&d);
        let k = nilpotency_index(&e).expect("nilpotent");
        assert!(k <= 6);
        let f = principal_lowering(&d);
        assert_eq!(nilpotency_index(&f), Some(k));
    }
}
