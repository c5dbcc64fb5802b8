//! Smith normal form over `Z` and the image-membership test it supports.
//!
//! For an integer matrix `phi` this computes unimodular `U`, `V` and a
//! diagonal `D` with `U * phi * V = D` and `d1 | d2 | ...`, `di >= 0`.
//! Pivoting is pinned for determinism: the nonzero entry of least absolute
//! value, preferring the lower row index and then the lower column index.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::matrix::IntegerMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntegerMatrix,
    pub u_inv: IntegerMatrix,
    pub v: IntegerMatrix,
    pub v_inv: IntegerMatrix,
    pub d: IntegerMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArithError {
    DimensionMismatch,
    NotInjective,
    NotProperlyAscending,
}

impl fmt::Display for ArithError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArithError::DimensionMismatch => write!(f, "dimension mismatch"),
            ArithError::NotInjective => write!(f, "matrix has determinant zero"),
            ArithError::NotProperlyAscending => {
                write!(f, "unimodular self-embedding: image is the whole lattice")
            }
        }
    }
}

struct Work {
    m: usize,
    n: usize,
    a: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    u_inv: Vec<Vec<BigInt>>,
    v: Vec<Vec<BigInt>>,
    v_inv: Vec<Vec<BigInt>>,
}

impl Work {
    fn new(phi: &IntegerMatrix) -> Self {
        let (m, n) = (phi.rows(), phi.cols());
        let ident = |k: usize| -> Vec<Vec<BigInt>> {
            (0..k)
                .map(|i| {
                    (0..k)
                        .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                        .collect()
                })
                .collect()
        };
        Work {
            m,
            n,
            a: (0..m)
                .map(|i| (0..n).map(|j| phi.get(i, j).clone()).collect())
                .collect(),
            u: ident(m),
            u_inv: ident(m),
            v: ident(n),
            v_inv: ident(n),
        }
    }

    // row i <- row i + c * row j   (A and U); U_inv gets the inverse column op
    fn row_add(&mut self, i: usize, j: usize, c: &BigInt) {
        for k in 0..self.n {
            let v = &self.a[i][k] + c * &self.a[j][k];
            self.a[i][k] = v;
        }
        for k in 0..self.m {
            let v = &self.u[i][k] + c * &self.u[j][k];
            self.u[i][k] = v;
        }
        for k in 0..self.m {
            let v = &self.u_inv[k][j] - c * &self.u_inv[k][i];
            self.u_inv[k][j] = v;
        }
    }

    fn col_add(&mut self, i: usize, j: usize, c: &BigInt) {
        // col i <- col i + c * col j
        for k in 0..self.m {
            let v = &self.a[k][i] + c * &self.a[k][j];
            self.a[k][i] = v;
        }
        for k in 0..self.n {
            let v = &self.v[k][i] + c * &self.v[k][j];
            self.v[k][i] = v;
        }
        for k in 0..self.n {
            let v = &self.v_inv[j][k] - c * &self.v_inv[i][k];
            self.v_inv[j][k] = v;
        }
    }

    fn row_swap(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap(i, j);
        self.u.swap(i, j);
        for k in 0..self.m {
            self.u_inv[k].swap(i, j);
        }
    }

    fn col_swap(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.m {
            self.a[k].swap(i, j);
        }
        for k in 0..self.n {
            self.v[k].swap(i, j);
        }
        self.v_inv.swap(i, j);
    }

    fn row_negate(&mut self, i: usize) {
        for k in 0..self.n {
            self.a[i][k] = -&self.a[i][k];
        }
        for k in 0..self.m {
            self.u[i][k] = -&self.u[i][k];
        }
        for k in 0..self.m {
            self.u_inv[k][i] = -&self.u_inv[k][i];
        }
    }

    /// Least-|value| nonzero pivot in the trailing submatrix, lower row
    /// then lower column on ties.
    fn find_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.m {
            for j in t..self.n {
                if self.a[i][j].is_zero() {
                    continue;
                }
                match best {
                    None => best = Some((i, j)),
                    Some((bi, bj)) => {
                        if self.a[i][j].abs() < self.a[bi][bj].abs() {
                            best = Some((i, j));
                        }
                    }
                }
            }
        }
        best
    }
}

pub fn smith_normal_form(phi: &IntegerMatrix) -> SmithDecomposition {
    let mut w = Work::new(phi);
    let steps = w.m.min(w.n);
    for t in 0..steps {
        'pivot: loop {
            let Some((pi, pj)) = w.find_pivot(t) else {
                break 'pivot; // trailing submatrix is zero
            };
            w.row_swap(t, pi);
            w.col_swap(t, pj);
            // clear column t below and row t to the right of the pivot
            let mut dirty = false;
            for i in t + 1..w.m {
                if !w.a[i][t].is_zero() {
                    let q = rounded_quotient(&w.a[i][t], &w.a[t][t]);
                    w.row_add(i, t, &(-q));
                    if !w.a[i][t].is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..w.n {
                if !w.a[t][j].is_zero() {
                    let q = rounded_quotient(&w.a[t][j], &w.a[t][t]);
                    w.col_add(j, t, &(-q));
                    if !w.a[t][j].is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue 'pivot;
            }
            // divisibility: the pivot must divide every remaining entry
            let d = w.a[t][t].clone();
            let mut fixed = true;
            'scan: for i in t + 1..w.m {
                for j in t + 1..w.n {
                    if !(&w.a[i][j] % &d).is_zero() {
                        let one = BigInt::one();
                        w.row_add(t, i, &one);
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break 'pivot;
            }
        }
        if w.a[t][t].is_negative() {
            w.row_negate(t);
        }
    }
    let to_matrix = |g: &Vec<Vec<BigInt>>, r: usize, c: usize| {
        IntegerMatrix::new(r, c, g.iter().flat_map(|row| row.iter().cloned()).collect())
    };
    SmithDecomposition {
        u: to_matrix(&w.u, w.m, w.m),
        u_inv: to_matrix(&w.u_inv, w.m, w.m),
        v: to_matrix(&w.v, w.n, w.n),
        v_inv: to_matrix(&w.v_inv, w.n, w.n),
        d: to_matrix(&w.a, w.m, w.n),
    }
}

fn rounded_quotient(a: &BigInt, b: &BigInt) -> BigInt {
    // round toward nearest so remainders shrink fast; exactness not needed
    let (q, r) = a.div_rem(b);
    if (&r * 2u8).abs() > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

impl SmithDecomposition {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i).clone())
            .collect()
    }
}

/// Decide whether `x` lies in the image of `phi : Z^n -> Z^n`; when it
/// does, return one exact preimage `w` with `phi * w = x`.
pub fn image_membership(
    phi: &IntegerMatrix,
    x: &[BigInt],
) -> Result<Option<Vec<BigInt>>, ArithError> {
    if !phi.is_square() || phi.cols() != x.len() {
        return Err(ArithError::DimensionMismatch);
    }
    let snf = smith_normal_form(phi);
    image_membership_with(&snf, phi, x)
}

/// Same as [`image_membership`] but reusing a precomputed decomposition.
pub fn image_membership_with(
    snf: &SmithDecomposition,
    phi: &IntegerMatrix,
    x: &[BigInt],
) -> Result<Option<Vec<BigInt>>, ArithError> {
    if !phi.is_square() || phi.cols() != x.len() {
        return Err(ArithError::DimensionMismatch);
    }
    let n = phi.cols();
    let diag = snf.diagonal();
    if diag.iter().any(|d| d.is_zero()) {
        return Err(ArithError::NotInjective);
    }
    let y = snf.u.mul_vector(x);
    let mut z = Vec::with_capacity(n);
    for i in 0..n {
        let (q, r) = y[i].div_rem(&diag[i]);
        if !r.is_zero() {
            return Ok(None);
        }
        z.push(q);
    }
    let w = snf.v.mul_vector(&z);
    debug_assert_eq!(phi.mul_vector(&w), x);
    Ok(Some(w))
}

/// A vector outside the image of `phi`, constructed as `U^-1 e_i` for the
/// least `i` with `d_i > 1`. Exists iff `|det phi| >= 2`.
pub fn vector_outside_image(phi: &IntegerMatrix) -> Result<Vec<BigInt>, ArithError> {
    if !phi.is_square() {
        return Err(ArithError::DimensionMismatch);
    }
    let snf = smith_normal_form(phi);
    vector_outside_image_with(&snf, phi)
}

pub fn vector_outside_image_with(
    snf: &SmithDecomposition,
    phi: &IntegerMatrix,
) -> Result<Vec<BigInt>, ArithError> {
    let n = phi.cols();
    let diag = snf.diagonal();
    if diag.iter().any(|d| d.is_zero()) {
        return Err(ArithError::NotInjective);
    }
    let i = diag
        .iter()
        .position(|d| *d > BigInt::one())
        .ok_or(ArithError::NotProperlyAscending)?;
    let e: Vec<BigInt> = (0..n)
        .map(|k| if k == i { BigInt::one() } else { BigInt::zero() })
        .collect();
    Ok(snf.u_inv.mul_vector(&e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{rngs::StdRng, Rng, SeedableRng};

    fn check_decomposition(phi: &IntegerMatrix) -> SmithDecomposition {
        let snf = smith_normal_form(phi);
        assert!(snf.u.is_unimodular());
        assert!(snf.v.is_unimodular());
        assert_eq!(snf.u.mul(phi).mul(&snf.v), snf.d);
        assert_eq!(snf.u.mul(&snf.u_inv), IntegerMatrix::identity(phi.rows()));
        assert_eq!(snf.v.mul(&snf.v_inv), IntegerMatrix::identity(phi.cols()));
        // diagonal with nonnegative divisibility chain
        let diag = snf.diagonal();
        for i in 0..snf.d.rows() {
            for j in 0..snf.d.cols() {
                if i != j {
                    assert!(snf.d.get(i, j).is_zero());
                }
            }
        }
        for w in diag.windows(2) {
            assert!(!w[0].is_negative());
            if w[0].is_zero() {
                assert!(w[1].is_zero());
            } else {
                assert!((&w[1] % &w[0]).is_zero());
            }
        }
        snf
    }

    #[test]
    fn identity_and_scalars() {
        let id = IntegerMatrix::identity(2);
        let snf = check_decomposition(&id);
        assert_eq!(snf.d, id);
        let two = IntegerMatrix::from_i64(&[&[2]]);
        let snf = check_decomposition(&two);
        assert_eq!(snf.d, two);
    }

    #[test]
    fn diag_2_3() {
        let phi = IntegerMatrix::from_i64(&[&[2, 0], &[0, 3]]);
        let snf = check_decomposition(&phi);
        // invariant factor cross-check: d1 = gcd of entries, d1*d2 = |det|
        assert_eq!(snf.diagonal(), alloc::vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn membership_examples() {
        let phi = IntegerMatrix::from_i64(&[&[2]]);
        let w = image_membership(&phi, &[BigInt::from(4)]).unwrap();
        assert_eq!(w, Some(alloc::vec![BigInt::from(2)]));
        assert_eq!(image_membership(&phi, &[BigInt::from(1)]).unwrap(), None);

        let phi = IntegerMatrix::from_i64(&[&[2, 0], &[0, 3]]);
        // (2,2): brute force over |w_i| <= 2 finds nothing, and indeed 3 does not divide 2
        assert_eq!(
            image_membership(&phi, &[BigInt::from(2), BigInt::from(2)]).unwrap(),
            None
        );
    }

    #[test]
    fn membership_errors() {
        let phi = IntegerMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(
            image_membership(&phi, &[BigInt::one(), BigInt::one()]),
            Err(ArithError::NotInjective)
        );
        let phi = IntegerMatrix::from_i64(&[&[2]]);
        assert_eq!(
            image_membership(&phi, &[BigInt::one(), BigInt::one()]),
            Err(ArithError::DimensionMismatch)
        );
    }

    #[test]
    fn outside_image() {
        let phi = IntegerMatrix::from_i64(&[&[2]]);
        let u = vector_outside_image(&phi).unwrap();
        assert_eq!(image_membership(&phi, &u).unwrap(), None);
        assert_eq!(
            vector_outside_image(&IntegerMatrix::identity(3)),
            Err(ArithError::NotProperlyAscending)
        );
        let phi = IntegerMatrix::from_i64(&[&[1, 1], &[0, 2]]);
        let u = vector_outside_image(&phi).unwrap();
        assert_eq!(image_membership(&phi, &u).unwrap(), None);
    }

    #[test]
    fn random_matrices_agree_with_brute_force() {
        let mut rng = StdRng::seed_from_u64(42);
        let mut tested = 0;
        while tested < 60 {
            let n = rng.gen_range(1..=3usize);
            let entries: Vec<BigInt> = (0..n * n)
                .map(|_| BigInt::from(rng.gen_range(-5i64..=5)))
                .collect();
            let phi = IntegerMatrix::new(n, n, entries);
            if phi.determinant().is_zero() {
                continue;
            }
            tested += 1;
            check_decomposition(&phi);
            let x: Vec<BigInt> = (0..n)
                .map(|_| BigInt::from(rng.gen_range(-6i64..=6)))
                .collect();
            let got = image_membership(&phi, &x).unwrap();
            // brute force preimages with |w_i| <= 8 (conclusive for these
            // bounds only in the positive direction)
            let mut found = false;
            let mut w = alloc::vec![-8i64; n];
            'outer: loop {
                let wv: Vec<BigInt> = w.iter().map(|&v| BigInt::from(v)).collect();
                if phi.mul_vector(&wv) == x {
                    found = true;
                    break;
                }
                for i in 0..n {
                    if w[i] < 8 {
                        w[i] += 1;
                        continue 'outer;
                    }
                    w[i] = -8;
                }
                break;
            }
            match got {
                Some(pre) => {
                    assert_eq!(phi.mul_vector(&pre), x);
                }
                None => assert!(!found),
            }
            // witness outside the image, when the index is > 1
            match vector_outside_image(&phi) {
                Ok(u) => {
                    assert!(phi.determinant().abs() > BigInt::one());
                    assert_eq!(image_membership(&phi, &u).unwrap(), None);
                }
                Err(ArithError::NotProperlyAscending) => {
                    assert!(phi.determinant().abs().is_one());
                }
                Err(e) => panic!("unexpected error {e:?}"),
            }
        }
    }
}
