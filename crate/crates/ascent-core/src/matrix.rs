//! Dense integer matrices with arbitrary-precision entries.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>, // row-major
}

impl IntegerMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        IntegerMatrix { rows, cols, entries }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows[0].len();
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            entries.extend(row.iter().map(|&x| BigInt::from(x)));
        }
        IntegerMatrix::new(r, c, entries)
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = alloc::vec![BigInt::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = BigInt::one();
        }
        IntegerMatrix::new(n, n, entries)
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntegerMatrix::new(rows, cols, alloc::vec![BigInt::zero(); rows * cols])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntegerMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vector(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    /// Determinant by fraction-free Gaussian elimination (Bareiss).
    pub fn determinant(&self) -> BigInt {
        assert!(self.is_square(), "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = num / &prev;
                }
            }
            prev = m[k][k].clone();
        }
        sign * m[n - 1][n - 1].clone()
    }

    pub fn is_unimodular(&self) -> bool {
        self.is_square() && self.determinant().abs().is_one()
    }

    /// Inverse of a unimodular matrix (exact, via the adjugate).
    pub fn unimodular_inverse(&self) -> IntegerMatrix {
        assert!(self.is_square());
        let n = self.rows;
        let det = self.determinant();
        assert!(det.abs().is_one(), "matrix is not unimodular");
        let mut out = IntegerMatrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                // cofactor C_ji
                let minor = self.minor(j, i);
                let c = minor.determinant();
                let s = if (i + j) % 2 == 0 { c } else { -c };
                out.set(i, j, s * &det); // det = ±1, so dividing == multiplying
            }
        }
        out
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> IntegerMatrix {
        let n = self.rows;
        if n == 1 {
            // 0x0 minor: determinant 1 by convention; represent as [[1]]
            return IntegerMatrix::identity(1);
        }
        let mut entries = Vec::with_capacity((n - 1) * (n - 1));
        for i in 0..n {
            if i == skip_row {
                continue;
            }
            for j in 0..n {
                if j == skip_col {
                    continue;
                }
                entries.push(self.get(i, j).clone());
            }
        }
        IntegerMatrix::new(n - 1, n - 1, entries)
    }

    /// Nested-bracket literal, e.g. `[[2,0],[0,3]]`.
    pub fn to_literal(&self) -> String {
        let mut s = String::from("[");
        for i in 0..self.rows {
            if i > 0 {
                s.push(',');
            }
            s.push('[');
            for j in 0..self.cols {
                if j > 0 {
                    s.push(',');
                }
                let _ = write!(s, "{}", self.get(i, j));
            }
            s.push(']');
        }
        s.push(']');
        s
    }

    pub fn push_key(&self, out: &mut Vec<u8>) {
        out.extend_from_slice(&(self.rows as u32).to_le_bytes());
        out.extend_from_slice(&(self.cols as u32).to_le_bytes());
        for e in &self.entries {
            let b = e.to_signed_bytes_le();
            out.extend_from_slice(&(b.len() as u32).to_le_bytes());
            out.extend_from_slice(&b);
        }
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_literal())
    }
}
