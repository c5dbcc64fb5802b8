//! Ascending HNN extension of a free abelian base: `<Z^d, t | t v t^-1 = phi v>`
//! for an injective integer matrix `phi`.
//!
//! Elements live in the direct limit of `Z^d -phi-> Z^d -phi-> ...` together
//! with a `t`-exponent: `(v, level, k)` stands for `(phi^-level v) t^k`.
//! Canonical forms are level-minimal: level 0, or `v` outside the image of
//! `phi` (greedy division by `phi` via the Smith decomposition).

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::matrix::IntegerMatrix;
use crate::snf::{self, SmithDecomposition};

use super::element::GroupElement;

#[derive(Debug)]
pub struct HnnAbelianCtx {
    pub phi: IntegerMatrix,
    pub snf: SmithDecomposition,
    pub dim: usize,
}

impl HnnAbelianCtx {
    pub fn new(phi: IntegerMatrix) -> Self {
        let snf = snf::smith_normal_form(&phi);
        let dim = phi.cols();
        HnnAbelianCtx { phi, snf, dim }
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::HnnAbelian {
            v: alloc::vec![BigInt::zero(); self.dim],
            level: 0,
            k: 0,
        }
    }

    pub fn base_generator(&self, i: usize) -> GroupElement {
        let mut v = alloc::vec![BigInt::zero(); self.dim];
        v[i] = BigInt::from(1);
        self.normalize(v, 0, 0)
    }

    pub fn stable_letter(&self) -> GroupElement {
        GroupElement::HnnAbelian {
            v: alloc::vec![BigInt::zero(); self.dim],
            level: 0,
            k: 1,
        }
    }

    pub fn normalize(&self, mut v: Vec<BigInt>, mut level: u32, k: i64) -> GroupElement {
        if v.iter().all(|e| e.is_zero()) {
            return GroupElement::HnnAbelian {
                v,
                level: 0,
                k,
            };
        }
        while level > 0 {
            match snf::image_membership_with(&self.snf, &self.phi, &v)
                .expect("group construction validated phi")
            {
                Some(w) => {
                    v = w;
                    level -= 1;
                }
                None => break,
            }
        }
        GroupElement::HnnAbelian { v, level, k }
    }

    /// Conjugation `t^j b t^-j` on a limit element `(v, level)`.
    fn conjugate(&self, v: &[BigInt], level: u32, j: i64) -> (Vec<BigInt>, u32) {
        if j >= 0 {
            let mut j = j as u32;
            let mut level = level;
            let mut v = v.to_vec();
            // consume levels first, then apply phi
            let drop = j.min(level);
            level -= drop;
            j -= drop;
            for _ in 0..j {
                v = self.phi.mul_vector(&v);
            }
            (v, level)
        } else {
            (v.to_vec(), level + (-j) as u32)
        }
    }

    pub fn multiply(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let (GroupElement::HnnAbelian { v: v1, level: l1, k: k1 },
             GroupElement::HnnAbelian { v: v2, level: l2, k: k2 }) = (a, b)
        else {
            panic!("family mismatch");
        };
        let (cv, cl) = self.conjugate(v2, *l2, *k1);
        // add at a common level
        let common = (*l1).max(cl);
        let lift = |v: &[BigInt], from: u32| -> Vec<BigInt> {
            let mut v = v.to_vec();
            for _ in from..common {
                v = self.phi.mul_vector(&v);
            }
            v
        };
        let s1 = lift(v1, *l1);
        let s2 = lift(&cv, cl);
        let sum: Vec<BigInt> = s1.iter().zip(&s2).map(|(x, y)| x + y).collect();
        self.normalize(sum, common, k1 + k2)
    }

    pub fn invert(&self, a: &GroupElement) -> GroupElement {
        let GroupElement::HnnAbelian { v, level, k } = a else {
            panic!("family mismatch");
        };
        let (cv, cl) = self.conjugate(v, *level, -*k);
        self.normalize(cv.iter().map(|x| -x).collect(), cl, -*k)
    }

    /// Base membership: a level-0, exponent-0 element of the original copy
    /// of `Z^d`.
    pub fn in_base(&self, g: &GroupElement) -> bool {
        matches!(g, GroupElement::HnnAbelian { level, k, .. } if *level == 0 && *k == 0)
    }

    /// Membership in `B1 = t B t^-1 = phi(Z^d)`.
    pub fn in_image_subgroup(&self, g: &GroupElement) -> bool {
        match g {
            GroupElement::HnnAbelian { v, level, k } => {
                *level == 0
                    && *k == 0
                    && (v.iter().all(|e| e.is_zero())
                        || snf::image_membership_with(&self.snf, &self.phi, v)
                            .expect("validated phi")
                            .is_some())
            }
            _ => false,
        }
    }
}
