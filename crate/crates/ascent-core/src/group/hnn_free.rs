//! Ascending HNN extension of the rank-2 free group along an injective
//! endomorphism `psi`: `<a1, a2, s | s w s^-1 = psi(w)>`.
//!
//! Elements carry the Britton-style normal form `s^-p w s^q` with `p, q >= 0`
//! and `w` reduced; the form is minimal: `p = 0`, or `q = 0`, or `w` lies
//! outside the image of `psi`. Image membership and preimages go through
//! the Stallings core graph of `im(psi)`, built once per group.

use alloc::vec::Vec;

use crate::freewords::FreeWord;
use crate::stallings::CoreGraph;

use super::element::GroupElement;

#[derive(Debug)]
pub struct HnnFreeCtx {
    pub images: Vec<FreeWord>, // psi(a1), psi(a2)
    pub core: CoreGraph,
}

impl HnnFreeCtx {
    /// `None` when `psi` is not injective (image subgroup of rank < 2).
    pub fn new(images: [FreeWord; 2]) -> Option<Self> {
        let images = alloc::vec![images[0].clone(), images[1].clone()];
        let core = CoreGraph::build(2, &images);
        if core.subgroup_rank() != 2 {
            return None;
        }
        Some(HnnFreeCtx { images, core })
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::HnnFree {
            p: 0,
            w: FreeWord::empty(),
            q: 0,
        }
    }

    pub fn base_generator(&self, i: usize) -> GroupElement {
        self.normalize(0, FreeWord::generator(i), 0)
    }

    pub fn stable_letter(&self) -> GroupElement {
        GroupElement::HnnFree {
            p: 0,
            w: FreeWord::empty(),
            q: 1,
        }
    }

    pub fn element_from_base_word(&self, w: FreeWord) -> GroupElement {
        self.normalize(0, w, 0)
    }

    /// Reduce `(p, w, q)` to normal form: while both exponents are positive
    /// and `w = psi(w')`, replace by `(p-1, w', q-1)`.
    pub fn normalize(&self, mut p: u32, mut w: FreeWord, mut q: u32) -> GroupElement {
        while p > 0 && q > 0 && self.core.contains(&w) {
            let w2 = self
                .core
                .express(&w)
                .expect("member of im(psi) must have a preimage expression");
            w = w2;
            p -= 1;
            q -= 1;
        }
        GroupElement::HnnFree { p, w, q }
    }

    pub fn multiply(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let (GroupElement::HnnFree { p: p1, w: w1, q: q1 },
             GroupElement::HnnFree { p: p2, w: w2, q: q2 }) = (a, b)
        else {
            panic!("family mismatch");
        };
        // s^-p1 w1 s^(q1-p2) w2 s^q2, pushing the middle power outward
        if q1 >= p2 {
            let r = q1 - p2;
            let w = w1.concat(&w2.apply_endomorphism_power(&self.images, r));
            self.normalize(*p1, w, r + q2)
        } else {
            let r = p2 - q1;
            let w = w1.apply_endomorphism_power(&self.images, r).concat(w2);
            self.normalize(p1 + r, w, *q2)
        }
    }

    pub fn invert(&self, a: &GroupElement) -> GroupElement {
        let GroupElement::HnnFree { p, w, q } = a else {
            panic!("family mismatch");
        };
        self.normalize(*q, w.inverse(), *p)
    }

    /// Base membership: `p = q = 0`.
    pub fn in_base(&self, g: &GroupElement) -> bool {
        matches!(g, GroupElement::HnnFree { p: 0, q: 0, .. })
    }

    /// Membership in `B1 = s B s^-1 = im(psi)`.
    pub fn in_image_subgroup(&self, g: &GroupElement) -> bool {
        match g {
            GroupElement::HnnFree { p: 0, w, q: 0 } => self.core.contains(w),
            _ => false,
        }
    }
}
