//! Family-tagged canonical forms of group elements.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::freewords::FreeWord;
use crate::matrix::IntegerMatrix;
use crate::nadic::NAdicFraction;

/// Canonical form of a group element. Equality of canonical forms is
/// equality in the group; every constructor in this crate returns
/// normalized values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupElement {
    /// BS(1,n): the affine map `x -> n^k x + b` with `b` in `Z[1/n]`.
    Bs { k: i64, b: NAdicFraction },
    /// Z wr Z: finitely supported `f : Z -> Z` (no zero values) and shift.
    Wreath { f: BTreeMap<i64, BigInt>, k: i64 },
    /// Discrete Heisenberg group, triple with the law
    /// `(x,y,z)(x',y',z') = (x+x', y+y', z+z'+x*y')`.
    Heisenberg { x: BigInt, y: BigInt, z: BigInt },
    /// Free abelian group of fixed rank.
    FreeAbelian { v: Vec<BigInt> },
    /// Ascending HNN over Z^d: `(phi^-level v) * t^k`, level-minimal.
    HnnAbelian {
        v: Vec<BigInt>,
        level: u32,
        k: i64,
    },
    /// Ascending HNN over F2: `s^-p w s^q` in Britton-style normal form.
    HnnFree { p: u32, w: FreeWord, q: u32 },
    /// Subgroup of GL(d, Z).
    Matrix { m: IntegerMatrix },
}

impl GroupElement {
    /// Canonical byte serialization; injective on canonical forms, used
    /// as the dedup key for ball enumeration and freeness checks.
    pub fn canonical_key(&self) -> Vec<u8> {
        let mut out = Vec::new();
        self.push_key(&mut out);
        out
    }

    pub fn push_key(&self, out: &mut Vec<u8>) {
        fn push_bigint(out: &mut Vec<u8>, v: &BigInt) {
            let b = v.to_signed_bytes_le();
            out.extend_from_slice(&(b.len() as u32).to_le_bytes());
            out.extend_from_slice(&b);
        }
        match self {
            GroupElement::Bs { k, b } => {
                out.push(1);
                out.extend_from_slice(&k.to_le_bytes());
                b.push_key(out);
            }
            GroupElement::Wreath { f, k } => {
                out.push(2);
                out.extend_from_slice(&k.to_le_bytes());
                out.extend_from_slice(&(f.len() as u32).to_le_bytes());
                for (pos, v) in f {
                    out.extend_from_slice(&pos.to_le_bytes());
                    push_bigint(out, v);
                }
            }
            GroupElement::Heisenberg { x, y, z } => {
                out.push(3);
                push_bigint(out, x);
                push_bigint(out, y);
                push_bigint(out, z);
            }
            GroupElement::FreeAbelian { v } => {
                out.push(4);
                out.extend_from_slice(&(v.len() as u32).to_le_bytes());
                for e in v {
                    push_bigint(out, e);
                }
            }
            GroupElement::HnnAbelian { v, level, k } => {
                out.push(5);
                out.extend_from_slice(&level.to_le_bytes());
                out.extend_from_slice(&k.to_le_bytes());
                out.extend_from_slice(&(v.len() as u32).to_le_bytes());
                for e in v {
                    push_bigint(out, e);
                }
            }
            GroupElement::HnnFree { p, w, q } => {
                out.push(6);
                out.extend_from_slice(&p.to_le_bytes());
                out.extend_from_slice(&q.to_le_bytes());
                w.push_key(out);
            }
            GroupElement::Matrix { m } => {
                out.push(7);
                m.push_key(out);
            }
        }
    }

    /// Human-readable rendering; `base` is the BS base when relevant.
    pub fn display(&self, base: u64) -> String {
        let mut s = String::new();
        match self {
            GroupElement::Bs { k, b } => {
                let _ = write!(s, "(k={}, b={})", k, b.to_display(base));
            }
            GroupElement::Wreath { f, k } => {
                s.push_str("(f={");
                for (i, (pos, v)) in f.iter().enumerate() {
                    if i > 0 {
                        s.push_str(", ");
                    }
                    let _ = write!(s, "{}:{}", pos, v);
                }
                let _ = write!(s, "}}, k={})", k);
            }
            GroupElement::Heisenberg { x, y, z } => {
                let _ = write!(s, "({}, {}, {})", x, y, z);
            }
            GroupElement::FreeAbelian { v } => {
                s.push('[');
                for (i, e) in v.iter().enumerate() {
                    if i > 0 {
                        s.push_str(", ");
                    }
                    let _ = write!(s, "{}", e);
                }
                s.push(']');
            }
            GroupElement::HnnAbelian { v, level, k } => {
                s.push_str("(v=[");
                for (i, e) in v.iter().enumerate() {
                    if i > 0 {
                        s.push_str(", ");
                    }
                    let _ = write!(s, "{}", e);
                }
                let _ = write!(s, "], j={}, k={})", level, k);
            }
            GroupElement::HnnFree { p, w, q } => {
                let mut parts: Vec<String> = Vec::new();
                if *p > 0 {
                    parts.push(alloc::format!("s^-{}", p));
                }
                if !w.is_empty() {
                    let mut ws = String::new();
                    for (i, &l) in w.letters().iter().enumerate() {
                        if i > 0 {
                            ws.push(' ');
                        }
                        if l > 0 {
                            let _ = write!(ws, "a{}", l);
                        } else {
                            let _ = write!(ws, "A{}", -l);
                        }
                    }
                    parts.push(ws);
                }
                if *q > 0 {
                    parts.push(alloc::format!("s^{}", q));
                }
                if parts.is_empty() {
                    s.push('1');
                } else {
                    s.push_str(&parts.join(" "));
                }
            }
            GroupElement::Matrix { m } => {
                let _ = write!(s, "{}", m);
            }
        }
        s
    }

    /// True for the identity of the element's family.
    pub fn is_identity(&self) -> bool {
        match self {
            GroupElement::Bs { k, b } => *k == 0 && b.is_zero(),
            GroupElement::Wreath { f, k } => *k == 0 && f.is_empty(),
            GroupElement::Heisenberg { x, y, z } => x.is_zero() && y.is_zero() && z.is_zero(),
            GroupElement::FreeAbelian { v } => v.iter().all(|e| e.is_zero()),
            GroupElement::HnnAbelian { v, level, k } => {
                *level == 0 && *k == 0 && v.iter().all(|e| e.is_zero())
            }
            GroupElement::HnnFree { p, w, q } => *p == 0 && *q == 0 && w.is_empty(),
            GroupElement::Matrix { m } => *m == IntegerMatrix::identity(m.rows()),
        }
    }
}
