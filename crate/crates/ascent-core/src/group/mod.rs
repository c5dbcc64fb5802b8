//! The concrete group families and their canonical-form arithmetic.
//!
//! A [`Group`] is an immutable handle built from a [`GroupSpec`]; it owns
//! whatever cached machinery its family needs (the Smith decomposition of
//! the self-embedding, the Stallings core graph of `im(psi)`) and exposes
//! identity / multiply / invert / generators plus word evaluation and the
//! stable-letter exponent homomorphism.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::freewords::FreeWord;
use crate::matrix::IntegerMatrix;
use crate::nadic::NAdicFraction;

mod element;
mod hnn_abelian;
mod hnn_free;

pub use element::GroupElement;
pub use hnn_abelian::HnnAbelianCtx;
pub use hnn_free::HnnFreeCtx;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    /// BS(1,n) = `<a, t | t a t^-1 = a^n>` with `n >= 2`.
    BaumslagSolitar { n: u64 },
    /// The wreath product Z wr Z (lamplighter over Z).
    WreathZZ,
    /// The discrete Heisenberg group.
    Heisenberg,
    /// Z^d.
    FreeAbelian { dim: usize },
    /// Ascending HNN over Z^d along an injective matrix.
    HnnAbelian { phi: IntegerMatrix },
    /// Ascending HNN over F2 along an injective endomorphism, given by the
    /// images of the two base generators.
    HnnFree { images: [FreeWord; 2] },
    /// Subgroup of GL(d,Z) generated by the listed unimodular matrices.
    MatrixGroup {
        dim: usize,
        generators: Vec<IntegerMatrix>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupError {
    BadParameter(String),
    NotInjective,
    UnknownSymbol(String),
    UnsupportedFamily,
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::BadParameter(m) => write!(f, "bad parameter: {m}"),
            GroupError::NotInjective => write!(f, "self-embedding is not injective"),
            GroupError::UnknownSymbol(s) => write!(f, "unknown generator symbol: {s}"),
            GroupError::UnsupportedFamily => write!(f, "operation unsupported for this family"),
        }
    }
}

/// A word over a group's named generating set: generator index and sign.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Word(pub Vec<(usize, i8)>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }
}

#[derive(Debug)]
enum Ctx {
    Simple,
    HnnAbelian(HnnAbelianCtx),
    HnnFree(HnnFreeCtx),
    Matrix { dim: usize },
}

#[derive(Debug)]
pub struct Group {
    spec: GroupSpec,
    ctx: Ctx,
}

pub fn build_group(spec: GroupSpec) -> Result<Group, GroupError> {
    Group::build(spec)
}

impl Group {
    pub fn build(spec: GroupSpec) -> Result<Group, GroupError> {
        let ctx = match &spec {
            GroupSpec::BaumslagSolitar { n } => {
                if *n < 2 {
                    return Err(GroupError::BadParameter("BS base must be >= 2".into()));
                }
                Ctx::Simple
            }
            GroupSpec::WreathZZ | GroupSpec::Heisenberg => Ctx::Simple,
            GroupSpec::FreeAbelian { dim } => {
                if *dim == 0 {
                    return Err(GroupError::BadParameter("rank must be positive".into()));
                }
                Ctx::Simple
            }
            GroupSpec::HnnAbelian { phi } => {
                if !phi.is_square() {
                    return Err(GroupError::BadParameter(
                        "self-embedding matrix must be square".into(),
                    ));
                }
                if phi.determinant().is_zero() {
                    return Err(GroupError::NotInjective);
                }
                Ctx::HnnAbelian(HnnAbelianCtx::new(phi.clone()))
            }
            GroupSpec::HnnFree { images } => {
                let ctx = HnnFreeCtx::new(images.clone()).ok_or(GroupError::NotInjective)?;
                Ctx::HnnFree(ctx)
            }
            GroupSpec::MatrixGroup { dim, generators } => {
                if *dim == 0 || generators.is_empty() {
                    return Err(GroupError::BadParameter(
                        "matrix group needs a positive dimension and generators".into(),
                    ));
                }
                for g in generators {
                    if g.rows() != *dim || g.cols() != *dim {
                        return Err(GroupError::BadParameter(
                            "generator dimension mismatch".into(),
                        ));
                    }
                    if !g.is_unimodular() {
                        return Err(GroupError::BadParameter(
                            "matrix generators must be unimodular for exact inverses".into(),
                        ));
                    }
                }
                Ctx::Matrix { dim: *dim }
            }
        };
        Ok(Group { spec, ctx })
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    /// The canonical spec string (the CLI mini-language form).
    pub fn spec_string(&self) -> String {
        match &self.spec {
            GroupSpec::BaumslagSolitar { n } => alloc::format!("bs:{n}"),
            GroupSpec::WreathZZ => "wreath".into(),
            GroupSpec::Heisenberg => "heis".into(),
            GroupSpec::FreeAbelian { dim } => alloc::format!("zd:{dim}"),
            GroupSpec::HnnAbelian { phi } => alloc::format!("hnn-abelian:{}", phi.to_literal()),
            GroupSpec::HnnFree { images } => {
                let render = |w: &FreeWord| -> String {
                    let mut parts = Vec::new();
                    for &l in w.letters() {
                        if l > 0 {
                            parts.push(alloc::format!("a{l}"));
                        } else {
                            parts.push(alloc::format!("A{}", -l));
                        }
                    }
                    parts.join(" ")
                };
                alloc::format!("hnn-free:{};{}", render(&images[0]), render(&images[1]))
            }
            GroupSpec::MatrixGroup { dim, generators } => {
                let gens: Vec<String> = generators.iter().map(|g| g.to_literal()).collect();
                alloc::format!("matrix:{dim}:{}", gens.join(","))
            }
        }
    }

    /// BS base for display purposes; 0 for other families.
    fn bs_base(&self) -> u64 {
        match &self.spec {
            GroupSpec::BaumslagSolitar { n } => *n,
            _ => 0,
        }
    }

    pub fn display_element(&self, g: &GroupElement) -> String {
        g.display(self.bs_base())
    }

    pub fn identity(&self) -> GroupElement {
        match (&self.spec, &self.ctx) {
            (GroupSpec::BaumslagSolitar { .. }, _) => GroupElement::Bs {
                k: 0,
                b: NAdicFraction::zero(),
            },
            (GroupSpec::WreathZZ, _) => GroupElement::Wreath {
                f: BTreeMap::new(),
                k: 0,
            },
            (GroupSpec::Heisenberg, _) => GroupElement::Heisenberg {
                x: BigInt::zero(),
                y: BigInt::zero(),
                z: BigInt::zero(),
            },
            (GroupSpec::FreeAbelian { dim }, _) => GroupElement::FreeAbelian {
                v: alloc::vec![BigInt::zero(); *dim],
            },
            (_, Ctx::HnnAbelian(c)) => c.identity(),
            (_, Ctx::HnnFree(c)) => c.identity(),
            (_, Ctx::Matrix { dim }) => GroupElement::Matrix {
                m: IntegerMatrix::identity(*dim),
            },
            _ => unreachable!("ctx always matches spec"),
        }
    }

    /// Names of the positive generators, fixing the word alphabet
    /// (lowercase generator, uppercase inverse in textual input).
    pub fn generator_names(&self) -> Vec<String> {
        match &self.spec {
            GroupSpec::BaumslagSolitar { .. } | GroupSpec::WreathZZ => {
                alloc::vec!["a".into(), "t".into()]
            }
            GroupSpec::Heisenberg => alloc::vec!["x".into(), "y".into()],
            GroupSpec::FreeAbelian { dim } => {
                (1..=*dim).map(|i| alloc::format!("e{i}")).collect()
            }
            GroupSpec::HnnAbelian { phi } => {
                let mut names: Vec<String> =
                    (1..=phi.cols()).map(|i| alloc::format!("e{i}")).collect();
                names.push("t".into());
                names
            }
            GroupSpec::HnnFree { .. } => alloc::vec!["a1".into(), "a2".into(), "t".into()],
            GroupSpec::MatrixGroup { generators, .. } => (1..=generators.len())
                .map(|i| alloc::format!("g{i}"))
                .collect(),
        }
    }

    pub fn generator(&self, index: usize) -> Result<GroupElement, GroupError> {
        let count = self.generator_names().len();
        if index >= count {
            return Err(GroupError::UnknownSymbol(alloc::format!("#{index}")));
        }
        Ok(match (&self.spec, &self.ctx) {
            (GroupSpec::BaumslagSolitar { .. }, _) => {
                if index == 0 {
                    GroupElement::Bs {
                        k: 0,
                        b: NAdicFraction::from_integer(1),
                    }
                } else {
                    GroupElement::Bs {
                        k: 1,
                        b: NAdicFraction::zero(),
                    }
                }
            }
            (GroupSpec::WreathZZ, _) => {
                if index == 0 {
                    let mut f = BTreeMap::new();
                    f.insert(0i64, BigInt::one());
                    GroupElement::Wreath { f, k: 0 }
                } else {
                    GroupElement::Wreath {
                        f: BTreeMap::new(),
                        k: 1,
                    }
                }
            }
            (GroupSpec::Heisenberg, _) => {
                if index == 0 {
                    GroupElement::Heisenberg {
                        x: BigInt::one(),
                        y: BigInt::zero(),
                        z: BigInt::zero(),
                    }
                } else {
                    GroupElement::Heisenberg {
                        x: BigInt::zero(),
                        y: BigInt::one(),
                        z: BigInt::zero(),
                    }
                }
            }
            (GroupSpec::FreeAbelian { dim }, _) => {
                let mut v = alloc::vec![BigInt::zero(); *dim];
                v[index] = BigInt::one();
                GroupElement::FreeAbelian { v }
            }
            (_, Ctx::HnnAbelian(c)) => {
                if index < c.dim {
                    c.base_generator(index)
                } else {
                    c.stable_letter()
                }
            }
            (_, Ctx::HnnFree(c)) => {
                if index < 2 {
                    c.base_generator(index)
                } else {
                    c.stable_letter()
                }
            }
            (GroupSpec::MatrixGroup { generators, .. }, _) => GroupElement::Matrix {
                m: generators[index].clone(),
            },
            _ => unreachable!("ctx always matches spec"),
        })
    }

    /// The named symmetric generating set: each generator followed by its
    /// inverse (uppercase name).
    pub fn symmetric_generators(&self) -> Vec<(String, GroupElement)> {
        let mut out = Vec::new();
        for (i, name) in self.generator_names().into_iter().enumerate() {
            let g = self.generator(i).expect("index in range");
            out.push((name.clone(), g.clone()));
            let mut upper = String::new();
            for ch in name.chars() {
                upper.extend(ch.to_uppercase());
            }
            out.push((upper, self.invert(&g)));
        }
        out
    }

    pub fn multiply(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        match (&self.spec, &self.ctx) {
            (GroupSpec::BaumslagSolitar { n }, _) => {
                let (GroupElement::Bs { k: k1, b: b1 }, GroupElement::Bs { k: k2, b: b2 }) = (a, b)
                else {
                    panic!("family mismatch");
                };
                GroupElement::Bs {
                    k: k1 + k2,
                    b: b1.add(&b2.scale_by_base_power(*k1, *n), *n),
                }
            }
            (GroupSpec::WreathZZ, _) => {
                let (GroupElement::Wreath { f: f1, k: k1 }, GroupElement::Wreath { f: f2, k: k2 }) =
                    (a, b)
                else {
                    panic!("family mismatch");
                };
                let mut f = f1.clone();
                for (pos, v) in f2 {
                    let key = pos + k1;
                    let entry = f.entry(key).or_insert_with(BigInt::zero);
                    *entry += v;
                    if entry.is_zero() {
                        f.remove(&key);
                    }
                }
                GroupElement::Wreath { f, k: k1 + k2 }
            }
            (GroupSpec::Heisenberg, _) => {
                let (
                    GroupElement::Heisenberg { x: x1, y: y1, z: z1 },
                    GroupElement::Heisenberg { x: x2, y: y2, z: z2 },
                ) = (a, b)
                else {
                    panic!("family mismatch");
                };
                GroupElement::Heisenberg {
                    x: x1 + x2,
                    y: y1 + y2,
                    z: z1 + z2 + x1 * y2,
                }
            }
            (GroupSpec::FreeAbelian { .. }, _) => {
                let (GroupElement::FreeAbelian { v: v1 }, GroupElement::FreeAbelian { v: v2 }) =
                    (a, b)
                else {
                    panic!("family mismatch");
                };
                GroupElement::FreeAbelian {
                    v: v1.iter().zip(v2).map(|(x, y)| x + y).collect(),
                }
            }
            (_, Ctx::HnnAbelian(c)) => c.multiply(a, b),
            (_, Ctx::HnnFree(c)) => c.multiply(a, b),
            (_, Ctx::Matrix { .. }) => {
                let (GroupElement::Matrix { m: m1 }, GroupElement::Matrix { m: m2 }) = (a, b)
                else {
                    panic!("family mismatch");
                };
                GroupElement::Matrix { m: m1.mul(m2) }
            }
            _ => unreachable!("ctx always matches spec"),
        }
    }

    pub fn invert(&self, a: &GroupElement) -> GroupElement {
        match (&self.spec, &self.ctx) {
            (GroupSpec::BaumslagSolitar { n }, _) => {
                let GroupElement::Bs { k, b } = a else {
                    panic!("family mismatch");
                };
                GroupElement::Bs {
                    k: -k,
                    b: b.neg().scale_by_base_power(-k, *n),
                }
            }
            (GroupSpec::WreathZZ, _) => {
                let GroupElement::Wreath { f, k } = a else {
                    panic!("family mismatch");
                };
                GroupElement::Wreath {
                    f: f.iter().map(|(pos, v)| (pos - k, -v)).collect(),
                    k: -k,
                }
            }
            (GroupSpec::Heisenberg, _) => {
                let GroupElement::Heisenberg { x, y, z } = a else {
                    panic!("family mismatch");
                };
                GroupElement::Heisenberg {
                    x: -x,
                    y: -y,
                    z: -z + x * y,
                }
            }
            (GroupSpec::FreeAbelian { .. }, _) => {
                let GroupElement::FreeAbelian { v } = a else {
                    panic!("family mismatch");
                };
                GroupElement::FreeAbelian {
                    v: v.iter().map(|x| -x).collect(),
                }
            }
            (_, Ctx::HnnAbelian(c)) => c.invert(a),
            (_, Ctx::HnnFree(c)) => c.invert(a),
            (_, Ctx::Matrix { .. }) => {
                let GroupElement::Matrix { m } = a else {
                    panic!("family mismatch");
                };
                GroupElement::Matrix {
                    m: m.unimodular_inverse(),
                }
            }
            _ => unreachable!("ctx always matches spec"),
        }
    }

    pub fn evaluate_word(&self, w: &Word) -> Result<GroupElement, GroupError> {
        let mut acc = self.identity();
        for &(idx, sign) in &w.0 {
            let g = self.generator(idx)?;
            let g = if sign >= 0 { g } else { self.invert(&g) };
            acc = self.multiply(&acc, &g);
        }
        Ok(acc)
    }

    /// Image of `g` under the homomorphism to `Z = <t>` killing the base.
    pub fn t_exponent(&self, g: &GroupElement) -> Result<i64, GroupError> {
        match g {
            GroupElement::Bs { k, .. }
            | GroupElement::Wreath { k, .. }
            | GroupElement::HnnAbelian { k, .. } => Ok(*k),
            GroupElement::HnnFree { p, q, .. } => Ok(*q as i64 - *p as i64),
            _ => Err(GroupError::UnsupportedFamily),
        }
    }

    pub fn hnn_abelian_ctx(&self) -> Option<&HnnAbelianCtx> {
        match &self.ctx {
            Ctx::HnnAbelian(c) => Some(c),
            _ => None,
        }
    }

    pub fn hnn_free_ctx(&self) -> Option<&HnnFreeCtx> {
        match &self.ctx {
            Ctx::HnnFree(c) => Some(c),
            _ => None,
        }
    }
}
