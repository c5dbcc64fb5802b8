//! Finite symmetric-group quotients of `BS(1,n)` and the separation
//! failure: in every finite image, `a` falls into the image of the proper
//! subgroup `B1 = <a^n>`, so the two can never be separated. A cyclic
//! contrast case shows separation succeeding in the polycyclic world.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// The hard cap on symmetric-group degree: enumeration is per-`a`
/// centralizer-coset work, sized for `8! = 40320`.
pub const MAX_DEGREE: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuotientError {
    DegreeTooLarge { m: usize },
}

impl fmt::Display for QuotientError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuotientError::DegreeTooLarge { m } => {
                write!(f, "degree {m} exceeds the cap {MAX_DEGREE}")
            }
        }
    }
}

/// A permutation of `{0, ..., m-1}` as its image array.
///
/// Composition is left-to-right: `(p.compose(q))` applies `p` first,
/// then `q`, i.e. `x -> q[p[x]]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Permutation {
            images: (0..m).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let m = images.len();
        let mut seen = alloc::vec![false; m];
        for &i in &images {
            if i >= m || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = alloc::vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Permutation { images }
    }

    pub fn power(&self, mut n: u64) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            n >>= 1;
        }
        acc
    }

    pub fn order(&self) -> u64 {
        let mut p = self.clone();
        let id = Permutation::identity(self.degree());
        let mut n = 1;
        while p != id {
            p = p.compose(self);
            n += 1;
        }
        n
    }

    /// Cycles of length >= 2, each rotated to start at its least point,
    /// listed by (length descending, least point ascending).
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let m = self.degree();
        let mut seen = alloc::vec![false; m];
        let mut cycles = Vec::new();
        for start in 0..m {
            if seen[start] {
                continue;
            }
            let mut cycle = alloc::vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            if cycle.len() >= 2 {
                cycles.push(cycle);
            }
        }
        cycles.sort_by_key(|c| (usize::MAX - c.len(), c[0]));
        cycles
    }

    /// Cycle lengths including fixed points, descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let m = self.degree();
        let mut seen = alloc::vec![false; m];
        let mut lens = Vec::new();
        for start in 0..m {
            if seen[start] {
                continue;
            }
            let mut len = 1;
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                len += 1;
                x = self.apply(x);
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// Cycle notation: `(0 1 2)(3 4)`, identity rendered `()`.
    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".into();
        }
        let mut s = String::new();
        for c in cycles {
            s.push('(');
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    s.push(' ');
                }
                s.push_str(&alloc::format!("{x}"));
            }
            s.push(')');
        }
        s
    }
}

/// All elements of `S_m`, in lexicographic image-array order.
fn all_permutations(m: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..m).collect();
    loop {
        out.push(Permutation {
            images: current.clone(),
        });
        // next lexicographic permutation
        let Some(i) = (0..m.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1])
        else {
            break;
        };
        let j = (i + 1..m).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
    }
    out
}

/// The full subgroup generated by `gens`, by closure under multiplication;
/// sorted by image array.
pub fn subgroup_closure(gens: &[Permutation], degree: usize) -> Vec<Permutation> {
    let mut seen: BTreeSet<Permutation> = BTreeSet::new();
    seen.insert(Permutation::identity(degree));
    let mut frontier: Vec<Permutation> = alloc::vec![Permutation::identity(degree)];
    while let Some(p) = frontier.pop() {
        for g in gens {
            let q = p.compose(g);
            if seen.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    seen.into_iter().collect()
}

/// A homomorphism `BS(1,n) -> S_m`, i.e. a pair satisfying the relation
/// `t a t^-1 = a^n` exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteHom {
    pub degree: usize,
    pub a: Permutation,
    pub t: Permutation,
}

impl FiniteHom {
    pub fn relation_holds(&self, n: u64) -> bool {
        // left-to-right composition: t^-1 first, then a, then t
        self.t
            .inverse()
            .compose(&self.a)
            .compose(&self.t)
            == self.a.power(n)
    }
}

/// A deterministic conjugator `c` with `c^-1 p c = q`, when the cycle
/// types match: align cycles in (length desc, least point asc) order and
/// pair leftover fixed points in ascending order.
fn conjugator(p: &Permutation, q: &Permutation) -> Option<Permutation> {
    if p.cycle_type() != q.cycle_type() {
        return None;
    }
    let m = p.degree();
    let (pc, qc) = (p.cycles(), q.cycles());
    let mut images = alloc::vec![usize::MAX; m];
    for (cp, cq) in pc.iter().zip(&qc) {
        for (x, y) in cp.iter().zip(cq) {
            images[*x] = *y;
        }
    }
    let mut fixed_q: Vec<usize> = (0..m).filter(|&x| q.apply(x) == x).collect();
    fixed_q.retain(|y| !images.contains(y));
    let mut fq = fixed_q.into_iter();
    for slot in images.iter_mut() {
        if *slot == usize::MAX {
            *slot = fq.next().expect("counts match");
        }
    }
    let c = Permutation { images };
    debug_assert_eq!(&c.inverse().compose(p).compose(&c), q);
    Some(c)
}

/// The centralizer of `p` in `S_m`, by scan over the group generated
/// cheaply: for the degrees in scope (m <= 8) a filtered scan of `S_m`
/// is affordable and unambiguous.
fn centralizer(p: &Permutation) -> Vec<Permutation> {
    all_permutations(p.degree())
        .into_iter()
        .filter(|z| z.compose(p) == p.compose(z))
        .collect()
}

/// All homomorphisms `BS(1,n) -> S_m`: for each `a`, the solutions of
/// `t^-1 a t = a^n` form either the empty set or a full coset
/// `centralizer(a) * c` for any one conjugator `c`. Sorted by
/// (a image array, t image array).
pub fn enumerate_homs_bs(n: u64, m: usize) -> Result<Vec<FiniteHom>, QuotientError> {
    assert!(n >= 2 && m >= 1);
    if m > MAX_DEGREE {
        return Err(QuotientError::DegreeTooLarge { m });
    }
    let mut out = Vec::new();
    for a in all_permutations(m) {
        let target = a.power(n);
        // want t with t^-1 a t = a^n: conjugator from a to a^n
        let Some(c) = conjugator(&a, &target) else {
            continue;
        };
        let mut ts: Vec<Permutation> = centralizer(&a)
            .into_iter()
            .map(|z| z.compose(&c))
            .collect();
        ts.sort();
        for t in ts {
            out.push(FiniteHom {
                degree: m,
                a: a.clone(),
                t,
            });
        }
    }
    Ok(out)
}

/// One row of the separation report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomRecord {
    pub hom: FiniteHom,
    pub order_a: u64,
    /// `a` lands inside the image of `B1 = <a^n>`.
    pub in_subgroup: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationReport {
    pub n: u64,
    pub max_degree: usize,
    pub records: Vec<HomRecord>,
    /// True when some homomorphism keeps `a` outside `<a^n>`; the theorem
    /// says this never happens.
    pub separated: bool,
}

/// Scan all degrees `1..=max_degree`: in every finite image of `BS(1,n)`,
/// the element `a` lies in the image of `<a^n>` (membership decided by
/// closure and cross-checked against `gcd(order(a), n) = 1`).
pub fn separation_report(n: u64, max_degree: usize) -> Result<SeparationReport, QuotientError> {
    if max_degree > MAX_DEGREE {
        return Err(QuotientError::DegreeTooLarge { m: max_degree });
    }
    let mut records = Vec::new();
    let mut separated = false;
    for m in 1..=max_degree {
        for hom in enumerate_homs_bs(n, m)? {
            let order_a = hom.a.order();
            let an = hom.a.power(n);
            let sub = subgroup_closure(&[an], m);
            let in_subgroup = sub.binary_search(&hom.a).is_ok();
            // number-theoretic cross-check of closure membership
            debug_assert_eq!(in_subgroup, num_integer::gcd(order_a, n) == 1);
            if !in_subgroup {
                separated = true;
            }
            records.push(HomRecord {
                hom,
                order_a,
                in_subgroup,
            });
        }
    }
    Ok(SeparationReport {
        n,
        max_degree,
        records,
        separated,
    })
}

/// The polycyclic contrast: in `Z`, the subgroup `<a^k>` is separated
/// from `a` by the finite quotient `Z -> Z/k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicSeparation {
    pub modulus: u64,
    /// Image of `a` in `Z/k`.
    pub image_of_a: u64,
    /// Image of the subgroup `<a^k>`: always `{0}`.
    pub subgroup_image: Vec<u64>,
}

pub fn polycyclic_separation_demo(k: u64) -> CyclicSeparation {
    assert!(k >= 2);
    CyclicSeparation {
        modulus: k,
        image_of_a: 1 % k,
        subgroup_image: alloc::vec![0],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(images: &[usize]) -> Permutation {
        Permutation::from_images(images.to_vec()).unwrap()
    }

    #[test]
    fn composition_convention() {
        // p = (0 1), q = (1 2); p then q sends 0 -> 1 -> 2
        let p = perm(&[1, 0, 2]);
        let q = perm(&[0, 2, 1]);
        let pq = p.compose(&q);
        assert_eq!(pq.apply(0), 2);
        assert_eq!(pq, perm(&[2, 0, 1]));
        assert_eq!(p.compose(&p.inverse()), Permutation::identity(3));
    }

    #[test]
    fn cycle_notation() {
        assert_eq!(Permutation::identity(4).to_cycle_string(), "()");
        assert_eq!(perm(&[1, 2, 0]).to_cycle_string(), "(0 1 2)");
        assert_eq!(perm(&[1, 0, 3, 2]).to_cycle_string(), "(0 1)(2 3)");
        // longest cycle first
        assert_eq!(perm(&[1, 0, 3, 4, 2]).to_cycle_string(), "(2 3 4)(0 1)");
    }

    #[test]
    fn orders_and_powers() {
        let c3 = perm(&[1, 2, 0]);
        assert_eq!(c3.order(), 3);
        assert_eq!(c3.power(3), Permutation::identity(3));
        assert_eq!(c3.power(4), c3);
        assert_eq!(Permutation::identity(5).order(), 1);
    }

    #[test]
    fn closure_examples() {
        assert_eq!(subgroup_closure(&[perm(&[1, 2, 0])], 3).len(), 3);
        assert_eq!(subgroup_closure(&[], 3), alloc::vec![Permutation::identity(3)]);
        assert_eq!(
            subgroup_closure(&[perm(&[1, 0, 2]), perm(&[1, 2, 0])], 3).len(),
            6
        );
    }

    #[test]
    fn hom_counts() {
        assert_eq!(enumerate_homs_bs(2, 3).unwrap().len(), 12);
        assert_eq!(enumerate_homs_bs(2, 2).unwrap().len(), 2);
        assert_eq!(enumerate_homs_bs(3, 2).unwrap().len(), 4);
        assert_eq!(
            enumerate_homs_bs(2, 9).unwrap_err(),
            QuotientError::DegreeTooLarge { m: 9 }
        );
    }

    #[test]
    fn matches_brute_force_small_degrees() {
        for n in [2u64, 3] {
            for m in 1..=4usize {
                let fast = enumerate_homs_bs(n, m).unwrap();
                let mut brute = Vec::new();
                for a in all_permutations(m) {
                    for t in all_permutations(m) {
                        let hom = FiniteHom {
                            degree: m,
                            a: a.clone(),
                            t,
                        };
                        if hom.relation_holds(n) {
                            brute.push(hom);
                        }
                    }
                }
                let key = |h: &FiniteHom| (h.a.clone(), h.t.clone());
                let mut fs: Vec<_> = fast.iter().map(key).collect();
                let mut bs: Vec<_> = brute.iter().map(key).collect();
                fs.sort();
                bs.sort();
                assert_eq!(fs, bs, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn relation_exact_on_all_emitted() {
        for n in [2u64, 3, 5] {
            for m in 1..=5usize {
                for hom in enumerate_homs_bs(n, m).unwrap() {
                    assert!(hom.relation_holds(n));
                }
            }
        }
    }

    #[test]
    fn ascending_chain_collapses_in_finite_images() {
        // <a^n> = <a> as sets in every finite image
        for hom in enumerate_homs_bs(2, 5).unwrap() {
            let m = hom.degree;
            let whole = subgroup_closure(&[hom.a.clone()], m);
            let image = subgroup_closure(&[hom.a.power(2)], m);
            assert_eq!(whole, image);
        }
    }

    #[test]
    fn never_separated() {
        for n in [2u64, 3] {
            let report = separation_report(n, 6).unwrap();
            assert!(!report.separated);
            for rec in &report.records {
                assert!(rec.in_subgroup);
                assert_eq!(num_integer::gcd(rec.order_a, n), 1);
            }
        }
        // vacuous degenerate degree
        let report = separation_report(2, 1).unwrap();
        assert!(!report.separated);
        assert_eq!(report.records.len(), 1);
    }

    #[test]
    fn polycyclic_contrast() {
        for k in [2u64, 3, 6] {
            let s = polycyclic_separation_demo(k);
            assert_eq!(s.modulus, k);
            assert_eq!(s.image_of_a, 1);
            assert_eq!(s.subgroup_image, alloc::vec![0]);
            assert!(!s.subgroup_image.contains(&s.image_of_a));
        }
    }
}
