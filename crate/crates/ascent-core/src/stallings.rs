//! Stallings folding for finitely generated subgroups of free groups:
//! membership, and expression of members in the given generators.
//!
//! The folded core graph answers membership by tracing. For expressions we
//! read the traced loop off in the Nielsen basis coming from a spanning
//! tree, then change basis back to the caller's generators by Nielsen
//! reduction with recorded transformations.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::freewords::{FreeWord, Letter};

#[derive(Debug, Clone)]
pub struct CoreGraph {
    rank: usize,
    base: usize,
    trans: Vec<Vec<Option<usize>>>, // [vertex][direction]
    gens: Vec<FreeWord>,
    tree_parent: Vec<Option<(usize, Letter)>>,
    basis_edges: Vec<(usize, Letter, usize)>,
    /// Expression of each Nielsen-basis element over the generator
    /// alphabet; empty when the change of basis could not be recovered.
    basis_expr: Option<Vec<FreeWord>>,
}

fn dir(l: Letter) -> usize {
    debug_assert!(l != 0);
    if l > 0 {
        2 * (l as usize - 1)
    } else {
        2 * ((-l) as usize - 1) + 1
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let r = self.find(self.parent[x]);
            self.parent[x] = r;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller id as root for determinism
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

impl CoreGraph {
    /// Build the folded core graph of the subgroup generated by `gens`
    /// inside the free group of the given rank.
    pub fn build(rank: usize, gens: &[FreeWord]) -> CoreGraph {
        // wedge of loops at vertex 0
        let mut edges: Vec<(usize, Letter, usize)> = Vec::new();
        let mut vcount = 1usize;
        for g in gens {
            if g.is_empty() {
                continue;
            }
            let ls = g.letters();
            let mut prev = 0usize;
            for (i, &l) in ls.iter().enumerate() {
                let next = if i + 1 == ls.len() {
                    0
                } else {
                    let v = vcount;
                    vcount += 1;
                    v
                };
                // store in positive orientation
                if l > 0 {
                    edges.push((prev, l, next));
                } else {
                    edges.push((next, -l, prev));
                }
                prev = next;
            }
        }
        // fold: identify targets of equally labelled edges at one vertex
        let mut uf = UnionFind::new(vcount);
        loop {
            let mut seen: alloc::collections::BTreeMap<(usize, Letter), usize> =
                alloc::collections::BTreeMap::new();
            let mut merged = false;
            for &(u, l, v) in &edges {
                let (ru, rv) = (uf.find(u), uf.find(v));
                for (key, tgt) in [((ru, l), rv), ((rv, -l), ru)] {
                    match seen.get(&key) {
                        Some(&other) if other != tgt => {
                            uf.union(other, tgt);
                            merged = true;
                        }
                        Some(_) => {}
                        None => {
                            seen.insert(key, tgt);
                        }
                    }
                }
                if merged {
                    break;
                }
            }
            if !merged {
                break;
            }
        }
        // compact vertices, base first then ascending root id
        let mut roots: Vec<usize> = (0..vcount).map(|v| uf.find(v)).collect();
        let base_root = roots[0];
        let mut ids: Vec<usize> = roots.clone();
        ids.sort_unstable();
        ids.dedup();
        let mut index = alloc::collections::BTreeMap::new();
        index.insert(base_root, 0usize);
        let mut next_id = 1usize;
        for r in ids {
            index.entry(r).or_insert_with(|| {
                let i = next_id;
                next_id += 1;
                i
            });
        }
        let nv = next_id;
        let mut trans: Vec<Vec<Option<usize>>> = alloc::vec![alloc::vec![None; 2 * rank]; nv];
        for &(u, l, v) in &edges {
            let (cu, cv) = (index[&uf.find(u)], index[&uf.find(v)]);
            trans[cu][dir(l)] = Some(cv);
            trans[cv][dir(-l)] = Some(cu);
        }
        roots.clear();

        let mut graph = CoreGraph {
            rank,
            base: 0,
            trans,
            gens: gens.to_vec(),
            tree_parent: Vec::new(),
            basis_edges: Vec::new(),
            basis_expr: None,
        };
        graph.build_tree_and_basis();
        graph.build_basis_expressions();
        graph
    }

    fn vertex_count(&self) -> usize {
        self.trans.len()
    }

    fn build_tree_and_basis(&mut self) {
        let nv = self.vertex_count();
        let mut parent: Vec<Option<(usize, Letter)>> = alloc::vec![None; nv];
        let mut visited = alloc::vec![false; nv];
        visited[self.base] = true;
        let mut queue = VecDeque::new();
        queue.push_back(self.base);
        while let Some(v) = queue.pop_front() {
            for d in 0..2 * self.rank {
                if let Some(u) = self.trans[v][d] {
                    if !visited[u] {
                        visited[u] = true;
                        let l = if d % 2 == 0 {
                            (d / 2 + 1) as Letter
                        } else {
                            -((d / 2 + 1) as Letter)
                        };
                        parent[u] = Some((v, l));
                        queue.push_back(u);
                    }
                }
            }
        }
        let mut tree_edges: BTreeSet<(usize, Letter, usize)> = BTreeSet::new();
        for (u, p) in parent.iter().enumerate() {
            if let Some((v, l)) = p {
                if *l > 0 {
                    tree_edges.insert((*v, *l, u));
                } else {
                    tree_edges.insert((u, -*l, *v));
                }
            }
        }
        let mut basis = Vec::new();
        for v in 0..nv {
            for l in 1..=self.rank as Letter {
                if let Some(u) = self.trans[v][dir(l)] {
                    if !tree_edges.contains(&(v, l, u)) {
                        basis.push((v, l, u));
                    }
                }
            }
        }
        self.tree_parent = parent;
        self.basis_edges = basis;
    }

    /// Path word from base to `v` along the spanning tree.
    fn tree_path(&self, v: usize) -> FreeWord {
        let mut letters = Vec::new();
        let mut cur = v;
        while let Some((p, l)) = self.tree_parent[cur] {
            letters.push(l);
            cur = p;
        }
        letters.reverse();
        FreeWord::from_letters(letters)
    }

    /// The Nielsen basis of the subgroup given by the non-tree edges.
    pub fn nielsen_basis(&self) -> Vec<FreeWord> {
        self.basis_edges
            .iter()
            .map(|&(u, l, v)| {
                self.tree_path(u)
                    .concat(&FreeWord::from_letters([l]))
                    .concat(&self.tree_path(v).inverse())
            })
            .collect()
    }

    pub fn subgroup_rank(&self) -> usize {
        self.basis_edges.len()
    }

    /// Trace a loop at the base; `None` when `w` leaves the graph or ends
    /// elsewhere.
    pub fn contains(&self, w: &FreeWord) -> bool {
        let mut v = self.base;
        for &l in w.letters() {
            match self.trans[v][dir(l)] {
                Some(u) => v = u,
                None => return false,
            }
        }
        v == self.base
    }

    /// Rewrite a loop at the base over the Nielsen basis alphabet.
    fn to_basis(&self, w: &FreeWord) -> Option<FreeWord> {
        let lookup: alloc::collections::BTreeMap<(usize, Letter, usize), usize> = self
            .basis_edges
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, i))
            .collect();
        let mut v = self.base;
        let mut out = FreeWord::empty();
        for &l in w.letters() {
            let u = self.trans[v][dir(l)]?;
            let (edge, sign) = if l > 0 {
                ((v, l, u), 1)
            } else {
                ((u, -l, v), -1)
            };
            if let Some(&i) = lookup.get(&edge) {
                out.push(sign * (i as Letter + 1));
            }
            v = u;
        }
        if v == self.base {
            Some(out)
        } else {
            None
        }
    }

    fn build_basis_expressions(&mut self) {
        // generators rewritten over the Nielsen basis, paired with their
        // expression over the generator alphabet
        let mut state: Vec<(FreeWord, FreeWord)> = Vec::new();
        for (i, g) in self.gens.iter().enumerate() {
            if g.is_empty() {
                continue;
            }
            let u = self
                .to_basis(g)
                .expect("generators trace loops in their own core graph");
            state.push((u, FreeWord::generator(i)));
        }
        let target = self.basis_edges.len();
        if let Some(final_state) = nielsen_reduce_to_letters(state, target) {
            let mut expr = alloc::vec![FreeWord::empty(); target];
            for (u, e) in final_state {
                let l = u.letters()[0];
                if l > 0 {
                    expr[l as usize - 1] = e;
                } else {
                    expr[(-l) as usize - 1] = e.inverse();
                }
            }
            self.basis_expr = Some(expr);
        }
    }

    /// Express a member of the subgroup as a word over the generator
    /// alphabet (letter `i+1` is `gens[i]`). Verifies the result.
    pub fn express(&self, w: &FreeWord) -> Option<FreeWord> {
        let wb = self.to_basis(w)?;
        let exprs = self.basis_expr.as_ref()?;
        let out = wb.apply_endomorphism(exprs);
        // verification: multiply the expression back out
        let check = out.apply_endomorphism(&self.gens);
        if &check == w {
            Some(out)
        } else {
            None
        }
    }
}

/// Nielsen-reduce a generating tuple of the free group on `target` letters
/// (words in the first slot) carrying expressions (second slot) along.
/// Returns a tuple of single, pairwise distinct letters, or `None` when
/// the bounded plateau search gives up.
fn nielsen_reduce_to_letters(
    mut state: Vec<(FreeWord, FreeWord)>,
    target: usize,
) -> Option<Vec<(FreeWord, FreeWord)>> {
    let done = |st: &Vec<(FreeWord, FreeWord)>| {
        let mut seen = BTreeSet::new();
        st.len() == target
            && st
                .iter()
                .all(|(u, _)| u.len() == 1 && seen.insert(u.letters()[0].unsigned_abs()))
    };
    let apply = |st: &Vec<(FreeWord, FreeWord)>, mv: (usize, usize, i8, bool)| {
        let (i, j, sign, pre) = mv;
        let (uj, ej) = if sign > 0 {
            (st[j].0.clone(), st[j].1.clone())
        } else {
            (st[j].0.inverse(), st[j].1.inverse())
        };
        let mut st2 = st.clone();
        st2[i] = if pre {
            (uj.concat(&st[i].0), ej.concat(&st[i].1))
        } else {
            (st[i].0.concat(&uj), st[i].1.concat(&ej))
        };
        st2.retain(|(u, _)| !u.is_empty());
        st2
    };
    let moves = |st: &Vec<(FreeWord, FreeWord)>| {
        let n = st.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                for sign in [1i8, -1] {
                    for pre in [false, true] {
                        out.push((i, j, sign, pre));
                    }
                }
            }
        }
        out
    };
    let total = |st: &Vec<(FreeWord, FreeWord)>| -> usize { st.iter().map(|(u, _)| u.len()).sum() };

    state.retain(|(u, _)| !u.is_empty());
    let mut rounds = 0usize;
    loop {
        rounds += 1;
        if rounds > 10_000 {
            return None;
        }
        if done(&state) {
            return Some(state);
        }
        // greedy: any strictly length-reducing elementary move
        let cur = total(&state);
        let mut advanced = false;
        for mv in moves(&state) {
            let st2 = apply(&state, mv);
            if total(&st2) < cur {
                state = st2;
                advanced = true;
                break;
            }
        }
        if advanced {
            continue;
        }
        // plateau: breadth-first over length-preserving moves until some
        // state admits a reduction
        let key = |st: &Vec<(FreeWord, FreeWord)>| -> Vec<FreeWord> {
            let mut k: Vec<FreeWord> = st.iter().map(|(u, _)| u.clone()).collect();
            k.sort();
            k
        };
        let mut seen = BTreeSet::new();
        seen.insert(key(&state));
        let mut queue = VecDeque::new();
        queue.push_back(state.clone());
        let mut found = None;
        'bfs: while let Some(st) = queue.pop_front() {
            if seen.len() > 20_000 {
                break;
            }
            for mv in moves(&st) {
                let st2 = apply(&st, mv);
                let t2 = total(&st2);
                if t2 < cur || done(&st2) {
                    found = Some(st2);
                    break 'bfs;
                }
                if t2 == cur && seen.insert(key(&st2)) {
                    queue.push_back(st2);
                }
            }
        }
        match found {
            Some(st2) => state = st2,
            None => return None,
        }
    }
}
