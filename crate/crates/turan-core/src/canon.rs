//! Canonical labeling by iterated partition refinement plus backtracking
//! over cell orderings, choosing the lexicographically smallest adjacency
//! bit string. Discovered automorphisms prune branches that can only
//! repeat leaves already seen, which keeps highly symmetric graphs
//! (empty, complete, complete bipartite) from exploding factorially.

use crate::graph::{Graph, GraphError, MAX_VERTICES};
use alloc::vec;
use alloc::vec::Vec;

/// Labeling-invariant encoding of a graph: the upper triangle of the
/// canonically relabeled adjacency matrix in column order, packed eight
/// bits per byte MSB first. Two graphs have equal forms iff they are
/// isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: u8,
    bits: Vec<u8>,
}

impl CanonicalForm {
    pub fn vertex_count(&self) -> usize {
        self.n as usize
    }

    pub fn bytes(&self) -> &[u8] {
        &self.bits
    }

    pub fn to_hex(&self) -> alloc::string::String {
        use core::fmt::Write;
        let mut s = alloc::string::String::new();
        let _ = write!(s, "{:02x}", self.n);
        for b in &self.bits {
            let _ = write!(s, "{:02x}", b);
        }
        s
    }
}

/// Canonical form of `g`.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).0
}

/// Canonical form together with a permutation achieving it:
/// `perm[i]` is the original vertex placed at canonical position `i`.
pub fn canonical_labeling(g: &Graph) -> (CanonicalForm, Vec<u8>) {
    let n = g.vertex_count();
    let mut search = CanonSearch {
        g,
        n,
        best: None,
        best_perm: Vec::new(),
        first_perm: None,
        first_bits: Vec::new(),
        autos: Vec::new(),
    };
    let mut cells = vec![(0..n as u8).collect::<Vec<u8>>()];
    refine(g, &mut cells);
    let mut prefix = Vec::new();
    search.descend(&cells, &mut prefix);
    let form = CanonicalForm {
        n: n as u8,
        bits: search.best.unwrap(),
    };
    (form, search.best_perm)
}

/// Order of the automorphism group, by permutation search constrained to
/// the cells of the equitable partition. Oracle-scale only.
pub fn automorphism_count(g: &Graph) -> Result<u64, GraphError> {
    let n = g.vertex_count();
    if n > 10 {
        return Err(GraphError::VertexCapExceeded { n });
    }
    let mut cells = vec![(0..n as u8).collect::<Vec<u8>>()];
    refine(g, &mut cells);
    let mut cell_of = [0usize; MAX_VERTICES];
    for (i, cell) in cells.iter().enumerate() {
        for &v in cell {
            cell_of[v as usize] = i;
        }
    }
    let mut image = [u8::MAX; MAX_VERTICES];
    let mut used = 0u64;
    Ok(count_autos(g, n, &cell_of, &mut image, &mut used, 0))
}

fn count_autos(
    g: &Graph,
    n: usize,
    cell_of: &[usize; MAX_VERTICES],
    image: &mut [u8; MAX_VERTICES],
    used: &mut u64,
    v: usize,
) -> u64 {
    if v == n {
        return 1;
    }
    let mut total = 0;
    for u in 0..n {
        if *used & (1u64 << u) != 0 || cell_of[u] != cell_of[v] {
            continue;
        }
        // Adjacency to all previously mapped vertices must match exactly.
        let ok = (0..v).all(|w| g.has_edge(v, w) == g.has_edge(u, image[w] as usize));
        if !ok {
            continue;
        }
        image[v] = u as u8;
        *used |= 1u64 << u;
        total += count_autos(g, n, cell_of, image, used, v + 1);
        *used &= !(1u64 << u);
    }
    total
}

/// Split every cell by neighbor counts into every other cell until the
/// partition is equitable. Subcells are ordered by count ascending, so
/// the result is deterministic.
fn refine(g: &Graph, cells: &mut Vec<Vec<u8>>) {
    loop {
        let mut changed = false;
        let splitters: Vec<u64> = cells.iter().map(|c| cell_mask(c)).collect();
        for sp in &splitters {
            let mut i = 0;
            while i < cells.len() {
                if cells[i].len() <= 1 {
                    i += 1;
                    continue;
                }
                let cell = &cells[i];
                let mut keyed: Vec<(u32, u8)> = cell
                    .iter()
                    .map(|&v| ((g.neighbors(v as usize) & sp).count_ones(), v))
                    .collect();
                keyed.sort_unstable();
                let uniform = keyed.iter().all(|&(k, _)| k == keyed[0].0);
                if uniform {
                    i += 1;
                    continue;
                }
                let mut groups: Vec<Vec<u8>> = Vec::new();
                for (k, v) in keyed {
                    match groups.last_mut() {
                        Some(last)
                            if (g.neighbors(last[0] as usize) & sp).count_ones() == k =>
                        {
                            last.push(v)
                        }
                        _ => groups.push(vec![v]),
                    }
                }
                let added = groups.len();
                cells.splice(i..=i, groups);
                i += added;
                changed = true;
            }
        }
        if !changed {
            return;
        }
    }
}

fn cell_mask(cell: &[u8]) -> u64 {
    cell.iter().fold(0u64, |m, &v| m | (1u64 << v))
}

struct CanonSearch<'a> {
    g: &'a Graph,
    n: usize,
    best: Option<Vec<u8>>,
    best_perm: Vec<u8>,
    first_perm: Option<Vec<u8>>,
    first_bits: Vec<u8>,
    autos: Vec<Vec<u8>>,
}

impl<'a> CanonSearch<'a> {
    fn descend(&mut self, cells: &[Vec<u8>], prefix: &mut Vec<u8>) {
        let target = cells.iter().position(|c| c.len() > 1);
        let Some(ti) = target else {
            self.leaf(cells);
            return;
        };
        let candidates = cells[ti].clone();
        let mut done: Vec<u8> = Vec::new();
        // Orbits of the subgroup generated by prefix-fixing automorphisms,
        // folded in incrementally as siblings discover new ones. Skipping
        // `v` is sound when an automorphism fixing every individualized
        // vertex maps an explored candidate to it: both subtrees yield
        // the same leaf strings.
        let mut uf = UnionFind::new(self.n);
        let mut applied = 0;
        for &v in &candidates {
            while applied < self.autos.len() {
                let auto = &self.autos[applied];
                if prefix.iter().all(|&w| auto[w as usize] == w) {
                    for x in 0..self.n {
                        uf.union(x, auto[x] as usize);
                    }
                }
                applied += 1;
            }
            let root = uf.find(v as usize);
            if done.iter().any(|&u| uf.find(u as usize) == root) {
                continue;
            }
            done.push(v);
            let mut child: Vec<Vec<u8>> = Vec::with_capacity(cells.len() + 1);
            for (i, cell) in cells.iter().enumerate() {
                if i == ti {
                    child.push(vec![v]);
                    child.push(cell.iter().copied().filter(|&u| u != v).collect());
                } else {
                    child.push(cell.clone());
                }
            }
            refine(self.g, &mut child);
            prefix.push(v);
            self.descend(&child, prefix);
            prefix.pop();
        }
    }

    fn leaf(&mut self, cells: &[Vec<u8>]) {
        let mut perm: Vec<u8> = Vec::with_capacity(self.n);
        for cell in cells {
            perm.push(cell[0]);
        }
        let bits = pack_bits(self.g, &perm);
        match &self.first_perm {
            None => {
                self.first_perm = Some(perm.clone());
                self.first_bits = bits.clone();
            }
            Some(first) => {
                if bits == self.first_bits {
                    self.record_auto(first.clone(), &perm);
                }
            }
        }
        match &self.best {
            Some(best) if *best <= bits => {
                if *best == bits && self.best_perm != perm {
                    let bp = self.best_perm.clone();
                    self.record_auto(bp, &perm);
                }
            }
            _ => {
                self.best = Some(bits);
                self.best_perm = perm;
            }
        }
    }

    /// Two orderings producing the same string give the automorphism
    /// `p[i] -> q[i]`.
    fn record_auto(&mut self, p: Vec<u8>, q: &[u8]) {
        if self.autos.len() >= 4096 {
            return;
        }
        let mut auto = vec![0u8; self.n];
        for i in 0..self.n {
            auto[p[i] as usize] = q[i];
        }
        if auto.iter().enumerate().all(|(i, &x)| x as usize == i) {
            return;
        }
        if !self.autos.contains(&auto) {
            self.autos.push(auto);
        }
    }
}

/// Upper triangle in column order under `perm`, MSB-first bytes, zero
/// padded. Byte-wise order therefore equals bit-string order.
fn pack_bits(g: &Graph, perm: &[u8]) -> Vec<u8> {
    let n = perm.len();
    let nbits = n * (n - 1) / 2;
    let mut out = vec![0u8; (nbits + 7) / 8];
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(perm[i] as usize, perm[j] as usize) {
                out[idx / 8] |= 1u8 << (7 - idx % 8);
            }
            idx += 1;
        }
    }
    out
}

struct UnionFind {
    parent: Vec<u8>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u8).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] as usize != r {
            r = self.parent[r] as usize;
        }
        let mut c = x;
        while self.parent[c] as usize != r {
            let next = self.parent[c] as usize;
            self.parent[c] = r as u8;
            c = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra] = rb as u8;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(k: usize) -> Graph {
        let mut g = Graph::new(k).unwrap();
        for i in 0..k {
            g = g.add_edge(i, (i + 1) % k).unwrap();
        }
        g
    }

    fn path(k: usize) -> Graph {
        let mut g = Graph::new(k).unwrap();
        for i in 0..k - 1 {
            g = g.add_edge(i, i + 1).unwrap();
        }
        g
    }

    fn complete(k: usize) -> Graph {
        let mut g = Graph::new(k).unwrap();
        for i in 0..k {
            for j in (i + 1)..k {
                g = g.add_edge(i, j).unwrap();
            }
        }
        g
    }

    fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut g = Graph::new(a + b).unwrap();
        for i in 0..a {
            for j in a..a + b {
                g = g.add_edge(i, j).unwrap();
            }
        }
        g
    }

    fn all_permutations(n: usize) -> Vec<Vec<u8>> {
        let mut out = Vec::new();
        let mut perm: Vec<u8> = (0..n as u8).collect();
        heap_permute(&mut perm, n, &mut out);
        out
    }

    fn heap_permute(perm: &mut Vec<u8>, k: usize, out: &mut Vec<Vec<u8>>) {
        if k <= 1 {
            out.push(perm.clone());
            return;
        }
        for i in 0..k {
            heap_permute(perm, k - 1, out);
            if k % 2 == 0 {
                perm.swap(i, k - 1);
            } else {
                perm.swap(0, k - 1);
            }
        }
    }

    #[test]
    fn isomorphic_relabelings_agree() {
        let c4 = cycle(4);
        let other = c4.permuted(&[0, 2, 1, 3]); // 0-2-1-3-0 labeling
        assert_eq!(canonical_form(&c4), canonical_form(&other));
        assert_ne!(canonical_form(&c4), canonical_form(&path(4)));
    }

    #[test]
    fn paw_graph_all_labelings_one_form() {
        // Triangle 0-1-2 with pendant 3; brute-force oracle over all 4!
        // labelings must collapse to a single canonical form.
        let paw = complete(3)
            .with_vertex(0b001)
            .unwrap();
        let mut forms = Vec::new();
        for perm in all_permutations(4) {
            forms.push(canonical_form(&paw.permuted(&perm)));
        }
        forms.dedup();
        forms.sort();
        forms.dedup();
        assert_eq!(forms.len(), 1);
    }

    #[test]
    fn canonical_labeling_realizes_form() {
        for g in [cycle(5), path(6), complete_bipartite(2, 4), complete(4)] {
            let (form, perm) = canonical_labeling(&g);
            let relabeled = g.permuted(&perm);
            assert_eq!(canonical_form(&relabeled), form);
            // Identity packing of the relabeled graph is the form itself.
            let id: Vec<u8> = (0..g.vertex_count() as u8).collect();
            assert_eq!(pack_bits(&relabeled, &id), form.bits);
        }
    }

    #[test]
    fn symmetric_graphs_do_not_explode() {
        // Empty and complete graphs have n! labelings; orbit pruning must
        // keep these fast. The assertions double as correctness checks.
        let empty = Graph::new(14).unwrap();
        let c1 = canonical_form(&empty);
        assert_eq!(c1.vertex_count(), 14);
        let k12 = complete(12);
        assert!(canonical_form(&k12).bytes().iter().all(|&b| {
            // 66 bits set then padding.
            b != 0
        }));
        let kb = complete_bipartite(6, 6);
        let perm: Vec<u8> = (0..12u8).rev().collect();
        assert_eq!(canonical_form(&kb), canonical_form(&kb.permuted(&perm)));
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphism_count(&cycle(4)).unwrap(), 8);
        assert_eq!(automorphism_count(&complete(4)).unwrap(), 24);
        assert_eq!(automorphism_count(&path(4)).unwrap(), 2);

        // K_{3,3}: brute-force oracle over all 720 permutations.
        let k33 = complete_bipartite(3, 3);
        let brute = all_permutations(6)
            .into_iter()
            .filter(|p| {
                (0..6).all(|i| {
                    (0..6).all(|j| {
                        i == j || k33.has_edge(i, j) == k33.has_edge(p[i] as usize, p[j] as usize)
                    })
                })
            })
            .count() as u64;
        assert_eq!(brute, 72);
        assert_eq!(automorphism_count(&k33).unwrap(), brute);

        assert!(automorphism_count(&Graph::new(11).unwrap()).is_err());
    }

    #[test]
    fn distinguishes_all_small_classes() {
        // All 2^C(5,2) labeled graphs on 5 vertices: canonical forms must
        // induce exactly the 34 isomorphism classes, verified against a
        // permutation-dedup oracle.
        let perms = all_permutations(5);
        let mut by_form: alloc::collections::BTreeMap<CanonicalForm, Graph> =
            alloc::collections::BTreeMap::new();
        for code in 0u32..(1 << 10) {
            let mut g = Graph::new(5).unwrap();
            let mut bit = 0;
            for i in 0..5 {
                for j in (i + 1)..5 {
                    if code & (1 << bit) != 0 {
                        g = g.add_edge(i, j).unwrap();
                    }
                    bit += 1;
                }
            }
            if let Some(rep) = by_form.get(&canonical_form(&g)) {
                // Same form: must be isomorphic (oracle check).
                assert!(perms.iter().any(|p| g.permuted(p) == *rep));
            } else {
                by_form.insert(canonical_form(&g), g);
            }
        }
        assert_eq!(by_form.len(), 34);
        // Pairwise distinct representatives are non-isomorphic, so
        // distinct forms do distinguish all classes at this order.
        let reps: Vec<&Graph> = by_form.values().collect();
        for (i, a) in reps.iter().enumerate() {
            for b in reps.iter().skip(i + 1) {
                assert!(!perms.iter().any(|p| a.permuted(p) == **b));
            }
        }
    }
}
