//! Exact subgraph-copy counters and forbidden-subgraph checks. A copy of
//! `H` in `G` is a subgraph of `G` isomorphic to `H` (vertex set plus
//! edge set, not necessarily induced, unlabeled). `count_generic` is the
//! independent oracle: it takes a completely different route (injective
//! embedding search divided by the automorphism group) from the
//! specialized cycle and biclique counters it cross-checks.

use crate::canon::automorphism_count;
use crate::graph::{BitIter, Graph, GraphError, MAX_VERTICES};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// The counted or forbidden subgraph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum PatternSpec {
    /// Cycle of length `k`, `3 <= k <= 64`.
    Cycle(usize),
    /// Complete bipartite graph with sides `s <= t`.
    CompleteBipartite(usize, usize),
    /// Explicit small graph, counted by the generic embedding counter.
    Explicit(Graph),
}

impl PatternSpec {
    pub fn validate(&self) -> Result<(), CountError> {
        match *self {
            PatternSpec::Cycle(k) => {
                if k < 3 || k > MAX_VERTICES {
                    return Err(CountError::CycleLengthOutOfRange { k });
                }
            }
            PatternSpec::CompleteBipartite(s, t) => {
                if s < 1 || t < 1 || s > t || s + t > MAX_VERTICES {
                    return Err(CountError::BicliqueOutOfRange { s, t });
                }
            }
            PatternSpec::Explicit(g) => {
                if g.vertex_count() > 10 {
                    return Err(CountError::PatternTooLarge {
                        n: g.vertex_count(),
                    });
                }
            }
        }
        Ok(())
    }

    /// The pattern as a concrete graph (cycle and biclique patterns are
    /// capped at 10 vertices here; this feeds the generic oracle).
    pub fn to_graph(&self) -> Result<Graph, CountError> {
        self.validate()?;
        match *self {
            PatternSpec::Cycle(k) => {
                let mut g = Graph::new(k).map_err(CountError::Graph)?;
                for i in 0..k {
                    g = g.add_edge(i, (i + 1) % k).map_err(CountError::Graph)?;
                }
                Ok(g)
            }
            PatternSpec::CompleteBipartite(s, t) => {
                let mut g = Graph::new(s + t).map_err(CountError::Graph)?;
                for a in 0..s {
                    for b in s..s + t {
                        g = g.add_edge(a, b).map_err(CountError::Graph)?;
                    }
                }
                Ok(g)
            }
            PatternSpec::Explicit(g) => Ok(g),
        }
    }
}

impl fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternSpec::Cycle(k) => write!(f, "cycle:{}", k),
            PatternSpec::CompleteBipartite(s, t) => write!(f, "biclique:{},{}", s, t),
            PatternSpec::Explicit(g) => {
                write!(f, "graph6:{}", crate::g6::to_graph6(g))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CountError {
    CycleLengthOutOfRange { k: usize },
    BicliqueOutOfRange { s: usize, t: usize },
    /// Explicit pattern above the generic-counter cap of 10 vertices.
    PatternTooLarge { n: usize },
    /// Host above the generic-counter cap of 16 vertices.
    HostTooLarge { n: usize },
    VertexOutOfRange { v: usize, n: usize },
    Graph(GraphError),
}

impl fmt::Display for CountError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CountError::CycleLengthOutOfRange { k } => {
                write!(f, "cycle length {} not in 3..=64", k)
            }
            CountError::BicliqueOutOfRange { s, t } => {
                write!(f, "biclique parameters ({}, {}) out of range", s, t)
            }
            CountError::PatternTooLarge { n } => {
                write!(f, "pattern with {} vertices exceeds generic-counter cap 10", n)
            }
            CountError::HostTooLarge { n } => {
                write!(f, "host with {} vertices exceeds generic-counter cap 16", n)
            }
            CountError::VertexOutOfRange { v, n } => {
                write!(f, "vertex {} out of range for order {}", v, n)
            }
            CountError::Graph(e) => write!(f, "{}", e),
        }
    }
}

impl core::error::Error for CountError {}

/// Number of subgraphs of `G` isomorphic to `C_k`.
///
/// DFS over simple paths anchored at their minimum-index vertex; each
/// cycle is traversed once per direction, so the total is halved.
pub fn count_cycles(g: &Graph, k: usize) -> Result<u128, CountError> {
    let n = g.vertex_count();
    if k < 3 || k > n {
        return Err(CountError::CycleLengthOutOfRange { k });
    }
    let mut found = 0u128;
    cycle_dfs(g, k, &mut |_| {
        found += 1;
        true
    });
    Ok(found / 2)
}

/// True iff `G` contains `C_k`; short-circuits on the first cycle found.
pub fn has_cycle(g: &Graph, k: usize) -> Result<bool, CountError> {
    Ok(find_cycle(g, k)?.is_some())
}

/// A copy of `C_k` as a vertex sequence, if one exists.
pub fn find_cycle(g: &Graph, k: usize) -> Result<Option<Vec<u8>>, CountError> {
    if k < 3 || k > MAX_VERTICES {
        return Err(CountError::CycleLengthOutOfRange { k });
    }
    if k > g.vertex_count() {
        return Ok(None);
    }
    let mut witness = None;
    cycle_dfs(g, k, &mut |path| {
        witness = Some(path.to_vec());
        false
    });
    Ok(witness)
}

/// Visits every directed traversal of every k-cycle whose start is its
/// minimum vertex. `visit` returns false to stop the search.
fn cycle_dfs(g: &Graph, k: usize, visit: &mut impl FnMut(&[u8]) -> bool) {
    let n = g.vertex_count();
    let mut path = [0u8; MAX_VERTICES];
    for anchor in 0..n {
        path[0] = anchor as u8;
        // Only vertices above the anchor may appear later in the path.
        let above = if anchor + 1 >= MAX_VERTICES {
            0
        } else {
            !((1u64 << (anchor + 1)) - 1)
        };
        if !extend(g, k, anchor, above, 1u64 << anchor, &mut path, 1, visit) {
            return;
        }
    }
}

fn extend(
    g: &Graph,
    k: usize,
    anchor: usize,
    above: u64,
    visited: u64,
    path: &mut [u8; MAX_VERTICES],
    len: usize,
    visit: &mut impl FnMut(&[u8]) -> bool,
) -> bool {
    let last = path[len - 1] as usize;
    if len == k {
        if g.has_edge(last, anchor) {
            return visit(&path[..len]);
        }
        return true;
    }
    let mut cands = g.neighbors(last) & above & !visited;
    // The remaining vertices must keep a route back to the anchor.
    if len + 1 == k {
        cands &= g.neighbors(anchor);
    }
    for v in BitIter(cands) {
        path[len] = v as u8;
        if !extend(g, k, anchor, above, visited | (1u64 << v), path, len + 1, visit) {
            return false;
        }
    }
    true
}

/// Number of copies of `K_{s,t}` in `G` (subgraph copies: edges inside
/// either side are permitted).
///
/// Enumerates s-subsets `A`, intersects neighbor masks, and adds
/// `C(|common|, t)`; for `s == t` this counts ordered side pairs, so the
/// total is halved.
pub fn count_complete_bipartite(g: &Graph, s: usize, t: usize) -> Result<u128, CountError> {
    let n = g.vertex_count();
    if s < 1 || s > t || s + t > n {
        return Err(CountError::BicliqueOutOfRange { s, t });
    }
    let mut total = 0u128;
    for_each_subset(n, s, &mut |subset| {
        let common = common_neighbors(g, subset);
        total += crate::construct::binomial(common.count_ones() as u64, t as u64);
        true
    });
    Ok(if s == t { total / 2 } else { total })
}

/// Side masks of one `K_{s,t}` copy, if any exists.
pub fn find_biclique(g: &Graph, s: usize, t: usize) -> Result<Option<(u64, u64)>, CountError> {
    let n = g.vertex_count();
    if s < 1 || s > t {
        return Err(CountError::BicliqueOutOfRange { s, t });
    }
    if s + t > n {
        return Ok(None);
    }
    let mut found = None;
    for_each_subset(n, s, &mut |subset| {
        let common = common_neighbors(g, subset);
        if common.count_ones() as usize >= t {
            let b = BitIter(common)
                .take(t)
                .fold(0u64, |m, v| m | (1u64 << v));
            found = Some((subset, b));
            return false;
        }
        true
    });
    Ok(found)
}

/// Intersection of the neighborhoods of `subset`. Vertices of `subset`
/// never appear in it (no loops).
fn common_neighbors(g: &Graph, subset: u64) -> u64 {
    BitIter(subset).fold(g.vertex_mask(), |m, v| m & g.neighbors(v))
}

/// Calls `f` on every `k`-subset of `0..n` as a mask (ascending order);
/// `f` returns false to stop.
fn for_each_subset(n: usize, k: usize, f: &mut impl FnMut(u64) -> bool) {
    if k > n {
        return;
    }
    let mut subset: u64 = (1u64 << k) - 1;
    let limit = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    loop {
        if !f(subset) {
            return;
        }
        // Gosper's hack: next subset of the same size.
        let c = subset & subset.wrapping_neg();
        let r = subset + c;
        if r == 0 {
            return;
        }
        subset = (((r ^ subset) >> 2) / c) | r;
        if subset > limit {
            return;
        }
    }
}

/// A clique on `k` vertices, if any exists.
pub fn find_clique(g: &Graph, k: usize) -> Option<u64> {
    let n = g.vertex_count();
    if k > n {
        return None;
    }
    let mut found = None;
    for_each_subset(n, k, &mut |subset| {
        let ok = BitIter(subset).all(|v| g.neighbors(v) & subset == subset & !(1u64 << v));
        if ok {
            found = Some(subset);
            return false;
        }
        true
    });
    found
}

/// Number of copies of `H` in `G` by the generic route: injective
/// homomorphisms found by backtracking with degree pruning, divided by
/// `|Aut(H)|`. This is the correctness oracle, capped at `v(H) <= 10`
/// and `v(G) <= 16`.
pub fn count_generic(g: &Graph, h: &Graph) -> Result<u128, CountError> {
    if h.vertex_count() > 10 {
        return Err(CountError::PatternTooLarge {
            n: h.vertex_count(),
        });
    }
    if g.vertex_count() > 16 {
        return Err(CountError::HostTooLarge {
            n: g.vertex_count(),
        });
    }
    let homs = embed(g, h, EmbedMode::Count);
    let aut = automorphism_count(h).map_err(CountError::Graph)? as u128;
    debug_assert_eq!(homs % aut, 0);
    Ok(homs / aut)
}

/// True iff at least one copy of `H` embeds into `G`.
pub fn contains_copy(g: &Graph, h: &Graph) -> Result<bool, CountError> {
    if h.vertex_count() > 10 {
        return Err(CountError::PatternTooLarge {
            n: h.vertex_count(),
        });
    }
    if h.vertex_count() > g.vertex_count() {
        return Ok(false);
    }
    Ok(embed(g, h, EmbedMode::Exists) > 0)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum EmbedMode {
    Count,
    Exists,
}

/// Counts injective edge-preserving maps `H -> G` (all of them, or stops
/// at the first in `Exists` mode).
fn embed(g: &Graph, h: &Graph, mode: EmbedMode) -> u128 {
    let hn = h.vertex_count();
    let gn = g.vertex_count();
    if hn > gn {
        return 0;
    }
    // Map pattern vertices in a connectivity-greedy order so adjacency
    // constraints bite as early as possible.
    let mut order: Vec<usize> = Vec::with_capacity(hn);
    let mut placed = 0u64;
    for _ in 0..hn {
        let next = (0..hn)
            .filter(|v| placed & (1u64 << v) == 0)
            .max_by_key(|&v| ((h.neighbors(v) & placed).count_ones(), h.degree(v), hn - v))
            .unwrap();
        order.push(next);
        placed |= 1u64 << next;
    }
    let mut image = vec![0u8; hn];
    embed_rec(g, h, &order, &mut image, 0, 0, mode)
}

fn embed_rec(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    image: &mut [u8],
    used: u64,
    depth: usize,
    mode: EmbedMode,
) -> u128 {
    if depth == order.len() {
        return 1;
    }
    let hv = order[depth];
    let mut total = 0u128;
    for gu in 0..g.vertex_count() {
        if used & (1u64 << gu) != 0 || g.degree(gu) < h.degree(hv) {
            continue;
        }
        let ok = order[..depth]
            .iter()
            .enumerate()
            .all(|(d, &hw)| !h.has_edge(hv, hw) || g.has_edge(gu, image[d] as usize));
        if !ok {
            continue;
        }
        image[depth] = gu as u8;
        total += embed_rec(g, h, order, image, used | (1u64 << gu), depth + 1, mode);
        if mode == EmbedMode::Exists && total > 0 {
            return total;
        }
    }
    total
}

/// True iff `G` contains no copy of `F`.
pub fn is_free(g: &Graph, f: &PatternSpec) -> Result<bool, CountError> {
    f.validate()?;
    match *f {
        PatternSpec::Cycle(k) => Ok(!has_cycle(g, k)?),
        PatternSpec::CompleteBipartite(s, t) => Ok(find_biclique(g, s, t)?.is_none()),
        PatternSpec::Explicit(ref h) => Ok(!contains_copy(g, h)?),
    }
}

/// Number of `C_4` copies whose vertex set contains `v`.
///
/// A 4-cycle through `v` is determined by the unordered pair of its two
/// cycle-neighbors in `N(v)` and the opposite vertex.
pub fn c4_incident_to_vertex(g: &Graph, v: usize) -> Result<u128, CountError> {
    let n = g.vertex_count();
    if v >= n {
        return Err(CountError::VertexOutOfRange { v, n });
    }
    let nbrs: Vec<usize> = BitIter(g.neighbors(v)).collect();
    let mut total = 0u128;
    for (i, &a) in nbrs.iter().enumerate() {
        for &c in nbrs.iter().skip(i + 1) {
            let mids = g.neighbors(a)
                & g.neighbors(c)
                & !(1u64 << v)
                & !(1u64 << a)
                & !(1u64 << c);
            total += mids.count_ones() as u128;
        }
    }
    Ok(total)
}

/// Exact nonnegative rational, reduced, used for the per-vertex C4
/// bound so the audit never touches floating point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ratio {
    pub num: u128,
    pub den: u128,
}

impl Ratio {
    pub fn new(num: u128, den: u128) -> Ratio {
        debug_assert!(den != 0);
        let g = gcd(num, den);
        if g == 0 {
            Ratio { num: 0, den: 1 }
        } else {
            Ratio {
                num: num / g,
                den: den / g,
            }
        }
    }

    pub fn from_int(v: u128) -> Ratio {
        Ratio { num: v, den: 1 }
    }

    pub fn as_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Ratio) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Ratio) -> core::cmp::Ordering {
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Outcome of checking the per-vertex C4 bound at one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct C4BoundAudit {
    pub count: u128,
    pub bound: Ratio,
    pub holds: bool,
}

/// Hypothesis failure for the bound audit, with the violating subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AuditError {
    NotBicliqueFree { s: usize, witness: Vec<u8> },
    NotC6Free { witness: Vec<u8> },
    NotK5Free { witness: Vec<u8> },
    Count(CountError),
}

impl fmt::Display for AuditError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AuditError::NotBicliqueFree { s, witness } => {
                write!(f, "graph contains K_{{2,{}}} on {:?}", s + 1, witness)
            }
            AuditError::NotC6Free { witness } => {
                write!(f, "graph contains C6 on {:?}", witness)
            }
            AuditError::NotK5Free { witness } => {
                write!(f, "graph contains K5 on {:?}", witness)
            }
            AuditError::Count(e) => write!(f, "{}", e),
        }
    }
}

impl core::error::Error for AuditError {}

/// Checks the per-vertex bound on C4 copies through `v` in a
/// `K_{2,s+1}`-free, C6-free graph:
/// `max(3 deg, (s-1)(s+2)/(2(s+1)) deg)`, with the leading factor
/// dropping to 2 when the graph is also K5-free (`k5_variant`).
pub fn audit_c4_vertex_bound(
    g: &Graph,
    s: usize,
    v: usize,
    k5_variant: bool,
) -> Result<C4BoundAudit, AuditError> {
    if s < 2 {
        return Err(AuditError::Count(CountError::BicliqueOutOfRange {
            s: 2,
            t: s + 1,
        }));
    }
    if let Some((a, b)) = find_biclique(g, 2, s + 1).map_err(AuditError::Count)? {
        let witness = BitIter(a | b).map(|x| x as u8).collect();
        return Err(AuditError::NotBicliqueFree { s, witness });
    }
    if let Some(cyc) = find_cycle(g, 6).map_err(AuditError::Count)? {
        return Err(AuditError::NotC6Free { witness: cyc });
    }
    if k5_variant {
        if let Some(clique) = find_clique(g, 5) {
            let witness = BitIter(clique).map(|x| x as u8).collect();
            return Err(AuditError::NotK5Free { witness });
        }
    }
    let count = c4_incident_to_vertex(g, v).map_err(AuditError::Count)?;
    let deg = g.degree(v) as u128;
    let linear = Ratio::from_int(if k5_variant { 2 } else { 3 } * deg);
    let fractional = Ratio::new(
        (s as u128 - 1) * (s as u128 + 2) * deg,
        2 * (s as u128 + 1),
    );
    let bound = linear.max(fractional);
    Ok(C4BoundAudit {
        count,
        bound,
        holds: Ratio::from_int(count) <= bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(k: usize) -> Graph {
        PatternSpec::Cycle(k).to_graph().unwrap()
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
        PatternSpec::CompleteBipartite(a.min(b), a.max(b))
            .to_graph()
            .unwrap()
    }

    fn petersen() -> Graph {
        let mut g = Graph::new(10).unwrap();
        for i in 0..5 {
            g = g.add_edge(i, (i + 1) % 5).unwrap(); // outer C5
            g = g.add_edge(5 + i, 5 + (i + 2) % 5).unwrap(); // inner pentagram
            g = g.add_edge(i, 5 + i).unwrap(); // spokes
        }
        g
    }

    #[test]
    fn cycle_counts_match_closed_formulas() {
        // K_{2,4} has C(4,2) = 6 quadrilaterals and K_{3,3} has
        // 6*C(3,3) = 6 hexagons, plus two direct cases.
        assert_eq!(count_cycles(&complete_bipartite(2, 4), 4).unwrap(), 6);
        assert_eq!(count_cycles(&complete_bipartite(3, 3), 6).unwrap(), 6);
        assert_eq!(count_cycles(&cycle(6), 6).unwrap(), 1);
        assert_eq!(count_cycles(&complete(4), 4).unwrap(), 3);
        assert!(count_cycles(&complete(4), 5).is_err());
        assert!(count_cycles(&complete(4), 2).is_err());
    }

    #[test]
    fn has_cycle_cases() {
        assert!(!has_cycle(&complete_bipartite(2, 8), 6).unwrap());
        assert!(!has_cycle(&complete_bipartite(3, 7), 8).unwrap());
        assert!(has_cycle(&petersen(), 5).unwrap());
        assert!(!has_cycle(&petersen(), 3).unwrap());
        // k above the order is simply absent.
        assert!(!has_cycle(&complete(4), 10).unwrap());
    }

    #[test]
    fn find_cycle_returns_a_real_cycle() {
        let w = find_cycle(&petersen(), 9).unwrap().unwrap();
        assert_eq!(w.len(), 9);
        let g = petersen();
        for i in 0..9 {
            assert!(g.has_edge(w[i] as usize, w[(i + 1) % 9] as usize));
        }
    }

    #[test]
    fn biclique_counts() {
        // K_{3,5} holds C(5,3) = 10 balanced bicliques K_{3,3}.
        assert_eq!(count_complete_bipartite(&complete_bipartite(3, 5), 3, 3).unwrap(), 10);
        // K_{1,1} is an edge.
        assert_eq!(count_complete_bipartite(&complete(4), 1, 1).unwrap(), 6);
        // Generic-oracle value on K5: 3 bipartitions per 4-set, C(5,4) sets.
        assert_eq!(count_complete_bipartite(&complete(5), 2, 2).unwrap(), 15);
        assert_eq!(
            count_complete_bipartite(&complete(5), 2, 2).unwrap(),
            count_generic(&complete(5), &complete_bipartite(2, 2)).unwrap()
        );
        assert!(count_complete_bipartite(&complete(4), 3, 2).is_err());
    }

    #[test]
    fn c4_equals_k22_everywhere_small() {
        for g in [petersen(), complete(5), complete_bipartite(3, 4), cycle(4)] {
            assert_eq!(
                count_complete_bipartite(&g, 2, 2).unwrap(),
                count_cycles(&g, 4).unwrap_or(0)
            );
        }
    }

    #[test]
    fn generic_counter_cases() {
        let k1 = Graph::new(1).unwrap();
        assert_eq!(count_generic(&petersen(), &k1).unwrap(), 10);
        assert_eq!(count_generic(&complete_bipartite(2, 4), &cycle(4)).unwrap(), 6);
        // 12 paths on 4 vertices in K4: 4!/|Aut(P4)|.
        let mut p4 = Graph::new(4).unwrap();
        for i in 0..3 {
            p4 = p4.add_edge(i, i + 1).unwrap();
        }
        assert_eq!(count_generic(&complete(4), &p4).unwrap(), 12);
        assert!(count_generic(&Graph::new(1).unwrap(), &petersen()).is_ok());
        let big = Graph::new(17).unwrap();
        assert!(matches!(
            count_generic(&big, &k1),
            Err(CountError::HostTooLarge { n: 17 })
        ));
    }

    #[test]
    fn is_free_cases() {
        assert!(is_free(&complete_bipartite(2, 8), &PatternSpec::Cycle(6)).unwrap());
        assert!(!is_free(&cycle(8), &PatternSpec::Cycle(8)).unwrap());
        // K_{3,3} joined with K1 contains cycles of every length 3..=7.
        let j = complete_bipartite(3, 3).with_vertex(0b111111).unwrap();
        for l in 3..=7 {
            assert!(!is_free(&j, &PatternSpec::Cycle(l)).unwrap(), "l={}", l);
        }
        // Explicit-pattern dispatch.
        let k5 = PatternSpec::Explicit(complete(5));
        assert!(is_free(&petersen(), &k5).unwrap());
        assert!(!is_free(&complete(6), &k5).unwrap());
    }

    #[test]
    fn c4_incidence() {
        let g = complete_bipartite(2, 4);
        // 2-side vertices lie on every C4; 4-side vertices on 3 each.
        assert_eq!(c4_incident_to_vertex(&g, 0).unwrap(), 6);
        assert_eq!(c4_incident_to_vertex(&g, 2).unwrap(), 3);
        assert_eq!(c4_incident_to_vertex(&cycle(5), 0).unwrap(), 0);
        assert!(c4_incident_to_vertex(&g, 9).is_err());
        // Incidence sums to 4x the global count.
        let total: u128 = (0..6).map(|v| c4_incident_to_vertex(&g, v).unwrap()).sum();
        assert_eq!(total, 4 * count_cycles(&g, 4).unwrap());
    }

    #[test]
    fn audit_bound_cases() {
        // C4 itself, s=2: one incident copy, bound max(6, 4/6*2) = 6.
        let audit = audit_c4_vertex_bound(&cycle(4), 2, 0, false).unwrap();
        assert_eq!(audit.count, 1);
        assert_eq!(audit.bound, Ratio::from_int(6));
        assert!(audit.holds);

        // Star: no C4 at all.
        let star = complete_bipartite(1, 5);
        let audit = audit_c4_vertex_bound(&star, 2, 0, true).unwrap();
        assert_eq!(audit.count, 0);
        assert!(audit.holds);

        // Precondition violations are reported with witnesses.
        let err = audit_c4_vertex_bound(&complete_bipartite(2, 3), 2, 0, false).unwrap_err();
        assert!(matches!(err, AuditError::NotBicliqueFree { s: 2, .. }));
        let err = audit_c4_vertex_bound(&cycle(6), 2, 0, false).unwrap_err();
        assert!(matches!(err, AuditError::NotC6Free { .. }));
        let err = audit_c4_vertex_bound(&complete(5), 4, 0, true).unwrap_err();
        assert!(matches!(err, AuditError::NotK5Free { .. }));
    }

    #[test]
    fn audit_tightness_witness() {
        // The extremal configuration behind the fractional term, s=4:
        // N(v) induces a star on s+1 vertices, and s-1 further vertices
        // are adjacent to the star's center and one fixed leaf (the edge
        // pair). The count must land exactly on
        // (s-1)(s+2)/(2(s+1)) * deg(v).
        let s = 4usize;
        // Vertices: 0 = v; 1 = star center; 2..=s+1 = star leaves;
        // s+2..=2s = the s-1 extra vertices.
        let mut g = Graph::new(2 * s + 1).unwrap();
        for leaf in 2..=(s + 1) {
            g = g.add_edge(1, leaf).unwrap();
        }
        for u in 1..=(s + 1) {
            g = g.add_edge(0, u).unwrap();
        }
        for extra in (s + 2)..=(2 * s) {
            g = g.add_edge(extra, 1).unwrap();
            g = g.add_edge(extra, 2).unwrap();
        }
        let audit = audit_c4_vertex_bound(&g, s, 0, false).unwrap();
        let deg = g.degree(0) as u128;
        assert_eq!(deg, (s + 1) as u128);
        let tight = Ratio::new((s as u128 - 1) * (s as u128 + 2) * deg, 2 * (s as u128 + 1));
        assert_eq!(Ratio::from_int(audit.count), tight);
        assert!(audit.holds);
    }

    #[test]
    fn ratio_ordering_is_exact() {
        assert!(Ratio::new(5, 3) > Ratio::new(3, 2));
        assert_eq!(Ratio::new(6, 4), Ratio::new(3, 2));
        assert!(Ratio::from_int(2) < Ratio::new(9, 4));
    }
}
