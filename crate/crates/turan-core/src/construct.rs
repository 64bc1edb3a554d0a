//! Parametric generators for the extremal graphs under study, the
//! closed-form copy-count formulas, and structure matchers for the
//! uniqueness characterizations.

use crate::canon::canonical_form;
use crate::count::{count_complete_bipartite, CountError};
use crate::graph::{BitIter, Graph, GraphError, MAX_VERTICES};
use alloc::boxed::Box;
use core::fmt;

/// Named parametric construction. Vertex labeling is deterministic:
/// the first block of labels is the first operand / small side / clique
/// side, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Construction {
    /// `K_{a,b}`; labels `0..a` are the a-side.
    CompleteBipartite(usize, usize),
    /// `K_{2,n-2}` plus edge `{0,1}` inside the 2-side and edge `{2,3}`
    /// inside the (n-2)-side. Requires `n >= 6`.
    Thm3Extremal(usize),
    /// A member of the family between `K_{s,n-s}` and `K_s + H` where
    /// `H` has one optional edge: labels `0..s` are the clique side, the
    /// clique's internal edges are selected by `clique_edge_mask` (bit
    /// index = lexicographic rank of the pair `(i,j)`, `i < j`), and
    /// `h_edge_present` toggles the edge `{s, s+1}`. Requires
    /// `n >= 2s+1`, `s >= 2`.
    Thm4Family {
        n: usize,
        s: usize,
        clique_edge_mask: u32,
        h_edge_present: bool,
    },
    /// Join of two constructions: every cross pair adjacent.
    Join(Box<Construction>, Box<Construction>),
    /// `K_{a,b}^+`: join of an a-clique and a b-vertex independent set.
    CliqueJoinIndependent(usize, usize),
    /// Star on `k` vertices, center labeled 0.
    Star(usize),
    Clique(usize),
    Empty(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructError {
    Graph(GraphError),
    /// Parameters violate the construction's invariants.
    InvalidParams(&'static str),
}

impl fmt::Display for ConstructError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructError::Graph(e) => write!(f, "{}", e),
            ConstructError::InvalidParams(msg) => write!(f, "invalid parameters: {}", msg),
        }
    }
}

impl core::error::Error for ConstructError {}

impl From<GraphError> for ConstructError {
    fn from(e: GraphError) -> Self {
        ConstructError::Graph(e)
    }
}

/// Number of clique-mask bits for clique side `s`.
pub fn clique_mask_bits(s: usize) -> u32 {
    (s * (s - 1) / 2) as u32
}

/// Builds the construction's canonical representative.
pub fn build(c: &Construction) -> Result<Graph, ConstructError> {
    match *c {
        Construction::CompleteBipartite(a, b) => {
            if a < 1 || b < 1 || a + b > MAX_VERTICES {
                return Err(ConstructError::InvalidParams("sides must be >= 1, a+b <= 64"));
            }
            let mut g = Graph::new(a + b)?;
            for i in 0..a {
                for j in a..a + b {
                    g = g.add_edge(i, j)?;
                }
            }
            Ok(g)
        }
        Construction::Thm3Extremal(n) => {
            if n < 6 || n > MAX_VERTICES {
                return Err(ConstructError::InvalidParams("Thm3Extremal needs 6 <= n <= 64"));
            }
            let mut g = build(&Construction::CompleteBipartite(2, n - 2))?;
            g = g.add_edge(0, 1)?;
            g = g.add_edge(2, 3)?;
            Ok(g)
        }
        Construction::Thm4Family {
            n,
            s,
            clique_edge_mask,
            h_edge_present,
        } => {
            if s < 2 || n < 2 * s + 1 || n > MAX_VERTICES {
                return Err(ConstructError::InvalidParams(
                    "Thm4Family needs s >= 2, 2s+1 <= n <= 64",
                ));
            }
            if clique_mask_bits(s) < 32 && clique_edge_mask >> clique_mask_bits(s) != 0 {
                return Err(ConstructError::InvalidParams("clique edge mask too wide"));
            }
            let mut g = Graph::new(n)?;
            for i in 0..s {
                for j in s..n {
                    g = g.add_edge(i, j)?;
                }
            }
            let mut bit = 0;
            for i in 0..s {
                for j in (i + 1)..s {
                    if clique_edge_mask & (1 << bit) != 0 {
                        g = g.add_edge(i, j)?;
                    }
                    bit += 1;
                }
            }
            if h_edge_present {
                g = g.add_edge(s, s + 1)?;
            }
            Ok(g)
        }
        Construction::Join(ref a, ref b) => {
            let ga = build(a)?;
            let gb = build(b)?;
            let na = ga.vertex_count();
            let nb = gb.vertex_count();
            if na + nb > MAX_VERTICES {
                return Err(ConstructError::InvalidParams("join exceeds 64 vertices"));
            }
            let mut g = Graph::new(na + nb)?;
            for (u, v) in ga.edges() {
                g = g.add_edge(u, v)?;
            }
            for (u, v) in gb.edges() {
                g = g.add_edge(na + u, na + v)?;
            }
            for u in 0..na {
                for v in na..na + nb {
                    g = g.add_edge(u, v)?;
                }
            }
            Ok(g)
        }
        Construction::CliqueJoinIndependent(a, b) => build(&Construction::Join(
            Box::new(Construction::Clique(a)),
            Box::new(Construction::Empty(b)),
        )),
        Construction::Star(k) => {
            if k < 2 {
                return Err(ConstructError::InvalidParams("star needs k >= 2"));
            }
            let mut g = Graph::new(k)?;
            for v in 1..k {
                g = g.add_edge(0, v)?;
            }
            Ok(g)
        }
        Construction::Clique(k) => {
            let mut g = Graph::new(k)?;
            for i in 0..k {
                for j in (i + 1)..k {
                    g = g.add_edge(i, j)?;
                }
            }
            Ok(g)
        }
        Construction::Empty(k) => Ok(Graph::new(k)?),
    }
}

/// `C(n, k)` as an exact 128-bit value; 0 when `k > n`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result = 1u128;
    for i in 0..k {
        result = result * (n - i) as u128 / (i + 1) as u128;
    }
    result
}

/// Closed-form extremal values from the four theorems under study.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormulaId {
    /// Max C4 count over n-vertex C6-free bipartite graphs: `C(n-2, 2)`.
    ExBipC4C6(usize),
    /// Max C6 count over n-vertex C8-free bipartite graphs: `6 C(n-3, 3)`.
    ExBipC6C8(usize),
    /// Max C4 count over n-vertex C6-free graphs: `C(n-2, 2) + 2`.
    ExC4C6(usize),
    /// Max K_{s,s} count over n-vertex C_{2s+2}-free graphs: `C(n-s, s)`.
    ExKssC2s2(usize, usize),
}

/// Exact value of the formula. Out-of-range binomials evaluate to 0 so
/// verification sweeps can start below the thresholds.
pub fn formula_value(f: FormulaId) -> u128 {
    match f {
        FormulaId::ExBipC4C6(n) => binomial(n.saturating_sub(2) as u64, 2),
        FormulaId::ExBipC6C8(n) => 6 * binomial(n.saturating_sub(3) as u64, 3),
        FormulaId::ExC4C6(n) => binomial(n.saturating_sub(2) as u64, 2) + 2,
        FormulaId::ExKssC2s2(n, s) => {
            binomial(n.saturating_sub(s) as u64, s as u64)
        }
    }
}

/// True iff `G` is isomorphic to `K_{2,n-2}`.
pub fn matches_thm1_extremal(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n < 3 {
        return false;
    }
    let target = build(&Construction::CompleteBipartite(2, n - 2)).unwrap();
    canonical_form(g) == canonical_form(&target)
}

/// True iff `G` is isomorphic to `K_{3,n-3}`.
pub fn matches_thm2_extremal(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n < 4 {
        return false;
    }
    let target = build(&Construction::CompleteBipartite(3, n - 3)).unwrap();
    canonical_form(g) == canonical_form(&target)
}

/// True iff `G` is isomorphic to `K_{2,n-2}` with one extra edge in each
/// independent set.
pub fn matches_thm3_extremal(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n < 6 {
        return false;
    }
    let target = build(&Construction::Thm3Extremal(n)).unwrap();
    canonical_form(g) == canonical_form(&target)
}

/// Witness s-set for the two-sided family structure: `S` fully joined to the
/// rest, with at most one edge spanned by the rest. Searches all
/// `C(n,s)` candidate sets, lowest mask first.
pub fn thm4_structure_witness(g: &Graph, s: usize) -> Result<Option<u64>, CountError> {
    let n = g.vertex_count();
    if s < 1 || n <= 2 * s {
        return Err(CountError::BicliqueOutOfRange { s, t: n.saturating_sub(s) });
    }
    let mut witness = None;
    for_each_subset_local(n, s, &mut |subset| {
        let rest = g.vertex_mask() & !subset;
        let joined = BitIter(rest).all(|v| g.neighbors(v) & subset == subset);
        if !joined {
            return true;
        }
        let mut internal = 0u32;
        for v in BitIter(rest) {
            internal += (g.neighbors(v) & rest).count_ones();
        }
        if internal / 2 <= 1 {
            witness = Some(subset);
            return false;
        }
        true
    });
    Ok(witness)
}

/// True iff some s-set witnesses the two-sided family structure.
pub fn matches_thm4_structure(g: &Graph, s: usize) -> Result<bool, CountError> {
    Ok(thm4_structure_witness(g, s)?.is_some())
}

/// True iff `G` contains `K_{s,n-s}` where `n = v(G)`.
pub fn contains_spanning_biclique(g: &Graph, s: usize) -> Result<bool, CountError> {
    let n = g.vertex_count();
    Ok(count_complete_bipartite(g, s, n - s)? > 0)
}

fn for_each_subset_local(n: usize, k: usize, f: &mut impl FnMut(u64) -> bool) {
    if k > n || k == 0 {
        return;
    }
    let mut subset: u64 = (1u64 << k) - 1;
    let limit = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    loop {
        if !f(subset) {
            return;
        }
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
