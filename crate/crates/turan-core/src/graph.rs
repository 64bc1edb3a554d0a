//! Undirected simple graphs on at most 64 vertices, one `u64` neighbor
//! mask per vertex. Graphs are immutable values: every edit returns a
//! fresh graph, which keeps search-tree branching and worker threads
//! trivially safe.

use alloc::vec::Vec;
use core::fmt;

/// Hard cap on the vertex count: one machine word per adjacency row.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// Requested order outside `1..=64`.
    VertexCapExceeded { n: usize },
    VertexOutOfRange { v: usize, n: usize },
    /// Attempted to add a loop `v-v`.
    Loop { v: usize },
    EmptyVertexSet,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexCapExceeded { n } => {
                write!(f, "vertex cap exceeded: {} not in 1..={}", n, MAX_VERTICES)
            }
            GraphError::VertexOutOfRange { v, n } => {
                write!(f, "vertex {} out of range for order {}", v, n)
            }
            GraphError::Loop { v } => write!(f, "loop {}-{} not allowed", v, v),
            GraphError::EmptyVertexSet => write!(f, "empty vertex set"),
        }
    }
}

impl core::error::Error for GraphError {}

/// Undirected simple graph. Row `v` of `adj` is the neighbor set of `v`
/// as a bit mask; bits at positions `>= n` are always zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: u8,
    adj: [u64; MAX_VERTICES],
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        let mut first = true;
        for (u, v) in self.edges() {
            if !first {
                write!(f, ", ")?;
            }
            write!(f, "{}-{}", u, v)?;
            first = false;
        }
        write!(f, "])")
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices, `1 <= n <= 64`.
    pub fn new(n: usize) -> Result<Graph, GraphError> {
        if n < 1 || n > MAX_VERTICES {
            return Err(GraphError::VertexCapExceeded { n });
        }
        Ok(Graph {
            n: n as u8,
            adj: [0; MAX_VERTICES],
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n as usize
    }

    pub fn edge_count(&self) -> usize {
        let mut total = 0u32;
        for v in 0..self.vertex_count() {
            total += self.adj[v].count_ones();
        }
        (total / 2) as usize
    }

    /// Neighbor set of `v` as a bit mask.
    pub fn neighbors(&self, v: usize) -> u64 {
        debug_assert!(v < self.vertex_count());
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count())
            .map(|v| self.degree(v))
            .max()
            .unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.vertex_count() && v < self.vertex_count());
        self.adj[u] & (1u64 << v) != 0
    }

    /// Mask with one bit per vertex of the graph.
    pub fn vertex_mask(&self) -> u64 {
        if self.n as usize == MAX_VERTICES {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// New graph with the edge `u-v` added (idempotent).
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let n = self.vertex_count();
        if u >= n {
            return Err(GraphError::VertexOutOfRange { v: u, n });
        }
        if v >= n {
            return Err(GraphError::VertexOutOfRange { v, n });
        }
        if u == v {
            return Err(GraphError::Loop { v });
        }
        let mut g = *self;
        g.adj[u] |= 1u64 << v;
        g.adj[v] |= 1u64 << u;
        Ok(g)
    }

    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let n = self.vertex_count();
        if u >= n {
            return Err(GraphError::VertexOutOfRange { v: u, n });
        }
        if v >= n {
            return Err(GraphError::VertexOutOfRange { v, n });
        }
        let mut g = *self;
        g.adj[u] &= !(1u64 << v);
        g.adj[v] &= !(1u64 << u);
        Ok(g)
    }

    /// Iterator over edges `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.vertex_count();
        (0..n).flat_map(move |u| {
            BitIter(self.adj[u] >> (u + 1) << (u + 1)).map(move |v| (u, v))
        })
    }

    /// Subgraph induced on the vertices of `mask`, relabeled `0..|mask|`
    /// in ascending mask order.
    pub fn induced_subgraph(&self, mask: u64) -> Result<Graph, GraphError> {
        let mask = mask & self.vertex_mask();
        if mask == 0 {
            return Err(GraphError::EmptyVertexSet);
        }
        let verts: Vec<usize> = BitIter(mask).collect();
        let mut g = Graph::new(verts.len())?;
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g = g.add_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }

    /// Graph with one extra vertex (label `n`) adjacent to `mask`.
    pub fn with_vertex(&self, mask: u64) -> Result<Graph, GraphError> {
        let n = self.vertex_count();
        if n + 1 > MAX_VERTICES {
            return Err(GraphError::VertexCapExceeded { n: n + 1 });
        }
        debug_assert_eq!(mask & !self.vertex_mask(), 0);
        let mut g = Graph {
            n: self.n + 1,
            adj: self.adj,
        };
        g.adj[n] = mask;
        for v in BitIter(mask) {
            g.adj[v] |= 1u64 << n;
        }
        Ok(g)
    }

    /// Graph with vertex `v` deleted; higher labels shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        let mask = self.vertex_mask() & !(1u64 << v);
        self.induced_subgraph(mask)
    }

    /// Relabeled graph: new vertex `i` is old vertex `perm[i]`.
    pub fn permuted(&self, perm: &[u8]) -> Graph {
        let n = self.vertex_count();
        debug_assert_eq!(perm.len(), n);
        let mut g = Graph {
            n: self.n,
            adj: [0; MAX_VERTICES],
        };
        for i in 0..n {
            for j in (i + 1)..n {
                if self.has_edge(perm[i] as usize, perm[j] as usize) {
                    g.adj[i] |= 1u64 << j;
                    g.adj[j] |= 1u64 << i;
                }
            }
        }
        g
    }

    /// Proper 2-coloring, or an odd closed walk when none exists.
    ///
    /// BFS per connected component; the lowest-labeled vertex of each
    /// component goes left, so the output is deterministic.
    pub fn bipartition_of(&self) -> Result<Bipartition, OddWalk> {
        let n = self.vertex_count();
        let mut color = [2u8; MAX_VERTICES]; // 2 = unvisited
        let mut parent = [u8::MAX; MAX_VERTICES];
        let mut left = 0u64;
        let mut right = 0u64;
        let mut queue: Vec<usize> = Vec::new();
        for root in 0..n {
            if color[root] != 2 {
                continue;
            }
            color[root] = 0;
            left |= 1u64 << root;
            queue.clear();
            queue.push(root);
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                for v in BitIter(self.adj[u]) {
                    if color[v] == 2 {
                        color[v] = 1 - color[u];
                        parent[v] = u as u8;
                        if color[v] == 0 {
                            left |= 1u64 << v;
                        } else {
                            right |= 1u64 << v;
                        }
                        queue.push(v);
                    } else if color[v] == color[u] {
                        return Err(odd_walk(&parent, u, v));
                    }
                }
            }
        }
        Ok(Bipartition { left, right })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition_of().is_ok()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            for v in BitIter(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == self.vertex_mask() || n == 1
    }
}

/// Odd-length closed walk witnessing non-bipartiteness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddWalk(pub Vec<u8>);

fn odd_walk(parent: &[u8; MAX_VERTICES], u: usize, v: usize) -> OddWalk {
    // Walk u -> root, then root -> v, then the edge v-u closes it. The
    // BFS layers of u and v share parity, so the walk length is odd.
    let mut up: Vec<u8> = Vec::new();
    let mut x = u;
    loop {
        up.push(x as u8);
        if parent[x] == u8::MAX {
            break;
        }
        x = parent[x] as usize;
    }
    let mut down: Vec<u8> = Vec::new();
    let mut y = v;
    loop {
        down.push(y as u8);
        if parent[y] == u8::MAX {
            break;
        }
        y = parent[y] as usize;
    }
    // up = [u .. root], down = [v .. root]; closed walk u..root..v u.
    let mut walk = up;
    walk.extend(down.iter().rev().skip(1));
    walk.push(u as u8);
    OddWalk(walk)
}

/// Color classes of a bipartite graph as bit masks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bipartition {
    pub left: u64,
    pub right: u64,
}

/// Iterator over the set bit positions of a mask, ascending.
#[derive(Clone, Copy)]
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let b = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(b)
        }
    }
}
