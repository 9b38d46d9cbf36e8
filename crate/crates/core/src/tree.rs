//! Tree representation, the edge-list text format, distances and per-edge
//! split statistics.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::oracle::IndexMode;

/// An immutable tree on the vertices `0..n`.
///
/// Construction validates the edge list and computes, with a single traversal
/// rooted at vertex 0, the split statistics of every edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    leaf: Vec<bool>,
    // Euler interval of each vertex for the traversal rooted at 0.
    tin: Vec<usize>,
    tout: Vec<usize>,
    splits: Vec<EdgeSplit>,
}

/// Leaves and internal vertices of a tree. On a single vertex that vertex is
/// a leaf.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexClass {
    pub leaves: Vec<usize>,
    pub internals: Vec<usize>,
}

/// Statistics of the two components of `T - uv`.
///
/// `size_u` is the order of the component containing `u`, which equals the
/// number of vertices strictly closer to `u` than to `v`. The leaf and internal
/// tallies count vertices of that component by their class in the whole tree,
/// endpoints included.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeSplit {
    pub edge: (usize, usize),
    pub size_u: usize,
    pub size_v: usize,
    pub leaves_u: usize,
    pub leaves_v: usize,
    pub internals_u: usize,
    pub internals_v: usize,
    // Which endpoint is the child in the traversal rooted at 0.
    child_is_u: bool,
}

/// Pool counts on one side of an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Side {
    pub size: usize,
    pub leaves: usize,
    pub internals: usize,
}

impl Side {
    /// Number of pool members of `mode` on this side.
    pub fn count(&self, mode: IndexMode) -> usize {
        match mode {
            IndexMode::All => self.size,
            IndexMode::Leaf => self.leaves,
            IndexMode::Internal => self.internals,
        }
    }
}

impl EdgeSplit {
    pub fn side_u(&self) -> Side {
        Side { size: self.size_u, leaves: self.leaves_u, internals: self.internals_u }
    }

    pub fn side_v(&self) -> Side {
        Side { size: self.size_v, leaves: self.leaves_v, internals: self.internals_v }
    }

    /// `(near, far)` sides as seen from endpoint `x`.
    ///
    /// # Panics
    /// If `x` is not an endpoint of the edge.
    pub fn sides_from(&self, x: usize) -> (Side, Side) {
        if x == self.edge.0 {
            (self.side_u(), self.side_v())
        } else if x == self.edge.1 {
            (self.side_v(), self.side_u())
        } else {
            panic!("vertex {x} is not an endpoint of {:?}", self.edge)
        }
    }

    fn child(&self) -> usize {
        if self.child_is_u {
            self.edge.0
        } else {
            self.edge.1
        }
    }
}

impl Tree {
    /// Builds a tree from `n` and an edge list, rejecting anything that is not
    /// a tree on `0..n`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Tree> {
        if n == 0 {
            return Err(Error::NotATree("a tree needs at least one vertex".into()));
        }
        if edges.len() != n - 1 {
            return Err(Error::NotATree(format!(
                "{} vertices need exactly {} edges, got {}",
                n,
                n - 1,
                edges.len()
            )));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::NotATree(format!("self-loop at {u}")));
            }
            if adj[u].contains(&v) {
                return Err(Error::NotATree(format!("duplicate edge {u} {v}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }

        // Iterative DFS from 0: parent, preorder and Euler interval.
        let mut parent = vec![usize::MAX; n];
        let mut tin = vec![0; n];
        let mut tout = vec![0; n];
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        let mut stack = vec![(0usize, 0usize)];
        seen[0] = true;
        let mut clock = 0;
        tin[0] = clock;
        order.push(0);
        while let Some(top) = stack.last_mut() {
            let x = top.0;
            if top.1 < adj[x].len() {
                let y = adj[x][top.1];
                top.1 += 1;
                if y == parent[x] {
                    continue;
                }
                if seen[y] {
                    return Err(Error::NotATree(format!("cycle through edge {x} {y}")));
                }
                seen[y] = true;
                parent[y] = x;
                clock += 1;
                tin[y] = clock;
                order.push(y);
                stack.push((y, 0));
            } else {
                tout[x] = clock;
                stack.pop();
            }
        }
        if order.len() != n {
            return Err(Error::NotATree("graph is disconnected".into()));
        }

        let leaf: Vec<bool> = (0..n).map(|v| adj[v].len() <= 1).collect();
        let total_leaves = leaf.iter().filter(|&&l| l).count();
        let total_internals = n - total_leaves;

        // Subtree tallies in reverse preorder.
        let mut size = vec![1usize; n];
        let mut leaves: Vec<usize> = leaf.iter().map(|&l| l as usize).collect();
        for &x in order.iter().rev() {
            let p = parent[x];
            if p != usize::MAX {
                size[p] += size[x];
                leaves[p] += leaves[x];
            }
        }

        let splits = edges
            .iter()
            .map(|&(u, v)| {
                let child_is_u = parent[u] == v;
                let c = if child_is_u { u } else { v };
                let below = Side { size: size[c], leaves: leaves[c], internals: size[c] - leaves[c] };
                let above = Side {
                    size: n - below.size,
                    leaves: total_leaves - below.leaves,
                    internals: total_internals - below.internals,
                };
                let (su, sv) = if child_is_u { (below, above) } else { (above, below) };
                EdgeSplit {
                    edge: (u, v),
                    size_u: su.size,
                    size_v: sv.size,
                    leaves_u: su.leaves,
                    leaves_v: sv.leaves,
                    internals_u: su.internals,
                    internals_v: sv.internals,
                    child_is_u,
                }
            })
            .collect();

        Ok(Tree { n, edges: edges.to_vec(), adj, leaf, tin, tout, splits })
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Tree {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Tree::from_edges(n, &edges).expect("a path is a tree")
    }

    /// The star with center 0 and leaves `1..n`.
    pub fn star(n: usize) -> Tree {
        let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        Tree::from_edges(n, &edges).expect("a star is a tree")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.leaf[v]
    }

    pub fn leaf_count(&self) -> usize {
        self.leaf.iter().filter(|&&l| l).count()
    }

    pub fn internal_count(&self) -> usize {
        self.n - self.leaf_count()
    }

    /// Size of the pool the accompanying vertices of `v` are drawn from.
    pub(crate) fn pool_size(&self, mode: IndexMode) -> usize {
        match mode {
            IndexMode::All => self.n - 1,
            IndexMode::Leaf => self.leaf_count(),
            IndexMode::Internal => self.internal_count(),
        }
    }

    pub fn classify(&self) -> VertexClass {
        let (leaves, internals) = (0..self.n).partition(|&v| self.leaf[v]);
        VertexClass { leaves, internals }
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Whether `u` and `v` are adjacent.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(&v)
    }

    /// Split statistics of every edge, in edge-list order. Empty when `n = 1`.
    pub fn edge_splits(&self) -> &[EdgeSplit] {
        &self.splits
    }

    /// The split of edge `uv`, if present.
    pub fn split_of(&self, u: usize, v: usize) -> Option<&EdgeSplit> {
        if !self.has_edge(u, v) {
            return None;
        }
        self.splits
            .iter()
            .find(|s| s.edge == (u, v) || s.edge == (v, u))
    }

    /// The side of `split` that does not contain `x`.
    pub fn far_side(&self, split: &EdgeSplit, x: usize) -> Side {
        let c = split.child();
        let below = self.tin[c] <= self.tin[x] && self.tin[x] <= self.tout[c];
        match (below, split.child_is_u) {
            (true, true) | (false, false) => split.side_v(),
            (true, false) | (false, true) => split.side_u(),
        }
    }

    /// Breadth-first distances from `source`.
    pub fn distances_from(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = VecDeque::from([source]);
        dist[source] = 0;
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Number of edges on the path between `u` and `v`.
    pub fn pairwise_distance(&self, u: usize, v: usize) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.distances_from(u)[v])
    }

    /// Edge count of the minimal subtree spanning `set`.
    ///
    /// Repeatedly strips leaves that are not in `set`; what remains is the
    /// Steiner tree. Duplicates in `set` are ignored.
    pub fn steiner_distance(&self, set: &[usize]) -> Result<usize> {
        if set.is_empty() {
            return Err(Error::ParameterOutOfRange("empty vertex set".into()));
        }
        let mut keep = vec![false; self.n];
        for &v in set {
            self.check_vertex(v)?;
            keep[v] = true;
        }
        let mut degree: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        let mut alive = vec![true; self.n];
        let mut remaining = self.n;
        let mut queue: VecDeque<usize> =
            (0..self.n).filter(|&v| degree[v] <= 1 && !keep[v]).collect();
        while let Some(x) = queue.pop_front() {
            if !alive[x] {
                continue;
            }
            alive[x] = false;
            remaining -= 1;
            for &y in &self.adj[x] {
                if alive[y] {
                    degree[y] -= 1;
                    if degree[y] == 1 && !keep[y] {
                        queue.push_back(y);
                    }
                }
            }
        }
        Ok(remaining - 1)
    }
}

/// Parses the edge-list format: optional `#` comment lines, the vertex count
/// on the first remaining line, then one `u v` pair per edge. Blank lines are
/// ignored.
pub fn parse_tree(text: &str) -> Result<Tree> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = lines.next().ok_or(Error::MalformedInput {
        line: 0,
        message: "missing vertex count".into(),
    })?;
    let n: usize = header.parse().map_err(|_| Error::MalformedInput {
        line,
        message: format!("expected a vertex count, found `{header}`"),
    })?;

    let mut edges = Vec::new();
    for (line, body) in lines {
        let fields: Vec<&str> = body.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::MalformedInput {
                line,
                message: format!("expected `u v`, found `{body}`"),
            });
        }
        let mut ends = [0usize; 2];
        for (slot, field) in ends.iter_mut().zip(&fields) {
            *slot = field.parse().map_err(|_| Error::MalformedInput {
                line,
                message: format!("`{field}` is not a vertex id"),
            })?;
            if *slot >= n {
                return Err(Error::MalformedInput {
                    line,
                    message: format!("vertex {slot} out of range for n = {n}"),
                });
            }
        }
        edges.push((ends[0], ends[1]));
    }
    Tree::from_edges(n, &edges)
}

impl FromStr for Tree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Tree> {
        parse_tree(s)
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for (u, v) in &self.edges {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}
