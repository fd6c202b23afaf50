//! Multigraph representation with stable edge identities, BFS spanning
//! trees and edge contraction.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;

/// Vertex identifier. Ids are arbitrary `u32`s; they need not be contiguous.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

/// Edge identifier. Ids are unique for the lifetime of a graph and are
/// never reused after deletion or contraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// Undirected multigraph. Parallel edges and degree-1 vertices are
/// permitted, self-loops are not.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Multigraph {
    vertices: BTreeSet<VertexId>,
    edges: BTreeMap<EdgeId, (VertexId, VertexId)>,
    adjacency: BTreeMap<VertexId, Vec<EdgeId>>,
    next_edge: u32,
}

impl Multigraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph with vertices `1..=n` and the given endpoint pairs, edge ids
    /// assigned `0..m` in order.
    pub fn from_edges(n: u32, pairs: &[(u32, u32)]) -> Self {
        let mut g = Self::new();
        for v in 1..=n {
            g.add_vertex(VertexId(v));
        }
        for &(u, v) in pairs {
            g.add_edge(VertexId(u), VertexId(v));
        }
        g
    }

    pub fn add_vertex(&mut self, v: VertexId) {
        self.vertices.insert(v);
        self.adjacency.entry(v).or_default();
    }

    /// Fresh vertex id one past the current maximum.
    pub fn fresh_vertex(&mut self) -> VertexId {
        let id = self.vertices.iter().next_back().map_or(0, |v| v.0 + 1);
        let v = VertexId(id);
        self.add_vertex(v);
        v
    }

    /// Adds an edge between two existing vertices. Panics on self-loops or
    /// unknown endpoints; those are construction bugs, not runtime inputs.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> EdgeId {
        assert!(u != v, "self-loop at {u}");
        assert!(self.vertices.contains(&u), "unknown vertex {u}");
        assert!(self.vertices.contains(&v), "unknown vertex {v}");
        let id = EdgeId(self.next_edge);
        self.next_edge += 1;
        self.edges.insert(id, (u, v));
        self.adjacency.get_mut(&u).unwrap().push(id);
        self.adjacency.get_mut(&v).unwrap().push(id);
        id
    }

    pub fn remove_edge(&mut self, e: EdgeId) -> Result<(), Error> {
        let (u, v) = self.endpoints(e)?;
        self.edges.remove(&e);
        self.adjacency.get_mut(&u).unwrap().retain(|&x| x != e);
        self.adjacency.get_mut(&v).unwrap().retain(|&x| x != e);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn has_edge(&self, e: EdgeId) -> bool {
        self.edges.contains_key(&e)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.iter().copied()
    }

    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, VertexId, VertexId)> + '_ {
        self.edges.iter().map(|(&e, &(u, v))| (e, u, v))
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.keys().copied()
    }

    pub fn endpoints(&self, e: EdgeId) -> Result<(VertexId, VertexId), Error> {
        self.edges.get(&e).copied().ok_or(Error::UnknownEdge(e))
    }

    /// The endpoint of `e` other than `v`.
    pub fn other_endpoint(&self, e: EdgeId, v: VertexId) -> Result<VertexId, Error> {
        let (a, b) = self.endpoints(e)?;
        Ok(if a == v { b } else { a })
    }

    /// Incident edge ids of `v`, in insertion order.
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        self.adjacency.get(&v).map_or(&[], Vec::as_slice)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incident(v).len()
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Neighbor vertices of `v`, deduplicated, ascending.
    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = self
            .incident(v)
            .iter()
            .map(|&e| self.other_endpoint(e, v).unwrap())
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Checks that every vertex is reachable from the smallest vertex id.
    pub fn check_connected(&self) -> Result<(), Error> {
        let Some(start) = self.vertices.iter().next().copied() else {
            return Ok(());
        };
        let mut seen = BTreeSet::new();
        seen.insert(start);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &e in self.incident(u) {
                let w = self.other_endpoint(e, u).unwrap();
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        match self.vertices().find(|v| !seen.contains(v)) {
            Some(unreached) => Err(Error::Disconnected { unreached }),
            None => Ok(()),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.check_connected().is_ok()
    }

    /// Vertex sets of the connected components, each sorted ascending.
    pub fn components(&self) -> Vec<BTreeSet<VertexId>> {
        let mut seen: BTreeSet<VertexId> = BTreeSet::new();
        let mut out = Vec::new();
        for start in self.vertices() {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = BTreeSet::new();
            comp.insert(start);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &e in self.incident(u) {
                    let w = self.other_endpoint(e, u).unwrap();
                    if comp.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
            seen.extend(comp.iter().copied());
            out.push(comp);
        }
        out
    }

    /// Subgraph induced by `keep`, preserving edge ids.
    pub fn induced(&self, keep: &BTreeSet<VertexId>) -> Multigraph {
        let mut g = Multigraph::new();
        for &v in keep {
            g.add_vertex(v);
        }
        for (e, u, v) in self.edges() {
            if keep.contains(&u) && keep.contains(&v) {
                g.edges.insert(e, (u, v));
                g.adjacency.get_mut(&u).unwrap().push(e);
                g.adjacency.get_mut(&v).unwrap().push(e);
            }
        }
        g.next_edge = self.next_edge;
        g
    }

    /// `true` when the connected graph has no cycle (`m == n - 1`).
    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.vertex_count().max(1)
    }
}

/// Contracts edge `e`: its endpoints are merged into the smaller vertex id,
/// parallel edges are preserved, and any edges turned into self-loops are
/// deleted. Returns the new graph and the old-to-new vertex mapping.
pub fn contract_edge(
    g: &Multigraph,
    e: EdgeId,
) -> Result<(Multigraph, BTreeMap<VertexId, VertexId>), Error> {
    let (a, b) = g.endpoints(e)?;
    let (keep, gone) = if a < b { (a, b) } else { (b, a) };
    let mut out = Multigraph::new();
    for v in g.vertices() {
        if v != gone {
            out.add_vertex(v);
        }
    }
    for (id, mut u, mut v) in g.edges() {
        if id == e {
            continue;
        }
        if u == gone {
            u = keep;
        }
        if v == gone {
            v = keep;
        }
        if u == v {
            continue; // became a self-loop; drop it
        }
        out.edges.insert(id, (u, v));
        out.adjacency.get_mut(&u).unwrap().push(id);
        out.adjacency.get_mut(&v).unwrap().push(id);
    }
    out.next_edge = g.next_edge;
    let mapping = g
        .vertices()
        .map(|v| (v, if v == gone { keep } else { v }))
        .collect();
    Ok((out, mapping))
}

/// Rooted spanning tree with BFS levels, ordered neighbor lists and child
/// indices.
///
/// For a non-root vertex `u`, `ordered_neighbors(u)[0]` is its parent and
/// the remaining entries are its tree children in ascending vertex id.
/// `child_index(u)` is the position of `u` in its parent's list.
#[derive(Debug, Clone)]
pub struct LeveledTree {
    root: VertexId,
    /// The spanning tree itself, edge ids inherited from the host graph.
    tree: Multigraph,
    parent_edge: BTreeMap<VertexId, EdgeId>,
    level: BTreeMap<VertexId, u32>,
    ordered_neighbors: BTreeMap<VertexId, Vec<VertexId>>,
    ordered_edges: BTreeMap<VertexId, Vec<EdgeId>>,
    child_index: BTreeMap<VertexId, usize>,
}

impl LeveledTree {
    pub fn root(&self) -> VertexId {
        self.root
    }

    /// The spanning tree as a multigraph (original edge ids).
    pub fn tree_graph(&self) -> &Multigraph {
        &self.tree
    }

    pub fn level(&self, v: VertexId) -> u32 {
        self.level[&v]
    }

    pub fn max_level(&self) -> u32 {
        self.level.values().copied().max().unwrap_or(0)
    }

    pub fn parent_edge(&self, v: VertexId) -> Option<EdgeId> {
        self.parent_edge.get(&v).copied()
    }

    pub fn parent(&self, v: VertexId) -> Option<VertexId> {
        self.parent_edge(v)
            .map(|e| self.tree.other_endpoint(e, v).unwrap())
    }

    /// Tree edge ids (the parent edges of all non-root vertices).
    pub fn tree_edges(&self) -> BTreeSet<EdgeId> {
        self.parent_edge.values().copied().collect()
    }

    /// `n_i(v)` for `i = 0..deg(v)`; parent first for non-root vertices.
    pub fn ordered_neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.ordered_neighbors[&v]
    }

    /// Edge to `ordered_neighbors(v)[i]`.
    pub fn ordered_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.ordered_edges[&v]
    }

    /// `t(u)`: the index of `u` in its parent's ordered neighbor list.
    pub fn child_index(&self, u: VertexId) -> usize {
        self.child_index[&u]
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.tree.vertices()
    }

    /// Vertices grouped by level, ascending; each group ascending by id.
    pub fn levels(&self) -> Vec<Vec<VertexId>> {
        let mut out: Vec<Vec<VertexId>> = Vec::new();
        for (&v, &lv) in &self.level {
            let lv = lv as usize;
            if out.len() <= lv {
                out.resize(lv + 1, Vec::new());
            }
            out[lv].push(v);
        }
        out
    }

    /// Used by tree padding: appends a fresh child to `v`'s neighbor list.
    pub(crate) fn push_child(&mut self, v: VertexId, child: VertexId, edge: EdgeId) {
        let idx = self.ordered_neighbors[&v].len();
        self.ordered_neighbors.get_mut(&v).unwrap().push(child);
        self.ordered_edges.get_mut(&v).unwrap().push(edge);
        self.level.insert(child, self.level[&v] + 1);
        self.parent_edge.insert(child, edge);
        self.ordered_neighbors.insert(child, alloc::vec![v]);
        self.ordered_edges.insert(child, alloc::vec![edge]);
        self.child_index.insert(child, idx);
    }

    pub(crate) fn tree_graph_mut(&mut self) -> &mut Multigraph {
        &mut self.tree
    }
}

/// Breadth-first spanning tree rooted at `root`.
///
/// Levels equal graph distances from the root; ties among potential parents
/// are broken by visiting vertices in ascending id order, so the result is
/// deterministic. Fails with the first unreached vertex if `g` is
/// disconnected.
pub fn bfs_spanning_tree(g: &Multigraph, root: VertexId) -> Result<LeveledTree, Error> {
    if !g.has_vertex(root) {
        return Err(Error::UnknownVertex(root));
    }
    let mut level = BTreeMap::new();
    let mut parent_edge = BTreeMap::new();
    let mut children: BTreeMap<VertexId, Vec<(VertexId, EdgeId)>> = BTreeMap::new();
    level.insert(root, 0u32);
    children.insert(root, Vec::new());
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        // Scan neighbors ascending by (vertex id, edge id) so the parallel
        // edge with the smallest id becomes the tree edge.
        let mut nbrs: Vec<(VertexId, EdgeId)> = g
            .incident(u)
            .iter()
            .map(|&e| (g.other_endpoint(e, u).unwrap(), e))
            .collect();
        nbrs.sort_unstable();
        for (w, e) in nbrs {
            if level.contains_key(&w) {
                continue;
            }
            level.insert(w, level[&u] + 1);
            parent_edge.insert(w, e);
            children.entry(u).or_default().push((w, e));
            children.entry(w).or_default();
            queue.push_back(w);
        }
    }
    if let Some(unreached) = g.vertices().find(|v| !level.contains_key(v)) {
        return Err(Error::Disconnected { unreached });
    }

    let mut tree = Multigraph::new();
    for v in g.vertices() {
        tree.add_vertex(v);
    }
    let mut ordered_neighbors = BTreeMap::new();
    let mut ordered_edges = BTreeMap::new();
    let mut child_index = BTreeMap::new();
    for v in g.vertices() {
        let mut ns = Vec::new();
        let mut es = Vec::new();
        if let Some(&pe) = parent_edge.get(&v) {
            ns.push(g.other_endpoint(pe, v).unwrap());
            es.push(pe);
        }
        for &(c, e) in &children[&v] {
            ns.push(c);
            es.push(e);
        }
        ordered_neighbors.insert(v, ns);
        ordered_edges.insert(v, es);
    }
    for (&c, &e) in &parent_edge {
        let p = g.other_endpoint(e, c).unwrap();
        let idx = ordered_neighbors[&p].iter().position(|&x| x == c).unwrap();
        child_index.insert(c, idx);
        tree.edges.insert(e, (p, c));
        tree.adjacency.get_mut(&p).unwrap().push(e);
        tree.adjacency.get_mut(&c).unwrap().push(e);
    }
    tree.next_edge = g.next_edge;

    Ok(LeveledTree {
        root,
        tree,
        parent_edge,
        level,
        ordered_neighbors,
        ordered_edges,
        child_index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Multigraph {
        // a=1, b=2, c=3
        Multigraph::from_edges(3, &[(1, 2), (2, 3)])
    }

    #[test]
    fn bfs_path_levels_and_child_indices() {
        let g = path3();
        let t = bfs_spanning_tree(&g, VertexId(1)).unwrap();
        assert_eq!(t.level(VertexId(1)), 0);
        assert_eq!(t.level(VertexId(2)), 1);
        assert_eq!(t.level(VertexId(3)), 2);
        // b = n_0(a), c = n_1(b) (parent of b sits first in its list)
        assert_eq!(t.child_index(VertexId(2)), 0);
        assert_eq!(t.ordered_neighbors(VertexId(2)), &[VertexId(1), VertexId(3)]);
        assert_eq!(t.child_index(VertexId(3)), 1);
    }

    #[test]
    fn bfs_star_child_indices() {
        let g = Multigraph::from_edges(5, &[(1, 2), (1, 3), (1, 4), (1, 5)]);
        let t = bfs_spanning_tree(&g, VertexId(1)).unwrap();
        for (i, leaf) in [2u32, 3, 4, 5].iter().enumerate() {
            assert_eq!(t.level(VertexId(*leaf)), 1);
            assert_eq!(t.child_index(VertexId(*leaf)), i);
        }
    }

    #[test]
    fn bfs_rejects_disconnected() {
        let mut g = Multigraph::from_edges(2, &[(1, 2)]);
        g.add_vertex(VertexId(9));
        match bfs_spanning_tree(&g, VertexId(1)) {
            Err(Error::Disconnected { unreached }) => assert_eq!(unreached, VertexId(9)),
            other => panic!("expected disconnected error, got {other:?}"),
        }
    }

    #[test]
    fn bfs_levels_match_independent_distances() {
        // C6 plus a pendant; distances computed by a separate tiny BFS.
        let g = Multigraph::from_edges(
            7,
            &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (3, 7)],
        );
        let t = bfs_spanning_tree(&g, VertexId(1)).unwrap();
        let mut dist = BTreeMap::new();
        dist.insert(VertexId(1), 0u32);
        let mut q = VecDeque::from([VertexId(1)]);
        while let Some(u) = q.pop_front() {
            for w in g.neighbors(u) {
                if !dist.contains_key(&w) {
                    dist.insert(w, dist[&u] + 1);
                    q.push_back(w);
                }
            }
        }
        for v in g.vertices() {
            assert_eq!(t.level(v), dist[&v], "level mismatch at {v}");
        }
    }

    #[test]
    fn contract_triangle_gives_double_edge() {
        let g = Multigraph::from_edges(3, &[(1, 2), (2, 3), (3, 1)]);
        let (h, map) = contract_edge(&g, EdgeId(0)).unwrap();
        assert_eq!(h.vertex_count(), 2);
        assert_eq!(h.edge_count(), 2);
        assert_eq!(map[&VertexId(2)], VertexId(1));
        let (u, v) = h.endpoints(EdgeId(1)).unwrap();
        let (x, y) = h.endpoints(EdgeId(2)).unwrap();
        assert_eq!((u, v), (x, y)); // parallel pair
    }

    #[test]
    fn contract_chord_of_square_plus_chord() {
        // C4 1-2-3-4 plus chord 1-3; contracting the chord leaves two
        // parallel pairs sharing the merged degree-4 vertex.
        let g = Multigraph::from_edges(4, &[(1, 2), (2, 3), (3, 4), (4, 1), (1, 3)]);
        let (h, _) = contract_edge(&g, EdgeId(4)).unwrap();
        assert_eq!(h.vertex_count(), 3);
        assert_eq!(h.edge_count(), 4);
        assert_eq!(h.degree(VertexId(1)), 4);
        assert_eq!(h.degree(VertexId(2)), 2);
        assert_eq!(h.degree(VertexId(4)), 2);
    }

    #[test]
    fn contract_pendant_edge_drops_degree_sum_by_two() {
        let g = Multigraph::from_edges(3, &[(1, 2), (2, 3)]);
        let before: usize = g.vertices().map(|v| g.degree(v)).sum();
        let (h, _) = contract_edge(&g, EdgeId(1)).unwrap();
        let after: usize = h.vertices().map(|v| h.degree(v)).sum();
        assert_eq!(before - 2, after);
    }

    #[test]
    fn contract_preserves_edge_count_minus_loops() {
        // Double edge: contracting one copy deletes the other as a loop.
        let g = Multigraph::from_edges(2, &[(1, 2), (1, 2)]);
        let (h, _) = contract_edge(&g, EdgeId(0)).unwrap();
        assert_eq!(h.edge_count(), 0);
        assert_eq!(h.vertex_count(), 1);
    }
}
