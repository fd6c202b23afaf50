//! Biconnected components, cutvertices, bridges and the block tree.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::graph::{EdgeId, Multigraph, VertexId};

/// Standard block decomposition of a multigraph.
///
/// Blocks partition the edge set. A parallel pair forms a 2-cycle and hence
/// a single (non-bridge) block; an edge is a bridge iff its block is a
/// singleton.
#[derive(Debug, Clone)]
pub struct BlockDecomposition {
    pub blocks: Vec<BTreeSet<EdgeId>>,
    pub cutvertices: BTreeSet<VertexId>,
    pub bridges: BTreeSet<EdgeId>,
    /// Bipartite incidence between blocks and cutvertices.
    pub block_tree: Vec<(usize, VertexId)>,
    /// Every block containing each vertex, ascending.
    pub blocks_at: BTreeMap<VertexId, Vec<usize>>,
    pub block_of_edge: BTreeMap<EdgeId, usize>,
}

impl BlockDecomposition {
    /// Vertices of block `b`, ascending.
    pub fn block_vertices(&self, g: &Multigraph, b: usize) -> BTreeSet<VertexId> {
        let mut out = BTreeSet::new();
        for &e in &self.blocks[b] {
            let (u, v) = g.endpoints(e).unwrap();
            out.insert(u);
            out.insert(v);
        }
        out
    }

    pub fn is_bridge(&self, e: EdgeId) -> bool {
        self.bridges.contains(&e)
    }
}

/// Iterative Hopcroft–Tarjan biconnected components. Parallel edges are
/// honored: only the tree edge into a vertex is skipped (by id), so a second
/// parallel edge registers as a back edge and closes a 2-cycle block.
pub fn block_decomposition(g: &Multigraph) -> BlockDecomposition {
    let mut disc: BTreeMap<VertexId, u32> = BTreeMap::new();
    let mut low: BTreeMap<VertexId, u32> = BTreeMap::new();
    let mut ptr: BTreeMap<VertexId, usize> = BTreeMap::new();
    let mut entry_edge: BTreeMap<VertexId, EdgeId> = BTreeMap::new();
    let mut estack: Vec<EdgeId> = Vec::new();
    let mut blocks: Vec<BTreeSet<EdgeId>> = Vec::new();
    let mut timer = 0u32;

    for start in g.vertices() {
        if disc.contains_key(&start) {
            continue;
        }
        disc.insert(start, timer);
        low.insert(start, timer);
        timer += 1;
        let mut stack = alloc::vec![start];
        while let Some(&u) = stack.last() {
            let i = *ptr.entry(u).or_insert(0);
            if i < g.incident(u).len() {
                *ptr.get_mut(&u).unwrap() += 1;
                let e = g.incident(u)[i];
                if entry_edge.get(&u) == Some(&e) {
                    continue;
                }
                let w = g.other_endpoint(e, u).unwrap();
                match disc.get(&w) {
                    None => {
                        entry_edge.insert(w, e);
                        disc.insert(w, timer);
                        low.insert(w, timer);
                        timer += 1;
                        estack.push(e);
                        stack.push(w);
                    }
                    Some(&dw) if dw < disc[&u] => {
                        estack.push(e);
                        let lu = low[&u].min(dw);
                        low.insert(u, lu);
                    }
                    _ => {} // forward edge, handled from the other side
                }
            } else {
                stack.pop();
                let Some(&pe) = entry_edge.get(&u) else {
                    continue; // DFS root
                };
                let p = g.other_endpoint(pe, u).unwrap();
                let lp = low[&p].min(low[&u]);
                low.insert(p, lp);
                if low[&u] >= disc[&p] {
                    let mut blk = BTreeSet::new();
                    while let Some(e) = estack.pop() {
                        blk.insert(e);
                        if e == pe {
                            break;
                        }
                    }
                    blocks.push(blk);
                }
            }
        }
    }

    let mut blocks_at: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
    let mut block_of_edge = BTreeMap::new();
    for (b, blk) in blocks.iter().enumerate() {
        let mut seen = BTreeSet::new();
        for &e in blk {
            block_of_edge.insert(e, b);
            let (x, y) = g.endpoints(e).unwrap();
            seen.insert(x);
            seen.insert(y);
        }
        for v in seen {
            blocks_at.entry(v).or_default().push(b);
        }
    }
    let cutvertices: BTreeSet<VertexId> = blocks_at
        .iter()
        .filter(|(_, bs)| bs.len() >= 2)
        .map(|(&v, _)| v)
        .collect();
    let bridges: BTreeSet<EdgeId> = blocks
        .iter()
        .filter(|b| b.len() == 1)
        .flat_map(|b| b.iter().copied())
        .collect();
    let mut block_tree = Vec::new();
    for (b, _) in blocks.iter().enumerate() {
        let mut verts: Vec<VertexId> = Vec::new();
        for &e in &blocks[b] {
            let (x, y) = g.endpoints(e).unwrap();
            verts.push(x);
            verts.push(y);
        }
        verts.sort_unstable();
        verts.dedup();
        for v in verts {
            if cutvertices.contains(&v) {
                block_tree.push((b, v));
            }
        }
    }

    BlockDecomposition {
        blocks,
        cutvertices,
        bridges,
        block_tree,
        blocks_at,
        block_of_edge,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_every_edge_is_a_bridge() {
        let g = Multigraph::from_edges(5, &[(1, 2), (2, 3), (3, 4), (3, 5)]);
        let d = block_decomposition(&g);
        assert_eq!(d.blocks.len(), 4);
        assert_eq!(d.bridges.len(), 4);
        assert_eq!(d.cutvertices, BTreeSet::from([VertexId(2), VertexId(3)]));
    }

    #[test]
    fn single_cycle_is_one_block() {
        let g = Multigraph::from_edges(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]);
        let d = block_decomposition(&g);
        assert_eq!(d.blocks.len(), 1);
        assert!(d.cutvertices.is_empty());
        assert!(d.bridges.is_empty());
    }

    #[test]
    fn two_triangles_sharing_a_vertex() {
        let g = Multigraph::from_edges(5, &[(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 3)]);
        let d = block_decomposition(&g);
        assert_eq!(d.blocks.len(), 2);
        assert_eq!(d.cutvertices, BTreeSet::from([VertexId(3)]));
        assert!(d.bridges.is_empty());
        assert_eq!(d.block_tree.len(), 2);
    }

    #[test]
    fn parallel_pair_is_a_two_cycle_block_not_a_bridge() {
        let g = Multigraph::from_edges(2, &[(1, 2), (1, 2)]);
        let d = block_decomposition(&g);
        assert_eq!(d.blocks.len(), 1);
        assert_eq!(d.blocks[0].len(), 2);
        assert!(d.bridges.is_empty());
    }
}
