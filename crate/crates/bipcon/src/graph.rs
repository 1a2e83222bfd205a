//! Concrete bipartite graphs as bit-mask adjacency rows, plus BFS connectivity.

use std::collections::VecDeque;

/// A concrete bipartite graph on left part {0..n−1} and right part {0..m−1}.
///
/// Adjacency is stored twice as packed bit masks — rows over right indices and
/// columns over left indices — so breadth-first search touches O(edges/64)
/// words in either direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    n: usize,
    m: usize,
    row_words: usize,
    col_words: usize,
    rows: Vec<u64>,
    cols: Vec<u64>,
}

impl BipartiteGraph {
    /// Empty graph with n left and m right vertices; both must be positive.
    pub fn new(n: usize, m: usize) -> Self {
        assert!(n >= 1 && m >= 1, "part sizes must be positive");
        let row_words = m.div_ceil(64);
        let col_words = n.div_ceil(64);
        Self {
            n,
            m,
            row_words,
            col_words,
            rows: vec![0; n * row_words],
            cols: vec![0; m * col_words],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        assert!(i < self.n && j < self.m, "edge ({i}, {j}) out of range");
        self.rows[i * self.row_words + j / 64] |= 1 << (j % 64);
        self.cols[j * self.col_words + i / 64] |= 1 << (i % 64);
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.rows[i * self.row_words + j / 64] >> (j % 64) & 1 == 1
    }

    /// Right-neighbor mask of left vertex i.
    pub fn row(&self, i: usize) -> &[u64] {
        &self.rows[i * self.row_words..(i + 1) * self.row_words]
    }

    /// Left-neighbor mask of right vertex j.
    pub fn col(&self, j: usize) -> &[u64] {
        &self.cols[j * self.col_words..(j + 1) * self.col_words]
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Ascending neighbor indices of left vertex i.
    pub fn right_neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(i))
    }

    /// Ascending neighbor indices of right vertex j.
    pub fn left_neighbors(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.col(j))
    }
}

fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(w, &word)| {
        let mut word = word;
        std::iter::from_fn(move || {
            if word == 0 {
                return None;
            }
            let bit = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(w * 64 + bit)
        })
    })
}

/// True iff all n+m vertices lie in one component, by breadth-first search
/// from left vertex 0. Any isolated vertex forces false.
pub fn is_connected(g: &BipartiteGraph) -> bool {
    let (n, m) = (g.n(), g.m());
    let mut seen_left = vec![false; n];
    let mut seen_right = vec![false; m];
    let mut reached = 1usize;
    seen_left[0] = true;
    // Queue entries: left vertices as i, right vertices as n + j.
    let mut queue = VecDeque::with_capacity(n + m);
    queue.push_back(0usize);
    while let Some(v) = queue.pop_front() {
        if v < n {
            for j in g.right_neighbors(v) {
                if !seen_right[j] {
                    seen_right[j] = true;
                    reached += 1;
                    queue.push_back(n + j);
                }
            }
        } else {
            for i in g.left_neighbors(v - n) {
                if !seen_left[i] {
                    seen_left[i] = true;
                    reached += 1;
                    queue.push_back(i);
                }
            }
        }
    }
    reached == n + m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph_from_edges(n: usize, m: usize, edges: &[(usize, usize)]) -> BipartiteGraph {
        let mut g = BipartiteGraph::new(n, m);
        for &(i, j) in edges {
            g.add_edge(i, j);
        }
        g
    }

    #[test]
    fn single_edge_is_connected() {
        let g = graph_from_edges(1, 1, &[(0, 0)]);
        assert!(is_connected(&g));
    }

    #[test]
    fn two_disjoint_edges_are_not_connected() {
        let g = graph_from_edges(2, 2, &[(0, 0), (1, 1)]);
        assert!(!is_connected(&g));
    }

    #[test]
    fn three_edge_path_is_connected() {
        // a1−b1, a1−b2, a2−b2.
        let g = graph_from_edges(2, 2, &[(0, 0), (0, 1), (1, 1)]);
        assert!(is_connected(&g));
    }

    #[test]
    fn isolated_vertex_forces_false() {
        let g = graph_from_edges(2, 1, &[(0, 0)]);
        assert!(!is_connected(&g));
        let g = graph_from_edges(1, 2, &[(0, 0)]);
        assert!(!is_connected(&g));
    }

    #[test]
    fn edge_count_is_popcount_sum() {
        let g = graph_from_edges(3, 70, &[(0, 0), (0, 69), (2, 64), (1, 33)]);
        assert_eq!(g.edge_count(), 4);
        assert!(g.has_edge(0, 69));
        assert!(!g.has_edge(1, 69));
        assert_eq!(g.right_neighbors(0).collect::<Vec<_>>(), vec![0, 69]);
        assert_eq!(g.left_neighbors(64).collect::<Vec<_>>(), vec![2]);
    }

    #[test]
    fn wide_graph_bfs() {
        // Path across word boundaries: left i — right i and left i+1 — right i.
        let n = 80;
        let m = 79;
        let mut g = BipartiteGraph::new(n, m);
        for i in 0..m {
            g.add_edge(i, i);
            g.add_edge(i + 1, i);
        }
        assert!(is_connected(&g));
        let g2 = BipartiteGraph::new(n, m);
        assert!(!is_connected(&g2));
    }
}
