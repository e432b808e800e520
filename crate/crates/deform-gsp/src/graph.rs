//! Graph representation, structure predicates and synthetic generators.
//!
//! Graphs are undirected, weighted and stored dense. Two weight regimes are
//! supported: `Nonnegative` (classical) and `Signed` (weights of either sign,
//! degrees taken in absolute value).

use crate::error::{Error, Result};
use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::VecDeque;
use std::path::Path;

/// Weight regime of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Mode {
    Nonnegative,
    Signed,
}

/// Undirected weighted graph with a symmetric, zero-diagonal weight matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    n: usize,
    weights: DMatrix<f64>,
    mode: Mode,
}

/// Two-class node labelling with entries in {+1, -1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    pub labels: Vec<i8>,
}

impl Graph {
    /// Builds a graph from an undirected edge list. Duplicate edges overwrite
    /// with the last value.
    pub fn from_edges(n: usize, mode: Mode, edges: &[(usize, usize, f64)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParams("graph needs at least one node".into()));
        }
        let mut w = DMatrix::zeros(n, n);
        for (line, &(i, j, wt)) in edges.iter().enumerate() {
            if i >= n || j >= n {
                let index = if i >= n { i } else { j };
                return Err(Error::IndexOutOfRange {
                    line: line + 1,
                    index,
                    n_nodes: n,
                });
            }
            if i == j {
                return Err(Error::SelfLoop {
                    line: line + 1,
                    node: i,
                });
            }
            if mode == Mode::Nonnegative && wt < 0.0 {
                return Err(Error::NegativeWeightInNonnegativeMode { line: line + 1 });
            }
            if !wt.is_finite() {
                return Err(Error::MalformedLine {
                    line: line + 1,
                    content: format!("{i},{j},{wt}"),
                });
            }
            w[(i, j)] = wt;
            w[(j, i)] = wt;
        }
        Ok(Graph { n, weights: w, mode })
    }

    pub fn n_nodes(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn weights(&self) -> &DMatrix<f64> {
        &self.weights
    }

    pub fn weight(&self, i: usize, j: usize) -> f64 {
        self.weights[(i, j)]
    }

    /// Edge exists iff the weight is exactly nonzero.
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.weights[(i, j)] != 0.0
    }

    /// Iterates over undirected edges (i < j) with nonzero weight.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        (0..self.n).flat_map(move |i| {
            (i + 1..self.n)
                .filter(move |&j| self.weights[(i, j)] != 0.0)
                .map(move |j| (i, j, self.weights[(i, j)]))
        })
    }

    /// Mode-appropriate degree vector: plain row sums for `Nonnegative`,
    /// absolute row sums for `Signed`.
    pub fn degree_vector(&self) -> DVector<f64> {
        DVector::from_iterator(
            self.n,
            (0..self.n).map(|i| {
                (0..self.n)
                    .map(|j| match self.mode {
                        Mode::Nonnegative => self.weights[(i, j)],
                        Mode::Signed => self.weights[(i, j)].abs(),
                    })
                    .sum()
            }),
        )
    }

    /// Diagonal degree matrix built from [`Self::degree_vector`].
    pub fn degree_matrix(&self) -> DMatrix<f64> {
        DMatrix::from_diagonal(&self.degree_vector())
    }

    /// Labels every node with a component id in `[0, count)` and returns
    /// `(count, labels)`.
    pub fn connected_components(&self) -> (usize, Vec<usize>) {
        let mut labels = vec![usize::MAX; self.n];
        let mut count = 0;
        for start in 0..self.n {
            if labels[start] != usize::MAX {
                continue;
            }
            let mut queue = VecDeque::from([start]);
            labels[start] = count;
            while let Some(u) = queue.pop_front() {
                for v in 0..self.n {
                    if self.has_edge(u, v) && labels[v] == usize::MAX {
                        labels[v] = count;
                        queue.push_back(v);
                    }
                }
            }
            count += 1;
        }
        (count, labels)
    }

    /// BFS 2-coloring. Returns a valid bipartition if one exists.
    ///
    /// Only meaningful for nonnegative graphs; `Signed` graphs are rejected.
    pub fn bipartition(&self) -> Result<Option<Partition>> {
        if self.mode != Mode::Nonnegative {
            return Err(Error::WrongMode {
                expected: Mode::Nonnegative,
                found: self.mode,
            });
        }
        Ok(self.two_coloring(|_| -1))
    }

    /// Signed BFS coloring. Returns a partition with
    /// `l_i * l_j * sign(w_ij) > 0` on every edge when the graph is balanced.
    pub fn balance_partition(&self) -> Result<Option<Partition>> {
        if self.mode != Mode::Signed {
            return Err(Error::WrongMode {
                expected: Mode::Signed,
                found: self.mode,
            });
        }
        Ok(self.two_coloring(|w| if w > 0.0 { 1 } else { -1 }))
    }

    /// BFS coloring where crossing an edge of weight w multiplies the label
    /// by `edge_sign(w)`. `edge_sign = -1` everywhere gives plain 2-coloring.
    fn two_coloring(&self, edge_sign: impl Fn(f64) -> i8) -> Option<Partition> {
        let mut labels = vec![0i8; self.n];
        for start in 0..self.n {
            if labels[start] != 0 {
                continue;
            }
            labels[start] = 1;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for v in 0..self.n {
                    if !self.has_edge(u, v) {
                        continue;
                    }
                    let expected = labels[u] * edge_sign(self.weights[(u, v)]);
                    if labels[v] == 0 {
                        labels[v] = expected;
                        queue.push_back(v);
                    } else if labels[v] != expected {
                        return None;
                    }
                }
            }
        }
        Some(Partition { labels })
    }

    /// Number of connected components that admit a 2-coloring of the
    /// underlying (unsigned) topology. Isolated nodes count as bipartite.
    pub fn bipartite_component_count(&self) -> usize {
        self.component_coloring_count(|_| -1)
    }

    /// Number of connected components admitting a consistent sign coloring.
    /// For all-positive graphs every component is balanced.
    pub fn balanced_component_count(&self) -> usize {
        self.component_coloring_count(|w| if w > 0.0 { 1 } else { -1 })
    }

    fn component_coloring_count(&self, edge_sign: impl Fn(f64) -> i8) -> usize {
        let (_, comp) = self.connected_components();
        let n_comp = comp.iter().copied().max().map_or(0, |m| m + 1);
        let mut ok = vec![true; n_comp];
        let mut labels = vec![0i8; self.n];
        for start in 0..self.n {
            if labels[start] != 0 {
                continue;
            }
            labels[start] = 1;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for v in 0..self.n {
                    if !self.has_edge(u, v) {
                        continue;
                    }
                    let expected = labels[u] * edge_sign(self.weights[(u, v)]);
                    if labels[v] == 0 {
                        labels[v] = expected;
                        queue.push_back(v);
                    } else if labels[v] != expected {
                        ok[comp[u]] = false;
                    }
                }
            }
        }
        ok.iter().filter(|&&b| b).count()
    }

    /// JSON export: `{"n": N, "mode": "...", "edges": [[i,j,w],...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let edges: Vec<serde_json::Value> = self
            .edges()
            .map(|(i, j, w)| serde_json::json!([i, j, w]))
            .collect();
        serde_json::json!({
            "n": self.n,
            "mode": match self.mode { Mode::Nonnegative => "nonnegative", Mode::Signed => "signed" },
            "edges": edges,
        })
    }
}

/// Parses edge-list text, lines `i,j,w` (0-based, LF or CRLF, optional
/// `i,j,w`-style header).
pub fn parse_edge_list(text: &str, n_nodes: usize, mode: Mode) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut parsed_lines = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != 3 {
            return Err(Error::MalformedLine {
                line: idx + 1,
                content: raw.to_string(),
            });
        }
        let parsed: Option<(usize, usize, f64)> = (|| {
            Some((
                fields[0].parse().ok()?,
                fields[1].parse().ok()?,
                fields[2].parse().ok()?,
            ))
        })();
        match parsed {
            Some(e) => {
                edges.push(e);
                parsed_lines.push(idx + 1);
            }
            // a non-numeric first line is tolerated as a header
            None if idx == 0 => continue,
            None => {
                return Err(Error::MalformedLine {
                    line: idx + 1,
                    content: raw.to_string(),
                });
            }
        }
    }
    // re-map error line numbers from the edge slice back to file lines
    Graph::from_edges(n_nodes, mode, &edges).map_err(|e| match e {
        Error::SelfLoop { line, node } => Error::SelfLoop {
            line: parsed_lines[line - 1],
            node,
        },
        Error::IndexOutOfRange {
            line,
            index,
            n_nodes,
        } => Error::IndexOutOfRange {
            line: parsed_lines[line - 1],
            index,
            n_nodes,
        },
        Error::NegativeWeightInNonnegativeMode { line } => {
            Error::NegativeWeightInNonnegativeMode {
                line: parsed_lines[line - 1],
            }
        }
        other => other,
    })
}

/// Reads an edge-list CSV file.
pub fn load_edge_list(path: impl AsRef<Path>, n_nodes: usize, mode: Mode) -> Result<Graph> {
    let text = std::fs::read_to_string(path)?;
    parse_edge_list(&text, n_nodes, mode)
}

const KARATE_CSV: &str = include_str!("../data/karate.csv");

/// The bundled Zachary karate club graph (34 nodes, 78 unit edges).
pub fn karate() -> Graph {
    parse_edge_list(KARATE_CSV, 34, Mode::Nonnegative).expect("bundled karate data is valid")
}

/// Erdos-Renyi graph with unit weights.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_prob(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random::<f64>() < p {
                edges.push((i, j, 1.0));
            }
        }
    }
    Graph::from_edges(n, Mode::Nonnegative, &edges)
}

/// Clustered graph: dense unit edges inside each cluster, sparse across.
pub fn clustered(cluster_sizes: &[usize], p_in: f64, p_out: f64, seed: u64) -> Result<Graph> {
    check_prob(p_in)?;
    check_prob(p_out)?;
    if cluster_sizes.is_empty() || cluster_sizes.contains(&0) {
        return Err(Error::InvalidParams("empty cluster".into()));
    }
    let n: usize = cluster_sizes.iter().sum();
    let mut cluster_of = Vec::with_capacity(n);
    for (c, &size) in cluster_sizes.iter().enumerate() {
        cluster_of.extend(std::iter::repeat(c).take(size));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let p = if cluster_of[i] == cluster_of[j] { p_in } else { p_out };
            if rng.random::<f64>() < p {
                edges.push((i, j, 1.0));
            }
        }
    }
    Graph::from_edges(n, Mode::Nonnegative, &edges)
}

/// Random bipartite graph: nodes `0..n1` vs `n1..n1+n2`, edges only across.
pub fn bipartite(n1: usize, n2: usize, p: f64, seed: u64) -> Result<Graph> {
    check_prob(p)?;
    if n1 == 0 || n2 == 0 {
        return Err(Error::InvalidParams("empty bipartition class".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n1 {
        for j in 0..n2 {
            if rng.random::<f64>() < p {
                edges.push((i, n1 + j, 1.0));
            }
        }
    }
    Graph::from_edges(n1 + n2, Mode::Nonnegative, &edges)
}

/// Balanced signed graph: positive edges inside each of the two groups,
/// negative edges across.
pub fn signed_balanced(n1: usize, n2: usize, p_in: f64, p_cross: f64, seed: u64) -> Result<Graph> {
    check_prob(p_in)?;
    check_prob(p_cross)?;
    if n1 == 0 || n2 == 0 {
        return Err(Error::InvalidParams("empty group".into()));
    }
    let n = n1 + n2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let same = (i < n1) == (j < n1);
            let (p, w) = if same { (p_in, 1.0) } else { (p_cross, -1.0) };
            if rng.random::<f64>() < p {
                edges.push((i, j, w));
            }
        }
    }
    Graph::from_edges(n, Mode::Signed, &edges)
}

/// Mixed quasi-bipartite clustered graph: an even cycle (a bipartite
/// backbone, alternating the two halves) plus a few random chords inside
/// each half that add clustered structure and break exact bipartiteness.
///
/// Kept sparse on purpose (max degree 3): the small spectral radius keeps
/// the deformed Laplacian positive semidefinite across the whole interior
/// of the r grid, so interior optima are reachable.
pub fn quasi_bipartite_clustered(n: usize, seed: u64) -> Result<Graph> {
    if n < 8 {
        return Err(Error::InvalidParams("need at least 8 nodes".into()));
    }
    let half = n / 2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // cycle alternating between halves: even positions from 0..half,
    // odd positions from half..2*half (node n-1 appended if n is odd)
    let mut order: Vec<usize> = Vec::with_capacity(n);
    for k in 0..half {
        order.push(k);
        order.push(half + k);
    }
    if n % 2 == 1 {
        order.push(n - 1);
    }
    let mut degree = vec![0usize; n];
    let mut edges = Vec::new();
    for k in 0..n {
        let (i, j) = (order[k], order[(k + 1) % n]);
        edges.push((i.min(j), i.max(j), 1.0));
        degree[i] += 1;
        degree[j] += 1;
    }
    let chords_per_half = half.div_ceil(5);
    for lo in [0, half] {
        let hi = lo + half;
        let mut added = 0;
        let mut attempts = 0;
        while added < chords_per_half && attempts < 100 {
            attempts += 1;
            let i = rng.random_range(lo..hi);
            let j = rng.random_range(lo..hi);
            if i == j || degree[i] >= 3 || degree[j] >= 3 {
                continue;
            }
            let e = (i.min(j), i.max(j), 1.0);
            if edges.contains(&e) {
                continue;
            }
            edges.push(e);
            degree[i] += 1;
            degree[j] += 1;
            added += 1;
        }
    }
    Graph::from_edges(n, Mode::Nonnegative, &edges)
}

/// Dynamic topology: a random graph at step 1 evolving by monotone edge
/// rewiring into a 3-cluster graph at step `len/2` and a bipartite graph at
/// step `len`. Returns `len` graphs; deterministic given the seed.
pub fn dynamic_sequence(n: usize, len: usize, seed: u64) -> Result<Vec<Graph>> {
    if len < 3 || n < 6 {
        return Err(Error::InvalidParams(
            "dynamic sequence needs len >= 3 and n >= 6".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let start = erdos_renyi(n, 0.2, rng.random())?;
    let third = n / 3;
    let mid = clustered(&[third, third, n - 2 * third], 0.6, 0.02, rng.random())?;
    let end = bipartite(n / 2, n - n / 2, 0.4, rng.random())?;

    let mid_t = len.div_ceil(2);
    let mut seq = Vec::with_capacity(len);
    let mut current: Vec<(usize, usize)> = start.edges().map(|(i, j, _)| (i, j)).collect();
    seq.push(start);
    let mut interpolate = |seq: &mut Vec<Graph>,
                           current: &mut Vec<(usize, usize)>,
                           target: &Graph,
                           steps: usize|
     -> Result<()> {
        for s in 0..steps {
            let mut diff: Vec<(usize, usize)> = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    let now = current.contains(&(i, j));
                    if now != target.has_edge(i, j) {
                        diff.push((i, j));
                    }
                }
            }
            // flip an equal share of the remaining disagreement each step
            let remaining = steps - s;
            let k = diff.len().div_ceil(remaining);
            for _ in 0..k {
                if diff.is_empty() {
                    break;
                }
                let pick = rng.random_range(0..diff.len());
                let (i, j) = diff.swap_remove(pick);
                if target.has_edge(i, j) {
                    current.push((i, j));
                } else {
                    current.retain(|&e| e != (i, j));
                }
            }
            let edges: Vec<(usize, usize, f64)> =
                current.iter().map(|&(i, j)| (i, j, 1.0)).collect();
            seq.push(Graph::from_edges(n, Mode::Nonnegative, &edges)?);
        }
        Ok(())
    };
    interpolate(&mut seq, &mut current, &mid, mid_t - 1)?;
    interpolate(&mut seq, &mut current, &end, len - mid_t)?;
    Ok(seq)
}

fn check_prob(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParams(format!(
            "probability {p} outside [0,1]"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn p2() -> Graph {
        Graph::from_edges(2, Mode::Nonnegative, &[(0, 1, 1.0)]).unwrap()
    }

    pub fn p3() -> Graph {
        Graph::from_edges(3, Mode::Nonnegative, &[(0, 1, 1.0), (1, 2, 1.0)]).unwrap()
    }

    pub fn k3() -> Graph {
        Graph::from_edges(3, Mode::Nonnegative, &[(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]).unwrap()
    }

    #[test]
    fn parse_single_edge() {
        let g = parse_edge_list("0,1,1.0", 2, Mode::Nonnegative).unwrap();
        assert_eq!(g.weight(0, 1), 1.0);
        assert_eq!(g.weight(1, 0), 1.0);
        assert_eq!(g.weight(0, 0), 0.0);
    }

    #[test]
    fn parse_signed_edge() {
        let g = parse_edge_list("0,1,-1.0", 2, Mode::Signed).unwrap();
        assert_eq!(g.weight(0, 1), -1.0);
    }

    #[test]
    fn parse_rejects_self_loop() {
        let err = parse_edge_list("0,1,1\n0,0,1", 2, Mode::Nonnegative).unwrap_err();
        assert!(matches!(err, Error::SelfLoop { line: 2, node: 0 }));
    }

    #[test]
    fn parse_rejects_negative_in_nonneg_mode() {
        let err = parse_edge_list("0,1,-2.0", 2, Mode::Nonnegative).unwrap_err();
        assert!(matches!(err, Error::NegativeWeightInNonnegativeMode { line: 1 }));
    }

    #[test]
    fn parse_rejects_out_of_range() {
        let err = parse_edge_list("0,5,1.0", 2, Mode::Nonnegative).unwrap_err();
        assert!(matches!(err, Error::IndexOutOfRange { index: 5, .. }));
    }

    #[test]
    fn parse_tolerates_header_and_crlf() {
        let g = parse_edge_list("i,j,w\r\n0,1,2.5\r\n", 2, Mode::Nonnegative).unwrap();
        assert_eq!(g.weight(0, 1), 2.5);
    }

    #[test]
    fn duplicate_edge_last_wins() {
        let g = parse_edge_list("0,1,1.0\n0,1,3.0", 2, Mode::Nonnegative).unwrap();
        assert_eq!(g.weight(0, 1), 3.0);
    }

    #[test]
    fn degrees() {
        assert_eq!(p2().degree_vector().as_slice(), &[1.0, 1.0]);
        assert_eq!(p3().degree_vector().as_slice(), &[1.0, 2.0, 1.0]);
        let s = Graph::from_edges(2, Mode::Signed, &[(0, 1, -1.0)]).unwrap();
        assert_eq!(s.degree_vector().as_slice(), &[1.0, 1.0]);
    }

    #[test]
    fn components() {
        assert_eq!(p2().connected_components().0, 1);
        let two = Graph::from_edges(4, Mode::Nonnegative, &[(0, 1, 1.0), (2, 3, 1.0)]).unwrap();
        let (count, labels) = two.connected_components();
        assert_eq!(count, 2);
        assert_eq!(labels, vec![0, 0, 1, 1]);
        assert_eq!(karate().connected_components().0, 1);
        assert_eq!(karate().n_nodes(), 34);
    }

    #[test]
    fn bipartition_examples() {
        let part = p2().bipartition().unwrap().unwrap();
        assert_eq!(part.labels, vec![1, -1]);
        assert!(k3().bipartition().unwrap().is_none());
        let signed = Graph::from_edges(2, Mode::Signed, &[(0, 1, 1.0)]).unwrap();
        assert!(matches!(signed.bipartition(), Err(Error::WrongMode { .. })));
    }

    #[test]
    fn balance_examples() {
        let neg = Graph::from_edges(2, Mode::Signed, &[(0, 1, -1.0)]).unwrap();
        assert_eq!(neg.balance_partition().unwrap().unwrap().labels, vec![1, -1]);
        let frustrated = Graph::from_edges(
            3,
            Mode::Signed,
            &[(0, 1, 1.0), (1, 2, 1.0), (0, 2, -1.0)],
        )
        .unwrap();
        assert!(frustrated.balance_partition().unwrap().is_none());
        let big = signed_balanced(10, 10, 1.0, 0.3, 7).unwrap();
        let part = big.balance_partition().unwrap().unwrap();
        for (i, j, w) in big.edges() {
            assert!((part.labels[i] * part.labels[j]) as f64 * w > 0.0);
        }
    }

    #[test]
    fn generators_are_seed_deterministic() {
        assert_eq!(erdos_renyi(12, 0.4, 3).unwrap(), erdos_renyi(12, 0.4, 3).unwrap());
        let a = dynamic_sequence(12, 40, 5).unwrap();
        let b = dynamic_sequence(12, 40, 5).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, dynamic_sequence(12, 40, 6).unwrap());
    }

    #[test]
    fn dynamic_sequence_hits_anchor_topologies() {
        let seq = dynamic_sequence(12, 40, 11).unwrap();
        assert_eq!(seq.len(), 40);
        assert!(seq[39].bipartition().unwrap().is_some());
    }

    #[test]
    fn symmetry_and_zero_diagonal() {
        for seed in 0..10 {
            let g = erdos_renyi(15, 0.3, seed).unwrap();
            for i in 0..15 {
                assert_eq!(g.weight(i, i), 0.0);
                for j in 0..15 {
                    assert_eq!(g.weight(i, j), g.weight(j, i));
                }
            }
        }
    }

    /// Brute-force oracle: try all 2^n labellings.
    fn brute_two_color(g: &Graph, signed: bool) -> bool {
        let n = g.n_nodes();
        'outer: for mask in 0..(1u32 << n) {
            let label = |i: usize| if mask >> i & 1 == 1 { 1.0 } else { -1.0 };
            for (i, j, w) in g.edges() {
                let ok = if signed {
                    label(i) * label(j) * w.signum() > 0.0
                } else {
                    label(i) != label(j)
                };
                if !ok {
                    continue 'outer;
                }
            }
            return true;
        }
        false
    }

    #[test]
    fn bipartition_matches_bruteforce() {
        for seed in 0..40 {
            let g = erdos_renyi(9, 0.25, seed).unwrap();
            assert_eq!(
                g.bipartition().unwrap().is_some(),
                brute_two_color(&g, false),
                "seed {seed}"
            );
        }
    }

    #[test]
    fn balance_matches_bruteforce() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..40 {
            let mut edges = Vec::new();
            for i in 0..9usize {
                for j in i + 1..9 {
                    if rng.random::<f64>() < 0.3 {
                        let w = if rng.random::<bool>() { 1.0 } else { -1.0 };
                        edges.push((i, j, w));
                    }
                }
            }
            let g = Graph::from_edges(9, Mode::Signed, &edges).unwrap();
            assert_eq!(
                g.balance_partition().unwrap().is_some(),
                brute_two_color(&g, true)
            );
        }
    }

    #[test]
    fn json_export_shape() {
        let v = p2().to_json();
        assert_eq!(v["n"], 2);
        assert_eq!(v["mode"], "nonnegative");
        assert_eq!(v["edges"][0][2], 1.0);
    }
}
