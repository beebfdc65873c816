//! Graph representation and discrete vector-calculus operators.
//!
//! A [`WeightedGraph`] is an undirected multigraph with positive edge
//! weights (conductances) and a canonical orientation: every stored edge
//! has `tail < head`. The orientation only fixes sign conventions for
//! edge vectors; the graph itself is undirected. Self-loops are rejected,
//! parallel edges are allowed.

use nalgebra::{DMatrix, DVector};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::{Error, Result};

/// Dense real vector indexed by vertex id.
pub type VertexVector = DVector<f64>;
/// Dense real vector indexed by canonical edge id, signed by orientation.
pub type EdgeVector = DVector<f64>;

/// Largest `n` for which the exhaustive vertex-expansion scan is allowed.
pub const EXPANSION_CAP: usize = 24;
/// Largest `n` for which dense eigendecomposition is used as the spectral oracle.
pub const SPECTRAL_CAP: usize = 2000;

/// A canonically oriented edge: `tail < head`, `weight > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub tail: usize,
    pub head: usize,
    pub weight: f64,
}

/// One adjacency record: `sign` is `+1.0` when the owning vertex is the
/// edge's tail, `-1.0` when it is the head.
#[derive(Debug, Clone, Copy)]
pub struct AdjEntry {
    pub neighbor: usize,
    pub edge: usize,
    pub sign: f64,
}

#[derive(Debug, Clone)]
pub struct WeightedGraph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<AdjEntry>>,
    weighted_degree: Vec<f64>,
    connected: bool,
}

/// Spectral and combinatorial summary of a connected graph.
#[derive(Debug, Clone, Serialize)]
pub struct SpectralSummary {
    /// Smallest nonzero Laplacian eigenvalue.
    pub fiedler: f64,
    /// Largest Laplacian eigenvalue.
    pub lambda_max: f64,
    /// Exact vertex expansion, present only when computed exactly.
    pub alpha: Option<f64>,
    /// Hop-metric diameter.
    pub diameter: usize,
}

impl WeightedGraph {
    /// Builds a graph from `(tail, head, weight)` triples, normalizing each
    /// edge to the canonical `tail < head` orientation.
    pub fn new(n: usize, triples: &[(usize, usize, f64)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(triples.len());
        for (index, &(a, b, weight)) in triples.iter().enumerate() {
            if a >= n || b >= n {
                return Err(Error::VertexOutOfRange {
                    index,
                    tail: a,
                    head: b,
                    n,
                });
            }
            if a == b {
                return Err(Error::SelfLoop {
                    index,
                    tail: a,
                    head: b,
                });
            }
            if !(weight > 0.0 && weight.is_finite()) {
                return Err(Error::BadWeight {
                    index,
                    tail: a,
                    head: b,
                    weight,
                });
            }
            let (tail, head) = if a < b { (a, b) } else { (b, a) };
            edges.push(Edge { tail, head, weight });
        }

        let mut adj: Vec<Vec<AdjEntry>> = vec![Vec::new(); n];
        for (e, edge) in edges.iter().enumerate() {
            adj[edge.tail].push(AdjEntry {
                neighbor: edge.head,
                edge: e,
                sign: 1.0,
            });
            adj[edge.head].push(AdjEntry {
                neighbor: edge.tail,
                edge: e,
                sign: -1.0,
            });
        }
        for list in &mut adj {
            list.sort_by_key(|entry| (entry.neighbor, entry.edge));
        }

        // Fixed summation order (ascending neighbor, then edge id) so that
        // solver kernels reproduce bit-identical results everywhere.
        let weighted_degree = adj
            .iter()
            .map(|list| list.iter().map(|entry| edges[entry.edge].weight).sum())
            .collect();

        let mut graph = WeightedGraph {
            n,
            edges,
            adj,
            weighted_degree,
            connected: false,
        };
        graph.connected = graph.bfs_reach(0) == n;
        Ok(graph)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    pub fn adjacency(&self, v: usize) -> &[AdjEntry] {
        &self.adj[v]
    }

    /// Number of incident edges (parallel edges counted with multiplicity).
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Sum of incident edge weights.
    pub fn weighted_degree(&self, v: usize) -> f64 {
        self.weighted_degree[v]
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Maximum weighted degree; bounds the Laplacian spectrum by
    /// `lambda_max <= 2 * max_weighted_degree` and scales the power series.
    pub fn max_weighted_degree(&self) -> f64 {
        self.weighted_degree.iter().cloned().fold(0.0, f64::max)
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.connected {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// True when every edge weight is exactly `1.0`.
    pub fn is_unit_weighted(&self) -> bool {
        self.edges.iter().all(|e| e.weight == 1.0)
    }

    pub fn require_unit_weighted(&self) -> Result<()> {
        if self.is_unit_weighted() {
            Ok(())
        } else {
            Err(Error::NotUnweighted)
        }
    }

    fn check_vertex(&self, id: usize) -> Result<()> {
        if id < self.n {
            Ok(())
        } else {
            Err(Error::UnknownVertex { id, n: self.n })
        }
    }

    pub fn vertex(&self, id: usize) -> Result<usize> {
        self.check_vertex(id)?;
        Ok(id)
    }

    fn bfs_reach(&self, start: usize) -> usize {
        if self.n == 0 {
            return 0;
        }
        let mut seen = vec![false; self.n];
        let mut queue = std::collections::VecDeque::new();
        seen[start] = true;
        queue.push_back(start);
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for entry in &self.adj[v] {
                if !seen[entry.neighbor] {
                    seen[entry.neighbor] = true;
                    count += 1;
                    queue.push_back(entry.neighbor);
                }
            }
        }
        count
    }

    /// Discrete gradient: `(Bx)_e = x_tail - x_head`.
    pub fn gradient(&self, x: &VertexVector) -> Result<EdgeVector> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: x.len(),
            });
        }
        Ok(EdgeVector::from_iterator(
            self.m(),
            self.edges.iter().map(|e| x[e.tail] - x[e.head]),
        ))
    }

    /// Discrete divergence: `(B*f)_v` sums signed incident flows; the
    /// result is always zero-sum.
    pub fn divergence(&self, f: &EdgeVector) -> Result<VertexVector> {
        if f.len() != self.m() {
            return Err(Error::DimensionMismatch {
                expected: self.m(),
                got: f.len(),
            });
        }
        let mut out = VertexVector::zeros(self.n);
        for (e, edge) in self.edges.iter().enumerate() {
            out[edge.tail] += f[e];
            out[edge.head] -= f[e];
        }
        Ok(out)
    }

    /// Applies `L = B*WB` directly, without materializing `B`.
    pub fn laplacian_apply(&self, x: &VertexVector) -> Result<VertexVector> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: x.len(),
            });
        }
        let mut out = VertexVector::zeros(self.n);
        for v in 0..self.n {
            let mut acc = self.weighted_degree[v] * x[v];
            for entry in &self.adj[v] {
                acc -= self.edges[entry.edge].weight * x[entry.neighbor];
            }
            out[v] = acc;
        }
        Ok(out)
    }

    pub fn laplacian_dense(&self) -> DMatrix<f64> {
        let mut l = DMatrix::zeros(self.n, self.n);
        for edge in &self.edges {
            l[(edge.tail, edge.tail)] += edge.weight;
            l[(edge.head, edge.head)] += edge.weight;
            l[(edge.tail, edge.head)] -= edge.weight;
            l[(edge.head, edge.tail)] -= edge.weight;
        }
        l
    }

    /// Dense incidence matrix `B` (rows = edges, columns = vertices).
    pub fn incidence_dense(&self) -> DMatrix<f64> {
        let mut b = DMatrix::zeros(self.m(), self.n);
        for (e, edge) in self.edges.iter().enumerate() {
            b[(e, edge.tail)] = 1.0;
            b[(e, edge.head)] = -1.0;
        }
        b
    }

    /// Degree-normalized Laplacian `D^{-1/2} L D^{-1/2}` (unweighted graphs).
    pub fn normalized_laplacian_dense(&self) -> Result<DMatrix<f64>> {
        self.require_unit_weighted()?;
        let inv_sqrt: Vec<f64> = (0..self.n)
            .map(|v| 1.0 / (self.degree(v) as f64).sqrt())
            .collect();
        let mut l = self.laplacian_dense();
        for u in 0..self.n {
            for v in 0..self.n {
                l[(u, v)] *= inv_sqrt[u] * inv_sqrt[v];
            }
        }
        Ok(l)
    }

    /// Exact vertex expansion `min_S |E(S, S^c)| / min(|S|, |S^c|)` by
    /// exhaustive subset scan. Unweighted graphs only, `n <= EXPANSION_CAP`.
    pub fn vertex_expansion_exact(&self) -> Result<f64> {
        self.require_unit_weighted()?;
        if self.n > EXPANSION_CAP {
            return Err(Error::OverCap {
                what: "exact vertex expansion",
                n: self.n,
                cap: EXPANSION_CAP,
            });
        }
        if self.n < 2 {
            return Err(Error::InvalidParameter(
                "vertex expansion needs at least 2 vertices".into(),
            ));
        }
        // Fix vertex n-1 outside S; every cut appears once as (S, S^c).
        let mut best = f64::INFINITY;
        let masks = 1u64 << (self.n - 1);
        for mask in 1..masks {
            let size = mask.count_ones() as usize;
            let mut crossing = 0usize;
            for edge in &self.edges {
                let t_in = (mask >> edge.tail) & 1;
                let h_in = (mask >> edge.head) & 1;
                if t_in != h_in {
                    crossing += 1;
                }
            }
            let ratio = crossing as f64 / size.min(self.n - size) as f64;
            if ratio < best {
                best = ratio;
            }
        }
        Ok(best)
    }

    fn sorted_eigenvalues(&self) -> Result<Vec<f64>> {
        if self.n > SPECTRAL_CAP {
            return Err(Error::OverCap {
                what: "dense spectral oracle",
                n: self.n,
                cap: SPECTRAL_CAP,
            });
        }
        let eig = self.laplacian_dense().symmetric_eigen();
        let mut values: Vec<f64> = eig.eigenvalues.iter().cloned().collect();
        values.sort_by(|a, b| a.partial_cmp(b).unwrap());
        Ok(values)
    }

    /// Smallest nonzero Laplacian eigenvalue (dense oracle).
    pub fn fiedler_eigenvalue(&self) -> Result<f64> {
        self.require_connected()?;
        if self.n < 2 {
            return Err(Error::InvalidParameter(
                "Fiedler eigenvalue needs at least 2 vertices".into(),
            ));
        }
        Ok(self.sorted_eigenvalues()?[1])
    }

    pub fn lambda_max(&self) -> Result<f64> {
        Ok(*self
            .sorted_eigenvalues()?
            .last()
            .expect("graph has at least one vertex"))
    }

    /// Hop-metric diameter via all-pairs BFS.
    pub fn diameter(&self) -> Result<usize> {
        self.require_connected()?;
        let mut diameter = 0;
        for start in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut queue = std::collections::VecDeque::new();
            dist[start] = 0;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for entry in &self.adj[v] {
                    if dist[entry.neighbor] == usize::MAX {
                        dist[entry.neighbor] = dist[v] + 1;
                        queue.push_back(entry.neighbor);
                    }
                }
            }
            diameter = diameter.max(*dist.iter().max().unwrap());
        }
        Ok(diameter)
    }

    /// Spectral plus combinatorial summary; `compute_alpha` requests the
    /// exhaustive vertex-expansion scan (unweighted, capped).
    pub fn spectral_summary(&self, compute_alpha: bool) -> Result<SpectralSummary> {
        let fiedler = self.fiedler_eigenvalue()?;
        let lambda_max = self.lambda_max()?;
        let alpha = if compute_alpha {
            Some(self.vertex_expansion_exact()?)
        } else {
            None
        };
        Ok(SpectralSummary {
            fiedler,
            lambda_max,
            alpha,
            diameter: self.diameter()?,
        })
    }

    // ----- generators -----

    pub fn path(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("path needs n >= 1".into()));
        }
        let triples: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1, 1.0)).collect();
        Self::new(n, &triples)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter("cycle needs n >= 3".into()));
        }
        let triples: Vec<_> = (0..n).map(|i| (i, (i + 1) % n, 1.0)).collect();
        Self::new(n, &triples)
    }

    pub fn complete(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("complete graph needs n >= 1".into()));
        }
        let mut triples = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                triples.push((u, v, 1.0));
            }
        }
        Self::new(n, &triples)
    }

    /// Two hubs joined by one direct edge and `k` internally disjoint paths
    /// of length `k`: `n = 2 + k(k-1)`, `m = k^2 + 1`, unit weights.
    pub fn glued_paths(k: usize) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidParameter("glued-paths needs k >= 1".into()));
        }
        let n = 2 + k * (k - 1);
        let mut triples = vec![(0, 1, 1.0)];
        for j in 0..k {
            let base = 2 + j * (k - 1);
            let mut prev = 0;
            for i in 0..(k - 1) {
                triples.push((prev, base + i, 1.0));
                prev = base + i;
            }
            triples.push((prev, 1, 1.0));
        }
        Self::new(n, &triples)
    }

    /// Random simple connected `d`-regular graph via the pairing model,
    /// retried until simple and connected. Deterministic in `seed`.
    pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<Self> {
        if n * d % 2 != 0 {
            return Err(Error::InvalidParameter(format!(
                "no {d}-regular graph on {n} vertices: n*d must be even"
            )));
        }
        if d == 0 || d >= n {
            return Err(Error::InvalidParameter(format!(
                "degree {d} infeasible for a simple graph on {n} vertices"
            )));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
        for _attempt in 0..10_000 {
            stubs.shuffle(&mut rng);
            let mut triples = Vec::with_capacity(n * d / 2);
            let mut seen = std::collections::HashSet::new();
            let mut ok = true;
            for pair in stubs.chunks_exact(2) {
                let (a, b) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
                if a == b || !seen.insert((a, b)) {
                    ok = false;
                    break;
                }
                triples.push((a, b, 1.0));
            }
            if !ok {
                continue;
            }
            let graph = Self::new(n, &triples)?;
            if graph.is_connected() {
                return Ok(graph);
            }
        }
        Err(Error::InvalidParameter(format!(
            "pairing model failed to produce a simple connected {d}-regular graph on {n} vertices"
        )))
    }
}

/// Generator specification, one variant per supported family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generator {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    RandomRegular { n: usize, d: usize },
    GluedPaths { k: usize },
}

pub fn generate(gen: &Generator, seed: u64) -> Result<WeightedGraph> {
    match *gen {
        Generator::Path { n } => WeightedGraph::path(n),
        Generator::Cycle { n } => WeightedGraph::cycle(n),
        Generator::Complete { n } => WeightedGraph::complete(n),
        Generator::RandomRegular { n, d } => WeightedGraph::random_regular(n, d, seed),
        Generator::GluedPaths { k } => WeightedGraph::glued_paths(k),
    }
}

/// Parses the edge-list text format: header `n m`, then `m` lines
/// `tail head weight`. `#` starts a comment; blank lines are skipped.
pub fn parse_edge_list(text: &str) -> Result<WeightedGraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut triples = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        match header {
            None => {
                if fields.len() != 2 {
                    return Err(Error::Parse {
                        line,
                        msg: format!("expected header \"n m\", got {:?}", content),
                    });
                }
                let n = fields[0].parse::<usize>().map_err(|e| Error::Parse {
                    line,
                    msg: format!("bad vertex count: {e}"),
                })?;
                let m = fields[1].parse::<usize>().map_err(|e| Error::Parse {
                    line,
                    msg: format!("bad edge count: {e}"),
                })?;
                header = Some((n, m));
            }
            Some((_, m)) => {
                if triples.len() == m {
                    return Err(Error::Parse {
                        line,
                        msg: format!("expected {m} edges, found extra line {:?}", content),
                    });
                }
                if fields.len() != 3 {
                    return Err(Error::Parse {
                        line,
                        msg: format!("expected \"tail head weight\", got {:?}", content),
                    });
                }
                let tail = fields[0].parse::<usize>().map_err(|e| Error::Parse {
                    line,
                    msg: format!("bad tail id: {e}"),
                })?;
                let head = fields[1].parse::<usize>().map_err(|e| Error::Parse {
                    line,
                    msg: format!("bad head id: {e}"),
                })?;
                let weight = fields[2].parse::<f64>().map_err(|e| Error::Parse {
                    line,
                    msg: format!("bad weight: {e}"),
                })?;
                triples.push((tail, head, weight, line));
            }
        }
    }
    let (n, m) = header.ok_or(Error::Parse {
        line: 0,
        msg: "empty input".into(),
    })?;
    if triples.len() != m {
        return Err(Error::Parse {
            line: 0,
            msg: format!("header declared {m} edges, found {}", triples.len()),
        });
    }
    let plain: Vec<_> = triples.iter().map(|&(t, h, w, _)| (t, h, w)).collect();
    WeightedGraph::new(n, &plain).map_err(|err| match err {
        Error::SelfLoop { index, .. }
        | Error::BadWeight { index, .. }
        | Error::VertexOutOfRange { index, .. } => Error::Parse {
            line: triples[index].3,
            msg: err.to_string(),
        },
        other => other,
    })
}

/// Serializes to the canonical edge-list text form; contains exactly the
/// data `parse_edge_list` reads back, weights in shortest round-trip form.
pub fn serialize_edge_list(graph: &WeightedGraph) -> String {
    let mut out = format!("{} {}\n", graph.n(), graph.m());
    for edge in graph.edges() {
        out.push_str(&format!("{} {} {:?}\n", edge.tail, edge.head, edge.weight));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn k2() -> WeightedGraph {
        WeightedGraph::new(2, &[(0, 1, 1.0)]).unwrap()
    }

    fn p3() -> WeightedGraph {
        WeightedGraph::new(3, &[(0, 1, 1.0), (1, 2, 1.0)]).unwrap()
    }

    fn triangle() -> WeightedGraph {
        WeightedGraph::new(3, &[(0, 1, 1.0), (0, 2, 1.0), (1, 2, 1.0)]).unwrap()
    }

    #[test]
    fn build_k2() {
        let g = k2();
        assert_eq!(g.n(), 2);
        assert_eq!(g.m(), 1);
        assert!(g.is_connected());
    }

    #[test]
    fn build_normalizes_orientation() {
        let g = WeightedGraph::new(3, &[(1, 0, 1.0), (1, 2, 1.0)]).unwrap();
        assert_eq!(g.edge(0).tail, 0);
        assert_eq!(g.edge(0).head, 1);
        assert_eq!(g.edge(1).tail, 1);
        assert_eq!(g.edge(1).head, 2);
    }

    #[test]
    fn build_rejects_self_loop() {
        let err = WeightedGraph::new(2, &[(0, 0, 1.0)]).unwrap_err();
        assert!(matches!(err, Error::SelfLoop { index: 0, .. }));
    }

    #[test]
    fn build_rejects_bad_weight_and_range() {
        assert!(matches!(
            WeightedGraph::new(2, &[(0, 1, 0.0)]).unwrap_err(),
            Error::BadWeight { .. }
        ));
        assert!(matches!(
            WeightedGraph::new(2, &[(0, 1, -2.0)]).unwrap_err(),
            Error::BadWeight { .. }
        ));
        assert!(matches!(
            WeightedGraph::new(2, &[(0, 2, 1.0)]).unwrap_err(),
            Error::VertexOutOfRange { .. }
        ));
    }

    #[test]
    fn gradient_examples() {
        let g = k2();
        let bx = g.gradient(&VertexVector::from_vec(vec![1.0, 0.0])).unwrap();
        assert_eq!(bx.as_slice(), &[1.0]);

        let g = p3();
        let bx = g
            .gradient(&VertexVector::from_vec(vec![1.0, 0.0, -1.0]))
            .unwrap();
        assert_eq!(bx.as_slice(), &[1.0, 1.0]);

        let ones = VertexVector::repeat(3, 1.0);
        assert_eq!(g.gradient(&ones).unwrap().abs().max(), 0.0);
    }

    #[test]
    fn divergence_examples() {
        let g = k2();
        let d = g.divergence(&EdgeVector::from_vec(vec![1.0])).unwrap();
        assert_eq!(d.as_slice(), &[1.0, -1.0]);

        let g = p3();
        let d = g.divergence(&EdgeVector::from_vec(vec![1.0, 1.0])).unwrap();
        assert_eq!(d.as_slice(), &[1.0, 0.0, -1.0]);

        // Triangle edges (0,1), (0,2), (1,2): f = (1, -1, 1) is the cyclic
        // circulation 0 -> 1 -> 2 -> 0, which divergence annihilates.
        let g = triangle();
        let d = g
            .divergence(&EdgeVector::from_vec(vec![1.0, -1.0, 1.0]))
            .unwrap();
        assert_eq!(d.abs().max(), 0.0);
    }

    #[test]
    fn laplacian_matrices() {
        let g = k2();
        let l = g.laplacian_dense();
        assert_eq!(l, DMatrix::from_row_slice(2, 2, &[1.0, -1.0, -1.0, 1.0]));

        let g = p3();
        let l = g.laplacian_dense();
        assert_eq!(
            l,
            DMatrix::from_row_slice(3, 3, &[1.0, -1.0, 0.0, -1.0, 2.0, -1.0, 0.0, -1.0, 1.0])
        );

        let ones = VertexVector::repeat(3, 1.0);
        assert_eq!(g.laplacian_apply(&ones).unwrap().abs().max(), 0.0);
    }

    #[test]
    fn laplacian_is_divergence_of_weighted_gradient() {
        let g = WeightedGraph::new(4, &[(0, 1, 2.0), (1, 2, 0.5), (2, 3, 1.5), (0, 3, 3.0)])
            .unwrap();
        let x = VertexVector::from_vec(vec![0.3, -1.2, 2.0, 0.7]);
        let mut wbx = g.gradient(&x).unwrap();
        for (e, edge) in g.edges().iter().enumerate() {
            wbx[e] *= edge.weight;
        }
        let via_chain = g.divergence(&wbx).unwrap();
        let direct = g.laplacian_apply(&x).unwrap();
        assert_abs_diff_eq!((via_chain - direct).abs().max(), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(WeightedGraph::cycle(4).unwrap().vertex_expansion_exact().unwrap(), 1.0);
        assert_eq!(
            WeightedGraph::complete(4).unwrap().vertex_expansion_exact().unwrap(),
            2.0
        );
        assert_eq!(k2().vertex_expansion_exact().unwrap(), 1.0);
    }

    #[test]
    fn expansion_rejects_weighted() {
        let g = WeightedGraph::new(2, &[(0, 1, 2.0)]).unwrap();
        assert!(matches!(
            g.vertex_expansion_exact().unwrap_err(),
            Error::NotUnweighted
        ));
    }

    // Independent oracle written against the raw definition: adjacency
    // matrix, all 2^n - 2 nonempty proper subsets.
    fn alpha_brute(g: &WeightedGraph) -> f64 {
        let n = g.n();
        let mut a = vec![vec![0usize; n]; n];
        for e in g.edges() {
            a[e.tail][e.head] += 1;
            a[e.head][e.tail] += 1;
        }
        let mut best = f64::INFINITY;
        for mask in 1..((1u64 << n) - 1) {
            let mut crossing = 0usize;
            for u in 0..n {
                for v in (u + 1)..n {
                    if ((mask >> u) & 1) != ((mask >> v) & 1) {
                        crossing += a[u][v];
                    }
                }
            }
            let size = mask.count_ones() as usize;
            best = best.min(crossing as f64 / size.min(n - size) as f64);
        }
        best
    }

    #[test]
    fn expansion_matches_brute_force() {
        for seed in 0..6u64 {
            let g = WeightedGraph::random_regular(10, 3, seed).unwrap();
            assert_eq!(g.vertex_expansion_exact().unwrap(), alpha_brute(&g));
        }
        let g = WeightedGraph::glued_paths(3).unwrap();
        assert_eq!(g.vertex_expansion_exact().unwrap(), alpha_brute(&g));
    }

    #[test]
    fn spectral_examples() {
        assert_abs_diff_eq!(p3().fiedler_eigenvalue().unwrap(), 1.0, epsilon = 1e-10);
        assert_abs_diff_eq!(
            WeightedGraph::cycle(4).unwrap().fiedler_eigenvalue().unwrap(),
            2.0,
            epsilon = 1e-10
        );
        let k4 = WeightedGraph::complete(4).unwrap();
        assert_abs_diff_eq!(k4.fiedler_eigenvalue().unwrap(), 4.0, epsilon = 1e-10);
        assert_eq!(k4.diameter().unwrap(), 1);
    }

    #[test]
    fn spectrum_bounds() {
        for seed in 0..5u64 {
            let g = WeightedGraph::random_regular(12, 3, seed).unwrap();
            let summary = g.spectral_summary(false).unwrap();
            assert!(summary.fiedler > 0.0);
            assert!(summary.lambda_max <= 2.0 * g.max_weighted_degree() + 1e-10);
            let min = g.sorted_eigenvalues().unwrap()[0];
            assert!(min >= -1e-10);
        }
    }

    #[test]
    fn disconnected_is_detected() {
        let g = WeightedGraph::new(4, &[(0, 1, 1.0), (2, 3, 1.0)]).unwrap();
        assert!(!g.is_connected());
        assert!(matches!(g.diameter().unwrap_err(), Error::Disconnected));
        assert!(matches!(
            g.fiedler_eigenvalue().unwrap_err(),
            Error::Disconnected
        ));
    }

    #[test]
    fn generator_examples() {
        let g = WeightedGraph::glued_paths(3).unwrap();
        assert_eq!((g.n(), g.m()), (8, 10));
        assert!(g.is_connected());

        let p = WeightedGraph::path(3).unwrap();
        assert_eq!((p.n(), p.m()), (3, 2));

        let r = WeightedGraph::random_regular(10, 3, 7).unwrap();
        assert!(r.is_connected());
        assert!((0..10).all(|v| r.degree(v) == 3));
    }

    #[test]
    fn random_regular_rejects_odd_parity() {
        assert!(matches!(
            WeightedGraph::random_regular(5, 3, 0).unwrap_err(),
            Error::InvalidParameter(_)
        ));
    }

    #[test]
    fn random_regular_is_seed_deterministic() {
        let a = WeightedGraph::random_regular(12, 3, 42).unwrap();
        let b = WeightedGraph::random_regular(12, 3, 42).unwrap();
        assert_eq!(serialize_edge_list(&a), serialize_edge_list(&b));
    }

    #[test]
    fn parse_examples() {
        let g = parse_edge_list("2 1\n0 1 1.0\n").unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));

        let err = parse_edge_list("2 1\n0 0 1.0\n").unwrap_err();
        match err {
            Error::Parse { line, msg } => {
                assert_eq!(line, 2);
                assert!(msg.contains("self-loop"), "{msg}");
            }
            other => panic!("unexpected error {other:?}"),
        }

        let commented = "# a graph\n3 2 # header\n0 1 1.0\n\n1 2 0.5\n";
        let g = parse_edge_list(commented).unwrap();
        assert_eq!(g.edge(1).weight, 0.5);
    }

    #[test]
    fn serialize_round_trips_canonical_text() {
        let text = "2 1\n0 1 1.0\n";
        assert_eq!(serialize_edge_list(&parse_edge_list(text).unwrap()), text);
    }

    proptest::proptest! {
        #[test]
        fn parse_serialize_round_trip(
            n in 2usize..9,
            raw_edges in proptest::collection::vec((0usize..8, 0usize..8, 0.1f64..10.0), 1..16),
        ) {
            let triples: Vec<_> = raw_edges
                .into_iter()
                .filter(|&(a, b, _)| a != b && a < n && b < n)
                .collect();
            proptest::prop_assume!(!triples.is_empty());
            let g = WeightedGraph::new(n, &triples).unwrap();
            let text = serialize_edge_list(&g);
            let back = parse_edge_list(&text).unwrap();
            proptest::prop_assert_eq!(g.n(), back.n());
            proptest::prop_assert_eq!(g.m(), back.m());
            for (a, b) in g.edges().iter().zip(back.edges().iter()) {
                proptest::prop_assert_eq!(a, b);
            }
            proptest::prop_assert_eq!(text.clone(), serialize_edge_list(&back));
        }
    }
}
