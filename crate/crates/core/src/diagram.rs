//! Stationary Bratteli diagrams: construction from substitutions,
//! validation, primitivity, telescoping, and path-space enumeration.
//!
//! A diagram is a finite vertex set, a finite multiset of stationary edges
//! (each level repeats them), and one root edge per vertex (the root level
//! is a bijective copy of the vertex set). The adjacency matrix counts
//! edges by (source, range); everything combinatorial about the path space
//! is derived from it.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::path::{FinitePath, PathSpec, PositionEdge, Tail};

pub type VertexId = u32;
pub type EdgeId = u32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub id: VertexId,
    pub label: String,
}

/// A stationary edge. `label` is `{source label}{k}` with `k` the position
/// of the edge among those sharing its source, fixed at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub id: EdgeId,
    pub source: VertexId,
    pub range: VertexId,
    pub label: String,
}

/// A root edge; its id equals the vertex it reaches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootEdge {
    pub id: u32,
    pub range: VertexId,
}

/// A substitution rule set over a finite alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Substitution {
    alphabet: Vec<String>,
    rules: Vec<Vec<u32>>,
}

impl Substitution {
    /// Build from explicit letter lists. Every rule word must be nonempty
    /// and only use alphabet letters.
    pub fn new(alphabet: Vec<String>, rules: Vec<Vec<String>>) -> Result<Self> {
        if alphabet.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        if !labels_unique(&alphabet) {
            return Err(Error::BadParameter { what: "alphabet letters must be unique" });
        }
        if rules.len() != alphabet.len() {
            return Err(Error::BadParameter { what: "one rule per alphabet letter required" });
        }
        let index_of = |letter: &str| alphabet.iter().position(|l| l == letter);
        let mut indexed = Vec::with_capacity(rules.len());
        for (i, word) in rules.iter().enumerate() {
            if word.is_empty() {
                return Err(Error::EmptyRuleWord { letter: alphabet[i].clone() });
            }
            let mut row = Vec::with_capacity(word.len());
            for letter in word {
                match index_of(letter) {
                    Some(j) => row.push(j as u32),
                    None => {
                        return Err(Error::UnknownLetter {
                            rule: alphabet[i].clone(),
                            letter: letter.clone(),
                        })
                    }
                }
            }
            indexed.push(row);
        }
        Ok(Substitution { alphabet, rules: indexed })
    }

    /// Convenience: single-character letters, rules given as words.
    /// `parse(&[("a", "ab"), ("b", "a")])` is the Fibonacci substitution.
    pub fn parse(pairs: &[(&str, &str)]) -> Result<Self> {
        let alphabet: Vec<String> = pairs.iter().map(|(l, _)| l.to_string()).collect();
        let rules = pairs
            .iter()
            .map(|(_, word)| word.chars().map(|c| c.to_string()).collect())
            .collect();
        Substitution::new(alphabet, rules)
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn rules(&self) -> &[Vec<u32>] {
        &self.rules
    }
}

/// Verdicts about the path space being a Cantor set.
///
/// `hypothesis_ok` checks the connectivity hypothesis (every vertex reaches
/// every vertex at some depth). That alone admits one-point path spaces
/// (a single loop satisfies it), so `perfect` additionally requires the
/// adjacency spectral radius to exceed 1, which forces cofinal branching.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CantorReport {
    pub hypothesis_ok: bool,
    pub perfect: bool,
}

#[derive(Debug, Clone)]
pub struct StationaryDiagram {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    root_edges: Vec<RootEdge>,
    adjacency: Vec<u64>,
    edges_by_source: Vec<Vec<EdgeId>>,
}

impl StationaryDiagram {
    /// Build a diagram from vertex labels and (source, range) edge pairs.
    pub fn new(vertex_labels: Vec<String>, edge_pairs: Vec<(u32, u32)>) -> Result<Self> {
        if vertex_labels.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        if !labels_unique(&vertex_labels) {
            return Err(Error::BadParameter { what: "vertex labels must be unique" });
        }
        let q = vertex_labels.len();
        for &(s, r) in &edge_pairs {
            if s as usize >= q {
                return Err(Error::InvalidVertex { id: s, count: q });
            }
            if r as usize >= q {
                return Err(Error::InvalidVertex { id: r, count: q });
            }
        }
        let vertices: Vec<Vertex> = vertex_labels
            .into_iter()
            .enumerate()
            .map(|(id, label)| Vertex { id: id as u32, label })
            .collect();
        let mut per_source_seen = vec![0usize; q];
        let mut edges = Vec::with_capacity(edge_pairs.len());
        let mut adjacency = vec![0u64; q * q];
        let mut edges_by_source = vec![Vec::new(); q];
        for (id, (s, r)) in edge_pairs.into_iter().enumerate() {
            let k = per_source_seen[s as usize];
            per_source_seen[s as usize] += 1;
            let label = format!("{}{}", vertices[s as usize].label, k);
            edges.push(Edge { id: id as u32, source: s, range: r, label });
            adjacency[s as usize * q + r as usize] += 1;
            edges_by_source[s as usize].push(id as u32);
        }
        let root_edges = (0..q as u32).map(|v| RootEdge { id: v, range: v }).collect();
        Ok(StationaryDiagram { vertices, edges, root_edges, adjacency, edges_by_source })
    }

    /// Diagram of a substitution: one vertex per letter, one edge per
    /// occurrence, so the adjacency matrix is the Abelianization matrix
    /// (entry (i, j) counts occurrences of letter j in the rule for i).
    pub fn from_substitution(sub: &Substitution) -> Result<Self> {
        let labels: Vec<String> = sub.alphabet().to_vec();
        let mut pairs = Vec::new();
        for (i, word) in sub.rules().iter().enumerate() {
            for &j in word {
                pairs.push((i as u32, j));
            }
        }
        StationaryDiagram::new(labels, pairs)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn root_edges(&self) -> &[RootEdge] {
        &self.root_edges
    }

    pub fn edge(&self, id: EdgeId) -> Result<&Edge> {
        self.edges
            .get(id as usize)
            .ok_or(Error::InvalidEdge { id, count: self.edges.len() })
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adjacency
    }

    pub fn adj(&self, v: VertexId, w: VertexId) -> u64 {
        self.adjacency[v as usize * self.vertex_count() + w as usize]
    }

    /// Edges whose source is `v`, in id order.
    pub fn edges_from(&self, v: VertexId) -> &[EdgeId] {
        &self.edges_by_source[v as usize]
    }

    /// Least `n` (within the Wielandt bound `(q-1)^2 + 1`) such that every
    /// entry of `A^n` is positive, or `None` if the matrix is not primitive.
    pub fn primitivity_witness(&self) -> Option<u32> {
        let q = self.vertex_count();
        let base: Vec<bool> = self.adjacency.iter().map(|&a| a > 0).collect();
        let bound = ((q - 1) * (q - 1) + 1) as u32;
        let mut power = base.clone();
        for n in 1..=bound {
            if power.iter().all(|&b| b) {
                return Some(n);
            }
            if n < bound {
                power = bool_mat_mul(&power, &base, q);
            }
        }
        None
    }

    pub fn is_primitive(&self) -> bool {
        self.primitivity_witness().is_some()
    }

    /// Check the Cantor-set conditions up to `max_depth` (see
    /// [`CantorReport`]).
    pub fn check_cantor(&self, max_depth: usize) -> CantorReport {
        let q = self.vertex_count();
        let base: Vec<bool> = self.adjacency.iter().map(|&a| a > 0).collect();
        let mut power = base.clone();
        let mut ok = vec![false; q];
        for _ in 1..=max_depth {
            for v in 0..q {
                if !ok[v] {
                    ok[v] = (0..q).all(|w| power[v * q + w]);
                }
            }
            if ok.iter().all(|&b| b) {
                break;
            }
            power = bool_mat_mul(&power, &base, q);
        }
        CantorReport { hypothesis_ok: ok.iter().all(|&b| b), perfect: self.spectral_radius_exceeds_one() }
    }

    /// Exact integer test for spectral radius > 1: some vertex carries two
    /// distinct closed walks of equal length, i.e. a diagonal entry of A^n
    /// reaches 2 for some n <= q^2. Entries are capped at 2, which keeps
    /// the test exact while avoiding overflow.
    fn spectral_radius_exceeds_one(&self) -> bool {
        let q = self.vertex_count();
        let base: Vec<u8> = self.adjacency.iter().map(|&a| a.min(2) as u8).collect();
        let mut power = base.clone();
        for _ in 0..q * q {
            if (0..q).any(|v| power[v * q + v] >= 2) {
                return true;
            }
            power = capped_mat_mul(&power, &base, q);
        }
        false
    }

    /// The k-th telescoping: same vertices, one edge per composable
    /// length-k edge sequence, adjacency `A^k`.
    pub fn telescope(&self, k: u32) -> Result<StationaryDiagram> {
        if k < 1 {
            return Err(Error::BadTelescope { k });
        }
        let total = self.adjacency_power_sum(k)?;
        const TELESCOPE_EDGE_CAP: usize = 1_000_000;
        if total > TELESCOPE_EDGE_CAP as u128 {
            return Err(Error::EnumerationCap { needed: total, cap: TELESCOPE_EDGE_CAP });
        }
        let mut pairs = Vec::with_capacity(total as usize);
        // depth-first over composable sequences, lexicographic in edge ids
        let mut stack: Vec<EdgeId> = Vec::with_capacity(k as usize);
        for v in 0..self.vertex_count() as u32 {
            self.collect_sequences(v, k, &mut stack, &mut pairs);
        }
        let labels = self.vertices.iter().map(|v| v.label.clone()).collect();
        StationaryDiagram::new(labels, pairs)
    }

    fn collect_sequences(&self, at: VertexId, left: u32, stack: &mut Vec<EdgeId>, out: &mut Vec<(u32, u32)>) {
        if left == 0 {
            let source = self.edges[stack[0] as usize].source;
            out.push((source, at));
            return;
        }
        for &e in self.edges_from(at) {
            stack.push(e);
            self.collect_sequences(self.edges[e as usize].range, left - 1, stack, out);
            stack.pop();
        }
    }

    /// Sum of all entries of `A^k` (the telescoped edge count), without
    /// materializing the telescoped diagram.
    pub fn adjacency_power_sum(&self, k: u32) -> Result<u128> {
        if k < 1 {
            return Err(Error::BadTelescope { k });
        }
        let q = self.vertex_count();
        let base: Vec<u128> = self.adjacency.iter().map(|&a| a as u128).collect();
        let mut power = base.clone();
        for _ in 1..k {
            power = checked_mat_mul(&power, &base, q)?;
        }
        let mut sum: u128 = 0;
        for &e in &power {
            sum = sum.checked_add(e).ok_or(Error::AdjacencyOverflow)?;
        }
        Ok(sum)
    }

    /// Number of depth-`n` paths ending at each vertex. Depth counts all
    /// edges, so depth 1 is the root level with one path per vertex.
    pub fn path_counts_by_range(&self, depth: usize) -> Result<Vec<u128>> {
        let q = self.vertex_count();
        if depth == 0 {
            return Err(Error::BadParameter { what: "depth 0 has no range vertex" });
        }
        let mut counts = vec![1u128; q];
        for _ in 1..depth {
            let mut next = vec![0u128; q];
            for v in 0..q {
                if counts[v] == 0 {
                    continue;
                }
                for w in 0..q {
                    let a = self.adjacency[v * q + w] as u128;
                    if a > 0 {
                        let add = counts[v].checked_mul(a).ok_or(Error::AdjacencyOverflow)?;
                        next[w] = next[w].checked_add(add).ok_or(Error::AdjacencyOverflow)?;
                    }
                }
            }
            counts = next;
        }
        Ok(counts)
    }

    /// `#Π_n`, the number of paths of depth `n`.
    pub fn path_count(&self, depth: usize) -> Result<u128> {
        if depth == 0 {
            return Ok(1);
        }
        Ok(self.path_counts_by_range(depth)?.iter().sum())
    }

    /// All paths of depth `n`, in lexicographic order. Errors (rather than
    /// truncating) if the level holds more than `cap` paths.
    pub fn enumerate_paths(&self, depth: usize, cap: usize) -> Result<Vec<FinitePath>> {
        let total = self.path_count(depth)?;
        if total > cap as u128 {
            return Err(Error::EnumerationCap { needed: total, cap });
        }
        if depth == 0 {
            return Ok(vec![FinitePath::empty()]);
        }
        let mut out = Vec::with_capacity(total as usize);
        for v in 0..self.vertex_count() as u32 {
            let mut path = FinitePath::from_root(v);
            self.enumerate_from(&mut path, depth - 1, &mut out);
        }
        Ok(out)
    }

    fn enumerate_from(&self, path: &mut FinitePath, left: usize, out: &mut Vec<FinitePath>) {
        if left == 0 {
            out.push(path.clone());
            return;
        }
        let at = self.range_of(path).expect("nonempty path");
        for &e in self.edges_from(at) {
            let mut child = path.child(e);
            self.enumerate_from(&mut child, left - 1, out);
        }
    }

    /// The edges extending `path` one level further. The empty path is
    /// extended by root edges, exposed via [`root_edges`](Self::root_edges)
    /// and counted by [`num_extensions`](Self::num_extensions).
    pub fn extensions(&self, path: &FinitePath) -> Result<&[EdgeId]> {
        if path.is_empty() {
            return Err(Error::EmptyPath);
        }
        self.validate_path(path)?;
        Ok(self.edges_from(self.range_of(path).expect("nonempty path")))
    }

    /// `n_γ`: the number of one-level extensions of `path`.
    pub fn num_extensions(&self, path: &FinitePath) -> Result<usize> {
        if path.is_empty() {
            return Ok(self.vertex_count());
        }
        Ok(self.extensions(path)?.len())
    }

    /// Range vertex of a path; `None` for the empty path (the root).
    pub fn range_of(&self, path: &FinitePath) -> Option<VertexId> {
        match path.body().last() {
            Some(&e) => Some(self.edges[e as usize].range),
            None => path.root_edge(),
        }
    }

    /// Check ids and composability of a path against this diagram.
    pub fn validate_path(&self, path: &FinitePath) -> Result<()> {
        let q = self.vertex_count();
        let mut at = match path.root_edge() {
            None => {
                return if path.body().is_empty() {
                    Ok(())
                } else {
                    Err(Error::NotComposable { position: 1 })
                }
            }
            Some(v) => {
                if v as usize >= q {
                    return Err(Error::InvalidVertex { id: v, count: q });
                }
                v
            }
        };
        for (i, &e) in path.body().iter().enumerate() {
            let edge = self.edge(e)?;
            if edge.source != at {
                return Err(Error::NotComposable { position: i + 1 });
            }
            at = edge.range;
        }
        Ok(())
    }

    /// Validate a path spec: prefix composability, tail composability and
    /// cycle closure.
    pub fn validate_spec(&self, spec: &PathSpec) -> Result<()> {
        self.validate_path(spec.prefix())?;
        if let Tail::Periodic(cycle) = spec.tail() {
            if cycle.is_empty() {
                return Err(Error::BadParameter { what: "periodic tail must be nonempty" });
            }
            let mut at = match self.range_of(spec.prefix()) {
                Some(v) => v,
                None => return Err(Error::BadParameter { what: "periodic tail needs a root edge" }),
            };
            let start = at;
            for (i, &e) in cycle.iter().enumerate() {
                let edge = self.edge(e)?;
                if edge.source != at {
                    return Err(Error::NotComposable { position: spec.prefix().depth() + i });
                }
                at = edge.range;
            }
            if self.edge(*cycle.first().expect("nonempty")).map(|e| e.source)? != at {
                return Err(Error::NotComposable { position: spec.prefix().depth() + cycle.len() });
            }
            debug_assert_eq!(start, self.edge(cycle[0]).expect("checked").source);
        }
        Ok(())
    }

    /// Build a validated periodic path spec.
    pub fn periodic_spec(&self, prefix: FinitePath, cycle: Vec<EdgeId>) -> Result<PathSpec> {
        let spec = PathSpec::new_unchecked(prefix, Tail::Periodic(cycle));
        self.validate_spec(&spec)?;
        Ok(spec)
    }

    /// Build a validated truncated path spec.
    pub fn truncated_spec(&self, prefix: FinitePath) -> Result<PathSpec> {
        let spec = PathSpec::new_unchecked(prefix, Tail::Truncated);
        self.validate_spec(&spec)?;
        Ok(spec)
    }

    /// Sample a depth-`depth` path, choosing uniformly among extensions at
    /// each step. The generator is ChaCha8 seeded with `seed`; each step
    /// draws one `gen_range` over the extension count, root level first.
    pub fn sample_path(&self, depth: usize, seed: u64) -> Result<FinitePath> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        self.sample_path_rng(&mut rng, depth, None)
    }

    /// Sample with steps weighted by the invariant measure of the child
    /// cylinders (proportional to `nu[range]`), instead of uniformly.
    pub fn sample_path_weighted(&self, depth: usize, seed: u64, nu: &[f64]) -> Result<FinitePath> {
        if nu.len() != self.vertex_count() {
            return Err(Error::BadParameter { what: "nu must have one entry per vertex" });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        self.sample_path_rng(&mut rng, depth, Some(nu))
    }

    pub(crate) fn sample_path_rng<R: Rng>(
        &self,
        rng: &mut R,
        depth: usize,
        nu: Option<&[f64]>,
    ) -> Result<FinitePath> {
        if depth == 0 {
            return Ok(FinitePath::empty());
        }
        let root = match nu {
            None => rng.gen_range(0..self.vertex_count() as u32),
            Some(w) => weighted_pick(rng, w.iter().copied()) as u32,
        };
        let mut path = FinitePath::from_root(root);
        for _ in 1..depth {
            let at = self.range_of(&path).expect("nonempty path");
            let exts = self.edges_from(at);
            if exts.is_empty() {
                return Err(Error::DeadEnd { vertex: at });
            }
            let e = match nu {
                None => exts[rng.gen_range(0..exts.len())],
                Some(w) => {
                    let idx = weighted_pick(
                        rng,
                        exts.iter().map(|&e| w[self.edges[e as usize].range as usize]),
                    );
                    exts[idx]
                }
            };
            path = path.child(e);
        }
        Ok(path)
    }

    /// Lexicographically least shortest closed walk through `v`, used to
    /// close sampled prefixes into periodic specs.
    pub fn canonical_cycle(&self, v: VertexId) -> Result<Vec<EdgeId>> {
        let q = self.vertex_count();
        // shortest-path distances *to* v over reversed edges
        let mut dist = vec![usize::MAX; q];
        dist[v as usize] = 0;
        let mut queue = VecDeque::from([v]);
        while let Some(w) = queue.pop_front() {
            for e in &self.edges {
                if e.range == w && dist[e.source as usize] == usize::MAX {
                    dist[e.source as usize] = dist[w as usize] + 1;
                    queue.push_back(e.source);
                }
            }
        }
        let len = self
            .edges_from(v)
            .iter()
            .filter_map(|&e| dist[self.edges[e as usize].range as usize].checked_add(1))
            .min()
            .ok_or(Error::NoCycle { vertex: v })?;
        if len == usize::MAX {
            return Err(Error::NoCycle { vertex: v });
        }
        let mut cycle = Vec::with_capacity(len);
        let mut at = v;
        for remaining in (1..=len).rev() {
            let e = self
                .edges_from(at)
                .iter()
                .copied()
                .find(|&e| dist[self.edges[e as usize].range as usize] == remaining - 1)
                .ok_or(Error::NoCycle { vertex: v })?;
            cycle.push(e);
            at = self.edges[e as usize].range;
        }
        Ok(cycle)
    }

    /// Extend a sampled prefix into a periodic spec via the canonical cycle
    /// at its range vertex.
    pub fn close_into_spec(&self, prefix: FinitePath) -> Result<PathSpec> {
        if prefix.is_empty() {
            return Err(Error::EmptyPath);
        }
        let v = self.range_of(&prefix).expect("nonempty path");
        let cycle = self.canonical_cycle(v)?;
        self.periodic_spec(prefix, cycle)
    }

    /// Human-readable word for a path: vertex label of the root edge, then
    /// edge labels, joined with dots. The empty path renders as "-".
    pub fn path_word(&self, path: &FinitePath) -> String {
        match path.root_edge() {
            None => "-".to_string(),
            Some(v) => {
                let mut word = self.vertices[v as usize].label.clone();
                for &e in path.body() {
                    word.push('.');
                    word.push_str(&self.edges[e as usize].label);
                }
                word
            }
        }
    }

    /// Word for a path spec; periodic tails render as `+(cycle)*`.
    pub fn spec_word(&self, spec: &PathSpec) -> String {
        let mut word = self.path_word(spec.prefix());
        if let Tail::Periodic(cycle) = spec.tail() {
            word.push_str("+(");
            for (i, &e) in cycle.iter().enumerate() {
                if i > 0 {
                    word.push('.');
                }
                word.push_str(&self.edges[e as usize].label);
            }
            word.push_str(")*");
        }
        word
    }

    /// Resolve an edge at a spec position to its id spaces.
    pub fn position_edge(&self, spec: &PathSpec, pos: usize) -> Option<PositionEdge> {
        spec.edge_at(pos)
    }
}

fn labels_unique(labels: &[String]) -> bool {
    let mut sorted: Vec<&String> = labels.iter().collect();
    sorted.sort();
    sorted.windows(2).all(|w| w[0] != w[1])
}

fn bool_mat_mul(a: &[bool], b: &[bool], q: usize) -> Vec<bool> {
    let mut out = vec![false; q * q];
    for i in 0..q {
        for k in 0..q {
            if a[i * q + k] {
                for j in 0..q {
                    if b[k * q + j] {
                        out[i * q + j] = true;
                    }
                }
            }
        }
    }
    out
}

fn capped_mat_mul(a: &[u8], b: &[u8], q: usize) -> Vec<u8> {
    let mut out = vec![0u8; q * q];
    for i in 0..q {
        for k in 0..q {
            let av = a[i * q + k];
            if av == 0 {
                continue;
            }
            for j in 0..q {
                let prod = (av as u16 * b[k * q + j] as u16).min(2);
                out[i * q + j] = ((out[i * q + j] as u16 + prod).min(2)) as u8;
            }
        }
    }
    out
}

fn checked_mat_mul(a: &[u128], b: &[u128], q: usize) -> Result<Vec<u128>> {
    let mut out = vec![0u128; q * q];
    for i in 0..q {
        for k in 0..q {
            let av = a[i * q + k];
            if av == 0 {
                continue;
            }
            for j in 0..q {
                let prod = av.checked_mul(b[k * q + j]).ok_or(Error::AdjacencyOverflow)?;
                out[i * q + j] =
                    out[i * q + j].checked_add(prod).ok_or(Error::AdjacencyOverflow)?;
            }
        }
    }
    Ok(out)
}

/// Index drawn with probability proportional to the (positive) weights.
fn weighted_pick<R: Rng>(rng: &mut R, weights: impl Iterator<Item = f64> + Clone) -> usize {
    let total: f64 = weights.clone().sum();
    let mut x = rng.gen::<f64>() * total;
    let mut last = 0;
    for (i, w) in weights.enumerate() {
        last = i;
        x -= w;
        if x < 0.0 {
            return i;
        }
    }
    last
}

/// The standard two test diagrams used across the suite.
pub mod fixtures {
    use super::{StationaryDiagram, Substitution};

    /// Fibonacci substitution a -> ab, b -> a.
    pub fn fibonacci() -> StationaryDiagram {
        let sub = Substitution::parse(&[("a", "ab"), ("b", "a")]).expect("valid substitution");
        StationaryDiagram::from_substitution(&sub).expect("valid diagram")
    }

    /// One vertex with two loops (binary branching at every level).
    pub fn one_vertex_two_loops() -> StationaryDiagram {
        StationaryDiagram::new(alloc::vec!["a".into()], alloc::vec![(0, 0), (0, 0)])
            .expect("valid diagram")
    }

    /// Thue-Morse substitution a -> ab, b -> ba.
    pub fn thue_morse() -> StationaryDiagram {
        let sub = Substitution::parse(&[("a", "ab"), ("b", "ba")]).expect("valid substitution");
        StationaryDiagram::from_substitution(&sub).expect("valid diagram")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fibonacci_adjacency() {
        let d = fixtures::fibonacci();
        assert_eq!(d.adjacency(), &[1, 1, 1, 0]);
        assert_eq!(d.edge_count(), 3);
        assert_eq!(d.root_edges().len(), 2);
    }

    #[test]
    fn single_letter_substitution() {
        let sub = Substitution::parse(&[("a", "a")]).unwrap();
        let d = StationaryDiagram::from_substitution(&sub).unwrap();
        assert_eq!(d.adjacency(), &[1]);
    }

    #[test]
    fn thue_morse_adjacency() {
        let d = fixtures::thue_morse();
        assert_eq!(d.adjacency(), &[1, 1, 1, 1]);
    }

    #[test]
    fn substitution_rejects_unknown_letter() {
        let err = Substitution::parse(&[("a", "ac"), ("b", "a")]).unwrap_err();
        assert!(matches!(err, Error::UnknownLetter { .. }));
    }

    #[test]
    fn labels_must_be_unique() {
        assert!(Substitution::parse(&[("a", "aa"), ("a", "a")]).is_err());
        assert!(StationaryDiagram::new(vec!["a".into(), "a".into()], vec![(0, 1)]).is_err());
    }

    #[test]
    fn primitivity_witnesses() {
        assert_eq!(fixtures::fibonacci().primitivity_witness(), Some(2));
        assert_eq!(fixtures::one_vertex_two_loops().primitivity_witness(), Some(1));
        let identity =
            StationaryDiagram::new(vec!["a".into(), "b".into()], vec![(0, 0), (1, 1)]).unwrap();
        assert_eq!(identity.primitivity_witness(), None);
    }

    #[test]
    fn cantor_verdicts() {
        let fib = fixtures::fibonacci();
        assert_eq!(fib.check_cantor(4), CantorReport { hypothesis_ok: true, perfect: true });

        let single_loop = StationaryDiagram::new(vec!["a".into()], vec![(0, 0)]).unwrap();
        assert_eq!(
            single_loop.check_cantor(4),
            CantorReport { hypothesis_ok: true, perfect: false }
        );

        let identity =
            StationaryDiagram::new(vec!["a".into(), "b".into()], vec![(0, 0), (1, 1)]).unwrap();
        assert_eq!(
            identity.check_cantor(6),
            CantorReport { hypothesis_ok: false, perfect: false }
        );
    }

    #[test]
    fn telescope_fibonacci_squares_adjacency() {
        let d = fixtures::fibonacci().telescope(2).unwrap();
        assert_eq!(d.adjacency(), &[2, 1, 1, 1]);
        assert_eq!(d.edge_count(), 5);
    }

    #[test]
    fn telescope_identity_and_cube() {
        let d = fixtures::fibonacci();
        let t1 = d.telescope(1).unwrap();
        assert_eq!(t1.adjacency(), d.adjacency());

        let loops = fixtures::one_vertex_two_loops();
        assert_eq!(loops.telescope(3).unwrap().edge_count(), 8);
    }

    #[test]
    fn telescope_rejects_zero() {
        assert!(matches!(fixtures::fibonacci().telescope(0), Err(Error::BadTelescope { k: 0 })));
    }

    #[test]
    fn path_counts() {
        let loops = fixtures::one_vertex_two_loops();
        assert_eq!(loops.path_count(0).unwrap(), 1);
        assert_eq!(loops.path_count(1).unwrap(), 1);
        assert_eq!(loops.path_count(2).unwrap(), 2);
        assert_eq!(loops.path_count(7).unwrap(), 64);

        let fib = fixtures::fibonacci();
        assert_eq!(fib.path_count(1).unwrap(), 2);
        assert_eq!(fib.path_count(2).unwrap(), 3);
        assert_eq!(fib.path_count(3).unwrap(), 5);
    }

    #[test]
    fn enumerate_respects_cap() {
        let loops = fixtures::one_vertex_two_loops();
        assert_eq!(loops.enumerate_paths(0, 10).unwrap(), vec![FinitePath::empty()]);
        assert_eq!(loops.enumerate_paths(5, 100).unwrap().len(), 16);
        assert!(matches!(
            loops.enumerate_paths(12, 100),
            Err(Error::EnumerationCap { needed: 2048, cap: 100 })
        ));
    }

    #[test]
    fn extensions_by_range_vertex() {
        let fib = fixtures::fibonacci();
        let at_a = FinitePath::from_root(0);
        let at_b = FinitePath::from_root(1);
        assert_eq!(fib.extensions(&at_a).unwrap().len(), 2);
        assert_eq!(fib.extensions(&at_b).unwrap().len(), 1);
        assert_eq!(fib.num_extensions(&FinitePath::empty()).unwrap(), 2);
        assert!(matches!(fib.extensions(&FinitePath::empty()), Err(Error::EmptyPath)));
    }

    #[test]
    fn invalid_paths_rejected() {
        let fib = fixtures::fibonacci();
        // edge 2 is b->a; it cannot follow the root edge to a
        let bad = FinitePath::new(0, vec![2]);
        assert!(matches!(fib.validate_path(&bad), Err(Error::NotComposable { position: 1 })));
    }

    #[test]
    fn sampling_is_deterministic() {
        let loops = fixtures::one_vertex_two_loops();
        let a = loops.sample_path(20, 7).unwrap();
        let b = loops.sample_path(20, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.depth(), 20);
        assert_eq!(loops.sample_path(0, 7).unwrap(), FinitePath::empty());
        assert_ne!(loops.sample_path(20, 7).unwrap(), loops.sample_path(20, 8).unwrap());
    }

    #[test]
    fn weighted_sampling_is_deterministic_and_valid() {
        let fib = fixtures::fibonacci();
        let nu = [0.618, 0.382];
        let a = fib.sample_path_weighted(15, 3, &nu).unwrap();
        let b = fib.sample_path_weighted(15, 3, &nu).unwrap();
        assert_eq!(a, b);
        fib.validate_path(&a).unwrap();
        assert!(matches!(
            fib.sample_path_weighted(5, 3, &[1.0]),
            Err(Error::BadParameter { .. })
        ));
    }

    #[test]
    fn sampling_dead_end_reported() {
        // b has no outgoing edges
        let d = StationaryDiagram::new(vec!["a".into(), "b".into()], vec![(0, 1)]).unwrap();
        let mut hit = false;
        for seed in 0..8 {
            if matches!(d.sample_path(3, seed), Err(Error::DeadEnd { vertex: 1 })) {
                hit = true;
            }
        }
        assert!(hit);
    }

    #[test]
    fn canonical_cycles() {
        let fib = fixtures::fibonacci();
        // shortest closed walk at a is the loop a->a (edge 0)
        assert_eq!(fib.canonical_cycle(0).unwrap(), vec![0]);
        // b has no loop; b->a->b uses edges 2 then 1
        assert_eq!(fib.canonical_cycle(1).unwrap(), vec![2, 1]);
    }

    #[test]
    fn words_are_readable() {
        let fib = fixtures::fibonacci();
        let p = FinitePath::new(0, vec![0, 1, 2]);
        assert_eq!(fib.path_word(&p), "a.a0.a1.b0");
        let spec = fib.periodic_spec(FinitePath::from_root(0), vec![1, 2]).unwrap();
        assert_eq!(fib.spec_word(&spec), "a+(a1.b0)*");
    }
}
