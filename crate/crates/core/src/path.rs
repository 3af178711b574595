//! Finite paths and eventually-periodic denotations of infinite paths.
//!
//! A path starts with a root edge (identified with the vertex it reaches,
//! since the root level is a bijective copy of the vertex set) followed by
//! a body of stationary edges. The depth of a path counts all its edges,
//! so the empty path has depth 0 and a bare root edge has depth 1.

use alloc::vec::Vec;

use crate::diagram::{EdgeId, VertexId};

/// A finite path: optional root edge plus composable stationary edges.
///
/// A nonempty body requires a root edge; validity against a particular
/// diagram is checked by [`StationaryDiagram::validate_path`]
/// (crate::diagram::StationaryDiagram::validate_path).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinitePath {
    root_edge: Option<VertexId>,
    body: Vec<EdgeId>,
}

/// An edge at a given position of a path: position 0 is the root level,
/// every later position is a stationary edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PositionEdge {
    Root(VertexId),
    Body(EdgeId),
}

impl FinitePath {
    /// The empty path (the single element of the level-0 path set).
    pub fn empty() -> Self {
        FinitePath { root_edge: None, body: Vec::new() }
    }

    /// The depth-1 path consisting of the root edge to `v`.
    pub fn from_root(v: VertexId) -> Self {
        FinitePath { root_edge: Some(v), body: Vec::new() }
    }

    pub fn new(root: VertexId, body: Vec<EdgeId>) -> Self {
        FinitePath { root_edge: Some(root), body }
    }

    pub fn is_empty(&self) -> bool {
        self.root_edge.is_none()
    }

    /// Number of edges, root edge included.
    pub fn depth(&self) -> usize {
        usize::from(self.root_edge.is_some()) + self.body.len()
    }

    pub fn root_edge(&self) -> Option<VertexId> {
        self.root_edge
    }

    pub fn body(&self) -> &[EdgeId] {
        &self.body
    }

    pub fn edge_at(&self, pos: usize) -> Option<PositionEdge> {
        if pos == 0 {
            self.root_edge.map(PositionEdge::Root)
        } else {
            self.body.get(pos - 1).copied().map(PositionEdge::Body)
        }
    }

    /// The restriction of the path to its first `depth` edges.
    pub fn truncated(&self, depth: usize) -> FinitePath {
        if depth == 0 {
            return FinitePath::empty();
        }
        FinitePath {
            root_edge: self.root_edge,
            body: self.body[..(depth - 1).min(self.body.len())].to_vec(),
        }
    }

    /// The path extended by one stationary edge.
    pub fn child(&self, e: EdgeId) -> FinitePath {
        debug_assert!(self.root_edge.is_some());
        let mut body = self.body.clone();
        body.push(e);
        FinitePath { root_edge: self.root_edge, body }
    }

    pub(crate) fn push(&mut self, e: PositionEdge) {
        match e {
            PositionEdge::Root(v) => {
                debug_assert!(self.root_edge.is_none());
                self.root_edge = Some(v);
            }
            PositionEdge::Body(id) => {
                debug_assert!(self.root_edge.is_some());
                self.body.push(id);
            }
        }
    }
}

/// Continuation of a path spec past its finite prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tail {
    /// The prefix repeats this composable edge cycle forever.
    Periodic(Vec<EdgeId>),
    /// Nothing is known past the prefix.
    Truncated,
}

/// Finite denotation of an element of the infinite path space: a prefix
/// plus either a periodic continuation or a truncation marker.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSpec {
    pub(crate) prefix: FinitePath,
    pub(crate) tail: Tail,
}

/// Outcome of a prefix-agreement computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Agreement {
    /// The specs first differ at this position; the value is the exact
    /// length of the longest common prefix.
    Exact(usize),
    /// Agreement holds at least this far; beyond it the comparison ran out
    /// of known edges or of depth budget.
    AtLeast(usize),
}

impl PathSpec {
    pub(crate) fn new_unchecked(prefix: FinitePath, tail: Tail) -> Self {
        PathSpec { prefix, tail }
    }

    pub fn prefix(&self) -> &FinitePath {
        &self.prefix
    }

    pub fn tail(&self) -> &Tail {
        &self.tail
    }

    pub fn is_periodic(&self) -> bool {
        matches!(self.tail, Tail::Periodic(_))
    }

    /// Edge at position `pos` if determined by this spec.
    pub fn edge_at(&self, pos: usize) -> Option<PositionEdge> {
        if pos <= self.prefix.body.len() {
            return self.prefix.edge_at(pos);
        }
        match &self.tail {
            Tail::Truncated => None,
            Tail::Periodic(cycle) => {
                let offset = (pos - 1 - self.prefix.body.len()) % cycle.len();
                Some(PositionEdge::Body(cycle[offset]))
            }
        }
    }

    /// Canonical form of a periodic spec: primitive cycle, started as early
    /// as possible. Two periodic specs denote the same infinite path if and
    /// only if their canonical forms are equal. Truncated specs are
    /// returned unchanged.
    pub fn canonicalized(&self) -> PathSpec {
        let Tail::Periodic(cycle) = &self.tail else {
            return self.clone();
        };
        let mut cycle = primitive_period(cycle);
        let mut body = self.prefix.body.clone();
        while let Some(&last) = body.last() {
            if last == *cycle.last().expect("cycle is nonempty") {
                body.pop();
                cycle.rotate_right(1);
            } else {
                break;
            }
        }
        PathSpec {
            prefix: FinitePath { root_edge: self.prefix.root_edge, body },
            tail: Tail::Periodic(cycle),
        }
    }

    /// Whether two specs provably denote the same infinite path. `None`
    /// when a truncated spec leaves the question open.
    pub fn same_path(&self, other: &PathSpec) -> Option<bool> {
        match (&self.tail, &other.tail) {
            (Tail::Periodic(_), Tail::Periodic(_)) => {
                Some(self.canonicalized() == other.canonicalized())
            }
            _ => {
                let known = self.known_positions().min(other.known_positions());
                for pos in 0..known {
                    if self.edge_at(pos) != other.edge_at(pos) {
                        return Some(false);
                    }
                }
                None
            }
        }
    }

    fn known_positions(&self) -> usize {
        match self.tail {
            Tail::Periodic(_) => usize::MAX,
            Tail::Truncated => self.prefix.depth(),
        }
    }
}

/// Smallest word whose repetition yields `cycle`.
fn primitive_period(cycle: &[EdgeId]) -> Vec<EdgeId> {
    let len = cycle.len();
    for p in 1..=len {
        if len % p == 0 && cycle.iter().enumerate().all(|(i, &e)| e == cycle[i % p]) {
            return cycle[..p].to_vec();
        }
    }
    cycle.to_vec()
}

/// Longest common prefix of two path specs, scanned up to `max_depth`
/// positions. Returns the agreement verdict together with the common
/// prefix itself (truncated at `max_depth`).
pub fn common_prefix(x: &PathSpec, y: &PathSpec, max_depth: usize) -> (Agreement, FinitePath) {
    if x.same_path(y) == Some(true) {
        let mut prefix = FinitePath::empty();
        for pos in 0..max_depth {
            match x.edge_at(pos) {
                Some(e) => prefix.push(e),
                None => return (Agreement::AtLeast(pos), prefix),
            }
        }
        return (Agreement::AtLeast(max_depth), prefix);
    }
    let mut prefix = FinitePath::empty();
    for pos in 0..max_depth {
        match (x.edge_at(pos), y.edge_at(pos)) {
            (Some(a), Some(b)) if a == b => prefix.push(a),
            (Some(_), Some(_)) => return (Agreement::Exact(pos), prefix),
            _ => return (Agreement::AtLeast(pos), prefix),
        }
    }
    (Agreement::AtLeast(max_depth), prefix)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(root: u32, body: &[u32], cycle: &[u32]) -> PathSpec {
        PathSpec::new_unchecked(
            FinitePath::new(root, body.to_vec()),
            Tail::Periodic(cycle.to_vec()),
        )
    }

    #[test]
    fn canonical_form_reduces_period_and_preperiod() {
        let a = spec(0, &[1], &[0, 1]);
        let b = spec(0, &[], &[1, 0]);
        assert_eq!(a.canonicalized(), b.canonicalized());
        assert_eq!(a.same_path(&b), Some(true));

        let doubled = spec(0, &[], &[1, 0, 1, 0]);
        assert_eq!(doubled.canonicalized(), b.canonicalized());
    }

    #[test]
    fn same_periodic_spec_reports_at_least_max_depth() {
        let x = spec(0, &[0], &[1]);
        let (m, prefix) = common_prefix(&x, &x.clone(), 50);
        assert_eq!(m, Agreement::AtLeast(50));
        assert_eq!(prefix.depth(), 50);
    }

    #[test]
    fn differ_at_root_gives_zero() {
        let x = spec(0, &[0], &[0]);
        let y = spec(1, &[0], &[0]);
        let (m, prefix) = common_prefix(&x, &y, 10);
        assert_eq!(m, Agreement::Exact(0));
        assert!(prefix.is_empty());
    }

    #[test]
    fn one_vertex_positionwise_agreement() {
        // (e, l1, l1, l1, ...) vs (e, l1, l2, ...): agree on root edge and
        // one body edge.
        let x = spec(0, &[], &[0]);
        let y = spec(0, &[0, 1], &[0]);
        let (m, prefix) = common_prefix(&x, &y, 100);
        assert_eq!(m, Agreement::Exact(2));
        assert_eq!(prefix.depth(), 2);
    }

    #[test]
    fn truncated_spec_limits_agreement() {
        let x = PathSpec::new_unchecked(FinitePath::new(0, alloc::vec![0, 0]), Tail::Truncated);
        let y = spec(0, &[0, 0], &[1]);
        let (m, _) = common_prefix(&x, &y, 100);
        assert_eq!(m, Agreement::AtLeast(3));
        assert_eq!(x.same_path(&y), None);
    }
}
