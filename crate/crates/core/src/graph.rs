//! Labeled graphs with a mayer/boltzmann edge partition.
//!
//! Edges live in a fixed colexicographic slot order over vertex pairs
//! `{i, j}` with `i < j`, so an edge set is a bitmask and subset iteration
//! is plain integer iteration. Slot indices do not depend on the graph
//! order, which lets masks travel between contexts of different `n`.

use crate::error::{Error, Result};
use std::fmt;
use std::sync::{Mutex, OnceLock};

/// Largest vertex-set order handled by the mask representation (45 slots).
pub const MAX_ORDER: u32 = 10;

/// Largest order for which brute-force canonicalization is allowed.
pub const MAX_CANONICAL_ORDER: u32 = 9;

/// Number of vertex pairs on `n` labels.
#[inline]
pub fn pair_count(n: u32) -> u32 {
    n * (n - 1) / 2
}

/// Bitmask with every pair slot of an order-`n` complete graph set.
#[inline]
pub fn full_mask(n: u32) -> u64 {
    if n < 2 {
        0
    } else {
        (1u64 << pair_count(n)) - 1
    }
}

/// Slot index of the pair `{lo, hi}`, 1-based labels, `lo < hi`.
#[inline]
pub fn edge_slot(lo: u32, hi: u32) -> u32 {
    debug_assert!(0 < lo && lo < hi);
    (hi - 1) * (hi - 2) / 2 + lo - 1
}

/// Endpoints `(lo, hi)` of a slot index.
#[inline]
pub fn slot_endpoints(slot: u32) -> (u32, u32) {
    let mut hi = 2u32;
    while (hi - 1) * hi / 2 <= slot {
        hi += 1;
    }
    let lo = slot - (hi - 1) * (hi - 2) / 2 + 1;
    (lo, hi)
}

/// Unordered pair of distinct vertex labels, stored sorted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    lo: u8,
    hi: u8,
}

impl Edge {
    pub fn new(a: u32, b: u32) -> Result<Self> {
        if a == 0 || b == 0 || a > MAX_ORDER || b > MAX_ORDER {
            return Err(Error::VertexOutOfRange {
                vertex: a.max(b),
                order: MAX_ORDER,
            });
        }
        if a == b {
            return Err(Error::Parse(format!("edge endpoints coincide: {a}")));
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        Ok(Edge {
            lo: lo as u8,
            hi: hi as u8,
        })
    }

    pub fn endpoints(&self) -> (u32, u32) {
        (self.lo as u32, self.hi as u32)
    }

    pub fn slot(&self) -> u32 {
        edge_slot(self.lo as u32, self.hi as u32)
    }

    pub fn from_slot(slot: u32) -> Self {
        let (lo, hi) = slot_endpoints(slot);
        Edge {
            lo: lo as u8,
            hi: hi as u8,
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.lo, self.hi)
    }
}

/// Mask of the given edges; rejects endpoints above `n`.
pub fn edges_to_mask(n: u32, edges: &[Edge]) -> Result<u64> {
    let mut mask = 0u64;
    for e in edges {
        let (_, hi) = e.endpoints();
        if hi > n {
            return Err(Error::VertexOutOfRange { vertex: hi, order: n });
        }
        mask |= 1u64 << e.slot();
    }
    Ok(mask)
}

/// Edges of a mask in ascending slot order.
pub fn mask_to_edges(mask: u64) -> Vec<Edge> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        let slot = m.trailing_zeros();
        out.push(Edge::from_slot(slot));
        m &= m - 1;
    }
    out
}

/// Per-vertex adjacency bitsets (bit `v-1` set) for an edge mask.
#[inline]
fn adjacency(n: u32, mask: u64) -> [u16; MAX_ORDER as usize + 1] {
    let mut adj = [0u16; MAX_ORDER as usize + 1];
    let mut m = mask;
    while m != 0 {
        let slot = m.trailing_zeros();
        m &= m - 1;
        let (lo, hi) = slot_endpoints(slot);
        debug_assert!(hi <= n);
        adj[lo as usize] |= 1 << (hi - 1);
        adj[hi as usize] |= 1 << (lo - 1);
    }
    adj
}

/// Connectivity of the graph on `{1..n}` with the given edge mask.
/// A single vertex with no edges is connected.
pub(crate) fn connected_mask(n: u32, mask: u64) -> bool {
    if n <= 1 {
        return true;
    }
    let adj = adjacency(n, mask);
    let all = if n == 16 { u16::MAX } else { (1u16 << n) - 1 };
    let mut seen: u16 = 1;
    let mut frontier: u16 = 1;
    while frontier != 0 {
        let mut next: u16 = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize + 1;
            f &= f - 1;
            next |= adj[v];
        }
        frontier = next & !seen;
        seen |= next;
        if seen == all {
            return true;
        }
    }
    seen == all
}

/// Biconnectivity on `{1..n}`: connected and free of cut vertices.
/// The single edge on two vertices counts as biconnected.
pub(crate) fn biconnected_mask(n: u32, mask: u64) -> bool {
    if !connected_mask(n, mask) {
        return false;
    }
    if n == 2 {
        return mask != 0;
    }
    // Iterative-enough recursion: depth is at most MAX_ORDER.
    let adj = adjacency(n, mask);
    let mut disc = [0u32; MAX_ORDER as usize + 1];
    let mut low = [0u32; MAX_ORDER as usize + 1];
    let mut timer = 1u32;

    fn dfs(
        v: usize,
        parent: usize,
        adj: &[u16; MAX_ORDER as usize + 1],
        disc: &mut [u32; MAX_ORDER as usize + 1],
        low: &mut [u32; MAX_ORDER as usize + 1],
        timer: &mut u32,
    ) -> bool {
        disc[v] = *timer;
        low[v] = *timer;
        *timer += 1;
        let mut children = 0u32;
        let mut nb = adj[v];
        while nb != 0 {
            let u = nb.trailing_zeros() as usize + 1;
            nb &= nb - 1;
            if disc[u] == 0 {
                children += 1;
                if !dfs(u, v, adj, disc, low, timer) {
                    return false;
                }
                low[v] = low[v].min(low[u]);
                // Non-root articulation test.
                if parent != 0 && low[u] >= disc[v] {
                    return false;
                }
            } else if u != parent {
                low[v] = low[v].min(disc[u]);
            }
        }
        // Root articulation test.
        parent != 0 || children <= 1
    }

    dfs(1, 0, &adj, &mut disc, &mut low, &mut timer)
}

fn check_endpoints(n: u32, edges: &[Edge]) -> Result<()> {
    if n > MAX_ORDER {
        return Err(Error::OrderOutOfRange {
            what: "graph",
            order: n,
            min: 1,
            max: MAX_ORDER,
        });
    }
    for e in edges {
        let (_, hi) = e.endpoints();
        if hi > n {
            return Err(Error::VertexOutOfRange { vertex: hi, order: n });
        }
    }
    Ok(())
}

/// Connectivity over an explicit edge list.
pub fn is_connected(vertex_count: u32, edges: &[Edge]) -> Result<bool> {
    check_endpoints(vertex_count, edges)?;
    Ok(connected_mask(vertex_count, edges_to_mask(vertex_count, edges)?))
}

/// Biconnectivity over an explicit edge list; requires `vertex_count >= 2`.
pub fn is_biconnected(vertex_count: u32, edges: &[Edge]) -> Result<bool> {
    if vertex_count < 2 {
        return Err(Error::OrderOutOfRange {
            what: "biconnectivity",
            order: vertex_count,
            min: 2,
            max: MAX_ORDER,
        });
    }
    check_endpoints(vertex_count, edges)?;
    Ok(biconnected_mask(
        vertex_count,
        edges_to_mask(vertex_count, edges)?,
    ))
}

/// Key identifying a marked graph up to simultaneous relabeling of both
/// edge sets. Equal keys iff isomorphic in that sense.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(pub Vec<u8>);

/// Slot permutation tables for every vertex permutation of `{1..n}`.
/// `tables[k][slot]` is the image slot under the k-th permutation.
pub(crate) struct SlotPerms {
    pub tables: Vec<Box<[u8]>>,
}

impl SlotPerms {
    fn build(n: u32, fix_first: bool) -> SlotPerms {
        let mut tables = Vec::new();
        let mut labels: Vec<u32> = (1..=n).collect();
        let start = if fix_first { 1 } else { 0 };
        permute_suffix(&mut labels, start, &mut |perm| {
            let slots = pair_count(n);
            let mut table = vec![0u8; slots as usize];
            for slot in 0..slots {
                let (lo, hi) = slot_endpoints(slot);
                let (a, b) = (perm[lo as usize - 1], perm[hi as usize - 1]);
                let (x, y) = if a < b { (a, b) } else { (b, a) };
                table[slot as usize] = edge_slot(x, y) as u8;
            }
            tables.push(table.into_boxed_slice());
        });
        SlotPerms { tables }
    }

    /// Tables over all `n!` vertex permutations, cached per order.
    pub fn all(n: u32) -> &'static SlotPerms {
        static CACHE: OnceLock<Mutex<Vec<Option<&'static SlotPerms>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(vec![None; MAX_ORDER as usize + 1]));
        let mut guard = cache.lock().unwrap();
        if guard[n as usize].is_none() {
            guard[n as usize] = Some(Box::leak(Box::new(SlotPerms::build(n, false))));
        }
        guard[n as usize].unwrap()
    }

    /// Tables over the `(n-1)!` permutations fixing vertex 1, cached.
    #[cfg(test)]
    pub fn fixing_root(n: u32) -> &'static SlotPerms {
        static CACHE: OnceLock<Mutex<Vec<Option<&'static SlotPerms>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(vec![None; MAX_ORDER as usize + 1]));
        let mut guard = cache.lock().unwrap();
        if guard[n as usize].is_none() {
            guard[n as usize] = Some(Box::leak(Box::new(SlotPerms::build(n, true))));
        }
        guard[n as usize].unwrap()
    }
}

/// Calls `f` for every permutation of `labels[start..]` (Heap's algorithm).
fn permute_suffix(labels: &mut Vec<u32>, start: usize, f: &mut impl FnMut(&[u32])) {
    let k = labels.len() - start;
    if k <= 1 {
        f(labels);
        return;
    }
    // Heap's algorithm over the suffix.
    let mut c = vec![0usize; k];
    f(labels);
    let mut i = 0;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                labels.swap(start, start + i);
            } else {
                labels.swap(start + c[i], start + i);
            }
            f(labels);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Applies a slot permutation table to an edge mask.
#[inline]
pub(crate) fn apply_slot_perm(mask: u64, table: &[u8]) -> u64 {
    let mut out = 0u64;
    let mut m = mask;
    while m != 0 {
        let slot = m.trailing_zeros() as usize;
        m &= m - 1;
        out |= 1u64 << table[slot];
    }
    out
}

/// Labeled graph `G(V_n; X_f, X_ft)` whose mayer and boltzmann edge sets
/// form a canonical pair: disjoint, with endpoint union exactly `{1..n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MarkedGraph {
    order: u8,
    mayer: u64,
    boltzmann: u64,
}

impl MarkedGraph {
    pub fn new(order: u32, mayer: &[Edge], boltzmann: &[Edge]) -> Result<Self> {
        check_endpoints(order, mayer)?;
        check_endpoints(order, boltzmann)?;
        Self::from_masks(order, edges_to_mask(order, mayer)?, edges_to_mask(order, boltzmann)?)
    }

    /// Builds from raw slot masks, checking the canonical-pair invariants.
    pub fn from_masks(order: u32, mayer: u64, boltzmann: u64) -> Result<Self> {
        if order < 2 || order > MAX_ORDER {
            return Err(Error::OrderOutOfRange {
                what: "marked graph",
                order,
                min: 2,
                max: MAX_ORDER,
            });
        }
        if mayer & boltzmann != 0 {
            return Err(Error::OverlappingEdgeSets);
        }
        let union = mayer | boltzmann;
        if union & !full_mask(order) != 0 {
            let slot = (union & !full_mask(order)).trailing_zeros();
            return Err(Error::VertexOutOfRange {
                vertex: slot_endpoints(slot).1,
                order,
            });
        }
        // Endpoint union must cover every vertex of {1..order}.
        let mut covered = 0u16;
        let mut m = union;
        while m != 0 {
            let slot = m.trailing_zeros();
            m &= m - 1;
            let (lo, hi) = slot_endpoints(slot);
            covered |= 1 << (lo - 1);
            covered |= 1 << (hi - 1);
        }
        let all = (1u16 << order) - 1;
        if covered != all {
            let missing = (!covered & all).trailing_zeros() + 1;
            return Err(Error::UncoveredVertex { vertex: missing });
        }
        Ok(MarkedGraph {
            order: order as u8,
            mayer,
            boltzmann,
        })
    }

    pub fn order(&self) -> u32 {
        self.order as u32
    }

    pub fn mayer_mask(&self) -> u64 {
        self.mayer
    }

    pub fn boltzmann_mask(&self) -> u64 {
        self.boltzmann
    }

    pub fn mayer_edges(&self) -> Vec<Edge> {
        mask_to_edges(self.mayer)
    }

    pub fn boltzmann_edges(&self) -> Vec<Edge> {
        mask_to_edges(self.boltzmann)
    }

    /// The subgraph `R(G) = (V_n; X_f)` as `(order, mayer edges)`.
    pub fn mayer_subgraph(&self) -> (u32, Vec<Edge>) {
        (self.order(), self.mayer_edges())
    }

    /// A graph is basic when its mayer subgraph is connected.
    pub fn is_basic(&self) -> bool {
        connected_mask(self.order(), self.mayer)
    }

    /// Every vertex pair carries an edge of one of the two kinds.
    pub fn is_complete(&self) -> bool {
        self.mayer | self.boltzmann == full_mask(self.order())
    }

    /// Per-integral complexity `N1(G) = |X_f| - n + 1 + |X_ft|`.
    /// Defined for basic graphs only.
    pub fn n1_complexity(&self) -> Result<u32> {
        if !self.is_basic() {
            return Err(Error::NonBasicGraph);
        }
        // Connectivity of R(G) guarantees |X_f| >= n - 1.
        Ok(self.mayer.count_ones() + 1 - self.order() + self.boltzmann.count_ones())
    }

    /// Brute-force canonical key: the minimum of the (mayer, boltzmann)
    /// mask pair over all `n!` vertex relabelings.
    pub fn canonical_form(&self) -> Result<CanonicalKey> {
        let n = self.order();
        if n > MAX_CANONICAL_ORDER {
            return Err(Error::OrderOutOfRange {
                what: "canonical form",
                order: n,
                min: 2,
                max: MAX_CANONICAL_ORDER,
            });
        }
        let perms = SlotPerms::all(n);
        let mut best = (u64::MAX, u64::MAX);
        for table in &perms.tables {
            let f = apply_slot_perm(self.mayer, table);
            if f > best.0 {
                continue;
            }
            let ft = apply_slot_perm(self.boltzmann, table);
            if (f, ft) < best {
                best = (f, ft);
            }
        }
        let mut bytes = Vec::with_capacity(17);
        bytes.push(self.order);
        bytes.extend_from_slice(&best.0.to_be_bytes());
        bytes.extend_from_slice(&best.1.to_be_bytes());
        Ok(CanonicalKey(bytes))
    }

    /// Line record `n=<int>; f=<i-j,...>; ft=<i-j,...>`.
    pub fn to_line(&self) -> String {
        let fmt_edges = |edges: Vec<Edge>| {
            edges
                .iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        format!(
            "n={}; f={}; ft={}",
            self.order,
            fmt_edges(self.mayer_edges()),
            fmt_edges(self.boltzmann_edges())
        )
    }

    pub fn parse_line(line: &str) -> Result<Self> {
        let mut order = None;
        let mut mayer = Vec::new();
        let mut boltzmann = Vec::new();
        for field in line.split(';') {
            let field = field.trim();
            if field.is_empty() {
                continue;
            }
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got `{field}`")))?;
            match key.trim() {
                "n" => {
                    order = Some(value.trim().parse::<u32>().map_err(|e| {
                        Error::Parse(format!("bad order `{}`: {e}", value.trim()))
                    })?)
                }
                "f" => mayer = parse_edge_list(value)?,
                "ft" => boltzmann = parse_edge_list(value)?,
                other => return Err(Error::Parse(format!("unknown field `{other}`"))),
            }
        }
        let order = order.ok_or_else(|| Error::Parse("missing n= field".into()))?;
        MarkedGraph::new(order, &mayer, &boltzmann)
    }
}

/// Parses `i-j,k-l,...`; empty input yields no edges.
pub fn parse_edge_list(text: &str) -> Result<Vec<Edge>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for piece in text.split(',') {
        let piece = piece.trim();
        let (a, b) = piece
            .split_once('-')
            .ok_or_else(|| Error::Parse(format!("bad edge `{piece}`")))?;
        let a = a
            .trim()
            .parse::<u32>()
            .map_err(|e| Error::Parse(format!("bad endpoint in `{piece}`: {e}")))?;
        let b = b
            .trim()
            .parse::<u32>()
            .map_err(|e| Error::Parse(format!("bad endpoint in `{piece}`: {e}")))?;
        out.push(Edge::new(a, b)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: u32, b: u32) -> Edge {
        Edge::new(a, b).unwrap()
    }

    #[test]
    fn slot_roundtrip() {
        for slot in 0..pair_count(MAX_ORDER) {
            let (lo, hi) = slot_endpoints(slot);
            assert!(lo < hi && hi <= MAX_ORDER);
            assert_eq!(edge_slot(lo, hi), slot);
        }
        assert_eq!(edge_slot(1, 2), 0);
        assert_eq!(edge_slot(1, 3), 1);
        assert_eq!(edge_slot(2, 3), 2);
    }

    #[test]
    fn connectivity_examples() {
        assert!(is_connected(3, &[e(1, 2), e(2, 3)]).unwrap());
        assert!(!is_connected(3, &[e(1, 2)]).unwrap());
        let k4: Vec<Edge> = mask_to_edges(full_mask(4));
        assert!(is_connected(4, &k4).unwrap());
        assert!(is_connected(1, &[]).unwrap());
        assert!(is_connected(5, &[e(1, 7)]).is_err());
    }

    #[test]
    fn biconnectivity_examples() {
        assert!(is_biconnected(3, &[e(1, 2), e(2, 3), e(1, 3)]).unwrap());
        assert!(!is_biconnected(3, &[e(1, 2), e(2, 3)]).unwrap());
        assert!(is_biconnected(2, &[e(1, 2)]).unwrap());
        assert!(!is_biconnected(2, &[]).unwrap());
        assert!(is_biconnected(1, &[]).is_err());
    }

    /// Independent oracle: remove each vertex in turn and re-test
    /// connectivity of the remainder by union-find.
    fn biconnected_oracle(n: u32, mask: u64) -> bool {
        if !connected_by_union_find(n, mask, 0) {
            return false;
        }
        if n == 2 {
            return mask != 0;
        }
        (1..=n).all(|skip| connected_by_union_find(n, mask, skip))
    }

    fn connected_by_union_find(n: u32, mask: u64, skip: u32) -> bool {
        let mut parent: Vec<u32> = (0..=n).collect();
        fn find(p: &mut Vec<u32>, v: u32) -> u32 {
            if p[v as usize] != v {
                let r = find(p, p[v as usize]);
                p[v as usize] = r;
            }
            p[v as usize]
        }
        for edge in mask_to_edges(mask) {
            let (a, b) = edge.endpoints();
            if a == skip || b == skip {
                continue;
            }
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra as usize] = rb;
        }
        let mut root = None;
        for v in 1..=n {
            if v == skip {
                continue;
            }
            let r = find(&mut parent, v);
            match root {
                None => root = Some(r),
                Some(r0) if r0 != r => return false,
                _ => {}
            }
        }
        true
    }

    #[test]
    fn biconnectivity_matches_deletion_oracle() {
        for n in [4u32, 5] {
            for mask in 0..=full_mask(n) {
                assert_eq!(
                    biconnected_mask(n, mask),
                    biconnected_oracle(n, mask),
                    "n={n} mask={mask:b}"
                );
            }
        }
    }

    #[test]
    fn block_count_on_four_vertices() {
        let count = (0..=full_mask(4))
            .filter(|&m| biconnected_mask(4, m))
            .count();
        assert_eq!(count, 10);
    }

    #[test]
    fn marked_graph_invariants() {
        // Overlapping sets rejected.
        assert!(matches!(
            MarkedGraph::new(3, &[e(1, 2), e(2, 3)], &[e(1, 2)]),
            Err(Error::OverlappingEdgeSets)
        ));
        // Uncovered vertex rejected.
        assert!(matches!(
            MarkedGraph::new(4, &[e(1, 2), e(2, 3)], &[]),
            Err(Error::UncoveredVertex { vertex: 4 })
        ));
        let g = MarkedGraph::new(3, &[e(1, 2), e(2, 3)], &[]).unwrap();
        assert!(g.is_basic());
        assert_eq!(g.n1_complexity().unwrap(), 0);
        assert_eq!(g.mayer_subgraph().1, vec![e(1, 2), e(2, 3)]);

        let g1 = MarkedGraph::new(3, &[e(1, 2), e(1, 3)], &[e(2, 3)]).unwrap();
        assert_eq!(g1.n1_complexity().unwrap(), 1);
        assert!(g1.is_complete());
        assert!(!g.is_complete());

        // N1 on a complete six-vertex graph with connected mayer part.
        let all = mask_to_edges(full_mask(6));
        let (f, ft) = all.split_at(9);
        let mut f = f.to_vec();
        // Keep the mayer part connected: ensure a spanning star.
        f.extend([e(1, 5), e(1, 6)]);
        let ft: Vec<Edge> = ft.iter().copied().filter(|x| !f.contains(x)).collect();
        let g6 = MarkedGraph::new(6, &f, &ft).unwrap();
        assert_eq!(g6.n1_complexity().unwrap(), 15 - 6 + 1);
    }

    #[test]
    fn non_basic_graph_rejects_n1() {
        let g = MarkedGraph::new(4, &[e(1, 2)], &[e(3, 4)]).unwrap();
        assert!(!g.is_basic());
        assert!(matches!(g.n1_complexity(), Err(Error::NonBasicGraph)));
    }

    #[test]
    fn canonical_form_examples() {
        let chain123 = MarkedGraph::new(3, &[e(1, 2), e(2, 3)], &[]).unwrap();
        let chain132 = MarkedGraph::new(3, &[e(1, 3), e(3, 2)], &[]).unwrap();
        assert_eq!(
            chain123.canonical_form().unwrap(),
            chain132.canonical_form().unwrap()
        );

        let g = MarkedGraph::new(3, &[e(1, 2), e(2, 3)], &[]).unwrap();
        let g1 = MarkedGraph::new(3, &[e(1, 2), e(1, 3)], &[e(2, 3)]).unwrap();
        assert_ne!(g.canonical_form().unwrap(), g1.canonical_form().unwrap());
    }

    #[test]
    fn canonical_classes_of_blocks_on_four_vertices() {
        use std::collections::HashSet;
        let mut keys = HashSet::new();
        for mask in 0..=full_mask(4) {
            if biconnected_mask(4, mask) {
                let g = MarkedGraph::from_masks(4, mask, 0).unwrap();
                keys.insert(g.canonical_form().unwrap());
            }
        }
        // Classes: the 4-cycle, K4 minus an edge, K4.
        assert_eq!(keys.len(), 3);
    }

    #[test]
    fn line_roundtrip() {
        let g = MarkedGraph::new(3, &[e(1, 2), e(1, 3)], &[e(2, 3)]).unwrap();
        let line = g.to_line();
        assert_eq!(line, "n=3; f=1-2,1-3; ft=2-3");
        assert_eq!(MarkedGraph::parse_line(&line).unwrap(), g);

        let empty_ft = MarkedGraph::new(2, &[e(1, 2)], &[]).unwrap();
        let line = empty_ft.to_line();
        assert_eq!(line, "n=2; f=1-2; ft=");
        assert_eq!(MarkedGraph::parse_line(&line).unwrap(), empty_ft);
    }
}
