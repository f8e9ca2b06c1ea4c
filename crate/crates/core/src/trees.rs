//! Rooted labeled trees, admissible edge sets, and the reduction of the
//! tree family to maximal-isomorphism class representatives.
//!
//! Trees live on `{1..n}` with root 1 and are stored as parent arrays.
//! The admissible-edge rule is pluggable; the default is the
//! breadth-first minimal-parent scheme, under which the pairs
//! `(tree, admissible set)` partition the connected labeled graphs:
//! every connected graph decomposes uniquely as a tree plus a subset of
//! its admissible edges.

use crate::error::{Error, Result};
use crate::graph::{edge_slot, mask_to_edges, Edge, MAX_ORDER};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::collections::HashMap;

/// Largest order accepted by the tree enumerator.
pub const MAX_ENUMERATION_ORDER: u32 = 9;

/// Largest order for class-representative enumeration.
pub const MAX_CLASS_ORDER: u32 = 8;

/// Labeled tree on `{1..n}` rooted at vertex 1, stored as a parent array.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootedLabeledTree {
    order: u8,
    /// `parents[v - 2]` is the parent of vertex `v`, for `v in 2..=n`.
    parents: Vec<u8>,
}

impl RootedLabeledTree {
    pub fn new(order: u32, parents: Vec<u32>) -> Result<Self> {
        if order < 2 || order > MAX_ORDER {
            return Err(Error::OrderOutOfRange {
                what: "rooted tree",
                order,
                min: 2,
                max: MAX_ORDER,
            });
        }
        if parents.len() != (order - 1) as usize {
            return Err(Error::InvalidTree(format!(
                "expected {} parent entries, got {}",
                order - 1,
                parents.len()
            )));
        }
        for (i, &p) in parents.iter().enumerate() {
            let v = i as u32 + 2;
            if p == 0 || p > order {
                return Err(Error::InvalidTree(format!("parent of {v} out of range: {p}")));
            }
            if p == v {
                return Err(Error::InvalidTree(format!("vertex {v} is its own parent")));
            }
        }
        let tree = RootedLabeledTree {
            order: order as u8,
            parents: parents.iter().map(|&p| p as u8).collect(),
        };
        // Every vertex must reach the root without cycling.
        for v in 2..=order {
            let mut cur = v;
            let mut steps = 0;
            while cur != 1 {
                cur = tree.parent(cur).unwrap();
                steps += 1;
                if steps > order {
                    return Err(Error::InvalidTree(format!(
                        "vertex {v} does not reach the root"
                    )));
                }
            }
        }
        Ok(tree)
    }

    pub fn order(&self) -> u32 {
        self.order as u32
    }

    /// Parent of `v`; `None` for the root.
    pub fn parent(&self, v: u32) -> Option<u32> {
        if v == 1 {
            None
        } else {
            Some(self.parents[v as usize - 2] as u32)
        }
    }

    /// Depths indexed by `v - 1`; the root has depth 0.
    pub fn depths(&self) -> Vec<u32> {
        let n = self.order();
        let mut depth = vec![u32::MAX; n as usize];
        depth[0] = 0;
        for v in 2..=n {
            let mut chain = vec![v];
            let mut cur = v;
            while depth[cur as usize - 1] == u32::MAX {
                cur = self.parent(cur).unwrap();
                chain.push(cur);
            }
            let mut d = depth[cur as usize - 1];
            for &w in chain.iter().rev().skip(1) {
                d += 1;
                depth[w as usize - 1] = d;
            }
        }
        depth
    }

    /// Vertices grouped by depth; `layers()[0] == [1]`.
    pub fn layers(&self) -> Vec<Vec<u32>> {
        let depths = self.depths();
        let height = *depths.iter().max().unwrap() as usize;
        let mut layers = vec![Vec::new(); height + 1];
        for v in 1..=self.order() {
            layers[depths[v as usize - 1] as usize].push(v);
        }
        layers
    }

    /// Height `H(t)`: the maximum depth.
    pub fn height(&self) -> u32 {
        *self.depths().iter().max().unwrap()
    }

    pub fn degree(&self, v: u32) -> u32 {
        let up = if v == 1 { 0 } else { 1 };
        up + self.children_count(v)
    }

    pub fn children_count(&self, v: u32) -> u32 {
        self.parents.iter().filter(|&&p| p as u32 == v).count() as u32
    }

    /// Edge mask of the `n - 1` tree edges.
    pub fn edge_mask(&self) -> u64 {
        let mut mask = 0u64;
        for v in 2..=self.order() {
            let p = self.parent(v).unwrap();
            let (lo, hi) = if p < v { (p, v) } else { (v, p) };
            mask |= 1u64 << edge_slot(lo, hi);
        }
        mask
    }

    pub fn edges(&self) -> Vec<Edge> {
        mask_to_edges(self.edge_mask())
    }

    /// Reconstructs the rooted tree from an `n - 1` edge mask.
    pub fn from_edge_mask(order: u32, mask: u64) -> Result<Self> {
        if mask.count_ones() != order - 1 {
            return Err(Error::InvalidTree(format!(
                "edge mask has {} edges, expected {}",
                mask.count_ones(),
                order - 1
            )));
        }
        let mut neighbors: Vec<Vec<u32>> = vec![Vec::new(); order as usize + 1];
        for edge in mask_to_edges(mask) {
            let (a, b) = edge.endpoints();
            if b > order {
                return Err(Error::VertexOutOfRange { vertex: b, order });
            }
            neighbors[a as usize].push(b);
            neighbors[b as usize].push(a);
        }
        let mut parents = vec![0u32; (order - 1) as usize];
        let mut seen = vec![false; order as usize + 1];
        seen[1] = true;
        let mut stack = vec![1u32];
        let mut visited = 1;
        while let Some(v) = stack.pop() {
            for &u in &neighbors[v as usize] {
                if !seen[u as usize] {
                    seen[u as usize] = true;
                    parents[u as usize - 2] = v;
                    visited += 1;
                    stack.push(u);
                }
            }
        }
        if visited != order {
            return Err(Error::InvalidTree("edge mask is not a spanning tree".into()));
        }
        RootedLabeledTree::new(order, parents)
    }

    /// Line record `n=<int>; parents=<p2,...,pn>; ad=<i-j,...>`.
    pub fn to_line_with(&self, ad: &AdmissibleEdgeSet) -> String {
        let parents = self
            .parents
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",");
        let ad_edges = ad
            .edges()
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(",");
        format!("n={}; parents={}; ad={}", self.order, parents, ad_edges)
    }

    pub fn parse_line(line: &str) -> Result<(Self, Option<AdmissibleEdgeSet>)> {
        let mut order = None;
        let mut parents: Option<Vec<u32>> = None;
        let mut ad_edges: Option<Vec<Edge>> = None;
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
                "parents" => {
                    let mut ps = Vec::new();
                    for p in value.trim().split(',') {
                        ps.push(p.trim().parse::<u32>().map_err(|e| {
                            Error::Parse(format!("bad parent `{}`: {e}", p.trim()))
                        })?);
                    }
                    parents = Some(ps);
                }
                "ad" => ad_edges = Some(crate::graph::parse_edge_list(value)?),
                other => return Err(Error::Parse(format!("unknown field `{other}`"))),
            }
        }
        let order = order.ok_or_else(|| Error::Parse("missing n= field".into()))?;
        let parents = parents.ok_or_else(|| Error::Parse("missing parents= field".into()))?;
        let tree = RootedLabeledTree::new(order, parents)?;
        let ad = match ad_edges {
            None => None,
            Some(edges) => Some(AdmissibleEdgeSet::new(&tree, &edges)?),
        };
        Ok((tree, ad))
    }
}

/// Non-tree edges attached to a specific tree as boltzmann labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibleEdgeSet {
    order: u8,
    mask: u64,
}

impl AdmissibleEdgeSet {
    pub fn new(tree: &RootedLabeledTree, edges: &[Edge]) -> Result<Self> {
        let mask = crate::graph::edges_to_mask(tree.order(), edges)?;
        Self::from_mask(tree, mask)
    }

    pub fn from_mask(tree: &RootedLabeledTree, mask: u64) -> Result<Self> {
        if mask & tree.edge_mask() != 0 {
            return Err(Error::OverlappingEdgeSets);
        }
        Ok(AdmissibleEdgeSet {
            order: tree.order() as u8,
            mask,
        })
    }

    pub fn order(&self) -> u32 {
        self.order as u32
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn edges(&self) -> Vec<Edge> {
        mask_to_edges(self.mask)
    }

    pub fn len(&self) -> u32 {
        self.mask.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }
}

/// Rule assigning each tree its admissible edge set.
pub trait AdmissibleScheme {
    fn admissible_mask(&self, tree: &RootedLabeledTree) -> u64;

    fn admissible_edges(&self, tree: &RootedLabeledTree) -> AdmissibleEdgeSet {
        AdmissibleEdgeSet {
            order: tree.order() as u8,
            mask: self.admissible_mask(tree),
        }
    }

    fn name(&self) -> &'static str;
}

/// Breadth-first minimal-parent scheme. A non-tree pair `{u, v}` is
/// admissible iff its endpoints sit on the same depth, or on adjacent
/// depths with the shallower endpoint exceeding the deeper one's parent.
#[derive(Debug, Clone, Copy, Default)]
pub struct MinimalParentScheme;

impl AdmissibleScheme for MinimalParentScheme {
    fn admissible_mask(&self, tree: &RootedLabeledTree) -> u64 {
        let n = tree.order();
        let depths = tree.depths();
        let tree_mask = tree.edge_mask();
        let mut mask = 0u64;
        for hi in 2..=n {
            for lo in 1..hi {
                let slot = edge_slot(lo, hi);
                if tree_mask & (1u64 << slot) != 0 {
                    continue;
                }
                let (dl, dh) = (depths[lo as usize - 1], depths[hi as usize - 1]);
                let admissible = if dl == dh {
                    true
                } else {
                    let (shallow, deep) = if dl < dh { (lo, hi) } else { (hi, lo) };
                    dl.abs_diff(dh) == 1 && shallow > tree.parent(deep).unwrap()
                };
                if admissible {
                    mask |= 1u64 << slot;
                }
            }
        }
        mask
    }

    fn name(&self) -> &'static str {
        "minimal-parent"
    }
}

/// Default admissible edges of a tree.
pub fn admissible_edges(tree: &RootedLabeledTree) -> AdmissibleEdgeSet {
    MinimalParentScheme.admissible_edges(tree)
}

/// All labeled trees on `{1..n}` rooted at 1, one per Pruefer sequence.
pub fn enumerate_trees(n: u32) -> Result<impl Iterator<Item = RootedLabeledTree>> {
    if !(2..=MAX_ENUMERATION_ORDER).contains(&n) {
        return Err(Error::OrderOutOfRange {
            what: "tree enumeration",
            order: n,
            min: 2,
            max: MAX_ENUMERATION_ORDER,
        });
    }
    let digits = (n - 2) as usize;
    let mut code = vec![1u32; digits];
    let mut done = false;
    Ok(std::iter::from_fn(move || {
        if done {
            return None;
        }
        let tree = tree_from_pruefer(n, &code);
        // Odometer step over {1..n}^(n-2).
        let mut i = 0;
        loop {
            if i == code.len() {
                done = true;
                break;
            }
            if code[i] < n {
                code[i] += 1;
                break;
            }
            code[i] = 1;
            i += 1;
        }
        Some(tree)
    }))
}

/// Decodes a Pruefer sequence into the tree rooted at 1.
fn tree_from_pruefer(n: u32, code: &[u32]) -> RootedLabeledTree {
    let mut degree = vec![1u32; n as usize + 1];
    for &s in code {
        degree[s as usize] += 1;
    }
    let mut edge_mask = 0u64;
    let mut push_edge = |a: u32, b: u32| {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        edge_mask |= 1u64 << edge_slot(lo, hi);
    };
    let mut used = vec![false; n as usize + 1];
    for &s in code {
        let leaf = (1..=n)
            .find(|&v| degree[v as usize] == 1 && !used[v as usize])
            .unwrap();
        used[leaf as usize] = true;
        degree[s as usize] -= 1;
        push_edge(leaf, s);
    }
    let mut last = (1..=n).filter(|&v| !used[v as usize] && degree[v as usize] >= 1);
    let a = last.next().unwrap();
    let b = last.next().unwrap();
    push_edge(a, b);
    RootedLabeledTree::from_edge_mask(n, edge_mask).unwrap()
}

/// Number of trees maximally isomorphic to `t` (the size of its class).
///
/// Evaluates `(n-1)!` divided by the product of the layer-size
/// factorials over depths `1..H-1`... together with the factorials of
/// the child counts of the depth-`H-1` vertices; integer arithmetic
/// throughout, exact by construction.
pub fn class_size(tree: &RootedLabeledTree) -> u128 {
    let n = tree.order();
    let layers = tree.layers();
    let height = layers.len() - 1;
    let mut numerator = factorial_u128(n - 1);
    for layer in layers.iter().take(height).skip(1) {
        numerator /= factorial_u128(layer.len() as u32);
    }
    if height >= 1 {
        for &v in &layers[height - 1] {
            numerator /= factorial_u128(tree.children_count(v));
        }
    }
    numerator
}

fn factorial_u128(k: u32) -> u128 {
    (2..=k as u128).product::<u128>().max(1)
}

fn factorial_big(k: u32) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=k {
        acc *= BigUint::from(i);
    }
    acc
}

/// Closed-form count of maximal-isomorphism class representatives.
pub fn count_tr(n: u32) -> BigUint {
    assert!(n >= 2);
    // The leading 1 counts the star; height 2 contributes 2^(n-2) - 1.
    let mut total = BigUint::one() + (BigUint::one() << (n - 2)) - BigUint::one();
    // Heights 3..=n-1 over compositions of n-1 into H positive parts.
    for height in 3..n {
        for comp in compositions(n - 1, height, 1) {
            let a = comp[height as usize - 2];
            let b = comp[height as usize - 1];
            let mut term = factorial_big(a + b - 1) / (factorial_big(b) * factorial_big(a - 1));
            for i in 2..height {
                let base = BigUint::from(comp[i as usize - 2]);
                term *= base.pow(comp[i as usize - 1]);
            }
            total += term;
        }
    }
    total
}

/// Closed-form count of class representatives whose trees satisfy the
/// layer conditions of the activity-ratio representation.
pub fn count_tr0(n: u32) -> BigUint {
    assert!(n >= 2);
    let mut total = BigUint::one();
    // Height 2: interior layer of size >= 2, last layer >= 1.
    for comp in compositions_primed(n - 1, 2) {
        let (a, b) = (comp[0], comp[1]);
        let term = factorial_big(a + b - 1) / (factorial_big(a - 1) * factorial_big(b));
        total += term - BigUint::one();
    }
    let cap = n.div_ceil(2);
    for height in 3..=cap {
        for comp in compositions_primed(n - 1, height) {
            let a = comp[height as usize - 2];
            let b = comp[height as usize - 1];
            let head =
                factorial_big(a + b - 1) / (factorial_big(a - 1) * factorial_big(b)) - BigUint::one();
            let mut term = head;
            for i in 2..height {
                let base = BigUint::from(comp[i as usize - 2]);
                term *= base.pow(comp[i as usize - 1]) - BigUint::one();
            }
            total += term;
        }
    }
    total
}

/// Compositions of `total` into `parts` components, each >= `min_each`.
fn compositions(total: u32, parts: u32, min_each: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; parts as usize];
    fn rec(cur: &mut Vec<u32>, idx: usize, left: u32, min_each: u32, out: &mut Vec<Vec<u32>>) {
        if idx + 1 == cur.len() {
            if left >= min_each {
                cur[idx] = left;
                out.push(cur.clone());
            }
            return;
        }
        let reserve = min_each * (cur.len() - idx - 1) as u32;
        let mut v = min_each;
        while v + reserve <= left {
            cur[idx] = v;
            rec(cur, idx + 1, left - v, min_each, out);
            v += 1;
        }
    }
    if parts >= 1 && total >= min_each * parts {
        rec(&mut cur, 0, total, min_each, &mut out);
    }
    out
}

/// Compositions with every component >= 2 except the last, which is >= 1.
fn compositions_primed(total: u32, parts: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if parts == 0 {
        return out;
    }
    let mut cur = vec![0u32; parts as usize];
    fn rec(cur: &mut Vec<u32>, idx: usize, left: u32, out: &mut Vec<Vec<u32>>) {
        let last = idx + 1 == cur.len();
        if last {
            if left >= 1 {
                cur[idx] = left;
                out.push(cur.clone());
            }
            return;
        }
        // Interior components need >= 2, the final one >= 1.
        let reserve = 2 * (cur.len() - idx - 2) as u32 + 1;
        let mut v = 2;
        while v + reserve <= left {
            cur[idx] = v;
            rec(cur, idx + 1, left - v, out);
            v += 1;
        }
    }
    rec(&mut cur, 0, total, &mut out);
    out
}

/// Membership test for the activity-ratio tree family: every layer
/// except the zeroth and possibly the last holds at least two vertices,
/// and no layer beyond the zeroth has exactly its highest-labeled vertex
/// as the only vertex of degree greater than one.
pub fn in_t_n0(tree: &RootedLabeledTree) -> bool {
    let layers = tree.layers();
    let height = layers.len() - 1;
    for (depth, layer) in layers.iter().enumerate().skip(1) {
        if depth < height && layer.len() < 2 {
            return false;
        }
        let busy: Vec<u32> = layer
            .iter()
            .copied()
            .filter(|&v| tree.degree(v) > 1)
            .collect();
        if busy.len() == 1 && busy[0] == *layer.iter().max().unwrap() {
            return false;
        }
    }
    true
}

/// One maximal-isomorphism class: its representative tree, the
/// representative's admissible edges, and the class cardinality.
#[derive(Debug, Clone)]
pub struct TreeClass {
    pub tree: RootedLabeledTree,
    pub admissible: AdmissibleEdgeSet,
    pub size: u128,
}

/// Class representatives of all trees on `{1..n}` under the default
/// admissible-edge scheme.
pub fn enumerate_tr(n: u32) -> Result<Vec<TreeClass>> {
    enumerate_tr_with(n, &MinimalParentScheme)
}

/// Class representatives under a caller-supplied scheme.
///
/// A class is determined by the rank structure of the tree: the layer
/// size profile, the parent choice of every interior-layer vertex
/// expressed as the parent's rank inside its own layer, and the vector
/// of last-layer child counts per parent rank (last-layer leaves are
/// interchangeable). Rank structure fixes the admissible-edge pattern,
/// because adjacent-layer admissibility compares two labels of one and
/// the same layer; hence any two trees with equal keys are mapped onto
/// each other, admissible sets included, by a root-fixing relabeling,
/// and their integrals coincide. The representative is the member with
/// the lexicographically least edge mask.
pub fn enumerate_tr_with(n: u32, scheme: &impl AdmissibleScheme) -> Result<Vec<TreeClass>> {
    if !(2..=MAX_CLASS_ORDER).contains(&n) {
        return Err(Error::OrderOutOfRange {
            what: "tree class enumeration",
            order: n,
            min: 2,
            max: MAX_CLASS_ORDER,
        });
    }
    let mut buckets: HashMap<Vec<u8>, (u64, u128)> = HashMap::new();
    for tree in enumerate_trees(n)? {
        let key = rank_structure_key(&tree);
        let mask = tree.edge_mask();
        buckets
            .entry(key)
            .and_modify(|(min_mask, count)| {
                *min_mask = (*min_mask).min(mask);
                *count += 1;
            })
            .or_insert((mask, 1));
    }
    let mut reps: Vec<(u64, u128)> = buckets.into_values().collect();
    reps.sort_unstable();
    let mut classes = Vec::with_capacity(reps.len());
    for (mask, size) in reps {
        let tree = RootedLabeledTree::from_edge_mask(n, mask)?;
        let admissible = scheme.admissible_edges(&tree);
        classes.push(TreeClass {
            tree,
            admissible,
            size,
        });
    }
    Ok(classes)
}

/// Relabeling-invariant class key: layer profile, interior parent ranks,
/// and last-layer child counts per parent rank.
fn rank_structure_key(tree: &RootedLabeledTree) -> Vec<u8> {
    let layers = tree.layers();
    let height = layers.len() - 1;
    let mut key = Vec::with_capacity(2 * tree.order() as usize);
    key.push(height as u8);
    for layer in &layers {
        key.push(layer.len() as u8);
    }
    // Vertices inside a layer are already ordered by label; the rank of
    // a vertex is its position in that ordering.
    for depth in 2..height {
        let parent_layer = &layers[depth - 1];
        for &v in &layers[depth] {
            let p = tree.parent(v).unwrap();
            let rank = parent_layer.iter().position(|&u| u == p).unwrap();
            key.push(rank as u8);
        }
    }
    if height >= 1 {
        for &v in &layers[height - 1] {
            key.push(tree.children_count(v) as u8);
        }
    }
    key
}

/// Brute-force count of connected labeled graphs on `n` vertices.
/// Serves as the independent side of the partition identity.
pub fn connected_labeled_graph_count(n: u32) -> BigUint {
    assert!((1..=7).contains(&n), "mask enumeration bound");
    if n == 1 {
        return BigUint::one();
    }
    let mut count = BigUint::zero();
    for mask in 0..=crate::graph::full_mask(n) {
        if crate::graph::connected_mask(n, mask) {
            count += BigUint::one();
        }
    }
    count
}

/// Checks an admissible scheme against slot bookkeeping: the admissible
/// mask must avoid tree edges and depth gaps larger than one.
pub fn scheme_mask_is_sound(tree: &RootedLabeledTree, ad_mask: u64) -> bool {
    if ad_mask & tree.edge_mask() != 0 {
        return false;
    }
    let depths = tree.depths();
    mask_to_edges(ad_mask).iter().all(|e| {
        let (a, b) = e.endpoints();
        b <= tree.order() && depths[a as usize - 1].abs_diff(depths[b as usize - 1]) <= 1
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{apply_slot_perm, full_mask, SlotPerms};
    use std::collections::HashMap;

    fn tree(order: u32, parents: &[u32]) -> RootedLabeledTree {
        RootedLabeledTree::new(order, parents.to_vec()).unwrap()
    }

    #[test]
    fn parent_array_validation() {
        assert!(RootedLabeledTree::new(3, vec![1]).is_err());
        assert!(RootedLabeledTree::new(3, vec![1, 5]).is_err());
        // 2 -> 3 -> 2 cycle never reaches the root.
        assert!(RootedLabeledTree::new(3, vec![3, 2]).is_err());
        let t = tree(4, &[1, 2, 2]);
        assert_eq!(t.depths(), vec![0, 1, 2, 2]);
        assert_eq!(t.height(), 2);
        assert_eq!(t.layers(), vec![vec![1], vec![2], vec![3, 4]]);
        assert_eq!(t.degree(2), 3);
        assert_eq!(t.children_count(2), 2);
    }

    #[test]
    fn enumeration_counts_are_cayley() {
        for n in 2..=6u32 {
            let count = enumerate_trees(n).unwrap().count() as u64;
            assert_eq!(count, (n as u64).pow(n - 2));
        }
        assert!(enumerate_trees(1).is_err());
        assert!(enumerate_trees(10).is_err());
    }

    #[test]
    fn enumeration_yields_distinct_valid_trees() {
        use std::collections::HashSet;
        let mut seen = HashSet::new();
        for t in enumerate_trees(5).unwrap() {
            assert_eq!(t.order(), 5);
            assert_eq!(t.edge_mask().count_ones(), 4);
            assert!(seen.insert(t.edge_mask()));
        }
        assert_eq!(seen.len(), 125);
    }

    #[test]
    fn admissible_rule_on_small_trees() {
        // Star at the root: the single sibling pair is admissible.
        let star = tree(3, &[1, 1]);
        let ad = admissible_edges(&star);
        assert_eq!(ad.edges(), vec![Edge::new(2, 3).unwrap()]);

        // Chains have no admissible pairs.
        let chain = tree(3, &[1, 2]);
        assert!(admissible_edges(&chain).is_empty());
        let chain132 = tree(3, &[3, 1]);
        assert!(admissible_edges(&chain132).is_empty());

        // Adjacent-layer pair: admissible only when the shallow endpoint
        // exceeds the deep endpoint's parent.
        let under_small = tree(4, &[1, 1, 2]); // 4 hangs under child 2
        let ad = admissible_edges(&under_small);
        assert_eq!(
            ad.edges(),
            vec![Edge::new(2, 3).unwrap(), Edge::new(3, 4).unwrap()]
        );
        let under_large = tree(4, &[1, 1, 3]); // 4 hangs under child 3
        let ad = admissible_edges(&under_large);
        assert_eq!(ad.edges(), vec![Edge::new(2, 3).unwrap()]);
    }

    #[test]
    fn partition_identity_counts() {
        // sum over trees of 2^{|X_ad|} = number of connected labeled graphs.
        for n in 3..=6u32 {
            let lhs: BigUint = enumerate_trees(n)
                .unwrap()
                .map(|t| BigUint::one() << admissible_edges(&t).len())
                .sum();
            assert_eq!(lhs, connected_labeled_graph_count(n), "n={n}");
        }
    }

    #[test]
    fn class_sizes_on_small_trees() {
        assert_eq!(class_size(&tree(3, &[1, 1])), 1); // star
        assert_eq!(class_size(&tree(3, &[1, 2])), 2); // chain
        assert_eq!(class_size(&tree(4, &[1, 1, 1])), 1);
        assert_eq!(class_size(&tree(4, &[1, 2, 2])), 3);
        assert_eq!(class_size(&tree(4, &[1, 1, 2])), 3);
        assert_eq!(class_size(&tree(4, &[1, 2, 3])), 6); // chain
    }

    #[test]
    fn class_sizes_partition_the_tree_family() {
        for n in 2..=7u32 {
            let total: u128 = enumerate_tr(n).unwrap().iter().map(|c| c.size).sum();
            assert_eq!(total, (n as u128).pow(n - 2), "n={n}");
        }
    }

    #[test]
    fn class_size_formula_matches_enumerated_sizes() {
        for n in 2..=6u32 {
            for class in enumerate_tr(n).unwrap() {
                assert_eq!(class.size, class_size(&class.tree));
            }
        }
    }

    #[test]
    fn representative_counts_match_closed_forms() {
        let expected_tr = [1u32, 2, 5, 14, 44, 157];
        let expected_tr0 = [1u32, 1, 2, 5, 15, 55];
        for (i, n) in (2..=7u32).enumerate() {
            let classes = enumerate_tr(n).unwrap();
            assert_eq!(classes.len() as u32, expected_tr[i], "tr n={n}");
            assert_eq!(count_tr(n), BigUint::from(expected_tr[i]), "count_tr n={n}");
            let zero: Vec<_> = classes.iter().filter(|c| in_t_n0(&c.tree)).collect();
            assert_eq!(zero.len() as u32, expected_tr0[i], "tr0 n={n}");
            assert_eq!(count_tr0(n), BigUint::from(expected_tr0[i]), "count_tr0 n={n}");
        }
    }

    #[test]
    fn closed_form_counts_reach_ten() {
        assert_eq!(count_tr(9), BigUint::from(2852u32));
        assert_eq!(count_tr(10), BigUint::from(14047u32));
        assert_eq!(count_tr0(8), BigUint::from(239u32));
        assert_eq!(count_tr0(9), BigUint::from(1169u32));
        assert_eq!(count_tr0(10), BigUint::from(6213u32));
    }

    #[test]
    fn t_n0_membership_examples() {
        assert!(in_t_n0(&tree(3, &[1, 1]))); // star
        assert!(!in_t_n0(&tree(3, &[1, 2]))); // chain
        assert!(in_t_n0(&tree(2, &[1]))); // single edge
        // Child under the largest sibling: excluded.
        assert!(!in_t_n0(&tree(4, &[1, 1, 3])));
        assert!(in_t_n0(&tree(4, &[1, 1, 2])));
    }

    #[test]
    fn class_membership_is_t_n0_invariant() {
        // Either every member of a class lies in the family or none does.
        for n in 2..=6u32 {
            let mut by_tree: HashMap<u64, u64> = HashMap::new();
            for t in enumerate_trees(n).unwrap() {
                by_tree.insert(t.edge_mask(), admissible_edges(&t).mask());
            }
            for class in enumerate_tr(n).unwrap() {
                let flag = in_t_n0(&class.tree);
                let perms = SlotPerms::fixing_root(n);
                for table in &perms.tables {
                    let f2 = apply_slot_perm(class.tree.edge_mask(), table);
                    let ad2 = apply_slot_perm(class.admissible.mask(), table);
                    if by_tree.get(&f2) == Some(&ad2) {
                        let member = RootedLabeledTree::from_edge_mask(n, f2).unwrap();
                        assert_eq!(in_t_n0(&member), flag);
                    }
                }
            }
        }
    }

    #[test]
    fn connected_counts_against_literature() {
        let expected = [1u64, 1, 4, 38, 728, 26704];
        for n in 1..=6u32 {
            assert_eq!(
                connected_labeled_graph_count(n),
                BigUint::from(expected[n as usize - 1])
            );
        }
        let _ = full_mask(6);
    }

    #[test]
    fn line_roundtrip() {
        let t = tree(4, &[1, 1, 2]);
        let ad = admissible_edges(&t);
        let line = t.to_line_with(&ad);
        assert_eq!(line, "n=4; parents=1,1,2; ad=2-3,3-4");
        let (t2, ad2) = RootedLabeledTree::parse_line(&line).unwrap();
        assert_eq!(t2, t);
        assert_eq!(ad2.unwrap(), ad);
    }

    #[test]
    fn scheme_soundness() {
        for t in enumerate_trees(5).unwrap() {
            let ad = admissible_edges(&t);
            assert!(scheme_mask_is_sound(&t, ad.mask()));
        }
    }
}
