//! Builders for the coefficient representations as basic linear
//! combinations: connected-graph sums, block sums, tree sums, the
//! Ree-Hoover expansion, and ingestion of externally supplied frame
//! sums.

use crate::error::{Error, Result};
use crate::graph::{
    apply_slot_perm, biconnected_mask, connected_mask, full_mask, mask_to_edges, Edge,
    MarkedGraph, SlotPerms,
};
use crate::trees::{enumerate_tr, in_t_n0, MAX_CLASS_ORDER};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Largest order for the explicit connected/block sums.
pub const MAX_GRAPH_SUM_ORDER: u32 = 6;

/// Largest order for the Ree-Hoover construction (subset lattice 2^21).
pub const MAX_REE_HOOVER_ORDER: u32 = 7;

/// Which construction produced a combination.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    MayerConnected,
    VirialBlocks,
    TreeMayer,
    TreeActivityRatio,
    ReeHoover,
    FrameSum,
}

impl Provenance {
    pub fn as_str(&self) -> &'static str {
        match self {
            Provenance::MayerConnected => "mayer-connected",
            Provenance::VirialBlocks => "virial-blocks",
            Provenance::TreeMayer => "tree-b",
            Provenance::TreeActivityRatio => "tree-a",
            Provenance::ReeHoover => "ree-hoover",
            Provenance::FrameSum => "frame-sum",
        }
    }
}

/// One weighted basic integral.
#[derive(Debug, Clone)]
pub struct BlcTerm {
    pub coefficient: BigRational,
    pub graph: MarkedGraph,
}

/// Ordered list of rational-weighted basic integrals of one order,
/// together with a symbolic scalar prefactor.
#[derive(Debug, Clone)]
pub struct BasicLinearCombination {
    order: u32,
    prefactor: BigRational,
    terms: Vec<BlcTerm>,
    provenance: Provenance,
}

impl BasicLinearCombination {
    pub fn new(
        order: u32,
        prefactor: BigRational,
        terms: Vec<BlcTerm>,
        provenance: Provenance,
    ) -> Result<Self> {
        for term in &terms {
            if term.graph.order() != order {
                return Err(Error::OrderMismatch {
                    left: term.graph.order(),
                    right: order,
                });
            }
            if !term.graph.is_basic() {
                return Err(Error::NonBasicGraph);
            }
        }
        Ok(BasicLinearCombination {
            order,
            prefactor,
            terms,
            provenance,
        })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn prefactor(&self) -> &BigRational {
        &self.prefactor
    }

    pub fn terms(&self) -> &[BlcTerm] {
        &self.terms
    }

    /// Length `q`: the number of integrals in the combination.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn to_json(&self) -> serde_json::Value {
        let edge_strings = |edges: Vec<Edge>| -> Vec<String> {
            edges.iter().map(|e| e.to_string()).collect()
        };
        serde_json::json!({
            "order": self.order,
            "provenance": self.provenance.as_str(),
            "prefactor": rational_json(&self.prefactor),
            "terms": self.terms.iter().map(|t| serde_json::json!({
                "coeff": rational_json(&t.coefficient),
                "f": edge_strings(t.graph.mayer_edges()),
                "ft": edge_strings(t.graph.boltzmann_edges()),
            })).collect::<Vec<_>>(),
        })
    }
}

pub fn rational_json(r: &BigRational) -> serde_json::Value {
    serde_json::json!({
        "num": r.numer().to_string(),
        "den": r.denom().to_string(),
    })
}

fn factorial_rational(k: u32) -> BigRational {
    let mut acc = BigInt::one();
    for i in 2..=k {
        acc *= BigInt::from(i);
    }
    BigRational::from_integer(acc)
}

fn check_order(what: &'static str, n: u32, max: u32) -> Result<()> {
    if !(2..=max).contains(&n) {
        return Err(Error::OrderOutOfRange {
            what,
            order: n,
            min: 2,
            max,
        });
    }
    Ok(())
}

/// Mayer coefficient sum: one unit term per connected labeled graph,
/// all edges mayer, prefactor `1/n!`.
pub fn mayer_bn_blc(n: u32) -> Result<BasicLinearCombination> {
    check_order("connected-graph sum", n, MAX_GRAPH_SUM_ORDER)?;
    let mut terms = Vec::new();
    for mask in 0..=full_mask(n) {
        if connected_mask(n, mask) {
            terms.push(BlcTerm {
                coefficient: BigRational::one(),
                graph: MarkedGraph::from_masks(n, mask, 0)?,
            });
        }
    }
    let prefactor = BigRational::one() / factorial_rational(n);
    BasicLinearCombination::new(n, prefactor, terms, Provenance::MayerConnected)
}

/// Virial coefficient block sum: one unit term per labeled biconnected
/// graph, prefactor `-(n-1)/n!`.
pub fn virial_block_blc(n: u32) -> Result<BasicLinearCombination> {
    check_order("block sum", n, MAX_GRAPH_SUM_ORDER)?;
    let mut terms = Vec::new();
    for mask in 0..=full_mask(n) {
        if biconnected_mask(n, mask) {
            terms.push(BlcTerm {
                coefficient: BigRational::one(),
                graph: MarkedGraph::from_masks(n, mask, 0)?,
            });
        }
    }
    let prefactor = -BigRational::from_integer(BigInt::from(n - 1)) / factorial_rational(n);
    BasicLinearCombination::new(n, prefactor, terms, Provenance::VirialBlocks)
}

/// Tree-sum representation of the Mayer coefficient: one term per
/// class representative, weighted by the class size, tree edges mayer
/// and admissible edges boltzmann, prefactor `1/n!`.
pub fn tree_sum_bn_blc(n: u32) -> Result<BasicLinearCombination> {
    check_order("tree sum", n, MAX_CLASS_ORDER)?;
    let mut terms = Vec::new();
    for class in enumerate_tr(n)? {
        terms.push(BlcTerm {
            coefficient: BigRational::from_integer(BigInt::from(class.size)),
            graph: MarkedGraph::from_masks(n, class.tree.edge_mask(), class.admissible.mask())?,
        });
    }
    let prefactor = BigRational::one() / factorial_rational(n);
    BasicLinearCombination::new(n, prefactor, terms, Provenance::TreeMayer)
}

/// Tree-sum representation of the activity-ratio coefficient: the
/// subset of `tree_sum_bn_blc` whose trees satisfy the layer rules.
pub fn tree_sum_an_blc(n: u32) -> Result<BasicLinearCombination> {
    check_order("tree sum", n, MAX_CLASS_ORDER)?;
    let mut terms = Vec::new();
    for class in enumerate_tr(n)? {
        if !in_t_n0(&class.tree) {
            continue;
        }
        terms.push(BlcTerm {
            coefficient: BigRational::from_integer(BigInt::from(class.size)),
            graph: MarkedGraph::from_masks(n, class.tree.edge_mask(), class.admissible.mask())?,
        });
    }
    let prefactor = BigRational::one() / factorial_rational(n);
    BasicLinearCombination::new(n, prefactor, terms, Provenance::TreeActivityRatio)
}

/// Labeled Ree-Hoover terms: for every mayer edge subset `E` of the
/// complete graph, the signed count of spanning biconnected subgraphs
/// inside `E`, kept when nonzero. The complement of `E` carries the
/// boltzmann edges.
///
/// Coefficients come from an in-place subset Moebius transform of the
/// biconnectivity indicator over the edge-subset lattice.
pub fn ree_hoover_labeled(n: u32) -> Result<Vec<(i64, MarkedGraph)>> {
    check_order("ree-hoover expansion", n, MAX_REE_HOOVER_ORDER)?;
    let slots = crate::graph::pair_count(n);
    let size = 1usize << slots;
    let mut coeffs: Vec<i64> = Vec::with_capacity(size);
    for mask in 0..size as u64 {
        coeffs.push(i64::from(biconnected_mask(n, mask)));
    }
    // Subset Moebius transform: c[E] = sum_{F subset E} (-1)^{|E\F|} b[F].
    for bit in 0..slots {
        let step = 1usize << bit;
        for mask in 0..size {
            if mask & step != 0 {
                coeffs[mask] -= coeffs[mask ^ step];
            }
        }
    }
    let complete = full_mask(n);
    let mut terms = Vec::new();
    for (mask, &c) in coeffs.iter().enumerate() {
        if c != 0 {
            let graph = MarkedGraph::from_masks(n, mask as u64, complete ^ mask as u64)?;
            terms.push((c, graph));
        }
    }
    Ok(terms)
}

/// Ree-Hoover combination with one term per topologically distinct
/// diagram: labeled terms of one isomorphism class share a coefficient
/// and an integral, so the grouped coefficient is the labeled
/// coefficient times the class cardinality. Prefactor `-(n-1)/n!`.
pub fn ree_hoover_blc(n: u32) -> Result<BasicLinearCombination> {
    let labeled = ree_hoover_labeled(n)?;
    let perms = SlotPerms::all(n);
    let mut index_of: std::collections::HashMap<u64, i64> = labeled
        .iter()
        .map(|(c, g)| (g.mayer_mask(), *c))
        .collect();
    let mut terms = Vec::new();
    let complete = full_mask(n);
    // Ascending labeled masks; the first unclaimed mask opens its class.
    let mut masks: Vec<u64> = index_of.keys().copied().collect();
    masks.sort_unstable();
    let mut claimed: std::collections::HashSet<u64> = std::collections::HashSet::new();
    for &mask in &masks {
        if claimed.contains(&mask) {
            continue;
        }
        let c = index_of[&mask];
        let mut orbit: Vec<u64> = perms
            .tables
            .iter()
            .map(|table| apply_slot_perm(mask, table))
            .collect();
        orbit.sort_unstable();
        orbit.dedup();
        for &m in &orbit {
            debug_assert_eq!(index_of.get(&m), Some(&c));
            claimed.insert(m);
        }
        let coefficient =
            BigRational::from_integer(BigInt::from(c) * BigInt::from(orbit.len() as u64));
        terms.push(BlcTerm {
            coefficient,
            graph: MarkedGraph::from_masks(n, mask, complete ^ mask)?,
        });
    }
    index_of.clear();
    let prefactor = -BigRational::from_integer(BigInt::from(n - 1)) / factorial_rational(n);
    BasicLinearCombination::new(n, prefactor, terms, Provenance::ReeHoover)
}

/// Externally supplied frame-sum data: per ensemble, the edge set of
/// the cycle union and the admissible edge set.
#[derive(Debug, Clone)]
pub struct FrameSumRecord {
    order: u32,
    entries: Vec<(u64, u64)>,
}

impl FrameSumRecord {
    /// Validates and stores the entries. Each cycle union must be
    /// biconnected on the full vertex set, disjoint from its admissible
    /// set, and every admissible edge must join vertices that are not
    /// adjacent in the cycle union.
    pub fn new(order: u32, entries: Vec<(Vec<Edge>, Vec<Edge>)>) -> Result<Self> {
        if order < 2 || order > crate::graph::MAX_ORDER {
            return Err(Error::OrderOutOfRange {
                what: "frame record",
                order,
                min: 2,
                max: crate::graph::MAX_ORDER,
            });
        }
        let mut packed = Vec::with_capacity(entries.len());
        for (idx, (cycle_edges, ad_edges)) in entries.iter().enumerate() {
            let s_mask = crate::graph::edges_to_mask(order, cycle_edges)
                .map_err(|e| Error::InvalidFrameRecord(format!("entry {}: {e}", idx + 1)))?;
            let ad_mask = crate::graph::edges_to_mask(order, ad_edges)
                .map_err(|e| Error::InvalidFrameRecord(format!("entry {}: {e}", idx + 1)))?;
            if s_mask & ad_mask != 0 {
                return Err(Error::InvalidFrameRecord(format!(
                    "entry {}: admissible set shares an edge with the cycle union",
                    idx + 1
                )));
            }
            if !biconnected_mask(order, s_mask) {
                return Err(Error::InvalidFrameRecord(format!(
                    "entry {}: cycle union is not biconnected on the full vertex set",
                    idx + 1
                )));
            }
            // Vertex cover follows from biconnectivity, but record data
            // is untrusted; keep the explicit check.
            MarkedGraph::from_masks(order, s_mask, ad_mask)
                .map_err(|e| Error::InvalidFrameRecord(format!("entry {}: {e}", idx + 1)))?;
            packed.push((s_mask, ad_mask));
        }
        Ok(FrameSumRecord {
            order,
            entries: packed,
        })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Parses the line format `n=<int>; s=<i-j,...>; ad=<i-j,...>`,
    /// one ensemble per line; blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut order: Option<u32> = None;
        let mut entries = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut n = None;
            let mut s_edges = None;
            let mut ad_edges = None;
            for field in line.split(';') {
                let field = field.trim();
                if field.is_empty() {
                    continue;
                }
                let (key, value) = field.split_once('=').ok_or_else(|| {
                    Error::Parse(format!("line {}: expected key=value", lineno + 1))
                })?;
                match key.trim() {
                    "n" => {
                        n = Some(value.trim().parse::<u32>().map_err(|e| {
                            Error::Parse(format!("line {}: bad order: {e}", lineno + 1))
                        })?)
                    }
                    "s" => s_edges = Some(crate::graph::parse_edge_list(value)?),
                    "ad" => ad_edges = Some(crate::graph::parse_edge_list(value)?),
                    other => {
                        return Err(Error::Parse(format!(
                            "line {}: unknown field `{other}`",
                            lineno + 1
                        )))
                    }
                }
            }
            let n = n.ok_or_else(|| Error::Parse(format!("line {}: missing n=", lineno + 1)))?;
            match order {
                None => order = Some(n),
                Some(expected) if expected != n => {
                    return Err(Error::InvalidFrameRecord(format!(
                        "line {}: order {n} differs from {expected}",
                        lineno + 1
                    )))
                }
                _ => {}
            }
            entries.push((
                s_edges.ok_or_else(|| Error::Parse(format!("line {}: missing s=", lineno + 1)))?,
                ad_edges
                    .ok_or_else(|| Error::Parse(format!("line {}: missing ad=", lineno + 1)))?,
            ));
        }
        let order = order.ok_or_else(|| Error::Parse("no ensembles in input".into()))?;
        FrameSumRecord::new(order, entries)
    }
}

/// Frame-sum combination: unit coefficients, prefactor `-(n-1)/n!`.
/// Every term is basic because its mayer subgraph is biconnected.
pub fn load_frame_sum(record: &FrameSumRecord) -> Result<BasicLinearCombination> {
    let n = record.order();
    let terms = record
        .entries
        .iter()
        .map(|&(s, ad)| {
            Ok(BlcTerm {
                coefficient: BigRational::one(),
                graph: MarkedGraph::from_masks(n, s, ad)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let prefactor = -BigRational::from_integer(BigInt::from(n - 1)) / factorial_rational(n);
    BasicLinearCombination::new(n, prefactor, terms, Provenance::FrameSum)
}

/// Reference lengths of the frame-sum rows, shipped data for the
/// complexity tables; the ensembles themselves are external inputs.
pub const FRAME_SUM_REFERENCE_LENGTHS: [(u32, u64); 5] =
    [(2, 1), (3, 1), (4, 5), (5, 49), (6, 784)];

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn e(a: u32, b: u32) -> Edge {
        Edge::new(a, b).unwrap()
    }

    #[test]
    fn connected_sum_lengths() {
        assert_eq!(mayer_bn_blc(2).unwrap().len(), 1);
        assert_eq!(mayer_bn_blc(3).unwrap().len(), 4);
        assert_eq!(mayer_bn_blc(4).unwrap().len(), 38);
        assert!(mayer_bn_blc(7).is_err());
    }

    #[test]
    fn block_sum_lengths() {
        assert_eq!(virial_block_blc(2).unwrap().len(), 1);
        assert_eq!(virial_block_blc(3).unwrap().len(), 1);
        assert_eq!(virial_block_blc(4).unwrap().len(), 10);
        let b3 = virial_block_blc(3).unwrap();
        assert_eq!(
            b3.prefactor(),
            &(-BigRational::from_integer(BigInt::from(2))
                / BigRational::from_integer(BigInt::from(6)))
        );
    }

    #[test]
    fn tree_sum_terms_for_three_vertices() {
        let blc = tree_sum_bn_blc(3).unwrap();
        assert_eq!(blc.len(), 2);
        // One class of size 1 (the star, with its sibling boltzmann
        // pair) and one of size 2 (the chains).
        let mut coeffs: Vec<i64> = blc
            .terms()
            .iter()
            .map(|t| t.coefficient.to_integer().to_i64().unwrap())
            .collect();
        coeffs.sort_unstable();
        assert_eq!(coeffs, vec![1, 2]);
        let star = blc
            .terms()
            .iter()
            .find(|t| t.coefficient.is_one())
            .unwrap();
        assert_eq!(star.graph.boltzmann_edges(), vec![e(2, 3)]);
    }

    #[test]
    fn tree_sum_lengths_match_class_counts() {
        assert_eq!(tree_sum_bn_blc(7).unwrap().len(), 157);
        assert_eq!(tree_sum_an_blc(6).unwrap().len(), 15);
        // The two coefficient families coincide at order two.
        let b = tree_sum_bn_blc(2).unwrap();
        let a = tree_sum_an_blc(2).unwrap();
        assert_eq!(b.len(), a.len());
        assert_eq!(
            b.terms()[0].graph.mayer_mask(),
            a.terms()[0].graph.mayer_mask()
        );
    }

    #[test]
    fn activity_tree_sum_for_three_vertices_is_the_star() {
        let blc = tree_sum_an_blc(3).unwrap();
        assert_eq!(blc.len(), 1);
        assert_eq!(blc.terms()[0].graph.boltzmann_edges(), vec![e(2, 3)]);
    }

    #[test]
    fn tree_sum_has_exactly_one_complete_term() {
        for n in 3..=6u32 {
            let blc = tree_sum_bn_blc(n).unwrap();
            let complete = blc.terms().iter().filter(|t| t.graph.is_complete()).count();
            assert_eq!(complete, 1, "n={n}");
        }
    }

    #[test]
    fn ree_hoover_diagram_counts() {
        let expected = [(2u32, 1usize), (3, 1), (4, 2), (5, 5), (6, 23)];
        for (n, count) in expected {
            assert_eq!(ree_hoover_blc(n).unwrap().len(), count, "n={n}");
        }
        assert!(ree_hoover_blc(8).is_err());
    }

    #[test]
    fn ree_hoover_terms_are_complete() {
        for n in 2..=5u32 {
            for term in ree_hoover_blc(n).unwrap().terms() {
                assert!(term.graph.is_complete());
                assert!(term.graph.is_basic());
            }
        }
    }

    #[test]
    fn ree_hoover_triangle_is_bare() {
        let blc = ree_hoover_blc(3).unwrap();
        assert_eq!(blc.len(), 1);
        let term = &blc.terms()[0];
        assert_eq!(term.graph.mayer_mask(), full_mask(3));
        assert_eq!(term.graph.boltzmann_mask(), 0);
        assert!(term.coefficient.is_one());
    }

    #[test]
    fn ree_hoover_grouped_coefficients_at_four() {
        // Labeled: three 4-cycles at +1 and the complete graph at -2.
        let blc = ree_hoover_blc(4).unwrap();
        let mut coeffs: Vec<i64> = blc
            .terms()
            .iter()
            .map(|t| t.coefficient.to_integer().to_i64().unwrap())
            .collect();
        coeffs.sort_unstable();
        assert_eq!(coeffs, vec![-2, 3]);
    }

    #[test]
    fn frame_record_validation() {
        // A triangle with an empty admissible set is accepted.
        let record = FrameSumRecord::parse("n=3; s=1-2,2-3,1-3; ad=").unwrap();
        let blc = load_frame_sum(&record).unwrap();
        assert_eq!(blc.len(), 1);
        assert_eq!(blc.provenance(), Provenance::FrameSum);

        // A path is not biconnected.
        assert!(matches!(
            FrameSumRecord::parse("n=3; s=1-2,2-3; ad="),
            Err(Error::InvalidFrameRecord(_))
        ));
        // Overlap between the sets is rejected.
        assert!(FrameSumRecord::parse("n=3; s=1-2,2-3,1-3; ad=1-2").is_err());
        // Mixed orders are rejected.
        assert!(FrameSumRecord::parse("n=3; s=1-2,2-3,1-3; ad=\nn=4; s=1-2,2-3,3-4,1-4; ad=").is_err());
    }

    #[test]
    fn frame_record_with_admissible_edges() {
        let record = FrameSumRecord::parse("n=4; s=1-2,2-3,3-4,1-4; ad=1-3,2-4").unwrap();
        let blc = load_frame_sum(&record).unwrap();
        assert_eq!(blc.len(), 1);
        assert_eq!(blc.terms()[0].graph.n1_complexity().unwrap(), 3);
    }

    #[test]
    fn blc_json_shape() {
        let blc = tree_sum_an_blc(3).unwrap();
        let json = blc.to_json();
        assert_eq!(json["order"], 3);
        assert_eq!(json["prefactor"]["den"], "6");
        assert_eq!(json["terms"][0]["f"][0], "1-2");
        assert_eq!(json["terms"][0]["ft"][0], "2-3");
    }
}
