//! Exact multilinear polynomials over edge indeterminates.
//!
//! A monomial is a product of mayer functions over an edge subset,
//! encoded as a slot bitmask; boltzmann factors expand as `1 + f`.
//! These polynomials are the independent oracle for the representation
//! identities: two integral representations of one coefficient must
//! produce identical integrands once every boltzmann edge is expanded.

use crate::blc::BasicLinearCombination;
use crate::error::{Error, Result};
use crate::graph::{connected_mask, full_mask, MarkedGraph};
use crate::trees::{admissible_edges, enumerate_trees};
use num_traits::Signed;
use std::collections::HashMap;

/// Largest boltzmann edge count accepted by `expand_term`.
pub const MAX_EXPANSION_EDGES: u32 = 24;

/// Largest order for the tree and partition identities.
pub const MAX_TREE_IDENTITY_ORDER: u32 = 6;

/// Largest order for the Ree-Hoover identity.
pub const MAX_RH_IDENTITY_ORDER: u32 = 5;

/// Multilinear polynomial in the pair-slot indeterminates.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FormalPolynomial {
    order: u32,
    coeffs: HashMap<u64, i64>,
}

impl FormalPolynomial {
    pub fn zero(order: u32) -> Self {
        FormalPolynomial {
            order,
            coeffs: HashMap::new(),
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coefficient(&self, mask: u64) -> i64 {
        self.coeffs.get(&mask).copied().unwrap_or(0)
    }

    pub fn add_monomial(&mut self, mask: u64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.coeffs.entry(mask).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.coeffs.remove(&mask);
        }
    }

    pub fn add_assign(&mut self, other: &FormalPolynomial) {
        for (&mask, &c) in &other.coeffs {
            self.add_monomial(mask, c);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.coeffs.iter().map(|(&m, &c)| (m, c))
    }

    /// Numeric evaluation with the slot-indexed mayer values.
    pub fn evaluate(&self, values: &[f64]) -> f64 {
        let mut total = 0.0;
        for (&mask, &c) in &self.coeffs {
            let mut prod = c as f64;
            let mut m = mask;
            while m != 0 {
                let slot = m.trailing_zeros() as usize;
                m &= m - 1;
                prod *= values[slot];
            }
            total += prod;
        }
        total
    }
}

/// Expands the basic product of a marked graph: the mayer edges stay as
/// a single monomial factor, each boltzmann edge contributes `1 + f`.
pub fn expand_term(graph: &MarkedGraph) -> Result<FormalPolynomial> {
    if !graph.is_basic() {
        return Err(Error::NonBasicGraph);
    }
    let ft = graph.boltzmann_mask();
    let k = ft.count_ones();
    if k > MAX_EXPANSION_EDGES {
        return Err(Error::ExpansionBudget { edges: k });
    }
    let mut poly = FormalPolynomial::zero(graph.order());
    // Enumerate subsets of the boltzmann mask.
    let f = graph.mayer_mask();
    let mut sub = ft;
    loop {
        poly.add_monomial(f | sub, 1);
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & ft;
    }
    Ok(poly)
}

/// Linear extension over the terms of a combination, scalar prefactor
/// excluded. Coefficients must be exact integers.
pub fn expand_blc(blc: &BasicLinearCombination) -> Result<FormalPolynomial> {
    let mut poly = FormalPolynomial::zero(blc.order());
    for term in blc.terms() {
        if !term.coefficient.is_integer() {
            return Err(Error::NonIntegerCoefficient);
        }
        let c = term.coefficient.numer();
        if c.abs() > num_bigint::BigInt::from(i64::MAX) {
            return Err(Error::NonIntegerCoefficient);
        }
        let c = i64::try_from(c.clone()).map_err(|_| Error::NonIntegerCoefficient)?;
        let expansion = expand_term(&term.graph)?;
        for (mask, coeff) in expansion.iter() {
            poly.add_monomial(mask, coeff.checked_mul(c).ok_or(Error::NonIntegerCoefficient)?);
        }
    }
    Ok(poly)
}

/// Outcome of an exact polynomial comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub equal: bool,
    /// Lowest differing monomial with both coefficients, when unequal.
    pub witness: Option<(u64, i64, i64)>,
}

/// Exact equality with the lowest differing monomial as witness.
pub fn verify_identity(lhs: &FormalPolynomial, rhs: &FormalPolynomial) -> Result<IdentityCheck> {
    if lhs.order() != rhs.order() {
        return Err(Error::OrderMismatch {
            left: lhs.order(),
            right: rhs.order(),
        });
    }
    let mut masks: Vec<u64> = lhs
        .iter()
        .map(|(m, _)| m)
        .chain(rhs.iter().map(|(m, _)| m))
        .collect();
    masks.sort_unstable();
    masks.dedup();
    for mask in masks {
        let (a, b) = (lhs.coefficient(mask), rhs.coefficient(mask));
        if a != b {
            return Ok(IdentityCheck {
                equal: false,
                witness: Some((mask, a, b)),
            });
        }
    }
    Ok(IdentityCheck {
        equal: true,
        witness: None,
    })
}

/// Sum of the expansions of every labeled tree with its admissible set.
pub fn all_trees_polynomial(n: u32) -> Result<FormalPolynomial> {
    if n > MAX_TREE_IDENTITY_ORDER {
        return Err(Error::OrderOutOfRange {
            what: "tree identity",
            order: n,
            min: 2,
            max: MAX_TREE_IDENTITY_ORDER,
        });
    }
    let mut poly = FormalPolynomial::zero(n);
    for tree in enumerate_trees(n)? {
        let ad = admissible_edges(&tree);
        let graph = MarkedGraph::from_masks(n, tree.edge_mask(), ad.mask())?;
        poly.add_assign(&expand_term(&graph)?);
    }
    Ok(poly)
}

/// Sum of the bare mayer monomials of all connected labeled graphs.
pub fn connected_graphs_polynomial(n: u32) -> Result<FormalPolynomial> {
    if n > MAX_TREE_IDENTITY_ORDER {
        return Err(Error::OrderOutOfRange {
            what: "tree identity",
            order: n,
            min: 2,
            max: MAX_TREE_IDENTITY_ORDER,
        });
    }
    let mut poly = FormalPolynomial::zero(n);
    for mask in 0..=full_mask(n) {
        if connected_mask(n, mask) {
            poly.add_monomial(mask, 1);
        }
    }
    Ok(poly)
}

/// Sum of the bare mayer monomials of all biconnected labeled graphs.
pub fn block_polynomial(n: u32) -> Result<FormalPolynomial> {
    if n > MAX_TREE_IDENTITY_ORDER {
        return Err(Error::OrderOutOfRange {
            what: "block sum",
            order: n,
            min: 2,
            max: MAX_TREE_IDENTITY_ORDER,
        });
    }
    let mut poly = FormalPolynomial::zero(n);
    for mask in 0..=full_mask(n) {
        if crate::graph::biconnected_mask(n, mask) {
            poly.add_monomial(mask, 1);
        }
    }
    Ok(poly)
}

/// The tree identity: the all-trees expansion equals the connected sum.
pub fn tree_identity(n: u32) -> Result<IdentityCheck> {
    verify_identity(&all_trees_polynomial(n)?, &connected_graphs_polynomial(n)?)
}

/// The Ree-Hoover identity: the signed full-graph expansion equals the
/// biconnected block sum, at the labeled level.
pub fn rh_identity(n: u32) -> Result<IdentityCheck> {
    if n > MAX_RH_IDENTITY_ORDER {
        return Err(Error::OrderOutOfRange {
            what: "ree-hoover identity",
            order: n,
            min: 2,
            max: MAX_RH_IDENTITY_ORDER,
        });
    }
    let mut lhs = FormalPolynomial::zero(n);
    for (coeff, graph) in crate::blc::ree_hoover_labeled(n)? {
        let expansion = expand_term(&graph)?;
        for (mask, c) in expansion.iter() {
            lhs.add_monomial(mask, c * coeff);
        }
    }
    verify_identity(&lhs, &block_polynomial(n)?)
}

/// Report of the partition identity checks.
#[derive(Debug, Clone)]
pub struct PartitionIdentityReport {
    /// The all-trees expansion equals the connected-graph sum exactly.
    pub labeled_equal: bool,
    /// The class-reduced sum matches the all-trees sum once monomials
    /// are aggregated per isomorphism class of their support graph.
    pub class_equal: bool,
    pub witness: Option<(u64, i64, i64)>,
}

impl PartitionIdentityReport {
    pub fn holds(&self) -> bool {
        self.labeled_equal && self.class_equal
    }
}

/// Verifies that the admissible-edge scheme partitions the connected
/// graphs, and that the class reduction preserves the sum.
///
/// The class-reduced sum multiplies each representative's expansion by
/// its class size; member expansions are relabelings of the
/// representative's, so the comparison aggregates monomials by the
/// canonical form of their support graph.
pub fn partition_identity_check(n: u32) -> Result<PartitionIdentityReport> {
    let labeled = tree_identity(n)?;
    let all = all_trees_polynomial(n)?;
    let reduced: Vec<(u128, FormalPolynomial)> = crate::trees::enumerate_tr(n)?
        .into_iter()
        .map(|class| {
            let graph =
                MarkedGraph::from_masks(n, class.tree.edge_mask(), class.admissible.mask())?;
            Ok((class.size, expand_term(&graph)?))
        })
        .collect::<Result<_>>()?;

    let mut canon_cache: HashMap<u64, crate::graph::CanonicalKey> = HashMap::new();
    let mut canon = |mask: u64| -> Result<crate::graph::CanonicalKey> {
        if let Some(key) = canon_cache.get(&mask) {
            return Ok(key.clone());
        }
        let key = MarkedGraph::from_masks(n, mask, 0)?.canonical_form()?;
        canon_cache.insert(mask, key.clone());
        Ok(key)
    };

    let mut lhs_classes: HashMap<crate::graph::CanonicalKey, i64> = HashMap::new();
    for (mask, c) in all.iter() {
        *lhs_classes.entry(canon(mask)?).or_insert(0) += c;
    }
    let mut rhs_classes: HashMap<crate::graph::CanonicalKey, i64> = HashMap::new();
    for (size, poly) in &reduced {
        for (mask, c) in poly.iter() {
            *rhs_classes.entry(canon(mask)?).or_insert(0) += c * (*size as i64);
        }
    }
    lhs_classes.retain(|_, c| *c != 0);
    rhs_classes.retain(|_, c| *c != 0);

    Ok(PartitionIdentityReport {
        labeled_equal: labeled.equal,
        class_equal: lhs_classes == rhs_classes,
        witness: labeled.witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{edge_slot, Edge};

    fn e(a: u32, b: u32) -> Edge {
        Edge::new(a, b).unwrap()
    }

    #[test]
    fn expansion_of_single_boltzmann_edge() {
        // f12*f13*(1 + f23) -> f12*f13 + f12*f13*f23
        let g1 = MarkedGraph::new(3, &[e(1, 2), e(1, 3)], &[e(2, 3)]).unwrap();
        let poly = expand_term(&g1).unwrap();
        assert_eq!(poly.term_count(), 2);
        let base = (1 << edge_slot(1, 2)) | (1 << edge_slot(1, 3));
        assert_eq!(poly.coefficient(base), 1);
        assert_eq!(poly.coefficient(base | (1 << edge_slot(2, 3))), 1);
    }

    #[test]
    fn expansion_of_pure_mayer_graph() {
        let g = MarkedGraph::new(3, &[e(1, 2), e(2, 3)], &[]).unwrap();
        let poly = expand_term(&g).unwrap();
        assert_eq!(poly.term_count(), 1);
        assert_eq!(
            poly.coefficient((1 << edge_slot(1, 2)) | (1 << edge_slot(2, 3))),
            1
        );
    }

    #[test]
    fn root_star_expansion_size() {
        // Star on 4 vertices: three admissible sibling pairs, 2^3 monomials.
        let tree = crate::trees::RootedLabeledTree::new(4, vec![1, 1, 1]).unwrap();
        let ad = admissible_edges(&tree);
        let g = MarkedGraph::from_masks(4, tree.edge_mask(), ad.mask()).unwrap();
        assert_eq!(expand_term(&g).unwrap().term_count(), 8);
    }

    #[test]
    fn numeric_cross_check_against_direct_product() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(7);
        let g = MarkedGraph::new(4, &[e(1, 2), e(1, 3), e(1, 4)], &[e(2, 3), e(3, 4)]).unwrap();
        let poly = expand_term(&g).unwrap();
        for _ in 0..10 {
            let values: Vec<f64> = (0..6).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let direct: f64 = g
                .mayer_edges()
                .iter()
                .map(|edge| values[edge.slot() as usize])
                .product::<f64>()
                * g.boltzmann_edges()
                    .iter()
                    .map(|edge| 1.0 + values[edge.slot() as usize])
                    .product::<f64>();
            let expanded = poly.evaluate(&values);
            assert!((direct - expanded).abs() < 1e-12);
        }
    }

    #[test]
    fn tree_identity_small_orders() {
        for n in 3..=5u32 {
            let check = tree_identity(n).unwrap();
            assert!(check.equal, "n={n}, witness {:?}", check.witness);
        }
    }

    #[test]
    fn tree_identity_matches_connected_monomial_count() {
        let all = all_trees_polynomial(4).unwrap();
        assert_eq!(all.term_count(), 38);
    }

    #[test]
    fn blocks_differ_from_connected_sum() {
        let blocks = block_polynomial(3).unwrap();
        let connected = connected_graphs_polynomial(3).unwrap();
        let check = verify_identity(&blocks, &connected).unwrap();
        assert!(!check.equal);
        let (mask, left, right) = check.witness.unwrap();
        // Witness is the lowest tree monomial, absent from the block sum.
        assert_eq!(mask, (1 << edge_slot(1, 2)) | (1 << edge_slot(1, 3)));
        assert_eq!((left, right), (0, 1));
    }

    #[test]
    fn order_mismatch_rejected() {
        let a = FormalPolynomial::zero(3);
        let b = FormalPolynomial::zero(4);
        assert!(verify_identity(&a, &b).is_err());
    }

    #[test]
    fn partition_identity_small_orders() {
        for n in 3..=5u32 {
            let report = partition_identity_check(n).unwrap();
            assert!(report.holds(), "n={n}: {report:?}");
        }
    }

    #[test]
    fn zero_polynomial_from_empty_expansion() {
        let poly = FormalPolynomial::zero(3);
        assert_eq!(poly.term_count(), 0);
        assert_eq!(poly.evaluate(&[1.0, 1.0, 1.0]), 0.0);
    }
}
