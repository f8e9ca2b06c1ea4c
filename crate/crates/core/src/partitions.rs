//! Integer partitions in multiplicity-vector form.
//!
//! A vector `m = (m_1, ..., m_k)` encodes a partition through its part
//! multiplicities: `m_j` copies of part `j`, with weighted total
//! `sum j*m_j` fixed by the context.

use crate::error::{Error, Result};

/// Multiplicity vector of a partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartitionVector {
    components: Vec<u32>,
}

impl PartitionVector {
    pub fn new(components: Vec<u32>) -> Self {
        PartitionVector { components }
    }

    pub fn components(&self) -> &[u32] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Norm `||m|| = sum m_j`, the number of parts.
    pub fn norm(&self) -> u32 {
        self.components.iter().sum()
    }

    /// Weighted total `sum j*m_j`.
    pub fn weighted_total(&self) -> u32 {
        self.components
            .iter()
            .enumerate()
            .map(|(i, &m)| (i as u32 + 1) * m)
            .sum()
    }

    pub fn validate_nonempty(&self) -> Result<()> {
        if self.weighted_total() == 0 {
            Err(Error::EmptyPartitionVector)
        } else {
            Ok(())
        }
    }
}

/// Number of unordered partitions of `k`, with `p(0) = 1`.
pub fn partition_count(k: u32) -> u64 {
    // Bounded-parts DP: table[t] = #partitions of t into parts <= current j.
    let k = k as usize;
    let mut table = vec![0u64; k + 1];
    table[0] = 1;
    for j in 1..=k {
        for t in j..=k {
            table[t] += table[t - j];
        }
    }
    table[k]
}

/// All `(n-1)`-dimensional multiplicity vectors with `sum j*m_j = n-1`.
///
/// Emitted in a fixed order: the multiplicity of the smallest part runs
/// from its maximum down to zero before larger parts enter, so for n = 4
/// the list is (3,0,0), (1,1,0), (0,0,1).
pub fn partition_vectors(n: u32) -> Vec<PartitionVector> {
    assert!(n >= 2, "partition vectors need n >= 2");
    let dim = (n - 1) as usize;
    let mut out = Vec::new();
    let mut current = vec![0u32; dim];
    fill(&mut current, 0, n - 1, &mut out);
    out
}

fn fill(current: &mut Vec<u32>, part_index: usize, remaining: u32, out: &mut Vec<PartitionVector>) {
    if remaining == 0 {
        out.push(PartitionVector::new(current.clone()));
        return;
    }
    if part_index >= current.len() {
        return;
    }
    let part = part_index as u32 + 1;
    let max_count = remaining / part;
    for count in (0..=max_count).rev() {
        current[part_index] = count;
        fill(current, part_index + 1, remaining - count * part, out);
    }
    current[part_index] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        assert_eq!(partition_count(0), 1);
        assert_eq!(partition_count(3), 3);
        assert_eq!(partition_count(9), 30);
        assert_eq!(partition_count(10), 42);
    }

    #[test]
    fn vectors_for_small_n() {
        let v2 = partition_vectors(2);
        assert_eq!(v2.len(), 1);
        assert_eq!(v2[0].components(), &[1]);

        let v4 = partition_vectors(4);
        let comps: Vec<&[u32]> = v4.iter().map(|m| m.components()).collect();
        assert_eq!(comps, vec![&[3, 0, 0][..], &[1, 1, 0], &[0, 0, 1]]);
    }

    #[test]
    fn vector_count_is_partition_count() {
        for n in 2..=11 {
            assert_eq!(partition_vectors(n).len() as u64, partition_count(n - 1));
        }
        // Remark-level check: 30 vectors at n = 10.
        assert_eq!(partition_vectors(10).len(), 30);
    }

    #[test]
    fn weighted_totals_and_norms() {
        for n in 2..=10 {
            for m in partition_vectors(n) {
                assert_eq!(m.weighted_total(), n - 1);
                assert!(m.norm() <= n - 1);
                assert!(m.validate_nonempty().is_ok());
            }
        }
        assert!(PartitionVector::new(vec![0, 0]).validate_nonempty().is_err());
    }
}
