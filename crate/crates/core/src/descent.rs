//! Descendants of basis indexes.
//!
//! The descent graph has an edge `i -> j` whenever `e_j` occurs in `e_i^2`
//! (`w_ji != 0`). `D^m(i)` is the set of endpoints of walks of length exactly
//! `m` from `i`, and `D(i)` is the union over all `m >= 1`. In particular `i`
//! belongs to `D(i)` only when it lies on a cycle.

use std::collections::VecDeque;

use crate::algebra::{EvolutionAlgebra, IndexSet};
use crate::error::{check_index, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentGraph {
    n: usize,
    out_edges: Vec<Vec<usize>>,
}

impl DescentGraph {
    pub fn new(algebra: &EvolutionAlgebra) -> Self {
        let n = algebra.dim();
        let out_edges = (0..n).map(|i| algebra.column(i).iter().map(|(k, _)| *k).collect()).collect();
        DescentGraph { n, out_edges }
    }

    /// Graph from explicit adjacency lists (targets are sorted and deduped).
    pub fn from_edges(n: usize, mut out_edges: Vec<Vec<usize>>) -> Result<Self> {
        if out_edges.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: out_edges.len() });
        }
        for targets in &mut out_edges {
            targets.sort_unstable();
            targets.dedup();
            if let Some(&bad) = targets.iter().find(|&&j| j >= n) {
                return Err(Error::IndexOutOfRange { index: bad, n });
            }
        }
        Ok(DescentGraph { n, out_edges })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `D^1(i)`, the support of `e_i^2`.
    pub fn first_generation(&self, i: usize) -> Result<IndexSet> {
        check_index(i, self.n)?;
        Ok(self.out_edges[i].iter().copied().collect())
    }

    /// `D^1(S) = union of D^1(i) over i in S`.
    pub fn first_generation_of_set(&self, set: &IndexSet) -> Result<IndexSet> {
        let mut out = IndexSet::new();
        for &i in set {
            check_index(i, self.n)?;
            out.extend(self.out_edges[i].iter().copied());
        }
        Ok(out)
    }

    /// `D^m(i)`: endpoints of walks of length exactly `m`.
    pub fn nth_generation(&self, i: usize, m: usize) -> Result<IndexSet> {
        check_index(i, self.n)?;
        if m == 0 {
            return Err(Error::InvalidInput("generations are numbered from 1".into()));
        }
        let mut frontier = IndexSet::from([i]);
        for _ in 0..m {
            frontier = self.first_generation_of_set(&frontier)?;
            if frontier.is_empty() {
                break;
            }
        }
        Ok(frontier)
    }

    /// `D(i)`, by breadth-first search from the successors of `i`.
    pub fn descendants(&self, i: usize) -> Result<IndexSet> {
        check_index(i, self.n)?;
        let mut seen = vec![false; self.n];
        let mut queue: VecDeque<usize> = VecDeque::new();
        for &j in &self.out_edges[i] {
            if !seen[j] {
                seen[j] = true;
                queue.push_back(j);
            }
        }
        while let Some(v) = queue.pop_front() {
            for &w in &self.out_edges[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        Ok((0..self.n).filter(|&j| seen[j]).collect())
    }

    /// `D(S) = union of D(i) over i in S`.
    pub fn descendants_of_set(&self, set: &IndexSet) -> Result<IndexSet> {
        let mut out = IndexSet::new();
        for &i in set {
            out.extend(self.descendants(i)?);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::DenseMatrix;

    /// Block example with every marked structure constant set to 1.
    pub(crate) fn seven_by_seven() -> EvolutionAlgebra {
        let m = DenseMatrix::from_ints(&[
            &[1, 1, 1, 0, 0, 0, 1],
            &[1, 1, 1, 0, 0, 0, 1],
            &[1, 1, 1, 0, 0, 0, 1],
            &[0, 0, 0, 1, 0, 1, 0],
            &[0, 0, 0, 0, 1, 1, 0],
            &[0, 0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0, 1],
        ]);
        EvolutionAlgebra::from_structure_matrix(&m).unwrap()
    }

    fn chain() -> DescentGraph {
        DescentGraph::from_edges(3, vec![vec![1], vec![2], vec![]]).unwrap()
    }

    fn set(xs: &[usize]) -> IndexSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn first_generation_reads_columns() {
        let g = DescentGraph::new(&seven_by_seven());
        assert_eq!(g.first_generation(5).unwrap(), set(&[3, 4, 5]));
        assert_eq!(g.first_generation(3).unwrap(), set(&[3]));
        let z = DescentGraph::new(&EvolutionAlgebra::zero_product(2).unwrap());
        assert!(z.first_generation(0).unwrap().is_empty());
        assert!(g.first_generation(7).is_err());
    }

    #[test]
    fn generations_along_a_chain() {
        let g = chain();
        assert_eq!(g.nth_generation(0, 2).unwrap(), set(&[2]));
        assert!(g.nth_generation(0, 3).unwrap().is_empty());
        assert!(g.nth_generation(0, 0).is_err());
        let looped = DescentGraph::from_edges(1, vec![vec![0]]).unwrap();
        for m in 1..5 {
            assert!(looped.nth_generation(0, m).unwrap().contains(&0));
        }
    }

    #[test]
    fn descendants_in_block_example() {
        let g = DescentGraph::new(&seven_by_seven());
        assert_eq!(g.descendants(6).unwrap(), set(&[0, 1, 2, 6]));
        assert_eq!(g.descendants(5).unwrap(), set(&[3, 4, 5]));
        assert_eq!(g.descendants_of_set(&set(&[5, 6])).unwrap(), set(&[0, 1, 2, 3, 4, 5, 6]));
        assert!(g.descendants_of_set(&IndexSet::new()).unwrap().is_empty());
        assert_eq!(g.descendants_of_set(&set(&[4])).unwrap(), g.descendants(4).unwrap());
    }

    #[test]
    fn start_is_excluded_off_cycles() {
        let g = chain();
        assert_eq!(g.descendants(0).unwrap(), set(&[1, 2]));
        assert!(g.descendants(2).unwrap().is_empty());
    }
}
