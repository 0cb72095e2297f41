use std::collections::HashSet;

use super::{ClosedSubset, ElementSubset, Hypergroup, HypergroupError};
use crate::bits::Bits;

impl Hypergroup {
    pub(crate) fn is_closed_bits(&self, a: Bits) -> bool {
        !a.is_empty() && self.set_prod_bits(self.star_bits(a), a).is_subset(a)
    }

    /// `A` is closed when it is non-empty and `A*A ⊆ A`.
    pub fn is_closed(&self, a: &ElementSubset) -> bool {
        self.expect_own(a);
        let closed = self.is_closed_bits(a.bits);
        debug_assert_eq!(
            closed,
            a.contains(0)
                && self.star_bits(a.bits) == a.bits
                && self.set_prod_bits(a.bits, a.bits) == a.bits,
            "closedness criterion disagrees with 1 ∈ A, A* = A, AA = A"
        );
        closed
    }

    pub(crate) fn closure_bits(&self, a: Bits) -> Bits {
        let mut cur = a.union(Bits::singleton(0));
        loop {
            let next = cur
                .union(self.star_bits(cur))
                .union(self.set_prod_bits(cur, cur));
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    /// Smallest closed subset containing `a`.
    pub fn closure(&self, a: &ElementSubset) -> Result<ClosedSubset, HypergroupError> {
        self.check(a)?;
        if a.is_empty() {
            return Err(HypergroupError::EmptyInput);
        }
        Ok(self.wrap_closed(self.closure_bits(a.bits)))
    }

    pub(crate) fn closed_bits_list(&self) -> Vec<Bits> {
        let generators: Vec<Bits> = {
            let mut g: Vec<Bits> = (0..self.order)
                .map(|h| self.closure_bits(Bits::singleton(h)))
                .collect();
            g.sort_by(|x, y| x.listing_cmp(*y));
            g.dedup();
            g
        };
        let mut seen: HashSet<Bits> = generators.iter().copied().collect();
        let mut work: Vec<Bits> = generators.clone();
        while let Some(c) = work.pop() {
            for &g in &generators {
                if g.is_subset(c) {
                    continue;
                }
                let j = self.closure_bits(c.union(g));
                if seen.insert(j) {
                    work.push(j);
                }
            }
        }
        let mut all: Vec<Bits> = seen.into_iter().collect();
        all.sort_by(|x, y| x.listing_cmp(*y));
        all
    }

    /// Every closed subset, sorted by size and then lexicographically.
    pub fn closed_subsets(&self) -> Vec<ClosedSubset> {
        self.closed_bits_list()
            .into_iter()
            .map(|b| self.wrap_closed(b))
            .collect()
    }

    /// The closed-subset lattice together with normality data, for repeated queries.
    pub fn closed_lattice(&self) -> ClosedLattice<'_> {
        ClosedLattice::new(self)
    }
}

/// The enumerated closed subsets of a hypergroup with the "normal in"
/// relation between them precomputed.
pub struct ClosedLattice<'h> {
    hypergroup: &'h Hypergroup,
    members: Vec<Bits>,
    /// `normal_in[i]` lists the `j` with `members[i] ⊆ members[j]` and
    /// `members[i]` normal in `members[j]`.
    normal_in: Vec<Vec<usize>>,
}

impl<'h> ClosedLattice<'h> {
    fn new(hypergroup: &'h Hypergroup) -> Self {
        let members = hypergroup.closed_bits_list();
        let normal_in = members
            .iter()
            .map(|&d| {
                members
                    .iter()
                    .enumerate()
                    .filter(|(_, &f)| d.is_subset(f) && hypergroup.normalizes_bits(f, d))
                    .map(|(j, _)| j)
                    .collect()
            })
            .collect();
        ClosedLattice {
            hypergroup,
            members,
            normal_in,
        }
    }

    pub fn hypergroup(&self) -> &Hypergroup {
        self.hypergroup
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn subsets(&self) -> Vec<ClosedSubset> {
        self.members
            .iter()
            .map(|&b| self.hypergroup.wrap_closed(b))
            .collect()
    }

    pub(crate) fn bits(&self) -> &[Bits] {
        &self.members
    }

    pub(crate) fn index_of(&self, b: Bits) -> Option<usize> {
        self.members.iter().position(|&m| m == b)
    }

    pub(crate) fn subnormal_bits(&self, e: Bits, ambient: Bits) -> bool {
        let (Some(start), Some(goal)) = (self.index_of(e), self.index_of(ambient)) else {
            return false;
        };
        if !e.is_subset(ambient) {
            return false;
        }
        let mut seen = vec![false; self.members.len()];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(i) = stack.pop() {
            if i == goal {
                return true;
            }
            for &j in &self.normal_in[i] {
                if !seen[j] && self.members[j].is_subset(ambient) {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        false
    }

    /// True when a chain `E = F0 ⊴ F1 ⊴ … ⊴ Fn = ambient` of closed subsets exists.
    pub fn is_subnormal(
        &self,
        e: &ClosedSubset,
        ambient: &ClosedSubset,
    ) -> Result<bool, HypergroupError> {
        self.hypergroup.check(e)?;
        self.hypergroup.check(ambient)?;
        if !e.bits().is_subset(ambient.bits()) {
            return Err(HypergroupError::NotSubset);
        }
        Ok(self.subnormal_bits(e.bits(), ambient.bits()))
    }

    /// Closed subsets of `ambient` that are subnormal in it.
    pub fn subnormal_subsets(&self, ambient: &ClosedSubset) -> Vec<ClosedSubset> {
        self.members
            .iter()
            .filter(|&&m| m.is_subset(ambient.bits()) && self.subnormal_bits(m, ambient.bits()))
            .map(|&m| self.hypergroup.wrap_closed(m))
            .collect()
    }
}
