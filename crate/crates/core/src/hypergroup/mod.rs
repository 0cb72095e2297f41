//! Finite hypergroups given by explicit set-valued multiplication tables.
//!
//! A [`Hypergroup`] is only ever built through validation, so every value of
//! the type satisfies associativity, has its neutral element at index 0 and
//! carries its inverse permutation. Subsets of a hypergroup are
//! [`ElementSubset`]s tagged with the identity of the structure they belong to.

mod closed;
mod normal;

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use thiserror::Error;

use crate::bits::{Bits, MAX_ELEMENTS};

pub use closed::ClosedLattice;
pub use normal::ThetaCore;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergroupError {
    #[error("malformed table: {0}")]
    Malformed(String),
    #[error("order {0} exceeds the supported maximum of {MAX_ELEMENTS}")]
    TooLarge(usize),
    #[error("product of {0} and {1} is empty")]
    EmptyProduct(usize, usize),
    #[error("no neutral element")]
    NoNeutral,
    #[error("associativity fails for ({0}, {1}, {2})")]
    AssocViolation(usize, usize, usize),
    #[error("no inverse function (element {0})")]
    NoInverse(usize),
    #[error("subsets belong to different hypergroups")]
    ParentMismatch,
    #[error("subset is not contained in the ambient closed subset")]
    NotSubset,
    #[error("empty input subset")]
    EmptyInput,
    #[error("subset is not closed")]
    NotClosed,
}

/// Opaque identity of a validated hypergroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ParentId(u64);

impl ParentId {
    fn fresh() -> Self {
        static NEXT: AtomicU64 = AtomicU64::new(1);
        ParentId(NEXT.fetch_add(1, Ordering::Relaxed))
    }
}

/// A validated finite hypergroup. Element 0 is the neutral element.
#[derive(Clone)]
pub struct Hypergroup {
    id: ParentId,
    order: usize,
    table: Vec<Bits>,
    inverse: Vec<usize>,
    /// `input_index[i]` is the index element `i` had in the validated input.
    input_index: Vec<usize>,
}

/// A subset of the elements of one particular hypergroup.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ElementSubset {
    bits: Bits,
    parent: ParentId,
}

impl ElementSubset {
    pub fn bits(&self) -> Bits {
        self.bits
    }

    pub fn parent(&self) -> ParentId {
        self.parent
    }

    pub fn contains(&self, a: usize) -> bool {
        self.bits.contains(a)
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> {
        self.bits.iter()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.bits.to_vec()
    }

    fn same_parent(&self, other: &ElementSubset) -> Result<(), HypergroupError> {
        if self.parent == other.parent {
            Ok(())
        } else {
            Err(HypergroupError::ParentMismatch)
        }
    }

    pub fn union(&self, other: &ElementSubset) -> Result<ElementSubset, HypergroupError> {
        self.same_parent(other)?;
        Ok(self.with_bits(self.bits.union(other.bits)))
    }

    pub fn intersection(&self, other: &ElementSubset) -> Result<ElementSubset, HypergroupError> {
        self.same_parent(other)?;
        Ok(self.with_bits(self.bits.intersection(other.bits)))
    }

    pub fn is_subset_of(&self, other: &ElementSubset) -> Result<bool, HypergroupError> {
        self.same_parent(other)?;
        Ok(self.bits.is_subset(other.bits))
    }

    fn with_bits(&self, bits: Bits) -> ElementSubset {
        ElementSubset {
            bits,
            parent: self.parent,
        }
    }
}

impl fmt::Debug for ElementSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.bits)
    }
}

/// A closed subset: non-empty and `A*A ⊆ A`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClosedSubset(ElementSubset);

impl ClosedSubset {
    pub fn subset(&self) -> &ElementSubset {
        &self.0
    }

    pub fn bits(&self) -> Bits {
        self.0.bits
    }

    pub fn contains(&self, a: usize) -> bool {
        self.0.contains(a)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> {
        self.0.iter()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.0.to_vec()
    }

    pub fn is_subset_of(&self, other: &ClosedSubset) -> Result<bool, HypergroupError> {
        self.0.is_subset_of(&other.0)
    }
}

impl fmt::Debug for ClosedSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Closed{:?}", self.0.bits)
    }
}

impl std::ops::Deref for ClosedSubset {
    type Target = ElementSubset;

    fn deref(&self) -> &ElementSubset {
        &self.0
    }
}

impl Hypergroup {
    /// Validates a raw set-valued table: `table[a][b]` lists the members of `ab`.
    pub fn from_table(table: &[Vec<Vec<usize>>]) -> Result<Hypergroup, HypergroupError> {
        let k = table.len();
        if k == 0 {
            return Err(HypergroupError::Malformed("empty table".into()));
        }
        if k > MAX_ELEMENTS {
            return Err(HypergroupError::TooLarge(k));
        }
        let mut bits = Vec::with_capacity(k * k);
        for (a, row) in table.iter().enumerate() {
            if row.len() != k {
                return Err(HypergroupError::Malformed(format!(
                    "row {a} has {} entries, expected {k}",
                    row.len()
                )));
            }
            for (b, entry) in row.iter().enumerate() {
                if let Some(&bad) = entry.iter().find(|&&c| c >= k) {
                    return Err(HypergroupError::Malformed(format!(
                        "entry ({a}, {b}) names element {bad} outside 0..{k}"
                    )));
                }
                bits.push(entry.iter().copied().collect());
            }
        }
        Self::from_bits(k, bits)
    }

    /// Validates a table given as `k*k` bitsets in row-major order.
    pub fn from_bits(k: usize, table: Vec<Bits>) -> Result<Hypergroup, HypergroupError> {
        if k == 0 || table.len() != k * k {
            return Err(HypergroupError::Malformed(format!(
                "expected {} entries for order {k}",
                k * k
            )));
        }
        if k > MAX_ELEMENTS {
            return Err(HypergroupError::TooLarge(k));
        }
        let full = Bits::full(k);
        for a in 0..k {
            for b in 0..k {
                let e = table[a * k + b];
                if e.is_empty() {
                    return Err(HypergroupError::EmptyProduct(a, b));
                }
                if !e.is_subset(full) {
                    return Err(HypergroupError::Malformed(format!(
                        "entry ({a}, {b}) leaves the element range"
                    )));
                }
            }
        }

        let prod = |a: usize, b: usize| table[a * k + b];
        let neutral = (0..k)
            .find(|&e| (0..k).all(|s| prod(s, e) == Bits::singleton(s)))
            .ok_or(HypergroupError::NoNeutral)?;

        let left = |x: Bits, r: usize| -> Bits {
            x.iter().fold(Bits::EMPTY, |acc, y| acc.union(prod(y, r)))
        };
        let right = |p: usize, x: Bits| -> Bits {
            x.iter().fold(Bits::EMPTY, |acc, y| acc.union(prod(p, y)))
        };
        for p in 0..k {
            for q in 0..k {
                for r in 0..k {
                    if right(p, prod(q, r)) != left(prod(p, q), r) {
                        return Err(HypergroupError::AssocViolation(p, q, r));
                    }
                }
            }
        }

        // The inverse of a is the unique x with the neutral element in xa.
        let mut inverse = vec![usize::MAX; k];
        for a in 0..k {
            let mut candidates = (0..k).filter(|&x| prod(x, a).contains(neutral));
            match (candidates.next(), candidates.next()) {
                (Some(x), None) => inverse[a] = x,
                _ => return Err(HypergroupError::NoInverse(a)),
            }
        }
        for p in 0..k {
            for q in 0..k {
                for r in prod(p, q).iter() {
                    if !prod(inverse[p], r).contains(q) {
                        return Err(HypergroupError::NoInverse(p));
                    }
                    if !prod(r, inverse[q]).contains(p) {
                        return Err(HypergroupError::NoInverse(q));
                    }
                }
            }
        }

        // Move the neutral element to index 0.
        let to_new = |i: usize| {
            if i == neutral {
                0
            } else if i == 0 {
                neutral
            } else {
                i
            }
        };
        let mut new_table = vec![Bits::EMPTY; k * k];
        for a in 0..k {
            for b in 0..k {
                new_table[to_new(a) * k + to_new(b)] = prod(a, b).iter().map(to_new).collect();
            }
        }
        let mut new_inverse = vec![0; k];
        for a in 0..k {
            new_inverse[to_new(a)] = to_new(inverse[a]);
        }
        let input_index = (0..k).map(to_new).collect();
        if neutral != 0 {
            log::debug!("neutral element {neutral} moved to index 0");
        }
        Ok(Hypergroup {
            id: ParentId::fresh(),
            order: k,
            table: new_table,
            inverse: new_inverse,
            input_index,
        })
    }

    /// The singleton hypergroup.
    pub fn trivial() -> Hypergroup {
        Self::from_bits(1, vec![Bits::singleton(0)]).expect("singleton table is a hypergroup")
    }

    pub fn id(&self) -> ParentId {
        self.id
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Index that element `i` carried in the validated input table.
    pub fn input_index(&self, i: usize) -> usize {
        self.input_index[i]
    }

    pub fn neutral(&self) -> usize {
        0
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn inverse_permutation(&self) -> &[usize] {
        &self.inverse
    }

    #[inline]
    pub(crate) fn prod_bits(&self, a: usize, b: usize) -> Bits {
        self.table[a * self.order + b]
    }

    pub(crate) fn set_prod_bits(&self, x: Bits, y: Bits) -> Bits {
        let mut out = Bits::EMPTY;
        for a in x.iter() {
            let row = &self.table[a * self.order..(a + 1) * self.order];
            for b in y.iter() {
                out = out.union(row[b]);
            }
        }
        out
    }

    pub(crate) fn star_bits(&self, x: Bits) -> Bits {
        x.iter().map(|a| self.inverse[a]).collect()
    }

    pub(crate) fn wrap(&self, bits: Bits) -> ElementSubset {
        ElementSubset {
            bits,
            parent: self.id,
        }
    }

    pub(crate) fn wrap_closed(&self, bits: Bits) -> ClosedSubset {
        debug_assert!(self.is_closed_bits(bits));
        ClosedSubset(self.wrap(bits))
    }

    pub(crate) fn check(&self, a: &ElementSubset) -> Result<(), HypergroupError> {
        if a.parent == self.id {
            Ok(())
        } else {
            Err(HypergroupError::ParentMismatch)
        }
    }

    fn expect_own(&self, a: &ElementSubset) {
        assert!(
            a.parent == self.id,
            "subset belongs to a different hypergroup"
        );
    }

    /// Builds a subset of this hypergroup from element indices.
    pub fn subset<I: IntoIterator<Item = usize>>(&self, elems: I) -> ElementSubset {
        let bits: Bits = elems.into_iter().collect();
        assert!(
            bits.is_subset(Bits::full(self.order)),
            "element index out of range"
        );
        self.wrap(bits)
    }

    pub fn empty_subset(&self) -> ElementSubset {
        self.wrap(Bits::EMPTY)
    }

    pub fn all(&self) -> ElementSubset {
        self.wrap(Bits::full(self.order))
    }

    pub fn whole(&self) -> ClosedSubset {
        ClosedSubset(self.all())
    }

    pub fn identity(&self) -> ClosedSubset {
        ClosedSubset(self.wrap(Bits::singleton(0)))
    }

    /// Reinterprets a subset known to be closed. Fails with `NotClosed` otherwise.
    pub fn as_closed(&self, a: &ElementSubset) -> Result<ClosedSubset, HypergroupError> {
        self.check(a)?;
        if self.is_closed_bits(a.bits) {
            Ok(ClosedSubset(*a))
        } else {
            Err(HypergroupError::NotClosed)
        }
    }

    /// The hyperproduct `ab`; never empty.
    pub fn product(&self, a: usize, b: usize) -> ElementSubset {
        self.wrap(self.prod_bits(a, b))
    }

    /// `AB`, the union of the products `ab`.
    pub fn subset_product(
        &self,
        a: &ElementSubset,
        b: &ElementSubset,
    ) -> Result<ElementSubset, HypergroupError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.wrap(self.set_prod_bits(a.bits, b.bits)))
    }

    /// `A*`, the image of `A` under the inverse permutation.
    pub fn star(&self, a: &ElementSubset) -> ElementSubset {
        self.expect_own(a);
        self.wrap(self.star_bits(a.bits))
    }

    pub fn is_thin_element(&self, h: usize) -> bool {
        self.prod_bits(self.inverse[h], h) == Bits::singleton(0)
    }

    /// True when every element is thin, i.e. the hypergroup is a group.
    pub fn is_thin(&self) -> bool {
        (0..self.order).all(|h| self.is_thin_element(h))
    }

    /// The closed subset viewed as a hypergroup of its own. Element `i` of the
    /// result is the `i`-th smallest member of `f`.
    pub fn restrict(&self, f: &ClosedSubset) -> Hypergroup {
        self.expect_own(f);
        let members = f.to_vec();
        let mut pos = vec![usize::MAX; self.order];
        for (i, &m) in members.iter().enumerate() {
            pos[m] = i;
        }
        let k = members.len();
        let mut table = Vec::with_capacity(k * k);
        for &a in &members {
            for &b in &members {
                table.push(self.prod_bits(a, b).iter().map(|c| pos[c]).collect());
            }
        }
        Hypergroup::from_bits(k, table).expect("closed subsets are hypergroups")
    }

    /// Table entries as element lists, in the canonical indexing.
    pub fn table(&self) -> Vec<Vec<Vec<usize>>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.prod_bits(a, b).to_vec()).collect())
            .collect()
    }

    /// True when both hypergroups have literally the same table.
    pub fn same_table(&self, other: &Hypergroup) -> bool {
        self.order == other.order && self.table == other.table
    }
}

impl fmt::Debug for Hypergroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Hypergroup")
            .field("order", &self.order)
            .field("inverse", &self.inverse)
            .finish_non_exhaustive()
    }
}

/// Text grid of the multiplication table.
impl fmt::Display for Hypergroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cell = |bits: Bits| {
            let items: Vec<String> = bits.iter().map(|x| x.to_string()).collect();
            format!("{{{}}}", items.join(","))
        };
        let cells: Vec<Vec<String>> = (0..self.order)
            .map(|a| (0..self.order).map(|b| cell(self.prod_bits(a, b))).collect())
            .collect();
        let width = cells
            .iter()
            .flatten()
            .map(|c| c.len())
            .max()
            .unwrap_or(1)
            .max(self.order.to_string().len());
        let label = self.order.saturating_sub(1).to_string().len();
        write!(f, "{:label$} |", "")?;
        for b in 0..self.order {
            write!(f, " {b:>width$}")?;
        }
        writeln!(f)?;
        writeln!(f, "{}", "-".repeat(label + 2 + self.order * (width + 1)))?;
        for (a, row) in cells.iter().enumerate() {
            write!(f, "{a:>label$} |")?;
            for c in row {
                write!(f, " {c:>width$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
