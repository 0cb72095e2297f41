//! Double-coset quotients `H//F` and the closed-subset correspondence.

use crate::bits::Bits;
use crate::homomorphism::{HomomorphismError, HypergroupHomomorphism};
use crate::hypergroup::{ClosedSubset, ElementSubset, Hypergroup, HypergroupError};

/// The quotient of a hypergroup over a closed subset `F`.
///
/// Quotient elements are coset indices. Coset `i` is the double coset `FhF`
/// of its smallest member `h`; cosets are numbered by that representative, so
/// coset 0 is `F` itself and is the neutral element of the quotient.
#[derive(Clone, Debug)]
pub struct QuotientHypergroup {
    parent: Hypergroup,
    kernel: ClosedSubset,
    cosets: Vec<Bits>,
    coset_of: Vec<usize>,
    hypergroup: Hypergroup,
}

impl QuotientHypergroup {
    pub fn new(parent: &Hypergroup, f: &ClosedSubset) -> Result<Self, HypergroupError> {
        parent.check(f)?;
        let fb = f.bits();
        let k = parent.order();
        let mut coset_of = vec![usize::MAX; k];
        let mut cosets = Vec::new();
        for h in 0..k {
            if coset_of[h] != usize::MAX {
                continue;
            }
            let c = parent.set_prod_bits(parent.set_prod_bits(fb, Bits::singleton(h)), fb);
            for x in c.iter() {
                debug_assert_eq!(coset_of[x], usize::MAX, "double cosets overlap");
                coset_of[x] = cosets.len();
            }
            cosets.push(c);
        }
        let m = cosets.len();
        let mut table = Vec::with_capacity(m * m);
        for ca in &cosets {
            let a = ca.min().expect("cosets are non-empty");
            let af = parent.set_prod_bits(Bits::singleton(a), fb);
            for cb in &cosets {
                let b = cb.min().expect("cosets are non-empty");
                let afb = parent.set_prod_bits(af, Bits::singleton(b));
                table.push(afb.iter().map(|x| coset_of[x]).collect());
            }
        }
        let hypergroup = Hypergroup::from_bits(m, table)?;
        debug_assert!((0..m).all(|i| {
            let rep = cosets[i].min().unwrap();
            hypergroup.inverse(i) == coset_of[parent.inverse(rep)]
        }));
        Ok(QuotientHypergroup {
            parent: parent.clone(),
            kernel: *f,
            cosets,
            coset_of,
            hypergroup,
        })
    }

    pub fn parent(&self) -> &Hypergroup {
        &self.parent
    }

    /// The closed subset `F` factored out.
    pub fn kernel(&self) -> &ClosedSubset {
        &self.kernel
    }

    /// The quotient as a hypergroup on coset indices.
    pub fn hypergroup(&self) -> &Hypergroup {
        &self.hypergroup
    }

    pub fn order(&self) -> usize {
        self.cosets.len()
    }

    pub fn coset(&self, i: usize) -> ElementSubset {
        self.parent.wrap(self.cosets[i])
    }

    pub fn cosets(&self) -> Vec<ElementSubset> {
        self.cosets.iter().map(|&c| self.parent.wrap(c)).collect()
    }

    pub fn representative(&self, i: usize) -> usize {
        self.cosets[i].min().expect("cosets are non-empty")
    }

    /// Index of the coset `h^F` containing `h`.
    pub fn coset_of(&self, h: usize) -> usize {
        self.coset_of[h]
    }

    /// `A//F = { a^F : a ∈ A }` for an arbitrary subset of the parent.
    pub fn project_subset(&self, a: &ElementSubset) -> Result<ElementSubset, HypergroupError> {
        self.parent.check(a)?;
        Ok(self
            .hypergroup
            .wrap(a.iter().map(|x| self.coset_of[x]).collect()))
    }

    /// `E//F` for a closed `E ⊇ F`.
    pub fn project(&self, e: &ClosedSubset) -> Result<ClosedSubset, HypergroupError> {
        self.parent.check(e)?;
        if !self.kernel.bits().is_subset(e.bits()) {
            return Err(HypergroupError::NotSubset);
        }
        let img = self.project_subset(e)?;
        self.hypergroup.as_closed(&img)
    }

    pub(crate) fn lift_bits(&self, c: Bits) -> Bits {
        c.iter().fold(Bits::EMPTY, |acc, i| acc.union(self.cosets[i]))
    }

    /// The unique closed `E ⊇ F` with `E//F = C`: the union of the cosets in `C`.
    pub fn lift_closed(&self, c: &ElementSubset) -> Result<ClosedSubset, HypergroupError> {
        self.hypergroup.check(c)?;
        if !self.hypergroup.is_closed(c) {
            return Err(HypergroupError::NotClosed);
        }
        let lifted = self.lift_bits(c.bits());
        self.parent.as_closed(&self.parent.wrap(lifted))
    }

    /// True when every coset is thin in the quotient. Always agrees with
    /// strong normality of `F` in the parent.
    pub fn is_thin(&self) -> bool {
        let thin = self.hypergroup.is_thin();
        let strongly_normal = self
            .parent
            .strongly_normal_bits(self.kernel.bits(), Bits::full(self.parent.order()));
        assert_eq!(
            thin, strongly_normal,
            "thin quotient and strong normality disagree"
        );
        thin
    }

    /// The canonical map `h ↦ h^F`. Fails unless that map is a homomorphism,
    /// which is the case for normal `F`.
    pub fn projection(&self) -> Result<HypergroupHomomorphism, HomomorphismError> {
        HypergroupHomomorphism::new(&self.parent, &self.hypergroup, self.coset_of.clone())
    }
}

impl Hypergroup {
    /// The quotient `H//F`.
    pub fn quotient(&self, f: &ClosedSubset) -> Result<QuotientHypergroup, HypergroupError> {
        QuotientHypergroup::new(self, f)
    }
}
