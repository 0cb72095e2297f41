use super::{ClosedSubset, ElementSubset, Hypergroup, HypergroupError};
use crate::bits::Bits;

/// The intersection of all strongly normal closed subsets, next to the
/// closure of the union of all `h*h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThetaCore {
    pub core: ClosedSubset,
    pub generated: ClosedSubset,
}

impl ThetaCore {
    pub fn agrees(&self) -> bool {
        self.core == self.generated
    }
}

impl Hypergroup {
    /// `Ed ⊆ dE` for every `d` in `D`.
    pub(crate) fn normalizes_bits(&self, d: Bits, e: Bits) -> bool {
        d.iter().all(|x| {
            let xb = Bits::singleton(x);
            self.set_prod_bits(e, xb)
                .is_subset(self.set_prod_bits(xb, e))
        })
    }

    pub(crate) fn strongly_normal_bits(&self, f: Bits, ambient: Bits) -> bool {
        ambient.iter().all(|h| {
            let hb = Bits::singleton(h);
            let conj = self.set_prod_bits(self.set_prod_bits(Bits::singleton(self.inverse[h]), f), hb);
            conj.is_subset(f)
        })
    }

    /// `D` normalizes `E` when `Ed ⊆ dE` for each `d` in `D`.
    pub fn normalizes(&self, d: &ClosedSubset, e: &ClosedSubset) -> Result<bool, HypergroupError> {
        self.check(d)?;
        self.check(e)?;
        Ok(self.normalizes_bits(d.bits(), e.bits()))
    }

    /// `E` is normal in `F` when `F` normalizes `E`.
    pub fn is_normal(&self, e: &ClosedSubset, f: &ClosedSubset) -> Result<bool, HypergroupError> {
        self.check(e)?;
        self.check(f)?;
        if !e.bits().is_subset(f.bits()) {
            return Err(HypergroupError::NotSubset);
        }
        Ok(self.normalizes_bits(f.bits(), e.bits()))
    }

    /// `h*Fh ⊆ F` for every `h` in `ambient`.
    pub fn is_strongly_normal(
        &self,
        f: &ClosedSubset,
        ambient: &ClosedSubset,
    ) -> Result<bool, HypergroupError> {
        self.check(f)?;
        self.check(ambient)?;
        if !f.bits().is_subset(ambient.bits()) {
            return Err(HypergroupError::NotSubset);
        }
        Ok(self.strongly_normal_bits(f.bits(), ambient.bits()))
    }

    /// Subnormality of `e` in `ambient`, searching the full closed-subset lattice.
    /// Use [`Hypergroup::closed_lattice`] when asking many such questions.
    pub fn is_subnormal(
        &self,
        e: &ClosedSubset,
        ambient: &ClosedSubset,
    ) -> Result<bool, HypergroupError> {
        self.closed_lattice().is_subnormal(e, ambient)
    }

    /// The set of thin elements.
    pub fn thin_elements(&self) -> ElementSubset {
        self.wrap((0..self.order).filter(|&h| self.is_thin_element(h)).collect())
    }

    pub(crate) fn theta_core_bits(&self, lattice: &[Bits]) -> Bits {
        let all = Bits::full(self.order);
        lattice
            .iter()
            .filter(|&&f| self.strongly_normal_bits(f, all))
            .fold(all, |acc, &f| acc.intersection(f))
    }

    /// Intersection of all strongly normal closed subsets.
    pub fn theta_core(&self) -> ClosedSubset {
        self.theta_core_report().core
    }

    /// The intersection core together with `closure(∪ h*h)`; the two are not
    /// assumed to coincide.
    pub fn theta_core_report(&self) -> ThetaCore {
        let lattice = self.closed_bits_list();
        let core = self.theta_core_bits(&lattice);
        debug_assert!(self.strongly_normal_bits(core, Bits::full(self.order)));
        let spread = (0..self.order).fold(Bits::EMPTY, |acc, h| {
            acc.union(self.prod_bits(self.inverse[h], h))
        });
        let generated = self.closure_bits(spread);
        if core != generated {
            log::info!("theta core {core:?} differs from generated closure {generated:?}");
        }
        ThetaCore {
            core: self.wrap_closed(core),
            generated: self.wrap_closed(generated),
        }
    }

    /// The theta core consists of thin elements only.
    pub fn is_metathin(&self) -> bool {
        self.theta_core().bits().is_subset(self.thin_elements().bits())
    }
}
