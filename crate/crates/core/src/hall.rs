//! Hall π-subsets of solvable π-valenced schemes.
//!
//! The constructive route factors out `O = O_π(S)`, which is strongly normal,
//! so `S//O` is thin and therefore a group. Hall subgroups of that group are
//! lifted back through the closed-subset correspondence. An exhaustive filter
//! over all closed subsets runs beside it as a verifier.

use rayon::prelude::*;
use thiserror::Error;

use crate::bits::Bits;
use crate::group::GroupTable;
use crate::hypergroup::{Hypergroup, HypergroupError};
use crate::primes::PrimeSet;
use crate::quotient::QuotientHypergroup;
use crate::scheme::{AssociationScheme, SchemeClosedSubset, SchemeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HallError {
    #[error("scheme is not solvable")]
    NotSolvable,
    #[error("scheme is not {0}-valenced")]
    NotPiValenced(PrimeSet),
    #[error("group is not solvable")]
    NotSolvableGroup,
    #[error("{0:?} is not a Hall {1}-subset")]
    NotHall(Vec<usize>, PrimeSet),
    #[error("{0:?} is not a closed {1}-subset")]
    NotClosedPiSubset(Vec<usize>, PrimeSet),
    #[error("no element conjugates {0:?} to {1:?}")]
    NoConjugatorFound(Vec<usize>, Vec<usize>),
    #[error(transparent)]
    Scheme(#[from] SchemeError),
}

impl From<HypergroupError> for HallError {
    fn from(e: HypergroupError) -> Self {
        HallError::Scheme(e.into())
    }
}

/// Everything needed to re-check a Hall π-subset produced by the quotient route.
#[derive(Clone, Debug)]
pub struct HallCertificate {
    pub pi: PrimeSet,
    pub hall: SchemeClosedSubset,
    pub o_pi: SchemeClosedSubset,
    /// The group of `S//O_π(S)`; element `i` is the double coset numbered `i`.
    pub thin_quotient_group: GroupTable,
    /// `hall//O_π(S)` as a subgroup of `thin_quotient_group`.
    pub lifted_subgroup: Bits,
    pub conjugator: Option<usize>,
}

impl HallCertificate {
    /// `n_S / n_T`.
    pub fn index(&self, s: &AssociationScheme) -> u64 {
        s.total_valency() / self.hall.valency()
    }

    /// Re-runs every claim in the certificate against `s`.
    pub fn verify(&self, s: &AssociationScheme) -> bool {
        let p = s.pi_predicates(&self.hall, &self.pi);
        let Ok(q) = s.to_hypergroup().quotient(self.o_pi.relations()) else {
            return false;
        };
        p.hall_pi_subset
            && self.o_pi.is_subset_of(&self.hall)
            && q.lift_bits(self.lifted_subgroup) == self.hall.bits()
            && self.thin_quotient_group.order() == q.order()
    }
}

/// Outcome of a conjugacy query between two Hall π-subsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conjugation {
    /// Element produced by lifting a conjugator from `S//O_π(S)`.
    pub lifted: Option<usize>,
    /// Every `s` with `s*Ts = U`, by scan.
    pub all: Vec<usize>,
}

fn require_hypotheses(s: &AssociationScheme, pi: &PrimeSet) -> Result<(), HallError> {
    if !s.is_pi_valenced(pi) {
        return Err(HallError::NotPiValenced(pi.clone()));
    }
    if !s.is_solvable() {
        return Err(HallError::NotSolvable);
    }
    Ok(())
}

/// `O_π(S)`: the largest subnormal closed π-subset.
pub fn compute_o_pi(s: &AssociationScheme, pi: &PrimeSet) -> Result<SchemeClosedSubset, HallError> {
    require_hypotheses(s, pi)?;
    Ok(o_pi_unchecked(s, pi))
}

fn o_pi_unchecked(s: &AssociationScheme, pi: &PrimeSet) -> SchemeClosedSubset {
    let h = s.to_hypergroup();
    let lattice = h.closed_lattice();
    let all = Bits::full(h.order());
    let candidates: Vec<Bits> = lattice
        .bits()
        .iter()
        .copied()
        .filter(|&b| {
            lattice.subnormal_bits(b, all)
                && s.pi_predicates(&s.closed_from_bits(b), pi).closed_pi_subset
        })
        .collect();
    let top = candidates
        .iter()
        .copied()
        .max_by_key(|b| b.len())
        .expect("{1} is a subnormal closed π-subset");
    assert!(
        candidates.iter().all(|c| c.is_subset(top)),
        "subnormal closed π-subsets have no largest member"
    );
    assert!(
        h.strongly_normal_bits(top, all),
        "O_π(S) is not strongly normal"
    );
    s.closed_from_bits(top)
}

fn is_group_solvable(g: &GroupTable) -> bool {
    g.to_hypergroup().is_solvable()
}

/// Subgroups of `G` as element bitsets, by closed-subset enumeration of the thin hypergroup.
fn subgroups(g: &GroupTable) -> (Hypergroup, Vec<Bits>) {
    let h = g.to_hypergroup();
    let list = h.closed_subsets().iter().map(|c| c.bits()).collect();
    (h, list)
}

fn conjugating_group_element(g: &GroupTable, a: Bits, b: Bits) -> Option<usize> {
    (0..g.order()).find(|&x| g.conjugate(a, x) == b)
}

/// All Hall π-subgroups of a solvable group, ordered by member list.
pub fn hall_subgroups(g: &GroupTable, pi: &PrimeSet) -> Result<Vec<Bits>, HallError> {
    if !is_group_solvable(g) {
        return Err(HallError::NotSolvableGroup);
    }
    let target = pi.pi_part(g.order() as u64) as usize;
    let (_, list) = subgroups(g);
    let mut halls: Vec<Bits> = list.into_iter().filter(|k| k.len() == target).collect();
    halls.sort_by_key(|k| k.to_vec());
    assert!(!halls.is_empty(), "solvable group without a Hall subgroup");
    for &k in &halls[1..] {
        assert!(
            conjugating_group_element(g, halls[0], k).is_some(),
            "Hall subgroups are not conjugate"
        );
    }
    Ok(halls)
}

/// `O_π(S)`, its quotient and the group behind it.
struct Reduction {
    o: SchemeClosedSubset,
    quotient: QuotientHypergroup,
    group: GroupTable,
}

fn reduce(s: &AssociationScheme, pi: &PrimeSet) -> Result<Reduction, HallError> {
    require_hypotheses(s, pi)?;
    let o = o_pi_unchecked(s, pi);
    let quotient = s.to_hypergroup().quotient(o.relations())?;
    assert!(quotient.is_thin(), "S//O_π(S) is not thin");
    let group = GroupTable::from_thin_hypergroup(quotient.hypergroup())
        .expect("thin quotient is a group");
    if !is_group_solvable(&group) {
        return Err(HallError::NotSolvableGroup);
    }
    Ok(Reduction { o, quotient, group })
}

fn certificate(
    s: &AssociationScheme,
    pi: &PrimeSet,
    red: Reduction,
    subgroup: Bits,
) -> HallCertificate {
    let hall = s.closed_from_bits(red.quotient.lift_bits(subgroup));
    let cert = HallCertificate {
        pi: pi.clone(),
        hall,
        o_pi: red.o,
        thin_quotient_group: red.group,
        lifted_subgroup: subgroup,
        conjugator: None,
    };
    assert!(cert.verify(s), "lifted Hall subgroup fails the Hall predicate");
    cert
}

/// A Hall π-subset; the lexicographically least one reachable from the quotient.
pub fn find_hall(s: &AssociationScheme, pi: &PrimeSet) -> Result<HallCertificate, HallError> {
    let red = reduce(s, pi)?;
    let halls = hall_subgroups(&red.group, pi)?;
    let best = halls
        .iter()
        .copied()
        .min_by_key(|&k| red.quotient.lift_bits(k).to_vec())
        .expect("nonempty");
    Ok(certificate(s, pi, red, best))
}

/// Every Hall π-subset, by filtering all closed subsets. Order follows the lattice listing.
pub fn hall_subsets_by_filter(s: &AssociationScheme, pi: &PrimeSet) -> Vec<SchemeClosedSubset> {
    s.closed_subsets()
        .into_par_iter()
        .filter(|t| s.pi_predicates(t, pi).hall_pi_subset)
        .collect()
}

fn check_hall(
    s: &AssociationScheme,
    t: &SchemeClosedSubset,
    pi: &PrimeSet,
) -> Result<(), HallError> {
    if s.pi_predicates(t, pi).hall_pi_subset {
        Ok(())
    } else {
        Err(HallError::NotHall(t.to_vec(), pi.clone()))
    }
}

/// An element `s` with `s*Ts = U` for Hall π-subsets `T` and `U`.
pub fn conjugating_element(
    s: &AssociationScheme,
    pi: &PrimeSet,
    t: &SchemeClosedSubset,
    u: &SchemeClosedSubset,
) -> Result<Conjugation, HallError> {
    check_hall(s, t, pi)?;
    check_hall(s, u, pi)?;
    let red = reduce(s, pi)?;
    let qt = red.quotient.project_subset(t.relations().subset())?.bits();
    let qu = red.quotient.project_subset(u.relations().subset())?.bits();
    let lifted = conjugating_group_element(&red.group, qt, qu).and_then(|g| {
        red.quotient
            .coset(g)
            .iter()
            .find(|&x| s.conjugate_subset(t, x).bits() == u.bits())
    });
    let all = s.conjugacy(t, u).forward;
    if lifted.is_none() && !all.is_empty() {
        log::warn!("quotient route found no conjugator; scan found {all:?}");
    }
    if all.is_empty() {
        return Err(HallError::NoConjugatorFound(t.to_vec(), u.to_vec()));
    }
    debug_assert!(lifted.is_none_or(|x| all.contains(&x)));
    Ok(Conjugation { lifted, all })
}

/// A Hall π-subset containing the closed π-subset `T`.
pub fn extend_to_hall(
    s: &AssociationScheme,
    pi: &PrimeSet,
    t: &SchemeClosedSubset,
) -> Result<HallCertificate, HallError> {
    if !s.pi_predicates(t, pi).closed_pi_subset {
        return Err(HallError::NotClosedPiSubset(t.to_vec(), pi.clone()));
    }
    let red = reduce(s, pi)?;
    let h = s.to_hypergroup();
    let ot = h.subset_product(red.o.relations().subset(), t.relations().subset())?;
    let ot = s.closed(&ot).map_err(|_| {
        SchemeError::InternalInconsistency("OT is not closed for strongly normal O".into())
    })?;
    let image = red.quotient.project(ot.relations())?.bits();
    let best = hall_subgroups(&red.group, pi)?
        .into_iter()
        .filter(|k| image.is_subset(*k))
        .min_by_key(|&k| red.quotient.lift_bits(k).to_vec())
        .expect("every π-subgroup of a solvable group lies in a Hall subgroup");
    let cert = certificate(s, pi, red, best);
    assert!(
        ot.is_subset_of(&cert.hall) && t.is_subset_of(&cert.hall),
        "extension does not contain OT"
    );
    Ok(cert)
}
