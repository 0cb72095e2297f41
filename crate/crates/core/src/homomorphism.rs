//! Hypergroup homomorphisms, kernels, images and isomorphism search.

use thiserror::Error;

use crate::bits::Bits;
use crate::hypergroup::{ClosedSubset, Hypergroup};

/// Largest order accepted by [`find_isomorphism`].
pub const ISOMORPHISM_ORDER_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomomorphismError {
    #[error("map has {got} entries, source has order {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("element {0} is mapped outside the target")]
    OutOfRange(usize),
    #[error("the neutral element is not mapped to the neutral element")]
    NeutralNotPreserved,
    #[error("image of {0}·{1} differs from the product of the images")]
    NotMultiplicative(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("isomorphism search is capped at order {ISOMORPHISM_ORDER_CAP}, got {0}")]
pub struct Overflow(pub usize);

/// A map `φ` with `φ(ab) = φ(a)φ(b)` as sets and `φ(1) = 1`.
#[derive(Clone, Debug)]
pub struct HypergroupHomomorphism {
    source: Hypergroup,
    target: Hypergroup,
    map: Vec<usize>,
}

impl HypergroupHomomorphism {
    pub fn new(
        source: &Hypergroup,
        target: &Hypergroup,
        map: Vec<usize>,
    ) -> Result<Self, HomomorphismError> {
        if map.len() != source.order() {
            return Err(HomomorphismError::WrongLength {
                expected: source.order(),
                got: map.len(),
            });
        }
        if let Some(a) = (0..map.len()).find(|&a| map[a] >= target.order()) {
            return Err(HomomorphismError::OutOfRange(a));
        }
        if map[0] != 0 {
            return Err(HomomorphismError::NeutralNotPreserved);
        }
        for a in 0..source.order() {
            for b in 0..source.order() {
                let image: Bits = source.prod_bits(a, b).iter().map(|x| map[x]).collect();
                if image != target.prod_bits(map[a], map[b]) {
                    return Err(HomomorphismError::NotMultiplicative(a, b));
                }
            }
        }
        debug_assert!((0..source.order()).all(|h| map[source.inverse(h)] == target.inverse(map[h])));
        Ok(HypergroupHomomorphism {
            source: source.clone(),
            target: target.clone(),
            map,
        })
    }

    pub fn identity(h: &Hypergroup) -> Self {
        Self::new(h, h, (0..h.order()).collect()).expect("identity is a homomorphism")
    }

    /// The map sending everything to the singleton hypergroup.
    pub fn to_trivial(h: &Hypergroup) -> Self {
        Self::new(h, &Hypergroup::trivial(), vec![0; h.order()])
            .expect("constant map to the singleton is a homomorphism")
    }

    pub fn source(&self) -> &Hypergroup {
        &self.source
    }

    pub fn target(&self) -> &Hypergroup {
        &self.target
    }

    pub fn apply(&self, h: usize) -> usize {
        self.map[h]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// Composition `other ∘ self`.
    pub fn then(&self, other: &HypergroupHomomorphism) -> Result<Self, HomomorphismError> {
        assert_eq!(
            self.target.id(),
            other.source.id(),
            "composed maps do not share a hypergroup"
        );
        let map = self.map.iter().map(|&x| other.map[x]).collect();
        Self::new(&self.source, &other.target, map)
    }

    /// `{h : φ(h) = 1}`.
    pub fn kernel(&self) -> ClosedSubset {
        let bits: Bits = (0..self.source.order()).filter(|&h| self.map[h] == 0).collect();
        self.source
            .as_closed(&self.source.wrap(bits))
            .expect("kernels are closed")
    }

    /// `{φ(h)}` as a closed subset of the target.
    pub fn image(&self) -> ClosedSubset {
        let bits: Bits = self.map.iter().copied().collect();
        self.target
            .as_closed(&self.target.wrap(bits))
            .expect("images are closed")
    }

    pub fn is_bijective(&self) -> bool {
        self.source.order() == self.target.order() && self.image().len() == self.target.order()
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Fingerprint {
    self_inverse: bool,
    thin: bool,
    square: usize,
    inverse_product: usize,
    row: Vec<usize>,
    column: Vec<usize>,
}

fn fingerprints(h: &Hypergroup) -> Vec<Fingerprint> {
    let k = h.order();
    (0..k)
        .map(|a| {
            let mut row: Vec<usize> = (0..k).map(|b| h.prod_bits(a, b).len()).collect();
            let mut column: Vec<usize> = (0..k).map(|b| h.prod_bits(b, a).len()).collect();
            row.sort_unstable();
            column.sort_unstable();
            Fingerprint {
                self_inverse: h.inverse(a) == a,
                thin: h.is_thin_element(a),
                square: h.prod_bits(a, a).len(),
                inverse_product: h.prod_bits(h.inverse(a), a).len(),
                row,
                column,
            }
        })
        .collect()
}

struct Search<'a> {
    h1: &'a Hypergroup,
    h2: &'a Hypergroup,
    fp1: Vec<Fingerprint>,
    fp2: Vec<Fingerprint>,
    forward: Vec<usize>,
    backward: Vec<usize>,
}

const UNSET: usize = usize::MAX;

impl Search<'_> {
    fn consistent_pair(&self, a: usize, b: usize) -> bool {
        let s1 = self.h1.prod_bits(a, b);
        let s2 = self.h2.prod_bits(self.forward[a], self.forward[b]);
        if s1.len() != s2.len() {
            return false;
        }
        s1.iter()
            .all(|x| self.forward[x] == UNSET || s2.contains(self.forward[x]))
            && s2
                .iter()
                .all(|y| self.backward[y] == UNSET || s1.contains(self.backward[y]))
    }

    fn consistent(&self, a: usize) -> bool {
        (0..self.h1.order())
            .filter(|&x| self.forward[x] != UNSET)
            .all(|x| self.consistent_pair(a, x) && self.consistent_pair(x, a))
    }

    fn extend(&mut self, a: usize) -> bool {
        let k = self.h1.order();
        if a == k {
            return true;
        }
        if self.forward[a] != UNSET {
            return self.extend(a + 1);
        }
        let inv = self.h1.inverse(a);
        for b in 0..k {
            if self.backward[b] != UNSET || self.fp1[a] != self.fp2[b] {
                continue;
            }
            let binv = self.h2.inverse(b);
            if inv != a && (self.forward[inv] != UNSET && self.forward[inv] != binv) {
                continue;
            }
            self.forward[a] = b;
            self.backward[b] = a;
            let mut paired = false;
            if inv != a && self.forward[inv] == UNSET {
                if self.backward[binv] != UNSET {
                    self.forward[a] = UNSET;
                    self.backward[b] = UNSET;
                    continue;
                }
                self.forward[inv] = binv;
                self.backward[binv] = inv;
                paired = true;
            }
            let ok = self.consistent(a) && (!paired || self.consistent(inv));
            if ok && self.extend(a + 1) {
                return true;
            }
            self.forward[a] = UNSET;
            self.backward[b] = UNSET;
            if paired {
                self.forward[inv] = UNSET;
                self.backward[binv] = UNSET;
            }
        }
        false
    }
}

/// Searches for an isomorphism `H1 → H2`, returned as the image of each
/// element of `H1`. The search is a backtracking over neutral-preserving,
/// inverse-compatible bijections; the first witness in lexicographic order of
/// the assignment is returned.
pub fn find_isomorphism(h1: &Hypergroup, h2: &Hypergroup) -> Result<Option<Vec<usize>>, Overflow> {
    for h in [h1, h2] {
        if h.order() > ISOMORPHISM_ORDER_CAP {
            return Err(Overflow(h.order()));
        }
    }
    if h1.order() != h2.order() {
        return Ok(None);
    }
    let fp1 = fingerprints(h1);
    let fp2 = fingerprints(h2);
    let (mut s1, mut s2) = (fp1.clone(), fp2.clone());
    s1.sort();
    s2.sort();
    if s1 != s2 || fp1[0] != fp2[0] {
        return Ok(None);
    }
    let k = h1.order();
    let mut search = Search {
        h1,
        h2,
        fp1,
        fp2,
        forward: vec![UNSET; k],
        backward: vec![UNSET; k],
    };
    search.forward[0] = 0;
    search.backward[0] = 0;
    if !search.consistent(0) || !search.extend(1) {
        return Ok(None);
    }
    let map = search.forward;
    debug_assert!(HypergroupHomomorphism::new(h1, h2, map.clone()).is_ok());
    Ok(Some(map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergroup::tests::{cyclic, pentagon, square};

    #[test]
    fn identity_and_trivial_maps() {
        let p = pentagon();
        let id = HypergroupHomomorphism::identity(&p);
        assert_eq!(id.kernel().to_vec(), vec![0]);
        assert!(id.is_bijective());
        let t = HypergroupHomomorphism::to_trivial(&p);
        assert_eq!(t.kernel().len(), 3);
    }

    #[test]
    fn projection_kernel() {
        let c6 = cyclic(6);
        let c3 = c6.as_closed(&c6.subset([0, 2, 4])).unwrap();
        let q = c6.quotient(&c3).unwrap();
        let phi = q.projection().unwrap();
        assert_eq!(phi.kernel(), c3);
        // Fibres are the cosets of the kernel.
        for a in 0..6 {
            for b in 0..6 {
                let same_coset = c6.set_prod_bits(Bits::singleton(a), c3.bits())
                    == c6.set_prod_bits(Bits::singleton(b), c3.bits());
                assert_eq!(phi.apply(a) == phi.apply(b), same_coset);
            }
        }
    }

    #[test]
    fn non_normal_projection_rejected() {
        let p = pentagon();
        // {1} is normal, the projection is an isomorphism.
        assert!(p.quotient(&p.identity()).unwrap().projection().is_ok());
        assert!(matches!(
            HypergroupHomomorphism::new(&p, &p, vec![0, 2, 2]),
            Err(HomomorphismError::NotMultiplicative(..))
        ));
        assert_eq!(
            HypergroupHomomorphism::new(&p, &p, vec![1, 0, 2]).unwrap_err(),
            HomomorphismError::NeutralNotPreserved
        );
    }

    #[test]
    fn isomorphism_search() {
        let p = pentagon();
        assert_eq!(find_isomorphism(&p, &p).unwrap(), Some(vec![0, 1, 2]));
        assert_eq!(
            find_isomorphism(&Hypergroup::trivial(), &cyclic(2)).unwrap(),
            None
        );
        assert_eq!(find_isomorphism(&p, &square()).unwrap(), None);
        // C6 with a relabelled generator.
        let c6 = cyclic(6);
        let perm = [0, 5, 4, 3, 2, 1];
        let table: Vec<Vec<Vec<usize>>> = (0..6)
            .map(|a| (0..6).map(|b| vec![perm[(perm[a] + perm[b]) % 6]]).collect())
            .collect();
        let other = Hypergroup::from_table(&table).unwrap();
        assert!(find_isomorphism(&c6, &other).unwrap().is_some());
        assert!(find_isomorphism(&cyclic(25), &cyclic(25)).is_err());
    }
}
