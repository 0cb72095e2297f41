//! Finite association schemes: validation, intersection numbers, complex
//! multiplication, closed subsets with valencies, quotient schemes and the
//! group correspondence.

use std::fmt;

use thiserror::Error;

use crate::bits::{Bits, MAX_ELEMENTS};
use crate::group::{GroupError, GroupTable};
use crate::hypergroup::{ClosedSubset, ElementSubset, Hypergroup, HypergroupError};
use crate::primes::{is_prime, PrimeSet};
use crate::quotient::QuotientHypergroup;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchemeError {
    #[error("relation matrix is not square (row {row} has {len} entries, expected {n})")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("labels do not partition the pairs: label {0} is unused")]
    NotPartition(usize),
    #[error("identity relation violated at ({0}, {1})")]
    IdentityViolation(usize, usize),
    #[error("transpose of relation {s} is not a relation (pair ({y}, {z}))")]
    StarViolation { s: usize, y: usize, z: usize },
    #[error("intersection number a[{p},{q},{r}] is not constant (pair ({y}, {z}))")]
    RegularityViolation {
        p: usize,
        q: usize,
        r: usize,
        y: usize,
        z: usize,
    },
    #[error("rank {0} exceeds the supported maximum of {MAX_ELEMENTS}")]
    TooLarge(usize),
    #[error("relation set is not closed")]
    NotClosed,
    #[error("closed subset is not contained in the larger one")]
    NotSubset,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Hypergroup(#[from] HypergroupError),
}

/// A validated association scheme. Relation 0 is the identity relation.
#[derive(Clone)]
pub struct AssociationScheme {
    n_points: usize,
    rank: usize,
    rel: Vec<u16>,
    star: Vec<usize>,
    intersection: Vec<u32>,
    valency: Vec<u64>,
    hypergroup: Hypergroup,
}

/// A closed subset of relations with its valency `n_T`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SchemeClosedSubset {
    relations: ClosedSubset,
    valency: u64,
}

impl SchemeClosedSubset {
    pub fn relations(&self) -> &ClosedSubset {
        &self.relations
    }

    pub fn bits(&self) -> Bits {
        self.relations.bits()
    }

    pub fn valency(&self) -> u64 {
        self.valency
    }

    pub fn contains(&self, s: usize) -> bool {
        self.relations.contains(s)
    }

    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.relations.to_vec()
    }

    pub fn is_subset_of(&self, other: &SchemeClosedSubset) -> bool {
        self.bits().is_subset(other.bits())
    }
}

impl fmt::Debug for SchemeClosedSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}(n={})", self.relations.bits(), self.valency)
    }
}

/// A chain `{1} = T0 ⊆ … ⊆ Tn = S` with each step strongly normal of prime index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemeChain {
    pub chain: Vec<SchemeClosedSubset>,
    pub indices: Vec<u64>,
}

/// The π-predicates of a closed subset.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PiPredicates {
    pub pi_valenced: bool,
    pub closed_pi_subset: bool,
    pub hall_pi_subset: bool,
}

/// Which elements conjugate `T` to `U` and `U` to `T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conjugacy {
    /// All `s` with `s*Ts = U`.
    pub forward: Vec<usize>,
    /// All `s` with `s*Us = T`.
    pub backward: Vec<usize>,
}

/// Disjoint-set forest over the points.
struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut cur = x;
        while self.0[cur] != root {
            let next = self.0[cur];
            self.0[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller index as root
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }
}

impl AssociationScheme {
    /// Validates an `n × n` matrix of relation labels `0..rank`.
    ///
    /// If the diagonal carries a label other than 0, that label is swapped
    /// with 0. Every intersection number is verified on every pair of points.
    pub fn from_matrix(labels: &[Vec<usize>]) -> Result<AssociationScheme, SchemeError> {
        let n = labels.len();
        if n == 0 {
            return Err(SchemeError::NotSquare { row: 0, len: 0, n: 0 });
        }
        for (row, r) in labels.iter().enumerate() {
            if r.len() != n {
                return Err(SchemeError::NotSquare { row, len: r.len(), n });
            }
        }
        let rank = labels.iter().flatten().copied().max().unwrap() + 1;
        if rank > MAX_ELEMENTS {
            return Err(SchemeError::TooLarge(rank));
        }
        let mut used = vec![false; rank];
        labels.iter().flatten().for_each(|&l| used[l] = true);
        if let Some(gap) = used.iter().position(|&u| !u) {
            return Err(SchemeError::NotPartition(gap));
        }

        let diag = labels[0][0];
        for x in 0..n {
            for y in 0..n {
                if (x == y) != (labels[x][y] == diag) {
                    return Err(SchemeError::IdentityViolation(x, y));
                }
            }
        }
        if diag != 0 {
            log::warn!("identity relation carries label {diag}; relabelled to 0");
        }
        let canon = |l: usize| {
            if l == diag {
                0
            } else if l == 0 {
                diag
            } else {
                l
            }
        };
        let rel: Vec<u16> = labels
            .iter()
            .flatten()
            .map(|&l| canon(l) as u16)
            .collect();
        Self::from_canonical(n, rank, rel)
    }

    fn from_canonical(n: usize, rank: usize, rel: Vec<u16>) -> Result<AssociationScheme, SchemeError> {
        let at = |y: usize, z: usize| rel[y * n + z] as usize;

        let mut star = vec![usize::MAX; rank];
        for y in 0..n {
            for z in 0..n {
                let s = at(y, z);
                let t = at(z, y);
                if star[s] == usize::MAX {
                    star[s] = t;
                } else if star[s] != t {
                    return Err(SchemeError::StarViolation { s, y, z });
                }
            }
        }

        let mut intersection = vec![0u32; rank * rank * rank];
        let mut seen = vec![false; rank];
        let mut counts = vec![0u32; rank * rank];
        for y in 0..n {
            for z in 0..n {
                let r = at(y, z);
                counts.iter_mut().for_each(|c| *c = 0);
                for w in 0..n {
                    counts[at(y, w) * rank + at(w, z)] += 1;
                }
                if !seen[r] {
                    seen[r] = true;
                    for p in 0..rank {
                        for q in 0..rank {
                            intersection[(p * rank + q) * rank + r] = counts[p * rank + q];
                        }
                    }
                    continue;
                }
                for p in 0..rank {
                    for q in 0..rank {
                        if intersection[(p * rank + q) * rank + r] != counts[p * rank + q] {
                            return Err(SchemeError::RegularityViolation { p, q, r, y, z });
                        }
                    }
                }
            }
        }

        let valency: Vec<u64> = (0..rank)
            .map(|s| intersection[(s * rank + star[s]) * rank] as u64)
            .collect();
        for x in 0..n {
            let mut row = vec![0u64; rank];
            (0..n).for_each(|y| row[at(x, y)] += 1);
            if row != valency {
                return Err(SchemeError::InternalInconsistency(format!(
                    "row {x} does not realise the valencies"
                )));
            }
        }
        debug_assert_eq!(valency.iter().sum::<u64>(), n as u64);

        let mut table = Vec::with_capacity(rank * rank);
        for p in 0..rank {
            for q in 0..rank {
                table.push(
                    (0..rank)
                        .filter(|&r| intersection[(p * rank + q) * rank + r] != 0)
                        .collect(),
                );
            }
        }
        let hypergroup = Hypergroup::from_bits(rank, table).map_err(|e| {
            SchemeError::InternalInconsistency(format!("complex multiplication: {e}"))
        })?;
        if hypergroup.input_index(0) != 0
            || (0..rank).any(|s| hypergroup.inverse(s) != star[s])
        {
            return Err(SchemeError::InternalInconsistency(
                "hypergroup structure does not match the scheme".into(),
            ));
        }

        Ok(AssociationScheme {
            n_points: n,
            rank,
            rel,
            star,
            intersection,
            valency,
            hypergroup,
        })
    }

    /// The thin scheme of a group: `(x, y)` lies in relation `g` iff `y = xg`.
    pub fn from_group(g: &GroupTable) -> AssociationScheme {
        let n = g.order();
        let mut rel = vec![0u16; n * n];
        for x in 0..n {
            for h in 0..n {
                rel[x * n + g.mul(x, h)] = h as u16;
            }
        }
        Self::from_canonical(n, n, rel).expect("group schemes are association schemes")
    }

    /// Validates a Cayley table first, then builds its thin scheme.
    pub fn from_cayley_table(table: &[Vec<usize>]) -> Result<AssociationScheme, SchemeError> {
        Ok(Self::from_group(&GroupTable::from_table(table)?))
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Relation index of the pair `(x, y)`.
    pub fn relation(&self, x: usize, y: usize) -> usize {
        self.rel[x * self.n_points + y] as usize
    }

    pub fn matrix(&self) -> Vec<Vec<usize>> {
        (0..self.n_points)
            .map(|x| (0..self.n_points).map(|y| self.relation(x, y)).collect())
            .collect()
    }

    pub fn star(&self, s: usize) -> usize {
        self.star[s]
    }

    /// `a_pqr = |yp ∩ zq*|` for any `(y, z)` in `r`.
    pub fn intersection_number(&self, p: usize, q: usize, r: usize) -> u32 {
        self.intersection[(p * self.rank + q) * self.rank + r]
    }

    pub fn valency(&self, s: usize) -> u64 {
        self.valency[s]
    }

    pub fn valencies(&self) -> &[u64] {
        &self.valency
    }

    /// `n_S`, the number of points.
    pub fn total_valency(&self) -> u64 {
        self.n_points as u64
    }

    /// Every relation has valency 1.
    pub fn is_thin(&self) -> bool {
        self.valency.iter().all(|&v| v == 1)
    }

    /// `pq = { s : a_pqs ≠ 0 }`.
    pub fn complex_product(&self, p: usize, q: usize) -> ElementSubset {
        self.hypergroup.product(p, q)
    }

    /// The hypergroup defined by complex multiplication.
    pub fn to_hypergroup(&self) -> &Hypergroup {
        &self.hypergroup
    }

    pub fn relations<I: IntoIterator<Item = usize>>(&self, rels: I) -> ElementSubset {
        self.hypergroup.subset(rels)
    }

    pub fn subset_valency(&self, a: Bits) -> u64 {
        a.iter().map(|s| self.valency[s]).sum()
    }

    pub(crate) fn wrap_closed(&self, c: ClosedSubset) -> SchemeClosedSubset {
        SchemeClosedSubset {
            valency: self.subset_valency(c.bits()),
            relations: c,
        }
    }

    pub(crate) fn closed_from_bits(&self, b: Bits) -> SchemeClosedSubset {
        self.wrap_closed(self.hypergroup.wrap_closed(b))
    }

    /// Reinterprets a relation set as a closed subset.
    pub fn closed(&self, rels: &ElementSubset) -> Result<SchemeClosedSubset, SchemeError> {
        match self.hypergroup.as_closed(rels) {
            Ok(c) => Ok(self.wrap_closed(c)),
            Err(HypergroupError::NotClosed) => Err(SchemeError::NotClosed),
            Err(e) => Err(e.into()),
        }
    }

    pub fn closed_from<I: IntoIterator<Item = usize>>(
        &self,
        rels: I,
    ) -> Result<SchemeClosedSubset, SchemeError> {
        self.closed(&self.relations(rels))
    }

    pub fn identity(&self) -> SchemeClosedSubset {
        self.wrap_closed(self.hypergroup.identity())
    }

    pub fn whole(&self) -> SchemeClosedSubset {
        self.wrap_closed(self.hypergroup.whole())
    }

    pub fn closure(&self, rels: &ElementSubset) -> Result<SchemeClosedSubset, SchemeError> {
        Ok(self.wrap_closed(self.hypergroup.closure(rels)?))
    }

    /// All closed subsets with their valencies, in lattice listing order.
    pub fn closed_subsets(&self) -> Vec<SchemeClosedSubset> {
        self.hypergroup
            .closed_subsets()
            .into_iter()
            .map(|c| self.wrap_closed(c))
            .collect()
    }

    /// `n_U / n_T` for closed `T ⊆ U`.
    pub fn index(&self, t: &SchemeClosedSubset, u: &SchemeClosedSubset) -> Result<u64, SchemeError> {
        if !t.is_subset_of(u) {
            return Err(SchemeError::NotSubset);
        }
        if u.valency % t.valency != 0 {
            return Err(SchemeError::InternalInconsistency(format!(
                "n_T = {} does not divide n_U = {}",
                t.valency, u.valency
            )));
        }
        Ok(u.valency / t.valency)
    }

    pub fn is_strongly_normal(
        &self,
        t: &SchemeClosedSubset,
        u: &SchemeClosedSubset,
    ) -> Result<bool, SchemeError> {
        Ok(self.hypergroup.is_strongly_normal(&t.relations, &u.relations)?)
    }

    pub fn is_subnormal(
        &self,
        t: &SchemeClosedSubset,
        u: &SchemeClosedSubset,
    ) -> Result<bool, SchemeError> {
        Ok(self.hypergroup.is_subnormal(&t.relations, &u.relations)?)
    }

    /// A chain of strongly normal prime-index steps. The search works with
    /// valency indices directly and must agree with hypergroup solvability.
    pub fn solvable_chain(&self) -> Option<SchemeChain> {
        let lattice = self.hypergroup.closed_bits_list();
        let valencies: Vec<u64> = lattice.iter().map(|&b| self.subset_valency(b)).collect();
        let goal = lattice.len() - 1;
        let mut dead = vec![false; lattice.len()];
        let mut path = Vec::new();

        fn dfs(
            s: &AssociationScheme,
            lattice: &[Bits],
            valencies: &[u64],
            i: usize,
            goal: usize,
            dead: &mut [bool],
            path: &mut Vec<(usize, u64)>,
        ) -> bool {
            if i == goal {
                return true;
            }
            if dead[i] {
                return false;
            }
            for j in 0..lattice.len() {
                if j == i || !lattice[i].is_subset(lattice[j]) {
                    continue;
                }
                let index = valencies[j] / valencies[i];
                if valencies[j] % valencies[i] != 0 || !is_prime(index) {
                    continue;
                }
                if !s.hypergroup.strongly_normal_bits(lattice[i], lattice[j]) {
                    continue;
                }
                path.push((j, index));
                if dfs(s, lattice, valencies, j, goal, dead, path) {
                    return true;
                }
                path.pop();
            }
            dead[i] = true;
            false
        }

        let found = dfs(self, &lattice, &valencies, 0, goal, &mut dead, &mut path);
        assert_eq!(
            found,
            self.hypergroup.is_solvable(),
            "scheme-level and hypergroup-level solvability disagree"
        );
        if !found {
            return None;
        }
        let mut chain = vec![self.identity()];
        let mut indices = Vec::new();
        for (j, index) in path {
            chain.push(self.closed_from_bits(lattice[j]));
            indices.push(index);
        }
        Some(SchemeChain { chain, indices })
    }

    pub fn is_solvable(&self) -> bool {
        self.solvable_chain().is_some()
    }

    /// Every relation has π-number valency.
    pub fn is_pi_valenced(&self, pi: &PrimeSet) -> bool {
        self.valency.iter().all(|&v| pi.is_pi_number(v))
    }

    pub fn pi_predicates(&self, t: &SchemeClosedSubset, pi: &PrimeSet) -> PiPredicates {
        let pi_valenced = t.relations.iter().all(|s| pi.is_pi_number(self.valency[s]));
        let closed_pi_subset = pi_valenced && pi.is_pi_number(t.valency);
        let index = self.total_valency() / t.valency;
        let hall_pi_subset = closed_pi_subset && pi.is_pi_prime_number(index);
        PiPredicates {
            pi_valenced,
            closed_pi_subset,
            hall_pi_subset,
        }
    }

    /// The complex product `s*Ts`.
    pub fn conjugate_subset(&self, t: &SchemeClosedSubset, s: usize) -> ElementSubset {
        let h = &self.hypergroup;
        let left = h.set_prod_bits(Bits::singleton(self.star[s]), t.bits());
        h.wrap(h.set_prod_bits(left, Bits::singleton(s)))
    }

    /// Elements conjugating `T` onto `U`, and `U` onto `T`, by full scan.
    pub fn conjugacy(&self, t: &SchemeClosedSubset, u: &SchemeClosedSubset) -> Conjugacy {
        let scan = |a: &SchemeClosedSubset, b: &SchemeClosedSubset| {
            (0..self.rank)
                .filter(|&s| self.conjugate_subset(a, s).bits() == b.bits())
                .collect()
        };
        Conjugacy {
            forward: scan(t, u),
            backward: scan(u, t),
        }
    }

    /// The quotient scheme `S//T` on the point classes `xT`.
    pub fn quotient_scheme(&self, t: &SchemeClosedSubset) -> Result<QuotientScheme, SchemeError> {
        self.hypergroup.check(t.relations.subset())?;
        let n = self.n_points;
        let mut uf = UnionFind::new(n);
        for x in 0..n {
            for y in 0..n {
                if t.contains(self.relation(x, y)) {
                    uf.union(x, y);
                }
            }
        }
        let mut class_of_root = vec![usize::MAX; n];
        let mut point_class = vec![0; n];
        let mut m = 0;
        for x in 0..n {
            let r = uf.find(x);
            if class_of_root[r] == usize::MAX {
                class_of_root[r] = m;
                m += 1;
            }
            point_class[x] = class_of_root[r];
        }
        let reps: Vec<usize> = (0..m)
            .map(|c| point_class.iter().position(|&pc| pc == c).unwrap())
            .collect();

        let hq = self.hypergroup.quotient(&t.relations)?;
        let mut labels = vec![vec![0; m]; m];
        for x in 0..n {
            for y in 0..n {
                let label = hq.coset_of(self.relation(x, y));
                let slot = &mut labels[point_class[x]][point_class[y]];
                if x == reps[point_class[x]] && y == reps[point_class[y]] {
                    *slot = label;
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                if labels[point_class[x]][point_class[y]] != hq.coset_of(self.relation(x, y)) {
                    return Err(SchemeError::InternalInconsistency(format!(
                        "classes of {x} and {y} are joined by two double cosets"
                    )));
                }
            }
        }
        let scheme = AssociationScheme::from_matrix(&labels)?;
        if scheme.rank() != hq.order() {
            return Err(SchemeError::InternalInconsistency(
                "quotient scheme rank differs from the number of double cosets".into(),
            ));
        }
        Ok(QuotientScheme {
            scheme,
            point_class,
            base: *t,
            hypergroup_quotient: hq,
        })
    }
}

impl fmt::Debug for AssociationScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AssociationScheme")
            .field("n_points", &self.n_points)
            .field("rank", &self.rank)
            .field("valency", &self.valency)
            .finish_non_exhaustive()
    }
}

/// `S//T` as a concrete scheme, with its links back to `S`.
#[derive(Clone, Debug)]
pub struct QuotientScheme {
    scheme: AssociationScheme,
    point_class: Vec<usize>,
    base: SchemeClosedSubset,
    hypergroup_quotient: QuotientHypergroup,
}

impl QuotientScheme {
    pub fn scheme(&self) -> &AssociationScheme {
        &self.scheme
    }

    /// The closed subset `T` factored out.
    pub fn base(&self) -> &SchemeClosedSubset {
        &self.base
    }

    /// Class index `xT` of each point.
    pub fn point_class(&self, x: usize) -> usize {
        self.point_class[x]
    }

    /// Quotient relation `s^T` of a parent relation.
    pub fn relation_of(&self, s: usize) -> usize {
        self.hypergroup_quotient.coset_of(s)
    }

    /// The double coset `TsT` behind quotient relation `i`.
    pub fn double_coset(&self, i: usize) -> ElementSubset {
        self.hypergroup_quotient.coset(i)
    }

    pub fn hypergroup_quotient(&self) -> &QuotientHypergroup {
        &self.hypergroup_quotient
    }

    /// The scheme's complex multiplication coincides with the hypergroup
    /// quotient `H//T` (both number double cosets by smallest member).
    pub fn coincides_with_hypergroup_quotient(&self) -> bool {
        self.scheme
            .to_hypergroup()
            .same_table(self.hypergroup_quotient.hypergroup())
    }

    /// `n_{s^T} · n_T = n_{TsT}` for every relation `s` of the parent.
    pub fn valency_law_holds(&self, parent: &AssociationScheme) -> bool {
        (0..parent.rank()).all(|s| {
            let q = self.relation_of(s);
            let tst = parent.subset_valency(self.double_coset(q).bits());
            self.scheme.valency(q) * self.base.valency() == tst
        })
    }

    /// Lifts a closed subset of `S//T` to the closed subset of `S` containing `T`.
    pub fn lift(
        &self,
        parent: &AssociationScheme,
        c: &SchemeClosedSubset,
    ) -> Result<SchemeClosedSubset, SchemeError> {
        let qh = self.hypergroup_quotient.hypergroup();
        let as_quotient = qh.wrap(c.bits());
        let lifted = self.hypergroup_quotient.lift_closed(&as_quotient)?;
        Ok(parent.wrap_closed(lifted))
    }

    /// `U//T` for a closed `U ⊇ T`.
    pub fn project(&self, u: &SchemeClosedSubset) -> Result<SchemeClosedSubset, SchemeError> {
        let projected = self.hypergroup_quotient.project(u.relations())?;
        Ok(self.scheme.closed_from_bits(projected.bits()))
    }
}
