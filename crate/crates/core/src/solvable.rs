//! Solvable hypergroups: chains `{1} = F0 ⊆ … ⊆ Fn = H` whose steps
//! `Fi//F(i-1)` are thin of prime order.

use crate::bits::Bits;
use crate::hypergroup::{ClosedSubset, Hypergroup};
use crate::primes::is_prime;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolvableChain {
    pub chain: Vec<ClosedSubset>,
    /// `step_primes[i] = |F(i+1)//Fi|`.
    pub step_primes: Vec<u64>,
}

impl SolvableChain {
    pub fn len(&self) -> usize {
        self.step_primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.step_primes.is_empty()
    }
}

/// Number of double cosets `FhF` inside the closed superset `g`.
pub(crate) fn double_coset_count(h: &Hypergroup, f: Bits, g: Bits) -> usize {
    let mut left = g;
    let mut count = 0;
    while let Some(x) = left.min() {
        let c = h.set_prod_bits(h.set_prod_bits(f, Bits::singleton(x)), f);
        left = left.difference(c);
        count += 1;
    }
    count
}

/// Valid step `f ⊂ g`: `g//f` thin (equivalently `f` strongly normal in `g`)
/// and of prime order.
pub(crate) fn prime_thin_step(h: &Hypergroup, f: Bits, g: Bits) -> Option<u64> {
    if f == g || !f.is_subset(g) || !h.strongly_normal_bits(f, g) {
        return None;
    }
    let n = double_coset_count(h, f, g) as u64;
    is_prime(n).then_some(n)
}

struct ChainSearch<'a> {
    h: &'a Hypergroup,
    lattice: Vec<Bits>,
    covers: Vec<Vec<usize>>,
    dead: Vec<bool>,
}

impl ChainSearch<'_> {
    fn dfs(&mut self, i: usize, goal: usize, path: &mut Vec<(usize, u64)>) -> bool {
        if i == goal {
            return true;
        }
        if self.dead[i] {
            return false;
        }
        for c in self.covers[i].clone() {
            if let Some(p) = prime_thin_step(self.h, self.lattice[i], self.lattice[c]) {
                path.push((c, p));
                if self.dfs(c, goal, path) {
                    return true;
                }
                path.pop();
            }
        }
        self.dead[i] = true;
        false
    }
}

fn minimal_covers(lattice: &[Bits]) -> Vec<Vec<usize>> {
    lattice
        .iter()
        .map(|&f| {
            let above: Vec<usize> = (0..lattice.len())
                .filter(|&j| lattice[j] != f && f.is_subset(lattice[j]))
                .collect();
            above
                .iter()
                .copied()
                .filter(|&j| {
                    !above
                        .iter()
                        .any(|&m| m != j && lattice[m].is_subset(lattice[j]))
                })
                .collect()
        })
        .collect()
}

impl Hypergroup {
    /// A witness chain, searched depth-first through minimal closed supersets in
    /// lattice order; `None` when the hypergroup is not solvable.
    pub fn solvable_chain(&self) -> Option<SolvableChain> {
        let lattice = self.closed_bits_list();
        let covers = minimal_covers(&lattice);
        let goal = lattice.len() - 1;
        debug_assert_eq!(lattice[goal], Bits::full(self.order()));
        debug_assert_eq!(lattice[0], Bits::singleton(0));
        let mut search = ChainSearch {
            h: self,
            dead: vec![false; lattice.len()],
            lattice,
            covers,
        };
        let mut path = Vec::new();
        if !search.dfs(0, goal, &mut path) {
            return None;
        }
        let mut chain = vec![self.identity()];
        let mut step_primes = Vec::new();
        for (i, p) in path {
            chain.push(self.wrap_closed(search.lattice[i]));
            step_primes.push(p);
        }
        Some(SolvableChain { chain, step_primes })
    }

    pub fn is_solvable(&self) -> bool {
        self.solvable_chain().is_some()
    }
}
