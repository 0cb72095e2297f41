//! Finite groups given by Cayley tables, plus the small families used for
//! testing the group correspondence.

use thiserror::Error;

use crate::bits::Bits;
use crate::hypergroup::Hypergroup;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("not a group: {0}")]
    NotAGroup(String),
}

/// A Cayley table `mul[x][g] = xg`. Element 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    n: usize,
    mul: Vec<usize>,
    inverse: Vec<usize>,
}

impl GroupTable {
    /// Validates a Cayley table. The identity is moved to index 0 if needed.
    pub fn from_table(table: &[Vec<usize>]) -> Result<GroupTable, GroupError> {
        let n = table.len();
        let bad = |m: String| Err(GroupError::NotAGroup(m));
        if n == 0 {
            return bad("empty table".into());
        }
        for (x, row) in table.iter().enumerate() {
            if row.len() != n {
                return bad(format!("row {x} has {} entries, expected {n}", row.len()));
            }
            if let Some(&v) = row.iter().find(|&&v| v >= n) {
                return bad(format!("row {x} names element {v} outside 0..{n}"));
            }
        }
        let m = |a: usize, b: usize| table[a][b];
        let Some(e) = (0..n).find(|&e| (0..n).all(|x| m(x, e) == x && m(e, x) == x)) else {
            return bad("no identity element".into());
        };
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return bad(format!("associativity fails for ({a}, {b}, {c})"));
                    }
                }
            }
        }
        let mut inverse = vec![0; n];
        for a in 0..n {
            match (0..n).find(|&b| m(a, b) == e && m(b, a) == e) {
                Some(b) => inverse[a] = b,
                None => return bad(format!("element {a} has no inverse")),
            }
        }
        let to_new = |i: usize| {
            if i == e {
                0
            } else if i == 0 {
                e
            } else {
                i
            }
        };
        let mut mul = vec![0; n * n];
        let mut inv = vec![0; n];
        for a in 0..n {
            inv[to_new(a)] = to_new(inverse[a]);
            for b in 0..n {
                mul[to_new(a) * n + to_new(b)] = to_new(m(a, b));
            }
        }
        Ok(GroupTable {
            n,
            mul,
            inverse: inv,
        })
    }

    /// Reads a thin hypergroup as a group; `None` if some product is not a singleton.
    pub fn from_thin_hypergroup(h: &Hypergroup) -> Option<GroupTable> {
        let n = h.order();
        let mut table = vec![vec![0; n]; n];
        for (a, row) in table.iter_mut().enumerate() {
            for (b, slot) in row.iter_mut().enumerate() {
                let p = h.prod_bits(a, b);
                if p.len() != 1 {
                    return None;
                }
                *slot = p.min().unwrap();
            }
        }
        GroupTable::from_table(&table).ok()
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|a| (0..self.n).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    /// The group as a thin hypergroup with singleton products.
    pub fn to_hypergroup(&self) -> Hypergroup {
        let table = (0..self.n * self.n)
            .map(|i| Bits::singleton(self.mul[i]))
            .collect();
        Hypergroup::from_bits(self.n, table).expect("groups are hypergroups")
    }

    /// `g⁻¹ A g`.
    pub fn conjugate(&self, a: Bits, g: usize) -> Bits {
        let gi = self.inverse(g);
        a.iter().map(|x| self.mul(self.mul(gi, x), g)).collect()
    }

    pub fn cyclic(n: usize) -> GroupTable {
        let t: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        GroupTable::from_table(&t).expect("cyclic table")
    }

    /// Dihedral group of order `2m`: elements `r^i` (index `i`) and `s r^i` (index `m + i`).
    pub fn dihedral(m: usize) -> GroupTable {
        let n = 2 * m;
        let decode = |x: usize| (x >= m, x % m);
        let encode = |s: bool, i: usize| if s { m + i } else { i };
        let t: Vec<Vec<usize>> = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        let (sa, ia) = decode(a);
                        let (sb, ib) = decode(b);
                        // (s^sa r^ia)(s^sb r^ib) = s^(sa+sb) r^(±ia + ib)
                        let i = if sb { (m - ia % m + ib) % m } else { (ia + ib) % m };
                        encode(sa ^ sb, i)
                    })
                    .collect()
            })
            .collect();
        GroupTable::from_table(&t).expect("dihedral table")
    }

    /// Group of permutations listed in `perms` under `(pq)(i) = q(p(i))`.
    pub fn from_permutations(perms: &[Vec<usize>]) -> Result<GroupTable, GroupError> {
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p);
        let mut t = vec![vec![0; perms.len()]; perms.len()];
        for (a, pa) in perms.iter().enumerate() {
            for (b, pb) in perms.iter().enumerate() {
                let prod: Vec<usize> = pa.iter().map(|&i| pb[i]).collect();
                t[a][b] = index(&prod)
                    .ok_or_else(|| GroupError::NotAGroup("permutations not closed".into()))?;
            }
        }
        GroupTable::from_table(&t)
    }

    /// Symmetric group on `k` points, permutations in lexicographic order.
    pub fn symmetric(k: usize) -> GroupTable {
        GroupTable::from_permutations(&permutations(k)).expect("symmetric group")
    }

    pub fn alternating(k: usize) -> GroupTable {
        let even: Vec<Vec<usize>> = permutations(k).into_iter().filter(|p| is_even(p)).collect();
        GroupTable::from_permutations(&even).expect("alternating group")
    }

    /// Quaternion group: `±1, ±i, ±j, ±k` as indices `0..8` (`2u + sign`).
    pub fn quaternion() -> GroupTable {
        // unit products: 1=0, i=1, j=2, k=3; result (unit, negated)
        let unit = |a: usize, b: usize| -> (usize, bool) {
            match (a, b) {
                (0, x) | (x, 0) => (x, false),
                (x, y) if x == y => (0, true),
                (1, 2) => (3, false),
                (2, 3) => (1, false),
                (3, 1) => (2, false),
                (2, 1) => (3, true),
                (3, 2) => (1, true),
                (1, 3) => (2, true),
                _ => unreachable!(),
            }
        };
        let t: Vec<Vec<usize>> = (0..8)
            .map(|a| {
                (0..8)
                    .map(|b| {
                        let (u, neg) = unit(a / 2, b / 2);
                        let sign = (a % 2) ^ (b % 2) ^ usize::from(neg);
                        2 * u + sign
                    })
                    .collect()
            })
            .collect();
        GroupTable::from_table(&t).expect("quaternion table")
    }
}

pub(crate) fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(k: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(k, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(k, &mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

fn is_even(p: &[usize]) -> bool {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    inversions % 2 == 0
}
