//! Prime sets and π-numbers.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Trial division; the numbers involved are tiny.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors in increasing order.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrimeSetError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("cannot parse {0:?} as a prime")]
    Syntax(String),
}

/// A finite set of primes π.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct PrimeSet(BTreeSet<u64>);

impl PrimeSet {
    pub fn empty() -> Self {
        PrimeSet(BTreeSet::new())
    }

    pub fn new<I: IntoIterator<Item = u64>>(primes: I) -> Result<Self, PrimeSetError> {
        let mut set = BTreeSet::new();
        for p in primes {
            if !is_prime(p) {
                return Err(PrimeSetError::NotPrime(p));
            }
            set.insert(p);
        }
        Ok(PrimeSet(set))
    }

    /// The primes dividing `n`.
    pub fn of(n: u64) -> Self {
        PrimeSet(prime_divisors(n).into_iter().collect())
    }

    pub fn contains(&self, p: u64) -> bool {
        self.0.contains(&p)
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Every prime divisor of `n` lies in π. `1` is a π-number for every π.
    pub fn is_pi_number(&self, n: u64) -> bool {
        n > 0 && prime_divisors(n).into_iter().all(|p| self.contains(p))
    }

    /// No prime divisor of `n` lies in π.
    pub fn is_pi_prime_number(&self, n: u64) -> bool {
        n > 0 && prime_divisors(n).into_iter().all(|p| !self.contains(p))
    }

    /// Largest divisor of `n` that is a π-number.
    pub fn pi_part(&self, mut n: u64) -> u64 {
        let mut part = 1;
        for p in prime_divisors(n) {
            if self.contains(p) {
                while n % p == 0 {
                    n /= p;
                    part *= p;
                }
            }
        }
        part
    }

    /// All subsets of this set, smallest first.
    pub fn subsets(&self) -> Vec<PrimeSet> {
        let items: Vec<u64> = self.iter().collect();
        let mut out: Vec<PrimeSet> = (0u32..1 << items.len())
            .map(|mask| {
                PrimeSet(
                    items
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &p)| p)
                        .collect(),
                )
            })
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }
}

impl TryFrom<Vec<u64>> for PrimeSet {
    type Error = PrimeSetError;

    fn try_from(v: Vec<u64>) -> Result<Self, Self::Error> {
        PrimeSet::new(v)
    }
}

impl From<PrimeSet> for Vec<u64> {
    fn from(p: PrimeSet) -> Self {
        p.0.into_iter().collect()
    }
}

/// Comma-separated primes, e.g. `2,3`. The empty string is the empty set.
impl FromStr for PrimeSet {
    type Err = PrimeSetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(PrimeSet::empty());
        }
        let primes = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| PrimeSetError::Syntax(t.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        PrimeSet::new(primes)
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}
