use std::sync::{OnceLock, RwLock};

use rug::Integer;

use crate::numerics::Rational;

/// Memo of exact Bernoulli numbers, `B_1 = -1/2` convention
/// (generating function `t·e^{tx}/(e^t − 1)` at `x = 0`).
///
/// Readers share the table through an `RwLock`; extension happens under the
/// write lock, so concurrent callers always observe identical exact values.
#[derive(Debug)]
pub struct BernoulliCache {
    table: RwLock<Vec<Rational>>,
}

impl Default for BernoulliCache {
    fn default() -> Self {
        Self::new()
    }
}

impl BernoulliCache {
    pub fn new() -> Self {
        BernoulliCache {
            table: RwLock::new(vec![Rational::one(), Rational::new(-1, 2)]),
        }
    }

    /// Process-wide shared cache.
    pub fn global() -> &'static BernoulliCache {
        static GLOBAL: OnceLock<BernoulliCache> = OnceLock::new();
        GLOBAL.get_or_init(BernoulliCache::new)
    }

    /// Number of entries currently memoised.
    pub fn len(&self) -> usize {
        self.table.read().expect("bernoulli cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Exact `B_n`, extending the table if needed.
    pub fn get(&self, n: usize) -> Rational {
        {
            let table = self.table.read().expect("bernoulli cache poisoned");
            if let Some(b) = table.get(n) {
                return b.clone();
            }
        }
        self.extend_to(n);
        self.table.read().expect("bernoulli cache poisoned")[n].clone()
    }

    /// Copies `B_0..=B_n` out of the cache.
    pub fn prefix(&self, n: usize) -> Vec<Rational> {
        self.get(n);
        self.table.read().expect("bernoulli cache poisoned")[..=n].to_vec()
    }

    fn extend_to(&self, n: usize) {
        let mut table = self.table.write().expect("bernoulli cache poisoned");
        while table.len() <= n {
            let m = table.len();
            let next = if m % 2 == 1 { Rational::zero() } else { next_even(&table, m) };
            table.push(next);
        }
    }
}

/// `B_m` for even `m ≥ 2` from `Σ_{k=0}^{m} C(m+1,k)·B_k = 0`.
///
/// The sum is accumulated over the least common denominator of the known
/// terms so each step is a plain integer multiply-add.
fn next_even(table: &[Rational], m: usize) -> Rational {
    let mut lcd = Integer::from(1);
    for b in table.iter().filter(|b| !b.is_zero()) {
        lcd.lcm_mut(b.denom());
    }
    let mut numerator = Integer::new();
    let mut binom = Integer::from(1); // C(m+1, 0)
    for (k, b) in table.iter().enumerate() {
        if !b.is_zero() {
            let scale = Integer::from(&lcd / b.denom());
            numerator += Integer::from(&binom * b.numer()) * scale;
        }
        binom *= (m + 1 - k) as u64;
        binom /= (k + 1) as u64;
    }
    -Rational::new(numerator, lcd * (m as u64 + 1))
}
