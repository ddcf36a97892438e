//! Integer machinery: the split-length sequence `t(n)`, its preimage
//! intervals, exact partition counts and the Erdős–Lehner estimate.
//!
//! `t(1)=0, t(2)=1, t(3)=2` and `t(n) = min_{d≥1} d + t(⌈(n−1)/d⌉)`.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Up to this `n` the recurrence is minimised over every `d`; above it
/// only `d ∈ {1,2,3}` are tried (larger `d` never win once `n ≥ 11`).
pub const FULL_RANGE_LIMIT: usize = 10_000;

pub const DEFAULT_CAPACITY: usize = 1_000_000;

#[derive(Debug, Clone)]
pub struct TTable {
    values: Vec<u32>,
    argmin: Vec<u32>,
}

impl TTable {
    pub fn new(capacity: usize) -> Self {
        Self::with_full_range(capacity, FULL_RANGE_LIMIT)
    }

    /// Same as [`TTable::new`] but minimising over all `d` up to `full_limit`.
    pub fn with_full_range(capacity: usize, full_limit: usize) -> Self {
        let cap = capacity.max(3);
        let mut values = vec![0u32; cap + 1];
        let mut argmin = vec![0u32; cap + 1];
        values[2] = 1;
        values[3] = 2;
        argmin[2] = 1;
        argmin[3] = 2;
        for n in 4..=cap {
            let dmax = if n <= full_limit { n - 1 } else { 3 };
            let (mut best, mut arg) = (u32::MAX, 0);
            for d in 1..=dmax {
                let cand = d as u32 + values[(n - 1).div_ceil(d)];
                if cand < best {
                    best = cand;
                    arg = d as u32;
                }
            }
            values[n] = best;
            argmin[n] = arg;
        }
        TTable { values, argmin }
    }

    pub fn capacity(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> Result<u32> {
        if n == 0 || n > self.capacity() {
            return Err(Error::OutOfRange { value: n as u64, lo: 1, hi: self.capacity() as u64 });
        }
        Ok(self.values[n])
    }

    /// Like [`get`](Self::get) for callers that already know `n` is in range.
    pub fn t(&self, n: usize) -> u32 {
        self.values[n]
    }

    /// Smallest minimising `d` for `n ≥ 4`.
    pub fn argmin(&self, n: usize) -> u32 {
        self.argmin[n]
    }

    pub fn values(&self) -> &[u32] {
        &self.values[1..]
    }

    /// `max_n (3·log₃ n − t(n))` over the table: the smallest `C` with
    /// `t(n) ≥ 3 log₃ n − C` for every tabulated `n`.
    pub fn empirical_log_constant(&self) -> f64 {
        (1..=self.capacity())
            .map(|n| 3.0 * (n as f64).ln() / 3f64.ln() - self.values[n] as f64)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn intervals(&self) -> IntervalTable {
        let mut rows: Vec<(u64, u64)> = Vec::new();
        for n in 1..=self.capacity() {
            let h = self.values[n] as usize;
            if h == rows.len() {
                rows.push((n as u64, n as u64));
            } else {
                rows[h].1 = n as u64;
            }
        }
        IntervalTable { rows, capacity: self.capacity() as u64 }
    }
}

/// `t⁻¹(h)` for every `h` reached by the table. The topmost interval may be
/// cut off by the table capacity and is reported as out of range.
#[derive(Debug, Clone, Serialize)]
pub struct IntervalTable {
    rows: Vec<(u64, u64)>,
    capacity: u64,
}

impl IntervalTable {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn preimage(&self, h: u32) -> Result<(u64, u64)> {
        match self.rows.get(h as usize) {
            Some(&row) if row.1 < self.capacity => Ok(row),
            _ => Err(Error::OutOfRange { value: h as u64, lo: 0, hi: self.rows.len().saturating_sub(2) as u64 }),
        }
    }

    /// All complete intervals, `(h, lo, hi)`.
    pub fn complete_rows(&self) -> impl Iterator<Item = (u32, u64, u64)> + '_ {
        self.rows.iter().enumerate().filter(|(_, r)| r.1 < self.capacity).map(|(h, &(lo, hi))| (h as u32, lo, hi))
    }
}

/// Closed form of `t⁻¹(h)` for `h ≥ 8`, by residue of `h` mod 3.
pub fn closed_form_preimage(h: u32) -> Option<(u64, u64)> {
    if h < 8 {
        return None;
    }
    let p = |e: u32| 3u64.pow(e);
    let half = |e: u32| (p(e) - 1) / 2;
    let (k, r) = ((h + 1) / 3, (h + 1) % 3);
    Some(match r {
        // h = 3k - 1
        0 => (half(k) + p(k - 1) + p(k - 3) + 1, half(k + 1) - p(k - 1) + p(k - 2)),
        // h = 3k
        1 => {
            let k = h / 3;
            (half(k + 1) - p(k - 1) + p(k - 2) + 1, half(k + 1) + p(k - 1))
        }
        // h = 3k + 1
        _ => {
            let k = (h - 1) / 3;
            (half(k + 1) + p(k - 1) + 1, half(k + 1) + p(k) + p(k - 2))
        }
    })
}

/// `10 · Σ_{i=0}^{ℓ} 3^i`.
pub fn anchor_point(ell: u32) -> u64 {
    10 * (3u64.pow(ell + 1) - 1) / 2
}

/// `n_0 = 10`, `n_{ℓ+1} = 3 n_ℓ + 1`, i.e. `10 · 3^ℓ + Σ_{i<ℓ} 3^i`.
/// Along this chain `t` grows by exactly 3 per step.
pub fn chain_point(ell: u32) -> u64 {
    10 * 3u64.pow(ell) + (3u64.pow(ell) - 1) / 2
}

/// `n ≥ 11` at which `t(n) ≠ 3 + t(⌈(n−1)/3⌉)`.
pub fn recurrence_exceptions(t: &TTable) -> Vec<usize> {
    (11..=t.capacity()).filter(|&n| t.t(n) != 3 + t.t((n - 1).div_ceil(3))).collect()
}

/// Number of ways to write `n` as a sum of `k` positive integers, ignoring
/// order. With `allow_zero`, parts may be zero.
pub fn count_partitions(n: usize, k: usize, allow_zero: bool) -> BigUint {
    if allow_zero {
        return count_partitions(n + k, k, false);
    }
    if k == 0 {
        return if n == 0 { BigUint::one() } else { BigUint::zero() };
    }
    if n < k {
        return BigUint::zero();
    }
    // p[j][i]: partitions of i into exactly j parts;
    // p(i, j) = p(i-1, j-1) + p(i-j, j)
    let mut prev: Vec<BigUint> = vec![BigUint::zero(); n + 1];
    prev[0] = BigUint::one();
    for j in 1..=k {
        let mut cur = vec![BigUint::zero(); n + 1];
        for i in j..=n {
            let a = &prev[i - 1];
            let b = cur[i - j].clone();
            cur[i] = a + b;
        }
        prev = cur;
    }
    prev[n].clone()
}

/// `C(n−1, k−1) / k!`, the leading term of the partition count.
pub fn erdos_lehner_estimate(n: u64, k: u64) -> f64 {
    assert!(1 <= k && k <= n, "need 1 <= k <= n");
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 1..k {
        num *= n - i;
        den *= i;
    }
    for i in 1..=k {
        den *= i;
    }
    ratio(&num, &den)
}

pub(crate) fn ratio(num: &BigUint, den: &BigUint) -> f64 {
    let shift = num.bits().max(den.bits()).saturating_sub(1000);
    let a = (num >> shift).to_f64().unwrap_or(f64::INFINITY);
    let b = (den >> shift).to_f64().unwrap_or(f64::INFINITY);
    a / b
}
