//! The explicit arithmetic Rado complex on the positive integers.
//!
//! Let `p_1 = 2, p_2 = 3, ...` be the primes. An increasing sequence
//! `a_0 < ... < a_k` is a simplex when every proper subsequence is one and the
//! binary digit of `a_k` at position `p_{a_0} p_{a_1} ... p_{a_{k-1}}` is 1.
//! Single labels are always vertices. "Digit at position m" is the
//! coefficient of `2^m`.
//!
//! For a finite vertex set `U` and a subcomplex `A` of `X_U`, the vertex
//! `v = Σ_{σ∈A} 2^{N_σ} + 2^{K_U}` with `N_σ = Π_{a∈σ} p_a` and
//! `K_U = 1 + Π_{w∈U} p_w` has link trace exactly `A` on `U`.
//!
//! Labels blow up quickly: the witness for `U ⊆ {1..5}` already has about
//! 2300 binary digits. Such labels can still be tested as the *largest* vertex
//! of a simplex (only their bits are read), but they cannot serve as prime
//! indices. Digit tests first compare against the lower bound `p_a > a`: when
//! `Π (a + 1)` already exceeds the bit length of the top label the digit is
//! zero and no prime needs to be computed. Only when that shortcut does not
//! apply is the exact prime needed, and labels above the prime bound then
//! produce [`Error::LabelTooLarge`].

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::simplex::Simplex;
use crate::vertex::Vertex;
use crate::view::sorted_unique;

pub const DEFAULT_PRIME_BOUND: u64 = 10_000_000;
pub const DEFAULT_WINDOW_CAP: usize = 20;
/// Largest `K_U` for which a witness label is materialized.
pub const DEFAULT_WITNESS_BIT_BUDGET: u64 = 1 << 26;

/// Growable table of primes, filled by an odd-only bitset sieve.
#[derive(Debug, Default)]
struct PrimeTable {
    primes: Vec<u64>,
}

impl PrimeTable {
    fn nth(&mut self, i: usize) -> u64 {
        if self.primes.len() < i {
            self.fill(i.max(2 * self.primes.len()));
        }
        self.primes[i - 1]
    }

    fn fill(&mut self, count: usize) {
        // Rosser: p_n < n (ln n + ln ln n) for n >= 6
        let n = count.max(6) as f64;
        let limit = (n * (n.ln() + n.ln().ln())).ceil() as u64 + 16;
        let half = (limit / 2 + 1) as usize;
        // bit k stands for the odd number 2k + 1
        let mut composite = vec![0u64; half / 64 + 1];
        let mut k = 1usize;
        while (2 * k + 1) * (2 * k + 1) <= limit as usize {
            if composite[k / 64] >> (k % 64) & 1 == 0 {
                let p = 2 * k + 1;
                let mut m = p * p / 2;
                while m < half {
                    composite[m / 64] |= 1 << (m % 64);
                    m += p;
                }
            }
            k += 1;
        }
        let mut primes = vec![2];
        primes.extend((1..half).filter(|k| composite[k / 64] >> (k % 64) & 1 == 0).map(|k| 2 * k as u64 + 1));
        self.primes = primes;
    }
}

/// Handle on the arithmetic complex with a prime cache and a membership memo.
/// Both caches sit behind mutexes, so a handle can be shared across threads.
#[derive(Debug)]
pub struct ArithmeticRado {
    prime_bound: u64,
    window_cap: usize,
    witness_bit_budget: u64,
    primes: Mutex<PrimeTable>,
    memo: Mutex<HashMap<Simplex, bool>>,
}

impl Default for ArithmeticRado {
    fn default() -> Self {
        Self::new()
    }
}

impl ArithmeticRado {
    pub fn new() -> Self {
        ArithmeticRado {
            prime_bound: DEFAULT_PRIME_BOUND,
            window_cap: DEFAULT_WINDOW_CAP,
            witness_bit_budget: DEFAULT_WITNESS_BIT_BUDGET,
            primes: Mutex::new(PrimeTable::default()),
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn with_prime_bound(mut self, bound: u64) -> Self {
        self.prime_bound = bound;
        self
    }

    pub fn with_window_cap(mut self, cap: usize) -> Self {
        self.window_cap = cap;
        self
    }

    pub fn with_witness_bit_budget(mut self, bits: u64) -> Self {
        self.witness_bit_budget = bits;
        self
    }

    /// The `i`-th prime, 1-based.
    pub fn nth_prime(&self, i: u64) -> Result<u64> {
        if i == 0 {
            return Err(Error::InvalidInput("primes are indexed from 1".into()));
        }
        if i > self.prime_bound {
            return Err(Error::LabelTooLarge { label: Vertex::from(i), bound: self.prime_bound });
        }
        Ok(self.primes.lock().expect("prime table lock").nth(i as usize))
    }

    fn prime_of(&self, v: &Vertex) -> Result<u64> {
        match v.as_u64() {
            Some(i) if i <= self.prime_bound => self.nth_prime(i),
            _ => Err(Error::LabelTooLarge { label: v.clone(), bound: self.prime_bound }),
        }
    }

    fn product_of_primes<'a>(&self, labels: impl IntoIterator<Item = &'a Vertex>) -> Result<BigUint> {
        labels.into_iter().try_fold(BigUint::one(), |acc, v| Ok(acc * self.prime_of(v)?))
    }

    /// `N_σ`, the product of the primes indexed by the vertices of `σ`.
    pub fn n_sigma(&self, sigma: &Simplex) -> Result<BigUint> {
        self.product_of_primes(sigma.vertices())
    }

    /// `K_U = 1 + Π_{w∈U} p_w`; exceeds `N_σ` for every simplex spanned by `U`.
    pub fn k_u(&self, u: &[Vertex]) -> Result<BigUint> {
        Ok(self.product_of_primes(&sorted_unique(u))? + BigUint::one())
    }

    /// Digit of `top` at position `Π_{a∈indices} p_a`.
    fn digit_at_prime_product(&self, top: &Vertex, indices: &[Vertex]) -> Result<bool> {
        let bits = BigUint::from(top.bits());
        let mut lower = BigUint::one();
        for a in indices {
            lower *= a.succ_big();
            if lower >= bits {
                return Ok(false);
            }
        }
        let position = self.product_of_primes(indices)?;
        Ok(match position.to_u64() {
            Some(m) => top.bit(m),
            None => false,
        })
    }

    /// Membership in the arithmetic complex, memoized per simplex.
    pub fn is_simplex(&self, sigma: &Simplex) -> Result<bool> {
        if sigma.len() == 1 {
            return Ok(true);
        }
        if let Some(&known) = self.memo.lock().expect("memo lock").get(sigma) {
            return Ok(known);
        }
        let mut result = true;
        for face in sigma.boundary() {
            if !self.is_simplex(&face)? {
                result = false;
                break;
            }
        }
        if result {
            let lower = &sigma.vertices()[..sigma.len() - 1];
            result = self.digit_at_prime_product(sigma.last(), lower)?;
        }
        self.memo.lock().expect("memo lock").insert(sigma.clone(), result);
        Ok(result)
    }

    /// The induced subcomplex of the arithmetic complex on `u`, built level by
    /// level; supersets of non-simplexes are never tested.
    pub fn window(&self, u: &[Vertex]) -> Result<Complex> {
        let pool = sorted_unique(u);
        if pool.len() > self.window_cap {
            return Err(Error::size("window vertex count", pool.len(), self.window_cap));
        }
        let mut out = Complex::discrete(pool.iter().cloned());
        let mut layer: Vec<Simplex> = pool.iter().cloned().map(Simplex::vertex).collect();
        while !layer.is_empty() {
            let mut next = Vec::new();
            for s in &layer {
                for w in pool.iter().filter(|w| *w > s.last()) {
                    let cand = s.with(w);
                    if cand.boundary().all(|b| out.contains(&b)) && self.is_simplex(&cand)? {
                        next.push(cand);
                    }
                }
            }
            for s in &next {
                out.insert_unchecked(s.clone());
            }
            layer = next;
        }
        Ok(out)
    }

    /// The closed-form witness for `(U, A)`: a vertex above `max U` whose link
    /// meets `X_U` exactly in `A`.
    pub fn witness(&self, u: &[Vertex], a: &Complex) -> Result<Vertex> {
        let u = sorted_unique(u);
        let window = self.window(&u)?;
        if !a.is_subcomplex_of(&window) {
            return Err(Error::NotSubcomplex(format!("A is not a subcomplex of the window on {} vertices", u.len())));
        }
        let k = self.k_u(&u)?;
        let k_bits = k.to_u64().filter(|&k| k <= self.witness_bit_budget).ok_or_else(|| {
            Error::size("witness label bit length", k.to_u64().unwrap_or(u64::MAX), self.witness_bit_budget)
        })?;
        let mut label = BigUint::default();
        label.set_bit(k_bits, true);
        for sigma in a.simplexes() {
            let n = self.n_sigma(sigma)?.to_u64().expect("N_sigma < K_U fits");
            label.set_bit(n, true);
        }
        Vertex::from_biguint(label)
    }
}
