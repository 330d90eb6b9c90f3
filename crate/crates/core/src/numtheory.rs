//! Arbitrary-precision helpers for the parameter classification: primality,
//! repunits `(p^p - 1)/(p - 1)`, the admissible `(p, q, n, r)` search and the
//! order predicates used to rule out Chermak-Delgado simple groups.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::{BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use serde::Serialize;

use crate::error::{Error, Result};

pub type BigNat = BigUint;

const TRIAL_LIMIT: u32 = 1_000_000;

/// Miller-Rabin with the first 13 prime bases is exact below this bound.
const DETERMINISTIC_BOUND: u128 = 3_317_044_064_679_887_385_961_981;

const DETERMINISTIC_BASES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Random Miller-Rabin rounds used above the deterministic range.
pub const DEFAULT_MR_ROUNDS: usize = 64;

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = TRIAL_LIMIT as usize;
        let mut sieve = vec![true; n];
        sieve[0] = false;
        sieve[1] = false;
        let mut i = 2;
        while i * i < n {
            if sieve[i] {
                let mut j = i * i;
                while j < n {
                    sieve[j] = false;
                    j += i;
                }
            }
            i += 1;
        }
        (0..n as u32).filter(|&k| sieve[k as usize]).collect()
    })
}

pub fn is_prime_u64(x: u64) -> bool {
    is_prime(&BigNat::from(x))
}

/// Trial division below 10^6, then Miller-Rabin. Exact below ~3.3e24; above
/// that it is a probable-prime test (random rounds plus a strong Lucas test).
pub fn is_prime(x: &BigNat) -> bool {
    is_prime_with_rounds(x, DEFAULT_MR_ROUNDS)
}

pub fn is_prime_with_rounds(x: &BigNat, rounds: usize) -> bool {
    if *x < BigNat::from(2u32) {
        return false;
    }
    if let Some(v) = x.to_u64() {
        for &p in small_primes() {
            let p = p as u64;
            if p * p > v {
                return true;
            }
            if v % p == 0 {
                return false;
            }
        }
    } else {
        for &p in small_primes() {
            if (x % p).is_zero() {
                return false;
            }
        }
    }
    if *x < BigNat::from(DETERMINISTIC_BOUND) {
        return DETERMINISTIC_BASES
            .iter()
            .all(|&a| strong_probable_prime(x, &BigNat::from(a)));
    }
    if !strong_probable_prime(x, &BigNat::from(2u32)) {
        return false;
    }
    // seeded from the candidate so results are reproducible run to run
    let seed = x.iter_u64_digits().fold(0x9e37_79b9_7f4a_7c15u64, |h, d| {
        h.rotate_left(7) ^ d.wrapping_mul(0x0100_0000_01b3)
    });
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    let two = BigNat::from(2u32);
    let upper = x - 2u32;
    for _ in 0..rounds {
        let a = rng.gen_biguint_range(&two, &upper);
        if !strong_probable_prime(x, &a) {
            return false;
        }
    }
    strong_lucas_probable_prime(x)
}

fn strong_probable_prime(n: &BigNat, a: &BigNat) -> bool {
    let one = BigNat::one();
    let n1 = n - 1u32;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    let mut x = a.modpow(&d, n);
    if x == one || x == n1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n1 {
            return true;
        }
        if x == one {
            return false;
        }
    }
    false
}

fn jacobi(a: i64, n: &BigNat) -> i32 {
    // n odd positive
    let mut a = if a < 0 {
        let m = BigNat::from(a.unsigned_abs()) % n;
        if m.is_zero() {
            BigNat::zero()
        } else {
            n - m
        }
    } else {
        BigNat::from(a as u64) % n
    };
    let mut n = n.clone();
    let mut result = 1;
    while !a.is_zero() {
        while a.is_even() {
            a >>= 1;
            let r = (&n % 8u32).to_u32().expect("small");
            if r == 3 || r == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if (&a % 4u32).to_u32() == Some(3) && (&n % 4u32).to_u32() == Some(3) {
            result = -result;
        }
        a %= &n;
    }
    if n.is_one() {
        result
    } else {
        0
    }
}

fn is_square(n: &BigNat) -> bool {
    let r = n.sqrt();
    &r * &r == *n
}

/// Strong Lucas probable-prime test with Selfridge's parameters
/// (P = 1, Q = (1 - D)/4).
fn strong_lucas_probable_prime(n: &BigNat) -> bool {
    if is_square(n) {
        return false;
    }
    let mut d: i64 = 5;
    loop {
        match jacobi(d, n) {
            -1 => break,
            0 => {
                if BigNat::from(d.unsigned_abs()) != *n {
                    return false;
                }
            }
            _ => {}
        }
        d = if d > 0 { -(d + 2) } else { -d + 2 };
    }
    let q: i64 = (1 - d) / 4;
    let modn = |v: i64| -> BigNat {
        if v >= 0 {
            BigNat::from(v as u64) % n
        } else {
            let m = BigNat::from(v.unsigned_abs()) % n;
            if m.is_zero() {
                m
            } else {
                n - m
            }
        }
    };
    let dm = modn(d);
    let qm = modn(q);
    let n1 = n + 1u32;
    let s = n1.trailing_zeros().unwrap_or(0);
    let k = &n1 >> s;
    let inv2 = (n + 1u32) >> 1; // 2^-1 mod n, n odd

    // U_k, V_k, Q^k by binary expansion of k
    let mut u = BigNat::zero();
    let mut v = BigNat::from(2u32) % n;
    let mut qk = BigNat::one();
    for i in (0..k.bits()).rev() {
        // doubling
        u = (&u * &v) % n;
        v = (&v * &v + n * 2u32 - (&qk * 2u32) % n) % n;
        qk = (&qk * &qk) % n;
        if k.bit(i) {
            // add one: U_{m+1} = (U + V)/2, V_{m+1} = (D U + V)/2
            let nu = ((&u + &v) % n * &inv2) % n;
            let nv = ((&dm * &u + &v) % n * &inv2) % n;
            u = nu;
            v = nv;
            qk = (&qk * &qm) % n;
        }
    }
    if u.is_zero() || v.is_zero() {
        return true;
    }
    for _ in 1..s {
        v = (&v * &v + n * 2u32 - (&qk * 2u32) % n) % n;
        if v.is_zero() {
            return true;
        }
        qk = (&qk * &qk) % n;
    }
    false
}

/// `(p^p - 1)/(p - 1) = 1 + p + ... + p^(p-1)`.
pub fn repunit(p: u64) -> BigNat {
    let pb = BigNat::from(p);
    let mut acc = BigNat::zero();
    let mut term = BigNat::one();
    for _ in 0..p {
        acc += &term;
        term *= &pb;
    }
    acc
}

/// Primes `p < limit` whose repunit is prime.
pub fn wagstaff_primes(limit: u64) -> Result<Vec<u64>> {
    if limit > 1000 {
        return Err(Error::CapExceeded {
            what: "wagstaff search limit",
            size: limit as usize,
            cap: 1000,
        });
    }
    Ok((2..limit)
        .filter(|&p| is_prime_u64(p) && is_prime(&repunit(p)))
        .collect())
}

/// Which of the three closed-form families a parameter tuple belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    One,
    Two,
    Three,
}

impl Family {
    pub fn number(self) -> u8 {
        match self {
            Family::One => 1,
            Family::Two => 2,
            Family::Three => 3,
        }
    }
}

/// A `(p, q, n, r)` tuple with `p^n < q p^r`, `q | p^n - 1` and `p^r | n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdmissibleParams {
    pub p: u64,
    pub q: BigNat,
    pub n: u32,
    pub r: u32,
    pub family: Family,
}

impl fmt::Display for AdmissibleParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(p={}, q={}, n={}, r={}, family {})",
            self.p,
            self.q,
            self.n,
            self.r,
            self.family.number()
        )
    }
}

/// Checks the three hypotheses exactly.
pub fn satisfies_hypotheses(p: u64, q: &BigNat, n: u32, r: u32) -> bool {
    if n == 0 || r == 0 || !is_prime_u64(p) || !is_prime(q) {
        return false;
    }
    let pb = BigNat::from(p);
    let pn = pb.pow(n);
    let pr = pb.pow(r);
    pn < q * &pr && ((&pn - 1u32) % q).is_zero() && (BigNat::from(n) % &pr).is_zero()
}

impl AdmissibleParams {
    /// Matches a tuple against the closed-form families.
    pub fn classify(p: u64, q: &BigNat, n: u32, r: u32) -> Option<Family> {
        if p == 2 && *q == BigNat::from(3u32) && n == 2 && r == 1 {
            return Some(Family::One);
        }
        if p == 2 && *q == BigNat::from(5u32) && n == 4 && r == 2 {
            return Some(Family::Two);
        }
        if p > 2 && n as u64 == p && r == 1 && *q == repunit(p) {
            return Some(Family::Three);
        }
        None
    }

    /// Validated constructor: hypotheses hold and the tuple is in a family.
    pub fn new(p: u64, q: BigNat, n: u32, r: u32) -> Result<Self> {
        if !satisfies_hypotheses(p, &q, n, r) {
            return Err(Error::InvalidParameters(format!(
                "(p={p}, q={q}, n={n}, r={r}) violates p^n < q p^r, q | p^n - 1, p^r | n"
            )));
        }
        let family = Self::classify(p, &q, n, r).ok_or_else(|| {
            Error::InvalidParameters(format!("(p={p}, q={q}, n={n}, r={r}) matches no family"))
        })?;
        Ok(AdmissibleParams { p, q, n, r, family })
    }
}

/// Result of the direct parameter search for all primes up to `p_max`.
#[derive(Debug, Clone)]
pub struct AdmissibleSearch {
    pub direct: Vec<AdmissibleParams>,
    pub closed_form: Vec<AdmissibleParams>,
}

impl AdmissibleSearch {
    pub fn agrees(&self) -> bool {
        self.direct == self.closed_form
    }
}

/// Prime divisors `q` of `m` that are either below the trial bound or equal
/// to `m / s` for some cofactor `s < max_cofactor`.
fn candidate_prime_divisors(m: &BigNat, max_cofactor: u64) -> Vec<BigNat> {
    let mut out = Vec::new();
    let mut rest = m.clone();
    for &q in small_primes() {
        if rest.is_one() {
            break;
        }
        if (&rest % q).is_zero() {
            out.push(BigNat::from(q));
            while (&rest % q).is_zero() {
                rest /= q;
            }
        }
    }
    if rest > BigNat::one() && is_prime(&rest) {
        out.push(rest);
    }
    // A prime q with p^n < q p^r has cofactor (p^n - 1)/q < p^r, so every
    // such q is reachable from a small cofactor.
    for s in 1..max_cofactor {
        let sb = BigNat::from(s);
        if (m % &sb).is_zero() {
            let q = m / &sb;
            if is_prime(&q) {
                out.push(q);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Enumerates every admissible tuple with `p <= p_max` by searching the
/// hypotheses directly, and cross-checks against the closed-form families.
/// A disagreement is returned as an error.
pub fn lemma210_enumerate(p_max: u64) -> Result<AdmissibleSearch> {
    if p_max > 1000 {
        return Err(Error::CapExceeded {
            what: "parameter search prime bound",
            size: p_max as usize,
            cap: 1000,
        });
    }
    let mut direct = Vec::new();
    let mut closed_form = Vec::new();
    for p in (2..=p_max).filter(|&p| is_prime_u64(p)) {
        let pb = BigNat::from(p);
        let n_max = (2 * p).max(8) as u32;
        for n in 1..=n_max {
            let rs: Vec<u32> = (1..=n)
                .take_while(|&r| p.checked_pow(r).is_some_and(|pr| pr <= n as u64))
                .filter(|&r| n as u64 % p.pow(r) == 0)
                .collect();
            if rs.is_empty() {
                continue;
            }
            let pn1 = pb.pow(n) - 1u32;
            let max_pr = p.pow(*rs.iter().max().expect("nonempty"));
            for q in candidate_prime_divisors(&pn1, max_pr) {
                for &r in &rs {
                    if satisfies_hypotheses(p, &q, n, r) {
                        let family = AdmissibleParams::classify(p, &q, n, r).ok_or_else(|| {
                            Error::Precondition(format!(
                                "direct search found (p={p}, q={q}, n={n}, r={r}) outside every family"
                            ))
                        })?;
                        direct.push(AdmissibleParams {
                            p,
                            q: q.clone(),
                            n,
                            r,
                            family,
                        });
                    }
                }
            }
        }
        if p == 2 {
            closed_form.push(AdmissibleParams::new(2, BigNat::from(3u32), 2, 1)?);
            closed_form.push(AdmissibleParams::new(2, BigNat::from(5u32), 4, 2)?);
        } else {
            let q = repunit(p);
            if is_prime(&q) {
                closed_form.push(AdmissibleParams::new(p, q, p as u32, 1)?);
            }
        }
    }
    direct.sort();
    closed_form.sort();
    let res = AdmissibleSearch {
        direct,
        closed_form,
    };
    if !res.agrees() {
        return Err(Error::Precondition(format!(
            "direct search {:?} disagrees with closed form {:?}",
            res.direct, res.closed_form
        )));
    }
    Ok(res)
}

/// `m | p^n - 1` and `m` divides no `p^d - 1` with `1 <= d < n`.
pub fn prop211_check(m: &BigNat, p: u64, n: u32) -> bool {
    if m.is_zero() {
        return false;
    }
    let pb = BigNat::from(p);
    let divides = |d: u32| ((pb.pow(d) - 1u32) % m).is_zero();
    divides(n) && (1..n).all(|d| !divides(d))
}

/// Prime factorization by trial division, ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub const FACTOR_GUARD: u64 = 1_000_000_000_000;

/// `N = m p^k` with `p` prime, `p` not dividing `m`, and
/// `1 < m/q < p < m` for `q` the smallest prime divisor of `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExclusionWitness {
    pub m: u64,
    pub p: u64,
    pub k: u32,
    pub q: u64,
}

/// First witness scanning the prime divisors of `n` in descending order.
/// The inequality `m/q < p` is tested exactly as `m < p q`.
pub fn excluded_order(n: u64) -> Result<Option<ExclusionWitness>> {
    if n > FACTOR_GUARD {
        return Err(Error::CapExceeded {
            what: "order to factor",
            size: n as usize,
            cap: FACTOR_GUARD as usize,
        });
    }
    if n < 2 {
        return Ok(None);
    }
    let f = factorize(n);
    for &(p, k) in f.iter().rev() {
        let m = n / p.pow(k);
        let Some(&(q, _)) = f.iter().find(|&&(r, _)| r != p) else {
            continue;
        };
        // m/q > 1 means m != q; m/q is an integer
        if m / q > 1 && m < p * q && p < m {
            return Ok(Some(ExclusionWitness { m, p, k, q }));
        }
    }
    Ok(None)
}

/// `N = q p^k` with `p < q` primes, if that is the shape of `N`.
pub fn qpk_decompose(n: u64) -> Option<(u64, u64, u32)> {
    let f = factorize(n);
    match f.as_slice() {
        [(p, k), (q, 1)] if p < q => Some((*q, *p, *k)),
        _ => None,
    }
}

/// `p^e` as a `u64`, if `n` is a power of `p`.
pub fn log_exact(n: u64, p: u64) -> Option<u32> {
    if p < 2 || n == 0 {
        return None;
    }
    let mut k = 0;
    let mut m = n;
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    (m == 1).then_some(k)
}
