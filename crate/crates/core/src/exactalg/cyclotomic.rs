use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_traits::One;

use super::{Poly, Rat};

fn memo() -> &'static RwLock<HashMap<u64, Poly<Rat>>> {
    static MEMO: OnceLock<RwLock<HashMap<u64, Poly<Rat>>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The `n`-th cyclotomic polynomial, `x^n - 1` divided by `Phi_d` for the
/// proper divisors `d` of `n`. Results are memoized process-wide.
pub fn cyclotomic(n: u64) -> Poly<Rat> {
    assert!(n >= 1, "cyclotomic index must be positive");
    if let Some(p) = memo().read().unwrap().get(&n) {
        return p.clone();
    }
    let mut p = Poly::monomial(Rat::one(), n as usize).sub_ref(&Poly::one());
    for d in divisors(n) {
        if d < n {
            p = p.div_rem(&cyclotomic(d)).0;
        }
    }
    // Concurrent inserts compute the same value, so a lost race is harmless.
    memo().write().unwrap().entry(n).or_insert_with(|| p.clone());
    p
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Every `m` with `phi(m) <= d`, ascending. Uses `phi(m) > sqrt(m)/2` for
/// `m > 6`, so `m <= max(6, 4 d^2)`.
pub fn orders_with_phi_at_most(d: u64) -> Vec<u64> {
    let bound = (4 * d * d).max(6);
    (1..=bound).filter(|&m| euler_phi(m) <= d).collect()
}

pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    a / gcd_u64(a, b) * b
}

/// Order `n` if `p` (any scaling) equals `Phi_n`.
pub fn cyclotomic_index(p: &Poly<Rat>) -> Option<u64> {
    let d = p.degree()? as u64;
    if d == 0 {
        return None;
    }
    let m = p.monic();
    orders_with_phi_at_most(d)
        .into_iter()
        .filter(|&n| euler_phi(n) == d)
        .find(|&n| cyclotomic(n) == m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_values() {
        assert_eq!(cyclotomic(1), Poly::from_i64s(&[-1, 1]));
        assert_eq!(cyclotomic(6), Poly::from_i64s(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), Poly::from_i64s(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn phi_twelve_by_hand_division() {
        let mut p = Poly::monomial(Rat::one(), 12).sub_ref(&Poly::one());
        for d in [1, 2, 3, 4, 6] {
            p = p.div_exact(&cyclotomic(d)).unwrap();
        }
        assert_eq!(p, cyclotomic(12));
    }

    #[test]
    fn degree_is_totient() {
        for n in 1..60 {
            assert_eq!(cyclotomic(n).degree(), Some(euler_phi(n) as usize));
        }
    }

    #[test]
    fn index_detection() {
        assert_eq!(cyclotomic_index(&cyclotomic(15)), Some(15));
        assert_eq!(cyclotomic_index(&Poly::from_i64s(&[-1, -1, 1])), None);
        assert_eq!(cyclotomic_index(&Poly::from_i64s(&[2, 2, 2])), Some(3));
    }

    #[test]
    fn concurrent_memo_is_consistent() {
        let handles: Vec<_> = (0..8)
            .map(|_| std::thread::spawn(|| (1..40).map(cyclotomic).collect::<Vec<_>>()))
            .collect();
        let results: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert!(results.windows(2).all(|w| w[0] == w[1]));
    }
}
