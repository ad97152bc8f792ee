//! Dense polynomials over a prime field `F_p` with `p < 2^31`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;

pub(crate) type PPoly = Vec<u64>;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        debug_assert!(p < (1 << 31));
        Fp { p }
    }

    fn mulm(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero mod p");
        self.pow(a, self.p - 2)
    }

    fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mulm(r, a);
            }
            a = self.mulm(a, a);
            e >>= 1;
        }
        r
    }

    pub fn reduce_int(&self, x: &BigInt) -> u64 {
        x.mod_floor(&BigInt::from(self.p)).to_u64().unwrap()
    }

    pub fn from_z(&self, f: &[BigInt]) -> PPoly {
        let mut r: PPoly = f.iter().map(|c| self.reduce_int(c)).collect();
        trim(&mut r);
        r
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> PPoly {
        let n = a.len().max(b.len());
        let mut r: PPoly = (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % self.p)
            .collect();
        trim(&mut r);
        r
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> PPoly {
        let n = a.len().max(b.len());
        let mut r: PPoly = (0..n)
            .map(|i| {
                (a.get(i).copied().unwrap_or(0) + self.p - b.get(i).copied().unwrap_or(0)) % self.p
            })
            .collect();
        trim(&mut r);
        r
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> PPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut r = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                r[i + j] = (r[i + j] + x * y) % self.p;
            }
        }
        trim(&mut r);
        r
    }

    pub fn scale(&self, a: &[u64], c: u64) -> PPoly {
        let mut r: PPoly = a.iter().map(|&x| self.mulm(x, c)).collect();
        trim(&mut r);
        r
    }

    pub fn monic(&self, a: &[u64]) -> PPoly {
        match a.last() {
            None => Vec::new(),
            Some(&l) => self.scale(a, self.inv(l)),
        }
    }

    pub fn div_rem(&self, a: &[u64], b: &[u64]) -> (PPoly, PPoly) {
        assert!(!b.is_empty(), "division by zero polynomial mod p");
        if a.len() < b.len() {
            return (Vec::new(), a.to_vec());
        }
        let db = b.len() - 1;
        let il = self.inv(*b.last().unwrap());
        let mut r = a.to_vec();
        let mut q = vec![0u64; a.len() - db];
        for i in (0..q.len()).rev() {
            let c = self.mulm(r[i + db], il);
            if c == 0 {
                continue;
            }
            q[i] = c;
            for (j, &bc) in b.iter().enumerate() {
                r[i + j] = (r[i + j] + self.p - self.mulm(c, bc)) % self.p;
            }
        }
        r.truncate(db);
        trim(&mut r);
        trim(&mut q);
        (q, r)
    }

    pub fn rem(&self, a: &[u64], b: &[u64]) -> PPoly {
        self.div_rem(a, b).1
    }

    pub fn gcd(&self, a: &[u64], b: &[u64]) -> PPoly {
        let (mut x, mut y) = (a.to_vec(), b.to_vec());
        while !y.is_empty() {
            let r = self.rem(&x, &y);
            x = y;
            y = r;
        }
        self.monic(&x)
    }

    /// `(g, s, t)` with `s a + t b = g` monic.
    pub fn xgcd(&self, a: &[u64], b: &[u64]) -> (PPoly, PPoly, PPoly) {
        let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = self.div_rem(&r0, &r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = self.sub(&s0, &self.mul(&q, &s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = self.sub(&t0, &self.mul(&q, &t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        let il = self.inv(*r0.last().unwrap());
        (self.scale(&r0, il), self.scale(&s0, il), self.scale(&t0, il))
    }

    pub fn derivative(&self, a: &[u64]) -> PPoly {
        let mut r: PPoly = a
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| self.mulm(c, i as u64 % self.p))
            .collect();
        trim(&mut r);
        r
    }

    /// `base^e mod m`.
    pub fn powmod(&self, base: &[u64], e: &BigUint, m: &[u64]) -> PPoly {
        let mut result = vec![1u64];
        let b = self.rem(base, m);
        for i in (0..e.bits()).rev() {
            result = self.rem(&self.mul(&result, &result), m);
            if e.bit(i) {
                result = self.rem(&self.mul(&result, &b), m);
            }
        }
        self.rem(&result, m)
    }

    pub fn is_squarefree(&self, f: &[u64]) -> bool {
        let d = self.derivative(f);
        !d.is_empty() && self.gcd(f, &d).len() == 1
    }

    /// Distinct-degree factorization of a monic squarefree polynomial:
    /// `(product of all irreducible factors of degree d, d)`.
    pub fn distinct_degree(&self, f: &[u64]) -> Vec<(PPoly, usize)> {
        let mut out = Vec::new();
        let mut f = f.to_vec();
        let x = vec![0u64, 1];
        let mut h = x.clone();
        let pe = BigUint::from(self.p);
        let mut d = 1;
        while f.len() > 2 * d {
            h = self.powmod(&h, &pe, &f);
            let g = self.gcd(&f, &self.sub(&h, &x));
            if g.len() > 1 {
                f = self.div_rem(&f, &g).0;
                h = self.rem(&h, &f);
                out.push((g, d));
            }
            d += 1;
        }
        if f.len() > 1 {
            let deg = f.len() - 1;
            out.push((self.monic(&f), deg));
        }
        out
    }

    /// Cantor–Zassenhaus splitting of a product of irreducibles of degree `d`.
    pub fn equal_degree<R: Rng>(&self, f: &[u64], d: usize, rng: &mut R) -> Vec<PPoly> {
        let n = f.len() - 1;
        if n == d {
            return vec![self.monic(f)];
        }
        let e = (num_traits::pow(BigUint::from(self.p), d) - 1u32) / 2u32;
        loop {
            let a: PPoly = {
                let mut v: PPoly = (0..n).map(|_| rng.gen_range(0..self.p)).collect();
                trim(&mut v);
                v
            };
            if a.len() < 2 {
                continue;
            }
            let b = self.sub(&self.powmod(&a, &e, f), &[1]);
            let g = self.gcd(f, &b);
            if g.len() > 1 && g.len() < f.len() {
                let other = self.div_rem(f, &g).0;
                let mut out = self.equal_degree(&g, d, rng);
                out.extend(self.equal_degree(&other, d, rng));
                return out;
            }
        }
    }

    pub fn factor_squarefree<R: Rng>(&self, f: &[u64], rng: &mut R) -> Vec<PPoly> {
        let f = self.monic(f);
        let mut out = Vec::new();
        for (g, d) in self.distinct_degree(&f) {
            out.extend(self.equal_degree(&g, d, rng));
        }
        out
    }
}

pub(crate) fn trim(p: &mut PPoly) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

pub(crate) fn small_odd_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|&n| {
        let mut d = 3;
        while d * d <= n {
            if n % d == 0 {
                return false;
            }
            d += 2;
        }
        true
    })
}

pub(crate) fn to_z(f: &[u64]) -> Vec<BigInt> {
    f.iter().map(|&c| BigInt::from(c)).collect()
}

pub(crate) fn is_zero_poly(f: &[u64]) -> bool {
    f.iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn factors_multiply_back() {
        let fp = Fp::new(7);
        // x^6 - 1 over F_7 splits into linear factors
        let f = vec![6, 0, 0, 0, 0, 0, 1];
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
        let fs = fp.factor_squarefree(&f, &mut rng);
        assert_eq!(fs.len(), 6);
        let prod = fs.iter().fold(vec![1u64], |acc, g| fp.mul(&acc, g));
        assert_eq!(prod, f);
    }

    #[test]
    fn irreducible_stays_whole() {
        let fp = Fp::new(5);
        // x^2 + 2 is irreducible mod 5 (-2 = 3 is a non-residue)
        let f = vec![2, 0, 1];
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        assert_eq!(fp.factor_squarefree(&f, &mut rng), vec![f.clone()]);
    }
}
