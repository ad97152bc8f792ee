//! Factorization over the rationals: squarefree decomposition, then
//! Zassenhaus (modular factorization, Hensel lifting, factor recombination)
//! on each primitive squarefree part.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::modp::{self, Fp, PPoly};
use super::qpoly::sort_polys;
use super::zpoly::{self, ZPoly};
use super::{ExactAlgError, Poly, Rat};

/// `unit * prod factor^multiplicity`, factors monic, irreducible and
/// pairwise coprime, ordered by degree then coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct FactorList {
    pub unit: Rat,
    pub factors: Vec<(Poly<Rat>, usize)>,
}

impl FactorList {
    pub fn reconstruct(&self) -> Poly<Rat> {
        self.factors
            .iter()
            .fold(Poly::constant(self.unit.clone()), |acc, (f, m)| {
                acc.mul_ref(&f.pow(*m as u64))
            })
    }

    /// Irreducible factor degrees with multiplicity, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self
            .factors
            .iter()
            .flat_map(|(f, m)| std::iter::repeat(f.degree().unwrap()).take(*m))
            .collect();
        d.sort_unstable();
        d
    }
}

/// Complete factorization over Q.
pub fn factor_over_q(p: &Poly<Rat>) -> Result<FactorList, ExactAlgError> {
    if p.is_zero() {
        return Err(ExactAlgError::ZeroInput("factor_over_q"));
    }
    let unit = p.lc().unwrap().clone();
    let mut factors = Vec::new();
    for (g, mult) in p.squarefree_decomposition() {
        let (_, prim) = g.to_primitive_int();
        for h in factor_squarefree_primitive(&prim) {
            factors.push((Poly::from_zpoly(&h).monic(), mult));
        }
    }
    factors.sort_by(|a, b| super::qpoly::cmp_polys(&a.0, &b.0).then(a.1.cmp(&b.1)));
    Ok(FactorList { unit, factors })
}

/// Irreducible factors (primitive, positive leading coefficient) of a
/// primitive squarefree integer polynomial of positive degree.
pub(crate) fn factor_squarefree_primitive(f: &[BigInt]) -> Vec<ZPoly> {
    let n = zpoly::degree(f);
    assert!(n >= 1);
    // pull out x first; it keeps the constant-term pruning below simple
    if f[0].is_zero() {
        let rest = f[1..].to_vec();
        let mut out = vec![vec![BigInt::zero(), BigInt::one()]];
        if zpoly::degree(&rest) >= 1 {
            out.extend(factor_squarefree_primitive(&rest));
        }
        return out;
    }
    if n == 1 {
        return vec![f.to_vec()];
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let lc = f.last().unwrap().clone();

    // Pick the prime (among a few good ones) giving the fewest modular factors.
    let mut best: Option<(Fp, usize)> = None;
    let mut tried = 0;
    for p in modp::small_odd_primes() {
        if tried >= 8 || p > 50_000 {
            break;
        }
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = Fp::new(p);
        let fbar = fp.from_z(f);
        if !fp.is_squarefree(&fbar) {
            continue;
        }
        tried += 1;
        let count: usize = fp
            .distinct_degree(&fp.monic(&fbar))
            .iter()
            .map(|(g, d)| (g.len() - 1) / d)
            .sum();
        if count == 1 {
            return vec![f.to_vec()];
        }
        if best.is_none_or(|(_, c)| count < c) {
            best = Some((fp, count));
        }
    }
    let (fp, _) = best.expect("no suitable prime for modular factorization");
    let modular = fp.factor_squarefree(&fp.from_z(f), &mut rng);

    // Lift until p^a exceeds twice the coefficient bound of any factor (times lc).
    let bound = mignotte_bound(f) * &lc * 2u32;
    let p = BigInt::from(fp.p);
    let mut a = 1u32;
    let mut pa = p.clone();
    while pa <= bound {
        pa *= &p;
        a += 1;
    }
    let lifted = hensel_lift(f, &modular, fp, a);
    recombine(f, lifted, &pa)
}

fn mignotte_bound(f: &[BigInt]) -> BigInt {
    let n = f.len() - 1;
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    let norm = norm2.sqrt() + 1u32;
    (BigInt::one() << n) * norm
}

fn mod_pk(f: &[BigInt], m: &BigInt) -> ZPoly {
    let mut r: ZPoly = f.iter().map(|c| c.mod_floor(m)).collect();
    zpoly::trim(&mut r);
    r
}

/// Multifactor Hensel lifting of `f = lc(f) * prod factors (mod p)` to
/// monic factors modulo `p^a`, by repeated two-factor linear lifting.
fn hensel_lift(f: &[BigInt], factors: &[PPoly], fp: Fp, a: u32) -> Vec<ZPoly> {
    let p = BigInt::from(fp.p);
    let pa = num_traits::pow(p.clone(), a as usize);
    let lc = f.last().unwrap().clone();
    if factors.len() == 1 {
        let inv = lc.modinv(&pa).expect("lc invertible mod p^a");
        return vec![mod_pk(&zpoly::scale(f, &inv), &pa)];
    }
    let g0 = fp.monic(&factors[0]);
    let h0 = fp.scale(
        &factors[1..].iter().fold(vec![1u64], |acc, g| fp.mul(&acc, g)),
        fp.reduce_int(&lc),
    );
    let (gcd, s, t) = fp.xgcd(&g0, &h0);
    debug_assert_eq!(gcd, vec![1]);
    let mut g = modp::to_z(&g0);
    let mut h = modp::to_z(&h0);
    let mut pk = p.clone();
    for _ in 1..a {
        // e = (f - g h) / p^k  (mod p)
        let diff = zpoly::sub(f, &zpoly::mul(&g, &h));
        let e: ZPoly = diff.iter().map(|c| c / &pk).collect();
        let ebar = fp.from_z(&e);
        if !modp::is_zero_poly(&ebar) {
            let (q, dg) = fp.div_rem(&fp.mul(&ebar, &t), &g0);
            let dh = fp.add(&fp.mul(&ebar, &s), &fp.mul(&q, &h0));
            g = zpoly::add(&g, &zpoly::scale(&modp::to_z(&dg), &pk));
            h = zpoly::add(&h, &zpoly::scale(&modp::to_z(&dh), &pk));
        }
        pk *= &p;
        g = mod_pk(&g, &pk);
        h = mod_pk(&h, &pk);
    }
    let mut out = vec![g];
    out.extend(hensel_lift(&h, &factors[1..], fp, a));
    out
}

fn recombine(f: &[BigInt], mut lifted: Vec<ZPoly>, pa: &BigInt) -> Vec<ZPoly> {
    let mut result = Vec::new();
    let mut cur = f.to_vec();
    let mut s = 1;
    'outer: while 2 * s <= lifted.len() {
        let lc = cur.last().unwrap().clone();
        let c0 = &lc * &cur[0];
        let mut idx: Vec<usize> = (0..s).collect();
        loop {
            // constant-term screen before building the product
            let mut t = lc.clone();
            for &i in &idx {
                t = (t * &lifted[i][0]).mod_floor(pa);
            }
            let t = zpoly::symmetric_mod(&t, pa);
            if !t.is_zero() && (&c0 % &t).is_zero() {
                let mut g = vec![lc.clone()];
                for &i in &idx {
                    g = mod_pk(&zpoly::mul(&g, &lifted[i]), pa);
                }
                let g: ZPoly = g.iter().map(|c| zpoly::symmetric_mod(c, pa)).collect();
                let g = zpoly::primitive(&g);
                if let Some(q) = zpoly::div_exact(&cur, &g) {
                    result.push(g);
                    cur = q;
                    for &i in idx.iter().rev() {
                        lifted.remove(i);
                    }
                    continue 'outer;
                }
            }
            if !next_combination(&mut idx, lifted.len()) {
                break;
            }
        }
        s += 1;
    }
    result.push(zpoly::primitive(&cur));
    result
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Irreducibility by factoring; used as a certificate on inputs.
pub fn is_irreducible(p: &Poly<Rat>) -> bool {
    match factor_over_q(p) {
        Ok(fl) => fl.factors.len() == 1 && fl.factors[0].1 == 1,
        Err(_) => false,
    }
}

/// Distinct irreducible monic factors, sorted.
pub fn irreducible_factors(p: &Poly<Rat>) -> Vec<Poly<Rat>> {
    let mut v: Vec<Poly<Rat>> = factor_over_q(p)
        .map(|fl| fl.factors.into_iter().map(|(f, _)| f).collect())
        .unwrap_or_default();
    sort_polys(&mut v);
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly<Rat> {
        Poly::from_i64s(c)
    }

    #[test]
    fn x4_minus_1() {
        let fl = factor_over_q(&p(&[-1, 0, 0, 0, 1])).unwrap();
        let fs: Vec<_> = fl.factors.iter().map(|(f, _)| f.clone()).collect();
        assert_eq!(fs, vec![p(&[-1, 1]), p(&[1, 1]), p(&[1, 0, 1])]);
        assert_eq!(fl.unit, Rat::one());
    }

    #[test]
    fn irreducible_quadratic() {
        let fl = factor_over_q(&p(&[1, 1, 1])).unwrap();
        assert_eq!(fl.factors, vec![(p(&[1, 1, 1]), 1)]);
    }

    #[test]
    fn f6_of_benchmark_family() {
        // x^6 - (x+1)^6 = -(2x+1)(x^2+x+1)(3x^2+3x+1)
        let f = p(&[0, 1]).pow(6).sub_ref(&p(&[1, 1]).pow(6));
        let fl = factor_over_q(&f).unwrap();
        assert_eq!(fl.degrees(), vec![1, 2, 2]);
        assert_eq!(fl.reconstruct(), f);
        let expected = p(&[1, 2])
            .mul_ref(&p(&[1, 1, 1]))
            .mul_ref(&p(&[1, 3, 3]))
            .neg_ref();
        assert_eq!(expected, f);
        assert_eq!(fl.unit, Rat::from_integer((-6).into()));
    }

    #[test]
    fn multiplicities_and_content() {
        let f = p(&[0, 1])
            .pow(2)
            .mul_ref(&p(&[-2, 0, 1]).pow(3))
            .scale(&Rat::new(3.into(), 7.into()));
        let fl = factor_over_q(&f).unwrap();
        assert_eq!(fl.factors, vec![(p(&[0, 1]), 2), (p(&[-2, 0, 1]), 3)]);
        assert_eq!(fl.reconstruct(), f);
    }

    #[test]
    fn swinnerton_dyer_like_input() {
        // x^4 - 10x^2 + 1 is irreducible over Q but splits modulo every prime.
        let f = p(&[1, 0, -10, 0, 1]);
        assert!(is_irreducible(&f));
        let g = f.mul_ref(&p(&[1, 0, -2]));
        assert_eq!(factor_over_q(&g).unwrap().degrees(), vec![2, 4]);
    }

    #[test]
    fn cyclotomic_product() {
        let f = Poly::monomial(Rat::one(), 24).sub_ref(&Poly::one());
        let fl = factor_over_q(&f).unwrap();
        assert_eq!(fl.factors.len(), 8);
        assert_eq!(fl.reconstruct(), f);
    }
}
