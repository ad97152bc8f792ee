use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::exactalg::{Rat, RatFunc};

use super::GcdLabError;

/// Finitely generated subgroup of `Q*`, stored through the exponent vectors
/// of its generators over a pairwise coprime integer support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalGroup {
    generators: Vec<Rat>,
    support: Vec<BigInt>,
    lattice: Vec<Vec<i64>>,
}

/// Whether some nonzero integer combination of `fs` is a constant in the
/// division group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Independence {
    Independent,
    /// `prod f_i^{witness_i} = constant`, and the constant lies in the
    /// division group.
    Dependent { witness: Vec<i64>, constant: Rat },
}

const SMALL_PRIMES_UP_TO: u64 = 1000;

fn small_primes() -> Vec<u64> {
    (2..=SMALL_PRIMES_UP_TO)
        .filter(|&n| (2..).take_while(|d| d * d <= n).all(|d| n % d != 0))
        .collect()
}

/// Pairwise coprime integers `> 1` such that every input (absolute value,
/// nonzero) is a product of powers of them. Small primes are split off
/// first so that typical supports consist of primes.
pub(crate) fn coprime_support(values: &[BigInt]) -> Vec<BigInt> {
    let mut basis: Vec<BigInt> = Vec::new();
    let mut pending: Vec<BigInt> = Vec::new();
    for v in values {
        let mut v = v.abs();
        if v.is_zero() {
            continue;
        }
        for p in small_primes() {
            let p = BigInt::from(p);
            if (&v % &p).is_zero() {
                while (&v % &p).is_zero() {
                    v /= &p;
                }
                pending.push(p);
            }
        }
        pending.push(v);
    }
    while let Some(x) = pending.pop() {
        if x.is_one() || basis.contains(&x) {
            continue;
        }
        match basis.iter().position(|b| !b.gcd(&x).is_one()) {
            Some(i) => {
                let b = basis.swap_remove(i);
                let g = b.gcd(&x);
                pending.push(&b / &g);
                pending.push(&x / &g);
                pending.push(g);
            }
            None => basis.push(x),
        }
    }
    basis.sort();
    basis
}

/// Exponents of `|x|` over `support`, or `None` if `x` is not a product of
/// support elements.
pub(crate) fn exponents_over(x: &Rat, support: &[BigInt]) -> Option<Vec<i64>> {
    let mut num = x.numer().abs();
    let mut den = x.denom().clone();
    let mut e = vec![0i64; support.len()];
    for (ei, s) in e.iter_mut().zip(support) {
        while (&num % s).is_zero() {
            num /= s;
            *ei += 1;
        }
        while (&den % s).is_zero() {
            den /= s;
            *ei -= 1;
        }
    }
    (num.is_one() && den.is_one()).then_some(e)
}

fn rat_values(xs: &[Rat]) -> Vec<BigInt> {
    xs.iter().flat_map(|x| [x.numer().clone(), x.denom().clone()]).collect()
}

/// Rank of a rational matrix given by rows.
pub(crate) fn rank(rows: &[Vec<Rat>]) -> usize {
    let mut a: Vec<Vec<Rat>> = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = &a[i][c] / &a[r][c];
                for j in c..cols {
                    let t = &f * &a[r][j];
                    a[i][j] -= t;
                }
            }
        }
        r += 1;
    }
    r
}

/// Basis of the rational null space `{x : x^T rows = 0}` (left kernel).
pub(crate) fn left_kernel(rows: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = rows.len();
    let cols = rows.first().map_or(0, Vec::len);
    // columns of the transpose system: solve sum_i x_i rows[i][j] = 0
    let mut a: Vec<Vec<Rat>> = (0..cols).map(|j| (0..n).map(|i| rows[i][j].clone()).collect()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for j in 0..n {
            a[r][j] = &a[r][j] * &inv;
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..n {
                    let t = &f * &a[r][j];
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut x = vec![Rat::zero(); n];
            x[free] = Rat::one();
            for (row, &pc) in pivots.iter().enumerate() {
                x[pc] = -a[row][free].clone();
            }
            x
        })
        .collect()
}

/// Smallest integer multiple of a rational vector.
fn integral(v: &[Rat]) -> Vec<i64> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    ints.iter()
        .map(|x| (x / &g).to_i64().expect("small witness"))
        .collect()
}

impl RationalGroup {
    pub fn new(generators: Vec<Rat>) -> Result<Self, GcdLabError> {
        if generators.iter().any(Zero::is_zero) {
            return Err(GcdLabError::ZeroInput);
        }
        let support = coprime_support(&rat_values(&generators));
        let lattice = generators
            .iter()
            .map(|g| exponents_over(g, &support).expect("support covers generators"))
            .collect();
        Ok(RationalGroup { generators, support, lattice })
    }

    /// The group `{1}`, whose division group is `{1, -1}` within `Q`.
    pub fn trivial() -> Self {
        Self::new(Vec::new()).unwrap()
    }

    pub fn generators(&self) -> &[Rat] {
        &self.generators
    }

    pub fn support(&self) -> &[BigInt] {
        &self.support
    }

    pub fn lattice(&self) -> &[Vec<i64>] {
        &self.lattice
    }

    /// Exponent rows of the generators and of `extra` over a common support.
    fn rows_with(&self, extra: &[Rat]) -> (Vec<Vec<Rat>>, Vec<Vec<Rat>>) {
        let mut vals = rat_values(&self.generators);
        vals.extend(rat_values(extra));
        let support = coprime_support(&vals);
        let row = |x: &Rat| -> Vec<Rat> {
            exponents_over(x, &support)
                .expect("support covers inputs")
                .into_iter()
                .map(|e| Rat::from_integer(e.into()))
                .collect()
        };
        (self.generators.iter().map(row).collect(), extra.iter().map(row).collect())
    }

    /// Whether `u^n` lies in the group for some `n >= 1`. Signs are
    /// absorbed since `(-1)^2 = 1`.
    pub fn contains_div(&self, u: &Rat) -> Result<bool, GcdLabError> {
        if u.is_zero() {
            return Err(GcdLabError::ZeroInput);
        }
        let (gens, us) = self.rows_with(std::slice::from_ref(u));
        let mut all = gens.clone();
        all.push(us[0].clone());
        Ok(rank(&all) == rank(&gens) || us[0].iter().all(Zero::is_zero))
    }

    /// Random elements of the division group: products of small generator
    /// powers, with exact rational roots taken when they exist, and signs.
    pub fn sample_div<R: Rng>(&self, rng: &mut R, count: usize) -> Vec<Rat> {
        (0..count)
            .map(|_| {
                let mut x = Rat::one();
                for g in &self.generators {
                    let e: i32 = rng.gen_range(-3..=3);
                    x *= num_traits::pow::Pow::pow(g, e);
                }
                let n: u32 = rng.gen_range(1..=3);
                if let Some(r) = rat_root(&x, n) {
                    x = r;
                }
                if rng.gen_bool(0.5) {
                    -x
                } else {
                    x
                }
            })
            .collect()
    }
}

/// Exact positive `n`-th root of a positive rational, if rational.
fn rat_root(x: &Rat, n: u32) -> Option<Rat> {
    if x.is_negative() {
        return None;
    }
    let a = x.numer().nth_root(n);
    let b = x.denom().nth_root(n);
    (num_traits::pow(a.clone(), n as usize) == *x.numer() && num_traits::pow(b.clone(), n as usize) == *x.denom())
        .then(|| Rat::new(a, b))
}

/// Decides whether the `fs` are multiplicatively independent modulo the
/// division group of `group`.
///
/// Each `f_i = c_i prod_j b_j^{E_ij}` over a coprime polynomial basis; a
/// relation `prod f_i^{h_i} = c` needs `h` in the left kernel of `E`, and
/// then `c = prod c_i^{h_i}` must lie in the division group, a rational span
/// condition on prime-support exponents. Both conditions are linear, so one
/// kernel computation over the stacked matrix decides the question.
pub fn mult_indep_mod_group(fs: &[RatFunc], group: &RationalGroup) -> Result<Independence, GcdLabError> {
    if fs.iter().any(RatFunc::is_zero) {
        return Err(GcdLabError::ZeroInput);
    }
    let mut polys = Vec::new();
    for f in fs {
        for p in [f.num(), f.den()] {
            if !p.is_constant() {
                polys.push(p.clone());
            }
        }
    }
    let (basis, _) = if polys.is_empty() {
        (Vec::new(), Vec::new())
    } else {
        crate::exactalg::gcd_free_basis(&polys)?
    };
    let consts: Vec<Rat> = fs.iter().map(|f| f.num().lc().unwrap() / f.den().lc().unwrap()).collect();
    let (gen_rows, const_rows) = group.rows_with(&consts);
    let width_c = const_rows.first().map_or(0, Vec::len);
    let mut rows = Vec::new();
    for (f, cr) in fs.iter().zip(&const_rows) {
        let mut row: Vec<Rat> = basis
            .iter()
            .map(|b| {
                let e = f.num().multiplicity_of(b) as i64 - f.den().multiplicity_of(b) as i64;
                Rat::from_integer(e.into())
            })
            .collect();
        row.extend(cr.iter().cloned());
        rows.push(row);
    }
    for g in &gen_rows {
        let mut row = vec![Rat::zero(); basis.len()];
        row.extend(g.iter().cloned());
        rows.push(row);
    }
    debug_assert!(rows.iter().all(|r| r.len() == basis.len() + width_c));
    let kernel = left_kernel(&rows);
    let t = fs.len();
    // the projection of the kernel to the first t coordinates
    let proj: Vec<Vec<Rat>> = kernel.iter().map(|v| v[..t].to_vec()).collect();
    let Some(v) = proj.iter().find(|v| v.iter().any(|x| !x.is_zero())) else {
        return Ok(Independence::Independent);
    };
    let witness = integral(v);
    let constant = consts
        .iter()
        .zip(&witness)
        .fold(Rat::one(), |acc, (c, &h)| acc * num_traits::pow::Pow::pow(c, h as i32));
    Ok(Independence::Dependent { witness, constant })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat, Poly};

    fn g(v: &[Rat]) -> RationalGroup {
        RationalGroup::new(v.to_vec()).unwrap()
    }

    #[test]
    fn division_group_membership() {
        assert!(g(&[int(4)]).contains_div(&rat(1, 2)).unwrap());
        assert!(!g(&[int(4)]).contains_div(&int(3)).unwrap());
        assert!(g(&[int(2)]).contains_div(&int(-2)).unwrap());
        assert!(RationalGroup::trivial().contains_div(&int(-1)).unwrap());
        assert!(!RationalGroup::trivial().contains_div(&int(2)).unwrap());
        assert!(!g(&[rat(2, 9)]).contains_div(&rat(9, 4)).unwrap());
        assert!(g(&[rat(4, 9)]).contains_div(&rat(3, 2)).unwrap());
    }

    #[test]
    fn large_coprime_supports() {
        let p = "1000000007".parse::<BigInt>().unwrap();
        let q = "998244353".parse::<BigInt>().unwrap();
        let grp = g(&[Rat::from_integer(&p * &q)]);
        assert!(!grp.contains_div(&Rat::from_integer(p.clone())).unwrap());
        assert!(grp.contains_div(&Rat::from_integer(&p * &p * &q * &q)).unwrap());
    }

    #[test]
    fn independence() {
        let x = RatFunc::from_poly(Poly::x());
        let x1 = RatFunc::from_poly(Poly::from_i64s(&[1, 1]));
        let two_x = RatFunc::from_poly(Poly::from_i64s(&[0, 2]));
        let two = g(&[int(2)]);
        assert_eq!(mult_indep_mod_group(&[x.clone(), x1], &two).unwrap(), Independence::Independent);
        match mult_indep_mod_group(&[x.clone(), two_x.clone()], &two).unwrap() {
            Independence::Dependent { witness, constant } => {
                assert!(witness == vec![1, -1] || witness == vec![-1, 1]);
                assert!(constant == rat(1, 2) || constant == int(2));
            }
            other => panic!("{other:?}"),
        }
        // mod the trivial group x and 2x are independent: 2 is not torsion
        assert_eq!(
            mult_indep_mod_group(&[x.clone(), two_x], &RationalGroup::trivial()).unwrap(),
            Independence::Independent
        );
        let x2 = RatFunc::from_poly(Poly::x().pow(2));
        assert_eq!(mult_indep_mod_group(&[x2], &RationalGroup::trivial()).unwrap(), Independence::Independent);
        let minus_x = RatFunc::from_poly(Poly::from_i64s(&[0, -1]));
        assert!(matches!(
            mult_indep_mod_group(&[x, minus_x], &RationalGroup::trivial()).unwrap(),
            Independence::Dependent { .. }
        ));
    }
}
