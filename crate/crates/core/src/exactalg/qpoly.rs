//! Operations specific to polynomials with rational coefficients.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::zpoly::{self, ZPoly};
use super::{parse_rat, ExactAlgError, Poly, Rat};

impl Poly<Rat> {
    /// The indeterminate `x`.
    pub fn x() -> Self {
        Poly::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn from_i64s(c: &[i64]) -> Self {
        Poly::from_coeffs(c.iter().map(|&v| Rat::from_integer(v.into())).collect())
    }

    pub fn from_rat(c: Rat) -> Self {
        Poly::constant(c)
    }

    pub(crate) fn from_zpoly(c: &[BigInt]) -> Self {
        Poly::from_coeffs(c.iter().map(|v| Rat::from_integer(v.clone())).collect())
    }

    /// Splits `self = scale * prim` with `prim` a primitive integer polynomial
    /// with positive leading coefficient. Zero maps to `(0, [])`.
    pub(crate) fn to_primitive_int(&self) -> (Rat, ZPoly) {
        if self.is_zero() {
            return (Rat::zero(), Vec::new());
        }
        let den = self
            .coeffs()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: ZPoly = self
            .coeffs()
            .iter()
            .map(|c| (c * Rat::from_integer(den.clone())).to_integer())
            .collect();
        let mut cont = zpoly::content(&ints);
        if ints.last().unwrap().is_negative() {
            cont = -cont;
        }
        let prim = ints.iter().map(|c| c / &cont).collect();
        (Rat::new(cont, den), prim)
    }

    /// Primitive integer form as a rational polynomial.
    pub fn primitive_part(&self) -> Self {
        Poly::from_zpoly(&self.to_primitive_int().1)
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs().iter().all(|c| c.is_integer())
    }

    /// Monic gcd; `gcd(p, 0) = monic(p)`, `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let a = self.to_primitive_int().1;
        let b = other.to_primitive_int().1;
        Poly::from_zpoly(&zpoly::gcd(&a, &b)).monic()
    }

    pub fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let g = self.gcd(other);
        self.div_rem(&g).0.mul_ref(other).monic()
    }

    /// Product of the distinct monic irreducible factors.
    pub fn radical(&self) -> Result<Self, ExactAlgError> {
        if self.is_zero() {
            return Err(ExactAlgError::ZeroInput("radical"));
        }
        let g = self.gcd(&self.derivative());
        Ok(self.div_rem(&g).0.monic())
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).is_constant()
    }

    /// `Res(p, q) = lc(p)^deg(q) * prod q(beta)` over the roots `beta` of `p`.
    pub fn resultant(&self, other: &Self) -> Result<Rat, ExactAlgError> {
        if self.is_zero() || other.is_zero() {
            return Err(ExactAlgError::ZeroInput("resultant"));
        }
        let (ca, a) = self.to_primitive_int();
        let (cb, b) = other.to_primitive_int();
        let da = a.len() as i32 - 1;
        let db = b.len() as i32 - 1;
        let r = Rat::from_integer(zpoly::resultant(&a, &b));
        Ok(r * num_traits::pow::pow(ca, db as usize) * num_traits::pow::pow(cb, da as usize))
    }

    pub fn discriminant(&self) -> Result<Rat, ExactAlgError> {
        let n = self
            .degree()
            .filter(|&d| d >= 1)
            .ok_or(ExactAlgError::ZeroInput("discriminant"))?;
        let r = self.resultant(&self.derivative())?;
        let sign = if (n * (n - 1) / 2) % 2 == 0 { 1 } else { -1 };
        Ok(r * Rat::from_integer(sign.into()) / self.lc().unwrap())
    }

    /// Yun's squarefree decomposition: monic `(g_i, i)` with `self = lc * prod g_i^i`.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_rem(&a0).0;
        let mut c = df.div_rem(&a0).0;
        let mut d = c.sub_ref(&b.derivative());
        let mut i = 1;
        loop {
            let a = b.gcd(&d);
            if !a.is_constant() {
                out.push((a.clone(), i));
            }
            b = b.div_rem(&a).0;
            if b.is_constant() {
                break;
            }
            c = d.div_rem(&a).0;
            d = c.sub_ref(&b.derivative());
            i += 1;
        }
        out
    }

    /// Largest root multiplicity (0 for constants).
    pub fn max_multiplicity(&self) -> usize {
        self.squarefree_decomposition()
            .iter()
            .map(|(_, m)| *m)
            .max()
            .unwrap_or(0)
    }

    /// Exponent of the largest power of `d` dividing `self`.
    pub fn multiplicity_of(&self, d: &Self) -> usize {
        assert!(!d.is_constant());
        let mut p = self.clone();
        let mut k = 0;
        while !p.is_zero() {
            match p.div_exact(d) {
                Some(q) => {
                    p = q;
                    k += 1;
                }
                None => break,
            }
        }
        k
    }

    /// Numerical evaluation.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs()
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + rat_to_f64(c))
    }

    /// Newton interpolation through `(x_i, y_i)` with distinct `x_i`.
    pub fn interpolate(points: &[(Rat, Rat)]) -> Self {
        let n = points.len();
        let mut dd: Vec<Rat> = points.iter().map(|p| p.1.clone()).collect();
        for j in 1..n {
            for i in (j..n).rev() {
                dd[i] = (&dd[i] - &dd[i - 1]) / (&points[i].0 - &points[i - j].0);
            }
        }
        let mut acc = Poly::zero();
        for i in (0..n).rev() {
            let lin = Poly::from_coeffs(vec![-points[i].0.clone(), Rat::one()]);
            acc = acc.mul_ref(&lin).add_ref(&Poly::constant(dd[i].clone()));
        }
        acc
    }

    /// `self(x + c)`.
    pub fn taylor_shift(&self, c: &Rat) -> Self {
        self.compose(&Poly::from_coeffs(vec![c.clone(), Rat::one()]))
    }

    /// `x^deg * self(1/x)`.
    pub fn reversed(&self) -> Self {
        let mut c = self.coeffs().to_vec();
        c.reverse();
        Poly::from_coeffs(c)
    }
}

pub(crate) fn rat_to_f64(r: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// `prod (x - r_i)` for rational roots.
pub fn poly_from_roots(roots: &[Rat]) -> Poly<Rat> {
    roots.iter().fold(Poly::one(), |acc, r| {
        acc.mul_ref(&Poly::from_coeffs(vec![-r.clone(), Rat::one()]))
    })
}

/// Pairwise-coprime squarefree basis with exponent matrix.
///
/// Each input `f_i = unit_i * prod_j basis_j^{E_ij}`; the basis is monic and
/// sorted by degree then coefficients.
pub fn gcd_free_basis(fs: &[Poly<Rat>]) -> Result<(Vec<Poly<Rat>>, Vec<Vec<usize>>), ExactAlgError> {
    if fs.iter().any(Poly::is_zero) {
        return Err(ExactAlgError::ZeroInput("gcd_free_basis"));
    }
    // Refine a working set until every pair is coprime.
    let mut basis: Vec<Poly<Rat>> = Vec::new();
    for f in fs {
        let mut pending: Vec<Poly<Rat>> = f
            .squarefree_decomposition()
            .into_iter()
            .map(|(g, _)| g)
            .collect();
        while let Some(p) = pending.pop() {
            if p.is_constant() {
                continue;
            }
            let mut absorbed = false;
            for i in 0..basis.len() {
                let g = basis[i].gcd(&p);
                if g.is_constant() {
                    continue;
                }
                let b = basis.swap_remove(i);
                let b_rest = b.div_rem(&g).0.monic();
                let p_rest = p.div_rem(&g).0.monic();
                pending.push(g);
                pending.push(b_rest);
                pending.push(p_rest);
                absorbed = true;
                break;
            }
            if !absorbed {
                basis.push(p.monic());
            }
        }
    }
    sort_polys(&mut basis);
    basis.dedup();
    let exps = fs
        .iter()
        .map(|f| basis.iter().map(|b| f.multiplicity_of(b)).collect())
        .collect();
    Ok((basis, exps))
}

/// Deterministic order: degree, then coefficients from the constant term up.
pub fn sort_polys(v: &mut [Poly<Rat>]) {
    v.sort_by(cmp_polys);
}

pub fn cmp_polys(a: &Poly<Rat>, b: &Poly<Rat>) -> std::cmp::Ordering {
    a.deg()
        .cmp(&b.deg())
        .then_with(|| a.coeffs().cmp(b.coeffs()))
}

impl Poly<Rat> {
    /// Human-readable form in the variable `var`, highest degree first,
    /// e.g. `x^2 - 2*x + 1/3`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let unit = a.is_one();
            let term = match (i, unit) {
                (0, _) => format!("{a}"),
                (1, true) => var.to_string(),
                (1, false) => format!("{a}*{var}"),
                (_, true) => format!("{var}^{i}"),
                (_, false) => format!("{a}*{var}^{i}"),
            };
            out.push_str(&term);
        }
        out
    }
}

impl fmt::Display for Poly<Rat> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}

impl FromStr for Poly<Rat> {
    type Err = ExactAlgError;

    /// Parses a comma-separated ascending coefficient list, e.g. `"1, 0, -1/2"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let coeffs = s
            .split(',')
            .map(|t| parse_rat(t.trim()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::from_coeffs(coeffs))
    }
}
