use num_traits::{One, Zero};

use super::{Poly, Rat};

/// Dense bivariate polynomial; `coeffs[i][j]` multiplies `X^i Y^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiPoly {
    coeffs: Vec<Vec<Rat>>,
}

impl BiPoly {
    pub fn new(mut coeffs: Vec<Vec<Rat>>) -> Self {
        for row in coeffs.iter_mut() {
            while row.last().is_some_and(Zero::is_zero) {
                row.pop();
            }
        }
        while coeffs.last().is_some_and(Vec::is_empty) {
            coeffs.pop();
        }
        BiPoly { coeffs }
    }

    pub fn zero() -> Self {
        BiPoly { coeffs: Vec::new() }
    }

    pub fn from_terms(terms: &[(usize, usize, Rat)]) -> Self {
        let mut b = BiPoly::zero();
        for (i, j, c) in terms {
            b.add_term(*i, *j, c);
        }
        b
    }

    /// `P(X, Y) = sum_j q_j(X) Y^j`.
    pub fn from_y_coeffs(cs: &[Poly<Rat>]) -> Self {
        let mut b = BiPoly::zero();
        for (j, q) in cs.iter().enumerate() {
            for (i, c) in q.coeffs().iter().enumerate() {
                b.add_term(i, j, c);
            }
        }
        b
    }

    fn add_term(&mut self, i: usize, j: usize, c: &Rat) {
        if self.coeffs.len() <= i {
            self.coeffs.resize(i + 1, Vec::new());
        }
        let row = &mut self.coeffs[i];
        if row.len() <= j {
            row.resize(j + 1, Rat::zero());
        }
        row[j] += c;
        *self = BiPoly::new(std::mem::take(&mut self.coeffs));
    }

    pub fn coeff(&self, i: usize, j: usize) -> Rat {
        self.coeffs
            .get(i)
            .and_then(|r| r.get(j))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero terms `(i, j, c)` in lexicographic order.
    pub fn terms(&self) -> Vec<(usize, usize, Rat)> {
        let mut out = Vec::new();
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    out.push((i, j, c.clone()));
                }
            }
        }
        out
    }

    pub fn deg_x(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn deg_y(&self) -> isize {
        self.coeffs.iter().map(|r| r.len() as isize - 1).max().unwrap_or(-1)
    }

    pub fn total_degree(&self) -> isize {
        self.terms()
            .iter()
            .map(|(i, j, _)| (i + j) as isize)
            .max()
            .unwrap_or(-1)
    }

    /// Coefficients as a polynomial in `Y` over `Q[X]`.
    pub fn y_coeffs(&self) -> Vec<Poly<Rat>> {
        let dy = self.deg_y();
        if dy < 0 {
            return Vec::new();
        }
        (0..=dy as usize)
            .map(|j| Poly::from_coeffs((0..self.coeffs.len()).map(|i| self.coeff(i, j)).collect()))
            .collect()
    }

    /// Coefficients as a polynomial in `X` over `Q[Y]`.
    pub fn x_coeffs(&self) -> Vec<Poly<Rat>> {
        self.coeffs.iter().map(|r| Poly::from_coeffs(r.clone())).collect()
    }

    pub fn eval_x(&self, x: &Rat) -> Poly<Rat> {
        let mut acc = Poly::zero();
        for q in self.x_coeffs().iter().rev() {
            acc = acc.scale(x).add_ref(q);
        }
        acc
    }

    pub fn eval_y(&self, y: &Rat) -> Poly<Rat> {
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .map(|r| Poly::from_coeffs(r.clone()).eval_with(y, &Rat::zero()))
                .collect(),
        )
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (i, j, c) in o.terms() {
            out.add_term(i, j, &c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        BiPoly::new(
            self.coeffs
                .iter()
                .map(|r| r.iter().map(|c| -c).collect())
                .collect(),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut acc: Vec<Vec<Rat>> = Vec::new();
        for (i, j, c) in self.terms() {
            for (k, l, d) in o.terms() {
                if acc.len() <= i + k {
                    acc.resize(i + k + 1, Vec::new());
                }
                let row = &mut acc[i + k];
                if row.len() <= j + l {
                    row.resize(j + l + 1, Rat::zero());
                }
                row[j + l] += &c * &d;
            }
        }
        BiPoly::new(acc)
    }

    /// `Res_Y(self, other)` as a polynomial in `X`, by evaluation at integer
    /// points where neither leading coefficient in `Y` vanishes, then
    /// interpolation. Zero if either input is zero.
    pub fn resultant_y(&self, other: &Self) -> Poly<Rat> {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let (a, b) = (self.y_coeffs(), other.y_coeffs());
        let la = a.last().unwrap();
        let lb = b.last().unwrap();
        let bound = (self.deg_x().max(0) * other.deg_y().max(0)
            + other.deg_x().max(0) * self.deg_y().max(0)) as usize;
        let mut pts = Vec::with_capacity(bound + 1);
        let mut x0 = 0i64;
        while pts.len() <= bound {
            let x = Rat::from_integer(x0.into());
            x0 += 1;
            if la.eval_with(&x, &Rat::zero()).is_zero() || lb.eval_with(&x, &Rat::zero()).is_zero() {
                continue;
            }
            let pa = Poly::from_coeffs(a.iter().map(|q| q.eval_with(&x, &Rat::zero())).collect());
            let pb = Poly::from_coeffs(b.iter().map(|q| q.eval_with(&x, &Rat::zero())).collect());
            let r = pa.resultant(&pb).expect("nonzero after lc screen");
            pts.push((x, r));
        }
        Poly::interpolate(&pts)
    }

    /// `prod P(beta, Y)` over the roots `beta` of the monic `m(X)`, i.e.
    /// `Res_X(m, P)` as a polynomial in `Y`.
    pub fn norm_over(&self, m: &Poly<Rat>) -> Poly<Rat> {
        assert!(m.lc().is_some_and(One::is_one), "norm_over needs a monic modulus");
        if self.is_zero() {
            return Poly::zero();
        }
        let bound = m.degree().unwrap() * self.deg_y().max(0) as usize;
        let pts: Vec<(Rat, Rat)> = (0..=bound as i64)
            .map(|y0| {
                let y = Rat::from_integer(y0.into());
                let q = self.eval_y(&y);
                let r = if q.is_zero() {
                    Rat::zero()
                } else {
                    m.resultant(&q).unwrap()
                };
                (y, r)
            })
            .collect();
        Poly::interpolate(&pts)
    }

    /// Gcd of the `Q[X]` coefficients in `Y` (the part of `P` depending on `X` only).
    pub fn content_y(&self) -> Poly<Rat> {
        self.y_coeffs()
            .iter()
            .fold(Poly::zero(), |g, q| g.gcd(q))
    }
}
