use super::{ExactDiv, FieldScalar, Scalar};

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
/// Every division is exact, so entries stay in the ring.
pub fn det_bareiss<T: ExactDiv>(mut m: Vec<Vec<T>>) -> T {
    let n = m.len();
    assert!(n > 0 && m.iter().all(|r| r.len() == n), "square nonempty matrix");
    let mut prev = m[0][0].one_like();
    let mut negate = false;
    for k in 0..n - 1 {
        if m[k][k].is_zero_elem() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero_elem()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return m[0][0].zero_like(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[i][j].mul_ref(&m[k][k]).sub_ref(&m[i][k].mul_ref(&m[k][j]));
                m[i][j] = t.exact_div(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        d.neg_ref()
    } else {
        d
    }
}

/// Determinant by cofactor expansion along the first row; no division.
pub fn det_cofactor<T: Scalar>(m: &[Vec<T>]) -> T {
    let n = m.len();
    assert!(n > 0 && m.iter().all(|r| r.len() == n), "square nonempty matrix");
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = m[0][0].zero_like();
    for c in 0..n {
        if m[0][c].is_zero_elem() {
            continue;
        }
        let minor: Vec<Vec<T>> = m[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, x)| x.clone()).collect())
            .collect();
        let t = m[0][c].mul_ref(&det_cofactor(&minor));
        acc = if c % 2 == 0 { acc.add_ref(&t) } else { acc.sub_ref(&t) };
    }
    acc
}

/// Solves `m x = b` for square nonsingular `m`; `None` if singular.
pub fn solve<T: FieldScalar>(m: &[Vec<T>], b: &[T]) -> Option<Vec<T>> {
    let n = m.len();
    let mut a: Vec<Vec<T>> = m
        .iter()
        .zip(b)
        .map(|(r, x)| {
            let mut r = r.clone();
            r.push(x.clone());
            r
        })
        .collect();
    for k in 0..n {
        let p = (k..n).find(|&i| !a[i][k].is_zero_elem())?;
        a.swap(k, p);
        let inv = a[k][k].inv();
        for j in k..=n {
            a[k][j] = a[k][j].mul_ref(&inv);
        }
        for i in 0..n {
            if i == k || a[i][k].is_zero_elem() {
                continue;
            }
            let f = a[i][k].clone();
            for j in k..=n {
                let t = a[i][j].sub_ref(&f.mul_ref(&a[k][j]));
                a[i][j] = t;
            }
        }
    }
    Some(a.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, Poly, Rat};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn determinants_agree() {
        let a = m(&[&[0, 2, 1], &[3, 1, 4], &[1, 5, 9]]);
        let d = det_bareiss(a.clone());
        assert_eq!(d, det_cofactor(&a));
        assert_eq!(d, int(-2 * (27 - 4) + (15 - 1)));
        assert_eq!(det_bareiss(m(&[&[1, 2], &[2, 4]])), int(0));
    }

    #[test]
    fn polynomial_determinant() {
        // det [[1, X], [X, X^3]] = X^3 - X^2
        let x = Poly::x();
        let a = vec![vec![Poly::one(), x.clone()], vec![x.clone(), x.pow(3)]];
        let want = Poly::from_i64s(&[0, 0, -1, 1]);
        assert_eq!(det_bareiss(a.clone()), want);
        assert_eq!(det_cofactor(&a), want);
    }

    #[test]
    fn solves_systems() {
        let a = m(&[&[0, 1], &[1, 1]]);
        let x = solve(&a, &[int(2), int(3)]).unwrap();
        assert_eq!(x, vec![int(1), int(2)]);
        assert!(solve(&m(&[&[1, 2], &[2, 4]]), &[int(1), int(1)]).is_none());
    }
}
