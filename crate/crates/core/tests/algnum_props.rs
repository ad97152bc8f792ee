use std::cmp::Ordering;

use proptest::prelude::*;

use paramrec::algnum::{count_rou_degree, is_root_of_unity, modulus_compare, weil_height, NFElem, NumberField};
use paramrec::exactalg::{rat, Poly};

/// Fields of degree at most 6, with the designated root index.
fn corpus() -> Vec<NumberField> {
    let mins: [(&[i64], usize); 9] = [
        (&[0, 1], 0),
        (&[1, 0, 1], 0),
        (&[-2, 0, 1], 1),
        (&[1, 1, 1], 0),
        (&[1, 1, 1, 1, 1], 0),
        (&[-2, 0, 0, 1], 0),
        (&[1, 1, 1, 1, 1, 1, 1], 0),
        (&[1, 0, 0, 1, 0, 0, 1], 0),
        (&[-1, -1, 0, 1], 0),
    ];
    mins.iter().map(|(c, j)| NumberField::new(&Poly::from_i64s(c), *j).unwrap()).collect()
}

fn element() -> impl Strategy<Value = NFElem> {
    (0usize..9, prop::collection::vec((-4i64..=4, 1i64..=3), 1..=6)).prop_map(|(i, cs)| {
        let k = corpus().swap_remove(i);
        let rep = Poly::from_coeffs(cs.into_iter().map(|(n, d)| rat(n, d)).collect());
        k.elem(rep)
    })
}

fn is_one(u: &NFElem) -> bool {
    u.sub(&u.field().one()).is_zero()
}

fn abs_at(u: &NFElem, j: usize) -> f64 {
    let (re, im) = u.to_complex(j);
    re.hypot(im)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn roots_of_unity_have_exact_order(u in element()) {
        prop_assume!(!u.is_zero());
        match is_root_of_unity(&u).unwrap() {
            Some(n) => {
                prop_assert!(is_one(&u.pow(n as i64).unwrap()));
                for j in 1..n {
                    prop_assert!(!is_one(&u.pow(j as i64).unwrap()), "u^{} = 1 before order {}", j, n);
                }
            }
            // every root of unity of degree <= 6 has order <= 18
            None => for j in 1..=18 {
                prop_assert!(!is_one(&u.pow(j).unwrap()));
            },
        }
    }

    #[test]
    fn heights_vanish_exactly_on_torsion(u in element()) {
        let h = weil_height(&u).unwrap();
        prop_assert!(h.value >= 0.0);
        let torsion = u.is_zero() || is_root_of_unity(&u).unwrap().is_some();
        if torsion {
            prop_assert!(h.value <= h.error_bound + 1e-12, "h = {}", h.value);
        } else {
            prop_assert!(h.value > h.error_bound, "h = {} +- {}", h.value, h.error_bound);
        }
    }

    #[test]
    fn modulus_compare_agrees_with_numeric(u in element(), cs in prop::collection::vec((-4i64..=4, 1i64..=3), 1..=6), j in 0usize..6) {
        let k = u.field().clone();
        let j = j % k.degree();
        let v = k.elem(Poly::from_coeffs(cs.into_iter().map(|(n, d)| rat(n, d)).collect()));
        let ord = modulus_compare(&u, &v, j).unwrap();
        let (a, b) = (abs_at(&u, j), abs_at(&v, j));
        if (a - b).abs() > 1e-9 * (1.0 + a.max(b)) {
            prop_assert_eq!(ord, a.partial_cmp(&b).unwrap());
        }
        prop_assert_eq!(modulus_compare(&v, &u, j).unwrap(), ord.reverse());
        prop_assert_eq!(modulus_compare(&u, &u.neg(), j).unwrap(), Ordering::Equal);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn height_is_homogeneous(u in element(), n in 1i64..=10) {
        prop_assume!(!u.is_zero());
        let h1 = weil_height(&u).unwrap();
        let hn = weil_height(&u.pow(n).unwrap()).unwrap();
        let err = hn.error_bound + n as f64 * h1.error_bound + 1e-9;
        prop_assert!((hn.value - n as f64 * h1.value).abs() <= err, "h(u^{}) = {}, n h(u) = {}", n, hn.value, n as f64 * h1.value);
    }
}

#[test]
fn cyclotomic_moduli_are_equal() {
    let k = NumberField::cyclotomic(7);
    let u = k.elem(Poly::from_coeffs(vec![rat(1, 2), rat(3, 1), rat(-1, 1)]));
    let z = k.gen();
    for j in 0..6 {
        assert_eq!(modulus_compare(&u, &u.mul(&z), j).unwrap(), Ordering::Equal);
    }
}

#[test]
fn rou_count_bound() {
    for d in 1..=100 {
        assert!(count_rou_degree(d) <= 23 * d * d);
    }
}

#[test]
fn powers_of_the_generator() {
    let k = NumberField::cyclotomic(9);
    let z = k.gen();
    for j in 0..9u64 {
        let u = z.pow(j as i64).unwrap();
        let want = 9 / paramrec::exactalg::gcd_u64(9, j);
        assert_eq!(is_root_of_unity(&u).unwrap(), Some(want));
        // -u has order lcm(2, want) for odd want
        assert_eq!(is_root_of_unity(&u.neg()).unwrap(), Some(2 * want));
        assert!(weil_height(&u).unwrap().value.abs() < 1e-12);
    }
}
