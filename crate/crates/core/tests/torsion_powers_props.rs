use num_complex::Complex64;
use num_traits::Signed;
use proptest::prelude::*;

use paramrec::algnum::NumberField;
use paramrec::exactalg::{cyclotomic, rat, BiPoly, Poly, Rat, RatFunc};
use paramrec::lrs::SpecializedLRS;
use paramrec::powers::{is_perfect_power_rat, power_structure_scan, power_verdict_cyclotomic, PowerVerdict};
use paramrec::torsion::{bivariate_rou_solutions, exceptional_pair_poly, level_curve_points, rou_roots, TorsionError};

fn small_rat() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn nonconstant_poly(max_deg: usize) -> impl Strategy<Value = Poly<Rat>> {
    prop::collection::vec(-3i64..=3, 2..=max_deg + 1)
        .prop_map(|c| Poly::from_i64s(&c))
        .prop_filter("nonconstant", |p| !p.is_constant())
}

fn eval_complex(p: &Poly<Rat>, z: Complex64) -> Complex64 {
    use num_traits::ToPrimitive;
    p.coeffs().iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c.to_f64().unwrap())
}

fn zeta(n: u64, r: u64) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * r as f64 / n as f64)
}

fn eval_bivariate(p: &BiPoly, x: Complex64, y: Complex64) -> Complex64 {
    use num_traits::ToPrimitive;
    p.terms().iter().map(|(i, j, c)| c.to_f64().unwrap() * x.powu(*i as u32) * y.powu(*j as u32)).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn rou_roots_divide(q in nonconstant_poly(3), orders in prop::collection::vec((1u64..=12, 1usize..=2), 0..3)) {
        let p = orders.iter().fold(q, |acc, &(n, e)| acc.mul_ref(&cyclotomic(n).pow(e as u64)));
        let found = rou_roots(&p);
        let prod = found.iter().fold(Poly::from_i64s(&[1]), |acc, &(n, e)| acc.mul_ref(&cyclotomic(n).pow(e as u64)));
        prop_assert!(prod.divides(&p));
        for &(n, _) in &orders {
            prop_assert!(found.iter().any(|f| f.0 == n), "order {} missing from {:?}", n, found);
        }
        for &(n, e) in &found {
            prop_assert!(!cyclotomic(n).pow(e as u64 + 1).divides(&p), "multiplicity of order {} too small", n);
        }
    }

    #[test]
    fn level_curve_points_are_certified(a in nonconstant_poly(2), b in nonconstant_poly(1), c in nonconstant_poly(1)) {
        let g1 = RatFunc::from_poly(a);
        let g2 = RatFunc::new(b, c).unwrap();
        prop_assume!(!g2.is_constant());
        let sol = match level_curve_points(&g1, &g2) {
            Ok(s) => s,
            Err(TorsionError::DegenerateInput(_)) => return Ok(()),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        };
        if sol.infinite_flag {
            return Ok(());
        }
        prop_assert!(sol.count <= sol.bound);
        prop_assert_eq!(sol.count, sol.points.len());
        for p in &sol.points {
            prop_assert!(p.residual < 1e-20, "residual {}", p.residual);
            let z = Complex64::new(p.re, p.im);
            let n1 = eval_complex(g1.num(), z).norm() / eval_complex(g1.den(), z).norm();
            let n2 = eval_complex(g2.num(), z).norm() / eval_complex(g2.den(), z).norm();
            prop_assert!((n1 - 1.0).abs() < 1e-6 && (n2 - 1.0).abs() < 1e-6, "|g1| = {}, |g2| = {}", n1, n2);
        }
    }

    #[test]
    fn exceptional_pairs_reconstruct(g in nonconstant_poly(2), m1 in 1u32..=3, m2 in 1u32..=3) {
        let g1 = g.pow(m1 as u64);
        let g2 = g.pow(m2 as u64);
        let (h, a, b) = exceptional_pair_poly(&g1, &g2).expect("powers of one polynomial");
        prop_assert_eq!(h.pow(a as u64), g1);
        prop_assert_eq!(h.pow(b as u64), g2);
    }

    #[test]
    fn perfect_powers_round_trip(u in small_rat(), m in 1u32..=6) {
        let um = num_traits::pow(u.clone(), m as usize);
        let r = is_perfect_power_rat(&um, m).expect("u^m is an m-th power");
        prop_assert_eq!(num_traits::pow(r.clone(), m as usize), um);
        let want = if m % 2 == 0 { u.abs() } else { u };
        prop_assert_eq!(r, want);
    }

    #[test]
    fn no_verdicts_are_sound(order in prop::sample::select(vec![3u64, 4, 5, 8]), cs in prop::collection::vec(-3i64..=3, 1..=4), m in 2u32..=3) {
        let k = NumberField::cyclotomic(order);
        let rho = k.elem(Poly::from_i64s(&cs));
        prop_assume!(!rho.is_zero());
        let u = rho.pow(m as i64).unwrap();
        match power_verdict_cyclotomic(&u, m).unwrap() {
            PowerVerdict::Yes(r) => prop_assert!(r.pow(m as i64).unwrap().sub(&u).is_zero()),
            PowerVerdict::Unknown => {}
            PowerVerdict::No => prop_assert!(false, "No for an exact power"),
        }
    }

    #[test]
    fn scans_of_perfect_power_bases_are_full(b in 2i64..=5, m in 2u32..=3, sign in prop::sample::select(vec![1i64, -1])) {
        let q = NumberField::rationals();
        let c = num_traits::pow(b, m as usize) * if m % 2 == 1 { sign } else { 1 };
        let s = SpecializedLRS::new(vec![q.one()], vec![q.from_int(c)]).unwrap();
        let scan = power_structure_scan(&s, m, 60).unwrap();
        prop_assert_eq!(scan.full_residues, (0..m as u64).collect::<Vec<_>>());
        prop_assert!(scan.counterexamples.is_empty());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn torsion_pairs_are_zeros(terms in prop::collection::vec((0usize..=2, 0usize..=2, -2i64..=2), 2..=4)) {
        let p = BiPoly::from_terms(&terms.iter().map(|&(i, j, c)| (i, j, rat(c, 1))).collect::<Vec<_>>());
        prop_assume!(p.deg_x() > 0 && p.deg_y() > 0);
        let rep = match bivariate_rou_solutions(&p, 12) {
            Ok(r) => r,
            Err(TorsionError::DegenerateFactor { .. } | TorsionError::DegenerateInput(_)) => return Ok(()),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        };
        for q in &rep.pairs {
            let v = eval_bivariate(&p, zeta(q.a, q.r), zeta(q.b, q.s));
            prop_assert!(v.norm() < 1e-9, "P at {:?} is {}", q, v);
        }
        // exhaustive cross-check within the order bound
        for a in 1..=12u64 {
            for r in (0..a).filter(|r| paramrec::exactalg::gcd_u64(*r, a) == 1) {
                for b in 1..=12u64 {
                    for s in (0..b).filter(|s| paramrec::exactalg::gcd_u64(*s, b) == 1) {
                        let v = eval_bivariate(&p, zeta(a, r), zeta(b, s));
                        let listed = rep.pairs.iter().any(|q| (q.a, q.r, q.b, q.s) == (a, r, b, s));
                        prop_assert_eq!(v.norm() < 1e-9, listed, "({}, {}, {}, {})", a, r, b, s);
                    }
                }
            }
        }
    }
}
