use num::{BigInt, One, Zero};
use num::traits::Pow;
use proptest::prelude::*;

use supercatalan::algebra::{genocchi_numbers, q_tangent_numbers, tangent_numbers, Normalization, Poly, Series};
use supercatalan::families::{a_coeff, ClassicalFamily, Functional, QFamily};
use supercatalan::lattice::{brute_force_weight, PathTable, Weights};
use supercatalan::scalar::{
    binomial, int, q_binomial, q_int, q_pochhammer, ratio, QPoly, QRat, Rational, SignedQMonomial,
};

fn qpoly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-4i64..=4, 1..5).prop_map(|c| QPoly::from_ints(&c))
}

fn nonzero_qpoly() -> impl Strategy<Value = QPoly> {
    qpoly().prop_filter("nonzero", |p| !p.is_zero())
}

fn qrat() -> impl Strategy<Value = QRat> {
    (qpoly(), nonzero_qpoly()).prop_map(|(n, d)| QRat::new(n, d))
}

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=5).prop_map(|(p, q)| ratio(p, q))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn qrat_field_axioms(a in qrat(), b in qrat(), c in qrat()) {
        prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert_eq!(a.clone() - a.clone(), QRat::zero());
        if !a.is_zero() {
            prop_assert_eq!(a.clone() * a.recip(), QRat::one());
        }
    }

    #[test]
    fn qrat_normalization_is_idempotent(a in qrat()) {
        let again = QRat::new(a.num().clone(), a.den().clone());
        prop_assert_eq!(&again, &a);
        prop_assert_eq!(a.den().leading(), Rational::one());
    }

    #[test]
    fn d_q_is_linear_on_polynomials(a in prop::collection::vec(qrat(), 0..5), b in prop::collection::vec(qrat(), 0..5), c in qrat()) {
        let (pa, pb) = (Poly::new(a), Poly::new(b));
        let lhs = (&pa.scalar_mul(&c) + &pb).d_q();
        let rhs = &pa.d_q().scalar_mul(&c) + &pb.d_q();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn series_product_is_commutative_and_associative(
        a in prop::collection::vec(rational(), 1..10),
        b in prop::collection::vec(rational(), 1..10),
        c in prop::collection::vec(rational(), 1..10),
    ) {
        let s = |v: Vec<Rational>| Series::from_plain(v, 9, Normalization::Ordinary);
        let (a, b, c) = (s(a), s(b), s(c));
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
    }

    #[test]
    fn l_family_reconstructs_monomials(m in 0usize..4, s in nonzero_rational()) {
        let f = ClassicalFamily::L { m, s: s.clone() };
        for n in 0..=8usize {
            let mut acc = Poly::zero();
            for k in 0..=n / 2 {
                let c = a_coeff(n, k, m) * (-s.clone()).pow(k as i32);
                acc = &acc + &f.closed_form(n - 2 * k).scalar_mul(&c);
            }
            prop_assert_eq!(acc, Poly::monomial(int(1), n));
        }
    }

    #[test]
    fn closed_form_equals_recurrence_for_random_s(m in 0usize..5, s in rational()) {
        for f in [ClassicalFamily::L { m, s: s.clone() }, ClassicalFamily::V { m, s: s.clone() }] {
            for (n, p) in f.by_recurrence(10).iter().enumerate() {
                prop_assert_eq!(p, &f.closed_form(n));
            }
        }
    }

    #[test]
    fn orthogonality_for_random_s(m in 0usize..4, s in nonzero_rational()) {
        let f = ClassicalFamily::L { m, s };
        let basis: Vec<Poly<Rational>> = (0..=10).map(|n| f.closed_form(n)).collect();
        let func = Functional::from_basis(&basis).unwrap();
        for i in 0..=5 {
            for j in 0..i {
                prop_assert_eq!(func.apply(&(&basis[i] * &basis[j])).unwrap(), Rational::zero());
            }
        }
    }
}

#[test]
fn q_binomial_symmetry_and_degeneration() {
    for n in 0..=12i64 {
        for k in 0..=n {
            let b = q_binomial(n, k).unwrap();
            assert_eq!(b, q_binomial(n, n - k).unwrap());
            assert_eq!(b.eval(&int(1)), Rational::from_integer(binomial(n, k)));
        }
    }
}

#[test]
fn q_pochhammer_minus_one_at_one() {
    for n in 0..=12usize {
        let v = q_pochhammer(SignedQMonomial::minus(0), n).eval(&int(1));
        let expected = if n == 0 { int(1) } else { int(1 << n) };
        assert_eq!(v, expected, "n={n}");
    }
}

#[test]
fn d_q_monomial_rule() {
    for n in 0..=20usize {
        let xn: Poly<QRat> = Poly::monomial(QRat::one(), n);
        let expected = if n == 0 {
            Poly::zero()
        } else {
            Poly::monomial(QRat::from_poly(q_int(n)), n - 1)
        };
        assert_eq!(xn.d_q(), expected, "n={n}");
    }
}

#[test]
fn tangent_numbers_and_q_degeneration() {
    let t = tangent_numbers(8).unwrap();
    let g = genocchi_numbers(9).unwrap();
    for n in 0..8 {
        // G_{2n+2} = (n+1) T_{2n+1} / 2^{2n}
        assert_eq!(&g[n + 1] * (BigInt::one() << (2 * n)), &t[n] * BigInt::from(n + 1));
    }
    let tq = q_tangent_numbers(5).unwrap();
    for n in 0..5 {
        assert_eq!(tq[n].eval(&int(1)), Rational::from_integer(t[n].clone()));
    }
}

#[test]
fn families_are_monic_with_parity() {
    let mut classical = vec![ClassicalFamily::Lucas, ClassicalFamily::Fibonacci, ClassicalFamily::ChebT, ClassicalFamily::ChebU];
    let mut q = vec![QFamily::LittleR, QFamily::LittleH { s: QRat::from_int(2) }, QFamily::BigH { s: QRat::from_int(-1) }];
    for m in 0..=3 {
        classical.push(ClassicalFamily::L { m, s: ratio(-1, 3) });
        classical.push(ClassicalFamily::V { m, s: int(2) });
        q.push(QFamily::L { m, s: QRat::from_int(-1) });
        q.push(QFamily::V { m, s: QRat::q_pow(-1) });
        q.push(QFamily::R { m });
    }
    for n in 0..=12 {
        for f in &classical {
            let p = f.closed_form(n);
            assert!(p.degree() == Some(n) && p.is_monic() && p.has_parity(n % 2), "{f} n={n}");
        }
        for f in &q {
            let p = f.closed_form(n);
            assert!(p.degree() == Some(n) && p.is_monic() && p.has_parity(n % 2), "{f} n={n}");
        }
    }
}

#[test]
fn specialization_web() {
    for n in 0..=10 {
        let l = |m, s: Rational| ClassicalFamily::L { m, s }.closed_form(n);
        if n > 0 {
            assert_eq!(l(0, int(-1)), ClassicalFamily::Lucas.closed_form(n), "n={n}");
            assert_eq!(l(0, ratio(-1, 4)), ClassicalFamily::ChebT.closed_form(n), "n={n}");
        }
        assert_eq!(l(1, int(-1)), ClassicalFamily::Fibonacci.closed_form(n));
        assert_eq!(l(1, ratio(-1, 4)), ClassicalFamily::ChebU.closed_form(n));
        for m in 0..=3 {
            let v = ClassicalFamily::V { m, s: int(3) }.closed_form(n);
            assert_eq!(v, l(m, ratio(-3, 4)));
        }
    }
}

#[test]
fn q_families_degenerate_at_one() {
    let at_one = |p: &Poly<QRat>| p.map(|c| c.eval(&int(1)).unwrap());
    for m in 0..=3 {
        for n in 0..=8 {
            let lq = QFamily::L { m, s: QRat::from_int(-1) }.closed_form(n);
            assert_eq!(at_one(&lq), ClassicalFamily::L { m, s: int(-1) }.closed_form(n), "l m={m} n={n}");
            let vq = QFamily::V { m, s: QRat::from_int(2) }.closed_form(n);
            assert_eq!(at_one(&vq), ClassicalFamily::V { m, s: int(2) }.closed_form(n), "v m={m} n={n}");
        }
    }
}

#[test]
fn r_polynomials_are_products() {
    for n in 0..=6 {
        let mut prod: Poly<QRat> = Poly::one();
        for j in 0..n {
            let factor = Poly::new(vec![-QRat::q_pow(j as i64), QRat::zero(), QRat::one()]);
            prod = &prod * &factor;
        }
        assert_eq!(QFamily::LittleR.closed_form(2 * n), prod, "n={n}");
    }
}

#[test]
fn path_tables_match_enumeration() {
    let mut rational: Vec<Weights<Rational>> = vec![Weights::ones(16)];
    for m in 0..=3 {
        rational.push(Weights::from_fn(16, |j| supercatalan::families::lambda(j, m)));
    }
    for w in &rational {
        let t = PathTable::build(w, 14).unwrap();
        for n in 0..=14 {
            for k in 0..=n {
                assert_eq!(t.get(n, k).unwrap(), brute_force_weight(w, n, k).unwrap());
            }
        }
    }
    for m in 0..=2 {
        let w = Weights::mu_q(m, &QRat::one(), 14);
        let t = PathTable::build(&w, 12).unwrap();
        for n in 0..=12 {
            for k in 0..=n {
                assert_eq!(t.get(n, k).unwrap(), brute_force_weight(&w, n, k).unwrap(), "m={m} n={n} k={k}");
            }
        }
    }
}

#[test]
fn mu_tables_reproduce_phi_moments() {
    for m in 0..=3 {
        let w = Weights::mu_q(m, &QRat::one(), 14);
        let t = PathTable::build(&w, 12).unwrap();
        let f = QFamily::V { m, s: QRat::one() };
        for n in 0..=6 {
            assert_eq!(t.get(2 * n, 0).unwrap(), f.moment(2 * n), "m={m} n={n}");
        }
    }
}

#[test]
fn moment_bridge_through_paths() {
    for m in 0..=5 {
        let t = PathTable::build(&Weights::lambda(m, &int(-1), 18), 16).unwrap();
        for n in 0..=8 {
            assert_eq!(t.get(2 * n, 0).unwrap(), supercatalan::families::sigma(m, n), "m={m} n={n}");
        }
    }
}
