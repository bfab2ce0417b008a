use cfk_core::clifford::{
    exp_simple_bivector, frame_of, mv_product, plane_mul, vector_products, GeometricFrame, Multivector, PlaneValue,
};
use num_complex::Complex64;
use proptest::prelude::*;

fn sparse_mv(m: usize, entries: &[(u16, f64, f64)]) -> Multivector<Complex64> {
    let mut out = Multivector::zero(m);
    for &(b, re, im) in entries {
        let blade = u32::from(b) % (1 << m);
        let c = *out.coeff(blade) + Complex64::new(re, im);
        out.set_coeff(blade, c);
    }
    out
}

fn entries() -> impl Strategy<Value = Vec<(u16, f64, f64)>> {
    prop::collection::vec((any::<u16>(), -2.0f64..2.0, -2.0f64..2.0), 1..6)
}

fn rel_close(a: &Multivector<Complex64>, b: &Multivector<Complex64>, tol: f64) -> bool {
    let scale = a.max_abs().max(b.max_abs()).max(1.0);
    (a - b).max_abs() <= tol * scale
}

#[test]
fn worked_products() {
    let x = Multivector::<f64>::vector(&[1.0, 2.0]);
    let y = Multivector::<f64>::vector(&[3.0, 4.0]);
    let xy = mv_product(&x, &y).unwrap();
    assert_eq!(xy.coeffs(), &[-11.0, 0.0, 0.0, -2.0]);
    let (inner, wedge) = vector_products(&[1.0, 2.0, 0.0], &[3.0, 4.0, 0.0]).unwrap();
    assert_eq!(inner, 11.0);
    assert_eq!(*wedge.coeff(0b011), -2.0);
    assert!(mv_product(&Multivector::<f64>::zero(2), &Multivector::zero(3)).is_err());
}

#[test]
fn frame_examples() {
    let f = frame_of(&[1.0, 2.0], &[3.0, 4.0]).unwrap();
    assert_eq!(f.u, 11.0);
    assert!((f.v - 2.0).abs() < 1e-14);
    assert!((f.t - 125f64.sqrt()).abs() < 1e-14);
    let c = frame_of(&[1.0, 0.0], &[1.0, 0.0]).unwrap();
    assert_eq!((c.u, c.v, c.t), (1.0, 0.0, 1.0));
}

#[test]
fn plane_mul_against_embedding() {
    let x = [1.0, 2.0];
    let y = [3.0, 4.0];
    let f = frame_of(&x, &y).unwrap();
    let a = PlaneValue::new(Complex64::new(0.5, -1.0), Complex64::new(2.0, 0.25), f);
    let b = PlaneValue::new(Complex64::new(-1.5, 0.3), Complex64::new(0.1, 1.0), f);
    let direct = plane_mul(&a, &b).unwrap().embed(&x, &y).unwrap();
    let embedded = mv_product(&a.embed(&x, &y).unwrap(), &b.embed(&x, &y).unwrap()).unwrap();
    assert!(rel_close(&direct, &embedded, 1e-14));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn frame_identity(m in 1usize..=6, xs in prop::collection::vec(-5.0f64..5.0, 12)) {
        let f = frame_of(&xs[..m], &xs[6..6 + m]).unwrap();
        prop_assert!(f.v >= 0.0 && f.t >= 0.0 && f.u.abs() <= f.t * (1.0 + 1e-15));
        prop_assert!((f.u * f.u + f.v * f.v - f.t * f.t).abs() <= 1e-12 * (f.t * f.t).max(1e-300));
    }

    #[test]
    fn associativity(m in 1usize..=6, a in entries(), b in entries(), c in entries()) {
        let (a, b, c) = (sparse_mv(m, &a), sparse_mv(m, &b), sparse_mv(m, &c));
        let left = &(&a * &b) * &c;
        let right = &a * &(&b * &c);
        prop_assert!(rel_close(&left, &right, 1e-12));
    }

    #[test]
    fn conjugation_reverses_products(m in 1usize..=6, a in entries(), b in entries()) {
        let (a, b) = (sparse_mv(m, &a), sparse_mv(m, &b));
        prop_assert!(rel_close(&(&a * &b).conjugate(), &(&b.conjugate() * &a.conjugate()), 1e-12));
        prop_assert_eq!(a.conjugate().conjugate(), a);
    }

    #[test]
    fn grade_decomposition(m in 1usize..=6, a in entries()) {
        let a = sparse_mv(m, &a);
        let sum = (0..=m).fold(Multivector::zero(m), |acc, g| acc + a.grade(g));
        prop_assert_eq!(sum, a);
    }

    #[test]
    fn vector_square(m in 1usize..=6, xs in prop::collection::vec(-3.0f64..3.0, 6)) {
        let x = Multivector::<f64>::vector(&xs[..m]);
        let sq = &x * &x;
        let n2: f64 = xs[..m].iter().map(|c| c * c).sum();
        prop_assert!((sq.scalar_part() + n2).abs() < 1e-12 * n2.max(1.0));
        prop_assert!(sq.grade(2).max_abs() < 1e-12 * n2.max(1.0));
    }

    #[test]
    fn exp_bivector_inverse(u in -4.0f64..4.0, v in 0.0f64..6.0) {
        let f = GeometricFrame::from_uv(u, v).unwrap();
        let e = exp_simple_bivector(f);
        let back = PlaneValue::wedge(f).scale(Complex64::new(-1.0, 0.0)).exp();
        prop_assert!((e * back).max_abs_diff(&PlaneValue::one(f)) < 1e-13);
    }

    #[test]
    fn plane_mul_matches_multivectors(
        m in 2usize..=5,
        xs in prop::collection::vec(-2.0f64..2.0, 10),
        c in prop::collection::vec(-2.0f64..2.0, 8),
    ) {
        let (x, y) = (&xs[..m], &xs[5..5 + m]);
        let f = frame_of(x, y).unwrap();
        let a = PlaneValue::new(Complex64::new(c[0], c[1]), Complex64::new(c[2], c[3]), f);
        let b = PlaneValue::new(Complex64::new(c[4], c[5]), Complex64::new(c[6], c[7]), f);
        let direct = plane_mul(&a, &b).unwrap().embed(x, y).unwrap();
        let embedded = &a.embed(x, y).unwrap() * &b.embed(x, y).unwrap();
        prop_assert!(rel_close(&direct, &embedded, 1e-12));
        prop_assert!((a * b).max_abs_diff(&(b * a)) == 0.0);
    }
}
