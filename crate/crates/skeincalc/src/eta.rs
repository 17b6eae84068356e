//! Exact evaluation of the root-of-unity homomorphism at `A = e^{i pi/3}`
//! (level r = 3, two admissible colors). The coefficient families are built
//! division-free in the Laurent ring and evaluated through `cyc_eval`, so
//! everything stays in `Z[zeta]`.

use crate::ring::{cyc_eval, Eisenstein, LaurentPoly};
use crate::skein::{Monomial, SkeinElement};

/// Kirby-color coefficient, division-free:
/// `delta(n) = (-1)^n * sum_{j=0..n} A^{2(n-2j)}`.
pub fn delta(n: i64) -> LaurentPoly {
    assert!(n >= 0);
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let mut p = LaurentPoly::zero();
    for j in 0..=n {
        p += &LaurentPoly::monomial(sign, 2 * (n - 2 * j));
    }
    p
}

/// Twist coefficient `mu(n) = (-1)^n A^{n^2 + 2n}`.
pub fn mu(n: i64) -> LaurentPoly {
    assert!(n >= 0);
    let sign = if n % 2 == 0 { 1 } else { -1 };
    LaurentPoly::monomial(sign, n * n + 2 * n)
}

/// `mu(n)^e` for any integer `e`; the twist coefficient is a unit monomial.
pub fn mu_pow(n: i64, e: i64) -> LaurentPoly {
    assert!(n >= 0);
    let sign = if (n * e).rem_euclid(2) == 0 { 1 } else { -1 };
    LaurentPoly::monomial(sign, e * (n * n + 2 * n))
}

/// Encirclement coefficient, division-free:
/// `f_coeff(n, a) = (-1)^a * sum_{j=0..a} A^{2(n+1)(a-2j)}`.
pub fn f_coeff(n: i64, a: i64) -> LaurentPoly {
    assert!(n >= 0 && a >= 0);
    let sign = if a % 2 == 0 { 1 } else { -1 };
    let step = 2 * (n + 1);
    let mut p = LaurentPoly::zero();
    for j in 0..=a {
        p += &LaurentPoly::monomial(sign, step * (a - 2 * j));
    }
    p
}

/// Evaluate one basis monomial: sum over the four strand colors of the
/// Kirby-color weights, the twist corrections for the three surgery
/// strands, the strand-coupling factors, and one encirclement factor per
/// decorated curve around its strand.
pub fn eta_monomial(l: &Monomial, k: [i64; 3]) -> Eisenstein {
    let mut total = LaurentPoly::zero();
    for i0 in 0..=1i64 {
        for i1 in 0..=1i64 {
            for i2 in 0..=1i64 {
                for i3 in 0..=1i64 {
                    let mut term = &delta(i0) * &delta(i0);
                    term = &term * &delta(i1);
                    term = &term * &delta(i2);
                    term = &term * &delta(i3);
                    term = &term * &mu_pow(i1, -k[0]);
                    term = &term * &mu_pow(i2, -k[1]);
                    term = &term * &mu_pow(i3, -k[2]);
                    term = &term * &f_coeff(i0, i1);
                    term = &term * &f_coeff(i0, i2);
                    term = &term * &f_coeff(i0, i3);
                    term = &term * &f_coeff(i1, l.l1);
                    term = &term * &f_coeff(i2, l.l2);
                    term = &term * &f_coeff(i3, l.l3);
                    total += &term;
                }
            }
        }
    }
    cyc_eval(&total)
}

/// Linear extension over a whole element.
pub fn eta_elem(e: &SkeinElement, k: [i64; 3]) -> Eisenstein {
    let mut out = Eisenstein::zero();
    for (m, c) in e.iter() {
        out += &(&cyc_eval(c) * &eta_monomial(m, k));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relators::{relator, Family, RelatorId, SurgeryParams};
    use crate::ring::cyc_eval;

    fn lp(pairs: &[(i64, i64)]) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (e, c) in pairs {
            p += &LaurentPoly::monomial(*c, *e);
        }
        p
    }

    #[test]
    fn delta_examples() {
        assert!(delta(0).is_one());
        assert_eq!(delta(1), lp(&[(2, -1), (-2, -1)]));
        // at the sixth root the value is +1, not -1
        assert_eq!(cyc_eval(&delta(1)), Eisenstein::one());
    }

    #[test]
    fn mu_examples() {
        assert!(mu(0).is_one());
        assert_eq!(mu(1), LaurentPoly::monomial(-1, 3));
        assert_eq!(cyc_eval(&mu(1)), Eisenstein::one());
        assert_eq!(mu_pow(1, -5), LaurentPoly::monomial(-1, -15));
        assert_eq!(mu_pow(1, 2), LaurentPoly::monomial(1, 6));
    }

    #[test]
    fn f_coeff_examples() {
        for n in 0..5 {
            assert!(f_coeff(n, 0).is_one());
        }
        assert_eq!(f_coeff(0, 1), lp(&[(2, -1), (-2, -1)]));
        assert_eq!(cyc_eval(&f_coeff(0, 1)), Eisenstein::one());
        assert_eq!(f_coeff(1, 1), lp(&[(4, -1), (-4, -1)]));
        assert_eq!(cyc_eval(&f_coeff(1, 1)), Eisenstein::one());
    }

    // The division-free forms satisfy the defining quotient identities.
    #[test]
    fn division_free_matches_quotient() {
        let a2 = |e: i64| LaurentPoly::apow(e);
        for n in 0..=6i64 {
            let denom = &a2(2) - &a2(-2);
            let lhs = &denom * &delta(n);
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let rhs = &LaurentPoly::monomial(sign, 2 * (n + 1))
                - &LaurentPoly::monomial(sign, -2 * (n + 1));
            assert_eq!(lhs, rhs, "delta({n})");

            for a in 0..=6i64 {
                let denom = &a2(2 * (n + 1)) - &a2(-2 * (n + 1));
                let lhs = &denom * &f_coeff(n, a);
                let sign = if a % 2 == 0 { 1 } else { -1 };
                let rhs = &LaurentPoly::monomial(sign, 2 * (n + 1) * (a + 1))
                    - &LaurentPoly::monomial(sign, -2 * (n + 1) * (a + 1));
                assert_eq!(lhs, rhs, "f_coeff({n},{a})");
            }
        }
    }

    #[test]
    fn empty_link_value() {
        for k in [[2, 2, 2], [2, 3, 4], [3, 3, 3], [5, 2, 7]] {
            assert_eq!(
                eta_monomial(&Monomial::empty_link(), k),
                Eisenstein::new(16, 0)
            );
        }
        assert_eq!(
            eta_elem(&SkeinElement::empty_link(), [2, 2, 2]),
            Eisenstein::new(16, 0)
        );
    }

    #[test]
    fn decorated_monomial_value() {
        assert_eq!(
            eta_monomial(&Monomial::new(1, 0, 0), [2, 2, 2]),
            Eisenstein::new(16, 0)
        );
    }

    #[test]
    fn scaled_empty_link() {
        // cyc_eval(-A^2 - A^-2) = +1, so the loop-scaled empty link keeps
        // the value 16.
        let loop_value = lp(&[(2, -1), (-2, -1)]);
        assert_eq!(cyc_eval(&loop_value), Eisenstein::one());
        let e = SkeinElement::empty_link().scale(&loop_value);
        assert_eq!(eta_elem(&e, [2, 2, 2]), Eisenstein::new(16, 0));
        assert_eq!(
            eta_elem(&SkeinElement::zero(), [2, 2, 2]),
            Eisenstein::zero()
        );
    }

    #[test]
    fn annihilates_relators_small() {
        for k in [[2, 2, 2], [2, 3, 4]] {
            let params = SurgeryParams::s2(k[0], k[1], k[2]);
            for family in [Family::F12, Family::F13, Family::F23] {
                for n1 in -3..=3 {
                    for n2 in -3..=3 {
                        for n3 in -3..=3 {
                            let r = relator(&RelatorId::new(family, [n1, n2, n3], params)).unwrap();
                            let v = eta_elem(&r, k);
                            assert!(
                                v.is_zero(),
                                "eta({family:?} ({n1},{n2},{n3}), k={k:?}) = {v}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn compatible_with_box_reduction() {
        use crate::reduce_s2::reduce_s2;
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(21);
        for k in [[2, 2, 2], [2, 3, 4]] {
            for _ in 0..10 {
                let mut e = SkeinElement::zero();
                for _ in 0..rng.gen_range(1..=8) {
                    let m = Monomial::new(
                        rng.gen_range(0..=9),
                        rng.gen_range(0..=9),
                        rng.gen_range(0..=9),
                    );
                    e.add_monomial(
                        m,
                        &LaurentPoly::monomial(rng.gen_range(-4..=4i64), rng.gen_range(-5..=5)),
                    );
                }
                let (rep, _) = reduce_s2(&e, k).unwrap();
                assert_eq!(eta_elem(&e, k), eta_elem(&rep.elem, k));
            }
        }
    }
}
