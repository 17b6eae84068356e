//! Exact coefficient arithmetic: integer Laurent polynomials in the variable
//! `A`, and the evaluation ring `Z[zeta]` for `zeta = e^{i pi/3}`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// Integer Laurent polynomial in one variable.
///
/// Canonical form: the exponent map never stores a zero coefficient, so
/// structural equality is value equality and the zero polynomial is the
/// empty map. Coefficients are arbitrary-precision; exponents are `i64`
/// with checked addition (no silent wraparound).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The monomial `c * A^exp`. Returns zero if `c == 0`.
    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    /// `A^exp` with unit coefficient.
    pub fn apow(exp: i64) -> Self {
        Self::monomial(1, exp)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterate `(exponent, coefficient)` in ascending exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Add `c * A^exp`, dropping the entry if it cancels.
    pub fn add_term(&mut self, exp: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect(),
        }
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.iter() {
            self.add_term(e, c);
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.iter() {
            self.add_term(e, &(-c));
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in self.iter() {
            for (eb, cb) in rhs.iter() {
                let e = ea
                    .checked_add(eb)
                    .expect("exponent overflow in Laurent multiplication");
                out.add_term(e, &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter() {
            if first {
                if c.sign() == num_bigint::Sign::Minus {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.sign() == num_bigint::Sign::Minus {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.magnitude();
            match (*e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "A")?,
                (1, false) => write!(f, "{mag}*A")?,
                (_, true) => write!(f, "A^{e}")?,
                (_, false) => write!(f, "{mag}*A^{e}")?,
            }
        }
        Ok(())
    }
}

/// Element `a + b*zeta` of `Z[zeta]`, `zeta` a primitive sixth root of unity
/// with `zeta^2 = zeta - 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Eisenstein {
    pub a: BigInt,
    pub b: BigInt,
}

impl Eisenstein {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Eisenstein {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl Add for &Eisenstein {
    type Output = Eisenstein;
    fn add(self, rhs: &Eisenstein) -> Eisenstein {
        Eisenstein {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Sub for &Eisenstein {
    type Output = Eisenstein;
    fn sub(self, rhs: &Eisenstein) -> Eisenstein {
        Eisenstein {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

// (a + b z)(c + d z) with z^2 = z - 1.
impl Mul for &Eisenstein {
    type Output = Eisenstein;
    fn mul(self, rhs: &Eisenstein) -> Eisenstein {
        let bd = &self.b * &rhs.b;
        Eisenstein {
            a: &self.a * &rhs.a - &bd,
            b: &self.a * &rhs.b + &self.b * &rhs.a + &bd,
        }
    }
}

impl Neg for &Eisenstein {
    type Output = Eisenstein;
    fn neg(self) -> Eisenstein {
        Eisenstein {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

impl AddAssign<&Eisenstein> for Eisenstein {
    fn add_assign(&mut self, rhs: &Eisenstein) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl fmt::Display for Eisenstein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*zeta", self.a, self.b)
    }
}

// zeta^k for k = 0..5 in the {1, zeta} basis.
const ZETA_POWERS: [(i64, i64); 6] = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];

/// Ring homomorphism `Z[A^{+-1}] -> Z[zeta]` sending `A` to `zeta`.
///
/// `A^{-1}` lands on `zeta^{-1} = 1 - zeta`, so the map is defined on all
/// Laurent exponents and preserves addition and multiplication exactly.
pub fn cyc_eval(p: &LaurentPoly) -> Eisenstein {
    let mut out = Eisenstein::zero();
    for (e, c) in p.iter() {
        let (za, zb) = ZETA_POWERS[e.rem_euclid(6) as usize];
        out.a += c * za;
        out.b += c * zb;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(pairs: &[(i64, i64)]) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (e, c) in pairs {
            p.add_term(*e, &BigInt::from(*c));
        }
        p
    }

    #[test]
    fn additive_inverse() {
        let p = lp(&[(2, 1), (-2, 1)]);
        let q = lp(&[(2, -1), (-2, -1)]);
        assert!((&p + &q).is_zero());
    }

    #[test]
    fn unit_law() {
        assert!((&LaurentPoly::apow(1) * &LaurentPoly::apow(-1)).is_one());
        assert!((&LaurentPoly::monomial(-1, -3) * &LaurentPoly::monomial(-1, 3)).is_one());
    }

    #[test]
    fn monomial_examples() {
        assert!(LaurentPoly::monomial(1, 0).is_one());
        assert_eq!(LaurentPoly::monomial(-1, -3), lp(&[(-3, -1)]));
        assert!(LaurentPoly::monomial(0, 7).is_zero());
    }

    #[test]
    fn cyc_eval_examples() {
        // A^2 + A^-2 evaluates to -1: zeta^2 + (1-zeta)^2 = (zeta-1) + (1 - 2 zeta + zeta - 1) = -1.
        assert_eq!(cyc_eval(&lp(&[(2, 1), (-2, 1)])), Eisenstein::new(-1, 0));
        assert_eq!(cyc_eval(&LaurentPoly::apow(3)), Eisenstein::new(-1, 0));
        assert_eq!(cyc_eval(&LaurentPoly::zero()), Eisenstein::zero());
    }

    #[test]
    fn cyc_eval_unit_powers() {
        assert_eq!(cyc_eval(&LaurentPoly::apow(6)), Eisenstein::one());
        for k in -24..=24 {
            let p = &LaurentPoly::apow(k) * &LaurentPoly::apow(-k);
            assert_eq!(cyc_eval(&p), Eisenstein::one());
        }
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec(((-8i64..=8), (-9i64..=9)), 0..5).prop_map(|pairs| lp(&pairs))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1024))]

        #[test]
        fn ring_axioms(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        }

        #[test]
        fn cyc_eval_is_homomorphism(p in arb_poly(), q in arb_poly()) {
            prop_assert_eq!(cyc_eval(&(&p * &q)), &cyc_eval(&p) * &cyc_eval(&q));
            prop_assert_eq!(cyc_eval(&(&p + &q)), &cyc_eval(&p) + &cyc_eval(&q));
        }
    }

    #[test]
    fn zeta_inverse() {
        // zeta * (1 - zeta) = 1 and zeta^3 = -1 under the implemented product.
        let zeta = Eisenstein::new(0, 1);
        let zinv = Eisenstein::new(1, -1);
        assert_eq!(&zeta * &zinv, Eisenstein::one());
        let z3 = &(&zeta * &zeta) * &zeta;
        assert_eq!(z3, Eisenstein::new(-1, 0));
        let z6 = &z3 * &z3;
        assert_eq!(z6, Eisenstein::one());
    }
}
