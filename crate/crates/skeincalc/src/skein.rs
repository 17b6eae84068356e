//! The free module on triples of Chebyshev-decorated boundary curves, the
//! index-normalization convention for negative Chebyshev degrees, and the
//! algebra product.
//!
//! Basis monomials are written `(l1, l2, l3)`: the curve `a_i` carries the
//! `l_i`-th Chebyshev polynomial of the second kind. Negative degrees are
//! never stored; they are folded away at construction via
//! `S_n = -S_{-n-2}` (so `S_{-1} = 0`).

use crate::ring::LaurentPoly;
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

/// A basis monomial: Chebyshev degrees on the three curves.
///
/// Ordering is lexicographic in `(l1, l2, l3)`, which fixes display and
/// serialization order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub l1: i64,
    pub l2: i64,
    pub l3: i64,
}

impl Monomial {
    /// All components must already be nonnegative; use [`make_monomial`] to
    /// fold signed indices.
    pub fn new(l1: i64, l2: i64, l3: i64) -> Self {
        assert!(
            l1 >= 0 && l2 >= 0 && l3 >= 0,
            "monomial components must be nonnegative, got ({l1},{l2},{l3})"
        );
        Monomial { l1, l2, l3 }
    }

    pub fn as_array(&self) -> [i64; 3] {
        [self.l1, self.l2, self.l3]
    }

    /// The empty link `(0,0,0)`.
    pub fn empty_link() -> Self {
        Monomial::new(0, 0, 0)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.l1, self.l2, self.l3)
    }
}

/// Fold a possibly-negative Chebyshev index to `(sign, nonnegative index)`
/// using `S_n = -S_{-n-2}`. `S_{-1}` is forced to zero by the convention.
pub fn normalize_index(n: i64) -> (i8, i64) {
    if n >= 0 {
        (1, n)
    } else if n == -1 {
        (0, 0)
    } else {
        let (s, m) = normalize_index(-n - 2);
        (-s, m)
    }
}

/// A monomial together with the sign produced by index normalization.
/// `sign == 0` forces the stored monomial to `(0,0,0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignedMonomial {
    pub sign: i8,
    pub mono: Monomial,
}

/// Build a monomial from signed indices, one normalization per component.
pub fn make_monomial(i1: i64, i2: i64, i3: i64) -> SignedMonomial {
    let (s1, l1) = normalize_index(i1);
    let (s2, l2) = normalize_index(i2);
    let (s3, l3) = normalize_index(i3);
    let sign = s1 * s2 * s3;
    if sign == 0 {
        SignedMonomial {
            sign: 0,
            mono: Monomial::empty_link(),
        }
    } else {
        SignedMonomial {
            sign,
            mono: Monomial::new(l1, l2, l3),
        }
    }
}

/// Finite combination of basis monomials with Laurent coefficients.
/// Canonical: zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SkeinElement {
    terms: BTreeMap<Monomial, LaurentPoly>,
}

impl SkeinElement {
    pub fn zero() -> Self {
        SkeinElement {
            terms: BTreeMap::new(),
        }
    }

    /// The basis element `1 * m`.
    pub fn basis(m: Monomial) -> Self {
        let mut e = Self::zero();
        e.add_monomial(m, &LaurentPoly::one());
        e
    }

    /// The empty link with coefficient one: the unit of the algebra.
    pub fn empty_link() -> Self {
        Self::basis(Monomial::empty_link())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> LaurentPoly {
        self.terms.get(m).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn coeff_ref(&self, m: &Monomial) -> Option<&LaurentPoly> {
        self.terms.get(m)
    }

    pub fn add_monomial(&mut self, m: Monomial, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
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

    /// Add `c` times the normalized monomial for signed indices `(i1,i2,i3)`.
    pub fn add_term(&mut self, c: &LaurentPoly, i1: i64, i2: i64, i3: i64) {
        let sm = make_monomial(i1, i2, i3);
        match sm.sign {
            0 => {}
            1 => self.add_monomial(sm.mono, c),
            _ => self.add_monomial(sm.mono, &-c),
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &SkeinElement, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        for (m, p) in other.iter() {
            self.add_monomial(*m, &(p * c));
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    /// Algebra product: the three curves are disjoint, so Chebyshev
    /// linearization applies independently in each component.
    pub fn mul(&self, other: &SkeinElement) -> SkeinElement {
        let mut out = SkeinElement::zero();
        for (m, p) in self.iter() {
            for (n, q) in other.iter() {
                let pq = p * q;
                for x in cheb_linearize(m.l1, n.l1) {
                    for y in cheb_linearize(m.l2, n.l2) {
                        for z in cheb_linearize(m.l3, n.l3) {
                            out.add_monomial(Monomial::new(x, y, z), &pq);
                        }
                    }
                }
            }
        }
        out
    }
}

impl AddAssign<&SkeinElement> for SkeinElement {
    fn add_assign(&mut self, rhs: &SkeinElement) {
        for (m, p) in rhs.iter() {
            self.add_monomial(*m, p);
        }
    }
}

impl SubAssign<&SkeinElement> for SkeinElement {
    fn sub_assign(&mut self, rhs: &SkeinElement) {
        for (m, p) in rhs.iter() {
            self.add_monomial(*m, &-p);
        }
    }
}

impl Add for &SkeinElement {
    type Output = SkeinElement;
    fn add(self, rhs: &SkeinElement) -> SkeinElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &SkeinElement {
    type Output = SkeinElement;
    fn sub(self, rhs: &SkeinElement) -> SkeinElement {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &SkeinElement {
    type Output = SkeinElement;
    fn neg(self) -> SkeinElement {
        let mut out = SkeinElement::zero();
        out -= self;
        out
    }
}

impl fmt::Display for SkeinElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, p) in self.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "[{p}]*{m}")?;
        }
        Ok(())
    }
}

/// Degrees appearing in the product `S_a * S_b`:
/// `[a+b, a+b-2, ..., |a-b|]`, length `min(a,b) + 1`.
pub fn cheb_linearize(a: i64, b: i64) -> Vec<i64> {
    assert!(a >= 0 && b >= 0, "cheb_linearize needs nonnegative degrees");
    (0..=a.min(b)).map(|i| a + b - 2 * i).collect()
}

/// Polynomial in three commuting variables over the Laurent ring. Test
/// oracle for the algebra product; exponents stay nonnegative.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TriPoly {
    terms: BTreeMap<[i64; 3], LaurentPoly>,
}

impl TriPoly {
    pub fn zero() -> Self {
        TriPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        let mut t = Self::zero();
        t.add_term([0, 0, 0], &LaurentPoly::one());
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exps: [i64; 3], c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
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

    pub fn mul(&self, other: &TriPoly) -> TriPoly {
        let mut out = TriPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
                out.add_term(e, &(ca * cb));
            }
        }
        out
    }
}

impl AddAssign<&TriPoly> for TriPoly {
    fn add_assign(&mut self, rhs: &TriPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c);
        }
    }
}

/// Coefficients of the degree-`n` Chebyshev polynomial of the second kind,
/// ascending powers, from `S_0 = 1`, `S_1 = x`, `S_{q+1} = x S_q - S_{q-1}`.
pub fn cheb_coeffs(n: i64) -> Vec<BigInt> {
    assert!(n >= 0);
    let mut prev: Vec<BigInt> = vec![BigInt::from(1)]; // S_0
    if n == 0 {
        return prev;
    }
    let mut cur: Vec<BigInt> = vec![BigInt::zero(), BigInt::from(1)]; // S_1
    for _ in 1..n {
        // next = x*cur - prev
        let mut next = vec![BigInt::zero(); cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += c;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= c;
        }
        prev = cur;
        cur = next;
    }
    cur
}

/// Chebyshev coefficients extended to all integers by `S_n = -S_{-n-2}`;
/// the empty vector stands for the zero polynomial (`n = -1`).
pub fn cheb_coeffs_ext(n: i64) -> Vec<BigInt> {
    let (sign, m) = normalize_index(n);
    match sign {
        0 => Vec::new(),
        1 => cheb_coeffs(m),
        _ => cheb_coeffs(m).into_iter().map(|c| -c).collect(),
    }
}

/// Expand an element into honest polynomials: the basis monomial
/// `(l1,l2,l3)` maps to `S_{l1}(x) S_{l2}(y) S_{l3}(z)`.
///
/// Built from the recurrence and raw polynomial multiplication only, so it
/// is an oracle independent of [`cheb_linearize`] and the algebra product.
pub fn poly_oracle(e: &SkeinElement) -> TriPoly {
    let mut out = TriPoly::zero();
    for (m, coeff) in e.iter() {
        let c1 = cheb_coeffs(m.l1);
        let c2 = cheb_coeffs(m.l2);
        let c3 = cheb_coeffs(m.l3);
        for (i, a) in c1.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in c2.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in c3.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    out.add_term([i as i64, j as i64, k as i64], &coeff.scale_int(&(&ab * c)));
                }
            }
        }
    }
    out
}
