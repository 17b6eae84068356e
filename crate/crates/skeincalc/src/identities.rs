//! Instance-wise verification of the relator identities: each identity is
//! built literally from the closed forms or relators and tested for exact
//! symbolic zero. Nothing here proves an identity in its parameters; a sweep
//! checks every instance of a finite range.

use crate::error::Error;
use crate::relators::{
    f_sum, f_tilde_sum, r12_closed, r13_closed, r23_closed, relator, Family, RelatorId,
    SurgeryParams,
};
use crate::ring::LaurentPoly;
use crate::skein::SkeinElement;
use rayon::prelude::*;
use std::collections::BTreeMap;

pub type ParamMap = BTreeMap<String, i64>;

/// A named free parameter with its default sweep interval.
#[derive(Clone, Copy, Debug)]
pub struct ParamRange {
    pub name: &'static str,
    pub lo: i64,
    pub hi: i64,
}

const fn pr(name: &'static str, lo: i64, hi: i64) -> ParamRange {
    ParamRange { name, lo, hi }
}

/// The verified identities, in suite order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    Formula0,
    Formula01,
    Formula02,
    Formula1a,
    Formula1b,
    FPlusF,
    FourPlusF,
    RSumF,
    R12Sums,
    L1x1,
    L1x2,
    L1x3,
}

pub const ALL_IDENTITIES: [Identity; 12] = [
    Identity::Formula0,
    Identity::Formula01,
    Identity::Formula02,
    Identity::Formula1a,
    Identity::Formula1b,
    Identity::FPlusF,
    Identity::FourPlusF,
    Identity::RSumF,
    Identity::R12Sums,
    Identity::L1x1,
    Identity::L1x2,
    Identity::L1x3,
];

impl Identity {
    pub fn name(self) -> &'static str {
        match self {
            Identity::Formula0 => "formula0",
            Identity::Formula01 => "formula01",
            Identity::Formula02 => "formula02",
            Identity::Formula1a => "formula1a",
            Identity::Formula1b => "formula1b",
            Identity::FPlusF => "FplusF",
            Identity::FourPlusF => "FourPlusF",
            Identity::RSumF => "RsumF",
            Identity::R12Sums => "R12sums",
            Identity::L1x1 => "L1_1",
            Identity::L1x2 => "L1_2",
            Identity::L1x3 => "L1_3",
        }
    }

    pub fn from_name(name: &str) -> Option<Identity> {
        ALL_IDENTITIES.iter().copied().find(|i| i.name() == name)
    }

    /// Declared parameters with default sweep ranges.
    pub fn params(self) -> &'static [ParamRange] {
        const FORMULA0: &[ParamRange] = &[pr("k1", 1, 4), pr("k2", 1, 4), pr("n3", 0, 4)];
        const FORMULA01: &[ParamRange] = &[
            pr("k1", 1, 4),
            pr("k2", 1, 4),
            pr("n1", 1, 4),
            pr("n2", -4, 4),
            pr("n3", 0, 4),
        ];
        const FORMULA02: &[ParamRange] = &[
            pr("k1", 1, 4),
            pr("k2", 1, 4),
            pr("n1", -4, 4),
            pr("n2", 1, 4),
            pr("n3", 0, 4),
        ];
        const FORMULA1: &[ParamRange] = &[
            pr("k1", 2, 4),
            pr("k2", 2, 4),
            pr("k3", 2, 4),
            pr("n1", 0, 4),
            pr("n2", -4, 4),
            pr("n3", -4, 4),
        ];
        const FPLUSF: &[ParamRange] = &[pr("n1", 0, 4), pr("n2", -4, 4), pr("n3", -4, 4)];
        const FOURPLUSF: &[ParamRange] = &[
            pr("k", -4, 4),
            pr("n1", 0, 4),
            pr("n2", -4, 4),
            pr("n3", -4, 4),
        ];
        const RSUMF: &[ParamRange] = &[
            pr("u", 0, 4),
            pr("n1", -4, 4),
            pr("n2", -4, 4),
            pr("n3", -4, 4),
        ];
        const R12SUMS: &[ParamRange] = &[
            pr("u0", 0, 3),
            pr("u1", 0, 4),
            pr("c", -2, 2),
            pr("n1", -4, 4),
            pr("n2", -4, 4),
            pr("n3", -4, 4),
        ];
        const L1X1: &[ParamRange] = &[
            pr("u0", 0, 4),
            pr("u1", 0, 4),
            pr("n1", -4, 4),
            pr("n2", -4, 4),
        ];
        const L1X2: &[ParamRange] = &[pr("n1", 0, 4), pr("n2", -4, 4), pr("n3", -4, 4)];
        const L1X3: &[ParamRange] = &[
            pr("k1", 1, 4),
            pr("n1", 0, 4),
            pr("n2", -4, 4),
            pr("n3", -4, 4),
        ];
        match self {
            Identity::Formula0 => FORMULA0,
            Identity::Formula01 => FORMULA01,
            Identity::Formula02 => FORMULA02,
            Identity::Formula1a | Identity::Formula1b => FORMULA1,
            Identity::FPlusF => FPLUSF,
            Identity::FourPlusF => FOURPLUSF,
            Identity::RSumF => RSUMF,
            Identity::R12Sums => R12SUMS,
            Identity::L1x1 => L1X1,
            Identity::L1x2 => L1X2,
            Identity::L1x3 => L1X3,
        }
    }

    /// Evaluate one instance. `Err(OutOfRange)` when the parameters violate
    /// the identity's hypotheses.
    pub fn check(self, p: &ParamMap) -> Result<ZeroWitness, Error> {
        let get = |name: &str| -> Result<i64, Error> {
            p.get(name).copied().ok_or_else(|| {
                Error::InvalidParams(format!(
                    "identity {}: missing parameter {name}",
                    self.name()
                ))
            })
        };
        for key in p.keys() {
            if !self.params().iter().any(|q| q.name == key) {
                return Err(Error::UnknownParam {
                    identity: self.name().to_string(),
                    param: key.clone(),
                });
            }
        }
        let witness = match self {
            Identity::Formula0 => check_one(formula0(get("k1")?, get("k2")?, get("n3")?)),
            Identity::Formula01 => {
                let n1 = get("n1")?;
                if n1 < 1 {
                    return Err(Error::OutOfRange("formula01 needs n1 >= 1".into()));
                }
                check_one(formula01(
                    get("k1")?,
                    get("k2")?,
                    n1,
                    get("n2")?,
                    get("n3")?,
                ))
            }
            Identity::Formula02 => {
                let n2 = get("n2")?;
                if n2 < 1 {
                    return Err(Error::OutOfRange("formula02 needs n2 >= 1".into()));
                }
                check_one(formula02(
                    get("k1")?,
                    get("k2")?,
                    get("n1")?,
                    n2,
                    get("n3")?,
                ))
            }
            Identity::Formula1a | Identity::Formula1b => {
                let n1 = get("n1")?;
                if n1 < 0 {
                    return Err(Error::OutOfRange("formula1 needs n1 >= 0".into()));
                }
                let k = (get("k1")?, get("k2")?, get("k3")?);
                let e = if self == Identity::Formula1a {
                    formula1a(k, n1, get("n2")?, get("n3")?)
                } else {
                    formula1b(k, n1, get("n2")?, get("n3")?)
                };
                check_one(e)
            }
            Identity::FPlusF => {
                let n1 = get("n1")?;
                if n1 < 0 {
                    return Err(Error::OutOfRange("FplusF needs n1 >= 0".into()));
                }
                let (n2, n3) = (get("n2")?, get("n3")?);
                check_pair(
                    ("F", f_plus_f(n1, n2, n3)),
                    ("F~", f_tilde_plus_f_tilde(n1, n2, n3)),
                )
            }
            Identity::FourPlusF => {
                let n1 = get("n1")?;
                if n1 < 0 {
                    return Err(Error::OutOfRange("FourPlusF needs n1 >= 0".into()));
                }
                check_one(four_plus_f(get("k")?, n1, get("n2")?, get("n3")?))
            }
            Identity::RSumF => {
                let u = get("u")?;
                if u < 0 {
                    return Err(Error::OutOfRange("RsumF needs u >= 0".into()));
                }
                let (n1, n2, n3) = (get("n1")?, get("n2")?, get("n3")?);
                let (a, b) = r_sum_f(u, n1, n2, n3);
                check_pair(("F-split", a), ("F~-split", b))
            }
            Identity::R12Sums => {
                let (u0, u1, c) = (get("u0")?, get("u1")?, get("c")?);
                if u1 < u0 {
                    return Err(Error::OutOfRange("R12sums needs u1 >= u0".into()));
                }
                if u0 + c < 0 {
                    return Err(Error::OutOfRange("R12sums needs u0 + c >= 0".into()));
                }
                let (n1, n2, n3) = (get("n1")?, get("n2")?, get("n3")?);
                let (a, b) = r12_sums(u0, u1, c, n1, n2, n3);
                check_pair(("descending", a), ("ascending", b))
            }
            Identity::L1x1 => {
                let (u0, u1) = (get("u0")?, get("u1")?);
                if u1 < u0 {
                    return Err(Error::OutOfRange("L1_1 needs u1 >= u0".into()));
                }
                let (n1, n2) = (get("n1")?, get("n2")?);
                let (a, b) = l1_1(u0, u1, n1, n2);
                check_pair(("descending", a), ("ascending", b))
            }
            Identity::L1x2 => {
                let n1 = get("n1")?;
                if n1 < 0 {
                    return Err(Error::OutOfRange("L1_2 needs n1 >= 0".into()));
                }
                let (n2, n3) = (get("n2")?, get("n3")?);
                let (a, b) = l1_2(n1, n2, n3);
                check_pair(("via-12", a), ("via-13", b))
            }
            Identity::L1x3 => {
                let n1 = get("n1")?;
                if n1 < 0 {
                    return Err(Error::OutOfRange("L1_3 needs n1 >= 0".into()));
                }
                check_one(l1_3(get("k1")?, n1, get("n2")?, get("n3")?))
            }
        };
        Ok(witness)
    }
}

/// Outcome of one instance: exactly zero, or the first nonzero residual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZeroWitness {
    Zero,
    NonZero {
        equation: &'static str,
        residual: SkeinElement,
    },
}

impl ZeroWitness {
    pub fn is_zero(&self) -> bool {
        matches!(self, ZeroWitness::Zero)
    }
}

fn check_one(residual: SkeinElement) -> ZeroWitness {
    if residual.is_zero() {
        ZeroWitness::Zero
    } else {
        ZeroWitness::NonZero {
            equation: "main",
            residual,
        }
    }
}

fn check_pair(a: (&'static str, SkeinElement), b: (&'static str, SkeinElement)) -> ZeroWitness {
    for (label, residual) in [a, b] {
        if !residual.is_zero() {
            return ZeroWitness::NonZero {
                equation: label,
                residual,
            };
        }
    }
    ZeroWitness::Zero
}

fn rel12(k1: i64, k2: i64, n: [i64; 3]) -> SkeinElement {
    relator(&RelatorId::new(Family::F12, n, SurgeryParams::d2(k1, k2)))
        .expect("family 12 needs no k3")
}

fn rel13(k: (i64, i64, i64), n: [i64; 3]) -> SkeinElement {
    relator(&RelatorId::new(
        Family::F13,
        n,
        SurgeryParams::s2(k.0, k.1, k.2),
    ))
    .expect("k3 present")
}

fn rel23(k: (i64, i64, i64), n: [i64; 3]) -> SkeinElement {
    relator(&RelatorId::new(
        Family::F23,
        n,
        SurgeryParams::s2(k.0, k.1, k.2),
    ))
    .expect("k3 present")
}

fn sign(i: i64) -> i64 {
    if i.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn formula0(k1: i64, k2: i64, n3: i64) -> SkeinElement {
    let mut acc = rel12(k1, k2, [-1, k2 + 1, n3]);
    acc.add_scaled(&rel12(k1, k2, [0, k2, n3 - 1]), &LaurentPoly::apow(2));
    acc.add_scaled(&rel12(k1, k2, [0, k2, n3 + 1]), &LaurentPoly::apow(2));
    acc.add_scaled(&rel12(k1, k2, [1, k2 - 1, n3]), &LaurentPoly::apow(4));
    acc
}

fn formula01(k1: i64, k2: i64, n1: i64, n2: i64, n3: i64) -> SkeinElement {
    let mut acc = rel12(k1, k2, [-n1, k2 + n2, n3]);
    acc.add_scaled(
        &rel12(k1, k2, [-n1 + k1, n2, n3]),
        &LaurentPoly::monomial(-1, 2 * n1 + 2 * n2),
    );

    for i in 0..=(n1 - 2) {
        for j in 0..=i {
            acc.add_scaled(
                &rel12(k1, k2, [n1 - 2 - i, k2 + n2 - i, n3 - i + 2 * j]),
                &LaurentPoly::monomial(sign(i), 2 * n1 - 2),
            );
        }
    }
    for i in 0..=(n1 - 1) {
        for j in 0..=(i + 1) {
            acc.add_scaled(
                &rel12(k1, k2, [n1 - 1 - i, k2 + n2 - 1 - i, n3 - 1 - i + 2 * j]),
                &LaurentPoly::monomial(sign(i), 2 * n1),
            );
        }
    }
    for i in 1..=(n1 - 2) {
        for j in 0..=(i - 1) {
            acc.add_scaled(
                &rel12(k1, k2, [n1 - 1 - i, k2 + n2 - 1 - i, n3 + 1 - i + 2 * j]),
                &LaurentPoly::monomial(sign(i), 2 * n1),
            );
        }
    }
    for i in 0..=(n1 - 1) {
        for j in 0..=i {
            acc.add_scaled(
                &rel12(k1, k2, [n1 - i, k2 + n2 - 2 - i, n3 - i + 2 * j]),
                &LaurentPoly::monomial(sign(i), 2 * n1 + 2),
            );
        }
    }

    for i in 0..=(n1 - 2) {
        for j in 0..=i {
            acc.add_scaled(
                &rel12(k1, k2, [n1 + k1 - 2 - i, n2 - i, n3 - i + 2 * j]),
                &LaurentPoly::monomial(-sign(i), 2 * n2 + 2),
            );
        }
    }
    for i in 0..=(n1 - 1) {
        for j in 0..=(i + 1) {
            acc.add_scaled(
                &rel12(k1, k2, [n1 + k1 - 1 - i, n2 - 1 - i, n3 - 1 - i + 2 * j]),
                &LaurentPoly::monomial(-sign(i), 2 * n2),
            );
        }
    }
    for i in 1..=(n1 - 2) {
        for j in 0..=(i - 1) {
            acc.add_scaled(
                &rel12(k1, k2, [n1 + k1 - 1 - i, n2 - 1 - i, n3 + 1 - i + 2 * j]),
                &LaurentPoly::monomial(-sign(i), 2 * n2),
            );
        }
    }
    for i in 0..=(n1 - 1) {
        for j in 0..=i {
            acc.add_scaled(
                &rel12(k1, k2, [n1 + k1 - i, n2 - 2 - i, n3 - i + 2 * j]),
                &LaurentPoly::monomial(-sign(i), 2 * n2 - 2),
            );
        }
    }
    acc
}

fn formula02(k1: i64, k2: i64, n1: i64, n2: i64, n3: i64) -> SkeinElement {
    let mut acc = rel12(k1, k2, [-n1, k2 + n2, n3]);
    acc.add_scaled(
        &rel12(k1, k2, [-n1 + k1, n2, n3]),
        &LaurentPoly::monomial(-1, 2 * n1 + 2 * n2),
    );

    for i in 0..=(n2 - 2) {
        for j in 0..=i {
            acc.add_scaled(
                &rel12(k1, k2, [n1 - i, k2 + n2 - 2 - i, n3 - i + 2 * j]),
                &LaurentPoly::monomial(sign(i), 2 * n1 + 2),
            );
        }
    }
    for i in 0..=(n2 - 1) {
        for j in 0..=(i + 1) {
            acc.add_scaled(
                &rel12(k1, k2, [n1 - 1 - i, k2 + n2 - 1 - i, n3 - 1 - i + 2 * j]),
                &LaurentPoly::monomial(sign(i), 2 * n1),
            );
        }
    }
    for i in 1..=(n2 - 2) {
        for j in 0..=(i - 1) {
            acc.add_scaled(
                &rel12(k1, k2, [n1 - 1 - i, k2 + n2 - 1 - i, n3 + 1 - i + 2 * j]),
                &LaurentPoly::monomial(sign(i), 2 * n1),
            );
        }
    }
    for i in 0..=(n2 - 1) {
        for j in 0..=i {
            acc.add_scaled(
                &rel12(k1, k2, [n1 - 2 - i, k2 + n2 - i, n3 - i + 2 * j]),
                &LaurentPoly::monomial(sign(i), 2 * n1 - 2),
            );
        }
    }

    for i in 0..=(n2 - 2) {
        for j in 0..=i {
            acc.add_scaled(
                &rel12(k1, k2, [n1 + k1 - i, n2 - 2 - i, n3 - i + 2 * j]),
                &LaurentPoly::monomial(-sign(i), 2 * n2 - 2),
            );
        }
    }
    for i in 0..=(n2 - 1) {
        for j in 0..=(i + 1) {
            acc.add_scaled(
                &rel12(k1, k2, [n1 + k1 - 1 - i, n2 - 1 - i, n3 - 1 - i + 2 * j]),
                &LaurentPoly::monomial(-sign(i), 2 * n2),
            );
        }
    }
    for i in 1..=(n2 - 2) {
        for j in 0..=(i - 1) {
            acc.add_scaled(
                &rel12(k1, k2, [n1 + k1 - 1 - i, n2 - 1 - i, n3 + 1 - i + 2 * j]),
                &LaurentPoly::monomial(-sign(i), 2 * n2),
            );
        }
    }
    for i in 0..=(n2 - 1) {
        for j in 0..=i {
            acc.add_scaled(
                &rel12(k1, k2, [n1 + k1 - 2 - i, n2 - i, n3 - i + 2 * j]),
                &LaurentPoly::monomial(-sign(i), 2 * n2 + 2),
            );
        }
    }
    acc
}

fn formula1a(k: (i64, i64, i64), n1: i64, n2: i64, n3: i64) -> SkeinElement {
    let (k1, k2, k3) = k;
    let mut acc = rel23(k, [n1, n2, n3]);
    for i in 0..=n1 {
        let outer = LaurentPoly::monomial(-sign(i), n1 - n3);
        acc.add_scaled(&rel12(k1, k2, [n1 - i, n2 - i, n3 + i]), &outer);
        acc.add_scaled(
            &rel12(k1, k2, [n1 + 1 - i, n2 - 1 - i, n3 - 1 + i]),
            &LaurentPoly::monomial(-sign(i), n1 - n3 + 2),
        );
    }
    for i in 0..=n1 {
        acc.add_scaled(
            &rel13(k, [n1 - i, n2 - k2 - 2 - i, -n3 + k3 - i]),
            &LaurentPoly::monomial(-sign(i), n1 + n2 - k2),
        );
        acc.add_scaled(
            &rel13(k, [n1 + 1 - i, n2 - k2 - 1 - i, -n3 + k3 - 1 - i]),
            &LaurentPoly::monomial(-sign(i), n1 + n2 - k2 + 2),
        );
    }
    acc
}

fn formula1b(k: (i64, i64, i64), n1: i64, n2: i64, n3: i64) -> SkeinElement {
    let (k1, k2, k3) = k;
    let mut acc = rel23(k, [n1, n2, n3]);
    for i in 0..=n1 {
        acc.add_scaled(
            &rel13(k, [n1 - i, n2 + i, n3 - i]),
            &LaurentPoly::monomial(-sign(i), n1 - n2),
        );
        acc.add_scaled(
            &rel13(k, [n1 + 1 - i, n2 - 1 + i, n3 - 1 - i]),
            &LaurentPoly::monomial(-sign(i), n1 - n2 + 2),
        );
    }
    for i in 0..=n1 {
        acc.add_scaled(
            &rel12(k1, k2, [n1 - i, -n2 + k2 - i, n3 - k3 - 2 - i]),
            &LaurentPoly::monomial(-sign(i), n1 + n3 - k3),
        );
        acc.add_scaled(
            &rel12(k1, k2, [n1 + 1 - i, -n2 + k2 - 1 - i, n3 - k3 - 1 - i]),
            &LaurentPoly::monomial(-sign(i), n1 + n3 - k3 + 2),
        );
    }
    acc
}

fn f_plus_f(n1: i64, n2: i64, n3: i64) -> SkeinElement {
    let mut acc = f_sum(n1 + 1, -1, n2, n3);
    acc.add_scaled(&f_sum(n1, 0, n2 - 1, n3 + 1), &LaurentPoly::apow(2));
    acc
}

fn f_tilde_plus_f_tilde(n1: i64, n2: i64, n3: i64) -> SkeinElement {
    let mut acc = f_tilde_sum(n1 - 1, -1, n2, n3);
    acc.add_scaled(&f_tilde_sum(n1, 0, n2 - 1, n3 - 1), &LaurentPoly::apow(2));
    acc
}

fn four_plus_f(k: i64, n1: i64, n2: i64, n3: i64) -> SkeinElement {
    let mut acc = SkeinElement::zero();
    acc.add_scaled(
        &f_tilde_sum(n1, k, n1 - n2 - 1, n3),
        &LaurentPoly::apow(2 * n1),
    );
    acc.add_scaled(
        &f_tilde_sum(n1 - 1, k - 1, n1 - n2, n3 + 1),
        &LaurentPoly::apow(2 * n1 + 2),
    );
    acc.add_scaled(
        &f_sum(n1 + 1, k - 1, n2 - n1, n3 - 1),
        &LaurentPoly::apow(2 * n2 + 2),
    );
    acc.add_scaled(&f_sum(n1, k, n2 - n1 - 1, n3), &LaurentPoly::apow(2 * n2));
    acc
}

fn r_sum_f(u: i64, n1: i64, n2: i64, n3: i64) -> (SkeinElement, SkeinElement) {
    let mut lhs = SkeinElement::zero();
    for j in 0..=u {
        lhs += &r12_closed(n1, n2, n3 + 2 * j);
    }
    let mut a = lhs.clone();
    a -= &f_sum(u, n1, n2, n3);
    a -= &f_sum(u + 1, n1 - 1, n2 - 1, n3 - 1);

    let mut b = lhs;
    b -= &f_tilde_sum(u, n1, n2, n3);
    b -= &f_tilde_sum(u - 1, n1 - 1, n2 - 1, n3 + 1);
    (a, b)
}

fn r12_sums(u0: i64, u1: i64, c: i64, n1: i64, n2: i64, n3: i64) -> (SkeinElement, SkeinElement) {
    let mut desc = SkeinElement::zero();
    let mut asc = SkeinElement::zero();
    for i in u0..=u1 {
        let s = LaurentPoly::monomial(sign(i), 0);
        for j in 0..=(i + c) {
            desc.add_scaled(&r12_closed(n1 - i, n2 - i, n3 - i + 2 * j), &s);
            asc.add_scaled(&r12_closed(n1 + i, n2 + i, n3 - i + 2 * j), &s);
        }
    }
    desc.add_scaled(
        &f_sum(u0 + c, n1 - u0, n2 - u0, n3 - u0),
        &LaurentPoly::monomial(-sign(u0), 0),
    );
    desc.add_scaled(
        &f_sum(u1 + c + 1, n1 - u1 - 1, n2 - u1 - 1, n3 - u1 - 1),
        &LaurentPoly::monomial(-sign(u1), 0),
    );

    asc.add_scaled(
        &f_tilde_sum(u0 + c - 1, n1 + u0 - 1, n2 + u0 - 1, n3 - u0 + 1),
        &LaurentPoly::monomial(-sign(u0), 0),
    );
    asc.add_scaled(
        &f_tilde_sum(u1 + c, n1 + u1, n2 + u1, n3 - u1),
        &LaurentPoly::monomial(-sign(u1), 0),
    );
    (desc, asc)
}

// Alternating sums of the closed form along both diagonals telescope to four
// boundary monomials.
fn l1_1(u0: i64, u1: i64, n1: i64, n2: i64) -> (SkeinElement, SkeinElement) {
    let mut desc = SkeinElement::zero();
    let mut asc = SkeinElement::zero();
    for i in u0..=u1 {
        let s = LaurentPoly::monomial(sign(i), 0);
        desc.add_scaled(&r12_closed(n1 - i, n2 - i, i), &s);
        asc.add_scaled(&r12_closed(n1 + i, n2 + i, i), &s);
    }

    desc.add_term(
        &LaurentPoly::monomial(sign(u0), -n1 - n2 + 2 * u0 - 2),
        n1 - u0,
        n2 - u0,
        u0,
    );
    desc.add_term(
        &LaurentPoly::monomial(sign(u0), -n1 - n2 + 2 * u0),
        n1 - u0 - 1,
        n2 - u0 - 1,
        u0 - 1,
    );
    desc.add_term(
        &LaurentPoly::monomial(sign(u1), -n1 - n2 + 2 * u1),
        n1 - u1 - 1,
        n2 - u1 - 1,
        u1 + 1,
    );
    desc.add_term(
        &LaurentPoly::monomial(sign(u1), -n1 - n2 + 2 * u1 + 2),
        n1 - u1 - 2,
        n2 - u1 - 2,
        u1,
    );

    asc.add_term(
        &LaurentPoly::monomial(sign(u0), -n1 - n2 - 2 * u0),
        n1 + u0 - 1,
        n2 + u0 - 1,
        u0 - 1,
    );
    asc.add_term(
        &LaurentPoly::monomial(sign(u0), -n1 - n2 - 2 * u0 + 2),
        n1 + u0 - 2,
        n2 + u0 - 2,
        u0,
    );
    asc.add_term(
        &LaurentPoly::monomial(sign(u1), -n1 - n2 - 2 * u1 - 2),
        n1 + u1,
        n2 + u1,
        u1,
    );
    asc.add_term(
        &LaurentPoly::monomial(sign(u1), -n1 - n2 - 2 * u1),
        n1 + u1 - 1,
        n2 + u1 - 1,
        u1 + 1,
    );
    (desc, asc)
}

fn l1_2(n1: i64, n2: i64, n3: i64) -> (SkeinElement, SkeinElement) {
    let lhs = r23_closed(n1, n2, n3);

    let mut a = lhs.clone();
    for i in 0..=n1 {
        a.add_scaled(
            &r12_closed(n1 - i, n2 - i, n3 + i),
            &LaurentPoly::monomial(-sign(i), n1 - n3),
        );
        a.add_scaled(
            &r12_closed(n1 + 1 - i, n2 - 1 - i, n3 - 1 + i),
            &LaurentPoly::monomial(-sign(i), n1 - n3 + 2),
        );
    }

    let mut b = lhs;
    for i in 0..=n1 {
        b.add_scaled(
            &r13_closed(n1 - i, n2 + i, n3 - i),
            &LaurentPoly::monomial(-sign(i), n1 - n2),
        );
        b.add_scaled(
            &r13_closed(n1 + 1 - i, n2 - 1 + i, n3 - 1 - i),
            &LaurentPoly::monomial(-sign(i), n1 - n2 + 2),
        );
    }
    (a, b)
}

fn l1_3(k1: i64, n1: i64, n2: i64, n3: i64) -> SkeinElement {
    let mut acc = SkeinElement::zero();
    for i in 0..=n1 {
        acc.add_scaled(
            &r12_closed(-n1 + k1 + i, n2 + i, n3 + i),
            &LaurentPoly::monomial(sign(i), -n3),
        );
        acc.add_scaled(
            &r12_closed(-n1 + k1 - 1 + i, n2 + 1 + i, n3 - 1 + i),
            &LaurentPoly::monomial(sign(i), -n3 + 2),
        );
        acc.add_scaled(
            &r13_closed(-n1 + k1 + i, n2 + i, n3 + i),
            &LaurentPoly::monomial(-sign(i), -n2),
        );
        acc.add_scaled(
            &r13_closed(-n1 + k1 - 1 + i, n2 - 1 + i, n3 + 1 + i),
            &LaurentPoly::monomial(-sign(i), -n2 + 2),
        );
    }
    acc
}

/// One failing instance of a sweep.
#[derive(Clone, Debug)]
pub struct SweepFailure {
    pub params: ParamMap,
    pub equation: String,
}

/// Outcome of an exhaustive sweep over a parameter box.
#[derive(Clone, Debug)]
pub struct SweepReport {
    pub identity: &'static str,
    pub checked: u64,
    pub skipped: u64,
    pub failures: Vec<SweepFailure>,
}

impl SweepReport {
    pub fn all_zero(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Exhaustively instantiate `identity` over the given ranges (defaults where
/// a parameter is absent). Instances violating the identity's hypotheses are
/// skipped and counted. `jobs > 1` evaluates instances in parallel; the
/// report is identical either way.
pub fn sweep(
    identity: Identity,
    ranges: &BTreeMap<String, (i64, i64)>,
    jobs: usize,
) -> Result<SweepReport, Error> {
    let specs = identity.params();
    for key in ranges.keys() {
        if !specs.iter().any(|s| s.name == key) {
            return Err(Error::UnknownParam {
                identity: identity.name().to_string(),
                param: key.clone(),
            });
        }
    }
    let bounds: Vec<(&'static str, i64, i64)> = specs
        .iter()
        .map(|s| {
            let (lo, hi) = ranges.get(s.name).copied().unwrap_or((s.lo, s.hi));
            (s.name, lo, hi)
        })
        .collect();
    for (name, lo, hi) in &bounds {
        if lo > hi {
            return Err(Error::InvalidParams(format!(
                "range for {name} is empty: {lo}:{hi}"
            )));
        }
    }

    let mut instances: Vec<ParamMap> = Vec::new();
    let mut cursor: Vec<i64> = bounds.iter().map(|(_, lo, _)| *lo).collect();
    'outer: loop {
        let map: ParamMap = bounds
            .iter()
            .zip(&cursor)
            .map(|((name, _, _), v)| (name.to_string(), *v))
            .collect();
        instances.push(map);
        for i in (0..cursor.len()).rev() {
            if cursor[i] < bounds[i].2 {
                cursor[i] += 1;
                continue 'outer;
            }
            cursor[i] = bounds[i].1;
            if i == 0 {
                break 'outer;
            }
        }
        if cursor.is_empty() {
            break;
        }
    }

    enum Outcome {
        Zero,
        Skipped,
        Failed(&'static str),
    }
    let eval = |p: &ParamMap| -> Result<Outcome, Error> {
        match identity.check(p) {
            Ok(ZeroWitness::Zero) => Ok(Outcome::Zero),
            Ok(ZeroWitness::NonZero { equation, .. }) => Ok(Outcome::Failed(equation)),
            Err(Error::OutOfRange(_)) => Ok(Outcome::Skipped),
            Err(e) => Err(e),
        }
    };

    let outcomes: Vec<Result<Outcome, Error>> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::InvalidParams(format!("thread pool: {e}")))?;
        pool.install(|| instances.par_iter().map(eval).collect())
    } else {
        instances.iter().map(eval).collect()
    };

    let mut report = SweepReport {
        identity: identity.name(),
        checked: 0,
        skipped: 0,
        failures: Vec::new(),
    };
    for (params, outcome) in instances.into_iter().zip(outcomes) {
        match outcome? {
            Outcome::Zero => report.checked += 1,
            Outcome::Skipped => report.skipped += 1,
            Outcome::Failed(equation) => {
                report.checked += 1;
                report.failures.push(SweepFailure {
                    params,
                    equation: equation.to_string(),
                });
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pmap(pairs: &[(&str, i64)]) -> ParamMap {
        pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn formula0_smallest_instance() {
        let w = Identity::Formula0
            .check(&pmap(&[("k1", 1), ("k2", 1), ("n3", 0)]))
            .unwrap();
        assert!(w.is_zero());
    }

    #[test]
    fn formula1a_at_n1_zero() {
        for n2 in -2..=2 {
            for n3 in 0..=2 {
                let w = Identity::Formula1a
                    .check(&pmap(&[
                        ("k1", 2),
                        ("k2", 3),
                        ("k3", 2),
                        ("n1", 0),
                        ("n2", n2),
                        ("n3", n3),
                    ]))
                    .unwrap();
                assert!(w.is_zero(), "at n2={n2} n3={n3}");
            }
        }
    }

    #[test]
    fn r12sums_base_case() {
        let w = Identity::R12Sums
            .check(&pmap(&[
                ("u0", 0),
                ("u1", 0),
                ("c", 0),
                ("n1", 2),
                ("n2", 1),
                ("n3", 0),
            ]))
            .unwrap();
        assert!(w.is_zero());
    }

    #[test]
    fn hypotheses_are_enforced() {
        let err = Identity::Formula01
            .check(&pmap(&[
                ("k1", 1),
                ("k2", 1),
                ("n1", 0),
                ("n2", 0),
                ("n3", 0),
            ]))
            .unwrap_err();
        assert!(matches!(err, Error::OutOfRange(_)));

        let err = Identity::R12Sums
            .check(&pmap(&[
                ("u0", 2),
                ("u1", 1),
                ("c", 0),
                ("n1", 0),
                ("n2", 0),
                ("n3", 0),
            ]))
            .unwrap_err();
        assert!(matches!(err, Error::OutOfRange(_)));
    }

    #[test]
    fn sweep_formula0_subrange() {
        let ranges = [
            ("k1".to_string(), (1i64, 3i64)),
            ("k2".to_string(), (1, 3)),
            ("n3".to_string(), (0, 3)),
        ]
        .into_iter()
        .collect();
        let report = sweep(Identity::Formula0, &ranges, 1).unwrap();
        assert_eq!(report.checked, 36);
        assert_eq!(report.skipped, 0);
        assert!(report.all_zero());
    }

    #[test]
    fn sweep_rejects_unknown_param() {
        let ranges = [("bogus".to_string(), (0i64, 1i64))].into_iter().collect();
        assert!(matches!(
            sweep(Identity::Formula0, &ranges, 1),
            Err(Error::UnknownParam { .. })
        ));
    }

    #[test]
    fn sweep_parallel_matches_serial() {
        let ranges: BTreeMap<String, (i64, i64)> = [
            ("u0".to_string(), (0i64, 2i64)),
            ("u1".to_string(), (0, 2)),
            ("n1".to_string(), (-2, 2)),
            ("n2".to_string(), (-2, 2)),
        ]
        .into_iter()
        .collect();
        let serial = sweep(Identity::L1x1, &ranges, 1).unwrap();
        let parallel = sweep(Identity::L1x1, &ranges, 4).unwrap();
        assert_eq!(serial.checked, parallel.checked);
        assert_eq!(serial.skipped, parallel.skipped);
        assert_eq!(serial.failures.len(), parallel.failures.len());
        assert!(serial.all_zero());
    }
}
