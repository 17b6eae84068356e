//! Closed forms of the handle-slide elements on the three curve pairs, the
//! relators obtained by reflecting through the surgery coefficients, and the
//! partial-sum families `F` / `F~` used by the identity suite.

use crate::error::Error;
use crate::ring::LaurentPoly;
use crate::skein::SkeinElement;
use std::fmt;

/// Which pair of curves the slide couples; the third curve is a spectator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    F12,
    F13,
    F23,
}

impl Family {
    pub fn code(self) -> u8 {
        match self {
            Family::F12 => 12,
            Family::F13 => 13,
            Family::F23 => 23,
        }
    }

    pub fn from_code(code: u8) -> Option<Family> {
        match code {
            12 => Some(Family::F12),
            13 => Some(Family::F13),
            23 => Some(Family::F23),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code())
    }
}

/// Surgery coefficients. `k3` is present only in the three-handle setting;
/// families 13 and 23 cannot be reflected without it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SurgeryParams {
    pub k1: i64,
    pub k2: i64,
    pub k3: Option<i64>,
}

impl SurgeryParams {
    pub fn d2(k1: i64, k2: i64) -> Self {
        SurgeryParams { k1, k2, k3: None }
    }

    pub fn s2(k1: i64, k2: i64, k3: i64) -> Self {
        SurgeryParams {
            k1,
            k2,
            k3: Some(k3),
        }
    }
}

/// Names one relator instance: family, slide indices, surgery coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RelatorId {
    pub family: Family,
    pub n: [i64; 3],
    pub params: SurgeryParams,
}

impl RelatorId {
    pub fn new(family: Family, n: [i64; 3], params: SurgeryParams) -> Self {
        RelatorId { family, n, params }
    }

    /// The slide indices reflected through the family's surgery pair.
    pub fn reflected_indices(&self) -> Result<[i64; 3], Error> {
        let [n1, n2, n3] = self.n;
        let k = &self.params;
        match self.family {
            Family::F12 => Ok([k.k1 - n1, k.k2 - n2, n3]),
            Family::F13 => {
                let k3 = k.k3.ok_or(Error::MissingK3(self.family.code()))?;
                Ok([k.k1 - n1, n2, k3 - n3])
            }
            Family::F23 => {
                let k3 = k.k3.ok_or(Error::MissingK3(self.family.code()))?;
                Ok([n1, k.k2 - n2, k3 - n3])
            }
        }
    }
}

impl fmt::Display for RelatorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "R{}^({},{},{})",
            self.family, self.n[0], self.n[1], self.n[2]
        )
    }
}

/// `R_12(n1,n2,n3)`: slide element on the pair `(a1,a2)`, `a3` spectator.
pub fn r12_closed(n1: i64, n2: i64, n3: i64) -> SkeinElement {
    let mut e = SkeinElement::zero();
    e.add_term(&LaurentPoly::monomial(-1, -n1 - n2 - 2), n1, n2, n3);
    e.add_term(&LaurentPoly::monomial(-1, -n1 - n2 + 2), n1 - 2, n2 - 2, n3);
    e.add_term(&LaurentPoly::monomial(-1, -n1 - n2), n1 - 1, n2 - 1, n3 + 1);
    e.add_term(&LaurentPoly::monomial(-1, -n1 - n2), n1 - 1, n2 - 1, n3 - 1);
    e
}

/// `R_13(n1,n2,n3)`: slide element on the pair `(a1,a3)`, `a2` spectator.
pub fn r13_closed(n1: i64, n2: i64, n3: i64) -> SkeinElement {
    let mut e = SkeinElement::zero();
    e.add_term(&LaurentPoly::monomial(-1, -n1 - n3 - 2), n1, n2, n3);
    e.add_term(&LaurentPoly::monomial(-1, -n1 - n3 + 2), n1 - 2, n2, n3 - 2);
    e.add_term(&LaurentPoly::monomial(-1, -n1 - n3), n1 - 1, n2 + 1, n3 - 1);
    e.add_term(&LaurentPoly::monomial(-1, -n1 - n3), n1 - 1, n2 - 1, n3 - 1);
    e
}

/// `R_23(n1,n2,n3)`: slide element on the pair `(a2,a3)`, `a1` spectator.
pub fn r23_closed(n1: i64, n2: i64, n3: i64) -> SkeinElement {
    let mut e = SkeinElement::zero();
    e.add_term(&LaurentPoly::monomial(-1, -n2 - n3 - 2), n1, n2, n3);
    e.add_term(&LaurentPoly::monomial(-1, -n2 - n3 + 2), n1, n2 - 2, n3 - 2);
    e.add_term(&LaurentPoly::monomial(-1, -n2 - n3), n1 + 1, n2 - 1, n3 - 1);
    e.add_term(&LaurentPoly::monomial(-1, -n2 - n3), n1 - 1, n2 - 1, n3 - 1);
    e
}

pub fn closed(family: Family, n1: i64, n2: i64, n3: i64) -> SkeinElement {
    match family {
        Family::F12 => r12_closed(n1, n2, n3),
        Family::F13 => r13_closed(n1, n2, n3),
        Family::F23 => r23_closed(n1, n2, n3),
    }
}

/// The relator: closed form minus its reflection through the surgery pair.
pub fn relator(id: &RelatorId) -> Result<SkeinElement, Error> {
    let [n1, n2, n3] = id.n;
    let [m1, m2, m3] = id.reflected_indices()?;
    let mut e = closed(id.family, n1, n2, n3);
    e -= &closed(id.family, m1, m2, m3);
    Ok(e)
}

/// Partial-sum family `F_u(n1,n2,n3)`. Sums with a negative upper bound are
/// empty, so every integer `u` is accepted.
pub fn f_sum(u: i64, n1: i64, n2: i64, n3: i64) -> SkeinElement {
    let mut e = SkeinElement::zero();
    let lead = LaurentPoly::monomial(-1, -n1 - n2 - 2);
    for j in 0..=u {
        e.add_term(&lead, n1, n2, n3 + 2 * j);
    }
    let tail = LaurentPoly::monomial(-1, -n1 - n2);
    for j in 0..=(u - 1) {
        e.add_term(&tail, n1 - 1, n2 - 1, n3 + 1 + 2 * j);
    }
    e
}

/// Partial-sum family `F~_u(n1,n2,n3)`: the second sum runs one step longer
/// and starts one level lower in the third slot.
pub fn f_tilde_sum(u: i64, n1: i64, n2: i64, n3: i64) -> SkeinElement {
    let mut e = SkeinElement::zero();
    let lead = LaurentPoly::monomial(-1, -n1 - n2 - 2);
    for j in 0..=u {
        e.add_term(&lead, n1, n2, n3 + 2 * j);
    }
    let tail = LaurentPoly::monomial(-1, -n1 - n2);
    for j in 0..=(u + 1) {
        e.add_term(&tail, n1 - 1, n2 - 1, n3 - 1 + 2 * j);
    }
    e
}
