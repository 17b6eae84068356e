//! Certified normal forms for the two-handle quotient: leading-term
//! rewriting against the reduced relator set drives every element onto the
//! staircase basis, and the result is free-module exact.
//!
//! Basis membership and region tests compare `2n` against `k` so half-integer
//! boundaries stay in integer arithmetic.

use crate::certificate::Certificate;
use crate::error::Error;
use crate::relators::{relator, Family, RelatorId, SurgeryParams};
use crate::ring::LaurentPoly;
use crate::skein::{Monomial, SkeinElement};

/// Where a monomial sits relative to the staircase basis `G^{k1,k2}`.
///
/// The three regions partition the complement of the basis among nonnegative
/// monomials and index the relators used to eliminate them. The central
/// monomial `(k1/2, k2/2, n3)` (both halves integral) belongs to the basis
/// and is excluded from the regions: its relator is identically zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegionTag {
    InBasis,
    /// `n1 > k1`.
    Region1,
    /// `k1/2 < n1 <= k1` and `n2 > k2/2`.
    Region2,
    /// `n1 <= k1/2` and `n2 >= k2/2`, the central monomial excepted.
    Region3,
}

/// Classify a monomial. Callers must arrange `k2 >= k1 >= 1`.
pub fn region_of(m: &Monomial, k1: i64, k2: i64) -> RegionTag {
    debug_assert!(k1 >= 1 && k2 >= k1);
    if m.l1 > k1 {
        return RegionTag::Region1;
    }
    if 2 * m.l1 > k1 {
        // right half of the strip: basis iff n2 <= k2/2
        if 2 * m.l2 > k2 {
            RegionTag::Region2
        } else {
            RegionTag::InBasis
        }
    } else {
        // left half: basis means n2 < k2/2, or the central monomial
        if 2 * m.l2 < k2 || (2 * m.l1 == k1 && 2 * m.l2 == k2) {
            RegionTag::InBasis
        } else {
            RegionTag::Region3
        }
    }
}

/// All staircase-basis monomials with `l3 <= n3_max`, lexicographically
/// sorted. The plane section is finite; only `l3` is unbounded.
pub fn enumerate_basis(k1: i64, k2: i64, n3_max: i64) -> Vec<Monomial> {
    assert!(k1 >= 1 && k2 >= k1, "needs k2 >= k1 >= 1");
    let mut out = Vec::new();
    for l1 in 0..=k1 {
        for l2 in 0..=k2 {
            let m = Monomial::new(l1, l2, 0);
            if region_of(&m, k1, k2) != RegionTag::InBasis {
                continue;
            }
            for l3 in 0..=n3_max {
                out.push(Monomial::new(l1, l2, l3));
            }
        }
    }
    out.sort();
    out
}

/// Default cap on intermediate element size.
pub const DEFAULT_MAX_TERMS: usize = 1_000_000;

/// Reduce to the unique staircase-basis representative, with a balancing
/// certificate. `k1 > k2` is handled by relabeling the first two curves,
/// reducing, and relabeling back.
pub fn reduce_d2(e: &SkeinElement, k1: i64, k2: i64) -> Result<(SkeinElement, Certificate), Error> {
    reduce_d2_with_limit(e, k1, k2, DEFAULT_MAX_TERMS)
}

pub fn reduce_d2_with_limit(
    e: &SkeinElement,
    k1: i64,
    k2: i64,
    max_terms: usize,
) -> Result<(SkeinElement, Certificate), Error> {
    if k1 < 1 || k2 < 1 {
        return Err(Error::InvalidParams(format!(
            "reduce-d2 needs k1, k2 >= 1, got ({k1},{k2})"
        )));
    }
    let mut cert = Certificate::new();
    let mut work = e.clone();
    run_d2_phases(&mut work, SurgeryParams::d2(k1, k2), &mut cert, max_terms)?;
    Ok((work, cert))
}

fn swap12_monomial(m: &Monomial) -> Monomial {
    Monomial::new(m.l2, m.l1, m.l3)
}

fn swap12_elem(e: &SkeinElement) -> SkeinElement {
    let mut out = SkeinElement::zero();
    for (m, c) in e.iter() {
        out.add_monomial(swap12_monomial(m), c);
    }
    out
}

// Conjugating by the 1<->2 relabeling: family 12 is fixed with indices and
// surgery coefficients swapped; 13 and 23 trade places.
fn swap12_id(id: &RelatorId) -> RelatorId {
    let family = match id.family {
        Family::F12 => Family::F12,
        Family::F13 => Family::F23,
        Family::F23 => Family::F13,
    };
    RelatorId::new(
        family,
        [id.n[1], id.n[0], id.n[2]],
        SurgeryParams {
            k1: id.params.k2,
            k2: id.params.k1,
            k3: id.params.k3,
        },
    )
}

/// Run the two elimination phases in place, appending certificate steps.
/// Accepts either curve order; `params.k3` is carried through unchanged so
/// the three-handle reduction can share this code.
pub(crate) fn run_d2_phases(
    e: &mut SkeinElement,
    params: SurgeryParams,
    cert: &mut Certificate,
    max_terms: usize,
) -> Result<(), Error> {
    if params.k1 <= params.k2 {
        return run_d2_phases_ordered(e, params, cert, max_terms);
    }
    let mut swapped = swap12_elem(e);
    let mut inner = Certificate::new();
    let swapped_params = SurgeryParams {
        k1: params.k2,
        k2: params.k1,
        k3: params.k3,
    };
    run_d2_phases_ordered(&mut swapped, swapped_params, &mut inner, max_terms)?;
    *e = swap12_elem(&swapped);
    for step in inner.steps {
        cert.push(swap12_id(&step.id), step.coeff);
    }
    Ok(())
}

fn run_d2_phases_ordered(
    e: &mut SkeinElement,
    params: SurgeryParams,
    cert: &mut Certificate,
    max_terms: usize,
) -> Result<(), Error> {
    let (k1, k2) = (params.k1, params.k2);
    debug_assert!(k1 >= 1 && k2 >= k1);

    // Phase 1: clear n1 > k1, largest (n1,n2,n3) first. Every replacement
    // monomial has strictly smaller n1, so the lex-max of the region
    // strictly decreases.
    loop {
        let pivot = e.iter().filter(|(m, _)| m.l1 > k1).map(|(m, _)| *m).max();
        let Some(p) = pivot else { break };
        eliminate(e, cert, Family::F12, p, params)?;
        check_size(e, max_terms)?;
        if let Some(q) = e.iter().filter(|(m, _)| m.l1 > k1).map(|(m, _)| *m).max() {
            if q >= p {
                return Err(Error::NonTermination(format!(
                    "phase 1 pivot did not decrease: {p} -> {q}"
                )));
            }
        }
    }

    // Phase 2: clear the strip regions, largest (n2,n1,n3) first. The only
    // replacement with equal n2 is the reflected leading monomial, which
    // lands in the basis; everything else drops in n2.
    let strip_key = |m: &Monomial| (m.l2, m.l1, m.l3);
    loop {
        let pivot = e
            .iter()
            .filter(|(m, _)| {
                matches!(
                    region_of(m, k1, k2),
                    RegionTag::Region2 | RegionTag::Region3
                )
            })
            .map(|(m, _)| *m)
            .max_by_key(strip_key);
        let Some(p) = pivot else { break };
        eliminate(e, cert, Family::F12, p, params)?;
        check_size(e, max_terms)?;
        if let Some(m) = e.iter().map(|(m, _)| *m).find(|m| m.l1 > k1) {
            return Err(Error::NonTermination(format!(
                "phase 2 reintroduced n1 overflow at {m}"
            )));
        }
        let worst = e
            .iter()
            .filter(|(m, _)| {
                matches!(
                    region_of(m, k1, k2),
                    RegionTag::Region2 | RegionTag::Region3
                )
            })
            .map(|(m, _)| *m)
            .max_by_key(strip_key);
        if let Some(q) = worst {
            if strip_key(&q) >= strip_key(&p) {
                return Err(Error::NonTermination(format!(
                    "phase 2 pivot did not decrease: {p} -> {q}"
                )));
            }
        }
    }
    Ok(())
}

/// Cancel the full coefficient of `pivot` using the relator whose leading
/// monomial it is. The relator's lead carries `-A^{-(i+j)-2}` where `(i,j)`
/// is the family's coupled index pair.
pub(crate) fn eliminate(
    e: &mut SkeinElement,
    cert: &mut Certificate,
    family: Family,
    pivot: Monomial,
    params: SurgeryParams,
) -> Result<(), Error> {
    let Some(c) = e.coeff_ref(&pivot) else {
        return Ok(());
    };
    let lead_exp = match family {
        Family::F12 => pivot.l1 + pivot.l2,
        Family::F13 => pivot.l1 + pivot.l3,
        Family::F23 => pivot.l2 + pivot.l3,
    };
    let mult = c * &LaurentPoly::apow(lead_exp + 2);
    let id = RelatorId::new(family, pivot.as_array(), params);
    let rel = relator(&id)?;
    e.add_scaled(&rel, &mult);
    if e.coeff_ref(&pivot).is_some() {
        return Err(Error::NonTermination(format!(
            "pivot {pivot} survived its own elimination"
        )));
    }
    cert.push(id, -mult);
    Ok(())
}

pub(crate) fn check_size(e: &SkeinElement, max_terms: usize) -> Result<(), Error> {
    if e.num_terms() > max_terms {
        Err(Error::TermLimit(max_terms))
    } else {
        Ok(())
    }
}
