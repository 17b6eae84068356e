//! JSON wire formats. Emission is hand-rolled so output is canonical and
//! byte-deterministic (exponent keys in numeric order, terms in monomial
//! order); parsing goes through `serde_json` with arbitrary-precision
//! numbers so integers of any size round-trip exactly and floats are
//! rejected.

use crate::certificate::{CertStep, Certificate};
use crate::error::Error;
use crate::identities::SweepReport;
use crate::relators::{Family, RelatorId, SurgeryParams};
use crate::ring::{Eisenstein, LaurentPoly};
use crate::skein::{Monomial, SkeinElement};
use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::Value;
use std::fmt::Write as _;

// ---- emission ----

pub fn laurent_to_json(p: &LaurentPoly) -> String {
    let mut s = String::from("{");
    let mut first = true;
    for (e, c) in p.iter() {
        if !first {
            s.push(',');
        }
        first = false;
        let _ = write!(s, "\"{e}\":{c}");
    }
    s.push('}');
    s
}

pub fn skein_to_json(e: &SkeinElement) -> String {
    let mut s = String::from("{\"terms\":[");
    let mut first = true;
    for (m, c) in e.iter() {
        if !first {
            s.push(',');
        }
        first = false;
        let _ = write!(
            s,
            "{{\"monomial\":[{},{},{}],\"coeff\":{}}}",
            m.l1,
            m.l2,
            m.l3,
            laurent_to_json(c)
        );
    }
    s.push_str("]}");
    s
}

pub fn eisenstein_to_json(x: &Eisenstein) -> String {
    format!("{{\"a\":{},\"b\":{}}}", x.a, x.b)
}

pub fn monomials_to_json(ms: &[Monomial]) -> String {
    let mut s = String::from("[");
    let mut first = true;
    for m in ms {
        if !first {
            s.push(',');
        }
        first = false;
        let _ = write!(s, "[{},{},{}]", m.l1, m.l2, m.l3);
    }
    s.push(']');
    s
}

pub fn relator_id_to_json(id: &RelatorId) -> String {
    let k = match id.params.k3 {
        Some(k3) => format!("[{},{},{}]", id.params.k1, id.params.k2, k3),
        None => format!("[{},{}]", id.params.k1, id.params.k2),
    };
    format!(
        "{{\"family\":{},\"n\":[{},{},{}],\"k\":{}}}",
        id.family.code(),
        id.n[0],
        id.n[1],
        id.n[2],
        k
    )
}

pub fn certificate_to_json(cert: &Certificate) -> String {
    let mut s = String::from("{\"steps\":[");
    let mut first = true;
    for step in &cert.steps {
        if !first {
            s.push(',');
        }
        first = false;
        let _ = write!(
            s,
            "{{\"relator\":{},\"coeff\":{}}}",
            relator_id_to_json(&step.id),
            laurent_to_json(&step.coeff)
        );
    }
    s.push_str("]}");
    s
}

pub fn sweep_report_to_json(r: &SweepReport) -> String {
    let mut s = format!(
        "{{\"identity\":\"{}\",\"checked\":{},\"skipped\":{},\"failures\":[",
        r.identity, r.checked, r.skipped
    );
    let mut first = true;
    for f in &r.failures {
        if !first {
            s.push(',');
        }
        first = false;
        let mut params = String::from("{");
        let mut pfirst = true;
        for (k, v) in &f.params {
            if !pfirst {
                params.push(',');
            }
            pfirst = false;
            let _ = write!(params, "\"{k}\":{v}");
        }
        params.push('}');
        let _ = write!(
            s,
            "{{\"equation\":\"{}\",\"params\":{}}}",
            f.equation, params
        );
    }
    s.push_str("]}");
    s
}

// ---- parsing ----

fn parse_err(path: &str, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("{path}: {msg}"))
}

/// Exact integer from a JSON value; floats and exponent notation rejected.
fn value_to_bigint(v: &Value, path: &str) -> Result<BigInt, Error> {
    match v {
        Value::Number(n) => {
            let s = n.to_string();
            if !s
                .chars()
                .enumerate()
                .all(|(i, ch)| ch.is_ascii_digit() || (i == 0 && ch == '-'))
            {
                return Err(parse_err(path, format!("`{s}` is not an exact integer")));
            }
            s.parse::<BigInt>()
                .map_err(|e| parse_err(path, format!("`{s}`: {e}")))
        }
        _ => Err(parse_err(path, "expected an integer")),
    }
}

fn value_to_i64(v: &Value, path: &str) -> Result<i64, Error> {
    let big = value_to_bigint(v, path)?;
    i64::try_from(&big).map_err(|_| parse_err(path, format!("`{big}` does not fit in i64")))
}

pub fn laurent_from_value(v: &Value, path: &str) -> Result<LaurentPoly, Error> {
    let obj = v
        .as_object()
        .ok_or_else(|| parse_err(path, "expected an exponent->coefficient object"))?;
    let mut p = LaurentPoly::zero();
    for (key, cv) in obj {
        let exp: i64 = key
            .parse()
            .map_err(|_| parse_err(path, format!("exponent key `{key}` is not an integer")))?;
        let c = value_to_bigint(cv, &format!("{path}.{key}"))?;
        if c.is_zero() {
            return Err(parse_err(
                path,
                format!("zero coefficient at exponent {exp} is not canonical"),
            ));
        }
        if !p.coeff(exp).is_zero() {
            return Err(parse_err(path, format!("duplicate exponent {exp}")));
        }
        p.add_term(exp, &c);
    }
    Ok(p)
}

pub fn monomial_from_value(v: &Value, path: &str) -> Result<Monomial, Error> {
    let arr = v
        .as_array()
        .ok_or_else(|| parse_err(path, "expected [l1,l2,l3]"))?;
    if arr.len() != 3 {
        return Err(parse_err(path, "monomial needs exactly three components"));
    }
    let mut l = [0i64; 3];
    for (i, lv) in arr.iter().enumerate() {
        l[i] = value_to_i64(lv, &format!("{path}[{i}]"))?;
        if l[i] < 0 {
            return Err(parse_err(path, "monomial components must be nonnegative"));
        }
    }
    Ok(Monomial::new(l[0], l[1], l[2]))
}

pub fn skein_from_value(v: &Value, path: &str) -> Result<SkeinElement, Error> {
    let obj = v
        .as_object()
        .ok_or_else(|| parse_err(path, "expected {\"terms\": [...]}"))?;
    let terms = obj
        .get("terms")
        .ok_or_else(|| parse_err(path, "missing `terms`"))?
        .as_array()
        .ok_or_else(|| parse_err(path, "`terms` must be an array"))?;
    let mut e = SkeinElement::zero();
    for (i, tv) in terms.iter().enumerate() {
        let tpath = format!("{path}.terms[{i}]");
        let tobj = tv
            .as_object()
            .ok_or_else(|| parse_err(&tpath, "expected a term object"))?;
        let m = monomial_from_value(
            tobj.get("monomial")
                .ok_or_else(|| parse_err(&tpath, "missing `monomial`"))?,
            &format!("{tpath}.monomial"),
        )?;
        let c = laurent_from_value(
            tobj.get("coeff")
                .ok_or_else(|| parse_err(&tpath, "missing `coeff`"))?,
            &format!("{tpath}.coeff"),
        )?;
        if c.is_zero() {
            return Err(parse_err(&tpath, "zero coefficient is not permitted"));
        }
        if e.coeff_ref(&m).is_some() {
            return Err(parse_err(&tpath, format!("duplicate monomial {m}")));
        }
        e.add_monomial(m, &c);
    }
    Ok(e)
}

pub fn skein_from_str(s: &str) -> Result<SkeinElement, Error> {
    let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    skein_from_value(&v, "element")
}

pub fn relator_id_from_value(v: &Value, path: &str) -> Result<RelatorId, Error> {
    let obj = v
        .as_object()
        .ok_or_else(|| parse_err(path, "expected a relator object"))?;
    let code = value_to_i64(
        obj.get("family")
            .ok_or_else(|| parse_err(path, "missing `family`"))?,
        &format!("{path}.family"),
    )?;
    let family = u8::try_from(code)
        .ok()
        .and_then(Family::from_code)
        .ok_or_else(|| parse_err(path, format!("family must be 12, 13 or 23, got {code}")))?;
    let narr = obj
        .get("n")
        .ok_or_else(|| parse_err(path, "missing `n`"))?
        .as_array()
        .ok_or_else(|| parse_err(path, "`n` must be [n1,n2,n3]"))?;
    if narr.len() != 3 {
        return Err(parse_err(path, "`n` needs exactly three entries"));
    }
    let mut n = [0i64; 3];
    for (i, nv) in narr.iter().enumerate() {
        n[i] = value_to_i64(nv, &format!("{path}.n[{i}]"))?;
    }
    let karr = obj
        .get("k")
        .ok_or_else(|| parse_err(path, "missing `k`"))?
        .as_array()
        .ok_or_else(|| parse_err(path, "`k` must be [k1,k2] or [k1,k2,k3]"))?;
    let params = match karr.len() {
        2 => SurgeryParams::d2(
            value_to_i64(&karr[0], &format!("{path}.k[0]"))?,
            value_to_i64(&karr[1], &format!("{path}.k[1]"))?,
        ),
        3 => SurgeryParams::s2(
            value_to_i64(&karr[0], &format!("{path}.k[0]"))?,
            value_to_i64(&karr[1], &format!("{path}.k[1]"))?,
            value_to_i64(&karr[2], &format!("{path}.k[2]"))?,
        ),
        _ => return Err(parse_err(path, "`k` needs two or three entries")),
    };
    Ok(RelatorId::new(family, n, params))
}

pub fn certificate_from_str(s: &str) -> Result<Certificate, Error> {
    let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("certificate: expected {\"steps\": [...]}".into()))?;
    let steps = obj
        .get("steps")
        .ok_or_else(|| Error::Parse("certificate: missing `steps`".into()))?
        .as_array()
        .ok_or_else(|| Error::Parse("certificate: `steps` must be an array".into()))?;
    let mut cert = Certificate::new();
    for (i, sv) in steps.iter().enumerate() {
        let path = format!("certificate.steps[{i}]");
        let sobj = sv
            .as_object()
            .ok_or_else(|| parse_err(&path, "expected a step object"))?;
        let id = relator_id_from_value(
            sobj.get("relator")
                .ok_or_else(|| parse_err(&path, "missing `relator`"))?,
            &format!("{path}.relator"),
        )?;
        let coeff = laurent_from_value(
            sobj.get("coeff")
                .ok_or_else(|| parse_err(&path, "missing `coeff`"))?,
            &format!("{path}.coeff"),
        )?;
        cert.steps.push(CertStep { id, coeff });
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_emission() {
        let mut p = LaurentPoly::zero();
        p.add_term(2, &BigInt::from(-1));
        p.add_term(-3, &BigInt::from(1));
        assert_eq!(laurent_to_json(&p), "{\"-3\":1,\"2\":-1}");

        let mut e = SkeinElement::zero();
        e.add_monomial(Monomial::new(1, 0, 0), &LaurentPoly::monomial(-1, -3));
        e.add_monomial(Monomial::new(0, 1, 0), &LaurentPoly::monomial(1, -3));
        assert_eq!(
            skein_to_json(&e),
            "{\"terms\":[{\"monomial\":[0,1,0],\"coeff\":{\"-3\":1}},{\"monomial\":[1,0,0],\"coeff\":{\"-3\":-1}}]}"
        );
    }

    #[test]
    fn rejects_non_canonical_input() {
        assert!(skein_from_str(r#"{"terms":[{"monomial":[0,0,0],"coeff":{"2":0}}]}"#).is_err());
        assert!(skein_from_str(r#"{"terms":[{"monomial":[0,0,0],"coeff":{"2":1.5}}]}"#).is_err());
        assert!(skein_from_str(r#"{"terms":[{"monomial":[0,0,-1],"coeff":{"0":1}}]}"#).is_err());
        assert!(skein_from_str(r#"{"terms":[{"monomial":[0,0],"coeff":{"0":1}}]}"#).is_err());
        assert!(skein_from_str(
            r#"{"terms":[{"monomial":[0,0,0],"coeff":{"0":1}},{"monomial":[0,0,0],"coeff":{"0":2}}]}"#
        )
        .is_err());
        assert!(skein_from_str(r#"{"terms":[{"monomial":[0,0,0],"coeff":{"0":1e3}}]}"#).is_err());
    }

    #[test]
    fn huge_integers_round_trip() {
        let big = "123456789012345678901234567890";
        let json = format!(r#"{{"terms":[{{"monomial":[1,2,3],"coeff":{{"-7":{big}}}}}]}}"#);
        let e = skein_from_str(&json).unwrap();
        assert_eq!(
            e.coeff(&Monomial::new(1, 2, 3)).coeff(-7),
            big.parse::<BigInt>().unwrap()
        );
        assert_eq!(skein_from_str(&skein_to_json(&e)).unwrap(), e);
    }

    fn arb_elem() -> impl Strategy<Value = SkeinElement> {
        proptest::collection::vec(((0i64..5, 0i64..5, 0i64..5), (-9i64..=9), (-9i64..9)), 0..5)
            .prop_map(|terms| {
                let mut e = SkeinElement::zero();
                for ((a, b, c), coeff, exp) in terms {
                    e.add_monomial(Monomial::new(a, b, c), &LaurentPoly::monomial(coeff, exp));
                }
                e
            })
    }

    proptest! {
        #[test]
        fn round_trip(e in arb_elem()) {
            let parsed = skein_from_str(&skein_to_json(&e)).unwrap();
            prop_assert_eq!(parsed, e);
        }
    }
}
