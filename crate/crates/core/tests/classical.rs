use std::collections::BTreeMap;

use cosmetic_core::cyclo::LaurentPoly;
use cosmetic_core::knot::bundled_table;
use cosmetic_core::skein::{alexander_polynomial, jones_polynomial, kauffman_bracket};

const FIXTURE: &str = include_str!("fixtures/knotinfo_le9.csv");

/// Parse the table's polynomial notation: `t^(-2)-t^(-1)+1-3*t+t^2`.
fn parse_poly(text: &str) -> BTreeMap<i64, i64> {
    let mut out = BTreeMap::new();
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let mut sign = 1;
        if bytes[i] == b'+' || bytes[i] == b'-' {
            sign = if bytes[i] == b'-' { -1 } else { 1 };
            i += 1;
        }
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let coeff: i64 = if i > start { s[start..i].parse().unwrap() } else { 1 };
        if i < bytes.len() && bytes[i] == b'*' {
            i += 1;
        }
        let mut exp = 0;
        if i < bytes.len() && bytes[i] == b't' {
            i += 1;
            exp = 1;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let paren = bytes[i] == b'(';
                if paren {
                    i += 1;
                }
                let e0 = i;
                if bytes[i] == b'-' {
                    i += 1;
                }
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                exp = s[e0..i].parse().unwrap();
                if paren {
                    i += 1;
                }
            }
        }
        *out.entry(exp).or_insert(0) += sign * coeff;
    }
    out.retain(|_, c| *c != 0);
    out
}

fn to_map(p: &LaurentPoly) -> BTreeMap<i64, i64> {
    p.terms().map(|(e, c)| (e, i64::try_from(c.clone()).unwrap())).collect()
}

fn flip(m: &BTreeMap<i64, i64>) -> BTreeMap<i64, i64> {
    m.iter().map(|(&e, &c)| (-e, c)).collect()
}

/// Center the exponents and fix the sign so the value at 1 is positive.
fn symmetrize(m: &BTreeMap<i64, i64>) -> BTreeMap<i64, i64> {
    let lo = *m.keys().next().unwrap();
    let hi = *m.keys().last().unwrap();
    assert_eq!((lo + hi) % 2, 0);
    let sign = m.values().sum::<i64>().signum();
    m.iter().map(|(&e, &c)| (e - (lo + hi) / 2, sign * c)).collect()
}

fn fixture() -> BTreeMap<String, (String, String)> {
    let mut rdr = csv::Reader::from_reader(FIXTURE.as_bytes());
    rdr.records()
        .map(|r| {
            let r = r.unwrap();
            (r[0].to_string(), (r[1].to_string(), r[2].to_string()))
        })
        .collect()
}

#[test]
fn jones_matches_reference_table() {
    let reference = fixture();
    let table = bundled_table();
    assert_eq!(reference.len(), table.len());
    for rec in &table {
        let (jones, _) = &reference[&rec.name];
        let expect = parse_poly(jones);
        let got = to_map(&jones_polynomial(&rec.pd).unwrap());
        assert!(got == expect || flip(&got) == expect, "{}: got {got:?}, table {expect:?}", rec.name);
    }
}

#[test]
fn alexander_matches_reference_table() {
    let reference = fixture();
    for rec in &bundled_table() {
        let (_, alex) = &reference[&rec.name];
        let expect = symmetrize(&parse_poly(alex));
        let got = to_map(&alexander_polynomial(&rec.pd).unwrap());
        assert_eq!(got, expect, "{}", rec.name);
        assert_eq!(got, flip(&got), "{} is not symmetric", rec.name);
    }
}

#[test]
fn mirror_inverts_the_variable() {
    for rec in bundled_table() {
        let m = rec.pd.mirror();
        assert_eq!(kauffman_bracket(&m), kauffman_bracket(&rec.pd).substitute_power(-1), "{}", rec.name);
        assert_eq!(jones_polynomial(&m).unwrap(), jones_polynomial(&rec.pd).unwrap().substitute_power(-1));
        assert_eq!(alexander_polynomial(&m).unwrap(), alexander_polynomial(&rec.pd).unwrap());
    }
}

#[test]
fn second_derivative_identity() {
    for rec in bundled_table() {
        let j2 = jones_polynomial(&rec.pd).unwrap().derivative_at_one(2);
        let a2 = alexander_polynomial(&rec.pd).unwrap().derivative_at_one(2);
        assert_eq!(j2, -3 * a2, "{}", rec.name);
    }
}

#[test]
fn parser_sanity() {
    assert_eq!(parse_poly("t^(-2)-t^(-1)+1-t+t^2"), BTreeMap::from([(-2, 1), (-1, -1), (0, 1), (1, -1), (2, 1)]));
    assert_eq!(parse_poly("1-3*t+t^2"), BTreeMap::from([(0, 1), (1, -3), (2, 1)]));
    assert_eq!(symmetrize(&parse_poly("1-3*t+t^2")), BTreeMap::from([(-1, -1), (0, 3), (1, -1)]));
}
