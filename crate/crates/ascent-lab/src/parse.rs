//! Textual input formats: the group-spec mini-language, bracket matrix
//! literals, generator words, and Laurent polynomials (human form or
//! coefficient object).

use ascent_core::freewords::FreeWord;
use ascent_core::group::GroupSpec;
use ascent_core::laurent::LaurentPolynomial;
use ascent_core::matrix::IntegerMatrix;
use num_bigint::BigInt;
use serde::Deserialize;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("parse error: {0}")]
pub struct ParseError(pub String);

fn err<T>(msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError(msg.into()))
}

/// `bs:<n>` | `wreath` | `heis` | `zd:<d>` | `hnn-abelian:<matrix>` |
/// `hnn-free:<word>;<word>` | `matrix:<d>:<matrix>,<matrix>,...`
pub fn parse_group_spec(s: &str) -> Result<GroupSpec, ParseError> {
    let s = s.trim();
    if let Some(n) = s.strip_prefix("bs:") {
        let n: u64 = n
            .trim()
            .parse()
            .map_err(|_| ParseError(format!("bad BS base: {n:?}")))?;
        return Ok(GroupSpec::BaumslagSolitar { n });
    }
    if s == "wreath" {
        return Ok(GroupSpec::WreathZZ);
    }
    if s == "heis" {
        return Ok(GroupSpec::Heisenberg);
    }
    if let Some(d) = s.strip_prefix("zd:") {
        let dim: usize = d
            .trim()
            .parse()
            .map_err(|_| ParseError(format!("bad rank: {d:?}")))?;
        return Ok(GroupSpec::FreeAbelian { dim });
    }
    if let Some(m) = s.strip_prefix("hnn-abelian:") {
        return Ok(GroupSpec::HnnAbelian {
            phi: parse_matrix_literal(m)?,
        });
    }
    if let Some(ws) = s.strip_prefix("hnn-free:") {
        let parts: Vec<&str> = ws.split(';').collect();
        if parts.len() != 2 {
            return err("hnn-free needs exactly two images separated by ';'");
        }
        let w1 = parse_free_word(parts[0], 2)?;
        let w2 = parse_free_word(parts[1], 2)?;
        return Ok(GroupSpec::HnnFree { images: [w1, w2] });
    }
    if let Some(rest) = s.strip_prefix("matrix:") {
        let Some((d, mats)) = rest.split_once(':') else {
            return err("matrix spec needs a dimension: matrix:<d>:<m1>,<m2>,...");
        };
        let dim: usize = d
            .trim()
            .parse()
            .map_err(|_| ParseError(format!("bad dimension: {d:?}")))?;
        let mut generators = Vec::new();
        for lit in split_matrix_list(mats)? {
            generators.push(parse_matrix_literal(&lit)?);
        }
        if generators.is_empty() {
            return err("matrix spec needs at least one generator");
        }
        return Ok(GroupSpec::MatrixGroup { dim, generators });
    }
    err(format!("unrecognized group spec: {s:?}"))
}

/// Split `[[..],[..]],[[..]]` on the commas between bracketed literals.
fn split_matrix_list(s: &str) -> Result<Vec<String>, ParseError> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    for ch in s.chars() {
        match ch {
            '[' => {
                depth += 1;
                current.push(ch);
            }
            ']' => {
                depth -= 1;
                if depth < 0 {
                    return err("unbalanced brackets in matrix list");
                }
                current.push(ch);
            }
            ',' if depth == 0 => {
                out.push(core::mem::take(&mut current));
            }
            _ => current.push(ch),
        }
    }
    if depth != 0 {
        return err("unbalanced brackets in matrix list");
    }
    if !current.trim().is_empty() {
        out.push(current);
    }
    Ok(out)
}

/// Nested bracket list of decimal integers: `[[2,0],[0,3]]`. Hand-parsed
/// so arbitrarily large entries survive exactly.
pub fn parse_matrix_literal(s: &str) -> Result<IntegerMatrix, ParseError> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = compact
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| ParseError(format!("bad matrix literal: {s:?}")))?;
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    let mut rest = inner;
    while !rest.is_empty() {
        let row_src = rest
            .strip_prefix('[')
            .ok_or_else(|| ParseError(format!("bad matrix literal: {s:?}")))?;
        let Some(close) = row_src.find(']') else {
            return err(format!("bad matrix literal: {s:?}"));
        };
        let mut row = Vec::new();
        for cell in row_src[..close].split(',') {
            row.push(
                cell.parse::<BigInt>()
                    .map_err(|_| ParseError(format!("bad matrix entry: {cell:?}")))?,
            );
        }
        rows.push(row);
        rest = &row_src[close + 1..];
        if let Some(r) = rest.strip_prefix(',') {
            rest = r;
            if rest.is_empty() {
                return err(format!("bad matrix literal: {s:?}"));
            }
        } else if !rest.is_empty() {
            return err(format!("bad matrix literal: {s:?}"));
        }
    }
    if rows.is_empty() || rows[0].is_empty() || rows.iter().any(|r| r.len() != rows[0].len()) {
        return err("matrix literal must be rectangular and nonempty");
    }
    let cols = rows[0].len();
    Ok(IntegerMatrix::new(
        rows.len(),
        cols,
        rows.into_iter().flatten().collect(),
    ))
}

/// Word over `a1..ar` (uppercase `A1..Ar` for inverses), whitespace
/// separated: `a1 a2 A1 A2`.
pub fn parse_free_word(s: &str, rank: usize) -> Result<FreeWord, ParseError> {
    let mut letters = Vec::new();
    for tok in s.split_whitespace() {
        let (sign, rest) = match tok.chars().next() {
            Some('a') => (1i32, &tok[1..]),
            Some('A') => (-1i32, &tok[1..]),
            _ => return err(format!("bad word letter: {tok:?}")),
        };
        let idx: usize = rest
            .parse()
            .map_err(|_| ParseError(format!("bad word letter: {tok:?}")))?;
        if idx == 0 || idx > rank {
            return err(format!("generator index out of range: {tok:?}"));
        }
        letters.push(sign * idx as i32);
    }
    Ok(FreeWord::from_letters(letters))
}

#[derive(Deserialize)]
struct CoeffObject {
    low: i64,
    coeffs: Vec<String>,
}

/// Either the human form `t^2 - t - 1` (integer coefficients, `^`
/// exponents, `+`/`-` separated terms) or a coefficient object
/// `{"low": L, "coeffs": [c0, ...]}` meaning `sum c_i t^(L+i)`.
pub fn parse_polynomial(s: &str) -> Result<LaurentPolynomial, ParseError> {
    let s = s.trim();
    if s.starts_with('{') {
        let normalized = normalize_json_numbers(s);
        let obj: CoeffObject = serde_json::from_str(&normalized)
            .map_err(|e| ParseError(format!("bad coefficient object: {e}")))?;
        let mut coeffs = Vec::new();
        for c in &obj.coeffs {
            coeffs.push(
                c.trim()
                    .parse::<BigInt>()
                    .map_err(|_| ParseError(format!("bad coefficient: {c:?}")))?,
            );
        }
        return Ok(LaurentPolynomial::from_coeff_window(obj.low, &coeffs));
    }
    parse_polynomial_human(s)
}

/// Accept both bare numbers and quoted decimal strings in coeff arrays.
fn normalize_json_numbers(s: &str) -> String {
    match serde_json::from_str::<serde_json::Value>(s) {
        Ok(mut v) => {
            if let Some(arr) = v.get_mut("coeffs").and_then(|c| c.as_array_mut()) {
                for item in arr.iter_mut() {
                    if !item.is_string() {
                        *item = serde_json::Value::String(item.to_string());
                    }
                }
            }
            v.to_string()
        }
        Err(_) => s.to_string(),
    }
}

fn parse_polynomial_human(s: &str) -> Result<LaurentPolynomial, ParseError> {
    // tokenize into signed terms
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return err("empty polynomial");
    }
    let mut terms: Vec<(i64, BigInt)> = Vec::new();
    let mut acc = LaurentPolynomial::zero();
    let mut rest: &str = &compact;
    let mut sign = 1i64;
    if let Some(r) = rest.strip_prefix('-') {
        sign = -1;
        rest = r;
    } else if let Some(r) = rest.strip_prefix('+') {
        rest = r;
    }
    loop {
        // find the end of this term: next top-level '+' or '-' not in '^-'
        let mut end = rest.len();
        let bytes = rest.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i] as char;
            if (c == '+' || c == '-') && i > 0 && bytes[i - 1] as char != '^' {
                end = i;
                break;
            }
            i += 1;
        }
        let (term, tail) = rest.split_at(end);
        let (exp, coeff) = parse_term(term)?;
        terms.push((exp, coeff * sign));
        if tail.is_empty() {
            break;
        }
        sign = if tail.starts_with('-') { -1 } else { 1 };
        rest = &tail[1..];
        if rest.is_empty() {
            return err("dangling sign in polynomial");
        }
    }
    for (e, c) in terms {
        acc = acc.add(&LaurentPolynomial::from_terms([(e, c)]));
    }
    Ok(acc)
}

/// One unsigned term: `7`, `t`, `2t`, `2*t`, `t^3`, `3t^-2`.
fn parse_term(term: &str) -> Result<(i64, BigInt), ParseError> {
    if term.is_empty() {
        return err("empty term in polynomial");
    }
    match term.find('t') {
        None => {
            let c: BigInt = term
                .parse()
                .map_err(|_| ParseError(format!("bad constant term: {term:?}")))?;
            Ok((0, c))
        }
        Some(pos) => {
            let coeff_str = term[..pos].trim_end_matches('*');
            let coeff: BigInt = if coeff_str.is_empty() {
                BigInt::from(1)
            } else {
                coeff_str
                    .parse()
                    .map_err(|_| ParseError(format!("bad coefficient: {coeff_str:?}")))?
            };
            let exp_str = &term[pos + 1..];
            let exp: i64 = if exp_str.is_empty() {
                1
            } else if let Some(e) = exp_str.strip_prefix('^') {
                e.parse()
                    .map_err(|_| ParseError(format!("bad exponent: {e:?}")))?
            } else {
                return err(format!("bad term: {term:?}"));
            };
            Ok((exp, coeff))
        }
    }
}

/// Reject the zero polynomial with a dedicated message.
pub fn parse_nonzero_polynomial(s: &str) -> Result<LaurentPolynomial, ParseError> {
    let f = parse_polynomial(s)?;
    if f.is_zero() {
        return err("polynomial must be nonzero");
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ascent_core::group::Group;

    #[test]
    fn group_specs_round_trip() {
        let specs = [
            "bs:2",
            "wreath",
            "heis",
            "zd:3",
            "hnn-abelian:[[2,0],[0,3]]",
            "hnn-free:a1 a2 A1 A2;a1",
            "matrix:2:[[1,2],[0,1]],[[1,0],[2,1]]",
        ];
        for s in specs {
            let spec = parse_group_spec(s).unwrap();
            let g = Group::build(spec.clone()).unwrap();
            assert_eq!(g.spec_string(), s, "round trip");
            assert_eq!(parse_group_spec(&g.spec_string()).unwrap(), spec);
        }
    }

    #[test]
    fn bad_specs() {
        for s in ["", "bs:", "bs:x", "hnn-free:a1", "matrix:2", "nope:3"] {
            assert!(parse_group_spec(s).is_err(), "{s:?}");
        }
    }

    #[test]
    fn matrix_literals() {
        let m = parse_matrix_literal("[[2, 0], [0, 3]]").unwrap();
        assert_eq!(m, IntegerMatrix::from_i64(&[&[2, 0], &[0, 3]]));
        assert!(parse_matrix_literal("[[1,2],[3]]").is_err());
        assert!(parse_matrix_literal("[]").is_err());
        // big entries survive
        let m = parse_matrix_literal("[[123456789012345678901234567890]]").unwrap();
        assert_eq!(
            m.get(0, 0),
            &"123456789012345678901234567890".parse::<BigInt>().unwrap()
        );
    }

    #[test]
    fn words() {
        let w = parse_free_word("a1 a2 A1 A2", 2).unwrap();
        assert_eq!(w, FreeWord::from_letters([1, 2, -1, -2]));
        assert_eq!(parse_free_word("  ", 2).unwrap(), FreeWord::empty());
        assert!(parse_free_word("a3", 2).is_err());
        assert!(parse_free_word("b1", 2).is_err());
    }

    #[test]
    fn polynomials_human() {
        let f = parse_polynomial("t^2 - t - 1").unwrap();
        assert_eq!(f.to_string(), "t^2 - t - 1");
        let f = parse_polynomial("1 - 2t").unwrap();
        assert_eq!(f.to_string(), "-2 t + 1");
        let f = parse_polynomial("-2 t + 1").unwrap();
        assert_eq!(f.to_string(), "-2 t + 1");
        let f = parse_polynomial("3 t^-2 + t").unwrap();
        assert_eq!(f.min_exponent(), Some(-2));
        assert_eq!(parse_polynomial("0").unwrap(), LaurentPolynomial::zero());
        assert!(parse_nonzero_polynomial("0").is_err());
        assert!(parse_polynomial("t +").is_err());
        assert!(parse_polynomial("q^2").is_err());
    }

    #[test]
    fn polynomials_coeff_object() {
        let f = parse_polynomial(r#"{"low": -1, "coeffs": [1, 0, 2]}"#).unwrap();
        // t^-1 + 2t
        assert_eq!(f.coefficient(-1), BigInt::from(1));
        assert_eq!(f.coefficient(1), BigInt::from(2));
        let g = parse_polynomial(r#"{"low": 0, "coeffs": ["-2", "1"]}"#).unwrap();
        assert_eq!(g, parse_polynomial("t - 2").unwrap());
    }
}
