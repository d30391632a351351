use std::str::FromStr;

use super::{BigRat, LaurentPoly, RatFunc, RatFuncError};

fn err(s: &str) -> RatFuncError {
    RatFuncError::Parse(s.to_string())
}

/// Parses one term: `c`, `c*q`, `c*q^e`, `q`, `q^e`, or `-q^e`.
fn parse_term(t: &str) -> Result<(i64, BigRat), RatFuncError> {
    let t = t.trim();
    let (coeff, var) = match t.split_once('*') {
        Some((c, v)) => (c.trim(), Some(v.trim())),
        None if t.trim_start_matches('-').starts_with('q') => {
            let neg = t.starts_with('-');
            (if neg { "-1" } else { "1" }, Some(t.trim_start_matches('-')))
        }
        None => (t, None),
    };
    let c = BigRat::from_str(coeff).map_err(|_| err(t))?;
    let exp = match var {
        None => 0,
        Some("q") => 1,
        Some(v) => v
            .strip_prefix("q^")
            .and_then(|e| e.trim().parse::<i64>().ok())
            .ok_or_else(|| err(t))?,
    };
    Ok((exp, c))
}

fn parse_poly(s: &str) -> Result<LaurentPoly, RatFuncError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(err(s));
    }
    let terms = s.split('+').map(parse_term).collect::<Result<Vec<_>, _>>()?;
    Ok(LaurentPoly::from_terms(terms))
}

/// Inverse of `RatFunc`'s `Display`: `( num ) / ( den )`. A bare `( num )` or an
/// unparenthesized polynomial is accepted as a Laurent polynomial.
pub(super) fn parse_ratfunc(s: &str) -> Result<RatFunc, RatFuncError> {
    let s = s.trim();
    if !s.starts_with('(') {
        return Ok(RatFunc::from_poly(parse_poly(s)?));
    }
    let close = s.find(')').ok_or_else(|| err(s))?;
    let num = parse_poly(&s[1..close])?;
    let rest = s[close + 1..].trim();
    if rest.is_empty() {
        return Ok(RatFunc::from_poly(num));
    }
    let rest = rest.strip_prefix('/').ok_or_else(|| err(s))?.trim();
    let inner = rest
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| err(s))?;
    RatFunc::new(num, parse_poly(inner)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_terms() {
        assert_eq!(parse_term("1/2*q^-3").unwrap(), (-3, BigRat::new(1.into(), 2.into())));
        assert_eq!(parse_term("-q").unwrap(), (1, BigRat::from_integer((-1).into())));
        assert_eq!(parse_term("7").unwrap().0, 0);
        assert!(parse_term("x").is_err());
    }

    #[test]
    fn rejects_garbage() {
        assert!("( 1 ) / 2".parse::<RatFunc>().is_err());
        assert!("( 1 ) / ( 0 )".parse::<RatFunc>().is_err());
        assert!("( ) / ( 1 )".parse::<RatFunc>().is_err());
    }
}
