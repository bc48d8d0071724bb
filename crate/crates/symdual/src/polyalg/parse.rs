use super::poly::{Basis, Polynomial};
use super::PolyError;
use crate::scalars::{parse_rational, ExponentVec, Field, FieldScalar};

/// Parses text such as "3*x0^2*x1 - x2^3" (or "Y0^[2]*Y1 + 2*Y2" for 𝒟).
///
/// `nvars` fixes the ring; variables with a larger index are rejected.
pub fn parse_polynomial<B: Basis>(text: &str, field: Field, nvars: usize) -> Result<Polynomial<B>, PolyError> {
    let err = |m: &str| PolyError::Parse(format!("{m} in {text:?}"));
    let mut out = Polynomial::<B>::zero(field, nvars);
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(err("empty input"));
    }
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    let mut depth = 0i32;
    for (i, ch) in s.chars().enumerate() {
        match ch {
            '[' => {
                depth += 1;
                cur.push(ch);
            }
            ']' => {
                depth -= 1;
                cur.push(ch);
            }
            '+' | '-' if depth == 0 && !(cur.ends_with('^')) => {
                if i == 0 && cur.is_empty() {
                    neg = ch == '-';
                    continue;
                }
                if cur.is_empty() {
                    return Err(err("dangling sign"));
                }
                terms.push((neg, std::mem::take(&mut cur)));
                neg = ch == '-';
            }
            _ => cur.push(ch),
        }
    }
    if cur.is_empty() {
        return Err(err("dangling sign"));
    }
    terms.push((neg, cur));
    for (neg, t) in terms {
        let mut coeff = field.one();
        let mut exp = vec![0u32; nvars];
        for factor in t.split('*') {
            if factor.is_empty() {
                return Err(err("empty factor"));
            }
            let lead = factor.chars().next().unwrap();
            let var_char = if B::DIVIDED { 'Y' } else { 'x' };
            if lead == var_char {
                let (idx, k) = parse_var::<B>(&factor[1..]).ok_or_else(|| err("bad variable"))?;
                if idx >= nvars {
                    return Err(err("variable index out of range"));
                }
                exp[idx] += k;
            } else if lead.is_ascii_digit() {
                let (num, den) = match factor.split_once('/') {
                    Some((a, b)) => (a, Some(b)),
                    None => (factor, None),
                };
                let lit = match den {
                    Some(b) => format!("{num}/{b}"),
                    None => num.to_string(),
                };
                let q = parse_rational(&lit).map_err(|_| err("bad coefficient"))?;
                let c = field.from_rational(&q)?;
                coeff = &coeff * &c;
            } else {
                return Err(err("unexpected token"));
            }
        }
        if neg {
            coeff = -coeff;
        }
        if B::DIVIDED {
            // a repeated Y_i factor multiplies divided powers, which is not a plain exponent sum
            let raw: Vec<&str> = t.split('*').filter(|f| f.starts_with('Y')).collect();
            let mut seen = vec![false; nvars];
            for f in raw {
                let (idx, _) = parse_var::<B>(&f[1..]).unwrap();
                if seen[idx] {
                    return Err(err("repeated divided variable in one term"));
                }
                seen[idx] = true;
            }
        }
        out.add_term(ExponentVec(exp), &coeff);
    }
    Ok(out)
}

fn parse_var<B: Basis>(s: &str) -> Option<(usize, u32)> {
    let digits: String = s.chars().take_while(|c| c.is_ascii_digit()).collect();
    if digits.is_empty() {
        return None;
    }
    let idx: usize = digits.parse().ok()?;
    let rest = &s[digits.len()..];
    if rest.is_empty() {
        return Some((idx, 1));
    }
    let rest = rest.strip_prefix('^')?;
    let k = if B::DIVIDED {
        rest.strip_prefix('[')?.strip_suffix(']')?.parse().ok()?
    } else {
        rest.parse().ok()?
    };
    Some((idx, k))
}

/// Parses a list of coordinates given as rational strings.
pub fn parse_point(coords: &[String], field: Field) -> Result<Vec<FieldScalar>, PolyError> {
    coords
        .iter()
        .map(|c| field.parse(c).map_err(PolyError::from))
        .collect()
}
