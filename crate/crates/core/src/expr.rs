//! Integer linear combinations of named symbols, e.g. `2D1 - D2 + D4`.

use crate::error::{Error, Result};

/// Parse `s` into a coefficient vector over `names`. Longest name wins,
/// so `D10` is never read as `D1` followed by `0`. `0` alone is the zero
/// vector.
pub fn parse_combo(s: &str, names: &[String]) -> Result<Vec<i64>> {
    let src: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut out = vec![0i64; names.len()];
    if src.is_empty() || src == ['0'] {
        return Ok(out);
    }
    let err = |m: String| Error::Parse(format!("{m} in `{s}`"));
    let mut order: Vec<usize> = (0..names.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(names[i].chars().count()));
    let mut i = 0;
    let mut first = true;
    while i < src.len() {
        let mut sign = 1;
        let mut had_op = false;
        while i < src.len() && (src[i] == '+' || src[i] == '-') {
            if src[i] == '-' {
                sign = -sign;
            }
            had_op = true;
            i += 1;
        }
        if !first && !had_op {
            return Err(err("missing operator".into()));
        }
        first = false;
        let st = i;
        while i < src.len() && src[i].is_ascii_digit() {
            i += 1;
        }
        let coeff: i64 = if i > st {
            src[st..i]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| err("bad number".into()))?
        } else {
            1
        };
        if i < src.len() && src[i] == '*' {
            i += 1;
        }
        let rest: String = src[i..].iter().collect();
        let hit = order.iter().find(|&&k| rest.starts_with(names[k].as_str()));
        match hit {
            Some(&k) => {
                out[k] += sign * coeff;
                i += names[k].chars().count();
            }
            None => return Err(err(format!("unknown symbol near `{rest}`"))),
        }
    }
    Ok(out)
}

/// Inverse of [`parse_combo`]: `2D1 - D2`, or `0`.
pub fn format_combo(v: &[i64], names: &[String]) -> String {
    let mut s = String::new();
    for (c, n) in v.iter().zip(names) {
        if *c == 0 {
            continue;
        }
        let mag = c.abs();
        if s.is_empty() {
            if *c < 0 {
                s.push('-');
            }
        } else {
            s.push_str(if *c < 0 { " - " } else { " + " });
        }
        if mag != 1 {
            s.push_str(&mag.to_string());
        }
        s.push_str(n);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(k: usize) -> Vec<String> {
        (1..=k).map(|i| format!("D{i}")).collect()
    }

    #[test]
    fn roundtrip() {
        let n = names(10);
        let v = parse_combo("2D1 - D2 + D10", &n).unwrap();
        assert_eq!(v, vec![2, -1, 0, 0, 0, 0, 0, 0, 0, 1]);
        assert_eq!(format_combo(&v, &n), "2D1 - D2 + D10");
        assert_eq!(parse_combo(&format_combo(&v, &n), &n).unwrap(), v);
        assert_eq!(format_combo(&[0; 3], &n[..3]), "0");
        assert_eq!(parse_combo("0", &n).unwrap(), vec![0; 10]);
        assert_eq!(parse_combo("-D3", &n).unwrap()[2], -1);
    }

    #[test]
    fn errors() {
        let n = names(3);
        assert!(parse_combo("D4", &n).is_err());
        assert!(parse_combo("D1D2", &n).is_err());
        assert!(parse_combo("2", &n).is_err());
    }

    #[test]
    fn primes() {
        let n: Vec<String> = ["a", "a'"].iter().map(|s| s.to_string()).collect();
        assert_eq!(parse_combo("3a + a'", &n).unwrap(), vec![3, 1]);
    }
}
