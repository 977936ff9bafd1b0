//! Reading tableaux from stdin and writing the structured outputs.

use anyhow::{bail, Context, Result};
use inctab::json::TableauDto;
use inctab::qpoly::IntPolynomial;
use inctab::words::{from_steps, HeightWord, SchroederStepSeq};
use inctab::IncreasingTableau;
use num_traits::Signed;
use serde::Serialize;
use std::io::Read;

/// Accepted stdin shapes: a JSON tableau payload, whitespace rows of
/// entries, a single height word line starting at 0, or a single line of
/// U, D, and H steps.
pub fn read_tableau() -> Result<IncreasingTableau> {
    let mut buf = String::new();
    std::io::stdin()
        .read_to_string(&mut buf)
        .context("reading stdin")?;
    parse_tableau(&buf)
}

pub fn parse_tableau(text: &str) -> Result<IncreasingTableau> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        bail!("empty input: expected a tableau as JSON, rows, a height word, or a step string");
    }
    if trimmed.starts_with('{') {
        let dto: TableauDto = serde_json::from_str(trimmed).context("parsing JSON input")?;
        return Ok(dto.into_tableau()?);
    }
    let lines: Vec<&str> = trimmed.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
    if lines.len() == 1 {
        let line = lines[0];
        if line.chars().all(|c| matches!(c, 'U' | 'u' | 'D' | 'd' | 'H' | 'h')) {
            let steps: SchroederStepSeq = line.parse().context("parsing step string")?;
            return Ok(from_steps(&steps));
        }
        // Height words start at 0; tableau rows never contain 0.
        let first = line.split_whitespace().next().unwrap_or("");
        if first == "0" || (line.len() > 1 && !line.contains(' ') && line.starts_with('0')) {
            let digits: Vec<u32> = if line.contains(' ') {
                line.split_whitespace()
                    .map(|w| w.parse().context("parsing height word"))
                    .collect::<Result<_>>()?
            } else {
                line.chars()
                    .map(|c| c.to_digit(10).context("parsing height word digits"))
                    .collect::<Result<_>>()?
            };
            let word = HeightWord::new(digits)?;
            return Ok(from_steps(&word.to_steps()));
        }
    }
    let rows: Vec<Vec<u32>> = lines
        .iter()
        .map(|l| {
            l.split_whitespace()
                .map(|w| w.parse::<u32>().with_context(|| format!("parsing row entry {w:?}")))
                .collect()
        })
        .collect::<Result<_>>()?;
    Ok(IncreasingTableau::new(rows)?)
}

pub fn print_json<T: Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string(value)?);
    Ok(())
}

/// Human form of an integer polynomial in q, highest power first.
pub fn poly_text(p: &IntPolynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for d in (0..=p.degree().unwrap()).rev() {
        let c = p.coeff(d);
        if c == 0.into() {
            continue;
        }
        let sign = if c.is_negative() { "-" } else { "+" };
        if out.is_empty() {
            if sign == "-" {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        let mag = c.abs();
        let show_coeff = mag != 1.into() || d == 0;
        if show_coeff {
            out.push_str(&mag.to_string());
        }
        if d > 0 {
            out.push('q');
            if d > 1 {
                out.push_str(&format!("^{d}"));
            }
        }
    }
    out
}

/// Ascending coefficient strings for JSON payloads.
pub fn poly_coeffs(p: &IntPolynomial) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn polynomials_print_in_descending_powers() {
        let p = IntPolynomial::from_coeffs(vec![
            BigInt::from(1),
            BigInt::from(0),
            BigInt::from(2),
            BigInt::from(-1),
        ]);
        assert_eq!(poly_text(&p), "-q^3 + 2q^2 + 1");
        assert_eq!(poly_text(&IntPolynomial::zero()), "0");
        assert_eq!(poly_text(&IntPolynomial::one()), "1");
    }

    #[test]
    fn input_sniffing_covers_all_four_shapes() {
        let t = parse_tableau("1 2 4\n3 4 5").unwrap();
        assert_eq!(t.rows(), &[vec![1, 2, 4], vec![3, 4, 5]]);
        let from_json = parse_tableau("{\"schema\":\"inctab.tableau.v1\",\"rows\":[[1,2,4],[3,4,5]]}").unwrap();
        assert_eq!(from_json, t);
        let two_row = parse_tableau("UHDUUHDD").unwrap();
        assert_eq!(parse_tableau("011012210").unwrap(), two_row);
        assert_eq!(parse_tableau("0 1 1 0 1 2 2 1 0").unwrap(), two_row);
        assert!(parse_tableau("").is_err());
        assert!(parse_tableau("1 2\n2 1").is_err());
    }
}
