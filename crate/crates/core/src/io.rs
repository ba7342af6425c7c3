//! Text formats: structure files (`dim N` plus `d e<k> = ...` lines) and
//! matrix files (`ROWS COLS` followed by rows of rationals).

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_traits::{One, Signed};
use thiserror::Error;

use crate::lie::{LieAlgebra, LieError};
use crate::linalg::rational::parse_rational;
use crate::linalg::{Matrix, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            message: message.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_generator(token: &str, line: usize) -> Result<usize, ParseError> {
    let digits = token.strip_prefix('e').ok_or_else(|| {
        ParseError::new(
            line,
            format!("expected a generator like e3, found '{token}'"),
        )
    })?;
    match digits.parse::<usize>() {
        Ok(k) if k >= 1 => Ok(k),
        _ => Err(ParseError::new(
            line,
            format!("bad generator index in '{token}'"),
        )),
    }
}

/// Parses `[sign] [rat] [*] e<i>^e<j>` terms separated by `+` or `-`.
fn parse_terms(rhs: &str, line: usize) -> Result<Vec<(Rational, usize, usize)>, ParseError> {
    let compact: String = rhs.chars().filter(|c| !c.is_whitespace()).collect();
    if compact == "0" {
        return Ok(Vec::new());
    }
    let mut terms = Vec::new();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let mut negative = false;
        let mut had_sign = false;
        while let Some(c) = rest.chars().next().filter(|c| *c == '+' || *c == '-') {
            negative ^= c == '-';
            had_sign = true;
            rest = &rest[1..];
        }
        if !terms.is_empty() && !had_sign {
            return Err(ParseError::new(
                line,
                format!("expected '+' or '-' before '{rest}'"),
            ));
        }
        let coeff_len = rest
            .find(|c: char| !(c.is_ascii_digit() || c == '/'))
            .unwrap_or(rest.len());
        let mut coeff = if coeff_len == 0 {
            Rational::one()
        } else {
            parse_rational(&rest[..coeff_len]).ok_or_else(|| {
                ParseError::new(line, format!("bad coefficient '{}'", &rest[..coeff_len]))
            })?
        };
        rest = rest[coeff_len..]
            .strip_prefix('*')
            .unwrap_or(&rest[coeff_len..]);
        if negative {
            coeff = -coeff;
        }
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let wedge = &rest[..end];
        rest = &rest[end..];
        let (a, b) = wedge.split_once('^').ok_or_else(|| {
            ParseError::new(line, format!("expected a wedge e<i>^e<j>, found '{wedge}'"))
        })?;
        let (i, j) = (parse_generator(a, line)?, parse_generator(b, line)?);
        if i >= j {
            return Err(ParseError::new(
                line,
                format!("indices not increasing in e{i}^e{j}"),
            ));
        }
        terms.push((coeff, i, j));
    }
    Ok(terms)
}

/// Parses a structure file and validates the resulting Lie algebra. The
/// constants follow `c[k][i][j] = -(coefficient of e^{ij} in d e^k)`.
pub fn parse_structure_file(text: &str) -> Result<LieAlgebra, StructureError> {
    let mut lines = content_lines(text);
    let (dim_line, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, "empty file, expected 'dim N'"))?;
    let dim = header
        .strip_prefix("dim")
        .and_then(|n| n.trim().parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .ok_or_else(|| {
            ParseError::new(
                dim_line,
                format!("expected 'dim N' with N >= 1, found '{header}'"),
            )
        })?;
    let mut equations: Vec<Vec<(Rational, usize, usize)>> = vec![Vec::new(); dim];
    let mut seen_generators = BTreeSet::new();
    for (line, content) in lines {
        let (lhs, rhs) = content.split_once('=').ok_or_else(|| {
            ParseError::new(line, format!("expected 'd e<k> = ...', found '{content}'"))
        })?;
        let lhs = lhs.trim();
        let generator = lhs.strip_prefix('d').map(str::trim).ok_or_else(|| {
            ParseError::new(
                line,
                format!("left-hand side must be 'd e<k>', found '{lhs}'"),
            )
        })?;
        let k = parse_generator(generator, line)?;
        if k > dim {
            return Err(ParseError::new(line, format!("generator e{k} exceeds dim {dim}")).into());
        }
        if !seen_generators.insert(k) {
            return Err(ParseError::new(line, format!("d e{k} given twice")).into());
        }
        let mut pairs = BTreeSet::new();
        for (coeff, i, j) in parse_terms(rhs, line)? {
            if j > dim {
                return Err(
                    ParseError::new(line, format!("generator e{j} exceeds dim {dim}")).into(),
                );
            }
            if !pairs.insert((i, j)) {
                return Err(ParseError::new(line, format!("term e{i}^e{j} repeated")).into());
            }
            equations[k - 1].push((coeff, i - 1, j - 1));
        }
    }
    let g = LieAlgebra::from_differentials(dim, &equations);
    g.validate()?;
    Ok(g)
}

/// Inverse of [`parse_structure_file`]; generators with `d e^k = 0` are
/// omitted.
pub fn dump_structure_file(g: &LieAlgebra) -> String {
    let mut out = format!("dim {}\n", g.dim());
    for k in 0..g.dim() {
        let terms = g.differential(k);
        if terms.is_empty() {
            continue;
        }
        let mut line = format!("d e{} =", k + 1);
        for (idx, (c, i, j)) in terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            let magnitude = c.abs();
            let coeff = if magnitude.is_one() {
                String::new()
            } else {
                format!("{magnitude} ")
            };
            if idx == 0 {
                let lead = if c.is_negative() { "-" } else { "" };
                write!(line, " {lead}{coeff}e{}^e{}", i + 1, j + 1).unwrap();
            } else {
                write!(line, " {sign} {coeff}e{}^e{}", i + 1, j + 1).unwrap();
            }
        }
        out.push_str(&line);
        out.push('\n');
    }
    out
}

/// `ROWS COLS` then `ROWS` lines of `COLS` rationals; `#` comments allowed.
pub fn parse_matrix(text: &str) -> Result<Matrix, ParseError> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, "empty file, expected 'ROWS COLS'"))?;
    let dims: Vec<usize> = header
        .split_whitespace()
        .filter_map(|t| t.parse().ok())
        .collect();
    let (rows, cols) = match dims.as_slice() {
        [r, c] if header.split_whitespace().count() == 2 => (*r, *c),
        _ => {
            return Err(ParseError::new(
                header_line,
                format!("expected 'ROWS COLS', found '{header}'"),
            ))
        }
    };
    let mut data = Vec::with_capacity(rows * cols);
    let mut last_line = header_line;
    for _ in 0..rows {
        let (line, content) = lines
            .next()
            .ok_or_else(|| ParseError::new(last_line + 1, format!("expected {rows} rows")))?;
        last_line = line;
        let entries: Vec<&str> = content.split_whitespace().collect();
        if entries.len() != cols {
            return Err(ParseError::new(
                line,
                format!("expected {cols} entries, found {}", entries.len()),
            ));
        }
        for e in entries {
            data.push(
                parse_rational(e)
                    .ok_or_else(|| ParseError::new(line, format!("bad rational '{e}'")))?,
            );
        }
    }
    if let Some((line, _)) = lines.next() {
        return Err(ParseError::new(
            line,
            "unexpected content after the last row",
        ));
    }
    Ok(Matrix::new(rows, cols, data))
}

pub fn dump_matrix(m: &Matrix) -> String {
    m.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::{frac, int};

    #[test]
    fn heisenberg_sign_convention() {
        let g = parse_structure_file("dim 3\nd e3 = -1 e1^e2\n").unwrap();
        assert_eq!(g.bracket_basis(0, 1), vec![int(0), int(0), int(1)]);
    }

    #[test]
    fn nakamura_equations_validate() {
        let text = "dim 6
# two-step structure
d e3 = - e1^e3 + e2^e4
d e4 = - e1^e4 - e2^e3
d e5 = e1^e5 - e2^e6
d e6 = e1^e6 + e2^e5
";
        let g = parse_structure_file(text).unwrap();
        assert_eq!(g.dim(), 6);
        assert_eq!(*g.structure_constant(2, 0, 2), int(1));
    }

    #[test]
    fn errors_report_lines() {
        let err = parse_structure_file("dim 2\n\nd e1 = 1 e2^e1\n").unwrap_err();
        assert_eq!(
            err,
            StructureError::Parse(ParseError::new(3, "indices not increasing in e2^e1"))
        );
        let err = parse_structure_file("dim 3\nd e3 = e1^e2 + 2 e1^e2\n").unwrap_err();
        assert!(matches!(
            err,
            StructureError::Parse(ParseError { line: 2, .. })
        ));
        let err = parse_structure_file("dim 3\nd e3 = e1^e2\nd e3 = e1^e2\n").unwrap_err();
        assert!(matches!(
            err,
            StructureError::Parse(ParseError { line: 3, .. })
        ));
        assert!(parse_structure_file("dim 3\nd e3 = e1^e2 e1^e3\n").is_err());
        assert!(parse_structure_file("dim 2\nd e3 = e1^e2\n").is_err());
        assert!(parse_structure_file("dimension 2\n").is_err());
    }

    #[test]
    fn jacobi_failure_surfaces() {
        // [e1,e2] = e3, [e2,e3] = e1, [e1,e3] = e1 fails Jacobi.
        let err =
            parse_structure_file("dim 3\nd e3 = -e1^e2\nd e1 = -e2^e3 - e1^e3\n").unwrap_err();
        assert!(matches!(
            err,
            StructureError::Lie(LieError::JacobiViolation { .. })
        ));
    }

    #[test]
    fn rational_coefficients_and_round_trip() {
        let g =
            parse_structure_file("dim 4\nd e4 = 2/3 e1^e2 - 1/2*e1^e3\nd e3 = +3 e1^e2\n").unwrap();
        assert_eq!(*g.structure_constant(3, 0, 1), frac(-2, 3));
        let text = dump_structure_file(&g);
        assert_eq!(parse_structure_file(&text).unwrap(), g);
        assert!(text.contains("d e4 = 2/3 e1^e2 - 1/2 e1^e3"), "{text}");
    }

    #[test]
    fn zero_rhs_allowed() {
        let g = parse_structure_file("dim 2\nd e1 = 0\n").unwrap();
        assert!(g.is_abelian());
    }

    #[test]
    fn matrices() {
        let m = parse_matrix("2 2\n0 -1\n1 1/2 # comment\n").unwrap();
        assert_eq!(m[(1, 1)], frac(1, 2));
        assert_eq!(parse_matrix(&dump_matrix(&m)).unwrap(), m);
        assert_eq!(parse_matrix("2 2\n1 0\n").unwrap_err().line, 3);
        assert_eq!(parse_matrix("1 2\n1 x\n").unwrap_err().line, 2);
        assert!(parse_matrix("1 1\n1/0\n").is_err());
        assert!(parse_matrix("1 1\n1\n2\n").is_err());
    }
}
