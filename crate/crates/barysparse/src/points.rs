//! Query point files: one whitespace-separated row per point, `#` starts a
//! comment, blank lines are skipped.

use crate::CliError;

/// Parses `text` into rows of exactly `dim` finite numbers.
pub fn parse_points(text: &str, dim: usize) -> Result<Vec<Vec<f64>>, CliError> {
    let mut rows = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        rows.push(parse_row(body, dim).map_err(|message| CliError::PointRow { line, message })?);
    }
    Ok(rows)
}

/// Parses one row such as `"0.5 0.25"`.
pub fn parse_row(body: &str, dim: usize) -> Result<Vec<f64>, String> {
    let row = body
        .split_whitespace()
        .map(|tok| match tok.parse::<f64>() {
            Ok(v) if v.is_finite() => Ok(v),
            Ok(_) => Err(format!("non-finite value '{tok}'")),
            Err(_) => Err(format!("expected a number, found '{tok}'")),
        })
        .collect::<Result<Vec<f64>, String>>()?;
    if row.len() != dim {
        return Err(format!("expected {dim} coordinates, found {}", row.len()));
    }
    Ok(row)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comments_and_blanks() {
        let rows = parse_points("# header\n0.5 0.5\n\n  1 2 # trailing\n", 2).unwrap();
        assert_eq!(rows, vec![vec![0.5, 0.5], vec![1.0, 2.0]]);
    }

    #[test]
    fn row_errors_carry_line_numbers() {
        match parse_points("0 0\n1\n", 2) {
            Err(CliError::PointRow { line: 2, message }) => assert!(message.contains("expected 2")),
            other => panic!("{other:?}"),
        }
        match parse_points("0 x\n", 2) {
            Err(CliError::PointRow { line: 1, message }) => assert!(message.contains("'x'")),
            other => panic!("{other:?}"),
        }
        assert!(parse_points("inf 0\n", 2).is_err());
    }
}
