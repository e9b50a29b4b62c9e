use num_bigint::BigInt;

use super::{IntMatrix, MatrixError};

/// Parses the `matrix <m> <n>` format: a header line, then `m` rows of `n`
/// signed decimal integers. `#` comment lines and blank lines are skipped.
pub fn parse_matrix(text: &str) -> Result<IntMatrix, MatrixError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        });

    let (hline, header) = lines.next().ok_or(MatrixError::Parse {
        line: 0,
        msg: "missing `matrix <m> <n>` header".into(),
    })?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    let (rows, cols) = match toks.as_slice() {
        ["matrix", m, n] => (parse_dim(m, hline)?, parse_dim(n, hline)?),
        _ => {
            return Err(MatrixError::Parse {
                line: hline,
                msg: "expected `matrix <m> <n>`".into(),
            })
        }
    };

    let mut entries = Vec::with_capacity(rows * cols);
    if cols > 0 {
        for r in 0..rows {
            let Some((lno, line)) = lines.next() else {
                return Err(MatrixError::Parse {
                    line: hline,
                    msg: format!("expected {rows} rows, found {r}"),
                });
            };
            let before = entries.len();
            for tok in line.split_whitespace() {
                let v: BigInt = tok.parse().map_err(|_| MatrixError::Parse {
                    line: lno,
                    msg: format!("invalid integer `{tok}`"),
                })?;
                entries.push(v);
            }
            let got = entries.len() - before;
            if got != cols {
                return Err(MatrixError::Parse {
                    line: lno,
                    msg: format!("expected {cols} entries, found {got}"),
                });
            }
        }
    }
    if let Some((lno, _)) = lines.next() {
        return Err(MatrixError::Parse {
            line: lno,
            msg: "trailing content after last row".into(),
        });
    }
    IntMatrix::from_vec(rows, cols, entries)
}

fn parse_dim(tok: &str, line: usize) -> Result<usize, MatrixError> {
    tok.parse().map_err(|_| MatrixError::Parse {
        line,
        msg: format!("invalid dimension `{tok}`"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let text = "# paper example\nmatrix 3 4\n-1 -1 0 2\n\n1 -3 -2 0\n0 0 2 -2\n";
        let m = parse_matrix(text).unwrap();
        assert_eq!(
            m,
            IntMatrix::from_rows(&[[-1i64, -1, 0, 2], [1, -3, -2, 0], [0, 0, 2, -2]]).unwrap()
        );
        assert_eq!(parse_matrix(&m.to_string()).unwrap(), m);
    }

    #[test]
    fn empty_shapes() {
        assert_eq!(parse_matrix("matrix 0 3\n").unwrap(), IntMatrix::zeros(0, 3));
        assert_eq!(parse_matrix("matrix 2 0").unwrap(), IntMatrix::zeros(2, 0));
    }

    #[test]
    fn big_entries() {
        let m = parse_matrix("matrix 1 1\n-123456789012345678901234567890\n").unwrap();
        assert_eq!(m.to_string(), "matrix 1 1\n-123456789012345678901234567890\n");
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_matrix("matrix 2 2\n1 2\n3 x\n").unwrap_err();
        assert!(matches!(err, MatrixError::Parse { line: 3, .. }));
        assert!(matches!(parse_matrix("matrix 2 2\n1 2\n"), Err(MatrixError::Parse { .. })));
        assert!(matches!(parse_matrix("matrix 1 2\n1 2 3\n"), Err(MatrixError::Parse { line: 2, .. })));
        assert!(matches!(parse_matrix("mat 1 1\n1\n"), Err(MatrixError::Parse { line: 1, .. })));
        assert!(parse_matrix("").is_err());
        assert!(parse_matrix("matrix 1 1\n1\n2\n").is_err());
    }
}
