//! Reader for OEIS b-files: `#` comment lines and `n a(n)` data lines with
//! strictly ascending `n`.

use std::path::Path;

use num_bigint::BigInt;

#[derive(Debug, thiserror::Error)]
pub enum BfileError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub index: u64,
    pub value: BigInt,
}

pub fn parse(text: &str) -> Result<Vec<Entry>, BfileError> {
    let mut out: Vec<Entry> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let err = |message: String| BfileError::Parse { line, message };
        let mut fields = body.split_whitespace();
        let (Some(n), Some(v), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(err(format!("expected `index value`, found {body:?}")));
        };
        let index: u64 = n.parse().map_err(|_| err(format!("bad index {n:?}")))?;
        let value: BigInt = v.parse().map_err(|_| err(format!("bad value {v:?}")))?;
        if let Some(prev) = out.last() {
            if index <= prev.index {
                return Err(err(format!("index {index} does not follow {}", prev.index)));
            }
        }
        out.push(Entry { index, value });
    }
    Ok(out)
}

pub fn read(path: &Path) -> Result<Vec<Entry>, BfileError> {
    let text = std::fs::read_to_string(path).map_err(|source| BfileError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let e = parse("# A022493\n\n0 1\n1   1\n2\t2\n").unwrap();
        assert_eq!(e.len(), 3);
        assert_eq!(
            e[2],
            Entry {
                index: 2,
                value: 2.into()
            }
        );
    }

    #[test]
    fn huge_values_parse() {
        let e = parse("40 123456789012345678901234567890\n").unwrap();
        assert_eq!(e[0].value.to_string(), "123456789012345678901234567890");
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            "0 1\n1 x\n",
            "0 1\n1\n",
            "0 1\n0 1\n",
            "# c\n0 1 2\n",
            "-1 1\n",
        ];
        let lines = [2, 2, 2, 2, 1];
        for (text, want) in cases.iter().zip(lines) {
            match parse(text) {
                Err(BfileError::Parse { line, .. }) => assert_eq!(line, want, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }
}
