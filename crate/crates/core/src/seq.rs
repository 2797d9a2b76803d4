use std::fmt;
use std::ops::Index;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::numeric::{parse_rational, ParseRationalError, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("a coefficient sequence needs at least one entry")]
pub struct EmptySequence;

/// Coefficients `a_0..a_m` in ascending degree. Never empty.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Rational>", into = "Vec<Rational>")]
pub struct CoeffSeq(Vec<Rational>);

impl CoeffSeq {
    pub fn new(entries: Vec<Rational>) -> Result<Self, EmptySequence> {
        if entries.is_empty() {
            Err(EmptySequence)
        } else {
            Ok(Self(entries))
        }
    }

    /// Panics on an empty slice.
    pub fn from_ints(entries: &[i64]) -> Self {
        Self::new(entries.iter().map(|&a| Rational::from(a)).collect()).expect("non-empty slice")
    }

    /// The index `m` of the last entry.
    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn last(&self) -> &Rational {
        self.0.last().expect("non-empty")
    }

    pub fn into_vec(self) -> Vec<Rational> {
        self.0
    }

    /// Index of the first entry that is zero or negative.
    pub fn first_nonpositive(&self) -> Option<usize> {
        self.0.iter().position(|a| !a.is_positive())
    }

    /// Multiplies every entry by `factor`.
    pub fn scaled(&self, factor: &Rational) -> Self {
        Self(self.0.iter().map(|a| a * factor).collect())
    }
}

impl TryFrom<Vec<Rational>> for CoeffSeq {
    type Error = EmptySequence;

    fn try_from(value: Vec<Rational>) -> Result<Self, Self::Error> {
        Self::new(value)
    }
}

impl From<CoeffSeq> for Vec<Rational> {
    fn from(value: CoeffSeq) -> Self {
        value.0
    }
}

impl Index<usize> for CoeffSeq {
    type Output = Rational;

    fn index(&self, index: usize) -> &Rational {
        &self.0[index]
    }
}

impl<'a> IntoIterator for &'a CoeffSeq {
    type Item = &'a Rational;
    type IntoIter = std::slice::Iter<'a, Rational>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Debug for CoeffSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.0).finish()
    }
}

impl fmt::Display for CoeffSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

/// Error reading a coefficient file.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffFileError {
    #[error("line {line}, column {column}: {source}")]
    Token {
        line: usize,
        column: usize,
        #[source]
        source: ParseRationalError,
    },
    #[error("no coefficients found")]
    Empty,
}

/// Reads whitespace-separated rational tokens in ascending degree. A line
/// whose first non-blank character is `#` is a comment. Line and column in
/// errors are 1-based.
pub fn parse_coeff_text(text: &str) -> Result<CoeffSeq, CoeffFileError> {
    let mut entries = Vec::new();
    for (line_idx, line) in text.lines().enumerate() {
        if line.trim_start().starts_with('#') {
            continue;
        }
        let mut offset = 0;
        for token in line.split_whitespace() {
            let start = offset + line[offset..].find(token).expect("token comes from this line");
            offset = start + token.len();
            let value = parse_rational(token).map_err(|source| CoeffFileError::Token {
                line: line_idx + 1,
                column: start + source.position() + 1,
                source,
            })?;
            entries.push(value);
        }
    }
    CoeffSeq::new(entries).map_err(|_| CoeffFileError::Empty)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_mixed_tokens_and_comments() {
        let seq = parse_coeff_text("# header\n1 3/2\n  0.25\n\n-4/6\n").unwrap();
        assert_eq!(seq.to_string(), "(1, 3/2, 1/4, -2/3)");
        assert_eq!(seq.degree(), 3);
    }

    #[test]
    fn reports_line_and_column() {
        let err = parse_coeff_text("1 2\n3 4/0 5\n").unwrap_err();
        match err {
            CoeffFileError::Token { line, column, .. } => assert_eq!((line, column), (2, 5)),
            other => panic!("unexpected {other:?}"),
        }
        let err = parse_coeff_text("  7 x").unwrap_err();
        assert!(matches!(err, CoeffFileError::Token { line: 1, column: 5, .. }));
    }

    #[test]
    fn empty_input_is_rejected() {
        assert_eq!(parse_coeff_text("# only a comment\n"), Err(CoeffFileError::Empty));
        assert_eq!(CoeffSeq::new(vec![]), Err(EmptySequence));
    }

    #[test]
    fn serde_refuses_empty_arrays() {
        assert!(serde_json::from_str::<CoeffSeq>("[]").is_err());
        let seq: CoeffSeq = serde_json::from_str(r#"["1","1/2"]"#).unwrap();
        assert_eq!(seq[1], Rational::ratio(1, 2));
    }
}
