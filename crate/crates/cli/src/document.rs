//! The line-oriented input format.
//!
//! ```text
//! # comment
//! plat 4
//! word 2 2
//! covering 5 2 3
//! ```
//!
//! Each directive appears at most once. `word` needs a `plat`; a `plat`
//! without a `word` line has the empty word. Covering coefficients are
//! listed in canonical component order.

use platknot_core::{BraidError, CoveringSpec, PlatPresentation};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub plat: Option<PlatPresentation>,
    pub covering: Option<CoveringSpec>,
}

fn integers<T: std::str::FromStr>(
    line: usize,
    tokens: &[&str],
    what: &str,
) -> Result<Vec<T>, CliError> {
    tokens
        .iter()
        .map(|t| {
            t.parse::<T>()
                .map_err(|_| CliError::parse(line, format!("{what}: '{t}' is not an integer")))
        })
        .collect()
}

pub fn parse_document(text: &str) -> Result<Document, CliError> {
    let mut strands: Option<(usize, usize)> = None;
    let mut word: Option<(usize, Vec<i32>)> = None;
    let mut covering: Option<(usize, i64, Vec<i64>)> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let Some((&directive, args)) = tokens.split_first() else {
            continue;
        };
        match directive {
            "plat" => {
                if strands.is_some() {
                    return Err(CliError::parse(line, "duplicate 'plat' directive"));
                }
                let [count] = integers::<usize>(line, args, "plat")?[..] else {
                    return Err(CliError::parse(
                        line,
                        "'plat' takes exactly one strand count",
                    ));
                };
                if count < 2 || count % 2 != 0 {
                    return Err(CliError::parse(
                        line,
                        format!("strand count {count} must be even and at least 2"),
                    ));
                }
                strands = Some((line, count));
            }
            "word" => {
                if word.is_some() {
                    return Err(CliError::parse(line, "duplicate 'word' directive"));
                }
                word = Some((line, integers(line, args, "word")?));
            }
            "covering" => {
                if covering.is_some() {
                    return Err(CliError::parse(line, "duplicate 'covering' directive"));
                }
                let values = integers::<i64>(line, args, "covering")?;
                let Some((&p, coefficients)) = values.split_first() else {
                    return Err(CliError::parse(line, "'covering' needs a degree"));
                };
                if coefficients.is_empty() {
                    return Err(CliError::parse(
                        line,
                        "'covering' needs at least one coefficient",
                    ));
                }
                covering = Some((line, p, coefficients.to_vec()));
            }
            other => {
                return Err(CliError::parse(
                    line,
                    format!("unknown directive '{other}'"),
                ))
            }
        }
    }

    let plat = match (strands, word) {
        (None, None) => None,
        (None, Some((line, _))) => {
            return Err(CliError::parse(line, "'word' without a 'plat' directive"))
        }
        (Some((_, count)), None) => {
            Some(PlatPresentation::from_letters(count, Vec::new()).map_err(CliError::domain)?)
        }
        (Some((_, count)), Some((line, letters))) => Some(
            PlatPresentation::from_letters(count, letters).map_err(|e| match e {
                BraidError::LetterOutOfRange { .. } => CliError::parse(line, e.to_string()),
                other => CliError::domain(other),
            })?,
        ),
    };

    let covering = match covering {
        None => None,
        Some((line, p, coefficients)) => Some(
            CoveringSpec::validate(p, &coefficients)
                .map_err(|e| CliError::Domain(format!("line {line}: {e}")))?,
        ),
    };

    if let (Some(plat), Some(cov)) = (&plat, &covering) {
        let mu = plat.trace().mu();
        if cov.mu() != mu {
            return Err(CliError::Domain(format!(
                "covering lists {} coefficients but the plat has {mu} components",
                cov.mu()
            )));
        }
    }
    if plat.is_none() && covering.is_none() {
        return Err(CliError::parse(
            0,
            "document has neither a plat nor a covering",
        ));
    }
    Ok(Document { plat, covering })
}

impl Document {
    /// Canonical text form; `parse_document` reads it back unchanged.
    pub fn emit(&self) -> String {
        let mut out = String::new();
        if let Some(plat) = &self.plat {
            out.push_str(&format!("plat {}\n", plat.strand_count()));
            out.push_str(&with_prefix("word", plat.braid().letters()));
        }
        if let Some(cov) = &self.covering {
            let mut values = vec![cov.p()];
            values.extend_from_slice(cov.coefficients());
            out.push_str(&with_prefix("covering", &values));
        }
        out
    }
}

fn with_prefix<T: std::fmt::Display>(key: &str, values: &[T]) -> String {
    let mut line = key.to_string();
    for v in values {
        line.push(' ');
        line.push_str(&v.to_string());
    }
    line.push('\n');
    line
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        let doc = parse_document("plat 2\nword\n").unwrap();
        assert_eq!(
            doc.plat.unwrap(),
            PlatPresentation::from_letters(2, vec![]).unwrap()
        );
        assert!(doc.covering.is_none());

        let doc = parse_document("plat 4\nword 2 2\ncovering 5 2 3\n").unwrap();
        assert_eq!(doc.plat.as_ref().unwrap().braid().letters(), &[2, 2]);
        assert_eq!(
            doc.covering.unwrap(),
            CoveringSpec::validate(5, &[2, 3]).unwrap()
        );
    }

    #[test]
    fn comments_and_blank_lines() {
        let doc = parse_document("# hopf\n\n  plat 4   # strands\nword 2 2 # letters\n").unwrap();
        assert_eq!(doc.plat.unwrap().braid().letters(), &[2, 2]);
        let doc = parse_document("covering 3 1 -1\n").unwrap();
        assert_eq!(doc.covering.unwrap().coefficients(), &[1, 2]);
    }

    #[test]
    fn plat_without_word_is_empty() {
        let doc = parse_document("plat 6\n").unwrap();
        assert!(doc.plat.unwrap().braid().is_empty());
    }

    fn parse_err(text: &str) -> CliError {
        parse_document(text).unwrap_err()
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_err("plat 4\nword 5\n"),
            CliError::Parse { line: 2, .. }
        ));
        assert!(matches!(
            parse_err("plat 4\nword 0\n"),
            CliError::Parse { line: 2, .. }
        ));
        assert!(matches!(
            parse_err("plat 3\n"),
            CliError::Parse { line: 1, .. }
        ));
        assert!(matches!(
            parse_err("plat 4\nword 1 x\n"),
            CliError::Parse { line: 2, .. }
        ));
        assert!(matches!(
            parse_err("plat 4 4\n"),
            CliError::Parse { line: 1, .. }
        ));
        assert!(matches!(
            parse_err("plat 4\nplat 4\n"),
            CliError::Parse { line: 2, .. }
        ));
        assert!(matches!(
            parse_err("word 1\n"),
            CliError::Parse { line: 1, .. }
        ));
        assert!(matches!(
            parse_err("braid 1\n"),
            CliError::Parse { line: 1, .. }
        ));
        assert!(matches!(
            parse_err("covering 5\n"),
            CliError::Parse { line: 1, .. }
        ));
        assert!(matches!(parse_err("# nothing\n"), CliError::Parse { .. }));
        assert!(matches!(parse_err("covering 6 2 4\n"), CliError::Domain(_)));
        assert!(matches!(parse_err("covering 5 0\n"), CliError::Domain(_)));
        // Hopf link has two components
        assert!(matches!(
            parse_err("plat 4\nword 2 2\ncovering 5 1\n"),
            CliError::Domain(_)
        ));
    }

    #[test]
    fn emit_examples() {
        let doc = parse_document("plat 2\n").unwrap();
        assert_eq!(doc.emit(), "plat 2\nword\n");
        let doc = parse_document("covering 5 7 -2\nplat 4\nword 2 -2\n").unwrap();
        assert_eq!(doc.emit(), "plat 4\nword 2 -2\ncovering 5 2 3\n");
    }
}
