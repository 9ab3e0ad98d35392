//! Text file formats.
//!
//! Representation files:
//!
//! ```text
//! kind: orthogonal
//! n: 2
//! m: 0
//! k: 2
//! labels: 1 2 1* 2*
//! 0 2 1 0
//! -2 0 0 1
//! ```
//!
//! Basis-collection files carry `n:` and `k:` headers followed by one basis
//! per line in element syntax (`-` denotes the empty set). Sign-map files
//! carry an `n:` header followed by `<sign> <elements>` lines. Lines
//! starting with `#` are comments everywhere. Rationals are written `p/q`
//! or as bare integers.

use std::fmt;

use thiserror::Error;

use crate::ground::{AdmissibleSet, Element};
use crate::linalg::{Matrix, Rat};
use crate::orient::SignMap;
use crate::repr::{BasisCollection, Kind, Label, Representation};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

/// Numbered, non-comment, non-blank lines.
fn content_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect()
}

fn header_value<'a>(
    lines: &mut std::slice::Iter<'_, (usize, &'a str)>,
    key: &str,
) -> Result<(usize, &'a str), ParseError> {
    match lines.next() {
        Some(&(no, line)) => match line.strip_prefix(key) {
            Some(rest) => Ok((no, rest.trim())),
            None => Err(ParseError::new(
                no,
                format!("expected header {key:?}, found {line:?}"),
            )),
        },
        None => Err(ParseError::new(0, format!("missing header {key:?}"))),
    }
}

fn parse_int(no: usize, text: &str, what: &str) -> Result<u32, ParseError> {
    text.parse()
        .map_err(|_| ParseError::new(no, format!("cannot parse {what} from {text:?}")))
}

fn parse_elements(no: usize, text: &str) -> Result<Vec<Element>, ParseError> {
    if text == "-" {
        return Ok(Vec::new());
    }
    text.split_whitespace()
        .map(|tok| {
            tok.parse::<Element>()
                .map_err(|e| ParseError::new(no, e.to_string()))
        })
        .collect()
}

pub fn parse_representation(text: &str) -> Result<Representation, ParseError> {
    let lines = content_lines(text);
    let mut it = lines.iter();
    let (no, kind) = header_value(&mut it, "kind:")?;
    let kind: Kind = kind.parse().map_err(|e: String| ParseError::new(no, e))?;
    let (no, n) = header_value(&mut it, "n:")?;
    let n = parse_int(no, n, "n")?;
    let (no, m) = header_value(&mut it, "m:")?;
    let m = parse_int(no, m, "m")?;
    let (no, k) = header_value(&mut it, "k:")?;
    let k = parse_int(no, k, "k")? as usize;
    let (no, labels_text) = header_value(&mut it, "labels:")?;
    if n == 0 || n > 63 {
        return Err(ParseError::new(no, "n must be between 1 and 63"));
    }

    let mut labels = Vec::new();
    for tok in labels_text.split_whitespace() {
        if tok.ends_with('*') {
            let e: Element = tok
                .parse()
                .map_err(|e: crate::ground::GroundError| ParseError::new(no, e.to_string()))?;
            labels.push(Label::J(e));
        } else {
            let v = parse_int(no, tok, "label")?;
            if v >= 1 && v <= n {
                labels.push(Label::J(Element::unstarred(v)));
            } else if v > 2 * n && v <= 2 * n + m {
                labels.push(Label::Extra(v));
            } else {
                return Err(ParseError::new(no, format!("label {tok:?} out of range")));
            }
        }
    }

    let mut rows = Vec::with_capacity(k);
    let mut last_line = no;
    for _ in 0..k {
        let Some(&(no, line)) = it.next() else {
            return Err(ParseError::new(
                last_line,
                format!("expected {k} matrix rows"),
            ));
        };
        last_line = no;
        let row: Result<Vec<Rat>, ParseError> = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<Rat>()
                    .map_err(|_| ParseError::new(no, format!("cannot parse rational {tok:?}")))
            })
            .collect();
        let row = row?;
        if row.len() != (2 * n + m) as usize {
            return Err(ParseError::new(
                no,
                format!("row has {} entries, expected {}", row.len(), 2 * n + m),
            ));
        }
        rows.push(row);
    }
    if let Some(&(no, line)) = it.next() {
        return Err(ParseError::new(
            no,
            format!("unexpected trailing line {line:?}"),
        ));
    }
    let mat = if rows.is_empty() {
        Matrix::zeros(0, (2 * n + m) as usize)
    } else {
        Matrix::from_rows(rows)
    };
    Representation::new(kind, n, m, mat, labels)
        .map_err(|e| ParseError::new(last_line, e.to_string()))
}

pub fn representation_to_text(rep: &Representation) -> String {
    let mut out = String::new();
    out.push_str(&format!("kind: {}\n", rep.kind()));
    out.push_str(&format!("n: {}\n", rep.ground()));
    out.push_str(&format!("m: {}\n", rep.extra()));
    out.push_str(&format!("k: {}\n", rep.rank()));
    let labels: Vec<String> = rep.labels().iter().map(|l| l.to_string()).collect();
    out.push_str(&format!("labels: {}\n", labels.join(" ")));
    out.push_str(&rep.matrix().to_string());
    out
}

pub fn parse_basis_collection(text: &str) -> Result<BasisCollection, ParseError> {
    let lines = content_lines(text);
    let mut it = lines.iter();
    let (no, n) = header_value(&mut it, "n:")?;
    let n = parse_int(no, n, "n")?;
    let (no, k) = header_value(&mut it, "k:")?;
    let k = parse_int(no, k, "k")? as usize;
    if n == 0 || n > 63 {
        return Err(ParseError::new(no, "n must be between 1 and 63"));
    }
    let mut sets = Vec::new();
    let mut last_line = no;
    for &(no, line) in it {
        last_line = no;
        let elements = parse_elements(no, line)?;
        let set = AdmissibleSet::from_elements(n, elements)
            .map_err(|e| ParseError::new(no, e.to_string()))?;
        if set.len() != k {
            return Err(ParseError::new(
                no,
                format!("basis has {} elements, expected {}", set.len(), k),
            ));
        }
        sets.push(set);
    }
    BasisCollection::new(n, k, sets).map_err(|e| ParseError::new(last_line, e.to_string()))
}

pub fn basis_collection_to_text(b: &BasisCollection) -> String {
    format!("n: {}\nk: {}\n{}", b.ground(), b.rank(), b)
}

pub fn parse_sign_map(text: &str) -> Result<SignMap, ParseError> {
    let lines = content_lines(text);
    let mut it = lines.iter();
    let (no, n) = header_value(&mut it, "n:")?;
    let n = parse_int(no, n, "n")?;
    if n == 0 || n > 63 {
        return Err(ParseError::new(no, "n must be between 1 and 63"));
    }
    let mut signs = std::collections::BTreeMap::new();
    for &(no, line) in it {
        let mut parts = line.splitn(2, char::is_whitespace);
        let sign = match parts.next() {
            Some("+") => 1i8,
            Some("-") => -1,
            other => {
                return Err(ParseError::new(
                    no,
                    format!("expected sign + or -, found {other:?}"),
                ))
            }
        };
        let rest = parts.next().unwrap_or("").trim();
        if rest.is_empty() {
            return Err(ParseError::new(no, "expected elements after the sign"));
        }
        let elements = parse_elements(no, rest)?;
        let set = AdmissibleSet::from_elements(n, elements)
            .map_err(|e| ParseError::new(no, e.to_string()))?;
        if signs.insert(set.delta_mask(), sign).is_some() {
            return Err(ParseError::new(
                no,
                "two support sets share the same unstarred part",
            ));
        }
    }
    SignMap::from_delta_signs(n, signs).map_err(|e| ParseError::new(0, e.to_string()))
}

pub fn sign_map_to_text(p: &SignMap) -> String {
    format!(
        "n: {}\n# sign convention: lexicographically least supported set is +\n{}",
        p.ground(),
        p
    )
}

/// Any of the three file formats, sniffed by header: `kind:` marks a
/// representation, a `k:` header marks a basis collection, anything else
/// with an `n:` header is a sign map.
#[derive(Debug, Clone)]
pub enum InputFile {
    Representation(Representation),
    Bases(BasisCollection),
    Signs(SignMap),
}

impl fmt::Display for InputFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            InputFile::Representation(_) => "representation",
            InputFile::Bases(_) => "basis collection",
            InputFile::Signs(_) => "sign map",
        };
        write!(f, "{name}")
    }
}

pub fn parse_any(text: &str) -> Result<InputFile, ParseError> {
    let lines = content_lines(text);
    if lines.iter().any(|(_, l)| l.starts_with("kind:")) {
        return Ok(InputFile::Representation(parse_representation(text)?));
    }
    if lines.iter().any(|(_, l)| l.starts_with("k:")) {
        return Ok(InputFile::Bases(parse_basis_collection(text)?));
    }
    Ok(InputFile::Signs(parse_sign_map(text)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repr::{generate_random_isotropic, Kind};

    #[test]
    fn representation_round_trip() {
        for (n, m, kind, seed) in [
            (1, 1, Kind::General, 0u64),
            (2, 0, Kind::Orthogonal, 1),
            (3, 2, Kind::General, 2),
            (2, 0, Kind::Symplectic, 3),
        ] {
            let rep = generate_random_isotropic(n, m, kind, seed);
            let text = representation_to_text(&rep);
            let back = parse_representation(&text).unwrap();
            assert_eq!(back, rep);
        }
    }

    #[test]
    fn representation_parse_errors_carry_line_numbers() {
        let bad = "kind: orthogonal\nn: 2\nm: 0\nk: 2\nlabels: 1 2 1* 2*\n0 2 1 0\n-2 x 0 1\n";
        let err = parse_representation(bad).unwrap_err();
        assert_eq!(err.line, 7);
        assert!(err.message.contains("x"));

        let short = "kind: orthogonal\nn: 2\nm: 0\nk: 2\nlabels: 1 2 1* 2*\n0 2 1 0\n";
        let err = parse_representation(short).unwrap_err();
        assert!(err.message.contains("expected 2 matrix rows"));

        let bad_header = "n: 2\nkind: orthogonal\n";
        let err = parse_representation(bad_header).unwrap_err();
        assert_eq!(err.line, 1);
    }

    #[test]
    fn basis_collection_round_trip() {
        let text = "n: 2\nk: 2\n1 2\n1* 2*\n";
        let b = parse_basis_collection(text).unwrap();
        assert_eq!(b.len(), 2);
        assert_eq!(basis_collection_to_text(&b), text);

        // Empty set syntax for rank 0.
        let zero = "n: 1\nk: 0\n-\n";
        let b = parse_basis_collection(zero).unwrap();
        assert_eq!(b.rank(), 0);
        assert_eq!(basis_collection_to_text(&b), zero);

        let bad = "n: 2\nk: 2\n1 1*\n";
        let err = parse_basis_collection(bad).unwrap_err();
        assert_eq!(err.line, 3);
    }

    #[test]
    fn sign_map_round_trip() {
        let text = "n: 2\n+ 1 2\n- 1* 2*\n";
        let p = parse_sign_map(text).unwrap();
        let back = parse_sign_map(&sign_map_to_text(&p)).unwrap();
        assert_eq!(p, back);

        let dup = "n: 2\n+ 1 2\n- 1 2\n";
        assert!(parse_sign_map(dup).is_err());
    }

    #[test]
    fn sniffing() {
        assert!(matches!(
            parse_any("kind: orthogonal\nn: 1\nm: 0\nk: 1\nlabels: 1 1*\n1 0\n"),
            Ok(InputFile::Representation(_))
        ));
        assert!(matches!(
            parse_any("n: 1\nk: 1\n1\n"),
            Ok(InputFile::Bases(_))
        ));
        assert!(matches!(parse_any("n: 1\n+ 1\n"), Ok(InputFile::Signs(_))));
    }
}
