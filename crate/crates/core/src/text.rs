//! Line-oriented text formats for function tables and DNFs.
//!
//! Function file:
//!
//! ```text
//! # comment
//! k=3 n=3 mode=total default=0
//! 0 1 1 -> 1
//! 1 2 2 -> 1
//! ```
//!
//! In total mode unlisted points take the default (0 when omitted); in
//! partial mode they are undefined.
//!
//! DNF text is one term per line, e.g. `J{1}(x1)*J{2}(x2)*J{1,2}(x3)->1`,
//! with full factors omitted, `TRUE->g` for a term with no factors, and a
//! single `0` for the empty DNF.

use std::fmt::{self, Write as _};

use crate::conjunction::{Dnf, ElementaryConjunction};
use crate::error::{Error, Result};
use crate::function::{KFunction, PartialKFunction};
use crate::lattice::{Point, Space, ValueSet};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Total,
    Partial,
}

/// Syntactic content of a function file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionFile {
    pub space: Space,
    pub mode: Mode,
    /// Only meaningful in total mode.
    pub default: u8,
    /// Listed points, in file order.
    pub entries: Vec<(Point, u8)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParsedFunction {
    Total(KFunction),
    Partial(PartialKFunction),
}

impl ParsedFunction {
    pub fn space(&self) -> Space {
        match self {
            ParsedFunction::Total(f) => f.space(),
            ParsedFunction::Partial(f) => f.space(),
        }
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_int(line: usize, what: &str, s: &str) -> Result<usize> {
    s.parse::<usize>().map_err(|_| parse_err(line, format!("{what}: expected an integer, found {s:?}")))
}

impl FunctionFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let Some((hline, header)) = lines.next() else {
            return Err(parse_err(1, "missing header line"));
        };

        let (mut k, mut n, mut mode, mut default) = (None, None, None, None);
        for token in header.split_whitespace() {
            let Some((key, value)) = token.split_once('=') else {
                return Err(parse_err(hline, format!("malformed header field {token:?}")));
            };
            let slot_taken = match key {
                "k" => k.replace(parse_int(hline, "k", value)?).is_some(),
                "n" => n.replace(parse_int(hline, "n", value)?).is_some(),
                "default" => default.replace(parse_int(hline, "default", value)?).is_some(),
                "mode" => mode
                    .replace(match value {
                        "total" => Mode::Total,
                        "partial" => Mode::Partial,
                        other => return Err(parse_err(hline, format!("unknown mode {other:?}"))),
                    })
                    .is_some(),
                other => return Err(parse_err(hline, format!("unknown header field {other:?}"))),
            };
            if slot_taken {
                return Err(parse_err(hline, format!("header field {key:?} given twice")));
            }
        }
        let k = k.ok_or_else(|| parse_err(hline, "header is missing k="))?;
        let n = n.ok_or_else(|| parse_err(hline, "header is missing n="))?;
        let mode = mode.ok_or_else(|| parse_err(hline, "header is missing mode="))?;
        let space = match Space::new(k, n) {
            Ok(s) => s,
            Err(e @ Error::Capacity(_)) => return Err(e),
            Err(e) => return Err(parse_err(hline, e.to_string())),
        };
        if mode == Mode::Partial && default.is_some() {
            return Err(parse_err(hline, "default= is only allowed in total mode"));
        }
        let default = match default {
            Some(d) if d >= k => return Err(parse_err(hline, format!("default {d} is not below k={k}"))),
            Some(d) => d as u8,
            None => 0,
        };

        let mut seen = vec![false; space.size()];
        let mut entries = Vec::new();
        for (lineno, line) in lines {
            let Some((lhs, rhs)) = line.split_once("->") else {
                return Err(parse_err(lineno, "expected `x1 ... xn -> value`"));
            };
            let coords = lhs
                .split_whitespace()
                .map(|c| {
                    let c = parse_int(lineno, "coordinate", c)?;
                    if c >= k {
                        return Err(parse_err(lineno, format!("coordinate {c} is not below k={k}")));
                    }
                    Ok(c as u8)
                })
                .collect::<Result<Vec<u8>>>()?;
            if coords.len() != n {
                return Err(parse_err(lineno, format!("expected {n} coordinates, found {}", coords.len())));
            }
            let value = parse_int(lineno, "value", rhs.trim())?;
            if value >= k {
                return Err(parse_err(lineno, format!("value {value} is not below k={k}")));
            }
            let p = Point::new(coords);
            let idx = space.encode(&p).expect("coordinates validated");
            if std::mem::replace(&mut seen[idx], true) {
                return Err(parse_err(lineno, format!("duplicate point {p}")));
            }
            entries.push((p, value as u8));
        }
        Ok(FunctionFile { space, mode, default, entries })
    }

    pub fn to_function(&self) -> ParsedFunction {
        match self.mode {
            Mode::Total => {
                let mut table = vec![self.default; self.space.size()];
                for (p, v) in &self.entries {
                    table[self.space.encode(p).expect("validated")] = *v;
                }
                ParsedFunction::Total(KFunction::new(self.space, table).expect("validated"))
            }
            Mode::Partial => {
                let mut table = vec![None; self.space.size()];
                for (p, v) in &self.entries {
                    table[self.space.encode(p).expect("validated")] = Some(*v);
                }
                ParsedFunction::Partial(PartialKFunction::from_table(self.space, table).expect("validated"))
            }
        }
    }

    /// Canonical file for a total function: points equal to `default` are
    /// omitted, the rest listed in index order.
    pub fn from_total(f: &KFunction, default: u8) -> Self {
        let space = f.space();
        let entries = space.points().zip(f.table()).filter(|(_, &v)| v != default).map(|(p, &v)| (p, v)).collect();
        FunctionFile { space, mode: Mode::Total, default, entries }
    }

    pub fn from_partial(f: &PartialKFunction) -> Self {
        let space = f.space();
        let entries = space.points().zip(f.table()).filter_map(|(p, v)| v.map(|v| (p, v))).collect();
        FunctionFile { space, mode: Mode::Partial, default: 0, entries }
    }

    /// Same content with body lines sorted by point.
    pub fn canonical(&self) -> Self {
        let mut entries = self.entries.clone();
        entries.sort();
        FunctionFile { entries, ..self.clone() }
    }
}

impl fmt::Display for FunctionFile {
    /// Body lines are written in their stored order; use [`FunctionFile::canonical`]
    /// first for sorted output.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={} n={} mode=", self.space.k(), self.space.n())?;
        match self.mode {
            Mode::Total if self.default != 0 => write!(f, "total default={}", self.default)?,
            Mode::Total => f.write_str("total")?,
            Mode::Partial => f.write_str("partial")?,
        }
        f.write_char('\n')?;
        for (p, v) in &self.entries {
            for (i, c) in p.coords().iter().enumerate() {
                if i > 0 {
                    f.write_char(' ')?;
                }
                write!(f, "{c}")?;
            }
            writeln!(f, " -> {v}")?;
        }
        Ok(())
    }
}

pub fn parse_function(text: &str) -> Result<ParsedFunction> {
    Ok(FunctionFile::parse(text)?.to_function())
}

/// One term per line in canonical order; `0` for the empty DNF.
pub fn print_dnf(d: &Dnf) -> String {
    if d.is_empty() {
        return "0\n".to_string();
    }
    let mut out = String::new();
    for t in d.canonical().terms() {
        writeln!(out, "{t}").expect("writing to a String");
    }
    out
}

fn parse_factor(line: usize, space: Space, s: &str) -> Result<(usize, ValueSet)> {
    let bad = || parse_err(line, format!("malformed factor {s:?}, expected J{{v,...}}(xi)"));
    let rest = s.strip_prefix("J{").ok_or_else(bad)?;
    let (values, rest) = rest.split_once('}').ok_or_else(bad)?;
    let var = rest.strip_prefix("(x").and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
    let var = parse_int(line, "variable", var)?;
    if var == 0 || var > space.n() {
        return Err(parse_err(line, format!("variable x{var} outside x1..x{}", space.n())));
    }
    let mut set = ValueSet::EMPTY;
    for v in values.split(',') {
        let v = parse_int(line, "factor value", v.trim())?;
        if v >= space.alphabet().size() {
            return Err(parse_err(line, format!("factor value {v} is not below k={}", space.k())));
        }
        set = set.with(v as u8);
    }
    Ok((var - 1, set))
}

fn parse_term_at(line: usize, space: Space, s: &str) -> Result<ElementaryConjunction> {
    let (lhs, rhs) = s.split_once("->").ok_or_else(|| parse_err(line, format!("term {s:?} is missing `->gamma`")))?;
    let gamma = parse_int(line, "gamma", rhs.trim())?;
    let mut factors = vec![space.alphabet().full(); space.n()];
    let lhs = lhs.trim();
    if lhs != "TRUE" {
        let mut given = vec![false; space.n()];
        for part in lhs.split('*') {
            let (var, set) = parse_factor(line, space, part.trim())?;
            if std::mem::replace(&mut given[var], true) {
                return Err(parse_err(line, format!("variable x{} appears twice", var + 1)));
            }
            factors[var] = set;
        }
    }
    if gamma >= space.alphabet().size() {
        return Err(parse_err(line, format!("gamma {gamma} is not below k={}", space.k())));
    }
    ElementaryConjunction::from_factors(space.alphabet(), factors, gamma as u8)
        .map_err(|e| parse_err(line, e.to_string()))
}

pub fn parse_term(s: &str, space: Space) -> Result<ElementaryConjunction> {
    parse_term_at(1, space, s.trim())
}

pub fn parse_dnf(text: &str, space: Space) -> Result<Dnf> {
    let lines: Vec<(usize, &str)> = content_lines(text).collect();
    if let [(_, "0")] = lines.as_slice() {
        return Ok(Dnf::empty(space));
    }
    let terms =
        lines.into_iter().map(|(lineno, line)| parse_term_at(lineno, space, line)).collect::<Result<Vec<_>>>()?;
    Dnf::new(space, terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = "k=3 n=3 mode=total\n0 1 1 -> 1\n1 1 1 -> 1\n1 2 1 -> 1\n2 1 1 -> 1\n1 2 2 -> 1\n";

    #[test]
    fn parses_worked_example() {
        let ParsedFunction::Total(f) = parse_function(EXAMPLE).unwrap() else { panic!("total expected") };
        assert_eq!(f.support().len(), 5);
        assert_eq!(f.get(&Point::from([1, 2, 2])).unwrap(), 1);
        assert_eq!(f.get(&Point::from([2, 2, 2])).unwrap(), 0);
    }

    #[test]
    fn header_only_is_constant_default() {
        let ParsedFunction::Total(f) = parse_function("k=2 n=1 mode=total\n").unwrap() else { panic!() };
        assert!(f.is_zero());
        let ParsedFunction::Total(g) = parse_function("k=3 n=2 mode=total default=2\n0 0 -> 0\n").unwrap() else {
            panic!()
        };
        assert_eq!(g.support().len(), 8);
    }

    #[test]
    fn partial_mode() {
        let ParsedFunction::Partial(f) = parse_function("k=3 n=1 mode=partial\n0 -> 0\n2 -> 1\n").unwrap() else {
            panic!()
        };
        assert_eq!(f.table(), &[Some(0), None, Some(1)]);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# header next\n\nk=2 n=2 mode=total # trailing\n\n1 1 -> 1 # corner\n";
        let ParsedFunction::Total(f) = parse_function(text).unwrap() else { panic!() };
        assert_eq!(f.support().len(), 1);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let cases = [
            ("", 1),
            ("k=3 n=1\n", 1),
            ("k=3 n=1 mode=sometimes\n", 1),
            ("k=3 n=1 mode=total\n0 -> 3\n", 2),
            ("k=3 n=1 mode=total\n\n3 -> 1\n", 3),
            ("k=3 n=1 mode=total\n1 -> 1\n1 -> 2\n", 3),
            ("k=3 n=2 mode=total\n1 -> 1\n", 2),
            ("k=3 n=1 mode=partial default=1\n", 1),
            ("k=3 n=1 mode=total\n1 = 1\n", 2),
        ];
        for (text, line) in cases {
            match parse_function(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
        assert!(matches!(parse_function("k=2 n=30 mode=total\n"), Err(Error::Capacity(_))));
    }

    #[test]
    fn canonical_print() {
        let file = FunctionFile::parse("k=3 n=2 mode=total\n2 0 -> 1\n0 1 -> 2\n").unwrap();
        assert_eq!(file.canonical().to_string(), "k=3 n=2 mode=total\n0 1 -> 2\n2 0 -> 1\n");
    }

    #[test]
    fn dnf_text() {
        let s = Space::new(3, 3).unwrap();
        let d = parse_dnf("J{1}(x2)*J{1}(x3)->1\nJ{1}(x1)*J{2}(x2)*J{1,2}(x3)->1\n", s).unwrap();
        assert_eq!(print_dnf(&d), "J{1}(x1)*J{2}(x2)*J{1,2}(x3)->1\nJ{1}(x2)*J{1}(x3)->1\n");
        assert_eq!(print_dnf(&Dnf::empty(s)), "0\n");
        assert!(parse_dnf("0\n", s).unwrap().is_empty());
        let top = parse_term("TRUE->2", s).unwrap();
        assert_eq!(top.to_string(), "TRUE->2");
        assert_eq!(parse_term("J{0,1,2}(x1)->1", s).unwrap().to_string(), "TRUE->1");
    }

    #[test]
    fn bad_terms() {
        let s = Space::new(3, 2).unwrap();
        for bad in ["J{1}(x3)->1", "J{3}(x1)->1", "J{1}(x1)*J{2}(x1)->1", "J{1}(x1)->0", "J{1}(x1)", "K{1}(x1)->1"] {
            assert!(matches!(parse_term(bad, s), Err(Error::Parse { .. })), "{bad}");
        }
    }
}
