//! Line-oriented text formats for posets and explicit structure tables.
//!
//! ```text
//! format-version: 1
//! elements: 0 a a' 1
//! covers:
//!   0 a
//!   ...
//! complement:
//!   0 1
//!   a a'
//! bounds: 0 1
//! ```
//!
//! `#` starts a comment. Block sections hold one indented entry per line.

use crate::complemented::ComplementedPoset;
use crate::dual::DualStructure;
use crate::error::{Error, Result};
use crate::operator::OperatorStructure;
use crate::poset::{BoundedPoset, FinitePoset};
use crate::set::ElemSet;
use crate::sheffer::ShefferStructure;
use crate::table::Table;

pub const FORMAT_VERSION: u32 = 1;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

#[derive(Debug)]
struct Section {
    key: String,
    line: usize,
    value: String,
    entries: Vec<(usize, String)>,
}

fn sections(text: &str) -> Result<Vec<Section>> {
    let mut out: Vec<Section> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        if content.starts_with([' ', '\t']) {
            let last = out
                .last_mut()
                .ok_or_else(|| parse_err(line, "indented entry before any section"))?;
            last.entries.push((line, content.trim().to_string()));
            continue;
        }
        let (key, value) = content
            .split_once(':')
            .ok_or_else(|| parse_err(line, format!("expected `key: value`, got `{}`", content.trim())))?;
        let key = key.trim().to_string();
        if out.iter().any(|s| s.key == key) {
            return Err(parse_err(line, format!("duplicate section `{key}`")));
        }
        out.push(Section {
            key,
            line,
            value: value.trim().to_string(),
            entries: Vec::new(),
        });
    }
    Ok(out)
}

struct Sections(Vec<Section>);

impl Sections {
    fn get(&self, key: &str) -> Option<&Section> {
        self.0.iter().find(|s| s.key == key)
    }

    fn require(&self, key: &str) -> Result<&Section> {
        self.get(key).ok_or_else(|| parse_err(0, format!("missing `{key}` section")))
    }

    fn check_known(&self, known: &[&str]) -> Result<()> {
        match self.0.iter().find(|s| !known.contains(&s.key.as_str())) {
            Some(s) => Err(parse_err(s.line, format!("unknown section `{}`", s.key))),
            None => Ok(()),
        }
    }

    fn check_version(&self) -> Result<()> {
        let s = self.require("format-version")?;
        match s.value.parse::<u32>() {
            Ok(FORMAT_VERSION) => Ok(()),
            _ => Err(parse_err(s.line, format!("unsupported format version `{}`", s.value))),
        }
    }

    fn elements(&self) -> Result<(Vec<String>, usize)> {
        let s = self.require("elements")?;
        let names: Vec<String> = s.value.split_whitespace().map(str::to_string).collect();
        if names.is_empty() {
            return Err(parse_err(s.line, "empty element list"));
        }
        Ok((names, s.line))
    }

    /// Entries of a block section split into words.
    fn rows(&self, key: &str) -> Vec<(usize, Vec<&str>)> {
        self.get(key)
            .map(|s| s.entries.iter().map(|(l, e)| (*l, e.split_whitespace().collect())).collect())
            .unwrap_or_default()
    }
}

fn lookup(names: &[String], line: usize, name: &str) -> Result<usize> {
    names
        .iter()
        .position(|n| n == name)
        .ok_or_else(|| parse_err(line, format!("unknown element `{name}`")))
}

fn pair<'a>(line: usize, words: &[&'a str]) -> Result<(&'a str, &'a str)> {
    match words {
        [a, b] => Ok((a, b)),
        _ => Err(parse_err(line, format!("expected two names, got `{}`", words.join(" ")))),
    }
}

/// A poset with an optional complementation and optional declared bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetFile {
    pub poset: FinitePoset,
    pub complement: Option<Vec<usize>>,
    pub bounds: Option<(usize, usize)>,
}

impl PosetFile {
    pub fn from_poset(poset: FinitePoset) -> Self {
        let bounds = poset.bounds();
        PosetFile { poset, complement: None, bounds }
    }

    pub fn from_complemented(p: &ComplementedPoset) -> Self {
        PosetFile {
            poset: p.poset().clone(),
            complement: Some(p.complementation().to_vec()),
            bounds: Some((p.bottom(), p.top())),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let secs = Sections(sections(text)?);
        secs.check_known(&["format-version", "elements", "covers", "complement", "bounds"])?;
        secs.check_version()?;
        let (names, names_line) = secs.elements()?;
        let mut covers = Vec::new();
        for (line, words) in secs.rows("covers") {
            let (a, b) = pair(line, &words)?;
            covers.push((lookup(&names, line, a)?, lookup(&names, line, b)?));
        }
        let poset = FinitePoset::from_cover_indices(check_unique(names, names_line)?, covers).map_err(|e| match e {
            Error::CycleDetected(..) => parse_err(secs.require("covers").map(|s| s.line).unwrap_or(0), e.to_string()),
            e => e,
        })?;

        let bounds = match secs.get("bounds") {
            None => None,
            Some(s) => {
                let words: Vec<&str> = s.value.split_whitespace().collect();
                let (a, b) = pair(s.line, &words)?;
                let declared = (lookup(poset.names(), s.line, a)?, lookup(poset.names(), s.line, b)?);
                if poset.bounds() != Some(declared) {
                    return Err(parse_err(s.line, format!("`{a}` and `{b}` are not the bottom and top")));
                }
                Some(declared)
            }
        };

        let complement = match secs.get("complement") {
            None => None,
            Some(s) => {
                let mut comp = vec![usize::MAX; poset.len()];
                for (line, words) in secs.rows("complement") {
                    let (a, b) = pair(line, &words)?;
                    let (x, y) = (lookup(poset.names(), line, a)?, lookup(poset.names(), line, b)?);
                    for (u, v) in [(x, y), (y, x)] {
                        if comp[u] != usize::MAX && comp[u] != v {
                            return Err(parse_err(line, format!("`{}` has two complements", poset.name(u))));
                        }
                        comp[u] = v;
                    }
                }
                if let Some(x) = comp.iter().position(|&c| c == usize::MAX) {
                    return Err(parse_err(s.line, format!("no complement given for `{}`", poset.name(x))));
                }
                let bounded = BoundedPoset::new(poset.clone()).map_err(|e| parse_err(s.line, e.to_string()))?;
                ComplementedPoset::new(bounded, comp.clone()).map_err(|e| parse_err(s.line, e.to_string()))?;
                Some(comp)
            }
        };
        Ok(PosetFile { poset, complement, bounds })
    }

    /// Canonical text: Hasse covers sorted by index, complement pairs lower index first.
    pub fn to_text(&self) -> String {
        let p = &self.poset;
        let mut out = format!("format-version: {FORMAT_VERSION}\nelements: {}\n", p.names().join(" "));
        let mut covers = p.hasse();
        covers.sort_unstable();
        out.push_str("covers:\n");
        for (a, b) in covers {
            out.push_str(&format!("  {} {}\n", p.name(a), p.name(b)));
        }
        if let Some(comp) = &self.complement {
            out.push_str("complement:\n");
            for (x, &y) in comp.iter().enumerate().filter(|&(x, &y)| x <= y) {
                out.push_str(&format!("  {} {}\n", p.name(x), p.name(y)));
            }
        }
        if let Some((b, t)) = self.bounds {
            out.push_str(&format!("bounds: {} {}\n", p.name(b), p.name(t)));
        }
        out
    }

    pub fn bounded(&self) -> Result<BoundedPoset> {
        BoundedPoset::new(self.poset.clone())
    }

    pub fn complemented(&self) -> Result<ComplementedPoset> {
        let comp = self.complement.clone().ok_or(Error::MissingComplement)?;
        ComplementedPoset::new(self.bounded()?, comp)
    }
}

fn check_unique(names: Vec<String>, line: usize) -> Result<Vec<String>> {
    for (i, n) in names.iter().enumerate() {
        if names[..i].contains(n) {
            return Err(parse_err(line, format!("duplicate element `{n}`")));
        }
    }
    Ok(names)
}

/// An explicit operation-table structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructureFile {
    Operator(OperatorStructure),
    Sheffer(ShefferStructure),
    Dual(DualStructure),
}

impl StructureFile {
    pub fn kind(&self) -> &'static str {
        match self {
            StructureFile::Operator(_) => "operator",
            StructureFile::Sheffer(_) => "sheffer",
            StructureFile::Dual(_) => "dual",
        }
    }

    pub fn names(&self) -> &[String] {
        match self {
            StructureFile::Operator(s) => &s.names,
            StructureFile::Sheffer(s) => &s.names,
            StructureFile::Dual(s) => &s.names,
        }
    }

    /// True when the text looks like a structure file rather than a poset file.
    pub fn sniff(text: &str) -> bool {
        text.lines().any(|l| l.trim_start().starts_with("kind:"))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let secs = Sections(sections(text)?);
        secs.check_version()?;
        let kind = secs.require("kind")?;
        let (names, names_line) = secs.elements()?;
        let names = check_unique(names, names_line)?;
        if names.len() > crate::set::MAX_ELEMENTS {
            return Err(Error::TooManyElements(names.len()));
        }
        let constant = |key: &str| -> Result<usize> {
            let s = secs.require(key)?;
            lookup(&names, s.line, &s.value)
        };
        let table = |key: &str| -> Result<Table> { parse_table(&names, &secs, key) };
        Ok(match kind.value.as_str() {
            "operator" => {
                secs.check_known(&["format-version", "kind", "elements", "zero", "one", "join", "meet"])?;
                StructureFile::Operator(OperatorStructure {
                    join: table("join")?,
                    meet: table("meet")?,
                    zero: constant("zero")?,
                    one: constant("one")?,
                    names,
                })
            }
            "sheffer" => {
                secs.check_known(&["format-version", "kind", "elements", "stroke"])?;
                StructureFile::Sheffer(ShefferStructure { stroke: table("stroke")?, names })
            }
            "dual" => {
                secs.check_known(&["format-version", "kind", "elements", "zero", "one", "plus", "times"])?;
                StructureFile::Dual(DualStructure {
                    plus: table("plus")?,
                    times: table("times")?,
                    zero: constant("zero")?,
                    one: constant("one")?,
                    names,
                })
            }
            other => return Err(parse_err(kind.line, format!("unknown structure kind `{other}`"))),
        })
    }

    pub fn to_text(&self) -> String {
        let names = self.names();
        let mut out = format!(
            "format-version: {FORMAT_VERSION}\nkind: {}\nelements: {}\n",
            self.kind(),
            names.join(" ")
        );
        let constants = |out: &mut String, zero: usize, one: usize| {
            out.push_str(&format!("zero: {}\none: {}\n", names[zero], names[one]));
        };
        match self {
            StructureFile::Operator(s) => {
                constants(&mut out, s.zero, s.one);
                write_table(&mut out, names, "join", &s.join);
                write_table(&mut out, names, "meet", &s.meet);
            }
            StructureFile::Sheffer(s) => write_table(&mut out, names, "stroke", &s.stroke),
            StructureFile::Dual(s) => {
                constants(&mut out, s.zero, s.one);
                write_table(&mut out, names, "plus", &s.plus);
                write_table(&mut out, names, "times", &s.times);
            }
        }
        out
    }
}

fn parse_table(names: &[String], secs: &Sections, key: &str) -> Result<Table> {
    let header = secs.require(key)?.line;
    let n = names.len();
    let mut seen = vec![false; n * n];
    let mut t = Table::from_fn(n, |_, _| ElemSet::EMPTY);
    for (line, words) in secs.rows(key) {
        let (x, y, result) = match words.as_slice() {
            [x, y, "=", rest @ ..] if !rest.is_empty() => (x, y, rest),
            _ => return Err(parse_err(line, "expected `x y = r1 r2 ...`")),
        };
        let (x, y) = (lookup(names, line, x)?, lookup(names, line, y)?);
        if std::mem::replace(&mut seen[x * n + y], true) {
            return Err(parse_err(line, format!("duplicate entry for `{} {}`", names[x], names[y])));
        }
        let mut cell = ElemSet::EMPTY;
        if result != ["{}"] {
            for r in result {
                cell.insert(lookup(names, line, r)?);
            }
        }
        t.set(x, y, cell);
    }
    if let Some(i) = seen.iter().position(|s| !s) {
        return Err(parse_err(header, format!("`{key}` has no entry for `{} {}`", names[i / n], names[i % n])));
    }
    Ok(t)
}

fn write_table(out: &mut String, names: &[String], key: &str, t: &Table) {
    out.push_str(key);
    out.push_str(":\n");
    for x in 0..t.size() {
        for y in 0..t.size() {
            let cell = t.get(x, y);
            let rendered = if cell.is_empty() {
                "{}".to_string()
            } else {
                cell.iter().map(|z| names[z].as_str()).collect::<Vec<_>>().join(" ")
            };
            out.push_str(&format!("  {} {} = {}\n", names[x], names[y], rendered));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::operator::structure_from_poset;
    use crate::poset::Order;

    #[test]
    fn fixtures_roundtrip_byte_identical() {
        for (name, text) in fixtures::TEXTS {
            let parsed = PosetFile::parse(text).unwrap();
            assert_eq!(parsed.to_text(), *text, "{name}");
        }
    }

    #[test]
    fn comments_and_blank_lines() {
        let f = PosetFile::parse("# chain\nformat-version: 1\n\nelements: x y  # two\ncovers:\n  x y\n").unwrap();
        assert_eq!(f.poset.len(), 2);
        assert_eq!(f.bounds, None);
        assert!(f.poset.leq(0, 1));
    }

    #[test]
    fn parse_errors() {
        let bad = [
            "elements: a b\n",
            "format-version: 2\nelements: a\n",
            "format-version: 1\nelements: a a\n",
            "format-version: 1\nelements: a b\ncovers:\n  a c\n",
            "format-version: 1\nelements: a b\ncovers:\n  a b\n  b a\n",
            "format-version: 1\nelements: a b\ncovers:\n  a b\nbounds: b a\n",
            "format-version: 1\nelements: a b\nwhat: 1\n",
            "format-version: 1\nelements: a b c\ncovers:\n  a b\n  b c\ncomplement:\n  a c\n",
        ];
        for text in bad {
            assert!(matches!(PosetFile::parse(text), Err(Error::Parse { .. })), "{text}");
        }
    }

    #[test]
    fn missing_complement() {
        assert_eq!(fixtures::figure1().complemented().unwrap_err(), Error::MissingComplement);
    }

    #[test]
    fn structure_roundtrip() {
        let op = structure_from_poset(&fixtures::figure2().poset).unwrap();
        let file = StructureFile::Operator(op);
        let text = file.to_text();
        assert!(StructureFile::sniff(&text));
        assert_eq!(StructureFile::parse(&text).unwrap(), file);
    }

    #[test]
    fn empty_cells_and_incomplete_tables() {
        let text = "format-version: 1\nkind: sheffer\nelements: a\nstroke:\n  a a = {}\n";
        let StructureFile::Sheffer(s) = StructureFile::parse(text).unwrap() else { panic!() };
        assert!(s.stroke.get(0, 0).is_empty());
        let missing = "format-version: 1\nkind: sheffer\nelements: a b\nstroke:\n  a a = b\n";
        assert!(matches!(StructureFile::parse(missing), Err(Error::Parse { .. })));
    }
}
