//! The line-oriented text format for contexts, sets, topologies, mappings
//! and covers.
//!
//! ```text
//! # comments run to the end of the line
//! context { universe: x1 x2 ; parameters: e1 e2 }
//! mapping m { target_universe: y1 ; target_parameters: k1 ; u: x1->y1 x2->y1 ; p: e1->k1 e2->k1 }
//! set A { e1: 1/2 { x1 } ; e2: 0/1 { } }
//! set G in m { k1: 1/1 { y1 } }
//! topology tau { A }
//! cover c { of: A ; members: A }
//! ```
//!
//! `set NAME in MAP` declares a set over the target of an earlier mapping.
//! Names are declared before use and are unique per kind.

use std::fmt::{self, Write as _};

use indexmap::IndexMap;
use thiserror::Error;

use crate::context::{Context, Subset, TotalMap};
use crate::error::Error;
use crate::mapping::FpSoftMapping;
use crate::{FpSoftSet, FpSoftTopology, Grade, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    At { line: usize, message: String },
    #[error("context required")]
    MissingContext,
}

fn at(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::At {
        line,
        message: message.into(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedSet {
    pub set: FpSoftSet,
    /// The mapping whose target this set lives over, `None` for the source.
    pub space: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    pub of: Option<String>,
    pub members: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub context: Context,
    pub mappings: IndexMap<String, FpSoftMapping>,
    pub sets: IndexMap<String, NamedSet>,
    pub topologies: IndexMap<String, Vec<String>>,
    pub covers: IndexMap<String, Cover>,
}

impl Document {
    pub fn new(context: Context) -> Self {
        Document {
            context,
            mappings: IndexMap::new(),
            sets: IndexMap::new(),
            topologies: IndexMap::new(),
            covers: IndexMap::new(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        Parser::new(text)?.document()
    }

    pub fn set(&self, name: &str) -> Result<&FpSoftSet, Error> {
        self.sets.get(name).map(|s| &s.set).ok_or_else(|| unknown("set", name))
    }

    pub fn mapping(&self, name: &str) -> Result<&FpSoftMapping, Error> {
        self.mappings.get(name).ok_or_else(|| unknown("mapping", name))
    }

    pub fn cover(&self, name: &str) -> Result<&Cover, Error> {
        self.covers.get(name).ok_or_else(|| unknown("cover", name))
    }

    /// Member names of a topology.
    pub fn topology_members(&self, name: &str) -> Result<&[String], Error> {
        self.topologies
            .get(name)
            .map(|v| v.as_slice())
            .ok_or_else(|| unknown("topology", name))
    }

    /// The context a named topology lives over.
    pub fn topology_context(&self, name: &str) -> Result<&Context, Error> {
        let members = self.topology_members(name)?;
        match members.first() {
            Some(first) => Ok(self.sets[first].set.context()),
            None => Ok(&self.context),
        }
    }

    /// Validates a named topology.
    pub fn topology(&self, name: &str) -> Result<FpSoftTopology, Error> {
        let members = self.topology_members(name)?;
        let sets: Vec<FpSoftSet> = members.iter().map(|n| self.sets[n].set.clone()).collect();
        FpSoftTopology::validate(self.topology_context(name)?, &sets)
    }

    /// Adds a set, naming the first free `stem`, `stem2`, ... if taken.
    pub fn insert_set(&mut self, name: &str, set: FpSoftSet, space: Option<String>) -> String {
        let name = fresh(name, |n| self.sets.contains_key(n));
        self.sets.insert(name.clone(), NamedSet { set, space });
        name
    }

    /// The document in canonical text: context, mappings, sets, topologies,
    /// covers, in declaration order within each kind.
    pub fn print(&self) -> String {
        self.to_string()
    }
}

fn unknown(kind: &'static str, name: &str) -> Error {
    Error::UnknownName {
        kind,
        name: name.to_string(),
    }
}

fn fresh(stem: &str, taken: impl Fn(&str) -> bool) -> String {
    if !taken(stem) {
        return stem.to_string();
    }
    (2..)
        .map(|i| format!("{stem}{i}"))
        .find(|n| !taken(n))
        .expect("unbounded")
}

/// `P/Q` in lowest terms, with `0/1` and `1/1` at the ends.
pub fn format_grade(grade: &Grade) -> String {
    let v = grade.value();
    format!("{}/{}", v.numer(), v.denom())
}

pub fn format_set(name: &str, space: Option<&str>, set: &FpSoftSet) -> String {
    let ctx = set.context();
    let cells: Vec<String> = set
        .cells()
        .enumerate()
        .map(|(e, (g, f))| {
            let elems = ctx.element_names(f);
            let inner = if elems.is_empty() {
                String::new()
            } else {
                format!("{} ", elems.join(" "))
            };
            format!("{}: {} {{ {inner}}}", ctx.parameters()[e], format_grade(g))
        })
        .collect();
    let space = space.map(|m| format!(" in {m}")).unwrap_or_default();
    format!("set {name}{space} {{ {} }}", cells.join(" ; "))
}

impl fmt::Display for Document {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "context {{ universe: {} ; parameters: {} }}",
            self.context.universe().join(" "),
            self.context.parameters().join(" ")
        )?;
        for (name, m) in &self.mappings {
            let (src, tgt) = (m.source(), m.target());
            let u: Vec<String> = (0..src.universe_len())
                .map(|x| format!("{}->{}", src.universe()[x], tgt.universe()[m.u().apply(x)]))
                .collect();
            let p: Vec<String> = (0..src.parameter_len())
                .map(|e| format!("{}->{}", src.parameters()[e], tgt.parameters()[m.p().apply(e)]))
                .collect();
            writeln!(
                f,
                "mapping {name} {{ target_universe: {} ; target_parameters: {} ; u: {} ; p: {} }}",
                tgt.universe().join(" "),
                tgt.parameters().join(" "),
                u.join(" "),
                p.join(" ")
            )?;
        }
        for (name, s) in &self.sets {
            writeln!(f, "{}", format_set(name, s.space.as_deref(), &s.set))?;
        }
        for (name, members) in &self.topologies {
            let mut line = format!("topology {name} {{");
            for m in members {
                write!(line, " {m}")?;
            }
            writeln!(f, "{line} }}")?;
        }
        for (name, c) in &self.covers {
            let of = c.of.as_ref().map(|o| format!("of: {o} ; ")).unwrap_or_default();
            writeln!(f, "cover {name} {{ {of}members: {} }}", c.members.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Word(String),
    Open,
    Close,
    Semi,
    Colon,
    Slash,
    Arrow,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Word(w) => write!(f, "`{w}`"),
            Tok::Open => f.write_str("`{`"),
            Tok::Close => f.write_str("`}`"),
            Tok::Semi => f.write_str("`;`"),
            Tok::Colon => f.write_str("`:`"),
            Tok::Slash => f.write_str("`/`"),
            Tok::Arrow => f.write_str("`->`"),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let body = raw.split('#').next().unwrap_or("");
        let mut chars = body.char_indices().peekable();
        while let Some(&(i, c)) = chars.peek() {
            let single = match c {
                '{' => Some(Tok::Open),
                '}' => Some(Tok::Close),
                ';' => Some(Tok::Semi),
                ':' => Some(Tok::Colon),
                '/' => Some(Tok::Slash),
                _ => None,
            };
            if c.is_whitespace() {
                chars.next();
            } else if let Some(t) = single {
                out.push((line, t));
                chars.next();
            } else if body[i..].starts_with("->") {
                out.push((line, Tok::Arrow));
                chars.next();
                chars.next();
            } else {
                let start = i;
                let mut end = body.len();
                while let Some(&(j, d)) = chars.peek() {
                    if d.is_whitespace() || "{};:/".contains(d) || body[j..].starts_with("->") {
                        end = j;
                        break;
                    }
                    chars.next();
                }
                let word = &body[start..end];
                if !word
                    .chars()
                    .all(|ch| ch.is_alphanumeric() || ch == '_' || ch == '\'' || ch == '.' || ch == '-')
                {
                    return Err(at(line, format!("unexpected character in `{word}`")));
                }
                out.push((line, Tok::Word(word.to_string())));
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    last_line: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self, ParseError> {
        let toks = tokenize(text)?;
        let last_line = text.lines().count().max(1);
        Ok(Parser {
            toks,
            pos: 0,
            last_line,
        })
    }

    fn line(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.0).unwrap_or(self.last_line)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn next(&mut self, expected: &str) -> Result<(usize, Tok), ParseError> {
        match self.toks.get(self.pos) {
            Some(t) => {
                self.pos += 1;
                Ok(t.clone())
            }
            None => Err(at(self.last_line, format!("expected {expected}, found end of input"))),
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        let (line, t) = self.next(&tok.to_string())?;
        if t == tok {
            Ok(())
        } else {
            Err(at(line, format!("expected {tok}, found {t}")))
        }
    }

    fn word(&mut self, expected: &str) -> Result<(usize, String), ParseError> {
        match self.next(expected)? {
            (line, Tok::Word(w)) => Ok((line, w)),
            (line, t) => Err(at(line, format!("expected {expected}, found {t}"))),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        let (line, w) = self.word(&format!("`{kw}`"))?;
        if w == kw {
            Ok(())
        } else {
            Err(at(line, format!("expected `{kw}`, found `{w}`")))
        }
    }

    /// Words up to (not including) the next `;` or `}`.
    fn words(&mut self) -> Vec<(usize, String)> {
        let mut out = Vec::new();
        while let Some(Tok::Word(w)) = self.peek() {
            out.push((self.line(), w.clone()));
            self.pos += 1;
        }
        out
    }

    fn labelled_words(&mut self, label: &str) -> Result<Vec<(usize, String)>, ParseError> {
        self.keyword(label)?;
        self.expect(Tok::Colon)?;
        Ok(self.words())
    }

    fn document(mut self) -> Result<Document, ParseError> {
        if self.peek().is_none() {
            return Err(ParseError::MissingContext);
        }
        let (line, first) = self.word("`context`")?;
        if first != "context" {
            return Err(at(line, "context required"));
        }
        let context = self.context(line)?;
        let mut doc = Document::new(context);
        while self.peek().is_some() {
            let (line, kw) = self.word("a statement")?;
            match kw.as_str() {
                "set" => self.set(&mut doc)?,
                "topology" => self.topology(&mut doc)?,
                "mapping" => self.mapping(&mut doc)?,
                "cover" => self.cover(&mut doc)?,
                "context" => return Err(at(line, "context declared twice")),
                other => {
                    return Err(at(
                        line,
                        format!("expected `set`, `topology`, `mapping` or `cover`, found `{other}`"),
                    ))
                }
            }
        }
        Ok(doc)
    }

    fn context(&mut self, line: usize) -> Result<Context, ParseError> {
        self.expect(Tok::Open)?;
        let universe = self.labelled_words("universe")?;
        self.expect(Tok::Semi)?;
        let parameters = self.labelled_words("parameters")?;
        self.optional_semi();
        self.expect(Tok::Close)?;
        Context::new(universe.into_iter().map(|w| w.1), parameters.into_iter().map(|w| w.1))
            .map_err(|e| at(line, e.to_string()))
    }

    fn optional_semi(&mut self) {
        if self.peek() == Some(&Tok::Semi) {
            self.pos += 1;
        }
    }

    fn name(&mut self, kind: &str, taken: bool, line: usize, name: &str) -> Result<(), ParseError> {
        if taken {
            return Err(at(line, format!("{kind} `{name}` declared twice")));
        }
        Ok(())
    }

    fn set(&mut self, doc: &mut Document) -> Result<(), ParseError> {
        let (line, name) = self.word("a set name")?;
        self.name("set", doc.sets.contains_key(&name), line, &name)?;
        let mut space = None;
        if let Some(Tok::Word(w)) = self.peek() {
            if w == "in" {
                self.pos += 1;
                let (l, m) = self.word("a mapping name")?;
                if !doc.mappings.contains_key(&m) {
                    return Err(at(l, format!("unknown mapping `{m}`")));
                }
                space = Some(m);
            }
        }
        let ctx = match &space {
            Some(m) => doc.mappings[m].target().clone(),
            None => doc.context.clone(),
        };
        self.expect(Tok::Open)?;
        let mut cells: Vec<Option<(Grade, Subset)>> = vec![None; ctx.parameter_len()];
        loop {
            if self.peek() == Some(&Tok::Close) {
                self.pos += 1;
                break;
            }
            let (l, param) = self.word("a parameter")?;
            let e = ctx.parameter_index(&param).map_err(|err| at(l, err.to_string()))?;
            if cells[e].is_some() {
                return Err(at(l, format!("duplicate parameter {param}")));
            }
            self.expect(Tok::Colon)?;
            let grade = self.grade()?;
            self.expect(Tok::Open)?;
            let mut crisp = Subset::EMPTY;
            for (l, x) in self.words() {
                crisp = crisp.with(ctx.element_index(&x).map_err(|err| at(l, err.to_string()))?);
            }
            self.expect(Tok::Close)?;
            cells[e] = Some((grade, crisp));
            match self.next("`;` or `}`")? {
                (_, Tok::Semi) => {}
                (_, Tok::Close) => break,
                (l, t) => return Err(at(l, format!("expected `;` or `}}`, found {t}"))),
            }
        }
        if let Some(missing) = cells.iter().position(Option::is_none) {
            return Err(at(
                line,
                format!("set `{name}` has no entry for {}", ctx.parameters()[missing]),
            ));
        }
        let cells = cells.into_iter().map(Option::unwrap).collect();
        let set = FpSoftSet::from_cells(ctx, cells).map_err(|err| at(line, err.to_string()))?;
        doc.sets.insert(name, NamedSet { set, space });
        Ok(())
    }

    fn grade(&mut self) -> Result<Grade, ParseError> {
        let (line, p) = self.word("a grade P/Q")?;
        self.expect(Tok::Slash)?;
        let (_, q) = self.word("a denominator")?;
        let parse = |s: &str| {
            s.parse::<i64>()
                .map_err(|_| at(line, format!("`{s}` is not a nonnegative integer")))
        };
        let (p, q) = (parse(&p)?, parse(&q)?);
        if p < 0 || q <= 0 {
            return Err(at(line, format!("grade {p}/{q} lies outside [0, 1]")));
        }
        Grade::new(Rational::new(p, q)).map_err(|e| at(line, e.to_string()))
    }

    fn references(&mut self, doc: &Document, words: Vec<(usize, String)>) -> Result<Vec<String>, ParseError> {
        words
            .into_iter()
            .map(|(l, w)| {
                if doc.sets.contains_key(&w) {
                    Ok(w)
                } else {
                    Err(at(l, format!("unknown set `{w}`")))
                }
            })
            .collect()
    }

    fn topology(&mut self, doc: &mut Document) -> Result<(), ParseError> {
        let (line, name) = self.word("a topology name")?;
        self.name("topology", doc.topologies.contains_key(&name), line, &name)?;
        self.expect(Tok::Open)?;
        let words = self.words();
        self.expect(Tok::Close)?;
        let members = self.references(doc, words)?;
        if let Some(first) = members.first() {
            let space = &doc.sets[first].space;
            if let Some(other) = members.iter().find(|m| &doc.sets[*m].space != space) {
                return Err(at(
                    line,
                    format!("`{other}` and `{first}` live over different contexts"),
                ));
            }
        }
        doc.topologies.insert(name, members);
        Ok(())
    }

    fn cover(&mut self, doc: &mut Document) -> Result<(), ParseError> {
        let (line, name) = self.word("a cover name")?;
        self.name("cover", doc.covers.contains_key(&name), line, &name)?;
        self.expect(Tok::Open)?;
        let mut of = None;
        if let Some(Tok::Word(w)) = self.peek() {
            if w == "of" {
                let words = self.labelled_words("of")?;
                if words.len() != 1 {
                    return Err(at(line, "`of` takes exactly one set"));
                }
                of = self.references(doc, words)?.pop();
                self.expect(Tok::Semi)?;
            }
        }
        let words = self.labelled_words("members")?;
        self.optional_semi();
        self.expect(Tok::Close)?;
        if words.is_empty() {
            return Err(at(line, format!("cover `{name}` has no members")));
        }
        let members = self.references(doc, words)?;
        doc.covers.insert(name, Cover { of, members });
        Ok(())
    }

    fn mapping(&mut self, doc: &mut Document) -> Result<(), ParseError> {
        let (line, name) = self.word("a mapping name")?;
        self.name("mapping", doc.mappings.contains_key(&name), line, &name)?;
        self.expect(Tok::Open)?;
        let ty = self.labelled_words("target_universe")?;
        self.expect(Tok::Semi)?;
        let tk = self.labelled_words("target_parameters")?;
        self.expect(Tok::Semi)?;
        let target = Context::new(ty.into_iter().map(|w| w.1), tk.into_iter().map(|w| w.1))
            .map_err(|e| at(line, e.to_string()))?;
        let source = doc.context.clone();
        self.keyword("u")?;
        self.expect(Tok::Colon)?;
        let u = self.arrows(line, source.universe(), target.universe(), "u")?;
        self.expect(Tok::Semi)?;
        self.keyword("p")?;
        self.expect(Tok::Colon)?;
        let p = self.arrows(line, source.parameters(), target.parameters(), "p")?;
        self.optional_semi();
        self.expect(Tok::Close)?;
        let u = TotalMap::new(u, target.universe_len()).map_err(|e| at(line, e.to_string()))?;
        let p = TotalMap::new(p, target.parameter_len()).map_err(|e| at(line, e.to_string()))?;
        let mapping = FpSoftMapping::new(source, target, u, p).map_err(|e| at(line, e.to_string()))?;
        doc.mappings.insert(name, mapping);
        Ok(())
    }

    /// `a->b` pairs defining a total map from `from` into `to`.
    fn arrows(&mut self, line: usize, from: &[String], to: &[String], which: &str) -> Result<Vec<usize>, ParseError> {
        let mut images = vec![None; from.len()];
        while let Some(Tok::Word(_)) = self.peek() {
            let (l, a) = self.word("a symbol")?;
            self.expect(Tok::Arrow)?;
            let (_, b) = self.word("a symbol")?;
            let i = from
                .iter()
                .position(|s| *s == a)
                .ok_or_else(|| at(l, format!("{a} is not in the domain of {which}")))?;
            let j = to
                .iter()
                .position(|s| *s == b)
                .ok_or_else(|| at(l, format!("{b} is not in the codomain of {which}")))?;
            if images[i].replace(j).is_some() {
                return Err(at(l, format!("{which} maps {a} twice")));
            }
        }
        if let Some(missing) = images.iter().position(Option::is_none) {
            return Err(at(
                line,
                format!("{which} is not total: no image for {}", from[missing]),
            ));
        }
        Ok(images.into_iter().map(Option::unwrap).collect())
    }
}
