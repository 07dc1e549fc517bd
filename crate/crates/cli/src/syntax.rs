//! The input document: lexer, parser and printer.
//!
//! The format is line oriented with `#` comments. Parsing keeps labels as written;
//! `resolve` turns them into core structures.

use std::fmt::{self, Write as _};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldDecl {
    Rationals,
    Prime(u64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowDecl {
    pub label: String,
    pub tail: String,
    pub head: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coeff {
    pub num: String,
    pub den: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    /// An arrow, or `e_v` for the idempotent at `v`.
    Label(String),
    Group(Expr),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub atom: Atom,
    pub power: u32,
}

/// `[-] [coeff] f1*f2*...`, composed right to left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub negative: bool,
    pub coeff: Option<Coeff>,
    pub factors: Vec<Factor>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub terms: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Word {
    One,
    Zero,
    Letters(Vec<(String, u32)>),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MonoidDecl {
    pub gens: Vec<String>,
    pub rels: Vec<(Word, Word)>,
    pub zero: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ActionClause {
    /// `None` is the zero object.
    Vertices(String, Vec<(String, Option<String>)>),
    Arrows(String, Vec<(String, Expr)>),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Options {
    pub bound: Option<usize>,
    pub seed: Option<u64>,
    pub substitutions: Vec<(String, Expr)>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Document {
    pub field: Option<FieldDecl>,
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowDecl>,
    pub relations: Vec<(Expr, Expr)>,
    pub monoid: MonoidDecl,
    pub action: Vec<ActionClause>,
    pub options: Options,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: expected {}, found {found}", fmt_expected(.expected))]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub expected: Vec<String>,
    pub found: String,
}

fn fmt_expected(e: &[String]) -> String {
    match e {
        [one] => one.clone(),
        _ => format!("one of {}", e.join(", ")),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Quoted(String),
    Sym(&'static str),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Quoted(s) => write!(f, "{s:?}"),
            Tok::Sym(s) => write!(f, "`{s}`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

const SYMBOLS: [&str; 13] = ["->", "{", "}", "(", ")", ":", ";", ",", "=", "+", "-", "*", "/"];

pub fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    for (li, line) in text.lines().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let (l, col) = (li + 1, i + 1);
            if c == '#' {
                break;
            }
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            if is_ident_char(c) {
                let start = i;
                while i < chars.len() && is_ident_char(chars[i]) {
                    i += 1;
                }
                out.push(Spanned { tok: Tok::Ident(chars[start..i].iter().collect()), line: l, column: col });
                continue;
            }
            if c == '"' {
                let mut s = String::new();
                i += 1;
                loop {
                    match chars.get(i) {
                        None => {
                            return Err(ParseError {
                                line: l,
                                column: i + 1,
                                expected: vec!["`\"`".into()],
                                found: "end of line".into(),
                            })
                        }
                        Some('"') => break,
                        Some('\\') if i + 1 < chars.len() => {
                            s.push(chars[i + 1]);
                            i += 2;
                        }
                        Some(&ch) => {
                            s.push(ch);
                            i += 1;
                        }
                    }
                }
                i += 1;
                out.push(Spanned { tok: Tok::Quoted(s), line: l, column: col });
                continue;
            }
            if c == '^' {
                out.push(Spanned { tok: Tok::Sym("^"), line: l, column: col });
                i += 1;
                continue;
            }
            let rest: String = chars[i..].iter().take(2).collect();
            match SYMBOLS.iter().find(|s| rest.starts_with(**s)) {
                Some(s) => {
                    out.push(Spanned { tok: Tok::Sym(s), line: l, column: col });
                    i += s.chars().count();
                }
                None => {
                    return Err(ParseError {
                        line: l,
                        column: col,
                        expected: vec!["a label or symbol".into()],
                        found: format!("`{c}`"),
                    })
                }
            }
        }
    }
    let (line, column) = match out.last() {
        Some(s) => (s.line, s.column + 1),
        None => (1, 1),
    };
    out.push(Spanned { tok: Tok::Eof, line, column });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

fn is_number(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_digit())
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, expected: &[&str]) -> Result<T, ParseError> {
        let s = &self.toks[self.pos];
        Err(ParseError {
            line: s.line,
            column: s.column,
            expected: expected.iter().map(|e| e.to_string()).collect(),
            found: s.tok.to_string(),
        })
    }

    fn is_sym(&self, s: &str) -> bool {
        matches!(self.peek(), Tok::Sym(t) if *t == s)
    }

    fn eat(&mut self, s: &str) -> bool {
        if self.is_sym(s) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &'static str) -> Result<(), ParseError> {
        if self.eat(s) {
            Ok(())
        } else {
            self.error(&[&format!("`{s}`")])
        }
    }

    fn number(&mut self, what: &str) -> Result<String, ParseError> {
        match self.peek().clone() {
            Tok::Ident(s) if is_number(&s) => {
                self.bump();
                Ok(s)
            }
            _ => self.error(&[what]),
        }
    }

    /// A plain label, a quoted label, or `(g,x)`.
    fn label(&mut self) -> Result<String, ParseError> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok(s)
            }
            Tok::Quoted(s) => {
                self.bump();
                Ok(s)
            }
            Tok::Sym("(") if self.pair_label_ahead() => Ok(self.pair_label()),
            _ => self.error(&["a label"]),
        }
    }

    fn pair_label_ahead(&self) -> bool {
        matches!(
            (self.peek_at(0), self.peek_at(1), self.peek_at(2), self.peek_at(3), self.peek_at(4)),
            (Tok::Sym("("), Tok::Ident(_), Tok::Sym(","), Tok::Ident(_), Tok::Sym(")"))
        )
    }

    fn pair_label(&mut self) -> String {
        self.bump();
        let Tok::Ident(a) = self.bump() else { unreachable!() };
        self.bump();
        let Tok::Ident(b) = self.bump() else { unreachable!() };
        self.bump();
        format!("({a},{b})")
    }

    /// Ends an item: `;` is required unless the block closes.
    fn end_item(&mut self) -> Result<(), ParseError> {
        if self.eat(";") || self.is_sym("}") {
            Ok(())
        } else {
            self.error(&["`;`", "`}`"])
        }
    }

    fn document(&mut self) -> Result<Document, ParseError> {
        let mut d = Document::default();
        let mut seen: Vec<String> = Vec::new();
        loop {
            let kw = match self.peek().clone() {
                Tok::Eof => break,
                Tok::Ident(s) if ["field", "quiver", "relations", "monoid", "action", "options"].contains(&s.as_str()) => s,
                _ => return self.error(&["`field`", "`quiver`", "`relations`", "`monoid`", "`action`", "`options`", "end of input"]),
            };
            if seen.contains(&kw) {
                return self.error(&["a block not given before"]);
            }
            seen.push(kw.clone());
            self.bump();
            match kw.as_str() {
                "field" => d.field = Some(self.field()?),
                "quiver" => self.quiver(&mut d)?,
                "relations" => d.relations = self.relations()?,
                "monoid" => d.monoid = self.monoid()?,
                "action" => d.action = self.action()?,
                _ => d.options = self.options()?,
            }
        }
        Ok(d)
    }

    fn field(&mut self) -> Result<FieldDecl, ParseError> {
        match self.peek().clone() {
            Tok::Ident(s) if s == "Q" => {
                self.bump();
                Ok(FieldDecl::Rationals)
            }
            Tok::Ident(s) if s == "GF" => {
                self.bump();
                self.expect("(")?;
                let p = self.number("a prime")?;
                self.expect(")")?;
                p.parse().map(FieldDecl::Prime).or_else(|_| self.error(&["a prime"]))
            }
            _ => self.error(&["`Q`", "`GF(p)`"]),
        }
    }

    fn quiver(&mut self, d: &mut Document) -> Result<(), ParseError> {
        self.expect("{")?;
        while !self.eat("}") {
            match self.peek().clone() {
                Tok::Ident(s) if s == "vertices" => {
                    self.bump();
                    self.expect(":")?;
                    while !self.is_sym(";") && !self.is_sym("}") {
                        d.vertices.push(self.label()?);
                    }
                }
                Tok::Ident(s) if s == "arrows" => {
                    self.bump();
                    self.expect(":")?;
                    if !self.is_sym(";") && !self.is_sym("}") {
                        loop {
                            let label = self.label()?;
                            self.expect(":")?;
                            let tail = self.label()?;
                            self.expect("->")?;
                            let head = self.label()?;
                            d.arrows.push(ArrowDecl { label, tail, head });
                            if !self.eat(",") {
                                break;
                            }
                        }
                    }
                }
                _ => return self.error(&["`vertices`", "`arrows`", "`}`"]),
            }
            self.end_item()?;
        }
        Ok(())
    }

    fn relations(&mut self) -> Result<Vec<(Expr, Expr)>, ParseError> {
        self.expect("{")?;
        let mut out = Vec::new();
        while !self.eat("}") {
            let l = self.expr()?;
            self.expect("=")?;
            let r = self.expr()?;
            out.push((l, r));
            self.end_item()?;
        }
        Ok(out)
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut terms = Vec::new();
        let mut negative = self.eat("-");
        loop {
            terms.push(self.term(negative)?);
            if self.eat("+") {
                negative = false;
            } else if self.eat("-") {
                negative = true;
            } else {
                break;
            }
        }
        Ok(Expr { terms })
    }

    fn starts_factor(&self) -> bool {
        match self.peek() {
            Tok::Ident(s) => !is_number(s),
            Tok::Quoted(_) | Tok::Sym("(") => true,
            _ => false,
        }
    }

    fn term(&mut self, negative: bool) -> Result<Term, ParseError> {
        let mut coeff = None;
        if let Tok::Ident(s) = self.peek().clone() {
            if is_number(&s) {
                self.bump();
                let den = if self.eat("/") { Some(self.number("a denominator")?) } else { None };
                coeff = Some(Coeff { num: s, den });
                if !self.eat("*") && !self.starts_factor() {
                    return Ok(Term { negative, coeff, factors: Vec::new() });
                }
            }
        }
        let mut factors = vec![self.factor()?];
        while self.eat("*") {
            factors.push(self.factor()?);
        }
        Ok(Term { negative, coeff, factors })
    }

    fn factor(&mut self) -> Result<Factor, ParseError> {
        let atom = match self.peek().clone() {
            Tok::Sym("(") if self.pair_label_ahead() => Atom::Label(self.pair_label()),
            Tok::Sym("(") => {
                self.bump();
                let e = self.expr()?;
                self.expect(")")?;
                Atom::Group(e)
            }
            Tok::Ident(s) if !is_number(&s) => Atom::Label(self.label()?),
            Tok::Quoted(_) => Atom::Label(self.label()?),
            _ => return self.error(&["an arrow", "`e_v`", "`(`"]),
        };
        Ok(Factor { atom, power: self.power()? })
    }

    fn power(&mut self) -> Result<u32, ParseError> {
        if !self.eat("^") {
            return Ok(1);
        }
        let n = self.number("an exponent")?;
        match n.parse() {
            Ok(p) if p > 0 => Ok(p),
            _ => self.error(&["a positive exponent"]),
        }
    }

    fn word(&mut self) -> Result<Word, ParseError> {
        match self.peek().clone() {
            Tok::Ident(s) if s == "1" => {
                self.bump();
                Ok(Word::One)
            }
            Tok::Ident(s) if s == "0" => {
                self.bump();
                Ok(Word::Zero)
            }
            _ => {
                let mut letters = Vec::new();
                loop {
                    let g = self.label()?;
                    letters.push((g, self.power()?));
                    if !self.eat("*") {
                        break;
                    }
                }
                Ok(Word::Letters(letters))
            }
        }
    }

    fn monoid(&mut self) -> Result<MonoidDecl, ParseError> {
        self.expect("{")?;
        let mut m = MonoidDecl::default();
        while !self.eat("}") {
            match self.peek().clone() {
                Tok::Ident(s) if s == "gens" => {
                    self.bump();
                    self.expect(":")?;
                    while !self.is_sym(";") && !self.is_sym("}") {
                        m.gens.push(self.label()?);
                    }
                }
                Tok::Ident(s) if s == "rels" => {
                    self.bump();
                    self.expect(":")?;
                    if !self.is_sym(";") && !self.is_sym("}") {
                        loop {
                            let l = self.word()?;
                            self.expect("=")?;
                            let r = self.word()?;
                            m.rels.push((l, r));
                            if !self.eat(",") {
                                break;
                            }
                        }
                    }
                }
                Tok::Ident(s) if s == "zero" => {
                    self.bump();
                    self.expect(":")?;
                    m.zero = match self.peek().clone() {
                        Tok::Ident(s) if s == "yes" => true,
                        Tok::Ident(s) if s == "no" => false,
                        _ => return self.error(&["`yes`", "`no`"]),
                    };
                    self.bump();
                }
                _ => return self.error(&["`gens`", "`rels`", "`zero`", "`}`"]),
            }
            self.end_item()?;
        }
        Ok(m)
    }

    fn action(&mut self) -> Result<Vec<ActionClause>, ParseError> {
        self.expect("{")?;
        let mut out = Vec::new();
        while !self.eat("}") {
            let g = self.label()?;
            self.expect(":")?;
            let kind = match self.peek().clone() {
                Tok::Ident(s) if s == "vertices" || s == "arrows" => s,
                _ => return self.error(&["`vertices`", "`arrows`"]),
            };
            self.bump();
            self.expect("(")?;
            if kind == "vertices" {
                let mut items = Vec::new();
                while !self.is_sym(")") {
                    let v = self.label()?;
                    self.expect("->")?;
                    let w = match self.peek() {
                        Tok::Ident(s) if s == "0" => {
                            self.bump();
                            None
                        }
                        _ => Some(self.label()?),
                    };
                    items.push((v, w));
                    if !self.eat(",") {
                        break;
                    }
                }
                out.push(ActionClause::Vertices(g, items));
            } else {
                let mut items = Vec::new();
                while !self.is_sym(")") {
                    let a = self.label()?;
                    self.expect("->")?;
                    items.push((a, self.expr()?));
                    if !self.eat(",") {
                        break;
                    }
                }
                out.push(ActionClause::Arrows(g, items));
            }
            self.expect(")")?;
            self.end_item()?;
        }
        Ok(out)
    }

    fn options(&mut self) -> Result<Options, ParseError> {
        self.expect("{")?;
        let mut o = Options::default();
        while !self.eat("}") {
            match self.peek().clone() {
                Tok::Ident(s) if s == "bound" => {
                    self.bump();
                    self.expect(":")?;
                    let n = self.number("a bound")?;
                    o.bound = Some(n.parse().or_else(|_| self.error(&["a bound"]))?);
                }
                Tok::Ident(s) if s == "seed" => {
                    self.bump();
                    self.expect(":")?;
                    let n = self.number("a seed")?;
                    o.seed = Some(n.parse().or_else(|_| self.error(&["a seed"]))?);
                }
                Tok::Ident(s) if s == "subst" => {
                    self.bump();
                    self.expect(":")?;
                    o.substitutions.push(self.substitution()?);
                }
                _ => return self.error(&["`bound`", "`seed`", "`subst`", "`}`"]),
            }
            self.end_item()?;
        }
        Ok(o)
    }

    fn substitution(&mut self) -> Result<(String, Expr), ParseError> {
        let l = self.label()?;
        self.expect("=")?;
        Ok((l, self.expr()?))
    }
}

pub fn parse(text: &str) -> Result<Document, ParseError> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    p.document()
}

fn parse_with<T>(text: &str, f: impl FnOnce(&mut Parser) -> Result<T, ParseError>) -> Result<T, ParseError> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let out = f(&mut p)?;
    if *p.peek() != Tok::Eof {
        return p.error(&["end of input"]);
    }
    Ok(out)
}

pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    parse_with(text, Parser::expr)
}

/// `label = expr`, as given to `--subst`.
pub fn parse_substitution(text: &str) -> Result<(String, Expr), ParseError> {
    parse_with(text, Parser::substitution)
}

fn is_plain(s: &str) -> bool {
    !s.is_empty() && s.chars().all(is_ident_char)
}

fn is_pair(s: &str) -> bool {
    let Some(inner) = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) else {
        return false;
    };
    match inner.split_once(',') {
        Some((a, b)) => is_plain(a) && is_plain(b),
        None => false,
    }
}

/// Quotes a label unless it reads back as the same token; numbers are quoted where
/// they would be taken as scalars.
pub fn fmt_label(s: &str, number_ok: bool) -> String {
    if (is_plain(s) && (number_ok || !is_number(s))) || is_pair(s) {
        s.to_string()
    } else {
        let mut q = String::from("\"");
        for c in s.chars() {
            if c == '"' || c == '\\' {
                q.push('\\');
            }
            q.push(c);
        }
        q.push('"');
        q
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            match (i, t.negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if let Some(c) = &t.coeff {
                f.write_str(&c.num)?;
                if let Some(d) = &c.den {
                    write!(f, "/{d}")?;
                }
                if !t.factors.is_empty() {
                    f.write_str("*")?;
                }
            }
            for (j, fa) in t.factors.iter().enumerate() {
                if j > 0 {
                    f.write_str("*")?;
                }
                match &fa.atom {
                    Atom::Label(l) => f.write_str(&fmt_label(l, false))?,
                    Atom::Group(e) => write!(f, "({e})")?,
                }
                if fa.power != 1 {
                    write!(f, "^{}", fa.power)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Word::One => f.write_str("1"),
            Word::Zero => f.write_str("0"),
            Word::Letters(ls) => {
                let parts: Vec<String> = ls
                    .iter()
                    .map(|(g, p)| if *p == 1 { fmt_label(g, false) } else { format!("{}^{p}", fmt_label(g, false)) })
                    .collect();
                f.write_str(&parts.join("*"))
            }
        }
    }
}

impl fmt::Display for Document {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        match self.field {
            Some(FieldDecl::Rationals) => out.push_str("field Q\n"),
            Some(FieldDecl::Prime(p)) => writeln!(out, "field GF({p})")?,
            None => {}
        }
        out.push_str("quiver {\n");
        let vs: Vec<String> = self.vertices.iter().map(|v| fmt_label(v, true)).collect();
        writeln!(out, "  vertices: {};", vs.join(" "))?;
        let arrows: Vec<String> = self
            .arrows
            .iter()
            .map(|a| format!("{}: {} -> {}", fmt_label(&a.label, true), fmt_label(&a.tail, true), fmt_label(&a.head, true)))
            .collect();
        writeln!(out, "  arrows: {};", arrows.join(", "))?;
        out.push_str("}\n");
        if !self.relations.is_empty() {
            out.push_str("relations {\n");
            for (l, r) in &self.relations {
                writeln!(out, "  {l} = {r};")?;
            }
            out.push_str("}\n");
        }
        if self.monoid != MonoidDecl::default() {
            let m = &self.monoid;
            out.push_str("monoid {\n");
            let gs: Vec<String> = m.gens.iter().map(|g| fmt_label(g, false)).collect();
            writeln!(out, "  gens: {};", gs.join(" "))?;
            let rs: Vec<String> = m.rels.iter().map(|(l, r)| format!("{l} = {r}")).collect();
            writeln!(out, "  rels: {};", rs.join(", "))?;
            writeln!(out, "  zero: {}", if m.zero { "yes" } else { "no" })?;
            out.push_str("}\n");
        }
        if !self.action.is_empty() {
            out.push_str("action {\n");
            for c in &self.action {
                match c {
                    ActionClause::Vertices(g, items) => {
                        let parts: Vec<String> = items
                            .iter()
                            .map(|(v, w)| {
                                let w = w.as_deref().map_or(String::from("0"), |w| fmt_label(w, w != "0"));
                                format!("{} -> {w}", fmt_label(v, true))
                            })
                            .collect();
                        writeln!(out, "  {}: vertices ({});", fmt_label(g, true), parts.join(", "))?;
                    }
                    ActionClause::Arrows(g, items) => {
                        let parts: Vec<String> = items.iter().map(|(a, e)| format!("{} -> {e}", fmt_label(a, true))).collect();
                        writeln!(out, "  {}: arrows ({});", fmt_label(g, true), parts.join(", "))?;
                    }
                }
            }
            out.push_str("}\n");
        }
        if self.options != Options::default() {
            out.push_str("options {\n");
            if let Some(b) = self.options.bound {
                writeln!(out, "  bound: {b};")?;
            }
            if let Some(s) = self.options.seed {
                writeln!(out, "  seed: {s};")?;
            }
            for (l, e) in &self.options.substitutions {
                writeln!(out, "  subst: {} = {e};", fmt_label(l, true))?;
            }
            out.push_str("}\n");
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expressions_round_trip() {
        for s in ["a*b - 2*c + 1/2*(g,1)^2", "-(a + b)*c", "0", "3 - \"x y\"*a"] {
            let e = parse_expr(s).unwrap();
            assert_eq!(parse_expr(&e.to_string()).unwrap(), e, "{s}");
        }
        let e = parse_expr("2 a").unwrap();
        assert_eq!(e.to_string(), "2*a");
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse("quiver {\n  vertices: 1 2;\n  arrows: a 1 -> 2;\n}").unwrap_err();
        assert_eq!((err.line, err.column), (3, 13));
        assert_eq!(err.expected, vec!["`:`"]);
    }

    #[test]
    fn pair_labels_and_groups() {
        let e = parse_expr("(g,1) - 1").unwrap();
        assert_eq!(e.terms[0].factors[0].atom, Atom::Label("(g,1)".into()));
        let e = parse_expr("(a + b)").unwrap();
        assert!(matches!(e.terms[0].factors[0].atom, Atom::Group(_)));
    }
}
