//! Text formats: the recipe DSL, twist-word literals, and presentation
//! literals. One tokenizer serves all three grammars; every error carries a
//! line/column span.
//!
//! Recipe nodes print as `Kind(key=value, ..., children...)`; `#` starts a
//! comment. Words are concatenations of `t[c1]`, `t[c3]^-1`,
//! `conj(t[b], by=(...))`, `refl(t[y])`. Presentations use
//! `group{ gens: a1,b2; rels: [a1,b2], a1, b2^2 }` with `[u,v]` the
//! commutator `u v u⁻¹ v⁻¹`.

use geo4::geography::certs::Pi1Fixture;
use geo4::geography::{BlockId, Cert, CertKind, NodeKind, Recipe, RecipeNode};
use geo4::grouppres::{FpGroup, Word};
use geo4::invariants::Z2Kind;
use geo4::mcg::{Letter, MappingClassWord};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub line: usize,
    pub col: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    pub span: Span,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at {}:{}: {}", self.span.line, self.span.col, self.message)
    }
}

impl std::error::Error for ParseError {}

// ---------------------------------------------------------------------------
// Tokenizer
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(i64),
    Str(String),
    Punct(char),
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    span: Span,
}

fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let span = Span { line, col };
        match c {
            '\n' => {
                chars.next();
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => {
                chars.next();
                col += 1;
            }
            '#' => {
                for c in chars.by_ref() {
                    if c == '\n' {
                        break;
                    }
                }
                line += 1;
                col = 1;
            }
            '"' => {
                chars.next();
                col += 1;
                let mut s = String::new();
                loop {
                    match chars.next() {
                        Some('"') => {
                            col += 1;
                            break;
                        }
                        Some('\n') => {
                            return Err(ParseError { span, message: "unterminated string".into() })
                        }
                        Some(c) => {
                            s.push(c);
                            col += 1;
                        }
                        None => return Err(ParseError { span, message: "unterminated string".into() }),
                    }
                }
                out.push(Token { tok: Tok::Str(s), span });
            }
            c if c.is_ascii_digit() => {
                let mut n = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        n.push(d);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                let value = n.parse().map_err(|_| ParseError { span, message: "integer overflow".into() })?;
                out.push(Token { tok: Tok::Int(value), span });
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_alphanumeric() || d == '_' || d == '-' && s.chars().last().is_some_and(|p| p.is_alphanumeric()) {
                        // idents may contain dashes between alphanumerics
                        if d == '-' {
                            // lookahead: a dash followed by a letter continues the ident
                            let mut probe = chars.clone();
                            probe.next();
                            if !probe.peek().is_some_and(|n| n.is_alphanumeric()) {
                                break;
                            }
                        }
                        s.push(d);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                out.push(Token { tok: Tok::Ident(s), span });
            }
            '(' | ')' | '[' | ']' | '{' | '}' | ',' | '=' | '^' | '-' | ':' | ';' | '/' | '*' => {
                chars.next();
                col += 1;
                out.push(Token { tok: Tok::Punct(c), span });
            }
            other => {
                return Err(ParseError { span, message: format!("unexpected character `{other}`") });
            }
        }
    }
    Ok(out)
}

struct Cursor {
    tokens: Vec<Token>,
    pos: usize,
}

impl Cursor {
    fn new(text: &str) -> Result<Cursor, ParseError> {
        Ok(Cursor { tokens: tokenize(text)?, pos: 0 })
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn span(&self) -> Span {
        self.tokens
            .get(self.pos.min(self.tokens.len().saturating_sub(1)))
            .map(|t| t.span)
            .unwrap_or(Span { line: 1, col: 1 })
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).map(|t| t.tok.clone());
        self.pos += 1;
        t
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError { span: self.span(), message: message.into() }
    }

    fn expect_punct(&mut self, c: char) -> Result<(), ParseError> {
        match self.next() {
            Some(Tok::Punct(p)) if p == c => Ok(()),
            other => Err(ParseError {
                span: self.tokens.get(self.pos - 1).map(|t| t.span).unwrap_or(Span { line: 1, col: 1 }),
                message: format!("expected `{c}`, found {other:?}"),
            }),
        }
    }

    fn expect_ident(&mut self) -> Result<String, ParseError> {
        match self.next() {
            Some(Tok::Ident(s)) => Ok(s),
            other => Err(ParseError {
                span: self.tokens.get(self.pos - 1).map(|t| t.span).unwrap_or(Span { line: 1, col: 1 }),
                message: format!("expected identifier, found {other:?}"),
            }),
        }
    }

    fn expect_int(&mut self) -> Result<i64, ParseError> {
        let neg = matches!(self.peek(), Some(Tok::Punct('-')));
        if neg {
            self.next();
        }
        match self.next() {
            Some(Tok::Int(n)) => Ok(if neg { -n } else { n }),
            other => Err(ParseError {
                span: self.tokens.get(self.pos - 1).map(|t| t.span).unwrap_or(Span { line: 1, col: 1 }),
                message: format!("expected integer, found {other:?}"),
            }),
        }
    }

    fn eat_punct(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Punct(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.tokens.len()
    }
}

// ---------------------------------------------------------------------------
// Recipe documents
// ---------------------------------------------------------------------------

/// Generic argument of a node: positional value or `key=value`.
#[derive(Debug, Clone, PartialEq)]
enum Arg {
    Pos(Value),
    Key(String, Value),
}

#[derive(Debug, Clone, PartialEq)]
enum Value {
    Int(i64),
    Ident(String),
    Str(String),
    Node(String, Vec<Arg>),
    List(Vec<Value>),
}

fn parse_value(c: &mut Cursor) -> Result<Value, ParseError> {
    match c.peek().cloned() {
        Some(Tok::Int(_)) | Some(Tok::Punct('-')) => Ok(Value::Int(c.expect_int()?)),
        Some(Tok::Str(_)) => {
            let Some(Tok::Str(s)) = c.next() else { unreachable!() };
            Ok(Value::Str(s))
        }
        Some(Tok::Punct('[')) => {
            c.next();
            let mut items = Vec::new();
            if !c.eat_punct(']') {
                loop {
                    items.push(parse_value(c)?);
                    if c.eat_punct(']') {
                        break;
                    }
                    c.expect_punct(',')?;
                }
            }
            Ok(Value::List(items))
        }
        Some(Tok::Ident(_)) => {
            let name = c.expect_ident()?;
            if c.peek() == Some(&Tok::Punct('(')) {
                c.next();
                let mut args = Vec::new();
                if !c.eat_punct(')') {
                    loop {
                        args.push(parse_arg(c)?);
                        if c.eat_punct(')') {
                            break;
                        }
                        c.expect_punct(',')?;
                    }
                }
                Ok(Value::Node(name, args))
            } else {
                Ok(Value::Ident(name))
            }
        }
        other => Err(c.err(format!("expected a value, found {other:?}"))),
    }
}

fn parse_arg(c: &mut Cursor) -> Result<Arg, ParseError> {
    if let Some(Tok::Ident(name)) = c.peek().cloned() {
        // lookahead for `ident =`
        if c.tokens.get(c.pos + 1).map(|t| &t.tok) == Some(&Tok::Punct('=')) {
            c.next();
            c.next();
            return Ok(Arg::Key(name, parse_value(c)?));
        }
    }
    Ok(Arg::Pos(parse_value(c)?))
}

struct Args<'a> {
    name: &'a str,
    args: &'a [Arg],
    span: Span,
}

impl<'a> Args<'a> {
    fn key_int(&self, key: &str) -> Result<i64, ParseError> {
        for a in self.args {
            if let Arg::Key(k, Value::Int(v)) = a {
                if k == key {
                    return Ok(*v);
                }
            }
        }
        Err(ParseError { span: self.span, message: format!("{}: missing integer `{key}`", self.name) })
    }

    fn key_str(&self, key: &str) -> Result<String, ParseError> {
        for a in self.args {
            match a {
                Arg::Key(k, Value::Str(v)) if k == key => return Ok(v.clone()),
                Arg::Key(k, Value::Ident(v)) if k == key => return Ok(v.clone()),
                _ => {}
            }
        }
        Err(ParseError { span: self.span, message: format!("{}: missing string `{key}`", self.name) })
    }

    fn key_str_opt(&self, key: &str) -> Option<String> {
        self.args.iter().find_map(|a| match a {
            Arg::Key(k, Value::Str(v)) if k == key => Some(v.clone()),
            Arg::Key(k, Value::Ident(v)) if k == key => Some(v.clone()),
            _ => None,
        })
    }

    fn positional(&self) -> Vec<&Value> {
        self.args
            .iter()
            .filter_map(|a| match a {
                Arg::Pos(v) => Some(v),
                _ => None,
            })
            .collect()
    }

    fn key_list(&self, key: &str) -> Vec<&Value> {
        self.args
            .iter()
            .find_map(|a| match a {
                Arg::Key(k, Value::List(vs)) if k == key => Some(vs.iter().collect()),
                _ => None,
            })
            .unwrap_or_default()
    }
}

/// Parses a recipe document: `Recipe(rule="...", <node>)`.
pub fn parse_recipe(text: &str) -> Result<Recipe, ParseError> {
    let mut c = Cursor::new(text)?;
    let value = parse_value(&mut c)?;
    if !c.at_end() {
        return Err(c.err("trailing input after recipe"));
    }
    let Value::Node(name, args) = &value else {
        return Err(ParseError { span: Span { line: 1, col: 1 }, message: "expected a node".into() });
    };
    let span = Span { line: 1, col: 1 };
    if name == "Recipe" {
        let a = Args { name, args, span };
        let rule = a.key_str("rule")?;
        let positional = a.positional();
        let [node] = positional.as_slice() else {
            return Err(ParseError { span, message: "Recipe needs exactly one root node".into() });
        };
        Ok(Recipe { rule, root: value_to_node(node, span)? })
    } else {
        Ok(Recipe { rule: "unnamed".into(), root: value_to_node(&value, span)? })
    }
}

fn value_to_node(v: &Value, span: Span) -> Result<RecipeNode, ParseError> {
    let Value::Node(name, args) = v else {
        return Err(ParseError { span, message: "expected a node".into() });
    };
    let a = Args { name, args, span };
    let children: Vec<RecipeNode> = a
        .positional()
        .iter()
        .filter(|v| matches!(v, Value::Node(n, _) if n != "cert"))
        .map(|v| value_to_node(v, span))
        .collect::<Result<_, _>>()?;
    let kind = match name.as_str() {
        "Block" => {
            let positional = a.positional();
            let Some(Value::Ident(block)) = positional.first() else {
                return Err(ParseError { span, message: "Block needs a name".into() });
            };
            NodeKind::Block(parse_block_id(block, &a, span)?)
        }
        "FiberSum" => NodeKind::FiberSum {
            genus: a.key_int("genus")?,
            note: a.key_str_opt("note").unwrap_or_default(),
        },
        "Luttinger" => NodeKind::Luttinger {
            torus: a.key_str("torus")?,
            curve: a.key_str("curve")?,
            p: a.key_int("p")? as i32,
            q: a.key_int("q")? as i32,
        },
        "TorusSurgery" => NodeKind::TorusSurgery { p: a.key_int("p")? as i32, q: a.key_int("q")? as i32 },
        "BlowUp" => NodeKind::BlowUp { count: a.key_int("count")? },
        "Z2" => NodeKind::Z2Construction {
            genus: a.key_int("genus")?,
            mode: match a.key_str_opt("mode").as_deref() {
                Some("double") => Z2Kind::Double,
                Some("quotient") => Z2Kind::Quotient,
                Some("both") | None => Z2Kind::Z2Construction,
                Some(other) => {
                    return Err(ParseError { span, message: format!("unknown z2 mode `{other}`") })
                }
            },
        },
        "Lantern" => NodeKind::LanternSub { count: a.key_int("count")? },
        "Double" => NodeKind::FiberReversingDouble { genus: a.key_int("genus")? },
        "Reverse" => NodeKind::OrientationReversal,
        "External" => NodeKind::ExternalReference { key: a.key_str("key")? },
        other => return Err(ParseError { span, message: format!("unknown node kind `{other}`") }),
    };
    let mut certs = Vec::new();
    for v in a.key_list("certs") {
        certs.push(value_to_cert(v, span)?);
    }
    Ok(RecipeNode {
        kind,
        expected_e: a.key_int("e")?,
        expected_sigma: a.key_int("sigma")?,
        certs,
        children,
    })
}

fn parse_block_id(name: &str, a: &Args, span: Span) -> Result<BlockId, ParseError> {
    use BlockId::*;
    Ok(match name {
        "B" => B,
        "C" => C,
        "D" => D,
        "Bg" => Bg(a.key_int("g")?),
        "Zg" => Zg(a.key_int("g")?),
        "SurfaceProduct" => SurfaceProduct(a.key_int("g1")?, a.key_int("g2")?),
        "Ek" => Ek(a.key_int("k")?),
        "Ek2" => Ek2(a.key_int("k")?),
        "Ek22" => Ek22(a.key_int("k")?),
        "Eprime" => Eprime(a.key_int("k")?),
        "S11" => S11,
        "X312" => X312,
        "P58" => P58,
        "Pk" => Pk(a.key_int("k")?),
        "Zprime" => Zprime,
        "Zpp" => Zpp(a.key_int("q")?, a.key_int("r")?),
        "M11" => M11(a.key_int("r")?, a.key_int("q")?),
        "W1" => W1,
        "W2" => W2,
        "M" => M,
        "N0" => N0,
        "Nk" => Nk(a.key_int("k")?),
        "XgLF" => XgLF(a.key_int("g")?),
        "Bk4" => Bk4,
        "Bk8" => Bk8,
        "Bk9" => Bk9,
        "Bk12" => Bk12,
        "Bk14" => Bk14,
        "R18LF" => R18LF,
        "R19LF" => R19LF,
        "R312LF" => R312LF,
        "R314LF" => R314LF,
        "Q1P2" => Q1P2,
        other => return Err(ParseError { span, message: format!("unknown block `{other}`") }),
    })
}

fn value_to_cert(v: &Value, span: Span) -> Result<Cert, ParseError> {
    let Value::Node(name, args) = v else {
        return Err(ParseError { span, message: "certs entries must be cert(...)".into() });
    };
    if name != "cert" {
        return Err(ParseError { span, message: format!("expected cert(...), found {name}(...)") });
    }
    let a = Args { name, args, span };
    let positional = a.positional();
    let Some(Value::Ident(kind_name)) = positional.first() else {
        return Err(ParseError { span, message: "cert needs a kind".into() });
    };
    let anchor = a.key_str("anchor")?;
    let kind = match kind_name.as_str() {
        "meridian-trivial" => CertKind::MeridianTrivial,
        "complement-simply-connected" => CertKind::ComplementSimplyConnected,
        "simply-connected" => CertKind::SimplyConnected,
        "pi1-order-two" => CertKind::Pi1IsZ2,
        "relatively-minimal-pair" => CertKind::RelativelyMinimalPair,
        "minimal" => CertKind::Minimal,
        "odd-surface-disjoint" => CertKind::OddSurfaceDisjoint,
        "non-spin" => CertKind::NonSpin,
        "involution-commutes" => CertKind::InvolutionCommutes,
        "computed-pi1" => {
            let fixture = a.key_str("fixture")?;
            CertKind::ComputedPi1(parse_fixture(&fixture, &a, span)?)
        }
        other => return Err(ParseError { span, message: format!("unknown cert kind `{other}`") }),
    };
    Ok(Cert { kind, anchor })
}

fn parse_fixture(name: &str, a: &Args, span: Span) -> Result<Pi1Fixture, ParseError> {
    Ok(match name {
        "telescoping-surgery" => {
            Pi1Fixture::TelescopingSurgery { second_coeff: a.key_int("coeff")? as i32 }
        }
        "free-then-half" => Pi1Fixture::FreeThenHalf,
        "sigma3-schedule" => {
            Pi1Fixture::SurgeryScheduleSigma3 { base_genus: a.key_int("base-genus")? as usize }
        }
        "double-word-h1" => Pi1Fixture::DoubleWordH1 {
            g: a.key_int("g")? as usize,
            k: a.key_int("k")? as usize,
        },
        "amalgam-half-twist-square" => Pi1Fixture::AmalgamHalfTwistSquare,
        "amalgam-unit-square" => Pi1Fixture::AmalgamUnitSquare,
        "amalgam-rank-two-half" => Pi1Fixture::AmalgamRankTwoHalf,
        "amalgam-rank-two-unit" => Pi1Fixture::AmalgamRankTwoUnit,
        "zprime-surface-kill" => Pi1Fixture::ZprimeSurfaceKill,
        "luttinger-kill-genus-two-base" => Pi1Fixture::LuttingerKillGenusTwoBase,
        "luttinger-kill-torus-base" => Pi1Fixture::LuttingerKillTorusBase,
        "half-twist-on-free-cyclic" => Pi1Fixture::HalfTwistOnFreeCyclic,
        other => return Err(ParseError { span, message: format!("unknown fixture `{other}`") }),
    })
}

// --- printing ----------------------------------------------------------------

pub fn print_recipe(recipe: &Recipe) -> String {
    let mut out = String::new();
    out.push_str(&format!("Recipe(rule=\"{}\",\n", recipe.rule));
    print_node(&recipe.root, 1, &mut out);
    out.push_str(")\n");
    out
}

fn indent(depth: usize, out: &mut String) {
    for _ in 0..depth {
        out.push_str("  ");
    }
}

fn print_node(node: &RecipeNode, depth: usize, out: &mut String) {
    indent(depth, out);
    let head = match &node.kind {
        NodeKind::Block(id) => format!("Block({}", block_id_text(id)),
        NodeKind::FiberSum { genus, note } => {
            if note.is_empty() {
                format!("FiberSum(genus={genus}")
            } else {
                format!("FiberSum(genus={genus}, note=\"{note}\"")
            }
        }
        NodeKind::Luttinger { torus, curve, p, q } => {
            format!("Luttinger(torus=\"{torus}\", curve=\"{curve}\", p={p}, q={q}")
        }
        NodeKind::TorusSurgery { p, q } => format!("TorusSurgery(p={p}, q={q}"),
        NodeKind::BlowUp { count } => format!("BlowUp(count={count}"),
        NodeKind::Z2Construction { genus, mode } => {
            let mode = match mode {
                Z2Kind::Double => "double",
                Z2Kind::Quotient => "quotient",
                Z2Kind::Z2Construction => "both",
            };
            format!("Z2(genus={genus}, mode={mode}")
        }
        NodeKind::LanternSub { count } => format!("Lantern(count={count}"),
        NodeKind::FiberReversingDouble { genus } => format!("Double(genus={genus}"),
        NodeKind::OrientationReversal => "Reverse(".into(),
        NodeKind::ExternalReference { key } => format!("External(key=\"{key}\""),
    };
    out.push_str(&head);
    if !head.ends_with('(') {
        out.push_str(", ");
    }
    out.push_str(&format!("e={}, sigma={}", node.expected_e, node.expected_sigma));
    if !node.certs.is_empty() {
        out.push_str(", certs=[");
        for (i, cert) in node.certs.iter().enumerate() {
            if i > 0 {
                out.push_str(", ");
            }
            out.push_str(&cert_text(cert));
        }
        out.push(']');
    }
    for child in &node.children {
        out.push_str(",\n");
        print_node(child, depth + 1, out);
    }
    out.push(')');
}

fn block_id_text(id: &BlockId) -> String {
    use BlockId::*;
    match id {
        B => "B".into(),
        C => "C".into(),
        D => "D".into(),
        Bg(g) => format!("Bg, g={g}"),
        Zg(g) => format!("Zg, g={g}"),
        SurfaceProduct(g1, g2) => format!("SurfaceProduct, g1={g1}, g2={g2}"),
        Ek(k) => format!("Ek, k={k}"),
        Ek2(k) => format!("Ek2, k={k}"),
        Ek22(k) => format!("Ek22, k={k}"),
        Eprime(k) => format!("Eprime, k={k}"),
        S11 => "S11".into(),
        X312 => "X312".into(),
        P58 => "P58".into(),
        Pk(k) => format!("Pk, k={k}"),
        Zprime => "Zprime".into(),
        Zpp(q, r) => format!("Zpp, q={q}, r={r}"),
        M11(r, q) => format!("M11, r={r}, q={q}"),
        W1 => "W1".into(),
        W2 => "W2".into(),
        M => "M".into(),
        N0 => "N0".into(),
        Nk(k) => format!("Nk, k={k}"),
        XgLF(g) => format!("XgLF, g={g}"),
        Bk4 => "Bk4".into(),
        Bk8 => "Bk8".into(),
        Bk9 => "Bk9".into(),
        Bk12 => "Bk12".into(),
        Bk14 => "Bk14".into(),
        R18LF => "R18LF".into(),
        R19LF => "R19LF".into(),
        R312LF => "R312LF".into(),
        R314LF => "R314LF".into(),
        Q1P2 => "Q1P2".into(),
    }
}

fn cert_text(cert: &Cert) -> String {
    let kind = match &cert.kind {
        CertKind::MeridianTrivial => "meridian-trivial".to_string(),
        CertKind::ComplementSimplyConnected => "complement-simply-connected".to_string(),
        CertKind::SimplyConnected => "simply-connected".to_string(),
        CertKind::Pi1IsZ2 => "pi1-order-two".to_string(),
        CertKind::RelativelyMinimalPair => "relatively-minimal-pair".to_string(),
        CertKind::Minimal => "minimal".to_string(),
        CertKind::OddSurfaceDisjoint => "odd-surface-disjoint".to_string(),
        CertKind::NonSpin => "non-spin".to_string(),
        CertKind::InvolutionCommutes => "involution-commutes".to_string(),
        CertKind::ComputedPi1(fixture) => {
            return format!(
                "cert(computed-pi1, {}, anchor=\"{}\")",
                fixture_text(fixture),
                cert.anchor
            )
        }
    };
    format!("cert({kind}, anchor=\"{}\")", cert.anchor)
}

fn fixture_text(f: &Pi1Fixture) -> String {
    match f {
        Pi1Fixture::TelescopingSurgery { second_coeff } => {
            format!("fixture=telescoping-surgery, coeff={second_coeff}")
        }
        Pi1Fixture::FreeThenHalf => "fixture=free-then-half".into(),
        Pi1Fixture::SurgeryScheduleSigma3 { base_genus } => {
            format!("fixture=sigma3-schedule, base-genus={base_genus}")
        }
        Pi1Fixture::DoubleWordH1 { g, k } => format!("fixture=double-word-h1, g={g}, k={k}"),
        Pi1Fixture::AmalgamHalfTwistSquare => "fixture=amalgam-half-twist-square".into(),
        Pi1Fixture::AmalgamUnitSquare => "fixture=amalgam-unit-square".into(),
        Pi1Fixture::AmalgamRankTwoHalf => "fixture=amalgam-rank-two-half".into(),
        Pi1Fixture::AmalgamRankTwoUnit => "fixture=amalgam-rank-two-unit".into(),
        Pi1Fixture::ZprimeSurfaceKill => "fixture=zprime-surface-kill".into(),
        Pi1Fixture::LuttingerKillGenusTwoBase => "fixture=luttinger-kill-genus-two-base".into(),
        Pi1Fixture::LuttingerKillTorusBase => "fixture=luttinger-kill-torus-base".into(),
        Pi1Fixture::HalfTwistOnFreeCyclic => "fixture=half-twist-on-free-cyclic".into(),
    }
}

// ---------------------------------------------------------------------------
// Word literals
// ---------------------------------------------------------------------------

/// Parses a twist-word literal: concatenation of `t[name]`, optionally
/// `^int`, `conj(atom, by=word)`, `refl(atom)`, and parenthesized groups
/// with powers.
pub fn parse_word(text: &str) -> Result<MappingClassWord, ParseError> {
    let mut c = Cursor::new(text)?;
    let word = parse_word_seq(&mut c)?;
    if !c.at_end() {
        return Err(c.err("trailing input after word"));
    }
    Ok(word)
}

fn parse_word_seq(c: &mut Cursor) -> Result<MappingClassWord, ParseError> {
    let mut out = MappingClassWord::empty();
    loop {
        match c.peek() {
            Some(Tok::Ident(name)) if name == "t" || name == "conj" || name == "refl" => {
                let atom = parse_word_atom(c)?;
                out = out.concat(&atom);
            }
            Some(Tok::Punct('(')) => {
                c.next();
                let inner = parse_word_seq(c)?;
                c.expect_punct(')')?;
                let power = parse_power(c)?;
                out = out.concat(&word_power(&inner, power));
            }
            _ => break,
        }
    }
    Ok(out)
}

fn word_power(w: &MappingClassWord, power: i64) -> MappingClassWord {
    let base = if power >= 0 { w.clone() } else { w.inverse() };
    base.repeat(power.unsigned_abs() as usize)
}

fn parse_power(c: &mut Cursor) -> Result<i64, ParseError> {
    if c.eat_punct('^') {
        c.expect_int()
    } else {
        Ok(1)
    }
}

fn parse_word_atom(c: &mut Cursor) -> Result<MappingClassWord, ParseError> {
    let head = c.expect_ident()?;
    match head.as_str() {
        "t" => {
            c.expect_punct('[')?;
            let curve = c.expect_ident()?;
            c.expect_punct(']')?;
            let power = parse_power(c)?;
            if power == 0 {
                return Err(c.err("zero twist power"));
            }
            Ok(MappingClassWord::new(vec![Letter::twist_pow(&curve, power as i32)]))
        }
        "conj" => {
            c.expect_punct('(')?;
            let inner = parse_word_atom(c)?;
            c.expect_punct(',')?;
            let key = c.expect_ident()?;
            if key != "by" {
                return Err(c.err("conj needs `by=`"));
            }
            c.expect_punct('=')?;
            let by = if c.eat_punct('(') {
                let w = parse_word_seq(c)?;
                c.expect_punct(')')?;
                w
            } else {
                parse_word_atom(c)?
            };
            c.expect_punct(')')?;
            let letters = inner.letters.into_iter().map(|l| l.conjugated(by.clone())).collect();
            Ok(MappingClassWord::new(letters))
        }
        "refl" => {
            c.expect_punct('(')?;
            let inner = parse_word_atom(c)?;
            c.expect_punct(')')?;
            let letters = inner
                .letters
                .into_iter()
                .map(|mut l| {
                    l.reflected = !l.reflected;
                    l
                })
                .collect();
            Ok(MappingClassWord::new(letters))
        }
        other => Err(c.err(format!("expected t/conj/refl, found `{other}`"))),
    }
}

pub fn print_word(w: &MappingClassWord) -> String {
    let mut parts = Vec::new();
    for l in &w.letters {
        let mut s = format!("t[{}]", l.curve);
        if l.power != 1 {
            s.push_str(&format!("^{}", l.power));
        }
        if let Some(conj) = &l.conjugator {
            s = format!("conj({s}, by=({}))", print_word(conj));
        }
        if l.reflected {
            s = format!("refl({s})");
        }
        parts.push(s);
    }
    parts.join(" ")
}

// ---------------------------------------------------------------------------
// Presentation literals
// ---------------------------------------------------------------------------

/// Parses `group{ gens: a1,b2; rels: [a1,b2], a1, b2^2 }`.
pub fn parse_group(text: &str) -> Result<FpGroup, ParseError> {
    let mut c = Cursor::new(text)?;
    let head = c.expect_ident()?;
    if head != "group" {
        return Err(c.err("expected `group{...}`"));
    }
    c.expect_punct('{')?;
    let section = c.expect_ident()?;
    if section != "gens" {
        return Err(c.err("expected `gens:`"));
    }
    c.expect_punct(':')?;
    let mut gens = Vec::new();
    loop {
        gens.push(c.expect_ident()?);
        if !c.eat_punct(',') {
            break;
        }
    }
    let mut relators = Vec::new();
    if c.eat_punct(';') {
        let section = c.expect_ident()?;
        if section != "rels" {
            return Err(c.err("expected `rels:`"));
        }
        c.expect_punct(':')?;
        if c.peek() != Some(&Tok::Punct('}')) {
            loop {
                relators.push(parse_group_word(&mut c, &gens)?);
                if !c.eat_punct(',') {
                    break;
                }
            }
        }
    }
    c.expect_punct('}')?;
    if !c.at_end() {
        return Err(c.err("trailing input after presentation"));
    }
    FpGroup::new(gens, relators).map_err(|e| ParseError { span: Span { line: 1, col: 1 }, message: e.to_string() })
}

/// One relator word: generators with powers, commutators `[u,v]`, and
/// parenthesized groups, concatenated (optionally with `*`).
fn parse_group_word(c: &mut Cursor, gens: &[String]) -> Result<Word, ParseError> {
    let mut out = Word::empty();
    loop {
        let atom = match c.peek() {
            Some(Tok::Ident(_)) => {
                let name = c.expect_ident()?;
                let idx = gens
                    .iter()
                    .position(|g| *g == name)
                    .ok_or_else(|| c.err(format!("unknown generator `{name}`")))?;
                Word::gen(idx)
            }
            Some(Tok::Punct('[')) => {
                c.next();
                let u = parse_group_word(c, gens)?;
                c.expect_punct(',')?;
                let v = parse_group_word(c, gens)?;
                c.expect_punct(']')?;
                Word::commutator(&u, &v)
            }
            Some(Tok::Punct('(')) => {
                c.next();
                let w = parse_group_word(c, gens)?;
                c.expect_punct(')')?;
                w
            }
            _ => break,
        };
        let power = parse_power(c)?;
        out = out.concat(&atom.pow(power as i32));
        c.eat_punct('*');
    }
    if out.is_empty() && !matches!(c.peek(), Some(Tok::Punct(',')) | Some(Tok::Punct('}')) | None) {
        return Err(c.err("expected a word"));
    }
    Ok(out)
}

/// Parses a standalone word over the named generators.
pub fn parse_word_over(text: &str, gens: &[String]) -> Result<Word, ParseError> {
    let mut c = Cursor::new(text)?;
    let w = parse_group_word(&mut c, gens)?;
    if !c.at_end() {
        return Err(c.err("trailing input after word"));
    }
    Ok(w)
}

pub fn print_group(g: &FpGroup) -> String {
    let rels: Vec<String> = g.relators.iter().map(|r| print_group_word(r, &g.gens)).collect();
    format!("group{{ gens: {}; rels: {} }}", g.gens.join(","), rels.join(", "))
}

pub fn print_group_word(w: &Word, gens: &[String]) -> String {
    let mut parts = Vec::new();
    let mut i = 0;
    while i < w.0.len() {
        let l = w.0[i];
        let idx = l.unsigned_abs() as usize - 1;
        let mut count = 1i64;
        while i + 1 < w.0.len() && w.0[i + 1] == l {
            count += 1;
            i += 1;
        }
        let exp = if l > 0 { count } else { -count };
        if exp == 1 {
            parts.push(gens[idx].clone());
        } else {
            parts.push(format!("{}^{}", gens[idx], exp));
        }
        i += 1;
    }
    parts.join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use geo4::geography::{plan, LatticePoint, PlanOutcome};

    #[test]
    fn recipe_round_trip_on_planned_points() {
        for (m, n) in [(2, 14), (2, 5), (4, 7), (3, 6), (6, 15), (9, 2), (2, 4), (5, 8)] {
            let PlanOutcome::Realized(r) = plan(LatticePoint::new(m, n)).unwrap() else {
                panic!("expected realized ({m},{n})")
            };
            let text = print_recipe(&r);
            let back = parse_recipe(&text).unwrap_or_else(|e| panic!("({m},{n}): {e}\n{text}"));
            assert_eq!(back, *r, "({m},{n})");
        }
    }

    #[test]
    fn recipe_shortform_parses() {
        let r = parse_recipe("Z2(genus=2, e=18, sigma=-12, Block(XgLF, g=2, e=16, sigma=-12))").unwrap();
        assert_eq!(r.rule, "unnamed");
        assert!(matches!(r.root.kind, NodeKind::Z2Construction { genus: 2, .. }));
        assert_eq!(r.root.children.len(), 1);
    }

    #[test]
    fn recipe_errors_have_spans() {
        let err = parse_recipe("Z2(genus=2, e=18, sigma=-12,\n  Block(XgLF, g=2, e=16, sigma=-12)").unwrap_err();
        assert!(err.span.line >= 1);
        let err = parse_recipe("Nope(e=1, sigma=0)").unwrap_err();
        assert!(err.message.contains("unknown node kind"));
    }

    #[test]
    fn word_literals() {
        let w = parse_word("t[c1] t[c3]^-1 conj(t[b], by=(t[c1] t[c2])) refl(t[y])").unwrap();
        assert_eq!(w.len(), 4);
        assert_eq!(w.letters[1].power, -1);
        assert!(w.letters[2].conjugator.is_some());
        assert!(w.letters[3].reflected);
        // whitespace-insensitive
        let dense = parse_word("t[c1]t[c3]^-1conj(t[b],by=(t[c1]t[c2]))refl(t[y])").unwrap();
        assert_eq!(dense, w);
        // round trip
        let text = print_word(&w);
        assert_eq!(parse_word(&text).unwrap(), w);
        // groups with powers
        let w = parse_word("(t[a] t[b])^3").unwrap();
        assert_eq!(w.len(), 6);
        let w = parse_word("(t[a] t[b])^-1").unwrap();
        assert_eq!(w.len(), 2);
        assert_eq!(w.letters[0].curve, "b");
        assert_eq!(w.letters[0].power, -1);
    }

    #[test]
    fn group_literals() {
        let g = parse_group("group{ gens: a1,b2; rels: [a1,b2], a1, b2^2 }").unwrap();
        assert_eq!(g.gens, vec!["a1", "b2"]);
        assert_eq!(g.relators.len(), 3);
        assert_eq!(g.relators[0], Word(vec![1, 2, -1, -2]));
        assert_eq!(g.relators[2], Word(vec![2, 2]));
        let ab = g.abelianization();
        assert!(ab.is_cyclic_of_order(2));
        // nested commutators and inverses
        let g = parse_group("group{ gens: x,y; rels: [x^-1, y^-1] x }").unwrap();
        assert_eq!(g.relators.len(), 1);
        assert_eq!(g.relators[0], Word(vec![-1, -2, 1, 2, 1]));
        // round trip through the printer
        let g = parse_group("group{ gens: a,b; rels: a b^-2, [a,b] }").unwrap();
        let text = print_group(&g);
        assert_eq!(parse_group(&text).unwrap(), g);
    }
}
