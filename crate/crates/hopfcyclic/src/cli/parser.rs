//! The presentation-file parser: line-oriented blocks of sparse
//! structure constants over exact rationals.
//!
//! A file is a sequence of declarations
//! `kind Name { statement; statement; … }` with kinds
//! `lie | hopf | group | module | comodule | matchedpair | liehopf`,
//! plus optional `expect fail Name check-name;` directives used by
//! negative-control corpus files. Omitted structure constants default to
//! zero; whitespace is insignificant; `#` starts a comment.

use crate::exactlin::matrix::FreeSpace;
use crate::hopf::HopfPresentation;
use crate::liecyclic::LieDatum;
use crate::matchedpair::matched::{trivial_matched_pair, MatchedPairDatum};
use crate::matchedpair::{exact_factorization, group_hopf, LieHopfDatum};
use crate::sayd::{LeftComodule, ModuleComodule, RightModule};
use crate::scalar::Rat;
use crate::Mat;
use num_bigint::BigInt;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for ParseError {}

/// A parsed object with its references already resolved.
#[derive(Clone, Debug)]
pub enum Object {
    Lie(LieDatum),
    Hopf(HopfPresentation),
    Group {
        hopf: HopfPresentation,
        labels: Vec<String>,
        table: Vec<Vec<usize>>,
    },
    Module {
        over: String,
        module: RightModule,
    },
    Comodule {
        over: String,
        datum: ModuleComodule,
        has_action: bool,
    },
    Matched(MatchedPairDatum),
    LieHopf(LieHopfDatum),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Lie(_) => "lie",
            Object::Hopf(_) => "hopf",
            Object::Group { .. } => "group",
            Object::Module { .. } => "module",
            Object::Comodule { .. } => "comodule",
            Object::Matched(_) => "matchedpair",
            Object::LieHopf(_) => "liehopf",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Declaration {
    pub name: String,
    pub object: Object,
}

#[derive(Clone, Debug, Default)]
pub struct PresentationFile {
    pub declarations: Vec<Declaration>,
    /// `(declaration name, check name)` pairs expected to fail.
    pub expect_failures: Vec<(String, String)>,
}

impl PresentationFile {
    pub fn find(&self, name: &str) -> Option<&Declaration> {
        self.declarations.iter().find(|d| d.name == name)
    }
}

#[derive(Clone, Debug)]
struct Tok {
    text: String,
    line: usize,
    col: usize,
    punct: bool,
}

const PUNCT: &str = "{}();=*+,";

fn tokenize(src: &str) -> Vec<Tok> {
    let mut out = Vec::new();
    let mut line = 1;
    let mut col = 0;
    let mut cur = String::new();
    let mut cur_pos = (1, 1);
    let mut in_comment = false;
    let flush = |out: &mut Vec<Tok>, cur: &mut String, pos: (usize, usize)| {
        if !cur.is_empty() {
            out.push(Tok {
                text: std::mem::take(cur),
                line: pos.0,
                col: pos.1,
                punct: false,
            });
        }
    };
    for ch in src.chars() {
        if ch == '\n' {
            flush(&mut out, &mut cur, cur_pos);
            line += 1;
            col = 0;
            in_comment = false;
            continue;
        }
        col += 1;
        if in_comment {
            continue;
        }
        if ch == '#' {
            flush(&mut out, &mut cur, cur_pos);
            in_comment = true;
        } else if ch.is_whitespace() {
            flush(&mut out, &mut cur, cur_pos);
        } else if PUNCT.contains(ch) {
            flush(&mut out, &mut cur, cur_pos);
            out.push(Tok {
                text: ch.to_string(),
                line,
                col,
                punct: true,
            });
        } else {
            if cur.is_empty() {
                cur_pos = (line, col);
            }
            cur.push(ch);
        }
    }
    flush(&mut out, &mut cur, cur_pos);
    out
}

fn try_rational(text: &str) -> Option<Rat> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let n: BigInt = num.parse().ok()?;
    let d: BigInt = den.parse().ok()?;
    if d == BigInt::from(0) {
        return None;
    }
    Some(Rat::new(n, d))
}

fn looks_numeric(text: &str) -> bool {
    let body = text.strip_prefix('-').unwrap_or(text);
    !body.is_empty() && body.chars().all(|c| c.is_ascii_digit() || c == '/')
}

struct Statements {
    /// statement keyword, its arguments before `=`, and the right-hand side
    items: Vec<(Tok, Vec<Tok>, Vec<Tok>)>,
}

fn err(t: &Tok, msg: impl Into<String>) -> ParseError {
    ParseError {
        line: t.line,
        col: t.col,
        msg: msg.into(),
    }
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Result<&Tok, ParseError> {
        let t = self.toks.get(self.pos).ok_or_else(|| ParseError {
            line: 0,
            col: 0,
            msg: "unexpected end of input".into(),
        })?;
        self.pos += 1;
        Ok(t)
    }

    fn expect_punct(&mut self, c: char) -> Result<(), ParseError> {
        let t = self.next()?.clone();
        if t.punct && t.text == c.to_string() {
            Ok(())
        } else {
            Err(err(&t, format!("expected `{c}`, found `{}`", t.text)))
        }
    }

    fn expect_word(&mut self) -> Result<Tok, ParseError> {
        let t = self.next()?.clone();
        if t.punct {
            Err(err(&t, format!("expected a name, found `{}`", t.text)))
        } else {
            Ok(t)
        }
    }

    /// Statements of one `{ … }` block, split on `;`.
    fn block(&mut self) -> Result<Statements, ParseError> {
        self.expect_punct('{')?;
        let mut items = Vec::new();
        loop {
            let t = self.next()?.clone();
            if t.punct && t.text == "}" {
                break;
            }
            if t.punct {
                return Err(err(&t, format!("expected a statement, found `{}`", t.text)));
            }
            let keyword = t;
            let mut args = Vec::new();
            let mut rhs = Vec::new();
            let mut seen_eq = false;
            loop {
                let u = self.next()?.clone();
                if u.punct && u.text == ";" {
                    break;
                }
                if u.punct && u.text == "}" {
                    return Err(err(&u, "missing `;` before `}`"));
                }
                if u.punct && u.text == "=" && !seen_eq {
                    seen_eq = true;
                } else if seen_eq {
                    rhs.push(u);
                } else {
                    args.push(u);
                }
            }
            items.push((keyword, args, rhs));
        }
        Ok(Statements { items })
    }
}

/// Basis-resolving expression helpers.
struct Basis<'a> {
    space: &'a FreeSpace,
}

impl<'a> Basis<'a> {
    fn resolve(&self, t: &Tok, label: &str) -> Result<usize, ParseError> {
        self.space
            .labels()
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| err(t, format!("unresolved basis label `{label}`")))
    }

    /// An atom: a label, or `( l1 l2 … )` concatenated into one label.
    fn atom(&self, toks: &[Tok], i: &mut usize) -> Result<usize, ParseError> {
        let t = toks
            .get(*i)
            .ok_or_else(|| ParseError {
                line: 0,
                col: 0,
                msg: "expected a basis element".into(),
            })?
            .clone();
        *i += 1;
        if t.punct && t.text == "(" {
            let mut label = String::new();
            loop {
                let u = toks
                    .get(*i)
                    .ok_or_else(|| err(&t, "unterminated `(`"))?
                    .clone();
                *i += 1;
                if u.punct && u.text == ")" {
                    break;
                }
                if u.punct {
                    return Err(err(&u, format!("unexpected `{}` inside `()`", u.text)));
                }
                label.push_str(&u.text);
            }
            self.resolve(&t, &label)
        } else if t.punct {
            Err(err(&t, format!("expected a basis element, found `{}`", t.text)))
        } else {
            self.resolve(&t, &t.text)
        }
    }
}

fn parse_coeff(toks: &[Tok], i: &mut usize) -> Result<Rat, ParseError> {
    // a numeric token is a coefficient when an atom follows it
    let mut coeff = crate::rat(1);
    if let Some(t) = toks.get(*i) {
        if !t.punct && looks_numeric(&t.text) {
            let atom_follows = toks
                .get(*i + 1)
                .map_or(false, |u| !u.punct || u.text == "(");
            if atom_follows {
                coeff = try_rational(&t.text)
                    .ok_or_else(|| err(t, format!("malformed rational `{}`", t.text)))?;
                *i += 1;
            }
        }
    }
    Ok(coeff)
}

fn term_sign(toks: &[Tok], i: &mut usize, first: bool) -> Result<Option<Rat>, ParseError> {
    match toks.get(*i) {
        None => Ok(None),
        Some(t) if t.punct && t.text == "+" => {
            *i += 1;
            Ok(Some(crate::rat(1)))
        }
        Some(t) if !t.punct && t.text.starts_with('-') && looks_numeric(&t.text) && !first => {
            // a negative coefficient doubles as the separator
            Ok(Some(crate::rat(1)))
        }
        Some(t) if first => {
            let _ = t;
            Ok(Some(crate::rat(1)))
        }
        Some(t) => Err(err(t, format!("expected `+`, found `{}`", t.text))),
    }
}

/// `c1 a1 + c2 a2 + …` as a column vector over the basis.
fn vector_expr(toks: &[Tok], basis: &Basis) -> Result<Mat, ParseError> {
    let d = basis.space.dimension();
    let mut out = Mat::zero(d, 1);
    let mut i = 0;
    let mut first = true;
    while let Some(sign) = term_sign(toks, &mut i, first)? {
        first = false;
        let coeff = parse_coeff(toks, &mut i)?;
        let a = basis.atom(toks, &mut i)?;
        let cur = out.get(a, 0) + sign * coeff;
        out.set(a, 0, cur);
    }
    Ok(out)
}

/// `c1 a1*b1 + c2 a2*b2 + …` as a column vector over `A⊗B` (A slow).
fn tensor_expr(toks: &[Tok], left: &Basis, right: &Basis) -> Result<Mat, ParseError> {
    let da = left.space.dimension();
    let db = right.space.dimension();
    let mut out = Mat::zero(da * db, 1);
    let mut i = 0;
    let mut first = true;
    while let Some(sign) = term_sign(toks, &mut i, first)? {
        first = false;
        let coeff = parse_coeff(toks, &mut i)?;
        let a = left.atom(toks, &mut i)?;
        match toks.get(i) {
            Some(t) if t.punct && t.text == "*" => i += 1,
            other => {
                let t = other.or_else(|| toks.last()).expect("nonempty term");
                return Err(err(t, "expected `*` between tensor factors"));
            }
        }
        let b = right.atom(toks, &mut i)?;
        let cur = out.get(a * db + b, 0) + sign * coeff;
        out.set(a * db + b, 0, cur);
    }
    Ok(out)
}

/// `r` as a plain rational right-hand side.
fn rational_expr(toks: &[Tok], keyword: &Tok) -> Result<Rat, ParseError> {
    if toks.len() != 1 {
        return Err(err(keyword, "expected a single rational"));
    }
    let t = &toks[0];
    try_rational(&t.text).ok_or_else(|| err(t, format!("malformed rational `{}`", t.text)))
}

fn basis_of(stmts: &Statements, header: &Tok) -> Result<FreeSpace, ParseError> {
    let mut labels: Option<Vec<String>> = None;
    let mut dim: Option<usize> = None;
    for (kw, args, rhs) in &stmts.items {
        match kw.text.as_str() {
            "basis" | "elements" => {
                if !rhs.is_empty() {
                    return Err(err(kw, "basis takes no `=`"));
                }
                labels = Some(args.iter().map(|t| t.text.clone()).collect());
            }
            "dim" => {
                let t = args.first().ok_or_else(|| err(kw, "dim needs a number"))?;
                dim = Some(
                    t.text
                        .parse()
                        .map_err(|_| err(t, format!("malformed dimension `{}`", t.text)))?,
                );
            }
            _ => {}
        }
    }
    let labels = match labels {
        Some(l) => l,
        None => match dim {
            Some(n) => (0..n).map(|i| format!("e{i}")).collect(),
            None => return Err(err(header, "declaration needs a `basis` or `dim`")),
        },
    };
    if let Some(n) = dim {
        if n != labels.len() {
            return Err(err(header, "dim disagrees with the basis length"));
        }
    }
    Ok(FreeSpace::new(labels))
}

fn build_lie(stmts: &Statements, header: &Tok) -> Result<LieDatum, ParseError> {
    let space = basis_of(stmts, header)?;
    let d = space.dimension();
    let basis = Basis { space: &space };
    let mut bracket = Mat::zero(d, d * d);
    for (kw, args, rhs) in &stmts.items {
        if kw.text != "bracket" {
            continue;
        }
        let mut i = 0;
        let a = basis.atom(args, &mut i)?;
        let b = basis.atom(args, &mut i)?;
        let v = vector_expr(rhs, &basis)?;
        for (r, _, c) in v.iter() {
            bracket.set(r, a * d + b, c.clone());
            bracket.set(r, b * d + a, -c.clone());
        }
    }
    Ok(LieDatum { space, bracket })
}

fn build_hopf(stmts: &Statements, header: &Tok) -> Result<HopfPresentation, ParseError> {
    let space = basis_of(stmts, header)?;
    let d = space.dimension();
    let basis = Basis { space: &space };
    let mut mult = Mat::zero(d, d * d);
    let mut unit = Mat::zero(d, 1);
    let mut comult = Mat::zero(d * d, d);
    let mut counit = Mat::zero(1, d);
    let mut antipode = Mat::zero(d, d);
    for (kw, args, rhs) in &stmts.items {
        match kw.text.as_str() {
            "basis" | "dim" => {}
            "mul" => {
                let mut i = 0;
                let a = basis.atom(args, &mut i)?;
                let b = basis.atom(args, &mut i)?;
                let v = vector_expr(rhs, &basis)?;
                for (r, _, c) in v.iter() {
                    mult.set(r, a * d + b, c.clone());
                }
            }
            "unit" => {
                unit = vector_expr(rhs, &basis)?;
            }
            "counit" => {
                let mut i = 0;
                let a = basis.atom(args, &mut i)?;
                counit.set(0, a, rational_expr(rhs, kw)?);
            }
            "comul" => {
                let mut i = 0;
                let a = basis.atom(args, &mut i)?;
                let v = tensor_expr(rhs, &basis, &basis)?;
                for (r, _, c) in v.iter() {
                    comult.set(r, a, c.clone());
                }
            }
            "antipode" => {
                let mut i = 0;
                let a = basis.atom(args, &mut i)?;
                let v = vector_expr(rhs, &basis)?;
                for (r, _, c) in v.iter() {
                    antipode.set(r, a, c.clone());
                }
            }
            other => {
                return Err(err(kw, format!("unknown hopf statement `{other}`")));
            }
        }
    }
    Ok(HopfPresentation {
        space,
        mult,
        unit,
        comult,
        counit,
        antipode,
        truncation: None,
    })
}

fn build_group(stmts: &Statements, header: &Tok) -> Result<Object, ParseError> {
    let space = basis_of(stmts, header)?;
    let labels: Vec<String> = space.labels().to_vec();
    let n = labels.len();
    let basis = Basis { space: &space };
    let mut table: Vec<Option<Vec<usize>>> = vec![None; n];
    for (kw, args, rhs) in &stmts.items {
        match kw.text.as_str() {
            "elements" | "basis" | "dim" => {}
            "row" => {
                let mut i = 0;
                let a = basis.atom(args, &mut i)?;
                if rhs.len() != n {
                    return Err(err(kw, format!("row needs exactly {n} products")));
                }
                let mut row = Vec::with_capacity(n);
                for t in rhs {
                    row.push(basis.resolve(t, &t.text)?);
                }
                table[a] = Some(row);
            }
            other => {
                return Err(err(kw, format!("unknown group statement `{other}`")));
            }
        }
    }
    let table: Vec<Vec<usize>> = table
        .into_iter()
        .enumerate()
        .map(|(i, r)| r.ok_or_else(|| err(header, format!("missing row for `{}`", labels[i]))))
        .collect::<Result<_, _>>()?;
    let e = (0..n)
        .find(|&e| (0..n).all(|j| table[e][j] == j && table[j][e] == j))
        .ok_or_else(|| err(header, "multiplication table has no identity"))?;
    for i in 0..n {
        if !(0..n).any(|j| table[i][j] == e) {
            return Err(err(header, format!("`{}` has no inverse", labels[i])));
        }
    }
    let refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
    Ok(Object::Group {
        hopf: group_hopf(&refs, &table),
        labels,
        table,
    })
}

fn lookup<'a>(
    decls: &'a [Declaration],
    t: &Tok,
) -> Result<&'a Declaration, ParseError> {
    decls
        .iter()
        .find(|d| d.name == t.text)
        .ok_or_else(|| err(t, format!("unresolved reference `{}`", t.text)))
}

fn hopf_of<'a>(decl: &'a Declaration, t: &Tok) -> Result<&'a HopfPresentation, ParseError> {
    match &decl.object {
        Object::Hopf(h) => Ok(h),
        Object::Group { hopf, .. } => Ok(hopf),
        _ => Err(err(t, format!("`{}` is not a hopf algebra", t.text))),
    }
}

fn single_ref<'a>(
    stmts: &'a Statements,
    key: &str,
    header: &Tok,
) -> Result<&'a Tok, ParseError> {
    for (kw, _, rhs) in &stmts.items {
        if kw.text == key {
            return rhs
                .first()
                .ok_or_else(|| err(kw, format!("`{key}` needs a name")));
        }
    }
    Err(err(header, format!("declaration needs `{key} = <name>`")))
}

fn build_module(
    stmts: &Statements,
    header: &Tok,
    over: &Tok,
    decls: &[Declaration],
) -> Result<Object, ParseError> {
    let h = hopf_of(lookup(decls, over)?, over)?;
    let space = basis_of(stmts, header)?;
    let vd = space.dimension();
    let hd = h.dim();
    let vb = Basis { space: &space };
    let hb = Basis { space: &h.space };
    let mut action: Option<Mat> = None;
    for (kw, args, rhs) in &stmts.items {
        if kw.text != "action" {
            continue;
        }
        let mut i = 0;
        let v = vb.atom(args, &mut i)?;
        let a = hb.atom(args, &mut i)?;
        let val = vector_expr(rhs, &vb)?;
        let m = action.get_or_insert_with(|| Mat::zero(vd, vd * hd));
        for (r, _, c) in val.iter() {
            m.set(r, v * hd + a, c.clone());
        }
    }
    let module = match action {
        Some(action) => RightModule { space, action },
        None => RightModule::trivial(h, space),
    };
    Ok(Object::Module {
        over: over.text.clone(),
        module,
    })
}

fn build_comodule(
    stmts: &Statements,
    header: &Tok,
    over: &Tok,
    decls: &[Declaration],
) -> Result<Object, ParseError> {
    let h = hopf_of(lookup(decls, over)?, over)?;
    let space = basis_of(stmts, header)?;
    let vd = space.dimension();
    let hd = h.dim();
    let vb = Basis { space: &space };
    let hb = Basis { space: &h.space };
    let mut action: Option<Mat> = None;
    let mut coaction: Option<Mat> = None;
    for (kw, args, rhs) in &stmts.items {
        match kw.text.as_str() {
            "action" => {
                let mut i = 0;
                let v = vb.atom(args, &mut i)?;
                let a = hb.atom(args, &mut i)?;
                let val = vector_expr(rhs, &vb)?;
                let m = action.get_or_insert_with(|| Mat::zero(vd, vd * hd));
                for (r, _, c) in val.iter() {
                    m.set(r, v * hd + a, c.clone());
                }
            }
            "coaction" => {
                let mut i = 0;
                let v = vb.atom(args, &mut i)?;
                let val = tensor_expr(rhs, &hb, &vb)?;
                let m = coaction.get_or_insert_with(|| Mat::zero(hd * vd, vd));
                for (r, _, c) in val.iter() {
                    m.set(r, v, c.clone());
                }
            }
            _ => {}
        }
    }
    let has_action = action.is_some();
    let module = match action {
        Some(action) => RightModule {
            space: space.clone(),
            action,
        },
        None => RightModule::trivial(h, space.clone()),
    };
    let comodule = match coaction {
        Some(coaction) => LeftComodule { space, coaction },
        None => LeftComodule::trivial(h, space),
    };
    Ok(Object::Comodule {
        over: over.text.clone(),
        datum: ModuleComodule { module, comodule },
        has_action,
    })
}

fn build_matchedpair(
    stmts: &Statements,
    header: &Tok,
    decls: &[Declaration],
) -> Result<Object, ParseError> {
    // factorization form: `group = G; g1 = …; g2 = …;`
    if stmts.items.iter().any(|(kw, _, _)| kw.text == "group") {
        let gref = single_ref(stmts, "group", header)?;
        let decl = lookup(decls, gref)?;
        let (labels, table) = match &decl.object {
            Object::Group { labels, table, .. } => (labels, table),
            _ => return Err(err(gref, format!("`{}` is not a group", gref.text))),
        };
        let resolve_list = |key: &str| -> Result<Vec<usize>, ParseError> {
            for (kw, _, rhs) in &stmts.items {
                if kw.text == key {
                    return rhs
                        .iter()
                        .map(|t| {
                            labels
                                .iter()
                                .position(|l| *l == t.text)
                                .ok_or_else(|| {
                                    err(t, format!("unresolved group element `{}`", t.text))
                                })
                        })
                        .collect();
                }
            }
            Err(err(header, format!("factorization needs `{key} = …`")))
        };
        let g1 = resolve_list("g1")?;
        let g2 = resolve_list("g2")?;
        let refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
        let datum = exact_factorization(&refs, table, &g1, &g2)
            .map_err(|e| err(header, e.to_string()))?;
        return Ok(Object::Matched(datum));
    }
    // explicit form: `u = …; f = …; action a x = …; coaction a = …;`
    let uref = single_ref(stmts, "u", header)?;
    let fref = single_ref(stmts, "f", header)?;
    let u = hopf_of(lookup(decls, uref)?, uref)?.clone();
    let f = hopf_of(lookup(decls, fref)?, fref)?.clone();
    let mut datum = trivial_matched_pair(&u, &f);
    let du = u.dim();
    let df = f.dim();
    let ub = Basis { space: &u.space };
    let fb = Basis { space: &f.space };
    let mut action: Option<Mat> = None;
    let mut coaction: Option<Mat> = None;
    for (kw, args, rhs) in &stmts.items {
        match kw.text.as_str() {
            "action" => {
                let mut i = 0;
                let a = ub.atom(args, &mut i)?;
                let x = fb.atom(args, &mut i)?;
                let val = vector_expr(rhs, &fb)?;
                let m = action.get_or_insert_with(|| Mat::zero(df, du * df));
                for (r, _, c) in val.iter() {
                    m.set(r, a * df + x, c.clone());
                }
            }
            "coaction" => {
                let mut i = 0;
                let a = ub.atom(args, &mut i)?;
                let val = tensor_expr(rhs, &ub, &fb)?;
                let m = coaction.get_or_insert_with(|| Mat::zero(du * df, du));
                for (r, _, c) in val.iter() {
                    m.set(r, a, c.clone());
                }
            }
            _ => {}
        }
    }
    if let Some(a) = action {
        datum.action = a;
    }
    if let Some(c) = coaction {
        datum.coaction = c;
    }
    Ok(Object::Matched(datum))
}

fn build_liehopf(
    stmts: &Statements,
    header: &Tok,
    decls: &[Declaration],
) -> Result<Object, ParseError> {
    let gref = single_ref(stmts, "g", header)?;
    let fref = single_ref(stmts, "f", header)?;
    let g = match &lookup(decls, gref)?.object {
        Object::Lie(g) => g.clone(),
        _ => return Err(err(gref, format!("`{}` is not a lie algebra", gref.text))),
    };
    let f = hopf_of(lookup(decls, fref)?, fref)?.clone();
    let d = g.dim();
    let df = f.dim();
    let gb = Basis { space: &g.space };
    let fb = Basis { space: &f.space };
    let mut action = Mat::zero(df, d * df);
    let mut coaction: Option<Mat> = None;
    for (kw, args, rhs) in &stmts.items {
        match kw.text.as_str() {
            "action" => {
                let mut i = 0;
                let x = gb.atom(args, &mut i)?;
                let a = fb.atom(args, &mut i)?;
                let val = vector_expr(rhs, &fb)?;
                for (r, _, c) in val.iter() {
                    action.set(r, x * df + a, c.clone());
                }
            }
            "coaction" => {
                let mut i = 0;
                let x = gb.atom(args, &mut i)?;
                let val = tensor_expr(rhs, &gb, &fb)?;
                let m =
                    coaction.get_or_insert_with(|| Mat::zero(d * df, d));
                for (r, _, c) in val.iter() {
                    m.set(r, x, c.clone());
                }
            }
            _ => {}
        }
    }
    let coaction = coaction.unwrap_or_else(|| Mat::identity(d).kron(&f.unit));
    Ok(Object::LieHopf(LieHopfDatum {
        g,
        f,
        action,
        coaction,
    }))
}

/// Parse a complete presentation file.
pub fn parse_str(src: &str) -> Result<PresentationFile, ParseError> {
    let mut p = Parser {
        toks: tokenize(src),
        pos: 0,
    };
    let mut file = PresentationFile::default();
    let mut names: BTreeMap<String, usize> = BTreeMap::new();
    while p.peek().is_some() {
        let kind = p.expect_word()?;
        if kind.text == "expect" {
            let fail = p.expect_word()?;
            if fail.text != "fail" {
                return Err(err(&fail, "expected `fail`"));
            }
            let name = p.expect_word()?;
            let check = p.expect_word()?;
            p.expect_punct(';')?;
            file.expect_failures.push((name.text, check.text));
            continue;
        }
        let name = p.expect_word()?;
        if names.contains_key(&name.text) {
            return Err(err(&name, format!("duplicate name `{}`", name.text)));
        }
        let over = if kind.text == "module" || kind.text == "comodule" {
            let kw = p.expect_word()?;
            if kw.text != "over" {
                return Err(err(&kw, "expected `over`"));
            }
            Some(p.expect_word()?)
        } else {
            None
        };
        let stmts = p.block()?;
        let object = match kind.text.as_str() {
            "lie" => Object::Lie(build_lie(&stmts, &kind)?),
            "hopf" => Object::Hopf(build_hopf(&stmts, &kind)?),
            "group" => build_group(&stmts, &kind)?,
            "module" => build_module(
                &stmts,
                &kind,
                over.as_ref().expect("checked above"),
                &file.declarations,
            )?,
            "comodule" => build_comodule(
                &stmts,
                &kind,
                over.as_ref().expect("checked above"),
                &file.declarations,
            )?,
            "matchedpair" => build_matchedpair(&stmts, &kind, &file.declarations)?,
            "liehopf" => build_liehopf(&stmts, &kind, &file.declarations)?,
            other => {
                return Err(err(&kind, format!("unknown declaration kind `{other}`")));
            }
        };
        names.insert(name.text.clone(), file.declarations.len());
        file.declarations.push(Declaration {
            name: name.text,
            object,
        });
    }
    // expectations must reference declared names
    for (name, _) in &file.expect_failures {
        if !names.contains_key(name) {
            return Err(ParseError {
                line: 0,
                col: 0,
                msg: format!("unresolved reference `{name}` in expect directive"),
            });
        }
    }
    Ok(file)
}

/// Parse a file from disk; IO problems surface as a zero-position error.
pub fn parse_file(path: &std::path::Path) -> Result<PresentationFile, ParseError> {
    let src = std::fs::read_to_string(path).map_err(|e| ParseError {
        line: 0,
        col: 0,
        msg: format!("cannot read {}: {e}", path.display()),
    })?;
    parse_str(&src)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::check_hopf_axioms;
    use crate::hopf::examples::sweedler_h4;

    const H4: &str = r#"
hopf H4 {
  dim 4;
  basis 1 g x gx;
  unit = 1;
  counit 1 = 1; counit g = 1;
  mul 1 1 = 1;  mul 1 g = g;   mul 1 x = x;      mul 1 gx = gx;
  mul g 1 = g;  mul g g = 1;   mul g x = gx;     mul g gx = x;
  mul x 1 = x;  mul x g = -1 (g x);
  mul gx 1 = gx; mul gx g = -1 x;
  comul 1 = 1*1; comul g = g*g;
  comul x = x*1 + g*x;
  comul gx = gx*g + 1*gx;
  antipode 1 = 1; antipode g = g;
  antipode x = -1 (g x); antipode gx = x;
}
"#;

    #[test]
    fn h4_file_matches_builtin() {
        let file = parse_str(H4).unwrap();
        let h = match &file.find("H4").unwrap().object {
            Object::Hopf(h) => h.clone(),
            _ => panic!("expected hopf"),
        };
        let builtin = sweedler_h4();
        assert_eq!(h.mult, builtin.mult);
        assert_eq!(h.comult, builtin.comult);
        assert_eq!(h.counit, builtin.counit);
        assert_eq!(h.antipode, builtin.antipode);
        assert_eq!(h.unit, builtin.unit);
        assert!(check_hopf_axioms(&h).unwrap().all_pass());
    }

    #[test]
    fn malformed_rational_rejected() {
        let src = "hopf H { basis 1; unit = 1; counit 1 = 1/0; mul 1 1 = 1; comul 1 = 1*1; antipode 1 = 1; }";
        let e = parse_str(src).unwrap_err();
        assert!(e.msg.contains("malformed rational"), "{e}");
        assert!(e.line > 0);
    }

    #[test]
    fn unresolved_reference_rejected() {
        let src = "module M over Missing { basis v; }";
        let e = parse_str(src).unwrap_err();
        assert!(e.msg.contains("unresolved reference"), "{e}");
    }

    #[test]
    fn syntax_error_reports_position() {
        let src = "hopf H {\n  basis 1\n}";
        let e = parse_str(src).unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.msg.contains("missing `;`"), "{e}");
    }

    #[test]
    fn group_and_factorization() {
        let src = r#"
group S3 {
  elements e c c2 s sc sc2;
  row e  = e c c2 s sc sc2;
  row c  = c c2 e sc2 s sc;
  row c2 = c2 e c sc sc2 s;
  row s  = s sc sc2 e c c2;
  row sc = sc sc2 s c2 e c;
  row sc2 = sc2 s sc c c2 e;
}
matchedpair MP { group = S3; g1 = e c c2; g2 = e s; }
"#;
        let file = parse_str(src).unwrap();
        match &file.find("MP").unwrap().object {
            Object::Matched(d) => {
                assert_eq!(d.u.dim(), 3);
                assert_eq!(d.f.dim(), 2);
                assert!(crate::matchedpair::check_matched_pair(d).all_pass());
            }
            _ => panic!("expected matched pair"),
        }
    }
}
