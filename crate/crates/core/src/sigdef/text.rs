//! Reader and printer for signature files.
//!
//! ```text
//! signature stlc
//! sorts iota with arrow
//! op app<s: sort, t: sort> : (arrow(s, t), s) -> t
//! op abs<s: sort, t: sort> : ([s] t) -> arrow(s, t)
//! ```
//!
//! Without a `sorts` line the signature is untyped over the single sort `*`.
//! Declarations after an `operators` line form an operator family: plain
//! constructors without parameters or binders.

use std::fmt::Write as _;

use super::schema::{ConstructorSchema, InputPattern, ParamDecl, ParamKind, SortPattern};
use super::sort::{TypeSystem, UNTYPED_SORT};
use super::Signature;
use crate::error::{Error, Result};
use crate::text::Cursor;

/// A parsed signature file: the signature and its optional operator family.
#[derive(Debug, Clone, PartialEq)]
pub struct SignatureFile {
    pub signature: Signature,
    pub operators: Vec<ConstructorSchema>,
}

struct RawSorts {
    names: Vec<String>,
    arrow: bool,
}

pub fn parse_signature_file(text: &str) -> Result<SignatureFile> {
    let mut cur = Cursor::new(text, true);
    cur.expect_keyword("signature")?;
    let name = cur.ident()?.to_string();
    let mut sorts: Option<RawSorts> = None;
    let mut schemas = Vec::new();
    let mut operators = Vec::new();
    let mut in_operators = false;
    while !cur.at_end() {
        if cur.eat_keyword("sorts") {
            if sorts.is_some() {
                return Err(cur.error("more than one `sorts` declaration"));
            }
            let mut names = vec![cur.ident()?.to_string()];
            while cur.eat("|") {
                names.push(cur.ident()?.to_string());
            }
            let arrow = if cur.eat_keyword("with") {
                cur.expect_keyword("arrow")?;
                true
            } else {
                false
            };
            sorts = Some(RawSorts { names, arrow });
        } else if cur.eat_keyword("operators") {
            in_operators = true;
        } else if cur.peek_ident() == Some("op") {
            let line = cur.line();
            let schema = parse_op(&mut cur)?;
            if in_operators && (schema.is_parameterized() || schema.binds()) {
                return Err(Error::syntax(
                    line,
                    1,
                    format!("operator {} must be plain: no parameters or binders", schema.name),
                ));
            }
            if in_operators {
                operators.push(schema);
            } else {
                schemas.push(schema);
            }
        } else {
            return Err(cur.error("expected `sorts`, `op` or `operators`"));
        }
    }
    let types = match sorts {
        None => TypeSystem::untyped(),
        Some(RawSorts { names, arrow }) => TypeSystem::new(names, arrow)?,
    };
    for op in &operators {
        op.validate(&types)?;
    }
    let signature = Signature::new(name, types, schemas)?;
    Ok(SignatureFile {
        signature,
        operators,
    })
}

/// Parses a signature file that has no `operators` section.
pub fn parse_signature(text: &str) -> Result<Signature> {
    let file = parse_signature_file(text)?;
    if let Some(op) = file.operators.first() {
        return Err(Error::syntax(
            1,
            1,
            format!("unexpected operator family (first label {})", op.name),
        ));
    }
    Ok(file.signature)
}

fn parse_op(cur: &mut Cursor<'_>) -> Result<ConstructorSchema> {
    cur.expect_keyword("op")?;
    let name = cur.ident()?.to_string();
    let mut params = Vec::new();
    if cur.eat("<") {
        loop {
            let pname = cur.ident()?.to_string();
            cur.expect(":")?;
            let kind = if cur.eat_keyword("sort") {
                ParamKind::Sort
            } else if cur.eat_keyword("nat") {
                ParamKind::Nat
            } else {
                return Err(cur.error("expected `sort` or `nat`"));
            };
            params.push(ParamDecl { name: pname, kind });
            if !cur.eat(",") {
                break;
            }
        }
        cur.expect(">")?;
    }
    cur.expect(":")?;
    cur.expect("(")?;
    let mut inputs = Vec::new();
    if !cur.eat(")") {
        loop {
            inputs.push(parse_input(cur, &params)?);
            if cur.eat(")") {
                break;
            }
            cur.expect(",")?;
        }
    }
    cur.expect("->")?;
    let output = parse_type(cur, &params)?;
    Ok(ConstructorSchema::new(name, params, inputs, output))
}

fn parse_input(cur: &mut Cursor<'_>, params: &[ParamDecl]) -> Result<InputPattern> {
    let mut bound = Vec::new();
    if cur.eat("[") {
        loop {
            bound.push(parse_type(cur, params)?);
            if cur.eat("]") {
                break;
            }
            cur.expect(",")?;
        }
    }
    let sort = parse_type(cur, params)?;
    Ok(InputPattern { bound, sort })
}

pub(crate) fn parse_type(cur: &mut Cursor<'_>, params: &[ParamDecl]) -> Result<SortPattern> {
    let id = cur.ident()?;
    if id == "arrow" && cur.peek() == Some('(') {
        cur.expect("(")?;
        let a = parse_type(cur, params)?;
        cur.expect(",")?;
        let b = parse_type(cur, params)?;
        cur.expect(")")?;
        return Ok(SortPattern::arrow(a, b));
    }
    let is_param = params
        .iter()
        .any(|p| p.name == id && p.kind == ParamKind::Sort);
    Ok(if is_param {
        SortPattern::param(id)
    } else {
        SortPattern::base(id)
    })
}

pub fn print_signature(sig: &Signature) -> String {
    print_signature_file(sig, &[])
}

pub(crate) fn print_signature_file(sig: &Signature, operators: &[ConstructorSchema]) -> String {
    let mut out = format!("signature {}\n", sig.name());
    let types = sig.types();
    if !(types.is_untyped() && types.base_sorts()[0] == UNTYPED_SORT) {
        out.push_str("sorts ");
        out.push_str(&types.base_sorts().join(" | "));
        if types.arrow_enabled() {
            out.push_str(" with arrow");
        }
        out.push('\n');
    }
    for schema in sig.schemas() {
        print_op(&mut out, schema);
    }
    if !operators.is_empty() {
        out.push_str("operators\n");
        for op in operators {
            print_op(&mut out, op);
        }
    }
    out
}

fn print_op(out: &mut String, schema: &ConstructorSchema) {
    let _ = write!(out, "op {}", schema.name);
    if !schema.params.is_empty() {
        let params: Vec<String> = schema
            .params
            .iter()
            .map(|p| format!("{}: {}", p.name, p.kind))
            .collect();
        let _ = write!(out, "<{}>", params.join(", "));
    }
    let inputs: Vec<String> = schema
        .inputs
        .iter()
        .map(|i| {
            if i.bound.is_empty() {
                i.sort.to_string()
            } else {
                let bound: Vec<String> = i.bound.iter().map(ToString::to_string).collect();
                format!("[{}] {}", bound.join(", "), i.sort)
            }
        })
        .collect();
    let _ = writeln!(out, " : ({}) -> {}", inputs.join(", "), schema.output);
}
