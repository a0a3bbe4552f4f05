//! S-expression form of terms, sorts and contexts.
//!
//! ```text
//! term := "(var" NAT ")" | "(op" IDENT ["<" param ("," param)* ">"] term* ")"
//! ```
//! Sorts print as base names or `arrow(a,b)`; nat parameters as numerals.

use std::fmt::Write as _;

use super::{Context, Term};
use crate::error::Result;
use crate::sigdef::{Param, Sort};
use crate::text::Cursor;

pub fn parse_term(text: &str) -> Result<Term> {
    let mut cur = Cursor::new(text, false);
    let t = term(&mut cur)?;
    if !cur.at_end() {
        return Err(cur.error("trailing input after term"));
    }
    Ok(t)
}

pub(crate) fn term(cur: &mut Cursor<'_>) -> Result<Term> {
    cur.expect("(")?;
    if cur.eat_keyword("var") {
        let i = cur.nat()?;
        cur.expect(")")?;
        return Ok(Term::Var(i as usize));
    }
    cur.expect_keyword("op")?;
    let name = cur.ident()?.to_string();
    let params = params(cur)?;
    let mut args = Vec::new();
    while !cur.eat(")") {
        if cur.at_end() {
            return Err(cur.error("unclosed `(op`"));
        }
        args.push(term(cur)?);
    }
    Ok(Term::op(name, params, args))
}

pub(crate) fn params(cur: &mut Cursor<'_>) -> Result<Vec<Param>> {
    let mut out = Vec::new();
    if cur.eat("<") {
        loop {
            out.push(param(cur)?);
            if !cur.eat(",") {
                break;
            }
        }
        cur.expect(">")?;
    }
    Ok(out)
}

fn param(cur: &mut Cursor<'_>) -> Result<Param> {
    match cur.peek_ident() {
        Some(id) if id.bytes().all(|b| b.is_ascii_digit()) => Ok(Param::Nat(cur.nat()?)),
        _ => Ok(Param::Sort(sort(cur)?)),
    }
}

pub(crate) fn sort(cur: &mut Cursor<'_>) -> Result<Sort> {
    let id = cur.ident()?;
    if id == "arrow" && cur.peek() == Some('(') {
        cur.expect("(")?;
        let a = sort(cur)?;
        cur.expect(",")?;
        let b = sort(cur)?;
        cur.expect(")")?;
        Ok(Sort::arrow(a, b))
    } else {
        Ok(Sort::base(id))
    }
}

pub fn parse_sort(text: &str) -> Result<Sort> {
    let mut cur = Cursor::new(text, false);
    let s = sort(&mut cur)?;
    if !cur.at_end() {
        return Err(cur.error("trailing input after sort"));
    }
    Ok(s)
}

/// Reads `(ctx s0 s1 …)`; `s0` is index 0.
pub fn parse_context(text: &str) -> Result<Context> {
    let mut cur = Cursor::new(text, false);
    cur.expect("(")?;
    cur.expect_keyword("ctx")?;
    let mut entries = Vec::new();
    while !cur.eat(")") {
        if cur.at_end() {
            return Err(cur.error("unclosed `(ctx`"));
        }
        entries.push(sort(&mut cur)?);
    }
    if !cur.at_end() {
        return Err(cur.error("trailing input after context"));
    }
    Ok(Context::new(entries))
}

pub fn print_term(t: &Term) -> String {
    let mut out = String::new();
    write_term(&mut out, t);
    out
}

fn write_term(out: &mut String, t: &Term) {
    match t {
        Term::Var(i) => {
            let _ = write!(out, "(var {i})");
        }
        Term::Op(node) => {
            out.push_str("(op ");
            out.push_str(&node.name);
            write_params(out, &node.params);
            for a in &node.args {
                out.push(' ');
                write_term(out, a);
            }
            out.push(')');
        }
    }
}

pub(crate) fn write_params(out: &mut String, params: &[Param]) {
    if params.is_empty() {
        return;
    }
    out.push('<');
    for (i, p) in params.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "{p}");
    }
    out.push('>');
}
