//! Reader for translation table files.
//!
//! ```text
//! translate stlc -> ulc erase-types
//! clause app<s, t> = (op app (ph 0) (ph 1))
//! clause abs<s, t> = (op abs (ph 0))
//! ```
//!
//! The header names the source and target signatures and optionally the
//! type morphism: `erase-types`, or `map a=>s b=>t` sending base sorts to
//! target sorts with arrows mapped homomorphically. Without either, base
//! sorts map to the target sorts of the same name.

use std::collections::BTreeMap;

use super::{make_table, ArrowMode, Clause, ParamTemplate, Template, TranslationTable, TypeMorphism};
use crate::error::Result;
use crate::sigdef::text::parse_type;
use crate::sigdef::{ParamDecl, ParamKind, Signature, Sort};
use crate::term::text::sort;
use crate::text::Cursor;

/// Parses a table; `resolve` looks up the signatures named in the header.
pub fn parse_table(text: &str, resolve: &dyn Fn(&str) -> Result<Signature>) -> Result<TranslationTable> {
    let mut cur = Cursor::new(text, true);
    cur.expect_keyword("translate")?;
    let source = resolve(cur.ident()?)?;
    cur.expect("->")?;
    let target = resolve(cur.ident()?)?;

    let header_line = cur.line();
    let morphism = if cur.eat("erase-types") {
        TypeMorphism::erase(source.types(), target.types())?
    } else if cur.eat_keyword("map") {
        let mut base_map = BTreeMap::new();
        while cur.line() == header_line && !cur.at_end() && cur.peek_ident() != Some("clause") {
            let base = cur.ident()?.to_string();
            cur.expect("=>")?;
            base_map.insert(base, sort(&mut cur)?);
        }
        TypeMorphism::new(
            source.types().clone(),
            target.types().clone(),
            base_map,
            ArrowMode::Homomorphic,
        )?
    } else {
        let base_map = source
            .types()
            .base_sorts()
            .iter()
            .map(|b| (b.clone(), Sort::base(b.clone())))
            .collect();
        TypeMorphism::new(
            source.types().clone(),
            target.types().clone(),
            base_map,
            ArrowMode::Homomorphic,
        )?
    };

    let mut clauses = Vec::new();
    while !cur.at_end() {
        cur.expect_keyword("clause")?;
        let schema = cur.ident()?.to_string();
        let mut params = Vec::new();
        if cur.eat("<") {
            loop {
                params.push(cur.ident()?.to_string());
                if !cur.eat(",") {
                    break;
                }
            }
            cur.expect(">")?;
        }
        cur.expect("=")?;
        // kinds come from the source schema; unknown schemas are reported by make_table
        let decls: Vec<ParamDecl> = match source.schema(&schema) {
            Some(s) => s
                .params
                .iter()
                .zip(&params)
                .map(|(d, n)| ParamDecl {
                    name: n.clone(),
                    kind: d.kind,
                })
                .collect(),
            None => Vec::new(),
        };
        let template = template(&mut cur, &decls)?;
        clauses.push(Clause {
            schema,
            params,
            template,
        });
    }
    make_table(&source, &target, morphism, clauses)
}

fn template(cur: &mut Cursor<'_>, decls: &[ParamDecl]) -> Result<Template> {
    cur.expect("(")?;
    if cur.eat_keyword("ph") {
        let j = cur.nat()?;
        cur.expect(")")?;
        return Ok(Template::Placeholder(j as usize));
    }
    if cur.eat_keyword("var") {
        let i = cur.nat()?;
        cur.expect(")")?;
        return Ok(Template::Var(i as usize));
    }
    cur.expect_keyword("op")?;
    let name = cur.ident()?.to_string();
    let mut params = Vec::new();
    if cur.eat("<") {
        loop {
            params.push(param_template(cur, decls)?);
            if !cur.eat(",") {
                break;
            }
        }
        cur.expect(">")?;
    }
    let mut args = Vec::new();
    while !cur.eat(")") {
        if cur.at_end() {
            return Err(cur.error("unclosed `(op`"));
        }
        args.push(template(cur, decls)?);
    }
    Ok(Template::Op { name, params, args })
}

fn param_template(cur: &mut Cursor<'_>, decls: &[ParamDecl]) -> Result<ParamTemplate> {
    match cur.peek_ident() {
        Some(id) if id.bytes().all(|b| b.is_ascii_digit()) => Ok(ParamTemplate::Nat(cur.nat()?)),
        Some(id) if decls.iter().any(|d| d.name == id && d.kind == ParamKind::Nat) => {
            let name = cur.ident()?.to_string();
            Ok(ParamTemplate::NatParam(name))
        }
        _ => Ok(ParamTemplate::Sort(parse_type(cur, decls)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::sigdef::builtin;

    #[test]
    fn bad_offset_in_file() {
        let text = "translate ulc -> ulc\n\
                    clause app = (op app (ph 0) (ph 1))\n\
                    clause abs = (op abs (op abs (ph 0)))\n";
        assert_eq!(
            parse_table(text, &builtin).unwrap_err(),
            Error::OffsetMismatch {
                schema: "abs".into(),
                placeholder: 0
            }
        );
    }

    #[test]
    fn template_binders_and_variables() {
        let text = "translate ulc -> ulc\n\
                    clause app = (op app (ph 0) (ph 1))\n\
                    clause abs = (op abs (ph 0))\n";
        assert!(parse_table(text, &builtin).is_ok());
        let text = "translate ulc -> ulc\n\
                    clause app = (op app (ph 0) (var 0))\n\
                    clause abs = (op abs (ph 0))\n";
        assert!(matches!(
            parse_table(text, &builtin),
            Err(Error::ScopeError { .. })
        ));
    }

    #[test]
    fn mapped_base_sorts() {
        let text = "translate stlc -> stlc map iota=>arrow(iota,iota)\n\
                    clause app<a, b> = (op app<a, b> (ph 0) (ph 1))\n\
                    clause abs<a, b> = (op abs<a, b> (ph 0))\n";
        let table = parse_table(text, &builtin).unwrap();
        let iota = Sort::base("iota");
        assert_eq!(
            table.morphism().apply(&Sort::arrow(iota.clone(), iota.clone())),
            Sort::arrow(Sort::arrow(iota.clone(), iota.clone()), Sort::arrow(iota.clone(), iota))
        );
    }
}
