use std::collections::BTreeSet;

use super::Model;
use crate::error::{Error, Result};
use crate::sigdef::{Param, Signature};
use crate::subst::try_subst;
use crate::term::{mk_op, mk_var, print_term, Context, Term};

/// The syntax as a model of itself.
#[derive(Debug, Clone, Copy)]
pub struct TermModel<'a> {
    sig: &'a Signature,
}

pub fn term_model(sig: &Signature) -> TermModel<'_> {
    TermModel { sig }
}

impl Model for TermModel<'_> {
    type Value = Term;

    fn name(&self) -> &str {
        "term"
    }

    fn var(&self, ctx: &Context, index: usize) -> Result<Term> {
        mk_var(ctx, index).map(|(t, _)| t)
    }

    fn op(&self, schema: &str, params: &[Param], ctx: &Context, args: &[Term]) -> Result<Term> {
        mk_op(self.sig, ctx, schema, params.to_vec(), args.to_vec()).map(|(t, _)| t)
    }

    fn msubst(&self, value: &Term, _: &Context, _: &Context, images: &[Term]) -> Result<Term> {
        try_subst(self.sig, value, images)
    }

    fn render(&self, value: &Term) -> String {
        print_term(value)
    }
}

/// Free variables of untyped terms as sets of de Bruijn indices.
///
/// Under an input binding `k` variables, indices below `k` are dropped and
/// the rest shifted down by `k`; substitution is the union of the images of
/// the members.
#[derive(Debug, Clone, Copy)]
pub struct FvModel<'a> {
    sig: &'a Signature,
}

pub fn fv_model(sig: &Signature) -> Result<FvModel<'_>> {
    if !sig.is_untyped() {
        return Err(Error::TypedSignature("fv".into()));
    }
    Ok(FvModel { sig })
}

pub type IndexSet = BTreeSet<usize>;

pub(crate) fn render_index_set(set: &IndexSet) -> String {
    let items: Vec<String> = set.iter().map(ToString::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

pub(crate) fn drop_shift(set: &IndexSet, k: usize) -> impl Iterator<Item = usize> + '_ {
    set.iter().filter(move |&&i| i >= k).map(move |&i| i - k)
}

impl Model for FvModel<'_> {
    type Value = IndexSet;

    fn name(&self) -> &str {
        "fv"
    }

    fn var(&self, ctx: &Context, index: usize) -> Result<IndexSet> {
        mk_var(ctx, index)?;
        Ok(BTreeSet::from([index]))
    }

    fn op(&self, schema: &str, _params: &[Param], _ctx: &Context, args: &[IndexSet]) -> Result<IndexSet> {
        let schema = self.sig.schema_or_err(schema)?;
        Ok(args
            .iter()
            .zip(schema.binder_counts())
            .flat_map(|(u, k)| drop_shift(u, k))
            .collect())
    }

    fn msubst(&self, value: &IndexSet, source: &Context, _target: &Context, images: &[IndexSet]) -> Result<IndexSet> {
        let mut out = BTreeSet::new();
        for &i in value {
            let img = images.get(i).ok_or(Error::ScopeError {
                index: i,
                len: source.len(),
            })?;
            out.extend(img);
        }
        Ok(out)
    }

    fn render(&self, value: &IndexSet) -> String {
        render_index_set(value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::fold;
    use crate::sigdef::{builtin, Sort};
    use crate::term::parse_term;

    fn fv_of(ctx_len: usize, src: &str) -> IndexSet {
        let ulc = builtin("ulc").unwrap();
        let ctx = Context::uniform(&Sort::base("*"), ctx_len);
        fold(&fv_model(&ulc).unwrap(), &ulc, &ctx, &parse_term(src).unwrap()).unwrap()
    }

    #[test]
    fn closed_and_open_terms() {
        assert!(fv_of(0, "(op abs (op abs (var 1)))").is_empty());
        assert_eq!(fv_of(3, "(var 2)"), BTreeSet::from([2]));
        assert_eq!(
            fv_of(3, "(op app (op abs (op app (var 0) (var 3))) (var 1))"),
            BTreeSet::from([1, 2])
        );
        assert_eq!(render_index_set(&BTreeSet::from([0, 2])), "{0, 2}");
        assert_eq!(render_index_set(&BTreeSet::new()), "{}");
    }

    #[test]
    fn typed_signatures_rejected() {
        let stlc = builtin("stlc").unwrap();
        assert_eq!(
            fv_model(&stlc).unwrap_err(),
            Error::TypedSignature("fv".into())
        );
    }
}
