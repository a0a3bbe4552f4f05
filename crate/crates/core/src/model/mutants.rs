//! Deliberately broken models and folds. Each one violates a specific law
//! and exists so the law suites can be shown to catch it.

use super::stock::{drop_shift, render_index_set, IndexSet};
use super::{fold, term_model, Model};
use crate::error::{Error, Result};
use crate::sigdef::{Param, Signature};
use crate::term::{mk_var, Context, Term};

/// Term model whose substitution returns its input unchanged.
#[derive(Debug, Clone, Copy)]
pub struct IgnoringSubst<'a>(pub &'a Signature);

impl Model for IgnoringSubst<'_> {
    type Value = Term;

    fn name(&self) -> &str {
        "term-ignoring-subst"
    }

    fn var(&self, ctx: &Context, index: usize) -> Result<Term> {
        term_model(self.0).var(ctx, index)
    }

    fn op(&self, schema: &str, params: &[Param], ctx: &Context, args: &[Term]) -> Result<Term> {
        term_model(self.0).op(schema, params, ctx, args)
    }

    fn msubst(&self, value: &Term, _: &Context, _: &Context, _: &[Term]) -> Result<Term> {
        Ok(value.clone())
    }

    fn render(&self, value: &Term) -> String {
        term_model(self.0).render(value)
    }
}

/// Term model whose substitution leaves bound variables alone but does not
/// weaken the images it places under binders.
#[derive(Debug, Clone, Copy)]
pub struct UnliftedSubst<'a>(pub &'a Signature);

fn unlifted(sig: &Signature, t: &Term, images: &[Term], depth: usize) -> Term {
    match t {
        Term::Var(i) if *i < depth => t.clone(),
        Term::Var(i) => images.get(i - depth).cloned().unwrap_or_else(|| t.clone()),
        Term::Op(node) => {
            let counts = sig
                .schema(&node.name)
                .map(|s| s.binder_counts().collect::<Vec<_>>())
                .unwrap_or_default();
            let args = node
                .args
                .iter()
                .enumerate()
                .map(|(j, a)| unlifted(sig, a, images, depth + counts.get(j).copied().unwrap_or(0)))
                .collect();
            Term::with_args(node, args)
        }
    }
}

impl Model for UnliftedSubst<'_> {
    type Value = Term;

    fn name(&self) -> &str {
        "term-unlifted-subst"
    }

    fn var(&self, ctx: &Context, index: usize) -> Result<Term> {
        term_model(self.0).var(ctx, index)
    }

    fn op(&self, schema: &str, params: &[Param], ctx: &Context, args: &[Term]) -> Result<Term> {
        term_model(self.0).op(schema, params, ctx, args)
    }

    fn msubst(&self, value: &Term, _: &Context, _: &Context, images: &[Term]) -> Result<Term> {
        Ok(unlifted(self.0, value, images, 0))
    }

    fn render(&self, value: &Term) -> String {
        term_model(self.0).render(value)
    }
}

/// Which part of the free-variable model is broken.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FvFault {
    /// Binders keep their bound indices and do not shift the rest.
    NoDropShift,
    /// Every variable denotes `{0}`.
    ForgetfulVariables,
}

#[derive(Debug, Clone, Copy)]
pub struct FaultyFv<'a> {
    pub sig: &'a Signature,
    pub fault: FvFault,
}

impl Model for FaultyFv<'_> {
    type Value = IndexSet;

    fn name(&self) -> &str {
        match self.fault {
            FvFault::NoDropShift => "fv-no-drop-shift",
            FvFault::ForgetfulVariables => "fv-forgetful-variables",
        }
    }

    fn var(&self, ctx: &Context, index: usize) -> Result<IndexSet> {
        mk_var(ctx, index)?;
        Ok(match self.fault {
            FvFault::ForgetfulVariables => IndexSet::from([0]),
            FvFault::NoDropShift => IndexSet::from([index]),
        })
    }

    fn op(&self, schema: &str, _: &[Param], _: &Context, args: &[IndexSet]) -> Result<IndexSet> {
        let schema = self.sig.schema_or_err(schema)?;
        Ok(args
            .iter()
            .zip(schema.binder_counts())
            .flat_map(|(u, k)| match self.fault {
                FvFault::NoDropShift => drop_shift(u, 0),
                FvFault::ForgetfulVariables => drop_shift(u, k),
            })
            .collect())
    }

    fn msubst(&self, value: &IndexSet, source: &Context, _: &Context, images: &[IndexSet]) -> Result<IndexSet> {
        let mut out = IndexSet::new();
        for &i in value {
            out.extend(images.get(i).ok_or(Error::ScopeError {
                index: i,
                len: source.len(),
            })?);
        }
        Ok(out)
    }

    fn render(&self, value: &IndexSet) -> String {
        render_index_set(value)
    }
}

/// The fold into the term model, except that `victim` is sent to the first
/// variable past the end of its context.
pub fn perturbed_fold<'a>(
    sig: &'a Signature,
    victim: Term,
) -> impl Fn(&Context, &Term) -> Result<Term> + 'a {
    move |ctx, t| {
        if *t == victim {
            Ok(Term::var(ctx.len()))
        } else {
            fold(&term_model(sig), sig, ctx, t)
        }
    }
}
