//! Models of a signature and the fold out of the syntax.
//!
//! A model interprets variables, constructors and substitution over a
//! carrier indexed by contexts. Folding a term replaces each variable and
//! constructor by its interpretation; when the model satisfies the monoid
//! and module laws the fold also commutes with substitution.

mod laws;
pub mod mutants;
mod report;
mod samples;
mod stock;

use std::fmt;

pub use laws::{check_module_laws, check_monoid_laws, check_morphism, check_morphism_with, run_all};
pub use report::{LawFailure, LawReport, ReportFormat};
pub use samples::{Sample, Samples, SuiteScale};
pub use stock::{fv_model, term_model, FvModel, TermModel};

use crate::error::{Error, Result};
use crate::sigdef::{Param, Signature};
use crate::term::{Context, Term};

/// A model of a signature.
///
/// Values are indexed by a context; `op` receives its arguments each in the
/// context extended by the corresponding input's bound sorts, and `msubst`
/// maps a value over `source` to one over `target` given one image per
/// position of `source`. Implementations must be pure.
pub trait Model {
    type Value: Clone + PartialEq + fmt::Debug;

    fn name(&self) -> &str;

    fn var(&self, ctx: &Context, index: usize) -> Result<Self::Value>;

    fn op(
        &self,
        schema: &str,
        params: &[Param],
        ctx: &Context,
        args: &[Self::Value],
    ) -> Result<Self::Value>;

    fn msubst(
        &self,
        value: &Self::Value,
        source: &Context,
        target: &Context,
        images: &[Self::Value],
    ) -> Result<Self::Value>;

    fn render(&self, value: &Self::Value) -> String {
        format!("{value:?}")
    }
}

/// The unique structure-preserving map from the syntax into `m`.
pub fn fold<M: Model + ?Sized>(m: &M, sig: &Signature, ctx: &Context, t: &Term) -> Result<M::Value> {
    fold_at(m, sig, ctx, t, &mut Vec::new())
}

fn fold_at<M: Model + ?Sized>(
    m: &M,
    sig: &Signature,
    ctx: &Context,
    t: &Term,
    path: &mut Vec<usize>,
) -> Result<M::Value> {
    let wrap = |path: &Vec<usize>, e: Error| match e {
        e @ (Error::Model { .. } | Error::IllFormed { .. }) => e,
        e => Error::Model {
            path: path.clone(),
            message: e.to_string(),
        },
    };
    match t {
        Term::Var(i) => m.var(ctx, *i).map_err(|e| wrap(path, e)),
        Term::Op(node) => {
            let arity = sig
                .instantiate(&node.name, &node.params)
                .map_err(|cause| Error::IllFormed {
                    path: path.clone(),
                    cause: Box::new(cause),
                })?;
            let mut vals = Vec::with_capacity(node.args.len());
            for (j, (arg, input)) in node.args.iter().zip(&arity.inputs).enumerate() {
                path.push(j);
                vals.push(fold_at(m, sig, &ctx.extend(&input.bound), arg, path)?);
                path.pop();
            }
            m.op(&node.name, &node.params, ctx, &vals)
                .map_err(|e| wrap(path, e))
        }
    }
}

/// Images of an assignment pushed through `h`.
pub(crate) fn fold_images<V>(
    h: &dyn Fn(&Context, &Term) -> Result<V>,
    target: &Context,
    images: &[Term],
) -> Result<Vec<V>> {
    images.iter().map(|t| h(target, t)).collect()
}
