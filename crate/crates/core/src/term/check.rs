use super::{Context, Term};
use crate::error::{Error, Result};
use crate::sigdef::{Param, Signature, Sort, TypeSystem};

pub fn ctx_extend(types: &TypeSystem, ctx: &Context, bound: &[Sort]) -> Result<Context> {
    for s in bound {
        types.check_sort("context", s)?;
    }
    Ok(ctx.extend(bound))
}

pub fn mk_var(ctx: &Context, index: usize) -> Result<(Term, Sort)> {
    match ctx.get(index) {
        Some(sort) => Ok((Term::Var(index), sort.clone())),
        None => Err(Error::ScopeError {
            index,
            len: ctx.len(),
        }),
    }
}

/// Builds a checked constructor node. Errors from the arguments are passed
/// through unwrapped.
pub fn mk_op(
    sig: &Signature,
    ctx: &Context,
    name: &str,
    params: Vec<Param>,
    args: Vec<Term>,
) -> Result<(Term, Sort)> {
    let output = check_node(sig, ctx, name, &params, &args, &mut Vec::new())?;
    Ok((Term::op(name, params, args), output))
}

fn check_node(
    sig: &Signature,
    ctx: &Context,
    name: &str,
    params: &[Param],
    args: &[Term],
    path: &mut Vec<usize>,
) -> Result<Sort> {
    let arity = sig.instantiate(name, params)?;
    if arity.inputs.len() != args.len() {
        return Err(Error::ArityMismatch {
            schema: name.to_string(),
            expected: arity.inputs.len(),
            found: args.len(),
        });
    }
    for (index, (input, arg)) in arity.inputs.iter().zip(args).enumerate() {
        path.push(index);
        let found = infer(sig, &ctx.extend(&input.bound), arg, path)?;
        if found != input.sort {
            return Err(Error::SortMismatch {
                index,
                expected: input.sort.clone(),
                found,
            });
        }
        path.pop();
    }
    Ok(arity.output)
}

/// On error, `path` is left pointing at the offending subterm.
fn infer(sig: &Signature, ctx: &Context, t: &Term, path: &mut Vec<usize>) -> Result<Sort> {
    match t {
        Term::Var(i) => mk_var(ctx, *i).map(|(_, s)| s),
        Term::Op(node) => check_node(sig, ctx, &node.name, &node.params, &node.args, path),
    }
}

/// The unique sort of `t` in `ctx`.
pub fn sort_of(sig: &Signature, ctx: &Context, t: &Term) -> Result<Sort> {
    let mut path = Vec::new();
    infer(sig, ctx, t, &mut path).map_err(|cause| Error::IllFormed {
        path,
        cause: Box::new(cause),
    })
}

/// Checks `t` against an expected sort.
pub fn check(sig: &Signature, ctx: &Context, t: &Term, sort: &Sort) -> Result<()> {
    let found = sort_of(sig, ctx, t)?;
    if &found == sort {
        Ok(())
    } else {
        Err(Error::IllFormed {
            path: Vec::new(),
            cause: Box::new(Error::SortMismatch {
                index: 0,
                expected: sort.clone(),
                found,
            }),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sigdef::builtin;

    fn star() -> Sort {
        Sort::base("*")
    }

    fn iota() -> Sort {
        Sort::base("iota")
    }

    fn ii() -> Sort {
        Sort::arrow(iota(), iota())
    }

    fn sort_params() -> Vec<Param> {
        vec![Param::Sort(iota()), Param::Sort(iota())]
    }

    #[test]
    fn ctx_extend_checks_sorts() {
        let types = TypeSystem::untyped();
        let ctx = ctx_extend(&types, &Context::empty(), &[star()]).unwrap();
        assert_eq!(ctx.len(), 1);
        assert!(matches!(
            ctx_extend(&types, &ctx, &[iota()]),
            Err(Error::MalformedSort { .. })
        ));
    }

    #[test]
    fn variables() {
        let ctx = Context::uniform(&star(), 2);
        assert_eq!(mk_var(&ctx, 1).unwrap(), (Term::Var(1), star()));
        let typed = Context::new(vec![ii(), iota()]);
        assert_eq!(mk_var(&typed, 0).unwrap(), (Term::Var(0), ii()));
        assert_eq!(
            mk_var(&Context::empty(), 0),
            Err(Error::ScopeError { index: 0, len: 0 })
        );
    }

    #[test]
    fn identity_lambda() {
        let ulc = builtin("ulc").unwrap();
        let (t, s) = mk_op(&ulc, &Context::uniform(&star(), 1), "abs", vec![], vec![Term::Var(0)])
            .unwrap();
        assert_eq!(t, Term::con("abs", vec![Term::Var(0)]));
        assert_eq!(s, star());
    }

    #[test]
    fn typed_application() {
        let stlc = builtin("stlc").unwrap();
        let ctx = Context::new(vec![ii(), iota()]);
        let (_, s) = mk_op(&stlc, &ctx, "app", sort_params(), vec![Term::Var(0), Term::Var(1)])
            .unwrap();
        assert_eq!(s, iota());
        let swapped = mk_op(&stlc, &ctx, "app", sort_params(), vec![Term::Var(1), Term::Var(0)]);
        assert_eq!(
            swapped,
            Err(Error::SortMismatch {
                index: 0,
                expected: ii(),
                found: iota()
            })
        );
    }

    #[test]
    fn mk_op_errors() {
        let ulc = builtin("ulc").unwrap();
        let empty = Context::empty();
        assert_eq!(
            mk_op(&ulc, &empty, "app", vec![], vec![Term::Var(0), Term::Var(0)]),
            Err(Error::ScopeError { index: 0, len: 0 })
        );
        assert_eq!(
            mk_op(&ulc, &empty, "lam", vec![], vec![]),
            Err(Error::UnknownOp("lam".into()))
        );
        assert!(matches!(
            mk_op(&ulc, &empty, "app", vec![], vec![]),
            Err(Error::ArityMismatch { expected: 2, found: 0, .. })
        ));
    }

    #[test]
    fn sort_of_cases() {
        let ulc = builtin("ulc").unwrap();
        assert_eq!(
            sort_of(&ulc, &Context::uniform(&star(), 1), &Term::Var(0)).unwrap(),
            star()
        );
        let stlc = builtin("stlc").unwrap();
        let id = Term::op("abs", sort_params(), vec![Term::Var(0)]);
        assert_eq!(sort_of(&stlc, &Context::empty(), &id).unwrap(), ii());
        let err = sort_of(&ulc, &Context::empty(), &Term::Var(0)).unwrap_err();
        assert!(matches!(err, Error::IllFormed { ref path, .. } if path.is_empty()));
    }

    #[test]
    fn ill_formed_reports_path() {
        let ulc = builtin("ulc").unwrap();
        let t = Term::con("app", vec![Term::con("abs", vec![Term::Var(0)]), Term::con("abs", vec![Term::Var(1)])]);
        match sort_of(&ulc, &Context::empty(), &t).unwrap_err() {
            Error::IllFormed { path, cause } => {
                assert_eq!(path, vec![1, 0]);
                assert_eq!(*cause, Error::ScopeError { index: 1, len: 1 });
            }
            other => panic!("{other:?}"),
        }
        assert!(check(&ulc, &Context::uniform(&star(), 2), &t, &star()).is_ok());
    }
}
