//! Renaming and capture-avoiding simultaneous substitution.
//!
//! Both operations recurse structurally; under an input that binds `l`
//! variables, indices below `l` are left alone and the rest are handled by
//! the map lifted past the binders. Terms passed in must be well-formed
//! over the source context of the map: a constructor missing from the
//! signature is a precondition violation and panics.

use std::fmt;

use crate::error::{Error, Result};
use crate::sigdef::{Signature, Sort};
use crate::term::{check, sort_of, Context, Term};

/// A sort-preserving map from the positions of one context to another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Renaming {
    source: Context,
    target: Context,
    map: Vec<usize>,
}

impl Renaming {
    pub fn new(source: Context, target: Context, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.len() {
            return Err(Error::ContextMismatch(format!(
                "renaming has {} images for a source of length {}",
                map.len(),
                source.len()
            )));
        }
        for (i, &j) in map.iter().enumerate() {
            match target.get(j) {
                Some(s) if s == &source.entries()[i] => {}
                Some(s) => {
                    return Err(Error::SortMismatch {
                        index: i,
                        expected: source.entries()[i].clone(),
                        found: s.clone(),
                    })
                }
                None => {
                    return Err(Error::ScopeError {
                        index: j,
                        len: target.len(),
                    })
                }
            }
        }
        Ok(Renaming {
            source,
            target,
            map,
        })
    }

    pub fn identity(ctx: &Context) -> Self {
        Renaming {
            source: ctx.clone(),
            target: ctx.clone(),
            map: (0..ctx.len()).collect(),
        }
    }

    /// The weakening `i ↦ i + |bound|` from `ctx` into `bound ++ ctx`.
    pub fn shift(ctx: &Context, bound: &[Sort]) -> Self {
        Renaming {
            source: ctx.clone(),
            target: ctx.extend(bound),
            map: (bound.len()..bound.len() + ctx.len()).collect(),
        }
    }

    /// Every renaming between two contexts, in lexicographic order of maps.
    pub fn all(source: &Context, target: &Context) -> Vec<Renaming> {
        let columns: Vec<Vec<usize>> = source
            .iter()
            .map(|s| {
                target
                    .iter()
                    .enumerate()
                    .filter(|(_, t)| *t == s)
                    .map(|(j, _)| j)
                    .collect()
            })
            .collect();
        let mut out = Vec::new();
        crate::term::chain::for_each_product(&columns, |m| {
            out.push(Renaming {
                source: source.clone(),
                target: target.clone(),
                map: m.iter().map(|&&j| j).collect(),
            })
        });
        out
    }

    pub fn source(&self) -> &Context {
        &self.source
    }

    pub fn target(&self) -> &Context {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &Renaming) -> Result<Renaming> {
        if self.target != next.source {
            return Err(Error::ContextMismatch(
                "renamings do not compose: target and source differ".into(),
            ));
        }
        Ok(Renaming {
            source: self.source.clone(),
            target: next.target.clone(),
            map: self.map.iter().map(|&j| next.map[j]).collect(),
        })
    }
}

/// Simultaneous substitution data: position `i` of `source` maps to a term
/// over `target` of sort `source[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    source: Context,
    target: Context,
    images: Vec<Term>,
}

impl Assignment {
    /// Checked constructor.
    pub fn new(sig: &Signature, source: Context, target: Context, images: Vec<Term>) -> Result<Self> {
        if images.len() != source.len() {
            return Err(Error::ContextMismatch(format!(
                "assignment has {} images for a source context of length {}",
                images.len(),
                source.len()
            )));
        }
        for (img, sort) in images.iter().zip(source.iter()) {
            check(sig, &target, img, sort)?;
        }
        Ok(Assignment {
            source,
            target,
            images,
        })
    }

    /// Builds an assignment without checking the images.
    pub fn new_unchecked(source: Context, target: Context, images: Vec<Term>) -> Self {
        debug_assert_eq!(source.len(), images.len());
        Assignment {
            source,
            target,
            images,
        }
    }

    pub fn source(&self) -> &Context {
        &self.source
    }

    pub fn target(&self) -> &Context {
        &self.target
    }

    pub fn images(&self) -> &[Term] {
        &self.images
    }

    pub fn image(&self, i: usize) -> &Term {
        &self.images[i]
    }

    /// Whether every image is a variable.
    pub fn as_renaming(&self) -> Option<Renaming> {
        let map = self.images.iter().map(Term::as_var).collect::<Option<Vec<_>>>()?;
        Some(Renaming {
            source: self.source.clone(),
            target: self.target.clone(),
            map,
        })
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(assign")?;
        for t in &self.images {
            write!(f, " {t}")?;
        }
        f.write_str(")")
    }
}

/// Reads the image list of `(assign t0 t1 …)`.
pub fn parse_assignment_images(text: &str) -> Result<Vec<Term>> {
    let mut cur = crate::text::Cursor::new(text, false);
    cur.expect("(")?;
    cur.expect_keyword("assign")?;
    let mut images = Vec::new();
    while !cur.eat(")") {
        if cur.at_end() {
            return Err(cur.error("unclosed `(assign`"));
        }
        images.push(crate::term::text::term(&mut cur)?);
    }
    if !cur.at_end() {
        return Err(cur.error("trailing input after assignment"));
    }
    Ok(images)
}

fn binder_counts(sig: &Signature, name: &str) -> Vec<usize> {
    sig.schema(name)
        .unwrap_or_else(|| panic!("constructor `{name}` is not in signature {}", sig.name()))
        .binder_counts()
        .collect()
}

fn rename_with(sig: &Signature, t: &Term, offset: usize, f: &impl Fn(usize) -> usize) -> Term {
    match t {
        Term::Var(i) if *i < offset => Term::Var(*i),
        Term::Var(i) => Term::Var(f(i - offset) + offset),
        Term::Op(node) => {
            let binders = binder_counts(sig, &node.name);
            let args = node
                .args
                .iter()
                .zip(binders)
                .map(|(a, b)| rename_with(sig, a, offset + b, f))
                .collect();
            Term::with_args(node, args)
        }
    }
}

/// Functorial action of the syntax on a renaming.
pub fn rename(sig: &Signature, t: &Term, rho: &Renaming) -> Term {
    rename_with(sig, t, 0, &|i| rho.map[i])
}

/// Shifts every free variable of `t` past `bound`.
pub fn weaken(sig: &Signature, t: &Term, bound: &[Sort]) -> Term {
    weaken_by(sig, t, bound.len())
}

pub(crate) fn weaken_by(sig: &Signature, t: &Term, n: usize) -> Term {
    if n == 0 {
        return t.clone();
    }
    rename_with(sig, t, 0, &|i| i + n)
}

/// Extends `sigma` past `bound`: bound positions map to themselves and the
/// remaining images are weakened.
pub fn lift_assignment(sig: &Signature, sigma: &Assignment, bound: &[Sort]) -> Assignment {
    let images = (0..bound.len())
        .map(Term::Var)
        .chain(sigma.images.iter().map(|t| weaken(sig, t, bound)))
        .collect();
    Assignment {
        source: sigma.source.extend(bound),
        target: sigma.target.extend(bound),
        images,
    }
}

fn subst_with(sig: &Signature, t: &Term, offset: usize, images: &[Term]) -> Term {
    match t {
        Term::Var(i) if *i < offset => Term::Var(*i),
        // lift^offset(σ)(i) = weaken(σ(i - offset), offset)
        Term::Var(i) => weaken_by(sig, &images[i - offset], offset),
        Term::Op(node) => {
            let binders = binder_counts(sig, &node.name);
            let args = node
                .args
                .iter()
                .zip(binders)
                .map(|(a, b)| subst_with(sig, a, offset + b, images))
                .collect();
            Term::with_args(node, args)
        }
    }
}

/// Substitution over unchecked inputs: a free index without an image is a
/// scope error instead of a panic.
pub(crate) fn try_subst(sig: &Signature, t: &Term, images: &[Term]) -> Result<Term> {
    fn go(sig: &Signature, t: &Term, offset: usize, images: &[Term]) -> Result<Term> {
        match t {
            Term::Var(i) if *i < offset => Ok(Term::Var(*i)),
            Term::Var(i) => images
                .get(i - offset)
                .map(|u| weaken_by(sig, u, offset))
                .ok_or(Error::ScopeError {
                    index: i - offset,
                    len: images.len(),
                }),
            Term::Op(node) => {
                let binders = sig.schema_or_err(&node.name)?.binder_counts();
                let args = node
                    .args
                    .iter()
                    .zip(binders)
                    .map(|(a, b)| go(sig, a, offset + b, images))
                    .collect::<Result<_>>()?;
                Ok(Term::with_args(node, args))
            }
        }
    }
    go(sig, t, 0, images)
}

/// Capture-avoiding simultaneous substitution.
pub fn subst(sig: &Signature, t: &Term, sigma: &Assignment) -> Term {
    subst_with(sig, t, 0, &sigma.images)
}

/// Substitutes `u` for index 0 of `ctx` and lowers the other indices.
/// `t` lives in `ctx`; `u` lives in `ctx` without its first entry.
pub fn subst1(sig: &Signature, ctx: &Context, t: &Term, u: &Term) -> Result<Term> {
    let (head, rest) = ctx
        .entries()
        .split_first()
        .ok_or_else(|| Error::ContextMismatch("unary substitution needs a nonempty context".into()))?;
    let rest = Context::new(rest.to_vec());
    let found = sort_of(sig, &rest, u)?;
    if &found != head {
        return Err(Error::SortMismatch {
            index: 0,
            expected: head.clone(),
            found,
        });
    }
    let images = std::iter::once(u.clone())
        .chain((0..rest.len()).map(Term::Var))
        .collect();
    let sigma = Assignment::new_unchecked(ctx.clone(), rest, images);
    Ok(subst(sig, t, &sigma))
}

pub fn id_assignment(ctx: &Context) -> Assignment {
    Assignment {
        source: ctx.clone(),
        target: ctx.clone(),
        images: (0..ctx.len()).map(Term::Var).collect(),
    }
}

pub fn assignment_of_renaming(rho: &Renaming) -> Assignment {
    Assignment {
        source: rho.source.clone(),
        target: rho.target.clone(),
        images: rho.map.iter().copied().map(Term::Var).collect(),
    }
}

/// `i ↦ subst(σ(i), τ)`.
pub fn kleisli_compose(sig: &Signature, sigma: &Assignment, tau: &Assignment) -> Result<Assignment> {
    if sigma.target != tau.source {
        return Err(Error::ContextMismatch(format!(
            "cannot compose: {} is not {}",
            sigma.target, tau.source
        )));
    }
    Ok(Assignment {
        source: sigma.source.clone(),
        target: tau.target.clone(),
        images: sigma.images.iter().map(|t| subst(sig, t, tau)).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sigdef::builtin;
    use crate::term::parse_term;

    fn star() -> Sort {
        Sort::base("*")
    }

    fn ctx(n: usize) -> Context {
        Context::uniform(&star(), n)
    }

    fn t(s: &str) -> Term {
        parse_term(s).unwrap()
    }

    #[test]
    fn renaming_checks() {
        let iota = Sort::base("iota");
        let src = Context::new(vec![iota.clone()]);
        assert!(Renaming::new(src.clone(), ctx(1), vec![0]).is_err());
        assert!(Renaming::new(src.clone(), src.clone(), vec![1]).is_err());
        assert!(Renaming::new(src.clone(), src.clone(), vec![]).is_err());
        assert!(Renaming::new(src.clone(), src, vec![0]).is_ok());
        assert_eq!(Renaming::all(&ctx(2), &ctx(3)).len(), 9);
    }

    #[test]
    fn weakening_a_variable() {
        let ulc = builtin("ulc").unwrap();
        let rho = Renaming::new(ctx(1), ctx(2), vec![1]).unwrap();
        assert_eq!(rename(&ulc, &Term::Var(0), &rho), Term::Var(1));
        assert_eq!(weaken(&ulc, &Term::Var(0), &[star()]), Term::Var(1));
        let id = t("(op abs (var 0))");
        assert_eq!(weaken(&ulc, &id, &[star()]), id);
        let open = t("(op app (var 0) (op abs (var 1)))");
        assert_eq!(weaken(&ulc, &open, &[]), open);
    }

    #[test]
    fn lift_cases() {
        let ulc = builtin("ulc").unwrap();
        let id2 = id_assignment(&ctx(2));
        assert_eq!(lift_assignment(&ulc, &id2, &[star()]), id_assignment(&ctx(3)));
        let sigma = Assignment::new(&ulc, ctx(1), ctx(0), vec![t("(op abs (var 0))")]).unwrap();
        let lifted = lift_assignment(&ulc, &sigma, &[star()]);
        assert_eq!(lifted.images(), &[Term::Var(0), t("(op abs (var 0))")]);
        assert_eq!(lift_assignment(&ulc, &sigma, &[]), sigma);
    }

    #[test]
    fn unit_laws_on_variables() {
        let ulc = builtin("ulc").unwrap();
        let sigma = Assignment::new(
            &ulc,
            ctx(2),
            ctx(1),
            vec![t("(op abs (var 1))"), t("(var 0)")],
        )
        .unwrap();
        for i in 0..2 {
            assert_eq!(&subst(&ulc, &Term::Var(i), &sigma), sigma.image(i));
        }
        let term = t("(op app (var 1) (op abs (op app (var 0) (var 2))))");
        assert_eq!(subst(&ulc, &term, &id_assignment(&ctx(2))), term);
    }

    #[test]
    fn unary_substitution() {
        let ulc = builtin("ulc").unwrap();
        let u = t("(op app (var 0) (var 0))");
        let c = ctx(2);
        assert_eq!(subst1(&ulc, &c, &Term::Var(0), &u).unwrap(), u);
        assert_eq!(subst1(&ulc, &c, &Term::Var(1), &u).unwrap(), Term::Var(0));
        let id = t("(op abs (var 0))");
        assert_eq!(subst1(&ulc, &c, &id, &u).unwrap(), id);
        assert!(subst1(&ulc, &Context::empty(), &id, &u).is_err());
        let stlc = builtin("stlc").unwrap();
        let iota = Sort::base("iota");
        let typed = Context::new(vec![Sort::arrow(iota.clone(), iota.clone()), iota]);
        assert!(matches!(
            subst1(&stlc, &typed, &Term::Var(0), &Term::Var(0)),
            Err(Error::SortMismatch { .. })
        ));
    }

    #[test]
    fn kleisli_units_and_mismatch() {
        let ulc = builtin("ulc").unwrap();
        let tau = Assignment::new(&ulc, ctx(1), ctx(2), vec![t("(op app (var 1) (var 0))")]).unwrap();
        assert_eq!(kleisli_compose(&ulc, &id_assignment(&ctx(1)), &tau).unwrap(), tau);
        assert_eq!(kleisli_compose(&ulc, &tau, &id_assignment(&ctx(2))).unwrap(), tau);
        assert!(matches!(
            kleisli_compose(&ulc, &tau, &tau),
            Err(Error::ContextMismatch(_))
        ));
    }

    #[test]
    fn renaming_assignments() {
        assert!(id_assignment(&Context::empty()).images().is_empty());
        let c = ctx(2);
        assert_eq!(assignment_of_renaming(&Renaming::identity(&c)), id_assignment(&c));
        let rho = Renaming::new(ctx(2), ctx(3), vec![2, 0]).unwrap();
        assert_eq!(assignment_of_renaming(&rho).as_renaming(), Some(rho));
    }

    #[test]
    fn assignment_text() {
        let images = parse_assignment_images("(assign (op abs (var 0)) (var 1))").unwrap();
        assert_eq!(images, vec![t("(op abs (var 0))"), Term::Var(1)]);
        let sigma = Assignment::new_unchecked(ctx(2), ctx(2), images);
        assert_eq!(sigma.to_string(), "(assign (op abs (var 0)) (var 1))");
        assert!(parse_assignment_images("(assign (var 0)").is_err());
        assert!(parse_assignment_images("(assign)").unwrap().is_empty());
    }

    #[test]
    fn assignment_checks_images() {
        let ulc = builtin("ulc").unwrap();
        assert!(matches!(
            Assignment::new(&ulc, ctx(1), ctx(0), vec![Term::Var(0)]),
            Err(Error::IllFormed { .. })
        ));
        assert!(matches!(
            Assignment::new(&ulc, ctx(2), ctx(0), vec![]),
            Err(Error::ContextMismatch(_))
        ));
    }
}
