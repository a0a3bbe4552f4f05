//! Contexts and well-scoped de Bruijn terms.
//!
//! Index 0 is the innermost binder; extending a context prepends the bound
//! sorts. Terms store only their tree; being well-formed at a sort in a
//! context is a separate judgment (see [`sort_of`]).

pub(crate) mod chain;
mod check;
mod lambek;
pub(crate) mod text;

use std::fmt;
use std::sync::Arc;

pub use chain::{chain_count, enumerate, Bounds, Chain};
pub use check::{check, ctx_extend, mk_op, mk_var, sort_of};
pub use lambek::{lambek_compose, lambek_decompose, Layer};
pub use text::{parse_context, parse_sort, parse_term, print_term};

use crate::sigdef::{Param, Sort, TypeSystem};

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Context(Vec<Sort>);

impl Context {
    pub fn new(entries: Vec<Sort>) -> Self {
        Context(entries)
    }

    pub fn empty() -> Self {
        Context(Vec::new())
    }

    /// `n` copies of the single sort of an untyped type system.
    pub fn uniform(sort: &Sort, n: usize) -> Self {
        Context(vec![sort.clone(); n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<&Sort> {
        self.0.get(index)
    }

    pub fn entries(&self) -> &[Sort] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Sort> {
        self.0.iter()
    }

    /// `bound ++ self`: the first bound sort becomes index 0.
    pub fn extend(&self, bound: &[Sort]) -> Context {
        let mut entries = Vec::with_capacity(bound.len() + self.0.len());
        entries.extend_from_slice(bound);
        entries.extend_from_slice(&self.0);
        Context(entries)
    }

    pub fn is_well_formed(&self, types: &TypeSystem) -> bool {
        self.0.iter().all(|s| types.is_well_formed(s))
    }

    /// Every context of length at most `max_len` over `sorts`, shortest first.
    pub fn all_up_to(sorts: &[Sort], max_len: usize) -> Vec<Context> {
        let mut out = vec![Context::empty()];
        let mut layer = vec![Context::empty()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for ctx in &layer {
                for s in sorts {
                    let mut entries = ctx.0.clone();
                    entries.push(s.clone());
                    next.push(Context(entries));
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}

impl From<Vec<Sort>> for Context {
    fn from(entries: Vec<Sort>) -> Self {
        Context(entries)
    }
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(ctx")?;
        for s in &self.0 {
            write!(f, " {s}")?;
        }
        f.write_str(")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OpNode {
    pub name: Arc<str>,
    pub params: Vec<Param>,
    pub args: Vec<Term>,
}

/// A de Bruijn term: a variable or a constructor node. Cloning is O(1).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(usize),
    Op(Arc<OpNode>),
}

impl Term {
    pub fn var(index: usize) -> Term {
        Term::Var(index)
    }

    pub fn op(name: impl Into<Arc<str>>, params: Vec<Param>, args: Vec<Term>) -> Term {
        Term::Op(Arc::new(OpNode {
            name: name.into(),
            params,
            args,
        }))
    }

    /// Parameter-free constructor node.
    pub fn con(name: &str, args: Vec<Term>) -> Term {
        Term::op(name, Vec::new(), args)
    }

    /// Rebuilds a node with the same head and new arguments.
    pub(crate) fn with_args(node: &OpNode, args: Vec<Term>) -> Term {
        Term::Op(Arc::new(OpNode {
            name: node.name.clone(),
            params: node.params.clone(),
            args,
        }))
    }

    /// Height of the tree; variables and constants have depth 1.
    pub fn depth(&self) -> usize {
        match self {
            Term::Var(_) => 1,
            Term::Op(node) => 1 + node.args.iter().map(Term::depth).max().unwrap_or(0),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) => 1,
            Term::Op(node) => 1 + node.args.iter().map(Term::size).sum::<usize>(),
        }
    }

    pub fn as_var(&self) -> Option<usize> {
        match self {
            Term::Var(i) => Some(*i),
            Term::Op(_) => None,
        }
    }

    /// Subterm at `path` (argument positions from the root).
    pub fn at_path(&self, path: &[usize]) -> Option<&Term> {
        match path.split_first() {
            None => Some(self),
            Some((&i, rest)) => match self {
                Term::Op(node) => node.args.get(i)?.at_path(rest),
                Term::Var(_) => None,
            },
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_term(self))
    }
}
