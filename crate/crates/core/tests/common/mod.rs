//! Independent reference implementations used by the integration tests.
//!
//! None of these go through the library's substitution, folding or chain
//! code: terms are converted to a nameful representation, substituted
//! there with fresh binder names, and converted back.
#![allow(dead_code)]

use std::cell::Cell;
use std::collections::{BTreeSet, HashMap};

use bindsig_core::sigdef::{Param, ParamKind};
use bindsig_core::{Context, Signature, Sort, Term};
use num_bigint::BigUint;

#[derive(Debug, Clone, PartialEq)]
pub enum Named {
    Var(String),
    Op {
        name: String,
        params: Vec<Param>,
        args: Vec<(Vec<String>, Named)>,
    },
}

pub struct Names {
    next: Cell<usize>,
}

impl Names {
    pub fn new() -> Self {
        Names { next: Cell::new(0) }
    }

    fn fresh(&self) -> String {
        let n = self.next.get();
        self.next.set(n + 1);
        format!("b{n}")
    }
}

fn binders(sig: &Signature, name: &str) -> Vec<usize> {
    sig.schema(name)
        .expect("known constructor")
        .inputs
        .iter()
        .map(|i| i.bound.len())
        .collect()
}

/// `scope[i]` names de Bruijn index `i`.
pub fn to_named(sig: &Signature, t: &Term, scope: &[String], names: &Names) -> Named {
    match t {
        Term::Var(i) => Named::Var(scope[*i].clone()),
        Term::Op(node) => {
            let counts = binders(sig, &node.name);
            let args = node
                .args
                .iter()
                .zip(counts)
                .map(|(a, k)| {
                    // innermost binder first, matching index order
                    let bound: Vec<String> = (0..k).map(|_| names.fresh()).collect();
                    let inner: Vec<String> = bound.iter().chain(scope).cloned().collect();
                    (bound, to_named(sig, a, &inner, names))
                })
                .collect();
            Named::Op {
                name: node.name.to_string(),
                params: node.params.clone(),
                args,
            }
        }
    }
}

pub fn from_named(t: &Named, scope: &[String]) -> Term {
    match t {
        Named::Var(x) => Term::var(
            scope
                .iter()
                .position(|y| y == x)
                .unwrap_or_else(|| panic!("unbound name {x}")),
        ),
        Named::Op { name, params, args } => Term::op(
            name.as_str(),
            params.clone(),
            args.iter()
                .map(|(bound, a)| {
                    let inner: Vec<String> = bound.iter().chain(scope).cloned().collect();
                    from_named(a, &inner)
                })
                .collect(),
        ),
    }
}

/// Capture-avoiding substitution: every binder is renamed to a fresh name
/// on the way down, so no image can be captured.
pub fn named_subst(t: &Named, map: &HashMap<String, Named>, names: &Names) -> Named {
    match t {
        Named::Var(x) => map.get(x).cloned().unwrap_or_else(|| t.clone()),
        Named::Op { name, params, args } => Named::Op {
            name: name.clone(),
            params: params.clone(),
            args: args
                .iter()
                .map(|(bound, a)| {
                    let mut inner = map.clone();
                    let fresh: Vec<String> = bound.iter().map(|_| names.fresh()).collect();
                    for (old, new) in bound.iter().zip(&fresh) {
                        inner.insert(old.clone(), Named::Var(new.clone()));
                    }
                    (fresh, named_subst(a, &inner, names))
                })
                .collect(),
        },
    }
}

fn scope_names(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

/// Substitution of `images` (over a context of length `target_len`) into a
/// term over a context of length `images.len()`, by way of names.
pub fn oracle_subst(sig: &Signature, t: &Term, images: &[Term], target_len: usize) -> Term {
    let names = Names::new();
    let xs = scope_names("x", images.len());
    let ys = scope_names("y", target_len);
    let map: HashMap<String, Named> = xs
        .iter()
        .zip(images)
        .map(|(x, u)| (x.clone(), to_named(sig, u, &ys, &names)))
        .collect();
    let named = to_named(sig, t, &xs, &names);
    from_named(&named_subst(&named, &map, &names), &ys)
}

/// Renaming by an index map, by way of names.
pub fn oracle_rename(sig: &Signature, t: &Term, map: &[usize], target_len: usize) -> Term {
    let images: Vec<Term> = map.iter().map(|&j| Term::var(j)).collect();
    oracle_subst(sig, t, &images, target_len)
}

/// Free de Bruijn indices of an untyped term, by direct recursion.
pub fn direct_fv(sig: &Signature, t: &Term) -> BTreeSet<usize> {
    fn go(sig: &Signature, t: &Term, depth: usize, out: &mut BTreeSet<usize>) {
        match t {
            Term::Var(i) if *i >= depth => {
                out.insert(i - depth);
            }
            Term::Var(_) => {}
            Term::Op(node) => {
                for (a, k) in node.args.iter().zip(binders(sig, &node.name)) {
                    go(sig, a, depth + k, out);
                }
            }
        }
    }
    let mut out = BTreeSet::new();
    go(sig, t, 0, &mut out);
    out
}

/// |A_k(n)| for the untyped lambda calculus from the recurrence
/// |A_0(n)| = 0, |A_{k+1}(n)| = n + |A_k(n)|^2 + |A_k(n+1)|.
pub fn ulc_count(k: usize, n: usize) -> BigUint {
    if k == 0 {
        return BigUint::from(0u32);
    }
    let a = ulc_count(k - 1, n);
    BigUint::from(n) + &a * &a + ulc_count(k - 1, n + 1)
}

/// Parameter instances of a schema over a small universe.
pub fn instances(sig: &Signature, sorts: &[Sort], nats: &[u64]) -> Vec<(String, Vec<Param>)> {
    let mut out = Vec::new();
    for schema in sig.schemas() {
        let mut combos: Vec<Vec<Param>> = vec![vec![]];
        for p in &schema.params {
            let choices: Vec<Param> = match p.kind {
                ParamKind::Sort => sorts.iter().cloned().map(Param::Sort).collect(),
                ParamKind::Nat => nats.iter().map(|&n| Param::Nat(n)).collect(),
            };
            combos = combos
                .into_iter()
                .flat_map(|c| {
                    choices.iter().map(move |x| {
                        let mut c = c.clone();
                        c.push(x.clone());
                        c
                    })
                })
                .collect();
        }
        for c in combos {
            out.push((schema.name.clone(), c));
        }
    }
    out
}

/// All terms of depth at most `k` at `sort` over `ctx`, generated by plain
/// recursion over the instances, without memoization. Order is irrelevant.
pub fn brute_terms(
    sig: &Signature,
    inst: &[(String, Vec<Param>)],
    ctx: &Context,
    sort: &Sort,
    k: usize,
) -> Vec<Term> {
    if k == 0 {
        return Vec::new();
    }
    let mut out: Vec<Term> = (0..ctx.len())
        .filter(|&i| ctx.get(i) == Some(sort))
        .map(Term::var)
        .collect();
    for (name, params) in inst {
        let arity = sig.instantiate(name, params).unwrap();
        if arity.output != *sort {
            continue;
        }
        let mut partial: Vec<Vec<Term>> = vec![vec![]];
        for input in &arity.inputs {
            let sub = brute_terms(sig, inst, &ctx.extend(&input.bound), &input.sort, k - 1);
            partial = partial
                .into_iter()
                .flat_map(|p| {
                    sub.iter().map(move |s| {
                        let mut p = p.clone();
                        p.push(s.clone());
                        p
                    })
                })
                .collect();
        }
        out.extend(
            partial
                .into_iter()
                .map(|args| Term::op(name.as_str(), params.clone(), args)),
        );
    }
    out
}

pub fn star() -> Sort {
    Sort::base("*")
}

pub fn untyped_ctx(n: usize) -> Context {
    Context::uniform(&star(), n)
}
