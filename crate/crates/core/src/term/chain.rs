//! Depth-stratified enumeration of the initial model.
//!
//! Stage `k` of the chain holds the terms of depth at most `k`:
//! `A_0 = ∅` and `A_{k+1}(Γ)(s)` is the variables of sort `s` in `Γ` plus
//! one constructor layer over `A_k` in the extended contexts. Counting uses
//! the same recurrence without building terms.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{Context, Term};
use crate::error::{Error, Result};
use crate::sigdef::{Arity, Param, ParamKind, Signature, Sort};

/// Limits on the parameters of parameterized schemas.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Bounds {
    /// Sort parameters range over sorts of at most this arrow depth.
    pub max_sort_depth: Option<usize>,
    /// Nat parameters range over `0..=max_nat`.
    pub max_nat: Option<u64>,
}

impl Bounds {
    pub fn new(max_sort_depth: Option<usize>, max_nat: Option<u64>) -> Self {
        Bounds {
            max_sort_depth,
            max_nat,
        }
    }
}

/// A reachable instantiation of a schema.
#[derive(Debug, Clone)]
pub(crate) struct Instance {
    pub name: Arc<str>,
    pub params: Vec<Param>,
    pub arity: Arity,
}

type Cell = (Context, Sort, usize);

/// Memoized enumerator and counter for one signature.
pub struct Chain<'a> {
    sig: &'a Signature,
    instances: Vec<Instance>,
    /// First schema whose instantiations are not finitely bounded.
    unbounded: Option<String>,
    counts: HashMap<Cell, BigUint>,
    terms: HashMap<Cell, Arc<Vec<Term>>>,
}

impl<'a> Chain<'a> {
    pub fn new(sig: &'a Signature, bounds: Bounds) -> Self {
        let types = sig.types();
        let universe = match bounds.max_sort_depth {
            Some(d) => Some(types.sorts_up_to_depth(d)),
            None if !types.arrow_enabled() => Some(types.sorts_up_to_depth(0)),
            None => None,
        };
        let mut instances = Vec::new();
        let mut unbounded = None;
        for schema in sig.schemas() {
            let mut choices: Vec<Vec<Param>> = Vec::new();
            for p in &schema.params {
                let options = match (p.kind, &universe, bounds.max_nat) {
                    (ParamKind::Sort, Some(u), _) => u.iter().cloned().map(Param::Sort).collect(),
                    (ParamKind::Nat, _, Some(n)) => (0..=n).map(Param::Nat).collect(),
                    _ => {
                        unbounded.get_or_insert_with(|| schema.name.clone());
                        Vec::new()
                    }
                };
                choices.push(options);
            }
            let name: Arc<str> = schema.name.as_str().into();
            for_each_product(&choices, |params| {
                let params: Vec<Param> = params.iter().map(|p| (*p).clone()).collect();
                let arity = schema
                    .instantiate(types, &params)
                    .expect("parameters drawn from well-formed universe");
                instances.push(Instance {
                    name: name.clone(),
                    params,
                    arity,
                });
            });
        }
        Chain {
            sig,
            instances,
            unbounded,
            counts: HashMap::new(),
            terms: HashMap::new(),
        }
    }

    pub fn signature(&self) -> &'a Signature {
        self.sig
    }

    fn ensure_bounded(&self) -> Result<()> {
        match &self.unbounded {
            Some(name) => Err(Error::Unbounded(name.clone())),
            None => Ok(()),
        }
    }

    pub(crate) fn instances_for<'s>(&'s self, sort: &'s Sort) -> impl Iterator<Item = &'s Instance> + 's {
        self.instances.iter().filter(move |i| &i.arity.output == sort)
    }

    /// `|A_k(ctx)(sort)|`.
    pub fn count(&mut self, ctx: &Context, sort: &Sort, k: usize) -> Result<BigUint> {
        if k == 0 {
            return Ok(BigUint::zero());
        }
        self.ensure_bounded()?;
        Ok(self.count_cell(ctx, sort, k))
    }

    fn count_cell(&mut self, ctx: &Context, sort: &Sort, k: usize) -> BigUint {
        if k == 0 {
            return BigUint::zero();
        }
        let key = (ctx.clone(), sort.clone(), k);
        if let Some(n) = self.counts.get(&key) {
            return n.clone();
        }
        let mut total = BigUint::from(ctx.iter().filter(|s| *s == sort).count());
        let arities: Vec<Arity> = self.instances_for(sort).map(|i| i.arity.clone()).collect();
        for arity in arities {
            let mut product = BigUint::one();
            for input in &arity.inputs {
                if product.is_zero() {
                    break;
                }
                product *= self.count_cell(&ctx.extend(&input.bound), &input.sort, k - 1);
            }
            total += product;
        }
        self.counts.insert(key, total.clone());
        total
    }

    /// Whether `A_k(ctx)(sort)` is nonempty.
    pub fn inhabited(&mut self, ctx: &Context, sort: &Sort, k: usize) -> Result<bool> {
        Ok(!self.count(ctx, sort, k)?.is_zero())
    }

    /// `A_k(ctx)(sort)` in canonical order: variables by ascending index,
    /// then schemas in declaration order (instantiations in parameter order),
    /// arguments lexicographically with the first argument varying slowest.
    pub fn enumerate(&mut self, ctx: &Context, sort: &Sort, k: usize) -> Result<Arc<Vec<Term>>> {
        if k == 0 {
            return Ok(Arc::new(Vec::new()));
        }
        self.ensure_bounded()?;
        Ok(self.enumerate_cell(ctx, sort, k))
    }

    fn enumerate_cell(&mut self, ctx: &Context, sort: &Sort, k: usize) -> Arc<Vec<Term>> {
        if k == 0 {
            return Arc::new(Vec::new());
        }
        let key = (ctx.clone(), sort.clone(), k);
        if let Some(ts) = self.terms.get(&key) {
            return ts.clone();
        }
        let mut out: Vec<Term> = ctx
            .iter()
            .enumerate()
            .filter(|(_, s)| *s == sort)
            .map(|(i, _)| Term::Var(i))
            .collect();
        let instances: Vec<Instance> = self.instances_for(sort).cloned().collect();
        for inst in instances {
            let columns: Vec<Arc<Vec<Term>>> = inst
                .arity
                .inputs
                .iter()
                .map(|input| self.enumerate_cell(&ctx.extend(&input.bound), &input.sort, k - 1))
                .collect();
            let columns: Vec<&[Term]> = columns.iter().map(|c| c.as_slice()).collect();
            for_each_product(&columns, |args| {
                out.push(Term::op(
                    inst.name.clone(),
                    inst.params.clone(),
                    args.iter().map(|t| (*t).clone()).collect(),
                ));
            });
        }
        let out = Arc::new(out);
        self.terms.insert(key, out.clone());
        out
    }
}

/// Calls `f` on every tuple of the cartesian product, last column fastest.
pub(crate) fn for_each_product<T, C: AsRef<[T]>>(columns: &[C], mut f: impl FnMut(&[&T])) {
    if columns.iter().any(|c| c.as_ref().is_empty()) {
        return;
    }
    let mut idx = vec![0usize; columns.len()];
    let mut tuple: Vec<&T> = columns.iter().map(|c| &c.as_ref()[0]).collect();
    loop {
        f(&tuple);
        let mut pos = columns.len();
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < columns[pos].as_ref().len() {
                tuple[pos] = &columns[pos].as_ref()[idx[pos]];
                break;
            }
            idx[pos] = 0;
            tuple[pos] = &columns[pos].as_ref()[0];
        }
    }
}

/// Terms of depth at most `k` at `sort` in `ctx`.
pub fn enumerate(
    sig: &Signature,
    ctx: &Context,
    sort: &Sort,
    k: usize,
    bounds: Bounds,
) -> Result<Vec<Term>> {
    let mut chain = Chain::new(sig, bounds);
    chain.enumerate(ctx, sort, k).map(|ts| ts.as_ref().clone())
}

/// `|enumerate(sig, ctx, sort, k)|` computed from the arity recurrence.
pub fn chain_count(
    sig: &Signature,
    ctx: &Context,
    sort: &Sort,
    k: usize,
    bounds: Bounds,
) -> Result<BigUint> {
    Chain::new(sig, bounds).count(ctx, sort, k)
}
