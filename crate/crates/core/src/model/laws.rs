//! Law suites for models and for maps out of the syntax.
//!
//! Suites never stop at the first failure; every failing case is counted
//! and the first few per law are kept as witnesses, in sample order.

use std::collections::{HashMap, HashSet};

use super::report::LawReport;
use super::samples::{Sample, Samples};
use super::{fold, fold_images, Model};
use crate::error::Result;
use crate::sigdef::Signature;
use crate::subst::{rename, subst};
use crate::term::{print_term, Context, Term};

fn same<V: PartialEq>(a: &Result<V>, b: &Result<V>) -> bool {
    matches!((a, b), (Ok(x), Ok(y)) if x == y)
}

fn show<M: Model + ?Sized>(m: &M, r: &Result<M::Value>) -> String {
    match r {
        Ok(v) => m.render(v),
        Err(e) => format!("error: {e}"),
    }
}

fn witness(s: &Sample<'_>, with_tau: bool) -> Vec<(String, String)> {
    let mut w = vec![
        ("ctx".to_string(), s.ctx().to_string()),
        ("term".to_string(), print_term(s.term)),
        ("sigma".to_string(), s.sigma.to_string()),
        ("target".to_string(), s.sigma.target().to_string()),
    ];
    if let (true, Some((tau, _))) = (with_tau, s.tau) {
        w.push(("tau".to_string(), tau.to_string()));
        w.push(("tau_target".to_string(), tau.target().to_string()));
    }
    w
}

fn variables<M: Model + ?Sized>(m: &M, ctx: &Context) -> Result<Vec<M::Value>> {
    (0..ctx.len()).map(|i| m.var(ctx, i)).collect()
}

/// Unit and associativity laws of the model's substitution.
pub fn check_monoid_laws<M: Model + ?Sized>(
    m: &M,
    sig: &Signature,
    samples: &Samples,
) -> Result<LawReport> {
    let mut report = LawReport::new("monoid", m.name());
    let h = |ctx: &Context, t: &Term| fold(m, sig, ctx, t);
    let mut values: HashMap<usize, Result<M::Value>> = HashMap::new();
    let mut folded: HashMap<usize, Result<Vec<M::Value>>> = HashMap::new();
    let mut composed: HashMap<(usize, usize), Result<Vec<M::Value>>> = HashMap::new();
    let mut left_done: HashSet<usize> = HashSet::new();
    let mut right_done: HashSet<usize> = HashSet::new();
    let mut last_after_sigma: Option<((usize, usize), Result<M::Value>)> = None;

    report.cases = samples.for_each(sig, true, &mut |s| {
        let Some((tau, tau_id)) = s.tau else { return };
        let gamma = s.ctx();
        let delta = s.sigma.target();
        let upsilon = tau.target();
        let v = values
            .entry(s.term_id)
            .or_insert_with(|| h(gamma, s.term))
            .clone();
        let sv = folded
            .entry(s.sigma_id)
            .or_insert_with(|| fold_images(&h, delta, s.sigma.images()))
            .clone();
        let tv = folded
            .entry(tau_id)
            .or_insert_with(|| fold_images(&h, upsilon, tau.images()))
            .clone();
        let (Ok(v), Ok(sv), Ok(tv)) = (v, sv, tv) else {
            report.record(
                "fold",
                witness(&s, true),
                "error while folding inputs".into(),
                String::new(),
            );
            return;
        };

        if left_done.insert(s.sigma_id) {
            for (i, image) in sv.iter().enumerate() {
                let lhs = m
                    .var(gamma, i)
                    .and_then(|x| m.msubst(&x, gamma, delta, &sv));
                let rhs = Ok(image.clone());
                if !same(&lhs, &rhs) {
                    let mut w = witness(&s, false);
                    w.push(("index".into(), i.to_string()));
                    report.record("left-unit", w, show(m, &lhs), show(m, &rhs));
                }
            }
        }
        if right_done.insert(s.term_id) {
            let lhs = variables(m, gamma).and_then(|vars| m.msubst(&v, gamma, gamma, &vars));
            let rhs = Ok(v.clone());
            if !same(&lhs, &rhs) {
                report.record("right-unit", witness(&s, false), show(m, &lhs), show(m, &rhs));
            }
        }

        let key = (s.term_id, s.sigma_id);
        let after_sigma = match &last_after_sigma {
            Some((k, r)) if *k == key => r.clone(),
            _ => {
                let r = m.msubst(&v, gamma, delta, &sv);
                last_after_sigma = Some((key, r.clone()));
                r
            }
        };
        let lhs = after_sigma.and_then(|x| m.msubst(&x, delta, upsilon, &tv));
        let comp = composed
            .entry((s.sigma_id, tau_id))
            .or_insert_with(|| sv.iter().map(|x| m.msubst(x, delta, upsilon, &tv)).collect())
            .clone();
        let rhs = comp.and_then(|c| m.msubst(&v, gamma, upsilon, &c));
        if !same(&lhs, &rhs) {
            report.record("associativity", witness(&s, true), show(m, &lhs), show(m, &rhs));
        }
    })?;
    Ok(report)
}

/// For every constructor, substitution commutes with it when the
/// assignment is lifted past each input's binders.
pub fn check_module_laws<M: Model + ?Sized>(
    m: &M,
    sig: &Signature,
    samples: &Samples,
) -> Result<LawReport> {
    let mut report = LawReport::new("module", m.name());
    let h = |ctx: &Context, t: &Term| fold(m, sig, ctx, t);
    let mut folded: HashMap<usize, Result<Vec<M::Value>>> = HashMap::new();
    let mut arg_values: HashMap<usize, Result<Vec<(Context, M::Value)>>> = HashMap::new();

    report.cases = samples.for_each(sig, false, &mut |s| {
        let Term::Op(node) = s.term else { return };
        let gamma = s.ctx();
        let delta = s.sigma.target();
        let law = format!("square {}", node.name);
        let arity = match sig.instantiate(&node.name, &node.params) {
            Ok(a) => a,
            Err(e) => {
                report.record(&law, witness(&s, false), format!("error: {e}"), String::new());
                return;
            }
        };
        let args = arg_values
            .entry(s.term_id)
            .or_insert_with(|| {
                node.args
                    .iter()
                    .zip(&arity.inputs)
                    .map(|(a, input)| {
                        let ctx = gamma.extend(&input.bound);
                        h(&ctx, a).map(|v| (ctx, v))
                    })
                    .collect()
            })
            .clone();
        let sv = folded
            .entry(s.sigma_id)
            .or_insert_with(|| fold_images(&h, delta, s.sigma.images()))
            .clone();
        let (Ok(args), Ok(sv)) = (args, sv) else {
            report.record("fold", witness(&s, false), "error while folding inputs".into(), String::new());
            return;
        };

        let vals: Vec<M::Value> = args.iter().map(|(_, v)| v.clone()).collect();
        let lhs = m
            .op(&node.name, &node.params, gamma, &vals)
            .and_then(|x| m.msubst(&x, gamma, delta, &sv));
        let rhs = (|| {
            let mut moved = Vec::with_capacity(args.len());
            for ((arg_ctx, val), input) in args.iter().zip(&arity.inputs) {
                let b = input.bound.len();
                let ext = delta.extend(&input.bound);
                let weak: Vec<M::Value> = (b..b + delta.len())
                    .map(|k| m.var(&ext, k))
                    .collect::<Result<_>>()?;
                let mut lifted = Vec::with_capacity(arg_ctx.len());
                for i in 0..b {
                    lifted.push(m.var(&ext, i)?);
                }
                for x in &sv {
                    lifted.push(m.msubst(x, delta, &ext, &weak)?);
                }
                moved.push(m.msubst(val, arg_ctx, &ext, &lifted)?);
            }
            m.op(&node.name, &node.params, delta, &moved)
        })();
        if !same(&lhs, &rhs) {
            report.record(&law, witness(&s, false), show(m, &lhs), show(m, &rhs));
        }
    })?;
    Ok(report)
}

/// Checks that `fold` into `m` is a morphism of models.
pub fn check_morphism<M: Model + ?Sized>(
    m: &M,
    sig: &Signature,
    samples: &Samples,
) -> Result<LawReport> {
    check_morphism_with(m, sig, samples, &|ctx, t| fold(m, sig, ctx, t))
}

/// Checks the defining equations of a fold and its compatibility with
/// substitution and renaming for an arbitrary map `h` into `m`.
pub fn check_morphism_with<M: Model + ?Sized>(
    m: &M,
    sig: &Signature,
    samples: &Samples,
    h: &dyn Fn(&Context, &Term) -> Result<M::Value>,
) -> Result<LawReport> {
    let mut report = LawReport::new("morphism", m.name());
    let mut values: HashMap<usize, Result<M::Value>> = HashMap::new();
    let mut folded: HashMap<usize, Result<Vec<M::Value>>> = HashMap::new();

    report.cases = samples.for_each(sig, false, &mut |s| {
        let gamma = s.ctx();
        let delta = s.sigma.target();
        let first_visit = !values.contains_key(&s.term_id);
        let v = values
            .entry(s.term_id)
            .or_insert_with(|| h(gamma, s.term))
            .clone();

        if first_visit {
            let (law, rhs) = match s.term {
                Term::Var(i) => ("var-equation", m.var(gamma, *i)),
                Term::Op(node) => (
                    "op-equation",
                    sig.instantiate(&node.name, &node.params).and_then(|arity| {
                        let vals = node
                            .args
                            .iter()
                            .zip(&arity.inputs)
                            .map(|(a, input)| h(&gamma.extend(&input.bound), a))
                            .collect::<Result<Vec<_>>>()?;
                        m.op(&node.name, &node.params, gamma, &vals)
                    }),
                ),
            };
            if !same(&v, &rhs) {
                let w = vec![
                    ("ctx".to_string(), gamma.to_string()),
                    ("term".to_string(), print_term(s.term)),
                ];
                report.record(law, w, show(m, &v), show(m, &rhs));
            }
        }

        let sv = folded
            .entry(s.sigma_id)
            .or_insert_with(|| fold_images(h, delta, s.sigma.images()))
            .clone();
        let lhs = h(delta, &subst(sig, s.term, s.sigma));
        let rhs = v
            .clone()
            .and_then(|v| sv.and_then(|sv| m.msubst(&v, gamma, delta, &sv)));
        if !same(&lhs, &rhs) {
            report.record("subst-square", witness(&s, false), show(m, &lhs), show(m, &rhs));
        }

        if let Some(rho) = s.sigma.as_renaming() {
            let lhs = h(delta, &rename(sig, s.term, &rho));
            let rhs = v.and_then(|v| {
                let vars = rho
                    .map()
                    .iter()
                    .map(|&j| m.var(delta, j))
                    .collect::<Result<Vec<_>>>()?;
                m.msubst(&v, gamma, delta, &vars)
            });
            if !same(&lhs, &rhs) {
                report.record("rename-square", witness(&s, false), show(m, &lhs), show(m, &rhs));
            }
        }
    })?;
    Ok(report)
}

/// Monoid, module and morphism suites, in that order.
pub fn run_all<M: Model + ?Sized>(m: &M, sig: &Signature, samples: &Samples) -> Result<Vec<LawReport>> {
    Ok(vec![
        check_monoid_laws(m, sig, samples)?,
        check_module_laws(m, sig, samples)?,
        check_morphism(m, sig, samples)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{fv_model, term_model, SuiteScale};
    use crate::sigdef::builtin;

    #[test]
    fn stock_models_pass_small_exhaustive_suites() {
        let ulc = builtin("ulc").unwrap();
        let samples = Samples::Exhaustive(SuiteScale::untyped(&ulc, 2, 2, 2));
        for report in run_all(&term_model(&ulc), &ulc, &samples).unwrap() {
            assert!(report.passed(), "{}", report.render(crate::model::ReportFormat::Text));
            assert!(report.cases > 0);
        }
        for report in run_all(&fv_model(&ulc).unwrap(), &ulc, &samples).unwrap() {
            assert!(report.passed(), "{}", report.render(crate::model::ReportFormat::Text));
        }
    }
}
