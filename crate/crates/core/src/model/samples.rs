//! Inputs for the law suites: terms with assignments out of their context.

use crate::error::Result;
use crate::gen::TermGenerator;
use crate::rng::SplitMix64;
use crate::sigdef::{Signature, Sort};
use crate::subst::Assignment;
use crate::term::{Bounds, Chain, Context, Term};

/// Attempts per random case before it is skipped.
const RANDOM_ATTEMPTS: usize = 64;

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteScale {
    /// Terms under test have depth at most this.
    pub term_depth: usize,
    /// Assignment images have depth at most this.
    pub image_depth: usize,
    /// Contexts have at most this many entries.
    pub max_ctx: usize,
    /// Sorts for context entries and for the terms under test.
    pub sorts: Vec<Sort>,
    pub bounds: Bounds,
}

impl SuiteScale {
    /// Scale for an untyped signature; sorts are its single sort.
    pub fn untyped(sig: &Signature, term_depth: usize, image_depth: usize, max_ctx: usize) -> Self {
        let sorts = sig.types().single_sort().into_iter().collect();
        SuiteScale {
            term_depth,
            image_depth,
            max_ctx,
            sorts,
            bounds: Bounds::default(),
        }
    }
}

#[derive(Debug, Clone)]
pub enum Samples {
    /// Every term of the scale against every assignment of the scale.
    Exhaustive(SuiteScale),
    /// `cases` seeded random draws at the scale.
    Random {
        scale: SuiteScale,
        seed: u64,
        cases: usize,
    },
    /// Fixed cases; `tau` is needed for the associativity law only.
    Explicit(Vec<(Term, Assignment, Option<Assignment>)>),
}

/// One case handed to a law check. Ids identify equal inputs across cases
/// so checks may cache derived values.
#[derive(Debug, Clone, Copy)]
pub struct Sample<'s> {
    pub term: &'s Term,
    pub term_id: usize,
    pub sigma: &'s Assignment,
    pub sigma_id: usize,
    pub tau: Option<(&'s Assignment, usize)>,
}

impl Sample<'_> {
    pub fn ctx(&self) -> &Context {
        self.sigma.source()
    }
}

fn all_assignments(
    chain: &mut Chain<'_>,
    source: &Context,
    target: &Context,
    depth: usize,
) -> Result<Vec<Assignment>> {
    let mut columns = Vec::with_capacity(source.len());
    for sort in source.iter() {
        columns.push(chain.enumerate(target, sort, depth)?);
    }
    let columns: Vec<&[Term]> = columns.iter().map(|c| c.as_slice()).collect();
    let mut out = Vec::new();
    crate::term::chain::for_each_product(&columns, |imgs| {
        out.push(Assignment::new_unchecked(
            source.clone(),
            target.clone(),
            imgs.iter().map(|t| (*t).clone()).collect(),
        ))
    });
    Ok(out)
}

impl Samples {
    /// Calls `f` on every case and returns how many there were. With
    /// `with_tau`, exhaustive runs also range over a second assignment.
    pub fn for_each(
        &self,
        sig: &Signature,
        with_tau: bool,
        f: &mut dyn FnMut(Sample<'_>),
    ) -> Result<usize> {
        match self {
            Samples::Exhaustive(scale) => exhaustive(sig, scale, with_tau, f),
            Samples::Random { scale, seed, cases } => random(sig, scale, *seed, *cases, f),
            Samples::Explicit(cases) => {
                let mut n = 0;
                for (i, (t, sigma, tau)) in cases.iter().enumerate() {
                    if with_tau && tau.is_none() {
                        continue;
                    }
                    f(Sample {
                        term: t,
                        term_id: 3 * i,
                        sigma,
                        sigma_id: 3 * i + 1,
                        tau: tau.as_ref().map(|a| (a, 3 * i + 2)),
                    });
                    n += 1;
                }
                Ok(n)
            }
        }
    }
}

fn exhaustive(
    sig: &Signature,
    scale: &SuiteScale,
    with_tau: bool,
    f: &mut dyn FnMut(Sample<'_>),
) -> Result<usize> {
    let mut chain = Chain::new(sig, scale.bounds);
    let contexts = Context::all_up_to(&scale.sorts, scale.max_ctx);
    let mut next_id = 0usize;
    let mut terms: Vec<(Vec<Term>, usize)> = Vec::with_capacity(contexts.len());
    for ctx in &contexts {
        let mut ts = Vec::new();
        for sort in &scale.sorts {
            ts.extend(chain.enumerate(ctx, sort, scale.term_depth)?.iter().cloned());
        }
        let base = next_id;
        next_id += ts.len();
        terms.push((ts, base));
    }
    // assignments[g][d]: every assignment from context g to context d
    let mut assignments: Vec<Vec<(Vec<Assignment>, usize)>> = Vec::with_capacity(contexts.len());
    for g in &contexts {
        let mut row = Vec::with_capacity(contexts.len());
        for d in &contexts {
            let list = all_assignments(&mut chain, g, d, scale.image_depth)?;
            let base = next_id;
            next_id += list.len();
            row.push((list, base));
        }
        assignments.push(row);
    }
    let mut n = 0;
    for (g, (ts, tbase)) in terms.iter().enumerate() {
        for (ti, t) in ts.iter().enumerate() {
            for (d, (sigmas, sbase)) in assignments[g].iter().enumerate() {
                for (si, sigma) in sigmas.iter().enumerate() {
                    let mut sample = Sample {
                        term: t,
                        term_id: tbase + ti,
                        sigma,
                        sigma_id: sbase + si,
                        tau: None,
                    };
                    if !with_tau {
                        f(sample);
                        n += 1;
                        continue;
                    }
                    for (taus, ubase) in &assignments[d] {
                        for (ui, tau) in taus.iter().enumerate() {
                            sample.tau = Some((tau, ubase + ui));
                            f(sample);
                            n += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(n)
}

fn random(
    sig: &Signature,
    scale: &SuiteScale,
    seed: u64,
    cases: usize,
    f: &mut dyn FnMut(Sample<'_>),
) -> Result<usize> {
    let mut rng = SplitMix64::new(seed);
    let mut gen = TermGenerator::new(sig, scale.bounds);
    let mut n = 0;
    for case in 0..cases {
        for _ in 0..RANDOM_ATTEMPTS {
            let gamma = TermGenerator::context(&mut rng, &scale.sorts, scale.max_ctx);
            let sort = rng.pick(&scale.sorts).clone();
            let Some(t) = gen.term(&mut rng, &gamma, &sort, scale.term_depth)? else {
                continue;
            };
            let delta = TermGenerator::context(&mut rng, &scale.sorts, scale.max_ctx);
            let Some(sigma) = gen.assignment(&mut rng, &gamma, &delta, scale.image_depth)? else {
                continue;
            };
            let upsilon = TermGenerator::context(&mut rng, &scale.sorts, scale.max_ctx);
            let Some(tau) = gen.assignment(&mut rng, &delta, &upsilon, scale.image_depth)? else {
                continue;
            };
            f(Sample {
                term: &t,
                term_id: 3 * case,
                sigma: &sigma,
                sigma_id: 3 * case + 1,
                tau: Some((&tau, 3 * case + 2)),
            });
            n += 1;
            break;
        }
    }
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sigdef::builtin;

    #[test]
    fn exhaustive_counts() {
        let ulc = builtin("ulc").unwrap();
        // contexts {0,1}; |A_2(0)| = 1, |A_2(1)| = 4; images at depth 1 are variables
        let scale = SuiteScale::untyped(&ulc, 2, 1, 1);
        let pairs = Samples::Exhaustive(scale.clone())
            .for_each(&ulc, false, &mut |_| {})
            .unwrap();
        // Γ=0: 1 term × (1 + 1) assignments; Γ=1: 4 terms × (0 + 1)
        assert_eq!(pairs, 2 + 4);
        let triples = Samples::Exhaustive(scale)
            .for_each(&ulc, true, &mut |_| {})
            .unwrap();
        // Γ=0: σ to Δ=0 then τ ∈ {0→0, 0→1}; σ to Δ=1 then τ ∈ {1→1}: 3; Γ=1: 4 × 1 × 1
        assert_eq!(triples, 3 + 4);
    }

    #[test]
    fn random_is_deterministic() {
        let ulc = builtin("ulc").unwrap();
        let samples = Samples::Random {
            scale: SuiteScale::untyped(&ulc, 6, 3, 2),
            seed: 42,
            cases: 50,
        };
        let collect = || {
            let mut seen = Vec::new();
            let n = samples
                .for_each(&ulc, true, &mut |s| {
                    seen.push((s.term.clone(), s.sigma.clone(), s.tau.unwrap().0.clone()))
                })
                .unwrap();
            (n, seen)
        };
        let (n, a) = collect();
        assert_eq!(n, 50);
        assert_eq!(a, collect().1);
        assert!(a.iter().all(|(t, _, _)| t.depth() <= 6));
    }
}
