//! Seeded random terms and assignments.
//!
//! At each node the generator picks uniformly among the variables of the
//! wanted sort and the schema instances whose inputs are all inhabited one
//! stage down, so every draw succeeds whenever the cell is nonempty.

use crate::error::Result;
use crate::rng::SplitMix64;
use crate::sigdef::{Signature, Sort};
use crate::subst::Assignment;
use crate::term::{Bounds, Chain, Context, Term};

pub struct TermGenerator<'a> {
    chain: Chain<'a>,
}

enum Choice {
    Var(usize),
    Instance(usize),
}

impl<'a> TermGenerator<'a> {
    pub fn new(sig: &'a Signature, bounds: Bounds) -> Self {
        TermGenerator {
            chain: Chain::new(sig, bounds),
        }
    }

    pub fn chain(&mut self) -> &mut Chain<'a> {
        &mut self.chain
    }

    /// A random term of depth at most `depth`, or `None` if there is none.
    pub fn term(
        &mut self,
        rng: &mut SplitMix64,
        ctx: &Context,
        sort: &Sort,
        depth: usize,
    ) -> Result<Option<Term>> {
        if !self.chain.inhabited(ctx, sort, depth)? {
            return Ok(None);
        }
        Ok(Some(self.draw(rng, ctx, sort, depth)?))
    }

    fn draw(&mut self, rng: &mut SplitMix64, ctx: &Context, sort: &Sort, depth: usize) -> Result<Term> {
        let mut choices: Vec<Choice> = ctx
            .iter()
            .enumerate()
            .filter(|(_, s)| *s == sort)
            .map(|(i, _)| Choice::Var(i))
            .collect();
        let candidates: Vec<(usize, Vec<(Context, Sort)>)> = self
            .chain
            .instances_for(sort)
            .enumerate()
            .map(|(n, inst)| {
                let cells = inst
                    .arity
                    .inputs
                    .iter()
                    .map(|i| (ctx.extend(&i.bound), i.sort.clone()))
                    .collect();
                (n, cells)
            })
            .collect();
        for (n, cells) in candidates {
            let mut ok = true;
            for (c, s) in &cells {
                if !self.chain.inhabited(c, s, depth - 1)? {
                    ok = false;
                    break;
                }
            }
            if ok {
                choices.push(Choice::Instance(n));
            }
        }
        match choices.swap_remove(rng.below(choices.len())) {
            Choice::Var(i) => Ok(Term::Var(i)),
            Choice::Instance(n) => {
                let inst = self
                    .chain
                    .instances_for(sort)
                    .nth(n)
                    .expect("index from the same iterator")
                    .clone();
                let mut args = Vec::with_capacity(inst.arity.inputs.len());
                for input in &inst.arity.inputs {
                    args.push(self.draw(rng, &ctx.extend(&input.bound), &input.sort, depth - 1)?);
                }
                Ok(Term::op(inst.name.clone(), inst.params.clone(), args))
            }
        }
    }

    /// A random assignment from `source` to `target` with images of depth at
    /// most `depth`, or `None` if some position has no candidate image.
    pub fn assignment(
        &mut self,
        rng: &mut SplitMix64,
        source: &Context,
        target: &Context,
        depth: usize,
    ) -> Result<Option<Assignment>> {
        let mut images = Vec::with_capacity(source.len());
        for sort in source.iter() {
            match self.term(rng, target, sort, depth)? {
                Some(t) => images.push(t),
                None => return Ok(None),
            }
        }
        Ok(Some(Assignment::new_unchecked(
            source.clone(),
            target.clone(),
            images,
        )))
    }

    /// A random context of length at most `max_len` over `sorts`.
    pub fn context(rng: &mut SplitMix64, sorts: &[Sort], max_len: usize) -> Context {
        let len = rng.below(max_len + 1);
        Context::new((0..len).map(|_| rng.pick(sorts).clone()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sigdef::builtin;
    use crate::term::check;

    #[test]
    fn generated_terms_are_well_formed_and_bounded() {
        let stlc = builtin("stlc").unwrap();
        let iota = Sort::base("iota");
        let sorts = [iota.clone(), Sort::arrow(iota.clone(), iota)];
        let mut gen = TermGenerator::new(&stlc, Bounds::new(Some(1), None));
        let mut rng = SplitMix64::new(9);
        let mut produced = 0;
        for _ in 0..200 {
            let ctx = TermGenerator::context(&mut rng, &sorts, 2);
            let sort = rng.pick(&sorts).clone();
            if let Some(t) = gen.term(&mut rng, &ctx, &sort, 5).unwrap() {
                check(&stlc, &ctx, &t, &sort).unwrap();
                assert!(t.depth() <= 5);
                produced += 1;
            }
        }
        assert!(produced > 100);
    }

    #[test]
    fn empty_cells_yield_none() {
        let ulc = builtin("ulc").unwrap();
        let mut gen = TermGenerator::new(&ulc, Bounds::default());
        let mut rng = SplitMix64::new(1);
        let star = Sort::base("*");
        assert_eq!(gen.term(&mut rng, &Context::empty(), &star, 1).unwrap(), None);
        let sigma = gen
            .assignment(&mut rng, &Context::uniform(&star, 2), &Context::empty(), 1)
            .unwrap();
        assert!(sigma.is_none());
    }
}
