//! Binding signatures and their initial models.
//!
//! A [`Signature`] declares constructors whose inputs may bind variables.
//! Its syntax is represented by well-scoped de Bruijn [`Term`]s, with
//! renaming and simultaneous substitution ([`subst`]) derived from the
//! binding structure. The recursion principle ([`model::fold`]) maps syntax
//! into any model carrying variables, constructors and a substitution
//! action; translations between languages ([`translate`]) and free models
//! over operator families ([`freemodel`]) are instances of it.

mod error;
mod text;

pub mod freemodel;
pub mod gen;
pub mod model;
pub mod rng;
pub mod sigdef;
pub mod subst;
pub mod term;
pub mod translate;

pub use error::{Error, Location, Result};
pub use sigdef::{
    builtin, make_signature, parse_signature, print_signature, sum_signatures, Arity,
    ConstructorSchema, Param, Signature, Sort, TypeSystem,
};
pub use subst::{
    assignment_of_renaming, id_assignment, kleisli_compose, lift_assignment, rename, subst,
    subst1, weaken, Assignment, Renaming,
};
pub use term::{parse_term, print_term, sort_of, Bounds, Context, Term};
