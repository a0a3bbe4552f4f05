use std::fmt;

use super::sort::{Sort, TypeSystem};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParamKind {
    Sort,
    Nat,
}

impl ParamKind {
    fn as_str(self) -> &'static str {
        match self {
            ParamKind::Sort => "sort",
            ParamKind::Nat => "nat",
        }
    }
}

impl fmt::Display for ParamKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParamDecl {
    pub name: String,
    pub kind: ParamKind,
}

impl ParamDecl {
    pub fn sort(name: impl Into<String>) -> Self {
        ParamDecl {
            name: name.into(),
            kind: ParamKind::Sort,
        }
    }

    pub fn nat(name: impl Into<String>) -> Self {
        ParamDecl {
            name: name.into(),
            kind: ParamKind::Nat,
        }
    }
}

/// One actual parameter of a schema instantiation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Param {
    Sort(Sort),
    Nat(u64),
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Sort(s) => s.fmt(f),
            Param::Nat(n) => n.fmt(f),
        }
    }
}

/// A sort expression that may mention the sort parameters of its schema.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SortPattern {
    Base(String),
    Param(String),
    Arrow(Box<SortPattern>, Box<SortPattern>),
}

impl SortPattern {
    pub fn base(name: impl Into<String>) -> Self {
        SortPattern::Base(name.into())
    }

    pub fn param(name: impl Into<String>) -> Self {
        SortPattern::Param(name.into())
    }

    pub fn arrow(a: SortPattern, b: SortPattern) -> Self {
        SortPattern::Arrow(Box::new(a), Box::new(b))
    }

    /// Substitutes sort parameters. `lookup` returns `None` for names that
    /// are not sort parameters; the caller validated every name beforehand.
    pub fn resolve(&self, lookup: &impl Fn(&str) -> Option<Sort>) -> Sort {
        match self {
            SortPattern::Base(name) => Sort::Base(name.clone()),
            SortPattern::Param(name) => lookup(name).expect("validated sort parameter"),
            SortPattern::Arrow(a, b) => Sort::arrow(a.resolve(lookup), b.resolve(lookup)),
        }
    }

    pub(crate) fn check(&self, types: &TypeSystem, params: &[ParamDecl]) -> bool {
        match self {
            SortPattern::Base(name) => types.base_sorts().contains(name),
            SortPattern::Param(name) => params
                .iter()
                .any(|p| p.name == *name && p.kind == ParamKind::Sort),
            SortPattern::Arrow(a, b) => {
                types.arrow_enabled() && a.check(types, params) && b.check(types, params)
            }
        }
    }

    pub fn is_ground(&self) -> bool {
        match self {
            SortPattern::Base(_) => true,
            SortPattern::Param(_) => false,
            SortPattern::Arrow(a, b) => a.is_ground() && b.is_ground(),
        }
    }
}

impl From<&Sort> for SortPattern {
    fn from(sort: &Sort) -> Self {
        match sort {
            Sort::Base(n) => SortPattern::Base(n.clone()),
            Sort::Arrow(a, b) => SortPattern::arrow(a.as_ref().into(), b.as_ref().into()),
        }
    }
}

impl fmt::Display for SortPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SortPattern::Base(n) | SortPattern::Param(n) => f.write_str(n),
            SortPattern::Arrow(a, b) => write!(f, "arrow({a}, {b})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InputPattern {
    pub bound: Vec<SortPattern>,
    pub sort: SortPattern,
}

impl InputPattern {
    pub fn plain(sort: SortPattern) -> Self {
        InputPattern {
            bound: Vec::new(),
            sort,
        }
    }

    pub fn binding(bound: Vec<SortPattern>, sort: SortPattern) -> Self {
        InputPattern { bound, sort }
    }
}

/// An instantiated input: the sorts it binds (innermost first) and its sort.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Input {
    pub bound: Vec<Sort>,
    pub sort: Sort,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arity {
    pub inputs: Vec<Input>,
    pub output: Sort,
}

/// A constructor, or a family of constructors indexed by parameters.
///
/// The arity of an instance is obtained by substituting the parameters into
/// the input and output patterns; nat parameters only index the family and
/// never occur in sorts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConstructorSchema {
    pub name: String,
    pub params: Vec<ParamDecl>,
    pub inputs: Vec<InputPattern>,
    pub output: SortPattern,
}

impl ConstructorSchema {
    pub fn new(
        name: impl Into<String>,
        params: Vec<ParamDecl>,
        inputs: Vec<InputPattern>,
        output: SortPattern,
    ) -> Self {
        ConstructorSchema {
            name: name.into(),
            params,
            inputs,
            output,
        }
    }

    /// A parameter-free constructor.
    pub fn simple(name: impl Into<String>, inputs: Vec<InputPattern>, output: SortPattern) -> Self {
        Self::new(name, Vec::new(), inputs, output)
    }

    /// Number of variables each input binds; independent of the parameters.
    pub fn binder_counts(&self) -> impl Iterator<Item = usize> + '_ {
        self.inputs.iter().map(|i| i.bound.len())
    }

    pub fn is_parameterized(&self) -> bool {
        !self.params.is_empty()
    }

    pub fn binds(&self) -> bool {
        self.inputs.iter().any(|i| !i.bound.is_empty())
    }

    pub(crate) fn validate(&self, types: &TypeSystem) -> Result<()> {
        for (i, p) in self.params.iter().enumerate() {
            if self.params[..i].iter().any(|q| q.name == p.name) {
                return Err(Error::DuplicateName(format!("{}<{}>", self.name, p.name)));
            }
        }
        let patterns = self
            .inputs
            .iter()
            .flat_map(|i| i.bound.iter().chain(std::iter::once(&i.sort)))
            .chain(std::iter::once(&self.output));
        for pat in patterns {
            if !pat.check(types, &self.params) {
                return Err(Error::MalformedSort {
                    schema: self.name.clone(),
                    sort: pat.to_string(),
                });
            }
        }
        if self.params.is_empty() {
            self.instantiate(types, &[])?;
        }
        Ok(())
    }

    /// The arity of the instance selected by `args`.
    pub fn instantiate(&self, types: &TypeSystem, args: &[Param]) -> Result<Arity> {
        if args.len() != self.params.len() {
            return Err(Error::ParamArityMismatch {
                schema: self.name.clone(),
                expected: self.params.len(),
                found: args.len(),
            });
        }
        for (index, (decl, arg)) in self.params.iter().zip(args).enumerate() {
            match (decl.kind, arg) {
                (ParamKind::Sort, Param::Sort(s)) => types.check_sort(&self.name, s)?,
                (ParamKind::Nat, Param::Nat(_)) => {}
                (kind, _) => {
                    return Err(Error::ParamKindMismatch {
                        schema: self.name.clone(),
                        index,
                        expected: kind.as_str(),
                    })
                }
            }
        }
        let lookup = |name: &str| {
            self.params
                .iter()
                .zip(args)
                .find_map(|(d, a)| match a {
                    Param::Sort(s) if d.name == name => Some(s.clone()),
                    _ => None,
                })
        };
        let inputs = self
            .inputs
            .iter()
            .map(|i| Input {
                bound: i.bound.iter().map(|b| b.resolve(&lookup)).collect(),
                sort: i.sort.resolve(&lookup),
            })
            .collect();
        Ok(Arity {
            inputs,
            output: self.output.resolve(&lookup),
        })
    }
}
