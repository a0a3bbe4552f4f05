use std::fmt;

use crate::error::{Error, Result};

/// A sort: a base name, or an arrow when the type system allows it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sort {
    Base(String),
    Arrow(Box<Sort>, Box<Sort>),
}

impl Sort {
    pub fn base(name: impl Into<String>) -> Self {
        Sort::Base(name.into())
    }

    pub fn arrow(domain: Sort, codomain: Sort) -> Self {
        Sort::Arrow(Box::new(domain), Box::new(codomain))
    }

    /// Nesting depth of arrows; base sorts have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Sort::Base(_) => 0,
            Sort::Arrow(a, b) => 1 + a.depth().max(b.depth()),
        }
    }
}

impl fmt::Display for Sort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sort::Base(name) => f.write_str(name),
            Sort::Arrow(a, b) => write!(f, "arrow({a},{b})"),
        }
    }
}

/// The sorts a signature ranges over: finitely many base sorts, optionally
/// closed under a binary arrow.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TypeSystem {
    base_sorts: Vec<String>,
    arrow_enabled: bool,
}

pub const UNTYPED_SORT: &str = "*";

impl TypeSystem {
    pub fn new<S: Into<String>>(
        base_sorts: impl IntoIterator<Item = S>,
        arrow_enabled: bool,
    ) -> Result<Self> {
        let base_sorts: Vec<String> = base_sorts.into_iter().map(Into::into).collect();
        for (i, name) in base_sorts.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::MalformedSort {
                    schema: "sorts".into(),
                    sort: String::new(),
                });
            }
            if base_sorts[..i].contains(name) {
                return Err(Error::DuplicateName(name.clone()));
            }
        }
        if base_sorts.is_empty() {
            return Err(Error::MalformedSort {
                schema: "sorts".into(),
                sort: "(no base sorts)".into(),
            });
        }
        Ok(TypeSystem {
            base_sorts,
            arrow_enabled,
        })
    }

    /// The single sort `*` without arrows.
    pub fn untyped() -> Self {
        TypeSystem {
            base_sorts: vec![UNTYPED_SORT.to_string()],
            arrow_enabled: false,
        }
    }

    pub fn base_sorts(&self) -> &[String] {
        &self.base_sorts
    }

    pub fn arrow_enabled(&self) -> bool {
        self.arrow_enabled
    }

    pub fn is_untyped(&self) -> bool {
        self.base_sorts.len() == 1 && !self.arrow_enabled
    }

    /// The sort used for every position of an untyped context.
    pub fn single_sort(&self) -> Option<Sort> {
        self.is_untyped().then(|| Sort::Base(self.base_sorts[0].clone()))
    }

    pub fn is_well_formed(&self, sort: &Sort) -> bool {
        match sort {
            Sort::Base(name) => self.base_sorts.contains(name),
            Sort::Arrow(a, b) => self.arrow_enabled && self.is_well_formed(a) && self.is_well_formed(b),
        }
    }

    pub(crate) fn check_sort(&self, owner: &str, sort: &Sort) -> Result<()> {
        if self.is_well_formed(sort) {
            Ok(())
        } else {
            Err(Error::MalformedSort {
                schema: owner.to_string(),
                sort: sort.to_string(),
            })
        }
    }

    /// Every sort of arrow depth at most `depth`, in a fixed order: by
    /// depth, then base declaration order, arrows ordered by (domain, codomain)
    /// position.
    pub fn sorts_up_to_depth(&self, depth: usize) -> Vec<Sort> {
        let mut all: Vec<Sort> = self.base_sorts.iter().cloned().map(Sort::Base).collect();
        if !self.arrow_enabled {
            return all;
        }
        for _ in 0..depth {
            let previous = all.clone();
            for a in &previous {
                for b in &previous {
                    let s = Sort::arrow(a.clone(), b.clone());
                    if !all.contains(&s) {
                        all.push(s);
                    }
                }
            }
        }
        all
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn universe_sizes() {
        let t = TypeSystem::new(["iota"], true).unwrap();
        assert_eq!(t.sorts_up_to_depth(0).len(), 1);
        assert_eq!(t.sorts_up_to_depth(1).len(), 2);
        assert_eq!(t.sorts_up_to_depth(2).len(), 5);
        assert!(t.sorts_up_to_depth(2).iter().all(|s| s.depth() <= 2));
        assert_eq!(TypeSystem::untyped().sorts_up_to_depth(3).len(), 1);
    }

    #[test]
    fn rejects_duplicate_and_empty_bases() {
        assert!(matches!(
            TypeSystem::new(["a", "a"], false),
            Err(Error::DuplicateName(_))
        ));
        assert!(TypeSystem::new([""], false).is_err());
    }

    #[test]
    fn arrows_need_arrow_closure() {
        let s = Sort::arrow(Sort::base("*"), Sort::base("*"));
        assert!(!TypeSystem::untyped().is_well_formed(&s));
        assert_eq!(s.to_string(), "arrow(*,*)");
    }
}
