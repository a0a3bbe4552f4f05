//! Binding signatures: a type system plus constructor schemas whose inputs
//! carry the sorts of the variables they bind.

mod builtin;
mod schema;
mod sort;
pub(crate) mod text;

use std::collections::HashMap;

pub use builtin::{builtin, pcf, stlc, BUILTIN_NAMES};
pub use schema::{
    Arity, ConstructorSchema, Input, InputPattern, Param, ParamDecl, ParamKind, SortPattern,
};
pub use sort::{Sort, TypeSystem, UNTYPED_SORT};
pub use text::{parse_signature, parse_signature_file, print_signature, SignatureFile};

use crate::error::{Error, Result};

/// A validated signature. Equality compares name, type system and schemas in
/// declaration order.
#[derive(Debug, Clone)]
pub struct Signature {
    name: String,
    types: TypeSystem,
    schemas: Vec<ConstructorSchema>,
    index: HashMap<String, usize>,
}

impl PartialEq for Signature {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.types == other.types && self.schemas == other.schemas
    }
}

impl Eq for Signature {}

impl Signature {
    pub fn new(
        name: impl Into<String>,
        types: TypeSystem,
        schemas: Vec<ConstructorSchema>,
    ) -> Result<Self> {
        let mut index = HashMap::with_capacity(schemas.len());
        for (i, schema) in schemas.iter().enumerate() {
            if index.insert(schema.name.clone(), i).is_some() {
                return Err(Error::DuplicateName(schema.name.clone()));
            }
            schema.validate(&types)?;
        }
        Ok(Signature {
            name: name.into(),
            types,
            schemas,
            index,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn types(&self) -> &TypeSystem {
        &self.types
    }

    pub fn schemas(&self) -> &[ConstructorSchema] {
        &self.schemas
    }

    pub fn schema(&self, name: &str) -> Option<&ConstructorSchema> {
        self.index.get(name).map(|&i| &self.schemas[i])
    }

    pub(crate) fn schema_or_err(&self, name: &str) -> Result<&ConstructorSchema> {
        self.schema(name)
            .ok_or_else(|| Error::UnknownOp(name.to_string()))
    }

    pub fn instantiate(&self, name: &str, args: &[Param]) -> Result<Arity> {
        self.schema_or_err(name)?.instantiate(&self.types, args)
    }

    pub fn is_untyped(&self) -> bool {
        self.types.is_untyped()
    }

    /// Coproduct of two signatures over the same type system. Keeps the name
    /// of `self`.
    pub fn sum(&self, other: &Signature) -> Result<Signature> {
        if self.types != other.types {
            return Err(Error::TypeSystemMismatch);
        }
        let schemas = self
            .schemas
            .iter()
            .chain(&other.schemas)
            .cloned()
            .collect();
        Signature::new(self.name.clone(), self.types.clone(), schemas)
    }

    /// Same signature with schemas sorted by name.
    pub fn normalized(&self) -> Signature {
        let mut schemas = self.schemas.clone();
        schemas.sort_by(|a, b| a.name.cmp(&b.name));
        Signature::new(self.name.clone(), self.types.clone(), schemas).expect("already validated")
    }
}

/// Validating constructor for a signature.
pub fn make_signature(
    name: impl Into<String>,
    types: TypeSystem,
    schemas: Vec<ConstructorSchema>,
) -> Result<Signature> {
    Signature::new(name, types, schemas)
}

pub fn sum_signatures(a: &Signature, b: &Signature) -> Result<Signature> {
    a.sum(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star() -> SortPattern {
        SortPattern::base(UNTYPED_SORT)
    }

    fn ulc_by_hand() -> Signature {
        make_signature(
            "ulc",
            TypeSystem::untyped(),
            vec![
                ConstructorSchema::simple(
                    "app",
                    vec![InputPattern::plain(star()), InputPattern::plain(star())],
                    star(),
                ),
                ConstructorSchema::simple(
                    "abs",
                    vec![InputPattern::binding(vec![star()], star())],
                    star(),
                ),
            ],
        )
        .unwrap()
    }

    fn constant(name: &str) -> Signature {
        make_signature(
            "c",
            TypeSystem::untyped(),
            vec![ConstructorSchema::simple(name, vec![], star())],
        )
        .unwrap()
    }

    #[test]
    fn hand_built_ulc_matches_builtin() {
        assert_eq!(ulc_by_hand(), builtin("ulc").unwrap());
    }

    #[test]
    fn empty_schema_list_is_valid() {
        let sig = make_signature("vars", TypeSystem::untyped(), vec![]).unwrap();
        assert!(sig.schemas().is_empty());
    }

    #[test]
    fn duplicate_schema_names_rejected() {
        let app = ConstructorSchema::simple("app", vec![], star());
        let err = make_signature("x", TypeSystem::untyped(), vec![app.clone(), app]).unwrap_err();
        assert_eq!(err, Error::DuplicateName("app".into()));
    }

    #[test]
    fn malformed_sorts_rejected() {
        let bad_base = ConstructorSchema::simple("c", vec![], SortPattern::base("iota"));
        assert!(matches!(
            make_signature("x", TypeSystem::untyped(), vec![bad_base]),
            Err(Error::MalformedSort { .. })
        ));
        let bad_arrow =
            ConstructorSchema::simple("c", vec![], SortPattern::arrow(star(), star()));
        assert!(matches!(
            make_signature("x", TypeSystem::untyped(), vec![bad_arrow]),
            Err(Error::MalformedSort { .. })
        ));
        let undeclared_param = ConstructorSchema::simple("c", vec![], SortPattern::param("s"));
        let types = TypeSystem::new(["iota"], true).unwrap();
        assert!(matches!(
            make_signature("x", types, vec![undeclared_param]),
            Err(Error::MalformedSort { .. })
        ));
    }

    #[test]
    fn sum_counts_and_unit() {
        let ulc = ulc_by_hand();
        assert_eq!(ulc.sum(&constant("c")).unwrap().schemas().len(), 3);
        let empty = make_signature("e", TypeSystem::untyped(), vec![]).unwrap();
        assert_eq!(ulc.sum(&empty).unwrap(), ulc);
        assert_eq!(ulc.sum(&ulc), Err(Error::DuplicateName("app".into())));
    }

    #[test]
    fn sum_requires_same_types() {
        let stlc = builtin("stlc").unwrap();
        assert_eq!(ulc_by_hand().sum(&stlc), Err(Error::TypeSystemMismatch));
    }

    #[test]
    fn sum_is_associative_up_to_order() {
        let a = ulc_by_hand();
        let b = constant("b");
        let c = constant("c");
        let left = a.sum(&b).unwrap().sum(&c).unwrap();
        let right = a.sum(&b.sum(&c).unwrap()).unwrap();
        assert_eq!(left.normalized(), right.normalized());
        let swapped = b.sum(&a).unwrap().sum(&c).unwrap();
        assert_eq!(
            swapped.normalized().schemas(),
            left.normalized().schemas()
        );
    }

    #[test]
    fn instantiate_errors() {
        let stlc = builtin("stlc").unwrap();
        assert!(matches!(
            stlc.instantiate("app", &[]),
            Err(Error::ParamArityMismatch { expected: 2, found: 0, .. })
        ));
        assert!(matches!(
            stlc.instantiate("app", &[Param::Nat(1), Param::Nat(2)]),
            Err(Error::ParamKindMismatch { index: 0, .. })
        ));
        let pcf = builtin("pcf").unwrap();
        assert!(matches!(
            pcf.instantiate("k", &[Param::Sort(Sort::base("Nat"))]),
            Err(Error::ParamKindMismatch { .. })
        ));
    }
}
