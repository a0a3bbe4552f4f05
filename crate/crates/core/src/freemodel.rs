//! Free models over an operator family.
//!
//! An operator family is a set of uninterpreted labels with plain inputs.
//! Terms of the signature extended by the labels form the free model over
//! the family; any model together with an interpretation of each label
//! extends uniquely to them. A label node is interpreted by substituting
//! its children into the label's interpretation.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::model::{fold, Model};
use crate::sigdef::{ConstructorSchema, Param, Signature, SortPattern, TypeSystem};
use crate::term::{Context, Term};

#[derive(Debug, Clone, PartialEq)]
pub struct OperatorFamily {
    labels: Vec<ConstructorSchema>,
}

impl OperatorFamily {
    pub fn empty() -> Self {
        OperatorFamily { labels: Vec::new() }
    }

    /// Labels must be distinct, plain and well-sorted over `types`.
    pub fn from_schemas(types: &TypeSystem, labels: Vec<ConstructorSchema>) -> Result<Self> {
        for (i, label) in labels.iter().enumerate() {
            if labels[..i].iter().any(|l| l.name == label.name) {
                return Err(Error::DuplicateName(label.name.clone()));
            }
            if label.is_parameterized() || label.binds() {
                return Err(Error::BindingLabel(label.name.clone()));
            }
            Signature::new("labels", types.clone(), vec![label.clone()])?;
        }
        Ok(OperatorFamily { labels })
    }

    /// Untyped labels given by name and arity.
    pub fn untyped(labels: &[(&str, usize)]) -> Result<Self> {
        let star = || SortPattern::base(crate::sigdef::UNTYPED_SORT);
        let schemas = labels
            .iter()
            .map(|&(name, n)| {
                let inputs = (0..n)
                    .map(|_| crate::sigdef::InputPattern::plain(star()))
                    .collect();
                ConstructorSchema::simple(name, inputs, star())
            })
            .collect();
        Self::from_schemas(&TypeSystem::untyped(), schemas)
    }

    pub fn labels(&self) -> &[ConstructorSchema] {
        &self.labels
    }

    pub fn label(&self, name: &str) -> Option<&ConstructorSchema> {
        self.labels.iter().find(|l| l.name == name)
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// The context a label's interpretation lives in: one entry per input.
    pub fn label_context(&self, name: &str) -> Result<Context> {
        let label = self
            .label(name)
            .ok_or_else(|| Error::UnknownLabel(name.to_string()))?;
        let lookup = |_: &str| None;
        Ok(Context::new(
            label.inputs.iter().map(|i| i.sort.resolve(&lookup)).collect(),
        ))
    }
}

/// `sig` with the labels of `family` added as constructors.
pub fn extend_signature(sig: &Signature, family: &OperatorFamily) -> Result<Signature> {
    let labels = Signature::new(sig.name(), sig.types().clone(), family.labels.clone())?;
    sig.sum(&labels)
}

/// The generic term of a label: the label applied to the variables of its
/// context, in order.
pub fn unit(family: &OperatorFamily, label: &str) -> Result<(Context, Term)> {
    let ctx = family.label_context(label)?;
    let args = (0..ctx.len()).map(Term::var).collect();
    Ok((ctx, Term::op(label, Vec::new(), args)))
}

/// A model of the extended signature built from a model of the base
/// signature and an interpretation of each label.
pub struct FreeExtension<'a, M: Model + ?Sized> {
    model: &'a M,
    family: &'a OperatorFamily,
    extended: Signature,
    interp: HashMap<String, (Context, M::Value)>,
}

impl<'a, M: Model + ?Sized> FreeExtension<'a, M> {
    /// `interp` gives each label a value over its label context.
    pub fn new(
        model: &'a M,
        sig: &Signature,
        family: &'a OperatorFamily,
        interp: impl IntoIterator<Item = (String, M::Value)>,
    ) -> Result<Self> {
        let extended = extend_signature(sig, family)?;
        let mut map = HashMap::new();
        for (label, value) in interp {
            let ctx = family.label_context(&label)?;
            map.insert(label, (ctx, value));
        }
        Ok(FreeExtension {
            model,
            family,
            extended,
            interp: map,
        })
    }

    pub fn signature(&self) -> &Signature {
        &self.extended
    }
}

impl<M: Model + ?Sized> Model for FreeExtension<'_, M> {
    type Value = M::Value;

    fn name(&self) -> &str {
        self.model.name()
    }

    fn var(&self, ctx: &Context, index: usize) -> Result<M::Value> {
        self.model.var(ctx, index)
    }

    fn op(&self, schema: &str, params: &[Param], ctx: &Context, args: &[M::Value]) -> Result<M::Value> {
        if self.family.label(schema).is_none() {
            return self.model.op(schema, params, ctx, args);
        }
        let (source, value) = self
            .interp
            .get(schema)
            .ok_or_else(|| Error::UnknownLabel(schema.to_string()))?;
        self.model.msubst(value, source, ctx, args)
    }

    fn msubst(&self, value: &M::Value, source: &Context, target: &Context, images: &[M::Value]) -> Result<M::Value> {
        self.model.msubst(value, source, target, images)
    }

    fn render(&self, value: &M::Value) -> String {
        self.model.render(value)
    }
}

/// Interprets a term over the extended signature in `m`, sending label
/// nodes through `interp`.
pub fn free_extend<M: Model + ?Sized>(
    m: &M,
    sig: &Signature,
    family: &OperatorFamily,
    interp: impl IntoIterator<Item = (String, M::Value)>,
    ctx: &Context,
    t: &Term,
) -> Result<M::Value> {
    let ext = FreeExtension::new(m, sig, family, interp)?;
    fold(&ext, ext.signature(), ctx, t)
}
