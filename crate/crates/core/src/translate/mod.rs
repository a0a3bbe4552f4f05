//! Translations between languages given by one template per constructor.
//!
//! A clause rewrites a source constructor into a target term whose leaves
//! may be placeholders `(ph j)` standing for the translated `j`-th argument.
//! A placeholder must sit under exactly as many target binders as the
//! source input binds, so the translated argument can be grafted in place
//! without any reindexing. The translation is the fold into the model
//! carried by the target syntax, hence it commutes with substitution.

mod builtin;
mod text;

use std::collections::{BTreeMap, HashMap};

pub use builtin::{builtin_table, BUILTIN_TABLES};
pub use text::parse_table;

use crate::error::{Error, Result};
use crate::model::{fold, Model};
use crate::sigdef::{Param, ParamDecl, ParamKind, Signature, Sort, SortPattern, TypeSystem};
use crate::subst::try_subst;
use crate::term::{check, mk_var, print_term, sort_of, Context, Term};

/// How arrow sorts are mapped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArrowMode {
    /// `g(a -> b) = g(a) -> g(b)`.
    Homomorphic,
    /// Every arrow goes to this sort.
    Collapse(Sort),
}

/// A map from the sorts of one type system to those of another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeMorphism {
    source: TypeSystem,
    target: TypeSystem,
    base_map: BTreeMap<String, Sort>,
    arrows: ArrowMode,
}

fn bad_sort(sort: impl ToString) -> Error {
    Error::MalformedSort {
        schema: "type morphism".into(),
        sort: sort.to_string(),
    }
}

impl TypeMorphism {
    pub fn new(
        source: TypeSystem,
        target: TypeSystem,
        base_map: BTreeMap<String, Sort>,
        arrows: ArrowMode,
    ) -> Result<Self> {
        for base in source.base_sorts() {
            let image = base_map
                .get(base)
                .ok_or_else(|| Error::MissingClause(format!("sort {base}")))?;
            if !target.is_well_formed(image) {
                return Err(bad_sort(image));
            }
        }
        if let Some(extra) = base_map.keys().find(|k| !source.base_sorts().contains(k)) {
            return Err(bad_sort(extra));
        }
        match &arrows {
            ArrowMode::Homomorphic if source.arrow_enabled() && !target.arrow_enabled() => {
                return Err(Error::TypeSystemMismatch)
            }
            ArrowMode::Collapse(s) if !target.is_well_formed(s) => return Err(bad_sort(s)),
            _ => {}
        }
        Ok(TypeMorphism {
            source,
            target,
            base_map,
            arrows,
        })
    }

    /// Each base sort to the base sort of the same name.
    pub fn identity(types: &TypeSystem) -> Self {
        let base_map = types
            .base_sorts()
            .iter()
            .map(|b| (b.clone(), Sort::base(b.clone())))
            .collect();
        TypeMorphism {
            source: types.clone(),
            target: types.clone(),
            base_map,
            arrows: ArrowMode::Homomorphic,
        }
    }

    /// Every sort to the single sort of an untyped target.
    pub fn erase(source: &TypeSystem, target: &TypeSystem) -> Result<Self> {
        let star = target
            .single_sort()
            .ok_or_else(|| Error::TypedSignature("erasure target".into()))?;
        let base_map = source
            .base_sorts()
            .iter()
            .map(|b| (b.clone(), star.clone()))
            .collect();
        Self::new(source.clone(), target.clone(), base_map, ArrowMode::Collapse(star))
    }

    pub fn source(&self) -> &TypeSystem {
        &self.source
    }

    pub fn target(&self) -> &TypeSystem {
        &self.target
    }

    pub fn arrows(&self) -> &ArrowMode {
        &self.arrows
    }

    pub fn base_map(&self) -> &BTreeMap<String, Sort> {
        &self.base_map
    }

    /// Image of a sort. Unknown base names are kept as they are.
    pub fn apply(&self, sort: &Sort) -> Sort {
        match sort {
            Sort::Base(b) => self.base_map.get(b).cloned().unwrap_or_else(|| sort.clone()),
            Sort::Arrow(a, b) => match &self.arrows {
                ArrowMode::Homomorphic => Sort::arrow(self.apply(a), self.apply(b)),
                ArrowMode::Collapse(s) => s.clone(),
            },
        }
    }
}

/// Pointwise image of a context; indices are unchanged.
pub fn map_context(g: &TypeMorphism, ctx: &Context) -> Context {
    Context::new(ctx.iter().map(|s| g.apply(s)).collect())
}

/// A parameter of a target constructor inside a template.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamTemplate {
    /// A sort over the source sorts and the clause's sort parameters; the
    /// type morphism is applied after instantiation.
    Sort(SortPattern),
    Nat(u64),
    /// The value of one of the clause's nat parameters.
    NatParam(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Template {
    Placeholder(usize),
    /// A variable bound by a binder of the template itself.
    Var(usize),
    Op {
        name: String,
        params: Vec<ParamTemplate>,
        args: Vec<Template>,
    },
}

impl Template {
    pub fn op(name: &str, args: Vec<Template>) -> Self {
        Template::Op {
            name: name.to_string(),
            params: Vec::new(),
            args,
        }
    }
}

/// The image of one source constructor. `params` names the schema's
/// parameters positionally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clause {
    pub schema: String,
    pub params: Vec<String>,
    pub template: Template,
}

#[derive(Debug, Clone)]
pub struct TranslationTable {
    source: Signature,
    target: Signature,
    morphism: TypeMorphism,
    clauses: HashMap<String, Clause>,
}

/// Sorts of the validation universe for each sort parameter.
const CHECK_SORT_DEPTH: usize = 1;
const CHECK_NATS: [u64; 2] = [0, 1];

impl TranslationTable {
    pub fn source(&self) -> &Signature {
        &self.source
    }

    pub fn target(&self) -> &Signature {
        &self.target
    }

    pub fn morphism(&self) -> &TypeMorphism {
        &self.morphism
    }

    pub fn clause(&self, schema: &str) -> Option<&Clause> {
        self.clauses.get(schema)
    }

    /// Every constructor to itself.
    pub fn identity(sig: &Signature) -> Self {
        let clauses = sig
            .schemas()
            .iter()
            .map(|s| {
                let params = s.params.iter().map(|p| p.name.clone()).collect();
                let tparams = s
                    .params
                    .iter()
                    .map(|p| match p.kind {
                        ParamKind::Sort => ParamTemplate::Sort(SortPattern::param(p.name.clone())),
                        ParamKind::Nat => ParamTemplate::NatParam(p.name.clone()),
                    })
                    .collect();
                let template = Template::Op {
                    name: s.name.clone(),
                    params: tparams,
                    args: (0..s.inputs.len()).map(Template::Placeholder).collect(),
                };
                Clause {
                    schema: s.name.clone(),
                    params,
                    template,
                }
            })
            .collect();
        make_table(sig, sig, TypeMorphism::identity(sig.types()), clauses)
            .expect("identity table is valid")
    }
}

fn clause_decls(schema_params: &[ParamDecl], names: &[String]) -> Vec<ParamDecl> {
    schema_params
        .iter()
        .zip(names)
        .map(|(d, n)| ParamDecl {
            name: n.clone(),
            kind: d.kind,
        })
        .collect()
}

fn resolve_params(
    g: &TypeMorphism,
    decls: &[ParamDecl],
    values: &[Param],
    templates: &[ParamTemplate],
) -> Vec<Param> {
    let lookup = |name: &str| {
        decls
            .iter()
            .zip(values)
            .find(|(d, _)| d.name == name)
            .and_then(|(_, v)| match v {
                Param::Sort(s) => Some(s.clone()),
                Param::Nat(_) => None,
            })
    };
    templates
        .iter()
        .map(|t| match t {
            ParamTemplate::Sort(p) => Param::Sort(g.apply(&p.resolve(&lookup))),
            ParamTemplate::Nat(n) => Param::Nat(*n),
            ParamTemplate::NatParam(name) => decls
                .iter()
                .zip(values)
                .find(|(d, _)| d.name == *name)
                .map(|(_, v)| v.clone())
                .expect("validated nat parameter"),
        })
        .collect()
}

/// Structural checks: placeholder offsets, template variables and the
/// names in parameter templates.
fn check_shape(
    types: &TypeSystem,
    target: &Signature,
    clause: &Clause,
    decls: &[ParamDecl],
    offsets: &[usize],
    t: &Template,
    depth: usize,
) -> Result<()> {
    match t {
        Template::Placeholder(j) => match offsets.get(*j) {
            Some(&k) if k == depth => Ok(()),
            _ => Err(Error::OffsetMismatch {
                schema: clause.schema.clone(),
                placeholder: *j,
            }),
        },
        Template::Var(i) if *i < depth => Ok(()),
        Template::Var(i) => Err(Error::ScopeError {
            index: *i,
            len: depth,
        }),
        Template::Op { name, params, args } => {
            let schema = target.schema_or_err(name)?;
            for p in params {
                let ok = match p {
                    ParamTemplate::Sort(s) => s.check(types, decls),
                    ParamTemplate::Nat(_) => true,
                    ParamTemplate::NatParam(n) => decls
                        .iter()
                        .any(|d| d.name == *n && d.kind == ParamKind::Nat),
                };
                if !ok {
                    return Err(Error::MalformedSort {
                        schema: clause.schema.clone(),
                        sort: format!("{p:?}"),
                    });
                }
            }
            if args.len() != schema.inputs.len() {
                return Err(Error::ArityMismatch {
                    schema: name.clone(),
                    expected: schema.inputs.len(),
                    found: args.len(),
                });
            }
            for (a, k) in args.iter().zip(schema.binder_counts()) {
                check_shape(types, target, clause, decls, offsets, a, depth + k)?;
            }
            Ok(())
        }
    }
}

/// Sort of an instantiated template. `stack` holds the sorts bound by the
/// template's own binders, innermost first; `holes` the bound sorts and
/// sort of each placeholder.
fn infer(
    table: &TranslationTable,
    decls: &[ParamDecl],
    values: &[Param],
    holes: &[(Vec<Sort>, Sort)],
    stack: &[Sort],
    t: &Template,
) -> Result<Sort> {
    match t {
        Template::Placeholder(j) => {
            let (bound, sort) = &holes[*j];
            for (index, (want, got)) in bound.iter().zip(stack).enumerate() {
                if want != got {
                    return Err(Error::SortMismatch {
                        index,
                        expected: want.clone(),
                        found: got.clone(),
                    });
                }
            }
            Ok(sort.clone())
        }
        Template::Var(i) => Ok(stack[*i].clone()),
        Template::Op { name, params, args } => {
            let params = resolve_params(&table.morphism, decls, values, params);
            let arity = table.target.instantiate(name, &params)?;
            for (index, (a, input)) in args.iter().zip(&arity.inputs).enumerate() {
                let inner: Vec<Sort> = input.bound.iter().chain(stack).cloned().collect();
                let found = infer(table, decls, values, holes, &inner, a)?;
                if found != input.sort {
                    return Err(Error::SortMismatch {
                        index,
                        expected: input.sort.clone(),
                        found,
                    });
                }
            }
            Ok(arity.output)
        }
    }
}

/// Validates one clause per source constructor.
///
/// Offsets are checked structurally. Sorts are checked on every instance
/// whose sort parameters have arrow depth at most one and whose nat
/// parameters are 0 or 1; `translate` checks its results concretely.
pub fn make_table(
    source: &Signature,
    target: &Signature,
    morphism: TypeMorphism,
    clauses: Vec<Clause>,
) -> Result<TranslationTable> {
    if morphism.source() != source.types() || morphism.target() != target.types() {
        return Err(Error::TypeSystemMismatch);
    }
    let mut map = HashMap::new();
    for clause in clauses {
        let schema = source.schema_or_err(&clause.schema)?;
        if clause.params.len() != schema.params.len() {
            return Err(Error::ParamArityMismatch {
                schema: clause.schema.clone(),
                expected: schema.params.len(),
                found: clause.params.len(),
            });
        }
        if map.contains_key(&clause.schema) {
            return Err(Error::DuplicateName(clause.schema.clone()));
        }
        map.insert(clause.schema.clone(), clause);
    }
    let table = TranslationTable {
        source: source.clone(),
        target: target.clone(),
        morphism,
        clauses: map,
    };
    let universe = source.types().sorts_up_to_depth(CHECK_SORT_DEPTH);
    for schema in source.schemas() {
        let clause = table
            .clauses
            .get(&schema.name)
            .ok_or_else(|| Error::MissingClause(schema.name.clone()))?;
        let decls = clause_decls(&schema.params, &clause.params);
        let offsets: Vec<usize> = schema.binder_counts().collect();
        check_shape(source.types(), target, clause, &decls, &offsets, &clause.template, 0)?;

        let columns: Vec<Vec<Param>> = schema
            .params
            .iter()
            .map(|p| match p.kind {
                ParamKind::Sort => universe.iter().cloned().map(Param::Sort).collect(),
                ParamKind::Nat => CHECK_NATS.iter().map(|&n| Param::Nat(n)).collect(),
            })
            .collect();
        let mut outcome = Ok(());
        crate::term::chain::for_each_product(&columns, |values| {
            if outcome.is_err() {
                return;
            }
            let values: Vec<Param> = values.iter().map(|p| (*p).clone()).collect();
            outcome = check_instance(&table, &schema.name, &decls, &values, &clause.template);
        });
        outcome?;
    }
    Ok(table)
}

fn check_instance(
    table: &TranslationTable,
    schema: &str,
    decls: &[ParamDecl],
    values: &[Param],
    template: &Template,
) -> Result<()> {
    let g = &table.morphism;
    let arity = table.source.instantiate(schema, values)?;
    let holes: Vec<(Vec<Sort>, Sort)> = arity
        .inputs
        .iter()
        .map(|i| (i.bound.iter().map(|s| g.apply(s)).collect(), g.apply(&i.sort)))
        .collect();
    let found = infer(table, decls, values, &holes, &[], template)?;
    let expected = g.apply(&arity.output);
    if found != expected {
        return Err(Error::SortMismatch {
            index: 0,
            expected,
            found,
        });
    }
    Ok(())
}

fn graft(g: &TypeMorphism, decls: &[ParamDecl], values: &[Param], t: &Template, args: &[Term]) -> Term {
    match t {
        Template::Placeholder(j) => args[*j].clone(),
        Template::Var(i) => Term::var(*i),
        Template::Op { name, params, args: children } => Term::op(
            name.as_str(),
            resolve_params(g, decls, values, params),
            children.iter().map(|c| graft(g, decls, values, c, args)).collect(),
        ),
    }
}

/// The target syntax as a model of the source signature.
#[derive(Debug, Clone, Copy)]
pub struct TableModel<'a> {
    table: &'a TranslationTable,
}

pub fn table_model(table: &TranslationTable) -> TableModel<'_> {
    TableModel { table }
}

impl Model for TableModel<'_> {
    type Value = Term;

    fn name(&self) -> &str {
        "table"
    }

    fn var(&self, ctx: &Context, index: usize) -> Result<Term> {
        mk_var(ctx, index).map(|(t, _)| t)
    }

    fn op(&self, schema: &str, params: &[Param], _: &Context, args: &[Term]) -> Result<Term> {
        let clause = self
            .table
            .clauses
            .get(schema)
            .ok_or_else(|| Error::MissingClause(schema.to_string()))?;
        let source = self.table.source.schema_or_err(schema)?;
        let decls = clause_decls(&source.params, &clause.params);
        Ok(graft(&self.table.morphism, &decls, params, &clause.template, args))
    }

    fn msubst(&self, value: &Term, _: &Context, _: &Context, images: &[Term]) -> Result<Term> {
        try_subst(&self.table.target, value, images)
    }

    fn render(&self, value: &Term) -> String {
        print_term(value)
    }
}

/// Translates a well-formed source term. The result is checked to be
/// well-formed over the image context at the image sort.
pub fn translate(table: &TranslationTable, ctx: &Context, t: &Term) -> Result<Term> {
    let sort = sort_of(&table.source, ctx, t)?;
    let out = fold(&table_model(table), &table.source, ctx, t)?;
    let g = &table.morphism;
    check(&table.target, &map_context(g, ctx), &out, &g.apply(&sort))?;
    Ok(out)
}
