use super::schema::{ConstructorSchema, InputPattern, ParamDecl, SortPattern};
use super::sort::{TypeSystem, UNTYPED_SORT};
use super::Signature;
use crate::error::{Error, Result};

pub const BUILTIN_NAMES: [&str; 6] = ["ulc", "fol", "ll", "stlc", "pcf", "nat"];

/// Looks up one of the builtin signatures by name.
pub fn builtin(name: &str) -> Result<Signature> {
    match name {
        "ulc" => Ok(ulc()),
        "nat" => Ok(nat()),
        "fol" => Ok(fol()),
        "ll" => Ok(ll()),
        "stlc" => stlc(&["iota"]),
        "pcf" => Ok(pcf()),
        other => Err(Error::UnknownBuiltin(other.to_string())),
    }
}

fn star() -> SortPattern {
    SortPattern::base(UNTYPED_SORT)
}

/// Untyped schemas from a list of (name, binder count per input).
fn untyped(name: &str, ops: &[(&str, &[usize])]) -> Signature {
    let schemas = ops
        .iter()
        .map(|(op, inputs)| {
            let inputs = inputs
                .iter()
                .map(|&n| InputPattern::binding(vec![star(); n], star()))
                .collect();
            ConstructorSchema::simple(*op, inputs, star())
        })
        .collect();
    Signature::new(name, TypeSystem::untyped(), schemas).expect("builtin signature is valid")
}

fn ulc() -> Signature {
    untyped("ulc", &[("app", &[0, 0]), ("abs", &[1])])
}

fn nat() -> Signature {
    untyped("nat", &[("zero", &[]), ("succ", &[0])])
}

fn fol() -> Signature {
    untyped(
        "fol",
        &[
            ("top", &[]),
            ("bot", &[]),
            ("not", &[0]),
            ("and", &[0, 0]),
            ("or", &[0, 0]),
            ("imp", &[0, 0]),
            ("forall", &[1]),
            ("exists", &[1]),
        ],
    )
}

fn ll() -> Signature {
    untyped(
        "ll",
        &[
            ("top", &[]),
            ("bot", &[]),
            ("zero", &[]),
            ("one", &[]),
            ("bang", &[0]),
            ("whynot", &[0]),
            ("with", &[0, 0]),
            ("par", &[0, 0]),
            ("tensor", &[0, 0]),
            ("plus", &[0, 0]),
            ("lolli", &[0, 0]),
            ("exists", &[1]),
            ("forall", &[1]),
        ],
    )
}

fn s() -> SortPattern {
    SortPattern::param("s")
}

fn t() -> SortPattern {
    SortPattern::param("t")
}

/// `app<s,t> : (arrow(s,t), s) -> t` and `abs<s,t> : ([s] t) -> arrow(s,t)`.
fn lambda_schemas() -> [ConstructorSchema; 2] {
    let st = || vec![ParamDecl::sort("s"), ParamDecl::sort("t")];
    [
        ConstructorSchema::new(
            "app",
            st(),
            vec![
                InputPattern::plain(SortPattern::arrow(s(), t())),
                InputPattern::plain(s()),
            ],
            t(),
        ),
        ConstructorSchema::new(
            "abs",
            st(),
            vec![InputPattern::binding(vec![s()], t())],
            SortPattern::arrow(s(), t()),
        ),
    ]
}

/// Simply-typed lambda calculus over the given base sorts, without constants.
pub fn stlc(base_sorts: &[&str]) -> Result<Signature> {
    let types = TypeSystem::new(base_sorts.iter().copied(), true)?;
    Signature::new("stlc", types, lambda_schemas().into())
}

/// PCF over `Nat | Bool` with arrows. Numerals form the family `k<n>`.
pub fn pcf() -> Signature {
    let nat = || SortPattern::base("Nat");
    let bool_ = || SortPattern::base("Bool");
    let plain = InputPattern::plain;
    let types = TypeSystem::new(["Nat", "Bool"], true).expect("valid types");
    let [app, abs] = lambda_schemas();
    let schemas = vec![
        ConstructorSchema::simple("true", vec![], bool_()),
        ConstructorSchema::simple("false", vec![], bool_()),
        ConstructorSchema::simple(
            "if_bool",
            vec![plain(bool_()), plain(bool_()), plain(bool_())],
            bool_(),
        ),
        ConstructorSchema::simple(
            "if_nat",
            vec![plain(bool_()), plain(nat()), plain(nat())],
            nat(),
        ),
        ConstructorSchema::new("k", vec![ParamDecl::nat("n")], vec![], nat()),
        ConstructorSchema::simple("succ", vec![plain(nat())], nat()),
        ConstructorSchema::simple("pred", vec![plain(nat())], nat()),
        ConstructorSchema::simple("is_zero", vec![plain(nat())], bool_()),
        app,
        abs,
        ConstructorSchema::new(
            "Y",
            vec![ParamDecl::sort("s")],
            vec![plain(SortPattern::arrow(s(), s()))],
            s(),
        ),
    ];
    Signature::new("pcf", types, schemas).expect("builtin signature is valid")
}
