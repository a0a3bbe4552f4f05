use super::{parse_table, TranslationTable};
use crate::error::{Error, Result};
use crate::sigdef::builtin;

pub const BUILTIN_TABLES: [&str; 2] = ["fol2ll", "stlc2ulc"];

const FOL2LL: &str = "\
translate fol -> ll
clause top = (op top)
clause bot = (op bot)
clause not = (op lolli (op bang (ph 0)) (op zero))
clause and = (op with (ph 0) (ph 1))
clause or = (op plus (op bang (ph 0)) (op bang (ph 1)))
clause imp = (op lolli (op bang (ph 0)) (ph 1))
clause exists = (op exists (op bang (ph 0)))
clause forall = (op forall (ph 0))
";

const STLC2ULC: &str = "\
translate stlc -> ulc erase-types
clause app<s, t> = (op app (ph 0) (ph 1))
clause abs<s, t> = (op abs (ph 0))
";

/// The first-order to linear logic translation, or type erasure from the
/// simply typed to the untyped lambda calculus.
pub fn builtin_table(name: &str) -> Result<TranslationTable> {
    let text = match name {
        "fol2ll" => FOL2LL,
        "stlc2ulc" => STLC2ULC,
        other => return Err(Error::UnknownBuiltin(other.to_string())),
    };
    parse_table(text, &builtin)
}
