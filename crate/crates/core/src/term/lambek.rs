use std::sync::Arc;

use super::{OpNode, Term};
use crate::sigdef::Param;

/// One layer of a term: a variable, or a top constructor over subterms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Layer {
    VarCase(usize),
    OpCase {
        schema: Arc<str>,
        params: Vec<Param>,
        args: Vec<Term>,
    },
}

pub fn lambek_decompose(t: &Term) -> Layer {
    match t {
        Term::Var(i) => Layer::VarCase(*i),
        Term::Op(node) => Layer::OpCase {
            schema: node.name.clone(),
            params: node.params.clone(),
            args: node.args.clone(),
        },
    }
}

pub fn lambek_compose(layer: Layer) -> Term {
    match layer {
        Layer::VarCase(i) => Term::Var(i),
        Layer::OpCase {
            schema,
            params,
            args,
        } => Term::Op(Arc::new(OpNode {
            name: schema,
            params,
            args,
        })),
    }
}
