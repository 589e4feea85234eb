//! Command-line front end: parses Omega expressions or structured flags and
//! dispatches to the evaluators in `omega_core`.

pub mod ast;
pub mod parse;
mod run;

pub use ast::{LambdaFactor, OmegaExpressionAST, Sign};
pub use parse::{parse_expression, parse_expression_with, ExprError};
pub use run::{run, EXIT_DISAGREEMENT, EXIT_INPUT, EXIT_OK, EXIT_PRECONDITION};
