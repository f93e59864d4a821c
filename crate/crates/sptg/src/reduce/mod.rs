//! Game generators and game transforms.

mod compile;
mod family;
mod gadget;
mod transform;

pub use family::{family_closed_form, gen_exp_family};
pub use gadget::{add_literal, gen_variable_gadget};
pub use compile::{
    compile_conp, compile_formula, compile_np, compile_qbf, spread_variables, OuterMode, ReductionOutput, Stage,
};
pub use transform::{make_urgent, promise_to_strategy, rescale_integer, restrict_time, scale_currency, solve_any, to_degree3};
