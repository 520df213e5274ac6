//! Coherent-state quantization of the complex plane: the map from polynomial
//! observables to operators, the resolution-of-unity check, lower symbols,
//! uncertainty products, and time-evolved symbols.

mod polynomial;
mod quantize;
mod symbol;

pub use polynomial::{MonomialTerm, RadialPolynomial};
pub use quantize::{quantize, resolution_check};
pub use symbol::{
    expectation, lower_symbol, time_evolved_symbol, time_evolved_symbol_matrix,
    uncertainty_product, uncertainty_product_direct, SymbolReport,
};
