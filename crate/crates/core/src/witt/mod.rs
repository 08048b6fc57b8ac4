//! Witt vectors of length `m` over `F_q` and `F_q(T)`, Galois rings and
//! Artin–Schreier–Witt equations `y^q - y = alpha`.

mod asw;
mod galois;
mod tables;
mod vector;

pub use tables::{
    build_tables, ghost_component, ghost_integers, IntPoly, ModPoly, WittOp, WittTableCache, WittTables, MAX_LENGTH,
};
pub use vector::WittVector;
pub use galois::{all_vectors, basis_check, prime_vectors, solve_witt, span_check, witt_moore_matrix, WittF};
pub use asw::{
    count_cyclic_subextensions, cyclic_subextension, witt_generator_relation, witt_infinity_splitting, witt_power_normal_form,
    witt_reduce, CyclicSubextension, WittExtensionSpec, WittK, WittRelation, WittShift, WittSubstitutionLog,
};
