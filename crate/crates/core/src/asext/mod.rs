//! Extensions `K = k(y)` of `k = k0(T)` defined by `f(y) = u` for a
//! separable additive `f` whose roots lie in `k0`.

mod combine;
mod qa;
mod reduce;
mod relation;
mod spec;
mod split;
mod subext;

pub use qa::{qa_verify, Claim, QAElem, QuotientAlgebra};

pub(crate) use reduce::{reduce_with, Scope};
pub use reduce::{is_reduced, Shift, SubstitutionLog};
pub use spec::{
    check_irreducible, hyperplane_rhs, normalize_at, ramification_report, reduce_global, wp_membership,
    ExtensionSpec, RamificationReport, RamifiedPlace,
};
pub use subext::{subextensions, subextensions_in, trace_generator, trace_generators, SubextensionDesc, TraceGenerator};
pub use split::{
    decomposition_type, degree_p_behavior, place_splitting, split_or_inert, DecompositionType, SplitReport,
    SplitVerdict, SplitWarning, SubextBehavior,
};
pub use combine::{combine_generators, Combined};
pub use relation::{
    generator_relation, power_normal_form, power_normal_forms, relate_by_linear_map, GeneratorRelation, PowerNormalForm,
};
