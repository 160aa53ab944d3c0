//! Exact arithmetic on binomial arrays: two-way-infinite Pascal-type arrays
//! whose columns are the coefficient sequences of `(1+x)^n p(x)`.

pub mod array;
pub mod binomial;
pub mod catalan;
pub mod error;
pub mod hockey;
pub mod identities;
pub mod report;
pub mod scalar;
pub mod sequence;
pub mod sl2;
pub mod symmetry;
pub mod transform;
pub mod zeros;

pub use array::{linear_combination, make_array, pascal_basis, window_audit, BinomialArray, Window, WindowAudit};
pub use binomial::{binomial, catalan};
pub use catalan::{ballot_diagonal, c_sequence, near_zero_cg, shapiro_entry, skew_near_zero};
pub use error::{Error, Result};
pub use hockey::{rule_sum, RuleId, RuleOutcome};
pub use identities::{check_identity, Outcome, ParamValue, Params, Suite, Value};
pub use report::{replay, run_suite, FamilyReport, IdentityReport};
pub use scalar::Scalar;
pub use sequence::InitialSequence;
pub use sl2::{
    b_f, b_f_inverse, f_action, invariant_form, pairing_check, primed_form, s_involution, PairingCheck, RepVector,
};
pub use symmetry::{
    border_profile, diff_table, reverse_involution, taylor_at_minus_one, trapezoid_interchange, BorderProfile,
    DiffTable,
};
pub use transform::{
    cauchy_product, dwyer_frankel_check, forward_transform, inverse_transform, t_sequence, vandermonde_expand,
    Comparison, SeqVec,
};
pub use zeros::{
    aeration, cg_initial_condition, generalized_catalan, is_palindromic, is_skew_palindromic, proper_zeros,
    skew_diagonal_zeros, NearZeroSeq, ZeroLocus,
};
