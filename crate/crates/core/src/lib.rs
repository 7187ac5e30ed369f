//! Exact computer algebra for three mutually dual graded Hopf structures and
//! a cyclotomic matrix verifier:
//!
//! - [`tree`]: rooted ordered coloured trees with the concatenation product
//!   and pruning coproduct, their graded dual (grafting and deconcatenation),
//!   enumeration by Catalan counts, and the root-deletion bijection onto
//!   vertex-decorated forests.
//! - [`nsym`]: the bunch-of-flowers subalgebra on multisequence indices, with
//!   the juxtaposition product, the rowwise pruning coproduct, compositions,
//!   partitions and the composition↔subset bijection.
//! - [`qsym`]: the dual monomial basis with the quasi-shuffle product,
//!   deconcatenation coproduct, the duality pairing, and the classical
//!   one-colour layer (monomial/complete homogeneous functions, Hall pairing).
//! - [`pcseries`]: truncated polynomials in partially commutative variables
//!   that commute exactly when their positions differ; normal forms, monomial
//!   function expansions and independent product/coproduct oracles.
//! - [`weyl`]: clock/shift Weyl pairs over ℚ(ζ_d) and exact verification of
//!   the 2×2 generator-matrix inversion identities.
//! - [`hopf`]: the generic graded-bialgebra scaffolding (convolution,
//!   antipode recursions, exhaustive axiom checking) shared by all of the
//!   above.
//!
//! All coefficients are exact arbitrary-precision rationals; there is no
//! floating point anywhere. Every value is immutable and every operation is a
//! pure function, so everything is safe to use from multiple threads.

pub mod cyclotomic;
pub mod error;
pub mod hopf;
pub mod lincomb;
pub mod nsym;
pub mod pcseries;
pub mod qsym;
pub mod tree;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use lincomb::{
    coeff, coeff_from_str, coeff_to_string, pairing, BasisKey, Coeff, LinComb, Tensor2, Tensor3,
};

pub use cyclotomic::{cyclotomic_poly, CycField, CycScalar};
pub use hopf::{
    antipode, antipode_right, check_antipode, check_bialgebra, convolution, coproduct_lin,
    counit_lin, mul_lin, tensor_mul, unit_counit_map, AxiomFailure, AxiomReport, EndoMap,
    GradedHopf,
};
pub use nsym::{
    embed_as_bunch, enumerate_multiseqs, h_coproduct, h_product, multiseq_counit, ColourSeq,
    Composition, MultiSeq, NsymHopf, Partition,
};
pub use pcseries::{
    doubling_coproduct_oracle, expand_m, normalize, pc_multiply, similar, DoubledAlphabet,
    PcMonomial, PcPolynomial, PcVar,
};
pub use qsym::{
    complete_hom_sym, deconcat_coproduct_m, duality_pairing, hall_pairing, monomial_sym,
    quasi_shuffle, quasi_shuffle_terms, sym_coproduct_m, MBasisKey, QsymHopf, QuasiShuffleTerm,
    RowProvenance,
};
pub use tree::{
    concat, deconcat_coproduct, enumerate_trees, from_decorated_forest, grafting_product, plant,
    planted_factorization, pruning_coproduct, to_decorated_forest, tree_counit, DecoratedForest,
    DecoratedTree, DualTreeHopf, PlantedFactorization, RocTree, TreeHopf, DEFAULT_ENUM_CAP,
};
pub use verify::{
    verify_doubling_oracle, verify_nsym_qsym_duality, verify_quasi_shuffle_oracle,
    verify_tree_duality, VerifyReport,
};
pub use weyl::{
    build_quadruple, build_weyl_pair, check_barxx_identity, check_dual_relations,
    check_inverse_formula, check_inverse_products, check_quadruple_relations, default_scales,
    extract_q, invert_a, run_full_check, CycMatrix, InvertedA, WeylCheck, WeylQuadruple,
    WeylReport,
};
