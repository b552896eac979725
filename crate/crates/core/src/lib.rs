//! Coherence machinery for bimonoidal categories: terms, paths between them,
//! reductions, concrete targets, and the operads and matrices built on top.

pub mod coherence;
pub mod matrix;
pub mod operads;
pub mod paths;
pub mod permbraid;
pub mod reductions;
pub mod targets;
pub mod terms;

pub use coherence::{
    confirm_in_targets, decide, random_parallel_pair, CoherenceError, Criterion, FuzzSpec, Verdict,
};
pub use matrix::{
    cell_compose, cell_product, cell_tensor, mat_identity, mat_product, mat_tensor, perm_matrix,
    structural_iso, verify_matrix_axioms, zero_matrix, MatCheck, MatConfig, MatReport, Matrix,
    Matrix2Cell, MatrixError, StructuralKind, StructuralShape, StructuralSynth,
};
pub use operads::{
    br_compose, eas_compose, eas_compose_morphisms, exchange_pair, free_nfold_enumerate,
    mon_hom_exists, mon_restrict, mon_subst, pair_relation, BrMorphism, EAsMorphism, MonHomTable,
    MonObject, MonTree, OperadError, PairRelation,
};
pub use paths::{
    applicable_edges, infer_edge, route, Context, Direction, EdgeKind, EdgeQuery, ElementaryEdge,
    Flavor, Frame, Path, PathBuilder, PathError, PrimeEdge, Side,
};
pub use permbraid::{
    braid_block, braid_block_sum, braid_block_sum_all, braid_equal, braid_underlying,
    elementary_block_braid, perm_block, perm_block_sum, perm_block_sum_all, perm_kron, perm_tau,
    perm_transpose, BraidWord, Letter, PermError, Permutation,
};
pub use reductions::{
    canonical_iso, delta_reduce, delta_reduce_with, normal_form, normal_form_with, one_reduce,
    one_reduce_with, reduce, reduce_path, synthesize, zero_delta_reduce, zero_reduce,
    zero_reduce_with, IsoMode, ReductionError, ReductionKind, Strategy,
};
pub use targets::{
    canonical_assignment, canonical_object, check_axioms, check_axioms_with, d_groupoid_check,
    d_hom_closure, d_target, dad_target, dbr_target, distortion, evaluate_functor, evaluate_path,
    evaluate_term, grothendieck_compare, laplaza_axioms, monoidal_axioms, sigma_iso_check,
    sigma_prime_target, sigma_target, AdditiveDistortion, AdditiveMorphism, Axiom, AxiomConfig,
    AxiomReport, Bimonoidal, BraidedDistortion, BraidedMorphism, Corrupted, DObject, Distortion,
    DistortionMode, DistortionMorphism, DistortionValue, Sigma, TargetError,
};
pub use terms::{
    classify, expanded_monomials, is_delta_reduced, is_monomial, is_ns_regular, is_polynomial,
    is_regular, is_sum_of_atoms_or_binary_products, measures, parse_term, random_term,
    random_term_with_leaves, support, Classification, Generator, Measures, Op, RandomTermSpec,
    StrictPolynomial, SupportFlavor, Term, TermError,
};
