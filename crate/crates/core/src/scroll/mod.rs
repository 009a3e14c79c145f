//! Weighted determinantal scrolls: profiles, degree bounds, Hilbert series, Betti tables,
//! regularities, Kronecker–Weierstrass matrices and 1-genericity tests.

pub mod kw;
pub mod probe;
pub mod profile;
pub mod syzygy;
pub mod table;

pub use kw::{
    build_kw, build_kw_matrix, standard_perturbations, structural_1generic_check, structural_verdict, Block,
    BlockKind, BlockSpec, DegreeBlocks, KwMatrix, PlacedBlock, StructuralVerdict,
};
pub use probe::{pseudo_1generic_probe, sample_parameters, ProbeOutcome};
pub use profile::{
    degree_display, feasible_profiles, minimal_degree_bound, minimal_profile, scroll_degree, scroll_hilbert_series,
    w_upper, Profile,
};
pub use syzygy::{
    betti_from_multiset, betti_from_profile, check_wnp, regularities, tau, wnp_threshold_rows, DepthInfo,
    RegularityReport, WnpReport,
};
pub use table::{enumerate_scrolls, render_tsv, ScrollRow};
