//! Exact-arithmetic calculus for spectra of isolated quasi-homogeneous
//! singularities and its applications: node-count bounds for hypersurfaces
//! in weighted projective spaces, a symmetric-orbit obstruction via
//! character counting, and limiting mixed-Hodge tables for cyclic covers
//! of the line.
//!
//! Everything is computed over arbitrary-precision rationals and integers;
//! results are exact and deterministic. The crate is organized around the
//! pipeline
//!
//! 1. [`algebra`]: rationals, residues mod 1, group-ring convolution;
//! 2. [`milnor`]: polynomials, weights, Groebner bases, monomial bases of
//!    Jacobian rings;
//! 3. [`spectra`]: mixed spectra and eigenspectra, the closed convolution
//!    form for sums of pure powers, base change, Hodge-Deligne tables;
//! 4. [`bounds`], [`symrep`], [`covers`]: the three applications.

pub mod algebra;
pub mod bounds;
pub mod covers;
pub mod error;
pub mod milnor;
pub mod spectra;
pub mod symrep;

pub use algebra::{frac, gamma, gamma_tilde, rat, GroupKey, GroupRingElt, Rational, UnitClass};
pub use bounds::{
    best_node_bound, cover_eigen_dimension, miyaoka_bound, miyaoka_p3, naive_middle_bound,
    spectral_node_bound, BoundReport, RecordExample, SurfaceInvariants,
    WeightedHypersurfaceConfig, RECORD_EXAMPLES,
};
pub use covers::{
    boundary_local_spectrum, eigenspace_ranks, full_local_system_rank, hyperplane_cover_hodge,
    lmhs, CoverConfig, EigenspaceRanks, EigenvalueNote, LmhsDiamond, Stratum,
};
pub use error::{Error, Result};
pub use milnor::{
    check_quasi_homogeneous, ell_value, groebner_basis, infer_weights, normal_form,
    standard_monomial_basis, standard_monomial_basis_with, Monomial, MonomialBasis,
    MonomialOrder, Polynomial, TieBreak, WeightInference, WeightVector,
};
pub use spectra::{
    base_change, bp_eigenspectrum, eigenspectrum, hodge_deligne_table, mixed_spectrum,
    DiagonalAutomorphism, EigenSpectrum, EigenSpectrumEntry, HodgeDeligneTable, Spectrum,
    SpectrumEntry,
};
pub use symrep::{
    enumerate_monomials, orbit_sign_multiplicity, sign_multiplicity_total, ExponentTuple,
    ObstructionReport, OrbitRecord, Verdict,
};
