//! The free particle confined to a half-line, formulated on the whole line
//! with delta-hat operators: `H_C`, its symmetric restriction `H_S`, the
//! Dirichlet Hamiltonian `H_D` and the projectors `P+`, `P-`.

mod hamiltonian;
mod operator;
mod wave;

pub use hamiltonian::{
    apply_hc, apply_hd, apply_hs, boundary_form, commutator_hd_p, delta_minus, delta_plus,
    eigen_residual, hc_reduced_form, in_domain_hs, in_domain_max_hc, in_domain_max_hd,
    is_eigenfunction, project, symmetry_defect, BoundaryForm, Side,
};
pub use operator::{Domain, OperatorExpr};
pub use wave::{inner_product, BoundaryData, EnergyValue, WaveFunction, DECAY_LIMIT, DEFAULT_WINDOW};
