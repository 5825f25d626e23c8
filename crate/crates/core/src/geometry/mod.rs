//! Hirzebruch surfaces, Grassmannians and dimension bookkeeping.

mod counts;
mod grassmann;
mod hirzebruch;

pub use counts::{
    bielliptic_stratum_dim, canonical_quadrics, forms_dim, gl_dim, hyperelliptic_stratum_dim,
    moduli_dim, mukai_quadric_rank, mukai_total_dim, nodal_sextics_dim, pgl_dim,
    plane_curves_dim, stratum_dimensions, trigonal_stratum_dim, Stratum,
};
pub use grassmann::{grass_dim, plucker_degree, GrassmannData};
pub use hirzebruch::{
    aut_dim, genus_of_class, genus_of_formal, h0_hirzebruch, intersect, solve_scroll_coefficient,
    trigonal_maroni_valid, HirzebruchClass,
};
