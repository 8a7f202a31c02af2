//! Near-MDS linear codes in poset metrics, with the ordered Hamming (NRT)
//! specialization: generalized weights, classification, exact weight
//! distributions, explicit constructions, and the correspondence between
//! ordered codes and point sets in the unit cube.

pub mod budget;
pub mod code;
pub mod codefile;
pub mod construct;
pub mod cube;
pub mod error;
pub mod field;
pub mod matrix;
pub mod ordered;
pub mod poset;
pub mod weights;

pub use budget::{Budget, DEFAULT_MAX_ENUM};
pub use code::{
    poset_distance, poset_weight, Classification, CodeClass, DerivedCode, DerivedCodes, LinearCode,
    OrthogonalArrayCertificate, WeightProfile,
};
pub use codefile::{code_to_text, load_code, parse_code, poset_spec_of, PosetSpec};
pub use construct::{construct_n1, construct_n2, construct_n3, search_random_nmds, ConstructionSpec, Family};
pub use cube::{
    code_to_points, interval_count, tiling_characterization, verify_net, verify_nmds_distribution,
    verify_optimal_distribution, verify_tiling, CoverCheck, DistributionReport, ElementaryInterval, PointSet, Tiling,
    TilingReport, UniformityReport,
};
pub use error::{Error, Result};
pub use field::{FieldElement, PrimeField};
pub use matrix::Matrix;
pub use ordered::{chain_product_poset, OrderedSpace, Shape};
pub use poset::{CoordSet, Ideal, Poset};
pub use weights::{
    shape_counts, support_counts, weight_dist_bruteforce, weight_dist_nmds_hamming, weight_dist_nmds_ordered,
    weight_dist_nmds_poset, WeightDistribution,
};
