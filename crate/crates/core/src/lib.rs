//! Exact independence polynomials of small graphs.
//!
//! The crate computes `I(G; x) = sum_k i_k(G) x^k` exactly for graphs on at
//! most 64 vertices, builds the lexicographic, rooted, join and union
//! products together with the polynomial formulas predicting them, and
//! checks sequence properties (unimodality, log-concavity, symmetry,
//! Newton's inequalities, real-rootedness) in exact arithmetic.
//!
//! ```
//! use indpoly::{independence_polynomial, FamilySpec, IntPoly};
//!
//! let g = "gn:2".parse::<FamilySpec>().unwrap().build().unwrap();
//! assert_eq!(independence_polynomial(&g), IntPoly::from_i64s(&[1, 5, 5, 1]));
//! ```

pub mod engine;
pub mod error;
pub mod family;
pub mod formats;
pub mod graph;
pub mod lab;
pub mod poly;
pub mod products;
pub mod props;
pub mod sturm;
pub mod tree;

pub use engine::{brute_force_independence_polynomial, coefficient, independence_polynomial};
pub use error::{Error, ParseError, Result, MAX_VERTICES};
pub use family::{FamilySpec, Fig2Tree};
pub use formats::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6};
pub use graph::Graph;
pub use poly::IntPoly;
pub use props::{is_log_concave, is_symmetric, is_unimodal, newton_check, Check, PropertyReport};
pub use sturm::real_rooted;
pub use tree::{prufer_decode, tree_canonical_code};
