//! Exact Min-1-Light orientation.
//!
//! Given an undirected graph, orient every edge so that as few vertices as
//! possible (or, with nonnegative vertex costs, as little total cost as
//! possible) end up with out-degree at most one. The problem is solved
//! exactly by one maximum cardinality (or maximum weight) matching
//! computation on a gadget graph; the matching value certifies optimality.
//!
//! ```
//! use orient_light::{io::parse_graph, solver::solve_min_light};
//!
//! let k4 = parse_graph("4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n").unwrap();
//! let solution = solve_min_light(&k4).unwrap();
//! assert_eq!(solution.objective, 1);
//! ```

pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod matching;
pub mod oracle;
pub mod reduction;
pub mod scalar;
pub mod solver;

pub use error::{GraphError, MatchingError, OracleError, ParseError, ReductionError, SolveError};
pub use graph::{light_cost, light_vertices, out_degree, Direction, Graph, Orientation, VertexWeights};
pub use matching::Matching;
pub use scalar::Scalar;
pub use solver::{solve_min_light, solve_min_light_weighted, Certificate, Solution};

/// Exact integer costs; decimal inputs are scaled to this.
pub type Cost = i64;
pub type Rational = num_rational::Rational64;

pub type IntWeights = VertexWeights<Cost>;
pub type RationalWeights = VertexWeights<Rational>;
pub type FloatWeights = VertexWeights<f64>;

pub type IntSolution = Solution<Cost>;
pub type RationalSolution = Solution<Rational>;
pub type FloatSolution = Solution<f64>;

pub type IntReducedGraph = reduction::ReducedGraph<Cost>;
