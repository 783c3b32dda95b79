//! Cluster sizes in a network from the fundamental matrix of a rescaled
//! adjacency matrix.
//!
//! The adjacency matrix S is rescaled into a strictly substochastic W, so
//! that `I + W + W² + …` converges to `F = (I - W)⁻¹`. Row i of F is nonzero
//! exactly on the nodes reachable from i, so counting the nonzeros in a row
//! gives the size of that node's cluster.

pub mod linalg;
pub mod closure;
pub mod graph;
pub mod bench;
