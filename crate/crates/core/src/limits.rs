//! Size guards for the potentially explosive enumerations.
//!
//! Every expensive operation takes a [`Limits`] value so callers decide how
//! much work is acceptable. The defaults keep all bundled examples fast;
//! `Limits::unbounded()` removes the guards for deliberate large runs.

/// Guard thresholds for enumerative operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum ambient dimension `m` for cone/polyhedron enumerations.
    pub max_dim: usize,
    /// Maximum number of configuration vectors for subset enumerations.
    pub max_vectors: usize,
    /// Maximum number of lattice points a planar region may contain before
    /// the chamber-complex machinery refuses to run.
    pub max_lattice_points: usize,
    /// Maximum total degree for monomial/fiber enumerations.
    pub max_degree: usize,
    /// Maximum number of candidate cells for triangulation enumeration.
    pub max_cells: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_dim: 4,
            max_vectors: 32,
            max_lattice_points: 120,
            max_degree: 24,
            max_cells: 4096,
        }
    }
}

impl Limits {
    /// Limits high enough to be effectively disabled. Use deliberately.
    pub fn unbounded() -> Self {
        Limits {
            max_dim: usize::MAX,
            max_vectors: usize::MAX,
            max_lattice_points: usize::MAX,
            max_degree: usize::MAX,
            max_cells: usize::MAX,
        }
    }
}
