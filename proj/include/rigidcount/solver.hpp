#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "rigidcount/counting.hpp"
#include "rigidcount/graph.hpp"
#include "rigidcount/realization.hpp"

namespace rigidcount {

// One quadratic constraint d(q(u) - q(v)) = rhs.
struct QuadEquation {
    int u = 0;
    int v = 0;
    Complex rhs{0.0, 0.0};
};

// The canonical-position distance system: vertex 0 pinned to (0,0), the x
// coordinate of vertex 1 pinned to 0, variables (y1, x2, y2, ..., x_{n-1},
// y_{n-1}).  The square block comes from a spanning isostatic subgraph; the
// remaining edges are surplus constraints used to filter endpoints.
struct PolySystem {
    int n = 0;
    std::vector<QuadEquation> square;
    std::vector<QuadEquation> surplus;

    int num_vars() const { return 2 * n - 3; }

    Eigen::VectorXcd eval_square(const Eigen::VectorXcd& z) const;
    Eigen::MatrixXcd jac_square(const Eigen::VectorXcd& z) const;
    double surplus_residual(const Eigen::VectorXcd& z) const; // max-norm
    double full_residual(const Eigen::VectorXcd& z) const;    // max-norm

    Realization realization_from_vars(const Eigen::VectorXcd& z) const;
};

struct TrackerConfig {
    double initial_step = 0.05;
    double min_step = 1e-7;
    double newton_tol = 1e-10;
    int newton_max_iters = 15;
    double divergence_norm = 1e8;
    double endpoint_cluster_eps = 1e-6;
    std::uint64_t gamma_seed = 7;
};

enum class PathStatus {
    Finite,         // converged endpoint satisfying the full system
    Diverged,       // escaped to infinity, or square-solution not on the variety
    TrackingFailed, // step underflow or corrector breakdown; never dropped silently
};

struct PathResult {
    PathStatus status = PathStatus::TrackingFailed;
    std::optional<Eigen::VectorXcd> endpoint;
    double residual = 0.0;
    double jacobian_condition_estimate = 0.0;
};

struct ClusteredSolution {
    Eigen::VectorXcd point;
    int multiplicity = 1;
    double residual = 0.0;
};

struct NumericCount {
    std::uint64_t total_paths = 0; // 2^{2n-3}
    int finite_solutions = 0;      // always 4 * c_estimate
    int c_estimate = 0;
    int real_count = 0;
    int minkowski_count = 0;
    int complex_pair_count = 0;    // ComplexGeneric classes; even for real lengths
    int failures = 0;
    bool certified = false;        // no TrackingFailed paths
};

// Richer solve output: the numbers plus one canonical representative per
// congruence class.
struct SolveOutput {
    NumericCount count;
    std::vector<Realization> class_representatives;
    std::vector<RealizationClass> class_tags;
};

struct VerifySeedEntry {
    std::uint64_t seed = 0;
    bool solved = false;       // the numeric run completed
    bool certified = false;
    int c_estimate = 0;
    bool agrees = false;
    std::string error;
};

struct VerifyReport {
    std::string decomposition_value;
    std::vector<VerifySeedEntry> entries;
    bool all_agree = false;
};

// Square system over a spanning isostatic subgraph of g, surplus equations
// for the remaining edges.  Throws NotRigidError when g is flexible.
PolySystem build_system(const Graph& g, const Measurement& lengths);

// All 2^{2n-3} start solutions of the total-degree system z_i^2 = r_i with
// seeded nonzero r_i.  The same config reproduces the same start data inside
// track_path.
std::vector<Eigen::VectorXcd> total_degree_start(const PolySystem& sys,
                                                 const TrackerConfig& cfg);

// Track one path of the gamma-trick homotopy
// H(z,t) = (1-t) * gamma * (z^2 - r) + t * f(z) from t=0 to t=1 with an
// RK4 predictor and Newton corrector, then polish on the full system.
PathResult track_path(const PolySystem& sys, const Eigen::VectorXcd& start,
                      const TrackerConfig& cfg);

// Single-linkage clustering at radius eps in the max-norm; representative is
// the member with the smallest residual.  Throws ClusteringError when a
// cluster has diameter above 10 * eps.
std::vector<ClusteredSolution> cluster_solutions(
    const std::vector<std::pair<Eigen::VectorXcd, double>>& endpoints, double eps);

// Full numeric count at a seeded random generic realization.  Throws
// ConsistencyError when the finite count is not divisible by four, an
// endpoint repeats, or the canonical classes do not have size four.
SolveOutput solve_realizations(const Graph& g, std::uint64_t seed, const TrackerConfig& cfg);
NumericCount count_realizations(const Graph& g, std::uint64_t seed, const TrackerConfig& cfg);

// Multi-seed cross-check of the numeric count against the exact
// decomposition value.  Requires count_c(g) to be exact.  Disagreement is
// reported, not thrown.
VerifyReport verify_against_decomposition(const Graph& g,
                                          const std::vector<std::uint64_t>& seeds,
                                          const TrackerConfig& cfg);

std::string numeric_count_to_json(const NumericCount& c);
NumericCount numeric_count_from_json(const std::string& text);
std::string verify_report_to_json(const VerifyReport& r);

} // namespace rigidcount
