#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "rigidcount/graph.hpp"

namespace rigidcount {

using Complex = std::complex<double>;

struct PointC {
    Complex x{0.0, 0.0};
    Complex y{0.0, 0.0};
};

// Assignment of a complex plane point to every vertex.
struct Realization {
    std::vector<PointC> coords;

    int size() const { return static_cast<int>(coords.size()); }
    PointC& operator[](int v) { return coords[v]; }
    const PointC& operator[](int v) const { return coords[v]; }
};

// Per-edge squared distances in sorted edge order.
using Measurement = std::vector<Complex>;

enum class RealizationClass {
    Real,
    MinkowskiXReal_YImag,
    MinkowskiXImag_YReal,
    ComplexGeneric,
};

std::string to_string(RealizationClass c);

// The complex quadratic form d(P) = x^2 + y^2 applied to P - Q.  Invariant
// under translations, the z1/z2 rotations with z1^2 + z2^2 = 1, and the
// diag(1,-1) reflection, but NOT positive: isotropic directions exist.
Complex squared_dist(const PointC& p, const PointC& q);

// |E| x 2n matrix of coordinate differences, rows in sorted edge order.
// Equals half the Jacobian of the rigidity map at p.
Eigen::MatrixXcd rigidity_matrix(const Graph& g, const Realization& p);

// Rank with singular values below tol * sigma_max treated as zero.
int numeric_rank(const Eigen::MatrixXcd& mat, double tol = 1e-8);

Measurement edge_measurements(const Graph& g, const Realization& p);

struct CanonicalizeResult {
    Realization realization;
    bool degenerate_third = false; // v3's first coordinate was (numerically) zero
};

// Congruent representative with q(v1) = (0,0), q(v2) = (0,d0) where
// d0^2 = d(q(v1)-q(v2)) and Arg d0 lies in (0,pi], and the first coordinate
// of q(v3) has Arg in (0,pi] (a positive-real coordinate is reflected to
// negative-real).  Throws IsotropicEdgeError when d(q(v1)-q(v2)) vanishes.
CanonicalizeResult canonicalize(const Realization& q, int v1, int v2, int v3,
                                double tol = 1e-8);

inline Realization canonicalize_realization(const Realization& q, int v1 = 0, int v2 = 1,
                                            int v3 = 2, double tol = 1e-8) {
    return canonicalize(q, v1, v2, v3, tol).realization;
}

RealizationClass classify_realization(const Realization& q, double tol = 1e-8);

// Real coordinates drawn iid from [-1,1]; bit-identical for equal seeds.
Realization random_generic_realization(const Graph& g, std::uint64_t seed);

// Entrywise complex conjugate, re-canonicalized.  An involution on the
// canonical solutions of any system with real measurements.
Realization conjugate_canonical(const Realization& q, double tol = 1e-8);

std::string realization_to_json(const Realization& p);
Realization realization_from_json(const std::string& text);

} // namespace rigidcount
