#include "rigidcount/realization.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>
#include <json.hpp>

namespace rigidcount {

std::string to_string(RealizationClass c) {
    switch (c) {
    case RealizationClass::Real: return "Real";
    case RealizationClass::MinkowskiXReal_YImag: return "MinkowskiXReal_YImag";
    case RealizationClass::MinkowskiXImag_YReal: return "MinkowskiXImag_YReal";
    case RealizationClass::ComplexGeneric: return "ComplexGeneric";
    }
    return "?";
}

Complex squared_dist(const PointC& p, const PointC& q) {
    Complex dx = p.x - q.x;
    Complex dy = p.y - q.y;
    return dx * dx + dy * dy;
}

Eigen::MatrixXcd rigidity_matrix(const Graph& g, const Realization& p) {
    if (p.size() != g.vertex_count())
        throw ArgumentError("realization size does not match graph");
    int n = g.vertex_count();
    Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(g.edge_count(), 2 * n);
    int row = 0;
    for (auto [u, v] : g.edges()) {
        Complex dx = p[u].x - p[v].x;
        Complex dy = p[u].y - p[v].y;
        mat(row, 2 * u) = dx;
        mat(row, 2 * u + 1) = dy;
        mat(row, 2 * v) = -dx;
        mat(row, 2 * v + 1) = -dy;
        ++row;
    }
    return mat;
}

int numeric_rank(const Eigen::MatrixXcd& mat, double tol) {
    if (mat.rows() == 0 || mat.cols() == 0)
        return 0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(mat);
    const auto& sv = svd.singularValues();
    double cutoff = tol * sv(0);
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff)
            ++rank;
    return rank;
}

Measurement edge_measurements(const Graph& g, const Realization& p) {
    if (p.size() != g.vertex_count())
        throw ArgumentError("realization size does not match graph");
    Measurement m;
    m.reserve(g.edge_count());
    for (auto [u, v] : g.edges())
        m.push_back(squared_dist(p[u], p[v]));
    return m;
}

namespace {

// Arg z in (0,pi], read with a relative tolerance on the imaginary part so
// boundary values coming out of Newton polishing classify stably.
bool arg_in_upper_half(Complex z, double tol) {
    if (std::abs(z.imag()) <= tol * std::abs(z))
        return z.real() < 0.0; // positive real has Arg 0, outside (0,pi]
    return z.imag() > 0.0;
}

// The square root of d whose argument lies in (0,pi].
Complex sqrt_upper(Complex d, double tol) {
    Complex w = std::sqrt(d);
    return arg_in_upper_half(w, tol) ? w : -w;
}

} // namespace

CanonicalizeResult canonicalize(const Realization& q, int v1, int v2, int v3, double tol) {
    int n = q.size();
    if (v1 < 0 || v2 < 0 || v3 < 0 || v1 >= n || v2 >= n || v3 >= n || v1 == v2 ||
        v1 == v3 || v2 == v3)
        throw ArgumentError("canonicalize needs three distinct vertices");

    CanonicalizeResult out;
    out.realization.coords.resize(n);

    // Translate v1 to the origin.
    PointC t = q[v1];
    for (int v = 0; v < n; ++v)
        out.realization[v] = {q[v].x - t.x, q[v].y - t.y};

    // d(q(v2)) can cancel even when the coordinates are large; compare the
    // form against the coordinate magnitudes to detect isotropy.
    Complex a = out.realization[v2].x;
    Complex b = out.realization[v2].y;
    Complex d = a * a + b * b;
    double mag = std::norm(a) + std::norm(b);
    if (std::abs(d) <= tol * std::max(mag, 1e-300))
        throw IsotropicEdgeError("d(q(v1)-q(v2)) vanishes; canonical position undefined");

    Complex d0 = sqrt_upper(d, tol);
    Complex z1 = b / d0;
    Complex z2 = -a / d0;
    for (int v = 0; v < n; ++v) {
        Complex x = out.realization[v].x;
        Complex y = out.realization[v].y;
        out.realization[v] = {z1 * x + z2 * y, -z2 * x + z1 * y};
    }
    // Rotation kills rounding exactly where the convention needs zeros.
    out.realization[v1] = {Complex(0.0), Complex(0.0)};
    out.realization[v2] = {Complex(0.0), d0};

    Complex a3 = out.realization[v3].x;
    double scale = std::max({std::abs(a3), std::abs(out.realization[v3].y), std::abs(d0)});
    if (std::abs(a3) <= tol * scale) {
        out.degenerate_third = true; // probability zero for generic measurements
    } else if (!arg_in_upper_half(a3, tol)) {
        for (int v = 0; v < n; ++v)
            out.realization[v].x = -out.realization[v].x;
    }
    return out;
}

RealizationClass classify_realization(const Realization& q, double tol) {
    double scale = 0.0;
    for (const auto& p : q.coords)
        scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
    double cut = tol * std::max(scale, 1e-300);
    bool x_real = true, x_imag = true, y_real = true, y_imag = true;
    for (const auto& p : q.coords) {
        x_real &= std::abs(p.x.imag()) <= cut;
        x_imag &= std::abs(p.x.real()) <= cut;
        y_real &= std::abs(p.y.imag()) <= cut;
        y_imag &= std::abs(p.y.real()) <= cut;
    }
    if (x_real && y_real)
        return RealizationClass::Real;
    if (x_imag && y_real)
        return RealizationClass::MinkowskiXImag_YReal;
    if (x_real && y_imag)
        return RealizationClass::MinkowskiXReal_YImag;
    return RealizationClass::ComplexGeneric;
}

Realization random_generic_realization(const Graph& g, std::uint64_t seed) {
    // splitmix64 stream mapped into [-1,1]; fully reproducible across
    // platforms, unlike the distribution adapters.
    std::uint64_t state = seed * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL;
    auto next = [&state]() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        z = z ^ (z >> 31);
        return static_cast<double>(z >> 11) * 0x1.0p-52 - 1.0;
    };
    Realization p;
    p.coords.resize(g.vertex_count());
    for (auto& pt : p.coords) {
        pt.x = Complex(next(), 0.0);
        pt.y = Complex(next(), 0.0);
    }
    return p;
}

Realization conjugate_canonical(const Realization& q, double tol) {
    Realization conj;
    conj.coords.reserve(q.coords.size());
    for (const auto& p : q.coords)
        conj.coords.push_back({std::conj(p.x), std::conj(p.y)});
    return canonicalize(conj, 0, 1, 2, tol).realization;
}

std::string realization_to_json(const Realization& p) {
    nlohmann::json j = nlohmann::json::object();
    for (int v = 0; v < p.size(); ++v) {
        j[std::to_string(v)] = {{p[v].x.real(), p[v].x.imag()},
                                {p[v].y.real(), p[v].y.imag()}};
    }
    return j.dump();
}

Realization realization_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    Realization p;
    p.coords.resize(j.size());
    for (auto it = j.begin(); it != j.end(); ++it) {
        int v = std::stoi(it.key());
        if (v < 0 || v >= p.size())
            throw ParseError("vertex key out of range in realization JSON");
        const auto& arr = it.value();
        p[v].x = Complex(arr.at(0).at(0).get<double>(), arr.at(0).at(1).get<double>());
        p[v].y = Complex(arr.at(1).at(0).get<double>(), arr.at(1).at(1).get<double>());
    }
    return p;
}

} // namespace rigidcount
