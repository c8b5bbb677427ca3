#include <cstdio>
#include "rigidcount/solver.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <json.hpp>

#include "rigidcount/pebble.hpp"
#include "rigidcount/rigidity.hpp"

namespace rigidcount {

namespace {

// Coordinates of vertex k under the canonical pinning: vertex 0 at (0,0),
// vertex 1 at (0, z[0]), vertex k >= 2 at (z[2k-3], z[2k-2]).
inline Complex coord_x(int k, const Eigen::VectorXcd& z) {
    return k <= 1 ? Complex(0.0) : z[2 * k - 3];
}
inline Complex coord_y(int k, const Eigen::VectorXcd& z) {
    if (k == 0)
        return Complex(0.0);
    return k == 1 ? z[0] : z[2 * k - 2];
}
inline int xvar(int k) { return 2 * k - 3; } // valid for k >= 2
inline int yvar(int k) { return k == 1 ? 0 : 2 * k - 2; }

Complex eval_equation(const QuadEquation& eq, const Eigen::VectorXcd& z) {
    Complex dx = coord_x(eq.u, z) - coord_x(eq.v, z);
    Complex dy = coord_y(eq.u, z) - coord_y(eq.v, z);
    return dx * dx + dy * dy - eq.rhs;
}

void jac_row(const QuadEquation& eq, const Eigen::VectorXcd& z, Eigen::MatrixXcd& jac,
             int row) {
    Complex dx = coord_x(eq.u, z) - coord_x(eq.v, z);
    Complex dy = coord_y(eq.u, z) - coord_y(eq.v, z);
    for (int sign = 0; sign < 2; ++sign) {
        int k = sign == 0 ? eq.u : eq.v;
        Complex s = sign == 0 ? Complex(2.0) : Complex(-2.0);
        if (k >= 2)
            jac(row, xvar(k)) += s * dx;
        if (k >= 1)
            jac(row, yvar(k)) += s * dy;
    }
}

} // namespace

Eigen::VectorXcd PolySystem::eval_square(const Eigen::VectorXcd& z) const {
    Eigen::VectorXcd out(square.size());
    for (size_t i = 0; i < square.size(); ++i)
        out[static_cast<int>(i)] = eval_equation(square[i], z);
    return out;
}

Eigen::MatrixXcd PolySystem::jac_square(const Eigen::VectorXcd& z) const {
    Eigen::MatrixXcd jac = Eigen::MatrixXcd::Zero(square.size(), num_vars());
    for (size_t i = 0; i < square.size(); ++i)
        jac_row(square[i], z, jac, static_cast<int>(i));
    return jac;
}

double PolySystem::surplus_residual(const Eigen::VectorXcd& z) const {
    double worst = 0.0;
    for (const auto& eq : surplus)
        worst = std::max(worst, std::abs(eval_equation(eq, z)));
    return worst;
}

double PolySystem::full_residual(const Eigen::VectorXcd& z) const {
    double worst = surplus_residual(z);
    for (const auto& eq : square)
        worst = std::max(worst, std::abs(eval_equation(eq, z)));
    return worst;
}

Realization PolySystem::realization_from_vars(const Eigen::VectorXcd& z) const {
    Realization p;
    p.coords.resize(n);
    for (int k = 0; k < n; ++k)
        p[k] = {coord_x(k, z), coord_y(k, z)};
    return p;
}

PolySystem build_system(const Graph& g, const Measurement& lengths) {
    if (g.vertex_count() < 3)
        throw ArgumentError("build_system needs at least three vertices");
    if (static_cast<int>(lengths.size()) != g.edge_count())
        throw ArgumentError("one measurement per edge required");
    auto basis = spanning_isostatic_subgraph(g); // throws NotRigidError when flexible

    PolySystem sys;
    sys.n = g.vertex_count();
    std::vector<char> in_basis(g.edge_count(), 0);
    for (const auto& e : basis)
        in_basis[g.edge_index(e.first, e.second)] = 1;
    for (int ei = 0; ei < g.edge_count(); ++ei) {
        auto [u, v] = g.edges()[ei];
        QuadEquation eq{u, v, lengths[ei]};
        (in_basis[ei] ? sys.square : sys.surplus).push_back(eq);
    }
    return sys;
}

namespace {

struct StartData {
    Eigen::VectorXcd r;               // targets of the start quadrics z_i^2 = r_i
    std::vector<Complex> sqrt_r;
    Complex gamma;
};

double unit_double(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z = z ^ (z >> 31);
    return static_cast<double>(z >> 11) * 0x1.0p-53;
}

StartData make_start_data(int nvars, std::uint64_t gamma_seed) {
    std::uint64_t state = gamma_seed * 0xD1342543DE82EF95ULL + 0xC2B2AE3D27D4EB4FULL;
    StartData data;
    data.r.resize(nvars);
    data.sqrt_r.resize(nvars);
    const double two_pi = 6.283185307179586;
    for (int i = 0; i < nvars; ++i) {
        double mag = 0.5 + unit_double(state);         // in [0.5, 1.5)
        double phase = two_pi * unit_double(state);
        data.r[i] = Complex(mag * std::cos(phase), mag * std::sin(phase));
        data.sqrt_r[i] = std::sqrt(data.r[i]);
    }
    double gphase = two_pi * unit_double(state);
    data.gamma = Complex(std::cos(gphase), std::sin(gphase));
    return data;
}

} // namespace

std::vector<Eigen::VectorXcd> total_degree_start(const PolySystem& sys,
                                                 const TrackerConfig& cfg) {
    int nvars = sys.num_vars();
    if (nvars > 30)
        throw ArgumentError("start-system size 2^" + std::to_string(nvars) + " is not tractable");
    StartData data = make_start_data(nvars, cfg.gamma_seed);
    std::vector<Eigen::VectorXcd> starts;
    starts.reserve(1ull << nvars);
    for (std::uint64_t mask = 0; mask < (1ull << nvars); ++mask) {
        Eigen::VectorXcd z(nvars);
        for (int i = 0; i < nvars; ++i)
            z[i] = (mask >> i) & 1 ? -data.sqrt_r[i] : data.sqrt_r[i];
        starts.push_back(std::move(z));
    }
    return starts;
}

namespace {

class PathTracker {
public:
    PathTracker(const PolySystem& sys, const TrackerConfig& cfg)
        : sys_(sys), cfg_(cfg), start_(make_start_data(sys.num_vars(), cfg.gamma_seed)) {}

    PathResult run(const Eigen::VectorXcd& start) const {
        PathResult out;
        Eigen::VectorXcd z = start;
        double t = 0.0;
        double dt = cfg_.initial_step;
        int streak = 0;
        int steps = 0;
        const int max_steps = 20000;
        // Never step onto t = 1: paths heading to infinity stay finite at
        // every t < 1, and a Newton correction exactly at the target system
        // would pull them onto some finite root, silently duplicating an
        // endpoint.  Instead t approaches 1 geometrically and the endgame
        // decides from the distance the final polish wants to move.
        const double end_cutoff = 1e-10;

        while (1.0 - t > end_cutoff) {
            if (++steps > max_steps) {
                fprintf(stderr, "FAIL maxsteps t=%.6g dt=%.3g znorm=%.3g\n", t, dt, z.lpNorm<Eigen::Infinity>());
                out.status = PathStatus::TrackingFailed;
                return out;
            }
            double step = std::min(dt, 0.5 * (1.0 - t));
            Eigen::VectorXcd predicted;
            bool ok = rk4_predict(z, t, step, predicted);
            if (ok) {
                Eigen::VectorXcd corrected = predicted;
                ok = correct(corrected, t + step);
                // Trust region: the corrector may only refine the
                // prediction.  A correction comparable to the step itself
                // means the path tube was left and the endpoint would be
                // silently wrong.
                double step_len = (predicted - z).lpNorm<Eigen::Infinity>();
                double corr_len = (corrected - predicted).lpNorm<Eigen::Infinity>();
                ok = ok && corr_len <= 0.5 * step_len + 1e-4;
                predicted = corrected;
            }
            if (ok && predicted.lpNorm<Eigen::Infinity>() > cfg_.divergence_norm) {
                out.status = PathStatus::Diverged;
                return out;
            }
            if (!ok) {
                dt *= 0.5;
                streak = 0;
                if (dt < cfg_.min_step) {
                    // Step-size exhaustion at enormous norm is an escape to
                    // infinity that ran out of room before crossing the
                    // divergence threshold; at solution scale it is a genuine
                    // tracking failure and is reported as such.
                    out.status = z.lpNorm<Eigen::Infinity>() > std::sqrt(cfg_.divergence_norm)
                                     ? PathStatus::Diverged
                                     : PathStatus::TrackingFailed;
                    return out;
                }
                continue;
            }
            z = predicted;
            t += step;
            if (++streak >= 4) {
                dt = std::min(dt * 2.0, cfg_.initial_step);
                streak = 0;
            }
        }
        return finish(z);
    }

private:
    // H(z,t) and its z-Jacobian.
    Eigen::VectorXcd homotopy(const Eigen::VectorXcd& z, double t) const {
        Eigen::VectorXcd f = sys_.eval_square(z);
        Eigen::VectorXcd g(z.size());
        for (int i = 0; i < z.size(); ++i)
            g[i] = z[i] * z[i] - start_.r[i];
        return t * f + (1.0 - t) * start_.gamma * g;
    }

    Eigen::MatrixXcd homotopy_jac(const Eigen::VectorXcd& z, double t) const {
        Eigen::MatrixXcd jac = t * sys_.jac_square(z);
        Complex s = (1.0 - t) * start_.gamma * 2.0;
        for (int i = 0; i < z.size(); ++i)
            jac(i, i) += s * z[i];
        return jac;
    }

    // Davidenko field dz/dt = -Hz^{-1} Ht.
    bool derivative(const Eigen::VectorXcd& z, double t, Eigen::VectorXcd& out) const {
        Eigen::FullPivLU<Eigen::MatrixXcd> lu(homotopy_jac(z, t));
        if (!lu.isInvertible())
            return false;
        Eigen::VectorXcd f = sys_.eval_square(z);
        Eigen::VectorXcd g(z.size());
        for (int i = 0; i < z.size(); ++i)
            g[i] = z[i] * z[i] - start_.r[i];
        out = lu.solve(-(f - start_.gamma * g));
        return true;
    }

    bool rk4_predict(const Eigen::VectorXcd& z, double t, double dt,
                     Eigen::VectorXcd& out) const {
        Eigen::VectorXcd k1, k2, k3, k4;
        if (!derivative(z, t, k1))
            return false;
        if (!derivative(z + 0.5 * dt * k1, t + 0.5 * dt, k2))
            return false;
        if (!derivative(z + 0.5 * dt * k2, t + 0.5 * dt, k3))
            return false;
        if (!derivative(z + dt * k3, t + dt, k4))
            return false;
        out = z + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        return true;
    }

    // Residuals of a quadratic system scale like |z|^2, so the achievable
    // absolute residual grows with the point; escaping paths must still
    // correct cleanly until they cross the divergence threshold.
    double residual_scale(const Eigen::VectorXcd& z) const {
        double norm = z.lpNorm<Eigen::Infinity>();
        return std::max(1.0, norm * norm);
    }

    bool correct(Eigen::VectorXcd& z, double t) const {
        // Few iterations on purpose: if quadratic convergence from the
        // prediction needs more, the step was too big.
        int iters = std::min(cfg_.newton_max_iters, 4);
        for (int iter = 0; iter < iters; ++iter) {
            Eigen::VectorXcd h = homotopy(z, t);
            if (h.lpNorm<Eigen::Infinity>() <= cfg_.newton_tol * residual_scale(z))
                return true;
            Eigen::FullPivLU<Eigen::MatrixXcd> lu(homotopy_jac(z, t));
            if (!lu.isInvertible())
                return false;
            z -= lu.solve(h);
            if (!z.allFinite())
                return false;
        }
        return homotopy(z, t).lpNorm<Eigen::Infinity>() <= cfg_.newton_tol * residual_scale(z);
    }

    PathResult finish(const Eigen::VectorXcd& tracked) const {
        PathResult out;
        // A path that reached the cutoff already far from solution scale
        // was escaping to infinity all along.
        if (tracked.lpNorm<Eigen::Infinity>() > std::sqrt(cfg_.divergence_norm)) {
            if (tracked.lpNorm<Eigen::Infinity>() < 1e6)
                fprintf(stderr, "DIVERGED atcutoff trackednorm=%.3g\n", tracked.lpNorm<Eigen::Infinity>());
            out.status = PathStatus::Diverged;
            return out;
        }
        Eigen::VectorXcd z = tracked;
        // Settle on the square system first.
        for (int iter = 0; iter < 2 * cfg_.newton_max_iters; ++iter) {
            Eigen::VectorXcd f = sys_.eval_square(z);
            if (f.lpNorm<Eigen::Infinity>() <= cfg_.newton_tol)
                break;
            Eigen::FullPivLU<Eigen::MatrixXcd> lu(sys_.jac_square(z));
            if (!lu.isInvertible()) {
                out.status = z.lpNorm<Eigen::Infinity>() > std::sqrt(cfg_.divergence_norm)
                                 ? PathStatus::Diverged
                                 : PathStatus::TrackingFailed;
                return out;
            }
            z -= lu.solve(f);
            if (!z.allFinite() || z.lpNorm<Eigen::Infinity>() > cfg_.divergence_norm) {
                out.status = PathStatus::Diverged;
                return out;
            }
        }
        if (sys_.eval_square(z).lpNorm<Eigen::Infinity>() > cfg_.newton_tol) {
            fprintf(stderr, "FAIL finish resid=%.3g znorm=%.3g trackednorm=%.3g\n",
                    sys_.eval_square(z).lpNorm<Eigen::Infinity>(),
                    z.lpNorm<Eigen::Infinity>(), tracked.lpNorm<Eigen::Infinity>());
            out.status = PathStatus::TrackingFailed;
            return out;
        }
        // The tracked point sits within O(1 - t) of its endpoint; a polish
        // that had to travel a macroscopic distance means the path was
        // escaping to infinity and Newton fell onto some other root.
        double moved = (z - tracked).lpNorm<Eigen::Infinity>();
        if (moved > 1e-2 * (1.0 + tracked.lpNorm<Eigen::Infinity>())) {
            fprintf(stderr, "DIVERGED moved=%.3g trackednorm=%.3g\n", moved, tracked.lpNorm<Eigen::Infinity>());
            out.status = PathStatus::Diverged;
            return out;
        }
        // Square-solutions violating the surplus equations are spurious
        // branches, not points of the variety.
        if (!sys_.surplus.empty()) {
            if (sys_.surplus_residual(z) > 100.0 * cfg_.newton_tol) {
                out.status = PathStatus::Diverged; // NotOnVariety
                return out;
            }
            polish_full(z);
            if (sys_.full_residual(z) > cfg_.newton_tol) {
                out.status = PathStatus::Diverged;
                return out;
            }
        }
        out.status = PathStatus::Finite;
        out.endpoint = z;
        out.residual = sys_.full_residual(z);
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(sys_.jac_square(z));
        const auto& sv = svd.singularValues();
        out.jacobian_condition_estimate =
            sv(sv.size() - 1) > 0.0 ? sv(0) / sv(sv.size() - 1) : 0.0;
        return out;
    }

    // Gauss-Newton on the overdetermined [square; surplus] stack.
    void polish_full(Eigen::VectorXcd& z) const {
        int rows = static_cast<int>(sys_.square.size() + sys_.surplus.size());
        for (int iter = 0; iter < cfg_.newton_max_iters; ++iter) {
            Eigen::VectorXcd f(rows);
            Eigen::MatrixXcd jac = Eigen::MatrixXcd::Zero(rows, sys_.num_vars());
            int row = 0;
            for (const auto& eq : sys_.square) {
                f[row] = eval_equation(eq, z);
                jac_row(eq, z, jac, row);
                ++row;
            }
            for (const auto& eq : sys_.surplus) {
                f[row] = eval_equation(eq, z);
                jac_row(eq, z, jac, row);
                ++row;
            }
            if (f.lpNorm<Eigen::Infinity>() <= 0.01 * cfg_.newton_tol)
                return;
            Eigen::VectorXcd delta = jac.colPivHouseholderQr().solve(-f);
            z += delta;
            if (!z.allFinite())
                return;
        }
    }

    const PolySystem& sys_;
    const TrackerConfig& cfg_;
    StartData start_;
};

} // namespace

PathResult track_path(const PolySystem& sys, const Eigen::VectorXcd& start,
                      const TrackerConfig& cfg) {
    PathTracker tracker(sys, cfg);
    return tracker.run(start);
}

std::vector<ClusteredSolution> cluster_solutions(
    const std::vector<std::pair<Eigen::VectorXcd, double>>& endpoints, double eps) {
    int k = static_cast<int>(endpoints.size());
    std::vector<ClusteredSolution> out;
    if (k == 0)
        return out;

    // Deterministic processing order regardless of how paths were scheduled.
    std::vector<int> order(k);
    for (int i = 0; i < k; ++i)
        order[i] = i;
    auto key_less = [&](int a, int b) {
        const auto& za = endpoints[a].first;
        const auto& zb = endpoints[b].first;
        for (int i = 0; i < za.size(); ++i) {
            if (za[i].real() != zb[i].real())
                return za[i].real() < zb[i].real();
            if (za[i].imag() != zb[i].imag())
                return za[i].imag() < zb[i].imag();
        }
        return false;
    };
    std::sort(order.begin(), order.end(), key_less);

    auto dist = [&](int a, int b) {
        return (endpoints[a].first - endpoints[b].first).lpNorm<Eigen::Infinity>();
    };
    std::vector<int> parent(k);
    for (int i = 0; i < k; ++i)
        parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (dist(a, b) <= eps)
                parent[find(a)] = find(b);

    std::vector<std::vector<int>> clusters;
    std::vector<int> cluster_of(k, -1);
    for (int idx : order) {
        int root = find(idx);
        if (cluster_of[root] < 0) {
            cluster_of[root] = static_cast<int>(clusters.size());
            clusters.emplace_back();
        }
        clusters[cluster_of[root]].push_back(idx);
    }

    for (const auto& members : clusters) {
        double diameter = 0.0;
        int best = members[0];
        for (size_t i = 0; i < members.size(); ++i) {
            if (endpoints[members[i]].second < endpoints[best].second)
                best = members[i];
            for (size_t j = i + 1; j < members.size(); ++j)
                diameter = std::max(diameter, dist(members[i], members[j]));
        }
        if (diameter > 10.0 * eps)
            throw ClusteringError("cluster diameter " + std::to_string(diameter) +
                                  " exceeds 10*eps; adjust endpoint_cluster_eps");
        out.push_back({endpoints[best].first, static_cast<int>(members.size()),
                       endpoints[best].second});
    }
    return out;
}

namespace {

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a ^ (b * 0x2545F4914F6CDD1DULL + 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 29)) * 0xBF58476D1CE4E5B9ULL;
    return z ^ (z >> 32);
}

Eigen::VectorXcd flatten_canonical(const Realization& p) {
    int n = p.size();
    Eigen::VectorXcd z(2 * n - 3);
    z[0] = p[1].y;
    for (int k = 2; k < n; ++k) {
        z[2 * k - 3] = p[k].x;
        z[2 * k - 2] = p[k].y;
    }
    return z;
}

} // namespace

SolveOutput solve_realizations(const Graph& g, std::uint64_t seed, const TrackerConfig& cfg) {
    if (g.vertex_count() < 3)
        throw ArgumentError("numeric counting needs at least three vertices");
    if (!is_rigid(g))
        throw NotRigidError("c(G) undefined for flexible graphs");

    Realization p = random_generic_realization(g, seed);
    Measurement lengths = edge_measurements(g, p);
    PolySystem sys = build_system(g, lengths);

    // Fresh start-system randomness per measurement seed.
    TrackerConfig run_cfg = cfg;
    run_cfg.gamma_seed = mix_seed(cfg.gamma_seed, seed);

    auto starts = total_degree_start(sys, run_cfg);
    PathTracker tracker(sys, run_cfg);

    SolveOutput out;
    out.count.total_paths = starts.size();

    std::vector<std::pair<Eigen::VectorXcd, double>> finite;
    for (const auto& start : starts) {
        PathResult res = tracker.run(start);
        if (res.status == PathStatus::Finite)
            finite.emplace_back(*res.endpoint, res.residual);
        else if (res.status == PathStatus::TrackingFailed)
            ++out.count.failures;
    }
    out.count.certified = out.count.failures == 0;

    auto clustered = cluster_solutions(finite, run_cfg.endpoint_cluster_eps);
    for (const auto& c : clustered)
        if (c.multiplicity > 1)
            throw ConsistencyError(
                "repeated endpoint (multiplicity " + std::to_string(c.multiplicity) +
                "); singular solution or lost path, rerun with a tighter config");

    out.count.finite_solutions = static_cast<int>(clustered.size());
    if (out.count.finite_solutions % 4 != 0)
        throw ConsistencyError("finite solution count " +
                               std::to_string(out.count.finite_solutions) +
                               " is not divisible by 4; tracking lost solutions");
    out.count.c_estimate = out.count.finite_solutions / 4;

    // Group into congruence classes: the four pinned realisations of a class
    // share one canonical form.
    std::vector<std::pair<Eigen::VectorXcd, double>> canon;
    canon.reserve(clustered.size());
    double tol = std::max(1e-8, 10.0 * run_cfg.newton_tol);
    for (const auto& c : clustered) {
        Realization q = sys.realization_from_vars(c.point);
        Realization canonical = canonicalize(q, 0, 1, 2, tol).realization;
        canon.emplace_back(flatten_canonical(canonical), c.residual);
    }
    auto classes = cluster_solutions(canon, run_cfg.endpoint_cluster_eps);
    if (static_cast<int>(classes.size()) != out.count.c_estimate)
        throw ConsistencyError("canonical classes (" + std::to_string(classes.size()) +
                               ") do not match finite/4 (" +
                               std::to_string(out.count.c_estimate) + ")");
    for (const auto& cls : classes) {
        if (cls.multiplicity != 4)
            throw ConsistencyError("congruence class with " +
                                   std::to_string(cls.multiplicity) +
                                   " pinned realisations instead of 4");
        Eigen::VectorXcd z(sys.num_vars());
        z = cls.point;
        Realization rep = sys.realization_from_vars(z);
        RealizationClass tag = classify_realization(rep, tol);
        out.class_representatives.push_back(rep);
        out.class_tags.push_back(tag);
        switch (tag) {
        case RealizationClass::Real: ++out.count.real_count; break;
        case RealizationClass::MinkowskiXReal_YImag:
        case RealizationClass::MinkowskiXImag_YReal: ++out.count.minkowski_count; break;
        case RealizationClass::ComplexGeneric: ++out.count.complex_pair_count; break;
        }
    }
    return out;
}

NumericCount count_realizations(const Graph& g, std::uint64_t seed, const TrackerConfig& cfg) {
    return solve_realizations(g, seed, cfg).count;
}

VerifyReport verify_against_decomposition(const Graph& g,
                                          const std::vector<std::uint64_t>& seeds,
                                          const TrackerConfig& cfg) {
    CountResult exact = count_c(g);
    if (!exact.exact)
        throw UnsupportedInputError(
            "decomposition is not exact for this graph; nothing to verify against");

    VerifyReport report;
    report.decomposition_value = exact.exact->str();
    report.all_agree = true;
    for (auto seed : seeds) {
        VerifySeedEntry entry;
        entry.seed = seed;
        try {
            NumericCount nc = count_realizations(g, seed, cfg);
            entry.solved = true;
            entry.certified = nc.certified;
            entry.c_estimate = nc.c_estimate;
            entry.agrees = nc.certified && BigInt(nc.c_estimate) == *exact.exact;
        } catch (const std::exception& e) {
            entry.error = e.what();
        }
        report.all_agree = report.all_agree && entry.agrees;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

std::string numeric_count_to_json(const NumericCount& c) {
    nlohmann::json j;
    j["total_paths"] = c.total_paths;
    j["finite_solutions"] = c.finite_solutions;
    j["c_estimate"] = c.c_estimate;
    j["real_count"] = c.real_count;
    j["minkowski_count"] = c.minkowski_count;
    j["complex_pair_count"] = c.complex_pair_count;
    j["failures"] = c.failures;
    j["certified"] = c.certified;
    return j.dump();
}

NumericCount numeric_count_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    NumericCount c;
    c.total_paths = j.at("total_paths").get<std::uint64_t>();
    c.finite_solutions = j.at("finite_solutions").get<int>();
    c.c_estimate = j.at("c_estimate").get<int>();
    c.real_count = j.at("real_count").get<int>();
    c.minkowski_count = j.at("minkowski_count").get<int>();
    c.complex_pair_count = j.at("complex_pair_count").get<int>();
    c.failures = j.at("failures").get<int>();
    c.certified = j.at("certified").get<bool>();
    return c;
}

std::string verify_report_to_json(const VerifyReport& r) {
    nlohmann::json j;
    j["decomposition_value"] = r.decomposition_value;
    j["all_agree"] = r.all_agree;
    auto entries = nlohmann::json::array();
    for (const auto& e : r.entries) {
        nlohmann::json je;
        je["seed"] = e.seed;
        je["solved"] = e.solved;
        je["certified"] = e.certified;
        je["c_estimate"] = e.c_estimate;
        je["agrees"] = e.agrees;
        je["error"] = e.error;
        entries.push_back(je);
    }
    j["seeds"] = entries;
    return j.dump();
}

} // namespace rigidcount
