#include <doctest.h>

#include <algorithm>
#include <set>

#include "rigidcount/solver.hpp"
#include "support.hpp"

using namespace rigidcount;
using namespace testsupport;

namespace {

Measurement measure_from_seed(const Graph& g, std::uint64_t seed) {
    return edge_measurements(g, random_generic_realization(g, seed));
}

std::vector<Eigen::VectorXcd> finite_endpoints(const PolySystem& sys,
                                               const TrackerConfig& cfg) {
    std::vector<Eigen::VectorXcd> out;
    for (const auto& start : total_degree_start(sys, cfg)) {
        PathResult res = track_path(sys, start, cfg);
        if (res.status == PathStatus::Finite)
            out.push_back(*res.endpoint);
    }
    return out;
}

} // namespace

TEST_CASE("build_system shapes") {
    Graph k3 = triangle();
    auto sys = build_system(k3, measure_from_seed(k3, 1));
    CHECK(sys.num_vars() == 3);
    CHECK(sys.square.size() == 3);
    CHECK(sys.surplus.empty());

    Graph pr = prism();
    auto psys = build_system(pr, measure_from_seed(pr, 1));
    CHECK(psys.square.size() == 9);
    CHECK(psys.surplus.empty());

    Graph k4 = complete(4);
    auto ksys = build_system(k4, measure_from_seed(k4, 1));
    CHECK(ksys.square.size() == 5);
    CHECK(ksys.surplus.size() == 1);

    CHECK_THROWS_AS(build_system(cycle(4), Measurement(4)), NotRigidError);
}

TEST_CASE("total-degree start points") {
    Graph k3 = triangle();
    auto sys = build_system(k3, measure_from_seed(k3, 2));
    TrackerConfig cfg;
    auto starts = total_degree_start(sys, cfg);
    REQUIRE(starts.size() == 8);
    // each coordinate takes exactly two opposite values across the grid
    for (int i = 0; i < 3; ++i) {
        std::set<std::pair<double, double>> values;
        for (const auto& z : starts)
            values.insert({z[i].real(), z[i].imag()});
        CHECK(values.size() == 2);
        auto a = *values.begin();
        auto b = *std::next(values.begin());
        CHECK(std::abs(a.first + b.first) <= 1e-15);
        CHECK(std::abs(a.second + b.second) <= 1e-15);
        for (const auto& z : starts)
            CHECK(std::abs(z[i]) > 0.1); // nonzero roots
    }
    // all sign patterns distinct
    std::set<std::vector<std::pair<double, double>>> distinct;
    for (const auto& z : starts) {
        std::vector<std::pair<double, double>> key;
        for (int i = 0; i < 3; ++i)
            key.push_back({z[i].real(), z[i].imag()});
        distinct.insert(key);
    }
    CHECK(distinct.size() == 8);
}

TEST_CASE("triangle solutions match the elimination oracle") {
    Graph k3 = triangle();
    TrackerConfig cfg;
    for (std::uint64_t seed : {11u, 12u, 13u}) {
        Measurement lengths = measure_from_seed(k3, seed);
        auto sys = build_system(k3, lengths);
        auto endpoints = finite_endpoints(sys, cfg);
        // edge order is (01),(02),(12)
        auto oracle = k3_solutions(lengths[0], lengths[2], lengths[1]);
        REQUIRE(endpoints.size() == oracle.size());
        for (const auto& z : endpoints)
            CHECK(nearest_distance(z, oracle) <= 1e-8);
        for (const auto& w : oracle)
            CHECK(nearest_distance(w, endpoints) <= 1e-8);
    }
}

TEST_CASE("K4 minus an edge matches the elimination oracle") {
    Graph g = k4_minus_edge();
    TrackerConfig cfg;
    Measurement lengths = measure_from_seed(g, 21);
    auto sys = build_system(g, lengths);
    REQUIRE(sys.surplus.empty());
    auto endpoints = finite_endpoints(sys, cfg);
    // sorted edges: (01),(02),(03),(12),(13)
    auto oracle =
        k4_minus_edge_solutions(lengths[0], lengths[1], lengths[2], lengths[3], lengths[4]);
    REQUIRE(endpoints.size() == 8);
    for (const auto& z : endpoints)
        CHECK(nearest_distance(z, oracle) <= 1e-8);
    for (const auto& w : oracle)
        CHECK(nearest_distance(w, endpoints) <= 1e-8);
}

TEST_CASE("hopeless tracker configs report failures instead of dropping paths") {
    Graph k3 = triangle();
    auto sys = build_system(k3, measure_from_seed(k3, 3));
    TrackerConfig bad;
    bad.newton_max_iters = 1;
    bad.initial_step = 0.05;
    bad.min_step = 0.04; // no room to adapt
    bad.divergence_norm = 1e300;
    int failed = 0;
    for (const auto& start : total_degree_start(sys, bad))
        if (track_path(sys, start, bad).status == PathStatus::TrackingFailed)
            ++failed;
    CHECK(failed > 0);
}

TEST_CASE("clustering") {
    Eigen::VectorXcd a(2), b(2), c(2);
    a << Complex(0.0), Complex(1.0);
    b = a;
    c << Complex(5.0), Complex(1.0);
    auto clusters = cluster_solutions({{a, 1e-12}, {b, 1e-13}, {c, 1e-12}}, 1e-6);
    REQUIRE(clusters.size() == 2);
    CHECK(clusters[0].multiplicity == 2);
    CHECK(clusters[0].residual == 1e-13);
    CHECK(clusters[1].multiplicity == 1);

    CHECK(cluster_solutions({}, 1e-6).empty());

    // a chain of nearby points merges into one cluster whose diameter
    // breaks the 10*eps sanity bound
    std::vector<std::pair<Eigen::VectorXcd, double>> chain;
    for (int i = 0; i <= 14; ++i) {
        Eigen::VectorXcd z(1);
        z << Complex(i * 0.9e-6);
        chain.push_back({z, 1e-12});
    }
    CHECK_THROWS_AS(cluster_solutions(chain, 1e-6), ClusteringError);
}

TEST_CASE("triangle count: one class, all four pinned realisations collapse") {
    SolveOutput out = solve_realizations(triangle(), 42, TrackerConfig{});
    CHECK(out.count.total_paths == 8);
    CHECK(out.count.finite_solutions == 4);
    CHECK(out.count.c_estimate == 1);
    CHECK(out.count.real_count == 1);
    CHECK(out.count.minkowski_count == 0);
    CHECK(out.count.complex_pair_count == 0);
    CHECK(out.count.failures == 0);
    CHECK(out.count.certified);
    REQUIRE(out.class_representatives.size() == 1);
    // representative reproduces the measured lengths
    Measurement want = measure_from_seed(triangle(), 42);
    Measurement got = edge_measurements(triangle(), out.class_representatives[0]);
    for (int i = 0; i < 3; ++i)
        CHECK(std::abs(want[i] - got[i]) <= 1e-8);
}

TEST_CASE("K4 minus an edge: two real classes") {
    SolveOutput out = solve_realizations(k4_minus_edge(), 7, TrackerConfig{});
    CHECK(out.count.total_paths == 32);
    CHECK(out.count.finite_solutions == 8);
    CHECK(out.count.c_estimate == 2);
    CHECK(out.count.real_count == 2);
    CHECK(out.count.complex_pair_count == 0);
}

TEST_CASE("K4 surplus filtering keeps exactly the variety points") {
    SolveOutput out = solve_realizations(complete(4), 5, TrackerConfig{});
    CHECK(out.count.total_paths == 32);
    CHECK(out.count.finite_solutions == 4);
    CHECK(out.count.c_estimate == 1);
    // every reported solution satisfies the surplus edge too
    Measurement lengths = measure_from_seed(complete(4), 5);
    for (const auto& rep : out.class_representatives) {
        Measurement got = edge_measurements(complete(4), rep);
        for (int i = 0; i < 6; ++i)
            CHECK(std::abs(lengths[i] - got[i]) <= 1e-7);
    }
}

TEST_CASE("double-K4 numeric count matches 2^b") {
    SolveOutput out = solve_realizations(double_k4(), 9, TrackerConfig{});
    CHECK(out.count.c_estimate == 2);
    CHECK(out.count.finite_solutions == 8);
}

TEST_CASE("numeric invariants: divisibility, parity, conjugate closure") {
    for (std::uint64_t seed : {42u, 43u}) {
        SolveOutput out = solve_realizations(k4_minus_edge(), seed, TrackerConfig{});
        CHECK(out.count.finite_solutions % 4 == 0);
        CHECK(out.count.complex_pair_count % 2 == 0);
        CHECK(out.count.real_count + out.count.minkowski_count +
                  out.count.complex_pair_count ==
              out.count.c_estimate);
        // conjugation permutes the canonical class representatives
        for (size_t i = 0; i < out.class_representatives.size(); ++i) {
            Realization conj = conjugate_canonical(out.class_representatives[i]);
            double best = 1e300;
            for (const auto& rep : out.class_representatives) {
                double worst = 0.0;
                for (int v = 0; v < rep.size(); ++v) {
                    worst = std::max(worst, std::abs(rep[v].x - conj[v].x));
                    worst = std::max(worst, std::abs(rep[v].y - conj[v].y));
                }
                best = std::min(best, worst);
            }
            CHECK(best <= 1e-6);
        }
        // the pinned pair is never isotropic
        for (const auto& rep : out.class_representatives)
            CHECK(std::abs(squared_dist(rep[0], rep[1])) > 1e-6);
    }
}

TEST_CASE("prism numeric count is 12") {
    SolveOutput out = solve_realizations(prism(), 42, TrackerConfig{});
    CHECK(out.count.total_paths == 512);
    CHECK(out.count.finite_solutions == 48);
    CHECK(out.count.c_estimate == 12);
    CHECK(out.count.certified);
    CHECK(out.count.complex_pair_count % 2 == 0);
    CHECK(out.count.real_count + out.count.minkowski_count + out.count.complex_pair_count ==
          12);
}

TEST_CASE("verification report") {
    VerifyReport rep = verify_against_decomposition(complete(4), {42, 43}, TrackerConfig{});
    CHECK(rep.decomposition_value == "1");
    CHECK(rep.all_agree);
    REQUIRE(rep.entries.size() == 2);
    for (const auto& e : rep.entries) {
        CHECK(e.solved);
        CHECK(e.certified);
        CHECK(e.c_estimate == 1);
        CHECK(e.agrees);
    }

    // corrupt tolerance: the run must flag itself, not silently disagree
    TrackerConfig broken;
    broken.newton_tol = 1.0;
    VerifyReport bad = verify_against_decomposition(triangle(), {42}, broken);
    CHECK_FALSE(bad.all_agree);

    CHECK_THROWS_AS(verify_against_decomposition(cycle(4), {42}, TrackerConfig{}),
                    NotRigidError);
}

TEST_CASE("numeric count JSON round-trip") {
    NumericCount c = count_realizations(triangle(), 42, TrackerConfig{});
    NumericCount back = numeric_count_from_json(numeric_count_to_json(c));
    CHECK(back.total_paths == c.total_paths);
    CHECK(back.finite_solutions == c.finite_solutions);
    CHECK(back.c_estimate == c.c_estimate);
    CHECK(back.real_count == c.real_count);
    CHECK(back.minkowski_count == c.minkowski_count);
    CHECK(back.complex_pair_count == c.complex_pair_count);
    CHECK(back.failures == c.failures);
    CHECK(back.certified == c.certified);
}
