#include "rigidcount/counting.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include <json.hpp>

#include "rigidcount/isomorphism.hpp"
#include "rigidcount/pebble.hpp"
#include "rigidcount/rigidity.hpp"

namespace rigidcount {

std::string to_string(Rule r) {
    switch (r) {
    case Rule::SmallComplete: return "SmallComplete";
    case Rule::GloballyRigid: return "GloballyRigid";
    case Rule::RConnectedFormula: return "RConnectedFormula";
    case Rule::Type1: return "Type1";
    case Rule::TriangleType2: return "TriangleType2";
    case Rule::TwoSepBothRigid: return "TwoSepBothRigid";
    case Rule::TwoSepOneNonRigid: return "TwoSepOneNonRigid";
    case Rule::ThreeEdgeCut: return "ThreeEdgeCut";
    case Rule::Irreducible: return "Irreducible";
    }
    return "?";
}

namespace {

Rule rule_from_string(const std::string& s) {
    for (Rule r : {Rule::SmallComplete, Rule::GloballyRigid, Rule::RConnectedFormula,
                   Rule::Type1, Rule::TriangleType2, Rule::TwoSepBothRigid,
                   Rule::TwoSepOneNonRigid, Rule::ThreeEdgeCut, Rule::Irreducible})
        if (to_string(r) == s)
            return r;
    throw ParseError("unknown rule name: " + s);
}

int index_after_removal(int w, int removed) { return w > removed ? w - 1 : w; }

int position_in(const std::vector<int>& sorted_verts, int v) {
    auto it = std::lower_bound(sorted_verts.begin(), sorted_verts.end(), v);
    if (it == sorted_verts.end() || *it != v)
        throw ArgumentError("vertex not on the expected side of the separation");
    return static_cast<int>(it - sorted_verts.begin());
}

void validate_separation(const Graph& g, const Separation& s) {
    int n = g.vertex_count();
    if (s.separator.size() != 2)
        throw ArgumentError("separator must have exactly two vertices");
    std::vector<char> in_a(n, 0), in_b(n, 0);
    for (int v : s.side_a) {
        if (v < 0 || v >= n)
            throw ArgumentError("separation vertex out of range");
        in_a[v] = 1;
    }
    for (int v : s.side_b) {
        if (v < 0 || v >= n)
            throw ArgumentError("separation vertex out of range");
        in_b[v] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (!in_a[v] && !in_b[v])
            throw ArgumentError("separation sides must cover all vertices");
    for (int v = 0; v < n; ++v) {
        bool sep = std::find(s.separator.begin(), s.separator.end(), v) != s.separator.end();
        if ((in_a[v] && in_b[v]) != sep)
            throw ArgumentError("side intersection must equal the separator");
    }
    if (s.side_a.size() < 3 || s.side_b.size() < 3)
        throw ArgumentError("both sides of a 2-separation need at least 3 vertices");
    for (auto [u, v] : g.edges()) {
        bool a_only_u = in_a[u] && !in_b[u], a_only_v = in_a[v] && !in_b[v];
        bool b_only_u = in_b[u] && !in_a[u], b_only_v = in_b[v] && !in_a[v];
        if ((a_only_u && b_only_v) || (b_only_u && a_only_v))
            throw ArgumentError("edge crosses the separation");
    }
}

void validate_cut(const Graph& g, const EdgeCut3& cut) {
    int n = g.vertex_count();
    if (cut.cut_edges.size() != 3)
        throw ArgumentError("a 3-edge-cut needs exactly three edges");
    std::vector<char> in_a(n, 0), in_b(n, 0);
    for (int v : cut.part_a)
        in_a[v] = 1;
    for (int v : cut.part_b)
        in_b[v] = 1;
    for (int v = 0; v < n; ++v)
        if (in_a[v] + in_b[v] != 1)
            throw ArgumentError("cut parts must partition the vertex set");
    if (cut.part_a.size() < 3 || cut.part_b.size() < 3)
        throw ArgumentError("cut parts need at least 3 vertices each");
    std::vector<int> ends_a, ends_b;
    for (auto [u, v] : cut.cut_edges) {
        if (!g.has_edge(u, v))
            throw ArgumentError("cut edge not present in the graph");
        if (in_a[v])
            std::swap(u, v);
        if (!in_a[u] || !in_b[v])
            throw ArgumentError("cut edge does not cross the parts");
        ends_a.push_back(u);
        ends_b.push_back(v);
    }
    std::sort(ends_a.begin(), ends_a.end());
    std::sort(ends_b.begin(), ends_b.end());
    if (std::adjacent_find(ends_a.begin(), ends_a.end()) != ends_a.end() ||
        std::adjacent_find(ends_b.begin(), ends_b.end()) != ends_b.end())
        throw ArgumentError("cut edges must have distinct endpoints on each side");
    for (auto [u, v] : g.edges()) {
        bool crossing = in_a[u] != in_a[v];
        bool listed = std::find(cut.cut_edges.begin(), cut.cut_edges.end(),
                                Edge{std::min(u, v), std::max(u, v)}) != cut.cut_edges.end();
        if (crossing != listed)
            throw ArgumentError("cut edges must be exactly the edges joining the parts");
    }
}

} // namespace

UnaryReduction reduce_type1(const Graph& g, int v) {
    if (g.vertex_count() < 4)
        throw RuleInapplicableError("type-1 reduction needs at least 4 vertices");
    if (v < 0 || v >= g.vertex_count() || g.degree(v) != 2)
        throw RuleInapplicableError("type-1 reduction needs a degree-2 vertex");
    if (!is_rigid(g))
        throw RuleInapplicableError("type-1 reduction needs a rigid graph");
    return {g.without_vertex(v), BigInt(2)};
}

UnaryReduction reduce_triangle(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count() || g.degree(v) != 3)
        throw RuleInapplicableError("triangle reduction needs a degree-3 vertex");
    Graph child = g.without_vertex(v);
    if (!is_rigid(child))
        throw RuleInapplicableError("triangle reduction needs g - v rigid");
    auto nb = g.neighbors(v);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            child = child.with_edge(index_after_removal(nb[i], v),
                                    index_after_removal(nb[j], v));
    return {std::move(child), BigInt(1)};
}

SplitReduction reduce_2separation(const Graph& g, const Separation& s) {
    validate_separation(g, s);
    int u = s.separator[0], v = s.separator[1];

    std::vector<int> sa = s.side_a, sb = s.side_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    Graph a = g.induced(sa);
    Graph b = g.induced(sb);
    int ua = position_in(sa, u), va = position_in(sa, v);
    int ub = position_in(sb, u), vb = position_in(sb, v);

    if (g.has_edge(u, v)) {
        // The separator pair is an edge, hence globally linked; both sides
        // (which inherit uv) are rigid.
        return {std::move(a), std::move(b), BigInt(2), Rule::TwoSepBothRigid};
    }
    bool a_rigid = is_rigid(a);
    bool b_rigid = is_rigid(b);
    if (a_rigid && b_rigid)
        return {a.with_edge(ua, va), b.with_edge(ub, vb), BigInt(2), Rule::TwoSepBothRigid};
    if (a_rigid && !b_rigid)
        return {std::move(a), b.with_edge(ub, vb), BigInt(2), Rule::TwoSepOneNonRigid};
    if (!a_rigid && b_rigid)
        return {a.with_edge(ua, va), std::move(b), BigInt(2), Rule::TwoSepOneNonRigid};
    throw ArgumentError("both sides of a 2-separation of a rigid graph cannot be flexible");
}

SplitReduction reduce_3edgecut(const Graph& g, const EdgeCut3& cut) {
    validate_cut(g, cut);
    return {g.induced(cut.part_a), g.induced(cut.part_b), BigInt(12), Rule::ThreeEdgeCut};
}

std::optional<BigInt> rconnected_shortcut(const Graph& g) {
    if (g.edge_count() < 2)
        return std::nullopt;
    if (!r_components(g).r_connected(g.edge_count()))
        return std::nullopt;
    return BigInt(1) << b_value(g);
}

BigInt qs_family_value(int n) {
    if (n < 3)
        throw ArgumentError("the gluing family starts at n = 3");
    return BigInt(1) << (n - 3);
}

BigInt borcea_streinu_bound(int n) {
    if (n < 3)
        throw ArgumentError("bound defined for n >= 3");
    BigInt binom = 1;
    for (int i = 1; i <= n - 2; ++i) {
        binom *= 2 * n - 4 - (n - 2) + i; // (n-2) + i
        binom /= i;
    }
    return binom / 2;
}

BigInt certificate_value(const CountCertificate& cert) {
    if (!cert.factor)
        throw ArgumentError("certificate contains an irreducible node");
    BigInt value = *cert.factor;
    for (const auto& child : cert.children)
        value *= certificate_value(child);
    return value;
}

// ---------------------------------------------------------------------------

namespace {

// One rule application at the root: the child graphs plus the certificate
// skeleton for this node.
struct Applied {
    Rule rule;
    std::optional<BigInt> factor;
    std::vector<Graph> children;
};

std::optional<Applied> try_rule(const Graph& g, Rule r, int site) {
    int n = g.vertex_count();
    switch (r) {
    case Rule::SmallComplete:
        if (n <= 3 && site == 0)
            return Applied{r, BigInt(1), {}};
        return std::nullopt;
    case Rule::GloballyRigid:
        if (n >= 4 && site == 0 && is_globally_rigid(g))
            return Applied{r, BigInt(1), {}};
        return std::nullopt;
    case Rule::RConnectedFormula:
        if (site == 0)
            if (auto value = rconnected_shortcut(g))
                return Applied{r, *value, {}};
        return std::nullopt;
    case Rule::Type1: {
        if (n < 4)
            return std::nullopt;
        int seen = 0;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) == 2 && seen++ == site) {
                auto red = reduce_type1(g, v);
                return Applied{r, red.factor, {red.child}};
            }
        return std::nullopt;
    }
    case Rule::TriangleType2: {
        int seen = 0;
        for (int v = 0; v < n; ++v) {
            if (g.degree(v) != 3 || !is_rigid(g.without_vertex(v)))
                continue;
            if (seen++ == site) {
                auto red = reduce_triangle(g, v);
                return Applied{r, red.factor, {red.child}};
            }
        }
        return std::nullopt;
    }
    case Rule::TwoSepBothRigid:
    case Rule::TwoSepOneNonRigid: {
        auto seps = find_2_separations(g);
        int seen = 0;
        for (const auto& s : seps) {
            auto red = reduce_2separation(g, s);
            if (red.rule != r)
                continue;
            if (seen++ == site)
                return Applied{red.rule, red.factor, {red.child_a, red.child_b}};
        }
        return std::nullopt;
    }
    case Rule::ThreeEdgeCut: {
        auto cuts = find_3_edge_cuts_disjoint(g);
        if (site < 0 || site >= static_cast<int>(cuts.size()))
            return std::nullopt;
        auto red = reduce_3edgecut(g, cuts[site]);
        return Applied{red.rule, red.factor, {red.child_a, red.child_b}};
    }
    case Rule::Irreducible:
        return std::nullopt;
    }
    return std::nullopt;
}

constexpr Rule kPriority[] = {
    Rule::SmallComplete,   Rule::GloballyRigid,     Rule::RConnectedFormula,
    Rule::Type1,           Rule::TriangleType2,     Rule::TwoSepBothRigid,
    Rule::TwoSepOneNonRigid, Rule::ThreeEdgeCut,
};

class Engine {
public:
    CountResult solve(const Graph& g) {
        std::uint64_t fp = graph_fingerprint(g);
        auto& bucket = memo_[fp];
        for (const auto& [cached_graph, cached_result] : bucket)
            if (are_isomorphic(cached_graph, g))
                return cached_result;
        CountResult result = solve_uncached(g);
        memo_[fp].emplace_back(g, result);
        return result;
    }

    CountResult assemble(const Graph& g, const Applied& applied) {
        CountResult out;
        out.certificate.rule = applied.rule;
        out.certificate.factor = applied.factor;
        out.certificate.graph_fingerprint = fingerprint_hex(g);
        bool exact = applied.factor.has_value();
        BigInt value = applied.factor.value_or(0);
        for (const auto& child : applied.children) {
            CountResult sub = solve(child);
            if (sub.exact && exact)
                value *= *sub.exact;
            else
                exact = false;
            for (auto& residue : sub.residues)
                add_residue(out.residues, residue);
            out.certificate.children.push_back(sub.certificate);
        }
        if (applied.rule == Rule::Irreducible)
            add_residue(out.residues, g);
        if (exact && out.residues.empty())
            out.exact = value;
        out.expression = render_expression(out);
        return out;
    }

private:
    CountResult solve_uncached(const Graph& g) {
        for (Rule r : kPriority)
            if (auto applied = try_rule(g, r, 0))
                return assemble(g, *applied);
        return assemble(g, Applied{Rule::Irreducible, std::nullopt, {}});
    }

    static void add_residue(std::vector<Graph>& residues, const Graph& g) {
        for (const auto& r : residues)
            if (graph_fingerprint(r) == graph_fingerprint(g) && are_isomorphic(r, g))
                return;
        residues.push_back(g);
    }

    static void count_residues(const CountCertificate& cert,
                               std::map<std::string, int>& mult) {
        if (cert.rule == Rule::Irreducible)
            ++mult[cert.graph_fingerprint];
        for (const auto& child : cert.children)
            count_residues(child, mult);
    }

    std::string render_expression(const CountResult& r) {
        if (r.exact)
            return r.exact->str();
        BigInt known = known_product(r.certificate);
        std::map<std::string, int> mult;
        count_residues(r.certificate, mult);
        std::string expr = known.str();
        int index = 0;
        for (const auto& residue : r.residues) {
            int count = mult[fingerprint_hex(residue)];
            expr += " * c(R" + std::to_string(index) + ")";
            if (count > 1)
                expr += "^" + std::to_string(count);
            ++index;
        }
        return expr;
    }

    static BigInt known_product(const CountCertificate& cert) {
        BigInt value = cert.factor.value_or(1);
        for (const auto& child : cert.children)
            value *= known_product(child);
        return value;
    }

    std::unordered_map<std::uint64_t, std::vector<std::pair<Graph, CountResult>>> memo_;
};

void check_countable(const Graph& g) {
    if (g.vertex_count() < 2)
        throw ArgumentError("count_c needs at least two vertices");
    if (!is_rigid(g))
        throw NotRigidError("c(G) undefined for flexible graphs");
}

} // namespace

CountResult count_c(const Graph& g) {
    check_countable(g);
    Engine engine;
    return engine.solve(g);
}

std::vector<Rule> applicable_rules(const Graph& g) {
    std::vector<Rule> rules;
    for (Rule r : kPriority)
        if (try_rule(g, r, 0))
            rules.push_back(r);
    return rules;
}

int rule_site_count(const Graph& g, Rule r) {
    int count = 0;
    while (try_rule(g, r, count))
        ++count;
    return count;
}

CountResult count_c_with_root_rule(const Graph& g, Rule r, int site) {
    check_countable(g);
    auto applied = try_rule(g, r, site);
    if (!applied)
        throw RuleInapplicableError("rule " + to_string(r) + " does not apply here");
    Engine engine;
    return engine.assemble(g, *applied);
}

// --- JSON ------------------------------------------------------------------

namespace {

nlohmann::json certificate_to_json(const CountCertificate& c) {
    nlohmann::json j;
    j["rule"] = to_string(c.rule);
    j["factor"] = c.factor ? nlohmann::json(c.factor->str()) : nlohmann::json(nullptr);
    j["graph_fingerprint"] = c.graph_fingerprint;
    auto children = nlohmann::json::array();
    for (const auto& child : c.children)
        children.push_back(certificate_to_json(child));
    j["children"] = children;
    return j;
}

CountCertificate certificate_from_json(const nlohmann::json& j) {
    CountCertificate c;
    c.rule = rule_from_string(j.at("rule").get<std::string>());
    if (!j.at("factor").is_null())
        c.factor = BigInt(j.at("factor").get<std::string>());
    c.graph_fingerprint = j.at("graph_fingerprint").get<std::string>();
    for (const auto& child : j.at("children"))
        c.children.push_back(certificate_from_json(child));
    return c;
}

} // namespace

std::string count_result_to_json(const CountResult& r) {
    nlohmann::json j;
    j["exact"] = r.exact ? nlohmann::json(r.exact->str()) : nlohmann::json(nullptr);
    j["expression"] = r.expression;
    j["certificate"] = certificate_to_json(r.certificate);
    auto residues = nlohmann::json::array();
    for (const auto& g : r.residues)
        residues.push_back(nlohmann::json::parse(graph_to_json(g)));
    j["residues"] = residues;
    return j.dump();
}

CountResult count_result_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    CountResult r;
    if (!j.at("exact").is_null())
        r.exact = BigInt(j.at("exact").get<std::string>());
    r.expression = j.at("expression").get<std::string>();
    r.certificate = certificate_from_json(j.at("certificate"));
    for (const auto& g : j.at("residues"))
        r.residues.push_back(parse_graph(g.dump()));
    return r;
}

} // namespace rigidcount
