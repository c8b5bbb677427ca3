#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rigidcount/graph.hpp"

namespace rigidcount {

using BigInt = boost::multiprecision::cpp_int;

// Reduction rules, in the priority order count_c applies them.
enum class Rule {
    SmallComplete,     // n <= 3, factor 1
    GloballyRigid,     // 3-connected + redundantly rigid, factor 1
    RConnectedFormula, // R-connected, factor 2^b(G)
    Type1,             // remove a degree-2 vertex, factor 2
    TriangleType2,     // remove a degree-3 vertex whose removal stays rigid,
                       // complete its neighbourhood, factor 1
    TwoSepBothRigid,   // split at a 2-separator, both sides rigid, factor 2
    TwoSepOneNonRigid, // split at a 2-separator, one side flexible, factor 2
    ThreeEdgeCut,      // split at a disjoint 3-edge-cut, factor 12
    Irreducible,       // no rule applies; the factor is unknown
};

std::string to_string(Rule r);

// Tree recording which rule produced each factor of the count.  The value
// of a node is factor * product(children); Irreducible nodes have no factor
// and make the total symbolic.
struct CountCertificate {
    Rule rule = Rule::Irreducible;
    std::optional<BigInt> factor;
    std::vector<CountCertificate> children;
    std::string graph_fingerprint;
};

struct CountResult {
    std::optional<BigInt> exact;   // present iff residues is empty
    std::string expression;       // decimal value, or a product with c(Ri) placeholders
    CountCertificate certificate;
    std::vector<Graph> residues;  // distinct irreducible subgraphs
};

// Number of pairwise non-congruent complex realisations equivalent to a
// generic one, by recursive reduction.  Throws NotRigidError on flexible
// input ("c(G) undefined for flexible graphs").
CountResult count_c(const Graph& g);

// --- individual reductions (building blocks of count_c, also used directly
// --- by tests) -----------------------------------------------------------

struct UnaryReduction {
    Graph child;
    BigInt factor;
};

struct SplitReduction {
    Graph child_a;
    Graph child_b;
    BigInt factor;
    Rule rule;
};

// deg(v) = 2, g rigid with n >= 4: child g - v, factor 2.
UnaryReduction reduce_type1(const Graph& g, int v);

// deg(v) = 3 and g - v rigid: child (g - v) plus the triangle on N(v),
// factor 1.
UnaryReduction reduce_triangle(const Graph& g, int v);

// Split g at a 2-separator {u,v}.  Both sides rigid: children are the two
// sides each with uv added.  Exactly one side flexible: children are the
// rigid side as-is and the flexible side with uv added.  Factor 2 either
// way; both sides flexible cannot occur in a rigid graph.
SplitReduction reduce_2separation(const Graph& g, const Separation& s);

// Split g at a vertex-disjoint 3-edge-cut; both parts are rigid and the
// factor is the prism constant 12.
SplitReduction reduce_3edgecut(const Graph& g, const EdgeCut3& cut);

// 2^{b(G)} when the rigidity matroid of g is connected, absent otherwise.
std::optional<BigInt> rconnected_shortcut(const Graph& g);

// Expected count 2^{n-3} for the quadratically-solvable gluing family.
// count_c must reproduce it through its reductions, never via this helper.
BigInt qs_family_value(int n);

// (1/2) * binomial(2n-4, n-2), the upper bound on any realisation count.
BigInt borcea_streinu_bound(int n);

// Product over the certificate tree; throws ArgumentError if any node is
// Irreducible.
BigInt certificate_value(const CountCertificate& cert);

std::string count_result_to_json(const CountResult& r);
CountResult count_result_from_json(const std::string& text);

// --- rule-order instrumentation (confluence testing) ----------------------

// Rules applicable at the root of g, ignoring priority.  TwoSep variants
// are reported per separation, ThreeEdgeCut per cut, Type1/Triangle per
// vertex, via the site count below.
std::vector<Rule> applicable_rules(const Graph& g);
int rule_site_count(const Graph& g, Rule r);

// Apply `r` at its `site`-th applicable position, then finish with the
// normal priority order.  Throws RuleInapplicableError when r does not
// apply.
CountResult count_c_with_root_rule(const Graph& g, Rule r, int site = 0);

} // namespace rigidcount
