#ifndef TRIGROUP_PROVER_HPP
#define TRIGROUP_PROVER_HPP

#include "trigroup/interval.hpp"
#include "trigroup/poly.hpp"
#include "trigroup/rational.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace trigroup {

// Box with optional ordering constraints. `chain` lists variable slots in
// ascending order: x_chain[0] <= x_chain[1] <= ... Slots not in `active`
// are ignored entirely. Variables whose interval is thinner than
// `thin_width` are treated as pinned enclosures (never split, never
// descended); this is how cos(pi/n) pins enter polynomial claims.
struct Region {
    std::array<Interval, 3> box{Interval(0.0), Interval(0.0), Interval(0.0)};
    std::array<bool, 3> active{false, false, false};
    std::vector<int> chain;

    static constexpr double thin_width = 1e-10;

    bool is_thin(int slot) const { return box[static_cast<std::size_t>(slot)].width() <= thin_width; }
    bool is_point(int slot) const {
        const auto& iv = box[static_cast<std::size_t>(slot)];
        return iv.lo == iv.hi;
    }
    double widest_active_width() const;
};

// Propagates the chain bounds (lows forward, highs backward). Returns false
// when the constrained set is empty.
bool chain_tighten(Region& r);
// True when the box does not meet the constraint set at all.
bool chain_infeasible(const Region& r);

// Sign query result: sign in {-1, 0, +1} (0 = undetermined), `strict`
// telling whether the sign is strict or only non-strict.
struct SignInfo {
    int sign = 0;
    bool strict = false;
};

using SignOracle = std::function<SignInfo(const Poly&, const Region&)>;

// Direct interval evaluation as a sign oracle.
SignInfo direct_sign(const Poly& p, const Region& r);

// Result of the corner-descent engine: a certified enclosure of the minimum
// of p over region /\ chain, with exactness tracked so that equality cases
// (minimum attained exactly at a rational corner) survive.
struct DescendResult {
    bool certified = false;
    bool empty = false;   // region /\ chain is empty
    Interval enc;         // enclosure of the minimum (valid when certified && !empty)
    bool exact = false;   // enc is a single exact rational value
    Rational exact_value;
    bool have_argmin = false;
    std::array<double, 3> argmin{};
    std::vector<std::string> trace;
};

// Certifies the minimum of p over region /\ chain by monotone reduction:
// each variable with a certified partial-derivative sign is moved to its
// extremal feasible end (branching between the box end and a tie with its
// chain neighbour); concave directions reduce to segment endpoints. Fails
// (certified = false) when no variable can be reduced.
DescendResult descend_min(const Poly& p, Region region, const SignOracle& oracle,
                          int depth = 0, std::vector<std::string>* trace = nullptr);

enum class ProofStatus { Proved, Refuted, Inconclusive };

struct BnbLeaf {
    std::array<Interval, 3> box;
    char status;  // 'x' infeasible, 'i' interval bound, 'v' vertex certificate
    double lower;
};

struct ProofOutcome {
    ProofStatus status = ProofStatus::Inconclusive;
    // Proved: enclosure of the certified minimum over the region
    Interval bound;
    // Refuted: a feasible rational witness and its exact value
    std::array<double, 3> witness{};
    Rational witness_value;
    // Inconclusive: the box that exhausted depth/budget
    Region worst_box;
    long nodes = 0;
    long leaves = 0;
    int depth_reached = 0;
    std::string detail;
    // populated only when a certificate was requested
    std::vector<BnbLeaf> cert_leaves;
    std::vector<std::string> cert_steps;
};

struct ProveOptions {
    int max_depth = 40;
    long budget = 1000000;  // node budget
    bool want_certificate = false;
};

// Branch-and-bound positivity: proves  p > threshold  (strict) or
// p >= threshold  over region /\ chain. Leaves are discharged by chain
// disjointness, by a sound interval lower bound, or by the monotone vertex
// certificate; refutations come from exact rational evaluation at feasible
// points. Deterministic: depth-first, widest variable split at midpoint,
// lower half first.
ProofOutcome prove_positive(const Poly& p, const Region& region, const Rational& threshold,
                            bool strict, const ProveOptions& opts = {});

// One node of a hand-encoded derivative-sign plan. `target` is asserted to
// have the given sign over the claim region, justified by direct interval
// evaluation, by an exact factorization into parts of certified sign, or by
// bounding the target at the extremal corner found through earlier nodes.
struct SignLemma {
    std::string name;
    Poly target;
    int sign = +1;
    bool strict = true;
    enum class How { Direct, Product, Corner } how = How::Direct;
    // Product: exact factors; each paired with the name of an earlier lemma
    // ("" = certify the factor by direct evaluation).
    std::vector<std::pair<Poly, std::string>> factors;
};

struct MonotonePlan {
    std::vector<SignLemma> lemmas;
};

// Certifies  p > / >= threshold  by corner descent, consulting the plan's
// sign lemmas (verified on first use, earlier lemmas only) and falling back
// to direct interval signs. Throws PlanUnsound when a lemma fails its own
// verification; returns Refuted when the descent succeeds but the certified
// corner value violates the claim.
ProofOutcome monotone_corner_bound(const Poly& p, const Region& region,
                                   const Rational& threshold, bool strict,
                                   const MonotonePlan& plan, bool want_certificate = false);

} // namespace trigroup

#endif
