#ifndef TRIGROUP_CLAIMS_HPP
#define TRIGROUP_CLAIMS_HPP

#include "trigroup/prover.hpp"

#include <array>
#include <string>
#include <vector>

namespace trigroup {

enum class ClaimMethod { Monotone, BnB, Both };

// One inequality of a claim, normalized to the lower-bound form
// "prove p > / >= threshold over the region". Irrational additive constants
// (pinned square roots) are folded into the threshold using the safe end of
// their enclosure. Reporting maps the certified minimum of p back to the
// original quantity: original = report_scale * min(p) + report_offset.
struct ClaimBound {
    Poly p;
    bool strict = true;
    Rational threshold;
    double report_scale = 1.0;
    Interval report_offset = Interval(0.0);
    std::string display;
};

struct Claim {
    std::string name;
    std::string statement;
    std::array<std::string, 3> var_names{"x", "y", "z"};
    Region region;
    std::vector<ClaimBound> bounds;
    MonotonePlan plan;
    bool deduction = false;  // derived from another claim, no search of its own
};

struct BoundResult {
    std::string display;
    bool proved = false;
    bool ran_monotone = false;
    bool ran_bnb = false;
    ProofOutcome monotone;
    ProofOutcome bnb;
    // certified enclosure of the original quantity (corner value), taken
    // from the monotone route when it ran
    Interval reported;
};

struct ClaimResult {
    std::string name;
    std::string statement;
    bool proved = false;
    bool deduction = false;
    std::vector<BoundResult> bounds;
    std::string note;
    double seconds = 0.0;
};

// The fixed list of registered claims: the ten lemma items (the square-root
// item as a deduction), the cosine gap inequality, and the two corner
// inequalities used by the proposition scripts.
const std::vector<Claim>& registry();

const Claim& find_claim(const std::string& name);  // throws UnknownClaim

ClaimResult run_claim(const std::string& name, ClaimMethod method,
                      const ProveOptions& opts = {});

// Same machinery on an ad-hoc claim value (negative controls, tests).
ClaimResult run_claim_on(const Claim& c, ClaimMethod method, const ProveOptions& opts = {});

std::string method_to_string(ClaimMethod m);

} // namespace trigroup

#endif
