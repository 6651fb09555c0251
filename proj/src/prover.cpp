#include "trigroup/prover.hpp"

#include "trigroup/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace trigroup {

namespace {

std::size_t idx(int slot) { return static_cast<std::size_t>(slot); }

std::string box_to_string(const Region& r) {
    std::string s = "{";
    for (int v = 0; v < 3; ++v) {
        if (!r.active[idx(v)]) continue;
        if (s.size() > 1) s += ", ";
        s += interval_to_string(r.box[idx(v)]);
    }
    return s + "}";
}

} // namespace

double Region::widest_active_width() const {
    double w = 0.0;
    for (int v = 0; v < 3; ++v)
        if (active[idx(v)]) w = std::max(w, box[idx(v)].width());
    return w;
}

bool chain_tighten(Region& r) {
    const auto& ch = r.chain;
    for (std::size_t k = 1; k < ch.size(); ++k) {
        auto& cur = r.box[idx(ch[k])];
        const auto& prev = r.box[idx(ch[k - 1])];
        if (prev.lo > cur.lo) {
            if (prev.lo > cur.hi) return false;
            cur = Interval(prev.lo, cur.hi);
        }
    }
    for (std::size_t k = ch.size(); k-- > 1;) {
        auto& prev = r.box[idx(ch[k - 1])];
        const auto& cur = r.box[idx(ch[k])];
        if (cur.hi < prev.hi) {
            if (cur.hi < prev.lo) return false;
            prev = Interval(prev.lo, cur.hi);
        }
    }
    return true;
}

bool chain_infeasible(const Region& r) {
    Region copy = r;
    return !chain_tighten(copy);
}

SignInfo direct_sign(const Poly& p, const Region& r) {
    const Interval iv = p.eval_interval(r.box);
    if (iv.lo > 0.0) return {+1, true};
    if (iv.hi < 0.0) return {-1, true};
    if (iv.lo >= 0.0) return {+1, false};
    if (iv.hi <= 0.0) return {-1, false};
    return {0, false};
}

namespace {

int chain_pos(const Region& r, int slot) {
    for (std::size_t k = 0; k < r.chain.size(); ++k)
        if (r.chain[k] == slot) return static_cast<int>(k);
    return -1;
}

DescendResult descend_empty() {
    DescendResult d;
    d.certified = true;
    d.empty = true;
    return d;
}

DescendResult descend_fail(const std::string& why, std::vector<std::string>* trace) {
    DescendResult d;
    d.certified = false;
    if (trace) trace->push_back("stuck: " + why);
    return d;
}

DescendResult combine_min(const DescendResult& a, const DescendResult& b) {
    if (!a.certified || !b.certified) return DescendResult{};
    if (a.empty) return b;
    if (b.empty) return a;
    if (a.exact && b.exact) return (b.exact_value < a.exact_value) ? b : a;
    DescendResult r;
    r.certified = true;
    r.enc = Interval(std::min(a.enc.lo, b.enc.lo), std::min(a.enc.hi, b.enc.hi));
    if (a.exact && a.exact_value <= rational_from_double(b.enc.lo)) return a;
    if (b.exact && b.exact_value <= rational_from_double(a.enc.lo)) return b;
    return r;
}

// Terminal evaluation: every active variable is thin; exact when all are
// single points.
DescendResult descend_eval(const Poly& p, const Region& reg) {
    DescendResult d;
    d.certified = true;
    bool all_points = true;
    for (int v = 0; v < 3; ++v)
        if (reg.active[idx(v)] && !reg.is_point(v)) all_points = false;
    if (all_points) {
        std::array<Rational, 3> pt{Rational(0), Rational(0), Rational(0)};
        for (int v = 0; v < 3; ++v)
            if (reg.active[idx(v)]) pt[idx(v)] = rational_from_double(reg.box[idx(v)].lo);
        d.exact = true;
        d.exact_value = p.eval_exact(pt);
        d.enc = interval_from_rational(d.exact_value);
        d.have_argmin = true;
        for (int v = 0; v < 3; ++v) d.argmin[idx(v)] = reg.box[idx(v)].lo;
    } else {
        d.enc = p.eval_interval(reg.box);
    }
    return d;
}

struct Face {
    Poly p;
    Region reg;
    int tied_from = -1;  // slot substituted away, -1 if pin
    int tied_to = -1;
};

// Faces containing the minimizer of the v-segment's chosen end.
// end = -1: lower feasible end (box low or tie with chain predecessor);
// end = +1: upper feasible end (box high or tie with chain successor).
std::vector<Face> end_faces(const Poly& p, const Region& reg, int v, int end) {
    std::vector<Face> faces;
    const int pos = chain_pos(reg, v);
    {
        Face f;
        f.p = p;
        f.reg = reg;
        const auto& iv = reg.box[idx(v)];
        const double pin = (end < 0) ? iv.lo : iv.hi;
        f.reg.box[idx(v)] = Interval(pin, pin);
        faces.push_back(std::move(f));
    }
    const int neighbour_pos = (end < 0) ? pos - 1 : pos + 1;
    if (pos >= 0 && neighbour_pos >= 0 && neighbour_pos < static_cast<int>(reg.chain.size())) {
        const int u = reg.chain[static_cast<std::size_t>(neighbour_pos)];
        const auto& a = reg.box[idx(u)];
        const auto& b = reg.box[idx(v)];
        const double lo = std::max(a.lo, b.lo);
        const double hi = std::min(a.hi, b.hi);
        if (lo <= hi) {
            Face f;
            f.p = p.substitute_var(v, u);
            f.reg = reg;
            f.reg.box[idx(u)] = Interval(lo, hi);
            f.reg.active[idx(v)] = false;
            f.reg.box[idx(v)] = Interval(0.0);
            f.reg.chain.erase(f.reg.chain.begin() + pos);
            f.tied_from = v;
            f.tied_to = u;
            faces.push_back(std::move(f));
        }
    }
    return faces;
}

} // namespace

DescendResult descend_min(const Poly& p, Region region, const SignOracle& oracle, int depth,
                          std::vector<std::string>* trace) {
    if (depth > 16) return descend_fail("descent depth limit", trace);
    if (!chain_tighten(region)) return descend_empty();

    auto recurse_faces = [&](const std::vector<Face>& faces, int v,
                             const std::string& why) -> DescendResult {
        if (trace) trace->push_back(why);
        DescendResult acc = descend_empty();
        for (const auto& f : faces) {
            DescendResult sub = descend_min(f.p, f.reg, oracle, depth + 1, trace);
            if (!sub.certified) return sub;
            if (sub.have_argmin && f.tied_from >= 0)
                sub.argmin[idx(f.tied_from)] = sub.argmin[idx(f.tied_to)];
            acc = combine_min(acc, sub);
            if (!acc.certified) return acc;
        }
        (void)v;
        return acc;
    };

    // first-derivative reductions
    for (int v = 0; v < 3; ++v) {
        if (!region.active[idx(v)] || region.is_thin(v) || !p.uses_var(v)) continue;
        const Poly d = p.partial(v);
        const SignInfo si = oracle(d, region);
        if (si.sign > 0)
            return recurse_faces(end_faces(p, region, v, -1), v,
                                 "var " + std::to_string(v) + " nondecreasing: move to lower end");
        if (si.sign < 0)
            return recurse_faces(end_faces(p, region, v, +1), v,
                                 "var " + std::to_string(v) + " nonincreasing: move to upper end");
    }
    // concavity fallback: minimum of a concave section sits at an endpoint
    for (int v = 0; v < 3; ++v) {
        if (!region.active[idx(v)] || region.is_thin(v) || !p.uses_var(v)) continue;
        const Poly d2 = p.partial(v).partial(v);
        const SignInfo si = oracle(d2, region);
        if (si.sign < 0) {
            auto faces = end_faces(p, region, v, -1);
            auto up = end_faces(p, region, v, +1);
            faces.insert(faces.end(), up.begin(), up.end());
            return recurse_faces(faces, v,
                                 "var " + std::to_string(v) + " concave: check both ends");
        }
    }
    for (int v = 0; v < 3; ++v)
        if (region.active[idx(v)] && !region.is_thin(v) && p.uses_var(v))
            return descend_fail("no certified sign for var " + std::to_string(v) + " over " +
                                    box_to_string(region),
                                trace);
    DescendResult d = descend_eval(p, region);
    if (trace) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "corner %s -> %s", box_to_string(region).c_str(),
                      interval_to_string(d.enc).c_str());
        trace->push_back(buf);
    }
    return d;
}

namespace {

// pass/fail of a certified minimum enclosure against the threshold:
// +1 claim holds, -1 claim definitely fails, 0 undecidable
int judge_min(const DescendResult& d, const Rational& thr, bool strict) {
    if (d.exact) {
        const bool ok = strict ? (d.exact_value > thr) : (d.exact_value >= thr);
        return ok ? +1 : -1;
    }
    const Rational lo = rational_from_double(d.enc.lo);
    if (strict ? (lo > thr) : (lo >= thr)) return +1;
    const Rational hi = rational_from_double(d.enc.hi);
    if (strict ? (hi <= thr) : (hi < thr)) return -1;
    return 0;
}

std::vector<std::array<double, 3>> probe_points(const Region& reg) {
    std::vector<std::array<double, 3>> pts;
    std::vector<int> act;
    for (int v = 0; v < 3; ++v)
        if (reg.active[idx(v)]) act.push_back(v);
    const std::size_t n = act.size();
    auto feasible = [&](const std::array<double, 3>& p) {
        for (std::size_t k = 1; k < reg.chain.size(); ++k)
            if (p[idx(reg.chain[k - 1])] > p[idx(reg.chain[k])]) return false;
        return true;
    };
    for (std::size_t mask = 0; mask < (1u << n); ++mask) {
        std::array<double, 3> p{};
        for (std::size_t i = 0; i < n; ++i) {
            const auto& iv = reg.box[idx(act[i])];
            p[idx(act[i])] = (mask >> i) & 1 ? iv.hi : iv.lo;
        }
        if (feasible(p)) pts.push_back(p);
    }
    // chain-clamped midpoint
    std::array<double, 3> m{};
    for (int v : act) m[idx(v)] = reg.box[idx(v)].mid();
    for (std::size_t k = 1; k < reg.chain.size(); ++k) {
        const int u = reg.chain[k - 1], v = reg.chain[k];
        if (m[idx(u)] > m[idx(v)])
            m[idx(v)] = std::min(m[idx(u)], reg.box[idx(v)].hi);
    }
    if (feasible(m)) pts.push_back(m);
    return pts;
}

Rational exact_at(const Poly& p, const Region& reg, const std::array<double, 3>& pt) {
    std::array<Rational, 3> q{Rational(0), Rational(0), Rational(0)};
    for (int v = 0; v < 3; ++v)
        if (reg.active[idx(v)]) q[idx(v)] = rational_from_double(pt[idx(v)]);
    return p.eval_exact(q);
}

} // namespace

ProofOutcome prove_positive(const Poly& p, const Region& region, const Rational& threshold,
                            bool strict, const ProveOptions& opts) {
    ProofOutcome out;
    double lb_min = std::numeric_limits<double>::infinity();
    double ub_min = std::numeric_limits<double>::infinity();

    struct Node {
        Region reg;
        int depth;
    };
    std::vector<Node> stack;
    stack.push_back({region, 0});

    const auto direct = SignOracle(&direct_sign);

    while (!stack.empty()) {
        Node node = std::move(stack.back());
        stack.pop_back();
        ++out.nodes;
        out.depth_reached = std::max(out.depth_reached, node.depth);

        if (out.nodes > opts.budget) {
            out.status = ProofStatus::Inconclusive;
            out.worst_box = node.reg;
            out.detail = "node budget exhausted";
            return out;
        }

        Region reg = node.reg;
        if (!chain_tighten(reg)) {
            ++out.leaves;
            if (opts.want_certificate) out.cert_leaves.push_back({node.reg.box, 'x', 0.0});
            continue;
        }

        const Interval iv = p.eval_interval(reg.box);
        const Rational lo_q = rational_from_double(iv.lo);
        const bool pass_interval = strict ? (lo_q > threshold) : (lo_q >= threshold);
        if (pass_interval) {
            ++out.leaves;
            lb_min = std::min(lb_min, iv.lo);
            ub_min = std::min(ub_min, iv.hi);
            if (opts.want_certificate) out.cert_leaves.push_back({reg.box, 'i', iv.lo});
            continue;
        }

        // refutation probes: exact rational evaluation at feasible points
        for (const auto& pt : probe_points(reg)) {
            const Rational val = exact_at(p, reg, pt);
            ub_min = std::min(ub_min, interval_from_rational(val).hi);
            const bool violated = strict ? (val <= threshold) : (val < threshold);
            if (violated) {
                out.status = ProofStatus::Refuted;
                out.witness = pt;
                out.witness_value = val;
                out.detail = "exact value " + rational_to_string(val) + " at feasible point";
                return out;
            }
        }

        // monotone vertex certificate on this leaf
        DescendResult vd = descend_min(p, reg, direct, 0, nullptr);
        if (vd.certified && !vd.empty && judge_min(vd, threshold, strict) == +1) {
            ++out.leaves;
            lb_min = std::min(lb_min, vd.enc.lo);
            ub_min = std::min(ub_min, vd.enc.hi);
            if (opts.want_certificate) out.cert_leaves.push_back({reg.box, 'v', vd.enc.lo});
            continue;
        }

        // split the widest non-thin variable
        int split_var = -1;
        double w = Region::thin_width;
        for (int v = 0; v < 3; ++v)
            if (reg.active[idx(v)] && p.uses_var(v) && reg.box[idx(v)].width() > w) {
                w = reg.box[idx(v)].width();
                split_var = v;
            }
        if (split_var < 0 || node.depth >= opts.max_depth) {
            out.status = ProofStatus::Inconclusive;
            out.worst_box = reg;
            out.detail = split_var < 0 ? "no splittable variable left" : "depth limit reached";
            return out;
        }
        const auto& biv = reg.box[idx(split_var)];
        const double mid = biv.mid();
        Region lo_half = reg, hi_half = reg;
        lo_half.box[idx(split_var)] = Interval(biv.lo, mid);
        hi_half.box[idx(split_var)] = Interval(mid, biv.hi);
        stack.push_back({hi_half, node.depth + 1});
        stack.push_back({lo_half, node.depth + 1});
    }

    out.status = ProofStatus::Proved;
    if (std::isfinite(lb_min) && std::isfinite(ub_min))
        out.bound = Interval(lb_min, std::max(lb_min, ub_min));
    out.detail = "all leaves certified";
    return out;
}

namespace {

struct PlanContext {
    const MonotonePlan* plan;
    const Region* claim_region;
    std::vector<int> verified;  // -1 unknown, 0 failed, 1 ok
    std::vector<std::string>* steps = nullptr;

    explicit PlanContext(const MonotonePlan& pl, const Region& reg)
        : plan(&pl), claim_region(&reg), verified(pl.lemmas.size(), -1) {}

    SignInfo lemma_sign(std::size_t i);
    void verify(std::size_t i);
    SignOracle oracle_upto(std::size_t limit);
};

SignOracle PlanContext::oracle_upto(std::size_t limit) {
    return [this, limit](const Poly& q, const Region& reg) -> SignInfo {
        for (std::size_t i = 0; i < limit && i < plan->lemmas.size(); ++i) {
            const auto& lem = plan->lemmas[i];
            int flip = 0;
            if (lem.target == q)
                flip = +1;
            else if (lem.target == -q)
                flip = -1;
            if (flip != 0) {
                verify(i);
                return {flip * lem.sign, lem.strict};
            }
        }
        return direct_sign(q, reg);
    };
}

SignInfo PlanContext::lemma_sign(std::size_t i) {
    verify(i);
    const auto& lem = plan->lemmas[i];
    return {lem.sign, lem.strict};
}

void PlanContext::verify(std::size_t i) {
    if (verified[i] == 1) return;
    if (verified[i] == 0) throw PlanUnsound("plan node '" + plan->lemmas[i].name + "' already failed");
    const auto& lem = plan->lemmas[i];
    verified[i] = 0;
    Region reg = *claim_region;
    chain_tighten(reg);

    auto fail = [&](const std::string& why) {
        throw PlanUnsound("plan node '" + lem.name + "': " + why);
    };

    switch (lem.how) {
        case SignLemma::How::Direct: {
            const SignInfo si = direct_sign(lem.target, reg);
            if (si.sign != lem.sign || (lem.strict && !si.strict))
                fail("direct interval evaluation gives " + interval_to_string(lem.target.eval_interval(reg.box)));
            break;
        }
        case SignLemma::How::Product: {
            Poly prod = Poly::constant(1);
            for (const auto& f : lem.factors) prod = prod * f.first;
            if (prod != lem.target) fail("factorization identity does not hold");
            int sign = +1;
            bool strict = true;
            for (const auto& f : lem.factors) {
                SignInfo si{0, false};
                if (!f.second.empty()) {
                    bool found = false;
                    for (std::size_t j = 0; j < i; ++j)
                        if (plan->lemmas[j].name == f.second) {
                            si = lemma_sign(j);
                            found = true;
                            break;
                        }
                    if (!found) fail("factor cites unknown or later lemma '" + f.second + "'");
                } else {
                    si = direct_sign(f.first, reg);
                }
                if (si.sign == 0) fail("factor sign straddles zero");
                sign *= si.sign;
                strict = strict && si.strict;
            }
            if (sign != lem.sign || (lem.strict && !strict)) fail("factor signs do not compose to the claimed sign");
            break;
        }
        case SignLemma::How::Corner: {
            // claimed sign +: certify min(target) > 0 (>= for weak);
            // claimed sign -: certify max(target) < 0 via min of the negation.
            const Poly q = (lem.sign > 0) ? lem.target : -lem.target;
            DescendResult d = descend_min(q, reg, oracle_upto(i), 0, steps);
            if (!d.certified) fail("corner descent could not certify a sign");
            if (d.empty) break;
            const int j = judge_min(d, Rational(0), lem.strict);
            if (j != +1) fail("corner value " + interval_to_string(d.enc) + " does not have the claimed sign");
            break;
        }
    }
    verified[i] = 1;
    if (steps) steps->push_back("lemma '" + lem.name + "' verified");
}

} // namespace

ProofOutcome monotone_corner_bound(const Poly& p, const Region& region, const Rational& threshold,
                                   bool strict, const MonotonePlan& plan, bool want_certificate) {
    ProofOutcome out;
    Region reg = region;
    if (!chain_tighten(reg)) {
        out.status = ProofStatus::Proved;
        out.detail = "empty region";
        return out;
    }
    PlanContext ctx(plan, reg);
    std::vector<std::string> steps;
    if (want_certificate) ctx.steps = &steps;

    DescendResult d = descend_min(p, reg, ctx.oracle_upto(plan.lemmas.size()), 0,
                                  want_certificate ? &steps : nullptr);
    if (!d.certified) {
        std::string why = "corner descent stalled";
        for (const auto& t : d.trace) why += "; " + t;
        throw PlanUnsound(why);
    }
    out.nodes = 1;
    out.leaves = 1;
    if (want_certificate) out.cert_steps = steps;
    if (d.empty) {
        out.status = ProofStatus::Proved;
        out.detail = "empty region";
        return out;
    }
    out.bound = d.enc;
    const int j = judge_min(d, threshold, strict);
    if (j == +1) {
        out.status = ProofStatus::Proved;
        out.detail = "corner minimum certified";
    } else if (j == -1 && d.exact) {
        out.status = ProofStatus::Refuted;
        out.witness = d.argmin;
        out.witness_value = d.exact_value;
        out.detail = "corner minimum violates the claim";
    } else if (j == -1) {
        out.status = ProofStatus::Refuted;
        out.detail = "corner enclosure lies below the threshold";
    } else {
        out.status = ProofStatus::Inconclusive;
        out.detail = "corner enclosure straddles the threshold";
    }
    return out;
}

} // namespace trigroup
