#include "trigroup/claims.hpp"

#include "trigroup/errors.hpp"

#include <chrono>

namespace trigroup {

namespace {

Poly X() { return Poly::variable(0); }
Poly Y() { return Poly::variable(1); }
Poly Z() { return Poly::variable(2); }

// 4(x^2+y^2+z^2) - 3
Poly poly_A() { return 4 * (X() * X() + Y() * Y() + Z() * Z()) - 3; }
// x y z
Poly poly_P() { return X() * Y() * Z(); }
// z^2 + 4 x^2 y^2 - 1
Poly poly_Bm1() { return Z() * Z() + 4 * (X() * X()) * (Y() * Y()) - 1; }

Poly poly_f1() {
    const Poly A = poly_A(), P = poly_P();
    return -3 * (A * A) + (16 * P) * (16 * P);
}

Poly poly_f2() {
    const Poly A = poly_A(), P = poly_P();
    return -(A * A) + 3 * A + (8 * P) * (8 * P) - 9;
}

Poly poly_f3() { return -3 * poly_A() + 32 * poly_P(); }

Poly poly_f4() {
    const Poly A = poly_A(), B = poly_Bm1(), P = poly_P();
    return 3 * (A * A) - 12 * (B * A) + 16 * (B * B) - (8 * P) * (8 * P);
}

// squared-variable forms of the first two ordered-domain polynomials
// (u = x^2 etc.); the domain endpoint cos^2(pi/4) = 1/2 becomes exact
Poly poly_g1_sq() { return 2 * (X() + Y() - 2 * (X() * Y())) + Z() - 1; }
Poly poly_g2_sq() { return 8 * (X() + Y() - 2 * (X() * Y())) + 4 * Z() - 5; }

Poly poly_g3() {
    const Poly A = poly_A(), P = poly_P();
    return -27 * (A * A) - 54 * A + 52 * ((8 * P) * (8 * P)) - 27;
}

// polynomial part of -g4 (the irrational constant moves to the threshold)
Poly poly_neg_g4_core() { return poly_A() - 2 * poly_Bm1(); }

Poly poly_g5() {
    const Poly P = poly_P(), B = poly_Bm1();
    const Poly s = 2 * (Y() * Y()) * (1 - 2 * (X() * X())) + 2 * (X() * X()) + Z() * Z();
    return 25 * ((4 * P) * (4 * P) - B * B) - 27 * (s * s);
}

Region box_region(Interval x, Interval y, Interval z, std::vector<int> chain = {}) {
    Region r;
    r.box = {x, y, z};
    r.active = {true, true, true};
    r.chain = std::move(chain);
    return r;
}

Region slab_region_1var(Interval x) {
    Region r;
    r.box = {x, Interval(0.0), Interval(0.0)};
    r.active = {true, false, false};
    return r;
}

MonotonePlan plan_for_F1(const Poly& F1) {
    MonotonePlan plan;
    {
        SignLemma l;
        l.name = "dxx_4f1_negative";
        l.target = F1.partial(0).partial(0);
        l.sign = -1;
        l.strict = true;
        l.how = SignLemma::How::Direct;
        plan.lemmas.push_back(std::move(l));
    }
    {
        SignLemma l;
        l.name = "dx_4f1_positive";
        l.target = F1.partial(0);
        l.sign = +1;
        l.strict = true;
        l.how = SignLemma::How::Corner;
        plan.lemmas.push_back(std::move(l));
    }
    return plan;
}

MonotonePlan plan_for_f2(const Poly& f2) {
    MonotonePlan plan;
    // df2/dx = 8x * s with s = 9 - 8x^2 - 8y^2 - 8z^2 + 16y^2z^2
    const Poly s = 9 - 8 * (X() * X()) - 8 * (Y() * Y()) - 8 * (Z() * Z()) +
                   16 * ((Y() * Y()) * (Z() * Z()));
    {
        SignLemma l;
        l.name = "f2_cofactor_positive";
        l.target = s;
        l.sign = +1;
        l.strict = true;
        l.how = SignLemma::How::Corner;
        plan.lemmas.push_back(std::move(l));
    }
    {
        SignLemma l;
        l.name = "dx_f2_positive";
        l.target = f2.partial(0);
        l.sign = +1;
        l.strict = true;
        l.how = SignLemma::How::Product;
        l.factors = {{8 * X(), ""}, {s, "f2_cofactor_positive"}};
        plan.lemmas.push_back(std::move(l));
    }
    return plan;
}

MonotonePlan plan_for_f4(const Poly& f4) {
    MonotonePlan plan;
    // df4/dx = 16x * B4, B4 = 4x^2(16y^4-12y^2+3) - 2y^2(12y^2+8z^2-7) + 6z^2 - 3
    const Poly quart = 16 * (Y() * Y() * Y() * Y()) - 12 * (Y() * Y()) + 3;
    const Poly B4 = 4 * (X() * X()) * quart -
                    2 * (Y() * Y()) * (12 * (Y() * Y()) + 8 * (Z() * Z()) - 7) +
                    6 * (Z() * Z()) - 3;
    {
        SignLemma l;
        l.name = "f4_cofactor_positive";
        l.target = B4;
        l.sign = +1;
        l.strict = true;
        l.how = SignLemma::How::Corner;
        plan.lemmas.push_back(std::move(l));
    }
    {
        SignLemma l;
        l.name = "dx_f4_positive";
        l.target = f4.partial(0);
        l.sign = +1;
        l.strict = true;
        l.how = SignLemma::How::Product;
        l.factors = {{16 * X(), ""}, {B4, "f4_cofactor_positive"}};
        plan.lemmas.push_back(std::move(l));
    }
    return plan;
}

std::vector<Claim> build_registry() {
    std::vector<Claim> reg;
    const Interval c14 = cos_pi_over(14);
    const Interval c9 = cos_pi_over(9);
    const Interval c8 = cos_pi_over(8);
    const Interval c8sq = interval_pow(c8, 2);
    const Interval sqrt10 = interval_sqrt_int(10);
    // (79 - 50 sqrt(10)) / 169
    const Interval x1_root = (Interval(79.0) - Interval(50.0) * sqrt10) / Interval(169.0);

    const Region box14 = box_region(Interval(c14.lo, 1.0), Interval(c14.lo, 1.0),
                                    Interval(c14.lo, 1.0));
    const Region chain9 = [&] {
        Region r = box_region(c9, Interval(c9.lo, 1.0), Interval(c9.lo, 1.0), {1, 2});
        return r;
    }();

    {
        Claim c;
        c.name = "L41_1";
        c.statement = "31 < 4*f1(x,y,z) <= 52 on cos(pi/14) <= x,y,z <= 1, "
                      "f1 = -3*(4(x^2+y^2+z^2)-3)^2 + (16xyz)^2";
        c.region = box14;
        const Poly F1 = 4 * poly_f1();
        ClaimBound lower;
        lower.p = F1;
        lower.strict = true;
        lower.threshold = 31;
        lower.display = "4*f1 > 31";
        c.bounds.push_back(lower);
        ClaimBound upper;
        upper.p = 52 - F1;
        upper.strict = false;
        upper.threshold = 0;
        upper.report_scale = -1.0;
        upper.report_offset = Interval(52.0);
        upper.display = "4*f1 <= 52";
        c.bounds.push_back(upper);
        c.plan = plan_for_F1(F1);
        reg.push_back(std::move(c));
    }
    {
        Claim c;
        c.name = "L41_2";
        c.statement = "5.5 < sqrt(4*f1(x,y,z)) < 7.3 on the same box; "
                      "follows from L41_1 by an interval square root";
        c.region = box14;
        c.deduction = true;
        reg.push_back(std::move(c));
    }
    {
        Claim c;
        c.name = "L41_3";
        c.statement = "f2(x,y,z) > 0.5 on cos(pi/14) <= x,y,z <= 1, "
                      "f2 = -(4S-3)^2 + 3(4S-3) + (8xyz)^2 - 9, S = x^2+y^2+z^2";
        c.region = box14;
        const Poly f2 = poly_f2();
        ClaimBound b;
        b.p = f2;
        b.strict = true;
        b.threshold = Rational(1, 2);
        b.display = "f2 > 1/2";
        c.bounds.push_back(b);
        c.plan = plan_for_f2(f2);
        reg.push_back(std::move(c));
    }
    {
        Claim c;
        c.name = "L41_4";
        c.statement = "2*f3(x,y,z) > 8.8 on cos(pi/14) <= x,y,z <= 1, "
                      "f3 = -3(4S-3) + 32xyz";
        c.region = box14;
        ClaimBound b;
        b.p = 2 * poly_f3();
        b.strict = true;
        b.threshold = Rational(44, 5);
        b.display = "2*f3 > 44/5";
        c.bounds.push_back(b);
        reg.push_back(std::move(c));
    }
    {
        Claim c;
        c.name = "L41_5";
        c.statement = "f4(x,y,z) > 0.1 on cos(pi/14) <= x,y,z <= 1, "
                      "f4 = 3(4S-3)^2 - 12(z^2+4x^2y^2-1)(4S-3) + 16(z^2+4x^2y^2-1)^2 - (8xyz)^2";
        c.region = box14;
        const Poly f4 = poly_f4();
        ClaimBound b;
        b.p = f4;
        b.strict = true;
        b.threshold = Rational(1, 10);
        b.display = "f4 > 1/10";
        c.bounds.push_back(b);
        c.plan = plan_for_f4(f4);
        reg.push_back(std::move(c));
    }
    {
        Claim c;
        c.name = "L43_1";
        c.statement = "g1 = 2(u+v-2uv)+w-1 >= 0 on 1/2 <= u <= v <= w <= 1 "
                      "(squared variables u=x^2, v=y^2, w=z^2 of the original chain "
                      "cos(pi/4) <= x <= y <= z <= 1)";
        c.var_names = {"u", "v", "w"};
        c.region = box_region(Interval(0.5, 1.0), Interval(0.5, 1.0), Interval(0.5, 1.0), {0, 1, 2});
        ClaimBound b;
        b.p = poly_g1_sq();
        b.strict = false;
        b.threshold = 0;
        b.display = "g1 >= 0";
        c.bounds.push_back(b);
        reg.push_back(std::move(c));
    }
    {
        Claim c;
        c.name = "L43_2";
        c.statement = "g2 = 8(u+v-2uv)+4w-5 > 0.1 on 1/2 <= u <= cos^2(pi/8), u <= v <= w <= 1 "
                      "(squared variables of cos(pi/4) <= x <= cos(pi/8), x <= y <= z <= 1)";
        c.var_names = {"u", "v", "w"};
        c.region = box_region(Interval(0.5, c8sq.hi), Interval(0.5, 1.0), Interval(0.5, 1.0),
                              {0, 1, 2});
        ClaimBound b;
        b.p = poly_g2_sq();
        b.strict = true;
        b.threshold = Rational(1, 10);
        b.display = "g2 > 1/10";
        c.bounds.push_back(b);
        reg.push_back(std::move(c));
    }
    {
        Claim c;
        c.name = "L43_3";
        c.statement = "g3(y,z) = -27(4S-3)^2 - 54(4S-3) + 52(8xyz)^2 - 27 > 296 "
                      "for x pinned to cos(pi/9), cos(pi/9) <= y <= z <= 1";
        c.region = chain9;
        ClaimBound b;
        b.p = poly_g3();
        b.strict = true;
        b.threshold = 296;
        b.display = "g3 > 296";
        c.bounds.push_back(b);
        reg.push_back(std::move(c));
    }
    {
        Claim c;
        c.name = "L43_4";
        c.statement = "g4(y,z) = 2(z^2+4x^2y^2-1) - (4S-3) - (79-50*sqrt(10))/169 < -0.9 "
                      "for x pinned to cos(pi/9), cos(pi/9) <= y <= z <= 1";
        c.region = chain9;
        ClaimBound b;
        // -g4 = (A - 2(z^2+4x^2y^2-1)) + (79-50 sqrt 10)/169; prove the
        // polynomial part above 9/10 - lo(enclosure of the constant)
        b.p = poly_neg_g4_core();
        b.strict = true;
        b.threshold = Rational(9, 10) - rational_from_double(x1_root.lo);
        b.report_scale = -1.0;
        b.report_offset = -x1_root;
        b.display = "g4 < -9/10";
        c.bounds.push_back(b);
        reg.push_back(std::move(c));
    }
    {
        Claim c;
        c.name = "L43_5";
        c.statement = "g5(y,z) = 25((4xyz)^2-(z^2+4x^2y^2-1)^2) - 27(2y^2(1-2x^2)+2x^2+z^2)^2 > 0.2 "
                      "for x pinned to cos(pi/9), cos(pi/9) <= y <= z <= 1";
        c.region = chain9;
        ClaimBound b;
        b.p = poly_g5();
        b.strict = true;
        b.threshold = Rational(1, 5);
        b.display = "g5 > 1/5";
        c.bounds.push_back(b);
        reg.push_back(std::move(c));
    }
    {
        Claim c;
        c.name = "ineq_4_2";
        c.statement = "8*cos^2(pi/14) - 3 > 0";
        c.region = slab_region_1var(c14);
        ClaimBound b;
        b.p = 8 * (X() * X()) - 3;
        b.strict = true;
        b.threshold = 0;
        b.display = "8x^2-3 > 0 at x = cos(pi/14)";
        c.bounds.push_back(b);
        reg.push_back(std::move(c));
    }
    {
        Claim c;
        c.name = "x0_gap";
        c.statement = "2(12*cos^2(pi/14) - 3) - 8 > 8.8";
        c.region = slab_region_1var(c14);
        ClaimBound b;
        b.p = 24 * (X() * X()) - 14;
        b.strict = true;
        b.threshold = Rational(44, 5);
        b.display = "24x^2-14 > 44/5 at x = cos(pi/14)";
        c.bounds.push_back(b);
        reg.push_back(std::move(c));
    }
    {
        Claim c;
        c.name = "x2_gap";
        c.statement = "-50(12*cos^2(pi/9) - 3) + 210 < 0";
        c.region = slab_region_1var(c9);
        ClaimBound b;
        b.p = 600 * (X() * X()) - 360;
        b.strict = true;
        b.threshold = 0;
        b.report_scale = -1.0;
        b.display = "-50(12x^2-3)+210 < 0 at x = cos(pi/9)";
        c.bounds.push_back(b);
        reg.push_back(std::move(c));
    }
    return reg;
}

} // namespace

const std::vector<Claim>& registry() {
    static const std::vector<Claim> reg = build_registry();
    return reg;
}

const Claim& find_claim(const std::string& name) {
    for (const auto& c : registry())
        if (c.name == name) return c;
    throw UnknownClaim("no registered claim named '" + name + "'");
}

namespace {

Interval report_from_bound(const ClaimBound& b, const Interval& bound) {
    Interval scaled = (b.report_scale < 0) ? Interval(-bound.hi, -bound.lo) : bound;
    return scaled + b.report_offset;
}

ClaimResult run_deduction_sqrt(const Claim& c, ClaimMethod method, const ProveOptions& opts) {
    ClaimResult res;
    res.name = c.name;
    res.statement = c.statement;
    res.deduction = true;
    // needs the enclosing claim first
    ClaimResult base = run_claim("L41_1", method, opts);
    if (!base.proved) {
        res.proved = false;
        res.note = "prerequisite L41_1 not proved";
        return res;
    }
    const Interval range(31.0, 52.0);
    const Interval root = interval_sqrt(range);
    const bool ok = rational_from_double(root.lo) > Rational(11, 2) &&
                    rational_from_double(root.hi) < Rational(73, 10);
    res.proved = ok;
    BoundResult br;
    br.display = "sqrt([31,52]) within (5.5, 7.3)";
    br.proved = ok;
    br.reported = root;
    res.bounds.push_back(br);
    res.note = "deduced from L41_1 via the interval square root " + interval_to_string(root);
    return res;
}

} // namespace

ClaimResult run_claim_on(const Claim& c, ClaimMethod method, const ProveOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    ClaimResult res;
    res.name = c.name;
    res.statement = c.statement;
    res.proved = true;
    for (const auto& b : c.bounds) {
        BoundResult br;
        br.display = b.display;
        bool ok = true;
        if (method == ClaimMethod::Monotone || method == ClaimMethod::Both) {
            br.ran_monotone = true;
            br.monotone = monotone_corner_bound(b.p, c.region, b.threshold, b.strict, c.plan,
                                                opts.want_certificate);
            ok = ok && br.monotone.status == ProofStatus::Proved;
            br.reported = report_from_bound(b, br.monotone.bound);
        }
        if (method == ClaimMethod::BnB || method == ClaimMethod::Both) {
            br.ran_bnb = true;
            br.bnb = prove_positive(b.p, c.region, b.threshold, b.strict, opts);
            ok = ok && br.bnb.status == ProofStatus::Proved;
            if (!br.ran_monotone) br.reported = report_from_bound(b, br.bnb.bound);
        }
        br.proved = ok;
        res.proved = res.proved && ok;
        res.bounds.push_back(std::move(br));
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

ClaimResult run_claim(const std::string& name, ClaimMethod method, const ProveOptions& opts) {
    const Claim& c = find_claim(name);
    if (c.deduction) return run_deduction_sqrt(c, method, opts);
    return run_claim_on(c, method, opts);
}

std::string method_to_string(ClaimMethod m) {
    switch (m) {
        case ClaimMethod::Monotone: return "monotone";
        case ClaimMethod::BnB: return "bnb";
        case ClaimMethod::Both: return "both";
    }
    return "?";
}

} // namespace trigroup
