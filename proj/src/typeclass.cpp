#include "trigroup/typeclass.hpp"

#include "trigroup/errors.hpp"
#include "trigroup/isometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace trigroup {

namespace {

// Exact zeros of h at the path boundary (e.g. tau on a deltoid cusp at
// t_max) show up as values of order 1e-15 of either sign; only an excursion
// beyond this guard counts as a strict sign change.
constexpr double kSignGuard = 1e-12;

double h_of_t(double r1, double r2, double r3, double t) {
    const cplx eps{t, std::sqrt(std::max(0.0, 1.0 - t * t))};
    const cplx tau = 8.0 * r1 * r2 * r3 * eps - 4.0 * (r1 * r1 + r2 * r2 + r3 * r3) + 3.0;
    return goldman_f(tau);
}

} // namespace

std::optional<double> onset_WA(double r1, double r2, double r3) {
    const Thresholds th = thresholds(r1, r2, r3);
    if (th.t_WA < th.t_max - 1e-12) return th.t_WA;
    return std::nullopt;
}

std::optional<double> onset_WB(double r1, double r2, double r3, int grid, double tol) {
    if (grid < 1000) throw DomainError("onset_WB: grid must be >= 1000");
    if (!(tol > 0.0)) throw DomainError("onset_WB: tol must be positive");
    const Thresholds th = thresholds(r1, r2, r3);
    if (th.t_max <= -1.0 + 1e-12) return std::nullopt;  // degenerate path

    const double h0 = h_of_t(r1, r2, r3, -1.0);
    if (h0 <= 0.0)
        throw StartNotLoxodromic("onset_WB: h(-1) <= 0; parameters outside the family");

    double prev_t = -1.0;
    double prev_h = h0;
    for (int i = 1; i <= grid; ++i) {
        const double t = -1.0 + (th.t_max + 1.0) * i / grid;
        const double ht = h_of_t(r1, r2, r3, t);
        if (prev_h > 0.0 && ht < -kSignGuard) {
            double a = prev_t, b = t;
            while (b - a > tol) {
                const double m = 0.5 * (a + b);
                if (h_of_t(r1, r2, r3, m) < 0.0)
                    b = m;
                else
                    a = m;
            }
            return 0.5 * (a + b);
        }
        prev_t = t;
        prev_h = ht;
    }
    return std::nullopt;
}

TypeVerdict classify_triple(const TriangleAngles& n, int grid, double tol) {
    TypeVerdict v{TriangleType::NeitherElliptic, 0.0, {}};
    const double r1 = r_of_n(n.n1()), r2 = r_of_n(n.n2()), r3 = r_of_n(n.n3());
    const Thresholds th = thresholds(r1, r2, r3);
    v.report.t_max = th.t_max;
    if (!family_nonempty(n)) {
        v.type = TriangleType::Rigid;
        return v;
    }
    v.report.t_wa_onset = onset_WA(r1, r2, r3);
    v.report.t_wb_onset = onset_WB(r1, r2, r3, grid, tol);
    v.report.bracket_width = tol;

    const auto& wa = v.report.t_wa_onset;
    const auto& wb = v.report.t_wb_onset;
    if (!wa && !wb) {
        v.type = TriangleType::NeitherElliptic;
    } else if (wa && !wb) {
        v.type = TriangleType::TypeA;
    } else if (!wa && wb) {
        v.type = TriangleType::TypeB;
    } else if (*wa < *wb - tol) {
        v.type = TriangleType::TypeA;
    } else if (*wb < *wa - tol) {
        v.type = TriangleType::TypeB;
    } else {
        v.type = TriangleType::Tie;
        v.tie_gap = std::abs(*wa - *wb);
    }
    return v;
}

int default_thread_count() {
    if (const char* env = std::getenv("TRIGROUP_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

std::vector<ScanRow> scan(int n_max, bool include_infinity, int grid, double tol, int threads) {
    if (n_max < 3) throw DomainError("scan: n_max must be >= 3");
    std::vector<TriangleAngles> triples;
    std::vector<int> values;
    for (int n = 3; n <= n_max; ++n) values.push_back(n);
    if (include_infinity) values.push_back(n_infinity);
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i; j < values.size(); ++j)
            for (std::size_t k = j; k < values.size(); ++k)
                triples.emplace_back(values[i], values[j], values[k]);

    std::vector<ScanRow> rows;
    rows.reserve(triples.size());
    for (const auto& t : triples) rows.push_back({t, TypeVerdict{TriangleType::Rigid, 0.0, {}}});

    const int nthreads = threads > 0 ? threads : default_thread_count();
    if (nthreads <= 1 || triples.size() < 32) {
        for (std::size_t i = 0; i < triples.size(); ++i)
            rows[i].verdict = classify_triple(triples[i], grid, tol);
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (triples.size() + static_cast<std::size_t>(nthreads) - 1) /
                            static_cast<std::size_t>(nthreads);
        for (int w = 0; w < nthreads; ++w) {
            const std::size_t lo = static_cast<std::size_t>(w) * chunk;
            const std::size_t hi = std::min(triples.size(), lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back([&, lo, hi] {
                for (std::size_t i = lo; i < hi; ++i)
                    rows[i].verdict = classify_triple(triples[i], grid, tol);
            });
        }
        for (auto& th : pool) th.join();
    }
    return rows;
}

std::string type_to_string(TriangleType t) {
    switch (t) {
        case TriangleType::TypeA: return "A";
        case TriangleType::TypeB: return "B";
        case TriangleType::Rigid: return "Rigid";
        case TriangleType::NeitherElliptic: return "NeitherElliptic";
        case TriangleType::Tie: return "Tie";
    }
    return "?";
}

} // namespace trigroup
