#ifndef TRIGROUP_TYPECLASS_HPP
#define TRIGROUP_TYPECLASS_HPP

#include "trigroup/triangle.hpp"

#include <optional>
#include <string>
#include <vector>

namespace trigroup {

// Onsets of regular ellipticity along the canonical path [-1, t_max].
struct OnsetReport {
    std::optional<double> t_wa_onset;
    std::optional<double> t_wb_onset;
    double t_max = 0.0;
    double bracket_width = 0.0;  // resolution of the bisection for t_wb_onset
};

enum class TriangleType { TypeA, TypeB, Rigid, NeitherElliptic, Tie };

struct TypeVerdict {
    TriangleType type;
    double tie_gap;  // |onset difference| when type == Tie, else 0
    OnsetReport report;
};

// Closed-form onset of the short word: t_WA when it is strictly inside the
// path, none otherwise (no search involved).
std::optional<double> onset_WA(double r1, double r2, double r3);

// Grid scan of h(t) = goldman_f(trace_WB(t)) over [-1, t_max], refined by
// bisection to width tol on the first strict sign change. Returns none when
// no strict sign change occurs (grazing the deltoid does not count).
// Throws StartNotLoxodromic when h(-1) <= 0 on a nondegenerate path.
std::optional<double> onset_WB(double r1, double r2, double r3, int grid = 10000,
                               double tol = 1e-9);

TypeVerdict classify_triple(const TriangleAngles& n, int grid = 10000, double tol = 1e-9);

struct ScanRow {
    TriangleAngles angles;
    TypeVerdict verdict;
};

// One row per sorted triple 3 <= n1 <= n2 <= n3 <= n_max (plus infinity
// slots when requested), in lexicographic order regardless of the thread
// schedule. threads = 0 picks a default from the environment.
std::vector<ScanRow> scan(int n_max, bool include_infinity, int grid = 10000,
                          double tol = 1e-9, int threads = 0);

std::string type_to_string(TriangleType t);

// Honors the TRIGROUP_THREADS environment variable; falls back to the
// hardware concurrency.
int default_thread_count();

} // namespace trigroup

#endif
