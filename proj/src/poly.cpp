#include "trigroup/poly.hpp"

#include "trigroup/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace trigroup {

namespace {

bool exp_less(const std::array<int, 3>& a, const std::array<int, 3>& b) {
    return a < b;
}

} // namespace

void Poly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return exp_less(a.e, b.e); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().e == t.e) {
            out.back().c += t.c;
        } else {
            out.push_back(std::move(t));
        }
    }
    terms_.clear();
    for (auto& t : out) {
        if (t.c != 0) {
            t.c_iv = interval_from_rational(t.c);
            terms_.push_back(std::move(t));
        }
    }
}

Poly poly_from_terms(std::vector<Poly::Term> raw) {
    Poly p;
    p.terms_ = std::move(raw);
    p.normalize();
    return p;
}

Poly Poly::constant(const Rational& c) {
    std::vector<Term> t;
    if (c != 0) t.push_back({{0, 0, 0}, c, Interval()});
    return poly_from_terms(std::move(t));
}

Poly Poly::constant(long long c) { return constant(Rational(c)); }

Poly Poly::variable(int slot) {
    if (slot < 0 || slot > 2) throw VariableMismatch("Poly::variable: slot out of range");
    std::array<int, 3> e{};
    e[static_cast<std::size_t>(slot)] = 1;
    std::vector<Term> t;
    t.push_back({e, Rational(1), Interval()});
    return poly_from_terms(std::move(t));
}

bool Poly::uses_var(int slot) const {
    for (const auto& t : terms_)
        if (t.e[static_cast<std::size_t>(slot)] > 0) return true;
    return false;
}

int Poly::degree() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.e[0] + t.e[1] + t.e[2]);
    return d;
}

int Poly::degree_in(int slot) const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.e[static_cast<std::size_t>(slot)]);
    return d;
}

Poly Poly::operator-() const {
    std::vector<Term> t = terms_;
    for (auto& term : t) term.c = -term.c;
    return poly_from_terms(std::move(t));
}

Poly& Poly::operator+=(const Poly& other) {
    std::vector<Term> t = terms_;
    t.insert(t.end(), other.terms_.begin(), other.terms_.end());
    *this = poly_from_terms(std::move(t));
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    std::vector<Term> t = terms_;
    for (const auto& o : other.terms_) t.push_back({o.e, -o.c, Interval()});
    *this = poly_from_terms(std::move(t));
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    std::vector<Poly::Term> t;
    t.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_) {
            std::array<int, 3> e{ta.e[0] + tb.e[0], ta.e[1] + tb.e[1], ta.e[2] + tb.e[2]};
            t.push_back({e, ta.c * tb.c, Interval()});
        }
    return poly_from_terms(std::move(t));
}

bool Poly::operator==(const Poly& other) const {
    if (terms_.size() != other.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].e != other.terms_[i].e || terms_[i].c != other.terms_[i].c) return false;
    return true;
}

Poly Poly::partial(int slot, bool strict) const {
    if (slot < 0 || slot > 2) throw VariableMismatch("Poly::partial: slot out of range");
    if (strict && !uses_var(slot)) throw VariableMismatch("Poly::partial: polynomial does not use this variable");
    const auto s = static_cast<std::size_t>(slot);
    std::vector<Term> t;
    for (const auto& term : terms_) {
        if (term.e[s] == 0) continue;
        Term d = term;
        d.c = term.c * term.e[s];
        d.e[s] -= 1;
        t.push_back(std::move(d));
    }
    return poly_from_terms(std::move(t));
}

Poly Poly::pow(unsigned n) const {
    Poly r = Poly::constant(1);
    for (unsigned i = 0; i < n; ++i) r = r * (*this);
    return r;
}

Poly Poly::substitute_var(int from, int to) const {
    const auto f = static_cast<std::size_t>(from);
    const auto g = static_cast<std::size_t>(to);
    std::vector<Term> t = terms_;
    for (auto& term : t) {
        term.e[g] += term.e[f];
        term.e[f] = 0;
    }
    return poly_from_terms(std::move(t));
}

Poly Poly::substitute_point(int slot, const Rational& value) const {
    const auto s = static_cast<std::size_t>(slot);
    std::vector<Term> t;
    for (const auto& term : terms_) {
        Term n = term;
        Rational scale(1);
        for (int k = 0; k < term.e[s]; ++k) scale *= value;
        n.c = term.c * scale;
        n.e[s] = 0;
        t.push_back(std::move(n));
    }
    return poly_from_terms(std::move(t));
}

namespace {

// Recursive Horner over the slots: terms must be sorted lexicographically
// by exponent triple, which groups by slot-0 exponent first.
Interval eval_rec_interval(const Poly::Term* begin, const Poly::Term* end, int slot,
                           const std::array<Interval, 3>& box) {
    if (begin == end) return Interval(0.0);
    if (slot == 3) {
        // all exponents consumed; at most one term remains
        Interval sum(0.0);
        for (const Poly::Term* t = begin; t != end; ++t) sum = sum + t->c_iv;
        return sum;
    }
    const auto s = static_cast<std::size_t>(slot);
    // collect coefficient polynomials grouped by descending exponent in slot
    struct Group {
        int exp;
        const Poly::Term* b;
        const Poly::Term* e;
    };
    std::vector<Group> groups;
    const Poly::Term* g = begin;
    while (g != end) {
        const Poly::Term* h = g;
        while (h != end && h->e[s] == g->e[s]) ++h;
        groups.push_back({g->e[s], g, h});
        g = h;
    }
    // terms are sorted ascending; walk groups from the highest exponent down
    Interval acc = eval_rec_interval(groups.back().b, groups.back().e, slot + 1, box);
    int cur = groups.back().exp;
    for (auto it = groups.rbegin() + 1; it != groups.rend(); ++it) {
        acc = acc * interval_pow(box[s], static_cast<unsigned>(cur - it->exp));
        acc = acc + eval_rec_interval(it->b, it->e, slot + 1, box);
        cur = it->exp;
    }
    if (cur > 0) acc = acc * interval_pow(box[s], static_cast<unsigned>(cur));
    return acc;
}

Rational eval_rec_exact(const Poly::Term* begin, const Poly::Term* end, int slot,
                        const std::array<Rational, 3>& pt) {
    if (begin == end) return Rational(0);
    if (slot == 3) {
        Rational sum(0);
        for (const Poly::Term* t = begin; t != end; ++t) sum += t->c;
        return sum;
    }
    const auto s = static_cast<std::size_t>(slot);
    struct Group {
        int exp;
        const Poly::Term* b;
        const Poly::Term* e;
    };
    std::vector<Group> groups;
    const Poly::Term* g = begin;
    while (g != end) {
        const Poly::Term* h = g;
        while (h != end && h->e[s] == g->e[s]) ++h;
        groups.push_back({g->e[s], g, h});
        g = h;
    }
    Rational acc = eval_rec_exact(groups.back().b, groups.back().e, slot + 1, pt);
    int cur = groups.back().exp;
    for (auto it = groups.rbegin() + 1; it != groups.rend(); ++it) {
        for (int k = 0; k < cur - it->exp; ++k) acc *= pt[s];
        acc += eval_rec_exact(it->b, it->e, slot + 1, pt);
        cur = it->exp;
    }
    for (int k = 0; k < cur; ++k) acc *= pt[s];
    return acc;
}

} // namespace

Interval Poly::eval_interval(const std::array<Interval, 3>& box) const {
    if (terms_.empty()) return Interval(0.0);
    return eval_rec_interval(terms_.data(), terms_.data() + terms_.size(), 0, box);
}

Rational Poly::eval_exact(const std::array<Rational, 3>& point) const {
    if (terms_.empty()) return Rational(0);
    return eval_rec_exact(terms_.data(), terms_.data() + terms_.size(), 0, point);
}

std::string Poly::to_string(const std::array<std::string, 3>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest degree first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& t = *it;
        if (!first) os << (t.c > 0 ? " + " : " - ");
        else if (t.c < 0) os << "-";
        Rational a = t.c > 0 ? t.c : Rational(-t.c);
        bool printed_coeff = false;
        if (a != 1 || (t.e[0] == 0 && t.e[1] == 0 && t.e[2] == 0)) {
            os << rational_to_string(a);
            printed_coeff = true;
        }
        for (std::size_t s = 0; s < 3; ++s) {
            if (t.e[s] == 0) continue;
            if (printed_coeff) os << "*";
            os << names[s];
            if (t.e[s] > 1) os << "^" << t.e[s];
            printed_coeff = true;
        }
        first = false;
    }
    return os.str();
}

Poly operator*(const Rational& s, const Poly& p) { return Poly::constant(s) * p; }
Poly operator*(long long s, const Poly& p) { return Poly::constant(s) * p; }
Poly operator+(const Poly& p, long long c) { return p + Poly::constant(c); }
Poly operator+(long long c, const Poly& p) { return p + Poly::constant(c); }
Poly operator-(const Poly& p, long long c) { return p - Poly::constant(c); }
Poly operator-(long long c, const Poly& p) { return Poly::constant(c) - p; }

} // namespace trigroup
