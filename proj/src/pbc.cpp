#include "csd/pbc.hpp"

#include <algorithm>

namespace csd {

Pbc Pbc::constant(const Rational& c) {
    Pbc f;
    f.set_coeff(0, 0, c);
    return f;
}

Pbc Pbc::basis(long k, long l) {
    if (k < 0 || l < 0) throw PreconditionError("Pbc::basis: indices must be nonnegative");
    Pbc f;
    f.set_coeff(k, l, 1);
    return f;
}

Rational Pbc::coeff(long k, long l) const {
    auto it = terms_.find({k, l});
    return it == terms_.end() ? Rational(0) : it->second;
}

void Pbc::set_coeff(long k, long l, const Rational& c) {
    if (k < 0 || l < 0) throw PreconditionError("Pbc::set_coeff: indices must be nonnegative");
    if (c == 0)
        terms_.erase({k, l});
    else
        terms_[{k, l}] = c;
}

bool Pbc::has_integer_coeffs() const {
    for (const auto& [key, c] : terms_)
        if (!is_integer(c)) return false;
    return true;
}

bool Pbc::has_nonneg_coeffs() const {
    for (const auto& [key, c] : terms_)
        if (c < 0) return false;
    return true;
}

long Pbc::deg_m() const {
    long d = -1;
    for (const auto& [key, c] : terms_) d = std::max(d, key.first);
    return d;
}

long Pbc::deg_n() const {
    long d = -1;
    for (const auto& [key, c] : terms_) d = std::max(d, key.second);
    return d;
}

Rational Pbc::eval(const Int& m, const Int& n) const {
    Rational acc = 0;
    for (const auto& [key, c] : terms_)
        acc += c * Rational(binomial(m, key.first) * binomial(n, key.second));
    return acc;
}

Pbc& Pbc::operator+=(const Pbc& g) {
    for (const auto& [key, c] : g.terms_) {
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Pbc& Pbc::operator-=(const Pbc& g) {
    for (const auto& [key, c] : g.terms_) {
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, -c);
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Pbc& Pbc::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto& [key, v] : terms_) v *= c;
    }
    return *this;
}

Pbc Pbc::operator-() const {
    Pbc f = *this;
    for (auto& [key, v] : f.terms_) v = -v;
    return f;
}

namespace {

// Expansion of C(m, s) C(m, r) in the basis {C(m, k)}:
//   C(m, s) C(m, r) = sum_{max(s,r) <= k <= s+r} C(s, k-r) C(k, s) C(m, k).
// Memoized; coefficients are plain integers.
const std::vector<std::pair<long, Int>>& basis_product(long s, long r) {
    static std::map<std::pair<long, long>, std::vector<std::pair<long, Int>>> cache;
    if (s < r) std::swap(s, r);
    auto it = cache.find({s, r});
    if (it != cache.end()) return it->second;
    std::vector<std::pair<long, Int>> expansion;
    for (long k = s; k <= s + r; ++k)
        expansion.emplace_back(k, binomial(s, k - r) * binomial(k, s));
    return cache.emplace(std::make_pair(s, r), std::move(expansion)).first->second;
}

} // namespace

Pbc operator*(const Pbc& f, const Pbc& g) {
    Pbc out;
    for (const auto& [kf, cf] : f.terms()) {
        for (const auto& [kg, cg] : g.terms()) {
            Rational c = cf * cg;
            for (const auto& [km, cm] : basis_product(kf.first, kg.first))
                for (const auto& [kn, cn] : basis_product(kf.second, kg.second))
                    out.set_coeff(km, kn, out.coeff(km, kn) + c * Rational(cm * cn));
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Pbc& f) {
    if (f.is_zero()) return os << "0";
    bool first = true;
    for (const auto& [key, c] : f.terms()) {
        if (!first) os << " + ";
        first = false;
        os << c << "*C(m," << key.first << ")C(n," << key.second << ")";
    }
    return os;
}

Pbc binom_of(const Pbc& f, long a) {
    if (a < 0) throw PreconditionError("binom_of: order must be nonnegative");
    if (!f.has_integer_coeffs() || !f.has_nonneg_coeffs())
        throw PreconditionError("binom_of: argument must have nonnegative integer coefficients");
    // C(f, a+1) = (f - a) C(f, a) / (a + 1), starting from C(f, 0) = 1.
    Pbc acc = Pbc::constant(1);
    for (long i = 0; i < a; ++i) {
        acc = (f - Pbc::constant(i)) * acc;
        acc *= Rational(1, i + 1);
    }
    return acc;
}

Pbc substitute(const Pbc& u, const Pbc& f, const Pbc& g) {
    // Memoize the binomials of the two arguments across the terms of u.
    std::map<long, Pbc> bf, bg;
    auto get = [](std::map<long, Pbc>& cache, const Pbc& h, long k) -> const Pbc& {
        auto it = cache.find(k);
        if (it != cache.end()) return it->second;
        return cache.emplace(k, binom_of(h, k)).first->second;
    };
    Pbc out;
    for (const auto& [key, c] : u.terms())
        out += c * (get(bf, f, key.first) * get(bg, g, key.second));
    return out;
}

Pbc prefix_sum_m(const Pbc& f) {
    Pbc out;
    for (const auto& [key, c] : f.terms())
        out.set_coeff(key.first + 1, key.second, out.coeff(key.first + 1, key.second) + c);
    return out;
}

Pbc prefix_sum_n(const Pbc& f) {
    Pbc out;
    for (const auto& [key, c] : f.terms())
        out.set_coeff(key.first, key.second + 1, out.coeff(key.first, key.second + 1) + c);
    return out;
}

Pbc shift_m(const Pbc& f) {
    // C(m+1, k) = C(m, k) + C(m, k-1)
    Pbc out;
    for (const auto& [key, c] : f.terms()) {
        out.set_coeff(key.first, key.second, out.coeff(key.first, key.second) + c);
        if (key.first >= 1)
            out.set_coeff(key.first - 1, key.second, out.coeff(key.first - 1, key.second) + c);
    }
    return out;
}

Pbc shift_n(const Pbc& f) {
    Pbc out;
    for (const auto& [key, c] : f.terms()) {
        out.set_coeff(key.first, key.second, out.coeff(key.first, key.second) + c);
        if (key.second >= 1)
            out.set_coeff(key.first, key.second - 1, out.coeff(key.first, key.second - 1) + c);
    }
    return out;
}

Pbc eval_n(const Pbc& f, const Int& n0) {
    Pbc out;
    for (const auto& [key, c] : f.terms())
        out.set_coeff(key.first, 0, out.coeff(key.first, 0) + c * Rational(binomial(n0, key.second)));
    return out;
}

Pbc eval_m(const Pbc& f, const Int& m0) {
    Pbc out;
    for (const auto& [key, c] : f.terms())
        out.set_coeff(0, key.second, out.coeff(0, key.second) + c * Rational(binomial(m0, key.first)));
    return out;
}

} // namespace csd
