#include "csd/series.hpp"

namespace csd {

TruncatedSeries TruncatedSeries::monomial(int cutoff, long i, long j, const Rational& c) {
    TruncatedSeries s(cutoff);
    s.add_term(i, j, c);
    return s;
}

Rational TruncatedSeries::coeff(long i, long j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rational(0) : it->second;
}

void TruncatedSeries::add_term(long i, long j, const Rational& c) {
    if (i < 0 || j < 0) throw PreconditionError("TruncatedSeries: negative exponent");
    if (i + j > cutoff_ || c == 0) return;
    auto it = terms_.find({i, j});
    if (it == terms_.end()) {
        terms_.emplace(std::make_pair(i, j), c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& g) {
    if (cutoff_ != g.cutoff_) throw PreconditionError("TruncatedSeries: cutoff mismatch");
    for (const auto& [key, c] : g.terms_) add_term(key.first, key.second, c);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto& [key, v] : terms_) v *= c;
    }
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (f.cutoff() != g.cutoff()) throw PreconditionError("TruncatedSeries: cutoff mismatch");
    TruncatedSeries out(f.cutoff());
    for (const auto& [kf, cf] : f.terms()) {
        if (kf.first + kf.second > f.cutoff()) continue;
        for (const auto& [kg, cg] : g.terms())
            out.add_term(kf.first + kg.first, kf.second + kg.second, cf * cg);
    }
    return out;
}

TruncatedAutomorphism identity_automorphism(int cutoff) {
    return {cutoff, TruncatedSeries::monomial(cutoff, 1, 0),
            TruncatedSeries::monomial(cutoff, 0, 1)};
}

TruncatedSeries apply(const TruncatedAutomorphism& g, const TruncatedSeries& s) {
    if (g.cutoff != s.cutoff()) throw PreconditionError("apply: cutoff mismatch");
    // Powers of the images, computed on demand.
    std::vector<TruncatedSeries> pow1{TruncatedSeries::monomial(g.cutoff, 0, 0)};
    std::vector<TruncatedSeries> pow2{TruncatedSeries::monomial(g.cutoff, 0, 0)};
    auto power = [&](std::vector<TruncatedSeries>& cache, const TruncatedSeries& base,
                     long e) -> const TruncatedSeries& {
        while ((long)cache.size() <= e) cache.push_back(cache.back() * base);
        return cache[e];
    };
    TruncatedSeries out(g.cutoff);
    for (const auto& [key, c] : s.terms())
        out += power(pow1, g.image1, key.first) * power(pow2, g.image2, key.second) * c;
    return out;
}

TruncatedAutomorphism compose(const TruncatedAutomorphism& g, const TruncatedAutomorphism& h) {
    if (g.cutoff != h.cutoff) throw PreconditionError("compose: cutoff mismatch");
    return {g.cutoff, apply(g, h.image1), apply(g, h.image2)};
}

namespace {

// c * sum_{j>=1} (-1)^{j+1}/j^2 X_{jn} applied to s.
TruncatedSeries dilog_derivation(const Vec& n, const Rational& c, const TruncatedSeries& s) {
    TruncatedSeries out(s.cutoff());
    for (const auto& [key, cw] : s.terms()) {
        for (long j = 1; j * n.degree() + key.first + key.second <= s.cutoff(); ++j) {
            long sk = skew_form({j * n.a, j * n.b}, {key.first, key.second});
            if (sk == 0) continue;
            Rational coef = c * cw * Rational((j % 2 == 1) ? 1 : -1, j) * Rational(sk, j);
            out.add_term(key.first + j * n.a, key.second + j * n.b, coef);
        }
    }
    return out;
}

TruncatedSeries exp_derivation(const Vec& n, const Rational& c, const TruncatedSeries& s) {
    TruncatedSeries out = s;
    TruncatedSeries term = s;
    // Each application raises total degree by at least deg(n) >= 1, so the
    // series terminates within cutoff steps.
    for (long k = 1; k <= s.cutoff(); ++k) {
        term = dilog_derivation(n, c, term);
        term *= Rational(1, k);
        if (term.terms().empty()) break;
        out += term;
    }
    return out;
}

} // namespace

TruncatedAutomorphism psi(const Vec& n, const Rational& c, int cutoff) {
    if (!n.in_nplus()) throw PreconditionError("psi: vector must lie in N+");
    TruncatedSeries x1 = TruncatedSeries::monomial(cutoff, 1, 0);
    TruncatedSeries x2 = TruncatedSeries::monomial(cutoff, 0, 1);
    return {cutoff, exp_derivation(n, c, x1), exp_derivation(n, c, x2)};
}

bool equal_mod(const TruncatedAutomorphism& g, const TruncatedAutomorphism& h) {
    if (g.cutoff != h.cutoff) throw PreconditionError("equal_mod: cutoff mismatch");
    return g.image1 == h.image1 && g.image2 == h.image2;
}

TruncatedAutomorphism eval_factor_list(const FactorList& factors, const Int& m, const Int& n,
                                       int cutoff) {
    TruncatedAutomorphism acc = identity_automorphism(cutoff);
    for (const Factor& f : factors) {
        Rational c = f.exponent.eval(m, n);
        if (c == 0) continue;
        acc = compose(acc, psi(f.vector, c, cutoff));
    }
    return acc;
}

} // namespace csd
