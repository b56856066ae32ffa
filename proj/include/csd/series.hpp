#pragma once

#include <map>
#include <utility>

#include "csd/errors.hpp"
#include "csd/factor.hpp"
#include "csd/lattice.hpp"
#include "csd/rational.hpp"

namespace csd {

// Element of Q[[x1, x2]] / (total degree > cutoff), stored sparsely.
class TruncatedSeries {
public:
    using Key = std::pair<long, long>; // exponents of (x1, x2)
    using Terms = std::map<Key, Rational>;

    explicit TruncatedSeries(int cutoff) : cutoff_(cutoff) {
        if (cutoff < 0) throw PreconditionError("TruncatedSeries: cutoff must be nonnegative");
    }

    static TruncatedSeries monomial(int cutoff, long i, long j, const Rational& c = 1);

    int cutoff() const { return cutoff_; }
    const Terms& terms() const { return terms_; }
    Rational coeff(long i, long j) const;
    void add_term(long i, long j, const Rational& c); // accumulate, drop beyond cutoff

    TruncatedSeries& operator+=(const TruncatedSeries& g);
    TruncatedSeries& operator*=(const Rational& c);
    friend TruncatedSeries operator+(TruncatedSeries f, const TruncatedSeries& g) { return f += g; }
    friend TruncatedSeries operator*(TruncatedSeries f, const Rational& c) { return f *= c; }
    friend TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g);
    friend bool operator==(const TruncatedSeries& f, const TruncatedSeries& g) {
        return f.cutoff_ == g.cutoff_ && f.terms_ == g.terms_;
    }

private:
    int cutoff_;
    Terms terms_;
};

// Automorphism of the truncated ring, recorded by the images of x1, x2.
struct TruncatedAutomorphism {
    int cutoff;
    TruncatedSeries image1;
    TruncatedSeries image2;
};

TruncatedAutomorphism identity_automorphism(int cutoff);

// g applied to a series: substitute the images of x1, x2.
TruncatedSeries apply(const TruncatedAutomorphism& g, const TruncatedSeries& s);

// Composite "apply h, then g", so products act on the left:
// a list f1 f2 ... fk acts as f1(f2(...fk(s))).
TruncatedAutomorphism compose(const TruncatedAutomorphism& g, const TruncatedAutomorphism& h);

// Psi[n]^c = exp(c sum_{j>=1} (-1)^{j+1}/j^2 X_{jn}), where the derivation
// acts by X_p(x^w) = {p, w} x^{p+w}.
TruncatedAutomorphism psi(const Vec& n, const Rational& c, int cutoff);

bool equal_mod(const TruncatedAutomorphism& g, const TruncatedAutomorphism& h);

// Evaluate the exponents of a symbolic product at (m, n) and compose the
// resulting dilogarithm automorphisms left to right.
TruncatedAutomorphism eval_factor_list(const FactorList& factors, const Int& m, const Int& n,
                                       int cutoff);

} // namespace csd
