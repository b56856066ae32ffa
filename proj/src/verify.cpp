#include "csd/verify.hpp"

#include <sstream>

#include "csd/errors.hpp"
#include "csd/formulas.hpp"
#include "csd/series.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace csd {

namespace {

bool oracle_point(const FactorList& ordered, long m, long n, int cutoff) {
    TruncatedAutomorphism lhs =
        compose(psi({0, 1}, Rational(n), cutoff), psi({1, 0}, Rational(m), cutoff));
    TruncatedAutomorphism rhs = eval_factor_list(ordered, m, n, cutoff);
    return equal_mod(lhs, rhs);
}

void check_oracle_args(const ExponentTable& table, long grid, int level) {
    if (grid < 0) throw PreconditionError("oracle grid bound must be nonnegative");
    if (level < 1 || level > table.max_degree)
        throw PreconditionError("oracle level must satisfy 1 <= level <= table degree");
}

std::string point_str(long m, long n) {
    return "(m,n) = (" + std::to_string(m) + "," + std::to_string(n) + ")";
}

} // namespace

std::optional<std::string> oracle_grid_check_serial(const ExponentTable& table, long grid,
                                                    int level) {
    check_oracle_args(table, grid, level);
    const FactorList ordered = table_to_factor_list(table);
    for (long m = 0; m <= grid; ++m)
        for (long n = 0; n <= grid; ++n)
            if (!oracle_point(ordered, m, n, level + 1))
                return "oracle mismatch at " + point_str(m, n);
    return std::nullopt;
}

std::optional<std::string> oracle_grid_check_parallel(const ExponentTable& table, long grid,
                                                      int level) {
    check_oracle_args(table, grid, level);
    const FactorList ordered = table_to_factor_list(table);
    const long side = grid + 1;
    long first_bad = -1;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long idx = 0; idx < side * side; ++idx) {
        bool ok = oracle_point(ordered, idx / side, idx % side, level + 1);
        if (!ok) {
#ifdef _OPENMP
#pragma omp critical
#endif
            {
                if (first_bad < 0 || idx < first_bad) first_bad = idx;
            }
        }
    }
    if (first_bad >= 0)
        return "oracle mismatch at " + point_str(first_bad / side, first_bad % side);
    return std::nullopt;
}

namespace {

// Generalized binomial C(e, j) for rational e.
Rational binomial_rat(const Rational& e, long j) {
    Rational acc = 1;
    for (long i = 0; i < j; ++i) acc *= (e - i) / Rational(i + 1);
    return acc;
}

std::vector<Rational> series_mul(const std::vector<Rational>& f, const std::vector<Rational>& g) {
    std::vector<Rational> out(f.size(), Rational(0));
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; i + j < f.size(); ++j) out[i + j] += f[i] * g[j];
    return out;
}

} // namespace

std::vector<Rational> reineke_table_series(const ExponentTable& table, long delta, int k_max) {
    if (delta < 1) throw PreconditionError("reineke: delta must be positive");
    if (2 * k_max > table.max_degree)
        throw PreconditionError("reineke: degree insufficient, need 2 * k_max <= table degree");
    std::vector<Rational> out(k_max + 1, Rational(0));
    out[0] = 1;
    for (long k = 1; k <= k_max; ++k) {
        Rational e = Rational(k, delta) * table.lookup({k, k}).eval(delta, delta);
        // (1 + t^k)^e = sum_j C(e, j) t^{kj}
        std::vector<Rational> factor(k_max + 1, Rational(0));
        for (long j = 0; k * j <= k_max; ++j) factor[k * j] = binomial_rat(e, j);
        out = series_mul(out, factor);
    }
    return out;
}

std::vector<Rational> reineke_closed_series(long delta, int k_max) {
    if (delta < 1) throw PreconditionError("reineke: delta must be positive");
    std::vector<Rational> base(k_max + 1, Rational(0));
    if (delta == 1) {
        // The closed form hits 0/0 at j = 1; the limit value gives 1 + t.
        base[0] = 1;
        if (k_max >= 1) base[1] = 1;
        return base;
    }
    for (long j = 0; j <= k_max; ++j)
        base[j] = Rational(binomial(Int((delta - 1) * (delta - 1)) * j, j),
                           (delta * delta - 2 * delta) * j + 1);
    std::vector<Rational> out(k_max + 1, Rational(0));
    out[0] = 1;
    for (long i = 0; i < delta; ++i) out = series_mul(out, base);
    return out;
}

std::optional<std::string> reineke_check(const ExponentTable& table, long delta, int k_max) {
    std::vector<Rational> lhs = reineke_table_series(table, delta, k_max);
    std::vector<Rational> rhs = reineke_closed_series(delta, k_max);
    for (int k = 0; k <= k_max; ++k) {
        if (lhs[k] != rhs[k]) {
            std::ostringstream os;
            os << "delta = " << delta << ": coefficient of t^" << k << " differs (table "
               << lhs[k] << ", closed form " << rhs[k] << ")";
            return os.str();
        }
    }
    return std::nullopt;
}

bool appendix_identities_hold(long u_max) {
    for (long u = 0; u <= u_max; ++u) {
        Int lhs_a = weighted_half_sum(u);
        Int rhs_a = Int((u + 1) / 2) * binomial(u, (u + 1) / 2);
        if (lhs_a != rhs_a) return false;
        Rational rhs_b = u == 0 ? Rational(1) : Rational(Int(1) << (u - 1));
        if (u % 2 == 0 && u > 0) rhs_b += Rational(binomial(u, u / 2), 2);
        if (Rational(half_sum(u)) != rhs_b) return false;
    }
    return true;
}

bool kernel_simplifications_hold(long a_max) {
    for (long a = 1; a <= a_max; ++a) {
        for (long k = (a + 1) / 2; k <= a; ++k)
            if (kernel_a_sum(a, k) != kernel_a_brief(a, k)) return false;
        for (long k = (a + 1) / 2 + 1; k <= a; ++k)
            if (kernel_b_alt_sum(a, k) != kernel_b_brief(a, k)) return false;
    }
    return true;
}

std::optional<std::string> inverse_round_trip(const ExponentTable& table) {
    for (const auto& [key, u] : table.entries) {
        if (key.first < 1 || key.second < 1) continue;
        Vec v{key.first, key.second};
        if (!(inverse_formula(v, u) == alpha_matrix(v, u)))
            return "inverse formula disagrees at wall (" + std::to_string(v.a) + "," +
                   std::to_string(v.b) + ")";
    }
    return std::nullopt;
}

std::vector<CheckResult> run_verification(const ExponentTable& table, long grid, int level,
                                          bool parallel) {
    std::vector<CheckResult> report;
    auto add = [&report](const std::string& name, const std::optional<std::string>& bad) {
        report.push_back({name, !bad.has_value(), bad.value_or("")});
    };

    add("oracle consistency", parallel ? oracle_grid_check_parallel(table, grid, level)
                                       : oracle_grid_check_serial(table, grid, level));
    add("reciprocity", check_reciprocity(table));
    add("support and positivity", check_support(table));
    add("lower zero pattern", check_lower_zeros(table));
    add("closed forms (a,1), (1,b), (a,2)", check_closed_forms(table));
    add("inverse formula round trip", inverse_round_trip(table));
    report.push_back({"appendix identities (u <= 50)", appendix_identities_hold(50), ""});
    report.push_back({"kernel simplifications (a <= 30)", kernel_simplifications_hold(30), ""});
    for (long delta = 1; delta <= 3; ++delta) {
        int k_max = table.max_degree / 2;
        add("Reineke cross-check, delta = " + std::to_string(delta),
            reineke_check(table, delta, k_max));
    }
    return report;
}

} // namespace csd
