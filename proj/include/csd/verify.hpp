#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csd/ordering.hpp"
#include "csd/rational.hpp"

namespace csd {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // first counterexample or summary
};

// Compare the table's ordered product with Psi[(0,1)]^n Psi[(1,0)]^m through
// the truncated-automorphism oracle for all 0 <= m, n <= grid, at group
// level `level` (series cutoff level + 1). Returns the first failing point.
// The serial and OpenMP versions compute the same thing; the points are
// independent, so the parallel one fans them out.
std::optional<std::string> oracle_grid_check_serial(const ExponentTable& table, long grid,
                                                    int level);
std::optional<std::string> oracle_grid_check_parallel(const ExponentTable& table, long grid,
                                                      int level);

// Coefficients 0..k_max of prod_k (1 + t^k)^{(k/delta) u_{(k,k)}(delta,delta)}.
std::vector<Rational> reineke_table_series(const ExponentTable& table, long delta, int k_max);
// Coefficients 0..k_max of (sum_j C((delta-1)^2 j, j) / ((delta^2-2delta) j + 1) t^j)^delta;
// for delta = 1 the right side degenerates to 1 + t.
std::vector<Rational> reineke_closed_series(long delta, int k_max);
std::optional<std::string> reineke_check(const ExponentTable& table, long delta, int k_max);

// Appendix summation identities, checked by direct summation.
bool appendix_identities_hold(long u_max);
// Brief kernel expressions against their defining sums, for 1 <= a <= a_max.
bool kernel_simplifications_hold(long a_max);

// Inverse-formula round trip over every wall of the table.
std::optional<std::string> inverse_round_trip(const ExponentTable& table);

// The full property suite of cmd_verify.
std::vector<CheckResult> run_verification(const ExponentTable& table, long grid, int level,
                                          bool parallel);

} // namespace csd
