#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "csd/lattice.hpp"
#include "csd/ordering.hpp"
#include "csd/rational.hpp"

namespace csd {

// One wall evaluated at a concrete (delta1, delta2).
struct WallRecord {
    Vec vector;
    std::pair<long, long> ray; // direction (delta2 * b, -delta1 * a)
    Rational exponent;         // u_{(a,b)}(delta1, delta2)
    bool incoming = false;     // true exactly for the initial walls e1, e2
};

inline constexpr int kTableFormatVersion = 1;

nlohmann::json table_to_json(const ExponentTable& table);
ExponentTable table_from_json(const nlohmann::json& j); // throws CacheCorruptError

std::string table_to_csv(const ExponentTable& table);   // header a,b,i,j,alpha,gcd
std::string table_to_latex(const ExponentTable& table); // one Psi factor per line

// Drop entries above the requested degree (for reproducible output from a
// deeper cache).
ExponentTable truncate_table(const ExponentTable& table, int max_degree);

// Evaluate all walls at (delta1, delta2), dropping zero exponents; sorted by
// the total order on N+.
std::vector<WallRecord> eval_walls(const ExponentTable& table, long delta1, long delta2);

nlohmann::json walls_to_json(const std::vector<WallRecord>& walls);
std::string walls_to_csv(const std::vector<WallRecord>& walls);

// Ray file for external plotting: angles, exponents, incoming flags, and the
// band between the slopes of (delta1, 1) and (1, delta2).
nlohmann::json plot_data_json(const std::vector<WallRecord>& walls, long delta1, long delta2);
std::string plot_data_csv(const std::vector<WallRecord>& walls);

// Write-temp-then-rename.
void atomic_write(const std::filesystem::path& path, const std::string& content);

void save_table(const ExponentTable& table, const std::filesystem::path& path);
ExponentTable load_table(const std::filesystem::path& path); // throws CacheCorruptError

} // namespace csd
