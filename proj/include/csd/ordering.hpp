#pragma once

#include <map>
#include <utility>

#include "csd/factor.hpp"
#include "csd/lattice.hpp"
#include "csd/pbc.hpp"

namespace csd {

// Wall exponents u_{(a,b)}(m, n) of the ordered product, complete for all
// walls of degree a + b <= max_degree. Keys are (a, b); the two initial
// walls (1,0), (0,1) are always present.
struct ExponentTable {
    int max_degree = 0;
    std::map<std::pair<long, long>, Pbc> entries;

    bool contains(const Vec& v) const { return entries.count({v.a, v.b}) != 0; }
    // Exponent of a wall within the covered degree range; zero PBC when the
    // wall carries no factor. Out-of-range lookups throw.
    Pbc lookup(const Vec& v) const;
};

// Degree-2 table: u_(1,0) = C(m,1), u_(0,1) = C(n,1), u_(1,1) = C(m,1)C(n,1).
ExponentTable seed_table();

// Extend a table complete to degree l to degree l + 1.
ExponentTable advance_degree(const ExponentTable& table);

// Seed table advanced to the requested degree (>= 2).
ExponentTable compute_table(int max_degree);

// Split C into (non_ordered, ordered): the ordered part is the maximal
// strictly increasing tail every factor of which exceeds all factors of the
// head; empty when no such tail exists.
std::pair<FactorList, FactorList> split_parts(const FactorList& c);

// Rewrite the anti-ordered adjacent pair Psi[x]^{fx} Psi[a]^{fa} (x > a) as
// an equivalent product mod G^{> l+1}: [a, middle..., x] with the middle in
// increasing order. Requires a table complete to degree l (degree l + 1 when
// x, a are the two initial walls).
FactorList rewrite_pair(const Factor& x, const Factor& a, const ExponentTable& table, int l);

// Move every occurrence of Psi[xy] to the right end of the list, merging
// them into a single factor, mod G^{> l+1}. Requires that no factor of the
// list exceeds xy.
FactorList push_out(FactorList list, const Vec& xy, const ExponentTable& table, int l);

// Full ordering of a product mod G^{> l+1}. Factors must have degree
// <= l + 1; the result is strictly increasing.
FactorList order_product_mod(FactorList list, const ExponentTable& table, int l);

// The symbolic ordered product the table encodes, smallest factor first.
FactorList table_to_factor_list(const ExponentTable& table);

} // namespace csd
