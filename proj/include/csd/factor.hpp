#pragma once

#include <vector>

#include "csd/lattice.hpp"
#include "csd/pbc.hpp"

namespace csd {

// One factor Psi[vector]^(exponent) of a symbolic product; the exponent is a
// PBC in the seed exponents (m, n).
struct Factor {
    Vec vector;
    Pbc exponent;
};

using FactorList = std::vector<Factor>;

} // namespace csd
