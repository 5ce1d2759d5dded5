#pragma once

#include "permutation.hpp"
#include "rational.hpp"

namespace cacti {

/// 1/|Sym|-weighted number of cacti with the given passport: counts tuples
/// (sigma_1..sigma_k) on {1..n}, cycle type of sigma_i = X_i padded by fixed
/// points, with product the fixed cycle (1 2 ... n); returns count/n.
Rational weighted_cactus_count(const Passport& x);

/// Sum over genus-g, p-face constellations with passport X of 1/|Sym|:
/// transitive tuples with the padded cycle types whose sigma_inf has exactly p
/// cycles, divided by n!.
Rational weighted_constellation_count(const Passport& x, int genus, int faces);

/// Number of (1,n)-constellations glued from k polygons of distinct colors
/// with the given sizes: counts transitive tuples on {1..n+1} with sigma_i a
/// single size_i-cycle plus fixed points and product (1 2 ... n)(n+1);
/// returns count/n.
Rational weighted_1n_count(const std::vector<int>& sizes);

}  // namespace cacti
