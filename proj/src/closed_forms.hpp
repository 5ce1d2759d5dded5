#pragma once

#include <string>
#include <vector>

#include "permutation.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "topology.hpp"

namespace cacti {

/// Lengths of circles grouped by color; a length is a symbol or a "num/den"
/// literal, as in CircleSpec.
struct CircleSet {
    std::vector<std::vector<std::string>> lengths;  // lengths[i] = color i+1

    size_t k() const { return lengths.size(); }
    std::vector<CircleSpec> as_circles() const;
};

/// Number of plane cacti glued from k polygons of pairwise distinct colors
/// and sizes n_1..n_k: n^{k-2} with n = sum n_i - k + 1. For k = 1 the
/// weighted count 1/n of a lone polygon.
Rational cacti_distinct(const std::vector<int>& sizes);
/// Same, as a polynomial in the variables n_1_1..n_k_1 (k >= 2).
MVPolynomial cacti_distinct_symbolic(int k);

enum class PassportVariant { printed, corrected };

/// 1/|Sym|-weighted count of plane cacti with passport X. The corrected
/// variant (default) is n^{k-2} * prod_i ff(n - n_i + p_i - 1, p_i - 1) /
/// |Aut X_i| with ff a falling factorial; the printed variant uses falling
/// factorials of length p_i, which disagrees with the one-polygon-per-color
/// specialization and is kept only for the documented comparison.
Rational cacti_passport(const Passport& x, PassportVariant variant = PassportVariant::corrected);

/// Number of (1,n)-constellations from k polygons of distinct colors:
/// (k-1) n^{k-2}.
BigInt constellations_1n_closed(int k, long n);
/// The same count as the inclusion-exclusion double sum over subsets of
/// polygons; depends only on k and n = sum sizes - k - 1.
Rational constellations_1n_sum(const std::vector<int>& sizes);
/// Intermediate single sum (1/(nk)) sum_{p=2..k} C(k,p) (np+p-k) n^{k-p}.
Rational constellations_1n_reduced(int k, long n);

/// Volume of the space of circle cacti from k circles of pairwise distinct
/// colors: (l_1+...+l_k)^{k-2}.
MVPolynomial circle_cacti_distinct(const std::vector<std::string>& lengths);

/// Volume for m_i circles of color i: l^{k-2} prod_i (l-l_i)^{m_i-1}/|Aut_i|
/// where l_i sums color i, l sums everything, and |Aut_i| counts repetitions
/// of identical length tokens within color i.
MVPolynomial circle_cacti_multi(const CircleSet& c);

/// k^{k-2}, the number of labeled trees on k vertices.
BigInt cayley(int k);

/// Dimension 4g - 4 + m + 2p of the space of genus-g configurations of m
/// circles with p non-disc faces.
int stratum_dimension(int genus, int m, int faces);

/// Interpolates the weighted constellation count, for polygons_per_color[i]
/// polygons of color i+1 with sizes as variables n_<i>_<j>, as a polynomial
/// of total degree stratum_dimension(genus, m, faces). Throws if no such
/// polynomial fits the sampled grid.
MVPolynomial fit_P(const std::vector<int>& polygons_per_color, int genus, int faces);

/// True iff the top homogeneous part of P, with n_<i>_<j> renamed to
/// l_<i>_<j>, equals Q.
bool asymptotic_check(const MVPolynomial& p, const MVPolynomial& q);

}  // namespace cacti
