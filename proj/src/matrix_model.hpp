#pragma once

#include <string>
#include <utility>
#include <vector>

#include "closed_forms.hpp"
#include "linalg.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace cacti {

/// Real coordinates for tuples (A_1..A_k), A_i = X + Y_i with X hermitian,
/// Y_i skew-hermitian and sum Y_i = 0. X contributes N^2 coordinates
/// (diagonal entries, then real/imaginary parts above the diagonal); each of
/// Y_1..Y_{k-1} likewise; Y_k is eliminated as -(Y_1+...+Y_{k-1}).
struct StateSpace {
    int N = 1;
    int k = 2;
    std::vector<std::string> basis;  // coordinate labels, length k*N^2

    StateSpace(int N_, int k_);
    int dim() const { return k * N * N; }

    /// Entry (p,q) of A_i as a complex linear form over the coordinates.
    std::vector<ComplexRational> entry_form(int i, int p, int q) const;
};

/// Symmetric exact quadratic form v -> v^T mat v over StateSpace coordinates.
struct QuadForm {
    RationalMatrix mat;

    Rational eval(const std::vector<Rational>& v) const;
};

/// The model forms in coordinates: H from (J-(k-1)I)/(k-1), i.e.
/// (1/(k-1))(k Tr X^2 - (k-1) sum Tr Y_i^2), and its inverse form from J-I,
/// i.e. k(k-1) Tr X^2 - sum Tr Y_i^2.
std::pair<QuadForm, QuadForm> model_forms(int N, int k);

/// Checks that the two model forms are mutually inverse as maps on E: with G
/// the Gram matrix of <A|B> = sum Tr A_iB_i, H_inv = G H^{-1} G.
bool forms_mutually_inverse(const QuadForm& h, const QuadForm& h_inv, int N, int k);

bool is_positive_definite(const QuadForm& q);

/// Gaussian expectation of a product of linear forms for the weight
/// e^{-(1/2) v^T mat v}: sum over pairings of products of covariances
/// lambda^T mat^{-1} mu. Zero for an odd number of forms.
ComplexRational wick_complex(const QuadForm& h,
                             const std::vector<std::vector<ComplexRational>>& forms);
Rational wick(const QuadForm& h, const std::vector<std::vector<Rational>>& forms);

/// Moment-generating identity: <lambda^{2m}>/(2m)! = (H^{-1}(lambda)/2)^m/m!
/// for all m <= max_order.
bool gaussian_shift_check(const QuadForm& h, const std::vector<Rational>& lambda, int max_order);

/// Inclusion-exclusion form of the N=1 generating function: one term per way
/// of splitting each color's circles into kept and dropped groups; f equals
/// (1/prod l_ij) sum sign * e^{exponent} with exponent = sum_{i<j} L_iL_j
/// over the kept group sums L_i.
std::vector<std::pair<int, MVPolynomial>> f_closed(const CircleSet& c);

/// Exact series of f up to total degree max_degree; requires symbolic
/// lengths. Throws if the summed expansion is not divisible by prod l_ij.
MVPolynomial f_series(const CircleSet& c, int max_degree);

/// Generating function over all topological types using every circle (no
/// isolated circles, disconnected allowed) of grade <= max_degree:
/// sum type_volume * N^{sum over components of (2-2g)}. Laurent in "N".
MVPolynomial F_series(const CircleSet& c, int max_degree);

/// Expands the circle vertex factors N l^{d-1}/((d-1)! d) Tr A_i^d over
/// coordinates, takes Gaussian expectations against the weight e^{-(N/2)H}
/// by Wick, and compares all l-coefficients of grade <= max_degree with
/// F_series evaluated at the given integer N.
bool wick_F_check(const CircleSet& c, int max_degree, int N);

}  // namespace cacti
