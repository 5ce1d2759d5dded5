#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"

namespace cacti {

/// Multivariate polynomial with exact rational coefficients over named
/// variables. Variables are kept sorted by name so equal polynomials compare
/// equal structurally. Exponents are nonnegative except for the distinguished
/// symbol "N", which may carry negative exponents (Laurent in N only).
class MVPolynomial {
  public:
    using Exponents = std::vector<int>;

    MVPolynomial() = default;
    explicit MVPolynomial(std::vector<std::string> vars);

    static MVPolynomial constant(const Rational& c);
    static MVPolynomial variable(const std::string& name);
    /// c * var^exp
    static MVPolynomial monomial(const std::string& name, int exp, const Rational& c = 1);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() != 1) return false;
        const auto& e = terms_.begin()->first;
        for (int x : e)
            if (x != 0) return false;
        return true;
    }
    /// Constant term (0 if absent).
    Rational constant_term() const;
    /// Throws unless the polynomial is constant.
    Rational as_constant() const;

    int total_degree() const;  // max over terms of sum of exponents; 0 for zero poly

    bool operator==(const MVPolynomial& o) const;
    bool operator!=(const MVPolynomial& o) const { return !(*this == o); }

    MVPolynomial operator+(const MVPolynomial& o) const;
    MVPolynomial operator-(const MVPolynomial& o) const;
    MVPolynomial operator-() const;
    MVPolynomial operator*(const MVPolynomial& o) const;
    MVPolynomial operator*(const Rational& c) const;
    MVPolynomial& operator+=(const MVPolynomial& o) { return *this = *this + o; }
    MVPolynomial& operator-=(const MVPolynomial& o) { return *this = *this - o; }
    MVPolynomial& operator*=(const MVPolynomial& o) { return *this = *this * o; }

    /// Integer power. Negative exponents are allowed only for a bare monomial
    /// in N (Laurent part of the ring).
    MVPolynomial pow(long e) const;

    MVPolynomial substitute(const std::string& var, const MVPolynomial& value) const;
    MVPolynomial substitute(const std::string& var, const Rational& value) const;
    Rational evaluate(const std::map<std::string, Rational>& point) const;
    MVPolynomial rename_vars(const std::map<std::string, std::string>& mapping) const;

    /// Sum of all terms of maximal total degree. Errors on zero input or when
    /// the N symbol is present.
    MVPolynomial top_homogeneous_part() const;

    /// Drops terms of total degree > max_degree.
    MVPolynomial truncated(int max_degree) const;

    /// Coefficient of the given monomial, variables matched by name
    /// (unmentioned variables mean exponent 0).
    Rational coefficient(const std::map<std::string, int>& monomial) const;

    /// Divides by the monomial prod(vars^exps); throws if any term is not
    /// divisible.
    MVPolynomial divide_by_monomial(const std::map<std::string, int>& monomial) const;

    void add_term(const Exponents& exps, const Rational& coef);

    /// Terms in canonical (graded lexicographic, leading first) order.
    std::vector<std::pair<Exponents, Rational>> canonical_terms() const;

    std::string to_string() const;

  private:
    void check_exponents(const Exponents& e) const;

    std::vector<std::string> vars_;         // sorted, unique
    std::map<Exponents, Rational> terms_;   // no zero coefficients
};

inline MVPolynomial operator*(const Rational& c, const MVPolynomial& p) { return p * c; }

/// Aligns both polynomials to the union of their variable sets.
std::pair<MVPolynomial, MVPolynomial> unify(const MVPolynomial& a, const MVPolynomial& b);

/// Sum_{m>=0} q^m/m! truncated to total degree <= max_degree. q must have a
/// zero constant term.
MVPolynomial truncated_exp(const MVPolynomial& q, int max_degree);

/// The unique polynomial of total degree <= degree_bound through all samples,
/// solved exactly. Throws if the samples are inconsistent with the bound.
MVPolynomial interpolate(const std::vector<std::string>& vars,
                         const std::vector<std::pair<std::vector<long>, Rational>>& samples,
                         int degree_bound);

}  // namespace cacti
