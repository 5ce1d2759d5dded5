#include "polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "linalg.hpp"

namespace cacti {

namespace {

int degree_of(const MVPolynomial::Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

// graded lexicographic, leading term first
bool grlex_before(const MVPolynomial::Exponents& a, const MVPolynomial::Exponents& b) {
    int da = degree_of(a), db = degree_of(b);
    if (da != db) return da > db;
    return a > b;
}

}  // namespace

MVPolynomial::MVPolynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {
    std::sort(vars_.begin(), vars_.end());
    vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
}

MVPolynomial MVPolynomial::constant(const Rational& c) {
    MVPolynomial p;
    if (c != 0) p.terms_[{}] = c;
    return p;
}

MVPolynomial MVPolynomial::variable(const std::string& name) { return monomial(name, 1); }

MVPolynomial MVPolynomial::monomial(const std::string& name, int exp, const Rational& c) {
    MVPolynomial p({name});
    if (c != 0) {
        p.check_exponents({exp});
        p.terms_[{exp}] = c;
    }
    return p;
}

Rational MVPolynomial::constant_term() const {
    Exponents zero(vars_.size(), 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational MVPolynomial::as_constant() const {
    if (terms_.empty()) return 0;
    if (terms_.size() == 1) {
        const auto& e = terms_.begin()->first;
        if (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; }))
            return terms_.begin()->second;
    }
    throw std::domain_error("polynomial is not constant: " + to_string());
}

int MVPolynomial::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, degree_of(e));
    return d;
}

bool MVPolynomial::operator==(const MVPolynomial& o) const {
    auto [a, b] = unify(*this, o);
    return a.terms_ == b.terms_;
}

void MVPolynomial::check_exponents(const Exponents& e) const {
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] < 0 && vars_[i] != "N")
            throw std::domain_error("negative exponent on non-N variable " + vars_[i]);
}

void MVPolynomial::add_term(const Exponents& exps, const Rational& coef) {
    if (exps.size() != vars_.size()) throw std::invalid_argument("exponent vector length mismatch");
    check_exponents(exps);
    if (coef == 0) return;
    auto [it, inserted] = terms_.try_emplace(exps, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0) terms_.erase(it);
    }
}

std::pair<MVPolynomial, MVPolynomial> unify(const MVPolynomial& a, const MVPolynomial& b) {
    if (a.vars() == b.vars()) return {a, b};
    std::vector<std::string> merged = a.vars();
    merged.insert(merged.end(), b.vars().begin(), b.vars().end());
    MVPolynomial ra(merged), rb(merged);
    auto lift = [](const MVPolynomial& src, MVPolynomial& dst) {
        std::vector<size_t> pos;
        for (const auto& v : src.vars()) {
            auto it = std::lower_bound(dst.vars().begin(), dst.vars().end(), v);
            pos.push_back(static_cast<size_t>(it - dst.vars().begin()));
        }
        for (const auto& [e, c] : src.terms()) {
            MVPolynomial::Exponents lifted(dst.vars().size(), 0);
            for (size_t i = 0; i < e.size(); ++i) lifted[pos[i]] = e[i];
            dst.add_term(lifted, c);
        }
    };
    lift(a, ra);
    lift(b, rb);
    return {ra, rb};
}

MVPolynomial MVPolynomial::operator+(const MVPolynomial& o) const {
    auto [a, b] = unify(*this, o);
    for (const auto& [e, c] : b.terms_) a.add_term(e, c);
    return a;
}

MVPolynomial MVPolynomial::operator-() const {
    MVPolynomial r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MVPolynomial MVPolynomial::operator-(const MVPolynomial& o) const { return *this + (-o); }

MVPolynomial MVPolynomial::operator*(const MVPolynomial& o) const {
    auto [a, b] = unify(*this, o);
    MVPolynomial r(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MVPolynomial MVPolynomial::operator*(const Rational& c) const {
    MVPolynomial r(vars_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& [e, t] : r.terms_) t *= c;
    return r;
}

MVPolynomial MVPolynomial::pow(long e) const {
    if (e < 0) {
        // only a bare monomial in N may be inverted
        if (terms_.size() != 1) throw std::domain_error("negative power of a non-monomial");
        auto [exps, coef] = *terms_.begin();
        for (size_t i = 0; i < exps.size(); ++i)
            if (exps[i] != 0 && vars_[i] != "N")
                throw std::domain_error("negative power on non-N variable");
        MVPolynomial r(vars_);
        Exponents inv(exps.size());
        for (size_t i = 0; i < exps.size(); ++i) inv[i] = -exps[i] * static_cast<int>(-e);
        r.add_term(inv, rat_pow(coef, e));
        return r;
    }
    MVPolynomial r = constant(1);
    MVPolynomial base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base = (e >>= 1) ? base * base : base;
    }
    return r;
}

MVPolynomial MVPolynomial::substitute(const std::string& var, const MVPolynomial& value) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return *this;
    size_t idx = static_cast<size_t>(it - vars_.begin());
    MVPolynomial r(vars_);
    for (const auto& [e, c] : terms_) {
        Exponents rest = e;
        int k = rest[idx];
        rest[idx] = 0;
        MVPolynomial term(vars_);
        term.add_term(rest, c);
        r += term * value.pow(k);
    }
    return r;
}

MVPolynomial MVPolynomial::substitute(const std::string& var, const Rational& value) const {
    return substitute(var, MVPolynomial::constant(value));
}

Rational MVPolynomial::evaluate(const std::map<std::string, Rational>& point) const {
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = point.find(vars_[i]);
            if (it == point.end()) throw std::invalid_argument("no value for variable " + vars_[i]);
            t *= rat_pow(it->second, e[i]);
        }
        total += t;
    }
    return total;
}

MVPolynomial MVPolynomial::rename_vars(const std::map<std::string, std::string>& mapping) const {
    std::vector<std::string> renamed;
    for (const auto& v : vars_) {
        auto it = mapping.find(v);
        renamed.push_back(it == mapping.end() ? v : it->second);
    }
    std::vector<std::string> sorted = renamed;
    std::sort(sorted.begin(), sorted.end());
    if (std::unique(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("variable rename collision");
    MVPolynomial r(renamed);
    for (const auto& [e, c] : terms_) {
        Exponents out(e.size());
        for (size_t i = 0; i < e.size(); ++i) {
            auto it = std::lower_bound(r.vars_.begin(), r.vars_.end(), renamed[i]);
            out[static_cast<size_t>(it - r.vars_.begin())] = e[i];
        }
        r.add_term(out, c);
    }
    return r;
}

MVPolynomial MVPolynomial::top_homogeneous_part() const {
    if (terms_.empty()) throw std::domain_error("top part of the zero polynomial");
    for (const auto& v : vars_)
        if (v == "N")
            for (const auto& [e, c] : terms_)
                if (e[static_cast<size_t>(std::lower_bound(vars_.begin(), vars_.end(), v) -
                                          vars_.begin())] != 0)
                    throw std::domain_error("top part with N symbol present");
    int d = total_degree();
    MVPolynomial r(vars_);
    for (const auto& [e, c] : terms_)
        if (degree_of(e) == d) r.add_term(e, c);
    return r;
}

MVPolynomial MVPolynomial::truncated(int max_degree) const {
    MVPolynomial r(vars_);
    for (const auto& [e, c] : terms_)
        if (degree_of(e) <= max_degree) r.add_term(e, c);
    return r;
}

Rational MVPolynomial::coefficient(const std::map<std::string, int>& monomial) const {
    for (const auto& [v, e] : monomial)
        if (e != 0 && !std::binary_search(vars_.begin(), vars_.end(), v)) return 0;
    Exponents want(vars_.size(), 0);
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = monomial.find(vars_[i]);
        if (it != monomial.end()) want[i] = it->second;
    }
    auto it = terms_.find(want);
    return it == terms_.end() ? Rational(0) : it->second;
}

MVPolynomial MVPolynomial::divide_by_monomial(const std::map<std::string, int>& monomial) const {
    Exponents shift(vars_.size(), 0);
    for (const auto& [v, e] : monomial) {
        auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
        if (it == vars_.end() || *it != v) {
            if (e != 0) throw std::domain_error("division leaves remainder in " + v);
            continue;
        }
        shift[static_cast<size_t>(it - vars_.begin())] = e;
    }
    MVPolynomial r(vars_);
    for (const auto& [e, c] : terms_) {
        Exponents out(e.size());
        for (size_t i = 0; i < e.size(); ++i) {
            out[i] = e[i] - shift[i];
            if (out[i] < 0) throw std::domain_error("division leaves remainder in " + vars_[i]);
        }
        r.add_term(out, c);
    }
    return r;
}

std::vector<std::pair<MVPolynomial::Exponents, Rational>> MVPolynomial::canonical_terms() const {
    std::vector<std::pair<Exponents, Rational>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return grlex_before(a.first, b.first); });
    return out;
}

std::string MVPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : canonical_terms()) {
        if (!first) os << " + ";
        first = false;
        os << rat_to_string(c);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) os << "*" << vars_[i] << "^" << e[i];
    }
    return os.str();
}

MVPolynomial truncated_exp(const MVPolynomial& q, int max_degree) {
    if (q.constant_term() != 0) throw std::domain_error("truncated_exp needs zero constant term");
    MVPolynomial sum = MVPolynomial::constant(1);
    MVPolynomial power = MVPolynomial::constant(1);
    Rational inv_fact = 1;
    // each factor of q raises total degree by >= 1
    for (int m = 1; m <= max_degree; ++m) {
        power = (power * q).truncated(max_degree);
        if (power.is_zero()) break;
        inv_fact /= m;
        sum += power * inv_fact;
    }
    return sum.truncated(max_degree);
}

MVPolynomial interpolate(const std::vector<std::string>& vars,
                         const std::vector<std::pair<std::vector<long>, Rational>>& samples,
                         int degree_bound) {
    size_t dim = vars.size();
    // monomials of total degree <= bound, fixed enumeration order
    std::vector<MVPolynomial::Exponents> monomials;
    MVPolynomial::Exponents cur(dim, 0);
    auto rec = [&](auto&& self, size_t i, int remaining) -> void {
        if (i == dim) {
            monomials.push_back(cur);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            cur[i] = e;
            self(self, i + 1, remaining - e);
        }
        cur[i] = 0;
    };
    rec(rec, 0, degree_bound);

    RationalMatrix a(samples.size(), std::vector<Rational>(monomials.size()));
    std::vector<Rational> b(samples.size());
    for (size_t s = 0; s < samples.size(); ++s) {
        const auto& [pt, val] = samples[s];
        if (pt.size() != dim) throw std::invalid_argument("sample point dimension mismatch");
        for (size_t m = 0; m < monomials.size(); ++m) {
            Rational v = 1;
            for (size_t i = 0; i < dim; ++i) v *= rat_pow(Rational(pt[i]), monomials[m][i]);
            a[s][m] = v;
        }
        b[s] = val;
    }
    auto solution = solve_exact(a, b);
    if (!solution)
        throw std::domain_error("no polynomial of total degree <= " +
                                std::to_string(degree_bound) + " fits the samples");

    // MVPolynomial keeps variables sorted; map enumeration order onto it
    MVPolynomial result(vars);
    std::vector<size_t> pos(dim);
    for (size_t i = 0; i < dim; ++i) {
        auto it = std::lower_bound(result.vars().begin(), result.vars().end(), vars[i]);
        pos[i] = static_cast<size_t>(it - result.vars().begin());
    }
    for (size_t m = 0; m < monomials.size(); ++m) {
        if ((*solution)[m] == 0) continue;
        MVPolynomial::Exponents e(dim, 0);
        for (size_t i = 0; i < dim; ++i) e[pos[i]] = monomials[m][i];
        result.add_term(e, (*solution)[m]);
    }
    return result;
}

}  // namespace cacti
