#include "closed_forms.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

#include "factorization.hpp"

namespace cacti {

namespace {

bool numeric_token(const std::string& s) {
    return !s.empty() && (std::isdigit((unsigned char)s[0]) || s[0] == '-');
}

MVPolynomial length_term(const std::string& s) {
    if (numeric_token(s)) return MVPolynomial::constant(rat_from_string(s));
    return MVPolynomial::variable(s);
}

}  // namespace

std::vector<CircleSpec> CircleSet::as_circles() const {
    std::vector<CircleSpec> out;
    for (size_t i = 0; i < lengths.size(); ++i)
        for (const auto& len : lengths[i]) out.push_back({(int)i + 1, len});
    return out;
}

Rational cacti_distinct(const std::vector<int>& sizes) {
    int k = (int)sizes.size();
    if (k < 1) throw std::invalid_argument("need at least one polygon");
    long n = 1 - k;
    for (int s : sizes) {
        if (s < 2) throw std::invalid_argument("polygon sizes must be >= 2");
        n += s;
    }
    return rat_pow(Rational(n), k - 2);
}

MVPolynomial cacti_distinct_symbolic(int k) {
    if (k < 2) throw std::invalid_argument("symbolic form needs k >= 2");
    MVPolynomial n = MVPolynomial::constant(Rational(1 - k));
    for (int i = 1; i <= k; ++i)
        n = n + MVPolynomial::variable("n_" + std::to_string(i) + "_1");
    return n.pow(k - 2);
}

Rational cacti_passport(const Passport& x, PassportVariant variant) {
    int n = constellation_degree(x, 0, 1);
    int k = (int)x.k();
    Rational result = rat_pow(Rational(n), k - 2);
    for (const auto& xi : x.colors) {
        long ni = xi.sum();
        long pi = (long)xi.size();
        Rational prod = 1;
        if (variant == PassportVariant::corrected) {
            for (long t = 1; t <= pi - 1; ++t) {
                long factor = n - ni + t;
                if (factor <= 0) return 0;
                prod *= factor;
            }
        } else {
            for (long t = 0; t <= pi - 1; ++t) {
                long factor = n - ni - t;
                if (factor <= 0) return 0;
                prod *= factor;
            }
        }
        result *= prod / Rational(passport_aut(xi));
    }
    return result;
}

BigInt constellations_1n_closed(int k, long n) {
    if (k < 2 || n < 1) throw std::invalid_argument("need k >= 2 and n >= 1");
    return BigInt(k - 1) * int_pow(n, k - 2);
}

Rational constellations_1n_sum(const std::vector<int>& sizes) {
    int k = (int)sizes.size();
    if (k < 2) throw std::invalid_argument("need at least two polygons");
    long n = -k - 1;
    for (int s : sizes) {
        if (s < 2) throw std::invalid_argument("polygon sizes must be >= 2");
        n += s;
    }
    if (n < 1) throw std::invalid_argument("no such constellation: n < 1");
    Rational total = 0;
    // subsets of polygons by bitmask, split into p merged and q erased ones
    for (int mask = 0; mask < (1 << k); ++mask) {
        int chosen = __builtin_popcount((unsigned)mask);
        if (chosen < 2) continue;
        long m = 0;
        for (int i = 0; i < k; ++i)
            if (mask & (1 << i)) m += sizes[i];
        for (int p = 2; p <= chosen; ++p) {
            int q = chosen - p;
            Rational term = Rational(binomial(chosen, p)) * rat_pow(Rational(p - 1), q);
            if (chosen == k) {
                // (m - 2p - q) equals (n + 1 - p) here; the exponent is -1
                total += term;
            } else {
                total += term * Rational(m - 2 * p - q) *
                         rat_pow(Rational(n + 1 - p), k - p - q - 1);
            }
        }
    }
    return total;
}

Rational constellations_1n_reduced(int k, long n) {
    if (k < 2 || n < 1) throw std::invalid_argument("need k >= 2 and n >= 1");
    Rational total = 0;
    for (int p = 2; p <= k; ++p)
        total += Rational(binomial(k, p)) * Rational((long)n * p + p - k) *
                 rat_pow(Rational(n), k - p);
    return total / (Rational(n) * Rational(k));
}

MVPolynomial circle_cacti_distinct(const std::vector<std::string>& lengths) {
    int k = (int)lengths.size();
    if (k < 2) throw std::invalid_argument("need at least two circles");
    MVPolynomial sum = MVPolynomial::constant(0);
    for (const auto& len : lengths) sum = sum + length_term(len);
    return sum.pow(k - 2);
}

MVPolynomial circle_cacti_multi(const CircleSet& c) {
    int k = (int)c.k();
    if (k < 2) throw std::invalid_argument("need at least two colors");
    MVPolynomial l = MVPolynomial::constant(0);
    std::vector<MVPolynomial> li;
    for (const auto& color : c.lengths) {
        if (color.empty()) throw std::invalid_argument("every color needs a circle");
        MVPolynomial s = MVPolynomial::constant(0);
        for (const auto& len : color) s = s + length_term(len);
        l = l + s;
        li.push_back(std::move(s));
    }
    MVPolynomial result = l.pow(k - 2);
    for (int i = 0; i < k; ++i) {
        int mi = (int)c.lengths[i].size();
        result = result * (l - li[i]).pow(mi - 1);
        std::map<std::string, int> mult;
        for (const auto& len : c.lengths[i]) mult[len]++;
        BigInt aut = 1;
        for (const auto& [len, cnt] : mult) aut *= factorial(cnt);
        result = result * MVPolynomial::constant(Rational(1) / Rational(aut));
    }
    return result;
}

BigInt cayley(int k) {
    if (k < 1) throw std::invalid_argument("need k >= 1");
    if (k == 1) return 1;
    return int_pow(k, k - 2);
}

int stratum_dimension(int genus, int m, int faces) { return 4 * genus - 4 + m + 2 * faces; }

MVPolynomial fit_P(const std::vector<int>& polygons_per_color, int genus, int faces) {
    int m = 0;
    for (int c : polygons_per_color) {
        if (c < 1) throw std::invalid_argument("every color needs a polygon");
        m += c;
    }
    int d = stratum_dimension(genus, m, faces);
    if (d < 0) throw std::invalid_argument("negative stratum dimension");

    std::vector<std::string> vars;
    std::vector<long> base;
    for (size_t i = 0; i < polygons_per_color.size(); ++i)
        for (int j = 0; j < polygons_per_color[i]; ++j) {
            vars.push_back("n_" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
            // same-color polygons get disjoint size ranges so sizes never
            // coincide within a color on the grid
            base.push_back(2 + (long)j * (d + 1));
        }

    std::vector<std::pair<std::vector<long>, Rational>> samples;
    std::vector<int> idx(m, 0);
    while (true) {
        std::vector<long> point(m);
        for (int t = 0; t < m; ++t) point[t] = base[t] + idx[t];
        std::vector<Partition> colors;
        int t = 0;
        for (size_t i = 0; i < polygons_per_color.size(); ++i) {
            std::vector<int> parts;
            for (int j = 0; j < polygons_per_color[i]; ++j) parts.push_back((int)point[t++]);
            colors.push_back(Partition(parts));
        }
        samples.push_back({point, weighted_constellation_count(Passport(colors), genus, faces)});

        int c = 0;
        while (c < m && idx[c] == d) idx[c++] = 0;
        if (c == m) break;
        idx[c]++;
    }
    return interpolate(vars, samples, d);
}

bool asymptotic_check(const MVPolynomial& p, const MVPolynomial& q) {
    MVPolynomial top = p.top_homogeneous_part();
    std::map<std::string, std::string> ren;
    for (const auto& v : top.vars())
        if (v.size() > 1 && v[0] == 'n' && v[1] == '_') ren[v] = "l" + v.substr(1);
    return top.rename_vars(ren) == q;
}

}  // namespace cacti
