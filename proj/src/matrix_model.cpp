#include "matrix_model.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "topology.hpp"

namespace cacti {

namespace {

using CMat = std::vector<std::vector<ComplexRational>>;

bool numeric_token(const std::string& s) {
    return !s.empty() && (std::isdigit((unsigned char)s[0]) || s[0] == '-');
}

MVPolynomial length_term(const std::string& s) {
    if (numeric_token(s)) return MVPolynomial::constant(rat_from_string(s));
    return MVPolynomial::variable(s);
}

CMat zero_mat(int n) { return CMat(n, std::vector<ComplexRational>(n)); }

// Hermitian X and skew-hermitian Y_1..Y_k (with Y_k eliminated) from a real
// coordinate vector; block layout matches StateSpace::basis.
struct Realization {
    CMat X;
    std::vector<CMat> Y;  // size k

    Realization(int N, int k, const std::vector<Rational>& v) : X(zero_mat(N)) {
        auto read_block = [&](int base, bool herm) {
            CMat M = zero_mat(N);
            int at = base;
            for (int p = 0; p < N; ++p) {
                if (herm)
                    M[p][p] = {v[at++], 0};
                else
                    M[p][p] = {0, v[at++]};
            }
            for (int p = 0; p < N; ++p)
                for (int q = p + 1; q < N; ++q) {
                    Rational re = v[at++], im = v[at++];
                    M[p][q] = {re, im};
                    if (herm)
                        M[q][p] = {re, -im};
                    else
                        M[q][p] = {-re, im};
                }
            return M;
        };
        int nn = N * N;
        X = read_block(0, true);
        CMat total = zero_mat(N);
        for (int i = 1; i < k; ++i) {
            Y.push_back(read_block(i * nn, false));
            for (int p = 0; p < N; ++p)
                for (int q = 0; q < N; ++q) total[p][q] += Y.back()[p][q];
        }
        CMat last = zero_mat(N);
        for (int p = 0; p < N; ++p)
            for (int q = 0; q < N; ++q) last[p][q] = ComplexRational{0, 0} - total[p][q];
        Y.push_back(std::move(last));
    }
};

Rational trace_sq(const CMat& m) {
    ComplexRational t{0, 0};
    int n = (int)m.size();
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) t += m[p][q] * m[q][p];
    if (!(t.im == 0)) throw std::logic_error("trace of a square is not real");
    return t.re;
}

// Symmetric matrix of a quadratic form by polarization.
RationalMatrix polarize(int dim, const std::function<Rational(const std::vector<Rational>&)>& q) {
    RationalMatrix m(dim, std::vector<Rational>(dim, 0));
    std::vector<Rational> v(dim, 0);
    std::vector<Rational> diag(dim);
    for (int a = 0; a < dim; ++a) {
        v[a] = 1;
        diag[a] = q(v);
        m[a][a] = diag[a];
        v[a] = 0;
    }
    for (int a = 0; a < dim; ++a)
        for (int b = a + 1; b < dim; ++b) {
            v[a] = 1;
            v[b] = 1;
            Rational both = q(v);
            v[a] = 0;
            v[b] = 0;
            m[a][b] = m[b][a] = (both - diag[a] - diag[b]) / 2;
        }
    return m;
}

}  // namespace

StateSpace::StateSpace(int N_, int k_) : N(N_), k(k_) {
    if (N < 1 || k < 2) throw std::invalid_argument("need N >= 1 and k >= 2");
    auto block = [&](const std::string& d, const std::string& re, const std::string& im) {
        for (int p = 0; p < N; ++p) basis.push_back(d + "_" + std::to_string(p + 1));
        for (int p = 0; p < N; ++p)
            for (int q = p + 1; q < N; ++q) {
                std::string suf = "_" + std::to_string(p + 1) + "_" + std::to_string(q + 1);
                basis.push_back(re + suf);
                basis.push_back(im + suf);
            }
    };
    block("x", "u", "v");
    for (int i = 1; i < k; ++i) {
        std::string tag = std::to_string(i);
        block("w" + tag, "c" + tag, "d" + tag);
    }
}

std::vector<ComplexRational> StateSpace::entry_form(int i, int p, int q) const {
    std::vector<ComplexRational> form(dim());
    int nn = N * N;
    auto off_index = [&](int base, int a, int b) {
        // index of the (re, im) pair for position a < b within a block
        int at = base + N;
        for (int r = 0; r < N; ++r)
            for (int s = r + 1; s < N; ++s) {
                if (r == a && s == b) return at;
                at += 2;
            }
        throw std::logic_error("bad off-diagonal index");
    };
    // X part
    if (p == q) {
        form[p] += ComplexRational{1, 0};
    } else if (p < q) {
        int at = off_index(0, p, q);
        form[at] += ComplexRational{1, 0};
        form[at + 1] += ComplexRational{0, 1};
    } else {
        int at = off_index(0, q, p);
        form[at] += ComplexRational{1, 0};
        form[at + 1] += ComplexRational{0, -1};
    }
    // Y_i part; colors are 1-based, Y_k = -(Y_1+...+Y_{k-1})
    auto add_y = [&](int block, const ComplexRational& scale) {
        int base = block * nn;
        if (p == q) {
            form[base + p] += scale * ComplexRational{0, 1};
        } else if (p < q) {
            int at = off_index(base, p, q);
            form[at] += scale;
            form[at + 1] += scale * ComplexRational{0, 1};
        } else {
            int at = off_index(base, q, p);
            form[at] += scale * ComplexRational{-1, 0};
            form[at + 1] += scale * ComplexRational{0, 1};
        }
    };
    if (i < k)
        add_y(i, ComplexRational{1, 0});
    else
        for (int j = 1; j < k; ++j) add_y(j, ComplexRational{-1, 0});
    return form;
}

Rational QuadForm::eval(const std::vector<Rational>& v) const {
    Rational total = 0;
    int n = (int)mat.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) total += v[a] * mat[a][b] * v[b];
    return total;
}

std::pair<QuadForm, QuadForm> model_forms(int N, int k) {
    StateSpace ss(N, k);
    auto h_val = [&](const std::vector<Rational>& v) {
        Realization r(N, k, v);
        Rational tx = trace_sq(r.X);
        Rational ty = 0;
        for (const auto& y : r.Y) ty += trace_sq(y);
        return (Rational(k) * tx - Rational(k - 1) * ty) / Rational(k - 1);
    };
    auto hinv_val = [&](const std::vector<Rational>& v) {
        Realization r(N, k, v);
        Rational tx = trace_sq(r.X);
        Rational ty = 0;
        for (const auto& y : r.Y) ty += trace_sq(y);
        return Rational(k) * Rational(k - 1) * tx - ty;
    };
    return {QuadForm{polarize(ss.dim(), h_val)}, QuadForm{polarize(ss.dim(), hinv_val)}};
}

bool forms_mutually_inverse(const QuadForm& h, const QuadForm& h_inv, int N, int k) {
    StateSpace ss(N, k);
    auto g_val = [&](const std::vector<Rational>& v) {
        Realization r(N, k, v);
        CMat a = r.X;
        ComplexRational total{0, 0};
        for (int i = 0; i < k; ++i) {
            CMat ai = r.X;
            for (int p = 0; p < N; ++p)
                for (int q = 0; q < N; ++q) ai[p][q] += r.Y[i][p][q];
            for (int p = 0; p < N; ++p)
                for (int q = 0; q < N; ++q) total += ai[p][q] * ai[q][p];
        }
        (void)a;
        if (!(total.im == 0)) throw std::logic_error("pairing form is not real");
        return total.re;
    };
    RationalMatrix g = polarize(ss.dim(), g_val);
    auto inv = invert_exact(h.mat);
    if (!inv) return false;
    int n = ss.dim();
    // compute g * inv * g and compare with h_inv
    RationalMatrix tmp(n, std::vector<Rational>(n, 0)), out(n, std::vector<Rational>(n, 0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int t = 0; t < n; ++t) tmp[a][b] += g[a][t] * (*inv)[t][b];
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int t = 0; t < n; ++t) out[a][b] += tmp[a][t] * g[t][b];
    return out == h_inv.mat;
}

bool is_positive_definite(const QuadForm& q) { return leading_minors_positive(q.mat); }

namespace {

ComplexRational wick_from_covs(const std::vector<std::vector<ComplexRational>>& cov,
                               std::vector<int>& alive) {
    if (alive.empty()) return {1, 0};
    int first = alive[0];
    ComplexRational total{0, 0};
    for (size_t j = 1; j < alive.size(); ++j) {
        std::vector<int> rest;
        for (size_t t = 1; t < alive.size(); ++t)
            if (t != j) rest.push_back(alive[t]);
        total += cov[first][alive[j]] * wick_from_covs(cov, rest);
    }
    return total;
}

}  // namespace

ComplexRational wick_complex(const QuadForm& h,
                             const std::vector<std::vector<ComplexRational>>& forms) {
    if (forms.size() % 2 != 0) return {0, 0};
    auto inv = invert_exact(h.mat);
    if (!inv) throw std::invalid_argument("singular quadratic form");
    int n = (int)forms.size();
    int dim = (int)h.mat.size();
    std::vector<std::vector<ComplexRational>> cov(n, std::vector<ComplexRational>(n));
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            ComplexRational s{0, 0};
            for (int x = 0; x < dim; ++x) {
                if (forms[a][x].re == 0 && forms[a][x].im == 0) continue;
                for (int y = 0; y < dim; ++y) {
                    if ((*inv)[x][y] == 0) continue;
                    s += forms[a][x] * ComplexRational{(*inv)[x][y], 0} * forms[b][y];
                }
            }
            cov[a][b] = cov[b][a] = s;
        }
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    return wick_from_covs(cov, all);
}

Rational wick(const QuadForm& h, const std::vector<std::vector<Rational>>& forms) {
    std::vector<std::vector<ComplexRational>> cf;
    for (const auto& f : forms) {
        std::vector<ComplexRational> g;
        for (const auto& x : f) g.push_back({x, 0});
        cf.push_back(std::move(g));
    }
    ComplexRational r = wick_complex(h, cf);
    if (!(r.im == 0)) throw std::logic_error("real forms produced a complex moment");
    return r.re;
}

bool gaussian_shift_check(const QuadForm& h, const std::vector<Rational>& lambda, int max_order) {
    Rational s = wick(h, {lambda, lambda});  // H^{-1}(lambda, lambda)
    for (int m = 0; m <= max_order; ++m) {
        std::vector<std::vector<Rational>> forms(2 * m, lambda);
        Rational lhs = wick(h, forms) / Rational(factorial(2 * m));
        Rational rhs = rat_pow(s / 2, m) / Rational(factorial(m));
        if (lhs != rhs) return false;
    }
    return true;
}

std::vector<std::pair<int, MVPolynomial>> f_closed(const CircleSet& c) {
    int k = (int)c.k();
    if (k < 2) throw std::invalid_argument("need at least two colors");
    std::vector<std::pair<int, std::string>> circles;  // (color index, length)
    for (int i = 0; i < k; ++i)
        for (const auto& len : c.lengths[i]) circles.push_back({i, len});
    int total = (int)circles.size();
    if (total > 20) throw std::invalid_argument("too many circles");

    std::vector<std::pair<int, MVPolynomial>> out;
    for (int mask = 0; mask < (1 << total); ++mask) {
        std::vector<MVPolynomial> kept(k, MVPolynomial::constant(0));
        int dropped = 0;
        for (int t = 0; t < total; ++t) {
            if (mask & (1 << t))
                kept[circles[t].first] += length_term(circles[t].second);
            else
                ++dropped;
        }
        MVPolynomial expo = MVPolynomial::constant(0);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) expo += kept[i] * kept[j];
        out.push_back({dropped % 2 == 0 ? 1 : -1, std::move(expo)});
    }
    return out;
}

MVPolynomial f_series(const CircleSet& c, int max_degree) {
    std::set<std::string> symbols;
    int total = 0;
    for (const auto& color : c.lengths)
        for (const auto& len : color) {
            if (numeric_token(len))
                throw std::invalid_argument("series expansion needs symbolic lengths");
            if (!symbols.insert(len).second)
                throw std::invalid_argument("series expansion needs distinct length symbols");
            ++total;
        }
    int depth = max_degree + total;
    MVPolynomial sum = MVPolynomial::constant(0);
    for (const auto& [sign, expo] : f_closed(c)) {
        MVPolynomial e = truncated_exp(expo, depth);
        sum += (sign > 0) ? e : -e;
    }
    std::map<std::string, int> divisor;
    for (const auto& s : symbols) divisor[s] = 1;
    return sum.truncated(depth).divide_by_monomial(divisor).truncated(max_degree);
}

MVPolynomial F_series(const CircleSet& c, int max_degree) {
    if (c.k() < 2) throw std::invalid_argument("need at least two colors");
    TypeFilter filter;
    filter.connected = false;
    filter.max_grade = max_degree;
    MVPolynomial total = MVPolynomial::constant(0);
    for (const auto& t : enumerate_topological_types(c.as_circles(), filter)) {
        int chi = 0;
        for (int g : t.component_genus) chi += 2 - 2 * g;
        MVPolynomial term = type_volume(t);
        if (chi != 0) term = term * MVPolynomial::monomial("N", 1).pow(chi);
        total += term;
    }
    return total;
}

bool wick_F_check(const CircleSet& c, int max_degree, int N) {
    int k = (int)c.k();
    if (k < 2 || N < 1) throw std::invalid_argument("need k >= 2 and N >= 1");
    std::vector<std::pair<int, std::string>> circles;  // (1-based color, length)
    for (int i = 0; i < k; ++i)
        for (const auto& len : c.lengths[i]) circles.push_back({i + 1, len});
    int total = (int)circles.size();

    StateSpace ss(N, k);
    auto [h, h_inv] = model_forms(N, k);
    (void)h_inv;
    QuadForm scaled;
    scaled.mat = h.mat;
    for (auto& row : scaled.mat)
        for (auto& x : row) x *= N;

    // entry forms per color, with covariances precomputed once
    auto inv = invert_exact(scaled.mat);
    if (!inv) throw std::logic_error("model form is singular");
    int dim = ss.dim();
    int nforms = k * N * N;
    auto form_id = [&](int i, int p, int q) { return ((i - 1) * N + p) * N + q; };
    std::vector<std::vector<ComplexRational>> entry_forms(nforms);
    for (int i = 1; i <= k; ++i)
        for (int p = 0; p < N; ++p)
            for (int q = 0; q < N; ++q) entry_forms[form_id(i, p, q)] = ss.entry_form(i, p, q);
    std::vector<std::vector<ComplexRational>> cov(nforms,
                                                  std::vector<ComplexRational>(nforms));
    for (int a = 0; a < nforms; ++a)
        for (int b = a; b < nforms; ++b) {
            ComplexRational s{0, 0};
            for (int x = 0; x < dim; ++x) {
                if (entry_forms[a][x].re == 0 && entry_forms[a][x].im == 0) continue;
                for (int y = 0; y < dim; ++y)
                    s += entry_forms[a][x] * ComplexRational{(*inv)[x][y], 0} *
                         entry_forms[b][y];
            }
            cov[a][b] = cov[b][a] = s;
        }

    MVPolynomial expect = MVPolynomial::constant(0);

    // one contact degree d >= 1 per circle, grade sum (d-1) <= max_degree
    std::vector<int> deg(total, 1);
    std::function<void(int, int)> walk = [&](int t, int grade) {
        if (t == total) {
            // expectation of prod_c Tr A_{color}^{d_c} over all index paths
            std::vector<int> path;  // concatenated indices
            ComplexRational ev{0, 0};
            std::function<void(int, int)> paths = [&](int ct, int pos) {
                if (ct == total) {
                    std::vector<int> ids;
                    int at = 0;
                    for (int cc = 0; cc < total; ++cc) {
                        int d = deg[cc], color = circles[cc].first;
                        for (int s = 0; s < d; ++s) {
                            int a = path[at + s], b = path[at + (s + 1) % d];
                            ids.push_back(form_id(color, a, b));
                        }
                        at += d;
                    }
                    if (ids.size() % 2 == 0) {
                        std::function<ComplexRational(std::vector<int>&)> pair_up =
                            [&](std::vector<int>& alive) -> ComplexRational {
                            if (alive.empty()) return {1, 0};
                            ComplexRational acc{0, 0};
                            for (size_t j = 1; j < alive.size(); ++j) {
                                std::vector<int> rest;
                                for (size_t t = 1; t < alive.size(); ++t)
                                    if (t != j) rest.push_back(alive[t]);
                                acc += cov[alive[0]][alive[j]] * pair_up(rest);
                            }
                            return acc;
                        };
                        ev += pair_up(ids);
                    }
                    return;
                }
                if (pos == deg[ct]) {
                    paths(ct + 1, 0);
                    return;
                }
                for (int p = 0; p < N; ++p) {
                    path.push_back(p);
                    paths(ct, pos + 1);
                    path.pop_back();
                }
            };
            paths(0, 0);
            if (!(ev.im == 0)) throw std::logic_error("trace moment is not real");
            MVPolynomial term = MVPolynomial::constant(ev.re);
            for (int cc = 0; cc < total; ++cc) {
                int d = deg[cc];
                Rational pref = Rational(N) / (Rational(factorial(d - 1)) * Rational(d));
                term = term * (length_term(circles[cc].second).pow(d - 1) * pref);
            }
            expect += term;
            return;
        }
        for (int d = 1; grade + d - 1 <= max_degree; ++d) {
            deg[t] = d;
            walk(t + 1, grade + d - 1);
        }
        deg[t] = 1;
    };
    walk(0, 0);

    MVPolynomial target = F_series(c, max_degree).substitute("N", Rational(N));
    return expect == target;
}

}  // namespace cacti
