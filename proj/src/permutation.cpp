#include "permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cacti {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (int x : parts)
        if (x < 1) throw std::invalid_argument("partition parts must be positive");
    std::sort(parts.begin(), parts.end(), std::greater<int>());
}

int Partition::sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Passport::Passport(std::vector<Partition> c) : colors(std::move(c)) {
    if (colors.empty()) throw std::invalid_argument("passport needs at least one color");
    for (const auto& x : colors) {
        if (x.parts.empty()) throw std::invalid_argument("empty passport entry");
        for (int p : x.parts)
            if (p < 2) throw std::invalid_argument("passport parts must be >= 2");
    }
}

std::string Passport::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < colors.size(); ++i) {
        if (i) os << ";";
        for (size_t j = 0; j < colors[i].parts.size(); ++j) {
            if (j) os << ",";
            os << colors[i].parts[j];
        }
    }
    return os.str();
}

Passport parse_passport(const std::string& text) {
    // grammar: digits, commas, semicolons only
    for (char c : text)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == ',' || c == ';'))
            throw std::invalid_argument("malformed passport: unexpected character");
    if (text.empty()) throw std::invalid_argument("malformed passport: empty");
    auto is_sep = [](char c) { return c == ',' || c == ';'; };
    if (is_sep(text.front()) || is_sep(text.back()))
        throw std::invalid_argument("malformed passport: empty field");
    for (size_t i = 1; i < text.size(); ++i)
        if (is_sep(text[i - 1]) && is_sep(text[i]))
            throw std::invalid_argument("malformed passport: empty field");
    std::vector<Partition> colors;
    std::stringstream ss(text);
    std::string color;
    while (std::getline(ss, color, ';')) {
        if (color.empty()) throw std::invalid_argument("malformed passport: empty color");
        std::vector<int> parts;
        std::stringstream cs(color);
        std::string part;
        while (std::getline(cs, part, ',')) {
            if (part.empty()) throw std::invalid_argument("malformed passport: empty part");
            parts.push_back(std::stoi(part));
        }
        colors.emplace_back(std::move(parts));
    }
    return Passport(std::move(colors));
}

Permutation::Permutation(std::vector<int> imgs) : images(std::move(imgs)) {
    std::vector<bool> seen(images.size(), false);
    for (int x : images) {
        if (x < 0 || x >= n() || seen[static_cast<size_t>(x)])
            throw std::invalid_argument("not a bijection");
        seen[static_cast<size_t>(x)] = true;
    }
}

Permutation Permutation::identity(int n) {
    Permutation p;
    p.images.resize(static_cast<size_t>(n));
    std::iota(p.images.begin(), p.images.end(), 0);
    return p;
}

Permutation Permutation::forward_cycle(int n, int len) {
    auto p = identity(n);
    for (int i = 0; i < len; ++i) p.images[static_cast<size_t>(i)] = (i + 1) % len;
    return p;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.images.resize(images.size());
    for (int i = 0; i < n(); ++i) r.images[static_cast<size_t>(images[static_cast<size_t>(i)])] = i;
    return r;
}

Permutation Permutation::operator*(const Permutation& o) const {
    if (n() != o.n()) throw std::invalid_argument("size mismatch");
    Permutation r;
    r.images.resize(images.size());
    for (int i = 0; i < n(); ++i)
        r.images[static_cast<size_t>(i)] = images[static_cast<size_t>(o.images[static_cast<size_t>(i)])];
    return r;
}

int Permutation::cycle_count() const {
    int count = 0;
    std::vector<bool> seen(images.size(), false);
    for (int i = 0; i < n(); ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        ++count;
        for (int j = i; !seen[static_cast<size_t>(j)]; j = images[static_cast<size_t>(j)])
            seen[static_cast<size_t>(j)] = true;
    }
    return count;
}

int Permutation::fixed_points() const {
    int f = 0;
    for (int i = 0; i < n(); ++i)
        if (images[static_cast<size_t>(i)] == i) ++f;
    return f;
}

Partition cycle_type(const Permutation& p) {
    std::vector<int> lengths;
    std::vector<bool> seen(p.images.size(), false);
    for (int i = 0; i < p.n(); ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        int len = 0;
        for (int j = i; !seen[static_cast<size_t>(j)]; j = p(j)) {
            seen[static_cast<size_t>(j)] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    return Partition(std::move(lengths));
}

bool is_transitive(const MonodromyTuple& t) {
    if (t.n <= 1) return true;
    std::vector<int> stack = {0};
    std::vector<bool> seen(static_cast<size_t>(t.n), false);
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& s : t.sigma) {
            int w = s(v);
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == t.n;
}

EulerData euler_data(const MonodromyTuple& t) {
    if (!is_transitive(t)) throw std::invalid_argument("euler_data requires a transitive tuple");
    int deficiency = 0;
    Permutation product = Permutation::identity(t.n);
    for (const auto& s : t.sigma) {
        deficiency += t.n - s.cycle_count();
        product = product * s;
    }
    Permutation sigma_inf = product.inverse();
    int c_inf = sigma_inf.cycle_count();
    int chi = 2 * t.n - deficiency - (t.n - c_inf);
    if ((2 - chi) % 2 != 0 || chi > 2) throw std::logic_error("impossible tuple: bad Euler characteristic");
    return {(2 - chi) / 2, c_inf};
}

BigInt passport_aut(const Partition& x) {
    for (int p : x.parts)
        if (p < 2) throw std::invalid_argument("passport_aut needs parts >= 2");
    BigInt r = 1;
    long run = 1;
    for (size_t i = 1; i <= x.parts.size(); ++i) {
        if (i < x.parts.size() && x.parts[i] == x.parts[i - 1]) {
            ++run;
        } else {
            r *= factorial(run);
            run = 1;
        }
    }
    return r;
}

int constellation_degree(const Passport& x, int genus, int faces) {
    int n = 2 - 2 * genus - faces;
    int max_part = 1;
    for (const auto& xi : x.colors) {
        n += xi.sum() - static_cast<int>(xi.size());
        max_part = std::max(max_part, xi.parts.front());
    }
    if (n < 1 || n < max_part)
        throw std::domain_error("no such constellation exists (degree " + std::to_string(n) + ")");
    return n;
}

BigInt centralizer_size(const Partition& lambda) {
    BigInt z = 1;
    long run = 1;
    for (size_t i = 1; i <= lambda.parts.size(); ++i) {
        if (i < lambda.parts.size() && lambda.parts[i] == lambda.parts[i - 1]) {
            ++run;
        } else {
            z *= factorial(run);
            run = 1;
        }
    }
    for (int p : lambda.parts) z *= p;
    return z;
}

namespace {

void build_cycles(std::vector<int>& images, std::vector<bool>& used, std::vector<int>& remaining,
                  const std::function<void(const std::vector<int>&)>& emit) {
    int n = static_cast<int>(images.size());
    int a = -1;
    for (int i = 0; i < n; ++i)
        if (!used[static_cast<size_t>(i)]) {
            a = i;
            break;
        }
    if (a < 0) {
        emit(images);
        return;
    }
    // distinct part lengths only, to avoid emitting duplicates
    int prev_len = -1;
    for (size_t pi = 0; pi < remaining.size(); ++pi) {
        int len = remaining[pi];
        if (len == prev_len) continue;
        prev_len = len;
        remaining.erase(remaining.begin() + static_cast<long>(pi));
        used[static_cast<size_t>(a)] = true;
        // choose the rest of the cycle (a, c_1, ..., c_{len-1}) in all orders
        std::vector<int> cycle = {a};
        auto extend = [&](auto&& self) -> void {
            if (static_cast<int>(cycle.size()) == len) {
                for (size_t i = 0; i < cycle.size(); ++i)
                    images[static_cast<size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
                build_cycles(images, used, remaining, emit);
                return;
            }
            for (int c = 0; c < n; ++c) {
                if (used[static_cast<size_t>(c)]) continue;
                used[static_cast<size_t>(c)] = true;
                cycle.push_back(c);
                self(self);
                cycle.pop_back();
                used[static_cast<size_t>(c)] = false;
            }
        };
        extend(extend);
        used[static_cast<size_t>(a)] = false;
        remaining.insert(remaining.begin() + static_cast<long>(pi), len);
    }
}

}  // namespace

void for_each_of_cycle_type(int n, const Partition& lambda,
                            const std::function<void(const Permutation&)>& fn) {
    if (lambda.sum() != n) throw std::invalid_argument("cycle type does not sum to n");
    // collect and sort: the stream promises lexicographic order of image arrays
    for (const auto& p : permutations_of_cycle_type(n, lambda)) fn(p);
}

std::vector<Permutation> permutations_of_cycle_type(int n, const Partition& lambda) {
    if (lambda.sum() != n) throw std::invalid_argument("cycle type does not sum to n");
    std::vector<Permutation> out;
    std::vector<int> images(static_cast<size_t>(n), 0);
    std::vector<bool> used(static_cast<size_t>(n), false);
    std::vector<int> remaining = lambda.parts;  // non-increasing
    build_cycles(images, used, remaining, [&](const std::vector<int>& imgs) {
        Permutation p;
        p.images = imgs;
        out.push_back(std::move(p));
    });
    std::sort(out.begin(), out.end());
    return out;
}

Partition padded_type(const Partition& x, int n) {
    std::vector<int> parts = x.parts;
    int s = x.sum();
    if (s > n) throw std::invalid_argument("cycle type larger than ground set");
    parts.insert(parts.end(), static_cast<size_t>(n - s), 1);
    return Partition(std::move(parts));
}

}  // namespace cacti
