#include "factorization.hpp"

#include <numeric>

#include "parallel.hpp"

namespace cacti {

namespace {

/// Iterates tuples (sigma_1..sigma_{k-1}) over the given padded cycle-type
/// sets, parallel over sigma_1, and counts tuples accepted by `accept(prefix
/// product sigma_1*...*sigma_{k-1}, tuple)`.
BigInt count_tuples(const std::vector<std::vector<Permutation>>& sets,
                    const std::function<BigInt(const Permutation&,
                                               const std::vector<const Permutation*>&)>& accept) {
    size_t k = sets.size();
    return parallel_count(sets[0].size(), [&](size_t first) {
        BigInt acc = 0;
        std::vector<const Permutation*> tuple(k, nullptr);
        tuple[0] = &sets[0][first];
        auto rec = [&](auto&& self, size_t i, const Permutation& prefix) -> void {
            if (i == k) {
                acc += accept(prefix, tuple);
                return;
            }
            for (const auto& s : sets[i]) {
                tuple[i] = &s;
                self(self, i + 1, prefix * s);
            }
        };
        rec(rec, 1, sets[0][first]);
        return acc;
    });
}

std::vector<std::vector<Permutation>> padded_sets(const Passport& x, int n, size_t upto) {
    std::vector<std::vector<Permutation>> sets;
    for (size_t i = 0; i < upto; ++i)
        sets.push_back(permutations_of_cycle_type(n, padded_type(x.colors[i], n)));
    return sets;
}

}  // namespace

Rational weighted_cactus_count(const Passport& x) {
    int n = constellation_degree(x, 0, 1);
    for (const auto& xi : x.colors)
        if (xi.sum() > n) return 0;  // the color does not fit: no such cactus
    Permutation target = Permutation::forward_cycle(n, n);
    size_t k = x.k();
    // the product being a full cycle already forces transitivity, and the
    // cycle-type bookkeeping forces genus 0 / one face
    Partition last_type = padded_type(x.colors[k - 1], n);
    auto sets = padded_sets(x, n, k - 1);
    BigInt count;
    if (k == 1) {
        // the tuple is (target) itself if the type matches
        count = cycle_type(target) == last_type ? 1 : 0;
    } else {
        count = count_tuples(sets, [&](const Permutation& prefix, const auto&) -> BigInt {
            Permutation sigma_k = prefix.inverse() * target;
            return cycle_type(sigma_k) == last_type ? 1 : 0;
        });
    }
    return Rational(count) / n;
}

Rational weighted_constellation_count(const Passport& x, int genus, int faces) {
    int n = constellation_degree(x, genus, faces);
    for (const auto& xi : x.colors)
        if (xi.sum() > n) return 0;  // the color does not fit: no such constellation
    size_t k = x.k();
    auto sets = padded_sets(x, n, k);
    // deficiency of the colored part is fixed by the passport
    int deficiency = 0;
    for (const auto& xi : x.colors) deficiency += xi.sum() - static_cast<int>(xi.size());
    int want_chi = 2 - 2 * genus;
    BigInt count = parallel_count(sets[0].size(), [&](size_t first) {
        BigInt acc = 0;
        std::vector<Permutation> stack = {sets[0][first]};
        auto rec = [&](auto&& self, size_t i, const Permutation& prefix) -> void {
            if (i == k) {
                Permutation sigma_inf = prefix.inverse();
                int c_inf = sigma_inf.cycle_count();
                if (c_inf != faces) return;
                if (2 * n - deficiency - (n - c_inf) != want_chi) return;
                MonodromyTuple t{n, {}};
                t.sigma = stack;
                if (is_transitive(t)) acc += 1;
                return;
            }
            for (const auto& s : sets[i]) {
                stack.push_back(s);
                self(self, i + 1, prefix * s);
                stack.pop_back();
            }
        };
        rec(rec, 1, sets[0][first]);
        return acc;
    });
    return Rational(count) / Rational(factorial(n));
}

Rational weighted_1n_count(const std::vector<int>& sizes) {
    int k = static_cast<int>(sizes.size());
    int total = std::accumulate(sizes.begin(), sizes.end(), 0);
    int n = total - k - 1;
    if (n < 1) throw std::domain_error("no (1,n)-constellation: n < 1");
    int ground = n + 1;
    for (int s : sizes)
        if (s < 2 || s > ground) throw std::domain_error("polygon size out of range");
    Permutation target = Permutation::forward_cycle(ground, n);  // fixes point n+1

    std::vector<std::vector<Permutation>> sets;
    for (int i = 0; i + 1 < k; ++i)
        sets.push_back(permutations_of_cycle_type(ground, padded_type(Partition({sizes[static_cast<size_t>(i)]}), ground)));
    Partition last_type = padded_type(Partition({sizes[static_cast<size_t>(k - 1)]}), ground);

    BigInt count;
    if (k == 1) {
        count = cycle_type(target) == last_type ? 1 : 0;
    } else {
        count = count_tuples(sets, [&](const Permutation& prefix, const auto& tuple) -> BigInt {
            Permutation sigma_k = prefix.inverse() * target;
            if (!(cycle_type(sigma_k) == last_type)) return 0;
            MonodromyTuple t{ground, {}};
            for (const auto* p : tuple)
                if (p) t.sigma.push_back(*p);
            t.sigma.push_back(sigma_k);
            return is_transitive(t) ? 1 : 0;
        });
    }
    return Rational(count) / n;
}

}  // namespace cacti
