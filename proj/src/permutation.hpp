#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rational.hpp"

namespace cacti {

/// Partition: non-increasing list of positive integers.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int sum() const;
    size_t size() const { return parts.size(); }
    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }
};

/// Passport: one partition per color, every part >= 2.
struct Passport {
    std::vector<Partition> colors;

    Passport() = default;
    explicit Passport(std::vector<Partition> c);

    size_t k() const { return colors.size(); }
    std::string to_string() const;  // "2,2;3" grammar
};

/// Parses the CLI passport grammar: colors separated by ';', parts by ','.
Passport parse_passport(const std::string& text);

/// Permutation of {0..n-1} (the spec's {1..n}, shifted), stored as the image
/// array.
struct Permutation {
    std::vector<int> images;

    Permutation() = default;
    explicit Permutation(std::vector<int> imgs);
    static Permutation identity(int n);
    /// The cycle (0 1 ... len-1) padded with fixed points up to n.
    static Permutation forward_cycle(int n, int len);

    int n() const { return static_cast<int>(images.size()); }
    int operator()(int x) const { return images[static_cast<size_t>(x)]; }

    Permutation inverse() const;
    /// Composition: (*this then after) applied right-to-left, (a*b)(x)=a(b(x)).
    Permutation operator*(const Permutation& o) const;
    bool operator==(const Permutation& o) const { return images == o.images; }
    bool operator<(const Permutation& o) const { return images < o.images; }

    int cycle_count() const;
    int fixed_points() const;
};

Partition cycle_type(const Permutation& p);

struct MonodromyTuple {
    int n = 0;
    std::vector<Permutation> sigma;
};

bool is_transitive(const MonodromyTuple& t);

struct EulerData {
    int genus;
    int faces;
};

/// Genus and face count of the natural embedding:
/// 2-2g = 2n - sum_i(n - c(sigma_i)) - (n - c(sigma_inf)), faces = c(sigma_inf).
EulerData euler_data(const MonodromyTuple& t);

/// |Aut X| = product of factorials of part multiplicities (all parts >= 2).
BigInt passport_aut(const Partition& x);

/// Ground-set size forced by Riemann-Hurwitz:
/// n = 2 - 2g - p + sum_i (n_i - p_i). Throws when no constellation exists.
int constellation_degree(const Passport& x, int genus, int faces);

/// z_lambda = prod j^{a_j} a_j!, the centralizer order of a permutation of
/// cycle type lambda.
BigInt centralizer_size(const Partition& lambda);

/// All permutations of {0..n-1} with the given cycle type, in lexicographic
/// order of image arrays. lambda must sum to n.
std::vector<Permutation> permutations_of_cycle_type(int n, const Partition& lambda);

/// Streaming variant; visits in the same deterministic order.
void for_each_of_cycle_type(int n, const Partition& lambda,
                            const std::function<void(const Permutation&)>& fn);

/// Pads a passport entry with fixed points: [parts..., 1,1,...] summing to n.
Partition padded_type(const Partition& x, int n);

}  // namespace cacti
