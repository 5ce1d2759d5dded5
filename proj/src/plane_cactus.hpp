#pragma once

#include <set>
#include <string>
#include <vector>

#include "rational.hpp"

namespace cacti {

/// Plane cactus with polygons of pairwise distinct colors 1..k (index 0..k-1).
/// verts[c] lists polygon c's vertex ids counterclockwise; vertices shared
/// between polygons carry the same id.
struct PlaneCactus {
    std::vector<int> sizes;
    std::vector<std::vector<int>> verts;

    size_t k() const { return sizes.size(); }
    int vertex_count() const;

    /// Minimum lexicographic encoding over all relabelings (rotations of
    /// polygon 1 propagate to the rest); cacti are equal iff encodings are.
    std::vector<int> canonical_encoding() const;
    /// Number of relabelings fixing the structure (trivial for k >= 2).
    int symmetry_order() const;

    bool operator==(const PlaneCactus& o) const {
        return canonical_encoding() == o.canonical_encoding();
    }
};

/// Single n-gon with vertices marked by labels from {2..k}, each label used
/// exactly once; a vertex may carry several labels. Considered up to rotation.
struct MarkedPolygon {
    int size = 0;
    std::vector<std::vector<int>> marks;  // per position, sorted labels

    /// Rotation-minimal representative.
    MarkedPolygon canonical() const;
    bool operator==(const MarkedPolygon& o) const;
    bool operator<(const MarkedPolygon& o) const;
};

/// All plane cacti up to isomorphism glued from k >= 2 polygons of distinct
/// colors with the given sizes, sorted by canonical encoding.
std::vector<PlaneCactus> enumerate_plane_cacti(const std::vector<int>& sizes);

/// The merging bijection of the distinct-color cactus count: repeatedly
/// merges polygon i (i = 2..k) into polygon 1, marking the cut vertex.
MarkedPolygon encode_cactus(const PlaneCactus& c);

/// Inverse of encode_cactus; needs the remembered size list.
PlaneCactus decode_cactus(const MarkedPolygon& m, const std::vector<int>& sizes);

}  // namespace cacti
