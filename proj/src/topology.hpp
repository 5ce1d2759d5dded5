#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polynomial.hpp"
#include "rational.hpp"

namespace cacti {

/// One circle of a gluing pattern: a color (distinct colors may be glued)
/// and a length, either a symbol name or a "num/den" literal.
struct CircleSpec {
    int color = 0;
    std::string length;
};

/// Combinatorial type of a configuration of tangent circles on a surface:
/// how many tangency points each circle carries and which slots are glued.
/// Slots of circle c are numbered 0..k_c-1 counterclockwise; the global id
/// of slot t on circle c is offset(c) + t.
struct TopologicalType {
    std::vector<CircleSpec> circles;
    std::vector<int> contact_counts;
    std::vector<std::pair<int, int>> matching;  // global slot ids, a < b

    // derived by analyze()
    std::vector<int> component_of;      // per circle
    std::vector<int> component_genus;   // per component
    std::vector<int> component_faces;   // non-disc faces per component
    long sym = 1;                       // relabelings fixing the matching

    int components() const { return (int)component_genus.size(); }
    int total_faces() const;   // non-disc faces over all components
    int total_contacts() const;
    int grade() const;         // sum of (k_c - 1)
    int slot_offset(int c) const;

    /// Fills the derived fields: components, genus and non-disc face counts
    /// from face tracing, and the symmetry order.
    void analyze();

    /// Matching in minimal form over all relabelings (per-circle rotations
    /// and permutations of circles with equal color, length and contacts).
    std::vector<std::pair<int, int>> canonical_key() const;

    std::string to_json() const;

   private:
    std::vector<std::pair<int, int>> canonical_cache_;
};

struct TypeFilter {
    std::optional<int> genus;       // per connected type
    std::optional<int> faces;       // non-disc faces of a connected type
    bool connected = true;
    std::optional<int> max_grade;   // cap on sum of (k_c - 1)
};

/// All types for the given circles matching the filter, one per isomorphism
/// class, sorted by canonical key. Every circle must carry at least one
/// tangency. With genus and faces set (and connected), the total contact
/// count is forced; otherwise max_grade must bound the enumeration.
std::vector<TopologicalType> enumerate_topological_types(
    const std::vector<CircleSpec>& circles, const TypeFilter& filter);

/// (1/sym) * prod_c len_c^{k_c-1} / (k_c-1)!; numeric lengths fold into the
/// constant, symbolic lengths stay as variables.
MVPolynomial type_volume(const TopologicalType& t);

/// Sum of type_volume over all types with the given genus and non-disc face
/// count (connected).
MVPolynomial stratum_volume(const std::vector<CircleSpec>& circles, int genus, int faces);

}  // namespace cacti
