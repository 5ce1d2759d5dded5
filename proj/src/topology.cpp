#include "topology.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <tuple>
#include <numeric>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace cacti {

namespace {

bool is_numeric_length(const std::string& s) {
    return !s.empty() && (std::isdigit((unsigned char)s[0]) || s[0] == '-');
}

struct SlotRef {
    int circle;
    int slot;
};

}  // namespace

int TopologicalType::slot_offset(int c) const {
    int off = 0;
    for (int i = 0; i < c; ++i) off += contact_counts[i];
    return off;
}

int TopologicalType::total_contacts() const {
    return std::accumulate(contact_counts.begin(), contact_counts.end(), 0);
}

int TopologicalType::grade() const {
    return total_contacts() - (int)circles.size();
}

int TopologicalType::total_faces() const {
    return std::accumulate(component_faces.begin(), component_faces.end(), 0);
}

void TopologicalType::analyze() {
    int m = (int)circles.size();
    std::vector<int> offs(m);
    for (int c = 0; c < m; ++c) offs[c] = slot_offset(c);
    auto decompose = [&](int g) -> SlotRef {
        int c = m - 1;
        while (offs[c] > g) --c;
        return {c, g - offs[c]};
    };

    // circle components
    component_of.assign(m, -1);
    int ncomp = 0;
    for (int c = 0; c < m; ++c) {
        if (component_of[c] >= 0) continue;
        std::vector<int> stack{c};
        component_of[c] = ncomp;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (auto [a, b] : matching) {
                int ca = decompose(a).circle, cb = decompose(b).circle;
                int other = -1;
                if (ca == u) other = cb;
                if (cb == u) other = ca;
                if (other >= 0 && component_of[other] < 0) {
                    component_of[other] = ncomp;
                    stack.push_back(other);
                }
            }
        }
        ++ncomp;
    }

    // Face tracing. Arc t of circle c runs from its slot t to slot t+1;
    // darts are the two directions, forward = 2*arc, reverse = 2*arc+1.
    int total = total_contacts();
    auto fwd = [&](int c, int t) { return 2 * (offs[c] + ((t % contact_counts[c] + contact_counts[c]) % contact_counts[c])); };
    auto rev = [&](int c, int t) { return fwd(c, t) + 1; };

    // sigma: counterclockwise successor among the darts leaving a vertex.
    std::vector<int> sigma(2 * total, -1);
    for (auto [ga, gb] : matching) {
        SlotRef sa = decompose(ga), sb = decompose(gb);
        if (circles[sa.circle].color > circles[sb.circle].color) std::swap(sa, sb);
        int ring[4] = {rev(sa.circle, sa.slot - 1), fwd(sa.circle, sa.slot),
                       rev(sb.circle, sb.slot - 1), fwd(sb.circle, sb.slot)};
        for (int j = 0; j < 4; ++j) sigma[ring[j]] = ring[(j + 1) % 4];
    }
    for (int d = 0; d < 2 * total; ++d)
        if (sigma[d] < 0) throw std::logic_error("unmatched slot in face tracing");

    std::vector<int> face_of(2 * total, -1);
    int nfaces = 0;
    for (int d = 0; d < 2 * total; ++d) {
        if (face_of[d] >= 0) continue;
        int e = d;
        do {
            face_of[e] = nfaces;
            e = sigma[e ^ 1];  // rotate after reversing
        } while (e != d);
        ++nfaces;
    }

    // every circle must bound a disc of its own forward darts
    for (int c = 0; c < m; ++c) {
        int f = face_of[fwd(c, 0)];
        for (int d = 0; d < 2 * total; ++d) {
            bool is_fwd_of_c = (d % 2 == 0) && decompose(d / 2).circle == c;
            if ((face_of[d] == f) != is_fwd_of_c)
                throw std::logic_error("circle does not bound a disc; rotation convention broken");
        }
    }

    component_genus.assign(ncomp, 0);
    component_faces.assign(ncomp, 0);
    for (int comp = 0; comp < ncomp; ++comp) {
        int V = 0, E = 0, F = 0, mc = 0;
        for (auto [ga, gb] : matching)
            if (component_of[decompose(ga).circle] == comp) ++V;
        std::set<int> comp_faces;
        for (int c = 0; c < m; ++c)
            if (component_of[c] == comp) {
                E += contact_counts[c];
                ++mc;
                for (int t = 0; t < contact_counts[c]; ++t) {
                    comp_faces.insert(face_of[fwd(c, t)]);
                    comp_faces.insert(face_of[rev(c, t)]);
                }
            }
        F = (int)comp_faces.size();
        int chi = V - E + F;
        if (chi > 2 || chi % 2 != 0) throw std::logic_error("impossible Euler characteristic");
        component_genus[comp] = (2 - chi) / 2;
        component_faces[comp] = F - mc;
    }

    // symmetry: relabelings (circle permutations preserving color, length and
    // contact count; per-circle slot rotations) fixing the matching
    sym = 0;
    auto normal = [&](std::vector<std::pair<int, int>> mm) {
        for (auto& [a, b] : mm)
            if (a > b) std::swap(a, b);
        std::sort(mm.begin(), mm.end());
        return mm;
    };
    auto base = normal(matching);
    std::vector<std::pair<int, int>> dummy_best;
    // reuse the relabeling walk from canonical_key via a callback
    // (implemented inline below to keep both in sync)
    std::map<std::tuple<int, std::string, int>, std::vector<int>> classes;
    for (int c = 0; c < m; ++c)
        classes[{circles[c].color, circles[c].length, contact_counts[c]}].push_back(c);
    std::vector<std::vector<int>> class_members;
    for (auto& [key, v] : classes) class_members.push_back(v);

    std::vector<int> perm(m);
    std::function<void(size_t)> walk_classes = [&](size_t ci) {
        if (ci == class_members.size()) {
            // all slot rotations, mixed radix
            std::vector<int> rot(m, 0);
            while (true) {
                std::vector<std::pair<int, int>> mapped;
                for (auto [a, b] : matching) {
                    SlotRef sa = decompose(a), sb = decompose(b);
                    int na = offs[perm[sa.circle]] +
                             (sa.slot + rot[sa.circle]) % contact_counts[sa.circle];
                    int nb = offs[perm[sb.circle]] +
                             (sb.slot + rot[sb.circle]) % contact_counts[sb.circle];
                    mapped.push_back({na, nb});
                }
                auto key = normal(std::move(mapped));
                if (key == base) ++sym;
                if (dummy_best.empty() || key < dummy_best) dummy_best = key;
                int c = 0;
                while (c < m && rot[c] == contact_counts[c] - 1) rot[c++] = 0;
                if (c == m) break;
                rot[c]++;
            }
            return;
        }
        std::vector<int> members = class_members[ci];
        std::sort(members.begin(), members.end());
        std::vector<int> target = members;
        do {
            for (size_t j = 0; j < members.size(); ++j) perm[members[j]] = target[j];
            walk_classes(ci + 1);
        } while (std::next_permutation(target.begin(), target.end()));
    };
    walk_classes(0);
    canonical_cache_ = dummy_best;
}

std::vector<std::pair<int, int>> TopologicalType::canonical_key() const {
    if (canonical_cache_.empty() && !matching.empty())
        throw std::logic_error("analyze() must run before canonical_key()");
    return canonical_cache_;
}

std::string TopologicalType::to_json() const {
    nlohmann::json j;
    j["circles"] = nlohmann::json::array();
    for (const auto& c : circles) j["circles"].push_back({{"color", c.color}, {"length", c.length}});
    j["contacts"] = contact_counts;
    j["matching"] = nlohmann::json::array();
    for (auto [a, b] : matching) j["matching"].push_back({a, b});
    j["genus"] = component_genus;
    j["faces"] = component_faces;
    j["sym"] = sym;
    return j.dump();
}

std::vector<TopologicalType> enumerate_topological_types(
    const std::vector<CircleSpec>& circles, const TypeFilter& filter) {
    int m = (int)circles.size();
    if (m < 1) throw std::invalid_argument("need at least one circle");

    std::vector<std::vector<int>> assignments;
    if (filter.genus && filter.faces) {
        if (!filter.connected)
            throw std::invalid_argument("genus/faces enumeration requires a connected target");
        int T = *filter.faces + m - 2 + 2 * *filter.genus;  // tangency count
        int total = 2 * T;
        std::vector<int> cur(m, 1);
        std::function<void(int, int)> go = [&](int c, int left) {
            if (c == m - 1) {
                if (left >= 1) {
                    cur[c] = left;
                    assignments.push_back(cur);
                }
                return;
            }
            for (int kc = 1; kc <= left - (m - 1 - c); ++kc) {
                cur[c] = kc;
                go(c + 1, left - kc);
            }
        };
        if (total >= m) go(0, total);
    } else if (filter.max_grade) {
        int maxtot = *filter.max_grade + m;
        std::vector<int> cur(m, 1);
        std::function<void(int, int)> go = [&](int c, int used) {
            if (c == m) {
                if (used % 2 == 0) assignments.push_back(cur);
                return;
            }
            for (int kc = 1; used + kc + (m - 1 - c) <= maxtot; ++kc) {
                cur[c] = kc;
                go(c + 1, used + kc);
            }
        };
        go(0, 0);
    } else {
        throw std::invalid_argument("either genus+faces or max_grade must bound the types");
    }

    // key on contact counts as well: types with different slot distributions
    // can produce identical canonical pair lists
    std::map<std::pair<std::vector<int>, std::vector<std::pair<int, int>>>, TopologicalType>
        seen;
    for (const auto& counts : assignments) {
        int total = std::accumulate(counts.begin(), counts.end(), 0);
        if (total % 2 != 0) continue;
        std::vector<int> offs(m, 0);
        for (int c = 1; c < m; ++c) offs[c] = offs[c - 1] + counts[c - 1];
        auto circle_of = [&](int g) {
            int c = m - 1;
            while (offs[c] > g) --c;
            return c;
        };

        std::vector<std::pair<int, int>> pairs;
        std::vector<bool> used(total, false);
        std::function<void()> match = [&]() {
            int a = 0;
            while (a < total && used[a]) ++a;
            if (a == total) {
                TopologicalType t;
                t.circles = circles;
                t.contact_counts = counts;
                t.matching = pairs;
                t.analyze();
                if (filter.connected && t.components() != 1) return;
                if (filter.genus && (t.components() != 1 || t.component_genus[0] != *filter.genus))
                    return;
                if (filter.faces && t.total_faces() != *filter.faces) return;
                auto key = std::make_pair(counts, t.canonical_key());
                if (!seen.count(key)) seen.emplace(key, std::move(t));
                return;
            }
            used[a] = true;
            for (int b = a + 1; b < total; ++b) {
                if (used[b]) continue;
                if (circles[circle_of(a)].color == circles[circle_of(b)].color) continue;
                used[b] = true;
                pairs.push_back({a, b});
                match();
                pairs.pop_back();
                used[b] = false;
            }
            used[a] = false;
        };
        match();
    }

    std::vector<TopologicalType> out;
    for (auto& [key, t] : seen) out.push_back(std::move(t));
    return out;
}

MVPolynomial type_volume(const TopologicalType& t) {
    MVPolynomial v = MVPolynomial::constant(Rational(1) / Rational(t.sym));
    for (size_t c = 0; c < t.circles.size(); ++c) {
        int e = t.contact_counts[c] - 1;
        v = v * MVPolynomial::constant(Rational(1) / Rational(factorial(e)));
        if (e == 0) continue;
        if (is_numeric_length(t.circles[c].length))
            v = v * MVPolynomial::constant(rat_pow(rat_from_string(t.circles[c].length), e));
        else
            v = v * MVPolynomial::monomial(t.circles[c].length, e);
    }
    return v;
}

MVPolynomial stratum_volume(const std::vector<CircleSpec>& circles, int genus, int faces) {
    TypeFilter f;
    f.genus = genus;
    f.faces = faces;
    f.connected = true;
    MVPolynomial total = MVPolynomial::constant(0);
    for (const auto& t : enumerate_topological_types(circles, f)) total = total + type_volume(t);
    return total;
}

}  // namespace cacti
