#include "plane_cactus.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace cacti {

namespace {

// vertex id -> list of (polygon, position)
std::map<int, std::vector<std::pair<int, int>>> incidences(const PlaneCactus& c) {
    std::map<int, std::vector<std::pair<int, int>>> inc;
    for (size_t p = 0; p < c.k(); ++p)
        for (int j = 0; j < c.sizes[p]; ++j)
            inc[c.verts[p][j]].push_back({(int)p, j});
    return inc;
}

// Rotation offsets for every polygon once polygon 0 is rotated by r:
// polygon p's normalized position 0 is where p was first reached.
std::vector<int> propagate_rotations(const PlaneCactus& c,
                                     const std::map<int, std::vector<std::pair<int, int>>>& inc,
                                     int r) {
    std::vector<int> rot(c.k(), -1);
    rot[0] = r;
    std::queue<int> q;
    q.push(0);
    while (!q.empty()) {
        int p = q.front();
        q.pop();
        for (int s = 0; s < c.sizes[p]; ++s) {
            int v = c.verts[p][(s + rot[p]) % c.sizes[p]];
            for (auto [w, pos] : inc.at(v)) {
                if (rot[w] < 0) {
                    rot[w] = pos;
                    q.push(w);
                }
            }
        }
    }
    return rot;
}

std::vector<int> encoding_for_rotation(const PlaneCactus& c,
                                       const std::map<int, std::vector<std::pair<int, int>>>& inc,
                                       int r) {
    std::vector<int> rot = propagate_rotations(c, inc, r);
    // Shared vertices as sorted lists of (polygon, normalized position).
    std::vector<std::vector<int>> rows;
    for (const auto& [v, at] : inc) {
        if (at.size() < 2) continue;
        std::vector<std::pair<int, int>> norm;
        for (auto [p, j] : at)
            norm.push_back({p, (j - rot[p] + c.sizes[p]) % c.sizes[p]});
        std::sort(norm.begin(), norm.end());
        std::vector<int> row;
        for (auto [p, j] : norm) {
            row.push_back(p);
            row.push_back(j);
        }
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end());
    std::vector<int> flat;
    for (auto& row : rows) {
        flat.insert(flat.end(), row.begin(), row.end());
        flat.push_back(-1);
    }
    return flat;
}

}  // namespace

int PlaneCactus::vertex_count() const {
    std::set<int> ids;
    for (const auto& poly : verts) ids.insert(poly.begin(), poly.end());
    return (int)ids.size();
}

std::vector<int> PlaneCactus::canonical_encoding() const {
    auto inc = incidences(*this);
    std::vector<int> best;
    for (int r = 0; r < sizes[0]; ++r) {
        auto enc = encoding_for_rotation(*this, inc, r);
        if (best.empty() || enc < best) best = std::move(enc);
    }
    return best;
}

int PlaneCactus::symmetry_order() const {
    auto inc = incidences(*this);
    std::vector<std::vector<int>> encs;
    for (int r = 0; r < sizes[0]; ++r) encs.push_back(encoding_for_rotation(*this, inc, r));
    auto best = *std::min_element(encs.begin(), encs.end());
    return (int)std::count(encs.begin(), encs.end(), best);
}

MarkedPolygon MarkedPolygon::canonical() const {
    MarkedPolygon best = *this;
    for (int r = 1; r < size; ++r) {
        MarkedPolygon cand;
        cand.size = size;
        cand.marks.resize(size);
        for (int j = 0; j < size; ++j) cand.marks[j] = marks[(j + r) % size];
        if (cand.marks < best.marks) best = std::move(cand);
    }
    return best;
}

bool MarkedPolygon::operator==(const MarkedPolygon& o) const {
    return size == o.size && canonical().marks == o.canonical().marks;
}

bool MarkedPolygon::operator<(const MarkedPolygon& o) const {
    if (size != o.size) return size < o.size;
    return canonical().marks < o.canonical().marks;
}

std::vector<PlaneCactus> enumerate_plane_cacti(const std::vector<int>& sizes) {
    size_t k = sizes.size();
    if (k < 2) throw std::invalid_argument("need at least two polygons");
    for (int n : sizes)
        if (n < 2) throw std::invalid_argument("polygon sizes must be >= 2");

    // All labeled trees on k nodes via Pruefer sequences.
    std::vector<std::vector<int>> parent_arrays;  // parent of node i, root 0
    auto record_tree = [&](const std::vector<std::pair<int, int>>& edges) {
        std::vector<std::vector<int>> adj(k);
        for (auto [a, b] : edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        std::vector<int> parent(k, -1);
        std::queue<int> q;
        q.push(0);
        std::vector<bool> seen(k, false);
        seen[0] = true;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : adj[u])
                if (!seen[w]) {
                    seen[w] = true;
                    parent[w] = u;
                    q.push(w);
                }
        }
        parent_arrays.push_back(parent);
    };
    if (k == 2) {
        record_tree({{0, 1}});
    } else {
        std::vector<int> seq(k - 2, 0);
        while (true) {
            // decode Pruefer sequence
            std::vector<int> deg(k, 1);
            for (int s : seq) deg[s]++;
            std::vector<std::pair<int, int>> edges;
            std::set<int> leaves;
            for (size_t i = 0; i < k; ++i)
                if (deg[i] == 1) leaves.insert((int)i);
            std::vector<int> rest(seq.begin(), seq.end());
            for (int s : rest) {
                int leaf = *leaves.begin();
                leaves.erase(leaves.begin());
                edges.push_back({leaf, s});
                if (--deg[s] == 1) leaves.insert(s);
            }
            int a = *leaves.begin(), b = *std::next(leaves.begin());
            edges.push_back({a, b});
            record_tree(edges);

            size_t pos = 0;
            while (pos < seq.size() && seq[pos] == (int)k - 1) seq[pos++] = 0;
            if (pos == seq.size()) break;
            seq[pos]++;
        }
    }

    std::set<std::vector<int>> seen;
    std::vector<PlaneCactus> out;
    for (const auto& parent : parent_arrays) {
        // slot[i] = position on the parent polygon where child i attaches
        std::vector<int> slot(k, 0);
        while (true) {
            // global vertex ids with union-find over (polygon, position)
            std::vector<int> offset(k, 0);
            int total = 0;
            for (size_t p = 0; p < k; ++p) {
                offset[p] = total;
                total += sizes[p];
            }
            std::vector<int> uf(total);
            for (int i = 0; i < total; ++i) uf[i] = i;
            std::function<int(int)> find = [&](int x) {
                while (uf[x] != x) x = uf[x] = uf[uf[x]];
                return x;
            };
            for (size_t i = 1; i < k; ++i) {
                int a = find(offset[i]);  // child's position 0
                int b = find(offset[parent[i]] + slot[i]);
                uf[a] = b;
            }
            PlaneCactus c;
            c.sizes = sizes;
            c.verts.resize(k);
            for (size_t p = 0; p < k; ++p)
                for (int j = 0; j < sizes[p]; ++j) c.verts[p].push_back(find(offset[p] + j));
            auto enc = c.canonical_encoding();
            if (seen.insert(enc).second) out.push_back(std::move(c));

            size_t i = 1;
            while (i < k && slot[i] == sizes[parent[i]] - 1) slot[i++] = 0;
            if (i == k) break;
            slot[i]++;
        }
    }
    std::sort(out.begin(), out.end(), [](const PlaneCactus& a, const PlaneCactus& b) {
        return a.canonical_encoding() < b.canonical_encoding();
    });
    return out;
}

MarkedPolygon encode_cactus(const PlaneCactus& c) {
    size_t k = c.k();
    std::map<int, std::vector<int>> polys;  // alive polygons, cyclic vertex lists
    for (size_t p = 0; p < k; ++p) polys[(int)p] = c.verts[p];
    std::map<int, std::vector<int>> marks;
    int total_before = c.vertex_count();

    auto shared_vertex = [&](int p, int q) -> int {
        std::set<int> pv(polys[p].begin(), polys[p].end());
        for (int v : polys[q])
            if (pv.count(v)) return v;
        throw std::logic_error("polygons do not share a vertex");
    };

    for (size_t i = 1; i < k; ++i) {
        // shortest path 0 -> i in the polygon adjacency graph of alive polygons
        std::map<int, int> prev;
        prev[0] = 0;
        std::queue<int> q;
        q.push(0);
        while (!q.empty() && !prev.count((int)i)) {
            int p = q.front();
            q.pop();
            std::set<int> pv(polys[p].begin(), polys[p].end());
            for (const auto& [w, wverts] : polys) {
                if (prev.count(w)) continue;
                for (int v : wverts)
                    if (pv.count(v)) {
                        prev[w] = p;
                        q.push(w);
                        break;
                    }
            }
        }
        std::vector<int> path;  // i back to 0
        for (int p = (int)i; p != 0; p = prev.at(p)) path.push_back(p);
        path.push_back(0);
        std::reverse(path.begin(), path.end());  // 0 ... i

        int B = shared_vertex(path[path.size() - 2], (int)i);
        int A = (path.size() == 2) ? B : shared_vertex(0, path[1]);

        // open polygon i at B and splice after A into polygon 0
        std::vector<int>& pi = polys[(int)i];
        auto itB = std::find(pi.begin(), pi.end(), B);
        std::rotate(pi.begin(), itB, pi.end());  // now starts with B
        std::vector<int>& p0 = polys[0];
        auto itA = std::find(p0.begin(), p0.end(), A);
        p0.insert(itA + 1, pi.begin() + 1, pi.end());
        polys.erase((int)i);
        marks[B].push_back((int)i + 1);  // colors are 1-based

        std::set<int> now;
        for (const auto& [p, vs] : polys) now.insert(vs.begin(), vs.end());
        if ((int)now.size() != total_before)
            throw std::logic_error("merge step changed the vertex count");
    }

    MarkedPolygon m;
    m.size = (int)polys[0].size();
    m.marks.resize(m.size);
    for (int j = 0; j < m.size; ++j) {
        auto it = marks.find(polys[0][j]);
        if (it != marks.end()) {
            m.marks[j] = it->second;
            std::sort(m.marks[j].begin(), m.marks[j].end());
        }
    }
    return m.canonical();
}

PlaneCactus decode_cactus(const MarkedPolygon& m, const std::vector<int>& sizes) {
    size_t k = sizes.size();
    int n = 0;
    for (int s : sizes) n += s;
    n -= (int)k - 1;
    if (m.size != n) throw std::invalid_argument("marked polygon size does not match the sizes");

    std::map<int, std::vector<int>> polys;
    polys[0].resize(m.size);
    for (int j = 0; j < m.size; ++j) polys[0][j] = j;
    std::map<int, std::vector<int>> marks;  // vertex -> labels
    for (int j = 0; j < m.size; ++j)
        if (!m.marks[j].empty()) marks[j] = m.marks[j];

    auto shared_vertex = [&](int p, int q) -> int {
        std::set<int> pv(polys[p].begin(), polys[p].end());
        for (int v : polys[q])
            if (pv.count(v)) return v;
        throw std::logic_error("polygons do not share a vertex");
    };

    for (size_t i = k - 1; i >= 1; --i) {
        int label = (int)i + 1;
        int B = -1;
        for (auto& [v, ls] : marks)
            if (std::find(ls.begin(), ls.end(), label) != ls.end()) {
                if (B >= 0) throw std::invalid_argument("duplicate mark");
                B = v;
            }
        if (B < 0) throw std::invalid_argument("missing mark");

        std::vector<int>& p0 = polys[0];
        int A;
        if (std::find(p0.begin(), p0.end(), B) != p0.end()) {
            A = B;
        } else {
            // host polygon of B, then the branch attachment on polygon 0
            int host = -1;
            for (auto& [p, vs] : polys)
                if (p != 0 && std::find(vs.begin(), vs.end(), B) != vs.end()) host = p;
            if (host < 0) throw std::invalid_argument("marked vertex vanished");
            std::map<int, int> prev;
            prev[0] = 0;
            std::queue<int> q;
            q.push(0);
            while (!q.empty() && !prev.count(host)) {
                int p = q.front();
                q.pop();
                std::set<int> pv(polys[p].begin(), polys[p].end());
                for (const auto& [w, wverts] : polys) {
                    if (prev.count(w)) continue;
                    for (int v : wverts)
                        if (pv.count(v)) {
                            prev[w] = p;
                            q.push(w);
                            break;
                        }
                }
            }
            int first = host;
            while (prev.at(first) != 0) first = prev.at(first);
            A = shared_vertex(0, first);
        }

        auto itA = std::find(p0.begin(), p0.end(), A);
        std::rotate(p0.begin(), itA, p0.end());  // A at position 0
        int take = sizes[i] - 1;
        if ((int)p0.size() < take + 1)
            throw std::invalid_argument("not enough vertices left to split off a polygon");
        std::vector<int> piece(p0.begin() + 1, p0.begin() + 1 + take);
        p0.erase(p0.begin() + 1, p0.begin() + 1 + take);
        std::vector<int> cyc;
        cyc.push_back(B);
        cyc.insert(cyc.end(), piece.begin(), piece.end());
        polys[(int)i] = std::move(cyc);

        auto& ls = marks[B];
        ls.erase(std::find(ls.begin(), ls.end(), label));
        if (ls.empty()) marks.erase(B);
    }
    if (!marks.empty()) throw std::invalid_argument("stray marks");

    PlaneCactus c;
    c.sizes = sizes;
    for (size_t p = 0; p < k; ++p) {
        if ((int)polys[(int)p].size() != sizes[p])
            throw std::logic_error("reconstructed polygon has wrong size");
        c.verts.push_back(polys[(int)p]);
    }
    return c;
}

}  // namespace cacti
