#include "sgspec/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <stdexcept>

namespace sgspec {

namespace {

constexpr int kMaxVertices = 64;

void require_small(const SignedGraph& g) {
    if (g.order() > kMaxVertices)
        throw std::invalid_argument("graph too large for isomorphism machinery (n > 64)");
}

std::vector<uint64_t> adjacency_masks(const SignedGraph& g) {
    std::vector<uint64_t> rows(g.order(), 0);
    for (const auto& e : g.edges()) {
        rows[e.u] |= uint64_t(1) << e.v;
        rows[e.v] |= uint64_t(1) << e.u;
    }
    return rows;
}

int components_count_only(const SignedGraph& g) {
    auto adj = g.adjacency();
    std::vector<char> seen(g.order(), 0);
    int count = 0;
    for (int s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        ++count;
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (auto [v, sgn] : adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    q.push(v);
                }
        }
    }
    return count;
}

// Per-vertex invariant of the underlying graph: degree plus the sorted
// multiset of BFS distances (unreachable encoded large).
std::vector<std::vector<int>> vertex_profiles(const SignedGraph& g) {
    int n = g.order();
    auto adj = g.adjacency();
    std::vector<std::vector<int>> prof(n);
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(n, n + 1);
        dist[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (auto [v, sgn] : adj[u])
                if (dist[v] > dist[u] + 1) {
                    dist[v] = dist[u] + 1;
                    q.push(v);
                }
        }
        std::sort(dist.begin(), dist.end());
        prof[s].push_back(static_cast<int>(adj[s].size()));
        prof[s].insert(prof[s].end(), dist.begin(), dist.end());
    }
    return prof;
}

struct Classes {
    std::vector<int> of;        // vertex -> class id (ids ordered by profile value)
    std::vector<int> at_pos;    // position -> class id
    int count = 0;
};

Classes vertex_classes(const SignedGraph& g) {
    auto prof = vertex_profiles(g);
    std::map<std::vector<int>, std::vector<int>> groups;
    for (int v = 0; v < g.order(); ++v) groups[prof[v]].push_back(v);
    Classes c;
    c.of.assign(g.order(), -1);
    int id = 0;
    for (const auto& [p, verts] : groups) {
        for (int v : verts) c.of[v] = id;
        for (size_t i = 0; i < verts.size(); ++i) c.at_pos.push_back(id);
        ++id;
    }
    c.count = id;
    return c;
}

// Maximal column-serialization search. placed[k] is the vertex at position k;
// column k is the adjacency bit pattern to positions 0..k-1 (position 0 most
// significant). Maximizing keeps canonical orderings adjacency-clustered, so
// tie branches stay within the automorphism group. Collects every placement
// achieving the maximum.
struct CanonSearch {
    int n;
    const std::vector<uint64_t>& rows;
    const Classes& classes;
    std::vector<uint64_t> best_cols;
    std::vector<std::vector<int>> best_perms;
    std::vector<int> placed;
    uint64_t used = 0;
    bool single_placement = false;  // forests: signs normalize identically

    CanonSearch(int n_, const std::vector<uint64_t>& rows_, const Classes& cls)
        : n(n_), rows(rows_), classes(cls) {
        best_cols.assign(n, 0);
        placed.reserve(n);
    }

    uint64_t column_of(int v) const {
        int k = static_cast<int>(placed.size());
        uint64_t col = 0;
        for (int i = 0; i < k; ++i)
            col |= ((rows[v] >> placed[i]) & 1) << (k - 1 - i);
        return col;
    }

    void run() {
        descend();
    }

    void descend() {
        int k = static_cast<int>(placed.size());
        if (k == n) {
            if (!single_placement || best_perms.empty()) best_perms.push_back(placed);
            return;
        }
        if (best_perms.size() > 2'000'000)
            throw std::runtime_error("canonical_key: automorphism group too large");
        std::vector<std::pair<uint64_t, int>> cands;
        for (int v = 0; v < n; ++v) {
            if (used & (uint64_t(1) << v)) continue;
            if (classes.of[v] != classes.at_pos[k]) continue;
            cands.emplace_back(column_of(v), v);
        }
        std::sort(cands.begin(), cands.end(),
                  [](const auto& a, const auto& b) { return a > b; });
        for (size_t ci = 0; ci < cands.size(); ++ci) {
            auto [col, v] = cands[ci];
            if (col < best_cols[k]) break;
            if (single_placement && is_shadowed_twin(cands, ci)) continue;
            if (col > best_cols[k]) {
                best_cols[k] = col;
                for (int j = k + 1; j < n; ++j) best_cols[j] = 0;
                best_perms.clear();
            }
            placed.push_back(v);
            used |= uint64_t(1) << v;
            descend();
            placed.pop_back();
            used &= ~(uint64_t(1) << v);
        }
    }

    // Interchangeable siblings (identical adjacency up to each other) lead to
    // identical serializations; when signs cannot differ, one branch suffices.
    bool is_shadowed_twin(const std::vector<std::pair<uint64_t, int>>& cands, size_t ci) const {
        auto [col, v] = cands[ci];
        for (size_t cj = 0; cj < ci; ++cj) {
            auto [colj, u] = cands[cj];
            if (colj != col) continue;
            if (rows[u] == rows[v] ||
                (rows[u] | (uint64_t(1) << u)) == (rows[v] | (uint64_t(1) << v)))
                return true;
        }
        return false;
    }
};

std::string serialize_key(const SignedGraph& normalized) {
    // n, packed column bits of the underlying graph, packed sign bits
    // (column-major edge order; bit 1 = negative).
    int n = normalized.order();
    std::string out;
    out.push_back(static_cast<char>(n));
    std::vector<char> bits;
    auto rows = adjacency_masks(normalized);
    for (int k = 1; k < n; ++k)
        for (int i = 0; i < k; ++i) bits.push_back((rows[k] >> i) & 1 ? 1 : 0);
    std::map<std::pair<int, int>, int> sign_at;
    for (const auto& e : normalized.edges()) sign_at[{e.v, e.u}] = e.sign;
    for (const auto& [vu, s] : sign_at) bits.push_back(s < 0 ? 1 : 0);
    for (size_t i = 0; i < bits.size(); i += 8) {
        unsigned char byte = 0;
        for (size_t j = i; j < std::min(bits.size(), i + 8); ++j)
            byte = static_cast<unsigned char>((byte << 1) | bits[j]);
        if (bits.size() - i < 8) byte = static_cast<unsigned char>(byte << (8 - (bits.size() - i)));
        out.push_back(static_cast<char>(byte));
    }
    return out;
}

}  // namespace

std::pair<SignedGraph, std::string> canonical_form(const SignedGraph& g) {
    require_small(g);
    int n = g.order();
    if (n == 0) return {g, std::string(1, '\0')};
    auto rows = adjacency_masks(g);
    auto classes = vertex_classes(g);
    CanonSearch search(n, rows, classes);
    {
        int comp_count = static_cast<int>(components_count_only(g));
        search.single_placement = (g.size() == n - comp_count);  // forest
    }
    search.run();

    // Among placements minimizing the underlying serialization, pick the
    // minimal normalized sign pattern.
    SignedGraph best_graph;
    std::string best_key;
    for (const auto& placement : search.best_perms) {
        std::vector<int> perm(n);
        for (int k = 0; k < n; ++k) perm[placement[k]] = k;
        SignedGraph candidate = forest_normalized(relabeled(g, perm));
        std::string key = serialize_key(candidate);
        if (best_key.empty() || key < best_key) {
            best_key = key;
            best_graph = candidate;
        }
    }
    return {best_graph, best_key};
}

std::string canonical_key(const SignedGraph& g) { return canonical_form(g).second; }

SignedGraph apply_witness(const SignedGraph& g, const SwitchWitness& w) {
    return relabeled(switched(g, w.switch_set), w.permutation);
}

bool witness_checks(const SignedGraph& g, const SignedGraph& h, const SwitchWitness& w) {
    return apply_witness(g, w) == h;
}

namespace {

// Switch set turning g2 into h (same underlying labeled graph, matching
// fundamental cycle signs); nullopt when sign discrepancies are inconsistent.
std::optional<std::vector<int>> switching_set_between(const SignedGraph& g2,
                                                      const SignedGraph& h) {
    int n = h.order();
    std::vector<std::vector<std::pair<int, int>>> diff(n);
    for (size_t i = 0; i < h.edges().size(); ++i) {
        const auto& eh = h.edges()[i];
        const auto& eg = g2.edges()[i];
        int d = eh.sign * eg.sign;  // -1 where the switch must flip
        diff[eh.u].emplace_back(eh.v, d);
        diff[eh.v].emplace_back(eh.u, d);
    }
    std::vector<int> s(n, 0);
    for (int root = 0; root < n; ++root) {
        if (s[root] != 0) continue;
        s[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (auto [v, d] : diff[u]) {
                if (s[v] == 0) {
                    s[v] = s[u] * d;
                    q.push(v);
                } else if (s[v] != s[u] * d) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<int> X;
    for (int v = 0; v < n; ++v)
        if (s[v] < 0) X.push_back(v);
    return X;
}

struct IsoSearch {
    const SignedGraph& g;
    const SignedGraph& h;
    std::vector<uint64_t> grows, hrows;
    std::vector<std::vector<int>> candidates;  // per g-vertex, admissible h-vertices
    std::vector<int> order;                    // g-vertices, most-constrained first
    std::vector<int> mapping;                  // g-vertex -> h-vertex
    uint64_t used = 0;
    std::optional<SwitchWitness> found;

    IsoSearch(const SignedGraph& g_, const SignedGraph& h_) : g(g_), h(h_) {
        grows = adjacency_masks(g);
        hrows = adjacency_masks(h);
    }

    bool complete() {
        // signs: compare fundamental cycle signs on the identical underlying graph
        SignedGraph g2 = relabeled(g, mapping);
        auto fg = fundamental_cycle_signs(g2);
        auto fh = fundamental_cycle_signs(h);
        if (fg.size() != fh.size()) return false;
        for (size_t i = 0; i < fg.size(); ++i)
            if (fg[i].first.u != fh[i].first.u || fg[i].first.v != fh[i].first.v ||
                fg[i].second != fh[i].second)
                return false;
        auto X = switching_set_between(g2, h);
        if (!X) return false;
        // pull the switch set back to g's labeling
        std::vector<int> Xg;
        std::vector<char> mark(h.order(), 0);
        for (int v : *X) mark[v] = 1;
        for (int u = 0; u < g.order(); ++u)
            if (mark[mapping[u]]) Xg.push_back(u);
        SwitchWitness w{mapping, Xg};
        if (!witness_checks(g, h, w))
            throw std::logic_error("switching witness failed verification");
        found = w;
        return true;
    }

    bool descend(size_t depth) {
        if (depth == order.size()) return complete();
        int u = order[depth];
        uint64_t placed_mask = 0;
        for (size_t i = 0; i < depth; ++i) placed_mask |= uint64_t(1) << order[i];
        for (int t : candidates[u]) {
            if (used & (uint64_t(1) << t)) continue;
            bool ok = true;
            for (size_t i = 0; i < depth && ok; ++i) {
                int gu = order[i];
                bool adj_g = (grows[u] >> gu) & 1;
                bool adj_h = (hrows[t] >> mapping[gu]) & 1;
                if (adj_g != adj_h) ok = false;
            }
            if (!ok) continue;
            mapping[u] = t;
            used |= uint64_t(1) << t;
            if (descend(depth + 1)) return true;
            used &= ~(uint64_t(1) << t);
        }
        return false;
    }
};

}  // namespace

std::optional<SwitchWitness> are_switching_isomorphic(const SignedGraph& g,
                                                      const SignedGraph& h) {
    require_small(g);
    require_small(h);
    if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
    int n = g.order();
    if (n == 0) return SwitchWitness{{}, {}};

    auto pg = vertex_profiles(g);
    auto ph = vertex_profiles(h);
    {
        auto sg = pg;
        auto sh = ph;
        std::sort(sg.begin(), sg.end());
        std::sort(sh.begin(), sh.end());
        if (sg != sh) return std::nullopt;
    }

    IsoSearch search(g, h);
    search.candidates.assign(n, {});
    for (int u = 0; u < n; ++u)
        for (int t = 0; t < n; ++t)
            if (pg[u] == ph[t]) search.candidates[u].push_back(t);

    // Order: rarest profile first, then grow by adjacency to keep the partial
    // mapping constrained.
    std::vector<char> chosen(n, 0);
    int first = 0;
    for (int v = 0; v < n; ++v)
        if (search.candidates[v].size() < search.candidates[first].size()) first = v;
    search.order.push_back(first);
    chosen[first] = 1;
    auto gadj = g.adjacency();
    while (static_cast<int>(search.order.size()) < n) {
        int best = -1, best_links = -1;
        for (int v = 0; v < n; ++v) {
            if (chosen[v]) continue;
            int links = 0;
            for (auto [w, sgn] : gadj[v])
                if (chosen[w]) ++links;
            if (links > best_links ||
                (links == best_links && best != -1 &&
                 search.candidates[v].size() < search.candidates[best].size())) {
                best = v;
                best_links = links;
            }
        }
        search.order.push_back(best);
        chosen[best] = 1;
    }

    search.mapping.assign(n, -1);
    if (search.descend(0)) return search.found;
    return std::nullopt;
}

bool exhaustive_switching_isomorphic(const SignedGraph& g, const SignedGraph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    int n = g.order();
    if (n == 0) return true;
    if (n > 8)
        throw std::invalid_argument("exhaustive_switching_isomorphic: n > 8 is intractable");
    std::vector<std::vector<int>> hsign(n, std::vector<int>(n, 0));
    for (const auto& e : h.edges()) hsign[e.u][e.v] = hsign[e.v][e.u] = e.sign;

    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        bool underlying_ok = true;
        for (const auto& e : g.edges())
            if (hsign[perm[e.u]][perm[e.v]] == 0) {
                underlying_ok = false;
                break;
            }
        if (!underlying_ok) continue;
        for (uint32_t X = 0; X < (uint32_t(1) << n); ++X) {
            bool all_match = true;
            for (const auto& e : g.edges()) {
                int s = e.sign;
                if (((X >> e.u) & 1) != ((X >> e.v) & 1)) s = -s;
                if (s != hsign[perm[e.u]][perm[e.v]]) {
                    all_match = false;
                    break;
                }
            }
            if (all_match) return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::string key_to_hex(const std::string& key) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(key.size() * 2);
    for (unsigned char c : key) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

std::string key_from_hex(const std::string& hex) {
    if (hex.size() % 2 != 0) throw std::invalid_argument("odd hex string length");
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw std::invalid_argument("bad hex digit");
    };
    std::string out;
    out.reserve(hex.size() / 2);
    for (size_t i = 0; i < hex.size(); i += 2)
        out.push_back(static_cast<char>((nibble(hex[i]) << 4) | nibble(hex[i + 1])));
    return out;
}

}  // namespace sgspec
