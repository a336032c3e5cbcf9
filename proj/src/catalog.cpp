#include "sgspec/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <thread>

#include "sgspec/canonical.hpp"
#include "sgspec/spectra.hpp"

namespace sgspec {

std::vector<const CatalogEntry*> Catalog::entries_of_order(int k) const {
    std::vector<const CatalogEntry*> out;
    for (const auto& e : entries_)
        if (e.order == k) out.push_back(&e);
    return out;
}

const CatalogEntry* Catalog::find(const std::string& key) const {
    auto it = by_key_.find(key);
    return it == by_key_.end() ? nullptr : &entries_[it->second];
}

void Catalog::add(CatalogEntry entry) {
    if (by_key_.count(entry.key)) throw std::invalid_argument("duplicate catalog key");
    auto pos = std::lower_bound(
        entries_.begin(), entries_.end(), entry, [](const CatalogEntry& a, const CatalogEntry& b) {
            return a.order != b.order ? a.order < b.order : a.key < b.key;
        });
    size_t idx = static_cast<size_t>(pos - entries_.begin());
    entries_.insert(pos, std::move(entry));
    for (auto& [k, i] : by_key_)
        if (i >= idx) ++i;
    by_key_[entries_[idx].key] = idx;
}

namespace {

template <class F>
void run_parallel(size_t count, int threads, F&& f) {
    threads = std::max(1, std::min<int>(threads, static_cast<int>(count)));
    if (threads == 1) {
        for (size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (size_t i; (i = next.fetch_add(1)) < count;) f(i);
        });
    for (auto& th : pool) th.join();
}

// Cyclic Jacobi on the signed adjacency matrix. Used only as a prefilter:
// a value above 2 + 1e-9 certainly has a true eigenvalue outside [-2, 2]
// (double rounding here is ~1e-13), so the exact check can be skipped.
double max_abs_eigenvalue_estimate(const SignedGraph& g) {
    int n = g.order();
    if (n == 0) return 0.0;
    std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
    for (const auto& e : g.edges()) {
        a[static_cast<size_t>(e.u) * n + e.v] = e.sign;
        a[static_cast<size_t>(e.v) * n + e.u] = e.sign;
    }
    auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };
    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
        if (off < 1e-26) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (std::abs(apq) < 1e-15) continue;
                double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                for (int i = 0; i < n; ++i) {
                    double aip = at(i, p), aiq = at(i, q);
                    at(i, p) = c * aip - s * aiq;
                    at(i, q) = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    double api = at(p, i), aqi = at(q, i);
                    at(p, i) = c * api - s * aqi;
                    at(q, i) = s * api + c * aqi;
                }
            }
        }
    }
    double mx = 0.0;
    for (int i = 0; i < n; ++i) mx = std::max(mx, std::abs(at(i, i)));
    return mx;
}

constexpr double kFloatRejectAbove = 2.0 + 1e-9;

// Sound rejections only: each one forces an eigenvalue at or beyond +-2 by
// interlacing (induced star or triangle for degree 4, a shortest odd cycle is
// induced, an induced balanced cycle switches to the all-positive cycle).
// Membership itself is decided by the exact spectral checks afterwards.
bool fails_sound_structural_prunes(const SignedGraph& g) {
    if (!is_bipartite(g)) return true;
    bool induced_balanced = false;
    for_each_simple_cycle(g, [&](const std::vector<int>&, int sign, bool chordless) {
        if (sign > 0 && chordless) induced_balanced = true;
    });
    return induced_balanced;
}

std::vector<std::pair<std::string, SignedGraph>> expand_parent(const SignedGraph& parent,
                                                               PruneMode mode) {
    int np = parent.order();
    int nv = np;  // new vertex index
    auto deg = parent.degrees();
    std::vector<int> avail;
    for (int v = 0; v < np; ++v)
        if (deg[v] < 3) avail.push_back(v);  // degree cap is itself a sound prune

    std::vector<std::pair<std::string, SignedGraph>> out;
    auto consider = [&](const std::vector<SignedEdge>& new_edges) {
        std::vector<SignedEdge> edges = parent.edges();
        edges.insert(edges.end(), new_edges.begin(), new_edges.end());
        SignedGraph child = SignedGraph::from_edge_list(np + 1, std::move(edges));
        if (mode == PruneMode::full && fails_sound_structural_prunes(child)) return;
        if (max_abs_eigenvalue_estimate(child) > kFloatRejectAbove) return;
        auto [cg, key] = canonical_form(child);
        out.emplace_back(std::move(key), std::move(cg));
    };

    int A = static_cast<int>(avail.size());
    for (int i = 0; i < A; ++i) consider({{avail[i], nv, 1}});
    for (int i = 0; i < A; ++i)
        for (int j = i + 1; j < A; ++j)
            for (int s2 : {1, -1}) consider({{avail[i], nv, 1}, {avail[j], nv, s2}});
    for (int i = 0; i < A; ++i)
        for (int j = i + 1; j < A; ++j)
            for (int l = j + 1; l < A; ++l)
                for (int s2 : {1, -1})
                    for (int s3 : {1, -1})
                        consider({{avail[i], nv, 1}, {avail[j], nv, s2}, {avail[l], nv, s3}});
    return out;
}

}  // namespace

Catalog enumerate_catalog(int max_order, const EnumerateOptions& opts) {
    if (max_order < 1) throw std::invalid_argument("enumerate_catalog: max_order must be >= 1");
    Catalog cat(max_order);

    std::map<std::string, SignedGraph> frontier;
    {
        SignedGraph p1 = SignedGraph::from_edge_list(1, {});
        auto [cg, key] = canonical_form(p1);
        frontier.emplace(key, cg);
        cat.add({cg, key, charpoly(cg), 1, 0});
    }

    for (int k = 2; k <= max_order; ++k) {
        std::vector<const SignedGraph*> parents;
        parents.reserve(frontier.size());
        for (const auto& [key, g] : frontier) parents.push_back(&g);

        std::vector<std::vector<std::pair<std::string, SignedGraph>>> produced(parents.size());
        run_parallel(parents.size(), opts.threads,
                     [&](size_t i) { produced[i] = expand_parent(*parents[i], opts.mode); });

        std::map<std::string, SignedGraph> candidates;
        for (auto& batch : produced)
            for (auto& [key, g] : batch) candidates.emplace(std::move(key), std::move(g));

        struct Checked {
            const std::string* key;
            const SignedGraph* graph;
            IntPoly phi;
            bool inside = false;
            bool simple = false;
        };
        std::vector<Checked> checked(candidates.size());
        {
            size_t i = 0;
            for (const auto& [key, g] : candidates) {
                checked[i].key = &key;
                checked[i].graph = &g;
                ++i;
            }
        }
        run_parallel(checked.size(), opts.threads, [&](size_t i) {
            Checked& c = checked[i];
            c.phi = charpoly(*c.graph);
            c.inside = roots_strictly_inside_two(c.phi);
            if (c.inside) c.simple = is_simple_spectrum(c.phi);
        });

        std::map<std::string, SignedGraph> next;
        size_t emitted = 0;
        for (auto& c : checked) {
            if (!c.inside) continue;
            next.emplace(*c.key, *c.graph);
            if (c.simple) {
                cat.add({*c.graph, *c.key, std::move(c.phi), k, c.graph->size()});
                ++emitted;
            }
        }
        if (next.size() > opts.per_order_limit || emitted > opts.per_order_limit)
            throw std::runtime_error("enumerate_catalog: order " + std::to_string(k) +
                                     " exceeds the safety bound of " +
                                     std::to_string(opts.per_order_limit) + " graphs");
        frontier = std::move(next);
    }
    return cat;
}

namespace {

// Branch-and-bound maximal column serialization over all vertex placements of
// a plain bitmask graph; used by the oracle to keep one labeling per
// isomorphism class. Independent of the canonical_key machinery.
struct BruteCanon {
    int n;
    const std::vector<uint32_t>& rows;
    std::vector<uint32_t> best;
    std::vector<int> placed;
    uint32_t used = 0;

    explicit BruteCanon(int n_, const std::vector<uint32_t>& rows_) : n(n_), rows(rows_) {
        best.assign(n, 0);
    }

    void descend() {
        int k = static_cast<int>(placed.size());
        if (k == n) return;
        std::vector<std::pair<uint32_t, int>> cands;
        for (int v = 0; v < n; ++v) {
            if (used & (uint32_t(1) << v)) continue;
            uint32_t col = 0;
            for (int i = 0; i < k; ++i) col |= ((rows[v] >> placed[i]) & 1) << (k - 1 - i);
            cands.emplace_back(col, v);
        }
        std::sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) { return a > b; });
        for (auto [col, v] : cands) {
            if (col < best[k]) break;
            if (col > best[k]) {
                best[k] = col;
                for (int j = k + 1; j < n; ++j) best[j] = 0;
            }
            placed.push_back(v);
            used |= uint32_t(1) << v;
            descend();
            placed.pop_back();
            used &= ~(uint32_t(1) << v);
        }
    }
};

bool mask_is_canonical(int n, const std::vector<uint32_t>& rows) {
    BruteCanon bc(n, rows);
    bc.descend();
    for (int k = 0; k < n; ++k) {
        uint32_t col = 0;
        for (int i = 0; i < k; ++i) col |= ((rows[k] >> i) & 1) << (k - 1 - i);
        if (col != bc.best[k]) return false;
    }
    return true;
}

bool mask_connected(int n, const std::vector<uint32_t>& rows) {
    uint32_t seen = 1, frontier = 1;
    while (frontier) {
        uint32_t nextf = 0;
        for (int v = 0; v < n; ++v)
            if (frontier & (uint32_t(1) << v)) nextf |= rows[v];
        frontier = nextf & ~seen;
        seen |= frontier;
    }
    return seen == (n >= 32 ? ~uint32_t(0) : ((uint32_t(1) << n) - 1));
}

}  // namespace

Catalog brute_force_oracle(int max_order) {
    if (max_order < 1) throw std::invalid_argument("brute_force_oracle: max_order must be >= 1");
    if (max_order > 7)
        throw std::invalid_argument("brute_force_oracle: max_order > 7 is intractable");

    std::vector<SignedGraph> kept;  // representatives across all orders
    for (int v = 1; v <= max_order; ++v) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < v; ++i)
            for (int j = i + 1; j < v; ++j) pairs.emplace_back(i, j);
        int P = static_cast<int>(pairs.size());
        for (uint32_t mask = 0; mask < (uint32_t(1) << P); ++mask) {
            std::vector<uint32_t> rows(v, 0);
            bool deg_ok = true;
            for (int b = 0; b < P && deg_ok; ++b) {
                if (!(mask & (uint32_t(1) << b))) continue;
                auto [i, j] = pairs[b];
                rows[i] |= uint32_t(1) << j;
                rows[j] |= uint32_t(1) << i;
                // degree 4 forces an induced triangle or K_{1,4}, hence an
                // eigenvalue at or beyond +-2 by interlacing
                if (std::popcount(rows[i]) > 3 || std::popcount(rows[j]) > 3) deg_ok = false;
            }
            if (!deg_ok) continue;
            if (v > 1 && !mask_connected(v, rows)) continue;
            if (!mask_is_canonical(v, rows)) continue;

            // spanning tree via BFS; co-tree edges carry the free signs. Every
            // switching class of signatures contains exactly one pattern with
            // all tree edges positive.
            std::vector<int> edge_bit;
            for (int b = 0; b < P; ++b)
                if (mask & (uint32_t(1) << b)) edge_bit.push_back(b);
            std::vector<char> tree_edge(edge_bit.size(), 0);
            {
                uint32_t seen = 1;
                std::vector<int> queue{0};
                while (!queue.empty()) {
                    int u = queue.back();
                    queue.pop_back();
                    for (size_t ei = 0; ei < edge_bit.size(); ++ei) {
                        auto [i, j] = pairs[edge_bit[ei]];
                        int other = -1;
                        if (i == u && !(seen & (uint32_t(1) << j))) other = j;
                        if (j == u && !(seen & (uint32_t(1) << i))) other = i;
                        if (other >= 0) {
                            seen |= uint32_t(1) << other;
                            tree_edge[ei] = 1;
                            queue.push_back(other);
                        }
                    }
                }
            }
            std::vector<int> cotree;
            for (size_t ei = 0; ei < edge_bit.size(); ++ei)
                if (!tree_edge[ei]) cotree.push_back(static_cast<int>(ei));

            for (uint32_t sbits = 0; sbits < (uint32_t(1) << cotree.size()); ++sbits) {
                std::vector<SignedEdge> edges;
                for (size_t ei = 0; ei < edge_bit.size(); ++ei) {
                    auto [i, j] = pairs[edge_bit[ei]];
                    edges.push_back({i, j, 1});
                }
                for (size_t ci = 0; ci < cotree.size(); ++ci)
                    if (sbits & (uint32_t(1) << ci)) edges[cotree[ci]].sign = -1;
                SignedGraph g = SignedGraph::from_edge_list(v, std::move(edges));
                IntPoly phi = charpoly(g);
                if (!roots_strictly_inside_two(phi)) continue;
                if (!is_simple_spectrum(phi)) continue;
                bool duplicate = false;
                for (const auto& rep : kept)
                    if (exhaustive_switching_isomorphic(rep, g)) {
                        duplicate = true;
                        break;
                    }
                if (!duplicate) kept.push_back(g);
            }
        }
    }

    Catalog cat(max_order);
    for (const auto& g : kept) {
        auto [cg, key] = canonical_form(g);
        cat.add({cg, key, charpoly(cg), cg.order(), cg.size()});
    }
    return cat;
}

}  // namespace sgspec
