#pragma once

// The component catalog: every connected signed graph, up to switching
// isomorphism, whose spectrum is simple and lies strictly inside (-2, 2).
// enumerate_catalog grows graphs one vertex at a time with structural and
// exact spectral pruning; brute_force_oracle recomputes small orders naively
// for cross-validation.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "sgspec/graph.hpp"
#include "sgspec/poly.hpp"

namespace sgspec {

struct CatalogEntry {
    SignedGraph graph;  // connected, forest-normalized, canonically labeled
    std::string key;
    IntPoly charpoly;
    int order = 0;
    int edge_count = 0;
};

class Catalog {
public:
    static constexpr int kFormatVersion = 1;

    Catalog() = default;
    explicit Catalog(int max_order) : max_order_(max_order) {}

    int max_order() const { return max_order_; }
    const std::vector<CatalogEntry>& entries() const { return entries_; }
    std::vector<const CatalogEntry*> entries_of_order(int k) const;
    bool contains(const std::string& key) const { return by_key_.count(key) > 0; }
    const CatalogEntry* find(const std::string& key) const;

    // keeps (order, key) ordering; rejects duplicate keys
    void add(CatalogEntry entry);

private:
    int max_order_ = 0;
    std::vector<CatalogEntry> entries_;
    std::map<std::string, size_t> by_key_;
};

enum class PruneMode {
    full,           // structural filter plus exact spectral interval
    spectral_only,  // exact spectral interval only (cross-validation mode)
};

struct EnumerateOptions {
    PruneMode mode = PruneMode::full;
    int threads = 1;
    size_t per_order_limit = 10000;  // abort if one order exceeds this
};

Catalog enumerate_catalog(int max_order, const EnumerateOptions& opts = {});

// Exhaustive recomputation over all labeled graphs and switching classes of
// signatures; max_order <= 7.
Catalog brute_force_oracle(int max_order);

}  // namespace sgspec
