#pragma once

// Named graph families and their closed-form spectra. Unbalanced cycles carry
// exactly one negative edge (between the two highest-numbered cycle vertices);
// trees are all-positive.

#include <optional>
#include <string>
#include <vector>

#include "sgspec/bigint.hpp"
#include "sgspec/graph.hpp"

namespace sgspec {

enum class FamilyKind {
    Path,
    BalancedCycle,
    UnbalancedCycle,
    Star,
    Dgraph,
    E6,
    E7,
    E8,
    H,
    Hpair,
    MateFamily,
};

struct FamilySpec {
    FamilyKind kind = FamilyKind::Path;
    int a = 0;  // n (Path/cycles), leaves (Star), m (Dgraph), t (H/Hpair), k (MateFamily)
    int b = 0;  // m (Hpair only)
};

// Exact value 2*cos(a*pi/b), reduced with 0 <= a <= b.
struct CosineEntry {
    long a = 0;
    long b = 1;
    double value() const;
};

struct CosineSpectrum {
    std::vector<CosineEntry> entries;  // descending by value, one per eigenvalue
    std::vector<double> values() const;
};

SignedGraph make(const FamilySpec& spec);

// Closed forms exist for Path, BalancedCycle, UnbalancedCycle and Hpair; other
// kinds throw std::invalid_argument (callers use charpoly instead).
CosineSpectrum closed_spectrum(const FamilySpec& spec);

// W_4 and W_6 of the path, including the short-path special case.
Int path_walk_formula(int n, int k);

struct PathDetFormulas {
    std::optional<int> det;             // even n only
    std::optional<long> det_prime_abs;  // odd n only
};
PathDetFormulas path_det_formulas(int n);

// CLI syntax: P:n, C:n, C-:n, D:m, E6, E7, E8, H:t, H:t:s (s = t+m), mate:k.
std::optional<FamilySpec> parse_family(const std::string& text);
std::string family_to_string(const FamilySpec& spec);

}  // namespace sgspec
