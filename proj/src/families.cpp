#include "sgspec/families.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sgspec {

namespace {

SignedGraph path_graph(int n) {
    std::vector<SignedEdge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1});
    return SignedGraph::from_edge_list(n, std::move(edges));
}

SignedGraph cycle_graph(int n, bool balanced) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<SignedEdge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1});
    edges.push_back({0, n - 1, 1});
    if (!balanced) {
        // negative edge between the two highest-numbered cycle vertices
        for (auto& e : edges)
            if (e.u == n - 2 && e.v == n - 1) e.sign = -1;
    }
    return SignedGraph::from_edge_list(n, std::move(edges));
}

SignedGraph star_graph(int leaves) {
    if (leaves < 0) throw std::invalid_argument("star needs a nonnegative leaf count");
    std::vector<SignedEdge> edges;
    for (int i = 1; i <= leaves; ++i) edges.push_back({0, i, 1});
    return SignedGraph::from_edge_list(leaves + 1, std::move(edges));
}

SignedGraph d_graph(int m) {
    // Two fork leaves 0,1 on center 2, then a tail 2-3-...-(m-1).
    if (m < 5) throw std::invalid_argument("D_m needs m >= 5");
    std::vector<SignedEdge> edges{{0, 2, 1}, {1, 2, 1}};
    for (int i = 2; i + 1 < m; ++i) edges.push_back({i, i + 1, 1});
    return SignedGraph::from_edge_list(m, std::move(edges));
}

SignedGraph e_tree(int order) {
    // Path 0..order-2 with the last vertex pendant on position 2.
    std::vector<SignedEdge> edges;
    for (int i = 0; i + 2 < order; ++i) edges.push_back({i, i + 1, 1});
    edges.push_back({2, order - 1, 1});
    return SignedGraph::from_edge_list(order, std::move(edges));
}

// C_4^- on 0..3 (negative edge {2,3}) with a tail of t vertices at 0, and for
// pairs a second tail of t+m vertices at the opposite vertex 2.
SignedGraph h_graph(int t) {
    if (t < 1) throw std::invalid_argument("H_t needs t >= 1");
    std::vector<SignedEdge> edges{{0, 1, 1}, {1, 2, 1}, {2, 3, -1}, {0, 3, 1}};
    int prev = 0;
    for (int i = 0; i < t; ++i) {
        edges.push_back({prev, 4 + i, 1});
        prev = 4 + i;
    }
    return SignedGraph::from_edge_list(4 + t, std::move(edges));
}

SignedGraph h_pair_graph(int t, int m) {
    if (t < 1 || m < 0) throw std::invalid_argument("H_t^{t+m} needs t >= 1, m >= 0");
    std::vector<SignedEdge> edges{{0, 1, 1}, {1, 2, 1}, {2, 3, -1}, {0, 3, 1}};
    int prev = 0;
    for (int i = 0; i < t; ++i) {
        edges.push_back({prev, 4 + i, 1});
        prev = 4 + i;
    }
    prev = 2;
    for (int i = 0; i < t + m; ++i) {
        edges.push_back({prev, 4 + t + i, 1});
        prev = 4 + t + i;
    }
    return SignedGraph::from_edge_list(4 + 2 * t + m, std::move(edges));
}

SignedGraph mate_graph(int k) {
    if (k < 1) throw std::invalid_argument("mate family needs k >= 1");
    if (k == 1) return disjoint_union({h_graph(2), path_graph(1)});
    return disjoint_union({h_pair_graph(k - 1, k + 1), path_graph(k)});
}

CosineEntry normalized_entry(long a, long b) {
    // reduce a/b in [0,2] to [0,1] via cos(x) = cos(2*pi - x)
    a %= 2 * b;
    if (a < 0) a += 2 * b;
    if (a > b) a = 2 * b - a;
    long g = std::gcd(a, b);
    if (g > 1) {
        a /= g;
        b /= g;
    }
    return {a, b};
}

}  // namespace

double CosineEntry::value() const { return 2.0 * std::cos(M_PI * static_cast<double>(a) / static_cast<double>(b)); }

std::vector<double> CosineSpectrum::values() const {
    std::vector<double> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.value());
    return out;
}

SignedGraph make(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::Path:
            if (spec.a < 0) throw std::invalid_argument("P_n needs n >= 0");
            return path_graph(spec.a);
        case FamilyKind::BalancedCycle: return cycle_graph(spec.a, true);
        case FamilyKind::UnbalancedCycle: return cycle_graph(spec.a, false);
        case FamilyKind::Star: return star_graph(spec.a);
        case FamilyKind::Dgraph: return d_graph(spec.a);
        case FamilyKind::E6: return e_tree(6);
        case FamilyKind::E7: return e_tree(7);
        case FamilyKind::E8: return e_tree(8);
        case FamilyKind::H: return h_graph(spec.a);
        case FamilyKind::Hpair: return h_pair_graph(spec.a, spec.b);
        case FamilyKind::MateFamily: return mate_graph(spec.a);
    }
    throw std::invalid_argument("unknown family kind");
}

CosineSpectrum closed_spectrum(const FamilySpec& spec) {
    std::vector<CosineEntry> entries;
    switch (spec.kind) {
        case FamilyKind::Path: {
            int n = spec.a;
            if (n < 0) throw std::invalid_argument("P_n needs n >= 0");
            for (int i = 1; i <= n; ++i) entries.push_back(normalized_entry(i, n + 1));
            break;
        }
        case FamilyKind::BalancedCycle: {
            int n = spec.a;
            if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
            for (int i = 0; i < n; ++i) entries.push_back(normalized_entry(2 * i, n));
            break;
        }
        case FamilyKind::UnbalancedCycle: {
            int n = spec.a;
            if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
            for (int i = 0; i < n; ++i) entries.push_back(normalized_entry(2 * i + 1, n));
            break;
        }
        case FamilyKind::Hpair: {
            int t = spec.a, m = spec.b;
            if (t < 1 || m < 0) throw std::invalid_argument("H_t^{t+m} needs t >= 1, m >= 0");
            int k = t + m + 2;
            for (int i = 1; i <= k; ++i) entries.push_back(normalized_entry(2 * i - 1, 2 * k));
            for (int i = 1; i <= t + 2; ++i)
                entries.push_back(normalized_entry(2 * i - 1, 2 * (t + 2)));
            break;
        }
        default:
            throw std::invalid_argument("no closed-form spectrum for this family");
    }
    std::sort(entries.begin(), entries.end(), [](const CosineEntry& x, const CosineEntry& y) {
        // descending value <=> ascending angle fraction a/b
        return static_cast<long long>(x.a) * y.b < static_cast<long long>(y.a) * x.b;
    });
    return {entries};
}

Int path_walk_formula(int n, int k) {
    if (k == 4) {
        if (n < 2) throw std::invalid_argument("W_4 formula needs n >= 2");
        return Int(14 + 6 * (n - 4));
    }
    if (k == 6) {
        if (n < 2) throw std::invalid_argument("W_6 formula needs n >= 2");
        if (n == 2) return Int(2);
        return Int(76 + 20 * (n - 6));
    }
    throw std::invalid_argument("walk formula covers k = 4 and k = 6 only");
}

PathDetFormulas path_det_formulas(int n) {
    if (n < 1) throw std::invalid_argument("path order must be >= 1");
    PathDetFormulas out;
    if (n % 2 == 0)
        out.det = (n / 2) % 2 == 0 ? 1 : -1;
    else
        out.det_prime_abs = (n + 1) / 2;
    return out;
}

namespace {

std::optional<int> parse_int(const std::string& s) {
    if (s.empty()) return std::nullopt;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    try {
        return std::stoi(s);
    } catch (...) {
        return std::nullopt;
    }
}

}  // namespace

std::optional<FamilySpec> parse_family(const std::string& text) {
    if (text == "E6") return FamilySpec{FamilyKind::E6, 0, 0};
    if (text == "E7") return FamilySpec{FamilyKind::E7, 0, 0};
    if (text == "E8") return FamilySpec{FamilyKind::E8, 0, 0};
    auto colon = text.find(':');
    if (colon == std::string::npos) return std::nullopt;
    std::string head = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);
    auto second = rest.find(':');
    std::string arg1 = second == std::string::npos ? rest : rest.substr(0, second);
    std::string arg2 = second == std::string::npos ? "" : rest.substr(second + 1);
    auto v1 = parse_int(arg1);
    if (!v1) return std::nullopt;
    if (!arg2.empty()) {
        auto v2 = parse_int(arg2);
        if (!v2 || head != "H") return std::nullopt;
        if (*v2 < *v1) return std::nullopt;  // superscript s = t+m >= t
        return FamilySpec{FamilyKind::Hpair, *v1, *v2 - *v1};
    }
    if (head == "P") return FamilySpec{FamilyKind::Path, *v1, 0};
    if (head == "C") return FamilySpec{FamilyKind::BalancedCycle, *v1, 0};
    if (head == "C-") return FamilySpec{FamilyKind::UnbalancedCycle, *v1, 0};
    if (head == "D") return FamilySpec{FamilyKind::Dgraph, *v1, 0};
    if (head == "H") return FamilySpec{FamilyKind::H, *v1, 0};
    if (head == "mate") return FamilySpec{FamilyKind::MateFamily, *v1, 0};
    return std::nullopt;
}

std::string family_to_string(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::Path: return "P:" + std::to_string(spec.a);
        case FamilyKind::BalancedCycle: return "C:" + std::to_string(spec.a);
        case FamilyKind::UnbalancedCycle: return "C-:" + std::to_string(spec.a);
        case FamilyKind::Star: return "K1:" + std::to_string(spec.a);
        case FamilyKind::Dgraph: return "D:" + std::to_string(spec.a);
        case FamilyKind::E6: return "E6";
        case FamilyKind::E7: return "E7";
        case FamilyKind::E8: return "E8";
        case FamilyKind::H: return "H:" + std::to_string(spec.a);
        case FamilyKind::Hpair:
            return "H:" + std::to_string(spec.a) + ":" + std::to_string(spec.a + spec.b);
        case FamilyKind::MateFamily: return "mate:" + std::to_string(spec.a);
    }
    return "?";
}

}  // namespace sgspec
