#pragma once

// Switching isomorphism decision and canonical keys. Both operate on the
// underlying graph through a class-respecting backtracking search and compare
// signatures via fundamental cycle signs; keys are minimal serializations of
// the forest-normalized graph over all admissible labelings.
//
// Vertex counts are limited to 64 (adjacency rows are single words); the
// catalog and every search in this project stay far below that.

#include <optional>
#include <string>
#include <vector>

#include "sgspec/graph.hpp"

namespace sgspec {

struct SwitchWitness {
    std::vector<int> permutation;  // old label -> new label
    std::vector<int> switch_set;   // sorted subset of the first graph's vertices
};

// Applying switch_set to g and then relabeling must reproduce h exactly.
SignedGraph apply_witness(const SignedGraph& g, const SwitchWitness& w);
bool witness_checks(const SignedGraph& g, const SignedGraph& h, const SwitchWitness& w);

std::optional<SwitchWitness> are_switching_isomorphic(const SignedGraph& g,
                                                      const SignedGraph& h);

// Equal keys iff switching isomorphic.
std::string canonical_key(const SignedGraph& g);

// The canonically labeled, forest-normalized representative plus its key.
std::pair<SignedGraph, std::string> canonical_form(const SignedGraph& g);

std::string key_to_hex(const std::string& key);
std::string key_from_hex(const std::string& hex);

// Literal reference decision: tries every vertex permutation and every switch
// set. Exponential; cross-validation at n <= 8 only.
bool exhaustive_switching_isomorphic(const SignedGraph& g, const SignedGraph& h);

}  // namespace sgspec
