#pragma once

// Determined-by-spectrum decision for paths: exact factorization of
// charpoly(P_n) into catalog component polynomials, certificate emission and
// independent re-verification.

#include <string>
#include <vector>

#include "sgspec/catalog.hpp"
#include "sgspec/graph.hpp"
#include "sgspec/poly.hpp"

namespace sgspec {

struct MateCertificate {
    int n = 0;
    std::vector<SignedGraph> components;  // explicit edge lists, self-contained
    IntPoly charpoly_product;
    bool verified = false;
};

struct DsVerdict {
    int n = 0;
    bool determined = true;
    std::vector<MateCertificate> mates;  // empty iff determined
    int catalog_max_order_used = 0;
};

// Every multiset of catalog entries (>= 2 components) whose charpoly product
// equals charpoly(P_n), up to switching isomorphism and ordering. Requires the
// catalog to cover orders <= n-1.
std::vector<MateCertificate> find_mates(int n, const Catalog& catalog);

DsVerdict ds_status(int n, const Catalog& catalog);

// Recomputes the disjoint-union charpoly from scratch and compares it with
// charpoly(P_n); requires >= 2 components. Throws std::invalid_argument when
// the component orders do not sum to n or the certificate is empty.
bool verify_certificate(const MateCertificate& cert);

}  // namespace sgspec
