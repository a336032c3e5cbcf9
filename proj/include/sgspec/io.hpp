#pragma once

// File formats: the ".sg" signed-graph text format, catalog JSON and mate
// certificate JSON. Serializations are deterministic and round-trip exactly.

#include <string>
#include <vector>

#include "sgspec/catalog.hpp"
#include "sgspec/dscheck.hpp"
#include "sgspec/graph.hpp"

namespace sgspec {

// "sg <n>" header, then one "u v +" / "u v -" line per edge; '#' comments and
// blank lines are ignored on input. Output is sorted edge order, bit-exact.
SignedGraph parse_sg(const std::string& text);
std::string serialize_sg(const SignedGraph& g);

SignedGraph load_sg_file(const std::string& path);
void save_sg_file(const SignedGraph& g, const std::string& path);

std::string catalog_to_json(const Catalog& catalog);
Catalog catalog_from_json(const std::string& text);
void save_catalog(const Catalog& catalog, const std::string& path);
Catalog load_catalog(const std::string& path);

std::string certificate_to_json(const MateCertificate& cert);
MateCertificate certificate_from_json(const std::string& text);
void save_certificate(const MateCertificate& cert, const std::string& path);
MateCertificate load_certificate(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace sgspec
