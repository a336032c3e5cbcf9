#include "sgspec/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "sgspec/canonical.hpp"
#include "sgspec/spectra.hpp"

namespace sgspec {

using ordered_json = nlohmann::ordered_json;

SignedGraph parse_sg(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::vector<SignedEdge> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;  // blank
        if (n < 0) {
            if (tok != "sg") throw std::invalid_argument("line " + std::to_string(lineno) +
                                                         ": expected 'sg <n>' header");
            if (!(ls >> n) || n < 0)
                throw std::invalid_argument("line " + std::to_string(lineno) +
                                            ": bad vertex count");
            continue;
        }
        int u = 0, v = 0;
        std::string sign;
        std::istringstream es(line);
        if (!(es >> u >> v >> sign) || (sign != "+" && sign != "-"))
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected 'u v +' or 'u v -'");
        edges.push_back({u, v, sign == "+" ? 1 : -1});
    }
    if (n < 0) throw std::invalid_argument("missing 'sg <n>' header");
    return SignedGraph::from_edge_list(n, std::move(edges));
}

std::string serialize_sg(const SignedGraph& g) {
    std::ostringstream out;
    out << "sg " << g.order() << "\n";
    for (const auto& e : g.edges())
        out << e.u << " " << e.v << " " << (e.sign > 0 ? "+" : "-") << "\n";
    return out.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

SignedGraph load_sg_file(const std::string& path) { return parse_sg(read_text_file(path)); }

void save_sg_file(const SignedGraph& g, const std::string& path) {
    write_text_file(path, serialize_sg(g));
}

namespace {

// Coefficients fit in json integers in practice; decimal strings are the
// fallback to keep round trips bit-exact in every case.
ordered_json coeffs_to_json(const IntPoly& p) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : p.coeffs()) {
        if (c.fits_slong_p())
            arr.push_back(static_cast<long>(c.get_si()));
        else
            arr.push_back(c.get_str());
    }
    return arr;
}

IntPoly coeffs_from_json(const ordered_json& arr) {
    std::vector<Int> c;
    for (const auto& item : arr) {
        if (item.is_number_integer())
            c.emplace_back(static_cast<long>(item.get<long long>()));
        else if (item.is_string())
            c.emplace_back(item.get<std::string>());
        else
            throw std::invalid_argument("charpoly coefficients must be integers or strings");
    }
    return IntPoly(std::move(c));
}

ordered_json graph_to_json(const SignedGraph& g) {
    ordered_json j;
    j["order"] = g.order();
    ordered_json edges = ordered_json::array();
    ordered_json signs = ordered_json::array();
    for (const auto& e : g.edges()) {
        edges.push_back(ordered_json::array({e.u, e.v}));
        signs.push_back(e.sign);
    }
    j["edges"] = edges;
    j["signs"] = signs;
    return j;
}

SignedGraph graph_from_json(const ordered_json& j) {
    int n = j.at("order").get<int>();
    const auto& edges = j.at("edges");
    const auto& signs = j.at("signs");
    if (edges.size() != signs.size())
        throw std::invalid_argument("edges and signs arrays differ in length");
    std::vector<SignedEdge> list;
    for (size_t i = 0; i < edges.size(); ++i)
        list.push_back({edges[i].at(0).get<int>(), edges[i].at(1).get<int>(),
                        signs[i].get<int>()});
    return SignedGraph::from_edge_list(n, std::move(list));
}

}  // namespace

std::string catalog_to_json(const Catalog& catalog) {
    ordered_json j;
    j["format"] = "sgspec-catalog";
    j["version"] = Catalog::kFormatVersion;
    j["max_order"] = catalog.max_order();
    ordered_json entries = ordered_json::array();
    for (const auto& e : catalog.entries()) {
        ordered_json item;
        item["order"] = e.order;
        item["key"] = key_to_hex(e.key);
        ordered_json edges = ordered_json::array();
        ordered_json signs = ordered_json::array();
        for (const auto& edge : e.graph.edges()) {
            edges.push_back(ordered_json::array({edge.u, edge.v}));
            signs.push_back(edge.sign);
        }
        item["edges"] = edges;
        item["signs"] = signs;
        item["charpoly"] = coeffs_to_json(e.charpoly);
        entries.push_back(std::move(item));
    }
    j["entries"] = std::move(entries);
    return j.dump(1) + "\n";
}

Catalog catalog_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    if (j.at("format").get<std::string>() != "sgspec-catalog")
        throw std::invalid_argument("not a catalog file");
    if (j.at("version").get<int>() != Catalog::kFormatVersion)
        throw std::invalid_argument("unsupported catalog version");
    Catalog cat(j.at("max_order").get<int>());
    for (const auto& item : j.at("entries")) {
        CatalogEntry e;
        e.order = item.at("order").get<int>();
        e.key = key_from_hex(item.at("key").get<std::string>());
        ordered_json gj;
        gj["order"] = e.order;
        gj["edges"] = item.at("edges");
        gj["signs"] = item.at("signs");
        e.graph = graph_from_json(gj);
        e.charpoly = coeffs_from_json(item.at("charpoly"));
        e.edge_count = e.graph.size();
        cat.add(std::move(e));
    }
    return cat;
}

void save_catalog(const Catalog& catalog, const std::string& path) {
    write_text_file(path, catalog_to_json(catalog));
}

Catalog load_catalog(const std::string& path) { return catalog_from_json(read_text_file(path)); }

std::string certificate_to_json(const MateCertificate& cert) {
    ordered_json j;
    j["n"] = cert.n;
    ordered_json comps = ordered_json::array();
    for (const auto& g : cert.components) comps.push_back(graph_to_json(g));
    j["components"] = std::move(comps);
    j["charpoly"] = coeffs_to_json(cert.charpoly_product);
    j["verified"] = cert.verified;
    return j.dump(1) + "\n";
}

MateCertificate certificate_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    MateCertificate cert;
    cert.n = j.at("n").get<int>();
    for (const auto& item : j.at("components")) cert.components.push_back(graph_from_json(item));
    cert.charpoly_product = coeffs_from_json(j.at("charpoly"));
    cert.verified = j.at("verified").get<bool>();
    return cert;
}

void save_certificate(const MateCertificate& cert, const std::string& path) {
    write_text_file(path, certificate_to_json(cert));
}

MateCertificate load_certificate(const std::string& path) {
    return certificate_from_json(read_text_file(path));
}

}  // namespace sgspec
