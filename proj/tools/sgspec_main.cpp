// sgspec: exact spectral toolkit for signed graphs.
//
// Graph arguments accept either a family string (P:7, C:6, C-:4, D:8, E6, E7,
// E8, H:2, H:1:4, mate:3) or a path to a ".sg" file.
//
// Exit codes: 0 success / positive decision, 1 negative decision,
// 2 usage or input error.

#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sgspec/canonical.hpp"
#include "sgspec/catalog.hpp"
#include "sgspec/dscheck.hpp"
#include "sgspec/families.hpp"
#include "sgspec/io.hpp"
#include "sgspec/spectra.hpp"

namespace {

using nlohmann::ordered_json;
using namespace sgspec;

SignedGraph resolve_graph(const std::string& arg) {
    if (auto spec = parse_family(arg)) return make(*spec);
    return load_sg_file(arg);
}

ordered_json spectrum_json(const SpectrumApprox& s) {
    ordered_json j;
    j["values"] = s.values;
    j["tol"] = s.tol;
    return j;
}

ordered_json charpoly_json(const IntPoly& p) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : poly_to_strings(p)) {
        try {
            arr.push_back(std::stoll(c));
        } catch (...) {
            arr.push_back(c);
        }
    }
    return arr;
}

// dscheck caches the catalog in the working directory under a filename hashed
// from the format version and max order.
std::string catalog_cache_name(int max_order) {
    std::string tag = "sgspec-catalog:v" + std::to_string(Catalog::kFormatVersion) +
                      ":o" + std::to_string(max_order);
    uint64_t h = 1469598103934665603ull;
    for (char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    std::ostringstream name;
    name << "sgspec-catalog-o" << max_order << "-" << std::hex << h << ".json";
    return name.str();
}

Catalog obtain_catalog(int max_order, const std::string& explicit_path, int threads) {
    if (!explicit_path.empty()) {
        Catalog cat = load_catalog(explicit_path);
        if (cat.max_order() < max_order)
            throw std::runtime_error("catalog file covers orders <= " +
                                     std::to_string(cat.max_order()) + ", need " +
                                     std::to_string(max_order));
        return cat;
    }
    std::string cache = catalog_cache_name(max_order);
    if (std::filesystem::exists(cache)) return load_catalog(cache);
    EnumerateOptions opts;
    opts.threads = threads;
    Catalog cat = enumerate_catalog(max_order, opts);
    save_catalog(cat, cache);
    return cat;
}

ordered_json certificate_json_obj(const MateCertificate& cert) {
    return ordered_json::parse(certificate_to_json(cert));
}

constexpr const char* kDetPrimeNote =
    "det' is reported as the signed product of the nonzero eigenvalues, "
    "(-1)^(n-1) * a_1; its magnitude matches the a_1 = p'(0) convention.";

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact spectral toolkit for signed graphs"};
    app.require_subcommand(1);
    bool json_out = false;
    app.add_flag("--json", json_out, "emit JSON instead of text");

    std::string garg, harg, outfile, catalog_file, outdir;
    int karg = 0, narg = 0, max_order = 0, threads = 1;
    bool use_oracle = false;
    double tol = kDefaultTol;

    auto* c_spectrum = app.add_subcommand("spectrum", "eigenvalues of a graph");
    c_spectrum->add_option("graph", garg)->required();
    c_spectrum->add_option("--tol", tol, "reporting tolerance");

    auto* c_charpoly = app.add_subcommand("charpoly", "characteristic polynomial");
    c_charpoly->add_option("graph", garg)->required();

    auto* c_walks = app.add_subcommand("walks", "signed closed-walk count trace(A^k)");
    c_walks->add_option("graph", garg)->required();
    c_walks->add_option("k", karg)->required();

    auto* c_det = app.add_subcommand("det", "determinant and det'");
    c_det->add_option("graph", garg)->required();

    auto* c_cospectral = app.add_subcommand("cospectral", "exact cospectrality decision");
    c_cospectral->add_option("graph1", garg)->required();
    c_cospectral->add_option("graph2", harg)->required();

    auto* c_switchiso = app.add_subcommand("switchiso", "switching-isomorphism decision");
    c_switchiso->add_option("graph1", garg)->required();
    c_switchiso->add_option("graph2", harg)->required();

    auto* c_enum = app.add_subcommand("enumerate", "build the component catalog");
    c_enum->add_option("--max-order", max_order)->required();
    c_enum->add_option("--out", outfile)->required();
    c_enum->add_flag("--oracle", use_oracle, "use the naive brute-force oracle");
    c_enum->add_option("--threads", threads);

    auto* c_dscheck = app.add_subcommand("dscheck", "determined-by-spectrum status of P_n");
    c_dscheck->add_option("n", narg)->required();
    c_dscheck->add_option("--catalog", catalog_file);
    c_dscheck->add_option("--threads", threads);

    auto* c_mate = app.add_subcommand("mate", "cospectral mate certificates of P_n");
    c_mate->add_option("n", narg)->required();
    c_mate->add_option("--catalog", catalog_file);
    c_mate->add_option("--out-dir", outdir, "write one JSON file per certificate");
    c_mate->add_option("--threads", threads);

    auto* c_verify = app.add_subcommand("verify", "verify a certificate file");
    c_verify->add_option("file", garg)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (c_spectrum->parsed()) {
            auto s = eigenvalues(resolve_graph(garg), tol);
            if (json_out) {
                std::cout << spectrum_json(s).dump(1) << "\n";
            } else {
                std::cout.precision(15);
                for (double v : s.values) std::cout << v << "\n";
            }
            return 0;
        }
        if (c_charpoly->parsed()) {
            IntPoly p = charpoly(resolve_graph(garg));
            if (json_out) {
                std::cout << charpoly_json(p).dump() << "\n";
            } else {
                for (const auto& c : poly_to_strings(p)) std::cout << c << "\n";
            }
            return 0;
        }
        if (c_walks->parsed()) {
            Int w = walk_sum(resolve_graph(garg), karg);
            if (json_out) {
                ordered_json j;
                j["k"] = karg;
                j["walk_sum"] = w.get_str();
                std::cout << j.dump() << "\n";
            } else {
                std::cout << w.get_str() << "\n";
            }
            return 0;
        }
        if (c_det->parsed()) {
            SignedGraph g = resolve_graph(garg);
            Int d = det_adj(g), dp = det_prime(g);
            if (json_out) {
                ordered_json j;
                j["det"] = d.get_str();
                j["det_prime"] = dp.get_str();
                j["note"] = kDetPrimeNote;
                std::cout << j.dump(1) << "\n";
            } else {
                std::cout << "det = " << d.get_str() << "\n";
                std::cout << "det' = " << dp.get_str() << "\n";
                std::cout << "note: " << kDetPrimeNote << "\n";
            }
            return 0;
        }
        if (c_cospectral->parsed()) {
            bool same = is_cospectral(resolve_graph(garg), resolve_graph(harg));
            if (json_out) {
                ordered_json j;
                j["cospectral"] = same;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << (same ? "cospectral" : "not cospectral") << "\n";
            }
            return same ? 0 : 1;
        }
        if (c_switchiso->parsed()) {
            auto w = are_switching_isomorphic(resolve_graph(garg), resolve_graph(harg));
            if (json_out) {
                ordered_json j;
                j["switching_isomorphic"] = w.has_value();
                if (w) {
                    j["permutation"] = w->permutation;
                    j["switch_set"] = w->switch_set;
                }
                std::cout << j.dump(1) << "\n";
            } else if (w) {
                std::cout << "switching isomorphic\npermutation:";
                for (int p : w->permutation) std::cout << " " << p;
                std::cout << "\nswitch set:";
                for (int v : w->switch_set) std::cout << " " << v;
                std::cout << "\n";
            } else {
                std::cout << "not switching isomorphic\n";
            }
            return w ? 0 : 1;
        }
        if (c_enum->parsed()) {
            Catalog cat;
            if (use_oracle) {
                cat = brute_force_oracle(max_order);
            } else {
                EnumerateOptions opts;
                opts.threads = threads;
                cat = enumerate_catalog(max_order, opts);
            }
            save_catalog(cat, outfile);
            if (json_out) {
                ordered_json j;
                j["max_order"] = cat.max_order();
                j["entries"] = cat.entries().size();
                j["out"] = outfile;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "wrote " << cat.entries().size() << " catalog entries (order <= "
                          << cat.max_order() << ") to " << outfile << "\n";
            }
            return 0;
        }
        if (c_dscheck->parsed() || c_mate->parsed()) {
            if (narg < 1) throw std::runtime_error("n must be >= 1");
            Catalog cat = obtain_catalog(std::max(1, narg - 1), catalog_file, threads);
            DsVerdict verdict = ds_status(narg, cat);
            if (c_mate->parsed() && !outdir.empty()) {
                std::filesystem::create_directories(outdir);
                int idx = 0;
                for (const auto& cert : verdict.mates) {
                    std::ostringstream name;
                    name << outdir << "/p" << narg << "-mate-" << ++idx << ".json";
                    save_certificate(cert, name.str());
                }
            }
            if (json_out) {
                ordered_json j;
                j["n"] = verdict.n;
                j["status"] = verdict.determined ? "Determined" : "NotDetermined";
                j["catalog_max_order_used"] = verdict.catalog_max_order_used;
                ordered_json mates = ordered_json::array();
                for (const auto& cert : verdict.mates) mates.push_back(certificate_json_obj(cert));
                j["mates"] = std::move(mates);
                std::cout << j.dump(1) << "\n";
            } else {
                std::cout << "P_" << verdict.n << ": "
                          << (verdict.determined ? "Determined" : "NotDetermined");
                std::cout << " (" << verdict.mates.size() << " mate class"
                          << (verdict.mates.size() == 1 ? "" : "es") << ", catalog order <= "
                          << verdict.catalog_max_order_used << ")\n";
                int idx = 0;
                for (const auto& cert : verdict.mates) {
                    std::cout << "mate " << ++idx << ":";
                    for (const auto& comp : cert.components)
                        std::cout << " [order " << comp.order() << ", edges " << comp.size()
                                  << "]";
                    std::cout << (cert.verified ? " verified" : " UNVERIFIED") << "\n";
                    for (const auto& comp : cert.components) {
                        std::cout << "  component:";
                        for (const auto& e : comp.edges())
                            std::cout << " " << e.u << (e.sign > 0 ? "+" : "-") << e.v;
                        std::cout << "\n";
                    }
                }
            }
            if (c_mate->parsed()) return verdict.mates.empty() ? 1 : 0;
            return 0;
        }
        if (c_verify->parsed()) {
            MateCertificate cert = load_certificate(garg);
            bool ok = verify_certificate(cert);
            if (json_out) {
                ordered_json j;
                j["verified"] = ok;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << (ok ? "verified" : "verification failed") << "\n";
            }
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
