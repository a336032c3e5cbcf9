// Python bindings for the sgspec core: graphs, exact spectral functionals,
// families, the catalog and the determined-by-spectrum machinery. Arbitrary
// precision integers cross the boundary as python ints via decimal strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sgspec/canonical.hpp"
#include "sgspec/catalog.hpp"
#include "sgspec/dscheck.hpp"
#include "sgspec/families.hpp"
#include "sgspec/io.hpp"
#include "sgspec/spectra.hpp"

namespace py = pybind11;
using namespace sgspec;

namespace {

py::int_ to_pyint(const Int& v) {
    PyObject* obj = PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

py::list poly_to_pylist(const IntPoly& p) {
    py::list out;
    for (const auto& c : p.coeffs()) out.append(to_pyint(c));
    return out;
}

IntPoly poly_from_pylist(const py::sequence& seq) {
    std::vector<Int> c;
    for (auto item : seq) c.emplace_back(py::str(item).cast<std::string>());
    return IntPoly(std::move(c));
}

SignedGraph graph_from_args(int n, const std::vector<std::tuple<int, int, int>>& edges) {
    std::vector<SignedEdge> list;
    list.reserve(edges.size());
    for (const auto& [u, v, s] : edges) list.push_back({u, v, s});
    return SignedGraph::from_edge_list(n, std::move(list));
}

FamilySpec spec_from_string(const std::string& text) {
    auto spec = parse_family(text);
    if (!spec) throw std::invalid_argument("unknown family string: " + text);
    return *spec;
}

py::dict certificate_to_dict(const MateCertificate& cert) {
    py::dict d;
    d["n"] = cert.n;
    py::list comps;
    for (const auto& g : cert.components) comps.append(g);
    d["components"] = comps;
    d["charpoly"] = poly_to_pylist(cert.charpoly_product);
    d["verified"] = cert.verified;
    return d;
}

}  // namespace

PYBIND11_MODULE(_sgspec, m) {
    m.doc() = "exact spectral toolkit for signed graphs";

    py::class_<SignedEdge>(m, "SignedEdge")
        .def_readonly("u", &SignedEdge::u)
        .def_readonly("v", &SignedEdge::v)
        .def_readonly("sign", &SignedEdge::sign)
        .def("__repr__", [](const SignedEdge& e) {
            return "SignedEdge(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ", " +
                   std::to_string(e.sign) + ")";
        });

    py::class_<SignedGraph>(m, "SignedGraph")
        .def(py::init(&graph_from_args), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &SignedGraph::order)
        .def_property_readonly("edges", [](const SignedGraph& g) {
            std::vector<std::tuple<int, int, int>> out;
            for (const auto& e : g.edges()) out.emplace_back(e.u, e.v, e.sign);
            return out;
        })
        .def("degrees", &SignedGraph::degrees)
        .def("__eq__", [](const SignedGraph& a, const SignedGraph& b) { return a == b; })
        .def("__repr__", [](const SignedGraph& g) {
            return "SignedGraph(n=" + std::to_string(g.order()) + ", m=" +
                   std::to_string(g.size()) + ")";
        });

    m.def("from_edge_list", &graph_from_args, py::arg("n"), py::arg("edges"));
    m.def("switched", &switched, py::arg("g"), py::arg("X"));
    m.def("relabeled", &relabeled, py::arg("g"), py::arg("perm"));
    m.def("disjoint_union", &disjoint_union);
    m.def("components", &components);
    m.def("forest_normalized", &forest_normalized);
    m.def("fundamental_cycle_signs", [](const SignedGraph& g) {
        std::vector<std::tuple<int, int, int>> out;
        for (const auto& [e, s] : fundamental_cycle_signs(g)) out.emplace_back(e.u, e.v, s);
        return out;
    });
    m.def("structural_filter", [](const SignedGraph& g) {
        auto v = structural_filter(g);
        return py::make_tuple(v.pass, filter_reason_name(v.reason));
    });

    m.def("canonical_key", [](const SignedGraph& g) { return py::bytes(canonical_key(g)); });
    m.def("are_switching_isomorphic",
          [](const SignedGraph& g, const SignedGraph& h) -> py::object {
              auto w = are_switching_isomorphic(g, h);
              if (!w) return py::none();
              return py::make_tuple(w->permutation, w->switch_set);
          });

    m.def("charpoly", [](const SignedGraph& g) { return poly_to_pylist(charpoly(g)); });
    m.def("charpoly_matrix", [](const std::vector<std::vector<long>>& rows) {
        int n = static_cast<int>(rows.size());
        IntMatrix mat(n);
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(rows[i].size()) != n)
                throw std::invalid_argument("matrix must be square");
            for (int j = 0; j < n; ++j) mat.at(i, j) = rows[i][j];
        }
        if (!mat.is_symmetric()) throw std::invalid_argument("matrix must be symmetric");
        return poly_to_pylist(charpoly(mat));
    });
    m.def("eigenvalues",
          [](const SignedGraph& g, double tol) { return eigenvalues(g, tol).values; },
          py::arg("g"), py::arg("tol") = kDefaultTol);
    m.def("walk_sum", [](const SignedGraph& g, int k) { return to_pyint(walk_sum(g, k)); });
    m.def("det_adj", [](const SignedGraph& g) { return to_pyint(det_adj(g)); });
    m.def("det_prime", [](const SignedGraph& g) { return to_pyint(det_prime(g)); });
    m.def("is_cospectral", &is_cospectral);
    m.def("is_simple_spectrum",
          [](const py::sequence& coeffs) { return is_simple_spectrum(poly_from_pylist(coeffs)); });
    m.def("count_roots_in",
          [](const py::sequence& coeffs, long a_num, long a_den, long b_num, long b_den,
             bool open) {
              return count_roots_in(poly_from_pylist(coeffs), make_rat(a_num, a_den),
                                    make_rat(b_num, b_den), open);
          },
          py::arg("coeffs"), py::arg("a_num"), py::arg("a_den"), py::arg("b_num"),
          py::arg("b_den"), py::arg("open") = true);

    m.def("make", [](const std::string& family) { return make(spec_from_string(family)); });
    m.def("closed_spectrum", [](const std::string& family) {
        auto cs = closed_spectrum(spec_from_string(family));
        std::vector<std::pair<long, long>> out;
        for (const auto& e : cs.entries) out.emplace_back(e.a, e.b);
        return out;
    });
    m.def("closed_spectrum_values", [](const std::string& family) {
        return closed_spectrum(spec_from_string(family)).values();
    });
    m.def("path_walk_formula",
          [](int n, int k) { return to_pyint(path_walk_formula(n, k)); });

    py::class_<Catalog>(m, "Catalog")
        .def_property_readonly("max_order", &Catalog::max_order)
        .def("__len__", [](const Catalog& c) { return c.entries().size(); })
        .def("entries", [](const Catalog& c) {
            py::list out;
            for (const auto& e : c.entries()) {
                py::dict d;
                d["order"] = e.order;
                d["key"] = key_to_hex(e.key);
                d["graph"] = e.graph;
                d["charpoly"] = poly_to_pylist(e.charpoly);
                out.append(d);
            }
            return out;
        });
    m.def("enumerate_catalog",
          [](int max_order, int threads) {
              EnumerateOptions opts;
              opts.threads = threads;
              return enumerate_catalog(max_order, opts);
          },
          py::arg("max_order"), py::arg("threads") = 1);
    m.def("brute_force_oracle", &brute_force_oracle);
    m.def("save_catalog", &save_catalog);
    m.def("load_catalog", &load_catalog);

    m.def("find_mates", [](int n, const Catalog& cat) {
        py::list out;
        for (const auto& cert : find_mates(n, cat)) out.append(certificate_to_dict(cert));
        return out;
    });
    m.def("ds_status", [](int n, const Catalog& cat) {
        auto v = ds_status(n, cat);
        py::dict d;
        d["n"] = v.n;
        d["determined"] = v.determined;
        py::list mates;
        for (const auto& cert : v.mates) mates.append(certificate_to_dict(cert));
        d["mates"] = mates;
        d["catalog_max_order_used"] = v.catalog_max_order_used;
        return d;
    });

    m.def("parse_sg", &parse_sg);
    m.def("serialize_sg", &serialize_sg);
}
