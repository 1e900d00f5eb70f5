#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gmod/cmfication.hpp"
#include "gmod/session.hpp"
#include "gmod/text.hpp"

namespace py = pybind11;
using namespace gmod;

namespace {

/// Python-side handle for the immutable ring (pybind11 cannot hold a
/// shared_ptr-to-const directly).
struct PyRing {
  RingPtr ptr;
};

std::string iso_to_string(IsoAnswer a) {
  switch (a) {
    case IsoAnswer::yes: return "yes";
    case IsoAnswer::no: return "no";
    default: return "unknown";
  }
}

Polynomial parse_or_zero(const RingPtr& ring, const std::string& text) {
  if (text == "0") return Polynomial::zero(ring);
  return parse_poly(ring, text);
}

FPModule module_from_rows(const RingPtr& ring, const std::vector<int>& twists,
                          const std::vector<std::vector<std::string>>& rows) {
  FreeModule F(ring, twists);
  std::vector<FreeElement> rels;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != F.rank())
      throw structural_error("relation row needs one entry per generator");
    std::vector<Polynomial> comps;
    for (const std::string& e : row) comps.push_back(parse_or_zero(ring, e));
    rels.emplace_back(F, std::move(comps));
  }
  return present(F, std::move(rels));
}

ModuleMap map_from_rows(const FPModule& src, const FPModule& dst,
                        const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Polynomial>> m;
  for (const auto& row : rows) {
    std::vector<Polynomial> r;
    for (const std::string& e : row) r.push_back(parse_or_zero(src.ring(), e));
    m.push_back(std::move(r));
  }
  return ModuleMap(src, dst, FreeMap(src.ambient(), dst.ambient(), std::move(m)));
}

}  // namespace

PYBIND11_MODULE(gmod, m) {
  m.doc() = "exact graded-module computations over F_p[x_1..x_n]";

  py::register_exception<parse_error>(m, "ParseError");
  py::register_exception<error>(m, "GmodError");

  py::class_<PyRing>(m, "Ring")
      .def(py::init([](std::int64_t p, std::vector<std::string> names) {
             return PyRing{make_ring(p, std::move(names))};
           }),
           py::arg("p"), py::arg("variables"))
      .def_property_readonly(
          "characteristic",
          [](const PyRing& r) { return r.ptr->characteristic(); })
      .def_property_readonly("nvars",
                             [](const PyRing& r) { return r.ptr->nvars(); })
      .def("__repr__", [](const PyRing& r) {
        std::string s = "Ring(p=" + std::to_string(r.ptr->characteristic()) + ", [";
        for (int i = 0; i < r.ptr->nvars(); ++i)
          s += (i ? ", " : "") + r.ptr->name(i);
        return s + "])";
      });

  py::class_<Polynomial>(m, "Polynomial")
      .def("__repr__", [](const Polynomial& f) { return render_poly(f); })
      .def("__eq__",
           [](const Polynomial& a, const Polynomial& b) { return a == b; })
      .def_property_readonly("degree", [](const Polynomial& f) -> py::object {
        if (f.is_zero()) return py::none();
        return py::int_(*f.degree());
      });

  m.def(
      "poly",
      [](const PyRing& r, const std::string& text) {
        return parse_or_zero(r.ptr, text);
      },
      py::arg("ring"), py::arg("text"),
      "parse a polynomial in canonical text form");

  py::class_<FPModule>(m, "Module")
      .def_static(
          "coker",
          [](const PyRing& r, const std::vector<int>& twists,
             const std::vector<std::vector<std::string>>& rows) {
            return module_from_rows(r.ptr, twists, rows);
          },
          py::arg("ring"), py::arg("twists"), py::arg("relations"),
          "presented module from ambient twists and relation rows")
      .def_static(
          "quotient_ring",
          [](const PyRing& r, const std::vector<std::string>& gens) {
            std::vector<Polynomial> ps;
            for (const auto& g : gens) ps.push_back(parse_or_zero(r.ptr, g));
            return quotient_ring_module(r.ptr, ps);
          },
          py::arg("ring"), py::arg("ideal_generators"))
      .def_property_readonly("is_zero", &FPModule::is_zero)
      .def_property_readonly(
          "generator_twists",
          [](const FPModule& M) { return M.ambient().twists(); })
      .def("hilbert", &hilbert_function, py::arg("degree"))
      .def("dim", &krull_dim)
      .def("depth", &depth)
      .def("is_cohen_macaulay", &is_cohen_macaulay)
      .def("is_finite_length", &is_finite_length)
      .def("pd", &pd)
      .def("annihilator",
           [](const FPModule& M) {
             std::vector<std::string> out;
             for (const Polynomial& f : annihilator(M).groebner)
               out.push_back(render_poly(f));
             return out;
           })
      .def("betti",
           [](const FPModule& M) {
             Complex res = free_resolution(M, M.ring()->nvars() + 1);
             std::vector<std::pair<int, std::vector<int>>> out;
             for (const BettiRow& row : betti_table(res))
               out.emplace_back(row.index, row.twists);
             return out;
           })
      .def("__repr__", [](const FPModule& M) { return render_module(M); })
      .def("__eq__", [](const FPModule& a, const FPModule& b) { return a == b; });

  py::class_<ModuleMap>(m, "ModuleMap")
      .def_static("from_rows", &map_from_rows, py::arg("source"),
                  py::arg("target"), py::arg("rows"))
      .def_property_readonly("source", &ModuleMap::source)
      .def_property_readonly("target", &ModuleMap::target);

  py::class_<ArtinianRep>(m, "ArtinianRep")
      .def_property_readonly("dual", &ArtinianRep::dual)
      .def_property_readonly("is_zero", &ArtinianRep::is_zero)
      .def("__repr__", [](const ArtinianRep& X) {
        return "ArtinianRep(dual=" + render_module(X.dual()) + ")";
      });

  m.def("direct_sum", &direct_sum);
  m.def("hom_module", &hom_module);
  m.def("ext", &ext_module, py::arg("i"), py::arg("module"), py::arg("twist"));
  m.def("matlis_dual", &matlis_dual_finite);
  m.def("F1", &F1);
  m.def("F2", &F2);
  m.def("G1", &G1);
  m.def("G2", &G2);
  m.def("ndim", &ndim);
  m.def("width", &width);
  m.def("is_co_cm", &is_co_cm);
  m.def("cmfication", &cmfication_candidate);
  m.def("verify_cmfication",
        [](const FPModule& M, const FPModule& Mt, const ModuleMap& iota) {
          CMficationReport r = verify_cmfication(M, Mt, iota);
          py::dict d;
          d["injective"] = r.injective;
          d["condition_i"] = r.condition_i;
          d["condition_ii"] = r.condition_ii;
          d["condition_iii"] = r.condition_iii;
          d["pass"] = r.pass();
          return d;
        });
  m.def("goto_pattern_check", &goto_pattern_check);
  m.def("paper_example", [](const PyRing& r) {
    PaperExample ex = paper_example(r.ptr);
    std::vector<std::string> ideal;
    for (const Polynomial& f : ex.I.groebner) ideal.push_back(render_poly(f));
    return py::make_tuple(ideal, ex.R, ex.B, ex.iota);
  });
  m.def(
      "is_isomorphic",
      [](const FPModule& A, const FPModule& B, std::uint64_t seed) {
        IsoOptions opts;
        opts.seed = seed;
        return iso_to_string(is_isomorphic(A, B, opts).answer);
      },
      py::arg("a"), py::arg("b"), py::arg("seed") = 0);
  m.def(
      "run_session",
      [](const std::string& text, std::uint64_t seed, int max_degree) {
        SessionOptions opts;
        opts.seed = seed;
        opts.max_degree = max_degree;
        SessionResult r = run_session(text, opts);
        return py::make_tuple(r.exit_code, r.transcript);
      },
      py::arg("text"), py::arg("seed") = 0, py::arg("max_degree") = 6);
}
