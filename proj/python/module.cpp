#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "stacksort/classes.hpp"
#include "stacksort/compositions.hpp"
#include "stacksort/gf.hpp"
#include "stacksort/hooks.hpp"
#include "stacksort/stack_sort.hpp"
#include "stacksort/text.hpp"
#include "stacksort/verify.hpp"

namespace py = pybind11;
using namespace stacksort;

namespace {

py::object to_py(const BigInt& v) {
  const std::string s = v.str();
  return py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::object to_py(const Rational& v) {
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_string(v));
}

py::list to_py(const TruncSeries& f) {
  py::list out;
  for (const auto& c : f.coefficients()) out.append(to_py(c));
  return out;
}

Permutation perm(const std::vector<int>& entries) { return Permutation(entries); }

ClassSpec spec(const std::string& patterns) {
  return ClassSpec{parse_pattern_list(patterns, /*allow_bonds=*/true)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = R"pbdoc(
    West's stack-sorting map, fertilities of permutation classes, and the
    generating functions that count them. Permutations are lists of distinct
    positive ints; pattern lists use the compact form "231,321" or
    "2341,1342,[32]41,[31]42" with brackets marking adjacent entries.
  )pbdoc";

  m.def("sort_once", [](const std::vector<int>& p) { return sort_once(perm(p)).vec(); });
  m.def("sort_iterate",
        [](const std::vector<int>& p, std::size_t t) { return sort_iterate(perm(p), t).vec(); },
        py::arg("p"), py::arg("t"));
  m.def("is_t_stack_sortable",
        [](const std::vector<int>& p, std::size_t t) { return is_t_stack_sortable(perm(p), t); });
  m.def("normalize", [](const std::vector<int>& p) { return normalize(perm(p)).vec(); });
  m.def("descents", [](const std::vector<int>& p) { return descents(perm(p)); });
  m.def("tail_length", [](const std::vector<int>& p) { return tail_length(perm(p)); });
  m.def("zeil", [](const std::vector<int>& p) { return zeil(perm(p)); });
  m.def("tail_bound_descents",
        [](const std::vector<int>& p) { return tail_bound_descents(perm(p)); });
  m.def("hooks_from", [](const std::vector<int>& p, std::size_t i) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const Hook& h : hooks_from(perm(p), i)) out.emplace_back(h.sw, h.ne);
    return out;
  }, "Hooks with southwest endpoint at 1-based position i, as (sw, ne) pairs.");
  m.def("split_by_hook", [](const std::vector<int>& p, std::size_t sw, std::size_t ne) {
    const auto parts = split_by_hook(perm(p), {sw, ne});
    return std::make_pair(parts.unsheltered.vec(), parts.sheltered.vec());
  }, "Returns (unsheltered, sheltered).");
  m.def("contains", [](const std::vector<int>& host, const std::string& pattern) {
    return contains(perm(host), parse_vincular(pattern));
  }, py::arg("host"), py::arg("pattern"),
        "pattern uses the spaced bracket form, e.g. \"[3 2] 4 1\".");

  m.def("preimages", [](const std::vector<int>& p) {
    std::vector<std::vector<int>> out;
    for (const auto& q : preimages(perm(p))) out.push_back(q.vec());
    return out;
  });
  m.def("fertility", [](const std::vector<int>& p) { return to_py(fertility(perm(p))); });
  m.def("fertility_by_decomposition", [](const std::vector<int>& p, std::size_t d) {
    return to_py(fertility_by_decomposition(perm(p), d));
  });
  m.def("count_t_sortable", [](std::size_t n, std::size_t t, std::size_t cap) {
    return to_py(count_t_sortable(n, t, cap));
  }, py::arg("n"), py::arg("t"), py::arg("cap") = kDefaultCap);

  m.def("enumerate_class", [](std::size_t n, const std::string& patterns, std::size_t cap) {
    std::vector<std::vector<int>> out;
    for (const auto& p : enumerate_class(n, spec(patterns), cap)) out.push_back(p.vec());
    return out;
  }, py::arg("n"), py::arg("patterns"), py::arg("cap") = kDefaultCap);
  m.def("class_fertility", [](std::size_t n, const std::string& patterns, std::size_t cap) {
    return to_py(class_fertility(n, spec(patterns), cap));
  }, py::arg("n"), py::arg("patterns"), py::arg("cap") = kDefaultCap);
  m.def("verify_class_equality",
        [](std::size_t n, const std::string& lhs, const std::string& rhs, std::size_t cap) {
          return verify_class_equality(n, spec(lhs), spec(rhs), cap);
        }, py::arg("n"), py::arg("lhs"), py::arg("rhs"), py::arg("cap") = kDefaultCap,
        "s^-1(Av_n(lhs)) == Av_n(rhs) as sets.");
  m.def("descent_refined_closed_form",
        [](long n, long k) { return to_py(descent_refined_closed_form(n, k)); });

  m.def("catalan_series", [](std::size_t order) { return to_py(catalan_series(order)); });
  m.def("av231_321_preimage_gf",
        [](std::size_t order) { return to_py(av231_321_preimage_gf(order)); });
  m.def("boolean_catalan_gf", [](std::size_t order) { return to_py(boolean_catalan_gf(order)); });
  m.def("kernel_root_av231_321",
        [](std::size_t order) { return to_py(kernel_root_av231_321(order)); });
  m.def("kernel_root_av132_231",
        [](std::size_t order) { return to_py(kernel_root_av132_231(order)); });
  m.def("descent_refined_gf", [](std::size_t x_order, std::size_t z_degree) {
    const BivarSeries j = descent_refined_gf(x_order, z_degree);
    py::list rows;
    for (std::size_t i = 0; i <= x_order; ++i) {
      py::list row;
      for (std::size_t k = 0; k <= z_degree; ++k) row.append(to_py(j.at(i, k)));
      rows.append(row);
    }
    return rows;
  }, "rows[i][k] is the coefficient of x^i z^k.");

  m.def("d_of", [](const std::vector<int>& parts) { return to_py(d_of(Composition(parts))); });
  m.def("d_of_oracle",
        [](const std::vector<int>& parts) { return to_py(d_of_oracle(Composition(parts))); });
  m.def("psi", [](const std::vector<int>& parts) { return psi(Composition(parts)); });
  m.def("count_subdiagrams",
        [](const std::vector<int>& lambda) { return to_py(count_subdiagrams(lambda)); });
  m.def("catalan_product",
        [](const std::vector<int>& parts) { return to_py(catalan_product(Composition(parts))); });
  m.def("verify_composition_identity", &verify_composition_identity);

  m.def("run_suite", [](const std::string& suite, std::size_t cap) {
    py::object loads = py::module_::import("json").attr("loads");
    return loads(run_suite(suite, cap).to_json().dump());
  }, py::arg("suite"), py::arg("cap") = kDefaultCap);
}
