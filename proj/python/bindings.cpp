#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hamtorus/census.hpp"
#include "hamtorus/counting.hpp"
#include "hamtorus/diagonals.hpp"
#include "hamtorus/errors.hpp"
#include "hamtorus/hamiltonicity.hpp"
#include "hamtorus/links.hpp"

namespace py = pybind11;
using namespace hamtorus;

namespace {

using LinkTuple = std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>;

Link to_link(const LinkTuple& t) {
  return {std::get<0>(t), std::get<1>(t), std::get<2>(t), std::get<3>(t)};
}
LinkTuple from_link(const Link& l) { return {l.a, l.b, l.c, l.d}; }

std::int64_t diag_count(std::int64_t n, std::int64_t m, const std::string& method) {
  GridParams grid(n, m);
  if (method == "naive") return diag_count_naive(n, m);
  if (method == "string") return diag_count_string(n, m);
  if (method == "reduction") return diag_count_reduction(n, m);
  if (method == "tree" || method == "auto") return diag_count_tree(n, m);
  throw InputError("unknown method " + method);
}

bool is_hamiltonian(std::int64_t n, std::int64_t m, const std::string& method) {
  if (method == "brute") return is_hamiltonian_brute(n, m).hamiltonian;
  if (method == "link" || method == "auto") return is_hamiltonian_fast(n, m);
  throw InputError("unknown method " + method);
}

py::object witness_object(const std::optional<HamWitness>& w) {
  if (!w) return py::none();
  std::vector<std::pair<std::int64_t, std::int64_t>> cycle;
  cycle.reserve(w->cycle.size());
  for (const auto& c : w->cycle) cycle.emplace_back(c.row, c.col);
  return py::make_tuple(w->orientation.str(), cycle);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hamiltonicity and diagonal counts of grid graphs on the two-holed torus";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<InconsistencyError>(m, "InconsistencyError", PyExc_RuntimeError);

  m.def("diag_count", &diag_count, py::arg("n"), py::arg("m"), py::arg("method") = "auto",
        "Number of diagonals; method is naive, string, reduction, tree or auto.");
  m.def("is_hamiltonian", &is_hamiltonian, py::arg("n"), py::arg("m"),
        py::arg("method") = "auto", "Hamiltonicity by the brute or link tier.");
  m.def(
      "witness",
      [](std::int64_t n, std::int64_t m, const std::string& method) {
        if (method == "brute") return witness_object(is_hamiltonian_brute(n, m, true).witness);
        return witness_object(fast_witness(n, m));
      },
      py::arg("n"), py::arg("m"), py::arg("method") = "auto",
      "(orientation, [(row, col), ...]) or None.");
  m.def(
      "orientation_link",
      [](std::int64_t n, std::int64_t m, const std::string& omega) {
        return from_link(
            orientation_link(decompose(GridParams(n, m)), OrientationString::parse(omega)));
      },
      py::arg("n"), py::arg("m"), py::arg("omega"));
  m.def(
      "cycle_count",
      [](std::int64_t n, std::int64_t m, const std::string& omega) {
        return count_components(decompose(GridParams(n, m)), OrientationString::parse(omega));
      },
      py::arg("n"), py::arg("m"), py::arg("omega"));
  m.def(
      "diagonals",
      [](std::int64_t n, std::int64_t m) {
        py::list out;
        const auto dec = decompose(GridParams(n, m));
        for (const auto& d : dec.diagonals()) {
          const auto& p = d.profile;
          out.append(py::dict(py::arg("id") = d.id, py::arg("size") = d.cells.size(),
                              py::arg("profile") = py::make_tuple(p.a, p.b, p.c, p.d),
                              py::arg("group") = d.group_id));
        }
        return out;
      },
      py::arg("n"), py::arg("m"));
  m.def("link_permutation", [](const LinkTuple& l) { return link_permutation(to_link(l)); });
  m.def("loop_count", [](const LinkTuple& l) { return loop_count(to_link(l)); });
  m.def("link_reduce", [](const LinkTuple& l) { return from_link(link_reduce(to_link(l))); });
  m.def("square_construction", [](std::int64_t n) { return witness_object(square_construction(n)); });
  m.def("segment_successor", &segment_successor, py::arg("m"), py::arg("d"));
  m.def("tree_string", [](std::int64_t big, std::int64_t small) {
    return to_string(tree_string(big, small));
  });
  m.def("canonical_tree_string", [](const std::string& s) {
    return to_string(as_tree_string(canonicalize(parse_tree_string(s))));
  });
  m.def(
      "exceptional_pairs",
      [](std::int64_t max_m, unsigned workers) {
        std::vector<PairRecord> rows;
        {
          py::gil_scoped_release release;
          rows = exceptional_pairs(max_m, workers);
        }
        py::list out;
        for (const auto& r : rows) {
          out.append(py::dict(py::arg("n") = r.n, py::arg("m") = r.m, py::arg("diag") = r.diag,
                              py::arg("hamiltonian") = r.hamiltonian,
                              py::arg("method") = r.method));
        }
        return out;
      },
      py::arg("max_m"), py::arg("workers") = 1);
  m.def(
      "diag_distribution",
      [](std::int64_t h, unsigned workers) {
        DistributionReport r;
        {
          py::gil_scoped_release release;
          r = diag_distribution(h, workers);
        }
        return py::dict(py::arg("h") = r.h, py::arg("pairs") = r.pairs,
                        py::arg("counts") = py::make_tuple(r.count1, r.count2, r.count3),
                        py::arg("P") = py::make_tuple(r.p1(), r.p2(), r.p3()));
      },
      py::arg("h"), py::arg("workers") = 1);
}
