#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "pcwkit/batch.hpp"
#include "pcwkit/codegen.hpp"
#include "pcwkit/cone.hpp"
#include "pcwkit/exact_linalg.hpp"
#include "pcwkit/gaussian.hpp"
#include "pcwkit/io.hpp"
#include "pcwkit/pcw.hpp"
#include "pcwkit/subsets.hpp"
#include "pcwkit/tanner.hpp"

namespace py = pybind11;

namespace {

using namespace pcwkit;

BinaryMatrix to_matrix(const std::vector<std::vector<int>>& rows) {
  if (rows.empty()) {
    throw std::invalid_argument("matrix needs at least one row");
  }
  const std::size_t cols = rows[0].size();
  BinaryMatrix h(rows.size(), cols);
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (rows[j].size() != cols) {
      throw std::invalid_argument("matrix rows must have equal length");
    }
    for (std::size_t i = 0; i < cols; ++i) {
      if (rows[j][i] != 0 && rows[j][i] != 1) {
        throw std::invalid_argument("matrix entries must be 0 or 1");
      }
      if (rows[j][i]) h.set(j, i, true);
    }
  }
  return h;
}

std::vector<std::vector<int>> from_matrix(const BinaryMatrix& h) {
  std::vector<std::vector<int>> rows(h.rows(), std::vector<int>(h.cols(), 0));
  for (std::size_t j = 0; j < h.rows(); ++j) {
    for (std::size_t i = 0; i < h.cols(); ++i) rows[j][i] = h(j, i);
  }
  return rows;
}

py::int_ to_py_int(const BigInt& x) {
  const std::string digits = x.str();
  PyObject* obj = PyLong_FromString(digits.c_str(), nullptr, 10);
  if (obj == nullptr) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

py::list to_py_vector(const IntVector& v) {
  py::list out;
  for (const BigInt& x : v) out.append(to_py_int(x));
  return out;
}

IntVector to_int_vector(const py::sequence& seq) {
  IntVector v;
  for (const auto& item : seq) {
    const std::string digits = py::str(item);
    try {
      v.emplace_back(digits);
    } catch (const std::exception&) {
      throw std::invalid_argument("vector entries must be integers");
    }
  }
  return v;
}

ColumnSubset to_subset(const std::vector<std::size_t>& indices) {
  return ColumnSubset(indices);
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "pseudo-codeword constructions and fundamental-cone analysis";

  mod.def(
      "det_vector",
      [](const std::vector<std::vector<int>>& h, const std::vector<std::size_t>& s) {
        return to_py_vector(det_vector(to_matrix(h), to_subset(s)));
      },
      py::arg("h"), py::arg("subset"),
      "Signed determinant vector of H for a size-(m+1) column subset.");
  mod.def(
      "absdet_vector",
      [](const std::vector<std::vector<int>>& h, const std::vector<std::size_t>& s) {
        return to_py_vector(absdet_vector(to_matrix(h), to_subset(s)));
      },
      py::arg("h"), py::arg("subset"));
  mod.def(
      "perm_vector",
      [](const std::vector<std::vector<int>>& h, const std::vector<std::size_t>& s) {
        return to_py_vector(perm_vector(to_matrix(h), to_subset(s)));
      },
      py::arg("h"), py::arg("subset"));
  mod.def(
      "z_syndrome",
      [](const std::vector<std::vector<int>>& h, const py::sequence& v) {
        return to_py_vector(z_syndrome(to_matrix(h), to_int_vector(v)));
      },
      py::arg("h"), py::arg("v"));

  mod.def(
      "is_unscaled_pcw",
      [](const std::vector<std::vector<int>>& h, const py::sequence& w) {
        return is_unscaled_pcw(to_matrix(h), to_int_vector(w));
      },
      py::arg("h"), py::arg("w"));
  mod.def(
      "awgnc_pseudoweight",
      [](const py::sequence& w) {
        const PseudoWeight pw = awgnc_pseudoweight(to_int_vector(w));
        return py::make_tuple(pw.as_double(), pw.zero_vector);
      },
      py::arg("w"), "Returns (weight, is_zero_vector).");
  mod.def(
      "is_minimal_pcw",
      [](const std::vector<std::vector<int>>& h, const py::sequence& w) {
        return is_minimal_pcw(to_matrix(h), to_int_vector(w));
      },
      py::arg("h"), py::arg("w"));

  mod.def(
      "girth",
      [](const std::vector<std::vector<int>>& h) -> py::object {
        const auto g = girth(TannerGraph(to_matrix(h)));
        if (!g.has_value()) return py::none();
        return py::int_(*g);
      },
      py::arg("h"), "Shortest cycle length of the Tanner graph, or None.");
  mod.def(
      "has_four_cycle",
      [](const std::vector<std::vector<int>>& h) { return has_four_cycle(to_matrix(h)); },
      py::arg("h"));
  mod.def(
      "count_perfect_matchings",
      [](const std::vector<std::vector<int>>& h) {
        return to_py_int(count_perfect_matchings(to_matrix(h)));
      },
      py::arg("h"));
  mod.def(
      "canonical_completion",
      [](const std::vector<std::vector<int>>& h, std::size_t root) {
        return to_py_vector(canonical_completion(TannerGraph(to_matrix(h)), root));
      },
      py::arg("h"), py::arg("root"));
  mod.def(
      "verify_signed_completion",
      [](const std::vector<std::vector<int>>& h, std::size_t root) {
        const CompletionResult res = verify_signed_completion(to_matrix(h), root);
        py::dict out;
        out["omega"] = to_py_vector(res.omega);
        out["nu"] = to_py_vector(res.nu);
        out["jprime"] = res.jprime;
        out["verified"] = res.verified;
        return out;
      },
      py::arg("h"), py::arg("root"));

  mod.def(
      "verify_gaussian_limit",
      [](const std::vector<std::vector<int>>& h, const std::vector<std::size_t>& s,
         const std::vector<double>& schedule, double tol) {
        GaussianTolerance tolerance;
        tolerance.relative = tol;
        tolerance.zero_absolute = tol;
        const GaussianLimitReport report =
            verify_gaussian_limit(to_matrix(h), to_subset(s), schedule, tolerance);
        py::dict out;
        out["all_converged"] = report.all_converged;
        out["max_rel_error"] = report.max_rel_error;
        out["max_zero_error"] = report.max_zero_error;
        py::list targets;
        for (const GaussianBitRecord& rec : report.bits) targets.append(to_py_int(rec.target));
        out["targets"] = targets;
        return out;
      },
      py::arg("h"), py::arg("subset"),
      py::arg("schedule") = std::vector<double>{1e-1, 1e-2, 1e-3, 1e-4},
      py::arg("tol") = 1e-6);

  mod.def("example_h422", [] { return from_matrix(example_h422()); });
  mod.def(
      "dumbbell", [](std::size_t k) { return from_matrix(dumbbell(k)); }, py::arg("k"));
  mod.def(
      "random_regular_ldpc",
      [](std::size_t n, std::size_t dv, std::size_t dc, std::uint64_t seed) {
        return from_matrix(random_regular_ldpc({n, dv, dc, seed}));
      },
      py::arg("n"), py::arg("dv"), py::arg("dc"), py::arg("seed"));
  mod.def(
      "remove_four_cycles",
      [](const std::vector<std::vector<int>>& h, std::uint64_t seed, std::uint64_t max_iters) {
        const FourCycleRemoval res = remove_four_cycles(to_matrix(h), seed, max_iters);
        return py::make_tuple(from_matrix(res.matrix), res.success,
                              res.remaining_four_cycles);
      },
      py::arg("h"), py::arg("seed"), py::arg("max_iters") = 10000,
      "Returns (matrix, success, remaining_four_cycles).");

  mod.def(
      "all_subsets",
      [](std::size_t n, std::size_t k) {
        std::vector<std::vector<std::size_t>> out;
        for (const ColumnSubset& s : all_subsets(n, k)) out.push_back(s.indices());
        return out;
      },
      py::arg("n"), py::arg("k"));

  mod.def(
      "parse_alist", [](const std::string& text) { return from_matrix(parse_alist(text)); },
      py::arg("text"));
  mod.def(
      "write_alist",
      [](const std::vector<std::vector<int>>& h) { return write_alist(to_matrix(h)); },
      py::arg("h"));
  mod.def(
      "parse_dense", [](const std::string& text) { return from_matrix(parse_dense(text)); },
      py::arg("text"));
  mod.def(
      "write_dense",
      [](const std::vector<std::vector<int>>& h) { return write_dense(to_matrix(h)); },
      py::arg("h"));
}
