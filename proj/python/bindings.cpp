#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <cmath>

#include "bcx/driver.hpp"
#include "bcx/errors.hpp"
#include "bcx/generators.hpp"
#include "bcx/graph.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
  m.doc() = "betweenness centrality kernels";

  py::register_exception<bcx::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<bcx::MethodError>(m, "MethodError", PyExc_ValueError);
  py::register_exception<bcx::OverflowError>(m, "OverflowError", PyExc_OverflowError);
  py::register_exception<bcx::OracleCapError>(m, "OracleCapError", PyExc_RuntimeError);
  py::register_exception<bcx::SamplingError>(m, "SamplingError", PyExc_RuntimeError);

  m.def(
      "compute",
      [](const std::string& edge_list, const std::string& method, unsigned threads,
         std::uint64_t seed, double sample_c, bool normalize) {
        const bcx::Graph g = bcx::Graph::from_edge_list(edge_list);
        bcx::MethodOptions opt;
        opt.threads = threads == 0 ? 1 : threads;
        opt.seed = seed;
        opt.sample_c = sample_c;
        opt.normalize = normalize;
        return bcx::run_method(g, bcx::parse_method(method), opt);
      },
      py::arg("edge_list"), py::arg("method") = "brandes", py::arg("threads") = 1,
      py::arg("seed") = 0, py::arg("sample_c") = 3.0, py::arg("normalize") = true,
      "Compute betweenness centrality; returns one value per vertex.");

  m.def(
      "generate",
      [](const std::string& family, const std::vector<double>& params, std::uint64_t seed) {
        bcx::GenSpec spec;
        spec.family = family;
        spec.params = params;
        spec.seed = seed;
        return bcx::generate(spec).to_edge_list();
      },
      py::arg("family"), py::arg("params"), py::arg("seed") = 0,
      "Generate a named graph family as edge-list text.");

  m.def(
      "verify",
      [](const std::string& edge_list, unsigned threads, std::uint64_t seed, double sample_c,
         bool skip_oracle) {
        const bcx::Graph g = bcx::Graph::from_edge_list(edge_list);
        bcx::MethodOptions opt;
        opt.threads = threads == 0 ? 1 : threads;
        opt.seed = seed;
        opt.sample_c = sample_c;

        std::vector<bcx::Method> methods = {bcx::Method::brandes};
        if (bcx::is_connected(g)) {
          if (!g.directed()) methods.push_back(bcx::Method::algebraic);
          methods.push_back(bcx::Method::parallel_pairwise);
          methods.push_back(bcx::Method::parallel_wavefront);
        }
        if (!skip_oracle) methods.push_back(bcx::Method::oracle);

        std::vector<bcx::BcVector> tables;
        tables.reserve(methods.size());
        for (const bcx::Method method : methods) tables.push_back(bcx::run_method(g, method, opt));

        double max_dev = 0.0;
        for (std::size_t a = 0; a < tables.size(); ++a) {
          for (std::size_t b = a + 1; b < tables.size(); ++b) {
            for (std::size_t v = 0; v < tables[a].size(); ++v) {
              const double x = tables[a][v];
              const double y = tables[b][v];
              const double scale = std::max({1.0, std::fabs(x), std::fabs(y)});
              max_dev = std::max(max_dev, std::fabs(x - y) / scale);
            }
          }
        }
        return max_dev;
      },
      py::arg("edge_list"), py::arg("threads") = 1, py::arg("seed") = 0,
      py::arg("sample_c") = 3.0, py::arg("skip_oracle") = false,
      "Run every applicable method and return the largest pairwise deviation.");

  m.def(
      "bc_table",
      [](const std::vector<double>& bc) { return bcx::format_bc_table(bc); },
      py::arg("bc"), "Render a centrality vector in the tab-separated table format.");
}
