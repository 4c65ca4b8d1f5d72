#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "simapprox/errors.hpp"
#include "simapprox/extraction.hpp"
#include "simapprox/io.hpp"

namespace py = pybind11;
using namespace simapprox;
using cd = std::complex<double>;

namespace {

using DiscTuple = std::tuple<cd, double>;
using PieceTuple = std::tuple<cd, double, std::vector<cd>>;

Poly to_poly(const std::vector<cd>& coeffs) { return Poly::from_double(coeffs); }

Patchwork to_patch(const std::vector<PieceTuple>& pieces) {
  std::vector<Piece> out;
  for (const auto& [c, r, coeffs] : pieces) out.push_back({Disc(Complex(c), Real(r)), to_poly(coeffs)});
  return Patchwork(std::move(out));
}

DirectionSet to_dirs(const std::vector<double>& thetas) { return DirectionSet::from_turns(thetas); }

py::dict certificate_dict(const Certificate& c) {
  py::dict d;
  d["window"] = std::make_tuple(c.window.v, c.window.N, c.window.k, c.window.n);
  d["witness_s"] = c.witness_s;
  d["m_value"] = to_double(c.m_value);
  d["created_bound"] = c.created_bound;
  d["slack"] = c.slack;
  d["deductions"] = c.deductions;
  d["ledger_bound"] = ledger_bound(c);
  return d;
}

// A built or loaded series together with the config it came from.
struct Run {
  RunConfig config;
  SeriesFunction series;
};

Run build_run(const std::string& config_text) {
  Run r{parse_config(config_text), {}};
  r.series = build(r.config.schedule, r.config.seq, r.config.targets, r.config.dirs, r.config.options);
  return r;
}

Run load_run(const std::string& archive_text) {
  SeriesArchive a = read_archive(archive_text);
  return {std::move(a.config), std::move(a.series)};
}

py::list verify_run(const Run& r, std::optional<int> grid) {
  const Poly f = r.series.partial_sum();
  py::list out;
  for (const auto& c : r.series.certificates) {
    const auto v = verify_certificate(f, c, r.config.dirs, r.config.targets, grid.value_or(r.config.grid));
    py::dict d;
    d["window"] = std::make_tuple(c.window.v, c.window.N, c.window.k, c.window.n);
    d["pass"] = v.pass;
    d["measured"] = v.measured;
    d["per_direction"] = v.per_direction;
    out.append(d);
  }
  return out;
}

py::list extract_run(const Run& r, const std::vector<cd>& g, int horizon) {
  const Poly gp = to_poly(g);
  const auto res = extract_common_indices(r.series, r.config.targets, gp, horizon, r.config.dirs);
  const Poly f = r.series.partial_sum();
  py::list out;
  for (const auto& e : res.entries) {
    py::dict d;
    d["n"] = e.n;
    d["s"] = e.s;
    d["k"] = e.k;
    d["certified"] = e.certified;
    d["measured"] = remeasure(f, e, gp, r.config.dirs, r.config.grid);
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Certified simultaneous translation approximants";

  static py::exception<Error> error(m, "SimapproxError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), (std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.def("min_pair_gap", [](const std::vector<double>& t) { return to_double(min_pair_gap(to_dirs(t))); });
  m.def("separation_threshold",
        [](double v1, double gap) { return to_double(separation_threshold(Real(v1), Real(gap))); });
  m.def("discs_pairwise_disjoint", [](const std::vector<DiscTuple>& discs) {
    std::vector<Disc> d;
    for (const auto& [c, r] : discs) d.emplace_back(Complex(c), Real(r));
    return discs_pairwise_disjoint(d);
  });

  m.def("sup_bound_on_disc", [](const std::vector<cd>& p, cd center, double radius) {
    return sup_bound_on_disc(to_poly(p), Disc(Complex(center), Real(radius)));
  });
  m.def("shift_argument", [](const std::vector<cd>& p, cd a) { return shift_argument(to_poly(p), Complex(a)).to_double(); });

  m.def("hermite_crt",
        [](const std::vector<PieceTuple>& pieces, const std::vector<int>& orders) {
          return hermite_crt(to_patch(pieces), orders).to_double();
        },
        py::arg("pieces"), py::arg("orders"));
  m.def("certified_error", [](const std::vector<cd>& q, const std::vector<PieceTuple>& pieces) {
    return certified_error(to_poly(q), to_patch(pieces));
  });
  m.def(
      "approximate",
      [](const std::vector<PieceTuple>& pieces, double tol, int order_cap) {
        ApproxOptions o;
        o.order_cap = order_cap;
        const auto r = approximate(to_patch(pieces), tol, o);
        return py::make_tuple(r.q.to_double(), r.per_disc_bound);
      },
      py::arg("pieces"), py::arg("tol"), py::arg("order_cap") = 256);

  m.def(
      "density_probe",
      [](const std::vector<cd>& f, double theta, const std::vector<cd>& g, int v, long s_max) {
        const auto r = density_probe(to_poly(f), Direction(Real(theta)), MagnitudeSequence::naturals(), to_poly(g), v,
                                     s_max);
        return py::make_tuple(r.best_s, r.best_sup);
      },
      py::arg("f"), py::arg("theta"), py::arg("g"), py::arg("v"), py::arg("s_max"));

  py::class_<Run>(m, "Series")
      .def_static("build", &build_run, py::arg("config"), py::call_guard<py::gil_scoped_release>(),
                  "Build from JSON config text.")
      .def_static("from_archive", &load_run, py::arg("text"))
      .def("to_archive", [](const Run& r) { return write_archive(r.config, r.series); })
      .def("verify", &verify_run, py::arg("grid") = std::nullopt)
      .def("extract", &extract_run, py::arg("g"), py::arg("horizon"))
      .def("__call__", [](const Run& r, cd z) { return to_double(evaluate_series(r.series, Complex(z))); })
      .def_property_readonly("certificates",
                             [](const Run& r) {
                               py::list out;
                               for (const auto& c : r.series.certificates) out.append(certificate_dict(c));
                               return out;
                             })
      .def_property_readonly("degrees", [](const Run& r) {
        std::vector<long> d;
        for (const auto& q : r.series.increments) d.push_back(q.degree());
        return d;
      });
}
