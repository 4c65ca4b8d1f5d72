#include "simapprox/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "simapprox/builder.hpp"
#include "simapprox/extraction.hpp"
#include "simapprox/io.hpp"

namespace simapprox {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Config:
    case ErrorCode::Domain:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::OverlappingDiscs:
      return kExitConfig;
    case ErrorCode::ScanExhausted:
      return kExitScanExhausted;
    case ErrorCode::OrderCapExceeded:
    case ErrorCode::ConditioningFailure:
    case ErrorCode::SlackDepleted:
      return kExitCap;
    case ErrorCode::NoCloseTarget:
    case ErrorCode::MissingWindow:
      return kExitExtraction;
    case ErrorCode::Archive:
    case ErrorCode::Io:
      return kExitIo;
  }
  return kExitIo;
}

namespace {

// Runs a command body, turning structured errors into a message and an exit code.
template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

std::string window_text(const Window& w) {
  std::ostringstream s;
  s << "(" << w.v << "," << w.N << "," << w.k << "," << w.n << ")";
  return s.str();
}

std::vector<Real> split_reals(const std::string& text, size_t count, const char* what) {
  std::vector<Real> out;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    try {
      out.push_back(parse_real(token));
    } catch (const std::invalid_argument&) {
      throw Error(ErrorCode::Config, std::string(what) + ": cannot parse '" + token + "'");
    }
  }
  if (out.size() != count) {
    throw Error(ErrorCode::Config, std::string(what) + ": expected " + std::to_string(count) + " comma-separated values");
  }
  return out;
}

// Problems the ledger arithmetic and witness legality checks find; empty if none.
std::vector<std::string> audit(const Certificate& c, const RunConfig& cfg) {
  std::vector<std::string> issues;
  const double half = 1.0 / (2.0 * c.window.N);
  double spent = 0.0;
  for (double d : c.deductions) {
    if (d < 0) issues.push_back("negative deduction");
    spent += d;
  }
  if (c.initial_slack != half) issues.push_back("initial slack is not 1/(2N)");
  if (c.created_bound > half) issues.push_back("created bound exceeds 1/(2N)");
  if (!(ledger_bound(c) < 1.0 / c.window.N)) issues.push_back("budget exceeds 1/N");
  if (spent > c.initial_slack || c.slack < 0) issues.push_back("slack went negative");
  if (std::abs((c.initial_slack - spent) - c.slack) > 1e-12 * c.initial_slack) {
    issues.push_back("slack does not match the deductions");
  }

  if (static_cast<size_t>(c.window.n) > cfg.dirs.size()) {
    issues.push_back("window uses more directions than configured");
    return issues;
  }
  if (!(magnitude_at(cfg.seq, c.witness_s) == c.m_value)) issues.push_back("m_value is not m_s for the recorded s");
  const DirectionSet used = cfg.dirs.prefix(static_cast<size_t>(c.window.n));
  const Real legal = separation_threshold(c.v1, min_pair_gap(used));
  if (c.threshold < legal) issues.push_back("recorded threshold below the separation threshold");
  if (!(abs(c.m_value) > legal) || !(abs(c.m_value) > c.threshold)) issues.push_back("witness not beyond threshold");
  const TranslationFrame frame{c.v1, c.m_value, used};
  if (!discs_pairwise_disjoint(frame_discs(frame))) issues.push_back("frame discs overlap");
  return issues;
}

}  // namespace

int cmd_build(const std::string& config_path, const std::string& out_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const RunConfig cfg = load_config(config_path);
    SeriesFunction series;
    for (const auto& w : cfg.schedule) {
      series = fix_window(std::move(series), w, cfg.seq, cfg.targets, cfg.dirs, cfg.options);
      const auto& c = series.certificates.back();
      const auto& orders = series.orders.back();
      out << "window " << window_text(w) << " s=" << c.witness_s << " |m|=" << shortest(to_double(abs(c.m_value)))
          << " degree=" << series.increments.back().degree()
          << " nodes=" << *std::max_element(orders.begin(), orders.end())
          << " bound=" << shortest(c.created_bound) << " budget=" << shortest(c.initial_slack) << "\n";
    }
    write_file(out_path, write_archive(cfg, series));
    out << "wrote " << series.certificates.size() << " certificates to " << out_path << "\n";
    return int{kExitOk};
  });
}

int cmd_verify(const std::string& archive_path, std::optional<int> grid, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SeriesArchive a = load_archive(archive_path);
    const int g = grid.value_or(a.config.grid);
    if (g < 2) throw Error(ErrorCode::Config, "--grid must be at least 2");
    const Poly f = a.series.partial_sum();
    bool all = true;
    for (const auto& c : a.series.certificates) {
      const VerifyResult r = verify_certificate(f, c, a.config.dirs, a.config.targets, g);
      const auto issues = audit(c, a.config);
      const bool ok = r.pass && issues.empty();
      all = all && ok;
      out << (ok ? "PASS " : "FAIL ") << window_text(c.window) << " s=" << c.witness_s
          << " measured=" << shortest(r.measured) << " limit=" << shortest(1.0 / c.window.N)
          << " ledger=" << shortest(ledger_bound(c)) << "\n";
      for (const auto& why : issues) out << "  ledger: " << why << "\n";
    }
    out << (all ? "all " : "not all ") << a.series.certificates.size() << " certificates pass at grid " << g << "\n";
    return int{all ? kExitOk : kExitVerifyFailed};
  });
}

int cmd_extract(const std::string& archive_path, const ExtractRequest& request, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    const SeriesArchive a = load_archive(archive_path);
    const Poly g = parse_coefficients(request.g);
    const ExtractionResult r =
        request.assert_k ? extract_asserted(a.series, *request.assert_k, request.assert_distance, request.horizon)
                         : extract_common_indices(a.series, a.config.targets, g, request.horizon, a.config.dirs);
    const Poly f = a.series.partial_sum();
    out << "n s_n k_n certified measured\n";
    for (const auto& e : r.entries) {
      out << e.n << " " << e.s << " " << e.k << " " << shortest(e.certified) << " "
          << shortest(remeasure(f, e, g, a.config.dirs, a.config.grid));
      if (e.asserted) out << " uncertified";
      out << "\n";
    }
    return int{kExitOk};
  });
}

int cmd_eval(const std::string& archive_path, const std::string& z, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto parts = split_reals(z, 2, "--z");
    const SeriesArchive a = load_archive(archive_path);
    const auto value = to_double(evaluate_series(a.series, Complex(parts[0], parts[1])));
    out << shortest(value.real()) << " " << shortest(value.imag()) << "\n";
    return int{kExitOk};
  });
}

int cmd_export_grid(const std::string& archive_path, const std::string& disc, int n, const std::string& out_path,
                    std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto parts = split_reals(disc, 3, "--disc");
    if (!(parts[2] > 0)) throw Error(ErrorCode::Config, "--disc radius must be positive");
    if (n < 2) throw Error(ErrorCode::Config, "--n must be at least 2");
    const SeriesArchive a = load_archive(archive_path);
    const Complex center(parts[0], parts[1]);
    const auto local = local_double_coeffs(a.series.partial_sum(), center);
    const double cx = to_double(parts[0]);
    const double cy = to_double(parts[1]);
    const double r = to_double(parts[2]);

    std::ostringstream csv;
    csv << "# re_z,im_z,re_f,im_f,abs_f\n";
    for (int row = 0; row < n; ++row) {
      const double dy = -r + 2 * r * row / (n - 1);
      for (int col = 0; col < n; ++col) {
        const double dx = -r + 2 * r * col / (n - 1);
        const auto fz = horner(local, {dx, dy});
        csv << shortest(cx + dx) << "," << shortest(cy + dy) << "," << shortest(fz.real()) << ","
            << shortest(fz.imag()) << "," << shortest(std::abs(fz)) << "\n";
      }
    }
    write_file(out_path, csv.str());
    out << "wrote " << n * n << " rows to " << out_path << "\n";
    return int{kExitOk};
  });
}

}  // namespace simapprox
