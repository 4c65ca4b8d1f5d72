#include "simapprox/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "simapprox/errors.hpp"

namespace simapprox {

using nlohmann::json;

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& why) {
  throw Error(ErrorCode::Config, "config field '" + field + "': " + why);
}

Real parse_scalar(const json& v, const std::string& field) {
  if (v.is_number_integer()) return Real(v.get<long long>());
  if (v.is_number()) return Real(v.get<double>());
  if (v.is_string()) {
    try {
      return parse_real(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      field_error(field, e.what());
    }
  }
  field_error(field, "expected a number or a decimal string");
}

int parse_int(const json& v, const std::string& field, int lo) {
  if (!v.is_number_integer()) field_error(field, "expected an integer");
  const long long x = v.get<long long>();
  if (x < lo || x > 1000000000LL) field_error(field, "must be an integer >= " + std::to_string(lo));
  return static_cast<int>(x);
}

double parse_double(const json& v, const std::string& field) {
  if (!v.is_number()) field_error(field, "expected a number");
  return v.get<double>();
}

const json& need(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) field_error(where.empty() ? key : where + "." + key, "missing");
  return obj.at(key);
}

MagnitudeSequence parse_magnitudes(const json& v) {
  const std::string kind = need(v, "kind", "magnitudes").is_string() ? v.at("kind").get<std::string>() : "";
  if (kind == "naturals") return MagnitudeSequence::naturals();
  if (kind == "spiral") return MagnitudeSequence::spiral();
  if (kind == "arithmetic") {
    return MagnitudeSequence::arithmetic(parse_scalar(need(v, "a", "magnitudes"), "magnitudes.a"),
                                         parse_scalar(need(v, "b", "magnitudes"), "magnitudes.b"));
  }
  if (kind == "power") return MagnitudeSequence::power(parse_scalar(need(v, "p", "magnitudes"), "magnitudes.p"));
  if (kind == "explicit") {
    const json& values = need(v, "values", "magnitudes");
    if (!values.is_array() || values.empty()) field_error("magnitudes.values", "expected a non-empty array");
    std::vector<Complex> list;
    for (size_t i = 0; i < values.size(); ++i) {
      list.push_back(parse_complex(values[i], "magnitudes.values[" + std::to_string(i) + "]"));
    }
    return MagnitudeSequence::explicit_list(std::move(list));
  }
  field_error("magnitudes.kind", "expected one of naturals, arithmetic, power, spiral, explicit");
}

Window parse_window(const json& v, const std::string& field) {
  Window w;
  if (v.is_array() && v.size() == 4) {
    w = {parse_int(v[0], field + "[0]", 1), parse_int(v[1], field + "[1]", 1), parse_int(v[2], field + "[2]", 1),
         parse_int(v[3], field + "[3]", 2)};
  } else if (v.is_object()) {
    w = {parse_int(need(v, "v", field), field + ".v", 1), parse_int(need(v, "N", field), field + ".N", 1),
         parse_int(need(v, "k", field), field + ".k", 1), parse_int(need(v, "n", field), field + ".n", 2)};
  } else {
    field_error(field, "expected [v, N, k, n] or {v, N, k, n}");
  }
  return w;
}

void parse_construction(const json& c, BuildOptions& o) {
  if (!c.is_object()) field_error("construction", "expected an object");
  for (const auto& [key, value] : c.items()) {
    const std::string f = "construction." + key;
    if (key == "placement") {
      const std::string p = value.is_string() ? value.get<std::string>() : "";
      if (p == "interleaved") {
        o.placement = Placement::Interleaved;
      } else if (p == "outside") {
        o.placement = Placement::Outside;
      } else {
        field_error(f, "expected \"interleaved\" or \"outside\"");
      }
    } else if (key == "clearance") {
      o.clearance = parse_double(value, f);
      if (!(o.clearance >= 1)) field_error(f, "must be >= 1");
    } else if (key == "reserve_slots") {
      o.reserve_slots = parse_int(value, f, 0);
    } else if (key == "reserve_start") {
      o.reserve_start = parse_double(value, f);
    } else if (key == "reserve_spacing") {
      o.reserve_spacing = parse_double(value, f);
    } else if (key == "reserve_radius") {
      o.reserve_radius = parse_double(value, f);
      if (!(o.reserve_radius > 0)) field_error(f, "must be positive");
    } else if (key == "reserve_margin") {
      o.reserve_margin = parse_double(value, f);
      if (!(o.reserve_margin >= 1)) field_error(f, "must be >= 1");
    } else if (key == "reserve_tolerance") {
      o.reserve_tolerance = parse_double(value, f);
      if (!(o.reserve_tolerance > 0)) field_error(f, "must be positive");
    } else if (key == "initial_order") {
      o.approx.initial_order = parse_int(value, f, 1);
    } else {
      field_error(f, "unknown key");
    }
  }
}

RunConfig from_json(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::Config, "config: top level must be an object");
  static const std::vector<std::string> known{"directions", "magnitudes", "targets",     "schedule",
                                              "caps",       "grid",       "construction"};
  for (const auto& [key, value] : doc.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) field_error(key, "unknown key");
  }
  RunConfig cfg;
  cfg.echo = doc;

  const json& dirs = need(doc, "directions", "");
  if (!dirs.is_array() || dirs.empty()) field_error("directions", "expected a non-empty array");
  std::vector<Direction> list;
  for (size_t i = 0; i < dirs.size(); ++i) {
    const std::string f = "directions[" + std::to_string(i) + "]";
    const Real theta = parse_scalar(dirs[i], f);
    if (theta < 0 || theta >= 1) field_error(f, "theta must lie in [0, 1)");
    list.emplace_back(theta);
  }
  try {
    cfg.dirs = DirectionSet(std::move(list));
  } catch (const Error& e) {
    field_error("directions", e.what());
  }

  cfg.seq = parse_magnitudes(need(doc, "magnitudes", ""));

  const json& targets = need(doc, "targets", "");
  if (!targets.is_array() || targets.empty()) field_error("targets", "expected a non-empty array");
  for (size_t i = 0; i < targets.size(); ++i) {
    cfg.targets.push_back(parse_poly(targets[i], "targets[" + std::to_string(i) + "]"));
  }

  if (doc.contains("caps")) {
    const json& caps = doc.at("caps");
    if (!caps.is_object()) field_error("caps", "expected an object");
    for (const auto& [key, value] : caps.items()) {
      if (key == "order_cap") {
        cfg.options.order_cap = parse_int(value, "caps.order_cap", 1);
      } else if (key == "scan_cap") {
        cfg.options.scan_cap = parse_int(value, "caps.scan_cap", 1);
      } else if (key == "escalation_cap") {
        cfg.options.escalation_cap = parse_int(value, "caps.escalation_cap", 0);
      } else {
        field_error("caps." + key, "unknown key");
      }
    }
  }
  if (doc.contains("grid")) cfg.grid = parse_int(doc.at("grid"), "grid", 2);
  if (doc.contains("construction")) parse_construction(doc.at("construction"), cfg.options);

  const json& schedule = need(doc, "schedule", "");
  if (schedule.is_string()) {
    const std::string text = schedule.get<std::string>();
    const std::string prefix = "canonical:";
    size_t count = 0;
    const char* first = text.data() + prefix.size();
    const char* last = text.data() + text.size();
    if (text.rfind(prefix, 0) != 0 || std::from_chars(first, last, count).ptr != last || first == last) {
      field_error("schedule", "expected \"canonical:T\" or an array of windows");
    }
    cfg.schedule = canonical_schedule(count, static_cast<int>(cfg.dirs.size()), static_cast<int>(cfg.targets.size()));
  } else if (schedule.is_array()) {
    for (size_t i = 0; i < schedule.size(); ++i) {
      const std::string f = "schedule[" + std::to_string(i) + "]";
      Window w = parse_window(schedule[i], f);
      if (static_cast<size_t>(w.n) > cfg.dirs.size()) field_error(f, "n exceeds the number of directions");
      if (static_cast<size_t>(w.k) > cfg.targets.size()) field_error(f, "k exceeds the target library");
      cfg.schedule.push_back(w);
    }
  } else {
    field_error("schedule", "expected \"canonical:T\" or an array of windows");
  }
  return cfg;
}

json complex_json(const Complex& z) { return json::array({to_decimal(z.re), to_decimal(z.im)}); }

json disc_json(const Disc& d) {
  return json::array({to_decimal(d.center.re), to_decimal(d.center.im), to_decimal(d.radius)});
}

[[noreturn]] void archive_error(const std::string& why) { throw Error(ErrorCode::Archive, "archive: " + why); }

Real archive_real(const json& v, const std::string& field) {
  if (!v.is_string()) archive_error(field + " must be a decimal string");
  try {
    return parse_real(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    archive_error(field + ": " + e.what());
  }
}

Complex archive_complex(const json& v, const std::string& field) {
  if (!v.is_array() || v.size() != 2) archive_error(field + " must be a [re, im] pair");
  return {archive_real(v[0], field), archive_real(v[1], field)};
}

}  // namespace

std::string shortest(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

Complex parse_complex(const json& value, const std::string& field) {
  if (value.is_array()) {
    if (value.size() != 2) field_error(field, "complex values are [re, im]");
    return {parse_scalar(value[0], field + "[0]"), parse_scalar(value[1], field + "[1]")};
  }
  return Complex(parse_scalar(value, field));
}

Poly parse_poly(const json& value, const std::string& field) {
  if (!value.is_array()) field_error(field, "expected an array of coefficients, lowest degree first");
  std::vector<Complex> coeffs;
  for (size_t i = 0; i < value.size(); ++i) {
    coeffs.push_back(parse_complex(value[i], field + "[" + std::to_string(i) + "]"));
  }
  return Poly(std::move(coeffs));
}

Poly parse_coefficients(const std::string& text) {
  const auto start = text.find_first_not_of(" \t");
  if (start != std::string::npos && text[start] == '[') {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::Config, std::string("--g: ") + e.what());
    }
    return parse_poly(doc, "g");
  }
  std::vector<Complex> coeffs;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    try {
      coeffs.emplace_back(parse_real(token));
    } catch (const std::invalid_argument& e) {
      throw Error(ErrorCode::Config, std::string("--g: ") + e.what());
    }
  }
  if (coeffs.empty()) throw Error(ErrorCode::Config, "--g: no coefficients given");
  return Poly(std::move(coeffs));
}

RunConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const size_t upto = std::min(e.byte, text.size());
    const long line = 1 + std::count(text.begin(), text.begin() + static_cast<long>(upto), '\n');
    throw Error(ErrorCode::Config, "config line " + std::to_string(line) + ": " + e.what());
  }
  return from_json(doc);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw Error(ErrorCode::Io, "write to '" + path + "' failed");
}

RunConfig load_config(const std::string& path) { return parse_config(read_file(path)); }

std::string write_archive(const RunConfig& config, const SeriesFunction& series) {
  json doc;
  doc["format"] = "simapprox-archive";
  doc["version"] = kArchiveVersion;
  doc["working_digits"] = kWorkingDigits;
  doc["config"] = config.echo;

  json increments = json::array();
  for (const auto& q : series.increments) {
    json coeffs = json::array();
    for (const auto& c : q.coeffs()) coeffs.push_back(complex_json(c));
    increments.push_back(std::move(coeffs));
  }
  doc["increments"] = std::move(increments);

  json ledger = json::array();
  for (const auto& c : series.certificates) {
    json e;
    e["window"] = {c.window.v, c.window.N, c.window.k, c.window.n};
    e["witness_s"] = c.witness_s;
    e["m_value"] = complex_json(c.m_value);
    e["v1"] = to_decimal(c.v1);
    e["threshold"] = to_decimal(c.threshold);
    e["created_bound"] = c.created_bound;
    e["initial_slack"] = c.initial_slack;
    e["slack"] = c.slack;
    e["deductions"] = c.deductions;
    ledger.push_back(std::move(e));
  }
  doc["ledger"] = std::move(ledger);
  doc["protect_radius"] = to_decimal(series.protect_radius);
  doc["base_radius"] = to_decimal(series.base_radius);
  doc["tail_caps"] = series.tail_caps;
  doc["orders"] = series.orders;
  json reserve = json::array();
  for (const auto& d : series.reserve) reserve.push_back(disc_json(d));
  doc["reserve"] = std::move(reserve);
  return doc.dump(1) + "\n";
}

SeriesArchive read_archive(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    archive_error(e.what());
  }
  if (!doc.is_object() || doc.value("format", "") != "simapprox-archive") archive_error("not a simapprox archive");
  if (!doc.contains("version") || !doc.at("version").is_number_integer()) archive_error("missing version");
  const int version = doc.at("version").get<int>();
  if (version != kArchiveVersion) archive_error("unsupported version " + std::to_string(version));
  if (!doc.contains("working_digits") || doc.at("working_digits") != kWorkingDigits) {
    archive_error("written at a different working precision; rebuild with " + std::to_string(kWorkingDigits) +
                  " digits");
  }

  SeriesArchive out;
  out.version = version;
  try {
    out.config = from_json(doc.at("config"));
  } catch (const Error& e) {
    archive_error(std::string("embedded config: ") + e.what());
  } catch (const json::exception& e) {
    archive_error(std::string("embedded config: ") + e.what());
  }

  try {
    auto& s = out.series;
    for (const auto& q : doc.at("increments")) {
      std::vector<Complex> coeffs;
      for (const auto& c : q) coeffs.push_back(archive_complex(c, "increment coefficient"));
      s.increments.emplace_back(std::move(coeffs));
    }
    for (const auto& e : doc.at("ledger")) {
      Certificate c;
      const auto& w = e.at("window");
      if (!w.is_array() || w.size() != 4) archive_error("ledger window must have 4 entries");
      c.window = {w[0].get<int>(), w[1].get<int>(), w[2].get<int>(), w[3].get<int>()};
      validate(c.window);
      c.witness_s = e.at("witness_s").get<long>();
      c.m_value = archive_complex(e.at("m_value"), "m_value");
      c.v1 = archive_real(e.at("v1"), "v1");
      c.threshold = archive_real(e.at("threshold"), "threshold");
      c.created_bound = e.at("created_bound").get<double>();
      c.initial_slack = e.at("initial_slack").get<double>();
      c.slack = e.at("slack").get<double>();
      c.deductions = e.at("deductions").get<std::vector<double>>();
      s.certificates.push_back(std::move(c));
    }
    s.protect_radius = archive_real(doc.at("protect_radius"), "protect_radius");
    s.base_radius = archive_real(doc.at("base_radius"), "base_radius");
    s.tail_caps = doc.at("tail_caps").get<std::vector<double>>();
    s.orders = doc.at("orders").get<std::vector<std::vector<int>>>();
    for (const auto& d : doc.at("reserve")) {
      if (!d.is_array() || d.size() != 3) archive_error("reserve discs are [re, im, radius]");
      s.reserve.emplace_back(Complex(archive_real(d[0], "reserve"), archive_real(d[1], "reserve")),
                             archive_real(d[2], "reserve"));
    }
  } catch (const json::exception& e) {
    archive_error(e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Archive) throw;
    archive_error(e.what());
  }
  return out;
}

SeriesArchive load_archive(const std::string& path) { return read_archive(read_file(path)); }

}  // namespace simapprox
