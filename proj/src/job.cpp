#include "flagspec/job.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "flagspec/error.hpp"
#include "flagspec/root_system.hpp"
#include "flagspec/weyl.hpp"

namespace flagspec {

using nlohmann::json;

namespace {

const std::vector<std::pair<Command, std::string>>& command_table() {
  static const std::vector<std::pair<Command, std::string>> table = {
      {Command::describe, "describe"}, {Command::spinc_check, "spinc-check"},
      {Command::theta_spectrum, "theta-spectrum"}, {Command::spectrum, "spectrum"},
      {Command::min, "min"}, {Command::bound, "bound"},
      {Command::harmonic, "harmonic"}, {Command::scan, "scan"},
  };
  return table;
}

Error usage(const std::string& what) { return Error(ErrorKind::invalid_argument, what); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

long parse_long(std::string_view text) {
  BigInt n = parse_bigint(text);
  if (!n.fits_slong_p()) throw usage("integer out of range: " + std::string(text));
  return n.get_si();
}

json rational_list(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(to_string(r));
  return out;
}

json painted_coords(const FlagVariety& x, const Weight& w) {
  json out = json::array();
  for (int p : x.painted()) out.push_back(to_string(w[p - 1]));
  return out;
}

json kahler_json(const KahlerClass& c) {
  return {{"coeffs", rational_list(c.coeffs)}, {"pi_units", c.pi_units}};
}

json word_json(const WeylWord& w) { return json(w.letters); }

FlagVariety flag_of(const JobSpec& spec) {
  return build_flag(build_root_system(LieType::make(spec.lie_family, spec.rank)), spec.painted);
}

LineBundleClass bundle_of(const JobSpec& spec) {
  if (!spec.line_bundle) throw usage(std::string(to_string(spec.command)) + " requires --line-bundle");
  return LineBundleClass{*spec.line_bundle};
}

PiScalar scalar_target_of(const FlagVariety& x, const std::string& text) {
  if (text == "auto-ke") {
    long m = static_cast<long>(x.dim_c());
    return PiScalar(Rational(4 * m * (m + 1)), 0);
  }
  return parse_pi_scalar(text);
}

// The Kähler class a job runs against: the given class, rescaled to the
// scalar-curvature target when one is set; or the Kähler-Einstein class with
// that target when no class is given.
KahlerClass kahler_of(const JobSpec& spec, const FlagVariety& x) {
  std::optional<KahlerClass> given;
  if (spec.kahler) given = KahlerClass{*spec.kahler, spec.kahler_pi_units};
  if (spec.scalar_target) {
    auto target = scalar_target_of(x, *spec.scalar_target);
    return given ? rescale_to_scalar(x, *given, target) : ke_class(x, target);
  }
  if (!given) throw usage(std::string(to_string(spec.command)) + " requires --kahler or --scalar-target");
  return *given;
}

SpectrumOptions options_of(const JobSpec& spec) {
  SpectrumOptions o;
  o.max_distinct = spec.max_distinct;
  return o;
}

json harmonic_json(const HarmonicReport& r) {
  json out;
  out["spinc"] = r.spinc_ok;
  out["twist_weight"] = r.twist_weight.coeffs;
  if (!r.harmonic) {
    out["outcome"] = "none";
    return out;
  }
  const auto& h = *r.harmonic;
  out["outcome"] = "harmonic";
  out["kernel_dimension"] = to_string(h.kernel_dimension);
  out["degree"] = h.concentration_degree;
  out["index"] = to_string(h.index);
  out["word"] = word_json(h.word);
  out["dominant_weight"] = rational_list(h.dominant_weight.fw_coords);
  return out;
}

json describe(const FlagVariety& x) {
  const auto& rs = x.root_system();
  json roots = json::array();
  for (std::size_t k = 0; k < x.radical_roots().size(); ++k) {
    const auto& beta = rs.positive_roots()[x.radical_roots()[k]];
    json pairings = json::array();
    for (int p : x.painted()) pairings.push_back(to_string(coroot_pairing(rs, rs.fundamental_weight(p - 1), beta)));
    roots.push_back({{"root", beta.simple_coords},
                     {"pairings", pairings},
                     {"anticanonical_degree", to_string(x.anticanonical_pairings()[k])}});
  }
  return {{"lie_type", rs.lie_type().name()},
          {"painted", x.painted()},
          {"dim_c", x.dim_c()},
          {"positive_root_count", rs.positive_roots().size()},
          {"radical_roots", roots},
          {"delta_p", painted_coords(x, x.delta_p())},
          {"fano_index", fano_index(x)},
          {"spinc_parity", spinc_parity(x)}};
}

json scan(const JobSpec& spec, const FlagVariety& x) {
  const long p = fano_index(x);
  const long m = static_cast<long>(x.dim_c());
  auto [lo, hi] = spec.q_range.value_or(std::pair<long, long>{-p, p});
  if (lo > hi) throw usage("q range must satisfy lo <= hi");
  std::string target_text = spec.scalar_target.value_or("auto-ke");
  PiScalar target = scalar_target_of(x, target_text);
  KahlerClass omega = ke_class(x, target);
  const bool reference_applies = target == PiScalar(Rational(4 * m * (m + 1)), 0);
  auto primitive = anticanonical_bundle(x);
  for (auto& c : primitive.coeffs) c /= p;

  json rows = json::array();
  for (long q = lo; q <= hi; ++q) {
    if ((p + q) % 2 != 0) continue;
    LineBundleClass l;
    for (long c : primitive.coeffs) l.coeffs.push_back(-q * c);
    json row;
    row["q"] = q;
    row["line_bundle"] = l.coeffs;
    row["spinc"] = is_spinc(x, l);
    auto bound = dirac_lower_bound(x, l, omega);
    row["bound"] = to_json(bound.value);
    row["vacuous"] = bound.vacuous;
    auto h = harmonic_spinors(x, l);
    row["harmonic"] = h.harmonic ? "harmonic" : "none";
    row["kernel_dimension"] = h.harmonic ? to_string(h.harmonic->kernel_dimension) : "0";
    row["degree"] = h.harmonic ? json(h.harmonic->concentration_degree) : json(nullptr);
    row["index"] = h.harmonic ? to_string(h.harmonic->index) : "0";
    // Estimate for Kähler-Einstein metrics with S = 4m(m+1) and |q| <= p.
    if (reference_applies && std::abs(q) <= p) {
      Rational ratio(q, p);
      ratio.canonicalize();
      row["reference_bound"] = to_json(PiScalar((1 - ratio * ratio) * (m + 1) * (m + 1), 0));
    } else {
      row["reference_bound"] = nullptr;
    }
    rows.push_back(std::move(row));
  }
  return {{"fano_index", p},
          {"dim_c", m},
          {"scalar_target", to_json(target)},
          {"kahler_class", kahler_json(omega)},
          {"rows", rows}};
}

json run_payload(const JobSpec& spec) {
  const FlagVariety x = flag_of(spec);
  switch (spec.command) {
    case Command::describe:
      return describe(x);
    case Command::spinc_check: {
      auto l = bundle_of(spec);
      bool ok = is_spinc(x, l);
      return {{"spinc", ok},
              {"parity", spinc_parity(x)},
              {"twist_weight", ok ? json(twist_weight(x, l).coeffs) : json(nullptr)}};
    }
    case Command::theta_spectrum: {
      if (!spec.theta) throw usage("theta-spectrum requires --theta");
      auto omega = kahler_of(spec, x);
      // --kahler-units applies to the form as well.
      KahlerClass theta{*spec.theta, spec.kahler_pi_units};
      return {{"kahler_class", kahler_json(omega)},
              {"spectrum", to_json(theta_spectrum(x, theta, omega, options_of(spec)))}};
    }
    case Command::spectrum: {
      auto l = bundle_of(spec);
      auto omega = kahler_of(spec, x);
      auto s = weitzenboeck_spectrum(x, l, omega, options_of(spec));
      return {{"kahler_class", kahler_json(omega)},
              {"scalar_curvature", to_json(scalar_curvature(x, omega))},
              {"spectrum", to_json(s)}};
    }
    case Command::min: {
      auto l = bundle_of(spec);
      auto omega = kahler_of(spec, x);
      return {{"kahler_class", kahler_json(omega)}, {"weitzenboeck_min", to_json(weitzenboeck_min(x, l, omega))}};
    }
    case Command::bound: {
      auto l = bundle_of(spec);
      auto omega = kahler_of(spec, x);
      auto b = dirac_lower_bound(x, l, omega);
      return {{"kahler_class", kahler_json(omega)}, {"bound", to_json(b.value)}, {"vacuous", b.vacuous}};
    }
    case Command::harmonic:
      return harmonic_json(harmonic_spinors(x, bundle_of(spec)));
    case Command::scan:
      return scan(spec, x);
  }
  throw usage("unknown command");
}

// ---- table rendering -------------------------------------------------------

std::string pi_text(const json& v) {
  std::string r = v.at("rational").get<std::string>();
  int k = v.at("pi_power").get<int>();
  if (k == 0 || r == "0") return r;
  if (r == "1") return k == 1 ? "π" : "1/π";
  if (r == "-1") return k == 1 ? "-π" : "-1/π";
  return k == 1 ? r + "π" : r + "/π";
}

std::string list_text(const json& v) {
  if (v.is_null()) return "-";
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].is_string() ? v[i].get<std::string>() : v[i].dump();
  }
  return out + ")";
}

std::string spectrum_table(const json& s) {
  std::ostringstream os;
  const bool imaginary = s.at("imaginary").get<bool>();
  auto value_text = [&](const json& v) { return imaginary ? pi_text(v) + "·i" : pi_text(v); };
  if (s.at("truncated").get<bool>()) {
    os << "spectrum summary (entries not merged)\n";
  } else {
    os << "eigenvalue\tmultiplicity\n";
    for (const auto& e : s.at("entries")) os << value_text(e.at("value")) << "\t" << e.at("multiplicity").get<std::string>() << "\n";
  }
  os << "min " << value_text(s.at("min")) << "  max " << value_text(s.at("max")) << "  total "
     << s.at("total").get<std::string>() << "\n";
  return os.str();
}

std::string kahler_text(const json& k) {
  return list_text(k.at("coeffs")) + (k.at("pi_units").get<bool>() ? " (π units)" : "");
}

std::string table(const json& doc) {
  std::ostringstream os;
  const json& r = doc.at("result");
  const auto cmd = parse_command(doc.at("job").at("command").get<std::string>());
  switch (cmd) {
    case Command::describe: {
      os << "type " << r.at("lie_type").get<std::string>() << ", painted " << list_text(r.at("painted"))
         << ", m = " << r.at("dim_c") << "\n";
      os << "delta_P " << list_text(r.at("delta_p")) << ", Fano index " << r.at("fano_index")
         << ", Spin^c parity " << list_text(r.at("spinc_parity")) << "\n";
      os << "root\tpairings\tanticanonical degree\n";
      for (const auto& b : r.at("radical_roots"))
        os << list_text(b.at("root")) << "\t" << list_text(b.at("pairings")) << "\t"
           << b.at("anticanonical_degree").get<std::string>() << "\n";
      break;
    }
    case Command::spinc_check:
      os << "spinc " << (r.at("spinc").get<bool>() ? "yes" : "no") << ", parity " << list_text(r.at("parity"))
         << ", twist weight " << list_text(r.at("twist_weight")) << "\n";
      break;
    case Command::theta_spectrum:
      os << "Kähler class " << kahler_text(r.at("kahler_class")) << "\n" << spectrum_table(r.at("spectrum"));
      break;
    case Command::spectrum:
      os << "Kähler class " << kahler_text(r.at("kahler_class")) << ", scalar curvature "
         << pi_text(r.at("scalar_curvature")) << "\n"
         << spectrum_table(r.at("spectrum"));
      break;
    case Command::min:
      os << "Kähler class " << kahler_text(r.at("kahler_class")) << "\nlambda_min " << pi_text(r.at("weitzenboeck_min"))
         << "\n";
      break;
    case Command::bound:
      os << "Kähler class " << kahler_text(r.at("kahler_class")) << "\nlambda^2 >= " << pi_text(r.at("bound"))
         << (r.at("vacuous").get<bool>() ? "  (vacuous)" : "") << "\n";
      break;
    case Command::harmonic:
      os << "twist weight " << list_text(r.at("twist_weight")) << "\n";
      if (r.at("outcome") == "none") {
        os << "no harmonic spinors\n";
      } else {
        os << "harmonic spinors: kernel " << r.at("kernel_dimension").get<std::string>() << ", degree "
           << r.at("degree") << ", index " << r.at("index").get<std::string>() << ", word "
           << list_text(r.at("word")) << "\n";
      }
      break;
    case Command::scan:
      os << "Fano index " << r.at("fano_index") << ", m = " << r.at("dim_c") << ", scalar curvature "
         << pi_text(r.at("scalar_target")) << ", Kähler class " << kahler_text(r.at("kahler_class")) << "\n";
      os << "q\tL\tspinc\tbound\treference\tharmonic\tindex\n";
      for (const auto& row : r.at("rows"))
        os << row.at("q") << "\t" << list_text(row.at("line_bundle")) << "\t"
           << (row.at("spinc").get<bool>() ? "yes" : "no") << "\t" << pi_text(row.at("bound")) << "\t"
           << (row.at("reference_bound").is_null() ? "-" : pi_text(row.at("reference_bound"))) << "\t"
           << row.at("harmonic").get<std::string>() << "\t" << row.at("index").get<std::string>() << "\n";
      break;
  }
  return os.str();
}

}  // namespace

std::string_view to_string(Command c) {
  for (const auto& [cmd, name] : command_table())
    if (cmd == c) return name;
  return "unknown";
}

Command parse_command(std::string_view name) {
  for (const auto& [cmd, n] : command_table())
    if (n == name) return cmd;
  throw usage("unknown command '" + std::string(name) + "'");
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [cmd, n] : command_table()) v.push_back(n);
    return v;
  }();
  return names;
}

std::pair<long, long> parse_q_range(std::string_view text) {
  auto s = trim(text);
  std::size_t sep = s.find("..");
  std::size_t width = 2;
  if (sep == std::string_view::npos) {
    sep = s.find(':');
    width = 1;
  }
  if (sep == std::string_view::npos) throw usage("q range must look like lo:hi, got '" + std::string(text) + "'");
  auto lo = parse_long(s.substr(0, sep));
  auto hi = parse_long(s.substr(sep + width));
  if (lo > hi) throw usage("q range must satisfy lo <= hi");
  return {lo, hi};
}

std::vector<long> parse_integer_list(std::string_view text) {
  std::vector<long> out;
  for (const auto& r : parse_rational_list(text)) {
    if (!is_integer(r)) throw usage("expected integers, got " + to_string(r));
    out.push_back(to_long(r));
  }
  return out;
}

std::vector<int> parse_node_list(std::string_view text) {
  std::vector<int> out;
  for (long n : parse_integer_list(text)) out.push_back(static_cast<int>(n));
  return out;
}

std::optional<std::size_t> max_distinct_from_env() {
  const char* v = std::getenv("FLAGSPEC_MAX_DISTINCT");
  if (!v || !*v) return std::nullopt;
  BigInt n = parse_bigint(v);
  if (n <= 0 || !n.fits_ulong_p()) throw usage("FLAGSPEC_MAX_DISTINCT must be a positive integer");
  return static_cast<std::size_t>(n.get_ui());
}

json to_json(const Rational& r) { return to_string(r); }

json to_json(const PiScalar& s) { return {{"rational", to_string(s.value())}, {"pi_power", s.pi_power()}}; }

json to_json(const Spectrum& s) {
  json entries = json::array();
  for (const auto& e : s.entries)
    entries.push_back({{"value", to_json(PiScalar(e.value, s.pi_power))}, {"multiplicity", to_string(e.multiplicity)}});
  return {{"entries", entries},
          {"imaginary", s.imaginary},
          {"pi_power", s.pi_power},
          {"total", to_string(s.total)},
          {"truncated", s.truncated},
          {"min", to_json(s.min_value())},
          {"max", to_json(s.max_value())}};
}

json to_json(const JobSpec& spec) {
  json j;
  j["command"] = std::string(to_string(spec.command));
  j["type"] = std::string(1, spec.lie_family);
  j["rank"] = spec.rank;
  j["nodes"] = spec.painted;
  j["line_bundle"] = spec.line_bundle ? json(*spec.line_bundle) : json(nullptr);
  j["theta"] = spec.theta ? rational_list(*spec.theta) : json(nullptr);
  j["kahler"] = spec.kahler ? rational_list(*spec.kahler) : json(nullptr);
  j["kahler_units"] = spec.kahler_pi_units ? "pi" : "plain";
  j["scalar_target"] = spec.scalar_target ? json(*spec.scalar_target) : json(nullptr);
  j["q_range"] = spec.q_range ? json::array({spec.q_range->first, spec.q_range->second}) : json(nullptr);
  j["max_distinct"] = std::to_string(spec.max_distinct);
  j["json"] = spec.json;
  return j;
}

PiScalar pi_scalar_from_json(const json& j) {
  return PiScalar(parse_rational(j.at("rational").get<std::string>()), j.at("pi_power").get<int>());
}

Spectrum spectrum_from_json(const json& j) {
  Spectrum s;
  s.pi_power = j.at("pi_power").get<int>();
  s.imaginary = j.at("imaginary").get<bool>();
  s.truncated = j.at("truncated").get<bool>();
  s.total = parse_bigint(j.at("total").get<std::string>());
  s.min = pi_scalar_from_json(j.at("min")).value();
  s.max = pi_scalar_from_json(j.at("max")).value();
  for (const auto& e : j.at("entries"))
    s.entries.push_back({pi_scalar_from_json(e.at("value")).value(), parse_bigint(e.at("multiplicity").get<std::string>())});
  return s;
}

JobSpec job_from_json(const json& j) {
  JobSpec spec;
  auto rationals = [](const json& v) {
    std::vector<Rational> out;
    for (const auto& x : v) out.push_back(parse_rational(x.get<std::string>()));
    return out;
  };
  spec.command = parse_command(j.at("command").get<std::string>());
  auto type = j.at("type").get<std::string>();
  if (type.size() != 1) throw usage("type must be a single letter");
  spec.lie_family = type[0];
  spec.rank = j.at("rank").get<int>();
  spec.painted = j.at("nodes").get<std::vector<int>>();
  if (!j.at("line_bundle").is_null()) spec.line_bundle = j.at("line_bundle").get<std::vector<long>>();
  if (!j.at("theta").is_null()) spec.theta = rationals(j.at("theta"));
  if (!j.at("kahler").is_null()) spec.kahler = rationals(j.at("kahler"));
  spec.kahler_pi_units = j.at("kahler_units").get<std::string>() == "pi";
  if (!j.at("scalar_target").is_null()) spec.scalar_target = j.at("scalar_target").get<std::string>();
  if (!j.at("q_range").is_null()) spec.q_range = {j.at("q_range")[0].get<long>(), j.at("q_range")[1].get<long>()};
  spec.max_distinct = static_cast<std::size_t>(parse_bigint(j.at("max_distinct").get<std::string>()).get_ui());
  spec.json = j.at("json").get<bool>();
  return spec;
}

json run_job(const JobSpec& spec) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["artifact_version"] = std::string(kArtifactVersion);
  doc["job"] = to_json(spec);
  doc["result"] = run_payload(spec);
  return doc;
}

json error_document(const Error& e) {
  return {{"schema_version", kSchemaVersion},
          {"artifact_version", std::string(kArtifactVersion)},
          {"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}};
}

std::string emit(const json& doc, Format format) {
  if (format == Format::json) return doc.dump(2) + "\n";
  if (doc.contains("error"))
    return "error [" + doc["error"]["kind"].get<std::string>() + "]: " + doc["error"]["message"].get<std::string>() + "\n";
  return table(doc);
}

}  // namespace flagspec
