// flagspec: command-line front end.
//
//   flagspec describe A 2 --nodes 1
//   flagspec spectrum A 2 --nodes 1 --line-bundle 1 --kahler 1
//   flagspec scan A 2 --nodes 1 --q-range=-3:3 --json
//
// Exit codes: 0 success, 1 usage error, 2 mathematical precondition failure.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "flagspec/error.hpp"
#include "flagspec/job.hpp"

namespace {

struct RawOptions {
  std::string type;
  int rank = 0;
  std::string nodes;
  std::string line_bundle;
  std::string theta;
  std::string kahler;
  std::string kahler_units = "plain";
  std::string scalar_target;
  std::string q_range;
  long long max_distinct = 0;
  bool json = false;
};

void add_job_options(CLI::App* sub, RawOptions& o) {
  sub->add_option("type,--type", o.type, "Lie family: A, B, C, D, E, F or G")->required();
  sub->add_option("rank,--rank", o.rank, "rank of the simple Lie algebra")->required();
  sub->add_option("--nodes", o.nodes, "painted nodes, 1-based Bourbaki, comma-separated")->required();
  sub->add_option("--line-bundle", o.line_bundle, "line bundle coordinates on the painted nodes");
  sub->add_option("--theta", o.theta, "closed invariant (1,1)-form coordinates (rationals)");
  sub->add_option("--kahler", o.kahler, "Kähler class coordinates (positive rationals)");
  sub->add_option("--kahler-units", o.kahler_units, "plain or pi")->check(CLI::IsMember({"plain", "pi"}));
  sub->add_option("--scalar-target", o.scalar_target, "scalar curvature target, e.g. 24, 8*pi, or auto-ke");
  sub->add_option("--q-range", o.q_range, "scan range lo:hi (use --q-range=-3:3 for negative bounds)");
  sub->add_option("--max-distinct", o.max_distinct, "cap on distinct merged eigenvalues")->check(CLI::PositiveNumber);
  sub->add_flag("--json", o.json, "emit JSON instead of a table");
}

flagspec::JobSpec to_job(const std::string& command, const RawOptions& o) {
  using namespace flagspec;
  JobSpec spec;
  spec.command = parse_command(command);
  if (o.type.size() != 1) throw Error(ErrorKind::invalid_argument, "type must be a single letter, got '" + o.type + "'");
  spec.lie_family = static_cast<char>(std::toupper(static_cast<unsigned char>(o.type[0])));
  spec.rank = o.rank;
  spec.painted = parse_node_list(o.nodes);
  if (!o.line_bundle.empty()) spec.line_bundle = parse_integer_list(o.line_bundle);
  if (!o.theta.empty()) spec.theta = parse_rational_list(o.theta);
  if (!o.kahler.empty()) spec.kahler = parse_rational_list(o.kahler);
  spec.kahler_pi_units = o.kahler_units == "pi";
  if (!o.scalar_target.empty()) spec.scalar_target = o.scalar_target;
  if (!o.q_range.empty()) spec.q_range = parse_q_range(o.q_range);
  if (auto env = max_distinct_from_env()) spec.max_distinct = *env;
  if (o.max_distinct > 0) spec.max_distinct = static_cast<std::size_t>(o.max_distinct);
  spec.json = o.json;
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spin^c Dirac spectra and harmonic spinors on flag varieties"};
  app.require_subcommand(1);
  RawOptions raw;
  for (const auto& name : flagspec::command_names()) add_job_options(app.add_subcommand(name), raw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  flagspec::Format format = raw.json ? flagspec::Format::json : flagspec::Format::table;
  try {
    auto spec = to_job(command, raw);
    std::cout << flagspec::emit(flagspec::run_job(spec), format);
    return 0;
  } catch (const flagspec::Error& e) {
    std::cerr << "error [" << flagspec::to_string(e.kind()) << "]: " << e.what() << "\n";
    if (raw.json) std::cout << flagspec::emit(flagspec::error_document(e), flagspec::Format::json);
    return e.is_precondition() ? 2 : 1;
  }
}
