#include "crystal/cli.hpp"

#include <cstdlib>
#include <optional>

#include <CLI11.hpp>

#include "crystal/crystal_graph.hpp"
#include "crystal/embedding.hpp"
#include "crystal/json_io.hpp"
#include "crystal/skew_rsk.hpp"
#include "crystal/verify.hpp"

namespace crystal {

namespace {

Quiver parse_quiver(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("quiver must be given as n,r");
  return Quiver(std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1)));
}

Partition parse_partition(const std::string& s) {
  std::vector<int> parts;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    parts.push_back(std::stoi(s.substr(pos, next - pos)));
    pos = next + 1;
  }
  return Partition(parts);
}

json read_json(std::istream& in) {
  json j;
  in >> j;
  return j;
}

size_t node_cap_from_env() {
  if (const char* cap = std::getenv("CRYSTAL_NODE_CAP")) return std::stoull(cap);
  return kDefaultNodeCap;
}

int run_verify(const std::string& suite, std::ostream& out) {
  std::vector<SuiteResult> results;
  if (suite == "all") {
    results = verify_all();
  } else if (suite == "rsk") {
    results = {verify_rsk()};
  } else if (suite == "thm44") {
    results = {verify_thm44()};
  } else if (suite == "thm54") {
    results = {verify_thm54()};
  } else {
    throw std::invalid_argument("unknown suite: " + suite);
  }
  bool all_ok = true;
  for (const auto& r : results) {
    out << (r.ok() ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks";
    if (!r.ok()) out << ", " << r.failures.size() << " failures";
    out << ")\n";
    for (size_t k = 0; k < r.failures.size() && k < 10; ++k)
      out << "  " << r.failures[k] << "\n";
    all_ok = all_ok && r.ok();
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::istream& in,
             std::ostream& out, std::ostream& err) {
  CLI::App app{"type A crystals on tableaux and Lusztig data"};
  app.require_subcommand(1);

  std::string quiver_arg, from_arg, to_arg, dir_arg, method_arg = "direct";
  std::string format_arg = "json", lambda_arg, suite_arg = "all";
  int d_arg = -1, i_arg = 0, n_arg = 0;
  bool inverse = false;

  auto* embed_cmd = app.add_subcommand("embed", "tableau JSON -> Lusztig datum JSON");
  embed_cmd->add_option("--quiver", quiver_arg, "target quiver as n,r")->required();
  embed_cmd->add_option("--d", d_arg, "padding, defaults to lambda_1");

  auto* trans_cmd = app.add_subcommand("transition", "datum JSON -> datum JSON");
  trans_cmd->add_option("--from", from_arg, "source quiver as n,r")->required();
  trans_cmd->add_option("--to", to_arg, "target quiver as n,r")->required();

  auto* op_cmd = app.add_subcommand("lusztig-op", "apply a Kashiwara operator to a datum");
  op_cmd->add_option("--i", i_arg, "crystal index")->required();
  op_cmd->add_option("--dir", dir_arg, "raise or lower")->required();
  op_cmd->add_option("--method", method_arg, "direct or tensor");

  auto* rsk_cmd = app.add_subcommand("rsk", "skew RSK on a (tableau, matrix) or (p, q) pair");
  rsk_cmd->add_flag("--inverse", inverse, "apply the inverse correspondence");

  auto* graph_cmd = app.add_subcommand("graph", "generate the crystal graph of B(lambda)");
  graph_cmd->add_option("--lambda", lambda_arg, "partition, comma separated")->required();
  graph_cmd->add_option("--n", n_arg, "alphabet size")->required();
  graph_cmd->add_option("--format", format_arg, "dot or json");

  auto* verify_cmd = app.add_subcommand("verify", "run the property suites");
  verify_cmd->add_option("--suite", suite_arg, "thm54, thm44, rsk, or all");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << json{{"error", json{{"message", e.what()}}}}.dump() << "\n";
    return 2;
  }

  try {
    if (embed_cmd->parsed()) {
      Quiver q = parse_quiver(quiver_arg);
      Tableau s = tableau_from_json(read_json(in));
      out << to_json(embed(s, q, d_arg)).dump() << "\n";
      return 0;
    }
    if (trans_cmd->parsed()) {
      Quiver from = parse_quiver(from_arg), to = parse_quiver(to_arg);
      LusztigDatum c = datum_from_json(read_json(in));
      if (!(c.quiver() == from))
        throw std::invalid_argument("input datum does not live on --from");
      out << to_json(transition(c, to)).dump() << "\n";
      return 0;
    }
    if (op_cmd->parsed()) {
      if (dir_arg != "raise" && dir_arg != "lower")
        throw std::invalid_argument("--dir must be raise or lower");
      if (method_arg != "direct" && method_arg != "tensor")
        throw std::invalid_argument("--method must be direct or tensor");
      LusztigDatum c = datum_from_json(read_json(in));
      Dir dir = dir_arg == "raise" ? Dir::raise_op : Dir::lower_op;
      auto res = method_arg == "direct" ? apply_direct(c, i_arg, dir)
                                        : apply_tensor(c, i_arg, dir);
      out << (res ? to_json(*res) : json(nullptr)).dump() << "\n";
      return 0;
    }
    if (rsk_cmd->parsed()) {
      json j = read_json(in);
      if (inverse) {
        auto pre = skew_rsk_inverse(tableau_from_json(j.at("p")),
                                    tableau_from_json(j.at("q")));
        out << json{{"tableau", to_json(pre.t)}, {"matrix", to_json(pre.m)}}.dump()
            << "\n";
      } else {
        auto pq = skew_rsk(tableau_from_json(j.at("tableau")),
                           matrix_from_json(j.at("matrix")));
        out << json{{"p", to_json(pq.p)}, {"q", to_json(pq.q)}}.dump() << "\n";
      }
      return 0;
    }
    if (graph_cmd->parsed()) {
      if (format_arg != "dot" && format_arg != "json")
        throw std::invalid_argument("--format must be dot or json");
      Partition lambda = parse_partition(lambda_arg);
      TableauCrystal tc{Alphabet::unbarred(n_arg)};
      auto g = generate(tc, Tableau::highest_weight(lambda, tc.alphabet),
                        std::nullopt, node_cap_from_env());
      if (format_arg == "json")
        out << graph_to_json(g, [](const Tableau& t) { return to_json(t); }).dump()
            << "\n";
      else
        out << graph_to_dot(g, [](const Tableau& t) {
          std::string label = t.reading_word().show();
          return label.empty() ? std::string("empty") : label;
        });
      return 0;
    }
    return run_verify(suite_arg, out);
  } catch (const std::exception& e) {
    err << json{{"error", json{{"message", e.what()}}}}.dump() << "\n";
    return 1;
  }
}

}  // namespace crystal
