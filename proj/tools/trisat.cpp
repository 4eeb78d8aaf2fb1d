#include <cstdlib>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "trisat/altmethod.hpp"
#include "trisat/bibi.hpp"
#include "trisat/cycle_type.hpp"
#include "trisat/rootsys.hpp"
#include "trisat/saturation.hpp"
#include "trisat/tables.hpp"
#include "trisat/triple.hpp"
#include "trisat/weil.hpp"

namespace {

using nlohmann::json;
using namespace trisat;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;

struct Args {
  std::string type;
  std::string triple;
  std::string shapes;
  std::string id;
  int k = 0;
  int m = 0;
  int n = 0;
  int sample_c = 60;
  bool json_out = true;
  bool tsv = false;
  bool trace = false;
  bool search = false;
  bool regenerate = false;
};

json report_json(const CohomologyReport& r) {
  return {{"dim_g", r.dim_g}, {"fixed", r.fixed}, {"z1", r.z1}, {"h1", r.h1}};
}

std::string tsv_value(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// Flat objects become key<TAB>value lines; anything nested is dumped inline.
void emit(const json& out, const Args& args) {
  if (args.tsv && out.is_object()) {
    for (const auto& [key, value] : out.items()) std::cout << key << '\t' << tsv_value(value) << '\n';
    return;
  }
  std::cout << out.dump(2) << '\n';
}

std::vector<CycleType> parse_shapes(const std::string& text, int m) {
  std::vector<CycleType> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(CycleType::parse(part, m));
  if (out.size() != 3) throw std::invalid_argument("--shapes needs three comma-separated cycle types");
  return out;
}

int cmd_h1(const Args& a) {
  const auto type = DynkinType::parse(a.type);
  const auto t = Triple::parse(a.triple);
  json out = report_json(h1_principal(type, t));
  out["type"] = type.name();
  out["triple"] = t.orders();
  emit(out, a);
  return kExitOk;
}

int cmd_codim(const Args& a) {
  const auto type = DynkinType::parse(a.type);
  if (a.n < 2) throw std::invalid_argument("--n must be at least 2");
  json out = {{"type", type.name()}, {"n", a.n}, {"codim", codim_order_variety(type, a.n)}};
  if (auto closed = lawther_closed_form(type, a.n)) out["closed_form"] = *closed;
  emit(out, a);
  return kExitOk;
}

int cmd_ladder(const Args& a) {
  const auto type = DynkinType::parse(a.type);
  emit(to_json(ladder_verdict(type, Triple::parse(a.triple))), a);
  return kExitOk;
}

int cmd_bibi(const Args& a) {
  const auto type = DynkinType::parse(a.type);
  if (type.family() != Family::D) throw std::invalid_argument("bibi applies to type D only");
  const auto t = Triple::parse(a.triple);
  const Verdict v = a.k > 0 ? bibi_criterion(BibiConfig(type.rank(), a.k), t) : search_bibi(type.rank(), t);
  emit(to_json(v), a);
  return kExitOk;
}

int cmd_alt(const Args& a) {
  const auto t = Triple::parse(a.triple);
  if (!a.shapes.empty()) {
    const auto parts = parse_shapes(a.shapes, a.m);
    const std::array<CycleType, 3> shapes{parts[0], parts[1], parts[2]};
    json out = report_json(h1_alt(a.m, shapes, t));
    out["m"] = a.m;
    out["target"] = AltConfig(a.m).target().name();
    out["shapes"] = {shapes[0].str(), shapes[1].str(), shapes[2].str()};
    emit(out, a);
    return kExitOk;
  }
  AltConfig cfg(a.m);
  if (!alt_shape_hint(a.m, t) && !a.search) {
    throw std::invalid_argument("not a built-in table row; pass --shapes or --search");
  }
  emit(to_json(alt_saturation_check(a.m, t)), a);
  return kExitOk;
}

int cmd_decide(const Args& a) {
  const auto type = DynkinType::parse(a.type);
  DecideOptions options;
  options.alt_search = a.search;
  emit(to_json(decide(type, Triple::parse(a.triple), options)), a);
  return kExitOk;
}

int cmd_table(const Args& a) {
  const auto id = parse_fixture_id(a.id);
  if (!id) throw std::invalid_argument("unknown fixture id: " + a.id);
  if (a.sample_c < 7) throw std::invalid_argument("--sample-c must be at least 7");
  TableOptions options;
  options.sample_c = a.sample_c;
  if (a.trace) options.trace = &std::cerr;
  const TableReport report = reproduce_table(*id, options);
  if (a.tsv) {
    std::cout << "row\tmatch\tsamples\n";
    for (const auto& row : report.rows) {
      std::cout << row.row << '\t' << (row.match ? "yes" : "no") << '\t' << row.samples << '\n';
    }
    std::cout << "# mismatches\t" << report.mismatches() << '\n';
  } else {
    json out = report.to_json(a.regenerate);
    if (a.regenerate) out["fixture"] = fixture_rows(*id);
    std::cout << out.dump(2) << '\n';
  }
  return report.mismatches() == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Saturation of triangle groups by finite groups of Lie type"};
  app.require_subcommand(1);
  Args args;

  auto add_output = [&](CLI::App* sub) {
    sub->add_flag("--json", args.json_out, "JSON output (default)");
    sub->add_flag("--tsv", args.tsv, "Tab-separated output");
  };
  auto add_type = [&](CLI::App* sub) { sub->add_option("--type", args.type, "Root system, e.g. D7")->required(); };
  auto add_triple = [&](CLI::App* sub) { sub->add_option("--triple", args.triple, "Orders a,b,c")->required(); };

  auto* h1 = app.add_subcommand("h1", "H^1 through the principal homomorphism");
  add_type(h1);
  add_triple(h1);
  add_output(h1);

  auto* codim = app.add_subcommand("codim", "Codimension of the elements of order dividing n");
  add_type(codim);
  codim->add_option("--n", args.n, "Element order")->required();
  add_output(codim);

  auto* ladder = app.add_subcommand("ladder", "Ladder of maximal subgroups from the principal A1");
  add_type(ladder);
  add_triple(ladder);
  add_output(ladder);

  auto* bibi = app.add_subcommand("bibi", "B_k x B_{r-k-1} criterion inside D_r");
  add_type(bibi);
  add_triple(bibi);
  bibi->add_option("--k", args.k, "Rank of the first factor; searched when omitted");
  add_output(bibi);

  auto* alt = app.add_subcommand("alt", "Alternating-group method");
  alt->add_option("--m", args.m, "Degree of Alt_m")->required();
  add_triple(alt);
  alt->add_option("--shapes", args.shapes, "Cycle types of A, B, AB, e.g. 2^4,3^3,11");
  alt->add_flag("--search", args.search, "Search for a generating pair off the built-in table");
  add_output(alt);

  auto* dec = app.add_subcommand("decide", "Run every method and report the first conclusive verdict");
  add_type(dec);
  add_triple(dec);
  dec->add_flag("--search", args.search, "Allow generation searches in small alternating groups");
  add_output(dec);

  auto* table = app.add_subcommand("table", "Recompute a table and diff it against the fixture");
  table->add_option("--id", args.id, "rigid, nonso3, bibi-results, bibi-pairs, alt-gen or alt-nongen")->required();
  table->add_option("--sample-c", args.sample_c, "Upper end for parameterized rows");
  table->add_flag("--trace", args.trace, "Progress on stderr");
  table->add_flag("--regenerate", args.regenerate, "Print recomputed values for every row");
  add_output(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*h1) return cmd_h1(args);
    if (*codim) return cmd_codim(args);
    if (*ladder) return cmd_ladder(args);
    if (*bibi) return cmd_bibi(args);
    if (*alt) return cmd_alt(args);
    if (*dec) return cmd_decide(args);
    if (*table) return cmd_table(args);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return EXIT_FAILURE;
  }
  return kExitInvalid;
}
