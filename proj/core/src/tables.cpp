#include "trisat/tables.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <utility>

#include "trisat/altmethod.hpp"
#include "trisat/bibi.hpp"
#include "trisat/generation.hpp"
#include "trisat/saturation.hpp"
#include "trisat/weil.hpp"

namespace trisat {

namespace {

using TripleGen = std::function<std::vector<Triple>(const TableOptions&)>;

TripleGen fixed(std::initializer_list<std::array<int, 3>> raw) {
  std::vector<std::array<int, 3>> copy(raw);
  return [copy](const TableOptions&) {
    std::vector<Triple> out;
    for (const auto& t : copy) {
      if (t[0] <= t[1] && t[1] <= t[2] && is_hyperbolic(t[0], t[1], t[2])) out.emplace_back(t[0], t[1], t[2]);
    }
    return out;
  };
}

// (a, b, c) for c_min <= c <= c_max (c_max = 0: up to sample_c), skipping
// multiples of any modulus in `excluded`.
TripleGen c_range(int a, int b, int c_min, int c_max = 0, std::vector<int> excluded = {}) {
  return [=](const TableOptions& opt) {
    std::vector<Triple> out;
    const int hi = c_max > 0 ? c_max : opt.sample_c;
    for (int c = std::max(c_min, b); c <= hi; ++c) {
      if (std::any_of(excluded.begin(), excluded.end(), [c](int q) { return c % q == 0; })) continue;
      if (is_hyperbolic(a, b, c)) out.emplace_back(a, b, c);
    }
    return out;
  };
}

// (a, b, c) with b free: a <= b <= c, c fixed.
TripleGen b_free(int a, int c) {
  return [=](const TableOptions&) {
    std::vector<Triple> out;
    for (int b = a; b <= c; ++b) {
      if (is_hyperbolic(a, b, c)) out.emplace_back(a, b, c);
    }
    return out;
  };
}

std::string label_of(const std::string& x, const std::string& triple) { return x + " | " + triple; }

void trace(const TableOptions& opt, const std::string& line) {
  if (opt.trace) *opt.trace << line << '\n';
}

nlohmann::json triple_json(const Triple& t) { return t.orders(); }

// ---------------------------------------------------------------- rigid

struct RigidRow {
  std::string type_label;
  std::string triple_label;
  std::vector<DynkinType> types;
  TripleGen triples;
};

std::vector<RigidRow> rigid_rows() {
  auto free_a = [](int a) -> TripleGen {
    return [a](const TableOptions& opt) {
      std::vector<Triple> out;
      for (int b = a; b <= opt.sample_free; ++b)
        for (int c = b; c <= opt.sample_free; ++c)
          if (is_hyperbolic(a, b, c)) out.emplace_back(a, b, c);
      return out;
    };
  };
  TripleGen any = [](const TableOptions& opt) {
    std::vector<Triple> out;
    for (int a = 2; a <= opt.sample_free; ++a)
      for (int b = a; b <= opt.sample_free; ++b)
        for (int c = b; c <= opt.sample_free; ++c)
          if (is_hyperbolic(a, b, c)) out.emplace_back(a, b, c);
    return out;
  };
  TripleGen b_is_3 = [](const TableOptions& opt) {
    std::vector<Triple> out;
    for (int a = 2; a <= 3; ++a)
      for (int c = 3; c <= opt.sample_c; ++c)
        if (is_hyperbolic(a, 3, c)) out.emplace_back(a, 3, c);
    return out;
  };
  return {
      {"A1", "any", {DynkinType(Family::A, 1)}, any},
      {"A2", "a=2", {DynkinType(Family::A, 2)}, free_a(2)},
      {"A3", "a=2, b=3", {DynkinType(Family::A, 3)}, c_range(2, 3, 7)},
      {"A4", "a=2, b=3", {DynkinType(Family::A, 4)}, c_range(2, 3, 7)},
      {"C2", "b=3", {DynkinType(Family::C, 2)}, b_is_3},
      {"G2", "a=2, c=5", {DynkinType(Family::G, 2)}, b_free(2, 5)},
  };
}

TableReport check_rigid(const TableOptions& opt) {
  TableReport report{FixtureId::Rigid, {}};
  for (const auto& row : rigid_rows()) {
    RowCheck check;
    check.row = label_of(row.type_label, row.triple_label);
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& type : row.types) {
      for (const auto& t : row.triples(opt)) {
        ++check.samples;
        const int h1 = h1_principal(type, t).h1;
        if (h1 != 0) failures.push_back({{"type", type.name()}, {"triple", triple_json(t)}, {"h1", h1}});
      }
    }
    check.match = failures.empty() && check.samples > 0;
    check.detail["expected_h1"] = 0;
    if (!failures.empty()) check.detail["failures"] = failures;
    trace(opt, "rigid " + check.row + ": " + std::to_string(check.samples) + " samples");
    report.rows.push_back(std::move(check));
  }
  return report;
}

// --------------------------------------------------------------- non-SO(3)

const std::vector<Triple>& non_so3_dense() {
  static const std::vector<Triple> s = {Triple(2, 4, 6), Triple(2, 6, 6), Triple(2, 6, 10),
                                        Triple(3, 4, 4), Triple(3, 6, 6), Triple(4, 6, 12)};
  return s;
}

constexpr int kNonSo3MaxRank = 13;

std::vector<DynkinType> types_up_to_rank(int max_rank) {
  std::vector<DynkinType> out;
  for (int r = 1; r <= max_rank; ++r) out.emplace_back(Family::A, r);
  for (int r = 2; r <= max_rank; ++r) out.emplace_back(Family::B, r);
  for (int r = 2; r <= max_rank; ++r) out.emplace_back(Family::C, r);
  for (int r = 4; r <= max_rank; ++r) out.emplace_back(Family::D, r);
  for (int r = 6; r <= std::min(8, max_rank); ++r) out.emplace_back(Family::E, r);
  if (max_rank >= 4) out.emplace_back(Family::F, 4);
  out.emplace_back(Family::G, 2);
  return out;
}

struct PairRow {
  std::string type_label;
  std::string triple_label;
  std::vector<DynkinType> types;
  std::vector<Triple> triples;
};

std::vector<PairRow> non_so3_rows() {
  std::vector<DynkinType> a_upto_9;
  for (int r = 1; r <= 9; ++r) a_upto_9.emplace_back(Family::A, r);
  return {
      {"A_r, r <= 9", "(2,4,6)", a_upto_9, {Triple(2, 4, 6)}},
      {"A2, A3", "(2,4,6), (2,6,6), (2,6,10)", {DynkinType(Family::A, 2), DynkinType(Family::A, 3)},
       {Triple(2, 4, 6), Triple(2, 6, 6), Triple(2, 6, 10)}},
      {"A1", "(2,4,6), (2,6,6), (2,6,10), (3,4,4), (3,6,6), (4,6,12)", {DynkinType(Family::A, 1)},
       non_so3_dense()},
      {"D_r, r in {5,7,9,13}", "(2,4,6)",
       {DynkinType(Family::D, 5), DynkinType(Family::D, 7), DynkinType(Family::D, 9), DynkinType(Family::D, 13)},
       {Triple(2, 4, 6)}},
      {"D7", "(2,6,6)", {DynkinType(Family::D, 7)}, {Triple(2, 6, 6)}},
      {"D5", "(3,4,4)", {DynkinType(Family::D, 5)}, {Triple(3, 4, 4)}},
      {"E6", "(2,4,6)", {DynkinType(Family::E, 6)}, {Triple(2, 4, 6)}},
  };
}

TableReport check_non_so3(const TableOptions& opt) {
  TableReport report{FixtureId::NonSo3, {}};
  std::set<std::pair<DynkinType, Triple>> computed;
  for (const auto& t : non_so3_dense()) {
    for (const auto& type : types_up_to_rank(kNonSo3MaxRank)) {
      if (!ladder_verdict(type, t).saturated()) computed.emplace(type, t);
    }
  }
  std::set<std::pair<DynkinType, Triple>> listed;
  for (const auto& row : non_so3_rows()) {
    RowCheck check;
    check.row = label_of(row.type_label, row.triple_label);
    nlohmann::json saturated = nlohmann::json::array();
    for (const auto& type : row.types) {
      for (const auto& t : row.triples) {
        ++check.samples;
        listed.emplace(type, t);
        if (!computed.count({type, t})) {
          saturated.push_back({{"type", type.name()}, {"triple", triple_json(t)}});
        }
      }
    }
    check.match = saturated.empty();
    if (!saturated.empty()) check.detail["unexpectedly_saturated"] = saturated;
    report.rows.push_back(std::move(check));
  }
  RowCheck extra;
  extra.row = "(no other pair of rank <= 13 is unsettled)";
  nlohmann::json unlisted = nlohmann::json::array();
  for (const auto& [type, t] : computed) {
    if (!listed.count({type, t})) unlisted.push_back({{"type", type.name()}, {"triple", triple_json(t)}});
  }
  extra.samples = static_cast<int>(computed.size());
  extra.match = unlisted.empty();
  if (!unlisted.empty()) extra.detail["unlisted_unknown"] = unlisted;
  report.rows.push_back(std::move(extra));
  trace(opt, "nonso3: " + std::to_string(computed.size()) + " unsettled pairs computed");
  return report;
}

// ------------------------------------------------------------ bibi results

struct BibiResultRow {
  std::string triple_label;
  std::string rank_label;
  TripleGen triples;
  std::vector<int> ranks;
};

std::vector<BibiResultRow> bibi_result_rows() {
  return {
      {"(2,3,7)", "r in {7,8,10,11,13,15,16,17,19,22,23,25,29,31,37,43}", fixed({{2, 3, 7}}),
       {7, 8, 10, 11, 13, 15, 16, 17, 19, 22, 23, 25, 29, 31, 37, 43}},
      {"(2,3,8)", "r in {7,9,10,11,13,17,19,25}", fixed({{2, 3, 8}}), {7, 9, 10, 11, 13, 17, 19, 25}},
      {"(2,3,9)", "r in {7,10,11,13,19}", fixed({{2, 3, 9}}), {7, 10, 11, 13, 19}},
      {"(2,3,10)", "r in {7,11,13}", fixed({{2, 3, 10}}), {7, 11, 13}},
      {"(2,3,11)", "r in {7,13}", fixed({{2, 3, 11}}), {7, 13}},
      {"(2,3,12)", "r in {7,13}", fixed({{2, 3, 12}}), {7, 13}},
      {"(2,3,c), c >= 13", "r = 7", c_range(2, 3, 13), {7}},
      {"(2,4,5)", "r in {4,6,7,9,11,13,17,21}", fixed({{2, 4, 5}}), {4, 6, 7, 9, 11, 13, 17, 21}},
      {"(2,4,6)", "r in {5,7,9,13}", fixed({{2, 4, 6}}), {5, 7, 9, 13}},
      {"(2,4,7)", "r in {5,9}", fixed({{2, 4, 7}}), {5, 9}},
      {"(2,4,8)", "r in {5,9}", fixed({{2, 4, 8}}), {5, 9}},
      {"(2,4,c), c >= 9", "r = 5", c_range(2, 4, 9), {5}},
      {"(2,5,5)", "r in {4,6,7,11}", fixed({{2, 5, 5}}), {4, 6, 7, 11}},
      {"(2,5,6)", "r = 7", fixed({{2, 5, 6}}), {7}},
      {"(2,6,6)", "r = 7", fixed({{2, 6, 6}}), {7}},
      {"(3,3,4)", "r in {7,10,13}", fixed({{3, 3, 4}}), {7, 10, 13}},
      {"(3,3,5)", "r = 7", fixed({{3, 3, 5}}), {7}},
      {"(3,3,6)", "r = 7", fixed({{3, 3, 6}}), {7}},
      {"(3,4,4)", "r = 5", fixed({{3, 4, 4}}), {5}},
      {"(4,4,4)", "r = 5", fixed({{4, 4, 4}}), {5}},
  };
}

TableReport check_bibi_results(const TableOptions& opt) {
  TableReport report{FixtureId::BibiResults, {}};
  for (const auto& row : bibi_result_rows()) {
    RowCheck check;
    check.row = label_of("D_r " + row.triple_label, row.rank_label);
    nlohmann::json failures = nlohmann::json::array();
    nlohmann::json found = nlohmann::json::array();
    for (const auto& t : row.triples(opt)) {
      for (int r : row.ranks) {
        ++check.samples;
        const Verdict v = search_bibi(r, t);
        if (v.saturated()) {
          found.push_back({{"r", r}, {"triple", triple_json(t)}, {"k", v.certificate["k"]}});
        } else {
          failures.push_back({{"r", r}, {"triple", triple_json(t)}});
        }
      }
    }
    check.match = failures.empty() && check.samples > 0;
    check.detail["first_k"] = found;
    if (!failures.empty()) check.detail["failures"] = failures;
    trace(opt, "bibi-results " + check.row + ": " + (check.match ? "ok" : "MISMATCH"));
    report.rows.push_back(std::move(check));
  }
  return report;
}

// -------------------------------------------------------------- bibi pairs

struct BibiPairRow {
  std::string type_label;
  std::string triple_label;
  std::vector<std::pair<int, int>> rk;  // (r, k)
  TripleGen triples;
};

std::vector<BibiPairRow> bibi_pair_rows() {
  TripleGen two_b_c_in_56 = fixed({{2, 5, 5}, {2, 5, 6}, {2, 6, 6}});
  std::vector<std::pair<int, int>> big;
  for (int r : {22, 23, 29, 31, 37, 43}) big.emplace_back(r, r / 2 - 1);
  return {
      {"D4", "(2,b,5)", {{4, 1}}, b_free(2, 5)},
      {"D5", "(2,4,c), c >= 6", {{5, 1}}, c_range(2, 4, 6)},
      {"D5", "(3,4,4)", {{5, 1}}, fixed({{3, 4, 4}})},
      {"D5", "(4,4,4)", {{5, 1}}, fixed({{4, 4, 4}})},
      {"D6", "(2,b,5)", {{6, 1}}, b_free(2, 5)},
      {"D7", "(2,3,c), c >= 7", {{7, 1}}, c_range(2, 3, 7)},
      {"D7", "(3,3,c), 4 <= c <= 6", {{7, 1}}, c_range(3, 3, 4, 6)},
      {"D7", "(2,4,c), c in {5,6}", {{7, 2}}, fixed({{2, 4, 5}, {2, 4, 6}})},
      {"D7", "(2,b,c), {b,c} in {5,6}", {{7, 2}}, two_b_c_in_56},
      {"D8", "(2,3,7)", {{8, 1}}, fixed({{2, 3, 7}})},
      {"D9", "(2,3,8)", {{9, 1}}, fixed({{2, 3, 8}})},
      {"D9", "(2,4,c), 5 <= c <= 8", {{9, 2}}, c_range(2, 4, 5, 8)},
      {"D10", "(2,3,c), 7 <= c <= 9", {{10, 4}}, c_range(2, 3, 7, 9)},
      {"D10", "(3,3,4)", {{10, 4}}, fixed({{3, 3, 4}})},
      {"D11", "(2,3,c), 7 <= c <= 10", {{11, 4}}, c_range(2, 3, 7, 10)},
      {"D11", "(2,b,5)", {{11, 4}}, b_free(2, 5)},
      {"D13", "(2,3,c), 7 <= c <= 12", {{13, 5}}, c_range(2, 3, 7, 12)},
      {"D13", "(2,4,c), c in {5,6}", {{13, 5}}, fixed({{2, 4, 5}, {2, 4, 6}})},
      {"D13", "(3,3,4)", {{13, 5}}, fixed({{3, 3, 4}})},
      {"D15", "(2,3,7)", {{15, 6}}, fixed({{2, 3, 7}})},
      {"D16", "(2,3,7)", {{16, 7}}, fixed({{2, 3, 7}})},
      {"D17", "(2,3,c), c in {7,8}", {{17, 7}}, fixed({{2, 3, 7}, {2, 3, 8}})},
      {"D17", "(2,4,5)", {{17, 7}}, fixed({{2, 4, 5}})},
      {"D19", "(2,3,c), 7 <= c <= 9", {{19, 8}}, c_range(2, 3, 7, 9)},
      {"D21", "(2,4,5)", {{21, 9}}, fixed({{2, 4, 5}})},
      {"D25", "(2,3,c), c in {7,8}", {{25, 11}}, fixed({{2, 3, 7}, {2, 3, 8}})},
      {"D_r, r in {22,23,29,31,37,43}", "(2,3,7)", big, fixed({{2, 3, 7}})},
  };
}

TableReport check_bibi_pairs(const TableOptions& opt) {
  TableReport report{FixtureId::BibiPairs, {}};
  for (const auto& row : bibi_pair_rows()) {
    RowCheck check;
    const auto& [r0, k0] = row.rk.front();
    check.row = label_of(row.type_label, row.triple_label) + " | B" + std::to_string(k0) + ", B" +
                std::to_string(r0 - k0 - 1);
    nlohmann::json failures = nlohmann::json::array();
    nlohmann::json values = nlohmann::json::array();
    for (const auto& [r, k] : row.rk) {
      for (const auto& t : row.triples(opt)) {
        ++check.samples;
        const Verdict v = bibi_criterion(BibiConfig(r, k), t);
        nlohmann::json entry = {{"r", r}, {"k", k}, {"triple", triple_json(t)}};
        if (v.certificate.contains("lhs")) {
          entry["lhs"] = v.certificate["lhs"]["sum"];
          entry["rhs"] = v.certificate["rhs"]["h1"];
        }
        if (!v.saturated()) {
          entry["reason"] = v.certificate.value("reason", "");
          failures.push_back(entry);
        }
        values.push_back(std::move(entry));
      }
    }
    check.match = failures.empty() && check.samples > 0;
    check.detail["values"] = values;
    if (!failures.empty()) check.detail["failures"] = failures;
    trace(opt, "bibi-pairs " + check.row + ": " + (check.match ? "ok" : "MISMATCH"));
    report.rows.push_back(std::move(check));
  }
  return report;
}

// ---------------------------------------------------------------- alt gen

TableReport check_alt_gen(const TableOptions& opt) {
  TableReport report{FixtureId::AltGen, {}};
  for (const auto& row : alt_generating_rows()) {
    RowCheck check;
    const Triple t(row.triple[0], row.triple[1], row.triple[2]);
    check.row = "Alt_" + std::to_string(row.m) + " | " + t.str() + " | " + row.shapes[0] + " | " + row.shapes[1] +
                " | " + row.shapes[2];
    check.samples = 1;
    GenerationSearchOptions options;
    options.shape_hint = alt_shape_hint(row.m, t);
    const auto search = find_generating_triple(row.m, t, options);
    if (!search.witness) {
      check.match = false;
      check.detail["reason"] = search.reason;
    } else {
      const auto& w = *search.witness;
      const bool valid = validate_witness(w, row.m);
      const bool shapes_match = w.shapes == *options.shape_hint;
      const auto h1 = h1_alt(row.m, w.shapes, t);
      check.match = valid && shapes_match && h1.h1 > 0;
      check.detail["A"] = std::vector<int>(w.a.images().begin(), w.a.images().end());
      check.detail["B"] = std::vector<int>(w.b.images().begin(), w.b.images().end());
      check.detail["validated"] = valid;
      check.detail["h1"] = h1.h1;
      check.detail["fixed"] = h1.fixed;
      check.detail["target"] = AltConfig(row.m).target().name();
    }
    trace(opt, "alt-gen " + check.row + ": " + (check.match ? "ok" : "MISMATCH"));
    report.rows.push_back(std::move(check));
  }
  return report;
}

// ------------------------------------------------------------- alt nongen

struct AltNonGenRow {
  int m;
  std::string triple_label;
  TripleGen triples;
};

std::vector<AltNonGenRow> alt_nongen_rows() {
  return {
      {8, "(2,3,c), c >= 7", c_range(2, 3, 7)},
      {8, "(2,4,5), (2,5,5)", fixed({{2, 4, 5}, {2, 5, 5}})},
      {8, "(3,3,c), c >= 4, c != 0 mod 15", c_range(3, 3, 4, 0, {15})},
      {9, "(2,3,c), c >= 7, c != 0 mod 15", c_range(2, 3, 7, 0, {15})},
      {9, "(3,3,c), c >= 4, c != 0 mod a, a in {7,9,10,12,15}", c_range(3, 3, 4, 0, {7, 9, 10, 12, 15})},
      {11, "(2,3,c), c >= 7, c != 0 mod 11", c_range(2, 3, 7, 0, {11})},
      {11, "(2,4,5)", fixed({{2, 4, 5}})},
      {11, "(3,3,4)", fixed({{3, 3, 4}})},
      {19, "(2,3,7)", fixed({{2, 3, 7}})},
  };
}

TableReport check_alt_nongen(const TableOptions& opt) {
  TableReport report{FixtureId::AltNonGen, {}};
  for (const auto& row : alt_nongen_rows()) {
    RowCheck check;
    check.row = "Alt_" + std::to_string(row.m) + " | " + row.triple_label;
    nlohmann::json kinds = nlohmann::json::object();
    nlohmann::json refuted = nlohmann::json::array();
    for (const auto& t : row.triples(opt)) {
      ++check.samples;
      const auto result = prove_non_generation(row.m, t);
      nlohmann::json entry = {{"kind", to_string(result.kind)}};
      if (result.scott_sum) entry["scott_sum"] = *result.scott_sum;
      kinds[t.str()] = entry;
      if (!result.non_generated()) refuted.push_back(triple_json(t));
    }
    check.match = refuted.empty() && check.samples > 0;
    check.detail["results"] = kinds;
    if (!refuted.empty()) check.detail["refuted"] = refuted;
    trace(opt, "alt-nongen " + check.row + ": " + (check.match ? "ok" : "MISMATCH"));
    report.rows.push_back(std::move(check));
  }
  return report;
}

}  // namespace

std::string_view to_string(FixtureId id) {
  switch (id) {
    case FixtureId::Rigid: return "rigid";
    case FixtureId::NonSo3: return "nonso3";
    case FixtureId::BibiResults: return "bibi-results";
    case FixtureId::BibiPairs: return "bibi-pairs";
    case FixtureId::AltGen: return "alt-gen";
    case FixtureId::AltNonGen: return "alt-nongen";
  }
  return "rigid";
}

std::optional<FixtureId> parse_fixture_id(std::string_view text) {
  for (FixtureId id : all_fixture_ids()) {
    if (to_string(id) == text) return id;
  }
  return std::nullopt;
}

const std::vector<FixtureId>& all_fixture_ids() {
  static const std::vector<FixtureId> ids = {FixtureId::Rigid,      FixtureId::NonSo3, FixtureId::BibiResults,
                                             FixtureId::BibiPairs, FixtureId::AltGen, FixtureId::AltNonGen};
  return ids;
}

int TableReport::mismatches() const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const RowCheck& r) { return !r.match; }));
}

nlohmann::json TableReport::to_json(bool include_details) const {
  nlohmann::json out;
  out["id"] = trisat::to_string(id);
  out["mismatches"] = mismatches();
  auto& rows_json = out["rows"] = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json r = {{"row", row.row}, {"match", row.match}, {"samples", row.samples}};
    if (include_details || !row.match) r["detail"] = row.detail;
    rows_json.push_back(std::move(r));
  }
  return out;
}

TableReport reproduce_table(FixtureId id, const TableOptions& options) {
  switch (id) {
    case FixtureId::Rigid: return check_rigid(options);
    case FixtureId::NonSo3: return check_non_so3(options);
    case FixtureId::BibiResults: return check_bibi_results(options);
    case FixtureId::BibiPairs: return check_bibi_pairs(options);
    case FixtureId::AltGen: return check_alt_gen(options);
    case FixtureId::AltNonGen: return check_alt_nongen(options);
  }
  return {};
}

nlohmann::json fixture_rows(FixtureId id) {
  nlohmann::json rows = nlohmann::json::array();
  switch (id) {
    case FixtureId::Rigid:
      for (const auto& r : rigid_rows()) rows.push_back({r.type_label, r.triple_label});
      break;
    case FixtureId::NonSo3:
      for (const auto& r : non_so3_rows()) rows.push_back({r.type_label, r.triple_label});
      break;
    case FixtureId::BibiResults:
      for (const auto& r : bibi_result_rows()) rows.push_back({"D_r", r.triple_label, r.rank_label});
      break;
    case FixtureId::BibiPairs:
      for (const auto& r : bibi_pair_rows()) {
        const auto& [r0, k0] = r.rk.front();
        rows.push_back({r.type_label, r.triple_label, "B" + std::to_string(k0), "B" + std::to_string(r0 - k0 - 1)});
      }
      break;
    case FixtureId::AltGen:
      for (const auto& r : alt_generating_rows())
        rows.push_back({"Alt_" + std::to_string(r.m), Triple(r.triple[0], r.triple[1], r.triple[2]).str(),
                        r.shapes[0], r.shapes[1], r.shapes[2]});
      break;
    case FixtureId::AltNonGen:
      for (const auto& r : alt_nongen_rows()) rows.push_back({"Alt_" + std::to_string(r.m), r.triple_label});
      break;
  }
  return rows;
}

}  // namespace trisat
