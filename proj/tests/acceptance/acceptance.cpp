#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "rank_oracle.hpp"
#include "trisat/altmethod.hpp"
#include "trisat/bibi.hpp"
#include "trisat/eigenvalues.hpp"
#include "trisat/generation.hpp"
#include "trisat/permutation.hpp"
#include "trisat/saturation.hpp"
#include "trisat/tables.hpp"
#include "trisat/weil.hpp"

using namespace trisat;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) note << what;
      else note << "; " << what;
      pass = false;
    }
  }
};

struct Criterion {
  int id;
  const char* name;
  double bound_seconds;
  std::function<void(Outcome&)> body;
};

void lawther_sweep(Outcome& out) {
  int checked = 0;
  for (int n = 2; n <= 60; ++n) {
    for (int r = 1; r <= 30; ++r) {
      std::vector<DynkinType> types{DynkinType(Family::A, r)};
      if (r >= 2) {
        types.emplace_back(Family::B, r);
        types.emplace_back(Family::C, r);
      }
      if (r >= 4) types.emplace_back(Family::D, r);
      for (const auto& t : types) {
        int expected = r;
        for (int e : exponents(t)) expected += 2 * (e / n);
        const auto closed = lawther_closed_form(t, n);
        out.require(closed && *closed == expected, t.name() + " n=" + std::to_string(n));
        ++checked;
      }
    }
  }
  out.note << checked << " (type, n) pairs";
}

void table_check(Outcome& out, FixtureId id, const TableOptions& opt = {}) {
  const auto report = reproduce_table(id, opt);
  int samples = 0;
  for (const auto& row : report.rows) {
    samples += row.samples;
    out.require(row.match, "row '" + row.row + "' mismatch");
  }
  if (out.pass) out.note << report.rows.size() << " rows, " << samples << " instances";
}

void bibi_pairs(Outcome& out) {
  const Verdict v = bibi_criterion(BibiConfig(7, 1), Triple(2, 3, 7));
  out.require(v.saturated(), "D7 k=1 (2,3,7) not saturated");
  out.require(v.certificate["lhs"]["sum"] == 2, "D7 LHS != 2");
  out.require(v.certificate["rhs"]["h1"] == 4, "D7 RHS != 4");
  table_check(out, FixtureId::BibiPairs);
  if (out.pass) out.note << "; D7 (2,3,7) LHS=2 RHS=4";
}

void alt_generation(Outcome& out) {
  int rows = 0;
  for (const auto& row : alt_generating_rows()) {
    const Triple t(row.triple[0], row.triple[1], row.triple[2]);
    GenerationSearchOptions opt;
    opt.shape_hint = alt_shape_hint(row.m, t);
    const auto res = find_generating_triple(row.m, t, opt);
    const std::string label = "Alt_" + std::to_string(row.m) + " " + t.str();
    out.require(res.witness.has_value(), label + ": " + res.reason);
    if (!res.witness) continue;
    out.require(res.witness->shapes == *opt.shape_hint, label + ": shapes differ");
    out.require(validate_witness(*res.witness, row.m), label + ": BSGS re-validation failed");
    ++rows;
  }
  out.note << rows << " witnesses, each with |<A,B>| = m!/2";
}

int numeric_fixed(const Permutation& p) {
  const auto img = p.images();
  return oracle::fixed_dim(oracle::wedge_square(oracle::standard_module(std::vector<int>(img.begin(), img.end()))));
}

void alt_positivity(Outcome& out) {
  std::ostringstream values;
  for (const auto& row : alt_generating_rows()) {
    const Triple t(row.triple[0], row.triple[1], row.triple[2]);
    GenerationSearchOptions opt;
    opt.shape_hint = alt_shape_hint(row.m, t);
    const auto res = find_generating_triple(row.m, t, opt);
    const std::string label = "Alt_" + std::to_string(row.m) + " " + t.str();
    out.require(res.witness.has_value(), label + ": no witness");
    if (!res.witness) continue;
    const auto& w = *res.witness;
    const auto report = h1_alt(row.m, w.shapes, t);
    const int dim = AltConfig(row.m).lie_dim();
    const int numeric = dim - numeric_fixed(w.a) - numeric_fixed(w.b) - numeric_fixed(w.a * w.b);
    out.require(report.h1 > 0, label + ": h1 = 0");
    out.require(report.h1 == numeric, label + ": oracle " + std::to_string(numeric) + " vs " +
                                          std::to_string(report.h1));
    values << ' ' << report.h1;
  }
  if (out.pass) out.note << "h1 =" << values.str();
}

void alt_non_generation(Outcome& out) {
  using Kind = NonGenerationResult::Kind;
  struct Case {
    int m;
    Triple t;
    Kind kind;
  };
  const std::vector<Case> cases{
      {8, Triple(3, 3, 6), Kind::Exhaustive},  {8, Triple(3, 3, 7), Kind::Exhaustive},
      {9, Triple(2, 3, 12), Kind::Exhaustive}, {9, Triple(3, 3, 4), Kind::Exhaustive},
      {9, Triple(3, 3, 5), Kind::Exhaustive},  {9, Triple(3, 3, 6), Kind::Exhaustive},
      {11, Triple(2, 4, 5), Kind::Scott},      {11, Triple(3, 3, 4), Kind::Scott},
      {19, Triple(2, 3, 7), Kind::Scott},
  };
  std::ostringstream scott;
  for (const auto& c : cases) {
    const auto r = prove_non_generation(c.m, c.t);
    const std::string label = "Alt_" + std::to_string(c.m) + " " + c.t.str();
    out.require(r.non_generated(), label + " generated");
    out.require(r.kind == c.kind, label + " decided by " + to_string(r.kind));
    if (c.kind == Kind::Scott && r.scott_sum) {
      out.require(*r.scott_sum > r.scott_bound, label + " Scott sum within bound");
      scott << ' ' << *r.scott_sum << '>' << r.scott_bound;
    }
  }
  TableOptions opt;
  opt.sample_c = 60;
  table_check(out, FixtureId::AltNonGen, opt);
  if (out.pass) out.note << "; Scott sums" << scott.str();
}

void oracle_suite(Outcome& out) {
  std::mt19937 rng(20240917);
  int instances = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const int modulus = 1 + static_cast<int>(rng() % 20);
    EigenvalueMultiset ev(modulus);
    for (int dim = 0; dim < 2 + static_cast<int>(rng() % 18);) {
      const int r = static_cast<int>(rng() % static_cast<unsigned>(modulus));
      ev.add(r);
      ++dim;
      if ((2 * r) % modulus != 0) {
        ev.add(modulus - r);
        ++dim;
      }
    }
    std::vector<std::pair<int, int>> pairs(ev.multiplicities().begin(), ev.multiplicities().end());
    const int numeric = oracle::fixed_dim(oracle::wedge_square(oracle::rotation_blocks(modulus, pairs)));
    out.require(so_fixed_dim(ev) == numeric, "so_fixed_dim mismatch on modulus " + std::to_string(modulus));
    ++instances;
  }
  for (int trial = 0; trial < 30;) {
    const int m = 7 + static_cast<int>(rng() % 14);
    std::vector<int> img(static_cast<std::size_t>(m));
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    const Permutation a(img);
    std::shuffle(img.begin(), img.end(), rng);
    const Permutation b(img);
    const Permutation ab = a * b;
    const auto oa = static_cast<int>(a.order()), ob = static_cast<int>(b.order()), oc = static_cast<int>(ab.order());
    if (std::min({oa, ob, oc}) < 2 || !is_hyperbolic(oa, ob, oc)) continue;
    // h1_alt expects shapes in the triple's sorted order.
    std::array<std::pair<int, Permutation>, 3> sorted{{{oa, a}, {ob, b}, {oc, ab}}};
    std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    const std::array<CycleType, 3> shapes{sorted[0].second.cycle_type(), sorted[1].second.cycle_type(),
                                          sorted[2].second.cycle_type()};
    const auto report = h1_alt(m, shapes, Triple(oa, ob, oc));
    const int numeric = AltConfig(m).lie_dim() - numeric_fixed(a) - numeric_fixed(b) - numeric_fixed(ab);
    out.require(report.h1 == numeric, "h1_alt mismatch at m=" + std::to_string(m));
    ++instances;
    ++trial;
  }
  out.require(instances >= 50, "too few instances");
  out.note << instances << " randomized instances";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Lawther identity sweep", 1.0, lawther_sweep},
      {2, "Rigid-table zeros", 1.0, [](Outcome& o) { table_check(o, FixtureId::Rigid); }},
      {3, "Non SO(3)-dense unsettled set", 5.0, [](Outcome& o) { table_check(o, FixtureId::NonSo3); }},
      {4, "B_k x B_{r-k-1} pairs table", 5.0, bibi_pairs},
      {5, "Alternating generating pairs", 120.0, alt_generation},
      {6, "Alternating-method positivity", 10.0, alt_positivity},
      {7, "Alternating non-generation", 120.0, alt_non_generation},
      {8, "Numeric rank oracle suite", 120.0, oracle_suite},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.require(secs <= c.bound_seconds, "exceeded time bound");
    if (!out.pass) ++failures;
    std::printf("%s  %d  %-34s %8.3f s (bound %g s)  %s\n", out.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                c.bound_seconds, out.note.str().c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
