#include "trisat/saturation.hpp"

#include <stdexcept>

#include "trisat/altmethod.hpp"
#include "trisat/bibi.hpp"
#include "trisat/weil.hpp"

namespace trisat {

namespace {

const DynkinType kA1(Family::A, 1);
const DynkinType kB3(Family::B, 3);
const DynkinType kG2(Family::G, 2);

// Types whose principal PGL2 is already maximal.
bool principal_is_maximal(const DynkinType& t) {
  switch (t.family()) {
    case Family::A: return t.rank() == 2;
    case Family::B: return t.rank() == 2 || t.rank() >= 4;
    case Family::C: return true;
    case Family::G:
    case Family::F: return true;
    case Family::E: return t.rank() >= 7;
    case Family::D: return false;
  }
  return false;
}

// Walks whose propagation needs b != 3 and (a,c) != (2,5) at the B3 rung.
std::optional<std::string> b3_obstruction(const LadderPath& path, const Triple& triple) {
  for (const auto& rung : path.rungs) {
    if (rung != kB3) continue;
    if (triple.b() == 3) return "ladder passes through B3 with b=3";
    if (triple.a() == 2 && triple.c() == 5) return "ladder passes through B3 with (a,c)=(2,5)";
  }
  return std::nullopt;
}

void note_multiples(const DynkinType& type, const Triple& triple, nlohmann::json& cert) {
  const auto m = AltConfig::degree_for(type);
  if (!m) return;
  for (const auto& row : alt_generating_rows()) {
    if (row.m != *m || row.triple == triple.orders()) continue;
    const auto& o = triple.orders();
    if (o[0] % row.triple[0] == 0 && o[1] % row.triple[1] == 0 && o[2] % row.triple[2] == 0) {
      cert["propagates_from"] = {{"m", row.m}, {"triple", row.triple}};
      return;
    }
  }
}

}  // namespace

LadderPath classify_ladder(const DynkinType& type) {
  if (type == kA1) throw std::invalid_argument("A1 has no ladder: the PGL2 base is locally rigid");
  const int r = type.rank();
  if (principal_is_maximal(type)) return {{kA1, type}};
  if (type == kB3) return {{kA1, kG2, kB3}};
  if (type == DynkinType(Family::D, 4) || type == DynkinType(Family::A, 6)) return {{kA1, kG2, kB3, type}};
  switch (type.family()) {
    case Family::A:
      if (r % 2 == 0) return {{kA1, DynkinType(Family::B, r / 2), type}};
      return {{kA1, DynkinType(Family::C, (r + 1) / 2), type}};
    case Family::D: {
      LadderPath path = classify_ladder(DynkinType(Family::B, r - 1));
      path.rungs.push_back(type);
      return path;
    }
    case Family::E:
      return {{kA1, DynkinType(Family::F, 4), type}};
    default:
      break;
  }
  throw std::logic_error("no ladder for " + type.name());
}

Verdict ladder_verdict(const DynkinType& type, const Triple& triple) {
  Verdict verdict;
  verdict.method = "ladder";
  auto& cert = verdict.certificate;
  cert["type"] = type.name();
  cert["triple"] = triple.orders();
  if (type == kA1) {
    cert["path"] = {kA1.name()};
    cert["h1_chain"] = {0};
    cert["reason"] = "A1: the PGL2 base is locally rigid";
    return verdict;
  }
  const LadderPath path = classify_ladder(type);
  std::vector<std::string> names;
  std::vector<int> chain{0};
  for (const auto& rung : path.rungs) names.push_back(rung.name());
  for (std::size_t i = 1; i < path.rungs.size(); ++i) chain.push_back(h1_principal(path.rungs[i], triple).h1);
  cert["path"] = names;
  cert["h1_chain"] = chain;

  if (auto obstruction = b3_obstruction(path, triple)) {
    cert["reason"] = *obstruction;
    return verdict;
  }
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (chain[i - 1] >= chain[i]) {
      cert["reason"] = "no strict increase from " + names[i - 1] + " to " + names[i];
      cert["failed_step"] = i;
      return verdict;
    }
  }
  verdict.status = Status::Saturated;
  return verdict;
}

Verdict decide(const DynkinType& type, const Triple& triple, const DecideOptions& options) {
  nlohmann::json attempts = nlohmann::json::object();

  Verdict ladder = ladder_verdict(type, triple);
  if (ladder.saturated()) return ladder;
  attempts["ladder"] = to_json(ladder);

  if (type.family() == Family::D) {
    Verdict bibi = search_bibi(type.rank(), triple);
    if (bibi.saturated()) return bibi;
    attempts["bibi"] = to_json(bibi);
  }

  if (const auto m = AltConfig::degree_for(type)) {
    Verdict alt;
    alt.method = "alt";
    const bool in_table = alt_shape_hint(*m, triple).has_value();
    if (in_table || (options.alt_search && *m <= kMaxAltSearchDegree)) {
      alt = alt_saturation_check(*m, triple);
      if (alt.saturated()) return alt;
    } else {
      alt.certificate["m"] = *m;
      alt.certificate["reason"] = "not a built-in generating pair and search disabled";
    }
    note_multiples(type, triple, alt.certificate);
    attempts["alt"] = to_json(alt);
  }

  Verdict result;
  const int h1 = h1_principal(type, triple).h1;
  result.status = h1 == 0 ? Status::RigidZero : Status::Unknown;
  result.method = h1 == 0 ? "principal" : "none";
  result.certificate["type"] = type.name();
  result.certificate["triple"] = triple.orders();
  result.certificate["h1_principal"] = h1;
  result.certificate["attempts"] = std::move(attempts);
  return result;
}

}  // namespace trisat
