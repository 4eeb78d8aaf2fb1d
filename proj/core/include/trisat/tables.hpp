#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace trisat {

/// The six published tables, transcribed as fixtures.
enum class FixtureId { Rigid, NonSo3, BibiResults, BibiPairs, AltGen, AltNonGen };

std::string_view to_string(FixtureId id);
std::optional<FixtureId> parse_fixture_id(std::string_view text);
const std::vector<FixtureId>& all_fixture_ids();

struct TableOptions {
  /// Upper end for parameterized "c >= ..." rows.
  int sample_c = 60;
  /// Upper end for rows free in two entries (e.g. "A1, any").
  int sample_free = 20;
  /// Progress lines go here when non-null.
  std::ostream* trace = nullptr;
};

struct RowCheck {
  std::string row;     // the fixture row as printed in the table
  bool match = true;
  int samples = 0;     // number of (type, triple) instances checked
  nlohmann::json detail = nlohmann::json::object();
};

struct TableReport {
  FixtureId id = FixtureId::Rigid;
  std::vector<RowCheck> rows;

  int mismatches() const;
  nlohmann::json to_json(bool include_details = false) const;
};

/// Recomputes every row of the fixture from first principles and compares
/// it with the transcribed expectation.
TableReport reproduce_table(FixtureId id, const TableOptions& options = {});

/// The transcribed rows themselves, for display.
nlohmann::json fixture_rows(FixtureId id);

}  // namespace trisat
