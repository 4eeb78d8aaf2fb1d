#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace trisat {

enum class Status { Saturated, Unknown, RigidZero };

std::string_view to_string(Status status);

/// A saturation decision. `method` names the procedure that produced it
/// ("ladder", "bibi", "alt", "principal"); `certificate` holds the H^1
/// values or search witness needed to re-check the decision offline.
struct Verdict {
  Status status = Status::Unknown;
  std::string method;
  nlohmann::json certificate = nlohmann::json::object();

  bool saturated() const { return status == Status::Saturated; }
};

nlohmann::json to_json(const Verdict& verdict);

}  // namespace trisat
