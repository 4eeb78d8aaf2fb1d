#include "trisat/verdict.hpp"

namespace trisat {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::Saturated: return "Saturated";
    case Status::Unknown: return "Unknown";
    case Status::RigidZero: return "RigidZero";
  }
  return "Unknown";
}

nlohmann::json to_json(const Verdict& verdict) {
  return nlohmann::json{{"status", to_string(verdict.status)},
                        {"method", verdict.method},
                        {"certificate", verdict.certificate}};
}

}  // namespace trisat
