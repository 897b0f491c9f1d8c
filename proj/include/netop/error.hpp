#pragma once

#include <exception>
#include <string>
#include <utility>

#include <json.hpp>

namespace netop {

// Every rejected construction or failed operation carries one of these
// codes; the CLI maps them onto its error-JSON schema verbatim.
enum class ErrorCode {
  SelfLoop,
  IndexOutOfRange,
  DuplicateEdge,
  ArityMismatch,
  SlotTypeMismatch,
  ShapeMismatch,
  BadPermutation,
  InvalidArgument,
  UnknownKind,
  DuplicateLink,
  LinkOutOfRange,
  ColorMismatch,
  DoubleParent,
  NestingCycle,
  CapacityExceeded,
  BadPosition,
  UnknownPort,
  BadRoot,
  SpaceCapExceeded,
  UnknownPrerequisite,
  CyclicPrerequisites,
  DuplicateTask,
  NodeBudgetExhausted,
  Infeasible,
  ParseError,
  IoError,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SelfLoop: return "self_loop";
    case ErrorCode::IndexOutOfRange: return "index_out_of_range";
    case ErrorCode::DuplicateEdge: return "duplicate_edge";
    case ErrorCode::ArityMismatch: return "arity_mismatch";
    case ErrorCode::SlotTypeMismatch: return "slot_type_mismatch";
    case ErrorCode::ShapeMismatch: return "shape_mismatch";
    case ErrorCode::BadPermutation: return "bad_permutation";
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::UnknownKind: return "unknown_kind";
    case ErrorCode::DuplicateLink: return "duplicate_link";
    case ErrorCode::LinkOutOfRange: return "link_out_of_range";
    case ErrorCode::ColorMismatch: return "color_mismatch";
    case ErrorCode::DoubleParent: return "double_parent";
    case ErrorCode::NestingCycle: return "nesting_cycle";
    case ErrorCode::CapacityExceeded: return "capacity_exceeded";
    case ErrorCode::BadPosition: return "bad_position";
    case ErrorCode::UnknownPort: return "unknown_port";
    case ErrorCode::BadRoot: return "bad_root";
    case ErrorCode::SpaceCapExceeded: return "space_cap_exceeded";
    case ErrorCode::UnknownPrerequisite: return "unknown_prerequisite";
    case ErrorCode::CyclicPrerequisites: return "cyclic_prerequisites";
    case ErrorCode::DuplicateTask: return "duplicate_task";
    case ErrorCode::NodeBudgetExhausted: return "node_budget_exhausted";
    case ErrorCode::Infeasible: return "infeasible";
    case ErrorCode::ParseError: return "parse_error";
    case ErrorCode::IoError: return "io_error";
  }
  return "unknown";
}

class Error : public std::exception {
 public:
  Error(ErrorCode code, std::string detail,
        nlohmann::json context = nlohmann::json::object())
      : code_(code), detail_(std::move(detail)), context_(std::move(context)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }
  const nlohmann::json& context() const noexcept { return context_; }
  const char* what() const noexcept override { return detail_.c_str(); }

  nlohmann::json to_json() const {
    return nlohmann::json{
        {"error", to_string(code_)}, {"detail", detail_}, {"context", context_}};
  }

 private:
  ErrorCode code_;
  std::string detail_;
  nlohmann::json context_;
};

}  // namespace netop
