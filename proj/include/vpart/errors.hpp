#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vpart/vertex_set.hpp"

namespace vpart {

enum class ErrorKind {
  MalformedInput,
  LoopOrDuplicateEdge,
  EmptyGraph,
  BudgetExhausted,
  NotOptimalSeed,
  PreconditionViolated,
  FallbackExceeded,
  RepairLoopExceeded,
  UnsupportedCase,
  RangeExceeded,
  TheoremCounterexample,
  ConfigError,
};

inline std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::LoopOrDuplicateEdge: return "LoopOrDuplicateEdge";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::BudgetExhausted: return "BudgetExhausted";
    case ErrorKind::NotOptimalSeed: return "NotOptimalSeed";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::FallbackExceeded: return "FallbackExceeded";
    case ErrorKind::RepairLoopExceeded: return "RepairLoopExceeded";
    case ErrorKind::UnsupportedCase: return "UnsupportedCase";
    case ErrorKind::RangeExceeded: return "RangeExceeded";
    case ErrorKind::TheoremCounterexample: return "TheoremCounterexample";
    case ErrorKind::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

/// Replayable evidence attached to a failure: a tag naming what it shows and
/// the vertices involved (a single vertex, a clique, a near-clique, ...).
struct Witness {
  std::string kind;
  std::vector<Vertex> vertices;
  std::string note;

  bool empty() const { return kind.empty() && vertices.empty(); }
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, Witness witness = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), witness_(std::move(witness)) {}

  ErrorKind kind() const { return kind_; }
  const Witness& witness() const { return witness_; }

 private:
  ErrorKind kind_;
  Witness witness_;
};

}  // namespace vpart
