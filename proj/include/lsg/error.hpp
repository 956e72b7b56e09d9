#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lsg {

enum class ErrorKind {
  OutOfRange,
  SelfLoop,
  DuplicateEdge,
  Disconnected,
  NoEdges,
  SizeLimitExceeded,
  InvalidParams,
  LayerMismatch,
  VariantMismatch,
  EmptySet,
  SetTooSmall,
  BudgetExceeded,
  UnknownWitness,
  BadInput,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NoEdges: return "NoEdges";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::LayerMismatch: return "LayerMismatch";
    case ErrorKind::VariantMismatch: return "VariantMismatch";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::SetTooSmall: return "SetTooSmall";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::UnknownWitness: return "UnknownWitness";
    case ErrorKind::BadInput: return "BadInput";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the exact solvers when the search cannot be finished within the
/// evaluation budget. The bounds are still valid: lower <= optimum <= upper.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::size_t lower, std::size_t upper, std::uint64_t evaluations,
                 const std::string& what)
      : Error(ErrorKind::BudgetExceeded, what),
        lower_(lower),
        upper_(upper),
        evaluations_(evaluations) {}

  std::size_t lower_bound() const noexcept { return lower_; }
  std::size_t upper_bound() const noexcept { return upper_; }
  std::uint64_t evaluations() const noexcept { return evaluations_; }

 private:
  std::size_t lower_;
  std::size_t upper_;
  std::uint64_t evaluations_;
};

}  // namespace lsg
