#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eihg {

enum class ErrorKind {
  // core
  DuplicateVertexLabel,
  InvalidVertexLabel,
  EdgeOutsideVertexSet,
  EdgeTooSmall,
  VertexSetMismatch,
  UnknownVertex,
  NotAGraph,
  SelfArc,
  // ei
  NotLinear,
  FullVertexSetAlreadyEdge,
  TooFewVertices,
  // generators / laws
  InvalidSpec,
  UnknownCatalogId,
  NotInCatalog,
  OutOfTheoremRange,
  // helly
  TooManyEdges,
  // trees / realizer
  NotATree,
  NotALegOfThisTree,
  KnownUnrealizable,
  InternalVerificationFailure,
  // decider
  TooLarge,
  BudgetExhausted,
  // text formats
  ParseError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised for the seven trees that have no 3-uniform EI preimage. `catalog_id`
// is the atlas number of the matching tree (2, 3, 5, 7, 8, 12 or 14).
class UnrealizableTree : public Error {
 public:
  UnrealizableTree(int catalog_id, const std::string& name)
      : Error(ErrorKind::KnownUnrealizable, "tree is isomorphic to " + name),
        catalog_id_(catalog_id),
        name_(name) {}

  int catalog_id() const noexcept { return catalog_id_; }
  const std::string& name() const noexcept { return name_; }

 private:
  int catalog_id_;
  std::string name_;
};

}  // namespace eihg
