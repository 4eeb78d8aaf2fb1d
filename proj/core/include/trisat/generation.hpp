#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trisat/cycle_type.hpp"
#include "trisat/permutation.hpp"
#include "trisat/triple.hpp"

namespace trisat {

/// Every permutation of the given cycle type, each exactly once, sorted
/// lexicographically by image tuple. Throws std::invalid_argument if the
/// type's degree differs from m.
std::vector<Permutation> enumerate_class(int m, const CycleType& type);

/// A pair (A, B) in Alt_m with |A| = a, |B| = b, |AB| = c generating Alt_m.
struct GenerationWitness {
  Permutation a;
  Permutation b;
  std::array<int, 3> orders{};
  std::array<CycleType, 3> shapes;  // of A, B and AB
};

/// Re-checks element orders, the product order and |<A,B>| = m!/2.
bool validate_witness(const GenerationWitness& w, int m);

struct GenerationSearchOptions {
  /// Cycle types for A, B and AB; restricts the search to those classes.
  std::optional<std::array<CycleType, 3>> shape_hint;
  /// Accept orders dividing (a, b, c) instead of exactly equal.
  bool dividing = false;
};

struct GenerationSearchResult {
  std::optional<GenerationWitness> witness;
  std::string reason;  // set when no witness exists
  std::uint64_t pairs_tested = 0;
};

/// Searches Alt_m for a generating pair with orders (a, b, c).
///
/// A runs over one representative (the lexicographic minimum) of each
/// even class of order a; B runs over every element of every even class
/// of order b, in lexicographic order. Candidates are filtered by the
/// order of AB, then by the full group order. The first hit in this order
/// is the lexicographically minimal witness. Requires m >= 5 and m <= 20.
GenerationSearchResult find_generating_triple(int m, const Triple& triple,
                                              const GenerationSearchOptions& options = {});

/// Minimum over even cycle types of exact orders a, b, c in Sym_m of the
/// total cycle count; std::nullopt when some order has no even element.
std::optional<int> scott_min_sum(int m, const Triple& triple);

struct NonGenerationResult {
  enum class Kind { NoElement, Scott, Exhaustive, Refuted };
  Kind kind = Kind::Exhaustive;
  std::optional<int> scott_sum;
  int scott_bound = 0;  // m + 2
  std::optional<GenerationWitness> witness;

  bool non_generated() const { return kind != Kind::Refuted; }
};

std::string to_string(NonGenerationResult::Kind kind);

/// Decides whether Alt_m is (a,b,c)-generated: missing elements, then the
/// cycle-count bound m1 + m2 + m3 <= m + 2 with its parity, then an
/// exhaustive search.
NonGenerationResult prove_non_generation(int m, const Triple& triple);

}  // namespace trisat
