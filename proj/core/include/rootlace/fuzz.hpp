#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rootlace/interlace.hpp"
#include "rootlace/polynomial.hpp"
#include "rootlace/transforms.hpp"

namespace rootlace {

enum class FuzzKind { kTheorem, kCorollary31, kCorollary32 };

std::string to_string(FuzzKind kind);
/// Accepts "theorem", "corollary31", "corollary32".
std::optional<FuzzKind> parse_fuzz_kind(std::string_view name);

struct FuzzConfig {
  FuzzKind kind = FuzzKind::kTheorem;
  std::size_t count = 1;
  std::uint64_t seed = 0;
  std::size_t min_degree = 1;
  std::size_t max_degree = 8;
  /// Theorem instances only: force Interlaces or AlternatesLeft pairs. When
  /// unset the two kinds alternate by instance index.
  std::optional<InterlaceKind> relation;
  /// Theorem instances only: draw parameters on the boundary ad = bc.
  bool boundary = false;
};

/// A generated instance. Every instance satisfies the hypotheses of its kind.
struct FuzzInstance {
  std::size_t index = 0;
  FuzzKind kind = FuzzKind::kTheorem;
  InterlaceKind relation = InterlaceKind::kInterlaces;
  Polynomial f;
  Polynomial g;
  std::vector<Rational> xs;  // corollary32 input sequence
  TransformParams params;
};

struct FuzzFailure {
  FuzzInstance instance;
  std::string message;
};

struct FuzzSummary {
  std::size_t count = 0;
  std::size_t passed = 0;
  std::vector<FuzzFailure> failures;  // ordered by instance index
};

/// Instance `index` of the stream defined by (config, seed); independent of
/// every other index.
FuzzInstance make_instance(const FuzzConfig& config, std::size_t index);

/// Empty string on success, otherwise a description of the failure.
std::string check_instance(const FuzzInstance& inst, bool boundary);

FuzzSummary run_fuzz(const FuzzConfig& config);

}  // namespace rootlace
