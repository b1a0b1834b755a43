#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "samuel/local_ring.hpp"

namespace samuel {

/// One ring declaration block as written in a ring or corpus file:
///
///     field Q            # or: field Fp 32003
///     vars x y z w
///     relations x*y^3, x*z, x*w
///     ideal Q = x - y, x - z, x - w
///
/// Corpus files add `instance NAME` headers and `expect KEY = VALUE` lines.
struct RingSpec {
  std::string name;
  Field field = Field::rationals();
  std::vector<std::string> vars;
  std::vector<std::string> relations;
  std::vector<std::pair<std::string, std::vector<std::string>>> ideals;
  std::map<std::string, std::string> expects;
  int line = 0;

  /// Generators of the named ideal, or nullptr.
  const std::vector<std::string>* ideal(std::string_view name) const;
};

/// Parses a single ring file. `instance` and `expect` lines are rejected.
RingSpec parse_ring_file(std::string_view text);

/// Parses a corpus: a sequence of `instance NAME` blocks.
std::vector<RingSpec> parse_corpus_file(std::string_view text);

/// Builds R from a spec, optionally overriding the coefficient field.
LocalRingPtr build_ring(const RingSpec& spec, std::optional<Field> field_override = std::nullopt);

/// Parses "q" / "Q" or "fp:P" as accepted by the --field flag.
Field parse_field_flag(std::string_view text);

std::string read_text_file(const std::string& path);

}  // namespace samuel
