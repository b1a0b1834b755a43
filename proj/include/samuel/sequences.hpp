#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "samuel/local_ring.hpp"

namespace samuel {

struct ConditionCheck {
  std::string name;
  bool passed = false;
  /// For colon comparisons: the two ideals that were compared.
  std::vector<std::string> witness;
};

struct SequenceReport {
  std::vector<std::string> elements;
  std::vector<ConditionCheck> conditions;
  bool verdict = false;
  /// 1-based index of the element at which the first failing condition sits.
  std::optional<int> failing_index;
  /// Superficiality certificates: the c found and the window tested.
  std::optional<int> certificate_c;
  int c_window = 0;
  int n_max = 0;

  const ConditionCheck* first_failure() const;
  nlohmann::ordered_json to_json() const;
};

/// ((x_1..x_{i-1}) : x_i) = (x_1..x_{i-1}) for every i, and (xs) proper.
SequenceReport is_regular_sequence(const std::vector<RingElement>& xs);

/// (i) no x_i lies in the ideal of the others; (ii) with x_0 = 0,
/// ((x_0..x_i) : x_{i+1} x_j) = ((x_0..x_i) : x_j) for 0 <= i < r, j > i.
SequenceReport is_d_sequence(const std::vector<RingElement>& xs);

struct SuperficialOptions {
  int c_window = 3;
  int n_max = 12;
};

/// Window certificate: some 1 <= c <= c_window with
/// (Q^{n+1} : x) meet Q^c = Q^n for every c <= n <= n_max.
SequenceReport is_superficial(const QuotientIdeal& Q, const RingElement& x, SuperficialOptions options = {});

/// k elements, random integer combinations of Q's generators, each certified
/// superficial modulo the previous ones. Coefficients come from [-5, 5] for
/// the first half of the attempts and [-50, 50] afterwards. Throws
/// SearchExhausted.
std::vector<RingElement> superficial_sequence_search(const QuotientIdeal& Q, int k, int attempts, std::uint64_t seed,
                                                     SuperficialOptions options = {});

}  // namespace samuel
