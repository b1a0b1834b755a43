#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "samuel/hilbert.hpp"
#include "samuel/ring_file.hpp"
#include "samuel/sequences.hpp"

namespace samuel {

using Json = nlohmann::ordered_json;

/// Strength of the evidence behind a hypothesis, strongest first.
enum class HypothesisStatus { Certified, WindowCertified, Declared, Unmet };
enum class Verdict { Verified, Failure, Skipped, Vacuous };

std::string to_string(HypothesisStatus s);
std::string to_string(Verdict v);

/// Declared depth of R relative to d: Cohen-Macaulay, exactly d - 1, or lower.
enum class DepthClass { CM, DMinus1, Lower };
std::optional<DepthClass> parse_depth_class(std::string_view text);
std::string to_string(DepthClass c);

struct Claim {
  std::string id;
  HypothesisStatus status = HypothesisStatus::Certified;
  Verdict verdict = Verdict::Skipped;
  std::vector<std::string> unmet;
  Json values = Json::object();
  std::string note;

  Json to_json() const;
};

struct CorpusInstance {
  std::string name;
  RingSpec spec;
  LocalRingPtr ring;
  QuotientIdeal Q;
  std::vector<RingElement> gens;
  std::optional<int> expected_d;
  std::optional<DepthClass> depth_class;
  std::optional<std::vector<long>> expected_e;

  /// Uses the ideal named "Q". Throws InvalidArgument on bad metadata.
  static CorpusInstance from_spec(const RingSpec& spec, std::optional<Field> field_override = std::nullopt);
};

struct LabOptions {
  int n_max = 12;
  LengthOptions length{};
  /// Window for the Valabrega-Valla test.
  int vv_n_max = 12;
  SuperficialOptions superficial{3, 12};
  std::vector<int> l_set{1, 2, 3};
};

/// Everything computed for one instance: fit, series, depth certificates and claims.
struct TheoremReport {
  std::string name;
  Json ring = Json::object();
  std::vector<std::string> ideal;
  int d = 0;
  std::optional<DepthClass> depth_class;
  std::vector<long> table;
  std::optional<HilbertCoefficients> coefficients;
  std::optional<GradedSeries> series;
  std::optional<VVBound> vv;
  std::vector<Claim> claims;
  /// Cached: evidence for depth R >= d - 1.
  std::optional<HypothesisStatus> depth_status;
  /// Cached: number of leading generators certified as a superficial sequence.
  std::optional<int> superficial_length;
  /// Set when the instance could not be processed.
  std::optional<std::string> error_kind;
  std::optional<std::string> error_message;

  const Claim* find(std::string_view id) const;
  int count(Verdict v) const;
  Json to_json() const;
};

struct CorpusReport {
  std::vector<TheoremReport> instances;

  int count(Verdict v) const;
  int errors() const;
  Json to_json() const;
};

/// Value of the colon-length formula and whether its hypotheses were certified.
struct ColonFormula {
  long value = 0;
  HypothesisStatus status = HypothesisStatus::Certified;
  std::vector<std::string> unmet;
};

/// -length(((y_1..y_{d-1}) : y_d) meet (Q^{d-1} + (y_1..y_{d-1})) / (y_1..y_{d-1})).
/// Rejects d < 2. Hypotheses: Q^d = (ys) Q^{d-1}; y_1*..y_{d-1}* superficial
/// (window); depth G(Q) >= d - 1 (window).
ColonFormula ed_colon_formula(const QuotientIdeal& Q, const std::vector<RingElement>& ys, const LabOptions& options = {});

/// -length(H^0_m(R/(y_1..y_{d-1}))). Throws InvalidArgument unless y_1..y_{d-1}
/// is a regular sequence.
long lower_bound_surrogate(const LocalRingPtr& ring, const std::vector<RingElement>& ys, LengthOptions length = {});

/// Coefficients of Q on R x D (idealization) from e_0 of q on R and the
/// coefficients of q on D, dim D = t.
std::vector<long> idealization_coeffs(int d, int t, const std::vector<long>& eR, const std::vector<long>& eD);

/// Additive length table of R x D, D = R/p, fitted and compared with the
/// closed form. R must be a polynomial ring (no relations).
TheoremReport idealization_cross_check(const LocalRingPtr& ring, const std::vector<Polynomial>& p_gens,
                                       const std::vector<Polynomial>& q_gens, int n_max, LengthOptions length = {});

/// Full pipeline for one instance: table, fit, series, bounds, e_2
/// equivalences, e_d vanishing and the colon-formula cross-check.
TheoremReport run_instance(const CorpusInstance& instance, const LabOptions& options = {});

/// The individual claim groups, given an instance whose report already holds
/// the fit and the VV bound.
void check_bounds(const CorpusInstance& instance, TheoremReport& report, const LabOptions& options);
void check_e2_equivalences(const CorpusInstance& instance, TheoremReport& report, const LabOptions& options);
void check_ed_vanishing_necessary(const CorpusInstance& instance, TheoremReport& report, const LabOptions& options);
void check_colon_formula(const CorpusInstance& instance, TheoremReport& report, const LabOptions& options);

/// Parses and runs a corpus; per-instance errors are recorded and the run continues.
CorpusReport run_corpus(std::string_view corpus_text, const LabOptions& options = {},
                        std::optional<Field> field_override = std::nullopt);

/// Text of the built-in corpus.
std::string_view builtin_corpus();

}  // namespace samuel
