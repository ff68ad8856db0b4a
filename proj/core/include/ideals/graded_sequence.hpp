#ifndef IDEALS_GRADED_SEQUENCE_HPP
#define IDEALS_GRADED_SEQUENCE_HPP

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ideals/monomial_ideal.hpp"
#include "ideals/newton_polyhedron.hpp"
#include "ideals/rational.hpp"

namespace ideals {

/// A sequence of monomial ideals indexed by positive integers, given by a
/// total oracle and memoized. Index 0 is the unit ideal by convention and is
/// never evaluated through the oracle. Copies share the cache; evaluation is
/// safe from multiple threads.
///
/// Gradedness (a_p * a_q contained in a_{p+q}) is audited, not assumed: see
/// verify_graded_prefix.
class GradedSequence {
 public:
  GradedSequence(int dim, std::function<MonomialIdeal(int)> oracle,
                 std::string label);

  /// Variant whose oracle attaches a per-index note to each value
  /// (saturation witnesses and the like). Empty notes are dropped.
  static GradedSequence annotated(
      int dim, std::function<std::pair<MonomialIdeal, std::string>(int)> oracle,
      std::string label);

  int dim() const;
  const std::string& label() const;
  MonomialIdeal at(int m) const;

  std::map<int, std::string> annotations() const;

 private:
  GradedSequence() = default;
  struct State;
  std::shared_ptr<State> state_;
};

enum class Direction { Upper, Lower, Window };

/// Finite evidence about a limit: raw samples plus a direction-tagged
/// envelope. Upper: every sample bounds the limit from above and best_bound
/// is the sample minimum (inf-type limits). Lower: the mirror case. Window:
/// best_bound is a trailing-window maximum with no bound claim (limsup
/// estimation); the window is disclosed in `note`. No extrapolation is ever
/// performed; claimed_limit is set only by callers that know the answer.
struct LimitEstimate {
  std::vector<std::pair<int, Rational>> samples;
  Rational best_bound;
  Direction direction;
  std::optional<Rational> claimed_limit;
  std::string note;
};

struct GradedAuditViolation {
  int p;
  int q;
  Exponent witness;
};

struct GradedAuditReport {
  int pairs_checked = 0;
  std::vector<GradedAuditViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks product(a_p, a_q) contained in a_{p+q} for all p <= q, p + q <= M.
/// Violations are data, not errors.
GradedAuditReport verify_graded_prefix(const GradedSequence& seq, int M);

/// Samples e(a_m)/m^n for m <= M. Direction Upper: the limit is the infimum.
LimitEstimate multiplicity_limit(const GradedSequence& seq, int M);

/// Samples n! len(R/a_m)/m^n for m <= M and reports the maximum over the
/// trailing half of the samples as the limsup estimate (Direction Window).
LimitEstimate volume_limsup(const GradedSequence& seq, int M);

/// Samples m * lct(a_m) for m <= M. Direction Lower: the limit is the sup.
LimitEstimate lct_limit(const GradedSequence& seq, int M);

/// Two-sided evidence for the sequence threshold: lower from m * lct(a_m)
/// (sup envelope), upper from m * lct(b_m) over the asymptotic multiplier
/// ideals b_m (inf envelope). Unit b_m contribute no upper sample.
struct LctBracket {
  LimitEstimate lower;
  LimitEstimate upper;
  std::optional<Rational> width;
};
LctBracket lct_bracket(const GradedSequence& seq, int M, int p_budget);

/// Saturation: index m maps to the union of the ideals generated by the
/// lattice points of (1/r) P_{a_{mr}} along r = 1, 2, 4, ... <= r_budget.
/// The chain is monotone along divisibility; the witness r reaching the
/// final ideal is recorded as an annotation on the returned sequence.
GradedSequence saturate(const GradedSequence& seq, int r_budget);

/// Indexwise colon sequence m -> (a_m : b_m).
GradedSequence colon_sequence(const GradedSequence& aseq, const GradedSequence& bseq);

enum class CombineOp { Product, Intersection };
GradedSequence combine(const GradedSequence& aseq, const GradedSequence& bseq,
                       CombineOp op);

/// Samples ord_w(a_m)/m for m <= M. Direction Upper (the limit is the inf).
/// With w = (1,...,1) the samples estimate the Lelong number.
LimitEstimate ord_limit(const GradedSequence& seq, const WeightVector& w, int M);

/// Searches m <= m_budget for a proper asymptotic multiplier ideal b_m; such
/// an m certifies positivity of the sequence multiplicity. Finite data can
/// never certify vanishing, hence `positive == false` means unknown.
struct PositivityCertificate {
  bool positive;
  int witness_q;  // meaningful only when positive
};
PositivityCertificate positivity_certificate(const GradedSequence& seq,
                                             int m_budget, int p_budget);

enum class FeketeMode { Subadditive, Superadditive };

/// Envelope utility for (sub/super)additive scalar sequences: samples become
/// (m, value/m) and best_bound is their min (Subadditive) or max
/// (Superadditive). Additivity is audited on the index pairs present in the
/// input; failures are reported in `note`, never silently dropped.
LimitEstimate fekete_limit(const std::vector<std::pair<int, Rational>>& values,
                           FeketeMode mode);

}  // namespace ideals

#endif
