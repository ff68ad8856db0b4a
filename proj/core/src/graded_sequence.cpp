#include "ideals/graded_sequence.hpp"

#include <algorithm>

#include "ideals/errors.hpp"
#include "ideals/multiplier.hpp"

namespace ideals {

struct GradedSequence::State {
  int dim;
  std::function<std::pair<MonomialIdeal, std::string>(int)> oracle;
  std::string label;
  mutable std::mutex mutex;
  mutable std::map<int, MonomialIdeal> cache;
  mutable std::map<int, std::string> notes;
};

GradedSequence::GradedSequence(int dim, std::function<MonomialIdeal(int)> oracle,
                               std::string label) {
  if (!oracle) throw DomainError("GradedSequence: oracle must be total");
  *this = annotated(
      dim,
      [oracle = std::move(oracle)](int m) {
        return std::make_pair(oracle(m), std::string());
      },
      std::move(label));
}

GradedSequence GradedSequence::annotated(
    int dim, std::function<std::pair<MonomialIdeal, std::string>(int)> oracle,
    std::string label) {
  if (dim < 1) throw DomainError("GradedSequence: dimension must be >= 1");
  if (!oracle) throw DomainError("GradedSequence: oracle must be total");
  GradedSequence seq;
  seq.state_ = std::make_shared<State>();
  seq.state_->dim = dim;
  seq.state_->oracle = std::move(oracle);
  seq.state_->label = std::move(label);
  return seq;
}

int GradedSequence::dim() const { return state_->dim; }
const std::string& GradedSequence::label() const { return state_->label; }

MonomialIdeal GradedSequence::at(int m) const {
  if (m < 0) throw DomainError("GradedSequence: negative index");
  if (m == 0) return MonomialIdeal::unit(state_->dim);
  {
    std::lock_guard<std::mutex> lock(state_->mutex);
    auto it = state_->cache.find(m);
    if (it != state_->cache.end()) return it->second;
  }
  auto [value, note] = state_->oracle(m);
  if (value.dim() != state_->dim)
    throw DimensionMismatch(state_->dim, value.dim());
  std::lock_guard<std::mutex> lock(state_->mutex);
  if (!note.empty()) state_->notes.emplace(m, std::move(note));
  return state_->cache.emplace(m, std::move(value)).first->second;
}

std::map<int, std::string> GradedSequence::annotations() const {
  std::lock_guard<std::mutex> lock(state_->mutex);
  return state_->notes;
}

GradedAuditReport verify_graded_prefix(const GradedSequence& seq, int M) {
  if (M < 2) throw DomainError("verify_graded_prefix: M must be >= 2");
  GradedAuditReport report;
  for (int p = 1; 2 * p <= M; ++p) {
    for (int q = p; p + q <= M; ++q) {
      MonomialIdeal prod = product(seq.at(p), seq.at(q));
      const MonomialIdeal& target = seq.at(p + q);
      ++report.pairs_checked;
      for (const Exponent& g : prod.generators()) {
        if (!target.contains(g)) {
          report.violations.push_back({p, q, g});
          break;
        }
      }
    }
  }
  return report;
}

namespace {

Rational index_power(int m, int n) { return rational_pow(Rational(m), n); }

}  // namespace

LimitEstimate multiplicity_limit(const GradedSequence& seq, int M) {
  if (M < 1) throw DomainError("multiplicity_limit: M must be >= 1");
  LimitEstimate est;
  est.direction = Direction::Upper;
  for (int m = 1; m <= M; ++m) {
    Rational v = Rational(multiplicity(seq.at(m))) / index_power(m, seq.dim());
    est.samples.emplace_back(m, v);
    if (m == 1 || v < est.best_bound) est.best_bound = v;
  }
  return est;
}

LimitEstimate volume_limsup(const GradedSequence& seq, int M) {
  if (M < 1) throw DomainError("volume_limsup: M must be >= 1");
  LimitEstimate est;
  est.direction = Direction::Window;
  Int factorial(1);
  for (int i = 2; i <= seq.dim(); ++i) factorial *= i;
  for (int m = 1; m <= M; ++m) {
    Rational v = Rational(factorial) * Rational(colength(seq.at(m))) /
                 index_power(m, seq.dim());
    est.samples.emplace_back(m, v);
  }
  int window_start = M / 2 + 1;
  bool first = true;
  for (const auto& [m, v] : est.samples) {
    if (m < window_start) continue;
    if (first || v > est.best_bound) est.best_bound = v;
    first = false;
  }
  est.note = "trailing-window max over m in [" + std::to_string(window_start) +
             ", " + std::to_string(M) + "]";
  return est;
}

LimitEstimate lct_limit(const GradedSequence& seq, int M) {
  if (M < 1) throw DomainError("lct_limit: M must be >= 1");
  LimitEstimate est;
  est.direction = Direction::Lower;
  for (int m = 1; m <= M; ++m) {
    Rational v = Rational(m) * lct(seq.at(m));
    est.samples.emplace_back(m, v);
    if (m == 1 || v > est.best_bound) est.best_bound = v;
  }
  return est;
}

LctBracket lct_bracket(const GradedSequence& seq, int M, int p_budget) {
  LctBracket bracket;
  bracket.lower = lct_limit(seq, M);
  bracket.upper.direction = Direction::Upper;
  int skipped = 0;
  bool first = true;
  for (int m = 1; m <= M; ++m) {
    AsymptoticResult b = asymptotic_multiplier(seq, m, p_budget);
    if (b.ideal.is_unit()) {
      ++skipped;  // m * lct(R) is infinite: no upper evidence at this index
      continue;
    }
    Rational v = Rational(m) * lct(b.ideal);
    bracket.upper.samples.emplace_back(m, v);
    if (first || v < bracket.upper.best_bound) bracket.upper.best_bound = v;
    first = false;
  }
  if (skipped > 0)
    bracket.upper.note =
        std::to_string(skipped) + " indices skipped (unit asymptotic ideal)";
  if (!first)
    bracket.width = bracket.upper.best_bound - bracket.lower.best_bound;
  return bracket;
}

namespace {

// Ideal generated by the lattice points u with r*u in P. Minimal generators
// lie in the per-axis box ceil(p_i / r): beyond it u dominates a pure power.
MonomialIdeal lattice_scaled_ideal(const MonomialIdeal& a, int r) {
  if (a.is_unit()) return a;
  NewtonPolyhedron poly(a);
  int n = a.dim();
  std::vector<std::int64_t> pp = pure_power_exponents(a);
  std::vector<std::int64_t> bound(pp.size());
  for (std::size_t i = 0; i < pp.size(); ++i) bound[i] = (pp[i] + r - 1) / r;

  std::vector<Exponent> gens;
  std::vector<std::int64_t> u(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<Rational> point;
    point.reserve(u.size());
    for (std::int64_t c : u) point.emplace_back(Rational(c) * r);
    if (poly.locate(point, Rational(1)) != Location::Outside)
      gens.push_back(Exponent(u));
    int i = 0;
    while (i < n) {
      if (++u[static_cast<std::size_t>(i)] <= bound[static_cast<std::size_t>(i)]) break;
      u[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == n) break;
  }
  return MonomialIdeal::minimalize(n, std::move(gens));
}

}  // namespace

GradedSequence saturate(const GradedSequence& seq, int r_budget) {
  if (r_budget < 1) throw DomainError("saturate: budget must be >= 1");
  GradedSequence source = seq;
  return GradedSequence::annotated(
      seq.dim(),
      [source, r_budget](int m) {
        MonomialIdeal current = MonomialIdeal::zero(source.dim());
        int witness = 1;
        for (int r = 1; r <= r_budget; r *= 2) {
          MonomialIdeal am = source.at(m * r);
          if (!is_zero_dimensional(am))
            throw DomainError("saturate: sequence entry is not zero-dimensional");
          MonomialIdeal next = lattice_scaled_ideal(am, r);
          if (r > 1 && !next.contains(current))
            throw std::logic_error("saturate: chain is not monotone along divisibility");
          if (r == 1 || !(next == current)) witness = r;
          current = next;
        }
        return std::make_pair(std::move(current),
                              "witness r = " + std::to_string(witness));
      },
      "saturate(" + seq.label() + ")");
}

GradedSequence colon_sequence(const GradedSequence& aseq,
                              const GradedSequence& bseq) {
  if (aseq.dim() != bseq.dim()) throw DimensionMismatch(aseq.dim(), bseq.dim());
  GradedSequence a = aseq, b = bseq;
  return GradedSequence(
      aseq.dim(), [a, b](int m) { return colon(a.at(m), b.at(m)); },
      "(" + aseq.label() + " : " + bseq.label() + ")");
}

GradedSequence combine(const GradedSequence& aseq, const GradedSequence& bseq,
                       CombineOp op) {
  if (aseq.dim() != bseq.dim()) throw DimensionMismatch(aseq.dim(), bseq.dim());
  GradedSequence a = aseq, b = bseq;
  if (op == CombineOp::Product)
    return GradedSequence(
        aseq.dim(), [a, b](int m) { return product(a.at(m), b.at(m)); },
        aseq.label() + " * " + bseq.label());
  return GradedSequence(
      aseq.dim(), [a, b](int m) { return intersection(a.at(m), b.at(m)); },
      aseq.label() + " & " + bseq.label());
}

LimitEstimate ord_limit(const GradedSequence& seq, const WeightVector& w, int M) {
  if (M < 1) throw DomainError("ord_limit: M must be >= 1");
  if (w.dim() != seq.dim()) throw DimensionMismatch(seq.dim(), w.dim());
  LimitEstimate est;
  est.direction = Direction::Upper;
  for (int m = 1; m <= M; ++m) {
    Rational v = ord_weight(seq.at(m), w) / Rational(m);
    est.samples.emplace_back(m, v);
    if (m == 1 || v < est.best_bound) est.best_bound = v;
  }
  return est;
}

PositivityCertificate positivity_certificate(const GradedSequence& seq,
                                             int m_budget, int p_budget) {
  if (m_budget < 1) throw DomainError("positivity_certificate: budget must be >= 1");
  for (int m = 1; m <= m_budget; ++m) {
    AsymptoticResult b = asymptotic_multiplier(seq, m, p_budget);
    if (b.ideal.is_proper()) return {true, m};
  }
  return {false, 0};
}

LimitEstimate fekete_limit(const std::vector<std::pair<int, Rational>>& values,
                           FeketeMode mode) {
  if (values.empty()) throw DomainError("fekete_limit: empty input");
  std::map<int, Rational> by_index;
  for (const auto& [m, v] : values) {
    if (m < 1) throw DomainError("fekete_limit: indices must be positive");
    if (!by_index.emplace(m, v).second)
      throw DomainError("fekete_limit: duplicate index " + std::to_string(m));
  }

  LimitEstimate est;
  est.direction = mode == FeketeMode::Subadditive ? Direction::Upper : Direction::Lower;
  bool first = true;
  for (const auto& [m, v] : by_index) {
    Rational ratio = v / Rational(m);
    est.samples.emplace_back(m, ratio);
    bool better = first || (mode == FeketeMode::Subadditive ? ratio < est.best_bound
                                                            : ratio > est.best_bound);
    if (better) est.best_bound = ratio;
    first = false;
  }

  // Audit the additivity assumption on the sampled pairs.
  int violations = 0;
  for (const auto& [p, vp] : by_index) {
    for (const auto& [q, vq] : by_index) {
      if (q < p) continue;
      auto it = by_index.find(p + q);
      if (it == by_index.end()) continue;
      bool bad = mode == FeketeMode::Subadditive ? it->second > vp + vq
                                                 : it->second < vp + vq;
      if (bad) ++violations;
    }
  }
  if (violations > 0)
    est.note = "additivity audit: " + std::to_string(violations) +
               " sampled pair(s) violate the " +
               (mode == FeketeMode::Subadditive ? std::string("subadditive")
                                                : std::string("superadditive")) +
               " hypothesis";
  return est;
}

}  // namespace ideals
