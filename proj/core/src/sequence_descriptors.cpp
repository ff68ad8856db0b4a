#include "ideals/sequence_descriptors.hpp"

#include "ideals/errors.hpp"
#include "ideals/parse.hpp"

namespace ideals {

GradedSequence powers_sequence(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw DomainError("powers_sequence: zero ideal");
  return GradedSequence(
      ideal.dim(), [ideal](int m) { return power(ideal, m); },
      "powers " + to_string(ideal));
}

GradedSequence weighted_sequence(std::vector<std::int64_t> weights, std::int64_t c) {
  if (weights.empty()) throw DomainError("weighted_sequence: no weights");
  for (std::int64_t w : weights)
    if (w < 1) throw DomainError("weighted_sequence: weights must be positive integers");
  if (c < 1) throw DomainError("weighted_sequence: threshold must be >= 1");
  int n = static_cast<int>(weights.size());

  std::string label = "weighted";
  for (std::int64_t w : weights) label += " " + std::to_string(w);
  label += " " + std::to_string(c);

  return GradedSequence(
      n,
      [weights, c, n](int m) {
        std::int64_t target = c * m;
        // Minimal generators lie in the box of per-axis pure-power exponents.
        std::vector<std::int64_t> bound(weights.size());
        for (std::size_t i = 0; i < weights.size(); ++i)
          bound[i] = (target + weights[i] - 1) / weights[i];
        std::vector<Exponent> gens;
        std::vector<std::int64_t> u(weights.size(), 0);
        while (true) {
          std::int64_t s = 0;
          for (std::size_t i = 0; i < weights.size(); ++i) s += weights[i] * u[i];
          if (s >= target) gens.push_back(Exponent(u));
          int i = 0;
          while (i < n) {
            if (++u[static_cast<std::size_t>(i)] <= bound[static_cast<std::size_t>(i)]) break;
            u[static_cast<std::size_t>(i)] = 0;
            ++i;
          }
          if (i == n) break;
        }
        return MonomialIdeal::minimalize(n, std::move(gens));
      },
      label);
}

GradedSequence maxpow_sequence(int dim, std::int64_t k) {
  if (dim < 1) throw DomainError("maxpow_sequence: dimension must be >= 1");
  if (k < 1) throw DomainError("maxpow_sequence: power factor must be >= 1");
  std::vector<std::int64_t> ones(static_cast<std::size_t>(dim), 1);
  std::vector<Exponent> gens;
  for (int i = 0; i < dim; ++i) {
    std::vector<std::int64_t> e(static_cast<std::size_t>(dim), 0);
    e[static_cast<std::size_t>(i)] = 1;
    gens.push_back(Exponent(e));
  }
  MonomialIdeal maximal = MonomialIdeal::minimalize(dim, std::move(gens));
  return GradedSequence(
      dim, [maximal, k](int m) { return power(maximal, k * m); },
      "maxpow " + std::to_string(k));
}

GradedSequence table_sequence(std::vector<MonomialIdeal> ideals, std::string label) {
  if (ideals.empty()) throw DomainError("table_sequence: empty table");
  int n = ideals[0].dim();
  for (const MonomialIdeal& a : ideals)
    if (a.dim() != n) throw DimensionMismatch(n, a.dim());
  auto shared = std::make_shared<std::vector<MonomialIdeal>>(std::move(ideals));
  return GradedSequence(
      n,
      [shared](int m) {
        if (m > static_cast<int>(shared->size()))
          throw DomainError("table sequence queried beyond index " +
                            std::to_string(shared->size()));
        return (*shared)[static_cast<std::size_t>(m - 1)];
      },
      std::move(label));
}

}  // namespace ideals
