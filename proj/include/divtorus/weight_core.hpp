#pragma once

#include "divtorus/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace divtorus {

/// Cartan pairings (<gamma,alpha_1>,...,<gamma,alpha_N>) of a weight.
struct WeightLabel {
  std::vector<std::int64_t> entries;

  auto operator<=>(const WeightLabel&) const = default;
  int rank() const { return static_cast<int>(entries.size()); }
};

/// A weight gamma of V(lambda) stored as gamma = lambda - sum_i coeffs[i] alpha_i.
struct AlphaOffset {
  std::vector<std::int64_t> coeffs;

  auto operator<=>(const AlphaOffset&) const = default;
  int rank() const { return static_cast<int>(coeffs.size()); }
  std::int64_t level() const;  // sum of coeffs
  static AlphaOffset zero(int rank) { return {std::vector<std::int64_t>(rank, 0)}; }
};

/// The A_N root data: simple roots alpha_1..alpha_N, positive roots are the
/// interval sums alpha_i+...+alpha_j, highest root theta = alpha_1+...+alpha_N.
class RootSystemA {
 public:
  explicit RootSystemA(int rank);  // throws std::invalid_argument if rank < 1

  int rank() const { return n_; }

  /// <gamma, alpha_i+...+alpha_j>; 1 <= i <= j <= N. Throws on bad interval.
  static std::int64_t pairing(const WeightLabel& gamma, int i, int j);

  /// Label of lambda - sum coeffs[k] alpha_k, via the Cartan matrix.
  WeightLabel label_of(const WeightLabel& lambda, const AlphaOffset& off) const;

  /// Reflection of the weight through the interval root (i,j), as an offset.
  AlphaOffset reflect(const WeightLabel& lambda, const AlphaOffset& off, int i, int j) const;

  /// All positive roots as intervals (i,j), lexicographic.
  std::vector<std::pair<int, int>> positive_roots() const;

  /// (A^-1)_{ij} = min(i,j)(N+1-max(i,j))/(N+1), 1-based.
  std::vector<RatVec> inverse_cartan() const;

 private:
  int n_;
};

/// Offset of the lowest weight of V(lambda) (closed form).
AlphaOffset kappa(const WeightLabel& lambda);

/// Length of a maximal theta-string in V(lambda) and the admissible-top test:
/// tops of maximal strings have offsets supported on alpha_2..alpha_{N-1}.
struct ThetaStringData {
  int rank;
  std::int64_t length;  // 1 + sum C_i

  bool is_admissible_top(const AlphaOffset& off) const;
};
ThetaStringData theta_string_data(const WeightLabel& lambda);

/// True iff lambda = 0 or lambda = omega_k.
bool is_minuscule(const WeightLabel& lambda);

/// If minuscule, the wedge degree k (0 for lambda = 0), else nullopt.
std::optional<int> minuscule_degree(const WeightLabel& lambda);

/// Weight multiplicities of V(lambda) computed by Freudenthal's recursion in
/// exact integer arithmetic. Independent of the matrix construction in
/// sl_rep; used as a cross-validation oracle.
struct WeightSystem {
  WeightLabel lambda;
  std::vector<std::pair<AlphaOffset, std::int64_t>> weights;  // lex order on offsets
  AlphaOffset lowest;                                         // unique deepest weight

  std::int64_t multiplicity(const AlphaOffset& off) const;
  bool is_weight(const AlphaOffset& off) const { return multiplicity(off) > 0; }
  mpz_class dim() const;

 private:
  friend WeightSystem freudenthal_weights(const WeightLabel&);
  std::map<std::vector<std::int64_t>, std::int64_t> by_offset_;
};
WeightSystem freudenthal_weights(const WeightLabel& lambda);

mpz_class weyl_dimension(const WeightLabel& lambda);

/// Theta-string census over an enumerated weight system: groups weights into
/// lines along theta, checks each line is unbroken, records string tops.
struct ThetaStringCensus {
  std::int64_t max_length = 0;
  std::vector<AlphaOffset> maximal_tops;  // tops of maximal strings, lex order
  bool all_unbroken = true;
  std::int64_t string_count = 0;
};
ThetaStringCensus enumerate_theta_strings(const WeightSystem& ws);

/// Label from "C_1,...,C_N"; entries must be nonnegative integers.
std::optional<WeightLabel> parse_label(const std::string& csv);

std::string label_to_string(const WeightLabel& l);
std::string offset_to_string(const AlphaOffset& o);

}  // namespace divtorus
