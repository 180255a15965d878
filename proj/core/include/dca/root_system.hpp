#ifndef DCA_ROOT_SYSTEM_HPP
#define DCA_ROOT_SYSTEM_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dca/rational.hpp"

namespace dca {

enum class Family { A, B, C, D, G2, F4, E6, E7, E8 };

std::string family_name(Family f);
Family parse_family(const std::string& name);

/// A root, stored as its integer coefficients over the simple roots together
/// with its height and its value on each Cartan generator (the "components").
/// Components are taken in the coroot basis, so the components of the i-th
/// simple root are the i-th column of the Cartan matrix and are additive
/// under root addition.
struct Root {
  std::vector<int> coeffs;
  int height = 0;
  std::vector<Rational> components;

  friend bool operator==(const Root& a, const Root& b) { return a.coeffs == b.coeffs; }
  friend bool operator!=(const Root& a, const Root& b) { return !(a == b); }
};

/// Finite crystallographic root system of one of the simple types, generated
/// by closing the simple roots under the simple reflections.
///
/// The positive roots are kept in the canonical enumeration used everywhere
/// downstream: ascending height, ties broken so that roots with larger
/// leading coefficients come first (alpha_1 precedes alpha_2).
class RootSystem {
 public:
  static RootSystem build(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }

  /// Column i holds the components of simple root i.
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }

  const std::vector<Root>& positive_roots() const { return positive_; }
  std::size_t num_roots() const { return 2 * positive_.size(); }
  int max_positive_height() const { return max_height_; }

  bool contains(const std::vector<int>& coeffs) const;
  /// Looks up the stored root with these coefficients; throws if absent.
  const Root& root(const std::vector<int>& coeffs) const;
  /// 0-based position of a positive root in the canonical enumeration.
  std::size_t positive_index(const Root& r) const;

  /// The root alpha+beta when it exists; empty otherwise (beta = -alpha
  /// included: zero is never a root). Both arguments must belong to the
  /// system.
  std::optional<Root> root_sum(const Root& a, const Root& b) const;

  /// Components of a root on the Cartan generators; validates membership.
  const std::vector<Rational>& cartan_components(const Root& r) const;

  Root negated(const Root& r) const;

  /// Reflection of b in the hyperplane of mirror.
  Root reflect(const Root& mirror, const Root& b) const;

  /// Invariant symmetric form with short roots normalized to squared
  /// length 2.
  Rational inner(const Root& a, const Root& b) const;

  /// Largest p >= 0 such that b - p*a is a root.
  int string_down_count(const Root& a, const Root& b) const;

  std::string to_json() const;

 private:
  RootSystem() = default;
  void require_member(const Root& r) const;

  Family family_ = Family::A;
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;        // cartan_[j][i] = <alpha_i, alpha_j^vee>
  std::vector<Rational> simple_norms_;          // squared lengths of the simple roots
  std::vector<std::vector<Rational>> gram_;     // (alpha_i, alpha_j)
  std::vector<Root> positive_;
  int max_height_ = 0;
  std::map<std::vector<int>, Root> all_;
  std::map<std::vector<int>, std::size_t> positive_index_;
};

}  // namespace dca

#endif
