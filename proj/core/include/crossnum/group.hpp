#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "crossnum/errors.hpp"

namespace crossnum {

using Int = std::int64_t;

/// Largest e with p^e dividing n (p prime, n >= 1).
Int valuation(Int p, Int n);

bool is_prime(Int n);

/// Prime factorization of n >= 1 as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<Int, Int>> factorize(Int n);

/// Residue vector against the owning group's invariant factors, coordinate i
/// reduced into [0, n_i - 1]. The all-zero vector is the neutral element.
/// Elements compare lexicographically; this is the canonical order used by
/// the search module.
class GroupElement {
public:
  GroupElement() = default;
  explicit GroupElement(std::vector<Int> coords) : coords_(std::move(coords)) {}

  const std::vector<Int>& coords() const noexcept { return coords_; }
  Int coord(std::size_t i) const { return coords_[i]; }
  std::size_t rank() const noexcept { return coords_.size(); }
  bool is_zero() const noexcept {
    for (Int c : coords_)
      if (c != 0) return false;
    return true;
  }

  auto operator<=>(const GroupElement&) const = default;

  /// "(1,0)"; rank-1 elements render as "(3)".
  std::string str() const;

private:
  std::vector<Int> coords_;
};

/// A finite abelian group presented by its canonical invariant-factor chain
/// n_1 | n_2 | ... | n_r (each >= 2; the empty chain is the trivial group).
/// The prime-power decomposition q_1 <= ... <= q_s is derived once at
/// construction.
class FiniteAbelianGroup {
public:
  /// Trivial group.
  FiniteAbelianGroup();

  /// Builds the group presented by arbitrary cyclic orders (each >= 2) and
  /// normalizes to the invariant-factor chain: prime-power parts are
  /// regrouped per prime, largest-to-largest.
  static FiniteAbelianGroup from_orders(std::span<const Int> orders);
  static FiniteAbelianGroup from_orders(std::initializer_list<Int> orders);

  /// Parses the CLI group spec: comma-separated cyclic orders, e.g. "2,4".
  static FiniteAbelianGroup parse(std::string_view spec);

  /// Canonical spec string (invariant factors ascending), e.g. "2,4".
  std::string spec() const;

  const std::vector<Int>& invariant_factors() const noexcept { return factors_; }
  const std::vector<Int>& prime_power_factors() const noexcept { return prime_powers_; }

  Int cardinality() const noexcept { return cardinality_; }
  Int exponent() const noexcept { return exponent_; }
  Int rank() const noexcept { return static_cast<Int>(factors_.size()); }
  Int total_rank() const noexcept { return static_cast<Int>(prime_powers_.size()); }
  /// Number of prime-power components that are powers of p.
  Int p_rank(Int p) const;
  /// Primes dividing the exponent, ascending.
  std::vector<Int> primes() const;

  bool is_trivial() const noexcept { return factors_.empty(); }
  bool is_cyclic() const noexcept { return factors_.size() <= 1; }
  /// Exponent is a power of a single prime (trivial group excluded).
  bool is_p_group() const;

  GroupElement zero() const;
  /// Element with the given coordinates, reduced into range.
  GroupElement make(std::vector<Int> coords) const;
  bool valid(const GroupElement& g) const;

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement scale(Int m, const GroupElement& a) const;
  Int order_of(const GroupElement& g) const;

  /// Rank/unrank against the lexicographic element enumeration; index 0 is
  /// the zero element.
  GroupElement element(Int index) const;
  Int index_of(const GroupElement& g) const;

  bool operator==(const FiniteAbelianGroup& other) const = default;

private:
  std::vector<Int> factors_;       // invariant factors, ascending chain
  std::vector<Int> prime_powers_;  // derived, ascending
  Int cardinality_ = 1;
  Int exponent_ = 1;
};

/// For cyclic G of order n and v_p(ord(g)) < v_p(n), returns the first g0 in
/// canonical order with p*g0 = g and ord(g0) = p*ord(g).
GroupElement prime_divide(const FiniteAbelianGroup& cyclic, Int p, const GroupElement& g);

/// G1 (+) G2 in canonical form, together with order-preserving embeddings
/// whose images intersect in 0 only. When one side is trivial the other
/// embedding is the identity.
class DirectSum {
public:
  DirectSum(const FiniteAbelianGroup& left, const FiniteAbelianGroup& right);

  const FiniteAbelianGroup& group() const noexcept { return sum_; }
  const FiniteAbelianGroup& left() const noexcept { return left_; }
  const FiniteAbelianGroup& right() const noexcept { return right_; }

  GroupElement embed_left(const GroupElement& g) const;
  GroupElement embed_right(const GroupElement& g) const;

private:
  struct Part {
    int side;         // 0 = left, 1 = right
    std::size_t coord; // source coordinate
    Int prime_power;  // q = p^e
    std::size_t slot;  // target coordinate in sum_
    Int slot_unit;    // q-part generator of the target coordinate
  };

  GroupElement embed(int side, const GroupElement& g) const;

  FiniteAbelianGroup left_, right_, sum_;
  std::vector<Part> parts_;
};

/// All subgroups of G (element sets closed under the group operations),
/// found by closing the lattice of cyclic subgroups under joins. Includes
/// the trivial and full subgroups. Requires cardinality <= max_cardinality.
std::vector<std::vector<GroupElement>> subgroups(const FiniteAbelianGroup& G,
                                                 Int max_cardinality = 64);

/// Recovers the isomorphism class of a subgroup given as an element subset
/// closed under the group operations, by matching element-order statistics
/// against every abelian group of the right cardinality.
FiniteAbelianGroup iso_class(const FiniteAbelianGroup& G,
                             std::span<const GroupElement> elements);

/// Isomorphism class of G / H for a subgroup H given by its elements,
/// via coset-order statistics.
FiniteAbelianGroup quotient_iso_class(const FiniteAbelianGroup& G,
                                      std::span<const GroupElement> subgroup);

} // namespace crossnum
