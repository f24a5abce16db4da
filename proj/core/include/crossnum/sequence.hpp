#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "crossnum/group.hpp"

namespace crossnum {

/// Exact cross number: numerator over a fixed denominator, normally exp(G)
/// of the owning group. Never reduced; comparisons are exact rationals.
struct CrossValue {
  Int num = 0;
  Int den = 1;

  /// Same value over a new denominator; throws if not representable.
  CrossValue rescaled(Int new_den) const;

  friend bool operator==(const CrossValue& a, const CrossValue& b) {
    return a.num * b.den == b.num * a.den;
  }
  friend auto operator<=>(const CrossValue& a, const CrossValue& b) {
    return a.num * b.den <=> b.num * a.den;
  }

  std::string str() const;      // "14/9", unreduced
  std::string reduced() const;  // display form, gcd removed
};

/// A sorted, deduplicated set of cross numbers over one denominator.
struct CrossSet {
  Int denominator = 1;
  std::vector<Int> numerators; // sorted, unique

  static CrossSet interval(Int denominator, Int lo, Int hi, Int step = 1);

  bool contains(Int numerator) const;
  bool empty() const noexcept { return numerators.empty(); }
  CrossValue min() const;
  CrossValue max() const;
  void insert(Int numerator);

  bool operator==(const CrossSet&) const = default;

  /// "(1/6)[1,7]" when the set is a progression, otherwise an explicit list.
  std::string str() const;
};

/// Membership mask over the fixed lexicographic element enumeration of a
/// group; holds a set of sums of non-trivial subsequences.
class SumSet {
public:
  SumSet() = default;
  explicit SumSet(const FiniteAbelianGroup& G);

  bool contains(Int index) const;
  void insert(Int index);
  Int count() const;
  Int universe() const noexcept { return size_; }
  std::vector<Int> indices() const;

  bool operator==(const SumSet&) const = default;

private:
  Int size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// A finite multiset of group elements; the free-abelian-monoid sequence.
/// The empty multiset is the trivial sequence. Multiplicities are kept in
/// canonical (lexicographic) element order.
class Sequence {
public:
  explicit Sequence(FiniteAbelianGroup group) : group_(std::move(group)) {}

  static Sequence from_elements(const FiniteAbelianGroup& G, std::span<const GroupElement> elems);
  /// Parses the textual literal: semicolon-separated coordinate tuples with
  /// optional ^multiplicity, e.g. "(1,0)^2;(1,1)". Rank-1 tuples may omit
  /// parentheses.
  static Sequence parse(const FiniteAbelianGroup& G, std::string_view literal);
  std::string str() const;

  const FiniteAbelianGroup& group() const noexcept { return group_; }
  const std::map<GroupElement, Int>& multiplicities() const noexcept { return mult_; }

  bool trivial() const noexcept { return mult_.empty(); }
  Int length() const;
  Int multiplicity(const GroupElement& g) const;
  std::vector<GroupElement> support() const;

  /// Adds v copies of g (v may be negative to remove copies).
  void add(const GroupElement& g, Int v = 1);
  Sequence with(const GroupElement& g, Int v = 1) const;
  Sequence without(const GroupElement& g, Int v = 1) const;

  GroupElement sigma() const;
  CrossValue cross_number() const;

  /// Sums of non-trivial subsequences, computed incrementally:
  /// Sigma(S g) = Sigma(S) + (g + Sigma(S)) + {g}.
  SumSet subset_sums() const;

  bool is_zero_sum_free() const;
  bool is_minimal_zero_sum() const;

  /// Multiset equality (same group, same multiplicities).
  bool operator==(const Sequence&) const = default;

  /// True when other is a sub-multiset of this sequence.
  bool contains(const Sequence& other) const;

private:
  FiniteAbelianGroup group_;
  std::map<GroupElement, Int> mult_;
};

/// Product sequence S1 S2 (multiset union over a common group).
Sequence concat(const Sequence& a, const Sequence& b);

/// Image of S1 S2 over G1 (+) G2 under the direct-sum embeddings.
Sequence concat(const Sequence& s1, const Sequence& s2, const DirectSum& ds);

/// S with the sub-multiset `out` removed and `in` added.
Sequence replace(const Sequence& S, const Sequence& out, const Sequence& in);

} // namespace crossnum
