#include "crossnum/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace crossnum {

Int valuation(Int p, Int n) {
  if (p < 2 || n < 1) throw Error(errc::out_of_range, "valuation: need p >= 2, n >= 1");
  Int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<Int, Int>> factorize(Int n) {
  if (n < 1) throw Error(errc::out_of_range, "factorize: need n >= 1");
  std::vector<std::pair<Int, Int>> out;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    Int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::string GroupElement::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

FiniteAbelianGroup::FiniteAbelianGroup() = default;

FiniteAbelianGroup FiniteAbelianGroup::from_orders(std::span<const Int> orders) {
  for (Int m : orders)
    if (m < 2) throw Error(errc::invalid_order, "cyclic order must be >= 2, got " + std::to_string(m));

  // Regroup prime-power parts: per prime, sorted descending, the i-th
  // largest parts across all primes multiply into the i-th largest
  // invariant factor.
  std::map<Int, std::vector<Int>> parts; // prime -> prime powers, descending
  for (Int m : orders)
    for (auto [p, e] : factorize(m)) {
      Int q = 1;
      for (Int i = 0; i < e; ++i) q *= p;
      parts[p].push_back(q);
    }
  std::size_t depth = 0;
  for (auto& [p, qs] : parts) {
    std::sort(qs.begin(), qs.end(), std::greater<>());
    depth = std::max(depth, qs.size());
  }

  FiniteAbelianGroup G;
  G.factors_.assign(depth, 1);
  for (auto& [p, qs] : parts)
    for (std::size_t i = 0; i < qs.size(); ++i) G.factors_[i] *= qs[i];
  std::reverse(G.factors_.begin(), G.factors_.end());

  for (auto& [p, qs] : parts) G.prime_powers_.insert(G.prime_powers_.end(), qs.begin(), qs.end());
  std::sort(G.prime_powers_.begin(), G.prime_powers_.end());

  for (Int m : G.factors_) G.cardinality_ *= m;
  G.exponent_ = G.factors_.empty() ? 1 : G.factors_.back();
  return G;
}

FiniteAbelianGroup FiniteAbelianGroup::from_orders(std::initializer_list<Int> orders) {
  return from_orders(std::span<const Int>(orders.begin(), orders.size()));
}

FiniteAbelianGroup FiniteAbelianGroup::parse(std::string_view spec) {
  std::vector<Int> orders;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t end = spec.find(',', pos);
    if (end == std::string_view::npos) end = spec.size();
    std::string_view tok = spec.substr(pos, end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (tok.empty()) throw Error(errc::parse_error, "empty order in group spec at position " + std::to_string(pos));
    Int value = 0;
    for (char c : tok) {
      if (c < '0' || c > '9')
        throw Error(errc::parse_error, std::string("invalid character '") + c + "' in group spec at position " +
                                           std::to_string(pos));
      value = value * 10 + (c - '0');
      if (value > (Int(1) << 40)) throw Error(errc::parse_error, "order too large in group spec");
    }
    orders.push_back(value);
    pos = end + 1;
  }
  if (orders.empty()) throw Error(errc::parse_error, "empty group spec");
  return from_orders(orders);
}

std::string FiniteAbelianGroup::spec() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << ',';
    os << factors_[i];
  }
  return os.str();
}

Int FiniteAbelianGroup::p_rank(Int p) const {
  Int count = 0;
  for (Int q : prime_powers_)
    if (q % p == 0) ++count;
  return count;
}

std::vector<Int> FiniteAbelianGroup::primes() const {
  std::vector<Int> ps;
  for (auto [p, e] : factorize(exponent_)) ps.push_back(p);
  return ps;
}

bool FiniteAbelianGroup::is_p_group() const {
  return !is_trivial() && factorize(exponent_).size() == 1;
}

GroupElement FiniteAbelianGroup::zero() const {
  return GroupElement(std::vector<Int>(factors_.size(), 0));
}

GroupElement FiniteAbelianGroup::make(std::vector<Int> coords) const {
  if (coords.size() != factors_.size())
    throw Error(errc::out_of_range, "element rank " + std::to_string(coords.size()) + " does not match group rank " +
                                        std::to_string(factors_.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) {
    coords[i] %= factors_[i];
    if (coords[i] < 0) coords[i] += factors_[i];
  }
  return GroupElement(std::move(coords));
}

bool FiniteAbelianGroup::valid(const GroupElement& g) const {
  if (g.rank() != factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (g.coord(i) < 0 || g.coord(i) >= factors_[i]) return false;
  return true;
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  std::vector<Int> c(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) c[i] = (a.coord(i) + b.coord(i)) % factors_[i];
  return GroupElement(std::move(c));
}

GroupElement FiniteAbelianGroup::neg(const GroupElement& a) const {
  std::vector<Int> c(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) c[i] = (factors_[i] - a.coord(i)) % factors_[i];
  return GroupElement(std::move(c));
}

GroupElement FiniteAbelianGroup::scale(Int m, const GroupElement& a) const {
  std::vector<Int> c(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    Int r = (a.coord(i) % factors_[i]) * (m % factors_[i]) % factors_[i];
    if (r < 0) r += factors_[i];
    c[i] = r;
  }
  return GroupElement(std::move(c));
}

Int FiniteAbelianGroup::order_of(const GroupElement& g) const {
  Int ord = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    ord = std::lcm(ord, factors_[i] / std::gcd(factors_[i], g.coord(i)));
  return ord;
}

GroupElement FiniteAbelianGroup::element(Int index) const {
  if (index < 0 || index >= cardinality_) throw Error(errc::out_of_range, "element index out of range");
  std::vector<Int> c(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    c[i] = index % factors_[i];
    index /= factors_[i];
  }
  return GroupElement(std::move(c));
}

Int FiniteAbelianGroup::index_of(const GroupElement& g) const {
  Int idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i] + g.coord(i);
  return idx;
}

GroupElement prime_divide(const FiniteAbelianGroup& cyclic, Int p, const GroupElement& g) {
  if (!cyclic.is_cyclic() || cyclic.is_trivial())
    throw Error(errc::out_of_range, "prime_divide: group must be cyclic and non-trivial");
  Int n = cyclic.exponent();
  Int ord = cyclic.order_of(g);
  if (valuation(p, ord) >= valuation(p, n))
    throw Error(errc::no_lift, "prime_divide: ord(g) already has full " + std::to_string(p) + "-valuation");
  // x = g/p with ord(x) = p*ord(g); solutions of p*x = g are c/p + k*(n/p),
  // scanned in canonical order.
  for (Int x = 0; x < n; ++x) {
    if ((x * p) % n != g.coord(0)) continue;
    GroupElement cand = cyclic.make({x});
    if (cyclic.order_of(cand) == p * ord) return cand;
  }
  throw Error(errc::no_lift, "prime_divide: no lift found"); // unreachable for valid inputs
}

DirectSum::DirectSum(const FiniteAbelianGroup& left, const FiniteAbelianGroup& right)
    : left_(left), right_(right) {
  std::vector<Int> orders(left.invariant_factors().begin(), left.invariant_factors().end());
  orders.insert(orders.end(), right.invariant_factors().begin(), right.invariant_factors().end());
  sum_ = FiniteAbelianGroup::from_orders(orders);

  // Source prime-power parts, and target slots per prime; both sorted by
  // exponent descending, then matched positionally. The normalization above
  // distributes largest-to-largest, so the two lists agree by construction.
  std::map<Int, std::vector<Part>> by_prime;
  for (int side = 0; side < 2; ++side) {
    const auto& fs = (side == 0 ? left_ : right_).invariant_factors();
    for (std::size_t i = 0; i < fs.size(); ++i)
      for (auto [p, e] : factorize(fs[i])) {
        Int q = 1;
        for (Int k = 0; k < e; ++k) q *= p;
        by_prime[p].push_back(Part{side, i, q, 0, 0});
      }
  }
  for (auto& [p, list] : by_prime) {
    std::stable_sort(list.begin(), list.end(),
                     [](const Part& a, const Part& b) { return a.prime_power > b.prime_power; });
    // Slots with this prime, largest valuation first; the chain is
    // ascending so that means highest coordinate first.
    std::vector<std::pair<Int, std::size_t>> slots; // (q, coordinate)
    const auto& fs = sum_.invariant_factors();
    for (std::size_t j = fs.size(); j-- > 0;) {
      Int e = valuation(p, fs[j]);
      if (e == 0) break; // divisibility chain: no smaller factor has p either
      Int q = 1;
      for (Int k = 0; k < e; ++k) q *= p;
      slots.emplace_back(q, j);
    }
    // Equal prime powers: prefer lower coordinates so that already-canonical
    // inputs embed as coordinate injections.
    std::stable_sort(slots.begin(), slots.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    for (std::size_t i = 0; i < list.size(); ++i) {
      auto [q, j] = slots[i];
      list[i].slot = j;
      // CRT unit: (m_j/q) * inv(m_j/q mod q) generates the q-part of
      // coordinate j and makes embeddings the identity when no regrouping
      // happened.
      Int m = sum_.invariant_factors()[j];
      Int base = m / q;
      Int inv = 1;
      for (Int t = 1; t < q; ++t)
        if ((base % q) * t % q == 1) {
          inv = t;
          break;
        }
      list[i].slot_unit = base * inv % m;
      parts_.push_back(list[i]);
    }
  }
}

GroupElement DirectSum::embed(int side, const GroupElement& g) const {
  const FiniteAbelianGroup& src = side == 0 ? left_ : right_;
  if (!src.valid(g)) throw Error(errc::out_of_range, "embed: element not valid for source group");
  std::vector<Int> c(sum_.invariant_factors().size(), 0);
  for (const Part& part : parts_) {
    if (part.side != side) continue;
    Int m = sum_.invariant_factors()[part.slot];
    Int component = g.coord(part.coord) % part.prime_power;
    c[part.slot] = (c[part.slot] + component % m * (part.slot_unit % m)) % m;
  }
  return GroupElement(std::move(c));
}

GroupElement DirectSum::embed_left(const GroupElement& g) const { return embed(0, g); }
GroupElement DirectSum::embed_right(const GroupElement& g) const { return embed(1, g); }

namespace {

// Closure of a 64-bit element mask under addition, via the index tables.
std::uint64_t close_mask(std::uint64_t mask, const std::vector<std::vector<int>>& add) {
  std::vector<int> elems;
  std::uint64_t pending = mask;
  while (pending) {
    int a = std::countr_zero(pending);
    pending &= pending - 1;
    elems.push_back(a);
  }
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      int s = add[elems[i]][elems[j]];
      if (!(mask >> s & 1)) {
        mask |= 1ull << s;
        elems.push_back(s);
      }
    }
  return mask;
}

} // namespace

std::vector<std::vector<GroupElement>> subgroups(const FiniteAbelianGroup& G, Int max_cardinality) {
  Int n = G.cardinality();
  if (n > max_cardinality || n > 64)
    throw Error(errc::bound_exceeded,
                "subgroups: |G| = " + std::to_string(n) + " exceeds bound " + std::to_string(std::min<Int>(max_cardinality, 64)));

  std::vector<std::vector<int>> add(n, std::vector<int>(n));
  for (Int a = 0; a < n; ++a) {
    GroupElement ga = G.element(a);
    for (Int b = 0; b <= a; ++b) {
      int s = static_cast<int>(G.index_of(G.add(ga, G.element(b))));
      add[a][b] = add[b][a] = s;
    }
  }

  std::set<std::uint64_t> found;
  std::vector<std::uint64_t> work;
  std::uint64_t trivial = 1; // {0}
  found.insert(trivial);
  work.push_back(trivial);
  while (!work.empty()) {
    std::uint64_t h = work.back();
    work.pop_back();
    for (Int g = 1; g < n; ++g) {
      if (h >> g & 1) continue;
      std::uint64_t joined = close_mask(h | (1ull << g), add);
      if (found.insert(joined).second) work.push_back(joined);
    }
  }

  std::vector<std::vector<GroupElement>> out;
  out.reserve(found.size());
  std::vector<std::uint64_t> sorted(found.begin(), found.end());
  std::sort(sorted.begin(), sorted.end(), [](std::uint64_t a, std::uint64_t b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
  });
  for (std::uint64_t mask : sorted) {
    std::vector<GroupElement> elems;
    for (Int i = 0; i < n; ++i)
      if (mask >> i & 1) elems.push_back(G.element(i));
    out.push_back(std::move(elems));
  }
  return out;
}

namespace {

// All abelian groups of the given order, via multisets of prime powers.
std::vector<FiniteAbelianGroup> abelian_groups_of_order(Int n) {
  std::vector<std::vector<Int>> shapes{{}};
  for (auto [p, e] : factorize(n)) {
    // Partitions of e as prime-power lists.
    std::vector<std::vector<Int>> partitions;
    std::vector<Int> current;
    auto recurse = [&](auto&& self, Int remaining, Int max_part) -> void {
      if (remaining == 0) {
        partitions.push_back(current);
        return;
      }
      for (Int part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        self(self, remaining - part, part);
        current.pop_back();
      }
    };
    recurse(recurse, e, e);

    std::vector<std::vector<Int>> next;
    for (const auto& shape : shapes)
      for (const auto& partition : partitions) {
        auto ext = shape;
        for (Int part : partition) {
          Int q = 1;
          for (Int i = 0; i < part; ++i) q *= p;
          ext.push_back(q);
        }
        next.push_back(std::move(ext));
      }
    shapes = std::move(next);
  }
  std::vector<FiniteAbelianGroup> out;
  out.reserve(shapes.size());
  for (const auto& shape : shapes) out.push_back(FiniteAbelianGroup::from_orders(shape));
  return out;
}

std::map<Int, Int> order_histogram(const FiniteAbelianGroup& G) {
  std::map<Int, Int> hist;
  for (Int i = 0; i < G.cardinality(); ++i) ++hist[G.order_of(G.element(i))];
  return hist;
}

FiniteAbelianGroup match_histogram(Int n, const std::map<Int, Int>& hist, const char* what) {
  for (const auto& candidate : abelian_groups_of_order(n))
    if (order_histogram(candidate) == hist) return candidate;
  throw Error(errc::not_a_group, std::string(what) + ": element orders match no abelian group of order " +
                                     std::to_string(n));
}

} // namespace

FiniteAbelianGroup iso_class(const FiniteAbelianGroup& G, std::span<const GroupElement> elements) {
  if (elements.empty()) throw Error(errc::not_a_group, "iso_class: empty element set");
  std::map<Int, Int> hist;
  for (const GroupElement& g : elements) {
    if (!G.valid(g)) throw Error(errc::out_of_range, "iso_class: element not valid for group");
    ++hist[G.order_of(g)];
  }
  return match_histogram(static_cast<Int>(elements.size()), hist, "iso_class");
}

FiniteAbelianGroup quotient_iso_class(const FiniteAbelianGroup& G,
                                      std::span<const GroupElement> subgroup) {
  std::set<GroupElement> H(subgroup.begin(), subgroup.end());
  if (H.empty() || !H.contains(G.zero()))
    throw Error(errc::not_a_group, "quotient_iso_class: subgroup must contain 0");
  if (G.cardinality() % static_cast<Int>(H.size()) != 0)
    throw Error(errc::not_a_group, "quotient_iso_class: |H| does not divide |G|");
  Int m = G.cardinality() / static_cast<Int>(H.size());

  std::map<Int, Int> hist;
  std::set<GroupElement> seen;
  for (Int i = 0; i < G.cardinality(); ++i) {
    GroupElement g = G.element(i);
    if (seen.contains(g)) continue;
    for (const GroupElement& h : H) seen.insert(G.add(g, h));
    Int ord = 1;
    GroupElement acc = g;
    while (!H.contains(acc)) {
      acc = G.add(acc, g);
      ++ord;
    }
    ++hist[ord];
  }
  return match_histogram(m, hist, "quotient_iso_class");
}

} // namespace crossnum
