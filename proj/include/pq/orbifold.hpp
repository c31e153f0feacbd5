#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "pq/fp/presentation.hpp"
#include "pq/perm_groups.hpp"

namespace pq {

// Orbifold signature (g; m1, ..., mr). The period order is kept as given so
// that c_i indices stay meaningful; canonical() sorts it.
struct Signature {
  int genus = 0;
  std::vector<int> periods;

  // Throws Error on negative genus or a period below 2.
  void validate() const;
  Signature canonical() const;
  // 2g - 2 + sum (1 - 1/m_i) > 0
  bool is_hyperbolic() const;
  std::string to_string() const;

  std::size_t num_generators() const { return 2 * static_cast<std::size_t>(genus) + periods.size(); }
  // Generator ids in orbifold_presentation.
  int a(int j) const { return 2 * j; }
  int b(int j) const { return 2 * j + 1; }
  int c(std::size_t i) const { return 2 * genus + static_cast<int>(i); }

  friend bool operator==(const Signature&, const Signature&) = default;
};

// Generators a1, b1, ..., ag, bg, c1, ..., cr; relators c_i^m_i and the long
// relation [a1,b1]...[ag,bg] c1...cr.
Presentation orbifold_presentation(const Signature& s);
// The long relation alone, as a word in orbifold_presentation's generators.
Word long_relation(const Signature& s);

// g with 2g - 2 = order * (2g' - 2 + sum (1 - 1/m_i)). Throws NonIntegralGenus
// or NegativeGenus.
long long riemann_hurwitz_genus(std::size_t order, const Signature& s);

// Images of the orbifold generators in a finite group H.
struct GeneratingVector {
  GroupPtr target;
  Signature signature;
  std::vector<FiniteGroup::Element> a, b, c;

  // All images in generator order a1, b1, ..., c1, ...
  std::vector<FiniteGroup::Element> images() const;
};

struct VectorCheck {
  bool ok = true;
  std::string violation;
  // The offending element (for order violations) or the long relation's value.
  FiniteGroup::Element witness = 0;
};

// Checks, in order: ord(c_i) = m_i, the long relation, generation of H.
VectorCheck validate_generating_vector(const GeneratingVector& v);

// Value in H of a word in the orbifold generators.
FiniteGroup::Element evaluate_word(const FiniteGroup& h,
                                   std::span<const FiniteGroup::Element> images,
                                   const Word& w);

inline constexpr std::size_t kDefaultEnumerationOrderBound = 5000;
inline constexpr std::size_t kDefaultMaxVectors = 1'000'000;

// Every generating vector of H for the signature, sorted by the image tuple
// (a1, b1, ..., c1, ...) in element-index order. Throws BoundExceeded when
// |H| exceeds `order_bound` or more than `max_vectors` vectors exist.
std::vector<GeneratingVector> enumerate_generating_vectors(
    const GroupPtr& h, const Signature& s,
    std::size_t order_bound = kDefaultEnumerationOrderBound,
    std::size_t max_vectors = kDefaultMaxVectors);

// Period index (in the signature's own order) -> exponents killed there.
using KillMap = std::map<std::size_t, std::vector<long long>>;

// Periods become gcd(m_i, killed exponents); those reaching 1 are dropped.
// The result is canonical. Throws Error on a bad index or exponent.
Signature quotient_signature(const Signature& s, const KillMap& kill);

}  // namespace pq
