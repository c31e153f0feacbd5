#pragma once

// Finite permutation groups realized by exhaustive closure.
//
// Elements are numbered by a breadth-first closure from the generators:
// index 0 is the identity, and every "least element" tie-break in this
// library refers to that numbering. Products compose like functions,
// (a * b)(x) = a(b(x)), and a word g1 g2 ... gk evaluates to g1 * g2 * ... * gk.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace pq {

using Point = std::uint32_t;

class Permutation {
 public:
  Permutation() = default;

  // Throws DegreeMismatch when `images` is not a bijection of {0,...,n-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  // Cycle notation on 0-based points, e.g. "(0 1 2)(3 4)". Any points beyond
  // the listed ones are fixed; `degree` must cover every point mentioned.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;
  std::string to_cycles() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

class FiniteGroup {
 public:
  using Element = std::size_t;

  static constexpr std::size_t kDefaultOrderBound = 1'000'000;

  // Closes `generators` under multiplication. Throws DegreeMismatch on
  // inconsistent degrees or degree 0, OrderBoundExceeded past `order_bound`.
  FiniteGroup(std::size_t degree, std::vector<Permutation> generators,
              std::size_t order_bound = kDefaultOrderBound);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t num_generators() const noexcept { return generators_.size(); }
  const std::vector<Permutation>& generators() const noexcept {
    return generators_;
  }

  static constexpr Element identity() noexcept { return 0; }
  Element generator(std::size_t k) const { return generator_elements_[k]; }

  const Permutation& element(Element e) const { return elements_[e]; }
  std::optional<Element> find(const Permutation& p) const;
  Element index_of(const Permutation& p) const;  // throws NotAMember
  bool contains(const Permutation& p) const { return find(p).has_value(); }

  Element multiply(Element a, Element b) const;
  Element inverse(Element a) const { return inverses_[a]; }
  Element power(Element a, long long k) const;
  Element conjugate(Element h, Element a) const;  // h a h^-1
  std::size_t element_order(Element a) const;

  // Shortest word in the generators (generator indices) evaluating to `e`;
  // the breadth-first tree fixes the choice.
  std::vector<std::size_t> word(Element e) const;

  // Element reached from `e` by right multiplication by generator k.
  Element right_step(Element e, std::size_t k) const {
    return right_table_[e * generators_.size() + k];
  }

 private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Element> generator_elements_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, Element, PermutationHash> index_;
  std::vector<Element> right_table_;
  std::vector<Element> tree_parent_;
  std::vector<std::size_t> tree_generator_;
  std::vector<Element> inverses_;
};

GroupPtr group_from_generators(std::vector<Permutation> perms,
                               std::size_t degree = 0,
                               std::size_t order_bound =
                                   FiniteGroup::kDefaultOrderBound);

// A subgroup of a parent group, stored as parent element indices.
class Subgroup {
 public:
  using Element = FiniteGroup::Element;

  // Closure of `generators` inside `parent`.
  Subgroup(GroupPtr parent, std::vector<Element> generators);

  const GroupPtr& parent() const noexcept { return parent_; }
  std::size_t order() const noexcept { return members_.size(); }
  const std::vector<Element>& members() const noexcept { return members_; }
  const std::vector<Element>& generators() const noexcept {
    return generators_;
  }
  bool contains(Element e) const { return membership_[e]; }
  bool is_trivial() const noexcept { return members_.size() == 1; }

  // The subgroup as a permutation group in its own right.
  GroupPtr as_group() const;

 private:
  GroupPtr parent_;
  std::vector<Element> generators_;
  std::vector<Element> members_;
  std::vector<bool> membership_;
};

Subgroup whole_group(const GroupPtr& g);
Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
bool is_normal(const Subgroup& n);

class GroupHom {
 public:
  using Element = FiniteGroup::Element;

  GroupHom(GroupPtr source, GroupPtr target,
           std::vector<Element> generator_images, std::vector<Element> table)
      : source_(std::move(source)),
        target_(std::move(target)),
        generator_images_(std::move(generator_images)),
        table_(std::move(table)) {}

  const GroupPtr& source() const noexcept { return source_; }
  const GroupPtr& target() const noexcept { return target_; }
  const std::vector<Element>& generator_images() const noexcept {
    return generator_images_;
  }
  Element operator()(Element e) const { return table_[e]; }
  bool is_surjective() const;

 private:
  GroupPtr source_;
  GroupPtr target_;
  std::vector<Element> generator_images_;
  std::vector<Element> table_;
};

// Checks the assignment along every edge of the Cayley graph of `src`, which
// is the full set of relations of its Cayley-graph presentation.
GroupHom homomorphism_from_images(GroupPtr src, GroupPtr dst,
                                  std::span<const Permutation> images);
GroupHom homomorphism_from_elements(GroupPtr src, GroupPtr dst,
                                    std::vector<FiniteGroup::Element> images);

Subgroup kernel(const GroupHom& h);
Subgroup image(const GroupHom& h);

struct Quotient {
  GroupPtr group;
  GroupHom projection;
};

// G/N as a permutation group on the left cosets of N. Throws NotNormal.
Quotient quotient(const GroupPtr& g, const Subgroup& n);

Subgroup centralizer(const GroupPtr& g, FiniteGroup::Element a);

// Least h (by element index) with h a h^-1 = b.
std::optional<FiniteGroup::Element> conjugating_element(
    const FiniteGroup& g, FiniteGroup::Element a, FiniteGroup::Element b);

// One representative per left coset xH, in order of first appearance by
// element index; the identity represents H itself.
std::vector<FiniteGroup::Element> coset_representatives(const FiniteGroup& g,
                                                        const Subgroup& h);

}  // namespace pq
