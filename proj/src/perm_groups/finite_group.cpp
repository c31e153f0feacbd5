#include <algorithm>
#include <deque>

#include "pq/error.hpp"
#include "pq/perm_groups.hpp"

namespace pq {

FiniteGroup::FiniteGroup(std::size_t degree, std::vector<Permutation> generators,
                         std::size_t order_bound)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree_ == 0)
    throw DegreeMismatch("a permutation group needs degree >= 1");
  for (const auto& g : generators_)
    if (g.degree() != degree_)
      throw DegreeMismatch("generator of degree " + std::to_string(g.degree()) +
                           " in a group of degree " + std::to_string(degree_));

  const std::size_t k = generators_.size();
  elements_.push_back(Permutation::identity(degree_));
  index_.emplace(elements_.back(), 0);
  tree_parent_.push_back(0);
  tree_generator_.push_back(0);

  for (std::size_t cur = 0; cur < elements_.size(); ++cur) {
    for (std::size_t j = 0; j < k; ++j) {
      Permutation next = elements_[cur] * generators_[j];
      auto [it, inserted] = index_.emplace(next, elements_.size());
      if (inserted) {
        if (elements_.size() >= order_bound)
          throw OrderBoundExceeded("group order exceeds the bound " +
                                   std::to_string(order_bound));
        elements_.push_back(std::move(next));
        tree_parent_.push_back(cur);
        tree_generator_.push_back(j);
      }
      right_table_.push_back(it->second);
    }
  }

  generator_elements_.reserve(k);
  for (std::size_t j = 0; j < k; ++j)
    generator_elements_.push_back(right_table_[j]);

  inverses_.resize(elements_.size());
  for (std::size_t e = 0; e < elements_.size(); ++e)
    inverses_[e] = index_.at(elements_[e].inverse());
}

std::optional<FiniteGroup::Element> FiniteGroup::find(const Permutation& p) const {
  if (p.degree() != degree_)
    return std::nullopt;
  auto it = index_.find(p);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

FiniteGroup::Element FiniteGroup::index_of(const Permutation& p) const {
  auto e = find(p);
  if (!e)
    throw NotAMember("permutation " + p.to_cycles() + " is not in the group");
  return *e;
}

FiniteGroup::Element FiniteGroup::multiply(Element a, Element b) const {
  // Walk b's tree word from a; words are short at desk scale.
  std::size_t path[64];
  std::size_t len = 0;
  std::vector<std::size_t> long_path;
  for (Element x = b; x != 0; x = tree_parent_[x]) {
    if (len < 64)
      path[len++] = tree_generator_[x];
    else
      long_path.push_back(tree_generator_[x]);
  }
  const std::size_t k = generators_.size();
  Element cur = a;
  for (auto it = long_path.rbegin(); it != long_path.rend(); ++it)
    cur = right_table_[cur * k + *it];
  // long_path holds the *first* letters when the word exceeds 64 symbols.
  for (std::size_t i = len; i-- > 0;)
    cur = right_table_[cur * k + path[i]];
  return cur;
}

FiniteGroup::Element FiniteGroup::power(Element a, long long k) const {
  if (k < 0) {
    a = inverse(a);
    k = -k;
  }
  Element result = identity();
  Element base = a;
  while (k > 0) {
    if (k & 1)
      result = multiply(result, base);
    base = multiply(base, base);
    k >>= 1;
  }
  return result;
}

FiniteGroup::Element FiniteGroup::conjugate(Element h, Element a) const {
  return multiply(multiply(h, a), inverse(h));
}

std::size_t FiniteGroup::element_order(Element a) const {
  std::size_t n = 1;
  for (Element x = a; x != identity(); x = multiply(x, a))
    ++n;
  return n;
}

std::vector<std::size_t> FiniteGroup::word(Element e) const {
  std::vector<std::size_t> w;
  for (Element x = e; x != 0; x = tree_parent_[x])
    w.push_back(tree_generator_[x]);
  std::reverse(w.begin(), w.end());
  return w;
}

GroupPtr group_from_generators(std::vector<Permutation> perms, std::size_t degree,
                               std::size_t order_bound) {
  if (degree == 0) {
    if (perms.empty())
      throw DegreeMismatch("cannot infer the degree of a group without generators");
    degree = perms.front().degree();
  }
  return std::make_shared<const FiniteGroup>(degree, std::move(perms), order_bound);
}

}  // namespace pq
