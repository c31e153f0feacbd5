#include <algorithm>

#include "pq/error.hpp"
#include "pq/perm_groups.hpp"

namespace pq {

using Element = FiniteGroup::Element;

Subgroup::Subgroup(GroupPtr parent, std::vector<Element> generators)
    : parent_(std::move(parent)), generators_(std::move(generators)) {
  const auto& g = *parent_;
  membership_.assign(g.order(), false);
  membership_[g.identity()] = true;
  members_.push_back(g.identity());
  for (std::size_t cur = 0; cur < members_.size(); ++cur) {
    for (Element s : generators_) {
      Element next = g.multiply(members_[cur], s);
      if (!membership_[next]) {
        membership_[next] = true;
        members_.push_back(next);
      }
    }
  }
  std::sort(members_.begin(), members_.end());
}

GroupPtr Subgroup::as_group() const {
  std::vector<Permutation> perms;
  perms.reserve(generators_.size());
  for (Element s : generators_)
    perms.push_back(parent_->element(s));
  return std::make_shared<const FiniteGroup>(parent_->degree(), std::move(perms));
}

Subgroup whole_group(const GroupPtr& g) {
  std::vector<Element> gens;
  for (std::size_t k = 0; k < g->num_generators(); ++k)
    gens.push_back(g->generator(k));
  return Subgroup(g, std::move(gens));
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup(g, {}); }

namespace {

// Greedy generating set for a membership set: scan elements by index and keep
// each one not yet generated.
Subgroup subgroup_from_members(const GroupPtr& g, const std::vector<bool>& in) {
  std::vector<Element> gens;
  Subgroup current(g, {});
  for (Element e = 0; e < g->order(); ++e) {
    if (in[e] && !current.contains(e)) {
      gens.push_back(e);
      current = Subgroup(g, gens);
    }
  }
  return current;
}

}  // namespace

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<bool> in(a.parent()->order(), false);
  for (Element e : a.members())
    if (b.contains(e))
      in[e] = true;
  return subgroup_from_members(a.parent(), in);
}

bool is_normal(const Subgroup& n) {
  const auto& g = *n.parent();
  for (std::size_t k = 0; k < g.num_generators(); ++k)
    for (Element s : n.generators())
      if (!n.contains(g.conjugate(g.generator(k), s)))
        return false;
  return true;
}

bool GroupHom::is_surjective() const {
  std::vector<bool> hit(target_->order(), false);
  std::size_t count = 0;
  for (Element e : table_)
    if (!hit[e]) {
      hit[e] = true;
      ++count;
    }
  return count == target_->order();
}

GroupHom homomorphism_from_elements(GroupPtr src, GroupPtr dst,
                                    std::vector<Element> images) {
  if (images.size() != src->num_generators())
    throw NotAHomomorphism("expected " + std::to_string(src->num_generators()) +
                           " generator images, got " +
                           std::to_string(images.size()));
  constexpr Element kUnset = static_cast<Element>(-1);
  std::vector<Element> table(src->order(), kUnset);
  table[src->identity()] = dst->identity();
  // Elements are numbered breadth-first, so every element's tree parent is
  // assigned before the element itself is reached as a product.
  for (Element e = 0; e < src->order(); ++e) {
    for (std::size_t k = 0; k < src->num_generators(); ++k) {
      Element next = src->right_step(e, k);
      Element value = dst->multiply(table[e], images[k]);
      if (table[next] == kUnset)
        table[next] = value;
      else if (table[next] != value)
        throw NotAHomomorphism(
            "generator images violate a relation of the source group");
    }
  }
  return GroupHom(std::move(src), std::move(dst), std::move(images),
                  std::move(table));
}

GroupHom homomorphism_from_images(GroupPtr src, GroupPtr dst,
                                  std::span<const Permutation> images) {
  std::vector<Element> elems;
  elems.reserve(images.size());
  for (const auto& p : images) {
    auto e = dst->find(p);
    if (!e)
      throw NotAHomomorphism("image " + p.to_cycles() +
                             " does not lie in the target group");
    elems.push_back(*e);
  }
  return homomorphism_from_elements(std::move(src), std::move(dst),
                                    std::move(elems));
}

Subgroup kernel(const GroupHom& h) {
  std::vector<bool> in(h.source()->order(), false);
  for (Element e = 0; e < h.source()->order(); ++e)
    in[e] = h(e) == FiniteGroup::identity();
  return subgroup_from_members(h.source(), in);
}

Subgroup image(const GroupHom& h) {
  return Subgroup(h.target(), h.generator_images());
}

Quotient quotient(const GroupPtr& g, const Subgroup& n) {
  if (n.parent() != g)
    throw NotNormal("subgroup does not belong to the given group");
  if (!is_normal(n))
    throw NotNormal("subgroup is not normal");

  auto reps = coset_representatives(*g, n);
  std::vector<std::size_t> coset_of(g->order());
  for (std::size_t c = 0; c < reps.size(); ++c)
    for (Element m : n.members())
      coset_of[g->multiply(reps[c], m)] = c;

  // Each generator acts on the left cosets by left multiplication.
  std::vector<Permutation> perms;
  for (std::size_t k = 0; k < g->num_generators(); ++k) {
    std::vector<Point> images(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c)
      images[c] = static_cast<Point>(coset_of[g->multiply(g->generator(k), reps[c])]);
    perms.emplace_back(std::move(images));
  }
  auto q = std::make_shared<const FiniteGroup>(reps.size(), perms);
  auto proj = homomorphism_from_images(g, q, perms);
  return {q, std::move(proj)};
}

Subgroup centralizer(const GroupPtr& g, Element a) {
  std::vector<bool> in(g->order(), false);
  for (Element h = 0; h < g->order(); ++h)
    in[h] = g->multiply(h, a) == g->multiply(a, h);
  return subgroup_from_members(g, in);
}

std::optional<Element> conjugating_element(const FiniteGroup& g, Element a,
                                           Element b) {
  for (Element h = 0; h < g.order(); ++h)
    if (g.conjugate(h, a) == b)
      return h;
  return std::nullopt;
}

std::vector<Element> coset_representatives(const FiniteGroup& g,
                                           const Subgroup& h) {
  std::vector<bool> covered(g.order(), false);
  std::vector<Element> reps;
  for (Element x = 0; x < g.order(); ++x) {
    if (covered[x])
      continue;
    reps.push_back(x);
    for (Element m : h.members())
      covered[g.multiply(x, m)] = true;
  }
  return reps;
}

}  // namespace pq
