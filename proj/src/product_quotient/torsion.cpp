#include <map>
#include <set>

#include "pq/error.hpp"
#include "pq/product_quotient.hpp"

namespace pq {

Word TorsionFactor::word(const Signature& s) const {
  if (exponent == 0)
    return Word();
  return z * Word::generator(s.c(static_cast<std::size_t>(period)), exponent) * z.inverse();
}

namespace {

// A canonical word in T's generators for every element of H: breadth-first
// search over right multiplication by the generator images.
std::vector<Word> section(const FiniteGroup& h, const std::vector<Element>& phi) {
  std::vector<Word> out(h.order());
  std::vector<bool> seen(h.order(), false);
  std::vector<Element> queue{FiniteGroup::identity()};
  seen[0] = true;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::size_t k = 0; k < phi.size(); ++k) {
      Element next = h.multiply(queue[i], phi[k]);
      if (!seen[next]) {
        seen[next] = true;
        out[next] = out[queue[i]] * Word::generator(static_cast<int>(k));
        queue.push_back(next);
      }
    }
  if (queue.size() != h.order())
    throw InvalidVector("vector images do not generate the target group");
  return out;
}

struct FactorData {
  const CurveAction* action;
  std::vector<Element> phi;
  std::vector<Word> section;
  std::map<Element, std::vector<Element>> centralizers;

  const std::vector<Element>& centralizer_of(Element x) {
    auto it = centralizers.find(x);
    if (it == centralizers.end())
      it = centralizers.emplace(x, centralizer(action->target(), x).members()).first;
    return it->second;
  }

  Element power_of_period(std::size_t j, int l) const {
    const auto& s = action->signature();
    return action->target()->power(phi[static_cast<std::size_t>(s.c(j))], l);
  }

  // Every factor z d^l z^-1 (l >= 0, one representative z per coset of R
  // in the right preimage) with image y in H.
  std::vector<TorsionFactor> factors_over(Element y) {
    const FiniteGroup& h = *action->target();
    const auto& s = action->signature();
    std::vector<TorsionFactor> out;
    if (y == FiniteGroup::identity())
      out.push_back({-1, 0, Word()});
    for (std::size_t j = 0; j < s.periods.size(); ++j)
      for (int l = 1; l < s.periods[j]; ++l) {
        Element x = power_of_period(j, l);
        auto conj = conjugating_element(h, x, y);
        if (!conj)
          continue;
        for (Element c : centralizer_of(x))
          out.push_back({static_cast<int>(j), l, section[h.multiply(*conj, c)]});
      }
    return out;
  }
};

}  // namespace

TorsionSets torsion_generators(const std::vector<CurveAction>& actions) {
  if (actions.empty())
    throw Error("need at least one curve action");
  const FiniteGroup& g = *actions.front().group;
  const std::size_t n = actions.size();
  std::vector<FactorData> data;
  for (const auto& a : actions) {
    auto phi = a.phi_images();
    data.push_back({&a, phi, section(*a.target(), phi), {}});
  }

  TorsionSets out;
  out.per_factor.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    const auto& si = actions[i].signature();
    std::set<std::tuple<Element, std::vector<TorsionFactor>>> seen;
    for (std::size_t j = 0; j < si.periods.size(); ++j)
      for (int l = 1; l < si.periods[j]; ++l) {
        Element target = data[i].power_of_period(j, l);
        for (Element x = 0; x < g.order(); ++x) {
          if (actions[i].projection(x) != target)
            continue;
          std::vector<std::vector<TorsionFactor>> options(n);
          bool empty = false;
          for (std::size_t k = 0; k < n && !empty; ++k) {
            if (k == i)
              options[k] = {{static_cast<int>(j), l, Word()}};
            else
              options[k] = data[k].factors_over(actions[k].projection(x));
            empty = options[k].empty();
          }
          if (empty)
            continue;
          // Cartesian product of the per-factor choices.
          std::vector<std::size_t> pick(n, 0);
          for (;;) {
            TorsionElement t{x, {}, i};
            for (std::size_t k = 0; k < n; ++k)
              t.factors.push_back(options[k][pick[k]]);
            if (seen.insert({t.g, t.factors}).second)
              out.per_factor[i].push_back(std::move(t));
            std::size_t k = 0;
            while (k < n && ++pick[k] == options[k].size())
              pick[k++] = 0;
            if (k == n)
              break;
          }
        }
      }
  }

  for (Element x = 1; x < g.order(); ++x) {
    bool in_all = true;
    for (const auto& a : actions)
      in_all = in_all && a.kernel.contains(x);
    if (in_all)
      out.pure_kernel.push_back({x, std::vector<TorsionFactor>(n), kPureKernel});
  }

  std::set<std::tuple<Element, std::vector<TorsionFactor>>> seen;
  for (const auto& list : out.per_factor)
    for (const auto& t : list)
      if (seen.insert({t.g, t.factors}).second)
        out.all.push_back(t);
  for (const auto& t : out.pure_kernel)
    if (seen.insert({t.g, t.factors}).second)
      out.all.push_back(t);
  return out;
}

bool in_fibered_product(const std::vector<CurveAction>& actions, const TorsionElement& t) {
  if (t.factors.size() != actions.size())
    return false;
  for (std::size_t k = 0; k < actions.size(); ++k) {
    const auto& a = actions[k];
    auto phi = a.phi_images();
    Element v = evaluate_word(*a.target(), phi, t.factors[k].word(a.signature()));
    if (v != a.projection(t.g))
      return false;
  }
  return true;
}

FreenessResult freeness_check(const std::vector<CurveAction>& actions) {
  if (actions.empty())
    throw Error("need at least one curve action");
  const FiniteGroup& g = *actions.front().group;
  // fixes[i][y]: y in H_i is conjugate to a power (possibly trivial) of some
  // phi_i(c_ij), i.e. has a fixed point on C_i.
  std::vector<std::vector<bool>> fixes;
  for (const auto& a : actions) {
    const FiniteGroup& h = *a.target();
    std::vector<bool> f(h.order(), false);
    f[FiniteGroup::identity()] = true;
    auto phi = a.phi_images();
    const auto& s = a.signature();
    for (std::size_t j = 0; j < s.periods.size(); ++j)
      for (int l = 1; l < s.periods[j]; ++l) {
        Element x = h.power(phi[static_cast<std::size_t>(s.c(j))], l);
        for (Element y = 0; y < h.order(); ++y)
          f[h.conjugate(y, x)] = true;
      }
    fixes.push_back(std::move(f));
  }
  for (Element x = 1; x < g.order(); ++x) {
    bool all = true;
    for (std::size_t i = 0; i < actions.size() && all; ++i)
      all = fixes[i][actions[i].projection(x)];
    if (all)
      return {false, x};
  }
  return {true, std::nullopt};
}

}  // namespace pq
