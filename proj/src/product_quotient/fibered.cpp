#include <algorithm>
#include <set>

#include "pq/error.hpp"
#include "pq/product_quotient.hpp"

namespace pq {

Word element_word(const FiniteGroup& g, Element e) {
  std::vector<Letter> raw;
  for (std::size_t k : g.word(e))
    raw.push_back({static_cast<int>(k), 1});
  return Word::free_reduce(raw);
}

Presentation finite_group_presentation(const FiniteGroup& g, const std::vector<std::string>& names,
                                       std::size_t budget) {
  if (names.size() != g.num_generators())
    throw Error("need one name per generator");
  // Power relators first, then one relator per non-tree edge of the Cayley
  // graph; together they present G.
  std::vector<Word> candidates;
  std::set<Word> seen;
  auto add = [&](Word w) {
    w = w.cyclically_reduced();
    if (!w.empty() && seen.insert(w).second && seen.insert(w.inverse()).second)
      candidates.push_back(std::move(w));
  };
  for (std::size_t k = 0; k < g.num_generators(); ++k)
    add(Word::generator(static_cast<int>(k), static_cast<int>(g.element_order(g.generator(k)))));
  for (Element e = 0; e < g.order(); ++e)
    for (std::size_t k = 0; k < g.num_generators(); ++k) {
      Element f = g.right_step(e, k);
      add(element_word(g, e) * Word::generator(static_cast<int>(k)) * element_word(g, f).inverse());
    }

  // Drop relators from the back while the enumeration still closes at |G|.
  std::vector<bool> keep(candidates.size(), true);
  const std::size_t limit = std::min(budget, 64 * g.order() + 256);
  for (std::size_t i = candidates.size(); i-- > 0;) {
    keep[i] = false;
    Presentation trial(names);
    for (std::size_t j = 0; j < candidates.size(); ++j)
      if (keep[j])
        trial.add_relator(candidates[j]);
    try {
      if (todd_coxeter(trial, {}, limit).index() == g.order())
        continue;
    } catch (const CosetOverflow&) {
    }
    keep[i] = true;
  }
  Presentation out(names);
  for (std::size_t j = 0; j < candidates.size(); ++j)
    if (keep[j])
      out.add_relator(candidates[j]);
  return out;
}

CurveAction build_curve_action(GroupPtr g, GroupHom p, GeneratingVector v) {
  if (p.source() != g)
    throw InvalidVector("projection is not defined on the acting group");
  if (!p.is_surjective())
    throw InvalidVector("projection is not surjective");
  if (v.target != p.target())
    throw InvalidVector("generating vector lives in a different group than the projection's target");
  auto check = validate_generating_vector(v);
  if (!check.ok)
    throw InvalidVector(check.violation);
  long long genus = riemann_hurwitz_genus(v.target->order(), v.signature);
  Subgroup k = kernel(p);
  return CurveAction{std::move(g), std::move(p), std::move(k), std::move(v), genus};
}

namespace {

// Splits an ambient word into the letters of the block [lo, hi), renumbered
// from 0. In a direct product, letters of different blocks commute.
Word block_letters(const Word& w, int lo, int hi) {
  std::vector<Letter> raw;
  for (const auto& l : w.letters())
    if (l.generator >= lo && l.generator < hi)
      raw.push_back({l.generator - lo, l.exponent});
  return Word::free_reduce(raw);
}

Element evaluate_in(const FiniteGroup& g, const std::vector<Element>& images, const Word& w) {
  return evaluate_word(g, images, w);
}

bool generates_group(const GroupPtr& g, const std::vector<Element>& elements) {
  return Subgroup(g, elements).order() == g->order();
}

}  // namespace

Word SigmaGroup::rewrite(const Word& ambient_word) const {
  return simplified.map(schreier->rewrite(ambient_word));
}

Word SigmaGroup::pair_word(const FiniteGroup& g, Element x, const Word& t) const {
  return element_word(g, x) * shift(t, static_cast<int>(g_generators));
}

SigmaGroup sigma_presentation(const CurveAction& a, const Presentation& g_presentation,
                              const PipelineOptions& opt) {
  const FiniteGroup& g = *a.group;
  const FiniteGroup& h = *a.target();
  Presentation t = orbifold_presentation(a.signature());
  SigmaGroup out;
  out.g_generators = g_presentation.num_generators();
  out.ambient = direct_product_presentation({g_presentation, t});
  const std::size_t ng = out.g_generators;
  const std::size_t nt = t.num_generators();

  // Right cosets of Sigma are labelled by p(g)^-1 phi(t) in H.
  std::vector<std::vector<std::uint32_t>> actions;
  for (std::size_t k = 0; k < ng; ++k) {
    Element s = h.inverse(a.projection(g.generator(k)));
    std::vector<std::uint32_t> map(h.order());
    for (Element x = 0; x < h.order(); ++x)
      map[x] = static_cast<std::uint32_t>(h.multiply(s, x));
    actions.push_back(std::move(map));
  }
  auto phi = a.phi_images();
  for (std::size_t k = 0; k < nt; ++k) {
    std::vector<std::uint32_t> map(h.order());
    for (Element x = 0; x < h.order(); ++x)
      map[x] = static_cast<std::uint32_t>(h.multiply(x, phi[k]));
    actions.push_back(std::move(map));
  }
  CosetTable table = coset_table_from_action(ng + nt, actions, 0);
  if (table.index() != h.order())
    throw ConsistencyError("Sigma has index " + std::to_string(table.index()) + ", expected " +
                           std::to_string(h.order()));
  out.schreier = std::make_shared<const SubgroupPresentation>(out.ambient, std::move(table));
  out.simplified = tietze_reduce(out.schreier->presentation(), opt.tietze_steps);

  std::vector<Element> g_images;
  for (std::size_t k = 0; k < ng; ++k)
    g_images.push_back(g.generator(k));
  for (int k : out.simplified.kept) {
    const Word& amb = out.schreier->ambient_word(k);
    out.into_ambient.push_back(amb);
    out.psi.push_back(evaluate_in(g, g_images, block_letters(amb, 0, static_cast<int>(ng))));
    out.q.push_back(block_letters(amb, static_cast<int>(ng), static_cast<int>(ng + nt)));
  }
  if (!generates_group(a.group, out.psi))
    throw ConsistencyError("psi is not surjective onto G");
  return out;
}

Word GTilde::rewrite(const std::vector<Word>& sigma_words) const {
  Word w;
  for (std::size_t i = 0; i < sigma_words.size(); ++i)
    w = w * shift(sigma_words[i], static_cast<int>(offsets[i]));
  return simplified.map(schreier->rewrite(w));
}

GTilde gtilde_presentation(const std::vector<CurveAction>& actions,
                           const std::vector<SigmaGroup>& sigmas, const PipelineOptions& opt) {
  if (actions.empty() || actions.size() != sigmas.size())
    throw Error("need one Sigma per curve action, and at least one");
  const FiniteGroup& g = *actions.front().group;
  const std::size_t n = sigmas.size();
  GTilde out;
  std::vector<Presentation> factors;
  std::size_t total = 0;
  for (const auto& s : sigmas) {
    out.offsets.push_back(total);
    total += s.presentation().num_generators();
    factors.push_back(s.presentation());
  }
  out.ambient = direct_product_presentation(factors);

  // Cosets are labelled by (psi_1^-1 psi_2, ..., psi_1^-1 psi_n) in G^(n-1),
  // encoded in base |G|.
  const std::size_t order = g.order();
  std::size_t points = 1;
  for (std::size_t i = 1; i < n; ++i) {
    if (points > (std::size_t{1} << 26) / order)
      throw BoundExceeded("|G|^(n-1) is too large for the fibered-product coset table");
    points *= order;
  }
  auto decode = [&](std::size_t x) {
    std::vector<Element> t(n, 0);
    for (std::size_t i = 1; i < n; ++i) {
      t[i] = x % order;
      x /= order;
    }
    return t;
  };
  auto encode = [&](const std::vector<Element>& t) {
    std::size_t x = 0;
    for (std::size_t i = n; i-- > 1;)
      x = x * order + t[i];
    return x;
  };
  std::vector<std::vector<std::uint32_t>> maps;
  for (std::size_t i = 0; i < n; ++i)
    for (Element s : sigmas[i].psi) {
      std::vector<std::uint32_t> map(points);
      for (std::size_t x = 0; x < points; ++x) {
        auto t = decode(x);
        if (i == 0)
          for (std::size_t j = 1; j < n; ++j)
            t[j] = g.multiply(g.inverse(s), t[j]);
        else
          t[i] = g.multiply(t[i], s);
        map[x] = static_cast<std::uint32_t>(encode(t));
      }
      maps.push_back(std::move(map));
    }
  CosetTable table = coset_table_from_action(total, maps, 0);
  if (table.index() != points)
    throw ConsistencyError("Gt has index " + std::to_string(table.index()) + ", expected " +
                           std::to_string(points));
  out.schreier = std::make_shared<const SubgroupPresentation>(out.ambient, std::move(table));
  out.simplified = tietze_reduce(out.schreier->presentation(), opt.tietze_steps);

  out.q.assign(n, {});
  for (int k : out.simplified.kept) {
    const Word& amb = out.schreier->ambient_word(k);
    std::optional<Element> common;
    for (std::size_t i = 0; i < n; ++i) {
      int lo = static_cast<int>(out.offsets[i]);
      int hi = lo + static_cast<int>(sigmas[i].presentation().num_generators());
      Word part = block_letters(amb, lo, hi);
      Element v = evaluate_in(g, sigmas[i].psi, part);
      if (common && *common != v)
        throw ConsistencyError("Gt generator has unequal images in G");
      common = v;
      out.q[i].push_back(substitute(part, sigmas[i].q));
    }
    out.psi.push_back(*common);
  }
  if (!generates_group(actions.front().group, out.psi))
    throw ConsistencyError("Psi is not surjective onto G");
  return out;
}

}  // namespace pq
