#include <algorithm>
#include <numeric>
#include <set>

#include "pq/error.hpp"
#include "pq/product_quotient.hpp"

namespace pq {

const char* VerificationReport::name(Outcome o) {
  switch (o) {
    case Outcome::Found:
      return "FOUND";
    case Outcome::Finite:
      return "FINITE";
    case Outcome::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "?";
}

ProductQuotient::ProductQuotient(GroupPtr g, std::vector<std::string> g_names,
                                 std::vector<CurveAction> actions, PipelineOptions opt)
    : group_(std::move(g)), names_(std::move(g_names)), actions_(std::move(actions)), opt_(opt) {
  if (actions_.empty())
    throw Error("need at least one curve action");
  for (const auto& a : actions_)
    if (a.group != group_)
      throw Error("every curve action must use the same group G");
  if (names_.size() != group_->num_generators())
    throw Error("need one name per generator of G");
}

const Presentation& ProductQuotient::group_presentation() {
  if (!g_presentation_)
    g_presentation_ = finite_group_presentation(*group_, names_, opt_.max_cosets);
  return *g_presentation_;
}

const std::vector<SigmaGroup>& ProductQuotient::sigmas() {
  if (!sigmas_) {
    std::vector<SigmaGroup> out;
    for (const auto& a : actions_)
      out.push_back(sigma_presentation(a, group_presentation(), opt_));
    sigmas_ = std::move(out);
  }
  return *sigmas_;
}

const GTilde& ProductQuotient::gtilde() {
  if (!gtilde_)
    gtilde_ = gtilde_presentation(actions_, sigmas(), opt_);
  return *gtilde_;
}

const TorsionSets& ProductQuotient::torsion() {
  if (!torsion_)
    torsion_ = torsion_generators(actions_);
  return *torsion_;
}

Word ProductQuotient::gtilde_word(Element g, const std::vector<Word>& t) const {
  std::vector<Word> parts;
  for (std::size_t i = 0; i < actions_.size(); ++i) {
    const auto& s = (*sigmas_)[i];
    parts.push_back(s.rewrite(s.pair_word(*group_, g, t[i])));
  }
  return gtilde_->rewrite(parts);
}

Word ProductQuotient::gtilde_word(const TorsionElement& t) const {
  std::vector<Word> words;
  for (std::size_t i = 0; i < actions_.size(); ++i)
    words.push_back(t.factors[i].word(actions_[i].signature()));
  return gtilde_word(t.g, words);
}

const Pi1& ProductQuotient::pi1() {
  if (!pi1_) {
    gtilde();
    Pi1 out;
    for (const auto& t : torsion().all)
      out.torsion_words.push_back(gtilde_word(t));
    Presentation p = quotient_presentation(gtilde().presentation(), out.torsion_words);
    out.simplified = tietze_reduce(p, opt_.tietze_steps);
    pi1_ = std::move(out);
    theta_cache_.assign(actions_.size(), {});
    for (std::size_t i = 0; i < actions_.size(); ++i)
      for (int k : pi1_->simplified.kept)
        theta_cache_[i].push_back(gtilde_->q[i][static_cast<std::size_t>(k)]);
  }
  return *pi1_;
}

void ProductQuotient::require_pi1() { pi1(); }

const AbelianInvariants& ProductQuotient::abelianization() {
  if (!abelianization_)
    abelianization_ = abelian_invariants(pi1().presentation());
  return *abelianization_;
}

Word ProductQuotient::pi1_word(const Word& gtilde_word) {
  return pi1().simplified.map(gtilde_word);
}

Word ProductQuotient::theta(std::size_t i, const Word& pi1_word) {
  require_pi1();
  return substitute(pi1_word, theta_cache_[i]);
}

Element ProductQuotient::pi1_psi(int generator) {
  const auto& kept = pi1().simplified.kept;
  return gtilde().psi[static_cast<std::size_t>(kept[static_cast<std::size_t>(generator)])];
}

bool ProductQuotient::psi_descends() {
  const auto& p = pi1().presentation();
  std::vector<Element> images;
  for (std::size_t k = 0; k < p.num_generators(); ++k)
    images.push_back(pi1_psi(static_cast<int>(k)));
  for (const auto& r : p.relators())
    if (evaluate_word(*group_, images, r) != FiniteGroup::identity())
      return false;
  return true;
}

const std::vector<KillMap>& ProductQuotient::kill_maps() {
  if (!kill_maps_) {
    // q_i of the torsion elements: each is conjugate to c_ij^l in T_i, and
    // killing a conjugate of c^l is the same as killing c^l.
    std::vector<KillMap> out(actions_.size());
    for (const auto& t : torsion().all)
      for (std::size_t i = 0; i < actions_.size(); ++i) {
        const auto& f = t.factors[i];
        if (f.exponent > 0) {
          auto& list = out[i][static_cast<std::size_t>(f.period)];
          if (std::find(list.begin(), list.end(), f.exponent) == list.end())
            list.push_back(f.exponent);
        }
      }
    for (auto& k : out)
      for (auto& [idx, list] : k)
        std::sort(list.begin(), list.end());
    kill_maps_ = std::move(out);
  }
  return *kill_maps_;
}

const std::vector<Signature>& ProductQuotient::quotient_signatures() {
  if (!quotient_signatures_) {
    std::vector<Signature> out;
    for (std::size_t i = 0; i < actions_.size(); ++i)
      out.push_back(quotient_signature(actions_[i].signature(), kill_maps()[i]));
    quotient_signatures_ = std::move(out);
  }
  return *quotient_signatures_;
}

const std::vector<Presentation>& ProductQuotient::quotient_orbifolds() {
  if (!quotient_orbifolds_) {
    std::vector<Presentation> out;
    for (std::size_t i = 0; i < actions_.size(); ++i) {
      const auto& s = actions_[i].signature();
      std::vector<Word> extra;
      for (const auto& [idx, list] : kill_maps()[i]) {
        long long e = s.periods[idx];
        for (long long x : list)
          e = std::gcd(e, x);
        extra.push_back(Word::generator(s.c(idx), static_cast<int>(e)));
      }
      out.push_back(quotient_presentation(orbifold_presentation(s), extra));
    }
    quotient_orbifolds_ = std::move(out);
  }
  return *quotient_orbifolds_;
}

namespace {

std::string non_hyperbolic_warning(std::size_t i, const Signature& s) {
  return "factor " + std::to_string(i + 1) + ": signature " + s.to_string() +
         " is not hyperbolic";
}

}  // namespace

StructureReport ProductQuotient::structure() {
  StructureReport out;
  const std::size_t n = actions_.size();
  const FiniteGroup& g = *group_;
  for (std::size_t i = 0; i < n; ++i)
    if (!actions_[i].signature().is_hyperbolic())
      out.warnings.push_back(non_hyperbolic_warning(i, actions_[i].signature()));

  out.quotient_signatures = quotient_signatures();
  out.kill = kill_maps();
  out.freeness = freeness_check(actions_);
  out.abelianization = abelianization();

  // Index of T = theta(pi_1) in the product of the T_i'.
  std::size_t g_power = 1;
  for (std::size_t i = 1; i < n; ++i)
    g_power *= g.order();
  {
    Presentation product = direct_product_presentation(quotient_orbifolds());
    std::vector<std::size_t> offsets;
    std::size_t total = 0;
    for (const auto& q : quotient_orbifolds()) {
      offsets.push_back(total);
      total += q.num_generators();
    }
    std::vector<Word> words;
    for (std::size_t k = 0; k < pi1().presentation().num_generators(); ++k) {
      Word w;
      for (std::size_t i = 0; i < n; ++i)
        w = w * shift(theta_cache_[i][k], static_cast<int>(offsets[i]));
      words.push_back(w);
    }
    try {
      out.t_index = todd_coxeter(product, words, opt_.max_cosets).index();
    } catch (const CosetOverflow&) {
      out.overflow.push_back("t_index");
    }
    out.t_index_bound = out.t_index.value_or(g_power);
  }

  // |<<L^_i>>| in Sigma^_i = Sigma_i / N(R_i, L_i), where L_i is the image of
  // the torsion elements in Sigma_i and R_i = ker psi_i.
  std::vector<std::vector<Word>> l_words(n);
  for (const auto& t : torsion().all) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto& s = sigmas()[i];
      Word w = s.rewrite(s.pair_word(g, t.g, t.factors[i].word(actions_[i].signature())));
      if (std::find(l_words[i].begin(), l_words[i].end(), w) == l_words[i].end())
        l_words[i].push_back(w);
    }
  }
  out.l_closure_orders.assign(n, std::nullopt);
  for (std::size_t i = 0; i < n; ++i) {
    if (l_words[i].empty()) {
      out.l_closure_orders[i] = BigInt(1);
      continue;
    }
    const auto& s = sigmas()[i];
    const Presentation& sp = s.presentation();
    std::vector<std::vector<std::uint32_t>> maps;
    for (Element v : s.psi) {
      std::vector<std::uint32_t> map(g.order());
      for (Element x = 0; x < g.order(); ++x)
        map[x] = static_cast<std::uint32_t>(g.multiply(x, v));
      maps.push_back(std::move(map));
    }
    SubgroupPresentation r(sp, coset_table_from_action(sp.num_generators(), maps, 0));
    std::vector<Word> extra;
    for (const auto& h : l_words[i])
      for (const auto& k : r.ambient_words())
        extra.push_back(commutator(h, k));
    Presentation hat = quotient_presentation(sp, extra);
    try {
      std::size_t whole = todd_coxeter(hat, {}, opt_.max_cosets).index();
      std::size_t rest = todd_coxeter(quotient_presentation(hat, l_words[i]), {}, opt_.max_cosets).index();
      out.l_closure_orders[i] = BigInt(whole / rest);
    } catch (const CosetOverflow&) {
      out.overflow.push_back("l_closure_order[" + std::to_string(i) + "]");
    }
  }

  // |E| <= |ker Theta restricted to G^|. Two bounds: the product over i of
  // |K_i| |<<L^_i>>|, and a sum over g in G of the per-factor fibre sizes,
  // where a factor with L_i empty contributes [g in K_i].
  std::optional<BigInt> product_bound = BigInt(1);
  for (std::size_t i = 0; i < n; ++i) {
    if (!out.l_closure_orders[i]) {
      product_bound.reset();
      break;
    }
    *product_bound *= BigInt(actions_[i].kernel.order()) * *out.l_closure_orders[i];
  }
  std::optional<BigInt> fibre_bound = BigInt(0);
  for (Element x = 0; x < g.order() && fibre_bound; ++x) {
    BigInt term = 1;
    bool unknown = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (l_words[i].empty()) {
        if (!actions_[i].kernel.contains(x)) {
          term = 0;
          unknown = false;
          break;
        }
      } else if (out.l_closure_orders[i]) {
        term *= BigInt(actions_[i].kernel.order()) * *out.l_closure_orders[i];
      } else {
        unknown = true;
      }
    }
    if (unknown)
      fibre_bound.reset();
    else
      *fibre_bound += term;
  }
  if (product_bound && fibre_bound)
    out.e_order_bound = std::min(*product_bound, *fibre_bound);
  else if (product_bound)
    out.e_order_bound = product_bound;
  else
    out.e_order_bound = fibre_bound;
  if (!out.e_order_bound)
    out.overflow.push_back("e_order_bound");

  out.verification = verify();
  return out;
}

Presentation pi1_presentation(const GroupPtr& g, const std::vector<CurveAction>& actions,
                              const PipelineOptions& opt) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < g->num_generators(); ++k)
    names.push_back("g" + std::to_string(k + 1));
  ProductQuotient pq(g, names, actions, opt);
  return pq.pi1().presentation();
}

StructureReport structure_extension(const GroupPtr& g, const std::vector<CurveAction>& actions,
                                    const PipelineOptions& opt) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < g->num_generators(); ++k)
    names.push_back("g" + std::to_string(k + 1));
  ProductQuotient pq(g, names, actions, opt);
  return pq.structure();
}

VerificationReport verify_surface_subgroup(const GroupPtr& g,
                                           const std::vector<CurveAction>& actions,
                                           std::size_t index_bound, std::size_t coset_budget) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < g->num_generators(); ++k)
    names.push_back("g" + std::to_string(k + 1));
  PipelineOptions opt;
  opt.index_bound = index_bound;
  opt.max_cosets = coset_budget;
  ProductQuotient pq(g, names, actions, opt);
  return pq.verify();
}

}  // namespace pq
