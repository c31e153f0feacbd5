#pragma once

// Fundamental groups of quotients (C_1 x ... x C_n)/G of products of curves
// by a diagonal action of a finite group G.
//
// Each factor is described by a CurveAction: a surjection p_i : G -> H_i (its
// kernel K_i acts trivially on C_i) and a generating vector phi_i : T_i -> H_i
// of an orbifold surface group. From these:
//   Sigma_i = G x_{H_i} T_i                       (pairs with p_i(g) = phi_i(t))
//   Gt      = Sigma_1 x_G ... x_G Sigma_n          (equal first coordinates)
//   pi_1(X) = Gt / <<finite-order elements>>
// Every group is carried as a presentation together with word maps back to
// G (psi) and to the T_i (q_i).

#include <cstddef>
#include <memory>
#include <optional>
#include <tuple>
#include <string>
#include <vector>

#include "pq/fp/abelian.hpp"
#include "pq/fp/coset_table.hpp"
#include "pq/fp/presentation.hpp"
#include "pq/fp/reidemeister_schreier.hpp"
#include "pq/fp/tietze.hpp"
#include "pq/orbifold.hpp"
#include "pq/perm_groups.hpp"

namespace pq {

using Element = FiniteGroup::Element;

struct PipelineOptions {
  std::size_t max_cosets = 200'000;
  std::size_t tietze_steps = kDefaultTietzeSteps;
  std::size_t index_bound = 12;
};

// Finite presentation of a permutation group on its own generators, named
// `names`: the relators of the Cayley graph, greedily pruned while coset
// enumeration still recovers |G| within `budget`.
Presentation finite_group_presentation(const FiniteGroup& g, const std::vector<std::string>& names,
                                       std::size_t budget);

// Positive word in the generators evaluating to e.
Word element_word(const FiniteGroup& g, Element e);

struct CurveAction {
  GroupPtr group;             // G
  GroupHom projection;        // p : G -> H
  Subgroup kernel;            // K = ker p
  GeneratingVector vector;    // phi : T -> H
  long long genus = 0;        // genus of the curve C

  const GroupPtr& target() const { return projection.target(); }
  const Signature& signature() const { return vector.signature; }
  // phi on the generators of orbifold_presentation(signature()).
  std::vector<Element> phi_images() const { return vector.images(); }
};

// Throws InvalidVector on a bad vector or non-surjective projection, and
// NonIntegralGenus / NegativeGenus from Riemann-Hurwitz.
CurveAction build_curve_action(GroupPtr g, GroupHom p, GeneratingVector v);

// Sigma_i as a subgroup of G x T_i.
struct SigmaGroup {
  Presentation ambient;        // G x T_i; G's generators come first
  std::size_t g_generators = 0;
  std::shared_ptr<const SubgroupPresentation> schreier;
  TietzeResult simplified;
  // Per generator of simplified.presentation:
  std::vector<Word> into_ambient;
  std::vector<Element> psi;    // value in G
  std::vector<Word> q;         // word in T_i

  const Presentation& presentation() const { return simplified.presentation; }
  std::size_t index() const { return schreier->index(); }
  // Word in Sigma's generators for an ambient word lying in Sigma.
  Word rewrite(const Word& ambient_word) const;
  // Ambient word of the pair (g, t).
  Word pair_word(const FiniteGroup& g, Element x, const Word& t) const;
};

SigmaGroup sigma_presentation(const CurveAction& a, const Presentation& g_presentation,
                              const PipelineOptions& opt = {});

struct GTilde {
  Presentation ambient;          // Sigma_1 x ... x Sigma_n
  std::vector<std::size_t> offsets;
  std::shared_ptr<const SubgroupPresentation> schreier;
  TietzeResult simplified;
  std::vector<Element> psi;              // per generator
  std::vector<std::vector<Word>> q;      // q[i][generator], word in T_i

  const Presentation& presentation() const { return simplified.presentation; }
  std::size_t index() const { return schreier->index(); }
  // Word in Gt's generators for the tuple of Sigma_i-words.
  Word rewrite(const std::vector<Word>& sigma_words) const;
};

GTilde gtilde_presentation(const std::vector<CurveAction>& actions,
                           const std::vector<SigmaGroup>& sigmas, const PipelineOptions& opt = {});

// One coordinate z d^l z^-1 of a torsion element; l = 0 is the trivial factor.
struct TorsionFactor {
  int period = -1;   // index of d among c_1..c_r, -1 when l = 0
  int exponent = 0;  // l
  Word z;            // word in T

  Word word(const Signature& s) const;
  friend bool operator==(const TorsionFactor&, const TorsionFactor&) = default;
  friend auto operator<=>(const TorsionFactor&, const TorsionFactor&) = default;
};

inline constexpr std::size_t kPureKernel = static_cast<std::size_t>(-1);

struct TorsionElement {
  Element g = 0;
  std::vector<TorsionFactor> factors;
  std::size_t distinguished = kPureKernel;  // the index i with z_i trivial

  // Normal form used for deduplication: g and the factors.
  auto key() const { return std::tie(g, factors); }
};

struct TorsionSets {
  std::vector<std::vector<TorsionElement>> per_factor;  // N_i, built separately
  std::vector<TorsionElement> pure_kernel;              // (g, 1, ..., 1), g in all K_i
  std::vector<TorsionElement> all;                      // deduplicated union
};

TorsionSets torsion_generators(const std::vector<CurveAction>& actions);

// phi_j(z_j d_j^l_j z_j^-1) = p_j(g) for every j.
bool in_fibered_product(const std::vector<CurveAction>& actions, const TorsionElement& t);

struct FreenessResult {
  bool free = true;
  std::optional<Element> witness;  // least g != 1 with a fixed point on every factor
};

FreenessResult freeness_check(const std::vector<CurveAction>& actions);

struct Pi1 {
  TietzeResult simplified;          // from Gt plus torsion relators
  std::vector<Word> torsion_words;  // torsion elements as words in Gt's generators

  const Presentation& presentation() const { return simplified.presentation; }
};

struct VerificationReport {
  enum class Outcome { Found, Finite, Inconclusive };
  Outcome outcome = Outcome::Inconclusive;
  std::size_t index = 0;             // Found: [pi_1 : K]
  std::vector<long long> genera;     // Found: h_1, ..., h_n
  std::size_t free_rank = 0;         // Found: rank of H_1(K)
  std::optional<BigInt> order;       // Finite: |pi_1|
  std::string subgroup;              // Found: how K was obtained
  std::size_t candidates_tried = 0;
  bool budget_exhausted = false;     // some candidate ran out of cosets
  std::string detail;

  static const char* name(Outcome o);
};

struct StructureReport {
  std::vector<Signature> quotient_signatures;
  std::vector<KillMap> kill;
  std::optional<std::size_t> t_index;     // index of T in the product of T_i'
  std::size_t t_index_bound = 0;          // t_index when known, else |G|^(n-1)
  std::vector<std::optional<BigInt>> l_closure_orders;  // |<<L^_i>>|, none if unbounded
  std::optional<BigInt> e_order_bound;    // none: unbounded within budget
  FreenessResult freeness;
  AbelianInvariants abelianization;
  VerificationReport verification;
  std::vector<std::string> overflow;      // fields that ran out of coset budget
  std::vector<std::string> warnings;
};

// Stages computed on demand and cached.
class ProductQuotient {
 public:
  ProductQuotient(GroupPtr g, std::vector<std::string> g_names, std::vector<CurveAction> actions,
                  PipelineOptions opt = {});

  const GroupPtr& group() const { return group_; }
  const std::vector<CurveAction>& actions() const { return actions_; }
  const PipelineOptions& options() const { return opt_; }
  std::size_t num_factors() const { return actions_.size(); }

  const Presentation& group_presentation();
  const std::vector<SigmaGroup>& sigmas();
  const GTilde& gtilde();
  const TorsionSets& torsion();
  const Pi1& pi1();
  const AbelianInvariants& abelianization();

  // Gt-word of the tuple (g, t_1, ..., t_n); throws WordNotInSubgroup unless
  // p_i(g) = phi_i(t_i) for all i.
  Word gtilde_word(Element g, const std::vector<Word>& t) const;
  Word gtilde_word(const TorsionElement& t) const;
  // pi_1-word of a Gt-word.
  Word pi1_word(const Word& gtilde_word);
  // theta: the image in T_i of a pi_1-word.
  Word theta(std::size_t i, const Word& pi1_word);
  // Psi: the value in G of a pi_1 generator (well defined only when no
  // torsion relator has nontrivial image; see psi_descends()).
  Element pi1_psi(int generator);
  bool psi_descends();

  // Orbifold groups T_i' = T_i / <<q_i(L_i)>> in T_i's generators.
  const std::vector<Presentation>& quotient_orbifolds();
  const std::vector<Signature>& quotient_signatures();
  const std::vector<KillMap>& kill_maps();

  StructureReport structure();
  VerificationReport verify();

 private:
  void require_pi1();

  GroupPtr group_;
  std::vector<std::string> names_;
  std::vector<CurveAction> actions_;
  PipelineOptions opt_;

  std::optional<Presentation> g_presentation_;
  std::optional<std::vector<SigmaGroup>> sigmas_;
  std::optional<GTilde> gtilde_;
  std::optional<TorsionSets> torsion_;
  std::optional<Pi1> pi1_;
  std::optional<AbelianInvariants> abelianization_;
  std::optional<std::vector<Presentation>> quotient_orbifolds_;
  std::optional<std::vector<Signature>> quotient_signatures_;
  std::optional<std::vector<KillMap>> kill_maps_;
  std::vector<std::vector<Word>> theta_cache_;  // theta_cache_[i][pi1 generator]
};

// Wrappers over ProductQuotient for single stages.
Presentation pi1_presentation(const GroupPtr& g, const std::vector<CurveAction>& actions,
                              const PipelineOptions& opt = {});
StructureReport structure_extension(const GroupPtr& g, const std::vector<CurveAction>& actions,
                                    const PipelineOptions& opt = {});
VerificationReport verify_surface_subgroup(const GroupPtr& g,
                                           const std::vector<CurveAction>& actions,
                                           std::size_t index_bound, std::size_t coset_budget);

}  // namespace pq
