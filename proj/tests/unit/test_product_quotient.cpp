#include <algorithm>

#include "doctest.h"
#include "pq/error.hpp"
#include "pq/product_quotient.hpp"

using namespace pq;

namespace {

GroupPtr cyclic(std::size_t n) {
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i)
    img[i] = static_cast<Point>((i + 1) % n);
  return group_from_generators({Permutation(img)});
}

GroupPtr klein() {
  return group_from_generators(
      {Permutation::from_cycles(4, {{0, 1}}), Permutation::from_cycles(4, {{2, 3}})});
}

GroupPtr s3() {
  return group_from_generators(
      {Permutation::from_cycles(3, {{0, 1, 2}}), Permutation::from_cycles(3, {{0, 1}})});
}

GroupHom identity_hom(const GroupPtr& g) {
  std::vector<Element> img;
  for (std::size_t k = 0; k < g->num_generators(); ++k)
    img.push_back(g->generator(k));
  return homomorphism_from_elements(g, g, img);
}

std::vector<std::string> names_for(const GroupPtr& g) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < g->num_generators(); ++k)
    out.push_back("g" + std::to_string(k + 1));
  return out;
}

CurveAction faithful(const GroupPtr& g, const Signature& s, std::size_t pick = 0) {
  auto vs = enumerate_generating_vectors(g, s);
  REQUIRE(vs.size() > pick);
  return build_curve_action(g, identity_hom(g), vs[pick]);
}

CurveAction kummer_factor(const GroupPtr& z2) {
  auto s = z2->generator(0);
  return build_curve_action(z2, identity_hom(z2), {z2, {0, {2, 2, 2, 2}}, {}, {}, {s, s, s, s}});
}

CurveAction free_genus3(const GroupPtr& z2) {
  auto s = z2->generator(0);
  return build_curve_action(z2, identity_hom(z2), {z2, {2, {}}, {s, 0}, {0, 0}, {}});
}

}  // namespace

TEST_CASE("curve actions") {
  auto z2 = cyclic(2);
  auto a = kummer_factor(z2);
  CHECK(a.genus == 1);
  CHECK(a.kernel.is_trivial());

  auto one = group_from_generators({Permutation::identity(1)});
  auto trivial = homomorphism_from_elements(z2, one, {0});
  auto b = build_curve_action(z2, trivial, {one, {2, {}}, {0, 0}, {0, 0}, {}});
  CHECK(b.genus == 2);
  CHECK(b.kernel.order() == 2);

  auto v = klein();
  auto to_z2 = homomorphism_from_elements(v, z2, {z2->generator(0), 0});
  auto s = z2->generator(0);
  auto c = build_curve_action(v, to_z2, {z2, {0, {2, 2, 2, 2}}, {}, {}, {s, s, s, s}});
  CHECK(c.kernel.order() == 2);

  CHECK_THROWS_AS(build_curve_action(z2, identity_hom(z2), {z2, {0, {2, 2, 2}}, {}, {}, {s, s, s}}),
                  InvalidVector);
}

TEST_CASE("Sigma and Gt indices") {
  auto z2 = cyclic(2);
  auto a = kummer_factor(z2);
  auto gp = finite_group_presentation(*z2, names_for(z2), 1000);
  CHECK(todd_coxeter(gp, {}, 100).index() == 2);
  auto sigma = sigma_presentation(a, gp);
  CHECK(sigma.index() == 2);
  // psi on the abelianization: Sigma maps onto G.
  CHECK(Subgroup(z2, sigma.psi).order() == 2);

  auto one = group_from_generators({Permutation::identity(1)});
  auto b = build_curve_action(z2, homomorphism_from_elements(z2, one, {0}),
                              {one, {1, {}}, {0}, {0}, {}});
  CHECK(sigma_presentation(b, gp).index() == 1);

  auto gt1 = gtilde_presentation({a}, {sigma});
  CHECK(gt1.index() == 1);
  auto gt2 = gtilde_presentation({a, a}, {sigma, sigma});
  CHECK(gt2.index() == 2);
  CHECK(Subgroup(z2, gt2.psi).order() == 2);
}

TEST_CASE("Kummer surface") {
  auto z2 = cyclic(2);
  auto a = kummer_factor(z2);
  ProductQuotient pq(z2, names_for(z2), {a, a});
  const auto& tor = pq.torsion();
  CHECK(tor.per_factor[1].size() == 32);
  CHECK(tor.per_factor[0].size() == 32);
  for (const auto& t : tor.all)
    CHECK(in_fibered_product(pq.actions(), t));

  auto f = freeness_check(pq.actions());
  CHECK(!f.free);
  CHECK(f.witness == z2->generator(0));

  CHECK(todd_coxeter(pq.pi1().presentation(), {}, 10'000).index() == 1);
  auto report = pq.structure();
  for (const auto& s : report.quotient_signatures)
    CHECK(s == Signature{0, {}});
  REQUIRE(report.t_index);
  CHECK(*report.t_index == 1);
  CHECK(report.abelianization.is_trivial());
  CHECK(report.verification.outcome == VerificationReport::Outcome::Finite);
  CHECK(report.verification.order == BigInt(1));
}

TEST_CASE("free action on two genus-3 curves") {
  auto z2 = cyclic(2);
  auto a = free_genus3(z2);
  CHECK(a.genus == 3);
  ProductQuotient pq(z2, names_for(z2), {a, a});
  CHECK(freeness_check(pq.actions()).free);
  CHECK(pq.torsion().all.empty());
  CHECK(pq.psi_descends());
  auto report = pq.structure();
  CHECK(report.quotient_signatures[0] == Signature{2, {}});
  CHECK(report.e_order_bound == BigInt(1));
  const auto& v = report.verification;
  CHECK(v.outcome == VerificationReport::Outcome::Found);
  CHECK(v.index == 2);
  CHECK(v.free_rank == 12);
  CHECK(v.genera == std::vector<long long>{3, 3});

  PipelineOptions zero;
  zero.index_bound = 0;
  ProductQuotient none(z2, names_for(z2), {a, a}, zero);
  CHECK(none.verify().outcome == VerificationReport::Outcome::Inconclusive);
}

TEST_CASE("one curve: the quotient curve's surface group") {
  auto z2 = cyclic(2);
  auto a = faithful(z2, {0, {2, 2, 2, 2, 2, 2}});
  CHECK(a.genus == 2);
  auto p = pi1_presentation(z2, {a});
  CHECK(todd_coxeter(p, {}, 100).index() == 1);

  for (const auto& [g, s] : std::vector<std::pair<GroupPtr, Signature>>{
           {cyclic(3), {0, {3, 3, 3}}}, {cyclic(3), {1, {3, 3}}}, {s3(), {0, {2, 2, 3}}}, {s3(), {1, {3}}}, {cyclic(2), {1, {2, 2}}}}) {
    CAPTURE(s.to_string());
    auto inv = abelian_invariants(pi1_presentation(g, {faithful(g, s)}));
    CHECK(inv.free_rank == 2 * static_cast<std::size_t>(s.genus));
    CHECK(inv.is_torsion_free());
  }
}

TEST_CASE("trivially acting factor contributes pure-kernel torsion") {
  auto z2 = cyclic(2);
  auto one = group_from_generators({Permutation::identity(1)});
  auto b = build_curve_action(z2, homomorphism_from_elements(z2, one, {0}),
                              {one, {1, {}}, {0}, {0}, {}});
  auto tor = torsion_generators({b});
  REQUIRE(tor.pure_kernel.size() == 1);
  CHECK(tor.pure_kernel[0].g == z2->generator(0));
  CHECK(!freeness_check({b}).free);
}

TEST_CASE("freeness agrees with an empty torsion list") {
  std::vector<GroupPtr> groups{cyclic(2), cyclic(3), klein(), s3()};
  std::vector<Signature> sigs{{0, {2, 2, 2, 2}}, {1, {}}, {0, {3, 3, 3}}, {2, {}},
                              {0, {2, 2, 3}},    {1, {2}}, {0, {2, 2, 2, 2, 2}}};
  std::size_t checked = 0;
  for (const auto& g : groups) {
    std::vector<CurveAction> pool;
    for (const auto& s : sigs) {
      auto vs = enumerate_generating_vectors(g, s);
      for (std::size_t k = 0; k < vs.size() && k < 2; ++k)
        pool.push_back(build_curve_action(g, identity_hom(g), vs[k]));
    }
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = i; j < pool.size(); ++j) {
        std::vector<CurveAction> as{pool[i], pool[j]};
        auto tor = torsion_generators(as);
        CHECK(freeness_check(as).free == tor.all.empty());
        for (const auto& t : tor.all)
          CHECK(in_fibered_product(as, t));
        ++checked;
      }
  }
  CHECK(checked > 20);
}

TEST_CASE("abelianization ignores the order of torsion relators") {
  auto g = s3();
  auto a = faithful(g, {0, {2, 2, 3}});
  auto b = faithful(g, {0, {2, 2, 2, 2}});
  ProductQuotient pq(g, names_for(g), {a, b});
  auto words = pq.pi1().torsion_words;
  std::reverse(words.begin(), words.end());
  auto direct = quotient_presentation(pq.gtilde().presentation(), words);
  CHECK(abelian_invariants(direct) == pq.abelianization());
  CHECK(abelian_invariants(tietze_simplify(direct)) == pq.abelianization());
  CHECK(pq.gtilde().index() == g->order());
}
