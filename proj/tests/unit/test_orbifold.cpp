#include <numeric>

#include "doctest.h"
#include "pq/error.hpp"
#include "pq/fp/abelian.hpp"
#include "pq/fp/coset_table.hpp"
#include "pq/orbifold.hpp"

using namespace pq;

namespace {

GroupPtr cyclic(std::size_t n) {
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i)
    img[i] = static_cast<Point>((i + 1) % n);
  return group_from_generators({Permutation(img)});
}

GroupPtr s3() {
  return group_from_generators(
      {Permutation::from_cycles(3, {{0, 1, 2}}), Permutation::from_cycles(3, {{0, 1}})});
}

// Plain count over every tuple of images.
std::size_t brute_force_count(const GroupPtr& h, const Signature& s) {
  const std::size_t n = 2 * static_cast<std::size_t>(s.genus) + s.periods.size();
  std::vector<FiniteGroup::Element> t(n, 0);
  std::size_t count = 0;
  for (;;) {
    GeneratingVector v{h, s, {}, {}, {}};
    for (int j = 0; j < s.genus; ++j) {
      v.a.push_back(t[2 * static_cast<std::size_t>(j)]);
      v.b.push_back(t[2 * static_cast<std::size_t>(j) + 1]);
    }
    v.c.assign(t.begin() + 2 * s.genus, t.end());
    count += validate_generating_vector(v).ok;
    std::size_t k = 0;
    while (k < n && ++t[k] == h->order())
      t[k++] = 0;
    if (k == n)
      break;
  }
  return count;
}

}  // namespace

TEST_CASE("orbifold presentations") {
  auto trivial = orbifold_presentation({0, {}});
  CHECK(trivial.num_generators() == 0);
  CHECK(trivial.relators().empty());
  auto pi2 = abelian_invariants(orbifold_presentation({2, {}}));
  CHECK(pi2.free_rank == 4);
  CHECK(pi2.torsion.empty());
  auto t = abelian_invariants(orbifold_presentation({0, {2, 2, 2, 2}}));
  CHECK(t.free_rank == 0);
  CHECK(t.torsion.size() == 3);
  auto p = orbifold_presentation({1, {3}});
  CHECK(p.names() == std::vector<std::string>{"a1", "b1", "c1"});
  CHECK(p.format(p.relators().back()) == "a1*b1*a1^-1*b1^-1*c1");
}

TEST_CASE("Riemann-Hurwitz") {
  CHECK(riemann_hurwitz_genus(2, {0, {2, 2, 2, 2, 2, 2}}) == 2);
  CHECK(riemann_hurwitz_genus(2, {0, {2, 2, 2, 2}}) == 1);
  CHECK(riemann_hurwitz_genus(1, {3, {}}) == 3);
  for (int g = 0; g <= 50; ++g)
    CHECK(riemann_hurwitz_genus(1, {g, {}}) == g);
  CHECK_THROWS_AS(riemann_hurwitz_genus(2, {0, {2, 2, 2}}), NonIntegralGenus);
  CHECK_THROWS_AS(riemann_hurwitz_genus(3, {0, {2}}), NonIntegralGenus);
  CHECK_THROWS_AS(riemann_hurwitz_genus(2, {0, {}}), NegativeGenus);
  CHECK(riemann_hurwitz_genus(6, {0, {2, 3, 6}}) == 1);
  CHECK_THROWS_AS(riemann_hurwitz_genus(6, {0, {2, 3}}), NonIntegralGenus);
}

TEST_CASE("validate generating vectors") {
  auto z2 = cyclic(2);
  auto s = z2->generator(0);
  GeneratingVector v{z2, {0, {2, 2, 2, 2}}, {}, {}, {s, s, s, s}};
  CHECK(validate_generating_vector(v).ok);
  v.c[2] = 0;
  auto bad = validate_generating_vector(v);
  CHECK(!bad.ok);
  CHECK(bad.violation.find("order 1 != 2") != std::string::npos);

  auto z4 = cyclic(4);
  auto sq = z4->power(z4->generator(0), 2);
  auto proper = validate_generating_vector({z4, {0, {2, 2}}, {}, {}, {sq, sq}});
  CHECK(!proper.ok);
  CHECK(proper.violation.find("generate") != std::string::npos);

  auto rel = validate_generating_vector({z2, {0, {2, 2, 2}}, {}, {}, {s, s, s}});
  CHECK(!rel.ok);
  CHECK(rel.violation.find("long relation") != std::string::npos);
}

TEST_CASE("enumerate generating vectors") {
  auto z2 = cyclic(2);
  CHECK(enumerate_generating_vectors(z2, {0, {2, 2, 2, 2}}).size() == 1);
  CHECK(enumerate_generating_vectors(z2, {0, {2, 2, 2}}).empty());
  auto one = group_from_generators({Permutation::identity(1)});
  auto empty = enumerate_generating_vectors(one, {2, {}});
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].images() == std::vector<FiniteGroup::Element>{0, 0, 0, 0});
  CHECK(enumerate_generating_vectors(one, {0, {}}).size() == 1);
  CHECK(enumerate_generating_vectors(z2, {0, {}}).empty());
  CHECK_THROWS_AS(enumerate_generating_vectors(s3(), {0, {2, 3, 6}}, 5), BoundExceeded);
}

TEST_CASE("enumeration agrees with brute force and validates") {
  std::vector<GroupPtr> groups{cyclic(2), cyclic(3), s3(), cyclic(4)};
  std::vector<Signature> sigs{{0, {2, 2, 2, 2}}, {0, {2, 2, 3}}, {0, {2, 3, 3}}, {0, {3, 3, 3}},
                              {1, {2}},          {1, {}},        {0, {2, 2, 2}}, {1, {3}},
                              {0, {2, 2, 2, 3}}, {0, {4, 4, 2}}, {0, {2, 6, 3}}};
  for (const auto& h : groups)
    for (const auto& s : sigs) {
      auto vs = enumerate_generating_vectors(h, s);
      CAPTURE(s.to_string());
      CHECK(vs.size() == brute_force_count(h, s));
      for (std::size_t i = 0; i < vs.size(); ++i) {
        CHECK(validate_generating_vector(vs[i]).ok);
        if (i > 0)
          CHECK(vs[i - 1].images() < vs[i].images());
      }
    }
}

TEST_CASE("quotient signatures") {
  Signature s{0, {2, 4, 6}};
  CHECK(quotient_signature(s, {}) == s);
  CHECK(quotient_signature(s, {{1, {2}}}) == Signature{0, {2, 2, 6}});
  Signature t{0, {2, 2, 2, 2}};
  auto killed = quotient_signature(t, {{0, {1}}, {1, {1}}, {2, {1}}, {3, {1}}});
  CHECK(killed == Signature{0, {}});
  std::vector<Word> words;
  for (std::size_t i = 0; i < 4; ++i)
    words.push_back(Word::generator(t.c(i)));
  CHECK(todd_coxeter(quotient_presentation(orbifold_presentation(t), words), {}, 100).index() == 1);
  CHECK_THROWS_AS(quotient_signature(s, {{3, {2}}}), Error);
  CHECK_THROWS_AS(quotient_signature(s, {{0, {0}}}), Error);
  CHECK(quotient_signature({1, {6, 4}}, {{0, {4}}}) == Signature{1, {2, 4}});
}

TEST_CASE("quotient signature against quotient presentation, small sweep") {
  // The full sweep lives in the acceptance suite; this covers one family.
  Signature s{1, {4, 6}};
  for (long long e0 = 1; e0 <= 4; ++e0)
    for (long long e1 = 1; e1 <= 6; ++e1) {
      KillMap kill{{0, {e0}}, {1, {e1}}};
      auto direct = quotient_presentation(
          orbifold_presentation(s),
          {Word::generator(s.c(0), static_cast<int>(e0)), Word::generator(s.c(1), static_cast<int>(e1))});
      CHECK(abelian_invariants(direct) ==
            abelian_invariants(orbifold_presentation(quotient_signature(s, kill))));
    }
}
