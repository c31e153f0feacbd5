#include <random>

#include "../common/oracles.hpp"
#include "doctest.h"
#include "pq/error.hpp"
#include "pq/fp/abelian.hpp"
#include "pq/fp/coset_table.hpp"
#include "pq/fp/reidemeister_schreier.hpp"
#include "pq/fp/tietze.hpp"

using namespace pq;

namespace {

Presentation pres(std::vector<std::string> names, std::vector<std::string> rels) {
  Presentation p(std::move(names));
  for (const auto& r : rels)
    p.add_relator(p.parse(r));
  return p;
}

std::vector<BigInt> big(std::initializer_list<int> xs) {
  std::vector<BigInt> out;
  for (int x : xs)
    out.emplace_back(x);
  return out;
}

Presentation surface(int g) {
  std::vector<std::string> names;
  std::string rel;
  for (int i = 1; i <= g; ++i) {
    names.push_back("a" + std::to_string(i));
    names.push_back("b" + std::to_string(i));
    rel += (rel.empty() ? "" : "*") + std::string("[a") + std::to_string(i) + ",b" +
           std::to_string(i) + "]";
  }
  return pres(names, rel.empty() ? std::vector<std::string>{} : std::vector<std::string>{rel});
}

// Random presentation on 2 or 3 generators with short random relators.
Presentation random_presentation(std::mt19937& rng) {
  int k = 2 + static_cast<int>(rng() % 2);
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i)
    names.push_back(std::string(1, static_cast<char>('a' + i)));
  Presentation p(names);
  int nrel = 1 + static_cast<int>(rng() % 4);
  for (int r = 0; r < nrel; ++r) {
    std::vector<Letter> raw;
    int len = 1 + static_cast<int>(rng() % 7);
    for (int i = 0; i < len; ++i)
      raw.push_back({static_cast<int>(rng() % static_cast<unsigned>(k)),
                     static_cast<int>(rng() % 7) - 3 == 0 ? 1 : static_cast<int>(rng() % 7) - 3});
    for (auto& l : raw)
      if (l.exponent == 0)
        l.exponent = 2;
    p.add_relator(Word::free_reduce(raw));
  }
  return p;
}

}  // namespace

TEST_CASE("free reduction") {
  CHECK(Word::free_reduce(std::vector<Letter>{{0, 1}, {0, -1}}).empty());
  CHECK(Word::free_reduce(std::vector<Letter>{{0, 1}, {1, 1}, {1, -1}, {0, 1}}) ==
        Word::generator(0, 2));
  Word w = Word::free_reduce(std::vector<Letter>{{0, 2}, {0, -3}, {1, 1}});
  CHECK(w.letters() == std::vector<Letter>{{0, -1}, {1, 1}});
}

TEST_CASE("word syntax round trip") {
  Presentation p({"a", "b", "c1"});
  Word w = p.parse("a*b^-1*(c1*a)^2*[a,b]");
  CHECK(p.parse(p.format(w)) == w);
  CHECK(p.format(Word()) == "1");
  CHECK(p.parse("1").empty());
  CHECK_THROWS_AS(p.parse("a*d"), WordSyntaxError);
  CHECK_THROWS_AS(p.parse("a*"), WordSyntaxError);
}

TEST_CASE("Todd-Coxeter small examples") {
  CHECK(todd_coxeter(pres({"a"}, {"a^5"}), {}, 100).index() == 5);
  CHECK(todd_coxeter(pres({"a", "b"}, {"a^2", "b^3", "(a*b)^2"}), {}, 100).index() == 6);
  auto p = pres({"a", "b"}, {"a^2", "b^3", "(a*b)^5"});
  CHECK(todd_coxeter(p, {p.parse("a"), p.parse("b")}, 100).index() == 1);
  CHECK_THROWS_AS(todd_coxeter(p, {}, 10), CosetOverflow);
  // Infinite group never completes.
  CHECK_THROWS_AS(todd_coxeter(pres({"a", "b"}, {}), {}, 500), CosetOverflow);
}

TEST_CASE("Todd-Coxeter tables are closed and consistent") {
  auto p = pres({"a", "b"}, {"a^2", "b^3", "(a*b)^4"});
  auto t = todd_coxeter(p, {p.parse("b")}, 1000);
  CHECK(t.index() == 8);
  CHECK(table_respects(t, p));
  CHECK(t.act(0, p.parse("b")) == 0);
  for (std::size_t c = 0; c < t.index(); ++c)
    CHECK(t.act(0, t.transversal(c)) == c);
}

TEST_CASE("Todd-Coxeter against permutation closure on the corpus") {
  auto corpus = oracle::load_json("data/presentations.json");
  for (const auto& e : corpus["presentations"]) {
    Presentation p(e["generators"].get<std::vector<std::string>>());
    for (const auto& r : e["relators"])
      p.add_relator(p.parse(r.get<std::string>()));
    std::size_t degree = e["degree"];
    auto images = e["images"].get<std::vector<oracle::Perm>>();
    std::size_t order = oracle::closure(images, degree).size();
    CAPTURE(e["name"].get<std::string>());
    CHECK(todd_coxeter(p, {}, 100000).index() == order);
    for (const auto& s : e["subgroups"]) {
      std::vector<Word> words;
      std::vector<oracle::Perm> sub_images;
      for (const auto& w : s["words"]) {
        words.push_back(p.parse(w.get<std::string>()));
        sub_images.push_back(oracle::evaluate(words.back().letters(), images, degree));
      }
      std::size_t sub_order = oracle::closure(sub_images, degree).size();
      CHECK(todd_coxeter(p, words, 100000).index() == order / sub_order);
    }
  }
}

TEST_CASE("Reidemeister-Schreier examples") {
  auto z4 = pres({"a"}, {"a^4"});
  auto t = todd_coxeter(z4, {z4.parse("a^2")}, 100);
  auto sub = reidemeister_schreier(z4, t);
  auto inv = abelian_invariants(sub.presentation());
  CHECK(inv.free_rank == 0);
  CHECK(inv.torsion == big({2}));

  // Index-1 table: same group.
  auto s3 = pres({"a", "b"}, {"a^2", "b^3", "(a*b)^2"});
  auto whole = reidemeister_schreier(s3, todd_coxeter(s3, {s3.parse("a"), s3.parse("b")}, 10));
  CHECK(whole.presentation().num_generators() == 2);
  CHECK(todd_coxeter(whole.presentation(), {}, 100).index() == 6);
  CHECK(whole.rewrite(s3.parse("a*b")) == whole.presentation().parse("a*b"));

  // Kernel of F(a,b) -> Z/2 killing b: free of rank 3.
  auto f2 = pres({"a", "b"}, {});
  auto half = coset_table_from_action(2, {{1, 0}, {0, 1}});
  CHECK(half.index() == 2);
  auto k = reidemeister_schreier(f2, half);
  CHECK(k.presentation().num_generators() == 3);
  CHECK(abelian_invariants(k.presentation()).free_rank == 3);
  CHECK_THROWS_AS(k.rewrite(f2.parse("a")), WordNotInSubgroup);
  Word w = f2.parse("a*b*a*b^-1*a^2");
  CHECK(k.to_ambient(k.rewrite(w)) == w);
}

TEST_CASE("Reidemeister-Schreier against brute-force H1") {
  auto corpus = oracle::load_json("data/presentations.json");
  std::mt19937 rng(7);
  int checked = 0;
  const auto& list = corpus["presentations"];
  for (int round = 0; checked < 50 && round < 1000; ++round) {
    const auto& e = list[rng() % list.size()];
    Presentation p(e["generators"].get<std::vector<std::string>>());
    for (const auto& r : e["relators"])
      p.add_relator(p.parse(r.get<std::string>()));
    std::size_t degree = e["degree"];
    auto images = e["images"].get<std::vector<oracle::Perm>>();
    if (degree < 2)
      continue;
    // A random subgroup generated by one or two random short words.
    std::vector<Word> words;
    std::vector<oracle::Perm> sub_images;
    int nw = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < nw; ++i) {
      std::vector<Letter> raw;
      int len = 1 + static_cast<int>(rng() % 4);
      for (int j = 0; j < len; ++j)
        raw.push_back({static_cast<int>(rng() % p.num_generators()), rng() % 2 ? 1 : -1});
      words.push_back(Word::free_reduce(raw));
      sub_images.push_back(oracle::evaluate(words.back().letters(), images, degree));
    }
    auto table = todd_coxeter(p, words, 100000);
    auto sub = reidemeister_schreier(p, table);
    auto inv = abelian_invariants(sub.presentation());
    CAPTURE(e["name"].get<std::string>());
    CAPTURE(table.index());
    CHECK(inv.free_rank == 0);
    CHECK(inv.torsion == oracle::finite_h1(sub_images, degree));
    // Round trip through the rewriter, checked by evaluation.
    for (const auto& w : words) {
      Word back = sub.to_ambient(sub.rewrite(w));
      CHECK(oracle::evaluate(back.letters(), images, degree) ==
            oracle::evaluate(w.letters(), images, degree));
    }
    ++checked;
  }
  CHECK(checked == 50);
}

TEST_CASE("Tietze examples") {
  auto a = tietze_simplify(pres({"a", "b"}, {"b"}));
  CHECK(a.num_generators() == 1);
  CHECK(a.relators().empty());
  auto b = tietze_simplify(pres({"a", "b"}, {"a*b"}));
  CHECK(b.num_generators() == 1);
  CHECK(b.relators().empty());

  auto s3 = pres({"a", "b", "c"}, {"a^2", "b^3", "(a*b)^2", "c*a^-1*b"});
  auto r = tietze_reduce(s3);
  CHECK(r.presentation.num_generators() <= 3);
  CHECK(todd_coxeter(r.presentation, {}, 100).index() == 6);
  for (std::size_t g = 0; g < 3; ++g)
    CHECK(r.substitution[g].max_generator() < static_cast<int>(r.presentation.num_generators()));
}

TEST_CASE("Tietze preserves abelian invariants on random presentations") {
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    auto p = random_presentation(rng);
    auto q = tietze_simplify(p);
    CHECK(q.num_generators() <= p.num_generators());
    CHECK(abelian_invariants(q) == abelian_invariants(p));
    // Relator order does not matter either.
    auto rels = p.relators();
    std::reverse(rels.begin(), rels.end());
    CHECK(abelian_invariants(Presentation(p.names(), rels)) == abelian_invariants(p));
  }
}

TEST_CASE("abelian invariants examples") {
  auto pi2 = surface(2);
  CHECK(abelian_invariants(pi2).free_rank == 4);
  CHECK(abelian_invariants(pi2).torsion.empty());
  auto t = pres({"c1", "c2", "c3", "c4"}, {"c1^2", "c2^2", "c3^2", "c4^2", "c1*c2*c3*c4"});
  CHECK(abelian_invariants(t).free_rank == 0);
  CHECK(abelian_invariants(t).torsion == big({2, 2, 2}));
  CHECK(abelian_invariants(pres({"a"}, {})).free_rank == 1);
}

TEST_CASE("Smith normal form on the fixed matrix corpus") {
  auto data = oracle::load_json("data/snf_matrices.json");
  int n = 0;
  for (const auto& c : data["matrices"]) {
    IntMatrix m;
    for (const auto& row : c["matrix"]) {
      std::vector<BigInt> r;
      for (const auto& x : row)
        r.emplace_back(x.get<std::string>());
      m.push_back(r);
    }
    std::size_t cols = c["columns"];
    std::vector<BigInt> expected;
    for (const auto& x : c["invariants"])
      expected.emplace_back(x.get<std::string>());
    auto snf = smith_normal_form(m, cols);
    CHECK(snf.diagonal == expected);
    CHECK(snf.diagonal == oracle::determinantal_invariants(m, cols));
    ++n;
  }
  CHECK(n == 50);
}

TEST_CASE("Smith normal form column transform") {
  IntMatrix m{big({2, 4, 4}), big({-6, 6, 12}), big({10, -4, -16})};
  auto snf = smith_normal_form(m, 3, true);
  CHECK(snf.diagonal == big({2, 6, 12}));
  // M * V has the diagonal's divisibility: column j of M*V is divisible by d_j.
  for (std::size_t j = 0; j < snf.rank; ++j)
    for (std::size_t i = 0; i < 3; ++i) {
      BigInt s = 0;
      for (std::size_t k = 0; k < 3; ++k)
        s += m[i][k] * snf.column_transform[k][j];
      CHECK(s % snf.diagonal[j] == 0);
    }
  // Overflowing entries fall back to arbitrary precision.
  BigInt huge("170141183460469231731687303715884105727");
  IntMatrix h{{huge, BigInt(2)}, {BigInt(4), huge}};
  CHECK(smith_normal_form(h, 2).diagonal == oracle::determinantal_invariants(h, 2));
}

TEST_CASE("direct and quotient presentations") {
  auto z2 = pres({"a"}, {"a^2"});
  auto z3 = pres({"a"}, {"a^3"});
  auto prod = direct_product_presentation({z2, z3});
  CHECK(prod.num_generators() == 2);
  CHECK(abelian_invariants(prod).torsion == big({6}));
  auto one = direct_product_presentation({z2});
  CHECK(one.names() == z2.names());
  CHECK(one.relators() == z2.relators());
  CHECK(abelian_invariants(direct_product_presentation({surface(1), surface(1)})).free_rank == 4);

  auto f = pres({"a"}, {});
  CHECK(abelian_invariants(quotient_presentation(f, {f.parse("a^2")})).torsion == big({2}));
  CHECK(quotient_presentation(z3, {}).relators() == z3.relators());
  auto t = pres({"c1", "c2", "c3", "c4"}, {"c1^2", "c2^2", "c3^2", "c4^2", "c1*c2*c3*c4"});
  auto killed = quotient_presentation(
      t, {t.parse("c1"), t.parse("c2"), t.parse("c3"), t.parse("c4")});
  CHECK(todd_coxeter(killed, {}, 100).index() == 1);
}
