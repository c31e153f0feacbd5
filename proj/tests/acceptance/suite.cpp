#include "acceptance/suite.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include "common/oracles.hpp"
#include "pq/cli.hpp"
#include "pq/error.hpp"
#include "pq/product_quotient.hpp"

namespace acceptance {

namespace {

using namespace pq;

// Time limits per criterion, in seconds.
constexpr double kLimitOneCurve = 10;
constexpr double kLimitKummer = 5;
constexpr double kLimitFree = 30;
constexpr double kLimitQuotientSweep = 60;
constexpr double kLimitEngine = 60;
constexpr std::size_t kKummerCosets = 10'000;
constexpr std::size_t kEngineCosets = 100'000;
constexpr std::size_t kJobCount = 20;

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

// Every multiset of r periods from [2, max_period], nondecreasing.
void period_lists(int r, int max_period, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == r) {
    out.push_back(cur);
    return;
  }
  for (int m = cur.empty() ? 2 : cur.back(); m <= max_period; ++m) {
    cur.push_back(m);
    period_lists(r, max_period, cur, out);
    cur.pop_back();
  }
}

std::vector<Signature> signatures(int max_genus, int max_r, int max_period) {
  std::vector<Signature> out;
  for (int g = 0; g <= max_genus; ++g)
    for (int r = 0; r <= max_r; ++r) {
      std::vector<std::vector<int>> lists;
      std::vector<int> cur;
      period_lists(r, max_period, cur, lists);
      for (auto& l : lists)
        out.push_back({g, l});
    }
  return out;
}

Result begin(int id, std::string name) {
  Result r;
  r.id = id;
  r.name = std::move(name);
  return r;
}

Element least_lift(const CurveAction& a, Element h) {
  for (Element g = 0; g < a.group->order(); ++g)
    if (a.projection(g) == h)
      return g;
  throw Error("projection is not surjective");
}

Result one_curve() {
  Result r = begin(1, "n = 1 curve quotients have pi_1 = surface group of the quotient curve");
  r.limit_seconds = kLimitOneCurve;
  std::size_t runs = 0, failures = 0;
  std::string first_failure;
  for (const auto& g : {cyclic(2), cyclic(3), s3()}) {
    for (const auto& s : signatures(1, 4, 6)) {
      for (const auto& v : enumerate_generating_vectors(g, s)) {
        ++runs;
        auto a = build_curve_action(g, identity_hom(g), v);
        ProductQuotient pq(g, names_for(g), {a});
        const Presentation& p = pq.pi1().presentation();
        auto inv = abelian_invariants(p);
        bool ok = inv.free_rank == 2 * static_cast<std::size_t>(s.genus) && inv.is_torsion_free();
        // The quotient curve's surface group: images of (lift of phi(a_j), a_j)
        // and (lift of phi(b_j), b_j) must generate all of pi_1.
        std::vector<Word> words;
        auto phi = a.phi_images();
        for (int j = 0; j < s.genus; ++j)
          for (int gen : {s.a(j), s.b(j)}) {
            Element lift = least_lift(a, phi[static_cast<std::size_t>(gen)]);
            words.push_back(pq.pi1_word(pq.gtilde_word(lift, {Word::generator(gen)})));
          }
        ok = ok && todd_coxeter(p, words, kEngineCosets).index() == 1;
        if (!ok && failures++ == 0)
          first_failure = s.to_string() + " on a group of order " + std::to_string(g->order());
      }
    }
  }
  r.pass = failures == 0 && runs > 0;
  r.detail = std::to_string(runs) + " vectors, " + std::to_string(failures) + " failures";
  if (!first_failure.empty())
    r.detail += " (first: " + first_failure + ")";
  return r;
}

CurveAction kummer_factor(const GroupPtr& z2) {
  auto s = z2->generator(0);
  return build_curve_action(z2, identity_hom(z2), {z2, {0, {2, 2, 2, 2}}, {}, {}, {s, s, s, s}});
}

Result kummer() {
  Result r = begin(2, "Kummer: pi_1 is trivial");
  r.limit_seconds = kLimitKummer;
  auto expected = oracle::load_json("data/kummer_oracle.json");
  std::size_t want = expected["pi1_order"];
  auto z2 = cyclic(2);
  auto a = kummer_factor(z2);
  ProductQuotient pq(z2, names_for(z2), {a, a});
  std::size_t cosets = todd_coxeter(pq.pi1().presentation(), {}, kKummerCosets).index();
  r.pass = cosets == want && want == 1;
  r.detail = std::to_string(cosets) + " coset(s) within " + std::to_string(kKummerCosets) +
             "; oracle order " + std::to_string(want);
  return r;
}

Result free_action() {
  Result r = begin(3, "free Z/2 action on two genus-3 curves: index-2 subgroup with H_1 = Z^12");
  r.limit_seconds = kLimitFree;
  auto z2 = cyclic(2);
  auto s = z2->generator(0);
  auto a = build_curve_action(z2, identity_hom(z2), {z2, {2, {}}, {s, 0}, {0, 0}, {}});
  ProductQuotient pq(z2, names_for(z2), {a, a});
  bool free = freeness_check(pq.actions()).free;
  bool no_torsion = pq.torsion().all.empty();
  const Presentation& p = pq.pi1().presentation();

  // pi_1(C_1) x pi_1(C_2): the kernels of phi_i, as pairs (1, k) in Sigma_i.
  std::vector<Word> sub;
  for (std::size_t i = 0; i < 2; ++i) {
    const auto& act = pq.actions()[i];
    const FiniteGroup& h = *act.target();
    auto phi = act.phi_images();
    Presentation t = orbifold_presentation(act.signature());
    std::vector<std::vector<std::uint32_t>> maps;
    for (Element x : phi) {
      std::vector<std::uint32_t> m(h.order());
      for (Element y = 0; y < h.order(); ++y)
        m[y] = static_cast<std::uint32_t>(h.multiply(y, x));
      maps.push_back(std::move(m));
    }
    SubgroupPresentation kernel(t, coset_table_from_action(t.num_generators(), maps, 0));
    for (const auto& k : kernel.ambient_words()) {
      std::vector<Word> parts(2);
      parts[i] = k;
      sub.push_back(pq.pi1_word(pq.gtilde_word(FiniteGroup::identity(), parts)));
    }
  }
  auto table = todd_coxeter(p, sub, kEngineCosets);
  auto inv = abelian_invariants(reidemeister_schreier(p, table).presentation());
  r.pass = free && no_torsion && table.index() == 2 && inv.free_rank == 12 && inv.is_torsion_free();
  r.detail = std::string("free=") + (free ? "true" : "false") +
             ", torsion list " + (no_torsion ? "empty" : "nonempty") + ", index " +
             std::to_string(table.index()) + ", H_1 = " + inv.to_string();
  return r;
}

// Normal-form tuples for one distinguished factor, counted by brute force:
// every g in G, every (d, l >= 1) at the distinguished factor with z = 1, and
// at the other factors either the trivial factor or any (d, l >= 1, z in H)
// with phi(z d^l z^-1) = p(g).
std::size_t brute_force_n(const std::vector<CurveAction>& as, std::size_t i) {
  const FiniteGroup& g = *as.front().group;
  std::size_t total = 0;
  for (Element x = 0; x < g.order(); ++x) {
    std::size_t count = 1;
    for (std::size_t k = 0; k < as.size(); ++k) {
      const auto& a = as[k];
      const FiniteGroup& h = *a.target();
      const auto& s = a.signature();
      auto phi = a.phi_images();
      Element y = a.projection(x);
      std::size_t options = 0;
      if (k != i && y == FiniteGroup::identity())
        ++options;
      for (std::size_t j = 0; j < s.periods.size(); ++j)
        for (int l = 1; l < s.periods[j]; ++l) {
          Element d = h.power(phi[static_cast<std::size_t>(s.c(j))], l);
          if (k == i) {
            options += d == y;
            continue;
          }
          for (Element z = 0; z < h.order(); ++z)
            options += h.conjugate(z, d) == y;
        }
      count *= options;
    }
    total += count;
  }
  return total;
}

Result lemma_count() {
  Result r = begin(4, "Kummer: |N_2| = 32 and matches brute-force filtering");
  auto z2 = cyclic(2);
  auto a = kummer_factor(z2);
  std::vector<CurveAction> as{a, a};
  auto tor = torsion_generators(as);
  std::size_t got = tor.per_factor[1].size();
  std::size_t brute = brute_force_n(as, 1);
  bool members = true;
  for (const auto& t : tor.per_factor[1])
    members = members && in_fibered_product(as, t);
  r.pass = got == 32 && brute == 32 && members;
  r.detail = "|N_2| = " + std::to_string(got) + ", brute force " + std::to_string(brute);
  return r;
}

Result quotient_sweep() {
  Result r = begin(5, "quotient_signature agrees with quotient_presentation + SNF");
  r.limit_seconds = kLimitQuotientSweep;
  std::size_t cases = 0, failures = 0;
  std::string first_failure;
  for (const auto& s : signatures(2, 4, 6)) {
    Presentation base = orbifold_presentation(s);
    const std::size_t n = s.periods.size();
    // choice[j] = 0: period j untouched; otherwise kill c_j^choice[j].
    std::vector<int> choice(n, 0);
    for (;;) {
      KillMap kill;
      std::vector<Word> extra;
      for (std::size_t j = 0; j < n; ++j)
        if (choice[j] > 0) {
          kill[j] = {choice[j]};
          extra.push_back(Word::generator(s.c(j), choice[j]));
        }
      ++cases;
      auto via_signature = abelian_invariants(orbifold_presentation(quotient_signature(s, kill)));
      auto direct = abelian_invariants(quotient_presentation(base, extra));
      if (!(via_signature == direct) && failures++ == 0)
        first_failure = s.to_string();
      std::size_t j = 0;
      while (j < n && ++choice[j] > s.periods[j])
        choice[j++] = 0;
      if (j == n)
        break;
    }
  }
  r.pass = failures == 0;
  r.detail = std::to_string(cases) + " (signature, kill-map) pairs, " + std::to_string(failures) +
             " failures";
  if (!first_failure.empty())
    r.detail += " (first: " + first_failure + ")";
  return r;
}

Result bundled_jobs() {
  Result r = begin(6, "structure reports on the bundled jobs are consistent");
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(fs::path(PQ_SOURCE_DIR) / "jobs"))
    if (e.path().extension() == ".json")
      files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::size_t failures = 0, l_empty = 0;
  std::string first_failure;
  for (const auto& f : files) {
    std::ifstream in(f);
    std::stringstream text;
    text << in.rdbuf();
    bool ok = true;
    try {
      auto job = cli::parse_job(text.str());
      ProductQuotient pq(job.group, job.names, job.curve_actions, job.budgets);
      auto s = pq.structure();
      BigInt power = 1;
      for (std::size_t i = 1; i < job.curve_actions.size(); ++i)
        power *= job.group->order();
      ok = s.t_index_bound > 0 && power % s.t_index_bound == 0;
      if (pq.torsion().all.empty()) {
        ++l_empty;
        Subgroup common = whole_group(job.group);
        for (std::size_t i = 0; i < job.curve_actions.size(); ++i) {
          common = intersection(common, job.curve_actions[i].kernel);
          ok = ok && s.quotient_signatures[i] == job.curve_actions[i].signature().canonical();
        }
        ok = ok && s.e_order_bound && *s.e_order_bound == common.order();
      }
    } catch (const std::exception& e) {
      ok = false;
    }
    if (!ok && failures++ == 0)
      first_failure = f.filename().string();
  }
  r.pass = files.size() == kJobCount && failures == 0;
  r.detail = std::to_string(files.size()) + " jobs (" + std::to_string(l_empty) +
             " with all L_i empty), " + std::to_string(failures) + " failures";
  if (!first_failure.empty())
    r.detail += " (first: " + first_failure + ")";
  return r;
}

Result engine() {
  Result r = begin(7, "Todd-Coxeter and SNF against brute-force oracles");
  r.limit_seconds = kLimitEngine;
  std::size_t enumerations = 0, failures = 0;
  auto corpus = oracle::load_json("data/presentations.json");
  for (const auto& e : corpus["presentations"]) {
    Presentation p(e["generators"].get<std::vector<std::string>>());
    for (const auto& rel : e["relators"])
      p.add_relator(p.parse(rel.get<std::string>()));
    std::size_t degree = e["degree"];
    auto images = e["images"].get<std::vector<oracle::Perm>>();
    std::size_t order = oracle::closure(images, degree).size();
    ++enumerations;
    failures += todd_coxeter(p, {}, kEngineCosets).index() != order;
    for (const auto& s : e["subgroups"]) {
      std::vector<Word> words;
      std::vector<oracle::Perm> sub_images;
      for (const auto& w : s["words"]) {
        words.push_back(p.parse(w.get<std::string>()));
        sub_images.push_back(oracle::evaluate(words.back().letters(), images, degree));
      }
      std::size_t sub_order = oracle::closure(sub_images, degree).size();
      ++enumerations;
      failures += todd_coxeter(p, words, kEngineCosets).index() != order / sub_order;
    }
  }
  std::size_t matrices = 0;
  auto data = oracle::load_json("data/snf_matrices.json");
  for (const auto& c : data["matrices"]) {
    IntMatrix m;
    for (const auto& row : c["matrix"]) {
      std::vector<BigInt> x;
      for (const auto& v : row)
        x.emplace_back(v.get<std::string>());
      m.push_back(x);
    }
    std::size_t cols = c["columns"];
    std::vector<BigInt> expected;
    for (const auto& v : c["invariants"])
      expected.emplace_back(v.get<std::string>());
    // Expected abelian invariants: drop the unit factors, free rank = columns - rank.
    AbelianInvariants want;
    want.free_rank = cols - expected.size();
    for (const auto& d : expected)
      if (abs(d) != 1)
        want.torsion.push_back(abs(d));
    ++matrices;
    failures += !(invariants_from_matrix(m, cols) == want);
  }
  r.pass = failures == 0 && matrices == 50 && enumerations > 0;
  r.detail = std::to_string(enumerations) + " enumerations, " + std::to_string(matrices) +
             " matrices, " + std::to_string(failures) + " failures";
  return r;
}

}  // namespace

std::vector<Result> run_suite() {
  std::vector<std::function<Result()>> checks{one_curve,   kummer,       free_action, lemma_count,
                                              quotient_sweep, bundled_jobs, engine};
  std::vector<Result> out;
  for (const auto& check : checks) {
    auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = check();
    } catch (const std::exception& e) {
      r.id = static_cast<int>(out.size()) + 1;
      r.name = "criterion " + std::to_string(r.id);
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.limit_seconds > 0 && r.seconds > r.limit_seconds) {
      r.pass = false;
      r.detail += "; over the time limit";
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_line(const Result& r) {
  std::ostringstream s;
  s << (r.pass ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.name << " -- " << r.detail
    << " [" << std::fixed << std::setprecision(2) << r.seconds << " s";
  if (r.limit_seconds > 0)
    s << ", limit " << std::setprecision(0) << r.limit_seconds << " s";
  s << "]";
  return s.str();
}

}  // namespace acceptance
