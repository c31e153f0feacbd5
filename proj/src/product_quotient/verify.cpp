#include <algorithm>
#include <map>
#include <numeric>

#include "pq/error.hpp"
#include "pq/product_quotient.hpp"

namespace pq {

namespace {

constexpr std::size_t kDihedralNodeCap = 200'000;
constexpr std::size_t kDihedralHomsPerTarget = 8;

// A homomorphism from pi_1 to a finite permutation group, by generator images.
struct Candidate {
  GroupPtr target;
  std::vector<Element> images;
  std::string label;
};

GroupPtr cyclic_group(std::size_t n) {
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i)
    img[i] = static_cast<Point>((i + 1) % n);
  return group_from_generators({Permutation(img)});
}

// Z/a x Z/b on a + b points.
GroupPtr cyclic_pair(std::size_t a, std::size_t b) {
  std::vector<Point> x(a + b), y(a + b);
  std::iota(x.begin(), x.end(), 0);
  std::iota(y.begin(), y.end(), 0);
  for (std::size_t i = 0; i < a; ++i)
    x[i] = static_cast<Point>((i + 1) % a);
  for (std::size_t i = 0; i < b; ++i)
    y[a + i] = static_cast<Point>(a + (i + 1) % b);
  return group_from_generators({Permutation(x), Permutation(y)});
}

GroupPtr dihedral_group(std::size_t m) {
  std::vector<Point> r(m), s(m);
  for (std::size_t i = 0; i < m; ++i) {
    r[i] = static_cast<Point>((i + 1) % m);
    s[i] = static_cast<Point>((m - i) % m);
  }
  return group_from_generators({Permutation(r), Permutation(s)});
}

long long to_residue(const BigInt& v, std::size_t k) {
  BigInt r = v % static_cast<long long>(k);
  if (r < 0)
    r += static_cast<long long>(k);
  return static_cast<long long>(r);
}

bool respects(const Presentation& p, const Candidate& c) {
  for (const auto& r : p.relators())
    if (evaluate_word(*c.target, c.images, r) != FiniteGroup::identity())
      return false;
  return true;
}

std::size_t image_order(const Candidate& c) {
  return Subgroup(c.target, c.images).order();
}

// Homomorphisms onto dihedral groups by backtracking over generator images,
// checking each relator as soon as all of its generators are assigned.
std::vector<Candidate> dihedral_candidates(const Presentation& p, std::size_t m) {
  auto d = dihedral_group(m);
  const std::size_t n = p.num_generators();
  std::vector<std::vector<const Word*>> due(n);
  for (const auto& r : p.relators())
    if (!r.empty())
      due[static_cast<std::size_t>(r.max_generator())].push_back(&r);
  std::vector<Candidate> out;
  std::vector<Element> images(n, 0);
  std::size_t nodes = 0;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (out.size() >= kDihedralHomsPerTarget || nodes >= kDihedralNodeCap)
      return;
    if (k == n) {
      Candidate c{d, images, "D" + std::to_string(m)};
      if (image_order(c) == d->order())
        out.push_back(std::move(c));
      return;
    }
    for (Element x = 0; x < d->order(); ++x) {
      ++nodes;
      images[k] = x;
      bool ok = true;
      for (const Word* r : due[k])
        if (evaluate_word(*d, std::span<const Element>(images.data(), k + 1), *r) !=
            FiniteGroup::identity()) {
          ok = false;
          break;
        }
      if (ok)
        self(self, k + 1);
      if (out.size() >= kDihedralHomsPerTarget || nodes >= kDihedralNodeCap)
        return;
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<Candidate> abelian_candidates(const Presentation& p, std::size_t bound) {
  std::vector<Candidate> out;
  const std::size_t n = p.num_generators();
  if (n == 0)
    return out;
  SmithForm snf = smith_normal_form(exponent_matrix(p), n, true);
  auto d = [&](std::size_t j) { return j < snf.rank ? snf.diagonal[j] : BigInt(0); };
  auto divides = [&](std::size_t k, std::size_t j) {
    return d(j) % static_cast<long long>(k) == 0;
  };
  for (std::size_t k = 2; k <= bound; ++k) {
    auto z = cyclic_group(k);
    for (std::size_t j = 0; j < n; ++j) {
      if (!divides(k, j))
        continue;
      Candidate c{z, {}, "Z/" + std::to_string(k)};
      for (std::size_t g = 0; g < n; ++g)
        c.images.push_back(z->power(z->generator(0), to_residue(snf.column_transform[g][j], k)));
      out.push_back(std::move(c));
    }
  }
  for (std::size_t a = 2; a <= bound; ++a)
    for (std::size_t b = a; a * b <= bound; ++b) {
      auto z = cyclic_pair(a, b);
      for (std::size_t j1 = 0; j1 < n; ++j1)
        for (std::size_t j2 = j1 + 1; j2 < n; ++j2) {
          if (!divides(a, j1) || !divides(b, j2))
            continue;
          Candidate c{z, {}, "Z/" + std::to_string(a) + " x Z/" + std::to_string(b)};
          for (std::size_t g = 0; g < n; ++g)
            c.images.push_back(
                z->multiply(z->power(z->generator(0), to_residue(snf.column_transform[g][j1], a)),
                            z->power(z->generator(1), to_residue(snf.column_transform[g][j2], b))));
          out.push_back(std::move(c));
        }
    }
  return out;
}

// Per original period index: the period left after the kills, 1 if gone.
std::vector<long long> killed_periods(const Signature& s, const KillMap& kill) {
  std::vector<long long> out(s.periods.begin(), s.periods.end());
  for (const auto& [idx, list] : kill)
    for (long long e : list)
      out[idx] = std::gcd(out[idx], e);
  return out;
}

}  // namespace

VerificationReport ProductQuotient::verify() {
  VerificationReport out;
  const std::size_t bound = opt_.index_bound;
  const std::size_t budget = opt_.max_cosets;
  if (bound == 0 || budget == 0) {
    out.detail = "zero budget";
    return out;
  }
  const Presentation& p = pi1().presentation();
  const std::size_t n = actions_.size();
  const AbelianInvariants& h1 = abelianization();

  if (p.num_generators() == 0) {
    out.outcome = VerificationReport::Outcome::Finite;
    out.order = BigInt(1);
    return out;
  }
  if (h1.free_rank == 0) {
    try {
      out.order = BigInt(todd_coxeter(p, {}, budget).index());
      out.outcome = VerificationReport::Outcome::Finite;
      return out;
    } catch (const CosetOverflow&) {
      // Fall through: a finite-index surface subgroup may still be found.
    }
  }

  std::vector<Candidate> candidates;
  {
    auto one = group_from_generators({Permutation::identity(1)});
    candidates.push_back({one, std::vector<Element>(p.num_generators(), 0), "trivial"});
  }
  if (group_->order() <= bound && psi_descends()) {
    Candidate c{group_, {}, "G via Psi"};
    for (std::size_t k = 0; k < p.num_generators(); ++k)
      c.images.push_back(pi1_psi(static_cast<int>(k)));
    candidates.push_back(std::move(c));
  }
  for (auto& c : abelian_candidates(p, bound))
    candidates.push_back(std::move(c));
  for (std::size_t m = 3; 2 * m <= bound; ++m)
    for (auto& c : dihedral_candidates(p, m))
      candidates.push_back(std::move(c));

  const auto& orbifolds = quotient_orbifolds();
  std::vector<std::vector<long long>> periods;
  for (std::size_t i = 0; i < n; ++i)
    periods.push_back(killed_periods(actions_[i].signature(), kill_maps()[i]));
  std::vector<Signature> sigs = quotient_signatures();
  Presentation product = direct_product_presentation(orbifolds);
  std::vector<int> offsets;
  {
    int total = 0;
    for (const auto& o : orbifolds) {
      offsets.push_back(total);
      total += static_cast<int>(o.num_generators());
    }
  }

  for (const auto& c : candidates) {
    if (!respects(p, c))
      continue;
    ++out.candidates_tried;
    Subgroup img(c.target, c.images);
    if (img.order() > bound)
      continue;
    try {
      // Right-regular action of the image on itself; the stabilizer of the
      // identity is the kernel.
      std::map<Element, std::uint32_t> point;
      for (Element e : img.members())
        point.emplace(e, static_cast<std::uint32_t>(point.size()));
      std::vector<std::vector<std::uint32_t>> maps;
      for (Element x : c.images) {
        std::vector<std::uint32_t> map(img.order());
        for (Element e : img.members())
          map[point[e]] = point[c.target->multiply(e, x)];
        maps.push_back(std::move(map));
      }
      SubgroupPresentation kp(p, coset_table_from_action(p.num_generators(), maps,
                                                         point[FiniteGroup::identity()]));
      TietzeResult kt = tietze_reduce(kp.presentation(), opt_.tietze_steps);
      AbelianInvariants kh = abelian_invariants(kt.presentation);
      if (!kh.is_torsion_free())
        continue;
      std::vector<Word> k_words;
      for (int k : kt.kept)
        k_words.push_back(kp.ambient_word(k));

      std::vector<long long> genera;
      std::size_t index_product = 1;
      bool ok = true;
      std::vector<Word> product_words(k_words.size());
      for (std::size_t i = 0; i < n && ok; ++i) {
        std::vector<Word> images;
        for (std::size_t k = 0; k < k_words.size(); ++k) {
          images.push_back(theta(i, k_words[k]));
          product_words[k] = product_words[k] * shift(images.back(), offsets[i]);
        }
        CosetTable t = todd_coxeter(orbifolds[i], images, budget);
        const auto& s = actions_[i].signature();
        for (std::size_t j = 0; j < s.periods.size() && ok; ++j)
          for (long long l = 1; l < periods[i][j] && ok; ++l) {
            Word w = Word::generator(s.c(j), static_cast<int>(l));
            for (std::size_t x = 0; x < t.index() && ok; ++x)
              ok = t.act(x, w) != x;
          }
        if (!ok)
          break;
        try {
          genera.push_back(riemann_hurwitz_genus(t.index(), sigs[i]));
        } catch (const Error&) {
          ok = false;
        }
        index_product *= t.index();
      }
      if (!ok)
        continue;
      long long rank = 0;
      for (long long h : genera)
        rank += 2 * h;
      if (static_cast<long long>(kh.free_rank) != rank)
        continue;
      if (todd_coxeter(product, product_words, budget).index() != index_product)
        continue;
      out.outcome = VerificationReport::Outcome::Found;
      out.index = img.order();
      out.genera = std::move(genera);
      out.free_rank = kh.free_rank;
      out.subgroup = "kernel of a map onto " + c.label;
      return out;
    } catch (const CosetOverflow&) {
      out.budget_exhausted = true;
      out.detail = "coset budget exhausted on some candidates";
    }
  }
  if (out.detail.empty())
    out.detail = "no candidate of index <= " + std::to_string(bound) + " passed";
  return out;
}

}  // namespace pq
