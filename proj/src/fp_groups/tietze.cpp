#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "pq/error.hpp"
#include "pq/fp/tietze.hpp"

namespace pq {

namespace {

using Symbols = std::vector<Symbol>;

// In place: the prefix [0, top) is the reduced word so far.
void free_reduce(Symbols& w) {
  std::size_t top = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (top > 0 && w[top - 1] == inverse_symbol(w[i]))
      --top;
    else
      w[top++] = w[i];
  }
  w.resize(top);
}

void cyclic_reduce(Symbols& w) {
  free_reduce(w);
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == inverse_symbol(w[hi - 1])) {
    ++lo;
    --hi;
  }
  if (lo > 0) {
    w.erase(w.begin() + static_cast<long>(hi), w.end());
    w.erase(w.begin(), w.begin() + static_cast<long>(lo));
  }
}

Symbols inverse_of(const Symbols& w) {
  Symbols out(w.rbegin(), w.rend());
  for (auto& s : out)
    s = inverse_symbol(s);
  return out;
}

// Least rotation of w or of its inverse.
Symbols canonical_cyclic(const Symbols& w) {
  const std::size_t n = w.size();
  // Symbol i of rotation r of w (inverted = false) or of w^-1 (true).
  auto at = [&](bool inverted, std::size_t r, std::size_t i) {
    std::size_t k = (r + i) % n;
    return inverted ? inverse_symbol(w[n - 1 - k]) : w[k];
  };
  bool best_inv = false;
  std::size_t best_rot = 0;
  for (bool inverted : {false, true})
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t i = 0; i < n; ++i) {
        Symbol a = at(inverted, r, i), b = at(best_inv, best_rot, i);
        if (a != b) {
          if (a < b) {
            best_inv = inverted;
            best_rot = r;
          }
          break;
        }
      }
  Symbols out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = at(best_inv, best_rot, i);
  return out;
}

Symbols replace_generator(const Symbols& w, int g, const Symbols& image,
                          const Symbols& image_inverse) {
  if (std::none_of(w.begin(), w.end(), [&](Symbol s) { return generator_of(s) == g; }))
    return w;
  Symbols out;
  out.reserve(w.size() + image.size());
  for (Symbol s : w) {
    if (generator_of(s) != g)
      out.push_back(s);
    else if (is_inverse(s))
      out.insert(out.end(), image_inverse.begin(), image_inverse.end());
    else
      out.insert(out.end(), image.begin(), image.end());
  }
  free_reduce(out);
  return out;
}

class Simplifier {
 public:
  Simplifier(const Presentation& p, std::size_t budget)
      : budget_(budget), alive_(p.num_generators(), true) {
    for (const auto& r : p.relators()) {
      relators_.push_back(r.symbols());
      cyclic_reduce(relators_.back());
    }
    for (std::size_t g = 0; g < p.num_generators(); ++g)
      substitution_.push_back({symbol_of(static_cast<int>(g), false)});
    std::size_t total = 0;
    for (const auto& r : relators_)
      total += r.size();
    length_cap_ = 4 * total + 1000;
  }

  void run() {
    while (steps_ < budget_) {
      tidy();
      if (steps_ >= budget_)
        break;
      if (eliminate_one())
        continue;
      if (shorten())
        continue;
      break;
    }
    tidy();
  }

  TietzeResult result(const Presentation& p) const {
    TietzeResult out;
    std::vector<int> renumber(alive_.size(), -1);
    std::vector<std::string> names;
    for (std::size_t g = 0; g < alive_.size(); ++g) {
      if (!alive_[g])
        continue;
      renumber[g] = static_cast<int>(out.kept.size());
      out.kept.push_back(static_cast<int>(g));
      names.push_back(p.name(static_cast<int>(g)));
    }
    auto convert = [&](const Symbols& w) {
      std::vector<Letter> raw;
      raw.reserve(w.size());
      for (Symbol s : w) {
        int g = renumber[static_cast<std::size_t>(generator_of(s))];
        if (g < 0)
          throw ConsistencyError("Tietze substitution refers to an eliminated generator");
        raw.push_back({g, is_inverse(s) ? -1 : 1});
      }
      return Word::free_reduce(raw);
    };
    out.presentation = Presentation(std::move(names));
    for (const auto& r : relators_)
      out.presentation.add_relator(convert(r));
    for (const auto& w : substitution_)
      out.substitution.push_back(convert(w));
    out.steps = steps_;
    return out;
  }

 private:
  // Drops empty relators and duplicates up to rotation and inversion.
  void tidy() {
    std::set<Symbols> seen;
    std::vector<Symbols> kept;
    for (auto& r : relators_) {
      cyclic_reduce(r);
      if (r.empty()) {
        ++steps_;
        continue;
      }
      if (!seen.insert(canonical_cyclic(r)).second) {
        ++steps_;
        continue;
      }
      kept.push_back(std::move(r));
    }
    relators_.swap(kept);
  }

  bool eliminate_one() {
    std::vector<std::size_t> total(alive_.size(), 0);
    std::size_t total_length = 0;
    for (const auto& r : relators_) {
      total_length += r.size();
      for (Symbol s : r)
        ++total[static_cast<std::size_t>(generator_of(s))];
    }

    struct Candidate {
      std::size_t cost, length, relator;
      int generator;
    };
    bool found = false;
    Candidate best{};
    std::vector<std::size_t> count(alive_.size(), 0);
    for (std::size_t i = 0; i < relators_.size(); ++i) {
      const auto& r = relators_[i];
      for (Symbol s : r)
        ++count[static_cast<std::size_t>(generator_of(s))];
      for (Symbol s : r) {
        int g = generator_of(s);
        if (count[static_cast<std::size_t>(g)] != 1)
          continue;
        std::size_t elsewhere = total[static_cast<std::size_t>(g)] - 1;
        std::size_t cost = (r.size() - 1) * elsewhere;
        std::size_t grown = total_length + cost;
        if (grown > length_cap_ && cost > elsewhere + r.size())
          continue;
        Candidate cand{cost, r.size(), i, g};
        auto key = [](const Candidate& x) {
          return std::tuple(x.cost, x.length, x.relator, x.generator);
        };
        if (!found || key(cand) < key(best)) {
          best = cand;
          found = true;
        }
      }
      for (Symbol s : r)
        count[static_cast<std::size_t>(generator_of(s))] = 0;
    }
    if (!found)
      return false;

    Symbols r = relators_[best.relator];
    auto pos = static_cast<std::size_t>(
        std::find_if(r.begin(), r.end(),
                     [&](Symbol s) { return generator_of(s) == best.generator; }) -
        r.begin());
    std::rotate(r.begin(), r.begin() + static_cast<long>(pos), r.end());
    Symbols rest(r.begin() + 1, r.end());
    // g * rest = 1 gives g = rest^-1; g^-1 * rest = 1 gives g = rest.
    Symbols image = is_inverse(r[0]) ? rest : inverse_of(rest);
    Symbols image_inverse = inverse_of(image);

    relators_.erase(relators_.begin() + static_cast<long>(best.relator));
    for (auto& other : relators_)
      other = replace_generator(other, best.generator, image, image_inverse);
    for (auto& w : substitution_)
      w = replace_generator(w, best.generator, image, image_inverse);
    alive_[static_cast<std::size_t>(best.generator)] = false;
    ++steps_;
    return true;
  }

  // A cyclic subword of some relator s that equals more than half of a
  // rotation of a relator r (or r^-1) is replaced by the inverse of the rest
  // of r.
  bool shorten() {
    std::map<std::size_t, std::unordered_map<std::string, std::pair<std::size_t, Symbols>>> pieces;
    auto key_of = [](const Symbol* begin, std::size_t len) {
      return std::string(reinterpret_cast<const char*>(begin), len * sizeof(Symbol));
    };
    for (std::size_t i = 0; i < relators_.size(); ++i) {
      const auto& r = relators_[i];
      const std::size_t n = r.size();
      if (n < 2 || n > 24)
        continue;
      const std::size_t len = n / 2 + 1;
      for (const Symbols& base : {r, inverse_of(r)}) {
        for (std::size_t rot = 0; rot < n; ++rot) {
          Symbols turned(base.begin() + static_cast<long>(rot), base.end());
          turned.insert(turned.end(), base.begin(), base.begin() + static_cast<long>(rot));
          Symbols rest(turned.begin() + static_cast<long>(len), turned.end());
          auto& slot = pieces[len];
          slot.emplace(key_of(turned.data(), len), std::pair{i, inverse_of(rest)});
        }
      }
    }
    if (pieces.empty())
      return false;

    // Applies the first shortening found; pieces go stale once a relator
    // changes, so the caller rebuilds them.
    for (std::size_t j = 0; j < relators_.size(); ++j) {
      auto& s = relators_[j];
      const std::size_t m = s.size();
      Symbols doubled = s;
      doubled.insert(doubled.end(), s.begin(), s.end());
      for (auto& [len, table] : pieces) {
        if (len > m)
          continue;
        for (std::size_t start = 0; start < m; ++start) {
          auto it = table.find(key_of(doubled.data() + start, len));
          if (it == table.end() || it->second.first == j)
            continue;
          Symbols next(it->second.second);
          for (std::size_t t = len; t < m; ++t)
            next.push_back(doubled[start + t]);
          cyclic_reduce(next);
          if (next.size() >= m)
            continue;
          s = std::move(next);
          ++steps_;
          return true;
        }
      }
    }
    return false;
  }

  std::size_t budget_;
  std::size_t steps_ = 0;
  std::size_t length_cap_ = 0;
  std::vector<bool> alive_;
  std::vector<Symbols> relators_;
  std::vector<Symbols> substitution_;
};

}  // namespace

TietzeResult tietze_reduce(const Presentation& p, std::size_t budget) {
  Simplifier s(p, budget);
  s.run();
  return s.result(p);
}

Presentation tietze_simplify(const Presentation& p, std::size_t budget) {
  return tietze_reduce(p, budget).presentation;
}

}  // namespace pq
