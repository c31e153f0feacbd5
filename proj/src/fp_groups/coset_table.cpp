#include <functional>
#include <algorithm>
#include <deque>
#include <numeric>

#include "pq/error.hpp"
#include "pq/fp/coset_table.hpp"

namespace pq {

CosetTable::CosetTable(std::size_t num_generators, std::vector<std::int32_t> entries)
    : generators_(num_generators) {
  const std::size_t width = 2 * generators_;
  const std::size_t raw_rows = width == 0 ? 1 : entries.size() / width;
  if (width != 0 && entries.size() % width != 0)
    throw Error("coset table has a ragged row");
  if (raw_rows == 0)
    throw Error("coset table has no rows");

  // Breadth-first renumbering from coset 0.
  std::vector<std::int32_t> renumber(raw_rows, kUndefined);
  std::vector<std::size_t> order{0};
  renumber[0] = 0;
  parent_.push_back(0);
  symbol_.push_back(0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::size_t c = order[i];
    for (std::size_t s = 0; s < width; ++s) {
      std::int32_t d = entries[c * width + s];
      if (d == kUndefined)
        throw Error("coset table is incomplete");
      if (renumber[static_cast<std::size_t>(d)] == kUndefined) {
        renumber[static_cast<std::size_t>(d)] = static_cast<std::int32_t>(order.size());
        order.push_back(static_cast<std::size_t>(d));
        parent_.push_back(static_cast<std::size_t>(renumber[c]));
        symbol_.push_back(static_cast<Symbol>(s));
      }
    }
  }
  rows_ = order.size();
  entries_.resize(rows_ * width);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t s = 0; s < width; ++s)
      entries_[i * width + s] =
          renumber[static_cast<std::size_t>(entries[order[i] * width + s])];
}

std::size_t CosetTable::act(std::size_t coset, const Word& w) const {
  for (const auto& l : w.letters()) {
    Symbol s = symbol_of(l.generator, l.exponent < 0);
    for (int i = 0; i < std::abs(l.exponent); ++i)
      coset = act(coset, s);
  }
  return coset;
}

std::size_t CosetTable::act(std::size_t coset, std::span<const Symbol> w) const {
  for (Symbol s : w)
    coset = act(coset, s);
  return coset;
}

Word CosetTable::transversal(std::size_t c) const {
  std::vector<Symbol> path;
  while (c != 0) {
    path.push_back(symbol_[c]);
    c = parent_[c];
  }
  std::reverse(path.begin(), path.end());
  return Word::from_symbols(path);
}

bool CosetTable::is_tree_edge(std::size_t c, int g) const {
  std::size_t d = act(c, symbol_of(g, false));
  if (d != 0 && parent_[d] == c && symbol_[d] == symbol_of(g, false))
    return true;
  if (c != 0 && parent_[c] == d && symbol_[c] == symbol_of(g, true))
    return true;
  return false;
}

std::vector<std::uint32_t> CosetTable::permutation(int g) const {
  std::vector<std::uint32_t> out(rows_);
  for (std::size_t c = 0; c < rows_; ++c)
    out[c] = static_cast<std::uint32_t>(act(c, symbol_of(g, false)));
  return out;
}

namespace {

class Enumerator {
 public:
  Enumerator(std::size_t generators, std::size_t max_cosets)
      : width_(2 * generators), max_(max_cosets) {
    define_row();
  }

  void scan_and_fill(std::size_t alpha, const std::vector<Symbol>& w) {
    if (w.empty())
      return;
    std::size_t f = alpha, b = alpha;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    for (;;) {
      while (i <= j && at(f, w[static_cast<std::size_t>(i)]) != CosetTable::kUndefined) {
        f = static_cast<std::size_t>(at(f, w[static_cast<std::size_t>(i)]));
        ++i;
      }
      if (i > j) {
        if (f != b)
          coincidence(f, b);
        return;
      }
      while (j >= i &&
             at(b, inverse_symbol(w[static_cast<std::size_t>(j)])) != CosetTable::kUndefined) {
        b = static_cast<std::size_t>(at(b, inverse_symbol(w[static_cast<std::size_t>(j)])));
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        Symbol s = w[static_cast<std::size_t>(i)];
        set(f, s, b);
        set(b, inverse_symbol(s), f);
        return;
      }
      define(f, w[static_cast<std::size_t>(i)]);
    }
  }

  void define(std::size_t alpha, Symbol s) {
    std::size_t beta = define_row();
    set(alpha, s, beta);
    set(beta, inverse_symbol(s), alpha);
  }

  bool live(std::size_t c) const { return rep_[c] == static_cast<std::int32_t>(c); }
  std::size_t rows() const { return rep_.size(); }
  std::int32_t at(std::size_t c, Symbol s) const {
    return table_[c * width_ + static_cast<std::size_t>(s)];
  }

  // Live rows, renumbered in order.
  std::vector<std::int32_t> compact() const {
    std::vector<std::int32_t> renumber(rows(), CosetTable::kUndefined);
    std::int32_t n = 0;
    for (std::size_t c = 0; c < rows(); ++c)
      if (live(c))
        renumber[c] = n++;
    std::vector<std::int32_t> out;
    out.reserve(static_cast<std::size_t>(n) * width_);
    for (std::size_t c = 0; c < rows(); ++c) {
      if (!live(c))
        continue;
      for (std::size_t s = 0; s < width_; ++s) {
        std::int32_t d = table_[c * width_ + s];
        out.push_back(d == CosetTable::kUndefined ? d : renumber[static_cast<std::size_t>(d)]);
      }
    }
    return out;
  }

 private:
  std::size_t define_row() {
    if (rep_.size() >= max_)
      throw CosetOverflow(max_, "coset enumeration exceeded " + std::to_string(max_) +
                                    " cosets");
    std::size_t beta = rep_.size();
    rep_.push_back(static_cast<std::int32_t>(beta));
    table_.resize(table_.size() + width_, CosetTable::kUndefined);
    return beta;
  }

  void set(std::size_t c, Symbol s, std::size_t d) {
    table_[c * width_ + static_cast<std::size_t>(s)] = static_cast<std::int32_t>(d);
  }
  void unset(std::size_t c, Symbol s) {
    table_[c * width_ + static_cast<std::size_t>(s)] = CosetTable::kUndefined;
  }

  std::size_t find(std::size_t c) {
    std::size_t root = c;
    while (rep_[root] != static_cast<std::int32_t>(root))
      root = static_cast<std::size_t>(rep_[root]);
    while (rep_[c] != static_cast<std::int32_t>(root)) {
      std::size_t next = static_cast<std::size_t>(rep_[c]);
      rep_[c] = static_cast<std::int32_t>(root);
      c = next;
    }
    return root;
  }

  void merge(std::size_t k, std::size_t l, std::deque<std::size_t>& queue) {
    std::size_t a = find(k), b = find(l);
    if (a == b)
      return;
    std::size_t lo = std::min(a, b), hi = std::max(a, b);
    rep_[hi] = static_cast<std::int32_t>(lo);
    queue.push_back(hi);
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::deque<std::size_t> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      std::size_t gamma = queue.front();
      queue.pop_front();
      for (std::size_t x = 0; x < width_; ++x) {
        Symbol s = static_cast<Symbol>(x);
        std::int32_t d = at(gamma, s);
        if (d == CosetTable::kUndefined)
          continue;
        std::size_t delta = static_cast<std::size_t>(d);
        unset(delta, inverse_symbol(s));
        std::size_t mu = find(gamma), nu = find(delta);
        if (at(mu, s) != CosetTable::kUndefined)
          merge(nu, static_cast<std::size_t>(at(mu, s)), queue);
        else if (at(nu, inverse_symbol(s)) != CosetTable::kUndefined)
          merge(mu, static_cast<std::size_t>(at(nu, inverse_symbol(s))), queue);
        else {
          set(mu, s, nu);
          set(nu, inverse_symbol(s), mu);
        }
      }
    }
  }

  std::size_t width_;
  std::size_t max_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> rep_;
};

}  // namespace

CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup,
                        std::size_t max_cosets) {
  if (max_cosets == 0)
    throw CosetOverflow(0, "coset enumeration needs at least one coset");
  const std::size_t k = p.num_generators();
  if (k == 0)
    return CosetTable(0, {});

  std::vector<std::vector<Symbol>> relators;
  for (const auto& r : p.relators())
    relators.push_back(r.symbols());

  Enumerator e(k, max_cosets);
  for (const auto& w : subgroup)
    e.scan_and_fill(0, w.symbols());

  bool holes = true;
  while (holes) {
    for (std::size_t alpha = 0; alpha < e.rows(); ++alpha) {
      for (const auto& r : relators) {
        if (!e.live(alpha))
          break;
        e.scan_and_fill(alpha, r);
      }
      if (!e.live(alpha))
        continue;
      for (std::size_t x = 0; x < 2 * k; ++x)
        if (e.live(alpha) && e.at(alpha, static_cast<Symbol>(x)) == CosetTable::kUndefined)
          e.define(alpha, static_cast<Symbol>(x));
    }
    holes = false;
    for (std::size_t c = 0; c < e.rows() && !holes; ++c)
      if (e.live(c))
        for (std::size_t x = 0; x < 2 * k; ++x)
          if (e.at(c, static_cast<Symbol>(x)) == CosetTable::kUndefined)
            holes = true;
  }
  CosetTable t(k, e.compact());
  for (const auto& w : subgroup)
    if (t.act(0, w) != 0)
      throw ConsistencyError("coset enumeration lost a subgroup generator");
  for (std::size_t c = 0; c < t.index(); ++c)
    for (const auto& r : relators)
      if (t.act(c, r) != c)
        throw ConsistencyError("coset enumeration produced a table violating a relator");
  return t;
}

CosetTable coset_table_from_action(std::size_t num_generators,
                                   const std::vector<std::vector<std::uint32_t>>& actions,
                                   std::uint32_t base) {
  if (actions.size() != num_generators)
    throw Error("one point map per generator is required");
  if (num_generators == 0)
    return CosetTable(0, {});
  const std::size_t degree = actions.front().size();
  std::vector<std::vector<std::uint32_t>> inverses;
  for (const auto& a : actions) {
    if (a.size() != degree)
      throw DegreeMismatch("point maps of different degrees");
    std::vector<std::uint32_t> inv(degree, 0);
    std::vector<bool> hit(degree, false);
    for (std::size_t x = 0; x < degree; ++x) {
      if (a[x] >= degree || hit[a[x]])
        throw DegreeMismatch("point map is not a permutation");
      hit[a[x]] = true;
      inv[a[x]] = static_cast<std::uint32_t>(x);
    }
    inverses.push_back(std::move(inv));
  }
  std::vector<std::int32_t> label(degree, CosetTable::kUndefined);
  std::vector<std::uint32_t> order{base};
  label[base] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t g = 0; g < num_generators; ++g)
      for (const auto& m : {std::cref(actions[g]), std::cref(inverses[g])}) {
        const auto* map = &m.get();
        std::uint32_t y = (*map)[order[i]];
        if (label[y] == CosetTable::kUndefined) {
          label[y] = static_cast<std::int32_t>(order.size());
          order.push_back(y);
        }
      }
  const std::size_t width = 2 * num_generators;
  std::vector<std::int32_t> entries(order.size() * width);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t g = 0; g < num_generators; ++g) {
      entries[i * width + 2 * g] = label[actions[g][order[i]]];
      entries[i * width + 2 * g + 1] = label[inverses[g][order[i]]];
    }
  return CosetTable(num_generators, std::move(entries));
}

bool table_respects(const CosetTable& t, const Presentation& p) {
  for (const auto& r : p.relators()) {
    auto syms = r.symbols();
    for (std::size_t c = 0; c < t.index(); ++c)
      if (t.act(c, syms) != c)
        return false;
  }
  return true;
}

}  // namespace pq
