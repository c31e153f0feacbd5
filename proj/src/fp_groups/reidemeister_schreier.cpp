#include <cstdlib>
#include <set>

#include "pq/error.hpp"
#include "pq/fp/reidemeister_schreier.hpp"

namespace pq {

SubgroupPresentation::SubgroupPresentation(const Presentation& ambient, CosetTable table,
                                           const std::string& name_prefix)
    : table_(std::move(table)) {
  if (table_.num_generators() != ambient.num_generators())
    throw Error("coset table and presentation disagree on the generator count");
  const std::size_t k = ambient.num_generators();
  edge_generator_.assign(table_.index() * k, -1);

  std::vector<std::string> names;
  std::set<std::string> used;
  for (std::size_t c = 0; c < table_.index(); ++c) {
    for (std::size_t g = 0; g < k; ++g) {
      if (table_.is_tree_edge(c, static_cast<int>(g)))
        continue;
      std::size_t d = table_.act(c, symbol_of(static_cast<int>(g), false));
      edge_generator_[c * k + g] = static_cast<int>(ambient_words_.size());
      ambient_words_.push_back(table_.transversal(c) * Word::generator(static_cast<int>(g)) *
                               table_.transversal(d).inverse());
      std::string name = name_prefix + ambient.name(static_cast<int>(g));
      if (table_.index() > 1)
        name += "_" + std::to_string(c);
      while (!used.insert(name).second)
        name += "_";
      names.push_back(std::move(name));
    }
  }
  presentation_ = Presentation(std::move(names));

  for (std::size_t c = 0; c < table_.index(); ++c) {
    for (const auto& r : ambient.relators()) {
      std::size_t end = 0;
      Word w = rewrite_from(c, r, &end);
      if (end != c)
        throw ConsistencyError("relator does not close up in the coset table");
      presentation_.add_relator(w);
    }
  }
}

Word SubgroupPresentation::rewrite_from(std::size_t coset, const Word& ambient,
                                        std::size_t* end) const {
  const std::size_t k = table_.num_generators();
  std::vector<Letter> raw;
  for (const auto& l : ambient.letters()) {
    const auto g = static_cast<std::size_t>(l.generator);
    if (g >= k)
      throw Error("word uses a generator outside the ambient presentation");
    for (int i = 0; i < std::abs(l.exponent); ++i) {
      if (l.exponent > 0) {
        int s = edge_generator_[coset * k + g];
        if (s >= 0)
          raw.push_back({s, 1});
        coset = table_.act(coset, symbol_of(l.generator, false));
      } else {
        std::size_t prev = table_.act(coset, symbol_of(l.generator, true));
        int s = edge_generator_[prev * k + g];
        if (s >= 0)
          raw.push_back({s, -1});
        coset = prev;
      }
    }
  }
  *end = coset;
  return Word::free_reduce(raw);
}

Word SubgroupPresentation::rewrite(const Word& ambient) const {
  std::size_t end = 0;
  Word w = rewrite_from(0, ambient, &end);
  if (end != 0)
    throw WordNotInSubgroup("word ends in coset " + std::to_string(end) +
                            ", not in the subgroup");
  return w;
}

Word SubgroupPresentation::to_ambient(const Word& w) const {
  return substitute(w, ambient_words_);
}

SubgroupPresentation reidemeister_schreier(const Presentation& ambient,
                                           const CosetTable& table,
                                           const std::string& name_prefix) {
  return SubgroupPresentation(ambient, table, name_prefix);
}

}  // namespace pq
