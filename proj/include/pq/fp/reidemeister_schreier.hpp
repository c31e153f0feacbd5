#pragma once

#include <string>
#include <vector>

#include "pq/fp/coset_table.hpp"
#include "pq/fp/presentation.hpp"

namespace pq {

// Presentation of a finite-index subgroup on its Schreier generators, with
// the data to rewrite ambient words lying in the subgroup.
class SubgroupPresentation {
 public:
  SubgroupPresentation(const Presentation& ambient, CosetTable table,
                       const std::string& name_prefix = "");

  const Presentation& presentation() const noexcept { return presentation_; }
  const CosetTable& table() const noexcept { return table_; }
  std::size_t index() const noexcept { return table_.index(); }

  // Schreier generator k as an ambient word u_c * x * u_{c.x}^-1.
  const Word& ambient_word(int k) const {
    return ambient_words_[static_cast<std::size_t>(k)];
  }
  const std::vector<Word>& ambient_words() const noexcept { return ambient_words_; }

  // Rewrites an ambient word into Schreier generators. Throws
  // WordNotInSubgroup unless the word scans from coset 0 back to coset 0.
  Word rewrite(const Word& ambient) const;

  // Ambient word of a word in Schreier generators.
  Word to_ambient(const Word& w) const;

 private:
  Word rewrite_from(std::size_t coset, const Word& ambient, std::size_t* end) const;

  CosetTable table_;
  Presentation presentation_;
  std::vector<Word> ambient_words_;
  // Schreier generator id of the edge (coset, generator), or -1 on tree edges.
  std::vector<int> edge_generator_;
};

// Presentation of the subgroup whose coset table is `table`. Schreier
// generators lying on the spanning tree are dropped.
SubgroupPresentation reidemeister_schreier(const Presentation& ambient,
                                           const CosetTable& table,
                                           const std::string& name_prefix = "");

}  // namespace pq
