#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pq/fp/word.hpp"

namespace pq {

// A finitely presented group <generators | relators>. Generator ids are the
// positions in `names`.
class Presentation {
 public:
  Presentation() = default;
  explicit Presentation(std::vector<std::string> names,
                        std::vector<Word> relators = {});

  std::size_t num_generators() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(int g) const { return names_[static_cast<std::size_t>(g)]; }
  const std::vector<Word>& relators() const noexcept { return relators_; }

  int add_generator(std::string name);
  // Reduces the relator; the empty word is dropped.
  void add_relator(const Word& w);
  void set_names(std::vector<std::string> names);

  // Generator id for a name, or -1.
  int find(std::string_view name) const;

  std::string format(const Word& w) const;
  // Throws WordSyntaxError on bad syntax or unknown names.
  Word parse(std::string_view text) const;

  std::size_t total_length() const;

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
};

// Disjoint union of the generators, all original relators, and [x, y] for
// every pair of generators from distinct factors. Clashing names in factor k
// (1-based) get the suffix "_k".
Presentation direct_product_presentation(const std::vector<Presentation>& factors);

// Adds `extra` as relators.
Presentation quotient_presentation(const Presentation& p,
                                   const std::vector<Word>& extra);

bool is_valid_generator_name(std::string_view name);

}  // namespace pq
