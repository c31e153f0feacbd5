#pragma once

#include <cstddef>
#include <vector>

#include "pq/fp/presentation.hpp"

namespace pq {

inline constexpr std::size_t kDefaultTietzeSteps = 10'000;

struct TietzeResult {
  Presentation presentation;
  // Image of each input generator as a word in the output generators.
  std::vector<Word> substitution;
  // Input generator id of each output generator.
  std::vector<int> kept;
  std::size_t steps = 0;

  Word map(const Word& w) const { return substitute(w, substitution); }
};

// Simplifies by Tietze moves that never add generators: dropping trivial and
// duplicate relators (up to cyclic permutation and inversion), eliminating a
// generator that occurs exactly once in some relator, and shortening a
// relator by a subword covering more than half of a shorter relator. Each
// move costs one step of `budget`. Deterministic.
TietzeResult tietze_reduce(const Presentation& p, std::size_t budget = kDefaultTietzeSteps);

Presentation tietze_simplify(const Presentation& p, std::size_t budget = kDefaultTietzeSteps);

}  // namespace pq
