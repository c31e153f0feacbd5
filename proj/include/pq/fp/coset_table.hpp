#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pq/fp/presentation.hpp"
#include "pq/fp/word.hpp"

namespace pq {

// A complete coset table in standard form: cosets are numbered in the order a
// breadth-first walk from coset 0 (the subgroup) first reaches them, scanning
// symbols 0, 1, ..., 2k-1. That walk also fixes the spanning tree whose words
// are the coset representatives.
class CosetTable {
 public:
  static constexpr std::int32_t kUndefined = -1;

  // `entries` holds rows of 2 * num_generators coset numbers. Rows not
  // reachable from row 0 are discarded. Throws Error if incomplete.
  CosetTable(std::size_t num_generators, std::vector<std::int32_t> entries);

  std::size_t index() const noexcept { return rows_; }
  std::size_t num_generators() const noexcept { return generators_; }

  std::size_t act(std::size_t coset, Symbol s) const {
    return static_cast<std::size_t>(entries_[coset * 2 * generators_ + static_cast<std::size_t>(s)]);
  }
  std::size_t act(std::size_t coset, const Word& w) const;
  std::size_t act(std::size_t coset, std::span<const Symbol> w) const;

  // Tree edge into coset c > 0: the coset it was first reached from and the
  // symbol used.
  std::size_t tree_parent(std::size_t c) const { return parent_[c]; }
  Symbol tree_symbol(std::size_t c) const { return symbol_[c]; }
  // Coset representative: the tree word from coset 0 to c.
  Word transversal(std::size_t c) const;
  // True when the edge c --g--> c·g belongs to the spanning tree.
  bool is_tree_edge(std::size_t c, int g) const;

  // Points of the permutation action of generator g (coset -> coset·g).
  std::vector<std::uint32_t> permutation(int g) const;

 private:
  std::size_t generators_;
  std::size_t rows_;
  std::vector<std::int32_t> entries_;
  std::vector<std::size_t> parent_;
  std::vector<Symbol> symbol_;
};

// Todd-Coxeter coset enumeration, HLT strategy: each live coset in turn has
// every relator scanned and filled, then its remaining empty entries defined
// in column order. Coincidences are merged by union-find and processed FIFO.
// Throws CosetOverflow when more than `max_cosets` cosets get defined.
CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup,
                        std::size_t max_cosets);

// The coset table of a point stabilizer from a permutation action given by
// one point map per generator. Only the orbit of `base` is kept; the base
// point becomes coset 0.
CosetTable coset_table_from_action(std::size_t num_generators,
                                   const std::vector<std::vector<std::uint32_t>>& actions,
                                   std::uint32_t base = 0);

// Scans every relator from every coset; true when all of them close up.
bool table_respects(const CosetTable& t, const Presentation& p);

}  // namespace pq
