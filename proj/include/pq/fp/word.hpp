#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace pq {

struct Letter {
  int generator;
  int exponent;  // never 0 inside a Word

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// Symbols are the flat alphabet used by coset tables: generator g is 2g and
// its inverse is 2g + 1.
using Symbol = int;
inline Symbol symbol_of(int generator, bool inverse) {
  return 2 * generator + (inverse ? 1 : 0);
}
inline int generator_of(Symbol s) { return s >> 1; }
inline bool is_inverse(Symbol s) { return (s & 1) != 0; }
inline Symbol inverse_symbol(Symbol s) { return s ^ 1; }

// A freely reduced word: adjacent letters have distinct generators and no
// exponent is zero.
class Word {
 public:
  Word() = default;

  static Word free_reduce(std::span<const Letter> raw);
  static Word from_symbols(std::span<const Symbol> symbols);
  static Word generator(int g, int exponent = 1);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  // Number of symbols, i.e. the sum of |exponent|.
  std::size_t length() const noexcept;
  int max_generator() const noexcept;

  std::vector<Symbol> symbols() const;
  Word inverse() const;
  Word power(int k) const;
  // Exponent sum of generator g.
  long long exponent_sum(int g) const;

  // The cyclically reduced core of the word.
  Word cyclically_reduced() const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  std::vector<Letter> letters_;
};

Word commutator(const Word& x, const Word& y);  // x y x^-1 y^-1
Word conjugate(const Word& by, const Word& w);  // by w by^-1

// Replaces each generator g by images[g]. Generators beyond images.size()
// are an error.
Word substitute(const Word& w, std::span<const Word> images);
// Renumbers generators: g becomes offset + g.
Word shift(const Word& w, int offset);

}  // namespace pq
