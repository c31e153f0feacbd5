#include <algorithm>
#include <cstdlib>

#include "pq/error.hpp"
#include "pq/fp/word.hpp"

namespace pq {

Word Word::free_reduce(std::span<const Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    if (l.exponent == 0)
      continue;
    if (!out.empty() && out.back().generator == l.generator) {
      out.back().exponent += l.exponent;
      if (out.back().exponent == 0)
        out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

Word Word::from_symbols(std::span<const Symbol> symbols) {
  std::vector<Letter> raw;
  raw.reserve(symbols.size());
  for (Symbol s : symbols)
    raw.push_back({generator_of(s), is_inverse(s) ? -1 : 1});
  return free_reduce(raw);
}

Word Word::generator(int g, int exponent) {
  if (exponent == 0)
    return Word();
  return Word(std::vector<Letter>{{g, exponent}});
}

std::size_t Word::length() const noexcept {
  std::size_t n = 0;
  for (const auto& l : letters_)
    n += static_cast<std::size_t>(std::abs(l.exponent));
  return n;
}

int Word::max_generator() const noexcept {
  int m = -1;
  for (const auto& l : letters_)
    m = std::max(m, l.generator);
  return m;
}

std::vector<Symbol> Word::symbols() const {
  std::vector<Symbol> out;
  out.reserve(length());
  for (const auto& l : letters_) {
    Symbol s = symbol_of(l.generator, l.exponent < 0);
    for (int i = 0; i < std::abs(l.exponent); ++i)
      out.push_back(s);
  }
  return out;
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out)
    l.exponent = -l.exponent;
  return Word(std::move(out));
}

Word Word::power(int k) const {
  if (k < 0)
    return inverse().power(-k);
  std::vector<Letter> raw;
  raw.reserve(letters_.size() * static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    raw.insert(raw.end(), letters_.begin(), letters_.end());
  return free_reduce(raw);
}

long long Word::exponent_sum(int g) const {
  long long s = 0;
  for (const auto& l : letters_)
    if (l.generator == g)
      s += l.exponent;
  return s;
}

Word Word::cyclically_reduced() const {
  std::vector<Letter> w = letters_;
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo].generator == w[hi - 1].generator) {
    int e = w[lo].exponent + w[hi - 1].exponent;
    if (e == 0) {
      ++lo;
      --hi;
    } else {
      // Merge the tail letter into the head; the word is then reduced.
      w[lo].exponent = e;
      --hi;
      break;
    }
  }
  return Word(std::vector<Letter>(w.begin() + static_cast<long>(lo),
                                  w.begin() + static_cast<long>(hi)));
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> raw = a.letters_;
  raw.insert(raw.end(), b.letters_.begin(), b.letters_.end());
  return Word::free_reduce(raw);
}

Word commutator(const Word& x, const Word& y) {
  return x * y * x.inverse() * y.inverse();
}

Word conjugate(const Word& by, const Word& w) { return by * w * by.inverse(); }

Word substitute(const Word& w, std::span<const Word> images) {
  std::vector<Letter> raw;
  for (const auto& l : w.letters()) {
    if (l.generator < 0 || static_cast<std::size_t>(l.generator) >= images.size())
      throw Error("substitution has no image for generator " +
                  std::to_string(l.generator));
    const Word img = l.exponent > 0 ? images[static_cast<std::size_t>(l.generator)]
                                    : images[static_cast<std::size_t>(l.generator)].inverse();
    for (int i = 0; i < std::abs(l.exponent); ++i)
      raw.insert(raw.end(), img.letters().begin(), img.letters().end());
  }
  return Word::free_reduce(raw);
}

Word shift(const Word& w, int offset) {
  std::vector<Letter> raw = w.letters();
  for (auto& l : raw)
    l.generator += offset;
  return Word::free_reduce(raw);
}

}  // namespace pq
