#include <cstdint>
#include <optional>
#include <sstream>

#include "pq/error.hpp"
#include "pq/fp/abelian.hpp"

namespace pq {

namespace {

struct Overflow64 {};

// Integer operations for the elimination, specialized for checked int64 and
// for BigInt.
struct Checked {
  using Int = std::int64_t;
  static Int from(const BigInt& b) {
    if (b > std::numeric_limits<Int>::max() || b < std::numeric_limits<Int>::min() + 1)
      throw Overflow64{};
    return static_cast<Int>(b);
  }
  static BigInt to_big(Int x) { return BigInt(x); }
  // a - q * b
  static Int sub_mul(Int a, Int q, Int b) {
    Int prod = 0, out = 0;
    if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &out) ||
        out == std::numeric_limits<Int>::min())
      throw Overflow64{};
    return out;
  }
  static Int add(Int a, Int b) {
    Int out = 0;
    if (__builtin_add_overflow(a, b, &out) || out == std::numeric_limits<Int>::min())
      throw Overflow64{};
    return out;
  }
  static Int abs(Int a) { return a < 0 ? -a : a; }
  // Truncating quotient; exact in int64 since |a| > INT64_MIN.
  static Int quot(Int a, Int b) { return a / b; }
  static Int rem(Int a, Int b) { return a % b; }
};

struct Big {
  using Int = BigInt;
  static Int from(const BigInt& b) { return b; }
  static BigInt to_big(const Int& x) { return x; }
  static Int sub_mul(const Int& a, const Int& q, const Int& b) { return a - q * b; }
  static Int add(const Int& a, const Int& b) { return a + b; }
  static Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }
  static Int quot(const Int& a, const Int& b) { return a / b; }
  static Int rem(const Int& a, const Int& b) { return a % b; }
};

template <class Ops>
SmithForm eliminate(const IntMatrix& input, std::size_t cols, bool track) {
  using Int = typename Ops::Int;
  std::vector<std::vector<Int>> a;
  for (const auto& row : input) {
    bool nonzero = false;
    std::vector<Int> r(cols, Int(0));
    for (std::size_t j = 0; j < cols && j < row.size(); ++j) {
      r[j] = Ops::from(row[j]);
      nonzero = nonzero || r[j] != 0;
    }
    if (nonzero)
      a.push_back(std::move(r));
  }
  std::vector<std::vector<Int>> v;
  if (track) {
    v.assign(cols, std::vector<Int>(cols, Int(0)));
    for (std::size_t j = 0; j < cols; ++j)
      v[j][j] = 1;
  }
  const std::size_t rows = a.size();

  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y)
      return;
    for (auto& r : a)
      std::swap(r[x], r[y]);
    for (auto& r : v)
      std::swap(r[x], r[y]);
  };
  // column j -= q * column t
  auto col_op = [&](std::size_t j, const Int& q, std::size_t t) {
    for (auto& r : a)
      if (r[t] != 0)
        r[j] = Ops::sub_mul(r[j], q, r[t]);
    for (auto& r : v)
      if (r[t] != 0)
        r[j] = Ops::sub_mul(r[j], q, r[t]);
  };
  auto row_op = [&](std::size_t i, const Int& q, std::size_t t) {
    for (std::size_t j = 0; j < cols; ++j)
      if (a[t][j] != 0)
        a[i][j] = Ops::sub_mul(a[i][j], q, a[t][j]);
  };

  SmithForm out;
  std::size_t t = 0;
  for (; t < rows && t < cols; ++t) {
    // Smallest nonzero entry of the remaining block becomes the pivot.
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    Int best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (!pivot || Ops::abs(a[i][j]) < best)) {
          best = Ops::abs(a[i][j]);
          pivot = {i, j};
        }
    if (!pivot)
      break;
    std::swap(a[t], a[pivot->first]);
    swap_cols(t, pivot->second);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (a[i][t] != 0) {
          row_op(i, Ops::quot(a[i][t], a[t][t]), t);
          clean = clean && a[i][t] == 0;
        }
      for (std::size_t j = t + 1; j < cols; ++j)
        if (a[t][j] != 0) {
          col_op(j, Ops::quot(a[t][j], a[t][t]), t);
          clean = clean && a[t][j] == 0;
        }
      if (!clean) {
        // A remainder survived: move the smallest one in row/column t to the
        // pivot and repeat.
        std::size_t bi = t, bj = t;
        Int b = Ops::abs(a[t][t]);
        for (std::size_t i = t + 1; i < rows; ++i)
          if (a[i][t] != 0 && Ops::abs(a[i][t]) < b) {
            b = Ops::abs(a[i][t]);
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[t][j] != 0 && Ops::abs(a[t][j]) < b) {
            b = Ops::abs(a[t][j]);
            bi = t;
            bj = j;
          }
        std::swap(a[t], a[bi]);
        swap_cols(t, bj);
        continue;
      }
      // Divisibility: the pivot must divide the rest of the block.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] != 0 && Ops::rem(a[i][j], a[t][t]) != 0) {
            for (std::size_t k = 0; k < cols; ++k)
              a[t][k] = Ops::add(a[t][k], a[i][k]);
            divides = false;
            break;
          }
      if (divides)
        break;
    }
    if (a[t][t] < 0) {
      for (auto& r : a)
        r[t] = -r[t];
      for (auto& r : v)
        r[t] = -r[t];
    }
    out.diagonal.push_back(Ops::to_big(a[t][t]));
  }
  out.rank = out.diagonal.size();
  if (track) {
    out.column_transform.assign(cols, std::vector<BigInt>(cols));
    for (std::size_t i = 0; i < cols; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        out.column_transform[i][j] = Ops::to_big(v[i][j]);
  }
  return out;
}

}  // namespace

std::string AbelianInvariants::to_string() const {
  std::ostringstream out;
  bool first = true;
  if (free_rank > 0) {
    out << "Z^" << free_rank;
    first = false;
  }
  for (const auto& d : torsion) {
    if (!first)
      out << " + ";
    out << "Z/" << d;
    first = false;
  }
  if (first)
    out << "0";
  return out.str();
}

SmithForm smith_normal_form(const IntMatrix& m, std::size_t columns, bool track_columns) {
  try {
    return eliminate<Checked>(m, columns, track_columns);
  } catch (const Overflow64&) {
    return eliminate<Big>(m, columns, track_columns);
  }
}

IntMatrix exponent_matrix(const Presentation& p) {
  IntMatrix m;
  const std::size_t k = p.num_generators();
  for (const auto& r : p.relators()) {
    std::vector<BigInt> row(k);
    for (const auto& l : r.letters())
      row[static_cast<std::size_t>(l.generator)] += l.exponent;
    m.push_back(std::move(row));
  }
  return m;
}

AbelianInvariants invariants_from_matrix(const IntMatrix& m, std::size_t columns) {
  SmithForm snf = smith_normal_form(m, columns);
  AbelianInvariants out;
  out.free_rank = columns - snf.rank;
  for (const auto& d : snf.diagonal)
    if (d > 1)
      out.torsion.push_back(d);
  return out;
}

AbelianInvariants abelian_invariants(const Presentation& p) {
  return invariants_from_matrix(exponent_matrix(p), p.num_generators());
}

}  // namespace pq
