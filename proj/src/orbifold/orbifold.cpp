#include <algorithm>
#include <numeric>
#include <sstream>

#include "pq/error.hpp"
#include "pq/orbifold.hpp"

namespace pq {

using Element = FiniteGroup::Element;

void Signature::validate() const {
  if (genus < 0)
    throw Error("signature genus must be >= 0, got " + std::to_string(genus));
  for (int m : periods)
    if (m < 2)
      throw Error("signature periods must be >= 2, got " + std::to_string(m));
}

Signature Signature::canonical() const {
  Signature out = *this;
  std::sort(out.periods.begin(), out.periods.end());
  return out;
}

bool Signature::is_hyperbolic() const {
  // Compare 2g - 2 + sum (1 - 1/m) > 0 exactly, scaled by the lcm.
  long long l = 1;
  for (int m : periods)
    l = std::lcm(l, static_cast<long long>(m));
  long long total = l * (2LL * genus - 2);
  for (int m : periods)
    total += l - l / m;
  return total > 0;
}

std::string Signature::to_string() const {
  std::ostringstream out;
  out << "(" << genus << ";";
  if (periods.empty())
    out << " -";
  for (std::size_t i = 0; i < periods.size(); ++i)
    out << (i ? "," : " ") << periods[i];
  out << ")";
  return out.str();
}

Presentation orbifold_presentation(const Signature& s) {
  s.validate();
  std::vector<std::string> names;
  for (int j = 1; j <= s.genus; ++j) {
    names.push_back("a" + std::to_string(j));
    names.push_back("b" + std::to_string(j));
  }
  for (std::size_t i = 1; i <= s.periods.size(); ++i)
    names.push_back("c" + std::to_string(i));
  Presentation p(std::move(names));
  for (std::size_t i = 0; i < s.periods.size(); ++i)
    p.add_relator(Word::generator(s.c(i), s.periods[i]));
  p.add_relator(long_relation(s));
  return p;
}

Word long_relation(const Signature& s) {
  Word w;
  for (int j = 0; j < s.genus; ++j)
    w = w * commutator(Word::generator(s.a(j)), Word::generator(s.b(j)));
  for (std::size_t i = 0; i < s.periods.size(); ++i)
    w = w * Word::generator(s.c(i));
  return w;
}

long long riemann_hurwitz_genus(std::size_t order, const Signature& s) {
  s.validate();
  if (order == 0)
    throw Error("group order must be >= 1");
  long long l = 1;
  for (int m : s.periods)
    l = std::lcm(l, static_cast<long long>(m));
  // (2g - 2) * l = order * (l (2g' - 2) + sum (l - l/m))
  __int128 inner = static_cast<__int128>(l) * (2LL * s.genus - 2);
  for (int m : s.periods)
    inner += l - l / m;
  __int128 scaled = inner * static_cast<__int128>(order);
  if (scaled % l != 0)
    throw NonIntegralGenus("2g-2 = " + std::to_string(static_cast<long long>(scaled)) + "/" +
                           std::to_string(l) + " is not an integer for order " +
                           std::to_string(order) + " and signature " + s.to_string());
  __int128 euler = scaled / l;
  if (euler % 2 != 0)
    throw NonIntegralGenus("2g-2 = " + std::to_string(static_cast<long long>(euler)) +
                           " is odd for order " + std::to_string(order) + " and signature " +
                           s.to_string());
  if (euler < -2)
    throw NegativeGenus("2g-2 = " + std::to_string(static_cast<long long>(euler)) +
                        " < -2 for order " + std::to_string(order) + " and signature " +
                        s.to_string());
  return static_cast<long long>((euler + 2) / 2);
}

std::vector<Element> GeneratingVector::images() const {
  std::vector<Element> out;
  for (std::size_t j = 0; j < a.size(); ++j) {
    out.push_back(a[j]);
    out.push_back(b[j]);
  }
  out.insert(out.end(), c.begin(), c.end());
  return out;
}

Element evaluate_word(const FiniteGroup& h, std::span<const Element> images, const Word& w) {
  Element out = FiniteGroup::identity();
  for (const auto& l : w.letters()) {
    auto g = static_cast<std::size_t>(l.generator);
    if (g >= images.size())
      throw Error("word uses generator " + std::to_string(g) + " beyond the " +
                  std::to_string(images.size()) + " images");
    out = h.multiply(out, h.power(images[g], l.exponent));
  }
  return out;
}

namespace {

Element long_value(const FiniteGroup& h, const std::vector<Element>& a,
                   const std::vector<Element>& b, const std::vector<Element>& c) {
  Element w = FiniteGroup::identity();
  for (std::size_t j = 0; j < a.size(); ++j) {
    Element comm = h.multiply(h.multiply(a[j], b[j]), h.multiply(h.inverse(a[j]), h.inverse(b[j])));
    w = h.multiply(w, comm);
  }
  for (Element x : c)
    w = h.multiply(w, x);
  return w;
}

bool generates(const FiniteGroup& h, const std::vector<Element>& gens) {
  std::vector<bool> seen(h.order(), false);
  std::vector<Element> queue{FiniteGroup::identity()};
  seen[0] = true;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Element s : gens) {
      Element n = h.multiply(queue[i], s);
      if (!seen[n]) {
        seen[n] = true;
        queue.push_back(n);
      }
    }
  return queue.size() == h.order();
}

}  // namespace

VectorCheck validate_generating_vector(const GeneratingVector& v) {
  const auto& s = v.signature;
  const FiniteGroup& h = *v.target;
  VectorCheck out;
  if (v.a.size() != static_cast<std::size_t>(s.genus) || v.b.size() != v.a.size() ||
      v.c.size() != s.periods.size()) {
    out.ok = false;
    out.violation = "vector has the wrong number of images for signature " + s.to_string();
    return out;
  }
  for (std::size_t i = 0; i < v.c.size(); ++i) {
    std::size_t ord = h.element_order(v.c[i]);
    if (ord != static_cast<std::size_t>(s.periods[i])) {
      out.ok = false;
      out.witness = v.c[i];
      out.violation = "phi(c" + std::to_string(i + 1) + ") has order " + std::to_string(ord) +
                      " != " + std::to_string(s.periods[i]) + " (phi(c_i) must have order m_i)";
      return out;
    }
  }
  Element w = long_value(h, v.a, v.b, v.c);
  if (w != FiniteGroup::identity()) {
    out.ok = false;
    out.witness = w;
    out.violation = "long relation evaluates to " + h.element(w).to_cycles() + ", not 1";
    return out;
  }
  if (!generates(h, v.images())) {
    out.ok = false;
    out.violation = "images do not generate the group";
    return out;
  }
  return out;
}

std::vector<GeneratingVector> enumerate_generating_vectors(const GroupPtr& hp, const Signature& s,
                                                           std::size_t order_bound,
                                                           std::size_t max_vectors) {
  s.validate();
  const FiniteGroup& h = *hp;
  if (h.order() > order_bound)
    throw BoundExceeded("group order " + std::to_string(h.order()) + " exceeds the bound " +
                        std::to_string(order_bound));
  const std::size_t g = static_cast<std::size_t>(s.genus);
  const std::size_t r = s.periods.size();

  std::vector<std::vector<Element>> of_order(r);
  {
    std::vector<std::size_t> orders(h.order());
    for (Element e = 0; e < h.order(); ++e)
      orders[e] = h.element_order(e);
    for (std::size_t i = 0; i < r; ++i)
      for (Element e = 0; e < h.order(); ++e)
        if (orders[e] == static_cast<std::size_t>(s.periods[i]))
          of_order[i].push_back(e);
  }
  for (const auto& list : of_order)
    if (list.empty())
      return {};

  std::vector<GeneratingVector> out;
  std::vector<Element> slots(2 * g + r, 0);
  // Slots in generator order; the last c (if any) is solved from the long
  // relation, and the prefix product is carried along the search.
  const std::size_t free_slots = r > 0 ? 2 * g + r - 1 : 2 * g;

  auto finish = [&](Element prefix) {
    if (r > 0) {
      Element last = h.inverse(prefix);
      if (h.element_order(last) != static_cast<std::size_t>(s.periods[r - 1]))
        return;
      slots[2 * g + r - 1] = last;
    } else if (prefix != FiniteGroup::identity()) {
      return;
    }
    if (!generates(h, slots))
      return;
    if (out.size() >= max_vectors)
      throw BoundExceeded("more than " + std::to_string(max_vectors) + " generating vectors");
    GeneratingVector v{hp, s, {}, {}, {}};
    for (std::size_t j = 0; j < g; ++j) {
      v.a.push_back(slots[2 * j]);
      v.b.push_back(slots[2 * j + 1]);
    }
    v.c.assign(slots.begin() + static_cast<long>(2 * g), slots.end());
    out.push_back(std::move(v));
  };

  auto search = [&](auto&& self, std::size_t pos, Element prefix) -> void {
    if (pos == free_slots) {
      finish(prefix);
      return;
    }
    if (pos < 2 * g) {
      if (pos % 2 == 1)
        return;  // b slots are filled together with their a slot
      for (Element x = 0; x < h.order(); ++x)
        for (Element y = 0; y < h.order(); ++y) {
          slots[pos] = x;
          slots[pos + 1] = y;
          Element comm = h.multiply(h.multiply(x, y), h.multiply(h.inverse(x), h.inverse(y)));
          self(self, pos + 2, h.multiply(prefix, comm));
        }
      return;
    }
    for (Element x : of_order[pos - 2 * g]) {
      slots[pos] = x;
      self(self, pos + 1, h.multiply(prefix, x));
    }
  };
  search(search, 0, FiniteGroup::identity());
  return out;
}

Signature quotient_signature(const Signature& s, const KillMap& kill) {
  s.validate();
  std::vector<long long> reduced(s.periods.begin(), s.periods.end());
  for (const auto& [index, exponents] : kill) {
    if (index >= s.periods.size())
      throw Error("kill index " + std::to_string(index) + " out of range for signature " +
                  s.to_string());
    for (long long e : exponents) {
      if (e <= 0)
        throw Error("killed exponents must be positive, got " + std::to_string(e));
      reduced[index] = std::gcd(reduced[index], e);
    }
  }
  Signature out{s.genus, {}};
  for (long long m : reduced)
    if (m > 1)
      out.periods.push_back(static_cast<int>(m));
  return out.canonical();
}

}  // namespace pq
