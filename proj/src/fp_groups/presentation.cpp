#include <cctype>
#include <charconv>
#include <set>

#include "pq/error.hpp"
#include "pq/fp/presentation.hpp"

namespace pq {

bool is_valid_generator_name(std::string_view name) {
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
    return false;
  for (char c : name)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.'))
      return false;
  return true;
}

Presentation::Presentation(std::vector<std::string> names, std::vector<Word> relators)
    : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!is_valid_generator_name(n))
      throw WordSyntaxError("invalid generator name '" + n + "'");
    if (!seen.insert(n).second)
      throw WordSyntaxError("duplicate generator name '" + n + "'");
  }
  for (const auto& r : relators)
    add_relator(r);
}

int Presentation::add_generator(std::string name) {
  if (!is_valid_generator_name(name))
    throw WordSyntaxError("invalid generator name '" + name + "'");
  if (find(name) >= 0)
    throw WordSyntaxError("duplicate generator name '" + name + "'");
  names_.push_back(std::move(name));
  return static_cast<int>(names_.size()) - 1;
}

void Presentation::add_relator(const Word& w) {
  if (w.max_generator() >= static_cast<int>(names_.size()))
    throw Error("relator references generator " + std::to_string(w.max_generator()) +
                " of a presentation with " + std::to_string(names_.size()) +
                " generators");
  if (!w.empty())
    relators_.push_back(w);
}

void Presentation::set_names(std::vector<std::string> names) {
  if (names.size() != names_.size())
    throw Error("renaming must keep the generator count");
  *this = Presentation(std::move(names), relators_);
}

int Presentation::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name)
      return static_cast<int>(i);
  return -1;
}

std::string Presentation::format(const Word& w) const {
  if (w.empty())
    return "1";
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty())
      out += '*';
    out += names_.at(static_cast<std::size_t>(l.generator));
    if (l.exponent != 1) {
      out += '^';
      out += std::to_string(l.exponent);
    }
  }
  return out;
}

std::size_t Presentation::total_length() const {
  std::size_t n = 0;
  for (const auto& r : relators_)
    n += r.length();
  return n;
}

namespace {

// expr   := term ('*' term)*
// term   := atom ('^' integer)?
// atom   := name | '1' | '(' expr ')' | '[' expr ',' expr ']'
class WordParser {
 public:
  WordParser(const Presentation& p, std::string_view text) : p_(p), text_(text) {}

  Word parse() {
    Word w = expr();
    skip_space();
    if (pos_ != text_.size())
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw WordSyntaxError(what + " at offset " + std::to_string(pos_) + " in '" +
                          std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Word expr() {
    Word w = term();
    while (accept('*'))
      w = w * term();
    return w;
  }

  Word term() {
    Word w = atom();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
        ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      int k = 0;
      std::string_view digits = text_.substr(start, pos_ - start);
      if (!digits.empty() && digits[0] == '+')
        digits.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
      if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
        fail("expected an integer exponent");
      w = w.power(k);
    }
    return w;
  }

  Word atom() {
    skip_space();
    if (pos_ >= text_.size())
      fail("unexpected end of word");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Word w = expr();
      if (!accept(')'))
        fail("expected ')'");
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word x = expr();
      if (!accept(','))
        fail("expected ','");
      Word y = expr();
      if (!accept(']'))
        fail("expected ']'");
      return commutator(x, y);
    }
    if (c == '1') {
      ++pos_;
      return Word();
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
            text_[pos_] == '.'))
      ++pos_;
    std::string_view name = text_.substr(start, pos_ - start);
    if (name.empty())
      fail("expected a generator name");
    int g = p_.find(name);
    if (g < 0) {
      pos_ = start;
      fail("unknown generator '" + std::string(name) + "'");
    }
    return Word::generator(g);
  }

  const Presentation& p_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Word Presentation::parse(std::string_view text) const {
  return WordParser(*this, text).parse();
}

Presentation direct_product_presentation(const std::vector<Presentation>& factors) {
  Presentation out;
  std::vector<int> offsets;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    offsets.push_back(static_cast<int>(out.num_generators()));
    for (const auto& name : factors[k].names()) {
      std::string n = name;
      if (out.find(n) >= 0)
        n += "_" + std::to_string(k + 1);
      out.add_generator(n);
    }
  }
  for (std::size_t k = 0; k < factors.size(); ++k)
    for (const auto& r : factors[k].relators())
      out.add_relator(shift(r, offsets[k]));
  for (std::size_t k = 0; k < factors.size(); ++k)
    for (std::size_t l = k + 1; l < factors.size(); ++l)
      for (std::size_t x = 0; x < factors[k].num_generators(); ++x)
        for (std::size_t y = 0; y < factors[l].num_generators(); ++y)
          out.add_relator(commutator(Word::generator(offsets[k] + static_cast<int>(x)),
                                     Word::generator(offsets[l] + static_cast<int>(y))));
  return out;
}

Presentation quotient_presentation(const Presentation& p, const std::vector<Word>& extra) {
  Presentation out = p;
  for (const auto& w : extra)
    out.add_relator(w);
  return out;
}

}  // namespace pq
