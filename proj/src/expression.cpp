#include "pbw/expression.hpp"

#include <cctype>

#include "pbw/error.hpp"

namespace pbw {

namespace {

constexpr int kMaxExponent = 4096;

class Parser {
 public:
  Parser(std::string_view src, const Alphabet& alphabet, Field field)
      : src_(src), alphabet_(alphabet), field_(field) {}

  Polynomial polynomial() {
    Polynomial f = expr();
    skip_space();
    if (at_end()) return f;
    if (peek() == '#') fail("'#' is only allowed in tensor expressions");
    fail(std::string("unexpected '") + peek() + "'");
  }

  TensorElement tensor() {
    TensorElement out(field_);
    skip_space();
    bool negative = false;
    if (accept('-'))
      negative = true;
    else
      accept('+');
    while (true) {
      Polynomial left = term();
      skip_space();
      if (!accept('#')) fail("expected '#' between tensor legs");
      Polynomial right = term();
      TensorElement summand = TensorElement::tensor(left, right);
      if (negative)
        out -= summand;
      else
        out += summand;
      skip_space();
      if (at_end()) return out;
      if (accept('+'))
        negative = false;
      else if (accept('-'))
        negative = true;
      else
        fail(std::string("unexpected '") + peek() + "'");
    }
  }

 private:
  Polynomial expr() {
    skip_space();
    Polynomial out(field_);
    bool negative = false;
    if (accept('-'))
      negative = true;
    else
      accept('+');
    while (true) {
      Polynomial t = term();
      if (negative)
        out -= t;
      else
        out += t;
      skip_space();
      if (accept('+'))
        negative = false;
      else if (accept('-'))
        negative = true;
      else
        return out;
    }
  }

  Polynomial term() {
    Polynomial out = factor();
    while (true) {
      skip_space();
      if (!accept('*')) return out;
      out = out * factor();
    }
  }

  Polynomial factor() {
    skip_space();
    if (at_end()) fail("unexpected end of expression");
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_space();
      if (!accept(')')) fail("expected ')'");
      return power(inner);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                           peek() == '_'))
        ++pos_;
      const std::string name(src_.substr(start, pos_ - start));
      auto x = alphabet_.find(name);
      if (!x) fail("unknown generator '" + name + "'", start);
      return power(Polynomial::word(field_, Word(*x)));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  Polynomial number() {
    const std::size_t start = pos_;
    mpz_class numerator = digits();
    mpz_class denominator = 1;
    skip_space();
    if (accept('/')) {
      skip_space();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        fail("malformed rational: expected a denominator");
      denominator = digits();
      if (denominator == 0) fail("malformed rational: zero denominator", start);
    }
    try {
      return Polynomial(Word(),
                        Scalar(field_, mpq_class(numerator, denominator)));
    } catch (const std::domain_error&) {
      fail("denominator vanishes in " + field_.to_string(), start);
    }
  }

  mpz_class digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return mpz_class(std::string(src_.substr(start, pos_ - start)));
  }

  Polynomial power(const Polynomial& base) {
    skip_space();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t start = pos_;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected an exponent after '^'");
    mpz_class e = digits();
    if (e < 1 || e > kMaxExponent)
      fail("exponent must be between 1 and " + std::to_string(kMaxExponent),
           start);
    Polynomial out = base;
    for (long i = 1; i < e.get_si(); ++i) out = out * base;
    return out;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }
  bool accept(char c) {
    if (at_end() || peek() != c) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(const std::string& message) { fail(message, pos_); }
  [[noreturn]] void fail(const std::string& message, std::size_t pos) {
    throw ParseError(message, 1, static_cast<int>(pos) + 1);
  }

  std::string_view src_;
  const Alphabet& alphabet_;
  Field field_;
  std::size_t pos_ = 0;
};

// Coefficient prefix for a term; the sign goes to `negative`.
std::string coefficient_prefix(const Scalar& c, bool constant_word,
                               bool& negative) {
  negative = c.is_negative();
  const Scalar magnitude = negative ? -c : c;
  if (magnitude.is_one()) return constant_word ? "1" : "";
  return magnitude.to_string() + (constant_word ? "" : "*");
}

}  // namespace

Polynomial parse_polynomial(std::string_view src, const Alphabet& alphabet,
                            Field field) {
  return Parser(src, alphabet, field).polynomial();
}

TensorElement parse_tensor(std::string_view src, const Alphabet& alphabet,
                           Field field) {
  const auto first = src.find_first_not_of(" \t");
  const auto last = src.find_last_not_of(" \t");
  if (first != std::string_view::npos && src.substr(first, last - first + 1) == "0")
    return TensorElement(field);
  return Parser(src, alphabet, field).tensor();
}

std::string render_word(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.length()) {
    std::size_t j = i;
    while (j < w.length() && w[j] == w[i]) ++j;
    if (!out.empty()) out += '*';
    out += alphabet.name(w[i]);
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string render(const Polynomial& f, const Alphabet& alphabet) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : f.terms()) {
    bool negative = false;
    std::string prefix = coefficient_prefix(c, w.empty(), negative);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    out += prefix;
    if (!w.empty()) out += render_word(w, alphabet);
  }
  return out;
}

std::string render(const TensorElement& t, const Alphabet& alphabet) {
  if (t.is_zero()) return "0";
  std::string out;
  for (const auto& [key, c] : t.terms()) {
    bool negative = false;
    std::string prefix = coefficient_prefix(c, false, negative);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    out += prefix + render_word(key.first, alphabet) + "#" +
           render_word(key.second, alphabet);
  }
  return out;
}

}  // namespace pbw
