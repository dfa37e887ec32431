#include "pbw/poly.hpp"

#include <stdexcept>
#include <unordered_map>

namespace pbw {

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Word& w, const Scalar& c) : field_(c.field()) {
  add_term(w, c);
}

Polynomial Polynomial::constant(Field field, long value) {
  return Polynomial(Word(), Scalar(field, value));
}

Polynomial Polynomial::word(Field field, const Word& w) {
  return Polynomial(w, Scalar::one(field));
}

void Polynomial::require_field(Field other) const {
  if (other != field_) throw std::invalid_argument("mixed scalar fields");
}

Scalar Polynomial::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void Polynomial::add_term(const Word& w, const Scalar& c) {
  require_field(c.field());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void Polynomial::add_scaled(const Scalar& c, const Word& left,
                            const Polynomial& f, const Word& right) {
  require_field(f.field_);
  if (c.is_zero()) return;
  for (const auto& [w, d] : f.terms_) add_term(left * w * right, c * d);
}

const Word& Polynomial::leading_word() const {
  if (terms_.empty())
    throw std::invalid_argument("leading word of the zero polynomial");
  return terms_.begin()->first;
}

const Scalar& Polynomial::leading_coefficient() const {
  if (terms_.empty())
    throw std::invalid_argument("leading coefficient of the zero polynomial");
  return terms_.begin()->second;
}

int Polynomial::degree() const {
  // Terms are sorted degree-major, so the first one carries the top degree.
  return terms_.empty() ? -1 : terms_.begin()->first.degree();
}

bool Polynomial::is_homogeneous() const {
  return terms_.empty() ||
         terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

Polynomial Polynomial::homogeneous_component(int degree) const {
  Polynomial out(field_);
  for (const auto& [w, c] : terms_)
    if (w.degree() == degree) out.terms_.emplace_hint(out.terms_.end(), w, c);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [w, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  require_field(g.field_);
  for (const auto& [w, c] : g.terms_) add_term(w, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
  require_field(g.field_);
  for (const auto& [w, c] : g.terms_) add_term(w, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  require_field(c.field());
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, d] : terms_) d *= c;
  return *this;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  f.require_field(g.field_);
  Polynomial out(f.field_);
  for (const auto& [u, a] : f.terms_)
    for (const auto& [v, b] : g.terms_) out.add_term(u * v, a * b);
  return out;
}

// ------------------------------------------------------------- TensorElement

bool TensorOrder::operator()(const std::pair<Word, Word>& a,
                             const std::pair<Word, Word>& b) const {
  int da = a.first.degree() + a.second.degree();
  int db = b.first.degree() + b.second.degree();
  if (da != db) return da > db;
  if (auto c = compare_glex(a.first, b.first); c != 0) return c > 0;
  return compare_glex(a.second, b.second) > 0;
}

TensorElement TensorElement::tensor(const Polynomial& f, const Polynomial& g) {
  if (f.field() != g.field())
    throw std::invalid_argument("mixed scalar fields");
  TensorElement out(f.field());
  for (const auto& [u, a] : f.terms())
    for (const auto& [v, b] : g.terms()) out.add_term(u, v, a * b);
  return out;
}

TensorElement TensorElement::basis(Field field, const Word& left,
                                   const Word& right) {
  TensorElement out(field);
  out.add_term(left, right, Scalar::one(field));
  return out;
}

void TensorElement::require_field(Field other) const {
  if (other != field_) throw std::invalid_argument("mixed scalar fields");
}

Scalar TensorElement::coefficient(const Word& left, const Word& right) const {
  auto it = terms_.find(Key{left, right});
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void TensorElement::add_term(const Word& left, const Word& right,
                             const Scalar& c) {
  require_field(c.field());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{left, right}, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TensorElement TensorElement::component(int degree) const {
  TensorElement out(field_);
  for (const auto& [k, c] : terms_)
    if (k.first.degree() + k.second.degree() == degree)
      out.terms_.emplace_hint(out.terms_.end(), k, c);
  return out;
}

TensorElement TensorElement::operator-() const {
  TensorElement out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

TensorElement& TensorElement::operator+=(const TensorElement& t) {
  require_field(t.field_);
  for (const auto& [k, c] : t.terms_) add_term(k.first, k.second, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& t) {
  require_field(t.field_);
  for (const auto& [k, c] : t.terms_) add_term(k.first, k.second, -c);
  return *this;
}

TensorElement& TensorElement::operator*=(const Scalar& c) {
  require_field(c.field());
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, d] : terms_) d *= c;
  return *this;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
  a.require_field(b.field_);
  TensorElement out(a.field_);
  for (const auto& [k1, c1] : a.terms_)
    for (const auto& [k2, c2] : b.terms_)
      out.add_term(k1.first * k2.first, k1.second * k2.second, c1 * c2);
  return out;
}

// ------------------------------------------------------------------ brackets

Polynomial commutator(const Polynomial& f, const Polynomial& g) {
  return f * g - g * f;
}

namespace {

const Polynomial& bracket_memo(
    const Word& u, Field field,
    std::unordered_map<Word, Polynomial, WordHash>& memo) {
  if (auto it = memo.find(u); it != memo.end()) return it->second;
  Polynomial value(field);
  if (u.length() < 2) {
    value = Polynomial::word(field, u);
  } else {
    auto [left, right] = shirshov_factorization(u);
    Polynomial l = bracket_memo(left, field, memo);
    const Polynomial& r = bracket_memo(right, field, memo);
    value = is_lyndon(u) ? commutator(l, r) : l * r;
  }
  return memo.emplace(u, std::move(value)).first->second;
}

}  // namespace

Polynomial standard_bracket(const Word& u, Field field) {
  std::unordered_map<Word, Polynomial, WordHash> memo;
  return bracket_memo(u, field, memo);
}

Polynomial bracket_monomial(const Word& w, Field field) {
  std::unordered_map<Word, Polynomial, WordHash> memo;
  Polynomial out = Polynomial::constant(field, 1);
  for (const Word& factor : lyndon_decomposition(w))
    out = out * bracket_memo(factor, field, memo);
  return out;
}

Word leading_word(const Polynomial& f) { return f.leading_word(); }

TensorElement standard_comultiplication(const Polynomial& f) {
  const Field field = f.field();
  const Scalar one = Scalar::one(field);
  TensorElement out(field);
  for (const auto& [w, c] : f.terms()) {
    TensorElement image = TensorElement::basis(field, Word(), Word());
    for (Letter x : w.letters()) {
      TensorElement primitive(field);
      primitive.add_term(Word(), Word(x), one);
      primitive.add_term(Word(x), Word(), one);
      image = image * primitive;
    }
    out += c * image;
  }
  return out;
}

bool factors_below(const Word& w, const Word& bound, bool inclusive) {
  if (w.empty()) return true;
  // The Lyndon decomposition is nondecreasing, so its last factor is largest.
  auto factors = lyndon_decomposition(w);
  auto c = compare_lex(factors.back(), bound);
  return inclusive ? c <= 0 : c < 0;
}

}  // namespace pbw
