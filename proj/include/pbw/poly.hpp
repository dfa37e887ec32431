#pragma once

#include <map>
#include <utility>

#include "pbw/scalar.hpp"
#include "pbw/word.hpp"

namespace pbw {

/// An element of the free algebra k<X>: a finitely supported map from words
/// to scalars. Zero coefficients are never stored; terms iterate from the
/// glex-largest word down.
class Polynomial {
 public:
  using Terms = std::map<Word, Scalar, GlexGreater>;

  explicit Polynomial(Field field = Field::rationals()) : field_(field) {}
  Polynomial(const Word& w, const Scalar& c);

  static Polynomial constant(Field field, long value);
  static Polynomial word(Field field, const Word& w);

  Field field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coefficient(const Word& w) const;
  /// Adds c*w, dropping the term if it cancels.
  void add_term(const Word& w, const Scalar& c);
  /// Adds c * left * f * right.
  void add_scaled(const Scalar& c, const Word& left, const Polynomial& f,
                  const Word& right);

  /// Throws std::invalid_argument on the zero polynomial.
  const Word& leading_word() const;
  const Scalar& leading_coefficient() const;
  /// Largest degree in the support; -1 for zero.
  int degree() const;
  bool is_homogeneous() const;
  Polynomial homogeneous_component(int degree) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  Polynomial& operator*=(const Scalar& c);

  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Scalar& c, Polynomial f) { return f *= c; }
  friend bool operator==(const Polynomial& f, const Polynomial& g) {
    return f.field_ == g.field_ && f.terms_ == g.terms_;
  }

 private:
  void require_field(Field other) const;

  Field field_;
  Terms terms_;
};

struct TensorOrder {
  bool operator()(const std::pair<Word, Word>& a,
                  const std::pair<Word, Word>& b) const;
};

/// An element of k<X> (x) k<X>. Products concatenate componentwise.
class TensorElement {
 public:
  using Key = std::pair<Word, Word>;
  using Terms = std::map<Key, Scalar, TensorOrder>;

  explicit TensorElement(Field field = Field::rationals()) : field_(field) {}

  /// f (x) g.
  static TensorElement tensor(const Polynomial& f, const Polynomial& g);
  static TensorElement basis(Field field, const Word& left, const Word& right);

  Field field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coefficient(const Word& left, const Word& right) const;
  void add_term(const Word& left, const Word& right, const Scalar& c);
  /// Terms of total degree exactly `degree`.
  TensorElement component(int degree) const;

  TensorElement operator-() const;
  TensorElement& operator+=(const TensorElement& t);
  TensorElement& operator-=(const TensorElement& t);
  TensorElement& operator*=(const Scalar& c);

  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
  friend TensorElement operator*(const Scalar& c, TensorElement t) { return t *= c; }
  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

 private:
  void require_field(Field other) const;

  Field field_;
  Terms terms_;
};

/// fg - gf.
Polynomial commutator(const Polynomial& f, const Polynomial& g);

/// The standard bracketing: [x] = x, [u] = [[u_L],[u_R]] for Lyndon u and
/// [u_L][u_R] otherwise, with (u_L, u_R) the Shirshov factorization.
Polynomial standard_bracket(const Word& u, Field field);

/// Product of standard brackets over the Lyndon decomposition of w.
Polynomial bracket_monomial(const Word& w, Field field);

/// The glex-largest word in the support. Throws std::invalid_argument on 0.
Word leading_word(const Polynomial& f);

/// The algebra map sending every letter x to 1(x)x + x(x)1.
TensorElement standard_comultiplication(const Polynomial& f);

/// True when every Lyndon factor of w is lex-smaller than `bound`
/// (smaller or equal when `inclusive`). Vacuously true for the empty word.
bool factors_below(const Word& w, const Word& bound, bool inclusive = false);

}  // namespace pbw
