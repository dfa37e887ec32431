#include <doctest.h>

#include "pbw/poly.hpp"
#include "pbw/rewrite.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace pbw;

namespace {

const Field Q = Field::rationals();

Alphabet letters(int k) {
  std::vector<Alphabet::Generator> gens;
  for (int i = 1; i <= k; ++i) gens.push_back({"x" + std::to_string(i), 1});
  return Alphabet(gens);
}

Polynomial power(const Polynomial& f, int n) {
  Polynomial out = Polynomial::constant(f.field(), 1);
  for (int i = 0; i < n; ++i) out = out * f;
  return out;
}

// The factors of w, in order.
std::vector<Word> factors(const Word& w) { return lyndon_decomposition(w); }

}  // namespace

TEST_CASE("rational and prime-field scalars") {
  const Scalar half(Q, mpq_class(1, 2));
  CHECK((half + half).is_one());
  CHECK((half * Scalar(Q, 4)) == Scalar(Q, 2));
  CHECK(Scalar(Q, mpq_class(-3, 6)).to_string() == "-1/2");
  CHECK_THROWS_AS(Scalar(Q, 1) / Scalar(Q, 0), std::domain_error);

  const Field f5 = Field::prime(5);
  CHECK(Scalar(f5, 7) == Scalar(f5, 2));
  CHECK(Scalar(f5, -1).to_string() == "4");
  CHECK((Scalar(f5, 2) * Scalar(f5, 3)).is_one());
  CHECK(Scalar(f5, mpq_class(1, 2)) == Scalar(f5, 3));
  CHECK_THROWS_AS(Scalar(f5, mpq_class(1, 5)), std::domain_error);
  CHECK_THROWS_AS(Scalar(f5, 1) + Scalar(Q, 1), std::invalid_argument);
  CHECK_THROWS_AS(Field::prime(6), std::invalid_argument);

  CHECK(binomial(Q, 6, 3) == Scalar(Q, 20));
  CHECK(binomial(Field::prime(2), 2, 1).is_zero());
  CHECK(binomial(Field::prime(3), 9, 3).is_zero());
}

TEST_CASE("prime-field products agree with reduced rational products") {
  gen::Source rnd(3);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 101u}) {
    const Field fp = Field::prime(p);
    for (int t = 0; t < 200; ++t) {
      const long a = rnd.integer(-1000, 1000), b = rnd.integer(-1000, 1000);
      const Scalar q = Scalar(Q, a) * Scalar(Q, b);
      REQUIRE(Scalar(fp, a) * Scalar(fp, b) == Scalar(fp, q.rational()));
      REQUIRE(Scalar(fp, a) + Scalar(fp, b) == Scalar(fp, a + b));
    }
  }
}

TEST_CASE("polynomial arithmetic") {
  const Alphabet a = letters(3);
  gen::Source rnd(7);
  for (const Field field : {Q, Field::prime(3)}) {
    for (int t = 0; t < 150; ++t) {
      const Polynomial f = rnd.polynomial(a, field, 3, 4);
      const Polynomial g = rnd.polynomial(a, field, 3, 4);
      const Polynomial h = rnd.polynomial(a, field, 3, 4);
      REQUIRE((f * g) * h == f * (g * h));
      REQUIRE(f * (g + h) == f * g + f * h);
      REQUIRE((f + g) * h == f * h + g * h);
      REQUIRE(f - f == Polynomial(field));
      Polynomial sum(field);
      for (int d = 0; d <= f.degree(); ++d) sum += f.homogeneous_component(d);
      REQUIRE(sum == f);
      for (int d = 0; d <= 6; ++d)
        REQUIRE((f + g).homogeneous_component(d) ==
                f.homogeneous_component(d) + g.homogeneous_component(d));
    }
  }
}

TEST_CASE("terms are stored glex-descending") {
  const Alphabet a({{"x", 1}, {"y", 1}});
  Polynomial f(Q);
  f.add_term(a.word("x"), Scalar(Q, 1));
  f.add_term(a.word("x y"), Scalar(Q, 2));
  f.add_term(a.word("y x"), Scalar(Q, 3));
  CHECK(f.leading_word() == a.word("y x"));
  CHECK(f.leading_coefficient() == Scalar(Q, 3));
  CHECK(f.degree() == 2);
  CHECK_FALSE(f.is_homogeneous());
  f.add_term(a.word("y x"), Scalar(Q, -3));
  CHECK(f.leading_word() == a.word("x y"));
  CHECK_THROWS_AS(leading_word(Polynomial(Q)), std::invalid_argument);
}

TEST_CASE("tensor products multiply leg by leg") {
  const Alphabet a({{"x", 1}, {"y", 1}});
  const TensorElement s = TensorElement::basis(Q, a.word("x"), a.word("y"));
  const TensorElement t = TensorElement::basis(Q, a.word("y"), Word());
  const TensorElement st = s * t;
  CHECK(st.size() == 1);
  CHECK(st.coefficient(a.word("x y"), a.word("y")) == Scalar(Q, 1));
  CHECK(st.component(3).size() == 1);
  CHECK(st.component(2).is_zero());
}

TEST_CASE("standard comultiplication examples") {
  const Alphabet a({{"x", 1}});
  const Word x = a.word("x");
  const TensorElement dx = standard_comultiplication(Polynomial::word(Q, x));
  CHECK(dx.size() == 2);
  CHECK(dx.coefficient(Word(), x) == Scalar(Q, 1));
  CHECK(dx.coefficient(x, Word()) == Scalar(Q, 1));

  const TensorElement dx2 = standard_comultiplication(Polynomial::word(Q, x * x));
  CHECK(dx2.size() == 3);
  CHECK(dx2.coefficient(x, x) == Scalar(Q, 2));
  CHECK(dx2.coefficient(Word(), x * x) == Scalar(Q, 1));
  CHECK(dx2.coefficient(x * x, Word()) == Scalar(Q, 1));

  const Field f2 = Field::prime(2);
  const TensorElement mod2 = standard_comultiplication(Polynomial::word(f2, x * x));
  CHECK(mod2.size() == 2);
  CHECK(mod2.coefficient(x, x).is_zero());
}

TEST_CASE("a bracket leads with its own word (degree <= 6, 3 letters)") {
  const Alphabet a = letters(3);
  for (int n = 1; n <= 6; ++n)
    for (const Word& w : enumerate_words(a, n)) {
      const Polynomial b = standard_bracket(w, Q);
      REQUIRE(b.coefficient(w).is_one());
      REQUIRE(leading_word(b) == w);
      for (const auto& [v, c] : b.terms()) {
        if (v == w) continue;
        REQUIRE(compare_lex(v, w) < 0);
        REQUIRE(v.same_content(w));
      }
    }
}

TEST_CASE("bracket monomials follow the Lyndon decomposition") {
  const Alphabet a = letters(2);
  for (int n = 1; n <= 5; ++n)
    for (const Word& w : enumerate_words(a, n)) {
      Polynomial expected = Polynomial::constant(Q, 1);
      for (const Word& f : factors(w)) expected = expected * standard_bracket(f, Q);
      REQUIRE(bracket_monomial(w, Q) == expected);
      REQUIRE(standard_bracket(w, Q) == expected);
    }
}

TEST_CASE("binomial formula for powers of brackets") {
  for (const Field field : {Q, Field::prime(2), Field::prime(3)}) {
    const Alphabet a = letters(2);
    for (const Word& u : enumerate_lyndon(a, 3))
      for (int n = 1; n <= 4; ++n) {
        const Polynomial b = standard_bracket(u, field);
        const TensorElement lhs = standard_comultiplication(power(b, n));
        TensorElement rhs(field);
        for (int p = 0; p <= n; ++p)
          rhs += binomial(field, n, p) *
                 TensorElement::tensor(power(b, p), power(b, n - p));
        REQUIRE(lhs == rhs);
      }
  }
}

TEST_CASE("commutators of brackets expand into larger brackets (degree <= 6)") {
  const Alphabet a = letters(3);
  const TruncatedGB zero = TruncatedGB::zero_ideal(a, Q);
  BracketExpander ex(zero);
  const std::vector<Word> lyndon = enumerate_lyndon(a, 5);
  std::size_t checked = 0;
  for (const Word& u : lyndon)
    for (const Word& v : lyndon) {
      if (compare_lex(u, v) <= 0 || u.degree() + v.degree() > 6) continue;
      const Word uv = u * v;
      const Polynomial c = ex.coordinates(
          commutator(standard_bracket(u, Q), standard_bracket(v, Q)));
      REQUIRE_FALSE(c.is_zero());
      for (const auto& [w, coeff] : c.terms()) {
        REQUIRE(w.same_content(uv));
        for (const Word& f : factors(w)) {
          REQUIRE(compare_lex(v, f) < 0);
          REQUIRE(compare_lex(f, uv) <= 0);
        }
      }
      ++checked;
    }
  CHECK(checked > 100);
}

TEST_CASE("products of brackets reorder between their smallest and largest factor") {
  const Alphabet a = letters(3);
  const TruncatedGB zero = TruncatedGB::zero_ideal(a, Q);
  BracketExpander ex(zero);
  const std::vector<Word> lyndon = enumerate_lyndon(a, 6);
  gen::Source rnd(23);
  for (int t = 0; t < 400; ++t) {
    std::vector<Word> seqn;
    int degree = 0;
    const int count = rnd.integer(1, 4);
    for (int i = 0; i < count; ++i) {
      const Word& u = lyndon[static_cast<std::size_t>(rnd.integer(0, static_cast<int>(lyndon.size()) - 1))];
      if (degree + u.degree() > 6) break;
      seqn.push_back(u);
      degree += u.degree();
    }
    if (seqn.empty()) continue;
    Polynomial product = Polynomial::constant(Q, 1);
    Word all;
    Word lo = seqn[0], hi = seqn[0];
    for (const Word& u : seqn) {
      product = product * standard_bracket(u, Q);
      all = all * u;
      if (compare_lex(u, lo) < 0) lo = u;
      if (compare_lex(u, hi) > 0) hi = u;
    }
    const Polynomial coords = ex.coordinates(product);
    for (const auto& [w, c] : coords.terms()) {
      REQUIRE(w.same_content(all));
      for (const Word& f : factors(w)) {
        REQUIRE(compare_lex(lo, f) <= 0);
        REQUIRE(compare_lex(f, hi) <= 0);
      }
    }
  }
}

TEST_CASE("commutator with the subalgebra below v stays below uv (degree <= 5)") {
  const Alphabet a = letters(3);
  const TruncatedGB zero = TruncatedGB::zero_ideal(a, Q);
  BracketExpander ex(zero);
  const std::vector<Word> lyndon = enumerate_lyndon(a, 4);
  gen::Source rnd(29);
  std::size_t checked = 0;
  for (const Word& u : lyndon)
    for (const Word& v : lyndon) {
      if (compare_lex(u, v) <= 0 || u.degree() >= 5) continue;
      std::vector<Word> below;
      for (const Word& w : lyndon)
        if (compare_lex(w, v) < 0 && w.degree() + u.degree() <= 5) below.push_back(w);
      if (below.empty()) continue;
      for (int t = 0; t < 4; ++t) {
        Polynomial g = Polynomial::constant(Q, 1);
        int degree = u.degree();
        for (int i = rnd.integer(1, 3); i > 0; --i) {
          const Word& w = below[static_cast<std::size_t>(rnd.integer(0, static_cast<int>(below.size()) - 1))];
          if (degree + w.degree() > 5) break;
          g = g * standard_bracket(w, Q);
          degree += w.degree();
        }
        const Polynomial coords =
            ex.coordinates(commutator(standard_bracket(u, Q), g));
        for (const auto& [w, c] : coords.terms())
          REQUIRE(factors_below(w, u * v));
        ++checked;
      }
    }
  CHECK(checked > 50);
}

TEST_CASE("factors_below") {
  const Alphabet a({{"x1", 1}, {"x2", 1}});
  CHECK(factors_below(Word(), a.word("x1")));
  CHECK(factors_below(a.word("x1 x1"), a.word("x2")));
  CHECK_FALSE(factors_below(a.word("x1 x2"), a.word("x2")));
  CHECK(factors_below(a.word("x1 x2"), a.word("x2"), true));
  CHECK(factors_below(a.word("x2 x1"), a.word("x2")));
}
