#include <doctest.h>

#include "pbw/coalg.hpp"
#include "pbw/error.hpp"
#include "pbw/expression.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace pbw;

namespace {

const Field Q = Field::rationals();

TruncatedGB gb_of(const Presentation& p) {
  return compute_truncated_gb(p.alphabet, p.field, p.relations, p.bound);
}

Comultiplication with_image(const Alphabet& a, const std::string& name,
                            const std::string& image, Field field = Q) {
  Comultiplication d = Comultiplication::standard(a, field);
  d.set_image(a.at(name), parse_tensor(image, a, field));
  return d;
}

// A random linear combination of brackets of Lyndon words of one degree.
Polynomial random_lie(gen::Source& rnd, const Alphabet& a, int degree) {
  Polynomial f(Q);
  std::vector<Word> lyndon;
  for (const Word& w : enumerate_lyndon(a, degree))
    if (w.degree() == degree) lyndon.push_back(w);
  for (int i = rnd.integer(1, 3); i > 0; --i) {
    const Word& w = lyndon[static_cast<std::size_t>(rnd.integer(0, static_cast<int>(lyndon.size()) - 1))];
    f += Scalar(Q, rnd.integer(-3, 3)) * standard_bracket(w, Q);
  }
  return f;
}

}  // namespace

TEST_CASE("comultiplication is an algebra map") {
  const Presentation p = fixture::nonprimitive();
  const Comultiplication& d = p.comultiplication;
  const Alphabet& a = p.alphabet;
  CHECK(d.is_graded());
  CHECK(render(d.apply(a.word("x")), a) == "x#1 + 1#x");
  CHECK(d.apply(Polynomial::constant(Q, 1)) == TensorElement::basis(Q, Word(), Word()));
  gen::Source rnd(61);
  for (int t = 0; t < 60; ++t) {
    const Polynomial f = rnd.polynomial(a, Q, 3, 3);
    const Polynomial g = rnd.polynomial(a, Q, 3, 3);
    REQUIRE(d.apply(f * g) == d.apply(f) * d.apply(g));
    REQUIRE(d.apply(f + g) == d.apply(f) + d.apply(g));
  }
  Comultiplication empty(a, Q);
  CHECK_FALSE(empty.has_image(a.at("x")));
  CHECK_THROWS_AS(empty.image(a.at("x")), std::invalid_argument);
  CHECK_FALSE(with_image(a, "y", "1#y + y#1 + x#1", Q).is_graded());
}

TEST_CASE("triangularity") {
  const Alphabet a({{"x", 1}, {"y", 1}});
  SUBCASE("primitive generators") {
    CHECK(check_triangular(Comultiplication::standard(a, Q)).ok());
  }
  SUBCASE("a cross term on the larger letter is allowed") {
    const Alphabet b({{"x", 1}, {"y", 2}});
    CHECK(check_triangular(with_image(b, "y", "1#y + y#1 + x#x")).ok());
  }
  SUBCASE("a term using the letter itself is not") {
    const TriangularReport r = check_triangular(with_image(a, "x", "1#x + x#1 + y#y"));
    REQUIRE(r.violations.size() >= 1);
    CHECK(a.name(r.violations[0].generator) == "x");
    bool named = false;
    for (const auto& v : r.violations)
      named = named || v.reason.find("Lyndon factor not < x") != std::string::npos;
    CHECK(named);
  }
  SUBCASE("scalar legs at top degree") {
    const Alphabet b({{"x", 1}, {"y", 2}});
    const TriangularReport r = check_triangular(with_image(b, "y", "1#y + y#1 + 1#x^2"));
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].reason == "top-degree term with a scalar leg");
  }
  SUBCASE("lower-degree tails only in the non-graded check") {
    const Alphabet b({{"x", 1}, {"y", 2}});
    const Comultiplication d = with_image(b, "y", "1#y + y#1 + x#1");
    CHECK_FALSE(check_triangular(d).ok());
    CHECK(check_triangular(d, false).ok());
    const Comultiplication above = with_image(b, "x", "1#x + x#1 + x#x");
    CHECK_FALSE(check_triangular(above, false).ok());
  }
  SUBCASE("random triangular comultiplications") {
    const Alphabet b({{"x1", 1}, {"x2", 1}, {"x3", 2}, {"x4", 3}});
    gen::Source rnd(67);
    for (int t = 0; t < 40; ++t) REQUIRE(check_triangular(rnd.triangular(b, Q)).ok());
  }
}

TEST_CASE("stability") {
  SUBCASE("x^2 with x primitive leaves 2 x#x behind") {
    const Presentation p = fixture::truncated_power(2, 4, Q);
    const TruncatedGB gb = gb_of(p);
    const StabilityReport r = check_stability(p.comultiplication, gb);
    REQUIRE(r.failures.size() == 1);
    CHECK(render(r.failures[0].residue, p.alphabet) == "2*x#x");
  }
  SUBCASE("the same relation in characteristic 2 is stable") {
    const Presentation p = fixture::truncated_power(2, 4, Field::prime(2));
    CHECK(check_stability(p.comultiplication, gb_of(p)).ok());
  }
  SUBCASE("corpus-style presentations") {
    for (const Presentation& p : {fixture::heisenberg(), fixture::nonprimitive(),
                                  fixture::two_generator_heisenberg()}) {
      const StabilityReport r = check_stability(p.comultiplication, gb_of(p));
      CHECK(r.ok());
      CHECK(r.checked > 0);
    }
  }
  SUBCASE("ideals generated by Lie polynomials are stable") {
    gen::Source rnd(71);
    for (int t = 0; t < 25; ++t) {
      Presentation p = t % 2 ? fixture::free_algebra(2, 5) : fixture::free_algebra(3, 4);
      for (int r = rnd.integer(1, 2); r > 0; --r) {
        const Polynomial f = random_lie(rnd, p.alphabet, rnd.integer(2, 4));
        if (!f.is_zero() && f.degree() <= p.bound) p.relations.push_back(f);
      }
      if (p.relations.empty()) continue;
      const StabilityReport rep = check_stability(p.comultiplication, gb_of(p));
      REQUIRE(rep.ok());
    }
  }
}

TEST_CASE("coassociativity and counit") {
  SUBCASE("passing cases") {
    for (const Presentation& p : {fixture::heisenberg(), fixture::nonprimitive()}) {
      const CoalgebraReport r = check_coassoc_counit(p.comultiplication, gb_of(p), p.bound);
      CHECK(r.ok());
      CHECK(r.coassociative());
      CHECK(r.counital());
    }
  }
  SUBCASE("x#x^2 breaks coassociativity") {
    Presentation p = fixture::make({{"x", 1}, {"y", 3}}, {}, 4);
    fixture::set_image(p, "y", "1#y + y#1 + x#x^2");
    const CoalgebraReport r = check_coassoc_counit(p.comultiplication, gb_of(p), 4);
    CHECK_FALSE(r.coassociative());
    CHECK(r.counital());
  }
  SUBCASE("a doubled term breaks the counit") {
    Presentation p = fixture::make({{"x", 1}}, {}, 3);
    fixture::set_image(p, "x", "1#x + 2*x#1");
    const CoalgebraReport r = check_coassoc_counit(p.comultiplication, gb_of(p), 3);
    CHECK_FALSE(r.counital());
    bool right = false;
    for (const auto& f : r.failures) right = right || f.law == CoalgebraLaw::right_counit;
    CHECK(right);
  }
}

TEST_CASE("Lie polynomials agree with the Dynkin criterion") {
  const Alphabet a({{"x1", 1}, {"x2", 1}});
  gen::Source rnd(73);
  int lie = 0;
  for (int t = 0; t < 600; ++t) {
    const int n = rnd.integer(1, 5);
    Polynomial f = t % 3 == 0 ? rnd.homogeneous(a, Q, n, 4) : random_lie(rnd, a, n);
    if (t % 5 == 0 && !f.is_zero())
      f.add_term(rnd.word_of_degree(a, n), Scalar(Q, 1));
    if (f.is_zero()) continue;
    auto expected = oracle::as_map(f);
    for (auto& [w, c] : expected) c *= n;
    const bool dynkin = oracle::dynkin(oracle::as_map(f)) == expected;
    REQUIRE(is_lie_polynomial(f) == dynkin);
    lie += dynkin;
  }
  CHECK(lie > 100);
  CHECK_THROWS_AS(is_lie_polynomial(parse_polynomial("x1", a, Field::prime(3))), Unsupported);
}

TEST_CASE("antipode") {
  SUBCASE("non-primitive generator") {
    const Presentation p = fixture::nonprimitive();
    const TruncatedGB gb = gb_of(p);
    const Antipode s(p.comultiplication, gb);
    CHECK(render(s.on_letter(p.alphabet.at("x")), p.alphabet) == "-x");
    CHECK(render(s.on_letter(p.alphabet.at("y")), p.alphabet) == "-y + x^2");
  }
  SUBCASE("convolution inverse on every basis word") {
    std::vector<Presentation> cases{fixture::heisenberg(), fixture::nonprimitive(),
                                    fixture::two_generator_heisenberg()};
    for (std::uint32_t q : {2u, 3u})
      cases.push_back(fixture::truncated_power(static_cast<int>(q), 2 * static_cast<int>(q), Field::prime(q)));
    for (const Presentation& p : cases) {
      const TruncatedGB gb = gb_of(p);
      const Antipode s(p.comultiplication, gb);
      for (int n = 0; n <= p.bound; ++n)
        for (const Word& w : irreducible_words(gb, n)) {
          const Polynomial f = Polynomial::word(p.field, w);
          REQUIRE(s.convolution_defect(f).is_zero());
          REQUIRE(s.convolution_defect(f, true).is_zero());
        }
    }
  }
  SUBCASE("anti-multiplicative") {
    const Presentation p = fixture::nonprimitive();
    const TruncatedGB gb = gb_of(p);
    const Antipode s(p.comultiplication, gb);
    gen::Source rnd(79);
    for (int t = 0; t < 40; ++t) {
      const Polynomial f = rnd.polynomial(p.alphabet, Q, 3, 3);
      const Polynomial g = rnd.polynomial(p.alphabet, Q, 3, 3);
      REQUIRE(s.apply(f * g) == normal_form(s.apply(g) * s.apply(f), gb));
    }
  }
  SUBCASE("refusals") {
    Presentation p = fixture::make({{"x", 1}, {"y", 3}}, {}, 4);
    fixture::set_image(p, "y", "1#y + y#1 + x#x^2");
    const TruncatedGB gb = gb_of(p);
    CHECK_THROWS_AS(Antipode(p.comultiplication, gb), HypothesisFailure);
    Presentation q = fixture::make({{"x", 1}, {"y", 2}}, {}, 4);
    fixture::set_image(q, "y", "1#y + y#1 + x#1");
    const TruncatedGB gq = gb_of(q);
    CHECK_THROWS_AS(Antipode(q.comultiplication, gq), Unsupported);
  }
}

TEST_CASE("comultiplication of bracket powers") {
  const Alphabet a({{"x1", 1}, {"x2", 1}});
  const Comultiplication ds = Comultiplication::standard(a, Q);
  SUBCASE("a letter squared is exactly binomial") {
    const PowerReport r = check_power_comultiplication(ds, a.word("x1"), 2);
    CHECK(r.ok());
    CHECK(r.middle.is_zero());
    CHECK(r.binomial_part.size() == 3);
  }
  SUBCASE("[x2 x1] is primitive") {
    const PowerReport r = check_power_comultiplication(ds, a.word("x2 x1"), 1);
    CHECK(r.ok());
    CHECK(r.middle.is_zero());
    const TensorElement image = ds.apply(standard_bracket(a.word("x2 x1"), Q));
    CHECK(image == TensorElement::tensor(Polynomial::constant(Q, 1),
                                         standard_bracket(a.word("x2 x1"), Q)) +
                       TensorElement::tensor(standard_bracket(a.word("x2 x1"), Q),
                                             Polynomial::constant(Q, 1)));
  }
  SUBCASE("a non-primitive generator squared has a middle part") {
    const Alphabet b({{"x", 1}, {"y", 2}});
    const PowerReport r =
        check_power_comultiplication(with_image(b, "y", "1#y + y#1 + x#x"), b.word("y"), 2);
    CHECK(r.ok());
    CHECK_FALSE(r.middle.is_zero());
  }
  SUBCASE("random triangular comultiplications") {
    const Alphabet b({{"x1", 1}, {"x2", 1}, {"x3", 2}, {"x4", 3}});
    gen::Source rnd(83);
    for (int t = 0; t < 12; ++t) {
      const Comultiplication d = rnd.triangular(b, Q);
      for (const Word& u : enumerate_lyndon(b, 3))
        for (int n = 1; n * u.degree() <= 6; ++n) {
          CAPTURE(render_word(u, b));
          REQUIRE(check_power_comultiplication(d, u, n).ok());
        }
    }
  }
  SUBCASE("argument checks") {
    CHECK_THROWS_AS(check_power_comultiplication(ds, a.word("x1 x2"), 1), std::invalid_argument);
    CHECK_THROWS_AS(check_power_comultiplication(ds, a.word("x1"), 0), std::invalid_argument);
    const Comultiplication bad = with_image(a, "x1", "1#x1 + x1#1 + x2#x2");
    CHECK_THROWS_AS(check_power_comultiplication(bad, a.word("x1"), 1), HypothesisFailure);
  }
}
