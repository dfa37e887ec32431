#include "pbw/coalg.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "pbw/error.hpp"

namespace pbw {

// ----------------------------------------------------------- Comultiplication

Comultiplication::Comultiplication(const Alphabet& alphabet, Field field)
    : alphabet_(alphabet), field_(field), images_(alphabet.size()) {}

Comultiplication Comultiplication::standard(const Alphabet& alphabet,
                                            Field field) {
  Comultiplication delta(alphabet, field);
  const Scalar one = Scalar::one(field);
  for (Letter x : alphabet.letters()) {
    TensorElement image(field);
    image.add_term(Word(), Word(x), one);
    image.add_term(Word(x), Word(), one);
    delta.set_image(x, std::move(image));
  }
  return delta;
}

void Comultiplication::set_image(Letter x, TensorElement image) {
  if (x.index >= images_.size())
    throw std::invalid_argument("letter outside the alphabet");
  if (image.field() != field_)
    throw std::invalid_argument("image of '" + alphabet_.name(x) +
                                "': scalar field mismatch");
  images_[x.index] = std::move(image);
}

bool Comultiplication::has_image(Letter x) const {
  return x.index < images_.size() && images_[x.index].has_value();
}

const TensorElement& Comultiplication::image(Letter x) const {
  if (!has_image(x))
    throw std::invalid_argument("no comultiplication image for generator '" +
                                alphabet_.name(x) + "'");
  return *images_[x.index];
}

bool Comultiplication::is_graded() const {
  for (Letter x : alphabet_.letters()) {
    if (!has_image(x)) continue;
    for (const auto& [key, c] : image(x).terms())
      if (key.first.degree() + key.second.degree() != x.degree) return false;
  }
  return true;
}

TensorElement Comultiplication::apply(const Word& w) const {
  TensorElement out = TensorElement::basis(field_, Word(), Word());
  for (Letter x : w.letters()) out = out * image(x);
  return out;
}

TensorElement Comultiplication::apply(const Polynomial& f) const {
  if (f.field() != field_) throw std::invalid_argument("mixed scalar fields");
  // Words in f share prefixes often enough that caching by prefix pays off.
  std::unordered_map<Word, TensorElement, WordHash> memo;
  std::function<const TensorElement&(const Word&)> image_of =
      [&](const Word& w) -> const TensorElement& {
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    TensorElement value =
        w.empty() ? TensorElement::basis(field_, Word(), Word())
                  : image_of(w.prefix(w.length() - 1)) * image(w[w.length() - 1]);
    return memo.emplace(w, std::move(value)).first->second;
  };
  TensorElement out(field_);
  for (const auto& [w, c] : f.terms()) out += c * image_of(w);
  return out;
}

TensorElement reduced_image(const Comultiplication& delta, Letter x) {
  TensorElement rest = delta.image(x);
  const Scalar one = Scalar::one(delta.field());
  rest.add_term(Word(), Word(x), -one);
  rest.add_term(Word(x), Word(), -one);
  return rest;
}

// ------------------------------------------------------------- triangularity

TriangularReport check_triangular(const Comultiplication& delta, bool graded) {
  TriangularReport report;
  report.graded = graded;
  const Alphabet& alphabet = delta.alphabet();
  const TruncatedGB free = TruncatedGB::zero_ideal(alphabet, delta.field());
  BracketExpander expander(free);

  for (Letter x : alphabet.letters()) {
    if (!delta.has_image(x)) {
      report.violations.push_back(
          {x, "no comultiplication image", TensorElement(delta.field())});
      continue;
    }
    const TensorElement rest = reduced_image(delta, x);
    TensorElement above(delta.field()), below(delta.field()),
        top(delta.field());
    for (const auto& [key, c] : rest.terms()) {
      const int d = key.first.degree() + key.second.degree();
      if (d > x.degree)
        above.add_term(key.first, key.second, c);
      else if (d < x.degree)
        below.add_term(key.first, key.second, c);
      else
        top.add_term(key.first, key.second, c);
    }
    if (!above.is_zero())
      report.violations.push_back(
          {x, "terms of degree above " + std::to_string(x.degree), above});
    if (graded && !below.is_zero())
      report.violations.push_back(
          {x, "lower-degree tail in a graded comultiplication", below});

    // Terms above deg(x) are already a violation; their legs are checked
    // too so that the report names every offending factor.
    const TensorElement coords = expander.coordinates(top + above);
    TensorElement scalar_leg(delta.field()), not_below(delta.field());
    std::string first_bad;
    const Word bound(x);
    for (const auto& [key, c] : coords.terms()) {
      if (key.first.empty() || key.second.empty()) {
        scalar_leg.add_term(key.first, key.second, c);
        continue;
      }
      for (const Word* leg : {&key.first, &key.second}) {
        if (factors_below(*leg, bound)) continue;
        if (first_bad.empty()) first_bad = alphabet.render(*leg);
        not_below.add_term(key.first, key.second, c);
        break;
      }
    }
    if (!scalar_leg.is_zero())
      report.violations.push_back(
          {x, "top-degree term with a scalar leg", scalar_leg});
    if (!not_below.is_zero())
      report.violations.push_back(
          {x,
           "leg '" + first_bad + "' has a Lyndon factor not < " +
               alphabet.name(x),
           not_below});
  }
  return report;
}

// ----------------------------------------------------------------- stability

StabilityReport check_stability(const Comultiplication& delta,
                                const TruncatedGB& gb) {
  StabilityReport report;
  for (const Polynomial& g : gb.elements()) {
    ++report.checked;
    try {
      TensorElement residue = normal_form_legs(delta.apply(g), gb);
      if (!residue.is_zero())
        report.failures.push_back({g, std::move(residue), {}});
    } catch (const OutOfCertifiedRange& e) {
      report.failures.push_back({g, TensorElement(gb.field()), e.what()});
    }
  }
  return report;
}

// ----------------------------------------------------------- coassociativity

namespace {

using TripleKey = std::tuple<Word, Word, Word>;

struct TripleOrder {
  bool operator()(const TripleKey& a, const TripleKey& b) const {
    if (auto c = compare_glex(std::get<0>(a), std::get<0>(b)); c != 0)
      return c > 0;
    if (auto c = compare_glex(std::get<1>(a), std::get<1>(b)); c != 0)
      return c > 0;
    return compare_glex(std::get<2>(a), std::get<2>(b)) > 0;
  }
};

using Triple = std::map<TripleKey, Scalar, TripleOrder>;

void add_to(Triple& t, TripleKey key, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.try_emplace(std::move(key), c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) t.erase(it);
}

class LegReducer {
 public:
  explicit LegReducer(const TruncatedGB& gb) : gb_(gb) {}
  const Polynomial& operator()(const Word& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    return memo_
        .emplace(w, normal_form(Polynomial::word(gb_.field(), w), gb_))
        .first->second;
  }

 private:
  const TruncatedGB& gb_;
  std::unordered_map<Word, Polynomial, WordHash> memo_;
};

Triple reduce_legs(const Triple& t, LegReducer& nf) {
  Triple out;
  for (const auto& [key, c] : t) {
    const Polynomial& a = nf(std::get<0>(key));
    if (a.is_zero()) continue;
    const Polynomial& b = nf(std::get<1>(key));
    if (b.is_zero()) continue;
    const Polynomial& d = nf(std::get<2>(key));
    for (const auto& [wa, ca] : a.terms())
      for (const auto& [wb, cb] : b.terms())
        for (const auto& [wd, cd] : d.terms())
          add_to(out, {wa, wb, wd}, c * ca * cb * cd);
  }
  return out;
}

class WordImages {
 public:
  explicit WordImages(const Comultiplication& delta) : delta_(delta) {}
  const TensorElement& operator()(const Word& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    return memo_.emplace(w, delta_.apply(w)).first->second;
  }

 private:
  const Comultiplication& delta_;
  std::unordered_map<Word, TensorElement, WordHash> memo_;
};

bool coassociative_at(const Word& w, WordImages& images, LegReducer& nf) {
  const TensorElement& first = images(w);
  Triple left, right;
  for (const auto& [key, c] : first.terms()) {
    for (const auto& [k2, c2] : images(key.first).terms())
      add_to(left, {k2.first, k2.second, key.second}, c * c2);
    for (const auto& [k2, c2] : images(key.second).terms())
      add_to(right, {key.first, k2.first, k2.second}, c * c2);
  }
  return reduce_legs(left, nf) == reduce_legs(right, nf);
}

}  // namespace

bool CoalgebraReport::coassociative() const {
  for (const auto& f : failures)
    if (f.law == CoalgebraLaw::coassociativity) return false;
  return true;
}

bool CoalgebraReport::counital() const {
  for (const auto& f : failures)
    if (f.law != CoalgebraLaw::coassociativity) return false;
  return true;
}

CoalgebraReport check_coassoc_counit(const Comultiplication& delta,
                                     const TruncatedGB& gb, int max_degree) {
  CoalgebraReport report;
  report.degree = max_degree;
  const Field field = delta.field();
  WordImages images(delta);
  LegReducer nf(gb);

  for (Letter x : delta.alphabet().letters()) {
    const Word w(x);
    ++report.tested;
    if (!coassociative_at(w, images, nf))
      report.failures.push_back(
          {CoalgebraLaw::coassociativity, w, Polynomial(field)});
    Polynomial left(field), right(field);
    for (const auto& [key, c] : images(w).terms()) {
      if (key.first.empty()) left.add_term(key.second, c);
      if (key.second.empty()) right.add_term(key.first, c);
    }
    left.add_term(w, -Scalar::one(field));
    right.add_term(w, -Scalar::one(field));
    left = normal_form(left, gb);
    right = normal_form(right, gb);
    if (!left.is_zero())
      report.failures.push_back({CoalgebraLaw::left_counit, w, left});
    if (!right.is_zero())
      report.failures.push_back({CoalgebraLaw::right_counit, w, right});
  }

  for (int n = 2; n <= max_degree; ++n) {
    for (const Word& w : irreducible_words(gb, n)) {
      if (w.is_letter()) continue;
      ++report.tested;
      if (!coassociative_at(w, images, nf))
        report.failures.push_back(
            {CoalgebraLaw::coassociativity, w, Polynomial(field)});
    }
  }
  return report;
}

// ----------------------------------------------------------- Lie polynomials

bool is_lie_polynomial(const Polynomial& f) {
  if (!f.field().is_rational())
    throw Unsupported(
        "Lie polynomial test by primitivity needs characteristic 0");
  const Polynomial one = Polynomial::constant(f.field(), 1);
  return standard_comultiplication(f) ==
         TensorElement::tensor(one, f) + TensorElement::tensor(f, one);
}

// ------------------------------------------------------------------ antipode

namespace {

const char* law_name(CoalgebraLaw law) {
  switch (law) {
    case CoalgebraLaw::coassociativity:
      return "coassociativity";
    case CoalgebraLaw::left_counit:
      return "left counit";
    case CoalgebraLaw::right_counit:
      return "right counit";
  }
  return "?";
}

}  // namespace

Antipode::Antipode(const Comultiplication& delta, const TruncatedGB& gb)
    : delta_(&delta), gb_(&gb) {
  if (!delta.is_graded())
    throw Unsupported("antipode needs a graded comultiplication");
  const CoalgebraReport check = check_coassoc_counit(delta, gb, gb.bound());
  if (!check.ok()) {
    const auto& f = check.failures.front();
    throw HypothesisFailure(std::string("antipode refused: ") +
                            law_name(f.law) + " fails at '" +
                            delta.alphabet().render(f.at) + "'");
  }

  const Field field = delta.field();
  const Alphabet& alphabet = delta.alphabet();
  std::vector<bool> done(alphabet.size(), false);
  letters_.assign(alphabet.size(), Polynomial(field));
  // Letters come degree-major, so every lower-degree leg is already known.
  for (Letter x : alphabet.letters()) {
    Polynomial s = -Polynomial::word(field, Word(x));
    const TensorElement rest = reduced_image(delta, x);
    for (const auto& [key, c] : rest.terms()) {
      for (Letter y : key.first.letters())
        if (!done[y.index])
          throw Unsupported("antipode recursion for '" + alphabet.name(x) +
                            "' needs S('" + alphabet.name(y) + "') first");
      Polynomial term = apply(Polynomial::word(field, key.first));
      term = term * Polynomial::word(field, key.second);
      term *= c;
      s -= term;
    }
    letters_[x.index] = normal_form(s, gb);
    done[x.index] = true;
  }
}

const Polynomial& Antipode::on_letter(Letter x) const {
  return letters_.at(x.index);
}

Polynomial Antipode::apply(const Polynomial& f) const {
  const Field field = gb_->field();
  Polynomial out(field);
  for (const auto& [w, c] : f.terms()) {
    Polynomial image = Polynomial::constant(field, 1);
    for (std::size_t i = w.length(); i-- > 0;)
      image = normal_form(image * letters_[w[i].index], *gb_);
    image *= c;
    out += image;
  }
  return out;
}

Polynomial Antipode::convolution_defect(const Polynomial& f,
                                        bool right) const {
  const Field field = gb_->field();
  Polynomial sum(field);
  const TensorElement image = delta_->apply(f);
  for (const auto& [key, c] : image.terms()) {
    const Polynomial a = Polynomial::word(field, key.first);
    const Polynomial b = Polynomial::word(field, key.second);
    Polynomial term = right ? a * apply(b) : apply(a) * b;
    term *= c;
    sum += term;
  }
  sum = normal_form(sum, *gb_);
  sum.add_term(Word(), -f.coefficient(Word()));
  return sum;
}

Polynomial antipode_normal_form(const Comultiplication& delta,
                                const TruncatedGB& gb, const Polynomial& f) {
  return Antipode(delta, gb).apply(f);
}

// ------------------------------------------------------- power coproducts

namespace {

// w = a.u^r with a nonempty and every Lyndon factor of a below u.
bool in_power_leg(const Word& w, const Word& u) {
  if (w.empty()) return false;
  const auto factors = lyndon_decomposition(w);
  return compare_lex(factors.front(), u) < 0 &&
         compare_lex(factors.back(), u) <= 0;
}

}  // namespace

PowerReport check_power_comultiplication(const Comultiplication& delta,
                                         const Word& u, int n) {
  if (!is_lyndon(u)) throw std::invalid_argument("u must be a Lyndon word");
  if (n < 1) throw std::invalid_argument("exponent must be positive");
  if (!check_triangular(delta, false).ok())
    throw HypothesisFailure("comultiplication is not triangular");

  const Field field = delta.field();
  const Polynomial bracket = standard_bracket(u, field);
  std::vector<Polynomial> powers{Polynomial::constant(field, 1)};
  for (int i = 1; i <= n; ++i) powers.push_back(powers.back() * bracket);

  PowerReport report{TensorElement(field), TensorElement(field), {}};
  for (int p = 0; p <= n; ++p)
    report.binomial_part += binomial(field, n, p) *
                            TensorElement::tensor(powers[static_cast<std::size_t>(p)],
                                                  powers[static_cast<std::size_t>(n - p)]);

  const TensorElement rest =
      (delta.apply(powers.back()) - report.binomial_part)
          .component(n * u.degree());
  const TruncatedGB free = TruncatedGB::zero_ideal(delta.alphabet(), field);
  BracketExpander expander(free);
  report.middle = expander.coordinates(rest);
  for (const auto& [key, c] : report.middle.terms())
    if (!in_power_leg(key.first, u) || !in_power_leg(key.second, u))
      report.offending.push_back(key);
  return report;
}

}  // namespace pbw
