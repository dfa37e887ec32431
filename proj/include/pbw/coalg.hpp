#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pbw/poly.hpp"
#include "pbw/rewrite.hpp"

namespace pbw {

/// An algebra map k<X> -> k<X> (x) k<X>, fixed by the images of the letters.
class Comultiplication {
 public:
  /// No images set yet; apply() refuses until every letter has one.
  Comultiplication(const Alphabet& alphabet, Field field);
  /// Every letter primitive: x -> 1(x)x + x(x)1.
  static Comultiplication standard(const Alphabet& alphabet, Field field);

  const Alphabet& alphabet() const { return alphabet_; }
  Field field() const { return field_; }

  void set_image(Letter x, TensorElement image);
  /// Throws std::invalid_argument when x has no image.
  const TensorElement& image(Letter x) const;
  bool has_image(Letter x) const;

  /// True when every image is homogeneous of total degree deg(x).
  bool is_graded() const;

  /// The algebra-map extension; apply(1) = 1(x)1.
  TensorElement apply(const Polynomial& f) const;
  TensorElement apply(const Word& w) const;

 private:
  Alphabet alphabet_;
  Field field_;
  std::vector<std::optional<TensorElement>> images_;  // by letter index
};

/// Delta(x) - 1(x)x - x(x)1 for one letter.
TensorElement reduced_image(const Comultiplication& delta, Letter x);

// ------------------------------------------------------------- triangularity

struct TriangularViolation {
  Letter generator;
  std::string reason;
  TensorElement terms;  // the offending part of the reduced image
};

struct TriangularReport {
  bool graded = true;
  std::vector<TriangularViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks each reduced image: its top-degree part must lie in
/// sum_{i,j>0} k<X>^{<x}_i (x) k<X>^{<x}_j, nothing may sit above deg(x),
/// and with `graded` nothing may sit below it either. Membership is read
/// off free-algebra bracket coordinates on each leg.
TriangularReport check_triangular(const Comultiplication& delta,
                                  bool graded = true);

// ----------------------------------------------------------------- stability

struct StabilityFailure {
  Polynomial element;      // Groebner basis element g
  TensorElement residue;   // leg-wise normal form of Delta(g)
  std::string note;        // set when the residue could not be computed
};

struct StabilityReport {
  std::size_t checked = 0;
  std::vector<StabilityFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Delta(I) lies in k<X>(x)I + I(x)k<X> up to the bound iff every basis
/// element g has leg-wise normal form of Delta(g) equal to zero.
StabilityReport check_stability(const Comultiplication& delta,
                                const TruncatedGB& gb);

// ------------------------------------------------------- coassociativity

enum class CoalgebraLaw { coassociativity, left_counit, right_counit };

struct CoalgebraFailure {
  CoalgebraLaw law;
  Word at;
  Polynomial residue;  // counit failures only: the image minus the input
};

struct CoalgebraReport {
  int degree = 0;  // words up to this degree were tested
  std::size_t tested = 0;
  std::vector<CoalgebraFailure> failures;
  bool ok() const { return failures.empty(); }
  bool coassociative() const;
  bool counital() const;
};

/// Coassociativity on the letters and on every irreducible word of degree
/// <= max_degree, compared leg-wise modulo I; the counit laws, with epsilon
/// the projection to degree 0, on the letters (both sides are algebra maps).
CoalgebraReport check_coassoc_counit(const Comultiplication& delta,
                                     const TruncatedGB& gb, int max_degree);

// ----------------------------------------------------------- Lie polynomials

/// True iff Delta_s(f) = 1(x)f + f(x)1. Throws Unsupported outside
/// characteristic 0, where primitives need not be Lie polynomials.
bool is_lie_polynomial(const Polynomial& f);

// ------------------------------------------------------------------ antipode

/// The antipode of k<X|I>, computed on letters by degree recursion
///   S(z) = -z - sum m(S(x)id)(Delta(z) - z(x)1 - 1(x)z)
/// and extended anti-multiplicatively. Results are in normal form.
class Antipode {
 public:
  /// Throws HypothesisFailure when the coassociativity or counit check fails
  /// up to the bound, Unsupported when Delta is not graded.
  Antipode(const Comultiplication& delta, const TruncatedGB& gb);

  const Polynomial& on_letter(Letter x) const;
  Polynomial apply(const Polynomial& f) const;

  /// NF(m(S(x)id)Delta(f)) - epsilon(f), or with S on the right leg when
  /// `right` is set. Zero for every f when S is an antipode.
  Polynomial convolution_defect(const Polynomial& f, bool right = false) const;

 private:
  const Comultiplication* delta_;
  const TruncatedGB* gb_;
  std::vector<Polynomial> letters_;  // by letter index
};

Polynomial antipode_normal_form(const Comultiplication& delta,
                                const TruncatedGB& gb, const Polynomial& f);

// ------------------------------------------------------- power coproducts

struct PowerReport {
  TensorElement binomial_part;  // sum_p C(n,p) [u]^p (x) [u]^{n-p}
  TensorElement middle;         // top-degree remainder, bracket coordinates
  std::vector<std::pair<Word, Word>> offending;  // coordinate keys outside
  bool ok() const { return offending.empty(); }
};

/// Checks that the top-degree part of Delta([u]^n) minus the binomial terms
/// lies in sum k<X>^{<u}_i [u]^r (x) k<X>^{<u}_j [u]^s with i, j > 0.
/// Throws std::invalid_argument for non-Lyndon u or n < 1, and
/// HypothesisFailure when Delta is not triangular.
PowerReport check_power_comultiplication(const Comultiplication& delta,
                                         const Word& u, int n);

}  // namespace pbw
