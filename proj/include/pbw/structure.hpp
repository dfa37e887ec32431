#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pbw/coalg.hpp"
#include "pbw/rewrite.hpp"

namespace pbw {

/// k<X>/I with the images of the generators under Delta and the degree
/// bound D up to which everything is certified.
struct Presentation {
  Alphabet alphabet;
  Field field;
  std::vector<Polynomial> relations;
  Comultiplication comultiplication;
  int bound = 0;
};

struct Verdict {
  std::string name;
  bool pass = false;
  std::string detail;
};

bool all_pass(const std::vector<Verdict>& verdicts);

/// The Groebner basis, irreducible data and bracket tables of one
/// presentation, computed once and shared by the operations below.
class Analysis {
 public:
  /// Throws whatever compute_truncated_gb throws.
  explicit Analysis(Presentation presentation);
  Analysis(const Analysis&) = delete;
  Analysis& operator=(const Analysis&) = delete;

  const Presentation& presentation() const { return presentation_; }
  const Alphabet& alphabet() const { return presentation_.alphabet; }
  Field field() const { return presentation_.field; }
  int bound() const { return presentation_.bound; }
  const TruncatedGB& gb() const { return *gb_; }
  const IrreducibleData& data() const { return data_; }
  BracketExpander& expander() { return *expander_; }

  /// Renders through the presentation's alphabet.
  std::string render(const Word& w) const;
  std::string render(const Polynomial& f) const;
  std::string render(const TensorElement& t) const;

 private:
  Presentation presentation_;
  std::unique_ptr<TruncatedGB> gb_;
  IrreducibleData data_;
  std::unique_ptr<BracketExpander> expander_;
};

/// The triangularity and stability verdicts.
struct Hypotheses {
  TriangularReport triangular;
  StabilityReport stability;
  std::vector<Verdict> verdicts;
  bool ok() const { return all_pass(verdicts); }
};
Hypotheses check_hypotheses(Analysis& analysis);

struct StructureReport {
  int bound = 0;
  Field field;
  Hypotheses hypotheses;
  bool refused = false;  // hypotheses failed; conditions were not evaluated
  std::vector<Word> gamma;                   // irreducible Lyndon, lex order
  std::vector<Height> gamma_heights;         // parallel to gamma
  std::map<Word, Polynomial, LexLess> z;     // NF([gamma])
  std::vector<std::size_t> dimensions;       // irreducible words per degree
  std::vector<std::size_t> b_counts;
  std::vector<std::size_t> c_counts;
  std::vector<Verdict> conditions;
  /// No new member of gamma in the last `window` degrees below the bound.
  /// A heuristic marker only; nothing else depends on it.
  bool candidate_finite = false;
  int window = 1;
  bool ok() const { return !refused && all_pass(conditions); }
};

/// Gamma, its z-table and per-degree counts, plus the three conditions
/// (coproduct shape of z_gamma, commutator closure, PBW basis count) at
/// every degree up to the bound. In characteristic p the basis condition
/// compares C_I with the irreducible words instead of B_I.
StructureReport verify_structure_conditions(Analysis& analysis);

struct HilbertReport {
  std::vector<std::size_t> dimensions;  // n = 0..D
  std::vector<std::size_t> product;     // the PBW product series mod t^{D+1}
  std::optional<std::size_t> gk;        // set when Gamma looks finite
  std::vector<Verdict> verdicts;
};

/// Compares dimensions with prod_{gamma} (1 - t^deg)^{-1} (with exponents
/// capped by the observed heights in characteristic p) and reports the GK
/// dimension candidate.
HilbertReport hilbert_and_gk(const StructureReport& report);

/// PBW coordinates over z_1..z_k: exponent vector -> coefficient.
using PbwVector = std::map<std::vector<int>, Scalar>;

struct OreLevel {
  Word word;
  int degree = 0;
  std::vector<PbwVector> derivation;  // delta_i(z_j) for j < i
  TensorElement coproduct_tail;       // leg-wise coordinates
  bool coproduct_ok = true;
};

struct OreTower {
  std::vector<OreLevel> levels;
  std::vector<Verdict> verdicts;
  bool ok() const { return all_pass(verdicts); }
};

/// Requires a passing structure report with the finiteness marker set;
/// throws HypothesisFailure otherwise.
OreTower extract_ihoe(Analysis& analysis, const StructureReport& report);

/// "z1^2*z3 - 2*z2"; "0" for zero.
std::string render_pbw(const PbwVector& v);

struct LieGenerator {
  Word word;           // an I-reducible Lyndon word v
  Polynomial element;  // g_v = [v] - sum c_w [w]
  bool lie = false;
};

/// One generator g_v in I per reducible Lyndon word v up to the bound.
/// Throws Unsupported outside characteristic 0 and HypothesisFailure when
/// Delta is not the standard comultiplication or I is not stable.
std::vector<LieGenerator> recover_lie_generators(Analysis& analysis);

/// Parts (1) and (2) of the bracket-support certificate; part (3) is the
/// basis count, reported only in characteristic 0.
std::vector<Verdict> verify_quasi_lie(Analysis& analysis);

struct HeightEntry {
  Word word;
  Height height;
};

struct HeightReport {
  std::vector<HeightEntry> entries;  // irreducible Lyndon words, glex order
  std::vector<Verdict> verdicts;
};

/// Heights of the irreducible Lyndon words: none finite in characteristic
/// 0, each a power of p otherwise; and for each finite height n the top
/// part of NF([v]^n) stays inside the span of brackets below v.
HeightReport check_heights(Analysis& analysis);

}  // namespace pbw
