#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "pbw/poly.hpp"

namespace pbw {

/// A reduced, monic Groebner basis of a homogeneous two-sided ideal under
/// the glex order, complete for every degree up to `bound()`.
///
/// Elements are sorted by leading word; no leading word occurs as a factor
/// of another. All compositions of degree <= bound reduce to zero, so
/// normal_form() is exact on that range.
class TruncatedGB {
 public:
  /// The zero ideal; its normal form is the identity at every degree.
  static TruncatedGB zero_ideal(const Alphabet& alphabet, Field field);

  const Alphabet& alphabet() const { return alphabet_; }
  Field field() const { return field_; }
  int bound() const { return bound_; }
  const std::vector<Polynomial>& elements() const { return elements_; }

  struct Match {
    std::size_t element;   // index into elements()
    std::size_t position;  // where its leading word starts
  };
  /// The leftmost occurrence of a leading word inside w.
  std::optional<Match> find_reducer(const Word& w) const;
  bool is_reducible(const Word& w) const { return find_reducer(w).has_value(); }

  /// Largest degree among the defining relations (0 when there are none).
  int max_relation_degree() const { return max_relation_degree_; }

 private:
  friend TruncatedGB compute_truncated_gb(const Alphabet&, Field,
                                          std::span<const Polynomial>, int);

  TruncatedGB(const Alphabet& alphabet, Field field, int bound)
      : alphabet_(alphabet), field_(field), bound_(bound) {}

  void insert(Polynomial monic);
  void sort_elements();

  struct TrieNode {
    std::vector<int> child;  // by letter index, -1 if absent
    int element = -1;
  };

  Alphabet alphabet_;
  Field field_;
  int bound_ = 0;
  int max_relation_degree_ = 0;
  std::vector<Polynomial> elements_;
  std::vector<TrieNode> trie_{1};
};

/// Completes `relations` degree by degree up to `bound`. Compositions are
/// processed by ascending degree, then by glex order of the overlap word.
///
/// Throws InhomogeneousRelation naming the offending term, UnitIdeal for a
/// nonzero constant relation, and std::invalid_argument for a zero relation,
/// a relation above the bound or a field mismatch.
TruncatedGB compute_truncated_gb(const Alphabet& alphabet, Field field,
                                 std::span<const Polynomial> relations,
                                 int bound);

/// The representative of f + I supported on irreducible words.
/// Throws OutOfCertifiedRange if deg(f) exceeds gb.bound().
Polynomial normal_form(const Polynomial& f, const TruncatedGB& gb);

/// normal_form applied to both tensor legs.
TensorElement normal_form_legs(const TensorElement& t, const TruncatedGB& gb);

/// Irreducible words of degree exactly n, glex order.
std::vector<Word> irreducible_words(const TruncatedGB& gb, int n);

/// Irreducible Lyndon words of degree <= max_degree, glex order.
std::vector<Word> irreducible_lyndon_words(const TruncatedGB& gb,
                                           int max_degree);

/// h(u) = min{n : u^n reducible}, searched while n * deg(u) <= bound.
struct Height {
  std::optional<int> value;  // empty: not observed up to the bound
  int searched_up_to = 0;    // largest exponent examined
};
/// Throws std::invalid_argument for a non-Lyndon word and
/// OutOfCertifiedRange when deg(u) exceeds the bound.
Height height(const Word& u, const TruncatedGB& gb);

enum class BasisKind { irreducible, B, C };

/// Degree-n members of the requested word set, glex order. B: nondecreasing
/// products of irreducible Lyndon words. C: products u_1^e_1...u_r^e_r with
/// u_1 < ... < u_r irreducible Lyndon and 0 < e_i < h(u_i); an unobserved
/// height puts no constraint on the exponent.
std::vector<Word> admissible_words(const TruncatedGB& gb, int n,
                                   BasisKind kind);

/// Per-degree word sets of the quotient up to the GB bound.
struct IrreducibleData {
  int bound = 0;
  std::vector<std::vector<Word>> irreducible;  // index = degree
  std::vector<Word> lyndon;                    // irreducible Lyndon, glex
  std::map<Word, Height, GlexLess> heights;    // for each irreducible Lyndon
  std::vector<std::vector<Word>> b_words;
  std::vector<std::vector<Word>> c_words;
};
IrreducibleData compute_irreducible_data(const TruncatedGB& gb);

/// Coordinates with respect to the basis {[w] + I : w irreducible}.
///
/// Keeps per-session memo tables for [w] and NF([w]); not thread-safe, but
/// each instance is independent.
class BracketExpander {
 public:
  explicit BracketExpander(const TruncatedGB& gb) : gb_(&gb) {}

  const TruncatedGB& gb() const { return *gb_; }
  const Polynomial& bracket(const Word& w);
  const Polynomial& reduced_bracket(const Word& w);

  /// The coefficients c_w with NF(f) = sum c_w NF([w]), returned as a
  /// polynomial whose support is the set of basis labels w.
  Polynomial coordinates(const Polynomial& f);
  /// Leg-wise coordinates: coefficient of [w] (x) [w'] at key (w, w').
  TensorElement coordinates(const TensorElement& t);

 private:
  const TruncatedGB* gb_;
  std::unordered_map<Word, Polynomial, WordHash> brackets_;
  std::unordered_map<Word, Polynomial, WordHash> reduced_;
};

Polynomial bracket_coordinates(const Polynomial& f, const TruncatedGB& gb);

}  // namespace pbw
