#include "pbw/rewrite.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "pbw/error.hpp"

namespace pbw {

namespace {

constexpr int kUnbounded = std::numeric_limits<int>::max();

void require_finite(const TruncatedGB& gb, int n, const char* what) {
  if (n > gb.bound())
    throw OutOfCertifiedRange(std::string(what) + ": degree " +
                              std::to_string(n) + " exceeds certified bound " +
                              std::to_string(gb.bound()));
  if (n == kUnbounded)
    throw std::invalid_argument(std::string(what) + " needs a finite degree");
}

}  // namespace

// --------------------------------------------------------------- TruncatedGB

TruncatedGB TruncatedGB::zero_ideal(const Alphabet& alphabet, Field field) {
  TruncatedGB gb(alphabet, field, kUnbounded);
  gb.trie_[0].child.assign(alphabet.size(), -1);
  return gb;
}

std::optional<TruncatedGB::Match> TruncatedGB::find_reducer(
    const Word& w) const {
  if (elements_.empty()) return std::nullopt;
  const auto letters = w.letters();
  for (std::size_t start = 0; start < letters.size(); ++start) {
    int node = 0;
    for (std::size_t i = start; i < letters.size(); ++i) {
      node = trie_[static_cast<std::size_t>(node)].child[letters[i].index];
      if (node < 0) break;
      if (int e = trie_[static_cast<std::size_t>(node)].element; e >= 0)
        return Match{static_cast<std::size_t>(e), start};
    }
  }
  return std::nullopt;
}

void TruncatedGB::insert(Polynomial monic) {
  const Word& lead = monic.leading_word();
  int node = 0;
  for (Letter x : lead.letters()) {
    int next = trie_[static_cast<std::size_t>(node)].child[x.index];
    if (next < 0) {
      next = static_cast<int>(trie_.size());
      trie_[static_cast<std::size_t>(node)].child[x.index] = next;
      trie_.push_back(TrieNode{std::vector<int>(alphabet_.size(), -1), -1});
    }
    node = next;
  }
  trie_[static_cast<std::size_t>(node)].element =
      static_cast<int>(elements_.size());
  elements_.push_back(std::move(monic));
}

void TruncatedGB::sort_elements() {
  std::sort(elements_.begin(), elements_.end(),
            [](const Polynomial& a, const Polynomial& b) {
              return compare_glex(a.leading_word(), b.leading_word()) < 0;
            });
  auto elements = std::move(elements_);
  elements_.clear();
  trie_.assign(1, TrieNode{std::vector<int>(alphabet_.size(), -1), -1});
  for (auto& e : elements) insert(std::move(e));
}

TruncatedGB compute_truncated_gb(const Alphabet& alphabet, Field field,
                                 std::span<const Polynomial> relations,
                                 int bound) {
  if (bound < 0) throw std::invalid_argument("degree bound must be >= 0");

  std::map<int, std::vector<Polynomial>> by_degree;
  int max_degree = 0;
  for (std::size_t i = 0; i < relations.size(); ++i) {
    const Polynomial& r = relations[i];
    const std::string label = "relation " + std::to_string(i + 1);
    if (r.field() != field)
      throw std::invalid_argument(label + ": scalar field mismatch");
    if (r.is_zero()) throw std::invalid_argument(label + " is zero");
    if (!r.is_homogeneous()) {
      const Word& top = r.leading_word();
      const Word& low = r.terms().rbegin()->first;
      throw InhomogeneousRelation(
          label + " is inhomogeneous: term '" + alphabet.render(low) +
          "' has degree " + std::to_string(low.degree()) + " but '" +
          alphabet.render(top) + "' has degree " + std::to_string(top.degree()));
    }
    if (r.degree() == 0) throw UnitIdeal();
    if (r.degree() > bound)
      throw std::invalid_argument(label + " has degree " +
                                  std::to_string(r.degree()) +
                                  " above the bound " + std::to_string(bound));
    by_degree[r.degree()].push_back(r);
    max_degree = std::max(max_degree, r.degree());
  }

  TruncatedGB gb(alphabet, field, bound);
  gb.max_relation_degree_ = max_degree;
  gb.trie_[0].child.assign(alphabet.size(), -1);

  for (int n = 1; n <= bound; ++n) {
    std::vector<Polynomial> candidates;
    if (auto it = by_degree.find(n); it != by_degree.end())
      candidates = it->second;

    struct Overlap {
      Word word;
      Polynomial composition;
    };
    std::vector<Overlap> overlaps;
    const auto& elems = gb.elements_;
    for (const Polynomial& f : elems) {
      const Word& lf = f.leading_word();
      for (const Polynomial& g : elems) {
        const Word& lg = g.leading_word();
        const std::size_t max_k = std::min(lf.length(), lg.length());
        for (std::size_t k = 1; k < max_k; ++k) {
          // lf = a.b and lg = b.c with |b| = k.
          if (!std::equal(lf.letters().end() - static_cast<std::ptrdiff_t>(k),
                          lf.letters().end(), lg.letters().begin()))
            continue;
          Word a = lf.prefix(lf.length() - k);
          Word c = lg.suffix_from(k);
          Word w = lf * c;
          if (w.degree() != n) continue;
          Polynomial comp(field);
          comp.add_scaled(Scalar::one(field), Word(), f, c);
          comp.add_scaled(-Scalar::one(field), a, g, Word());
          overlaps.push_back(Overlap{std::move(w), std::move(comp)});
        }
      }
    }
    std::stable_sort(overlaps.begin(), overlaps.end(),
                     [](const Overlap& x, const Overlap& y) {
                       return compare_glex(x.word, y.word) < 0;
                     });
    for (auto& o : overlaps) candidates.push_back(std::move(o.composition));

    const std::size_t first_new = gb.elements_.size();
    for (const Polynomial& candidate : candidates) {
      Polynomial h = normal_form(candidate, gb);
      if (h.is_zero()) continue;
      h *= h.leading_coefficient().inverse();
      gb.insert(std::move(h));
    }
    // Tail-reduce the elements added in this degree against each other.
    for (std::size_t i = first_new; i < gb.elements_.size(); ++i) {
      Polynomial& e = gb.elements_[i];
      const Word lead = e.leading_word();
      Polynomial tail = e;
      tail.add_term(lead, -Scalar::one(field));
      Polynomial reduced = normal_form(tail, gb);
      reduced.add_term(lead, Scalar::one(field));
      gb.elements_[i] = std::move(reduced);
    }
  }
  gb.sort_elements();
  return gb;
}

// --------------------------------------------------------------- normal form

Polynomial normal_form(const Polynomial& f, const TruncatedGB& gb) {
  if (f.degree() > gb.bound())
    throw OutOfCertifiedRange("normal form: degree " +
                              std::to_string(f.degree()) +
                              " exceeds certified bound " +
                              std::to_string(gb.bound()));
  if (gb.elements().empty()) return f;
  Polynomial work = f;
  Polynomial result(f.field());
  while (!work.is_zero()) {
    const Word w = work.leading_word();
    const Scalar c = work.leading_coefficient();
    if (auto m = gb.find_reducer(w)) {
      const Polynomial& g = gb.elements()[m->element];
      const std::size_t end = m->position + g.leading_word().length();
      work.add_scaled(-c, w.prefix(m->position), g, w.suffix_from(end));
    } else {
      result.add_term(w, c);
      work.add_term(w, -c);
    }
  }
  return result;
}

TensorElement normal_form_legs(const TensorElement& t, const TruncatedGB& gb) {
  std::unordered_map<Word, Polynomial, WordHash> memo;
  auto nf = [&](const Word& w) -> const Polynomial& {
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    return memo
        .emplace(w, normal_form(Polynomial::word(t.field(), w), gb))
        .first->second;
  };
  TensorElement out(t.field());
  for (const auto& [key, c] : t.terms()) {
    const Polynomial& left = nf(key.first);
    if (left.is_zero()) continue;
    const Polynomial& right = nf(key.second);
    for (const auto& [a, ca] : left.terms())
      for (const auto& [b, cb] : right.terms()) out.add_term(a, b, c * ca * cb);
  }
  return out;
}

// -------------------------------------------------------- irreducible words

namespace {

std::vector<std::vector<Word>> irreducible_by_degree(const TruncatedGB& gb,
                                                     int n) {
  std::vector<std::vector<Word>> irr(static_cast<std::size_t>(n) + 1);
  irr[0].push_back(Word());
  for (int d = 1; d <= n; ++d) {
    auto& out = irr[static_cast<std::size_t>(d)];
    for (Letter x : gb.alphabet().letters()) {
      if (x.degree > d) continue;
      // Every factor of an irreducible word is irreducible, so extending
      // irreducible words of lower degree by one letter reaches them all.
      for (const Word& w : irr[static_cast<std::size_t>(d - x.degree)]) {
        Word v = w * Word(x);
        if (!gb.is_reducible(v)) out.push_back(std::move(v));
      }
    }
    std::sort(out.begin(), out.end(), GlexLess{});
  }
  return irr;
}

// Calls emit(word) for every product u_1^{e_1}...u_r^{e_r} of degree n drawn
// from `lyndon` (sorted lex ascending) with u_1 <= ... <= u_r.
void enumerate_products(const std::vector<Word>& lyndon, int n,
                        const std::function<int(const Word&)>& max_exponent,
                        bool strictly_increasing,
                        std::vector<Word>& out) {
  std::function<void(std::size_t, int, const Word&)> rec =
      [&](std::size_t from, int remaining, const Word& prefix) {
        if (remaining == 0) {
          out.push_back(prefix);
          return;
        }
        for (std::size_t i = from; i < lyndon.size(); ++i) {
          const Word& u = lyndon[i];
          if (u.degree() > remaining) continue;
          if (strictly_increasing) {
            const int cap = max_exponent(u);
            Word acc = prefix;
            for (int e = 1; e < cap && e * u.degree() <= remaining; ++e) {
              acc = acc * u;
              rec(i + 1, remaining - e * u.degree(), acc);
            }
          } else {
            rec(i, remaining - u.degree(), prefix * u);
          }
        }
      };
  rec(0, n, Word());
}

std::vector<Word> lyndon_lex_sorted(const std::vector<std::vector<Word>>& irr) {
  std::vector<Word> lyndon;
  for (const auto& level : irr)
    for (const Word& w : level)
      if (is_lyndon(w)) lyndon.push_back(w);
  std::sort(lyndon.begin(), lyndon.end(), LexLess{});
  return lyndon;
}

}  // namespace

std::vector<Word> irreducible_words(const TruncatedGB& gb, int n) {
  if (n < 0) return {};
  require_finite(gb, n, "irreducible words");
  return std::move(irreducible_by_degree(gb, n)[static_cast<std::size_t>(n)]);
}

std::vector<Word> irreducible_lyndon_words(const TruncatedGB& gb,
                                           int max_degree) {
  if (max_degree <= 0) return {};
  require_finite(gb, max_degree, "irreducible Lyndon words");
  std::vector<Word> out = lyndon_lex_sorted(irreducible_by_degree(gb, max_degree));
  std::sort(out.begin(), out.end(), GlexLess{});
  return out;
}

Height height(const Word& u, const TruncatedGB& gb) {
  if (!is_lyndon(u))
    throw std::invalid_argument("height is defined for Lyndon words only");
  require_finite(gb, u.degree(), "height");
  Height h;
  for (int n = 1; n * u.degree() <= gb.bound(); ++n) {
    h.searched_up_to = n;
    if (gb.is_reducible(u.power(n))) {
      h.value = n;
      break;
    }
  }
  return h;
}

std::vector<Word> admissible_words(const TruncatedGB& gb, int n,
                                   BasisKind kind) {
  if (n < 0) return {};
  require_finite(gb, n, "admissible words");
  auto irr = irreducible_by_degree(gb, n);
  if (kind == BasisKind::irreducible)
    return std::move(irr[static_cast<std::size_t>(n)]);

  const std::vector<Word> lyndon = lyndon_lex_sorted(irr);
  std::vector<Word> out;
  if (kind == BasisKind::B) {
    enumerate_products(lyndon, n, nullptr, false, out);
  } else {
    auto cap = [&](const Word& u) {
      Height h = height(u, gb);
      return h.value ? *h.value : std::numeric_limits<int>::max();
    };
    enumerate_products(lyndon, n, cap, true, out);
  }
  std::sort(out.begin(), out.end(), GlexLess{});
  return out;
}

IrreducibleData compute_irreducible_data(const TruncatedGB& gb) {
  require_finite(gb, gb.bound(), "irreducible data");
  IrreducibleData data;
  data.bound = gb.bound();
  data.irreducible = irreducible_by_degree(gb, gb.bound());

  const std::vector<Word> lyndon = lyndon_lex_sorted(data.irreducible);
  data.lyndon = lyndon;
  std::sort(data.lyndon.begin(), data.lyndon.end(), GlexLess{});
  for (const Word& u : lyndon) data.heights.emplace(u, height(u, gb));

  auto cap = [&](const Word& u) {
    const Height& h = data.heights.at(u);
    return h.value ? *h.value : std::numeric_limits<int>::max();
  };
  for (int n = 0; n <= gb.bound(); ++n) {
    std::vector<Word> b, c;
    enumerate_products(lyndon, n, nullptr, false, b);
    enumerate_products(lyndon, n, cap, true, c);
    std::sort(b.begin(), b.end(), GlexLess{});
    std::sort(c.begin(), c.end(), GlexLess{});
    data.b_words.push_back(std::move(b));
    data.c_words.push_back(std::move(c));
  }
  return data;
}

// ------------------------------------------------------- bracket coordinates

const Polynomial& BracketExpander::bracket(const Word& w) {
  if (auto it = brackets_.find(w); it != brackets_.end()) return it->second;
  const Field field = gb_->field();
  Polynomial value(field);
  if (w.length() < 2) {
    value = Polynomial::word(field, w);
  } else {
    auto [left, right] = shirshov_factorization(w);
    Polynomial l = bracket(left);
    const Polynomial& r = bracket(right);
    value = is_lyndon(w) ? commutator(l, r) : l * r;
  }
  return brackets_.emplace(w, std::move(value)).first->second;
}

const Polynomial& BracketExpander::reduced_bracket(const Word& w) {
  if (auto it = reduced_.find(w); it != reduced_.end()) return it->second;
  Polynomial value = normal_form(bracket(w), *gb_);
  return reduced_.emplace(w, std::move(value)).first->second;
}

Polynomial BracketExpander::coordinates(const Polynomial& f) {
  Polynomial rest = normal_form(f, *gb_);
  Polynomial out(f.field());
  const Word none;
  while (!rest.is_zero()) {
    // rest is in normal form, so its leading word w is irreducible and
    // NF([w]) has leading term exactly w.
    const Word w = rest.leading_word();
    const Scalar c = rest.leading_coefficient();
    out.add_term(w, c);
    rest.add_scaled(-c, none, reduced_bracket(w), none);
  }
  return out;
}

TensorElement BracketExpander::coordinates(const TensorElement& t) {
  const Field field = t.field();
  std::map<Word, Polynomial, GlexGreater> left_by_right;
  for (const auto& [key, c] : t.terms()) {
    auto [it, _] = left_by_right.try_emplace(key.second, field);
    it->second.add_term(key.first, c);
  }
  std::map<Word, Polynomial, GlexGreater> right_by_left;
  for (const auto& [right, left] : left_by_right) {
    const Polynomial coords = coordinates(left);
    for (const auto& [label, c] : coords.terms()) {
      auto [it, _] = right_by_left.try_emplace(label, field);
      it->second.add_term(right, c);
    }
  }
  TensorElement out(field);
  for (const auto& [label, right] : right_by_left) {
    const Polynomial coords = coordinates(right);
    for (const auto& [label2, c] : coords.terms())
      out.add_term(label, label2, c);
  }
  return out;
}

Polynomial bracket_coordinates(const Polynomial& f, const TruncatedGB& gb) {
  BracketExpander expander(gb);
  return expander.coordinates(f);
}

}  // namespace pbw
