#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pbw {

/// A generator reference. `index` is the position of the generator in the
/// alphabet's total order, so comparing letters is comparing indices.
struct Letter {
  std::uint16_t index = 0;
  std::uint16_t degree = 1;

  friend constexpr bool operator==(Letter a, Letter b) {
    return a.index == b.index;
  }
  friend constexpr std::strong_ordering operator<=>(Letter a, Letter b) {
    return a.index <=> b.index;
  }
};

class Word;

/// Named generators with positive degrees. Letters are ordered degree-major,
/// then by declaration rank.
class Alphabet {
 public:
  struct Generator {
    std::string name;
    int degree = 1;
  };

  Alphabet() = default;
  /// Throws std::invalid_argument on a non-positive degree, an empty or
  /// duplicate name.
  explicit Alphabet(std::vector<Generator> declared);

  std::size_t size() const { return order_.size(); }
  /// The i-th letter in the total order.
  Letter letter(std::size_t i) const;
  std::span<const Letter> letters() const { return order_; }

  const std::string& name(Letter x) const;
  int degree(Letter x) const { return x.degree; }
  /// Declaration index of the generator.
  int rank(Letter x) const;
  int max_degree() const;

  std::optional<Letter> find(std::string_view name) const;
  /// Throws std::invalid_argument for an unknown name.
  Letter at(std::string_view name) const;

  /// Builds a word from whitespace-separated generator names.
  Word word(std::string_view names) const;
  /// Generator names separated by spaces; "1" for the empty word.
  std::string render(const Word& w) const;

  const std::vector<Generator>& declared() const { return declared_; }

 private:
  std::vector<Generator> declared_;
  std::vector<Letter> order_;
  std::vector<int> rank_;  // by letter index
};

/// A finite sequence of letters together with its degree.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  explicit Word(Letter x) : letters_{x}, degree_(x.degree) {}

  std::size_t length() const { return letters_.size(); }
  int degree() const { return degree_; }
  bool empty() const { return letters_.empty(); }
  std::span<const Letter> letters() const { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  Word prefix(std::size_t n) const;
  Word suffix_from(std::size_t pos) const;
  Word slice(std::size_t pos, std::size_t len) const;
  Word power(int n) const;
  bool is_letter() const { return letters_.size() == 1; }

  /// True when every letter of this word occurs equally often in `other`.
  bool same_content(const Word& other) const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) {
    return a.letters_ == b.letters_;
  }

  std::size_t hash() const;

 private:
  std::vector<Letter> letters_;
  int degree_ = 0;
};

struct WordHash {
  std::size_t operator()(const Word& w) const { return w.hash(); }
};

/// The lexicographic order in which a proper prefix is *larger* than the
/// longer word: u < v iff v is a proper prefix of u, or u and v first differ
/// at a position where u has the smaller letter.
std::strong_ordering compare_lex(const Word& u, const Word& v);

/// Degree first, ties broken by compare_lex. A well order compatible with
/// concatenation on both sides.
std::strong_ordering compare_glex(const Word& u, const Word& v);

struct LexLess {
  bool operator()(const Word& u, const Word& v) const {
    return compare_lex(u, v) < 0;
  }
};
struct GlexLess {
  bool operator()(const Word& u, const Word& v) const {
    return compare_glex(u, v) < 0;
  }
};
struct GlexGreater {
  bool operator()(const Word& u, const Word& v) const {
    return compare_glex(u, v) > 0;
  }
};

/// Nonempty and strictly lex-greater than each of its proper suffixes.
bool is_lyndon(const Word& u);

/// (u_L, u_R) where u_R is the lex-largest proper suffix of u.
/// Throws std::invalid_argument when |u| < 2.
std::pair<Word, Word> shirshov_factorization(const Word& u);

/// The unique lex-nondecreasing sequence of Lyndon words whose product is u.
std::vector<Word> lyndon_decomposition(const Word& u);

/// All words of degree exactly `degree`, sorted by compare_glex.
std::vector<Word> enumerate_words(const Alphabet& alphabet, int degree);

/// All Lyndon words of degree at most `max_degree`, sorted by compare_glex.
std::vector<Word> enumerate_lyndon(const Alphabet& alphabet, int max_degree);

}  // namespace pbw
