#include "pbw/word.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pbw {

Alphabet::Alphabet(std::vector<Generator> declared)
    : declared_(std::move(declared)) {
  if (declared_.size() > 0xFFFF)
    throw std::invalid_argument("too many generators");
  for (std::size_t i = 0; i < declared_.size(); ++i) {
    const auto& g = declared_[i];
    if (g.name.empty()) throw std::invalid_argument("empty generator name");
    if (g.degree <= 0)
      throw std::invalid_argument("generator '" + g.name +
                                  "': degree must be positive");
    if (g.degree > 0xFFFF)
      throw std::invalid_argument("generator '" + g.name +
                                  "': degree too large");
    for (std::size_t j = 0; j < i; ++j)
      if (declared_[j].name == g.name)
        throw std::invalid_argument("duplicate generator name '" + g.name +
                                    "'");
  }

  std::vector<int> by_order(declared_.size());
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(), [&](int a, int b) {
    return declared_[a].degree < declared_[b].degree;
  });
  order_.reserve(by_order.size());
  rank_.reserve(by_order.size());
  for (std::size_t i = 0; i < by_order.size(); ++i) {
    order_.push_back(Letter{static_cast<std::uint16_t>(i),
                            static_cast<std::uint16_t>(declared_[by_order[i]].degree)});
    rank_.push_back(by_order[i]);
  }
}

Letter Alphabet::letter(std::size_t i) const {
  if (i >= order_.size()) throw std::out_of_range("letter index");
  return order_[i];
}

const std::string& Alphabet::name(Letter x) const {
  return declared_.at(static_cast<std::size_t>(rank(x))).name;
}

int Alphabet::rank(Letter x) const { return rank_.at(x.index); }

int Alphabet::max_degree() const {
  return order_.empty() ? 0 : order_.back().degree;
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < order_.size(); ++i)
    if (declared_[rank_[i]].name == name) return order_[i];
  return std::nullopt;
}

Letter Alphabet::at(std::string_view name) const {
  if (auto x = find(name)) return *x;
  throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

Word Alphabet::word(std::string_view names) const {
  std::vector<Letter> letters;
  std::istringstream in{std::string(names)};
  std::string token;
  while (in >> token) letters.push_back(at(token));
  return Word(std::move(letters));
}

std::string Alphabet::render(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (i) out += ' ';
    out += name(w[i]);
  }
  return out;
}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (Letter x : letters_) degree_ += x.degree;
}

Word Word::prefix(std::size_t n) const { return slice(0, n); }

Word Word::suffix_from(std::size_t pos) const {
  return slice(pos, letters_.size() - std::min(pos, letters_.size()));
}

Word Word::slice(std::size_t pos, std::size_t len) const {
  if (pos > letters_.size() || len > letters_.size() - pos)
    throw std::out_of_range("word slice");
  return Word(std::vector<Letter>(letters_.begin() + pos,
                                  letters_.begin() + pos + len));
}

Word Word::power(int n) const {
  std::vector<Letter> out;
  out.reserve(letters_.size() * static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i)
    out.insert(out.end(), letters_.begin(), letters_.end());
  return Word(std::move(out));
}

bool Word::same_content(const Word& other) const {
  if (length() != other.length()) return false;
  std::vector<std::uint16_t> a, b;
  for (Letter x : letters_) a.push_back(x.index);
  for (Letter x : other.letters_) b.push_back(x.index);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

Word operator*(const Word& a, const Word& b) {
  Word w;
  w.letters_.reserve(a.letters_.size() + b.letters_.size());
  w.letters_ = a.letters_;
  w.letters_.insert(w.letters_.end(), b.letters_.begin(), b.letters_.end());
  w.degree_ = a.degree_ + b.degree_;
  return w;
}

std::size_t Word::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (Letter x : letters_) {
    h ^= x.index + 1u;
    h *= 1099511628211ull;
  }
  return h;
}

std::strong_ordering compare_lex(const Word& u, const Word& v) {
  const std::size_t n = std::min(u.length(), v.length());
  for (std::size_t i = 0; i < n; ++i)
    if (u[i] != v[i]) return u[i] <=> v[i];
  // A proper prefix is the larger of the two.
  return v.length() <=> u.length();
}

std::strong_ordering compare_glex(const Word& u, const Word& v) {
  if (u.degree() != v.degree()) return u.degree() <=> v.degree();
  return compare_lex(u, v);
}

bool is_lyndon(const Word& u) {
  if (u.empty()) return false;
  for (std::size_t i = 1; i < u.length(); ++i)
    if (compare_lex(u, u.suffix_from(i)) <= 0) return false;
  return true;
}

namespace {

// Start of the lex-largest suffix of u that begins at a position >= from.
std::size_t largest_suffix_start(const Word& u, std::size_t from) {
  std::size_t best = from;
  Word best_word = u.suffix_from(from);
  for (std::size_t i = from + 1; i < u.length(); ++i) {
    Word s = u.suffix_from(i);
    if (compare_lex(s, best_word) > 0) {
      best = i;
      best_word = std::move(s);
    }
  }
  return best;
}

}  // namespace

std::pair<Word, Word> shirshov_factorization(const Word& u) {
  if (u.length() < 2)
    throw std::invalid_argument("Shirshov factorization needs length >= 2");
  std::size_t split = largest_suffix_start(u, 1);
  return {u.prefix(split), u.suffix_from(split)};
}

std::vector<Word> lyndon_decomposition(const Word& u) {
  // Peel off the lex-largest suffix from the right; it is always the last
  // Lyndon factor of what remains.
  std::vector<Word> factors;
  Word rest = u;
  while (!rest.empty()) {
    std::size_t split = largest_suffix_start(rest, 0);
    factors.push_back(rest.suffix_from(split));
    rest = rest.prefix(split);
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

std::vector<Word> enumerate_words(const Alphabet& alphabet, int degree) {
  // by_degree[d] holds all words of degree d.
  std::vector<std::vector<Word>> by_degree(static_cast<std::size_t>(std::max(degree, 0)) + 1);
  if (degree < 0) return {};
  by_degree[0].push_back(Word());
  for (int d = 1; d <= degree; ++d)
    for (Letter x : alphabet.letters())
      if (x.degree <= d)
        for (const Word& w : by_degree[static_cast<std::size_t>(d - x.degree)])
          by_degree[static_cast<std::size_t>(d)].push_back(w * Word(x));
  auto out = std::move(by_degree[static_cast<std::size_t>(degree)]);
  std::sort(out.begin(), out.end(), GlexLess{});
  return out;
}

std::vector<Word> enumerate_lyndon(const Alphabet& alphabet, int max_degree) {
  std::vector<Word> out;
  for (int d = 1; d <= max_degree; ++d)
    for (Word& w : enumerate_words(alphabet, d))
      if (is_lyndon(w)) out.push_back(std::move(w));
  std::sort(out.begin(), out.end(), GlexLess{});
  return out;
}

}  // namespace pbw
