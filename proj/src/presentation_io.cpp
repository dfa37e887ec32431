#include "pbw/presentation_io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "pbw/error.hpp"
#include "pbw/expression.hpp"

namespace pbw {

namespace {

using nlohmann::json;

// Maps byte offsets in the source document to 1-based line/column, and finds
// where a given JSON string literal appears.
class Locator {
 public:
  explicit Locator(std::string_view text) : text_(text) {}

  std::pair<int, int> position(std::size_t offset) const {
    int line = 1, column = 1;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    return {line, column};
  }

  /// Offset of the first occurrence of the literal `value` after the key
  /// `section`, or npos.
  std::size_t find_string(const std::string& value,
                          const std::string& section) const {
    std::size_t from = text_.find(json(section).dump());
    if (from == std::string_view::npos) from = 0;
    return text_.find(json(value).dump(), from);
  }

  [[noreturn]] void fail(const std::string& message, std::size_t offset) const {
    if (offset == std::string_view::npos) throw ParseError(message, 0, 0);
    auto [line, column] = position(offset);
    throw ParseError(message, line, column);
  }

  /// Rethrows an expression error found inside the literal at `offset`,
  /// shifting its column past the opening quote.
  [[noreturn]] void fail_inside(const ParseError& e, const std::string& what,
                                std::size_t offset) const {
    std::string message = e.what();
    if (auto colon = message.find(": "); colon != std::string::npos)
      message = message.substr(colon + 2);
    message = what + ": " + message;
    if (offset == std::string_view::npos) throw ParseError(message, 0, 0);
    fail(message, offset + 1 + static_cast<std::size_t>(e.column() - 1));
  }

 private:
  std::string_view text_;
};

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
    return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::string degree_list(const std::set<int>& degrees) {
  std::string out;
  std::size_t i = 0;
  for (int d : degrees) {
    if (i > 0) out += (i + 1 == degrees.size()) ? " and " : ", ";
    out += std::to_string(d);
    ++i;
  }
  return out;
}

const std::set<std::string> kKeys{"field", "generators", "relations",
                                  "comultiplication", "degree_bound"};

}  // namespace

Field parse_field(std::string_view text) {
  if (text == "Q") return Field::rationals();
  if (text.substr(0, 3) == "Fp:") {
    const std::string digits(text.substr(3));
    if (!digits.empty() &&
        digits.find_first_not_of("0123456789") == std::string::npos &&
        digits.size() <= 9)
      return Field::prime(static_cast<std::uint32_t>(std::stoul(digits)));
  }
  throw std::invalid_argument("field must be Q or Fp:<prime>, got '" +
                              std::string(text) + "'");
}

Presentation parse_presentation(std::string_view text,
                                const PresentationOverrides& overrides) {
  const Locator locate(text);
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::string message = e.what();
    if (auto colon = message.rfind(": "); colon != std::string::npos)
      message = message.substr(colon + 2);
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    locate.fail("invalid JSON: " + message, offset);
  }
  if (!doc.is_object()) locate.fail("presentation must be a JSON object", 0);
  for (const auto& [key, value] : doc.items())
    if (!kKeys.count(key))
      locate.fail("unknown key '" + key + "'", locate.find_string(key, key));

  // field
  Field field = Field::rationals();
  if (doc.contains("field")) {
    const json& f = doc["field"];
    const std::size_t at = text.find("\"field\"");
    if (f.is_string() && f.get<std::string>() == "Q") {
      field = Field::rationals();
    } else if (f.is_object() && f.size() == 1 && f.contains("Fp") &&
               f["Fp"].is_number_integer()) {
      const auto p = f["Fp"].get<long long>();
      if (p < 2 || p > 0x7FFFFFFF || !is_prime(static_cast<std::uint64_t>(p)))
        locate.fail("modulus " + std::to_string(p) + " is not prime", at);
      field = Field::prime(static_cast<std::uint32_t>(p));
    } else {
      locate.fail("field must be \"Q\" or {\"Fp\": <prime>}", at);
    }
  }
  if (overrides.field) field = *overrides.field;

  // generators
  if (!doc.contains("generators") || !doc["generators"].is_array())
    locate.fail("'generators' must be an array", text.find("\"generators\""));
  std::vector<Alphabet::Generator> generators;
  for (const json& g : doc["generators"]) {
    const std::size_t at_entry = text.find("\"generators\"");
    if (!g.is_object() || !g.contains("name") || !g["name"].is_string())
      locate.fail("each generator needs a string 'name'", at_entry);
    const std::string name = g["name"].get<std::string>();
    const std::size_t at = locate.find_string(name, "generators");
    if (!is_identifier(name))
      locate.fail("generator name '" + name + "' is not an identifier", at);
    if (!g.contains("degree") || !g["degree"].is_number_integer())
      locate.fail("generator '" + name + "': degree must be an integer", at);
    const auto degree = g["degree"].get<long long>();
    if (degree <= 0)
      locate.fail("generator '" + name + "': degree must be positive", at);
    if (degree > 0xFFFF)
      locate.fail("generator '" + name + "': degree too large", at);
    for (const auto& seen : generators)
      if (seen.name == name)
        locate.fail("duplicate generator name '" + name + "'", at);
    generators.push_back({name, static_cast<int>(degree)});
  }
  if (generators.empty())
    locate.fail("at least one generator is required",
                text.find("\"generators\""));
  Alphabet alphabet(std::move(generators));

  // relations
  std::vector<Polynomial> relations;
  if (doc.contains("relations")) {
    if (!doc["relations"].is_array())
      locate.fail("'relations' must be an array", text.find("\"relations\""));
    std::size_t index = 0;
    for (const json& r : doc["relations"]) {
      ++index;
      const std::string label = "relation " + std::to_string(index);
      if (!r.is_string())
        locate.fail(label + " must be a string", text.find("\"relations\""));
      const std::string src = r.get<std::string>();
      const std::size_t at = locate.find_string(src, "relations");
      Polynomial f(field);
      try {
        f = parse_polynomial(src, alphabet, field);
      } catch (const ParseError& e) {
        locate.fail_inside(e, label, at);
      }
      if (f.is_zero()) locate.fail(label + " is zero", at);
      if (!f.is_homogeneous()) {
        std::set<int> degrees;
        for (const auto& [w, c] : f.terms()) degrees.insert(w.degree());
        locate.fail(label + " is inhomogeneous: degrees " +
                        degree_list(degrees),
                    at);
      }
      relations.push_back(std::move(f));
    }
  }

  // comultiplication
  Comultiplication delta = Comultiplication::standard(alphabet, field);
  if (doc.contains("comultiplication")) {
    const json& images = doc["comultiplication"];
    if (!images.is_object())
      locate.fail("'comultiplication' must be an object",
                  text.find("\"comultiplication\""));
    for (const auto& [name, value] : images.items()) {
      const std::size_t at_key = locate.find_string(name, "comultiplication");
      auto x = alphabet.find(name);
      if (!x) locate.fail("unknown generator '" + name + "'", at_key);
      if (!value.is_string())
        locate.fail("image of '" + name + "' must be a string", at_key);
      const std::string src = value.get<std::string>();
      const std::size_t at = text.find(json(src).dump(), at_key + name.size() + 2);
      try {
        delta.set_image(*x, parse_tensor(src, alphabet, field));
      } catch (const ParseError& e) {
        locate.fail_inside(e, "image of '" + name + "'", at);
      }
    }
  }

  // degree bound
  int bound = 0;
  if (doc.contains("degree_bound")) {
    const json& b = doc["degree_bound"];
    const std::size_t at = text.find("\"degree_bound\"");
    if (!b.is_number_integer() || b.get<long long>() < 1 ||
        b.get<long long>() > 1000)
      locate.fail("degree_bound must be an integer between 1 and 1000", at);
    bound = b.get<int>();
  }
  if (overrides.bound) bound = *overrides.bound;
  if (bound < 1)
    throw std::invalid_argument(
        "no degree bound: set degree_bound in the file or pass --bound");

  for (std::size_t i = 0; i < relations.size(); ++i)
    if (relations[i].degree() > bound)
      throw std::invalid_argument(
          "relation " + std::to_string(i + 1) + " has degree " +
          std::to_string(relations[i].degree()) + " above the bound " +
          std::to_string(bound));

  return Presentation{std::move(alphabet), field, std::move(relations),
                      std::move(delta), bound};
}

Presentation load_presentation(const std::string& path,
                               const PresentationOverrides& overrides) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_presentation(buffer.str(), overrides);
}

std::string canonical_form(const Presentation& p) {
  const Alphabet& a = p.alphabet;
  std::string out = "field " + p.field.to_string() + "\ngenerators";
  for (const auto& g : a.declared())
    out += " " + g.name + ":" + std::to_string(g.degree);
  out += "\nrelations\n";
  for (const Polynomial& r : p.relations) out += "  " + render(r, a) + "\n";
  out += "comultiplication\n";
  for (const auto& g : a.declared()) {
    const Letter x = a.at(g.name);
    out += "  " + g.name + ": " +
           (p.comultiplication.has_image(x)
                ? render(p.comultiplication.image(x), a)
                : std::string("?")) +
           "\n";
  }
  out += "bound " + std::to_string(p.bound) + "\n";
  return out;
}

std::string digest(const Presentation& p) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : canonical_form(p)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx",
                static_cast<unsigned long long>(h));
  return buffer;
}

}  // namespace pbw
