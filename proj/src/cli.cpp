#include "pbw/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "pbw/coalg.hpp"
#include "pbw/error.hpp"
#include "pbw/expression.hpp"
#include "pbw/presentation_io.hpp"
#include "pbw/structure.hpp"

namespace pbw {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Options {
  std::string file;
  std::optional<int> bound;
  std::string json_path;
  std::string field;
  bool quiet = false;
  int degree = -1;
  std::string kind = "irreducible";
  std::string word;
  std::string generators;
};

/// Collects verdicts and the text/JSON renderings of one invocation.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {
    doc_["command"] = command_;
    doc_["digest"] = nullptr;
    doc_["bound"] = nullptr;
    doc_["field"] = nullptr;
    doc_["verdicts"] = ordered_json::array();
    doc_["gamma"] = ordered_json::array();
    doc_["hilbert"] = ordered_json::array();
    doc_["tower"] = ordered_json::array();
    doc_["diagnostics"] = ordered_json::array();
  }

  void set_presentation(const Presentation& p) {
    doc_["digest"] = digest(p);
    doc_["bound"] = p.bound;
    doc_["field"] = p.field.to_string();
    header_ = "pbw " + command_ + ": digest " + digest(p) + ", field " +
              p.field.to_string() + ", certified up to degree " +
              std::to_string(p.bound);
  }

  void line(const std::string& text) { lines_.push_back(text); }

  void add(const Verdict& v) {
    if (!v.pass) ++failed_;
    doc_["verdicts"].push_back(
        ordered_json{{"name", v.name}, {"pass", v.pass}, {"detail", v.detail}});
    lines_.push_back(std::string(v.pass ? "PASS " : "FAIL ") + v.name + ": " +
                     v.detail);
  }
  void add(const std::vector<Verdict>& vs) {
    for (const auto& v : vs) add(v);
  }

  void refuse(const std::string& message) {
    refused_ = true;
    doc_["diagnostics"].push_back("refused: " + message);
    lines_.push_back("refused: " + message);
  }

  ordered_json& operator[](const std::string& key) { return doc_[key]; }

  bool pass() const { return failed_ == 0 && !refused_; }

  std::string text() const {
    std::string out;
    if (!header_.empty()) out += header_ + "\n";
    for (const auto& l : lines_) out += l + "\n";
    if (refused_)
      out += "result: refused\n";
    else if (failed_ > 0)
      out += "result: FAIL (" + std::to_string(failed_) + " of " +
             std::to_string(doc_["verdicts"].size()) + " verdicts failed)\n";
    else
      out += "result: pass\n";
    return out;
  }

  std::string json_text() const {
    ordered_json doc = doc_;
    doc["result"] = refused_ ? "refused" : (failed_ > 0 ? "fail" : "pass");
    return doc.dump(2) + "\n";
  }

 private:
  std::string command_;
  std::string header_;
  std::vector<std::string> lines_;
  ordered_json doc_;
  std::size_t failed_ = 0;
  bool refused_ = false;
};

// ------------------------------------------------------------------- helpers

std::vector<std::string> natural_chunks(const std::string& s) {
  std::vector<std::string> chunks;
  for (std::size_t i = 0; i < s.size();) {
    const bool digit = std::isdigit(static_cast<unsigned char>(s[i]));
    std::size_t j = i;
    while (j < s.size() &&
           static_cast<bool>(std::isdigit(static_cast<unsigned char>(s[j]))) ==
               digit)
      ++j;
    chunks.push_back(s.substr(i, j - i));
    i = j;
  }
  return chunks;
}

// "x2" < "x10": digit runs compare by value.
bool natural_less(const std::string& a, const std::string& b) {
  const auto ca = natural_chunks(a), cb = natural_chunks(b);
  for (std::size_t i = 0; i < std::min(ca.size(), cb.size()); ++i) {
    if (ca[i] == cb[i]) continue;
    const bool da = std::isdigit(static_cast<unsigned char>(ca[i][0]));
    const bool db = std::isdigit(static_cast<unsigned char>(cb[i][0]));
    if (da && db) {
      const auto ta = ca[i].substr(std::min(ca[i].find_first_not_of('0'), ca[i].size() - 1));
      const auto tb = cb[i].substr(std::min(cb[i].find_first_not_of('0'), cb[i].size() - 1));
      if (ta.size() != tb.size()) return ta.size() < tb.size();
      if (ta != tb) return ta < tb;
      continue;
    }
    return ca[i] < cb[i];
  }
  return ca.size() < cb.size();
}

// Splits "x2*x1^2" or "x2 x1 x1" into (name, exponent) tokens.
std::vector<std::pair<std::string, int>> word_tokens(const std::string& src) {
  std::vector<std::pair<std::string, int>> tokens;
  std::string normalized = src;
  std::replace(normalized.begin(), normalized.end(), '*', ' ');
  std::istringstream in(normalized);
  std::string token;
  while (in >> token) {
    int exponent = 1;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      const std::string e = token.substr(caret + 1);
      if (e.empty() || e.find_first_not_of("0123456789") != std::string::npos ||
          e.size() > 4 || std::stoi(e) < 1)
        throw std::invalid_argument("bad exponent in '" + token + "'");
      exponent = std::stoi(e);
      token = token.substr(0, caret);
    }
    if (token.empty()) throw std::invalid_argument("empty generator name");
    tokens.emplace_back(token, exponent);
  }
  if (tokens.empty()) throw std::invalid_argument("empty word");
  return tokens;
}

Alphabet word_alphabet(const Options& o,
                       const std::vector<std::pair<std::string, int>>& tokens) {
  std::vector<Alphabet::Generator> generators;
  if (!o.generators.empty()) {
    std::string list = o.generators;
    std::replace(list.begin(), list.end(), ',', ' ');
    std::istringstream in(list);
    std::string item;
    while (in >> item) {
      const auto colon = item.find(':');
      std::string name = item.substr(0, colon);
      int degree = 1;
      if (colon != std::string::npos) {
        const std::string d = item.substr(colon + 1);
        if (d.empty() || d.find_first_not_of("-0123456789") != std::string::npos ||
            d.size() > 6)
          throw std::invalid_argument("bad degree in '" + item + "'");
        degree = std::stoi(d);
      }
      generators.push_back({name, degree});
    }
  } else {
    std::vector<std::string> names;
    for (const auto& [name, e] : tokens)
      if (std::find(names.begin(), names.end(), name) == names.end())
        names.push_back(name);
    std::sort(names.begin(), names.end(), natural_less);
    for (const auto& name : names) generators.push_back({name, 1});
  }
  return Alphabet(std::move(generators));
}

Word build_word(const Alphabet& alphabet,
                const std::vector<std::pair<std::string, int>>& tokens) {
  Word w;
  for (const auto& [name, e] : tokens) w = w * Word(alphabet.at(name)).power(e);
  return w;
}

ordered_json gamma_json(const Analysis& a, const std::vector<Word>& gamma) {
  ordered_json out = ordered_json::array();
  for (const Word& g : gamma)
    out.push_back(ordered_json{{"word", a.render(g)}, {"degree", g.degree()}});
  return out;
}

std::string gamma_line(const Analysis& a, const std::vector<Word>& gamma) {
  std::string out = "gamma (" + std::to_string(gamma.size()) + ", lex order):";
  for (std::size_t i = 0; i < gamma.size(); ++i)
    out += (i ? " < " : " ") + a.render(gamma[i]);
  return out;
}

std::string number_line(const std::string& label,
                        const std::vector<std::size_t>& values) {
  std::string out = label + ":";
  for (std::size_t v : values) out += " " + std::to_string(v);
  return out;
}

void add_hilbert(Report& r, const HilbertReport& h) {
  r["hilbert"] = h.dimensions;
  r.line(number_line("hilbert", h.dimensions));
  r.add(h.verdicts);
}

void add_gamma(Report& r, const Analysis& a, const StructureReport& s) {
  r["gamma"] = gamma_json(a, s.gamma);
  r.line(gamma_line(a, s.gamma));
  r.line(std::string("finiteness: ") +
         (s.candidate_finite
              ? "candidate finite at D=" + std::to_string(s.bound)
              : "not finite at bound D=" + std::to_string(s.bound)) +
         " (window " + std::to_string(s.window) + ")");
}

PresentationOverrides overrides_of(const Options& o) {
  PresentationOverrides ov;
  if (!o.field.empty()) ov.field = parse_field(o.field);
  ov.bound = o.bound;
  return ov;
}

// ------------------------------------------------------------------ commands

void run_lyndon(const std::string& action, const Options& o, Report& r) {
  const auto tokens = word_tokens(o.word);
  const Alphabet alphabet = word_alphabet(o, tokens);
  const Word w = build_word(alphabet, tokens);
  const std::string shown = render_word(w, alphabet);
  r["word"] = shown;
  if (action == "decompose") {
    ordered_json factors = ordered_json::array();
    std::string text = "factors:";
    for (const Word& f : lyndon_decomposition(w)) {
      factors.push_back(render_word(f, alphabet));
      text += " (" + render_word(f, alphabet) + ")";
    }
    r["factors"] = factors;
    r.line(text);
  } else if (action == "check") {
    const bool lyndon = is_lyndon(w);
    std::string detail = shown + (lyndon ? " is Lyndon" : " is not Lyndon");
    if (lyndon && w.length() >= 2) {
      auto [left, right] = shirshov_factorization(w);
      r["shirshov"] = {render_word(left, alphabet), render_word(right, alphabet)};
      r.line("shirshov: (" + render_word(left, alphabet) + ", " +
             render_word(right, alphabet) + ")");
    }
    r.add({"lyndon", lyndon, detail});
  } else {
    const Polynomial b = standard_bracket(w, Field::rationals());
    r["bracket"] = render(b, alphabet);
    r.line("[" + shown + "] = " + render(b, alphabet));
  }
}

void run_gb(Analysis& a, Report& r) {
  ordered_json elements = ordered_json::array();
  r.line("groebner basis (" + std::to_string(a.gb().elements().size()) +
         " elements, complete up to degree " + std::to_string(a.bound()) + "):");
  for (const Polynomial& g : a.gb().elements()) {
    elements.push_back(a.render(g));
    r.line("  " + a.render(g));
  }
  r["groebner_basis"] = elements;
}

void run_basis(Analysis& a, const Options& o, Report& r) {
  if (o.degree < 0) throw std::invalid_argument("--degree must be >= 0");
  const BasisKind kind = o.kind == "B"   ? BasisKind::B
                         : o.kind == "C" ? BasisKind::C
                                         : BasisKind::irreducible;
  const auto words = admissible_words(a.gb(), o.degree, kind);
  ordered_json list = ordered_json::array();
  std::string text = o.kind + " words of degree " + std::to_string(o.degree) +
                     " (" + std::to_string(words.size()) + "):";
  for (const Word& w : words) {
    list.push_back(a.render(w));
    text += " " + a.render(w);
  }
  r["basis"] = ordered_json{{"degree", o.degree}, {"kind", o.kind}, {"words", list}};
  r.line(text);
}

void run_hilbert(Analysis& a, Report& r) {
  const StructureReport s = verify_structure_conditions(a);
  add_gamma(r, a, s);
  add_hilbert(r, hilbert_and_gk(s));
}

void run_verify(Analysis& a, Report& r) {
  const StructureReport s = verify_structure_conditions(a);
  r.add(s.hypotheses.verdicts);
  add_gamma(r, a, s);
  if (s.refused) {
    r.refuse("hypotheses failed; structure conditions not evaluated");
    return;
  }
  for (const Word& g : s.gamma)
    r.line("z(" + a.render(g) + ") = " + a.render(s.z.at(g)));
  r.add(s.conditions);
  r.add(verify_quasi_lie(a));
  add_hilbert(r, hilbert_and_gk(s));
}

void run_hopf_check(Analysis& a, Report& r) {
  const Comultiplication& delta = a.presentation().comultiplication;
  const StabilityReport stability = check_stability(delta, a.gb());
  r.add({"stable", stability.ok(),
         stability.ok() ? std::to_string(stability.checked) +
                              " basis elements, all stable"
                        : "unstable at " + a.render(stability.failures.front().element)});
  const CoalgebraReport c = check_coassoc_counit(delta, a.gb(), a.bound());
  auto first = [&](bool coassoc) -> std::string {
    for (const auto& f : c.failures)
      if ((f.law == CoalgebraLaw::coassociativity) == coassoc)
        return "fails at '" + a.render(f.at) + "'" +
               (coassoc ? "" : ": residue " + a.render(f.residue));
    return "";
  };
  r.add({"coassociative", c.coassociative(),
         c.coassociative() ? std::to_string(c.tested) +
                                 " elements up to degree " +
                                 std::to_string(c.degree)
                           : first(true)});
  r.add({"counit", c.counital(),
         c.counital() ? "both counit laws hold on the generators" : first(false)});

  try {
    const Antipode s(delta, a.gb());
    ordered_json images = ordered_json::array();
    for (const auto& g : a.alphabet().declared()) {
      const Letter x = a.alphabet().at(g.name);
      images.push_back(ordered_json{{"generator", g.name},
                                    {"image", a.render(s.on_letter(x))}});
      r.line("S(" + g.name + ") = " + a.render(s.on_letter(x)));
    }
    r["antipode"] = images;
    std::size_t tested = 0;
    std::string failure;
    for (int n = 0; n <= a.bound() && failure.empty(); ++n) {
      for (const Word& w : a.data().irreducible[static_cast<std::size_t>(n)]) {
        ++tested;
        const Polynomial f = Polynomial::word(a.field(), w);
        for (bool right : {false, true}) {
          const Polynomial defect = s.convolution_defect(f, right);
          if (!defect.is_zero() && failure.empty())
            failure = std::string(right ? "m(id#S)" : "m(S#id)") +
                      "Delta(" + a.render(w) + ") - eps = " + a.render(defect);
        }
      }
    }
    r.add({"antipode", failure.empty(),
           failure.empty() ? "convolution inverse on " + std::to_string(tested) +
                                 " basis words up to degree " +
                                 std::to_string(a.bound())
                           : failure});
  } catch (const HypothesisFailure& e) {
    r.add({"antipode", false, e.what()});
  } catch (const Unsupported& e) {
    r.add({"antipode", false, e.what()});
  }
}

void run_ihoe(Analysis& a, Report& r) {
  const StructureReport s = verify_structure_conditions(a);
  r.add(s.hypotheses.verdicts);
  add_gamma(r, a, s);
  if (s.refused) {
    r.refuse("hypotheses failed; no tower extracted");
    return;
  }
  r.add(s.conditions);
  OreTower tower;
  try {
    tower = extract_ihoe(a, s);
  } catch (const HypothesisFailure& e) {
    r.refuse(e.what());
    return;
  }
  std::string shape;
  ordered_json levels = ordered_json::array();
  for (std::size_t i = 0; i < tower.levels.size(); ++i) {
    const OreLevel& level = tower.levels[i];
    const std::string zi = "z" + std::to_string(i + 1);
    shape += i == 0 ? "k[" + zi + "]"
                    : "[" + zi + "; delta_" + std::to_string(i + 1) + "]";
    r.line(zi + " = [" + a.render(level.word) + "] (degree " +
           std::to_string(level.degree) + ")");
    ordered_json derivation = ordered_json::array();
    for (std::size_t j = 0; j < level.derivation.size(); ++j) {
      const std::string on = "z" + std::to_string(j + 1);
      const std::string value = render_pbw(level.derivation[j]);
      derivation.push_back(ordered_json{{"on", on}, {"value", value}});
      r.line("  delta_" + std::to_string(i + 1) + "(" + on + ") = " + value);
    }
    levels.push_back(ordered_json{{"generator", zi},
                                  {"word", a.render(level.word)},
                                  {"degree", level.degree},
                                  {"derivation", derivation}});
  }
  r["tower"] = levels;
  r.line("tower: " + shape);
  r.add(tower.verdicts);
}

void run_lie_gens(Analysis& a, Report& r) {
  std::vector<LieGenerator> gens;
  try {
    gens = recover_lie_generators(a);
  } catch (const HypothesisFailure& e) {
    r.refuse(e.what());
    return;
  }
  ordered_json list = ordered_json::array();
  bool all_lie = true;
  for (const auto& g : gens) {
    all_lie = all_lie && g.lie;
    list.push_back(ordered_json{{"word", a.render(g.word)},
                                {"generator", a.render(g.element)},
                                {"lie", g.lie}});
    r.line("g(" + a.render(g.word) + ") = " + a.render(g.element) +
           (g.lie ? "  [Lie]" : "  [not Lie]"));
  }
  r["lie_generators"] = list;
  r.add({"lie-generators", all_lie,
         all_lie ? std::to_string(gens.size()) +
                       " generator(s); I is generated by Lie polynomials up to "
                       "degree " +
                       std::to_string(a.bound())
                 : "some recovered generator is not a Lie polynomial"});
}

void run_heights(Analysis& a, Report& r) {
  const HeightReport h = check_heights(a);
  ordered_json list = ordered_json::array();
  for (const auto& e : h.entries) {
    const std::string value =
        e.height.value ? std::to_string(*e.height.value)
                       : "not observed <= " + std::to_string(a.bound());
    list.push_back(ordered_json{
        {"word", a.render(e.word)},
        {"height", e.height.value ? ordered_json(*e.height.value)
                                  : ordered_json(nullptr)},
        {"searched_up_to", e.height.searched_up_to}});
    r.line("h(" + a.render(e.word) + ") = " + value);
  }
  r["heights"] = list;
  r.add(h.verdicts);
}

int emit(const Report& r, const Options& o, std::ostream& out,
         std::ostream& err) {
  if (!o.quiet) out << r.text();
  if (!o.json_path.empty()) {
    std::ofstream file(o.json_path, std::ios::binary | std::ios::trunc);
    if (!file || !(file << r.json_text())) {
      err << "error: cannot write '" << o.json_path << "'\n";
      return 2;
    }
  }
  return r.pass() ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Structure computations for connected graded Hopf algebras "
               "given by presentations",
               "pbw"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--json", o.json_path, "Write the machine report here");
    sub->add_flag("--quiet", o.quiet, "Print nothing; exit code only");
  };
  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "Presentation file (JSON)")->required();
    sub->add_option("--bound", o.bound, "Certification degree bound D");
    sub->add_option("--field", o.field, "Q or Fp:<p>; overrides the file");
    add_common(sub);
  };

  CLI::App* lyndon = app.add_subcommand("lyndon", "Word utilities");
  lyndon->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App*>> lyndon_actions;
  for (const char* action : {"decompose", "check", "bracket"}) {
    CLI::App* sub = lyndon->add_subcommand(action);
    sub->add_option("word", o.word, "Word, e.g. \"x2*x1^2\"")->required();
    sub->add_option("--generators", o.generators,
                    "Alphabet as name:degree list, e.g. \"x1:1,x2:1\"");
    add_common(sub);
    lyndon_actions.emplace_back(action, sub);
  }
  lyndon_actions[0].second->description("Lyndon decomposition of a word");
  lyndon_actions[1].second->description("Lyndon test and Shirshov factorization");
  lyndon_actions[2].second->description("Standard bracketing of a word");

  std::vector<std::pair<std::string, CLI::App*>> commands;
  auto add_command = [&](const char* name, const char* description) {
    CLI::App* sub = app.add_subcommand(name, description);
    add_file(sub);
    commands.emplace_back(name, sub);
    return sub;
  };
  add_command("gb", "Truncated Groebner basis");
  CLI::App* basis = add_command("basis", "Irreducible, B or C words of a degree");
  basis->add_option("--degree", o.degree, "Degree n")->required();
  basis->add_option("--kind", o.kind, "irreducible | B | C")
      ->check(CLI::IsMember({"irreducible", "B", "C"}));
  add_command("hilbert", "Hilbert series and GK dimension");
  add_command("verify", "Hypotheses, structure conditions and Hilbert data");
  add_command("hopf-check", "Coassociativity, counit and antipode");
  add_command("ihoe", "Iterated Ore extension tower");
  add_command("lie-gens", "Lie generators of the ideal");
  add_command("heights", "Heights of irreducible Lyndon words");

  if (!args.empty() && !args[0].empty() && args[0][0] != '-') {
    bool known = false;
    for (const CLI::App* sub : app.get_subcommands({}))
      known = known || sub->get_name() == args[0];
    if (!known) {
      err << "error: unknown command '" << args[0] << "'\n" << app.help();
      return 2;
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    for (const auto& [action, sub] : lyndon_actions) {
      if (!sub->parsed()) continue;
      Report r("lyndon " + action);
      run_lyndon(action, o, r);
      return emit(r, o, out, err);
    }
    for (const auto& [name, sub] : commands) {
      if (!sub->parsed()) continue;
      Report r(name);
      Analysis a(load_presentation(o.file, overrides_of(o)));
      r.set_presentation(a.presentation());
      if (name == "gb")
        run_gb(a, r);
      else if (name == "basis")
        run_basis(a, o, r);
      else if (name == "hilbert")
        run_hilbert(a, r);
      else if (name == "verify")
        run_verify(a, r);
      else if (name == "hopf-check")
        run_hopf_check(a, r);
      else if (name == "ihoe")
        run_ihoe(a, r);
      else if (name == "lie-gens")
        run_lie_gens(a, r);
      else
        run_heights(a, r);
      return emit(r, o, out, err);
    }
  } catch (const HypothesisFailure& e) {
    err << "refused: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command given\n" << app.help();
  return 2;
}

}  // namespace pbw
