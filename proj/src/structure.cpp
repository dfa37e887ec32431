#include "pbw/structure.hpp"

#include <algorithm>
#include <stdexcept>

#include "pbw/error.hpp"
#include "pbw/expression.hpp"

namespace pbw {

bool all_pass(const std::vector<Verdict>& verdicts) {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const Verdict& v) { return v.pass; });
}

// ------------------------------------------------------------------ Analysis

Analysis::Analysis(Presentation presentation)
    : presentation_(std::move(presentation)) {
  if (presentation_.bound < 1)
    throw std::invalid_argument("degree bound must be at least 1");
  gb_ = std::make_unique<TruncatedGB>(compute_truncated_gb(
      presentation_.alphabet, presentation_.field, presentation_.relations,
      presentation_.bound));
  data_ = compute_irreducible_data(*gb_);
  expander_ = std::make_unique<BracketExpander>(*gb_);
}

std::string Analysis::render(const Word& w) const {
  return render_word(w, alphabet());
}
std::string Analysis::render(const Polynomial& f) const {
  return pbw::render(f, alphabet());
}
std::string Analysis::render(const TensorElement& t) const {
  return pbw::render(t, alphabet());
}

namespace {

std::string indexed(const std::string& name, int n) {
  return name + "[" + std::to_string(n) + "]";
}

std::string join(const std::vector<std::string>& parts,
                 const std::string& separator) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += separator;
    out += parts[i];
  }
  return out;
}

std::string counts(const std::vector<std::size_t>& values) {
  std::vector<std::string> parts;
  for (std::size_t v : values) parts.push_back(std::to_string(v));
  return join(parts, " ");
}

// The first label of `coords` with a Lyndon factor outside the bound, if any.
std::optional<Word> first_outside(const Polynomial& coords, const Word& bound,
                                  bool inclusive) {
  for (const auto& [w, c] : coords.terms())
    if (!factors_below(w, bound, inclusive)) return w;
  return std::nullopt;
}

// A key of leg-wise coordinates with an empty leg or a leg whose Lyndon
// factors are not all below `bound`.
std::optional<TensorElement::Key> first_outside(const TensorElement& coords,
                                                const Word& bound) {
  for (const auto& [key, c] : coords.terms()) {
    if (key.first.empty() || key.second.empty()) return key;
    if (!factors_below(key.first, bound) || !factors_below(key.second, bound))
      return key;
  }
  return std::nullopt;
}

// Delta([u]) - 1(x)[u] - [u](x)1, reduced leg-wise, in bracket coordinates.
TensorElement coproduct_tail(Analysis& a, const Word& u) {
  const Field field = a.field();
  const Polynomial& bracket = a.expander().bracket(u);
  const Polynomial one = Polynomial::constant(field, 1);
  TensorElement rest = a.presentation().comultiplication.apply(bracket) -
                       TensorElement::tensor(one, bracket) -
                       TensorElement::tensor(bracket, one);
  return a.expander().coordinates(normal_form_legs(rest, a.gb()));
}

std::string render_key(const Analysis& a, const TensorElement::Key& key) {
  return a.render(key.first) + "#" + a.render(key.second);
}

}  // namespace

// ---------------------------------------------------------------- hypotheses

Hypotheses check_hypotheses(Analysis& a) {
  Hypotheses h;
  const Comultiplication& delta = a.presentation().comultiplication;
  h.triangular = check_triangular(delta, true);
  {
    Verdict v{"triangular", h.triangular.ok(), {}};
    if (v.pass) {
      v.detail = "graded triangular";
    } else {
      std::vector<std::string> parts;
      for (const auto& violation : h.triangular.violations)
        parts.push_back(a.alphabet().name(violation.generator) + ": " +
                        violation.reason);
      v.detail = join(parts, "; ");
    }
    h.verdicts.push_back(std::move(v));
  }

  h.stability = check_stability(delta, a.gb());
  {
    Verdict v{"stable", h.stability.ok(), {}};
    if (v.pass) {
      v.detail = std::to_string(h.stability.checked) +
                 " basis elements, all stable up to degree " +
                 std::to_string(a.bound());
    } else {
      std::vector<std::string> parts;
      for (const auto& failure : h.stability.failures)
        parts.push_back(a.render(failure.element) + " -> " +
                        (failure.note.empty() ? a.render(failure.residue)
                                              : failure.note));
      v.detail = "unstable: " + join(parts, "; ");
    }
    h.verdicts.push_back(std::move(v));
  }
  return h;
}

// ------------------------------------------------------ structure conditions

StructureReport verify_structure_conditions(Analysis& a) {
  StructureReport report;
  report.bound = a.bound();
  report.field = a.field();
  report.hypotheses = check_hypotheses(a);

  const IrreducibleData& data = a.data();
  report.gamma = data.lyndon;
  std::sort(report.gamma.begin(), report.gamma.end(), LexLess{});
  for (const Word& g : report.gamma) {
    report.gamma_heights.push_back(data.heights.at(g));
    report.z.emplace(g, a.expander().reduced_bracket(g));
  }
  for (int n = 0; n <= a.bound(); ++n) {
    const auto i = static_cast<std::size_t>(n);
    report.dimensions.push_back(data.irreducible[i].size());
    report.b_counts.push_back(data.b_words[i].size());
    report.c_counts.push_back(data.c_words[i].size());
  }
  report.window = std::max(1, a.gb().max_relation_degree());
  report.candidate_finite = std::none_of(
      report.gamma.begin(), report.gamma.end(), [&](const Word& g) {
        return g.degree() > a.bound() - report.window;
      });

  if (!report.hypotheses.ok()) {
    report.refused = true;
    return report;
  }

  // (1) Delta(z_gamma) - 1(x)z - z(x)1 in H^{<gamma} (x) H^{<gamma}.
  for (int n = 1; n <= a.bound(); ++n) {
    std::size_t checked = 0;
    std::string failure;
    for (const Word& g : report.gamma) {
      if (g.degree() != n) continue;
      ++checked;
      const TensorElement tail = coproduct_tail(a, g);
      if (auto key = first_outside(tail, g); key && failure.empty())
        failure = "z(" + a.render(g) + "): term " + render_key(a, *key) +
                  " outside H^{<" + a.render(g) + "} # H^{<" + a.render(g) +
                  "}";
    }
    if (checked == 0) continue;
    report.conditions.push_back(
        {indexed("generator-coproduct", n), failure.empty(),
         failure.empty() ? std::to_string(checked) + " generator(s) checked"
                         : failure});
  }

  // (2) z_gamma z_delta - z_delta z_gamma in H^{<gamma} for delta < gamma.
  for (int n = 2; n <= a.bound(); ++n) {
    std::size_t checked = 0;
    std::string failure;
    for (std::size_t i = 0; i < report.gamma.size(); ++i) {
      const Word& g = report.gamma[i];
      for (std::size_t j = 0; j < i; ++j) {
        const Word& d = report.gamma[j];
        if (g.degree() + d.degree() != n) continue;
        ++checked;
        const Polynomial& zg = report.z.at(g);
        const Polynomial& zd = report.z.at(d);
        const Polynomial coords = a.expander().coordinates(zg * zd - zd * zg);
        if (auto w = first_outside(coords, g, false); w && failure.empty())
          failure = "[z(" + a.render(g) + "), z(" + a.render(d) +
                    ")] involves [" + a.render(*w) + "] outside H^{<" +
                    a.render(g) + "}";
      }
    }
    if (checked == 0) continue;
    report.conditions.push_back(
        {indexed("commutator-closure", n), failure.empty(),
         failure.empty() ? std::to_string(checked) + " pair(s) checked"
                         : failure});
  }

  // (3) Ordered monomials in the z_gamma form a basis.
  const bool char0 = a.field().is_rational();
  for (int n = 0; n <= a.bound(); ++n) {
    const auto i = static_cast<std::size_t>(n);
    const auto& candidate = char0 ? data.b_words[i] : data.c_words[i];
    const bool pass = candidate == data.irreducible[i];
    report.conditions.push_back(
        {indexed("pbw-basis", n), pass,
         std::string(char0 ? "#B_I = " : "#C_I = ") +
             std::to_string(candidate.size()) + ", dim = " +
             std::to_string(data.irreducible[i].size())});
  }
  return report;
}

// ------------------------------------------------------------------- Hilbert

HilbertReport hilbert_and_gk(const StructureReport& report) {
  HilbertReport h;
  h.dimensions = report.dimensions;
  const int bound = report.bound;
  h.product.assign(static_cast<std::size_t>(bound) + 1, 0);
  h.product[0] = 1;
  const bool char0 = report.field.is_rational();
  std::size_t infinite = 0;
  for (std::size_t k = 0; k < report.gamma.size(); ++k) {
    const int d = report.gamma[k].degree();
    const Height& height = report.gamma_heights[k];
    const bool capped = !char0 && height.value.has_value();
    if (!height.value) ++infinite;
    // Multiply by 1 + t^d + ... + t^{(h-1)d}, or the full geometric series.
    std::vector<std::size_t> next(h.product.size(), 0);
    for (std::size_t n = 0; n < h.product.size(); ++n) {
      if (h.product[n] == 0) continue;
      for (int e = 0; n + static_cast<std::size_t>(e * d) < next.size(); ++e) {
        if (capped && e >= *height.value) break;
        next[n + static_cast<std::size_t>(e * d)] += h.product[n];
      }
    }
    h.product = std::move(next);
  }
  const bool match = h.product == h.dimensions;
  h.verdicts.push_back(
      {"hilbert-product", match,
       match ? "dimensions " + counts(h.dimensions) +
                   " match the PBW product up to degree " +
                   std::to_string(bound)
             : "dimensions " + counts(h.dimensions) + " but product gives " +
                   counts(h.product)});
  if (report.candidate_finite) {
    h.gk = char0 ? report.gamma.size() : infinite;
    h.verdicts.push_back(
        {"gk-dimension", true,
         "equals " + std::to_string(*h.gk) +
             (char0 ? " = #Gamma" : " (members of Gamma without finite height)") +
             ", certified up to degree " + std::to_string(bound) +
             " (candidate finite)"});
  } else {
    h.verdicts.push_back(
        {"gk-dimension", true,
         "unbounded at D=" + std::to_string(bound) +
             ": Gamma still grows within the last " +
             std::to_string(report.window) + " degree(s)"});
  }
  return h;
}

// ----------------------------------------------------------------- Ore tower

OreTower extract_ihoe(Analysis& a, const StructureReport& report) {
  if (!report.ok())
    throw HypothesisFailure("ihoe refused: structure verification failed");
  if (!report.candidate_finite)
    throw HypothesisFailure("ihoe refused: Gamma is not candidate finite at D=" +
                            std::to_string(report.bound));
  const auto& gamma = report.gamma;
  auto index_of = [&](const Word& w) -> std::size_t {
    return static_cast<std::size_t>(
        std::lower_bound(gamma.begin(), gamma.end(), w, LexLess{}) -
        gamma.begin());
  };

  OreTower tower;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    OreLevel level;
    level.word = gamma[i];
    level.degree = gamma[i].degree();
    const std::string zi = "z" + std::to_string(i + 1);
    const Polynomial& z_i = report.z.at(gamma[i]);

    std::string escape;
    for (std::size_t j = 0; j < i; ++j) {
      if (level.degree + gamma[j].degree() > a.bound())
        throw HypothesisFailure("ihoe refused: delta value " + zi + "(z" +
                                std::to_string(j + 1) +
                                ") lies above the bound " +
                                std::to_string(a.bound()));
      const Polynomial& z_j = report.z.at(gamma[j]);
      const Polynomial coords =
          a.expander().coordinates(z_i * z_j - z_j * z_i);
      PbwVector value;
      for (const auto& [w, c] : coords.terms()) {
        std::vector<int> exponents(i, 0);
        for (const Word& factor : lyndon_decomposition(w)) {
          const std::size_t k = index_of(factor);
          if (k >= i) {
            if (escape.empty())
              escape = "delta_" + std::to_string(i + 1) + "(z" +
                       std::to_string(j + 1) + ") involves " + a.render(w);
            exponents.resize(std::max(exponents.size(), k + 1), 0);
          }
          ++exponents[k];
        }
        value.emplace(std::move(exponents), c);
      }
      level.derivation.push_back(std::move(value));
    }
    if (i > 0)
      tower.verdicts.push_back(
          {"tower-derivation[" + zi + "]", escape.empty(),
           escape.empty() ? "values in H^{<=" + std::to_string(i) + "}"
                          : escape});

    level.coproduct_tail = coproduct_tail(a, gamma[i]);
    auto bad = first_outside(level.coproduct_tail, gamma[i]);
    level.coproduct_ok = !bad;
    tower.verdicts.push_back(
        {"tower-coproduct[" + zi + "]", level.coproduct_ok,
         level.coproduct_ok ? "tail in H^{<=" + std::to_string(i) + "} # H^{<=" +
                                  std::to_string(i) + "}"
                            : "term " + render_key(a, *bad) + " escapes"});
    tower.levels.push_back(std::move(level));
  }
  return tower;
}

std::string render_pbw(const PbwVector& v) {
  if (v.empty()) return "0";
  std::string out;
  // Largest exponent vectors first, matching the polynomial rendering.
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    const auto& [exponents, c] = *it;
    std::string monomial;
    for (std::size_t k = 0; k < exponents.size(); ++k) {
      if (exponents[k] == 0) continue;
      if (!monomial.empty()) monomial += '*';
      monomial += "z" + std::to_string(k + 1);
      if (exponents[k] > 1) monomial += "^" + std::to_string(exponents[k]);
    }
    const bool negative = c.is_negative();
    const Scalar magnitude = negative ? -c : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (monomial.empty())
      out += magnitude.to_string();
    else if (magnitude.is_one())
      out += monomial;
    else
      out += magnitude.to_string() + "*" + monomial;
  }
  return out;
}

// ------------------------------------------------------------ Lie generators

std::vector<LieGenerator> recover_lie_generators(Analysis& a) {
  if (!a.field().is_rational())
    throw Unsupported("Lie generator recovery needs characteristic 0");
  const Comultiplication standard =
      Comultiplication::standard(a.alphabet(), a.field());
  const Comultiplication& delta = a.presentation().comultiplication;
  for (Letter x : a.alphabet().letters())
    if (!(delta.image(x) == standard.image(x)))
      throw HypothesisFailure(
          "Lie generator recovery needs primitive generators; '" +
          a.alphabet().name(x) + "' is not primitive");
  if (!check_stability(delta, a.gb()).ok())
    throw HypothesisFailure(
        "Lie generator recovery refused: the ideal is not stable");

  std::vector<LieGenerator> out;
  for (const Word& v : enumerate_lyndon(a.alphabet(), a.bound())) {
    if (!a.gb().is_reducible(v)) continue;
    Polynomial g = a.expander().bracket(v);
    const Polynomial coords = a.expander().coordinates(g);
    for (const auto& [w, c] : coords.terms())
      g.add_scaled(-c, Word(), a.expander().bracket(w), Word());
    const bool lie = is_lie_polynomial(g);
    out.push_back({v, std::move(g), lie});
  }
  return out;
}

// ------------------------------------------------------------ quasi-Lie parts

std::vector<Verdict> verify_quasi_lie(Analysis& a) {
  std::vector<Verdict> verdicts;
  const IrreducibleData& data = a.data();
  const std::vector<Word> all_lyndon = enumerate_lyndon(a.alphabet(), a.bound());

  // (1) NF([v]) for reducible Lyndon v uses only brackets below v.
  for (int n = 1; n <= a.bound(); ++n) {
    std::size_t checked = 0;
    std::string failure;
    for (const Word& v : all_lyndon) {
      if (v.degree() != n || !a.gb().is_reducible(v)) continue;
      ++checked;
      const Polynomial coords = a.expander().coordinates(a.expander().bracket(v));
      if (auto w = first_outside(coords, v, false); w && failure.empty())
        failure = "NF([" + a.render(v) + "]) involves [" + a.render(*w) + "]";
    }
    if (checked == 0) continue;
    verdicts.push_back({indexed("quasi-lie-1", n), failure.empty(),
                        failure.empty()
                            ? std::to_string(checked) + " reducible word(s)"
                            : failure});
  }

  // (2) [u][v] - [v][u] for irreducible Lyndon u > v stays below uv.
  for (int n = 2; n <= a.bound(); ++n) {
    std::size_t checked = 0;
    std::string failure;
    for (const Word& u : data.lyndon) {
      for (const Word& v : data.lyndon) {
        if (u.degree() + v.degree() != n || compare_lex(u, v) <= 0) continue;
        ++checked;
        const Polynomial& bu = a.expander().reduced_bracket(u);
        const Polynomial& bv = a.expander().reduced_bracket(v);
        const Polynomial coords = a.expander().coordinates(bu * bv - bv * bu);
        const Word uv = u * v;
        if (auto w = first_outside(coords, uv, true); w && failure.empty())
          failure = "[[" + a.render(u) + "], [" + a.render(v) + "]] involves [" +
                    a.render(*w) + "]";
      }
    }
    if (checked == 0) continue;
    verdicts.push_back({indexed("quasi-lie-2", n), failure.empty(),
                        failure.empty() ? std::to_string(checked) + " pair(s)"
                                        : failure});
  }

  // (3) B_I equals the irreducible words.
  if (a.field().is_rational()) {
    for (int n = 0; n <= a.bound(); ++n) {
      const auto i = static_cast<std::size_t>(n);
      const bool pass = data.b_words[i] == data.irreducible[i];
      verdicts.push_back({indexed("quasi-lie-3", n), pass,
                          "#B_I = " + std::to_string(data.b_words[i].size()) +
                              ", irreducible = " +
                              std::to_string(data.irreducible[i].size())});
    }
  }
  return verdicts;
}

// ------------------------------------------------------------------- heights

namespace {

bool is_power_of(int value, unsigned p) {
  if (value < 1) return false;
  auto v = static_cast<unsigned>(value);
  while (v % p == 0) v /= p;
  return v == 1;
}

}  // namespace

HeightReport check_heights(Analysis& a) {
  HeightReport report;
  const IrreducibleData& data = a.data();
  std::vector<std::string> finite;
  std::vector<std::string> not_power;
  std::string soft_failure;
  std::size_t soft_checked = 0;
  const unsigned p = a.field().characteristic();

  for (const Word& u : data.lyndon) {
    const Height& h = data.heights.at(u);
    report.entries.push_back({u, h});
    if (!h.value) continue;
    finite.push_back("h(" + a.render(u) + ") = " + std::to_string(*h.value));
    if (p != 0 && !is_power_of(*h.value, p))
      not_power.push_back(finite.back());

    const int n = *h.value;
    if (n * u.degree() > a.bound()) continue;
    ++soft_checked;
    Polynomial power = Polynomial::constant(a.field(), 1);
    for (int e = 0; e < n; ++e) power = power * a.expander().bracket(u);
    const Polynomial coords =
        a.expander().coordinates(power).homogeneous_component(n * u.degree());
    if (auto w = first_outside(coords, u, false); w && soft_failure.empty())
      soft_failure = "NF([" + a.render(u) + "]^" + std::to_string(n) +
                     ") involves [" + a.render(*w) + "]";
  }

  const std::string bound = std::to_string(a.bound());
  if (p == 0) {
    report.verdicts.push_back(
        {"height-infinite", finite.empty(),
         finite.empty() ? "no finite height observed up to degree " + bound
                        : join(finite, ", ")});
  } else {
    report.verdicts.push_back(
        {"height-p-power", not_power.empty(),
         not_power.empty()
             ? (finite.empty() ? "no finite height observed up to degree " +
                                     bound
                               : join(finite, ", ") + ", all powers of " +
                                     std::to_string(p))
             : "not a power of " + std::to_string(p) + ": " +
                   join(not_power, ", ")});
  }
  report.verdicts.push_back(
      {"triangular-soft", soft_failure.empty(),
       soft_failure.empty()
           ? std::to_string(soft_checked) + " finite height(s) checked"
           : soft_failure});
  return report;
}

}  // namespace pbw
