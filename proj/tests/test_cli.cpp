#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pbw/cli.hpp"
#include "pbw/error.hpp"
#include "pbw/expression.hpp"
#include "pbw/presentation_io.hpp"
#include "support/generators.hpp"

using namespace pbw;
namespace fs = std::filesystem;

namespace {

const Field Q = Field::rationals();
const std::string kCorpus = PBW_CORPUS_DIR;

std::string corpus(const std::string& name) { return kCorpus + "/" + name; }

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "pbw-cli-tests";
  fs::create_directories(dir);
  return dir / name;
}

fs::path write(const std::string& name, const std::string& text) {
  const fs::path p = scratch(name);
  std::ofstream(p) << text;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int error_line(const std::string& text) {
  try {
    parse_presentation(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

std::string error_of(const std::string& text) {
  try {
    parse_presentation(text);
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("expressions") {
  const Alphabet a({{"x1", 1}, {"x2", 1}, {"x3", 2}});
  const Polynomial heis = parse_polynomial("x2*x1 - x1*x2 - x3", a, Q);
  CHECK(heis.size() == 3);
  CHECK(heis.coefficient(a.word("x3")) == Scalar(Q, -1));
  CHECK(render(heis, a) == "-x3 + x2*x1 - x1*x2");

  const Alphabet b({{"x", 1}, {"y", 2}});
  const TensorElement t = parse_tensor("1#y + y#1 + x#x", b, Q);
  CHECK(t.size() == 3);
  CHECK(t.coefficient(b.word("x"), b.word("x")) == Scalar(Q, 1));

  const Polynomial half = parse_polynomial("(1/2)*x^2", b, Q);
  CHECK(half == Polynomial(b.word("x x"), Scalar(Q, mpq_class(1, 2))));
  CHECK(parse_polynomial("(x + y)^2", b, Q).size() == 4);
  CHECK(parse_polynomial("-3/6*y", b, Q).coefficient(b.word("y")) ==
        Scalar(Q, mpq_class(-1, 2)));
  CHECK(parse_polynomial("x^2", b, Field::prime(2)).size() == 1);
}

TEST_CASE("expression errors carry a column") {
  const Alphabet a({{"x", 1}, {"y", 1}});
  auto column = [&](const std::string& src, bool tensor = false) {
    try {
      if (tensor)
        parse_tensor(src, a, Q);
      else
        parse_polynomial(src, a, Q);
    } catch (const ParseError& e) {
      CHECK(e.line() == 1);
      return e.column();
    }
    return -1;
  };
  CHECK(column("x + z") == 5);
  CHECK(column("x#y") == 2);
  CHECK(column("1/0*x") > 0);
  CHECK(column("x + ") > 0);
  CHECK(column("x y", true) > 0);
  CHECK(column("x*y", true) > 0);
  CHECK_THROWS_WITH(parse_polynomial("x#y", a, Q),
                    doctest::Contains("'#' is only allowed in tensor expressions"));
  CHECK_THROWS_WITH(parse_polynomial("w", a, Q), doctest::Contains("unknown generator 'w'"));
  CHECK_THROWS_AS(parse_polynomial("1/3*x", a, Field::prime(3)), ParseError);
}

TEST_CASE("rendering round-trips") {
  const Alphabet a({{"x1", 1}, {"x2", 1}, {"x3", 2}});
  for (const char* src : {"x2*x1 - x1*x2 - x3", "x3*x1 - x1*x3", "x3*x2 - x2*x3",
                          "0", "1", "-1/2*x1^3 + 7"}) {
    const Polynomial f = parse_polynomial(src, a, Q);
    REQUIRE(parse_polynomial(render(f, a), a, Q) == f);
  }
  const Alphabet b({{"x", 1}, {"y", 2}});
  for (const char* src : {"y*x - x*y", "x^2", "x^3", "x^5"}) {
    const Polynomial f = parse_polynomial(src, b, Q);
    REQUIRE(parse_polynomial(render(f, b), b, Q) == f);
  }
  for (const char* src : {"1#y + y#1 + x#x", "1#x + x#1 + y#y", "-2*x#x^2 + 1/3*y#1"}) {
    const TensorElement t = parse_tensor(src, b, Q);
    REQUIRE(parse_tensor(render(t, b), b, Q) == t);
  }
  gen::Source rnd(101);
  for (int i = 0; i < 300; ++i) {
    const Polynomial f = rnd.polynomial(a, Q, 4, 5);
    REQUIRE(parse_polynomial(render(f, a), a, Q) == f);
    const TensorElement t = TensorElement::tensor(rnd.polynomial(a, Q, 2, 2),
                                                  rnd.polynomial(a, Q, 2, 2));
    CAPTURE(render(t, a));
    REQUIRE(parse_tensor(render(t, a), a, Q) == t);
  }
  CHECK(render_word(a.word("x2 x1 x1"), a) == "x2*x1^2");
  CHECK(render_word(Word(), a) == "1");
}

TEST_CASE("presentation files") {
  const Presentation p = load_presentation(corpus("heisenberg.json"));
  CHECK(p.alphabet.size() == 3);
  CHECK(p.relations.size() == 3);
  CHECK(p.bound == 6);
  for (Letter x : p.alphabet.letters())
    CHECK(p.comultiplication.image(x) ==
          TensorElement::basis(Q, Word(), Word(x)) + TensorElement::basis(Q, Word(x), Word()));

  CHECK(error_of("{\n  \"generators\": [{\"name\": \"x\", \"degree\": 0}],\n"
                 "  \"degree_bound\": 3\n}")
            .find("degree must be positive") != std::string::npos);
  CHECK(error_line("{\n  \"generators\": [{\"name\": \"x\", \"degree\": 0}],\n"
                   "  \"degree_bound\": 3\n}") == 2);

  const std::string inhom =
      "{\"generators\": [{\"name\": \"x1\", \"degree\": 1}, {\"name\": \"x2\", "
      "\"degree\": 1}, {\"name\": \"x3\", \"degree\": 3}],\n"
      " \"relations\": [\"x2*x1 - x3\"], \"degree_bound\": 4}";
  CHECK(error_of(inhom).find("inhomogeneous: degrees 2 and 3") != std::string::npos);
  CHECK(error_line(inhom) == 2);

  CHECK(error_of("{\"field\": {\"Fp\": 4}, \"generators\": [{\"name\": \"x\", "
                 "\"degree\": 1}], \"degree_bound\": 2}")
            .find("modulus 4 is not prime") != std::string::npos);
  CHECK(error_of("{\"generators\": [{\"name\": \"x\", \"degree\": 1}], "
                 "\"degree_bound\": 2, \"extra\": 1}")
            .find("unknown key 'extra'") != std::string::npos);
  CHECK(error_of("{\"generators\": [{\"name\": \"x\", \"degree\": 1}]}")
            .find("no degree bound") != std::string::npos);
  CHECK(error_of("{\"generators\": [{\"name\": \"x\", \"degree\": 1}], "
                 "\"relations\": [\"x*q\"], \"degree_bound\": 3}")
            .find("unknown generator 'q'") != std::string::npos);
  CHECK(error_of("{\"generators\": [{\"name\": \"x\", \"degree\": 1}], "
                 "\"comultiplication\": {\"x\": \"1#x + x\"}, \"degree_bound\": 3}") != "");
  CHECK(error_line("{\"generators\": [\n") == 2);

  PresentationOverrides o;
  o.field = Field::prime(3);
  o.bound = 4;
  const Presentation q = load_presentation(corpus("heisenberg.json"), o);
  CHECK(q.field == Field::prime(3));
  CHECK(q.bound == 4);
}

TEST_CASE("the digest ignores formatting") {
  const std::string compact =
      "{\"generators\":[{\"name\":\"x\",\"degree\":1},{\"name\":\"y\",\"degree\":2}],"
      "\"relations\":[\"y*x-x*y\"],\"comultiplication\":{\"y\":\"1#y+y#1+x#x\"},"
      "\"degree_bound\":6}";
  const Presentation a = parse_presentation(compact);
  const Presentation b = load_presentation(corpus("nonprimitive.json"));
  CHECK(digest(a) == digest(b));
  CHECK(digest(a).size() == 16);
  PresentationOverrides o;
  o.bound = 5;
  CHECK(digest(parse_presentation(compact, o)) != digest(a));
}

TEST_CASE("exit codes") {
  CHECK(run({"verify", corpus("heisenberg.json")}).code == 0);
  CHECK(run({"ihoe", corpus("heisenberg.json"), "--bound", "6"}).code == 0);
  CHECK(run({"lie-gens", corpus("heisenberg.json")}).code == 0);
  CHECK(run({"hopf-check", corpus("nonprimitive.json")}).code == 0);
  CHECK(run({"heights", corpus("charp3.json")}).code == 0);
  CHECK(run({"gb", corpus("free2.json")}).code == 0);
  CHECK(run({"basis", corpus("heisenberg.json"), "--degree", "3", "--kind", "C"}).code == 0);

  const Run bad = run({"verify", corpus("bad-delta.json")});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("FAIL triangular") != std::string::npos);
  CHECK(run({"verify", corpus("xsquared.json")}).code == 1);
  CHECK(run({"ihoe", corpus("free2.json")}).code == 1);
  CHECK(run({"lie-gens", corpus("nonprimitive.json")}).code == 1);

  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"verify", corpus("missing.json")}).code == 2);
  CHECK(run({"verify", corpus("heisenberg.json"), "--field", "Fp:4"}).code == 2);
  CHECK(run({"basis", corpus("heisenberg.json"), "--degree", "3", "--kind", "D"}).code == 2);
  CHECK(run({"gb", corpus("heisenberg.json"), "--bound", "0"}).code == 2);
  CHECK(run({"lie-gens", corpus("charp2.json")}).code == 2);
  const fs::path broken = write("broken.json", "{\"generators\": [}");
  const Run b = run({"verify", broken.string()});
  CHECK(b.code == 2);
  CHECK(b.err.find("line 1") != std::string::npos);
}

TEST_CASE("word utilities") {
  const Run d = run({"lyndon", "decompose", "x1*x2*x1*x2"});
  CHECK(d.code == 0);
  CHECK(d.out.find("(x1) (x2*x1) (x2)") != std::string::npos);
  CHECK(run({"lyndon", "check", "x2*x1^2"}).code == 0);
  const Run br = run({"lyndon", "bracket", "x2*x1", "--generators", "x1:1,x2:1"});
  CHECK(br.code == 0);
  CHECK(br.out.find("x2*x1 - x1*x2") != std::string::npos);
  CHECK(run({"lyndon", "bracket", "x2*q", "--generators", "x1:1,x2:1"}).code == 2);
}

TEST_CASE("machine report") {
  const fs::path path = scratch("heisenberg-ihoe.json");
  const Run r = run({"ihoe", corpus("heisenberg.json"), "--json", path.string(), "--quiet"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  const nlohmann::json doc = nlohmann::json::parse(slurp(path));
  CHECK(doc["command"] == "ihoe");
  CHECK(doc["bound"] == 6);
  REQUIRE(doc["verdicts"].is_array());
  for (const auto& v : doc["verdicts"]) {
    CHECK(v["name"].is_string());
    CHECK(v["pass"].is_boolean());
    CHECK(v["detail"].is_string());
  }
  REQUIRE(doc["gamma"].size() == 3);
  CHECK(doc["gamma"][1]["word"] == "x2*x1");
  CHECK(doc["gamma"][1]["degree"] == 2);
  CHECK(doc["hilbert"].is_array());
  REQUIRE(doc["tower"].size() == 3);
  const auto& z3 = doc["tower"][2];
  CHECK(z3["generator"] == "z3");
  CHECK(z3["degree"] == 1);
  CHECK(z3["derivation"][0]["on"] == "z1");
  CHECK(z3["derivation"][0]["value"] == "z2");
  CHECK(doc["result"] == "pass");

  const fs::path hp = scratch("heisenberg-verify.json");
  run({"verify", corpus("heisenberg.json"), "--json", hp.string()});
  const nlohmann::json v = nlohmann::json::parse(slurp(hp));
  CHECK(v["hilbert"] == nlohmann::json::array({1, 2, 4, 6, 9, 12, 16}));
}

TEST_CASE("reports are byte-identical across runs") {
  for (const char* file : {"heisenberg.json", "nonprimitive.json", "free2.json",
                           "charp2.json", "xsquared.json", "bad-delta.json"})
    for (const char* cmd : {"gb", "hilbert", "verify", "hopf-check", "ihoe",
                            "lie-gens", "heights"}) {
      const fs::path j1 = scratch("a.json"), j2 = scratch("b.json");
      const Run a = run({cmd, corpus(file), "--json", j1.string()});
      const Run b = run({cmd, corpus(file), "--json", j2.string()});
      REQUIRE(a.code == b.code);
      REQUIRE(a.out == b.out);
      REQUIRE(a.err == b.err);
      REQUIRE(slurp(j1) == slurp(j2));
    }
}
