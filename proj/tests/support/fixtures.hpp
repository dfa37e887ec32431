#pragma once

// Small presentations shared by several test files. They mirror the files
// in corpus/ but are built in code so unit tests do not depend on parsing.

#include <string>
#include <vector>

#include "pbw/expression.hpp"
#include "pbw/structure.hpp"

namespace fixture {

inline pbw::Presentation make(std::vector<pbw::Alphabet::Generator> gens,
                              const std::vector<std::string>& relations,
                              int bound,
                              pbw::Field field = pbw::Field::rationals()) {
  pbw::Alphabet a(std::move(gens));
  std::vector<pbw::Polynomial> rels;
  for (const std::string& r : relations)
    rels.push_back(pbw::parse_polynomial(r, a, field));
  pbw::Comultiplication delta = pbw::Comultiplication::standard(a, field);
  return pbw::Presentation{a, field, std::move(rels), std::move(delta), bound};
}

inline void set_image(pbw::Presentation& p, const std::string& name,
                      const std::string& image) {
  p.comultiplication.set_image(
      p.alphabet.at(name), pbw::parse_tensor(image, p.alphabet, p.field));
}

inline pbw::Presentation heisenberg(int bound = 6) {
  return make({{"x1", 1}, {"x2", 1}, {"x3", 2}},
              {"x2*x1 - x1*x2 - x3", "x3*x1 - x1*x3", "x3*x2 - x2*x3"}, bound);
}

/// x primitive of degree 1, y of degree 2 with Delta(y) = 1#y + y#1 + x#x,
/// and [y, x] = 0.
inline pbw::Presentation nonprimitive(int bound = 6) {
  pbw::Presentation p = make({{"x", 1}, {"y", 2}}, {"y*x - x*y"}, bound);
  set_image(p, "y", "1#y + y#1 + x#x");
  return p;
}

inline pbw::Presentation free_algebra(int letters, int bound) {
  std::vector<pbw::Alphabet::Generator> gens;
  for (int i = 1; i <= letters; ++i) gens.push_back({"x" + std::to_string(i), 1});
  return make(gens, {}, bound);
}

/// One primitive letter with x^n = 0.
inline pbw::Presentation truncated_power(int n, int bound, pbw::Field field) {
  return make({{"x", 1}}, {"x^" + std::to_string(n)}, bound, field);
}

/// The Heisenberg enveloping algebra on two generators only:
/// [[b,a],a] = [[b,a],b] = 0.
inline pbw::Presentation two_generator_heisenberg(int bound = 6) {
  return make({{"a", 1}, {"b", 1}},
              {"b*a*a - 2*a*b*a + a*a*b", "b*b*a - 2*b*a*b + a*b*b"}, bound);
}

}  // namespace fixture
