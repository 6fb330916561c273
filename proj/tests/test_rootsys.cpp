#include "doctest.h"
#include "qlie/rootsys.hpp"

using namespace qlie;

namespace {

bool contains(const std::vector<RatVec>& set, const RatVec& v) {
  for (const RatVec& w : set)
    if (w == v) return true;
  return false;
}

}  // namespace

TEST_CASE("type parsing and validation") {
  CHECK(parse_lie_type("A1").family == Family::A);
  CHECK(parse_lie_type("E8").rank == 8);
  CHECK(parse_lie_type("g2").str() == "G2");
  CHECK_THROWS_AS(parse_lie_type("H3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_lie_type("A0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_lie_type("E9"), std::invalid_argument);
  CHECK_THROWS_AS(parse_lie_type("F3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_lie_type(""), std::invalid_argument);
  CHECK_THROWS_AS(validate_lie_type({Family::B, 1}), std::invalid_argument);
  CHECK_THROWS_AS(validate_lie_type({Family::D, 2}), std::invalid_argument);
}

TEST_CASE("Cartan matrices") {
  CHECK(cartan_matrix({Family::A, 2}) == IntMat{{2, -1}, {-1, 2}});
  CHECK(cartan_matrix({Family::G, 2}) == IntMat{{2, -1}, {-3, 2}});
  CHECK(cartan_matrix({Family::B, 2}) == IntMat{{2, -2}, {-1, 2}});
  CHECK(cartan_matrix({Family::C, 2}) == IntMat{{2, -1}, {-2, 2}});
  IntMat f4 = cartan_matrix({Family::F, 4});
  CHECK(f4[1][2] == -2);
  CHECK(f4[2][1] == -1);
  // Cartan entries reproduce the defining ratio on the realization.
  for (const char* name : {"A3", "B3", "C3", "D4", "F4", "G2", "E6"}) {
    LieType t = parse_lie_type(name);
    std::vector<RatVec> alpha = simple_roots(t);
    IntMat a = cartan_matrix(t);
    for (size_t i = 0; i < alpha.size(); ++i)
      for (size_t j = 0; j < alpha.size(); ++j)
        CHECK(Rational(a[i][j]) ==
              2 * dot(alpha[i], alpha[j]) / dot(alpha[j], alpha[j]));
  }
}

TEST_CASE("root counts from reflection closure") {
  auto count = [](const char* s) {
    return generate_roots(parse_lie_type(s)).roots.size();
  };
  CHECK(count("A1") == 2);
  CHECK(count("A2") == 6);
  CHECK(count("A3") == 12);
  CHECK(count("B2") == 8);
  CHECK(count("B3") == 18);
  CHECK(count("C3") == 18);
  CHECK(count("D4") == 24);
  CHECK(count("G2") == 12);
  CHECK(count("F4") == 48);
  CHECK(count("E6") == 72);
  CHECK(count("E7") == 126);
  CHECK(count("E8") == 240);
}

TEST_CASE("positive roots and the Weyl vector") {
  for (const char* name : {"A2", "B3", "D4", "G2", "F4", "E6"}) {
    LieType t = parse_lie_type(name);
    RootSystem rs = generate_roots(t);
    CHECK(rs.roots.size() == 2 * rs.positive_roots.size());
    // rho has pairing 1 with every simple coroot.
    for (const RatVec& a : rs.simple_roots)
      CHECK(2 * dot(rs.weyl_vector, a) / dot(a, a) == 1);
    // Roots come in opposite pairs.
    for (const RatVec& r : rs.roots) {
      RatVec neg(r.size());
      for (size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
      CHECK(contains(rs.roots, neg));
    }
  }
}

TEST_CASE("simple reflections permute the root set") {
  for (const char* name :
       {"A1", "A4", "B2", "B4", "C3", "D4", "D5", "G2", "F4", "E6", "E7",
        "E8"}) {
    LieType t = parse_lie_type(name);
    RootSystem rs = generate_roots(t);
    for (const RatVec& alpha : rs.simple_roots) {
      RatMat s = reflection_matrix(alpha);
      for (const RatVec& r : rs.roots) {
        RatVec image(r.size(), Rational(0));
        for (size_t i = 0; i < r.size(); ++i)
          for (size_t j = 0; j < r.size(); ++j) image[i] += s[i][j] * r[j];
        CHECK(contains(rs.roots, image));
      }
    }
  }
}

TEST_CASE("integral simple-basis coordinates") {
  for (const char* name : {"A3", "B3", "G2", "F4", "E6"}) {
    RootSystem rs = generate_roots(parse_lie_type(name));
    CHECK(rs.root_coords.size() == rs.roots.size());
    for (size_t k = 0; k < rs.roots.size(); ++k) {
      RatVec rebuilt(rs.roots[k].size(), Rational(0));
      for (size_t i = 0; i < rs.simple_roots.size(); ++i)
        for (size_t j = 0; j < rebuilt.size(); ++j)
          rebuilt[j] += Rational(rs.root_coords[k][i]) * rs.simple_roots[i][j];
      CHECK(rebuilt == rs.roots[k]);
    }
  }
}

TEST_CASE("Coxeter numbers") {
  auto cox = [](const char* s) { return coxeter_numbers(parse_lie_type(s)); };
  CHECK(cox("A1") == std::pair<int, int>(2, 2));
  CHECK(cox("A2") == std::pair<int, int>(3, 3));
  CHECK(cox("B2") == std::pair<int, int>(4, 3));
  CHECK(cox("G2") == std::pair<int, int>(6, 4));
  CHECK(cox("C3") == std::pair<int, int>(6, 4));
  CHECK(cox("B3") == std::pair<int, int>(6, 5));
  CHECK(cox("D4") == std::pair<int, int>(6, 6));
  CHECK(cox("F4") == std::pair<int, int>(12, 9));
  CHECK(cox("E6") == std::pair<int, int>(12, 12));
  CHECK(cox("E7") == std::pair<int, int>(18, 18));
  CHECK(cox("E8") == std::pair<int, int>(30, 30));
}

TEST_CASE("dimensions and diagram automorphisms") {
  CHECK(lie_dimension({Family::A, 1}) == 3);
  CHECK(lie_dimension({Family::G, 2}) == 14);
  CHECK(lie_dimension({Family::F, 4}) == 52);
  CHECK(lie_dimension({Family::E, 6}) == 78);
  CHECK(lie_dimension({Family::E, 7}) == 133);
  CHECK(lie_dimension({Family::E, 8}) == 248);
  CHECK(lie_dimension({Family::B, 6}) == 78);
  CHECK(lie_dimension({Family::D, 6}) == 66);
  CHECK(diagram_automorphism_count({Family::A, 1}) == 1);
  CHECK(diagram_automorphism_count({Family::A, 2}) == 2);
  CHECK(diagram_automorphism_count({Family::D, 4}) == 6);
  CHECK(diagram_automorphism_count({Family::D, 5}) == 2);
  CHECK(diagram_automorphism_count({Family::E, 6}) == 2);
  CHECK(diagram_automorphism_count({Family::E, 7}) == 1);
  CHECK(diagram_automorphism_count({Family::B, 3}) == 1);
  CHECK(diagram_automorphism_count({Family::G, 2}) == 1);
}
