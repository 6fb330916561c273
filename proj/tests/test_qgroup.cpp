#include <vector>

#include "doctest.h"
#include "qlie/partition.hpp"
#include "qlie/qgroup.hpp"

using namespace qlie;

namespace {

// Independent classical dimension oracle: hook-content formula
// dim = prod_cells (N + col - row) / hook(row, col).
long hook_content_dim(const std::vector<long>& lam, int N) {
  std::vector<long> conj;
  for (size_t i = 0; i < lam.size(); ++i)
    for (long j = 0; j < lam[i]; ++j) {
      if (static_cast<size_t>(j) >= conj.size()) conj.push_back(0);
      ++conj[j];
    }
  long num = 1, den = 1;
  for (size_t i = 0; i < lam.size(); ++i)
    for (long j = 0; j < lam[i]; ++j) {
      num *= N + j - static_cast<long>(i);
      den *= (lam[i] - j) + (conj[j] - static_cast<long>(i)) - 1;
    }
  return num / den;
}

std::vector<long> highest_weight_coeffs(const std::vector<long>& lam, int n) {
  std::vector<long> padded = lam;
  padded.resize(n, 0);
  std::vector<long> hw(n - 1);
  for (int i = 0; i + 1 < n; ++i) hw[i] = padded[i] - padded[i + 1];
  return hw;
}

}  // namespace

TEST_CASE("q-deformed Cartan matrices") {
  auto a2 = q_cartan({Family::A, 2});
  CHECK(a2[0][0].str() == "q + q^-1");
  CHECK(a2[0][1].str() == "-1");
  auto g2 = q_cartan({Family::G, 2});
  CHECK(g2[1][0].str() == "-q^2 - 1 - q^-2");
  CHECK(g2[0][1].str() == "-1");
  CHECK(g2[1][1].str() == "q + q^-1");
}

TEST_CASE("defining relations hold on the standard modules") {
  for (int d = 1; d <= 6; ++d) {
    RelationReport exact = check_relations(build_sl2_rep(d));
    CHECK(exact.structural_ok);
    CHECK(exact.all_pass());
    RelationReport fast = check_relations(build_sl2_rep(d), true);
    CHECK(fast.all_pass());
  }
  for (int n = 2; n <= 5; ++n) {
    RelationReport exact = check_relations(build_sln_fundamental(n));
    CHECK(exact.structural_ok);
    CHECK(exact.all_pass());
    CHECK(exact.items.size() > 0);
    RelationReport fast = check_relations(build_sln_fundamental(n), true);
    CHECK(fast.all_pass());
  }
}

TEST_CASE("every single-entry mutation of X_1 breaks a relation") {
  QScalar one(1);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      QuantumRep rep = build_sl2_rep(3);
      rep.X[0][i][j] = rep.X[0][i][j] + one;
      RelationReport exact = check_relations(rep);
      CHECK(!exact.all_pass());
      CHECK(!exact.first_failure().empty());
      RelationReport fast = check_relations(rep, true);
      CHECK(exact.all_pass() == fast.all_pass());
    }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      QuantumRep rep = build_sln_fundamental(3);
      rep.X[0][i][j] = rep.X[0][i][j] + one;
      CHECK(!check_relations(rep, true).all_pass());
    }
}

TEST_CASE("structural validation catches malformed candidates") {
  QuantumRep rep = build_sln_fundamental(3);
  rep.X.pop_back();
  RelationReport report = check_relations(rep);
  CHECK(!report.structural_ok);
  CHECK(!report.structural_error.empty());
}

TEST_CASE("quantum dimension values") {
  CHECK(qdim_typeA({}, 3) == LaurentPoly(1));
  CHECK(qdim_typeA({1}, 2).str() == "q + q^-1");
  CHECK(qdim_typeA({2, 1}, 3).str() ==
        "q^4 + 2q^2 + 2 + 2q^-2 + q^-4");
  CHECK(qdim_typeA({1}, 4).at_one() == 4);
  CHECK(qdim_typeA({1, 1}, 4).at_one() == 6);
  // Bar invariance of every quantum dimension.
  for (const auto& lam : all_partitions(4, 3)) {
    LaurentPoly d = qdim_typeA(lam, 3);
    CHECK(d.bar() == d);
  }
}

TEST_CASE("the two quantum-dimension formulas agree") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& lam : all_partitions(4, n)) {
      LieType t{Family::A, n - 1};
      CHECK(qdim_typeA(lam, n) == qdim_roots(highest_weight_coeffs(lam, n), t));
    }
}

TEST_CASE("classical limits match the hook-content oracle") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& lam : all_partitions(6, n))
      CHECK(qdim_typeA(lam, n).at_one() == hook_content_dim(lam, n));
}

TEST_CASE("quantum dimensions outside type A") {
  CHECK(qdim_roots({1, 0}, {Family::G, 2}).at_one() == 7);
  CHECK(qdim_roots({0, 1}, {Family::G, 2}).at_one() == 14);
  CHECK(qdim_roots({1, 0, 0}, {Family::B, 3}).at_one() == 7);
  CHECK(qdim_roots({0, 0, 1}, {Family::B, 3}).at_one() == 8);
  CHECK(qdim_roots({1, 0, 0, 0}, {Family::D, 4}).at_one() == 8);
  LaurentPoly spinor = qdim_roots({0, 0, 1}, {Family::B, 3});
  CHECK(spinor.bar() == spinor);
}

TEST_CASE("fundamental weights pair canonically with coroots") {
  for (const char* name : {"A3", "B3", "G2", "F4"}) {
    LieType t = parse_lie_type(name);
    RatMat omega = fundamental_weights(t);
    std::vector<RatVec> alpha = simple_roots(t);
    for (size_t i = 0; i < alpha.size(); ++i)
      for (size_t j = 0; j < alpha.size(); ++j) {
        Rational len = 0, pair = 0;
        for (size_t k = 0; k < alpha[j].size(); ++k) {
          len += alpha[j][k] * alpha[j][k];
          pair += omega[i][k] * alpha[j][k];
        }
        CHECK(2 * pair / len == Rational(i == j ? 1 : 0));
      }
  }
}

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(validate_partition({1, 2}, 3), std::invalid_argument);
  CHECK_THROWS_AS(validate_partition({-1}, 3), std::invalid_argument);
  CHECK_THROWS_AS(qdim_typeA({1, 1, 1}, 2), std::invalid_argument);
  CHECK_THROWS_AS(qdim_roots({1}, {Family::G, 2}), std::invalid_argument);
  CHECK_THROWS_AS(qdim_roots({-1, 0}, {Family::G, 2}), std::invalid_argument);
}
