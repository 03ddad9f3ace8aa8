#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fss/molev.hpp"
#include "fss/towers.hpp"

using namespace fss;

TEST_CASE("R specializes to the flip at q = 1") {
  for (int N : {2, 3, 4}) {
    CMat R = build_R(1.0, N);
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        for (int c = 0; c < N; ++c)
          for (int d = 0; d < N; ++d) {
            cplx expect = (a == d && b == c) ? 1.0 : 0.0;
            CHECK(std::abs(R.at(a * N + b, c * N + d) - expect) < 1e-14);
          }
  }
}

TEST_CASE("qR satisfies the quadratic relation") {
  for (int ell : {5, 8}) {
    cplx q = unit_root_q(ell);
    CMat qR = build_R(q, 3) * q;
    CMat lhs = matmul(qR, qR) - qR * (q * q - 1.0);
    for (int i = 0; i < lhs.rows(); ++i) lhs.at(i, i) -= q * q;
    CHECK(max_abs(lhs) < 1e-12);
  }
}

TEST_CASE("Q is [N] times an idempotent and has trace [N]") {
  for (int N : {2, 3, 4})
    for (int ell : {5, 7, 9}) {
      cplx q = unit_root_q(ell);
      CMat Q = build_Q(q, N);
      CHECK(max_abs_diff(matmul(Q, Q), Q * qnum(q, N)) < 1e-12);
      CHECK(std::abs(Q.trace() - qnum(q, N)) < 1e-12);
    }
  CMat Q1 = build_Q(1.0, 3);
  CHECK(max_abs_diff(matmul(Q1, Q1), Q1 * 3.0) < 1e-14);
}

TEST_CASE("index reversal in the representation") {
  RootOfUnityContext c(2, 8);
  cplx q = unit_root_q(8);
  TensorRep rep = representation(q, 2, 3);
  // g_1 acts on the last two tensor slots, g_2 on the first two
  CMat R = build_R(q, 2);
  CMat expect_g1 = kron(CMat::identity(2), R) * q;
  CMat expect_g2 = kron(R, CMat::identity(2)) * q;
  CHECK(max_abs_diff(rep.g[0], expect_g1) < 1e-14);
  CHECK(max_abs_diff(rep.g[1], expect_g2) < 1e-14);
}

TEST_CASE("defining relations hold") {
  for (int N : {2, 3}) {
    for (int ell : {5, 7}) {
      TensorRep rep = representation(unit_root_q(ell), N, 4);
      CHECK(verify_relations(rep).max_residual < 1e-10);
    }
    TensorRep rep1 = representation(1.0, N, 4);
    CHECK(verify_relations(rep1).max_residual < 1e-12);
  }
}

TEST_CASE("perturbing Q breaks the idempotent relation by the same amount") {
  TensorRep rep = representation(unit_root_q(7), 3, 3);
  const double eps = 1e-4;
  rep.e.at(0, 0) += eps;
  RelationReport rr = verify_relations(rep);
  double e_resid = 0.0;
  for (const auto& [name, r] : rr.residuals)
    if (name == "e_idempotent") e_resid = r;
  CHECK(e_resid > eps * 0.1);
  CHECK(e_resid < eps * 10.0);
}

TEST_CASE("residuals scale linearly under perturbation") {
  TensorRep rep = representation(1.0, 3, 3);
  auto resid_at = [&](double eps) {
    TensorRep r = rep;
    r.e.at(1, 2) += eps;
    return verify_relations(r).max_residual;
  };
  double r1 = resid_at(1e-6), r2 = resid_at(2e-6);
  CHECK(r2 / r1 == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("word span dimension matches Brauer path counts (q = 1)") {
  for (int N : {3, 4}) {
    for (int n : {2, 3}) {
      TensorRep rep = representation(1.0, N, n);
      BratteliDiagram free = build_bratteli_free(n);
      long expect = 0;
      for (long c : free.levels[n].path_counts) expect += c * c;
      CHECK(word_span_dimension(rep, 2 * n) == expect);
    }
  }
}
