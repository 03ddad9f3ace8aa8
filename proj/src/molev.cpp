#include "fss/molev.hpp"

#include <cmath>
#include <stdexcept>

namespace fss {

cplx unit_root_q(int ell) {
  return std::polar(1.0, M_PI / ell);
}

cplx qnum(cplx q, int N) {
  if (q == cplx(1.0)) return cplx(double(N));
  return (std::pow(q, N) - std::pow(q, -N)) / (q - 1.0 / q);
}

CMat build_R(cplx q, int N) {
  if (N < 2) throw std::domain_error("build_R needs N >= 2");
  CMat R(N * N, N * N);
  const cplx qq = q - 1.0 / q;
  // The (q - q^-1) band sits on i > j in this Kronecker leg ordering;
  // the compatibility relation e g_2 e = q^{N+1} e pins the convention.
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      if (i == j) {
        R.at(i * N + i, i * N + i) = q;
      } else {
        R.at(i * N + j, j * N + i) = 1.0;  // v_j x v_i -> v_i x v_j
        if (i > j) R.at(i * N + j, i * N + j) = qq;
      }
    }
  return R;
}

CMat build_Q(cplx q, int N) {
  if (N < 2) throw std::domain_error("build_Q needs N >= 2");
  CMat Q(N * N, N * N);
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j)
      Q.at((i - 1) * N + (i - 1), (j - 1) * N + (j - 1)) =
          std::pow(q, N + 1 - 2 * i);
  return Q;
}

namespace {
// 1_{i-1} x A x 1_{n-1-i} acting on sites (i, i+1) of V^{x n}.
CMat embed_two_site(const CMat& A, int i, int n, int N) {
  int left = 1, right = 1;
  for (int t = 0; t < i - 1; ++t) left *= N;
  for (int t = 0; t < n - 1 - i; ++t) right *= N;
  return kron(kron(CMat::identity(left), A), CMat::identity(right));
}
}  // namespace

TensorRep representation(cplx q, int N, int n, long dim_cap) {
  if (n < 2) throw std::domain_error("representation needs n >= 2");
  long dim = 1;
  for (int t = 0; t < n; ++t) {
    dim *= N;
    if (dim > dim_cap)
      throw std::length_error("tensor space dimension exceeds cap");
  }
  TensorRep rep;
  rep.N = N;
  rep.n = n;
  rep.q = q;
  CMat R = build_R(q, N);
  CMat Q = build_Q(q, N);
  rep.g.reserve(n - 1);
  for (int i = 1; i <= n - 1; ++i)
    rep.g.push_back(embed_two_site(R, n - i, n, N) * q);  // g_i -> q R_{n-i}
  rep.e = embed_two_site(Q, n - 1, n, N);
  return rep;
}

namespace {
CMat ginv(const CMat& g, cplx q) {
  // g^2 = (q^2-1) g + q^2  =>  g^-1 = (g - (q^2-1)) / q^2
  const cplx q2 = q * q;
  CMat inv = g;
  for (int i = 0; i < inv.rows(); ++i) inv.at(i, i) -= (q2 - 1.0);
  return inv * (1.0 / q2);
}
}  // namespace

RelationReport verify_relations(const TensorRep& rep) {
  RelationReport rr;
  const cplx q = rep.q, q2 = q * q;
  const int m = static_cast<int>(rep.g.size());
  auto add = [&rr](const std::string& name, double res) {
    rr.residuals.emplace_back(name, res);
    rr.max_residual = std::max(rr.max_residual, res);
  };

  for (int i = 0; i < m - 1; ++i) {
    CMat lhs = matmul(matmul(rep.g[i], rep.g[i + 1]), rep.g[i]);
    CMat rhs = matmul(matmul(rep.g[i + 1], rep.g[i]), rep.g[i + 1]);
    add("braid(" + std::to_string(i + 1) + ")", max_abs_diff(lhs, rhs));
  }
  for (int i = 0; i < m; ++i) {
    CMat lhs = matmul(rep.g[i], rep.g[i]) - rep.g[i] * (q2 - 1.0);
    for (int d = 0; d < lhs.rows(); ++d) lhs.at(d, d) -= q2;
    add("quadratic(" + std::to_string(i + 1) + ")", max_abs(lhs));
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 2; j < m; ++j)
      add("commute(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
          max_abs_diff(matmul(rep.g[i], rep.g[j]), matmul(rep.g[j], rep.g[i])));

  add("e_idempotent",
      max_abs_diff(matmul(rep.e, rep.e), rep.e * qnum(q, rep.N)));
  for (int i = 2; i < m; ++i)  // g_{i+1} with i+1 > 2 means index >= 3
    add("e_commute(" + std::to_string(i + 1) + ")",
        max_abs_diff(matmul(rep.e, rep.g[i]), matmul(rep.g[i], rep.e)));
  add("e_g1", max_abs_diff(matmul(rep.e, rep.g[0]), rep.e * q2));
  if (m >= 2) {
    add("e_g2_e", max_abs_diff(matmul(matmul(rep.e, rep.g[1]), rep.e),
                               rep.e * std::pow(q, rep.N + 1)));
    add("e_g2inv_e",
        max_abs_diff(matmul(matmul(rep.e, ginv(rep.g[1], q)), rep.e),
                     rep.e * std::pow(q, -1 - rep.N)));
  }
  if (m >= 3) {
    CMat u = matmul(matmul(rep.g[1], rep.g[2]),
                    matmul(ginv(rep.g[0], q), ginv(rep.g[1], q)));
    CMat e2 = matmul(matmul(rep.e, u), rep.e);
    add("twisted_idempotent_left", max_abs_diff(matmul(u, e2), e2));
    add("twisted_idempotent_right", max_abs_diff(matmul(e2, u), e2));
  }
  return rr;
}

int word_span_dimension(const TensorRep& rep, int max_len, double cutoff) {
  std::vector<CMat> ops = rep.g;
  ops.push_back(rep.e);
  std::vector<std::vector<cplx>> words;
  words.push_back(CMat::identity(rep.e.rows()).data());
  std::vector<CMat> frontier{CMat::identity(rep.e.rows())};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<CMat> next;
    for (const CMat& w : frontier)
      for (const CMat& op : ops) {
        CMat prod = matmul(w, op);
        words.push_back(prod.data());
        next.push_back(std::move(prod));
      }
    frontier = std::move(next);
  }
  return span_rank(words, cutoff);
}

}  // namespace fss
