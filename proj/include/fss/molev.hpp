#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fss/linalg.hpp"

namespace fss {

// q on the unit circle for the level parameter ell: exp(i*pi/ell).
cplx unit_root_q(int ell);

// [N]_q as a complex number; q = 1 gives N.
cplx qnum(cplx q, int N);

// R in End(V x V), V = C^N:
//   sum_i q E_ii x E_ii + sum_{i!=j} E_ij x E_ji
//   + sum_{i<j} (q - q^-1) E_ii x E_jj.
CMat build_R(cplx q, int N);

// Q = sum_{i,j} q^{N+1-2i} E_ij x E_ij.
CMat build_Q(cplx q, int N);

// Tensor-space representation on V^{x n}: g_i -> q R_{n-i}, e -> Q_{n-1},
// where A_i acts on sites (i, i+1).
struct TensorRep {
  int N = 0, n = 0;
  cplx q;
  std::vector<CMat> g;  // g[i-1] is the image of g_i
  CMat e;
};

TensorRep representation(cplx q, int N, int n, long dim_cap = 4096);

struct RelationReport {
  std::vector<std::pair<std::string, double>> residuals;
  double max_residual = 0.0;
};

// Residuals of the defining relations: braid/quadratic/commuting for the
// g_i, e^2 = [N] e, the mixed e-relations, and the twisted idempotent
// relation (needs n >= 4).
RelationReport verify_relations(const TensorRep& rep);

// Dimension of the span of all words of length <= max_len in
// {1, g_i, e}, via Gram rank with the given cutoff.
int word_span_dimension(const TensorRep& rep, int max_len,
                        double cutoff = 1e-8);

}  // namespace fss
