#pragma once

#include <span>
#include <vector>

#include "fss/context.hpp"
#include "fss/linalg.hpp"
#include "fss/partition.hpp"

namespace fss {

// Element of the hyperoctahedral group W(B_k): a permutation composed with
// coordinate sign changes. apply(): y[i] = sign[i] * x[perm[i]].
struct SignedPerm {
  std::vector<int> perm;   // values 0..k-1
  std::vector<int> signs;  // +1 / -1
  std::vector<double> apply(std::span<const double> x) const;
  int eps() const;        // usual sign character
  int eps_tilde() const;  // = eps on even sign changes, -eps otherwise
};

std::vector<SignedPerm> hyperoctahedral_group(int k);
SignedPerm compose(const SignedPerm& a, const SignedPerm& b);  // a after b

enum class SignChar { eps, eps_tilde };

// Named standard lattices, scaled: Zk = Z^k, Q = even-coordinate-sum
// sublattice, P = Z^k together with the all-halves coset.
enum class LatticeName { Zk, Q, P };
struct LatticeSpec {
  LatticeName name;
  double scale = 1.0;
};
struct LatticePair {
  int k;
  LatticeSpec M, L;  // M subset of L
};

bool lattice_contains(const LatticeSpec& spec, std::span<const double> x);
LatticeSpec dual_lattice(const LatticeSpec& spec);
long pair_index(const LatticePair& pair);  // |L : M|

// One representative per coset of L/M inside a centered fundamental
// domain of M (ties broken toward negative coordinates).
std::vector<std::vector<double>> coset_representatives(const LatticePair& pair);

struct SMatrix {
  std::vector<std::vector<double>> row_labels;  // gamma in M*/L*
  std::vector<std::vector<double>> col_labels;  // x in L/M
  int nrows = 0, ncols = 0;
  std::vector<cplx> entries;  // row-major
  double unitarity_residual = 0.0;
  cplx& at(int i, int j) { return entries[size_t(i) * ncols + j]; }
  const cplx& at(int i, int j) const { return entries[size_t(i) * ncols + j]; }
};

// Antisymmetrized character matrix of L/M for the given sign character.
// Throws if the result fails the unitarity check.
SMatrix s_matrix(const LatticePair& pair, SignChar sign, double tol = 1e-9);
SMatrix s_matrix_serial(const LatticePair& pair, SignChar sign,
                        double tol = 1e-9);

// Weyl character evaluators via k x k alternant determinants. x is the
// group-element parameter; all pairings enter as exp(2*pi*i*(beta, x)).
double so_odd_character(const Partition& lam, std::span<const double> x);
double sp_character(const Partition& lam, std::span<const double> x);
// Full orthogonal group O(2k) at a rotation; includes the m(lam) factor.
double o_even_character_rotation(const Partition& lam,
                                 std::span<const double> x);
cplx u_character(const Partition& lam, std::span<const cplx> eigenvalues);

// Universal orthogonal / symplectic characters as determinants in the
// complete homogeneous sums of the eigenvalue list: finite everywhere,
// valid at any group element, and zero on modification-rule labels.
//   o:  det( h_{l_i - i + j} - h_{l_i - i - j} )
//   sp: det with first column h_{l_i - i + 1}, later columns
//       h_{l_i - i + j} + h_{l_i - i - j + 2}
cplx o_character_universal(const Partition& lam,
                           std::span<const cplx> eigenvalues);
cplx sp_character_universal(const Partition& lam,
                            std::span<const cplx> eigenvalues);

enum class RootSystem { Bk, Ck, Dk };
std::vector<std::vector<double>> positive_roots(RootSystem rs, int k);
// prod over positive roots of 2 sin(pi (alpha, x)); the (-i)^{#roots}
// phase of the exponential form is left to the caller.
double weyl_denominator(RootSystem rs, int k, std::span<const double> x);

struct SquareSumReport {
  double even_sum = 0, odd_sum = 0, closed_form = 0;
  double rel_err_closed = 0, rel_err_parity = 0;
  bool ok = false;
};

// Checks sum of d_lam^2 over even-box labels against
// ell^k / (b(N) * prod 4 sin^2((alpha, rho_check) pi / ell)) and against
// the odd-box sum.
SquareSumReport verify_square_sums(const RootOfUnityContext& ctx,
                                   double tol = 1e-9);

// rho_check = ((|N|+1)/2 - i), i = 1..k.
std::vector<double> rho_check(int N);

}  // namespace fss
