#pragma once

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace fss {

// Parameter pair (N, ell) with q = exp(i*pi/ell). Standing hypothesis
// 1 < |N| < ell; N < 0 is the symplectic series.
struct RootOfUnityContext {
  int N = 2;
  int ell = 4;

  RootOfUnityContext(int n, int l) : N(n), ell(l) {
    if (l < 2) throw std::domain_error("ell must be >= 2");
    if (std::abs(n) <= 1 || std::abs(n) >= l)
      throw std::domain_error("context requires 1 < |N| < ell");
  }

  int absN() const { return std::abs(N); }
  int rank() const { return absN() / 2; }  // k for N = 2k, 2k+1, -2k

  // Quantum integer [m] = sin(m*pi/ell)/sin(pi/ell); argument reduced
  // mod 2*ell first. Antisymmetric in m, periodic with period 2*ell.
  double qint(int m) const {
    int r = m % (2 * ell);
    if (r < 0) r += 2 * ell;
    return std::sin(M_PI * r / ell) / std::sin(M_PI / ell);
  }
};

}  // namespace fss
