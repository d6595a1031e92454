#pragma once

#include <vector>

#include "gamma2/sphere_geometry.hpp"

namespace gamma2 {

struct LegendreJet {
  double p = 0.0;
  double dp = 0.0;
  double ddp = 0.0;
};

/// P_k, P_k', P_k'' for k = 0..kmax via
///   (k + 1) P_{k+1} = (2k + 1) z P_k - k P_{k-1}
///   P'_{k+1}  = P'_{k-1}  + (2k + 1) P_k
///   P''_{k+1} = P''_{k-1} + (2k + 1) P'_k
/// which stay accurate at z = +-1.
std::vector<LegendreJet> legendre_jets(int kmax, double z);

LegendreJet legendre_jet(int k, double z);

/// P_k(z) as a profile on S^{dim-1}.
AxisymmetricProfile legendre_profile(int k, int dim = 3);

}  // namespace gamma2
