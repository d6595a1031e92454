#include "gamma2/legendre.hpp"

#include <stdexcept>

namespace gamma2 {

std::vector<LegendreJet> legendre_jets(int kmax, double z) {
  if (kmax < 0) throw std::invalid_argument("legendre_jets: negative degree");
  std::vector<LegendreJet> out(kmax + 1);
  out[0] = {1.0, 0.0, 0.0};
  if (kmax == 0) return out;
  out[1] = {z, 1.0, 0.0};
  for (int k = 1; k < kmax; ++k) {
    out[k + 1].p = ((2.0 * k + 1.0) * z * out[k].p - k * out[k - 1].p) / (k + 1.0);
    out[k + 1].dp = out[k - 1].dp + (2.0 * k + 1.0) * out[k].p;
    out[k + 1].ddp = out[k - 1].ddp + (2.0 * k + 1.0) * out[k].dp;
  }
  return out;
}

LegendreJet legendre_jet(int k, double z) { return legendre_jets(k, z).back(); }

AxisymmetricProfile legendre_profile(int k, int dim) {
  if (k < 0) throw std::invalid_argument("legendre_profile: negative degree");
  return AxisymmetricProfile(dim, [k](double z) {
    const LegendreJet j = legendre_jet(k, z);
    return ProfileJet{j.p, j.dp, j.ddp};
  });
}

}  // namespace gamma2
