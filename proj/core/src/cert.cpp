#include "discstab/cert.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "discstab/errors.hpp"
#include "discstab/roots.hpp"

namespace discstab {

int count_zeros_disc(const RealPoly& p, int grid) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero count of the zero element");
  if (p.is_constant()) return 0;
  for (const auto& r : roots(p)) {
    if (std::abs(std::abs(r.value) - 1.0) <= kCircleTolerance) {
      throw Error(ErrorKind::BoundaryZero, "numerator root within tolerance of the unit circle");
    }
  }
  return winding_count(p.to_double(), grid);
}

int count_zeros_disc(const DiscElement& a, int grid) { return count_zeros_disc(a.num(), grid); }

UnitVerdict is_unit(const DiscElement& a) {
  if (a.is_zero()) throw Error(ErrorKind::InvalidArgument, "unit test of the zero element");
  return certify_unit(a.num());
}

std::optional<std::vector<DiscElement>> corona_witness(std::span<const DiscElement> fs) {
  std::vector<RealPoly> nums;
  nums.reserve(fs.size());
  for (const auto& f : fs) nums.push_back(f.num());
  if (std::all_of(nums.begin(), nums.end(), [](const RealPoly& p) { return p.is_zero(); })) return std::nullopt;
  ExtendedGcdMany eg = gcd_extended(nums);
  if (!certified(certify_unit(eg.d))) return std::nullopt;
  std::vector<DiscElement> x;
  x.reserve(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    x.push_back(DiscElement::fraction(eg.coefficients[i] * fs[i].den(), eg.d));
  }
  return x;
}

double polar_grid_lower_bound(std::span<const DiscElement> fs, PolarGrid grid) {
  const int nr = std::max(grid.radii, 2);
  const int na = std::max(grid.angles, 4);
  double lipschitz = 0.0;
  for (const auto& f : fs) lipschitz += f.derivative_bound();

  auto sum_at = [&fs](ComplexVal z) {
    double s = 0.0;
    for (const auto& f : fs) s += std::abs(eval(f, z));
    return s;
  };
  double min_value = sum_at(ComplexVal(0.0, 0.0));
  for (int i = 1; i < nr; ++i) {
    const double r = static_cast<double>(i) / (nr - 1);
    for (int j = 0; j < na; ++j) {
      const double t = 2.0 * std::numbers::pi * j / na;
      min_value = std::min(min_value, sum_at(std::polar(r, t)));
    }
  }
  // Every point of the closed disc is within dr/2 + pi/na of a grid node.
  const double reach = 0.5 / (nr - 1) + std::numbers::pi / na;
  return min_value * (1.0 - 1e-12) - lipschitz * reach;
}

namespace {

CoronaVerdict corona_check(std::span<const DiscElement> fs, PolarGrid grid) {
  std::vector<RealPoly> nums;
  for (const auto& f : fs) {
    if (!f.is_zero()) nums.push_back(f.num());
  }
  if (nums.empty()) return NotInvertible{std::nullopt, "all entries are zero"};
  RealPoly common = nums.front().monic();
  for (std::size_t i = 1; i < nums.size(); ++i) common = gcd(common, nums[i]);

  UnitVerdict v = certify_unit(common);
  if (auto* nu = std::get_if<NotUnit>(&v)) {
    return NotInvertible{nu->offending_root, "common zero in the closed disc (" + nu->reason + ")"};
  }

  CoronaCertificate cert;
  cert.common_factor = common;
  double bezout_bound = 0.0;
  if (auto x = corona_witness(fs)) {
    double worst = 0.0;
    for (const auto& xi : *x) worst = std::max(worst, sup_norm_boundary(xi, 1024).hi);
    // 1 = |sum x_i f_i| <= max ||x_i|| * sum |f_i|
    bezout_bound = worst > 0 ? 1.0 / worst : 0.0;
  }
  const double grid_bound = polar_grid_lower_bound(fs, grid);
  if (grid_bound > bezout_bound) {
    cert.delta_lower = grid_bound;
    cert.witness_kind = CoronaWitness::GridLowerBound;
  } else {
    cert.delta_lower = bezout_bound;
    cert.witness_kind = CoronaWitness::NoCommonRoots;
  }
  if (!(cert.delta_lower > 0)) {
    throw Error(ErrorKind::Indeterminate, "no positive corona bound could be certified");
  }
  return cert;
}

}  // namespace

CoronaVerdict is_invertible_pair(const DiscElement& f, const DiscElement& g, PolarGrid grid) {
  if (f.is_zero() && g.is_zero()) throw Error(ErrorKind::InvalidArgument, "both entries of the pair are zero");
  const DiscElement pair[2] = {f, g};
  return corona_check(pair, grid);
}

CoronaVerdict is_invertible_tuple(std::span<const DiscElement> fs, PolarGrid grid) {
  if (fs.empty()) throw Error(ErrorKind::InvalidArgument, "empty tuple");
  return corona_check(fs, grid);
}

}  // namespace discstab
