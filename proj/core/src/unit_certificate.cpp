#include "discstab/unit_certificate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "discstab/errors.hpp"
#include "discstab/roots.hpp"

namespace discstab {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct BoundaryEval {
  ComplexVal value;
  double error;  // rounding bound on |value - p(e^{it})|
};

class BoundaryPoly {
 public:
  explicit BoundaryPoly(std::span<const double> coeffs) : a_(coeffs.begin(), coeffs.end()) {
    while (!a_.empty() && a_.back() == 0.0) a_.pop_back();
    double sum = 0.0, dsum = 0.0;
    for (std::size_t k = 0; k < a_.size(); ++k) {
      sum += std::abs(a_[k]);
      dsum += static_cast<double>(k) * std::abs(a_[k]);
    }
    abs_sum_ = sum;
    lipschitz_ = dsum * (1.0 + 1e-12) + 1e-300;
    err_ = (2.0 * static_cast<double>(a_.size()) + 4.0) * kEps * sum;
  }

  BoundaryEval at(double theta) const {
    const ComplexVal z(std::cos(theta), std::sin(theta));
    ComplexVal acc = 0.0;
    for (std::size_t k = a_.size(); k-- > 0;) acc = acc * z + a_[k];
    return {acc, err_};
  }

  double lipschitz() const { return lipschitz_; }
  double abs_sum() const { return abs_sum_; }
  bool empty() const { return a_.empty(); }

 private:
  std::vector<double> a_;
  double abs_sum_ = 0.0;
  double lipschitz_ = 0.0;
  double err_ = 0.0;
};

}  // namespace

bool UnitCertificate::valid() const {
  if (method == CertMethod::RootLocation) return margin > 0 && min_root_modulus >= 1.0 + margin;
  return interior_zero_count == 0 && boundary_min_modulus_lower > 0;
}

UnitCertificate constant_certificate(double abs_value) {
  UnitCertificate c;
  c.boundary_min_modulus_lower = abs_value;
  return c;
}

int winding_count(std::span<const double> coeffs, int grid) {
  BoundaryPoly p(coeffs);
  if (p.empty()) throw Error(ErrorKind::BoundaryZero, "winding number of the zero polynomial");
  if (grid < 8) grid = 8;
  const double L = p.lipschitz();

  struct Segment {
    double ta, tb;
    BoundaryEval va, vb;
    int depth;
  };
  double total = 0.0;
  std::vector<Segment> stack;
  BoundaryEval first = p.at(0.0);
  BoundaryEval prev = first;
  for (int k = 1; k <= grid; ++k) {
    const double t = kTwoPi * k / grid;
    BoundaryEval cur = (k == grid) ? first : p.at(t);
    stack.push_back({kTwoPi * (k - 1) / grid, t, prev, cur, 0});
    while (!stack.empty()) {
      Segment s = stack.back();
      stack.pop_back();
      const double h = s.tb - s.ta;
      const double ra = std::abs(s.va.value) - s.va.error;
      const double rb = std::abs(s.vb.value) - s.vb.error;
      if (L * h + s.va.error < ra || L * h + s.vb.error < rb) {
        total += std::arg(s.vb.value / s.va.value);
        continue;
      }
      if (s.depth > 60 || h < 1e-15) {
        throw Error(ErrorKind::BoundaryZero, "zero on or too close to the unit circle");
      }
      const double tm = 0.5 * (s.ta + s.tb);
      BoundaryEval vm = p.at(tm);
      // Push the right half first so segments are consumed left to right.
      stack.push_back({tm, s.tb, vm, s.vb, s.depth + 1});
      stack.push_back({s.ta, tm, s.va, vm, s.depth + 1});
    }
    prev = cur;
  }
  return static_cast<int>(std::lround(total / kTwoPi));
}

double boundary_min_modulus_lower(std::span<const double> coeffs, int grid) {
  BoundaryPoly p(coeffs);
  if (p.empty()) return 0.0;
  if (grid < 8) grid = 8;
  const double L = p.lipschitz();
  double lower = std::numeric_limits<double>::infinity();

  struct Segment {
    double ta, tb, ma, mb;
    int depth;
  };
  std::vector<Segment> stack;
  double m0 = std::abs(p.at(0.0).value);
  double prev = m0;
  for (int k = 1; k <= grid; ++k) {
    const double t = kTwoPi * k / grid;
    const double cur = (k == grid) ? m0 : std::abs(p.at(t).value);
    stack.push_back({kTwoPi * (k - 1) / grid, t, prev, cur, 0});
    while (!stack.empty()) {
      Segment s = stack.back();
      stack.pop_back();
      const double h = s.tb - s.ta;
      // min over the arc >= (|p(a)| + |p(b)| - L h) / 2
      const double bound = 0.5 * (s.ma + s.mb - L * h);
      if (bound >= 0.5 * std::min(s.ma, s.mb) || s.depth >= 40) {
        lower = std::min(lower, bound);
        continue;
      }
      const double tm = 0.5 * (s.ta + s.tb);
      const double mm = std::abs(p.at(tm).value);
      stack.push_back({tm, s.tb, mm, s.mb, s.depth + 1});
      stack.push_back({s.ta, tm, s.ma, mm, s.depth + 1});
    }
    prev = cur;
  }
  const double err = (2.0 * static_cast<double>(coeffs.size()) + 4.0) * kEps * p.abs_sum();
  return lower - err;
}

UnitVerdict certify_unit(const RealPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "unit test of the zero element");
  if (p.is_constant()) return constant_certificate(std::abs(p.coeff(0).get_d()));

  const auto rs = roots(p);
  auto interior_count = [&rs](double r) {
    int count = 0;
    for (const auto& root : rs) {
      if (std::abs(root.value) < r) count += root.multiplicity;
    }
    return count;
  };

  if (p.coeff(0) == 0) {
    return NotUnit{"zero at the origin", ComplexVal(0.0, 0.0), interior_count(1.0 - kCircleTolerance)};
  }

  // Exact detection of zeros on the circle (or reciprocal pairs).
  const RealPoly shared = gcd(p, p.reciprocal());
  if (shared.degree() >= 1) {
    const auto inner = roots(shared);
    const ComplexVal r = inner.front().value;
    const bool on_circle = std::abs(std::abs(r) - 1.0) <= kCircleTolerance;
    return NotUnit{on_circle ? "zero on the unit circle" : "zero inside the disc", r,
                   interior_count(1.0 - kCircleTolerance)};
  }

  for (const auto& root : rs) {
    const double m = std::abs(root.value);
    if (std::abs(m - 1.0) <= kCircleTolerance + root.radius) {
      throw Error(ErrorKind::Indeterminate, "a root lies within tolerance of the unit circle");
    }
  }
  const int located = interior_count(1.0);
  const auto coeffs = p.to_double();
  const int wound = winding_count(coeffs);
  if (located != wound) {
    throw Error(ErrorKind::Indeterminate, "root location and argument principle disagree (" +
                                              std::to_string(located) + " vs " + std::to_string(wound) + ")");
  }
  if (located > 0) {
    return NotUnit{"zeros inside the disc", rs.front().value, located};
  }

  UnitCertificate cert;
  cert.method = CertMethod::RootLocation;
  cert.interior_zero_count = 0;
  cert.min_root_modulus = std::abs(rs.front().value);
  double margin = std::numeric_limits<double>::infinity();
  for (const auto& root : rs) margin = std::min(margin, std::abs(root.value) - root.radius - 1.0);
  cert.margin = margin;
  cert.boundary_min_modulus_lower = boundary_min_modulus_lower(coeffs);
  if (!(cert.margin > 0) || !(cert.boundary_min_modulus_lower > 0)) {
    throw Error(ErrorKind::Indeterminate, "unit margins could not be certified");
  }
  return cert;
}

QuickRootScan quick_root_scan(std::span<const double> coeffs, double target, std::vector<ComplexVal>& warm) {
  QuickRootScan scan;
  std::size_t n = coeffs.size();
  while (n > 0 && coeffs[n - 1] == 0.0) --n;
  if (n == 0) {
    scan.interior = 1;
    scan.penalty = 1e300;
    scan.min_modulus = 0.0;
    return scan;
  }
  if (n == 1) return scan;
  // Exact zero roots are common (factors of z) and slow Aberth down.
  std::size_t shift = 0;
  while (shift < n && coeffs[shift] == 0.0) ++shift;
  if (shift > 0) {
    scan.interior += static_cast<int>(shift);
    scan.penalty += static_cast<double>(shift) * (1.0 + target);
    scan.min_modulus = 0.0;
  }
  if (n - shift <= 1) return scan;
  scan.converged = aberth(coeffs.subspan(shift, n - shift), warm);
  for (const auto& r : warm) {
    const double m = std::abs(r);
    if (m <= 1.0) ++scan.interior;
    scan.penalty += std::max(0.0, 1.0 + target - m);
    scan.min_modulus = std::min(scan.min_modulus, m);
  }
  return scan;
}

}  // namespace discstab
