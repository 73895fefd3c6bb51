#pragma once

#include <span>
#include <vector>

#include "garsia_abc/poly.hpp"

namespace gabc {

inline constexpr double kDefaultBoundaryMargin = 1e-4;
inline constexpr double kDefaultMatchTolerance = 1e-6;

/// Finite Blaschke product prod ((z - a_k) / (1 - conj(a_k) z))^{m_k}.
/// No unimodular prefactor; the empty product is the constant 1.
class BlaschkeProduct {
 public:
  struct Zero {
    cplx location;
    int multiplicity = 1;
  };

  BlaschkeProduct() = default;

  /// Validates the zero set; throws BoundaryZero / OutsideDisk.
  static BlaschkeProduct from_zeros(std::span<const Zero> zeros, double boundary_margin = kDefaultBoundaryMargin,
                                    double match_tolerance = kDefaultMatchTolerance);

  std::span<const Zero> zeros() const noexcept { return zeros_; }
  double match_tolerance() const noexcept { return match_tolerance_; }
  bool empty() const noexcept { return zeros_.empty(); }

 private:
  friend BlaschkeProduct make_unchecked(std::vector<BlaschkeProduct::Zero> zeros, double match_tolerance);
  std::vector<Zero> zeros_;
  double match_tolerance_ = kDefaultMatchTolerance;
};

/// Blaschke product over the roots of p lying inside the disk. Roots within
/// boundary_margin of the unit circle raise IndeterminateBoundaryZero.
BlaschkeProduct from_polynomial(const ComplexPolynomial& p, double boundary_margin = kDefaultBoundaryMargin,
                                double cluster_tolerance = kDefaultClusterTolerance);

cplx evaluate(const BlaschkeProduct& b, cplx z);
/// B'(z), by the product rule on the factors (safe at the zeros).
cplx derivative_at(const BlaschkeProduct& b, cplx z);
cplx boundary_derivative(const BlaschkeProduct& b, double theta);
/// |B'(e^{i theta})| = sum m_k (1 - |a_k|^2) / |e^{i theta} - a_k|^2.
double boundary_derivative_modulus(const BlaschkeProduct& b, double theta);

BlaschkeProduct radical(const BlaschkeProduct& b);
BlaschkeProduct lcm(std::span<const BlaschkeProduct> bs, double match_tolerance = kDefaultMatchTolerance);
BlaschkeProduct product(const BlaschkeProduct& b1, const BlaschkeProduct& b2);
/// B^n (multiplicities scaled by n).
BlaschkeProduct power(const BlaschkeProduct& b, int n);
int zero_count(const BlaschkeProduct& b) noexcept;
bool divides(const BlaschkeProduct& b1, const BlaschkeProduct& b2, double match_tolerance = kDefaultMatchTolerance);

}  // namespace gabc
