#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace gabc {

using cplx = std::complex<double>;

/// Dense complex polynomial, coefficients in ascending degree.
///
/// Every constructor and arithmetic result is normalized: highest-degree
/// coefficients with modulus below kTrimRelative * max|coeff| are dropped, so
/// the zero polynomial is the empty coefficient list and degree() is stable
/// after cancellation.
class ComplexPolynomial {
 public:
  static constexpr double kTrimRelative = 1e-12;

  ComplexPolynomial() = default;
  explicit ComplexPolynomial(std::vector<cplx> coeffs);
  ComplexPolynomial(std::initializer_list<cplx> coeffs);

  static ComplexPolynomial constant(cplx c);
  static ComplexPolynomial monomial(cplx c, std::size_t degree);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const cplx> coeffs() const noexcept { return coeffs_; }
  cplx operator[](std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : cplx{}; }
  double max_abs_coeff() const noexcept;

  cplx operator()(cplx z) const noexcept;

  ComplexPolynomial& operator+=(const ComplexPolynomial& rhs);
  ComplexPolynomial& operator-=(const ComplexPolynomial& rhs);
  ComplexPolynomial& operator*=(cplx s);

  friend ComplexPolynomial operator+(ComplexPolynomial a, const ComplexPolynomial& b) { return a += b; }
  friend ComplexPolynomial operator-(ComplexPolynomial a, const ComplexPolynomial& b) { return a -= b; }
  friend ComplexPolynomial operator*(ComplexPolynomial a, cplx s) { return a *= s; }
  friend ComplexPolynomial operator*(cplx s, ComplexPolynomial a) { return a *= s; }
  friend ComplexPolynomial operator*(const ComplexPolynomial& a, const ComplexPolynomial& b);

 private:
  void normalize();
  std::vector<cplx> coeffs_;
};

/// Distinct roots with multiplicities, as recovered by clustering.
struct RootMultiset {
  struct Root {
    cplx location;
    int multiplicity = 1;
  };
  std::vector<Root> roots;
  double cluster_tolerance = 1e-6;

  int total_multiplicity() const noexcept;
  std::size_t distinct() const noexcept { return roots.size(); }
};

inline constexpr double kDefaultClusterTolerance = 1e-6;

cplx evaluate(const ComplexPolynomial& p, cplx z) noexcept;
ComplexPolynomial derivative(const ComplexPolynomial& p);
ComplexPolynomial nth_derivative(const ComplexPolynomial& p, int order);

/// z -> p(R z).
ComplexPolynomial rescale(const ComplexPolynomial& p, double radius);

/// Determinant of the matrix whose column j is (f_j, f_j', ..., f_j^{(n)}).
///
/// Up to six functions the determinant is expanded exactly in the coefficient
/// ring (Laplace expansion over row subsets); larger families are handled by
/// evaluating the numeric determinant on roots of unity and interpolating.
ComplexPolynomial wronskian(std::span<const ComplexPolynomial> fs);

/// The evaluation/interpolation route, exposed so it can be checked against
/// the exact expansion.
ComplexPolynomial wronskian_by_interpolation(std::span<const ComplexPolynomial> fs);

/// Aberth-Ehrlich simultaneous iteration followed by clustering. Roots
/// closer than cluster_tolerance * (1 + |root|) are merged at their centroid.
/// Throws Error(NonConvergence) when the iteration budget is exhausted.
RootMultiset find_roots(const ComplexPolynomial& p, double cluster_tolerance = kDefaultClusterTolerance);

/// Raw roots (with repetition), before clustering.
std::vector<cplx> raw_roots(const ComplexPolynomial& p);

/// Largest m with |p^{(l)}(z0)| <= tol * scale_l for every l < m, where
/// scale_l = sum_i |c_i| max(1,|z0|)^i over the coefficients of p^{(l)}.
int multiplicity_at(const ComplexPolynomial& p, cplx z0, double tol);

/// Full row rank of the coefficient matrix under complete-pivoting
/// elimination; pivots below tol * (largest entry) count as zero.
bool linear_independence(std::span<const ComplexPolynomial> fs, double tol = 1e-10);

/// Single-linkage clustering of points; distance threshold scales with
/// (1 + |point|). Returns centroids with cluster sizes as multiplicities.
RootMultiset cluster_points(std::span<const cplx> points, double tolerance);

}  // namespace gabc
