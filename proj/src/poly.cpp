#include "garsia_abc/poly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <numeric>
#include <unordered_map>

#include "fft.hpp"
#include "garsia_abc/error.hpp"

namespace gabc {

ComplexPolynomial::ComplexPolynomial(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

ComplexPolynomial::ComplexPolynomial(std::initializer_list<cplx> coeffs) : coeffs_(coeffs) { normalize(); }

ComplexPolynomial ComplexPolynomial::constant(cplx c) { return ComplexPolynomial(std::vector<cplx>{c}); }

ComplexPolynomial ComplexPolynomial::monomial(cplx c, std::size_t degree) {
  std::vector<cplx> v(degree + 1);
  v[degree] = c;
  return ComplexPolynomial(std::move(v));
}

double ComplexPolynomial::max_abs_coeff() const noexcept {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

void ComplexPolynomial::normalize() {
  const double threshold = kTrimRelative * max_abs_coeff();
  while (!coeffs_.empty() && (std::abs(coeffs_.back()) <= threshold || coeffs_.back() == cplx{})) {
    coeffs_.pop_back();
  }
}

cplx ComplexPolynomial::operator()(cplx z) const noexcept {
  cplx acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

ComplexPolynomial& ComplexPolynomial::operator+=(const ComplexPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

ComplexPolynomial& ComplexPolynomial::operator-=(const ComplexPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

ComplexPolynomial& ComplexPolynomial::operator*=(cplx s) {
  for (auto& c : coeffs_) c *= s;
  normalize();
  return *this;
}

ComplexPolynomial operator*(const ComplexPolynomial& a, const ComplexPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<cplx> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return ComplexPolynomial(std::move(out));
}

int RootMultiset::total_multiplicity() const noexcept {
  int total = 0;
  for (const auto& r : roots) total += r.multiplicity;
  return total;
}

cplx evaluate(const ComplexPolynomial& p, cplx z) noexcept { return p(z); }

ComplexPolynomial derivative(const ComplexPolynomial& p) {
  const auto c = p.coeffs();
  if (c.size() <= 1) return {};
  std::vector<cplx> out(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = c[i] * static_cast<double>(i);
  return ComplexPolynomial(std::move(out));
}

ComplexPolynomial nth_derivative(const ComplexPolynomial& p, int order) {
  ComplexPolynomial d = p;
  for (int i = 0; i < order && !d.is_zero(); ++i) d = derivative(d);
  return d;
}

ComplexPolynomial rescale(const ComplexPolynomial& p, double radius) {
  if (!(radius > 0.0)) throw Error(ErrorCode::InvalidArgument, "rescale radius must be positive");
  std::vector<cplx> out(p.coeffs().begin(), p.coeffs().end());
  double scale = 1.0;
  for (auto& c : out) {
    c *= scale;
    scale *= radius;
  }
  return ComplexPolynomial(std::move(out));
}

namespace {

// Rows are derivative orders, columns are functions.
std::vector<std::vector<ComplexPolynomial>> wronskian_matrix(std::span<const ComplexPolynomial> fs) {
  const std::size_t size = fs.size();
  std::vector<std::vector<ComplexPolynomial>> m(size, std::vector<ComplexPolynomial>(size));
  for (std::size_t j = 0; j < size; ++j) {
    ComplexPolynomial d = fs[j];
    for (std::size_t l = 0; l < size; ++l) {
      m[l][j] = d;
      d = derivative(d);
    }
  }
  return m;
}

class LaplaceExpansion {
 public:
  explicit LaplaceExpansion(const std::vector<std::vector<ComplexPolynomial>>& m) : m_(m) {}

  // Determinant of the rows [row, size) restricted to the columns in mask.
  ComplexPolynomial minor(std::size_t row, std::uint32_t mask) {
    if (mask == 0) return ComplexPolynomial::constant(1.0);
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    ComplexPolynomial acc;
    int sign = 1;
    for (std::size_t j = 0; j < m_.size(); ++j) {
      if (!(mask & (1u << j))) continue;
      if (!m_[row][j].is_zero()) {
        const ComplexPolynomial sub = minor(row + 1, mask & ~(1u << j));
        if (!sub.is_zero()) {
          const ComplexPolynomial term = m_[row][j] * sub;
          if (sign > 0)
            acc += term;
          else
            acc -= term;
        }
      }
      sign = -sign;
    }
    memo_.emplace(mask, acc);
    return acc;
  }

 private:
  const std::vector<std::vector<ComplexPolynomial>>& m_;
  std::unordered_map<std::uint32_t, ComplexPolynomial> memo_;
};

cplx numeric_determinant(std::vector<std::vector<cplx>> a) {
  const std::size_t size = a.size();
  cplx det = 1.0;
  for (std::size_t k = 0; k < size; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < size; ++i)
      if (std::abs(a[i][k]) > std::abs(a[pivot][k])) pivot = i;
    if (a[pivot][k] == cplx{}) return 0.0;
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (std::size_t i = k + 1; i < size; ++i) {
      const cplx factor = a[i][k] / a[k][k];
      if (factor == cplx{}) continue;
      for (std::size_t j = k; j < size; ++j) a[i][j] -= factor * a[k][j];
    }
  }
  return det;
}

constexpr std::size_t kExactWronskianLimit = 6;

}  // namespace

ComplexPolynomial wronskian_by_interpolation(std::span<const ComplexPolynomial> fs) {
  if (fs.empty()) throw Error(ErrorCode::InvalidArgument, "wronskian of an empty family");
  const auto m = wronskian_matrix(fs);
  int degree_bound = 0;
  for (const auto& f : fs) degree_bound += std::max(f.degree(), 0);
  std::size_t nodes = 1;
  while (nodes < static_cast<std::size_t>(degree_bound) + 1) nodes <<= 1;

  const std::size_t size = fs.size();
  std::vector<cplx> values(nodes);
  for (std::size_t k = 0; k < nodes; ++k) {
    const cplx z = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(nodes));
    std::vector<std::vector<cplx>> a(size, std::vector<cplx>(size));
    for (std::size_t l = 0; l < size; ++l)
      for (std::size_t j = 0; j < size; ++j) a[l][j] = m[l][j](z);
    values[k] = numeric_determinant(std::move(a));
  }
  // values[k] = sum_i c_i w^{ik}, so c = forward DFT / N.
  auto coeffs = detail::dft_forward(values);
  for (auto& c : coeffs) c /= static_cast<double>(nodes);
  double scale = 0.0;
  for (const auto& v : values) scale = std::max(scale, std::abs(v));
  for (auto& c : coeffs)
    if (std::abs(c) <= 64.0 * std::numeric_limits<double>::epsilon() * scale) c = 0.0;
  return ComplexPolynomial(std::move(coeffs));
}

ComplexPolynomial wronskian(std::span<const ComplexPolynomial> fs) {
  if (fs.empty()) throw Error(ErrorCode::InvalidArgument, "wronskian of an empty family");
  if (fs.size() > kExactWronskianLimit) return wronskian_by_interpolation(fs);
  const auto m = wronskian_matrix(fs);
  LaplaceExpansion expansion(m);
  return expansion.minor(0, (1u << fs.size()) - 1u);
}

RootMultiset cluster_points(std::span<const cplx> points, double tolerance) {
  const std::size_t count = points.size();
  std::vector<std::size_t> parent(count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j) {
      const double scale = 1.0 + std::max(std::abs(points[i]), std::abs(points[j]));
      if (std::abs(points[i] - points[j]) <= tolerance * scale) parent[find(i)] = find(j);
    }

  RootMultiset out;
  out.cluster_tolerance = tolerance;
  std::vector<std::ptrdiff_t> slot(count, -1);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<std::ptrdiff_t>(out.roots.size());
      out.roots.push_back({cplx{}, 0});
    }
    auto& root = out.roots[static_cast<std::size_t>(slot[r])];
    root.location += points[i];
    root.multiplicity += 1;
  }
  for (auto& root : out.roots) root.location /= static_cast<double>(root.multiplicity);
  return out;
}

namespace {

struct HornerResult {
  cplx value;
  cplx slope;
  double abs_bound;  // sum |c_i| |z|^i, the backward-error scale
};

HornerResult horner(std::span<const cplx> c, cplx z) {
  HornerResult r{0.0, 0.0, 0.0};
  const double az = std::abs(z);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    r.slope = r.slope * z + r.value;
    r.value = r.value * z + *it;
    r.abs_bound = r.abs_bound * az + std::abs(*it);
  }
  return r;
}

constexpr int kMaxAberthIterations = 2000;

std::vector<cplx> aberth(std::span<const cplx> c) {
  const std::size_t degree = c.size() - 1;
  if (degree == 1) return {-c[0] / c[1]};

  // Start on a circle whose radius is the geometric mean of the root moduli.
  const double radius = std::pow(std::abs(c[0] / c[degree]), 1.0 / static_cast<double>(degree));
  std::vector<cplx> z(degree);
  for (std::size_t k = 0; k < degree; ++k)
    z[k] = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(degree) + 0.4);

  constexpr double eps = std::numeric_limits<double>::epsilon();
  std::vector<bool> done(degree, false);
  for (int iter = 0; iter < kMaxAberthIterations; ++iter) {
    bool all_done = true;
    for (std::size_t i = 0; i < degree; ++i) {
      if (done[i]) continue;
      const auto h = horner(c, z[i]);
      if (std::abs(h.value) <= 8.0 * eps * h.abs_bound) {
        done[i] = true;
        continue;
      }
      all_done = false;
      cplx repulsion{};
      for (std::size_t j = 0; j < degree; ++j)
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      const cplx newton = h.value / h.slope;
      const cplx step = newton / (1.0 - newton * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
        z[i] += std::polar(radius * 1e-3 + 1e-12, static_cast<double>(iter));
        continue;
      }
      z[i] -= step;
      if (std::abs(step) <= 2.0 * eps * std::abs(z[i])) done[i] = true;
    }
    if (all_done) return z;
  }
  throw Error(ErrorCode::NonConvergence, "Aberth iteration budget exhausted (ill-conditioned input)");
}

}  // namespace

std::vector<cplx> raw_roots(const ComplexPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "roots of the zero polynomial");
  const auto c = p.coeffs();
  std::size_t zeros = 0;
  while (c[zeros] == cplx{}) ++zeros;
  std::vector<cplx> out(zeros, cplx{});
  const auto rest = c.subspan(zeros);
  if (rest.size() > 1) {
    const auto found = aberth(rest);
    out.insert(out.end(), found.begin(), found.end());
  }
  return out;
}

RootMultiset find_roots(const ComplexPolynomial& p, double cluster_tolerance) {
  const auto roots = raw_roots(p);
  return cluster_points(roots, cluster_tolerance);
}

int multiplicity_at(const ComplexPolynomial& p, cplx z0, double tol) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "multiplicity in the zero polynomial");
  const double base = std::max(1.0, std::abs(z0));
  int m = 0;
  for (ComplexPolynomial d = p; !d.is_zero(); d = derivative(d)) {
    double scale = 0.0;
    double power = 1.0;
    for (const auto& c : d.coeffs()) {
      scale += std::abs(c) * power;
      power *= base;
    }
    if (std::abs(d(z0)) > tol * scale) break;
    ++m;
  }
  return m;
}

bool linear_independence(std::span<const ComplexPolynomial> fs, double tol) {
  if (fs.empty()) throw Error(ErrorCode::InvalidArgument, "empty family");
  std::size_t cols = 0;
  for (const auto& f : fs) cols = std::max(cols, f.coeffs().size());
  const std::size_t rows = fs.size();
  if (cols < rows) return false;
  std::vector<std::vector<cplx>> a(rows, std::vector<cplx>(cols));
  double largest = 0.0;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < fs[i].coeffs().size(); ++j) {
      a[i][j] = fs[i].coeffs()[j];
      largest = std::max(largest, std::abs(a[i][j]));
    }
  if (largest == 0.0) return false;

  std::vector<std::size_t> col_order(cols);
  std::iota(col_order.begin(), col_order.end(), 0);
  for (std::size_t k = 0; k < rows; ++k) {
    std::size_t pr = k, pc = k;
    double best = -1.0;
    for (std::size_t i = k; i < rows; ++i)
      for (std::size_t j = k; j < cols; ++j)
        if (std::abs(a[i][col_order[j]]) > best) {
          best = std::abs(a[i][col_order[j]]);
          pr = i;
          pc = j;
        }
    if (best <= tol * largest) return false;
    std::swap(a[k], a[pr]);
    std::swap(col_order[k], col_order[pc]);
    const cplx pivot = a[k][col_order[k]];
    for (std::size_t i = k + 1; i < rows; ++i) {
      const cplx factor = a[i][col_order[k]] / pivot;
      for (std::size_t j = k; j < cols; ++j) a[i][col_order[j]] -= factor * a[k][col_order[j]];
    }
  }
  return true;
}

}  // namespace gabc
