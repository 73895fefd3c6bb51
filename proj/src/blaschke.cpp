#include "garsia_abc/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "garsia_abc/error.hpp"

namespace gabc {

BlaschkeProduct make_unchecked(std::vector<BlaschkeProduct::Zero> zeros, double match_tolerance);

BlaschkeProduct make_unchecked(std::vector<BlaschkeProduct::Zero> zeros, double match_tolerance) {
  BlaschkeProduct b;
  b.zeros_ = std::move(zeros);
  b.match_tolerance_ = match_tolerance;
  return b;
}

namespace {

struct Cluster {
  std::vector<std::size_t> members;
  double diameter = 0.0;
};

// Single-linkage clustering in absolute distance (all points lie in the disk).
std::vector<Cluster> cluster_locations(std::span<const cplx> points, double tolerance) {
  const std::size_t count = points.size();
  std::vector<std::size_t> parent(count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j)
      if (std::abs(points[i] - points[j]) <= tolerance) parent[find(i)] = find(j);

  std::vector<Cluster> clusters;
  std::vector<std::ptrdiff_t> slot(count, -1);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<std::ptrdiff_t>(clusters.size());
      clusters.emplace_back();
    }
    clusters[static_cast<std::size_t>(slot[r])].members.push_back(i);
  }
  for (auto& c : clusters)
    for (std::size_t a : c.members)
      for (std::size_t b : c.members) c.diameter = std::max(c.diameter, std::abs(points[a] - points[b]));
  return clusters;
}

cplx centroid(std::span<const cplx> points, const Cluster& c) {
  cplx sum{};
  for (std::size_t i : c.members) sum += points[i];
  return sum / static_cast<double>(c.members.size());
}

cplx factor(cplx a, cplx z) {
  const cplx den = 1.0 - std::conj(a) * z;
  if (std::abs(den) < 1e-14) throw Error(ErrorCode::PoleProximity, "evaluation at a Blaschke pole");
  return (z - a) / den;
}

}  // namespace

BlaschkeProduct BlaschkeProduct::from_zeros(std::span<const Zero> zeros, double boundary_margin,
                                            double match_tolerance) {
  std::vector<cplx> locations;
  for (const auto& z : zeros) {
    const double r = std::abs(z.location);
    if (z.multiplicity <= 0) throw Error(ErrorCode::InvalidArgument, "zero multiplicity must be positive");
    if (std::abs(r - 1.0) <= boundary_margin)
      throw Error(ErrorCode::BoundaryZero, "zero at modulus " + std::to_string(r) + " is within the boundary margin");
    if (r > 1.0) throw Error(ErrorCode::OutsideDisk, "zero at modulus " + std::to_string(r) + " lies outside the disk");
    locations.push_back(z.location);
  }
  // Repeated locations are merged by adding multiplicities.
  std::vector<Zero> merged;
  for (const auto& c : cluster_locations(locations, match_tolerance)) {
    int m = 0;
    for (std::size_t i : c.members) m += zeros[i].multiplicity;
    merged.push_back({centroid(locations, c), m});
  }
  return make_unchecked(std::move(merged), match_tolerance);
}

BlaschkeProduct from_polynomial(const ComplexPolynomial& p, double boundary_margin, double cluster_tolerance) {
  if (p.is_zero()) throw Error(ErrorCode::DegenerateInput, "Blaschke product of the zero polynomial");
  std::vector<BlaschkeProduct::Zero> inside;
  for (const auto& root : find_roots(p, cluster_tolerance).roots) {
    const double r = std::abs(root.location);
    if (std::abs(r - 1.0) <= boundary_margin)
      throw Error(ErrorCode::IndeterminateBoundaryZero,
                  "root at modulus " + std::to_string(r) + " lies in the boundary annulus");
    if (r < 1.0) inside.push_back({root.location, root.multiplicity});
  }
  return make_unchecked(std::move(inside), kDefaultMatchTolerance);
}

cplx evaluate(const BlaschkeProduct& b, cplx z) {
  if (std::abs(z) > 1.0 + 1e-12) throw Error(ErrorCode::InvalidArgument, "Blaschke evaluation outside the closed disk");
  cplx acc = 1.0;
  for (const auto& zero : b.zeros()) {
    const cplx f = factor(zero.location, z);
    for (int k = 0; k < zero.multiplicity; ++k) acc *= f;
  }
  return acc;
}

cplx derivative_at(const BlaschkeProduct& b, cplx z) {
  const auto zeros = b.zeros();
  std::vector<cplx> values(zeros.size());
  for (std::size_t k = 0; k < zeros.size(); ++k) values[k] = factor(zeros[k].location, z);
  cplx sum{};
  for (std::size_t k = 0; k < zeros.size(); ++k) {
    const cplx a = zeros[k].location;
    const cplx den = 1.0 - std::conj(a) * z;
    cplx term = static_cast<double>(zeros[k].multiplicity) * (1.0 - std::norm(a)) / (den * den);
    for (int e = 0; e < zeros[k].multiplicity - 1; ++e) term *= values[k];
    for (std::size_t j = 0; j < zeros.size(); ++j) {
      if (j == k) continue;
      for (int e = 0; e < zeros[j].multiplicity; ++e) term *= values[j];
    }
    sum += term;
  }
  return sum;
}

cplx boundary_derivative(const BlaschkeProduct& b, double theta) { return derivative_at(b, std::polar(1.0, theta)); }

double boundary_derivative_modulus(const BlaschkeProduct& b, double theta) {
  const cplx zeta = std::polar(1.0, theta);
  double sum = 0.0;
  for (const auto& zero : b.zeros())
    sum += zero.multiplicity * (1.0 - std::norm(zero.location)) / std::norm(zeta - zero.location);
  return sum;
}

BlaschkeProduct radical(const BlaschkeProduct& b) {
  std::vector<BlaschkeProduct::Zero> zeros(b.zeros().begin(), b.zeros().end());
  for (auto& z : zeros) z.multiplicity = 1;
  return make_unchecked(std::move(zeros), b.match_tolerance());
}

BlaschkeProduct lcm(std::span<const BlaschkeProduct> bs, double match_tolerance) {
  if (bs.empty()) throw Error(ErrorCode::InvalidArgument, "lcm of an empty list");
  std::vector<cplx> locations;
  std::vector<std::size_t> owner;
  std::vector<int> mult;
  for (std::size_t j = 0; j < bs.size(); ++j)
    for (const auto& z : bs[j].zeros()) {
      locations.push_back(z.location);
      owner.push_back(j);
      mult.push_back(z.multiplicity);
    }
  std::vector<BlaschkeProduct::Zero> out;
  for (const auto& c : cluster_locations(locations, match_tolerance)) {
    if (c.diameter > match_tolerance / 2)
      throw Error(ErrorCode::AmbiguousCluster,
                  "zero cluster of diameter " + std::to_string(c.diameter) + " exceeds half the match tolerance");
    std::vector<int> per_factor(bs.size(), 0);
    for (std::size_t i : c.members) per_factor[owner[i]] += mult[i];
    out.push_back({centroid(locations, c), *std::max_element(per_factor.begin(), per_factor.end())});
  }
  return make_unchecked(std::move(out), match_tolerance);
}

BlaschkeProduct product(const BlaschkeProduct& b1, const BlaschkeProduct& b2) {
  std::vector<cplx> locations;
  std::vector<int> mult;
  for (const auto* b : {&b1, &b2})
    for (const auto& z : b->zeros()) {
      locations.push_back(z.location);
      mult.push_back(z.multiplicity);
    }
  const double tol = std::max(b1.match_tolerance(), b2.match_tolerance());
  std::vector<BlaschkeProduct::Zero> out;
  for (const auto& c : cluster_locations(locations, tol)) {
    int m = 0;
    for (std::size_t i : c.members) m += mult[i];
    out.push_back({centroid(locations, c), m});
  }
  return make_unchecked(std::move(out), tol);
}

BlaschkeProduct power(const BlaschkeProduct& b, int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative Blaschke power");
  if (n == 0) return {};
  std::vector<BlaschkeProduct::Zero> zeros(b.zeros().begin(), b.zeros().end());
  for (auto& z : zeros) z.multiplicity *= n;
  return make_unchecked(std::move(zeros), b.match_tolerance());
}

int zero_count(const BlaschkeProduct& b) noexcept {
  int n = 0;
  for (const auto& z : b.zeros()) n += z.multiplicity;
  return n;
}

bool divides(const BlaschkeProduct& b1, const BlaschkeProduct& b2, double match_tolerance) {
  for (const auto& z : b1.zeros()) {
    int available = 0;
    for (const auto& w : b2.zeros())
      if (std::abs(z.location - w.location) <= match_tolerance) available += w.multiplicity;
    if (available < z.multiplicity) return false;
  }
  return true;
}

}  // namespace gabc
