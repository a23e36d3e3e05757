// Copyright 2026 The growthlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "growthlab/spectra.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "growthlab/errors.hpp"
#include "growthlab/exact_linalg.hpp"

namespace growthlab {

IntPoly char_poly(const IntegerMatrix& m) {
  std::vector<Integer> high_first = berkowitz<Integer>(m);
  std::reverse(high_first.begin(), high_first.end());
  return IntPoly(std::move(high_first));
}

std::vector<unsigned> cyclotomic_orders(const IntPoly& p) {
  std::vector<unsigned> out;
  if (p.degree() < 1) return out;
  const unsigned d = static_cast<unsigned>(p.degree());
  // phi(k) >= sqrt(k/2), so phi(k) <= d forces k <= 2 d^2.
  for (unsigned k = 1; k <= 2 * d * d; ++k) {
    if (euler_phi(k) > d) continue;
    if (divide_exact(p, cyclotomic(k))) out.push_back(k);
  }
  return out;
}

bool all_roots_of_unity(const IntPoly& p) {
  if (!p.is_monic()) throw Error(ErrorCode::kPrecondition, "root-of-unity test needs a monic polynomial");
  IntPoly rest = p;
  for (unsigned k : cyclotomic_orders(p)) {
    IntPoly phi = cyclotomic(k);
    while (auto q = divide_exact(rest, phi)) rest = std::move(*q);
  }
  return rest.degree() == 0;
}

namespace {

using Complex = std::complex<long double>;

std::vector<Complex> approximate_roots(const IntPoly& p) {
  const int n = p.degree();
  std::vector<Complex> roots;
  const long double lead = p.leading().get_d();
  if (n == 1) {
    roots.emplace_back(-p.coeff(0).get_d() / lead);
    return roots;
  }
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -p.coeff(i).get_d() / static_cast<double>(lead);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kNonConvergence, "companion eigensolver did not converge");
  }
  for (int i = 0; i < n; ++i) {
    auto z = solver.eigenvalues()(i);
    roots.emplace_back(z.real(), z.imag());
  }
  return roots;
}

}  // namespace

RadiusBracket spectral_radius(const IntPoly& p, double tol) {
  if (p.degree() < 1) throw Error(ErrorCode::kPrecondition, "spectral radius needs degree >= 1");
  if (!p.is_monic()) throw Error(ErrorCode::kPrecondition, "spectral radius needs a monic polynomial");
  const IntPoly q = squarefree_part(p);
  const IntPoly dq = q.derivative();
  const int n = q.degree();
  std::vector<Complex> roots = approximate_roots(q);
  std::vector<long double> radii(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    Complex z = roots[i];
    for (int iter = 0; iter < 60; ++iter) {
      Complex d = dq.eval(z);
      if (d == Complex(0)) break;
      Complex step = q.eval(z) / d;
      z -= step;
      if (std::abs(step) <= 1e-18L * std::max<long double>(1, std::abs(z))) break;
    }
    roots[i] = z;
    Complex d = dq.eval(z);
    // Newton inclusion: some root lies within n|q/q'| of z. Pad for rounding
    // in the long double evaluation.
    long double r = d == Complex(0) ? INFINITY : n * std::abs(q.eval(z) / d);
    radii[i] = r + 1e-15L * std::max<long double>(1, std::abs(z));
  }
  RadiusBracket out;
  long double value = 0;
  long double lower = 0;
  long double upper = 0;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    value = std::max(value, std::abs(roots[i]));
    lower = std::max(lower, std::abs(roots[i]) - radii[i]);
    upper = std::max(upper, std::abs(roots[i]) + radii[i]);
  }
  // Pairwise disjoint disks each hold exactly one of the n roots, so the
  // upper end covers every root.
  bool disjoint = true;
  for (std::size_t i = 0; i < roots.size() && disjoint; ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (std::abs(roots[i] - roots[j]) <= radii[i] + radii[j]) {
        disjoint = false;
        break;
      }
    }
  }
  if (!disjoint) {
    // Cauchy bound as a fallback upper end.
    long double cauchy = 0;
    for (int i = 0; i < n; ++i) cauchy = std::max<long double>(cauchy, std::fabs(q.coeff(i).get_d() / q.leading().get_d()));
    upper = 1 + cauchy;
  }
  out.value = static_cast<double>(value);
  out.lower = static_cast<double>(std::max<long double>(0, lower));
  out.upper = static_cast<double>(upper);
  if (!disjoint || out.upper - out.lower > 2 * tol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "spectral radius not resolved to tolerance; bracket [" << out.lower << ", " << out.upper << "]";
    throw Error(ErrorCode::kNonConvergence, msg.str());
  }
  return out;
}

double mahler_gap_threshold(unsigned d) {
  if (d == 0) throw Error(ErrorCode::kPrecondition, "degree bound must be >= 1");
  const double dd = d;
  return 1.0 + 1.0 / (30.0 * dd * dd * std::log(6.0 * dd));
}

Classification classify_abelian_by_cyclic(const IntegerMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(ErrorCode::kPrecondition, "expected a nonempty square matrix");
  }
  Classification out;
  out.char_poly = char_poly(m);
  if (abs(out.char_poly.coeff(0)) != 1) {
    throw Error(ErrorCode::kPrecondition, "matrix is not invertible over Z (|det| != 1)");
  }
  out.threshold = mahler_gap_threshold(static_cast<unsigned>(m.rows()));
  out.radius = spectral_radius(out.char_poly);
  if (all_roots_of_unity(out.char_poly)) {
    out.kind = GrowthClass::kVirtuallyNilpotent;
    out.periodic_order = cyclotomic_orders(out.char_poly).front();
  } else {
    out.kind = GrowthClass::kExponential;
    out.gap_verified = out.radius.lower >= out.threshold;
  }
  return out;
}

std::optional<IntegerVector> fixed_vector_of_power(const IntegerMatrix& m, unsigned r) {
  if (r == 0) throw Error(ErrorCode::kPrecondition, "power must be >= 1");
  IntegerMatrix a = matrix_power(m, r);
  for (Eigen::Index i = 0; i < a.rows(); ++i) a(i, i) -= 1;
  std::vector<IntegerVector> kernel = integer_nullspace(a);
  if (kernel.empty()) return std::nullopt;
  return kernel.front();
}

}  // namespace growthlab
