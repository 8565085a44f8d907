// SPDX-License-Identifier: Apache-2.0
//
// hrris-sim: hybrid relay-reflecting surface link simulator
// Copyright (C) 2026 hrris-sim developers

#include "ao/element_terms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "common/error.hpp"

namespace hrris::ao {

namespace {

// Fills D, E, lambda, eigenvector, v, v' for the stored amplitude. lambda and
// excess come from A^-1 through Sherman-Morrison on E = A + |a|^2 b r r^H.
void evaluate_amplitude_terms(PerElementTerms& t) {
  const std::size_t nr = t.a_n.rows();
  const double a2 = t.amplitude * t.amplitude;
  const double den = 1.0 + a2 * t.b_coef * t.r_ainv_r;

  const linalg::LuDecomposition a_lu(t.a_n);
  t.d_n = ComplexMatrix::identity(nr) + a2 * a_lu.solve(t.b_n);
  t.e_n = t.a_n + a2 * t.b_n;

  const linalg::LuDecomposition e_lu(t.e_n);
  const ComplexMatrix e_inv_c = e_lu.solve(t.c_n);
  // C = r_n w^H, so E^-1 C = (E^-1 r_n) w^H.
  const auto eig = linalg::rank1_eigen(e_inv_c, e_lu.solve(t.r_n));
  t.lambda_zero = eig.is_zero;
  if (eig.is_zero) {
    t.lambda = 0.0;
    t.eigenvector = ComplexMatrix(nr, 1);
    t.eigenvector[0] = 1.0;
  } else {
    t.lambda = t.rho * t.w_ainv_r / den;
    t.eigenvector = eig.eigenvector;
  }
  t.excess = t.rho * t.rho * t.gram / den;

  // The remaining eigenvectors of E^-1 C span the null space of w^H, so with
  // U = [u, null(w^H)] the first row of U^-1 is w^H / (w^H u). This gives
  // V_{11} = u^H E u and (V^-1)_{11} = w^H E^-1 w / |w^H u|^2.
  const cplx wu = (t.w_n.adjoint() * t.eigenvector)(0, 0);
  t.v_prime = (t.eigenvector.adjoint() * t.e_n * t.eigenvector)(0, 0);
  if (t.lambda_zero || std::abs(wu) == 0.0) {
    const ComplexMatrix u = linalg::complete_basis(t.eigenvector, nr);
    t.v = linalg::inverse(u.adjoint() * t.e_n * u)(0, 0);
  } else {
    t.v = (t.w_n.adjoint() * e_lu.solve(t.w_n))(0, 0) / std::norm(wu);
  }
  t.zeta = std::abs(t.lambda) * std::sqrt(t.gamma);
}

}  // namespace

PerElementTerms PerElementTerms::at_amplitude(double amp) const {
  PerElementTerms out = *this;
  out.amplitude = amp;
  evaluate_amplitude_terms(out);
  return out;
}

PerElementTerms terms_from_partials(std::size_t n, bool active,
                                    const ComplexMatrix& r_n,
                                    const ComplexMatrix& t_n,
                                    const ComplexMatrix& noise_excl,
                                    const ComplexMatrix& signal_excl,
                                    double rho, double xi, double amplitude) {
  const std::size_t nr = r_n.rows();
  PerElementTerms t;
  t.index = n;
  t.active = active;
  t.amplitude = amplitude;
  t.xi = xi;
  t.rho = rho;
  t.r_n = r_n;

  // A_n = I + noise_excl + rho G_n G_n^H
  t.a_n = ComplexMatrix::identity(nr) + noise_excl;
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nr; ++j) {
      cplx s = 0.0;
      for (std::size_t c = 0; c < signal_excl.cols(); ++c)
        s += signal_excl(i, c) * std::conj(signal_excl(j, c));
      t.a_n(i, j) += rho * s;
    }

  // B_n = b r_n r_n^H with b = [n active] + rho |t_n|^2
  double t2 = 0.0;
  for (std::size_t c = 0; c < t_n.rows(); ++c) t2 += std::norm(t_n[c]);
  t.b_coef = (active ? 1.0 : 0.0) + rho * t2;
  t.b_n = ComplexMatrix(nr, nr);
  t.b_n.add_outer(t.b_coef, r_n, r_n);

  // C_n = rho r_n (G_n t_n)^H
  t.w_n = signal_excl * t_n;
  t.c_n = ComplexMatrix(nr, nr);
  t.c_n.add_outer(rho, r_n, t.w_n);

  const linalg::LuDecomposition a_lu(t.a_n);
  const ComplexMatrix a_inv_r = a_lu.solve(r_n);
  t.r_ainv_r = std::max(linalg::inner(r_n, a_inv_r).real(), 0.0);
  t.w_ainv_r = linalg::inner(t.w_n, a_inv_r);
  t.gamma = t.b_coef * t.r_ainv_r;
  if (t.r_ainv_r > 0.0) {
    // Gram determinant of (r, w) under A^-1, via the part of w orthogonal to r.
    const ComplexMatrix z = t.w_n - (std::conj(t.w_ainv_r) / t.r_ainv_r) * r_n;
    t.gram = std::max(t.r_ainv_r * linalg::inner(z, a_lu.solve(z)).real(), 0.0);
  }

  evaluate_amplitude_terms(t);
  return t;
}

PerElementTerms element_terms(std::size_t n,
                              const surface::CoefficientState& state,
                              const channel::ChannelPair& channels,
                              const surface::SystemParams& params) {
  if (n >= state.size()) fail(ErrorCode::InvalidArgument, "element index out of range");
  const std::size_t nr = channels.h_r.rows();
  const std::size_t nt = channels.h_t.cols();
  ComplexMatrix noise(nr, nr);
  ComplexMatrix signal(nr, nt);
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (i == n) continue;
    const ComplexMatrix ri = channels.r(i);
    if (state.is_active(i)) {
      noise.add_outer(state.amplitude(i) * state.amplitude(i), ri, ri);
    }
    signal.add_outer(state.coefficient(i), ri, channels.t(i));
  }
  return terms_from_partials(n, state.is_active(n), channels.r(n), channels.t(n),
                             noise, signal, params.rho(),
                             surface::relay_input_power(n, channels.h_t, params),
                             state.amplitude(n));
}

double g_n(cplx alpha, const PerElementTerms& terms) {
  const double amp = std::abs(alpha);
  if (std::abs(amp - terms.amplitude) > 1e-12 * std::max(1.0, amp)) {
    return g_n(alpha, terms.at_amplitude(amp));
  }
  const double a2 = amp * amp;
  const double first = std::log2(1.0 + a2 * terms.gamma);
  // |lambda|^2 (1 - v' v) = -excess
  const double inner = 1.0 + 2.0 * (alpha * terms.lambda).real() - a2 * terms.excess;
  return first + std::log2(std::max(inner, std::numeric_limits<double>::min()));
}

}  // namespace hrris::ao
