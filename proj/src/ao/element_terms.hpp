// SPDX-License-Identifier: Apache-2.0
//
// hrris-sim: hybrid relay-reflecting surface link simulator
// Copyright (C) 2026 hrris-sim developers

#ifndef HRRIS_AO_ELEMENT_TERMS_HPP
#define HRRIS_AO_ELEMENT_TERMS_HPP

#include <cstddef>

#include "channel/channel_model.hpp"
#include "linalg/complex_matrix.hpp"
#include "surface/surface_model.hpp"

namespace hrris::ao {

using linalg::ComplexMatrix;
using linalg::cplx;

/// Everything the single-coefficient update needs for element n, with all
/// other coefficients held fixed. The bound decomposes as
///
///   f = log2|A + |a|^2 B + a C + a^* C^H|
///     = log2|A| + log2(1 + |a|^2 gamma)
///       + log2(1 + 2 Re(a lambda) + |a|^2 |lambda|^2 (1 - v' v)).
///
/// D, E, lambda, v, v' and excess depend on the amplitude |a| the terms were
/// evaluated at; gamma, xi, gram and A, B, C do not.
struct PerElementTerms {
  std::size_t index = 0;
  bool active = false;
  double amplitude = 1.0;

  ComplexMatrix a_n;
  ComplexMatrix b_n;
  ComplexMatrix c_n;
  ComplexMatrix d_n;
  ComplexMatrix e_n;
  ComplexMatrix r_n;  // column n of H_r
  ComplexMatrix w_n;  // G_n t_n, so that C = rho r_n w_n^H

  double gamma = 0.0;
  cplx lambda{0.0, 0.0};
  bool lambda_zero = true;
  ComplexMatrix eigenvector;  // of E^-1 C; e1 when lambda is zero
  cplx v{0.0, 0.0};           // (V^-1)_{11}, V = U^H E U with U the eigenvectors of E^-1 C
  cplx v_prime{0.0, 0.0};     // V_{11}
  double excess = 0.0;        // |lambda|^2 (v' v - 1)
  double rho = 0.0;
  double b_coef = 0.0;        // B = b_coef r_n r_n^H
  double r_ainv_r = 0.0;      // r^H A^-1 r
  cplx w_ainv_r{0.0, 0.0};    // w^H A^-1 r
  double gram = 0.0;          // (r^H A^-1 r)(w^H A^-1 w) - |w^H A^-1 r|^2
  double xi = 0.0;            // sigma^2 + P_BS |t_n|^2
  double zeta = 0.0;          // |lambda| sqrt(gamma)

  /// Copy with the amplitude-dependent quantities re-evaluated.
  PerElementTerms at_amplitude(double amplitude) const;
};

/// Builds the terms from the partial sums that exclude element n:
/// noise_excl = sum over other active i of |a_i|^2 r_i r_i^H and
/// signal_excl = sum over other i of a_i r_i t_i^H.
PerElementTerms terms_from_partials(std::size_t n, bool active,
                                    const ComplexMatrix& r_n,
                                    const ComplexMatrix& t_n,
                                    const ComplexMatrix& noise_excl,
                                    const ComplexMatrix& signal_excl,
                                    double rho, double xi, double amplitude);

PerElementTerms element_terms(std::size_t n,
                              const surface::CoefficientState& state,
                              const channel::ChannelPair& channels,
                              const surface::SystemParams& params);

/// Closed-form per-element objective (bits/s/Hz) relative to log2|A_n|.
double g_n(cplx alpha, const PerElementTerms& terms);

}  // namespace hrris::ao

#endif  // HRRIS_AO_ELEMENT_TERMS_HPP
