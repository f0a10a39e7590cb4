// SPDX-License-Identifier: Apache-2.0
//
// Passive reflecting panel: per-element phase shifts with a common amplitude
// reflection coefficient, coherent combining with the direct path, and the
// cascaded two-hop gain.
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "rislink/geometry_channel.hpp"

namespace rislink {

using Complex = std::complex<double>;

/// Per-element complex channel (NBS->RIS or RIS->FBS). Scalar links use a
/// single entry.
class ComplexChannel {
 public:
  ComplexChannel() = default;
  explicit ComplexChannel(std::vector<Complex> entries);

  /// Builds from (amplitude, phase) pairs. Amplitudes must be finite and >= 0.
  static ComplexChannel from_polar(std::span<const double> amplitudes,
                                   std::span<const double> phases);

  std::size_t size() const noexcept { return entries_.size(); }
  std::span<const Complex> entries() const noexcept { return entries_; }
  const Complex& operator[](std::size_t n) const { return entries_[n]; }

 private:
  std::vector<Complex> entries_;
};

/// Wraps an angle into [0, 2*pi).
double wrap_phase(double radians) noexcept;

/// Reflecting panel: the diagonal of Phi is epsilon * exp(j*phase_n).
class RisPanel {
 public:
  /// All phases zero.
  RisPanel(std::size_t n_elements, double epsilon);
  /// Phases are wrapped into [0, 2*pi). Throws std::invalid_argument unless
  /// 0 < epsilon <= 1.
  RisPanel(std::vector<double> phases, double epsilon);

  std::size_t n_elements() const noexcept { return phases_.size(); }
  double epsilon() const noexcept { return epsilon_; }
  std::span<const double> phases() const noexcept { return phases_; }

  /// n-th diagonal entry of Phi.
  Complex reflection(std::size_t n) const;

 private:
  std::vector<double> phases_;
  double epsilon_;
};

/// phase_n = arg(h_nf) - arg(h_ni[n] * h_if[n]), wrapped to [0, 2*pi).
/// Every reflected term then arrives in phase with the direct path.
std::vector<double> optimal_phases(Complex h_nf, const ComplexChannel& h_ni,
                                   const ComplexChannel& h_if);

/// h_nf + sum_n epsilon * exp(j*phase_n) * h_ni[n] * h_if[n]
Complex composite_channel(Complex h_nf, const ComplexChannel& h_ni, const ComplexChannel& h_if,
                          const RisPanel& panel);

/// |composite_channel(...)|
double combined_gain(Complex h_nf, const ComplexChannel& h_ni, const ComplexChannel& h_if,
                     const RisPanel& panel);

/// beta_NIF = beta_NI * beta_IF
ChannelGain cascaded_gain(ChannelGain beta_ni, ChannelGain beta_if);

/// sqrt(beta_NIF) as the mean per-element cascaded amplitude
/// (1/N) * sum_n |h_ni[n] h_if[n]|. Requires N > 0.
double mean_cascaded_amplitude(const ComplexChannel& h_ni, const ComplexChannel& h_if);

}  // namespace rislink
