// SPDX-License-Identifier: Apache-2.0
#include "rislink/ris_model.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "rislink/errors.hpp"

namespace rislink {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_same_length(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    std::ostringstream msg;
    msg << what << ": lengths differ (" << a << " vs " << b << ")";
    throw LengthMismatch(msg.str());
  }
}

}  // namespace

ComplexChannel::ComplexChannel(std::vector<Complex> entries) : entries_(std::move(entries)) {
  for (const auto& h : entries_) {
    if (!std::isfinite(h.real()) || !std::isfinite(h.imag())) {
      throw std::invalid_argument("channel entries must be finite");
    }
  }
}

ComplexChannel ComplexChannel::from_polar(std::span<const double> amplitudes,
                                          std::span<const double> phases) {
  require_same_length(amplitudes.size(), phases.size(), "ComplexChannel::from_polar");
  std::vector<Complex> entries;
  entries.reserve(amplitudes.size());
  for (std::size_t n = 0; n < amplitudes.size(); ++n) {
    if (!(amplitudes[n] >= 0.0) || !std::isfinite(amplitudes[n])) {
      throw std::invalid_argument("channel amplitudes must be finite and >= 0");
    }
    entries.push_back(std::polar(amplitudes[n], phases[n]));
  }
  return ComplexChannel(std::move(entries));
}

double wrap_phase(double radians) noexcept {
  double r = std::fmod(radians, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod of a tiny negative value can round back up to exactly 2*pi.
  if (r >= kTwoPi) r = 0.0;
  return r;
}

RisPanel::RisPanel(std::size_t n_elements, double epsilon)
    : RisPanel(std::vector<double>(n_elements, 0.0), epsilon) {}

RisPanel::RisPanel(std::vector<double> phases, double epsilon)
    : phases_(std::move(phases)), epsilon_(epsilon) {
  if (!(epsilon_ > 0.0 && epsilon_ <= 1.0)) {
    throw std::invalid_argument("reflection amplitude epsilon must lie in (0, 1]");
  }
  for (double& phi : phases_) phi = wrap_phase(phi);
}

Complex RisPanel::reflection(std::size_t n) const { return std::polar(epsilon_, phases_.at(n)); }

std::vector<double> optimal_phases(Complex h_nf, const ComplexChannel& h_ni,
                                   const ComplexChannel& h_if) {
  require_same_length(h_ni.size(), h_if.size(), "optimal_phases");
  const double direct_arg = std::arg(h_nf);
  std::vector<double> phases(h_ni.size());
  for (std::size_t n = 0; n < phases.size(); ++n) {
    phases[n] = wrap_phase(direct_arg - std::arg(h_ni[n] * h_if[n]));
  }
  return phases;
}

Complex composite_channel(Complex h_nf, const ComplexChannel& h_ni, const ComplexChannel& h_if,
                          const RisPanel& panel) {
  require_same_length(h_ni.size(), h_if.size(), "composite_channel");
  require_same_length(h_ni.size(), panel.n_elements(), "composite_channel (panel)");
  Complex reflected{0.0, 0.0};
  for (std::size_t n = 0; n < h_ni.size(); ++n) {
    reflected += panel.reflection(n) * h_ni[n] * h_if[n];
  }
  return h_nf + reflected;
}

double combined_gain(Complex h_nf, const ComplexChannel& h_ni, const ComplexChannel& h_if,
                     const RisPanel& panel) {
  return std::abs(composite_channel(h_nf, h_ni, h_if, panel));
}

ChannelGain cascaded_gain(ChannelGain beta_ni, ChannelGain beta_if) {
  return ChannelGain::from_linear(beta_ni.linear() * beta_if.linear());
}

double mean_cascaded_amplitude(const ComplexChannel& h_ni, const ComplexChannel& h_if) {
  require_same_length(h_ni.size(), h_if.size(), "mean_cascaded_amplitude");
  if (h_ni.size() == 0) throw std::invalid_argument("mean_cascaded_amplitude needs N > 0");
  double sum = 0.0;
  for (std::size_t n = 0; n < h_ni.size(); ++n) sum += std::abs(h_ni[n] * h_if[n]);
  return sum / static_cast<double>(h_ni.size());
}

}  // namespace rislink
