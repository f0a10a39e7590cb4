// SPDX-License-Identifier: Apache-2.0
#include "rislink/ris_sizing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "rislink/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rislink {
namespace {

void require_matching_element_power(const SizingProblem& prob, const PowerModel& model) {
  if (prob.p_e != model.p_e) {
    throw std::invalid_argument("sizing problem and power model disagree on per-element power");
  }
}

struct Candidate {
  double power = std::numeric_limits<double>::infinity();
  std::size_t n = 0;
};

// Strictly lower power wins; equal power goes to the smaller count.
Candidate better(Candidate a, Candidate b) {
  if (b.power < a.power || (b.power == a.power && b.n < a.n)) return b;
  return a;
}

Candidate search_range(const SizingProblem& prob, const PowerModel& model, std::size_t first,
                       std::size_t last) {
  Candidate best;
  for (std::size_t n = first; n <= last; ++n) {
    best = better(best, {sizing_total_power(prob, model, n), n});
  }
  return best;
}

}  // namespace

void SizingProblem::validate() const {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1]");
  }
  if (!(p_e > 0.0) || !std::isfinite(p_e)) {
    throw std::invalid_argument("per-element power must be finite and > 0");
  }
}

double sizing_total_power(const SizingProblem& prob, const PowerModel& model, std::size_t n) {
  const double p = required_power_ris(prob.r_bar, prob.beta_nf, prob.beta_nif, prob.epsilon, n,
                                      prob.sigma2);
  return total_power(ScenarioKind::kNbsRisFbs, p, model, n);
}

double sizing_total_power_relaxed(const SizingProblem& prob, const PowerModel& model, double n) {
  const double p = required_power_ris_relaxed(prob.r_bar, prob.beta_nf, prob.beta_nif,
                                              prob.epsilon, n, prob.sigma2);
  return p / model.nu + model.p_n + model.p_f + n * prob.p_e;
}

double optimal_elements_real(const SizingProblem& prob, double nu) {
  prob.validate();
  if (!(nu > 0.0 && nu <= 1.0)) throw std::invalid_argument("nu must lie in (0, 1]");
  // d/dN [K / (nu (a + bN)^2) + N P_e] = 0  with  K = (2^R - 1) sigma^2,
  // a = sqrt(beta_nf), b = eps sqrt(beta_nif).
  const double k = std::expm1(prob.r_bar.value() * std::numbers::ln2) * prob.sigma2.watts();
  const double eps = prob.epsilon;
  const double cube_root_term =
      std::cbrt(2.0 * k / (nu * eps * eps * prob.beta_nif.linear() * prob.p_e));
  const double direct_term =
      std::sqrt(prob.beta_nf.linear() / prob.beta_nif.linear()) / eps;
  return std::max(0.0, cube_root_term - direct_term);
}

std::size_t optimal_elements_int(const SizingProblem& prob, const PowerModel& model) {
  require_matching_element_power(prob, model);
  const double n_star = optimal_elements_real(prob, model.nu);
  if (n_star >= static_cast<double>(std::numeric_limits<std::size_t>::max() / 2)) {
    throw ModelDomainError("optimal element count is too large to represent");
  }
  const auto lo = static_cast<std::size_t>(std::floor(n_star));
  const auto hi = static_cast<std::size_t>(std::ceil(n_star));
  Candidate best{sizing_total_power(prob, model, 0), 0};
  best = better(best, {sizing_total_power(prob, model, lo), lo});
  best = better(best, {sizing_total_power(prob, model, hi), hi});
  return best.n;
}

std::size_t brute_force_optimal(const SizingProblem& prob, const PowerModel& model,
                                std::size_t n_max, Execution exec) {
  prob.validate();
  model.validate();
  require_matching_element_power(prob, model);

  Candidate best;
  if (exec == Execution::kSerial) {
    best = search_range(prob, model, 0, n_max);
  } else {
    // Fixed contiguous chunks reduced in index order keep the argmin identical
    // to the serial scan regardless of thread count.
    const std::size_t total = n_max + 1;
    int chunks = 1;
#ifdef _OPENMP
    chunks = std::max(1, omp_get_max_threads());
#endif
    std::vector<Candidate> partial(static_cast<std::size_t>(chunks));
    const std::size_t per_chunk = (total + partial.size() - 1) / partial.size();
    detail::for_each_index(partial.size(), Execution::kParallel, [&](std::size_t c) {
      const std::size_t first = c * per_chunk;
      if (first >= total) return;
      const std::size_t last = std::min(total, first + per_chunk) - 1;
      partial[c] = search_range(prob, model, first, last);
    });
    for (const auto& c : partial) best = better(best, c);
  }

  if (best.n == n_max) {
    std::ostringstream msg;
    msg << "total-power minimum sits on the search limit n_max=" << n_max
        << "; raise the limit";
    throw SearchBoundaryHit(msg.str());
  }
  return best.n;
}

}  // namespace rislink
