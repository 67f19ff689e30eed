#include "motkit/kalman.hpp"

#include <algorithm>
#include <cassert>

namespace motkit {

namespace {

using Vec7 = Mat<7, 1>;
using Vec4 = Mat<4, 1>;

Vec7 to_vec(const StateVector& x) {
  Vec7 v;
  v.a = {x.u, x.v, x.s, x.r, x.du, x.dv, x.ds};
  return v;
}

StateVector from_vec(const Vec7& v) {
  return StateVector{v.a[0], v.a[1], v.a[2], v.a[3], v.a[4], v.a[5], v.a[6]};
}

// Transition: identity plus unit coupling of each position component to its
// velocity, one frame per step.
Mat<7, 7> transition() {
  auto f = Mat<7, 7>::identity();
  f(0, 4) = 1.0;
  f(1, 5) = 1.0;
  f(2, 6) = 1.0;
  return f;
}

// Observation picks the first four state entries.
Mat<4, 7> observation_matrix() {
  Mat<4, 7> h;
  for (std::size_t i = 0; i < 4; ++i) h(i, i) = 1.0;
  return h;
}

template <std::size_t N>
Mat<N, N> diagonal(const std::array<double, N>& d) {
  Mat<N, N> m;
  for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
  return m;
}

// Covariances must stay symmetric; products drift by rounding, so every step
// ends with an explicit symmetrization.
void symmetrize(Covariance& p) {
#ifndef NDEBUG
  double max_asym = 0.0;
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = i + 1; j < 7; ++j)
      max_asym = std::max(max_asym, std::abs(p(i, j) - p(j, i)));
  assert(max_asym < 1e-9);
#endif
  for (std::size_t i = 0; i < 7; ++i) {
    for (std::size_t j = i + 1; j < 7; ++j) {
      const double m = 0.5 * (p(i, j) + p(j, i));
      p(i, j) = m;
      p(j, i) = m;
    }
  }
}

}  // namespace

FilterState init_filter(const Observation& obs, const FilterParams& params) {
  FilterState fs;
  fs.state = StateVector{obs.u, obs.v, obs.s, obs.r, 0.0, 0.0, 0.0};
  fs.cov = diagonal(params.initial_covariance_diag);
  return fs;
}

FilterState predict(const StateVector& state, const Covariance& cov, const FilterParams& params) {
  StateVector x = state;
  // The linear model can drive the (physically nonnegative) area negative;
  // zero the area velocity before it does.
  if (x.s + x.ds <= 0.0) {
    x.ds = 0.0;
  }
  const auto f = transition();
  auto p = f * cov * f.transposed() + diagonal(params.process_noise_diag);
  symmetrize(p);

  x.u += x.du;
  x.v += x.dv;
  x.s += x.ds;
  return FilterState{x, p};
}

FilterState update(const StateVector& state, const Covariance& cov, const Observation& obs,
                   const FilterParams& params) {
  const auto h = observation_matrix();
  const auto x = to_vec(state);

  Vec4 innovation;
  {
    const Vec4 predicted = h * x;
    innovation.a = {obs.u - predicted.a[0], obs.v - predicted.a[1], obs.s - predicted.a[2],
                    obs.r - predicted.a[3]};
  }

  const Mat<4, 4> s = h * cov * h.transposed() + diagonal(params.measurement_noise_diag);
  const auto l = cholesky(s);

  // K = P H^T S^-1, each row solved through the factor (S is symmetric).
  const Mat<7, 4> pht = cov * h.transposed();
  Mat<7, 4> gain;
  for (std::size_t row = 0; row < 7; ++row) {
    Vec4 rhs;
    for (std::size_t i = 0; i < 4; ++i) rhs(i, 0) = pht(row, i);
    const Vec4 sol = cholesky_solve(l, rhs);
    for (std::size_t i = 0; i < 4; ++i) gain(row, i) = sol(i, 0);
  }

  const Vec7 corrected = [&] {
    Vec7 out = x;
    const Vec7 delta = gain * innovation;
    for (std::size_t i = 0; i < 7; ++i) out(i, 0) += delta(i, 0);
    return out;
  }();

  auto p = (Mat<7, 7>::identity() - gain * h) * cov;
  symmetrize(p);
  return FilterState{from_vec(corrected), p};
}

Box state_box(const StateVector& state) {
  constexpr double kMin = 1e-6;
  return observation_to_box(
      Observation{state.u, state.v, std::max(state.s, kMin), std::max(state.r, kMin)});
}

}  // namespace motkit
