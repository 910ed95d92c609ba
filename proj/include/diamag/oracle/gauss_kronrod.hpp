#pragma once

// Globally adaptive 21-point Gauss-Kronrod quadrature, templated on the real
// type so the same code runs in double and in 113-bit binary floating point.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <queue>
#include <tuple>
#include <type_traits>
#include <vector>

namespace diamag::oracle {

namespace detail {

// Nodes and weights to 40 digits, re-derived from the exactness conditions
// (degree 31 for Kronrod, 19 for the embedded 10-point Gauss rule).
inline constexpr std::array<const char*, 11> kKronrodNodes{
    "0.9956571630258080807355272806890028479213", "0.9739065285171717200779640120844520534283",
    "0.9301574913557082260012071800595083462252", "0.8650633666889845107320966884234930485275",
    "0.7808177265864168970637175783450423771634", "0.6794095682990244062343273651148735757693",
    "0.5627571346686046833390000992726941408430", "0.4333953941292471907992659431657841622001",
    "0.2943928627014601981311266031038655661627", "0.1488743389816312108848260011297199846176",
    "0"};
inline constexpr std::array<const char*, 11> kKronrodWeights{
    "0.01169463886737187427806439606219204839622", "0.03255816230796472747881897245938976061739",
    "0.05475589657435199603138130024458017637372", "0.07503967481091995276704314091619000939522",
    "0.09312545458369760553506546508336634439002", "0.1093871588022976418992105903258049602718",
    "0.1234919762620658510779581098310741595123", "0.1347092173114733259280540017717068327610",
    "0.1427759385770600807970942731387170608860", "0.1477391049013384913748415159720680455237",
    "0.1494455540029169056649364683898212037452"};
inline constexpr std::array<const char*, 5> kGaussWeights{
    "0.06667134430868813759356880989333179285786", "0.1494513491505805931457763396576973324026",
    "0.2190863625159820439955349342281631924588", "0.2692667193099963550912269215694693528598",
    "0.2955242247147528701738929946513383294210"};

template <class Real>
Real parse_constant(const char* text) {
  if constexpr (std::is_floating_point_v<Real>) {
    return static_cast<Real>(std::strtold(text, nullptr));
  } else {
    return Real(text);
  }
}

template <class Real>
struct Kronrod21 {
  std::array<Real, 11> nodes;
  std::array<Real, 11> kronrod;
  std::array<Real, 5> gauss;

  static const Kronrod21& get() {
    static const Kronrod21 rule = [] {
      Kronrod21 r;
      for (std::size_t i = 0; i < 11; ++i) {
        r.nodes[i] = parse_constant<Real>(kKronrodNodes[i]);
        r.kronrod[i] = parse_constant<Real>(kKronrodWeights[i]);
      }
      for (std::size_t i = 0; i < 5; ++i) r.gauss[i] = parse_constant<Real>(kGaussWeights[i]);
      return r;
    }();
    return rule;
  }
};

template <class Real, class Value>
Real magnitude(const Value& v) {
  using std::abs;
  return Real(abs(v));
}

template <class Real, class Value>
struct Panel {
  Real lo;
  Real hi;
  Value value;
  Real error;
  Real resabs;
  // Error above the panel's rounding floors; bisection can only reduce this part.
  Real reducible;
  Real floor;

  bool operator<(const Panel& other) const { return reducible < other.reducible; }
};

// One 21-point panel with the QUADPACK error heuristic.
template <class Real, class Value, class F>
Panel<Real, Value> kronrod_panel(F& f, Real lo, Real hi) {
  const auto& rule = Kronrod21<Real>::get();
  const Real half = (hi - lo) / 2;
  const Real centre = (hi + lo) / 2;
  const Real abs_half = half < 0 ? Real(-half) : half;

  std::array<Value, 21> fv;
  fv[10] = f(centre);
  for (std::size_t i = 0; i < 10; ++i) {
    const Real dx = half * rule.nodes[i];
    fv[i] = f(Real(centre - dx));
    fv[20 - i] = f(Real(centre + dx));
  }

  Value kronrod_sum = fv[10] * rule.kronrod[10];
  Value gauss_sum = fv[10] * Real(0);
  Real resabs = rule.kronrod[10] * magnitude<Real>(fv[10]);
  for (std::size_t i = 0; i < 10; ++i) {
    const Value pair = fv[i] + fv[20 - i];
    kronrod_sum += pair * rule.kronrod[i];
    resabs += rule.kronrod[i] * (magnitude<Real>(fv[i]) + magnitude<Real>(fv[20 - i]));
    if (i % 2 == 1) gauss_sum += pair * rule.gauss[i / 2];
  }
  const Value mean = kronrod_sum * Real(0.5);
  Real resasc = rule.kronrod[10] * magnitude<Real>(Value(fv[10] - mean));
  for (std::size_t i = 0; i < 10; ++i) {
    resasc += rule.kronrod[i] *
              (magnitude<Real>(Value(fv[i] - mean)) + magnitude<Real>(Value(fv[20 - i] - mean)));
  }

  const Real eps = std::numeric_limits<Real>::epsilon();
  Real err = magnitude<Real>(Value((kronrod_sum - gauss_sum) * half));
  resabs *= abs_half;
  resasc *= abs_half;
  if (resasc != 0 && err != 0) {
    using std::pow;
    const Real scaled = Real(pow(Real(200 * err / resasc), Real(1.5)));
    err = resasc * (scaled < 1 ? scaled : Real(1));
  }
  // Nodes are rounded to about eps |t|; near a narrow pole that moves f by
  // eps |t| |f'|, which the Gauss/Kronrod difference cannot see. The sampled
  // variation stands in for the integral of |f'|.
  Real variation = 0;
  for (std::size_t i = 0; i + 1 < 21; ++i) variation += magnitude<Real>(Value(fv[i + 1] - fv[i]));
  using std::abs;
  const Real scale = std::max<Real>(Real(abs(lo)), Real(abs(hi)));
  Real floor = 50 * eps * resabs + eps * scale * variation;
  if (resabs > std::numeric_limits<Real>::min() / (50 * eps)) {
    err = std::max<Real>(floor, err);
  } else {
    floor = 0;
  }
  return {lo, hi, Value(kronrod_sum * half), err, resabs, std::max<Real>(Real(0), Real(err - floor)),
          Real(floor)};
}

}  // namespace detail

template <class Real, class Value>
struct AdaptiveResult {
  Value value;
  Real error;
  int subdivisions;
  bool converged;
};

// Integrates f over [breaks.front(), breaks.back()], starting from the panels
// given by the sorted breakpoints and bisecting the worst panel until the
// part of the summed error estimate above the rounding floors is below
// max(abs_tol, rel_tol |I|). The reported error includes the floors.
template <class Real, class F>
auto integrate_adaptive(F&& f, std::vector<Real> breaks, Real abs_tol, Real rel_tol,
                        int max_subdivisions)
    -> AdaptiveResult<Real, std::decay_t<decltype(f(std::declval<Real>()))>> {
  using Value = std::decay_t<decltype(f(std::declval<Real>()))>;
  using PanelT = detail::Panel<Real, Value>;

  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  std::priority_queue<PanelT> queue;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    queue.push(detail::kronrod_panel<Real, Value>(f, breaks[i], breaks[i + 1]));
  }

  const Real eps = std::numeric_limits<Real>::epsilon();
  // Exact totals over the queue; priority_queue offers no iteration.
  auto totals = [&queue]() {
    auto copy = queue;
    Value value = copy.top().value * Real(0);
    Real error = 0;
    Real floor = 0;
    while (!copy.empty()) {
      value += copy.top().value;
      error += copy.top().error;
      floor += copy.top().floor;
      copy.pop();
    }
    return std::tuple{value, error, floor};
  };
  auto done = [&](const Value& value, const Real& error, const Real& floor) {
    const Real target = std::max<Real>(abs_tol, Real(rel_tol * detail::magnitude<Real>(value)));
    return error <= target + floor;
  };

  int panels = static_cast<int>(queue.size());
  auto [value, error, floor] = totals();
  // Bound on the rounding carried by the running error sum.
  Real slack = 0;
  while (true) {
    // Running sums drift; confirm against exact totals before stopping.
    if (done(value, Real(error - slack), floor)) {
      std::tie(value, error, floor) = totals();
      slack = 0;
      if (done(value, error, floor)) return {value, error, panels, true};
    }

    const PanelT worst = queue.top();
    const Real mid = (worst.lo + worst.hi) / 2;
    const Real width = worst.hi - worst.lo;
    const Real scale = std::max<Real>(Real(worst.lo < 0 ? -worst.lo : worst.lo),
                                      Real(worst.hi < 0 ? -worst.hi : worst.hi));
    if (panels >= max_subdivisions || width <= 100 * eps * scale) {
      std::tie(value, error, floor) = totals();
      return {value, error, panels, false};
    }
    queue.pop();
    const PanelT left = detail::kronrod_panel<Real, Value>(f, worst.lo, mid);
    const PanelT right = detail::kronrod_panel<Real, Value>(f, mid, worst.hi);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    slack += 4 * eps * (worst.error + error);
    floor += left.floor + right.floor - worst.floor;
    queue.push(left);
    queue.push(right);
    ++panels;
  }
}

}  // namespace diamag::oracle
