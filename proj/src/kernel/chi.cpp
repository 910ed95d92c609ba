#include "diamag/kernel/chi.hpp"

#include "diamag/core/error.hpp"
#include "diamag/kernel/series.hpp"

namespace diamag::kernel {

namespace {

std::optional<TermBreakdown> try_closed_form_terms(Complex z, double q) {
  try {
    return eval_integrals(z, q);
  } catch (const PoleError&) {
    return std::nullopt;
  }
}

}  // namespace

Evaluation evaluate(const DimensionlessPoint& point, const KernelSettings& settings) {
  const RegimeTag regime = regime_select(point, settings);
  const Complex z = point.z();
  const double q = point.q();

  switch (regime) {
    case RegimeTag::PvStatic: {
      const StaticValue pv = chi_static_pv_bounded(q);
      return {ChiResult::from_parts({}, {pv.value, 0.0}, Method::PvStatic, pv.truncation_bound),
              regime, try_closed_form_terms(z, q)};
    }
    case RegimeTag::LargeSAsymptotic:
      return {chi_series_small_q(point, settings), regime, asymptotic_integrals(z, q)};
    case RegimeTag::SmallqStaticSeries:
      return {chi_series_small_q(point, settings), regime, try_closed_form_terms(z, q)};
    case RegimeTag::DirectClosedForm:
      break;
  }

  const TermBreakdown terms = eval_integrals(z, q);
  const Complex classic = point.x() == 0.0 ? Complex{} : terms.term1;
  return {ChiResult::from_parts(classic, quant_closed_form(z, q), Method::ClosedForm, 0.0),
          regime, terms};
}

ChiResult chi_ratio(const DimensionlessPoint& point, const KernelSettings& settings) {
  return evaluate(point, settings).result;
}

ChiResult chi_ratio_signed(double x, double y, double q, const KernelSettings& settings) {
  if (!(x < 0.0)) return chi_ratio(DimensionlessPoint::make(x, y, q), settings);
  ChiResult r = chi_ratio(DimensionlessPoint::make(-x, y, q), settings);
  r.classic = std::conj(r.classic);
  r.quant = std::conj(r.quant);
  r.total = r.classic + r.quant;
  return r;
}

}  // namespace diamag::kernel
