#pragma once

#include <complex>
#include <string_view>

namespace diamag {

using Complex = std::complex<double>;

// Evaluation coordinate in units of the Fermi sphere:
//   x = omega / (k_F v_F), y = nu / (k_F v_F), q = k / k_F,
// with z = x + i y and s = z / q.
class DimensionlessPoint {
 public:
  // Throws ValidationError naming the offending field. y = 0 is accepted
  // only on the static line (x = 0) or when every pole of the t-integrands
  // (t = s and t = s +- q/2) lies strictly outside [-1, 1].
  static DimensionlessPoint make(double x, double y, double q);

  double x() const noexcept { return x_; }
  double y() const noexcept { return y_; }
  double q() const noexcept { return q_; }
  Complex z() const noexcept { return {x_, y_}; }
  Complex s() const noexcept { return Complex{x_, y_} / q_; }

  bool is_static() const noexcept { return x_ == 0.0; }

 private:
  DimensionlessPoint(double x, double y, double q) : x_(x), y_(y), q_(q) {}

  double x_;
  double y_;
  double q_;
};

enum class Method { ClosedForm, SeriesSmallQ, PvStatic, Quadrature };

std::string_view to_string(Method method) noexcept;

// Susceptibility in units of the Landau value chi_L.
struct ChiResult {
  Complex classic;
  Complex quant;
  Complex total;
  Method method = Method::ClosedForm;
  double err_est = 0.0;

  static ChiResult from_parts(Complex classic, Complex quant, Method method,
                              double err_est) {
    return {classic, quant, classic + quant, method, err_est};
  }
};

}  // namespace diamag
