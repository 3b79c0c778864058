#pragma once

#include <string>

#include "gksl3/scalar.hpp"

namespace gksl3 {

// The three standard-parabolic induction series (also used to label the
// parabolic subalgebras themselves).
enum class Series { P0, P1, P2 };

constexpr const char* to_string(Series s) {
  switch (s) {
    case Series::P0: return "p0";
    case Series::P1: return "p1";
    case Series::P2: return "p2";
  }
  return "";
}

// Inducing data of one standard module.  P0 carries a sign character
// (sigma1, sigma2) and two parameters; P1/P2 carry the lowest SO(2)-weight
// k >= 2 of the inducing discrete-series factor and one parameter.
// Parameters default to the matching formal symbols, so results stay
// polynomial unless a concrete point is supplied.
struct SeriesParams {
  Series series = Series::P0;
  int sigma1 = 0;
  int sigma2 = 0;
  int k = 0;
  Scalar nu_a;  // P0: first parameter; P1/P2: the parameter
  Scalar nu_b;  // P0: second parameter; unused otherwise

  static SeriesParams p0(int sigma1, int sigma2);
  static SeriesParams p0(int sigma1, int sigma2, Scalar nu01, Scalar nu02);
  static SeriesParams p1(int k);
  static SeriesParams p1(int k, Scalar nu);
  static SeriesParams p2(int k);
  static SeriesParams p2(int k, Scalar nu);

  // Identifying label, e.g. "p0(1,0)" or "p1(k=2)".
  std::string label() const;
};

}  // namespace gksl3
