#pragma once

#include <nlohmann/json.hpp>

#include "gksl3/gamma.hpp"
#include "gksl3/ktype.hpp"
#include "gksl3/module.hpp"
#include "gksl3/rational.hpp"
#include "gksl3/scalar.hpp"
#include "gksl3/series.hpp"
#include "gksl3/sl2.hpp"

namespace gksl3 {

// Key order is fixed everywhere so serialized output is byte-reproducible.
using Json = nlohmann::ordered_json;

// Rationals travel as exact strings ("3", "-5/7"), never as floats.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json gaussian_to_json(const GaussianRational& z);
GaussianRational gaussian_from_json(const Json& j);

// {"terms": [{"exps": {"nu02": 1}, "re": "1", "im": "0"}, ...]},
// leading term first.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json series_to_json(const SeriesParams& sp);

Json ktype_to_json(const KTypeInfo& info);
Json gamma_to_json(const GammaMatrix& g);
Json iota_to_json(const IotaMatrix& m);
Json report_to_json(const VerifyReport& r);
Json sl2_class_to_json(const SL2Class& c);

}  // namespace gksl3
