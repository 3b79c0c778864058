#include "gksl3/su2.hpp"

#include <string>

namespace gksl3 {

namespace {

void check_level(int l) {
  if (l < 0) throw IndexOutOfRange("negative representation label " + std::to_string(l));
}

void check_shift(int m) {
  if (m < -2 || m > 2) throw BadShift("level shift " + std::to_string(m) + " outside [-2,2]");
}

}  // namespace

std::optional<std::pair<int, Rational>> tau_act(Sl2Gen g, int l, int k) {
  check_level(l);
  if (k < 0 || k > l) {
    throw IndexOutOfRange("basis index " + std::to_string(k) + " outside [0," +
                          std::to_string(l) + "]");
  }
  int target = k;
  long long coeff = 0;
  switch (g) {
    case Sl2Gen::H:
      coeff = l - 2LL * k;
      break;
    case Sl2Gen::E:
      coeff = -static_cast<long long>(k);
      target = k - 1;
      break;
    case Sl2Gen::F:
      coeff = static_cast<long long>(k) - l;
      target = k + 1;
      break;
  }
  if (coeff == 0 || target < 0 || target > l) return std::nullopt;
  return std::pair<int, Rational>{target, Rational(coeff)};
}

Rational dual_coeff(int l, int k) {
  check_level(l);
  if (k < 0 || k > l) {
    throw IndexOutOfRange("basis index " + std::to_string(k) + " outside [0," +
                          std::to_string(l) + "]");
  }
  Rational r = make_rational(factorial(l - k) * factorial(k), factorial(l));
  return (k % 2 == 0) ? r : -r;
}

bool component_exists(int l, int m) {
  check_level(l);
  check_shift(m);
  return l >= 2 - m;
}

namespace {

// Numerator/denominator tables for A_{[l,2m;k,i]}; everything fits in
// 64 bits for the label sizes this library targets.
long long cg_a_num(int l, int m, int k, int i) {
  const long long L = l, K = k;
  switch (m) {
    case 2:
      switch (i) {
        case 0: return (L + 4 - K) * (L + 3 - K) * (L + 2 - K) * (L + 1 - K);
        case 1: return 4 * (L + 4 - K) * (L + 3 - K) * (L + 2 - K) * K;
        case 2: return 6 * (L + 4 - K) * (L + 3 - K) * K * (K - 1);
        case 3: return 4 * (L + 4 - K) * K * (K - 1) * (K - 2);
        case 4: return K * (K - 1) * (K - 2) * (K - 3);
      }
      break;
    case 1:
      switch (i) {
        case 0: return (L + 2 - K) * (L + 1 - K) * (L - K);
        case 1: return -(L + 2 - K) * (L + 1 - K) * (L - 4 * K);
        case 2: return -3 * (L + 2 - K) * (L - 2 * K + 2) * K;
        case 3: return -(3 * L - 4 * K + 8) * K * (K - 1);
        case 4: return -K * (K - 1) * (K - 2);
      }
      break;
    case 0:
      switch (i) {
        case 0: return (L - K) * (L - 1 - K);
        case 1: return -2 * (L - K) * (L - 2 * K - 1);
        case 2: return L * L - 6 * K * L + 6 * K * K - L;
        case 3: return 2 * (L - 2 * K + 1) * K;
        case 4: return K * (K - 1);
      }
      break;
    case -1:
      switch (i) {
        case 0: return L - K - 2;
        case 1: return -(3 * L - 4 * K - 6);
        case 2: return 3 * (L - 2 * K - 2);
        case 3: return -(L - 4 * K - 2);
        case 4: return -K;
      }
      break;
    case -2:
      switch (i) {
        case 0: return 1;
        case 1: return -4;
        case 2: return 6;
        case 3: return -4;
        case 4: return 1;
      }
      break;
  }
  return 0;
}

long long cg_a_den(int l, int m) {
  const long long L = l;
  switch (m) {
    case 2: return (L + 4) * (L + 3) * (L + 2) * (L + 1);
    case 1: return (L + 2) * (L + 1) * L;
    case 0: return L * (L - 1);
    case -1: return L - 2;
    case -2: return 1;
  }
  return 0;
}

long long cg_b_num(int l, int m, int q, int r) {
  const long long L = l, Q = q;
  switch (m) {
    case 2:
      return 1;
    case 1:
      switch (r) {
        case 0: return 4 * Q;
        case 1: return -(L - 4 * Q);
        case 2: return -2 * (L - 2 * Q);
        case 3: return -(3 * L - 4 * Q);
        case 4: return -4 * (L - Q);
      }
      break;
    case 0:
      switch (r) {
        case 0: return 6 * Q * (Q - 1);
        case 1: return -3 * Q * (L - 2 * Q + 1);
        case 2: return L * L - 6 * L * Q + 6 * Q * Q - L;
        case 3: return 3 * (L - 2 * Q - 1) * (L - Q);
        case 4: return 6 * (L - Q) * (L - Q - 1);
      }
      break;
    case -1:
      switch (r) {
        case 0: return 4 * Q * (Q - 1) * (Q - 2);
        case 1: return -Q * (Q - 1) * (3 * L - 4 * Q + 2);
        case 2: return 2 * Q * (L - 2 * Q) * (L - Q);
        case 3: return -(L - 4 * Q - 2) * (L - Q) * (L - Q - 1);
        case 4: return -4 * (L - Q) * (L - Q - 1) * (L - Q - 2);
      }
      break;
    case -2:
      switch (r) {
        case 0: return Q * (Q - 1) * (Q - 2) * (Q - 3);
        case 1: return -Q * (Q - 1) * (Q - 2) * (L - Q);
        case 2: return Q * (Q - 1) * (L - Q) * (L - Q - 1);
        case 3: return -Q * (L - Q) * (L - Q - 1) * (L - Q - 2);
        case 4: return (L - Q) * (L - Q - 1) * (L - Q - 2) * (L - Q - 3);
      }
      break;
  }
  return 0;
}

long long cg_b_den(int l, int m) {
  const long long L = l;
  switch (m) {
    case 2: return 1;
    case 1: return L + 4;
    case 0: return (L + 3) * (L + 2);
    case -1: return (L + 2) * (L + 1) * L;
    case -2: return (L + 1) * L * (L - 1) * (L - 2);
  }
  return 0;
}

}  // namespace

Rational cg_a(int l, int m, int k, int i) {
  check_level(l);
  check_shift(m);
  if (i < 0 || i > 4) throw IndexOutOfRange("tensor slot " + std::to_string(i));
  if (!component_exists(l, m)) {
    throw UndefinedComponent("V_{l+2m} does not occur in V_l (x) V_4 for l=" +
                             std::to_string(l) + ", m=" + std::to_string(m));
  }
  if (k < 0 || k > l + 2 * m) return Rational(0);
  return make_rational(cg_a_num(l, m, k, i), cg_a_den(l, m));
}

Rational cg_b(int l, int m, int q, int r) {
  check_level(l);
  check_shift(m);
  if (q < 0 || q > l) throw IndexOutOfRange("basis index " + std::to_string(q));
  if (r < 0 || r > 4) throw IndexOutOfRange("tensor slot " + std::to_string(r));
  if (!component_exists(l, m)) {
    throw UndefinedComponent("V_{l+2m} does not occur in V_l (x) V_4 for l=" +
                             std::to_string(l) + ", m=" + std::to_string(m));
  }
  return make_rational(cg_b_num(l, m, q, r), cg_b_den(l, m));
}

WeightVector WeightVector::basis(int l, int k) {
  check_level(l);
  if (k < 0 || k > l) throw IndexOutOfRange("basis index " + std::to_string(k));
  WeightVector v(l);
  v.coeffs[k] = Scalar(1);
  return v;
}

bool WeightVector::is_zero() const {
  for (const Scalar& c : coeffs) {
    if (!c.is_zero()) return false;
  }
  return true;
}

void TensorVector::add(int k, int i, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs.emplace(std::pair{k, i}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
  }
}

TensorVector injector_apply(int l, int m, const WeightVector& v) {
  check_level(l);
  check_shift(m);
  if (!component_exists(l, m)) {
    throw UndefinedComponent("no component for l=" + std::to_string(l) +
                             ", m=" + std::to_string(m));
  }
  if (v.l != l + 2 * m) {
    throw ShapeMismatch("injector source has degree " + std::to_string(v.l) +
                        ", expected " + std::to_string(l + 2 * m));
  }
  TensorVector out;
  out.l = l;
  for (int k = 0; k <= v.l; ++k) {
    const Scalar& c = v.coeffs[k];
    if (c.is_zero()) continue;
    for (int i = 0; i <= 4; ++i) {
      const int target = k + 2 - m - i;
      if (target < 0 || target > l) continue;
      const Rational a = cg_a(l, m, k, i);
      if (a == 0) continue;
      out.add(target, i, c * GaussianRational(a));
    }
  }
  return out;
}

WeightVector projector_apply(int l, int m, const TensorVector& t) {
  check_level(l);
  check_shift(m);
  if (!component_exists(l, m)) {
    throw UndefinedComponent("no component for l=" + std::to_string(l) +
                             ", m=" + std::to_string(m));
  }
  if (t.l != l) {
    throw ShapeMismatch("projector source lies in V_" + std::to_string(t.l) +
                        " (x) V_4, expected V_" + std::to_string(l));
  }
  WeightVector out(l + 2 * m);
  for (const auto& [kv, c] : t.coeffs) {
    const auto [q, r] = kv;
    const Rational b = cg_b(l, m, q, r);
    if (b == 0) continue;
    const int target = q + r + m - 2;
    // The coefficient formulas vanish whenever the target leaves the range.
    if (target < 0 || target > l + 2 * m) {
      throw ShapeMismatch("nonzero projection outside the target basis");
    }
    out.coeffs[target] += c * GaussianRational(b);
  }
  return out;
}

WeightVector weight_act(Sl2Gen g, const WeightVector& v) {
  WeightVector out(v.l);
  for (int k = 0; k <= v.l; ++k) {
    if (v.coeffs[k].is_zero()) continue;
    if (auto term = tau_act(g, v.l, k)) {
      out.coeffs[term->first] += v.coeffs[k] * GaussianRational(term->second);
    }
  }
  return out;
}

TensorVector tensor_act(Sl2Gen g, const TensorVector& t) {
  TensorVector out;
  out.l = t.l;
  for (const auto& [kv, c] : t.coeffs) {
    const auto [k, i] = kv;
    if (auto term = tau_act(g, t.l, k)) {
      out.add(term->first, i, c * GaussianRational(term->second));
    }
    if (auto term = tau_act(g, 4, i)) {
      out.add(k, term->first, c * GaussianRational(term->second));
    }
  }
  return out;
}

}  // namespace gksl3
