#include "gksl3/gamma.hpp"

#include <optional>
#include <string>

#include "gksl3/su2.hpp"

namespace gksl3 {

namespace {

int parity(int n) { return ((n % 2) + 2) % 2; }

// rho(P0) = (2,1); rho(P1) = rho(P2) = 3.
constexpr int kRho01 = 2;
constexpr int kRho02 = 1;
constexpr int kRhoI = 3;

Rational cg_a_or_zero(int l2, int m, int k, int i) {
  if (k < 0 || k > l2 + 2 * m) return Rational(0);
  return cg_a(l2, m, k, i);
}

}  // namespace

Scalar gamma_coeff(const SeriesParams& sp, int l, int m, int p, int j) {
  if (l < 0) throw IndexOutOfRange("negative level " + std::to_string(l));
  if (m < -2 || m > 2) throw BadShift("level shift " + std::to_string(m));
  if (j < -1 || j > 1) throw IndexOutOfRange("band index " + std::to_string(j));
  // Shifts onto a component absent from V_{2l} (x) V_4 contribute zero.
  if (2 * l < 2 - m) return Scalar();

  Rational a;
  Scalar factor;
  switch (j) {
    case 1:
      a = cg_a_or_zero(2 * l, m, 2 * l - p + m - 2, 0);
      break;
    case 0:
      a = cg_a_or_zero(2 * l, m, 2 * l - p + m, 2);
      break;
    case -1:
      a = cg_a_or_zero(2 * l, m, 2 * l - p + m + 2, 4);
      break;
  }
  if (a == 0) return Scalar();

  const int weight = l * m - 3 + m * (m + 1) / 2;
  if (sp.series == Series::P0) {
    switch (j) {
      case 1:
        factor = sp.nu_b + Scalar(kRho02 - l + p);
        break;
      case 0:
        factor = Scalar(2) * sp.nu_a - sp.nu_b +
                 Scalar(2 * kRho01 - kRho02 + weight);
        factor = factor * GaussianRational(make_rational(-1, 3));
        break;
      case -1:
        factor = sp.nu_b + Scalar(kRho02 + l - p);
        break;
    }
  } else {
    // (-1)^i twists, with i = 1 for P1 and i = 2 for P2.
    const int si = sp.series == Series::P1 ? -1 : 1;
    switch (j) {
      case 1:
        factor = Scalar(-si * (sp.k - l + p));
        break;
      case 0:
        factor = sp.nu_a + Scalar(kRhoI + weight);
        factor = factor * GaussianRational(make_rational(si, 3));
        break;
      case -1:
        factor = Scalar(-si * (sp.k + l - p));
        break;
    }
  }
  return factor * GaussianRational(a);
}

const Scalar& GammaMatrix::at(int r, int c) const {
  if (r < 0 || r >= rows || c < 0 || c >= cols) {
    throw IndexOutOfRange("matrix entry (" + std::to_string(r) + "," +
                          std::to_string(c) + ")");
  }
  return entries[static_cast<std::size_t>(r) * cols + c];
}

GammaMatrix gamma_matrix(const SeriesParams& sp, int l, int m,
                         const GammaOptions& opts) {
  if (l < 0) throw IndexOutOfRange("negative level " + std::to_string(l));
  if (m < -2 || m > 2) throw BadShift("level shift " + std::to_string(m));
  const int d = multiplicity(sp, l);
  if (d <= 0) {
    throw EmptyBlock("no K-type at level " + std::to_string(l) + " in " + sp.label());
  }
  if (l + m < 0 || multiplicity(sp, l + m) <= 0) {
    throw EmptyBlock("no K-type at level " + std::to_string(l + m) + " in " +
                     sp.label());
  }
  const int dlm = multiplicity(sp, l + m);
  const int n = row_offset(sp, l, m);
  const int dl = delta(sp, l);

  // Shape of the stacked block and the reflection corner.  The corner cell
  // is placed by the row of the reflected index directly, which also covers
  // the low-multiplicity blocks where the printed basis-vector notation
  // degenerates.
  int stack_rows = d + 1;
  int t2_len = d;
  int t3_len = d - 1;
  std::optional<std::pair<int, int>> corner_cell;
  Scalar corner_value;

  if (sp.series == Series::P0 && sp.sigma2 == 1) {
    corner_cell = {d, d - 1};
    corner_value = gamma_coeff(sp, l, m, l - 1, 1);
    if (epsilon(sp, l + m) == 1) corner_value = -corner_value;
  } else if (sp.series == Series::P0) {
    const int key = opts.case_key == GammaCaseKey::HeaderParity
                        ? parity(sp.sigma1 + l)
                        : parity(sp.sigma2 + l);
    if (parity(m) == 0) {
      if (key == 0) {
        corner_cell = {d - 1, d - 1};
        corner_value = gamma_coeff(sp, l, m, l, 1);
        if (epsilon(sp, l + m) == 1) corner_value = -corner_value;
      }
    } else if (key == 0) {
      stack_rows = d;
      t2_len = d - 1;
      t3_len = d - 2;
      corner_cell = {d - 1, d - 1};
      corner_value = gamma_coeff(sp, l, m, l, 1);
      if (epsilon(sp, l + m) == 1) corner_value = -corner_value;
    } else {
      stack_rows = d + 2;
      t3_len = d;
    }
  }

  if (stack_rows != n + dlm) {
    throw CaseMismatch("stacked height " + std::to_string(stack_rows) +
                       " != " + std::to_string(n) + " + " + std::to_string(dlm) +
                       " for " + sp.label() + " l=" + std::to_string(l) +
                       " m=" + std::to_string(m));
  }

  std::vector<Scalar> stack(static_cast<std::size_t>(stack_rows) * d);
  auto cell = [&](int r, int c) -> Scalar& {
    return stack[static_cast<std::size_t>(r) * d + c];
  };
  for (int c = 0; c < d; ++c) {
    const int p = dl + 2 * c;
    cell(c, c) += gamma_coeff(sp, l, m, p, -1);
    if (c < t2_len) cell(c + 1, c) += gamma_coeff(sp, l, m, p, 0);
    if (c < t3_len) cell(c + 2, c) += gamma_coeff(sp, l, m, p, 1);
  }
  if (corner_cell) cell(corner_cell->first, corner_cell->second) += corner_value;

  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < d; ++c) {
      if (!cell(r, c).is_zero()) {
        throw ZeroRowViolation("stacked row " + std::to_string(r) + ", column " +
                               std::to_string(c) + " is " + cell(r, c).str() +
                               " for " + sp.label() + " l=" + std::to_string(l) +
                               " m=" + std::to_string(m));
      }
    }
  }

  GammaMatrix out;
  out.params = sp;
  out.l = l;
  out.m = m;
  out.rows = dlm;
  out.cols = d;
  out.n = n;
  out.delta = dl;
  out.entries.assign(stack.begin() + static_cast<std::ptrdiff_t>(n) * d,
                     stack.end());
  return out;
}

Rational IotaMatrix::entry(int r, int c) const {
  if (r < 0 || r >= rows || c < 0 || c >= cols) {
    throw IndexOutOfRange("matrix entry (" + std::to_string(r) + "," +
                          std::to_string(c) + ")");
  }
  for (const auto& [rc, v] : entries) {
    if (rc.first == r && rc.second == c) return v;
  }
  return Rational(0);
}

IotaMatrix iota_matrix(int l, int m, int i) {
  if (l < 0) throw IndexOutOfRange("negative level " + std::to_string(l));
  if (i < 0 || i > 4) throw IndexOutOfRange("tensor slot " + std::to_string(i));
  if (m < -2 || m > 2) throw BadShift("level shift " + std::to_string(m));
  if (!component_exists(2 * l, m)) {
    throw UndefinedComponent("V_{2(l+m)} does not occur in V_{2l} (x) V_4 for l=" +
                             std::to_string(l) + ", m=" + std::to_string(m));
  }
  IotaMatrix out;
  out.l = l;
  out.m = m;
  out.i = i;
  out.rows = 2 * (l + m) + 1;
  out.cols = 2 * l + 1;
  for (int q = 0; q < out.cols; ++q) {
    const int r = i + q + m - 2;
    if (r < 0 || r >= out.rows) continue;
    Rational v = cg_a(2 * l, m, r, i);
    if (v == 0) continue;
    out.entries.push_back({{r, q}, std::move(v)});
  }
  return out;
}

}  // namespace gksl3
