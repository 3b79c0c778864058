#include "gksl3/module.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <random>
#include <thread>

namespace gksl3 {

namespace {

int parity(int n) { return ((n % 2) + 2) % 2; }

std::string index_str(const ElementaryIndex& idx) {
  return "e(" + std::to_string(idx.l) + ";" + std::to_string(idx.p) + "," +
         std::to_string(idx.q) + ")";
}

void check_p_index(int r) {
  if (r < 0 || r > 4) {
    throw IndexOutOfRange("p_C basis index " + std::to_string(r));
  }
}

void enforce_truncation(const ModuleVector& v, const Truncation& tr) {
  if (v.max_level() > tr.l_max) {
    throw TruncationLeak("nonzero term at level " +
                         std::to_string(v.max_level()) +
                         " escapes the window l_max=" +
                         std::to_string(tr.l_max));
  }
}

// X_r . e(l;p,q), exact and untruncated.
ModuleVector act_p_elementary(const SeriesParams& sp, int r, int l, int p,
                              int q) {
  ModuleVector out;
  for (int m = -2; m <= 2; ++m) {
    if (2 * l < 2 - m) continue;
    const Rational b = cg_b(2 * l, m, q, r);
    if (b == 0) continue;
    for (int j = -1; j <= 1; ++j) {
      Scalar g = gamma_coeff(sp, l, m, p, j);
      if (g.is_zero()) continue;
      const NormalizedIndex ni =
          normalize_index(sp, l + m, p + m + 2 * j, q + m + r - 2);
      if (ni.sign == 0) continue;
      Scalar term = g * Scalar(GaussianRational(b));
      if (ni.sign < 0) term = -term;
      out.add(ni.idx, term);
    }
  }
  return out;
}

int thread_count() {
  const char* env = std::getenv("GK_SL3_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0') return 1;
  if (v <= 0) {
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
  }
  return static_cast<int>(v);
}

}  // namespace

NormalizedIndex normalize_index(const SeriesParams& sp, int l, int p, int q) {
  NormalizedIndex out;
  out.idx = {l, p, q};
  if (l < 0 || q < 0 || q > 2 * l) return out;
  int sign = 1;
  if (sp.series == Series::P0) {
    if (p > l) {
      if (epsilon(sp, l) == 1) sign = -sign;
      p = 2 * l - p;
    }
    if (!z_membership(sp, l, p)) return out;
  } else {
    if (p < 0 || p > l - sp.k || parity(p - (l - sp.k)) != 0) return out;
  }
  out.sign = sign;
  out.idx = {l, p, q};
  return out;
}

ModuleVector ModuleVector::basis(const SeriesParams& sp, int l, int p, int q) {
  ModuleVector out;
  const NormalizedIndex ni = normalize_index(sp, l, p, q);
  if (ni.sign != 0) out.add(ni.idx, Scalar(ni.sign));
  return out;
}

void ModuleVector::add(const ElementaryIndex& idx, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(idx, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void ModuleVector::add_scaled(const ModuleVector& v, const Scalar& c) {
  if (c.is_zero()) return;
  for (const auto& [idx, coeff] : v.terms_) add(idx, coeff * c);
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& rhs) {
  for (const auto& [idx, coeff] : rhs.terms_) add(idx, coeff);
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& rhs) {
  for (const auto& [idx, coeff] : rhs.terms_) add(idx, -coeff);
  return *this;
}

ModuleVector& ModuleVector::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [idx, coeff] : terms_) coeff = coeff * c;
  return *this;
}

int ModuleVector::max_level() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.l;
}

std::string ModuleVector::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [idx, coeff] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + coeff.str() + ")*" + index_str(idx);
  }
  return out;
}

ModuleVector act_k(const SeriesParams& sp, Sl2Gen g, const ModuleVector& v) {
  ModuleVector out;
  for (const auto& [idx, coeff] : v.terms()) {
    const auto term = tau_act(g, 2 * idx.l, idx.q);
    if (!term) continue;
    out.add({idx.l, idx.p, term->first},
            coeff * Scalar(GaussianRational(term->second)));
  }
  return out;
}

ModuleVector act_p(const SeriesParams& sp, int r, const ModuleVector& v,
                   const Truncation& tr) {
  check_p_index(r);
  ModuleVector out;
  for (const auto& [idx, coeff] : v.terms()) {
    out.add_scaled(act_p_elementary(sp, r, idx.l, idx.p, idx.q), coeff);
  }
  enforce_truncation(out, tr);
  return out;
}

ModuleVector act_gc(const SeriesParams& sp, const LieMatrix& x,
                    const ModuleVector& v, const Truncation& tr) {
  if (!x.is_traceless()) throw NotInGc("matrix has nonzero trace");
  const GaussianRational half(make_rational(1, 2));
  const LieMatrix xt = x.transpose();
  const std::array<GaussianRational, 3> kc = kc_decompose((x - xt) * half);
  const std::array<GaussianRational, 5> pc = pc_decompose((x + xt) * half);

  static constexpr Sl2Gen kGens[3] = {Sl2Gen::E, Sl2Gen::H, Sl2Gen::F};
  ModuleVector out;
  for (int i = 0; i < 3; ++i) {
    if (kc[i].is_zero()) continue;
    out.add_scaled(act_k(sp, kGens[i], v), Scalar(kc[i]));
  }
  for (int r = 0; r < 5; ++r) {
    if (pc[r].is_zero()) continue;
    out.add_scaled(act_p(sp, r, v, tr), Scalar(pc[r]));
  }
  return out;
}

ActPCache::ActPCache(const SeriesParams& sp, int l_cap)
    : sp_(sp), l_cap_(l_cap) {
  for (int l = 0; l <= l_cap; ++l) {
    if (multiplicity(sp, l) <= 0) continue;
    const KTypeInfo info = ktype_info(sp, l);
    for (int p : info.p_list) {
      for (int q = 0; q <= 2 * l; ++q) {
        for (int r = 0; r < 5; ++r) {
          table_[{r, l, p, q}] = act_p_elementary(sp, r, l, p, q);
        }
      }
    }
  }
}

const ModuleVector& ActPCache::get(int r, int l, int p, int q) const {
  const auto it = table_.find({r, l, p, q});
  if (it == table_.end()) {
    throw IndexOutOfRange("uncached p_C action X" + std::to_string(r) + "." +
                          index_str({l, p, q}));
  }
  return it->second;
}

ModuleVector ActPCache::apply(int r, const ModuleVector& v) const {
  check_p_index(r);
  ModuleVector out;
  for (const auto& [idx, coeff] : v.terms()) {
    out.add_scaled(get(r, idx.l, idx.p, idx.q), coeff);
  }
  return out;
}

VerifyReport verify_brackets(const SeriesParams& sp, int l_max) {
  if (l_max < 0) throw IndexOutOfRange("negative level window");
  VerifyReport rep;
  rep.params = sp;
  rep.l_max = l_max;

  const ActPCache cache(sp, std::max(0, l_max - 2));

  // type 0: [X_a, X_b] on levels <= l_max-4; type 1: [g_a, X_b] on <= l_max-2.
  struct TaskSpec {
    int type;
    int a;
    int b;
  };
  std::vector<TaskSpec> tasks;
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) tasks.push_back({0, a, b});
  }
  for (int g = 0; g < 3; ++g) {
    for (int b = 0; b < 5; ++b) tasks.push_back({1, g, b});
  }
  rep.checks.resize(tasks.size());

  static constexpr Sl2Gen kGens[3] = {Sl2Gen::E, Sl2Gen::H, Sl2Gen::F};
  static constexpr const char* kGenNames[3] = {"E", "H", "F"};

  const auto run_task = [&](const TaskSpec& t, IdentityCheck& out) {
    try {
      const int l_cap = t.type == 0 ? l_max - 4 : l_max - 2;
      out.kind = t.type == 0 ? "pp" : "kp";
      out.label = t.type == 0
                      ? "[X" + std::to_string(t.a) + ",X" + std::to_string(t.b) + "]"
                      : "[" + std::string(kGenNames[t.a]) + ",X" +
                            std::to_string(t.b) + "]";
      std::array<GaussianRational, 3> kc{};
      std::array<GaussianRational, 5> pc{};
      if (t.type == 0) {
        kc = kc_decompose(bracket(X(t.a), X(t.b)));
      } else {
        pc = pc_decompose(bracket(dphi(kGens[t.a]), X(t.b)));
      }
      for (int l = 0; l <= l_cap; ++l) {
        if (multiplicity(sp, l) <= 0) continue;
        const KTypeInfo info = ktype_info(sp, l);
        for (int p : info.p_list) {
          for (int q = 0; q <= 2 * l; ++q) {
            const ModuleVector v = ModuleVector::basis(sp, l, p, q);
            ModuleVector lhs;
            ModuleVector rhs;
            if (t.type == 0) {
              for (int i = 0; i < 3; ++i) {
                if (kc[i].is_zero()) continue;
                lhs.add_scaled(act_k(sp, kGens[i], v), Scalar(kc[i]));
              }
              rhs = cache.apply(t.a, cache.apply(t.b, v)) -
                    cache.apply(t.b, cache.apply(t.a, v));
            } else {
              for (int r = 0; r < 5; ++r) {
                if (pc[r].is_zero()) continue;
                lhs.add_scaled(cache.apply(r, v), Scalar(pc[r]));
              }
              rhs = act_k(sp, kGens[t.a], cache.apply(t.b, v)) -
                    cache.apply(t.b, act_k(sp, kGens[t.a], v));
            }
            ++out.checked;
            if (!(lhs == rhs)) {
              out.passed = false;
              out.failure = index_str({l, p, q}) + ": lhs - rhs = " +
                            (lhs - rhs).str();
              return;
            }
          }
        }
      }
      out.passed = true;
    } catch (const std::exception& e) {
      out.passed = false;
      out.failure = std::string("exception: ") + e.what();
    }
  };

  const int threads =
      std::min<int>(thread_count(), static_cast<int>(tasks.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      run_task(tasks[i], rep.checks[i]);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= tasks.size()) break;
          run_task(tasks[i], rep.checks[i]);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  rep.all_passed = std::all_of(rep.checks.begin(), rep.checks.end(),
                               [](const IdentityCheck& c) { return c.passed; });
  return rep;
}

std::vector<GaussianRational> seeded_gaussian_rationals(std::uint64_t seed,
                                                        int count) {
  if (count < 0) throw IndexOutOfRange("negative count");
  std::mt19937_64 rng(seed);
  std::vector<GaussianRational> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const int re_num = static_cast<int>(rng() % 19) - 9;
    const int re_den = static_cast<int>(rng() % 9) + 1;
    const int im_num = static_cast<int>(rng() % 19) - 9;
    const int im_den = static_cast<int>(rng() % 9) + 1;
    out.emplace_back(make_rational(re_num, re_den),
                     make_rational(im_num, im_den));
  }
  return out;
}

}  // namespace gksl3
