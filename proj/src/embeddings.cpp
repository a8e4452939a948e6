#include "embeddings.hpp"

#include <algorithm>
#include <stdexcept>

namespace soclelab {

namespace {

Rational fact(long n) {
  Rational r = 1;
  for (long k = 2; k <= n; ++k) r *= k;
  return r;
}

long to_long(const Rational& r, const char* what) {
  Rational c = r;
  c.canonicalize();
  if (c.get_den() != 1)
    throw CaseMismatch(std::string(what) + " must be integral");
  return c.get_num().get_si();
}

std::array<Rational, 3> nu3_of(const PrincipalSeries& ps) {
  if (ps.group != Group::SL3 || ps.nu.size() != 3)
    throw std::invalid_argument("expected an SL3 series");
  return {ps.nu[0], ps.nu[1], ps.nu[2]};
}

std::array<Rational, 2> nu2_of(const PrincipalSeries& ps) {
  if (ps.group != Group::SP2 || ps.nu.size() != 2)
    throw std::invalid_argument("expected an SP2 series");
  return {ps.nu[0], ps.nu[1]};
}

// Joint kernel over a sigma-isotypic basis given the composed matrices.
std::vector<KTypeVector> joint_kernel(
    const std::vector<std::map<int, Rational>>& sig_basis,
    const std::vector<ShiftMatrix>& mats, Sigma sigma) {
  std::size_t cols = sig_basis.size();
  std::size_t rows = 0;
  for (const auto& m : mats) rows += m.tgt.size();
  ExactMatrix T(rows, cols);
  std::size_t r0 = 0;
  for (const auto& m : mats) {
    for (std::size_t k = 0; k < cols; ++k) {
      for (const auto& [q, val] : m.apply(sig_basis[k]))
        T.at(r0 + m.tgt.index(q), k) = val;
    }
    r0 += m.tgt.size();
  }
  std::vector<KTypeVector> out;
  for (const auto& combo : T.nullspace()) {
    KTypeVector v;
    v.sigma = sigma.normalized();
    for (std::size_t k = 0; k < cols; ++k) {
      if (combo[k] == 0) continue;
      for (const auto& [q, c] : sig_basis[k]) v.coeff[q] += combo[k] * c;
    }
    std::erase_if(v.coeff, [](const auto& e) { return e.second == 0; });
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

KernelSolution kernel_system(const PrincipalSeries& ps, long lam,
                             const std::vector<std::vector<int>>& tests) {
  auto nu = nu3_of(ps);
  KernelSolution out;
  out.ps = ps;
  out.lam_sl3 = lam;
  auto sig_basis = m_isotypic_so3((int)lam, ps.sigma);
  if (sig_basis.empty()) return out;
  std::vector<ShiftMatrix> mats;
  for (const auto& seq : tests) mats.push_back(compose(lam, nu, seq));
  out.basis = joint_kernel(sig_basis, mats, ps.sigma);
  return out;
}

KernelSolution kernel_system(const PrincipalSeries& ps, U2Weight lam,
                             const std::vector<std::vector<Sp2Dir>>& tests) {
  auto nu = nu2_of(ps);
  KernelSolution out;
  out.ps = ps;
  out.lam_sp2 = lam;
  if (!sigma_occurs_u2(lam, ps.sigma)) return out;
  // The series realizes the contragredient string q in [-l1,-l2]; negate the
  // module-side labels (parity, hence the sigma part, is unchanged).
  std::vector<std::map<int, Rational>> sig_basis;
  for (int q : m_isotypic_u2(lam, ps.sigma))
    sig_basis.push_back({{-q, Rational(1)}});
  std::vector<ShiftMatrix> mats;
  for (const auto& seq : tests) mats.push_back(compose(lam, nu, seq));
  out.basis = joint_kernel(sig_basis, mats, ps.sigma);
  return out;
}

std::vector<KTypeVector> closed_form_solutions_sl3(
    const std::string& tag, long lam, const std::array<Rational, 3>& nu) {
  const Rational L(lam);
  const Rational c12 = nu[0] - nu[1] + 1;
  const Rational c13 = nu[0] - nu[2] + 1;
  const Rational c23 = nu[1] - nu[2] + 1;
  auto require = [&](bool cond, const char* msg) {
    if (!cond) throw CaseMismatch(msg);
  };
  std::vector<KTypeVector> out;

  if (tag == "eq12") {
    require(L == c12 && L != c13 && L != c23, "eq12 hypothesis fails");
    for (int i = 0; i <= 1; ++i) {
      KTypeVector v;
      v.coeff[(int)lam] = 1;
      v.coeff[(int)-lam] = (i == 0) ? 1 : -1;
      v.sigma = Sigma{i, (int)lam + i}.normalized();
      out.push_back(std::move(v));
    }
    return out;
  }

  if (tag == "generic") {
    require(lam >= 3 && L != c12 && L != c13 && L != c23,
            "generic hypothesis fails");
    return out;
  }

  if (tag == "lambda2") {
    require(lam == 2 && L != c12 && L != c13 && L != c23,
            "lambda2 hypothesis fails");
    KTypeVector v;
    Rational r =
        (nu[0] + nu[1] - 2 * nu[2] - 3) / (nu[0] - nu[1] - 1) / 6;
    v.coeff[2] = r;
    v.coeff[0] = 1;
    v.coeff[-2] = r;
    v.sigma = Sigma{0, 0};
    out.push_back(std::move(v));
    return out;
  }

  if (tag == "eq23" || tag == "eq23-eq12") {
    bool coincide = (tag == "eq23-eq12");
    require(L == c23 && (coincide ? L == c12 : L != c12),
            "eq23 hypothesis fails");
    if (coincide) {
      for (int i = 0; i <= 1; ++i) {
        KTypeVector v;
        v.coeff[(int)lam] = 1;
        v.coeff[(int)-lam] = (i == 0) ? 1 : -1;
        v.sigma = Sigma{i, (int)lam + i}.normalized();
        out.push_back(std::move(v));
      }
    }
    for (int i = 0; i <= 1; ++i) {
      KTypeVector v;
      for (long k = 0; k <= lam - i; ++k)
        v.coeff[(int)(lam - i - 2 * k)] =
            falling_factorial(Rational(2 * lam - i), (unsigned)(2 * k)) /
            fact(2 * k + i);
      v.sigma = Sigma{i, (int)lam}.normalized();
      out.push_back(std::move(v));
    }
    return out;
  }

  if (tag == "eq13-ordered" || tag == "eq13-mixed") {
    require(L == c13, "eq13 hypothesis fails");
    bool ordered = nu[0] > nu[1] && nu[1] > nu[2];
    bool mixed = (nu[1] > nu[0] && nu[0] > nu[2]) ||
                 (nu[0] > nu[2] && nu[2] > nu[1]);
    require(tag == "eq13-ordered" ? ordered : mixed,
            "eq13 ordering hypothesis fails");
    long d = to_long(nu[0] - nu[1], "nu1-nu2");
    // Even branch: coefficients Gamma((d+1+q)/2)/Gamma((-d+1+q)/2) over
    // factorials; the arguments are half-integers, so there are no poles,
    // and denominator poles of the ratio mean a zero coefficient.
    KTypeVector even;
    for (long q = -lam; q <= lam; ++q) {
      if (((q - d) % 2 + 2) % 2 != 0) continue;
      Rational c = gamma_ratio(d + 1 + q, -d + 1 + q) /
                   (fact(lam + q) * fact(lam - q));
      if (c != 0) even.coeff[(int)q] = c;
    }
    even.sigma = Sigma{(int)(lam % 2), (int)(((lam - d) % 2 + 2) % 2)};
    if (tag == "eq13-mixed") {
      // w0 and w1.
      if (!even.coeff.empty()) out.push_back(even);
      // Odd branch: 1/(Gamma((e-q)/2) Gamma((e+q)/2)) with e = nu2-nu1+1,
      // up to an overall constant, alternating in steps of two.  Coefficients
      // with more Gamma-poles than the minimum over the string vanish to
      // higher order and are dropped; the surviving ones are ratios relative
      // to a base point, with pole factors paired against pole factors so
      // each ratio is a finite limit.
      long e = 1 - d;
      long qpar = -lam + ((((-lam - d - 1) % 2) + 2) % 2);  // lowest odd-branch q
      auto pole = [](long x2) { return x2 % 2 == 0 && x2 <= 0; };
      auto order = [&](long q) {
        return (pole(e - q) ? 1 : 0) + (pole(e + q) ? 1 : 0);
      };
      long omin = 3, qb = lam + 1;
      for (long q = qpar; q <= lam; q += 2)
        if (order(q) < omin) {
          omin = order(q);
          qb = q;
        }
      KTypeVector odd;
      if (qb <= lam) {
        for (long q = qpar; q <= lam; q += 2) {
          if (order(q) != omin) continue;
          long y1 = e - q, y2 = e + q;
          if (pole(e - qb) != pole(y1)) std::swap(y1, y2);
          Rational s = ((q - qpar) / 2) % 2 == 0 ? 1 : -1;
          Rational c = s * gamma_ratio(e - qb, y1) * gamma_ratio(e + qb, y2) /
                       (fact(lam + q) * fact(lam - q));
          if (c != 0) odd.coeff[(int)q] = c;
        }
      }
      odd.sigma = Sigma{(int)(lam % 2), (int)(((lam - d + 1) % 2 + 2) % 2)};
      if (!odd.coeff.empty()) out.push_back(odd);
      return out;
    }
    // Ordered case: the even-branch vector plus the sigma-split pair built
    // from the one-sided tails at q >= d+1.
    if (!even.coeff.empty()) out.push_back(even);
    std::map<int, Rational> tail;
    for (long q = d + 1; q <= lam; q += 2) {
      Rational c = gamma_ratio(d + 1 + q, -d + 1 + q) /
                   (fact(lam + q) * fact(lam - q));
      if (c != 0) tail[(int)q] = c;
    }
    for (int i = 0; i <= 1; ++i) {
      KTypeVector v;
      for (const auto& [q, c] : tail) {
        v.coeff[q] += c;
        v.coeff[-q] += (i == 0) ? c : -c;
      }
      std::erase_if(v.coeff, [](const auto& p) { return p.second == 0; });
      v.sigma = Sigma{(int)(((lam - d - 1 + i) % 2 + 2) % 2),
                      (int)((lam + i) % 2)};
      if (!v.coeff.empty()) out.push_back(std::move(v));
    }
    return out;
  }

  throw std::invalid_argument("unknown closed-form tag: " + tag);
}

std::pair<long, std::vector<std::vector<int>>> embedding_tests_sl3(
    const std::string& id, const std::array<long, 3>& Lambda) {
  long lam = min_ktype_sl3(id, Lambda);
  std::vector<std::vector<int>> tests;
  for (int d : {-2, -1, 1, 2}) {
    long t = lam + d;
    if (t < 0) continue;
    if (mult_irreducible_sl3(id, Lambda, t) == 0) {
      tests.push_back({d});
      continue;
    }
    // One step stays inside the spectrum: test the two-step escapes.
    for (int d2 : {-2, -1, 1, 2}) {
      long u = t + d2;
      if (u < 0) continue;
      if (mult_irreducible_sl3(id, Lambda, u) == 0) tests.push_back({d, d2});
    }
  }
  return {lam, tests};
}

std::pair<U2Weight, std::vector<std::vector<Sp2Dir>>> embedding_tests_sp2(
    const std::string& id, const std::array<long, 2>& Lambda) {
  static const std::map<std::string, U2Weight> test_ktype{
      {"g0", {3, -1}},  {"g1", {1, -3}},   {"g2", {3, 3}},
      {"g3", {-3, -3}}, {"g4", {2, -2}},   {"g5", {3, 1}},
      {"g6", {-1, -3}}, {"g7", {2, 0}},    {"g8", {0, -2}},
      {"g9", {0, -2}},  {"g10", {0, 0}},   {"g11", {-1, -1}},
      {"g0p", {3, 2}},  {"g1p", {-2, -3}}, {"g2p", {2, 1}},
      {"g3p", {-1, -2}}, {"g4p", {1, 0}}};
  auto it = test_ktype.find(id);
  U2Weight t = it != test_ktype.end() ? it->second : min_ktype_sp2(id, Lambda);
  static const std::vector<Sp2Dir> dirs{{2, 0},  {1, 1},   {0, 2},
                                        {0, -2}, {-1, -1}, {-2, 0}};
  std::vector<std::vector<Sp2Dir>> tests;
  for (const auto& d : dirs) {
    U2Weight u{t.l1 + d[0], t.l2 + d[1]};
    if (!u.valid()) continue;
    if (mult_irreducible_sp2(id, Lambda, u) == 0) {
      tests.push_back({d});
      continue;
    }
    // One step stays inside the spectrum: test the two-step escapes.
    for (const auto& d2 : dirs) {
      U2Weight w{u.l1 + d2[0], u.l2 + d2[1]};
      if (!w.valid()) continue;
      if (mult_irreducible_sp2(id, Lambda, w) == 0) tests.push_back({d, d2});
    }
  }
  return {t, tests};
}

namespace {

bool passes_sl3(const std::string& id, const std::string& family,
                const std::string& pattern, const std::array<long, 3>& L) {
  PrincipalSeries inst =
      series_instance(Group::SL3, family, pattern, {L[0], L[1], L[2]});
  auto [lam, tests] = embedding_tests_sl3(id, L);
  return !kernel_system(inst, lam, tests).basis.empty();
}

bool passes_sp2(const std::string& id, const std::string& family,
                const std::string& pattern, const std::array<long, 2>& L) {
  PrincipalSeries inst =
      series_instance(Group::SP2, family, pattern, {L[0], L[1]});
  auto [t, tests] = embedding_tests_sp2(id, L);
  return !kernel_system(inst, t, tests).basis.empty();
}

bool self_twist(const PrincipalSeries& ps) {
  PrincipalSeries tw = mu_twist(ps);
  return tw.sigma == ps.sigma && tw.nu == ps.nu;
}

}  // namespace

std::vector<CandidateEntry> candidate_submodules(const PrincipalSeries& ps) {
  SeriesId sid = identify_series(ps);
  std::vector<std::string> factors;
  for (const auto& f : catalog_entry(ps.group, sid.family).composition)
    if (std::find(factors.begin(), factors.end(), f) == factors.end())
      factors.push_back(f);

  std::map<std::string, bool> pass;
  for (const auto& id : factors) pass[id] = true;

  auto apply_pair_filter = [&](const PrincipalSeries& inst,
                               std::map<std::string, bool>& p) {
    if (!self_twist(inst)) return;
    std::map<std::string, bool> snap = p;
    for (const auto& id : factors) {
      std::string partner = quasidual_factor(ps.group, id);
      if (partner != id && !snap[partner]) p[id] = false;
    }
  };

  if (ps.group == Group::SL3) {
    const std::vector<std::array<long, 3>> refs{{1, 0, -1}, {2, 0, -1}};
    for (const auto& L : refs) {
      std::map<std::string, bool> ref_pass;
      for (const auto& id : factors)
        ref_pass[id] = passes_sl3(id, sid.family, sid.pattern, L);
      PrincipalSeries inst =
          series_instance(Group::SL3, sid.family, sid.pattern,
                          {L[0], L[1], L[2]});
      apply_pair_filter(inst, ref_pass);
      for (const auto& id : factors) pass[id] = pass[id] && ref_pass[id];
    }
  } else {
    const std::array<long, 2> L{2, 1};
    for (const auto& id : factors)
      pass[id] = passes_sp2(id, sid.family, sid.pattern, L);
    PrincipalSeries inst =
        series_instance(Group::SP2, sid.family, sid.pattern, {L[0], L[1]});
    apply_pair_filter(inst, pass);
  }

  std::vector<CandidateEntry> out;
  for (const auto& id : factors)
    if (pass[id]) out.push_back({id, CandidateStatus::Confirmed});
  return out;
}

}  // namespace soclelab
