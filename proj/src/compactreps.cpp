#include "compactreps.hpp"

#include <stdexcept>

namespace soclelab {

namespace {

Rational half_int(long t2) {
  Rational r(t2, 2);
  r.canonicalize();
  return r;
}

Rational factorial(long n) {
  Rational out(1);
  for (long i = 2; i <= n; ++i) out *= Rational(i);
  return out;
}

Rational pow_rational(const Rational& a, long e) {
  if (e < 0) {
    if (a == 0) throw std::domain_error("zero torus parameter");
    return Rational(1) / pow_rational(a, -e);
  }
  Rational out(1);
  for (long i = 0; i < e; ++i) out *= a;
  return out;
}

void check_string_weight(const Sl2Vector& v) {
  if ((v.two_lambda - v.two_q) % 2 != 0 || v.two_lambda < 0)
    throw std::invalid_argument("weight not in the lambda-string");
}

}  // namespace

std::pair<Rational, int> sl2_act(Sl2Gen g, const Sl2Vector& v) {
  check_string_weight(v);
  switch (g) {
    case Sl2Gen::H:
      return {Rational(v.two_q), v.two_q};
    case Sl2Gen::E:
      return {half_int(v.two_lambda - v.two_q), v.two_q + 2};
    case Sl2Gen::F:
      return {half_int(v.two_lambda + v.two_q), v.two_q - 2};
  }
  throw std::logic_error("unreachable");
}

std::pair<Rational, int> su2_element_act(const Su2Element& e,
                                         const Sl2Vector& v) {
  check_string_weight(v);
  if (e.kind == Su2ElementKind::Torus)
    return {pow_rational(e.a, v.two_q), v.two_q};
  // Weyl element: v_q -> (-1)^(lambda-q) v_{-q}.
  long exp = (v.two_lambda - v.two_q) / 2;
  return {Rational(exp % 2 == 0 ? 1 : -1), -v.two_q};
}

Rational cg_coeff(int two_lambda, int two_mu, int two_q, int two_i,
                  int two_j) {
  const long L2 = two_lambda, M2 = two_mu;
  if (L2 < 0 || M2 < 0 || L2 < M2)
    throw std::invalid_argument("cg_coeff needs lambda >= mu >= 0");
  if ((L2 - two_q) % 2 != 0 || (M2 - two_i) % 2 != 0 ||
      (M2 - two_j) % 2 != 0)
    throw std::invalid_argument("cg_coeff weight parity mismatch");
  if (std::abs(two_q) > L2 || std::abs(two_i) > M2 || std::abs(two_j) > M2)
    throw std::invalid_argument("cg_coeff weight out of range");

  // ((mu+i)! / (2mu)!) * sum over p of
  //   C(mu-i, p) * prod_{a<p} (j-mu+a) * prod_{s=p+1}^{mu-i} (j+i+s)
  //   * (lambda+q)_falling_p * Gamma(lambda-q+1)/Gamma(lambda-q-mu+j+p+1).
  const Rational pref = gamma_ratio(M2 + two_i + 2, 2 * M2 + 2);
  const long K = (M2 - two_i) / 2;  // mu - i
  Rational sum(0);
  for (long p = 0; p <= K; ++p) {
    Rational term = binomial(K, p);
    for (long a = 0; a < p; ++a) term *= Rational((two_j - M2) / 2 + a);
    for (long s = p + 1; s <= K; ++s) term *= half_int(two_j + two_i + 2 * s);
    if (term == 0) continue;
    term *= falling_factorial(half_int(L2 + two_q), (unsigned)p);
    term *= gamma_ratio(L2 - two_q + 2, L2 - two_q - M2 + two_j + 2 * p + 2);
    sum += term;
  }
  return pref * sum;
}

std::map<std::array<int, 3>, Rational> cg_oracle(int two_lambda, int two_mu) {
  const int L2 = two_lambda, M2 = two_mu;
  if (L2 < 0 || M2 < 0)
    throw std::invalid_argument("cg_oracle needs lambda, mu >= 0");

  // Pairs (two_q, two_i) of the given total weight, q descending.
  auto weight_basis = [&](int w2) {
    std::vector<std::pair<int, int>> b;
    for (int q2 = L2; q2 >= -L2; q2 -= 2) {
      int i2 = w2 - q2;
      if (i2 >= -M2 && i2 <= M2) b.push_back({q2, i2});
    }
    return b;
  };

  // Step 1: for each component j, build its string vectors w^{(j)}_m in the
  // tensor basis (arbitrary overall scale): highest-weight vector from the
  // kernel of the total raising operator, then exact lowering with the
  // component-string normalization F w_m = ((T+m)/2) w_{m-1}.
  // string[j2][m2] = vector over weight_basis(m2).
  std::map<int, std::map<int, std::vector<Rational>>> string;
  for (int j2 = M2; j2 >= -M2; j2 -= 2) {
    const int T2 = L2 + j2;  // doubled highest weight of the component
    if (T2 < 0) continue;
    auto hwb = weight_basis(T2);
    if (hwb.empty()) continue;
    auto upb = weight_basis(T2 + 2);
    std::map<std::pair<int, int>, std::size_t> upidx;
    for (std::size_t r = 0; r < upb.size(); ++r) upidx[upb[r]] = r;
    ExactMatrix E(upb.size(), hwb.size());
    for (std::size_t c = 0; c < hwb.size(); ++c) {
      auto [q2, i2] = hwb[c];
      if (q2 + 2 <= L2) E.at(upidx[{q2 + 2, i2}], c) += half_int(L2 - q2);
      if (i2 + 2 <= M2) E.at(upidx[{q2, i2 + 2}], c) += half_int(M2 - i2);
    }
    auto ns = E.nullspace();
    if (ns.empty()) continue;  // no component with this highest weight
    if (ns.size() > 1)
      throw std::logic_error("tensor decomposition not multiplicity-free");

    std::vector<Rational> cur = ns[0];
    auto basis = hwb;
    for (int m2 = T2;; m2 -= 2) {
      string[j2][m2] = cur;
      if (m2 == -T2) break;
      auto lob = weight_basis(m2 - 2);
      std::map<std::pair<int, int>, std::size_t> loidx;
      for (std::size_t r = 0; r < lob.size(); ++r) loidx[lob[r]] = r;
      std::vector<Rational> next(lob.size(), Rational(0));
      for (std::size_t c = 0; c < basis.size(); ++c) {
        if (cur[c] == 0) continue;
        auto [q2, i2] = basis[c];
        if (q2 - 2 >= -L2)
          next[loidx[{q2 - 2, i2}]] += cur[c] * half_int(L2 + q2);
        if (i2 - 2 >= -M2)
          next[loidx[{q2, i2 - 2}]] += cur[c] * half_int(M2 + i2);
      }
      Rational div = half_int(T2 + m2);
      for (auto& c : next) c /= div;
      basis = std::move(lob);
      cur = std::move(next);
    }
  }

  // Step 2: invert per weight space: v_q (x) v_i = sum_j c~(q,i;j) w^{(j)},
  // still relative to the arbitrary component scales.
  std::map<std::array<int, 3>, Rational> out;
  for (int m2 = L2 + M2; m2 >= -(L2 + M2); m2 -= 2) {
    auto basis = weight_basis(m2);
    if (basis.empty()) continue;
    std::vector<int> comps;
    for (const auto& [j2, str] : string)
      if (str.count(m2)) comps.push_back(j2);
    if (comps.size() != basis.size())
      throw std::logic_error("weight space dimension mismatch");
    ExactMatrix W(basis.size(), comps.size());
    for (std::size_t c = 0; c < comps.size(); ++c) {
      const auto& w = string[comps[c]][m2];
      for (std::size_t r = 0; r < basis.size(); ++r) W.at(r, c) = w[r];
    }
    for (std::size_t r = 0; r < basis.size(); ++r) {
      std::vector<Rational> rhs(basis.size(), Rational(0)), x;
      rhs[r] = Rational(1);
      if (!W.solve(rhs, x))
        throw std::logic_error("singular weight-space change of basis");
      for (std::size_t c = 0; c < comps.size(); ++c)
        if (x[c] != 0)
          out[{basis[r].first, basis[r].second, comps[c]}] = x[c];
    }
  }

  // Step 3: fix each component scale by the anchor coefficient
  //   c(lambda+j-mu, mu; j) = (mu-j)!
  // (the anchor pair always lies in range for a genuine component).
  for (const auto& [j2, str] : string) {
    auto it = out.find({L2 + j2 - M2, M2, j2});
    if (it == out.end() || it->second == 0)
      throw std::logic_error("anchor coefficient missing in component");
    Rational scale = factorial((M2 - j2) / 2) / it->second;
    if (scale == 1) continue;
    for (auto& [key, val] : out)
      if (key[2] == j2) val *= scale;
  }
  return out;
}

std::pair<Rational, int> u2_act(U2Gen g, const U2Weight& hw, int q) {
  if (!hw.valid() || q < hw.l2 || q > hw.l1)
    throw std::invalid_argument("weight not in the U(2) module");
  switch (g) {
    case U2Gen::D1:
      return {Rational(q), q};
    case U2Gen::D2:
      return {Rational(hw.l1 + hw.l2 - q), q};
    case U2Gen::Yplus:
      return {Rational(hw.l1 - q), q + 1};
    case U2Gen::Yminus:
      return {Rational(q - hw.l2), q - 1};
  }
  throw std::logic_error("unreachable");
}

bool sigma_occurs_so3(int lambda, Sigma s) {
  Sigma n = s.normalized();
  if (lambda % 2 == n.i && lambda % 2 == n.j) return true;  // v_0 line
  for (int q = 1; q <= lambda; ++q)
    if (q % 2 == (n.i + n.j) % 2) return true;
  return false;
}

std::vector<std::map<int, Rational>> m_isotypic_so3(int lambda, Sigma s) {
  if (lambda < 0) throw std::invalid_argument("negative highest weight");
  Sigma n = s.normalized();
  std::vector<std::map<int, Rational>> basis;
  for (int q = lambda; q >= 1; --q) {
    if (q % 2 != (n.i + n.j) % 2) continue;
    int sign = ((lambda - q + n.i) % 2 == 0) ? 1 : -1;
    basis.push_back({{q, Rational(1)}, {-q, Rational(sign)}});
  }
  if (lambda % 2 == n.i && lambda % 2 == n.j)
    basis.push_back({{0, Rational(1)}});
  if (basis.empty())
    throw IncompatibleSigma("sigma does not occur in V_" +
                            std::to_string(lambda));
  return basis;
}

bool sigma_occurs_u2(U2Weight hw, Sigma s) {
  if (!hw.valid()) return false;
  Sigma n = s.normalized();
  if (((hw.l1 + hw.l2) % 2 + 2) % 2 != (n.i + n.j) % 2) return false;
  for (int q = hw.l1; q >= hw.l2; --q)
    if (((q % 2) + 2) % 2 == n.i) return true;
  return false;
}

std::vector<int> m_isotypic_u2(U2Weight hw, Sigma s) {
  if (!hw.valid()) throw std::invalid_argument("invalid U(2) highest weight");
  if (!sigma_occurs_u2(hw, s))
    throw IncompatibleSigma("sigma does not occur in V_(" +
                            std::to_string(hw.l1) + "," +
                            std::to_string(hw.l2) + ")");
  Sigma n = s.normalized();
  std::vector<int> qs;
  for (int q = hw.l1; q >= hw.l2; --q)
    if (((q % 2) + 2) % 2 == n.i) qs.push_back(q);
  return qs;
}

}  // namespace soclelab
