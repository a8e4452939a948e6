#include "kspectra.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace soclelab {

long kostant_Q(const std::vector<std::array<long, 2>>& roots,
               std::array<long, 2> target) {
  // The vectors must lie in an open half-plane for the count to be finite;
  // their sum then serves as a positivity functional.
  std::array<long, 2> f{0, 0};
  for (const auto& r : roots) {
    f[0] += r[0];
    f[1] += r[1];
  }
  for (const auto& r : roots)
    if (f[0] * r[0] + f[1] * r[1] <= 0)
      throw std::invalid_argument("vectors do not span a pointed cone");

  // Recurse on the first vector.
  struct Rec {
    const std::vector<std::array<long, 2>>& rs;
    const std::array<long, 2>& f;
    long count(std::size_t k, std::array<long, 2> t) const {
      if (k == rs.size()) return (t[0] == 0 && t[1] == 0) ? 1 : 0;
      long total = 0;
      while (true) {
        total += count(k + 1, t);
        if (f[0] * t[0] + f[1] * t[1] < f[0] * rs[k][0] + f[1] * rs[k][1])
          break;
        t[0] -= rs[k][0];
        t[1] -= rs[k][1];
      }
      return total;
    }
  } rec{roots, f};
  return rec.count(0, target);
}

// ---------------------------------------------------------------------------
// SL3
// ---------------------------------------------------------------------------

namespace {

void check_lambda_sl3(const std::array<long, 3>& L) {
  if (!(L[0] > L[1] && L[1] > L[2]))
    throw std::invalid_argument("need Lambda1 > Lambda2 > Lambda3");
}

long so3_sigma_dim(long lambda, Sigma s) {
  Sigma n = s.normalized();
  long d = 0;
  for (long q = 1; q <= lambda; ++q)
    if (q % 2 == (n.i + n.j) % 2) ++d;
  if (lambda % 2 == n.i && lambda % 2 == n.j) ++d;  // the v_0 line
  return d;
}

const std::map<std::string, std::string>& sl3_family_base_pattern() {
  static const std::map<std::string, std::string> m{
      {"g3", "123"}, {"g4", "213"}, {"g5", "132"}, {"g0p", "123"}};
  return m;
}

}  // namespace

long mult_standard_sl3(const std::string& id, const std::array<long, 3>& L,
                       long lambda) {
  check_lambda_sl3(L);
  if (lambda < 0) throw std::invalid_argument("negative K-type");
  if (id == "g0" || id == "g1" || id == "g2") {
    // Ladder: multiplicity floor((lambda - Lambda_p + Lambda_q + 1)/2)
    // once nonnegative; minimal K-type Lambda_p - Lambda_q + 1.
    int p = (id == "g2") ? 1 : 0;
    int q = (id == "g1") ? 1 : 2;
    long v = lambda - L[p] + L[q] + 1;
    return v > 0 ? v / 2 : 0;
  }
  auto it = sl3_family_base_pattern().find(id);
  if (it == sl3_family_base_pattern().end())
    throw std::invalid_argument("unknown SL3 factor id: " + id);
  std::vector<long> Lv(L.begin(), L.end());
  Sigma sigma = series_instance(Group::SL3, id, it->second, Lv).sigma;
  return so3_sigma_dim(lambda, sigma);
}

long mult_irreducible_sl3(const std::string& id, const std::array<long, 3>& L,
                          long lambda) {
  static std::map<std::tuple<std::string, std::array<long, 3>, long>, long>
      memo;
  auto key = std::make_tuple(id, L, lambda);
  auto hit = memo.find(key);
  if (hit != memo.end()) return hit->second;
  long m = mult_standard_sl3(id, L, lambda);
  for (const auto& f : catalog_entry(Group::SL3, id).composition)
    if (f != id) m -= mult_irreducible_sl3(f, L, lambda);
  if (m < 0)
    throw NegativeMultiplicity("negative multiplicity for " + id +
                               " at lambda=" + std::to_string(lambda));
  memo[key] = m;
  return m;
}

long min_ktype_sl3(const std::string& id, const std::array<long, 3>& L) {
  for (long lambda = 0; lambda <= L[0] - L[2] + 3; ++lambda)
    if (mult_irreducible_sl3(id, L, lambda) > 0) return lambda;
  throw std::logic_error("no K-type found for " + id);
}

// ---------------------------------------------------------------------------
// SP2
// ---------------------------------------------------------------------------

namespace {

void check_lambda_sp2(const std::array<long, 2>& L) {
  if (!(L[0] > L[1] && L[1] > 0))
    throw std::invalid_argument("need Lambda1 > Lambda2 > 0");
}

long dot(const std::array<long, 2>& a, const std::array<long, 2>& b) {
  return a[0] * b[0] + a[1] * b[1];
}

// Minimal K-type labels of the four discrete-series-like factors.
std::array<long, 2> ds_label(const std::string& id,
                             const std::array<long, 2>& L) {
  if (id == "g0") return {L[0] + 1, -L[1]};
  if (id == "g1") return {L[1], -L[0] - 1};
  if (id == "g2") return {L[0] + 1, L[1] + 2};
  return {-L[1] - 2, -L[0] - 1};  // g3
}

// Alternating sum over W(K,T) = {1, swap}:
//   m(k) = sum_w eps(w) Q(w(k + rho_c) - label - rho_c)
// with Q the partition count over the noncompact roots positive on the
// label's chamber.  All vectors are doubled (rho_c = (1/2,-1/2)).
long blattner_sp2(const std::string& id, const std::array<long, 2>& L,
                  U2Weight k) {
  std::array<long, 2> label = ds_label(id, L);
  std::vector<std::array<long, 2>> pos2;  // doubled chamber noncompact roots
  for (std::array<long, 2> a :
       {std::array<long, 2>{2, 0}, {1, 1}, {0, 2}}) {
    long s = dot(label, a);
    if (s == 0) throw std::logic_error("singular chamber for " + id);
    if (s > 0)
      pos2.push_back({2 * a[0], 2 * a[1]});
    else
      pos2.push_back({-2 * a[0], -2 * a[1]});
  }
  std::array<long, 2> base{2 * k.l1 + 1 - 2 * label[0] - 1,
                           2 * k.l2 - 1 - 2 * label[1] + 1};
  long m = kostant_Q(pos2, base);
  std::array<long, 2> swapped{2 * k.l2 - 1 - 2 * label[0] - 1,
                              2 * k.l1 + 1 - 2 * label[1] + 1};
  m -= kostant_Q(pos2, swapped);
  return m;
}

long count_long_root_strings(long La, int eps, U2Weight k) {
  long count = 0;
  for (long l = 0;; ++l) {
    long edge = eps * (La + 1 + 2 * l);
    if (La + 1 + 2 * l > std::max(std::abs(k.l1), std::abs(k.l2)) + 1) break;
    if (k.l1 >= edge && edge >= k.l2) ++count;
  }
  return count;
}

long u2_sigma_dim(U2Weight k, Sigma s) {
  if (!sigma_occurs_u2(k, s)) return 0;
  return (long)m_isotypic_u2(k, s).size();
}

}  // namespace

long mult_standard_sp2(const std::string& id, const std::array<long, 2>& L,
                       U2Weight k) {
  check_lambda_sp2(L);
  if (!k.valid()) throw std::invalid_argument("invalid U(2) weight");
  if (id == "g0" || id == "g1" || id == "g2" || id == "g3")
    return std::max(blattner_sp2(id, L, k), 0L);
  if (id == "g4" || id == "g9") {
    // Short-root ladders: all K-types with l1 - l2 in base + 2Z>=0.
    long base = (id == "g4") ? L[0] + L[1] + 1 : L[0] - L[1] + 1;
    long d = k.l1 - k.l2 - base;
    return (d >= 0 && d % 2 == 0) ? d / 2 + 1 : 0;
  }
  // Long-root families: (index a, parity shift, edge sign).
  static const std::map<std::string, std::tuple<int, int, int>> long_root{
      {"g5", {0, 0, +1}},  {"g6", {0, 0, -1}},  {"g7", {1, 0, +1}},
      {"g8", {1, 0, -1}},  {"g0p", {0, 1, +1}}, {"g1p", {0, 1, -1}},
      {"g2p", {1, 1, +1}}, {"g3p", {1, 1, -1}}};
  auto lr = long_root.find(id);
  if (lr != long_root.end()) {
    auto [a, shift, eps] = lr->second;
    long La = L[a], Lb = L[1 - a];
    if (((k.l1 + k.l2) % 2 + 2) % 2 != ((La + Lb + shift + 1) % 2 + 2) % 2)
      return 0;
    return count_long_root_strings(La, eps, k);
  }
  // Principal-series standards: M-isotypic dimension.
  static const std::map<std::string, std::string> base_pattern{
      {"g10", "+1+2"}, {"g11", "+2+1"}, {"g4p", "+1+2"}, {"g0pp", "+1+2"}};
  auto bp = base_pattern.find(id);
  if (bp == base_pattern.end())
    throw std::invalid_argument("unknown SP2 factor id: " + id);
  std::vector<long> Lv(L.begin(), L.end());
  Sigma sigma = series_instance(Group::SP2, id, bp->second, Lv).sigma;
  return u2_sigma_dim(k, sigma);
}

long mult_irreducible_sp2(const std::string& id, const std::array<long, 2>& L,
                          U2Weight k) {
  static std::map<std::tuple<std::string, std::array<long, 2>, int, int>, long>
      memo;
  auto key = std::make_tuple(id, L, k.l1, k.l2);
  auto hit = memo.find(key);
  if (hit != memo.end()) return hit->second;
  long m = mult_standard_sp2(id, L, k);
  for (const auto& f : catalog_entry(Group::SP2, id).composition)
    if (f != id) m -= mult_irreducible_sp2(f, L, k);
  if (m < 0)
    throw NegativeMultiplicity("negative multiplicity for " + id + " at (" +
                               std::to_string(k.l1) + "," +
                               std::to_string(k.l2) + ")");
  memo[key] = m;
  return m;
}

U2Weight min_ktype_sp2(const std::string& id, const std::array<long, 2>& L) {
  long B = 2 * (L[0] + L[1]) + 4;
  for (long diff = 0; diff <= B; ++diff)
    for (long asum = 0; asum <= B; ++asum)
      for (long sum : {asum, -asum}) {
        if ((sum + diff) % 2 != 0) continue;
        U2Weight k{(int)((sum + diff) / 2), (int)((sum - diff) / 2)};
        if (mult_irreducible_sp2(id, L, k) > 0) return k;
        if (asum == 0) break;
      }
  throw std::logic_error("no K-type found for " + id);
}

}  // namespace soclelab
