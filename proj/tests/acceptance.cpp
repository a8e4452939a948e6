// Acceptance gate: one pass/fail line per criterion, exit code = number of
// failing criteria.  Each criterion is evaluated from scratch against the
// core library; nothing is stubbed.

#include <array>
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "../src/embeddings.hpp"
#include "../src/kspectra.hpp"
#include "../src/shiftops.hpp"
#include "../src/socle.hpp"

using namespace soclelab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& msg) {
    pass = false;
    if (detail.empty()) detail = msg;
  }
};

std::array<Rational, 3> nu3(const Rational& a, const Rational& b,
                            const Rational& c) {
  return {a, b, c};
}
std::array<Rational, 2> nu2(const Rational& a, const Rational& b) {
  return {a, b};
}

// --------------------------------------------------------------------------
// 1. Tensor-coefficient closed form vs brute-force decomposition.
// --------------------------------------------------------------------------
Outcome criterion_cg() {
  Outcome out;
  for (int L2 = 0; L2 <= 8; ++L2)
    for (int M2 = 0; M2 <= L2; ++M2) {
      auto oracle = cg_oracle(L2, M2);
      for (int q2 = -L2; q2 <= L2; q2 += 2)
        for (int i2 = -M2; i2 <= M2; i2 += 2)
          for (int j2 = -M2; j2 <= M2; j2 += 2) {
            auto it = oracle.find({q2, i2, j2});
            Rational expect = it == oracle.end() ? Rational(0) : it->second;
            if (cg_coeff(L2, M2, q2, i2, j2) != expect) {
              out.fail("mismatch at 2l=" + std::to_string(L2) +
                       " 2m=" + std::to_string(M2));
              return out;
            }
          }
    }
  return out;
}

// --------------------------------------------------------------------------
// 2. Closed-form shift operators vs covariant-derivative reconstruction.
// --------------------------------------------------------------------------
bool same_kernel(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.cols()) return false;
  ExactMatrix stack(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) stack.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      stack.at(a.rows() + i, j) = b.at(i, j);
  std::size_t ra = a.rank();
  return ra == b.rank() && stack.rank() == ra;
}

// scale*A == B for one nonzero scale; records/compares the scale across
// parameter values via `scale`/`have`.
bool proportional(const ExactMatrix& a, const ExactMatrix& b, Rational& scale,
                  bool& have) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  Rational s;
  bool found = false;
  for (std::size_t i = 0; i < a.rows() && !found; ++i)
    for (std::size_t j = 0; j < a.cols() && !found; ++j)
      if (a.at(i, j) != 0) {
        s = b.at(i, j) / a.at(i, j);
        found = true;
      }
  if (!found) return b.is_zero();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a.at(i, j) * s != b.at(i, j)) return false;
  if (s == 0) return false;
  if (!have) {
    scale = s;
    have = true;
    return true;
  }
  return s == scale;
}

Outcome criterion_shift_oracle() {
  Outcome out;
  std::mt19937 rng(20260824);
  std::uniform_int_distribution<long> coord(-6, 6);

  std::vector<std::array<Rational, 3>> nus3;
  for (const auto& [w, ps] :
       weyl_orbit({Group::SL3, Sigma{0, 0},
                   {Rational(1), Rational(0), Rational(-1)}}))
    nus3.push_back({ps.nu[0], ps.nu[1], ps.nu[2]});
  for (int n = 0; n < 20; ++n)
    nus3.push_back(nu3(coord(rng), coord(rng), coord(rng)));
  for (long lam = 0; lam <= 6; ++lam)
    for (int dir : {-2, -1, 1, 2}) {
      if (lam + dir < 0) continue;
      Rational scale;
      bool have = false;
      for (const auto& nu : nus3) {
        ShiftMatrix V = shift_matrix(lam, nu, dir);
        ShiftMatrix O = nabla_oracle(lam, nu, dir);
        if (V.tgt.size() == 0) continue;
        if (!proportional(V.mat, O.mat, scale, have) ||
            !same_kernel(V.mat, O.mat)) {
          out.fail("sl3 lambda=" + std::to_string(lam) +
                   " dir=" + std::to_string(dir));
          return out;
        }
      }
    }

  std::vector<std::array<Rational, 2>> nus2;
  for (const auto& [w, ps] :
       weyl_orbit({Group::SP2, Sigma{0, 0}, {Rational(2), Rational(1)}}))
    nus2.push_back({ps.nu[0], ps.nu[1]});
  for (int n = 0; n < 20; ++n) nus2.push_back(nu2(coord(rng), coord(rng)));
  const std::vector<Sp2Dir> dirs{{2, 0},  {1, 1},   {0, 2},
                                 {0, -2}, {-1, -1}, {-2, 0}};
  for (int l1 = -4; l1 <= 4; ++l1)
    for (int l2 = -4; l2 <= l1; ++l2)
      for (const auto& dir : dirs) {
        if (l1 + dir[0] < l2 + dir[1]) continue;
        Rational scale;
        bool have = false;
        for (const auto& nu : nus2) {
          ShiftMatrix V = shift_matrix(U2Weight{l1, l2}, nu, dir);
          ShiftMatrix O = nabla_oracle(U2Weight{l1, l2}, nu, dir);
          if (V.tgt.size() == 0) continue;
          if (!proportional(V.mat, O.mat, scale, have) ||
              !same_kernel(V.mat, O.mat)) {
            out.fail("sp2 lambda=(" + std::to_string(l1) + "," +
                     std::to_string(l2) + ")");
            return out;
          }
        }
      }
  return out;
}

// --------------------------------------------------------------------------
// 3. Transcribed worked identities, as exact vector equalities.
// --------------------------------------------------------------------------
Outcome criterion_identities() {
  Outcome out;

  // Raising on the 5-string at nu = (1,0,-1):
  // c1 (v2 + v-2) + c2 v0  |->  (24 c1 + 4 c2)(v2 - v-2).
  for (auto [c1, c2] : {std::pair<long, long>{1, 0}, {0, 1}, {5, 7}}) {
    auto img = shift_matrix(2, nu3(1, 0, -1), 1)
                   .apply({{2, Rational(c1)}, {0, Rational(c2)},
                           {-2, Rational(c1)}});
    Rational top = Rational(24) * c1 + Rational(4) * c2;
    std::map<int, Rational> expect;
    if (top != 0) expect = {{2, top}, {-2, -top}};
    if (img != expect) out.fail("raising identity on the 5-string");
  }

  // One-dimensional K-type (3,3): the (0,-2)-shift of v_-3 equals
  // (nu1 - 1) v_-1 + (nu2 - 2) v_-3, checked at nu = (5,7).
  {
    auto img = shift_matrix(U2Weight{3, 3}, nu2(5, 7), Sp2Dir{0, -2})
                   .apply({{-3, Rational(1)}});
    if (img != std::map<int, Rational>{{-1, Rational(4)}, {-3, Rational(5)}})
      out.fail("(3,3) lowering identity");
  }

  // Composed chain (2,2) -> (2,0) -> (3,1) on v_-2 at nu = (2,1): the
  // transcribed value is -8 v_-2.
  {
    auto img = compose(U2Weight{2, 2}, nu2(2, 1), {{0, -2}, {1, 1}})
                   .apply({{-2, Rational(1)}});
    std::map<int, Rational> transcribed{{-2, Rational(-8)}};
    if (img != transcribed) {
      std::string got = "0";
      if (img.count(-2)) got = img.at(-2).get_str();
      out.fail("chain (0,-2),(1,1) on v_-2: transcribed coefficient -8, "
               "computed " + got +
               "; the transcription is inconsistent with the companion "
               "chain through the same intermediate K-type");
    }
  }

  // Companion chain (1,-1) -> (2,0) -> (2,-2) on v_0 at nu = (2,1):
  // 4 (2 v_2 - 3 v_0 - v_-2).
  {
    auto img = compose(U2Weight{1, -1}, nu2(2, 1), {{1, 1}, {0, -2}})
                   .apply({{0, Rational(1)}});
    if (img != std::map<int, Rational>{{2, Rational(8)}, {0, Rational(-12)},
                                       {-2, Rational(-4)}})
      out.fail("chain (1,1),(0,-2) on v_0");
  }

  // One step (3,1) -> (3,-1) on v_-2 at nu = (1,2): 3 v_0 + v_-2.
  {
    auto img = shift_matrix(U2Weight{3, 1}, nu2(1, 2), Sp2Dir{0, -2})
                   .apply({{-2, Rational(1)}});
    if (img != std::map<int, Rational>{{0, Rational(3)}, {-2, Rational(1)}})
      out.fail("(3,1) lowering identity");
  }
  return out;
}

// --------------------------------------------------------------------------
// 4. Kernel dimensions, spanning vectors, and sigma-types.
// --------------------------------------------------------------------------
ExactMatrix rows_of(const std::vector<std::map<int, Rational>>& V, long lam) {
  ExactMatrix M(V.size(), (std::size_t)(2 * lam + 1));
  for (std::size_t k = 0; k < V.size(); ++k)
    for (const auto& [q, c] : V[k]) M.at(k, (std::size_t)(q + lam)) = c;
  return M;
}

bool same_span(const std::vector<std::map<int, Rational>>& A,
               const std::vector<std::map<int, Rational>>& B, long lam) {
  ExactMatrix MA = rows_of(A, lam);
  ExactMatrix MB = rows_of(B, lam);
  auto AB = A;
  AB.insert(AB.end(), B.begin(), B.end());
  std::size_t ra = MA.rank();
  return ra == MB.rank() && rows_of(AB, lam).rank() == ra;
}

bool closed_case_ok(const std::string& tag, long lam,
                    const std::array<Rational, 3>& nu) {
  auto closed = closed_form_solutions_sl3(tag, lam, nu);
  for (const auto& v : closed)
    for (int d : {-1, -2}) {
      if (lam + d < 0) continue;
      if (!shift_matrix(lam, nu, d).apply(v.coeff).empty()) return false;
    }
  std::vector<std::vector<int>> tests;
  for (int d : {-1, -2})
    if (lam + d >= 0) tests.push_back({d});
  for (Sigma s : {Sigma{0, 0}, Sigma{0, 1}, Sigma{1, 0}, Sigma{1, 1}}) {
    std::vector<std::map<int, Rational>> cs, ks;
    for (const auto& v : closed)
      if (v.sigma == s) cs.push_back(v.coeff);
    PrincipalSeries ps{Group::SL3, s, {nu[0], nu[1], nu[2]}};
    for (const auto& v : kernel_system(ps, lam, tests).basis)
      ks.push_back(v.coeff);
    if (cs.size() != ks.size() || !same_span(cs, ks, lam)) return false;
  }
  return true;
}

Outcome criterion_kernels() {
  Outcome out;
  const std::vector<std::array<long, 3>> params{
      {1, 0, -1}, {2, 0, -1}, {3, 1, -1}};
  for (const auto& L : params) {
    long L1 = L[0], L2 = L[1], L3 = L[2];
    std::string at = " at (" + std::to_string(L1) + "," + std::to_string(L2) +
                     "," + std::to_string(L3) + ")";
    if (!closed_case_ok("eq12", L1 - L3 + 1, nu3(L1, L3, L2)))
      out.fail("degree nu1-nu2+1 kernel" + at);
    if (!closed_case_ok("eq23", L1 - L3 + 1, nu3(L2, L1, L3)))
      out.fail("degree nu2-nu3+1 kernel" + at);
    if (!closed_case_ok("eq13-ordered", L1 - L3 + 1, nu3(L1, L2, L3)))
      out.fail("degree nu1-nu3+1 dominant kernel" + at);
    if (!closed_case_ok("eq13-mixed", L2 - L3 + 1, nu3(L2, L1, L3)))
      out.fail("degree nu1-nu3+1 mixed kernel" + at);
    if (!closed_case_ok("eq13-mixed", L1 - L2 + 1, nu3(L1, L3, L2)))
      out.fail("degree nu1-nu3+1 mixed kernel (second order)" + at);
  }

  // Sp(2): explicit one-vector kernels inside the big series at (2,1).
  auto [t4, tests4] = embedding_tests_sp2("g4", {2, 1});
  if (!(t4 == U2Weight{2, -2})) out.fail("sp2 g4 test K-type");
  {
    auto ker = kernel_system(series_instance(Group::SP2, "g10", "+2+1", {2, 1}),
                             t4, tests4);
    if (ker.basis.size() != 1 ||
        ker.basis[0].coeff !=
            std::map<int, Rational>{{2, Rational(1)}, {0, Rational(2)},
                                    {-2, Rational(1)}})
      out.fail("sp2 g4 kernel in the +2+1 series");
  }
  {
    auto ker = kernel_system(series_instance(Group::SP2, "g10", "+2-1", {2, 1}),
                             t4, tests4);
    if (ker.basis.size() != 1 ||
        ker.basis[0].coeff !=
            std::map<int, Rational>{{2, Rational(1)}, {0, Rational(-6)},
                                    {-2, Rational(1)}})
      out.fail("sp2 g4 kernel in the +2-1 series");
  }
  auto [t2, tests2] = embedding_tests_sp2("g2", {2, 1});
  if (!(t2 == U2Weight{3, 3})) out.fail("sp2 g2 test K-type");
  if (kernel_system(series_instance(Group::SP2, "g11", "+2+1", {2, 1}), t2,
                    tests2)
          .basis.empty())
    out.fail("sp2 g2 kernel missing in the +2+1 series");
  if (!kernel_system(series_instance(Group::SP2, "g11", "+1+2", {2, 1}), t2,
                     tests2)
           .basis.empty())
    out.fail("sp2 g2 spurious kernel in the +1+2 series");
  return out;
}

// --------------------------------------------------------------------------
// 5. Candidate-submodule tables over the full orbits.
// --------------------------------------------------------------------------
Outcome criterion_candidates() {
  Outcome out;
  using Row = std::map<std::string, std::set<std::string>>;
  const std::map<std::string, Row> sl3{
      {"g3",
       {{"123", {"g0"}}, {"132", {"g1"}}, {"213", {"g2"}},
        {"231", {"g2"}}, {"312", {"g1"}}, {"321", {"g3"}}}},
      {"g4",
       {{"123", {"g0"}}, {"132", {"g0"}}, {"213", {"g0", "g4"}},
        {"231", {"g4"}}, {"312", {"g1"}}, {"321", {"g4"}}}},
      {"g5",
       {{"123", {"g0"}}, {"132", {"g0", "g5"}}, {"213", {"g0"}},
        {"231", {"g2"}}, {"312", {"g5"}}, {"321", {"g5"}}}},
      {"g0p",
       {{"123", {"g0p"}}, {"132", {"g0p"}}, {"213", {"g0p"}},
        {"231", {"g0p"}}, {"312", {"g0p"}}, {"321", {"g0p"}}}}};
  const std::map<std::string, Row> sp2{
      {"g10",
       {{"+1+2", {"g0", "g1"}}, {"-1-2", {"g10"}},
        {"+1-2", {"g0", "g1", "g9"}}, {"-1+2", {"g7", "g8"}},
        {"+2+1", {"g4"}}, {"-2-1", {"g9"}}, {"+2-1", {"g4"}},
        {"-2+1", {"g9"}}}},
      {"g11",
       {{"+1+2", {"g0", "g1"}}, {"-1-2", {"g11"}}, {"+1-2", {"g0", "g1"}},
        {"-1+2", {"g11"}}, {"+2+1", {"g0", "g1", "g2", "g3"}},
        {"-2-1", {"g9"}}, {"+2-1", {"g4", "g11"}}, {"-2+1", {"g5", "g6"}}}},
      {"g4p",
       {{"+1+2", {"g0p", "g1p"}}, {"-1-2", {"g4p"}},
        {"+1-2", {"g0p", "g1p", "g4p"}}, {"-1+2", {"g2p", "g3p"}},
        {"+2+1", {"g0p", "g1p"}}, {"-2-1", {"g4p"}},
        {"-2+1", {"g0p", "g1p", "g4p"}}, {"+2-1", {"g2p", "g3p"}}}},
      {"g0pp",
       {{"+1+2", {"g0pp"}}, {"-1-2", {"g0pp"}}, {"+1-2", {"g0pp"}},
        {"-1+2", {"g0pp"}}, {"+2+1", {"g0pp"}}, {"-2-1", {"g0pp"}},
        {"+2-1", {"g0pp"}}, {"-2+1", {"g0pp"}}}}};

  auto check = [&](Group g, const std::map<std::string, Row>& table,
                   const std::vector<long>& L) {
    for (const auto& [family, rows] : table)
      for (const auto& [pattern, want] : rows) {
        auto inst = series_instance(g, family, pattern, L);
        std::set<std::string> got;
        for (const auto& e : candidate_submodules(inst)) {
          if (e.status != CandidateStatus::Confirmed)
            out.fail(family + " " + pattern + ": unconfirmed candidate");
          got.insert(e.id);
        }
        if (got != want) out.fail(family + " " + pattern + ": wrong set");
      }
  };
  check(Group::SL3, sl3, {1, 0, -1});
  check(Group::SP2, sp2, {2, 1});
  return out;
}

// --------------------------------------------------------------------------
// 6. Multiplicity tables and Grothendieck-group consistency.
// --------------------------------------------------------------------------
Outcome criterion_multiplicities() {
  Outcome out;
  {
    std::array<long, 3> L{1, 0, -1};
    const std::map<std::string, std::vector<long>> rows{
        {"g0", {0, 0, 0, 1, 1, 2}}, {"g1", {0, 0, 1, 0, 1, 0}},
        {"g2", {0, 0, 1, 0, 1, 0}}, {"g3", {1, 0, 0, 0, 0, 0}},
        {"g4", {0, 1, 0, 1, 0, 1}}, {"g5", {0, 1, 0, 1, 0, 1}}};
    for (const auto& [id, row] : rows)
      for (long lam = 0; lam < (long)row.size(); ++lam)
        if (mult_irreducible_sl3(id, L, lam) != row[lam])
          out.fail("sl3 table row " + id);
  }
  {
    std::array<long, 2> L{2, 1};
    const std::map<std::string, std::set<std::pair<int, int>>> golden{
        {"g0", {{3, -1}, {3, -3}}},
        {"g1", {{1, -3}, {3, -3}}},
        {"g2", {{3, 3}}},
        {"g3", {{-3, -3}}},
        {"g4", {{2, -2}}},
        {"g5", {{3, 1}}},
        {"g6", {{-1, -3}}},
        {"g7", {{2, 2}, {2, 0}}},
        {"g8", {{-2, -2}, {0, -2}}},
        {"g9",
         {{2, 0}, {1, -1}, {0, -2}, {3, -1}, {2, -2}, {1, -3}, {3, -3}}},
        {"g10", {{0, 0}}},
        {"g11",
         {{1, 1}, {-1, -1}, {3, 1}, {3, -1}, {1, -3}, {-1, -3}, {1, -1},
          {3, -3}}},
        {"g0p", {{3, 2}, {3, -2}, {3, 0}}},
        {"g1p", {{2, -3}, {-2, -3}, {0, -3}}},
        {"g2p", {{2, 1}, {2, -1}, {2, -3}}},
        {"g3p", {{1, -2}, {-1, -2}, {3, -2}}},
        {"g4p",
         {{1, 0}, {0, -1}, {3, 0}, {2, -1}, {1, -2}, {0, -3}, {3, -2},
          {2, -3}}}};
    for (const auto& [id, spec] : golden)
      for (int l1 = -3; l1 <= 3; ++l1)
        for (int l2 = -3; l2 <= l1; ++l2)
          if (mult_irreducible_sp2(id, L, {l1, l2}) !=
              (spec.count({l1, l2}) ? 1 : 0))
            out.fail("sp2 table block " + id);
  }

  // Grothendieck consistency: standard = sum of composition factors.
  for (const auto& e : catalog(Group::SL3)) {
    std::array<long, 3> L{1, 0, -1};
    for (long lam = 0; lam <= 8; ++lam) {
      long sum = 0;
      for (const auto& c : e.composition)
        sum += mult_irreducible_sl3(c, L, lam);
      if (sum != mult_standard_sl3(e.id, L, lam))
        out.fail("sl3 composition sum for " + e.id);
    }
  }
  for (const auto& e : catalog(Group::SP2)) {
    std::array<long, 2> L{2, 1};
    for (int l1 = -8; l1 <= 8; ++l1)
      for (int l2 = -8; l2 <= l1; ++l2) {
        long sum = 0;
        for (const auto& c : e.composition)
          sum += mult_irreducible_sp2(c, L, {l1, l2});
        if (sum != mult_standard_sp2(e.id, L, {l1, l2}))
          out.fail("sp2 composition sum for " + e.id);
      }
  }
  return out;
}

// --------------------------------------------------------------------------
// 7. Socle filtrations: all 36 diagrams, unique, under a minute.
// --------------------------------------------------------------------------
Outcome criterion_socle(double& seconds) {
  Outcome out;
  auto t0 = std::chrono::steady_clock::now();
  GoldenReport sl3 = golden_verify(Group::SL3, {1, 0, -1});
  GoldenReport sp2 = golden_verify(Group::SP2, {2, 1});
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          t0)
                .count();
  if (sl3.total != 12 || sp2.total != 24) out.fail("wrong case count");
  for (const auto& rep : {sl3, sp2})
    for (const auto& gc : rep.cases)
      if (!gc.pass)
        out.fail(gc.family + " " + gc.patterns[0] + ": expected " +
                 gc.expected + ", inferred " + gc.inferred);
  if (seconds >= 60.0) out.fail("runtime over one minute");
  return out;
}

// --------------------------------------------------------------------------
// 8. Structural symmetries of the inferred diagrams.
// --------------------------------------------------------------------------
Outcome criterion_structure() {
  Outcome out;
  struct Case {
    Group g;
    std::string family;
    std::vector<long> L;
  };
  std::vector<Case> cases;
  for (const auto& fam : {"g3", "g4", "g5"})
    cases.push_back({Group::SL3, fam, {1, 0, -1}});
  for (const auto& fam : {"g10", "g11"})
    cases.push_back({Group::SP2, fam, {2, 1}});

  int split_checked = 0;
  for (const auto& c : cases)
    for (const auto& pat : family_patterns(c.g)) {
      auto inst = series_instance(c.g, c.family, pat, c.L);
      SocleResult res = infer_socle(inst);
      auto* d = std::get_if<SocleDiagram>(&res);
      if (!d) {
        out.fail(c.family + " " + pat + ": not unique");
        continue;
      }
      ++split_checked;

      // Parity alternation.
      for (std::size_t k = 0; k < d->floors.size(); ++k) {
        int p = catalog_entry(c.g, d->floors[k][0]).length % 2;
        for (const auto& id : d->floors[k])
          if (catalog_entry(c.g, id).length % 2 != p)
            out.fail(c.family + " " + pat + ": mixed parity floor");
        if (k > 0 &&
            catalog_entry(c.g, d->floors[k - 1][0]).length % 2 == p)
          out.fail(c.family + " " + pat + ": parity does not alternate");
      }

      // Duality flip: the diagram at -nu is the reversed dualized diagram.
      SocleResult dres = infer_socle(dual_series(inst));
      auto* dd = std::get_if<SocleDiagram>(&dres);
      if (!dd || dd->floors.size() != d->floors.size()) {
        out.fail(c.family + " " + pat + ": dual diagram mismatch");
        continue;
      }
      for (std::size_t k = 0; k < d->floors.size(); ++k) {
        std::multiset<std::string> want, got;
        for (const auto& id : d->floors[d->floors.size() - 1 - k])
          want.insert(dual_factor(c.g, id));
        for (const auto& id : dd->floors[k]) got.insert(id);
        if (want != got)
          out.fail(c.family + " " + pat + ": duality flip fails");
      }

      // SL3 outer twist: quasi-dual relabelling floor by floor.
      if (c.g == Group::SL3) {
        SocleResult tres = infer_socle(mu_twist(inst));
        auto* td = std::get_if<SocleDiagram>(&tres);
        if (!td || td->floors.size() != d->floors.size()) {
          out.fail(c.family + " " + pat + ": twist diagram mismatch");
          continue;
        }
        for (std::size_t k = 0; k < d->floors.size(); ++k) {
          std::multiset<std::string> want, got;
          for (const auto& id : d->floors[k])
            want.insert(quasidual_factor(c.g, id));
          for (const auto& id : td->floors[k]) got.insert(id);
          if (want != got)
            out.fail(c.family + " " + pat + ": twist symmetry fails");
        }
      }
    }
  if (split_checked != 34)  // 18 SL3 + 16 SP2 split series
    out.fail("checked " + std::to_string(split_checked) +
             " split series, expected 34");
  return out;
}

void report(int n, const std::string& name, const Outcome& o, int& failures) {
  if (!o.pass) ++failures;
  std::printf("criterion %d [%s] %s%s%s\n", n, o.pass ? "PASS" : "FAIL",
              name.c_str(), o.detail.empty() ? "" : " -- ",
              o.detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  int failures = 0;
  report(1, "tensor coefficients match the brute-force decomposition",
         criterion_cg(), failures);
  report(2, "shift operators match the covariant-derivative reconstruction",
         criterion_shift_oracle(), failures);
  report(3, "worked shift-operator identities reproduced exactly",
         criterion_identities(), failures);
  report(4, "kernel dimensions, spanning vectors, and sigma-types",
         criterion_kernels(), failures);
  report(5, "candidate-submodule tables over the full orbits",
         criterion_candidates(), failures);
  report(6, "multiplicity tables and Grothendieck consistency",
         criterion_multiplicities(), failures);
  double socle_seconds = 0;
  Outcome socle = criterion_socle(socle_seconds);
  {
    char buf[64];
    std::snprintf(buf, sizeof buf, " (%.1fs)", socle_seconds);
    Outcome o = socle;
    report(7, std::string("all 36 socle filtrations, unique, under a minute") +
                  buf,
           o, failures);
  }
  report(8, "duality flip, parity alternation, and twist symmetry",
         criterion_structure(), failures);
  std::printf("%d/8 criteria passed\n", 8 - failures);
  return failures;
}
