// JSON request/response implementation of the C interface declared in
// include/soclelab.h.  Thin dispatch over the core library; all substantive
// computation lives in the core modules.

#include "../include/soclelab.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "exactmath.hpp"
#include "groupdata.hpp"
#include "kspectra.hpp"
#include "shiftops.hpp"
#include "socle.hpp"

using json = nlohmann::json;
using namespace soclelab;

struct soclelab_ctx {
  std::string last_error;
};

namespace {

struct RequestError : std::runtime_error {
  int code;
  RequestError(int c, const std::string& msg)
      : std::runtime_error(msg), code(c) {}
};

Group parse_group(const json& req) {
  std::string g = req.value("group", "");
  if (g == "sl3") return Group::SL3;
  if (g == "sp2") return Group::SP2;
  throw RequestError(SOCLELAB_INVALID_INPUT,
                     "group must be \"sl3\" or \"sp2\"");
}

Sigma parse_sigma(const std::string& s) {
  if (s.size() == 3 && s[0] == 's' && (s[1] == '0' || s[1] == '1') &&
      (s[2] == '0' || s[2] == '1'))
    return Sigma{s[1] - '0', s[2] - '0'};
  throw RequestError(SOCLELAB_INVALID_INPUT,
                     "sigma must be \"s00\", \"s01\", \"s10\", or \"s11\"");
}

std::string sigma_str(Sigma s) {
  Sigma n = s.normalized();
  return "s" + std::to_string(n.i) + std::to_string(n.j);
}

Rational parse_rational(const json& v) {
  try {
    Rational r;
    if (v.is_number_integer())
      r = Rational(v.get<long>());
    else if (v.is_string())
      r = Rational(v.get<std::string>());
    else
      throw std::invalid_argument("not a rational");
    r.canonicalize();
    return r;
  } catch (const std::exception&) {
    throw RequestError(SOCLELAB_INVALID_INPUT,
                       "rationals must be integers or \"p/q\" strings");
  }
}

std::string rational_str(const Rational& r) { return r.get_str(); }

std::vector<long> parse_lambda(const json& req, Group g) {
  if (!req.contains("lambda") || !req["lambda"].is_array())
    throw RequestError(SOCLELAB_INVALID_INPUT, "lambda must be an array");
  std::vector<long> L;
  for (const auto& v : req["lambda"]) {
    if (!v.is_number_integer())
      throw RequestError(SOCLELAB_INVALID_INPUT,
                         "lambda coordinates must be integers");
    L.push_back(v.get<long>());
  }
  if (g == Group::SL3) {
    if (L.size() != 3 || !(L[0] > L[1] && L[1] > L[2]) ||
        L[0] + L[1] + L[2] != 0)
      throw RequestError(SOCLELAB_INVALID_INPUT,
                         "sl3 lambda must be three integers L1 > L2 > L3 "
                         "summing to zero");
  } else {
    if (L.size() != 2 || !(L[0] > L[1] && L[1] > 0))
      throw RequestError(SOCLELAB_INVALID_INPUT,
                         "sp2 lambda must be two integers L1 > L2 > 0");
  }
  return L;
}

json cmd_spectra(const json& req) {
  Group g = parse_group(req);
  std::vector<long> L = parse_lambda(req, g);
  long def_bound = g == Group::SL3 ? L[0] - L[2] + 4 : L[0] + 4;
  long bound = req.value("bound", def_bound);
  if (bound < 0)
    throw RequestError(SOCLELAB_INVALID_INPUT, "bound must be nonnegative");

  std::set<std::string> known;
  for (const auto& e : catalog(g)) known.insert(e.id);
  std::vector<std::string> modules;
  if (req.contains("modules")) {
    for (const auto& m : req["modules"]) {
      std::string id = m.get<std::string>();
      if (!known.count(id))
        throw RequestError(SOCLELAB_INVALID_INPUT, "unknown module " + id);
      modules.push_back(id);
    }
  } else {
    modules.assign(known.begin(), known.end());
  }

  json table = json::array();
  for (const auto& id : modules) {
    json rows = json::array();
    if (g == Group::SL3) {
      std::array<long, 3> La{L[0], L[1], L[2]};
      for (long lam = 0; lam <= bound; ++lam)
        rows.push_back({{"ktype", "[" + std::to_string(lam) + "]"},
                        {"standard", mult_standard_sl3(id, La, lam)},
                        {"irreducible", mult_irreducible_sl3(id, La, lam)}});
    } else {
      std::array<long, 2> La{L[0], L[1]};
      for (long l1 = -bound; l1 <= bound; ++l1)
        for (long l2 = -bound; l2 <= l1; ++l2) {
          U2Weight k{(int)l1, (int)l2};
          rows.push_back(
              {{"ktype",
                "[" + std::to_string(l1) + "," + std::to_string(l2) + "]"},
               {"standard", mult_standard_sp2(id, La, k)},
               {"irreducible", mult_irreducible_sp2(id, La, k)}});
        }
    }
    table.push_back({{"module", id}, {"rows", rows}});
  }
  return {{"command", "spectra"},
          {"group", req["group"]},
          {"lambda", L},
          {"bound", bound},
          {"table", table}};
}

json floors_json(const std::vector<std::vector<std::string>>& floors) {
  json out = json::array();
  for (const auto& f : floors) out.push_back(f);
  return out;
}

json cmd_socle(const json& req, int& code) {
  Group g = parse_group(req);
  Sigma sigma = parse_sigma(req.value("sigma", ""));
  std::vector<Rational> nu;
  if (req.contains("nu_word")) {
    // nu given as a Weyl word applied to the dominant lambda.
    std::vector<long> L = parse_lambda(req, g);
    for (long x : L) nu.push_back(Rational(x));
    std::vector<std::string> gens = weyl_generators(g);
    for (const auto& gen : req["nu_word"]) {
      std::string w = gen.get<std::string>();
      if (std::find(gens.begin(), gens.end(), w) == gens.end())
        throw RequestError(SOCLELAB_INVALID_INPUT,
                           "unknown Weyl generator " + w);
      nu = weyl_act_nu(g, w, nu);
    }
  } else if (req.contains("nu") && req["nu"].is_array()) {
    for (const auto& v : req["nu"]) nu.push_back(parse_rational(v));
  } else {
    throw RequestError(SOCLELAB_INVALID_INPUT,
                       "either nu or lambda with nu_word is required");
  }
  if (nu.size() != (g == Group::SL3 ? 3u : 2u))
    throw RequestError(SOCLELAB_INVALID_INPUT,
                       "nu coordinate count does not match the group");

  PrincipalSeries ps{g, sigma, nu};
  SeriesId sid;
  try {
    sid = identify_series(ps);
  } catch (const NoMatch& e) {
    throw RequestError(SOCLELAB_INVALID_INPUT, e.what());
  }

  json nu_out = json::array();
  for (const auto& r : nu) nu_out.push_back(rational_str(r));
  json resp{{"command", "socle"},
            {"group", req["group"]},
            {"sigma", sigma_str(sigma)},
            {"nu", nu_out},
            {"family", sid.family},
            {"pattern", sid.pattern},
            {"lambda", sid.Lambda}};

  SocleResult res = infer_socle(ps);
  if (std::holds_alternative<SocleDiagram>(res)) {
    const auto& d = std::get<SocleDiagram>(res);
    resp["status"] = "ok";
    resp["floors"] = floors_json(d.floors);
    resp["ascii"] = diagram_to_string(d.floors);
    code = SOCLELAB_OK;
  } else {
    const auto& a = std::get<AmbiguousReport>(res);
    resp["status"] = "ambiguous";
    json surv = json::array();
    for (const auto& fl : a.survivors) surv.push_back(floors_json(fl));
    resp["survivors"] = surv;
    code = SOCLELAB_AMBIGUOUS;
  }
  return resp;
}

// One closed-form/oracle comparison: the two constructions of the shift
// operator must differ by a single nonzero scalar shared across parameters.
bool scalar_equivalent(const std::vector<ShiftMatrix>& closed,
                       const std::vector<ShiftMatrix>& oracle) {
  Rational scalar;
  bool have_scalar = false;
  for (std::size_t n = 0; n < closed.size(); ++n) {
    const ExactMatrix &A = closed[n].mat, &B = oracle[n].mat;
    if (A.rows() != B.rows() || A.cols() != B.cols()) return false;
    for (std::size_t i = 0; i < A.rows(); ++i)
      for (std::size_t j = 0; j < A.cols(); ++j) {
        const Rational &a = A.at(i, j), &b = B.at(i, j);
        if ((a == 0) != (b == 0)) return false;
        if (b == 0) continue;
        if (!have_scalar) {
          scalar = a / b;
          have_scalar = have_scalar || scalar != 0;
        } else if (a != b * scalar) {
          return false;
        }
      }
  }
  return true;
}

json oracle_suite() {
  json cases = json::array();
  int passed = 0, total = 0;

  {
    std::vector<std::array<Rational, 3>> nus;
    PrincipalSeries base{Group::SL3, Sigma{0, 0},
                         {Rational(1), Rational(0), Rational(-1)}};
    for (const auto& [word, ps] : weyl_orbit(base))
      nus.push_back({ps.nu[0], ps.nu[1], ps.nu[2]});
    for (long lam = 0; lam <= 4; ++lam)
      for (int dir : {-2, -1, 1, 2}) {
        if (lam + dir < 0) continue;
        std::vector<ShiftMatrix> closed, oracle;
        for (const auto& nu : nus) {
          closed.push_back(shift_matrix(lam, nu, dir));
          oracle.push_back(nabla_oracle(lam, nu, dir));
        }
        bool ok = scalar_equivalent(closed, oracle);
        cases.push_back({{"name", "sl3 lambda=" + std::to_string(lam) +
                                      " dir=" + std::to_string(dir)},
                         {"pass", ok}});
        ++total;
        if (ok) ++passed;
      }
  }
  {
    std::vector<std::array<Rational, 2>> nus;
    PrincipalSeries base{Group::SP2, Sigma{0, 0},
                         {Rational(2), Rational(1)}};
    for (const auto& [word, ps] : weyl_orbit(base))
      nus.push_back({ps.nu[0], ps.nu[1]});
    const std::vector<Sp2Dir> dirs{{2, 0},  {1, 1},   {0, 2},
                                   {0, -2}, {-1, -1}, {-2, 0}};
    for (int l1 = -2; l1 <= 2; ++l1)
      for (int l2 = -2; l2 <= l1; ++l2)
        for (const auto& d : dirs) {
          U2Weight lam{l1, l2};
          U2Weight tgt{l1 + d[0], l2 + d[1]};
          if (tgt.l1 < tgt.l2) continue;
          std::vector<ShiftMatrix> closed, oracle;
          for (const auto& nu : nus) {
            closed.push_back(shift_matrix(lam, nu, d));
            oracle.push_back(nabla_oracle(lam, nu, d));
          }
          bool ok = scalar_equivalent(closed, oracle);
          cases.push_back(
              {{"name", "sp2 lambda=(" + std::to_string(l1) + "," +
                            std::to_string(l2) + ") dir=(" +
                            std::to_string(d[0]) + "," +
                            std::to_string(d[1]) + ")"},
               {"pass", ok}});
          ++total;
          if (ok) ++passed;
        }
  }
  return {{"command", "verify"},
          {"suite", "oracle"},
          {"cases", cases},
          {"passed", passed},
          {"total", total},
          {"status", passed == total ? "ok" : "fail"}};
}

// Grothendieck consistency: on every scanned K-type the standard-module
// multiplicity equals the sum over its composition series of the
// irreducible multiplicities.
bool tables_consistent(Group g, const std::vector<long>& L, long bound) {
  for (const auto& e : catalog(g)) {
    if (g == Group::SL3) {
      std::array<long, 3> La{L[0], L[1], L[2]};
      for (long lam = 0; lam <= bound; ++lam) {
        long sum = 0;
        for (const auto& c : e.composition)
          sum += mult_irreducible_sl3(c, La, lam);
        if (sum != mult_standard_sl3(e.id, La, lam)) return false;
      }
    } else {
      std::array<long, 2> La{L[0], L[1]};
      for (long l1 = -bound; l1 <= bound; ++l1)
        for (long l2 = -bound; l2 <= l1; ++l2) {
          long sum = 0;
          for (const auto& c : e.composition)
            sum += mult_irreducible_sp2(c, La, {(int)l1, (int)l2});
          if (sum != mult_standard_sp2(e.id, La, {(int)l1, (int)l2}))
            return false;
        }
    }
  }
  return true;
}

json cmd_verify(const json& req, int& code) {
  if (req.value("suite", "") == "oracle") {
    json resp = oracle_suite();
    code = resp["status"] == "ok" ? SOCLELAB_OK : SOCLELAB_MISMATCH;
    return resp;
  }
  Group g = parse_group(req);
  std::vector<long> L =
      g == Group::SL3 ? std::vector<long>{1, 0, -1} : std::vector<long>{2, 1};
  if (req.contains("lambda")) L = parse_lambda(req, g);

  json cases = json::array();
  int passed = 0, total = 0;
  GoldenReport rep = golden_verify(g, L);
  for (const auto& gc : rep.cases) {
    std::string pats;
    for (const auto& p : gc.patterns) pats += (pats.empty() ? "" : ",") + p;
    cases.push_back({{"name", "socle " + gc.family + " " + pats},
                     {"pass", gc.pass},
                     {"expected", gc.expected},
                     {"inferred", gc.inferred}});
    ++total;
    if (gc.pass) ++passed;
  }
  {
    long bound = g == Group::SL3 ? L[0] - L[2] + 6 : L[0] + 4;
    bool ok = tables_consistent(g, L, bound);
    cases.push_back({{"name", "multiplicity tables"}, {"pass", ok}});
    ++total;
    if (ok) ++passed;
  }
  code = passed == total ? SOCLELAB_OK : SOCLELAB_MISMATCH;
  return {{"command", "verify"},
          {"group", req["group"]},
          {"lambda", L},
          {"cases", cases},
          {"passed", passed},
          {"total", total},
          {"status", passed == total ? "ok" : "fail"}};
}

char* dup_string(const std::string& s) {
  char* out = (char*)std::malloc(s.size() + 1);
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

soclelab_ctx* soclelab_create(const char* data_dir) {
  if (data_dir && *data_dir) setenv("SOCLELAB_DATA", data_dir, 1);
  return new (std::nothrow) soclelab_ctx{};
}

void soclelab_destroy(soclelab_ctx* ctx) { delete ctx; }

int soclelab_request(soclelab_ctx* ctx, const char* request,
                     char** response) {
  if (!ctx || !request || !response) return SOCLELAB_INVALID_INPUT;
  *response = nullptr;
  ctx->last_error.clear();
  int code = SOCLELAB_OK;
  json resp;
  try {
    json req = json::parse(request);
    std::string cmd = req.value("command", "");
    if (cmd == "spectra")
      resp = cmd_spectra(req);
    else if (cmd == "socle")
      resp = cmd_socle(req, code);
    else if (cmd == "verify")
      resp = cmd_verify(req, code);
    else
      throw RequestError(SOCLELAB_INVALID_INPUT,
                         "command must be \"spectra\", \"socle\", or "
                         "\"verify\"");
  } catch (const RequestError& e) {
    ctx->last_error = e.what();
    resp = {{"status", "error"}, {"error", e.what()}};
    code = e.code;
  } catch (const json::exception& e) {
    ctx->last_error = e.what();
    resp = {{"status", "error"}, {"error", e.what()}};
    code = SOCLELAB_INVALID_INPUT;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    resp = {{"status", "error"}, {"error", e.what()}};
    code = SOCLELAB_INTERNAL;
  }
  *response = dup_string(resp.dump());
  if (!*response) return SOCLELAB_INTERNAL;
  return code;
}

void soclelab_free_string(char* s) { std::free(s); }

const char* soclelab_last_error(const soclelab_ctx* ctx) {
  return ctx ? ctx->last_error.c_str() : "";
}

}  // extern "C"
