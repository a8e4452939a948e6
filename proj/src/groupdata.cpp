#include "groupdata.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>

namespace soclelab {

std::string to_string(Group g) { return g == Group::SL3 ? "sl3" : "sp2"; }

std::string data_dir() {
  if (const char* e = std::getenv("SOCLELAB_DATA")) return e;
  return SOCLELAB_DEFAULT_DATA;
}

// ---------------------------------------------------------------------------
// Weyl action
// ---------------------------------------------------------------------------

std::vector<std::string> weyl_generators(Group g) {
  if (g == Group::SL3) return {"r12", "r23"};
  return {"r12", "e1", "e2"};
}

Sigma weyl_act_sigma(Group g, const std::string& gen, Sigma s) {
  Sigma n = s.normalized();
  if (gen == "r12") return Sigma{n.j, n.i}.normalized();
  if (g == Group::SL3 && gen == "r23")
    return Sigma{n.i + n.j, n.j}.normalized();
  if (g == Group::SP2 && (gen == "e1" || gen == "e2")) return n;
  throw std::invalid_argument("unknown Weyl generator: " + gen);
}

std::vector<Rational> weyl_act_nu(Group g, const std::string& gen,
                                  const std::vector<Rational>& nu) {
  std::vector<Rational> out = nu;
  if (gen == "r12") {
    std::swap(out[0], out[1]);
  } else if (g == Group::SL3 && gen == "r23") {
    std::swap(out[1], out[2]);
  } else if (g == Group::SP2 && gen == "e1") {
    out[0] = -out[0];
  } else if (g == Group::SP2 && gen == "e2") {
    out[1] = -out[1];
  } else {
    throw std::invalid_argument("unknown Weyl generator: " + gen);
  }
  return out;
}

PrincipalSeries weyl_act(const std::string& gen, const PrincipalSeries& ps) {
  return {ps.group, weyl_act_sigma(ps.group, gen, ps.sigma),
          weyl_act_nu(ps.group, gen, ps.nu)};
}

namespace {
std::string ps_key(const PrincipalSeries& ps) {
  Sigma n = ps.sigma.normalized();
  std::string k = std::to_string(n.i) + std::to_string(n.j);
  for (const auto& x : ps.nu) k += "|" + rational_to_string(x);
  return k;
}
}  // namespace

std::vector<std::pair<std::string, PrincipalSeries>> weyl_orbit(
    const PrincipalSeries& ps) {
  std::vector<std::pair<std::string, PrincipalSeries>> out;
  std::set<std::string> seen;
  std::deque<std::pair<std::string, PrincipalSeries>> queue{{"", ps}};
  seen.insert(ps_key(ps));
  while (!queue.empty()) {
    auto [word, cur] = queue.front();
    queue.pop_front();
    out.push_back({word, cur});
    for (const auto& gen : weyl_generators(ps.group)) {
      PrincipalSeries next = weyl_act(gen, cur);
      if (seen.insert(ps_key(next)).second)
        queue.push_back({word.empty() ? gen : word + "," + gen, next});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog file: " + path);
  std::vector<CatalogEntry> entries;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    CatalogEntry e;
    std::string comp;
    if (!(ls >> e.id >> e.length >> e.dual >> e.quasidual >> comp)) continue;
    e.composition = split(comp, ',');
    entries.push_back(std::move(e));
  }
  if (entries.empty()) throw std::runtime_error("empty catalog: " + path);
  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog(Group g) {
  static const std::vector<CatalogEntry> sl3 =
      load_catalog(data_dir() + "/catalog_sl3.txt");
  static const std::vector<CatalogEntry> sp2 =
      load_catalog(data_dir() + "/catalog_sp2.txt");
  return g == Group::SL3 ? sl3 : sp2;
}

const CatalogEntry& catalog_entry(Group g, const std::string& id) {
  for (const auto& e : catalog(g))
    if (e.id == id) return e;
  throw std::invalid_argument("unknown factor id: " + id);
}

std::string dual_factor(Group g, const std::string& id) {
  return catalog_entry(g, id).dual;
}

std::string quasidual_factor(Group g, const std::string& id) {
  return catalog_entry(g, id).quasidual;
}

// ---------------------------------------------------------------------------
// Series identification
// ---------------------------------------------------------------------------

namespace {

long to_integer(const Rational& r, const std::string& what) {
  Rational c = r;
  c.canonicalize();
  if (c.get_den() != 1)
    throw NoMatch(what + " is not integral: " + rational_to_string(r));
  return c.get_num().get_si();
}

std::string apply_to_pattern(Group g, const std::string& gen,
                             const std::string& pat) {
  std::string out = pat;
  if (g == Group::SL3) {
    if (gen == "r12")
      std::swap(out[0], out[1]);
    else
      std::swap(out[1], out[2]);
  } else {
    // SP2 patterns look like "+1-2": sign,digit,sign,digit.
    if (gen == "r12") {
      std::swap(out[0], out[2]);
      std::swap(out[1], out[3]);
    } else {
      std::size_t pos = (gen == "e1") ? 0 : 2;
      out[pos] = (out[pos] == '+') ? '-' : '+';
    }
  }
  return out;
}

// Base (pattern, sigma) of each family's Weyl orbit, for given sorted
// parameters.
std::pair<std::string, Sigma> family_base(Group g, const std::string& family,
                                          const std::vector<long>& L) {
  if (g == Group::SL3) {
    long a = L[0] - L[2], b = L[1] - L[2], c = L[0] - L[1];
    if (family == "g3") return {"123", Sigma{(int)a, (int)(b + 1)}};
    if (family == "g4") return {"213", Sigma{(int)b, (int)(a + 1)}};
    if (family == "g5") return {"132", Sigma{(int)c, (int)(b + 1)}};
    if (family == "g0p") return {"123", Sigma{(int)a, (int)b}};
  } else {
    long L1 = L[0], L2 = L[1];
    if (family == "g10") return {"+1+2", Sigma{(int)L1, (int)(L2 + 1)}};
    if (family == "g11") return {"+2+1", Sigma{(int)L2, (int)(L1 + 1)}};
    if (family == "g4p") return {"+1+2", Sigma{(int)(L1 + 1), (int)(L2 + 1)}};
    if (family == "g0pp") return {"+1+2", Sigma{(int)L1, (int)L2}};
  }
  throw std::invalid_argument("unknown series family: " + family);
}

// pattern -> sigma over the whole orbit, by breadth-first closure.
std::map<std::string, Sigma> family_orbit(Group g, const std::string& family,
                                          const std::vector<long>& L) {
  auto [pat0, sig0] = family_base(g, family, L);
  std::map<std::string, Sigma> orbit{{pat0, sig0.normalized()}};
  std::deque<std::string> queue{pat0};
  while (!queue.empty()) {
    std::string pat = queue.front();
    queue.pop_front();
    for (const auto& gen : weyl_generators(g)) {
      std::string npat = apply_to_pattern(g, gen, pat);
      Sigma nsig = weyl_act_sigma(g, gen, orbit.at(pat));
      auto it = orbit.find(npat);
      if (it == orbit.end()) {
        orbit[npat] = nsig;
        queue.push_back(npat);
      } else if (!(it->second == nsig)) {
        throw std::logic_error("inconsistent sigma in family orbit");
      }
    }
  }
  return orbit;
}

std::vector<Rational> pattern_nu(Group g, const std::string& pattern,
                                 const std::vector<long>& L) {
  std::vector<Rational> nu;
  if (g == Group::SL3) {
    for (char c : pattern) nu.push_back(Rational(L[c - '1']));
  } else {
    for (std::size_t k = 0; k < 4; k += 2) {
      long v = L[pattern[k + 1] - '1'];
      nu.push_back(Rational(pattern[k] == '+' ? v : -v));
    }
  }
  return nu;
}

std::vector<std::string> families(Group g) {
  if (g == Group::SL3) return {"g3", "g4", "g5", "g0p"};
  return {"g10", "g11", "g4p", "g0pp"};
}

}  // namespace

std::vector<std::string> family_patterns(Group g) {
  if (g == Group::SL3) return {"123", "213", "231", "321", "312", "132"};
  return {"+1+2", "-1-2", "+1-2", "-1+2", "+2+1", "-2-1", "+2-1", "-2+1"};
}

PrincipalSeries series_instance(Group g, const std::string& family,
                                const std::string& pattern,
                                const std::vector<long>& Lambda) {
  auto orbit = family_orbit(g, family, Lambda);
  auto it = orbit.find(pattern);
  if (it == orbit.end())
    throw std::invalid_argument("unknown pattern: " + pattern);
  return {g, it->second, pattern_nu(g, pattern, Lambda)};
}

SeriesId identify_series(const PrincipalSeries& ps) {
  std::vector<long> vals;
  for (const auto& x : ps.nu) vals.push_back(to_integer(x, "nu entry"));

  std::vector<long> L;
  std::string pattern;
  if (ps.group == Group::SL3) {
    if (vals.size() != 3) throw NoMatch("SL3 nu needs 3 entries");
    L = vals;
    std::sort(L.begin(), L.end(), std::greater<long>());
    if (L[0] == L[1] || L[1] == L[2])
      throw NoMatch("singular parameter (repeated nu entries)");
    for (long v : vals)
      for (int k = 0; k < 3; ++k)
        if (L[k] == v) pattern += char('1' + k);
  } else {
    if (vals.size() != 2) throw NoMatch("SP2 nu needs 2 entries");
    L = {std::abs(vals[0]), std::abs(vals[1])};
    std::sort(L.begin(), L.end(), std::greater<long>());
    if (L[1] == 0 || L[0] == L[1])
      throw NoMatch("singular parameter (zero or equal |nu| entries)");
    for (long v : vals) {
      pattern += (v > 0) ? '+' : '-';
      pattern += (std::abs(v) == L[0]) ? '1' : '2';
    }
  }

  for (const auto& fam : families(ps.group)) {
    auto orbit = family_orbit(ps.group, fam, L);
    auto it = orbit.find(pattern);
    if (it != orbit.end() && it->second == ps.sigma)
      return {fam, pattern, L};
  }
  throw NoMatch("no series family matches the given sigma");
}

// ---------------------------------------------------------------------------
// Relations
// ---------------------------------------------------------------------------

PrincipalSeries dual_series(const PrincipalSeries& ps) {
  PrincipalSeries out = ps;
  for (auto& x : out.nu) x = -x;
  return out;
}

PrincipalSeries mu_twist(const PrincipalSeries& ps) {
  if (ps.group == Group::SP2) return ps;
  Sigma n = ps.sigma.normalized();
  return {ps.group, Sigma{n.i, n.i + n.j}.normalized(),
          {-ps.nu[2], -ps.nu[1], -ps.nu[0]}};
}

PrincipalSeries updown_partner(const PrincipalSeries& ps) {
  if (ps.group == Group::SP2) return ps;
  Sigma n = ps.sigma.normalized();
  return {ps.group, Sigma{n.i, n.i + n.j}.normalized(),
          {ps.nu[2], ps.nu[1], ps.nu[0]}};
}

}  // namespace soclelab
