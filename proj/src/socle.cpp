#include "socle.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>

#include "kspectra.hpp"
#include "shiftops.hpp"

namespace soclelab {

namespace {

using Multiset = std::map<std::string, int>;
using FloorList = std::vector<Multiset>;

std::array<long, 3> lam3(const std::vector<long>& L) {
  return {L[0], L[1], L[2]};
}
std::array<long, 2> lam2(const std::vector<long>& L) { return {L[0], L[1]}; }

std::array<Rational, 3> nu3_of(const PrincipalSeries& ps) {
  return {ps.nu[0], ps.nu[1], ps.nu[2]};
}
std::array<Rational, 2> nu2_of(const PrincipalSeries& ps) {
  return {ps.nu[0], ps.nu[1]};
}

int catalog_index(Group g, const std::string& id) {
  const auto& cat = catalog(g);
  for (std::size_t i = 0; i < cat.size(); ++i)
    if (cat[i].id == id) return (int)i;
  throw std::invalid_argument("unknown factor id: " + id);
}

std::vector<std::string> sorted_ids(Group g, const Multiset& floor) {
  std::vector<std::string> out;
  for (const auto& [id, n] : floor)
    for (int k = 0; k < n; ++k) out.push_back(id);
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return catalog_index(g, a) < catalog_index(g, b);
  });
  return out;
}

// All exact data the constraint search needs for one series.
struct SeriesData {
  Group group;
  std::string family, pattern;
  std::vector<long> Lambda;
  PrincipalSeries inst;
  Multiset multiset;
  std::vector<std::string> ids;  // distinct factors
  std::map<std::string, int> parity;
  std::set<std::string> cands;
  std::map<std::string, int> bottom_cap;
  std::set<std::string> top;
  std::map<std::string, int> top_cap;
  bool pairing = false;
  std::map<std::string, std::string> partner;
  std::map<std::string, std::map<std::string, bool>> adj;
  // One record per K-type in the scan window carrying the sigma part: the
  // per-factor multiplicities, the isotypic basis, and the images of every
  // basis vector under composed shifts of length <= 2.
  struct KTypeInfo {
    std::string key;
    std::map<std::string, long> mult;
    std::vector<std::map<int, Rational>> basis;
    std::vector<std::pair<std::string, std::map<int, Rational>>> images;
  };
  std::vector<KTypeInfo> ktypes;
  // factor -> indices into ktypes of its multiplicity-one K-types
  std::map<std::string, std::vector<std::size_t>> canon;
  // target K-type key -> per-factor multiplicity
  std::map<std::string, std::map<std::string, long>> tmult;
  // key -> outgoing single-step shift operators into recorded K-types
  struct ShiftEdge {
    std::string to;
    ShiftMatrix mat;
  };
  std::map<std::string, std::vector<ShiftEdge>> edges;
};

long kernel_dim(const PrincipalSeries& ps, const SeriesId& sid,
                const std::string& id) {
  if (ps.group == Group::SL3) {
    auto [lam, tests] = embedding_tests_sl3(id, lam3(sid.Lambda));
    return (long)kernel_system(ps, lam, tests).basis.size();
  }
  auto [t, tests] = embedding_tests_sp2(id, lam2(sid.Lambda));
  return (long)kernel_system(ps, t, tests).basis.size();
}

std::string key_sl3(long lam) { return std::to_string(lam); }
std::string key_sp2(U2Weight k) {
  return std::to_string(k.l1) + "," + std::to_string(k.l2);
}

void build_ktype_tables(SeriesData& S) {
  auto note_tmult_sl3 = [&](long t) {
    auto& row = S.tmult[key_sl3(t)];
    if (!row.empty()) return;
    for (const auto& id : S.ids)
      row[id] = mult_irreducible_sl3(id, lam3(S.Lambda), t);
  };
  auto note_tmult_sp2 = [&](U2Weight t) {
    auto& row = S.tmult[key_sp2(t)];
    if (!row.empty()) return;
    for (const auto& id : S.ids)
      row[id] = mult_irreducible_sp2(id, lam2(S.Lambda), t);
  };

  if (S.group == Group::SL3) {
    long B = S.Lambda[0] - S.Lambda[2] + 4;
    auto nu = nu3_of(S.inst);
    for (long lam = 0; lam <= B; ++lam) {
      if (!sigma_occurs_so3((int)lam, S.inst.sigma)) continue;
      SeriesData::KTypeInfo info;
      info.key = key_sl3(lam);
      info.basis = m_isotypic_so3((int)lam, S.inst.sigma);
      long total = 0;
      std::string owner;
      for (const auto& id : S.ids) {
        long m = mult_irreducible_sl3(id, lam3(S.Lambda), lam);
        info.mult[id] = m;
        total += m * S.multiset.at(id);
        if (m > 0) owner = id;
      }
      note_tmult_sl3(lam);
      for (const auto& vec : info.basis) {
        info.images.push_back({info.key, vec});
        for (int d1 : {-2, -1, 1, 2}) {
          long t = lam + d1;
          if (t < 0) continue;
          auto img1 = compose(lam, nu, {d1}).apply(vec);
          if (!img1.empty()) {
            info.images.push_back({key_sl3(t), img1});
            note_tmult_sl3(t);
          }
          for (int d2 : {-2, -1, 1, 2}) {
            long u = t + d2;
            if (u < 0) continue;
            auto img2 = compose(lam, nu, {d1, d2}).apply(vec);
            if (!img2.empty()) {
              info.images.push_back({key_sl3(u), img2});
              note_tmult_sl3(u);
            }
          }
        }
      }
      S.ktypes.push_back(std::move(info));
      if (total == 1) S.canon[owner].push_back(S.ktypes.size() - 1);
    }
    return;
  }

  long B = S.Lambda[0] + 4;
  auto nu = nu2_of(S.inst);
  static const std::vector<Sp2Dir> dirs{{2, 0},  {1, 1},   {0, 2},
                                        {0, -2}, {-1, -1}, {-2, 0}};
  for (int l1 = (int)-B; l1 <= (int)B; ++l1)
    for (int l2 = (int)-B; l2 <= l1; ++l2) {
      U2Weight k{l1, l2};
      if (!sigma_occurs_u2(k, S.inst.sigma)) continue;
      SeriesData::KTypeInfo info;
      info.key = key_sp2(k);
      // The series realizes the contragredient string: negate the labels.
      for (int q : m_isotypic_u2(k, S.inst.sigma))
        info.basis.push_back({{-q, Rational(1)}});
      long total = 0;
      std::string owner;
      for (const auto& id : S.ids) {
        long m = mult_irreducible_sp2(id, lam2(S.Lambda), k);
        info.mult[id] = m;
        total += m * S.multiset.at(id);
        if (m > 0) owner = id;
      }
      note_tmult_sp2(k);
      for (const auto& vec : info.basis) {
        info.images.push_back({info.key, vec});
        for (const auto& d1 : dirs) {
          U2Weight t{k.l1 + d1[0], k.l2 + d1[1]};
          if (!t.valid()) continue;
          auto img1 = compose(k, nu, {d1}).apply(vec);
          if (!img1.empty()) {
            info.images.push_back({key_sp2(t), img1});
            note_tmult_sp2(t);
          }
          for (const auto& d2 : dirs) {
            U2Weight u{t.l1 + d2[0], t.l2 + d2[1]};
            if (!u.valid()) continue;
            auto img2 = compose(k, nu, {d1, d2}).apply(vec);
            if (!img2.empty()) {
              info.images.push_back({key_sp2(u), img2});
              note_tmult_sp2(u);
            }
          }
        }
      }
      S.ktypes.push_back(std::move(info));
      if (total == 1) S.canon[owner].push_back(S.ktypes.size() - 1);
    }
}

// One single-step shift operator per recorded K-type and direction, kept only
// when the target K-type is recorded as well.
void build_edges(SeriesData& S) {
  if (S.group == Group::SL3) {
    auto nu = nu3_of(S.inst);
    for (const auto& [key, row] : S.tmult) {
      long lam = std::stol(key);
      for (int d : {-2, -1, 1, 2}) {
        long t = lam + d;
        if (t < 0 || !S.tmult.count(key_sl3(t))) continue;
        S.edges[key].push_back({key_sl3(t), shift_matrix(lam, nu, d)});
      }
    }
    return;
  }
  auto nu = nu2_of(S.inst);
  static const std::vector<Sp2Dir> dirs{{2, 0},  {1, 1},   {0, 2},
                                        {0, -2}, {-1, -1}, {-2, 0}};
  for (const auto& [key, row] : S.tmult) {
    auto comma = key.find(',');
    U2Weight k{std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1))};
    for (const auto& d : dirs) {
      U2Weight t{k.l1 + d[0], k.l2 + d[1]};
      if (!t.valid() || !S.tmult.count(key_sp2(t))) continue;
      S.edges[key].push_back({key_sp2(t), shift_matrix(k, nu, d)});
    }
  }
}

SeriesData build_series_data(Group g, const std::string& family,
                             const std::string& pattern,
                             const std::vector<long>& Lambda) {
  SeriesData S;
  S.group = g;
  S.family = family;
  S.pattern = pattern;
  S.Lambda = Lambda;
  S.inst = series_instance(g, family, pattern, Lambda);
  SeriesId sid{family, pattern, Lambda};

  for (const auto& f : catalog_entry(g, family).composition) {
    if (!S.multiset.count(f)) S.ids.push_back(f);
    ++S.multiset[f];
  }
  for (const auto& id : S.ids) {
    S.parity[id] = catalog_entry(g, id).length % 2;
    S.partner[id] = quasidual_factor(g, id);
  }

  for (const auto& e : candidate_submodules(S.inst)) {
    S.cands.insert(e.id);
    S.bottom_cap[e.id] = S.multiset.at(e.id) > 1
                             ? (int)kernel_dim(S.inst, sid, e.id)
                             : 1;
  }

  PrincipalSeries dps = dual_series(S.inst);
  SeriesId did = identify_series(dps);
  for (const auto& e : candidate_submodules(dps)) {
    std::string d = dual_factor(g, e.id);
    S.top.insert(d);
    int dmult = 0;
    for (const auto& f : catalog_entry(g, did.family).composition)
      if (f == e.id) ++dmult;
    S.top_cap[d] = dmult > 1 ? (int)kernel_dim(dps, did, e.id) : 1;
  }

  if (g == Group::SP2) {
    S.pairing = true;
  } else {
    SeriesId tid = identify_series(mu_twist(S.inst));
    S.pairing = (tid.family == family && tid.pattern == pattern);
  }

  long bound = g == Group::SL3 ? Lambda[0] - Lambda[2] + 6 : Lambda[0] + 6;
  for (const auto& a : S.ids)
    for (const auto& b : S.ids) S.adj[a][b] = adjacency(g, Lambda, a, b, bound);

  build_ktype_tables(S);
  build_edges(S);
  return S;
}

// ---------------------------------------------------------------------------
// Constraint checks.
// ---------------------------------------------------------------------------

std::size_t rank_of(const std::vector<const std::map<int, Rational>*>& vecs) {
  std::set<int> keys;
  for (const auto* v : vecs)
    for (const auto& [q, c] : *v) keys.insert(q);
  std::map<int, std::size_t> col;
  for (int q : keys) col[q] = col.size();
  ExactMatrix M(vecs.size(), keys.size());
  for (std::size_t r = 0; r < vecs.size(); ++r)
    for (const auto& [q, c] : *vecs[r]) M.at(r, col[q]) = c;
  return M.rank();
}

using Vec = std::map<int, Rational>;
using VecSpace = std::map<std::string, std::vector<Vec>>;

std::size_t rank_of(const std::vector<Vec>& vecs) {
  std::vector<const Vec*> ptrs;
  for (const auto& v : vecs) ptrs.push_back(&v);
  return rank_of(ptrs);
}

long space_rank(const VecSpace& sp, const std::string& key) {
  auto it = sp.find(key);
  return it == sp.end() ? 0 : (long)rank_of(it->second);
}

// Closes a family of subspaces under all single-step shift operators.
void close_under_edges(const SeriesData& S, VecSpace& space) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::string> keys;
    for (const auto& [key, vecs] : space) keys.push_back(key);
    for (const auto& key : keys) {
      auto ei = S.edges.find(key);
      if (ei == S.edges.end()) continue;
      for (const auto& edge : ei->second) {
        for (std::size_t i = 0; i < space[key].size(); ++i) {
          auto img = edge.mat.apply(space[key][i]);
          if (img.empty()) continue;
          auto& tgt = space[edge.to];
          auto before = rank_of(tgt);
          tgt.push_back(std::move(img));
          if (rank_of(tgt) == before)
            tgt.pop_back();
          else
            changed = true;
        }
      }
    }
  }
}

// Kernel vectors of the socle candidates, closed under all shifts: the
// K-type-wise subspaces of the submodule the socle generates.
VecSpace socle_subspaces(const SeriesData& S, const Multiset& bottom) {
  VecSpace W;
  for (const auto& [id, n] : bottom) {
    if (S.group == Group::SL3) {
      auto [lam, tests] = embedding_tests_sl3(id, lam3(S.Lambda));
      for (const auto& v : kernel_system(S.inst, lam, tests).basis)
        W[key_sl3(lam)].push_back(v.coeff);
    } else {
      auto [t, tests] = embedding_tests_sp2(id, lam2(S.Lambda));
      for (const auto& v : kernel_system(S.inst, t, tests).basis)
        W[key_sp2(t)].push_back(v.coeff);
    }
  }
  close_under_edges(S, W);
  return W;
}

// Basis of the space of vectors at the K-type `tkey` all of whose battery
// images fall into the given subspaces (the battery kernel relative to W).
std::vector<Vec> relative_kernel(const SeriesData& S, const VecSpace& W,
                                 const std::string& tkey,
                                 const std::vector<Vec>& basis,
                                 const std::vector<std::vector<int>>& sl3_tests,
                                 const std::vector<std::vector<Sp2Dir>>& sp2_tests) {
  std::size_t n = basis.size();
  struct Block {
    std::vector<Vec> imgs;          // image of each basis vector
    const std::vector<Vec>* wv;     // allowed target subspace (may be null)
  };
  std::vector<Block> blocks;
  std::size_t mu_total = 0;

  auto add_block = [&](std::vector<Vec> imgs, const std::string& target) {
    bool all_zero = true;
    for (const auto& v : imgs)
      if (!v.empty()) all_zero = false;
    if (all_zero) return;
    Block b;
    b.imgs = std::move(imgs);
    auto wi = W.find(target);
    b.wv = wi == W.end() ? nullptr : &wi->second;
    if (b.wv) mu_total += b.wv->size();
    blocks.push_back(std::move(b));
  };

  if (S.group == Group::SL3) {
    long lam0 = std::stol(tkey);
    auto nu = nu3_of(S.inst);
    for (const auto& battery : sl3_tests) {
      long cur = lam0;
      std::vector<Vec> imgs = basis;
      bool dead = false;
      for (int d : battery) {
        if (cur + d < 0) {
          dead = true;
          break;
        }
        auto sm = shift_matrix(cur, nu, d);
        for (auto& v : imgs) v = sm.apply(v);
        cur += d;
      }
      if (!dead) add_block(std::move(imgs), key_sl3(cur));
    }
  } else {
    auto comma = tkey.find(',');
    U2Weight k0{std::stoi(tkey.substr(0, comma)),
                std::stoi(tkey.substr(comma + 1))};
    auto nu = nu2_of(S.inst);
    for (const auto& battery : sp2_tests) {
      U2Weight cur = k0;
      std::vector<Vec> imgs = basis;
      bool dead = false;
      for (const auto& d : battery) {
        U2Weight t{cur.l1 + d[0], cur.l2 + d[1]};
        if (!t.valid()) {
          dead = true;
          break;
        }
        auto sm = shift_matrix(cur, nu, d);
        for (auto& v : imgs) v = sm.apply(v);
        cur = t;
      }
      if (!dead) add_block(std::move(imgs), key_sp2(cur));
    }
  }

  // One joint linear system: unknown coefficients on the basis, plus one
  // unknown per allowed-subspace generator per battery.
  std::size_t rows = 0;
  std::vector<std::map<int, std::size_t>> cols(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    std::set<int> qs;
    for (const auto& v : blocks[b].imgs)
      for (const auto& [q, c] : v) qs.insert(q);
    if (blocks[b].wv)
      for (const auto& w : *blocks[b].wv)
        for (const auto& [q, c] : w) qs.insert(q);
    for (int q : qs) cols[b][q] = rows++;
  }
  ExactMatrix M(rows, n + mu_total);
  std::size_t mu_off = n;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& [q, c] : blocks[b].imgs[i]) M.at(cols[b][q], i) = c;
    if (blocks[b].wv)
      for (const auto& w : *blocks[b].wv) {
        for (const auto& [q, c] : w) M.at(cols[b][q], mu_off) = -c;
        ++mu_off;
      }
  }
  std::vector<Vec> kernel;
  for (const auto& sol : M.nullspace()) {
    Vec v;
    for (std::size_t i = 0; i < n; ++i) {
      if (sol[i] == 0) continue;
      for (const auto& [q, c] : basis[i]) {
        v[q] += sol[i] * c;
        if (v[q] == 0) v.erase(q);
      }
    }
    if (!v.empty()) kernel.push_back(std::move(v));
  }
  return kernel;
}

// Lower bound on the second floor: re-runs the submodule-kernel computation
// in the quotient by the socle.  A factor copy is certified when a battery
// kernel vector modulo the socle subspaces generates, together with them, a
// subspace whose K-type-wise growth fits inside one copy of the factor's
// K-spectrum.
Multiset second_floor_lower(const SeriesData& S, const Multiset& bottom) {
  VecSpace W = socle_subspaces(S, bottom);
  Multiset lower;
  int p2 = 1 - S.parity.at(bottom.begin()->first);
  for (const auto& id : S.ids) {
    if (S.parity.at(id) != p2) continue;
    int remaining =
        S.multiset.at(id) - (bottom.count(id) ? bottom.at(id) : 0);
    if (remaining <= 0) continue;

    std::string tkey;
    std::vector<std::vector<int>> sl3_tests;
    std::vector<std::vector<Sp2Dir>> sp2_tests;
    if (S.group == Group::SL3) {
      auto [lam, tests] = embedding_tests_sl3(id, lam3(S.Lambda));
      tkey = key_sl3(lam);
      sl3_tests = tests;
    } else {
      auto [t, tests] = embedding_tests_sp2(id, lam2(S.Lambda));
      tkey = key_sp2(t);
      sp2_tests = tests;
    }
    const SeriesData::KTypeInfo* info = nullptr;
    for (const auto& kt : S.ktypes)
      if (kt.key == tkey) info = &kt;
    if (!info || info->basis.empty()) continue;

    auto kernel = relative_kernel(S, W, tkey, info->basis, sl3_tests, sp2_tests);
    // Keep kernel vectors independent modulo the socle subspace at tkey.
    std::vector<Vec> pool =
        W.count(tkey) ? W.at(tkey) : std::vector<Vec>{};
    int certified = 0;
    for (const auto& v : kernel) {
      auto before = rank_of(pool);
      pool.push_back(v);
      if (rank_of(pool) == before) {
        pool.pop_back();
        continue;
      }
      // Certify: the closure of W + v must not outgrow W by more than one
      // copy of the factor's K-spectrum.
      VecSpace C = W;
      C[tkey].push_back(v);
      close_under_edges(S, C);
      bool ok = true;
      for (const auto& [key, vecs] : C) {
        long growth = (long)rank_of(vecs) - space_rank(W, key);
        if (growth <= 0) continue;
        long m = S.tmult.count(key) ? S.tmult.at(key).at(id) : 0;
        if (growth > m) {
          ok = false;
          break;
        }
      }
      if (!ok) {
        pool.pop_back();
        continue;
      }
      ++certified;
      if (certified == remaining) break;
    }
    if (certified > 0) lower[id] = certified;
  }
  return lower;
}

// Capacity check.  A K-type is saturated by the prefix when every factor
// occurring there is placed at full multiplicity; its whole isotypic space
// then lies inside the partial submodule, and so does the subspace generated
// from it by arbitrary compositions of shift operators.  Iterates single
// shift steps to a fixpoint and requires that at every K-type the generated
// subspace stays within the multiplicity the placed factors provide.
bool prefix_capacity_ok(const SeriesData& S, const Multiset& prefix) {
  std::map<std::string, std::vector<std::map<int, Rational>>> space;
  for (const auto& info : S.ktypes) {
    bool sat = true;
    for (const auto& [id, m] : info.mult) {
      if (m == 0) continue;
      auto it = prefix.find(id);
      if (it == prefix.end() || it->second != S.multiset.at(id)) {
        sat = false;
        break;
      }
    }
    if (sat && !info.basis.empty()) space[info.key] = info.basis;
  }

  auto cap_of = [&](const std::string& key) {
    long cap = 0;
    const auto& row = S.tmult.at(key);
    for (const auto& [id, n] : prefix) cap += n * row.at(id);
    return cap;
  };
  auto rank_at = [&](const std::string& key) {
    std::vector<const std::map<int, Rational>*> vecs;
    for (const auto& v : space[key]) vecs.push_back(&v);
    return (long)rank_of(vecs);
  };

  std::map<std::string, long> rank;
  for (const auto& [key, vecs] : space) {
    rank[key] = rank_at(key);
    if (rank[key] > cap_of(key)) return false;
  }

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::string> keys;
    for (const auto& [key, vecs] : space) keys.push_back(key);
    for (const auto& key : keys) {
      auto ei = S.edges.find(key);
      if (ei == S.edges.end()) continue;
      for (const auto& edge : ei->second) {
        for (std::size_t i = 0; i < space[key].size(); ++i) {
          auto img = edge.mat.apply(space[key][i]);
          if (img.empty()) continue;
          long before = rank.count(edge.to) ? rank[edge.to] : 0;
          space[edge.to].push_back(std::move(img));
          long after = rank_at(edge.to);
          if (after == before) {
            space[edge.to].pop_back();
            continue;
          }
          rank[edge.to] = after;
          if (after > cap_of(edge.to)) return false;
          changed = true;
        }
      }
    }
  }
  return true;
}

bool floor_adjacent(const SeriesData& S, const Multiset& prev,
                    const Multiset& next) {
  for (const auto& [a, n] : next) {
    bool ok = false;
    for (const auto& [b, m] : prev)
      if (S.adj.at(a).at(b)) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

int floor_parity(const SeriesData& S, const Multiset& f) {
  return S.parity.at(f.begin()->first);
}

bool uniform_parity(const SeriesData& S, const Multiset& f) {
  int p = floor_parity(S, f);
  for (const auto& [id, n] : f)
    if (S.parity.at(id) != p) return false;
  return true;
}

bool pairing_ok(const SeriesData& S, const Multiset& f) {
  if (!S.pairing) return true;
  for (const auto& [id, n] : f) {
    const std::string& p = S.partner.at(id);
    if (p == id) continue;
    auto it = f.find(p);
    if (it == f.end() || it->second != n) return false;
  }
  return true;
}

void ms_subtract(Multiset& a, const Multiset& b) {
  for (const auto& [id, n] : b) {
    a[id] -= n;
    if (a[id] == 0) a.erase(id);
  }
}

void ms_add(Multiset& a, const Multiset& b) {
  for (const auto& [id, n] : b) a[id] += n;
}

// Enumerates nonempty sub-multisets of `avail` restricted to ids of parity p.
void enumerate_floors(const SeriesData& S, const Multiset& avail, int p,
                      std::vector<Multiset>& out) {
  std::vector<std::pair<std::string, int>> slots;
  for (const auto& [id, n] : avail)
    if (S.parity.at(id) == p) slots.push_back({id, n});
  Multiset cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == slots.size()) {
      if (!cur.empty() && pairing_ok(S, cur)) out.push_back(cur);
      return;
    }
    for (int c = 0; c <= slots[i].second; ++c) {
      if (c > 0) cur[slots[i].first] = c;
      rec(i + 1);
      if (c > 0) cur.erase(slots[i].first);
    }
  };
  rec(0);
}

bool top_ok(const SeriesData& S, const Multiset& f) {
  std::set<std::string> support;
  for (const auto& [id, n] : f) {
    support.insert(id);
    if (!S.top.count(id)) return false;
    auto it = S.top_cap.find(id);
    if (it != S.top_cap.end() && n > it->second) return false;
  }
  return support == S.top;
}

constexpr std::size_t kMaxSurvivors = 64;

void search(const SeriesData& S, std::vector<Multiset>& floors,
            Multiset& remaining, Multiset& prefix,
            std::vector<FloorList>& survivors) {
  if (survivors.size() >= kMaxSurvivors) return;
  if (remaining.empty()) {
    if (top_ok(S, floors.back())) survivors.push_back(floors);
    return;
  }
  int p = 1 - floor_parity(S, floors.back());
  std::vector<Multiset> options;
  enumerate_floors(S, remaining, p, options);
  for (const auto& f : options) {
    if (!floor_adjacent(S, floors.back(), f)) continue;
    floors.push_back(f);
    ms_subtract(remaining, f);
    ms_add(prefix, f);
    if (prefix_capacity_ok(S, prefix)) search(S, floors, remaining, prefix, survivors);
    ms_subtract(prefix, f);
    ms_add(remaining, f);
    floors.pop_back();
  }
}

std::vector<FloorList> raw_survivors(const SeriesData& S) {
  // Bottom floors: support exactly the candidate set, multiplicities capped
  // by the exact kernel dimensions.
  std::vector<Multiset> bottoms;
  {
    std::vector<std::pair<std::string, int>> slots;
    for (const auto& id : S.cands)
      slots.push_back(
          {id, std::min(S.multiset.at(id), S.bottom_cap.at(id))});
    Multiset cur;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == slots.size()) {
        if (uniform_parity(S, cur) && pairing_ok(S, cur)) bottoms.push_back(cur);
        return;
      }
      for (int c = 1; c <= slots[i].second; ++c) {
        cur[slots[i].first] = c;
        rec(i + 1);
      }
      cur.erase(slots[i].first);
    };
    if (!slots.empty()) rec(0);
  }

  std::vector<FloorList> survivors;
  for (const auto& bottom : bottoms) {
    std::vector<Multiset> floors{bottom};
    Multiset remaining = S.multiset;
    ms_subtract(remaining, bottom);
    Multiset prefix = bottom;
    if (!prefix_capacity_ok(S, prefix)) continue;
    if (remaining.empty()) {
      if (top_ok(S, bottom)) survivors.push_back(floors);
      continue;
    }
    search(S, floors, remaining, prefix, survivors);
  }

  // When the enumeration is ambiguous, pin the second floor from below by
  // the quotient-kernel computation.
  if (survivors.size() > 1) {
    std::map<Multiset, Multiset> lower_cache;
    std::vector<FloorList> kept;
    for (const auto& fl : survivors) {
      auto li = lower_cache.find(fl[0]);
      if (li == lower_cache.end())
        li = lower_cache.emplace(fl[0], second_floor_lower(S, fl[0])).first;
      const Multiset& lower = li->second;
      bool ok = true;
      for (const auto& [id, n] : lower) {
        int have = fl.size() > 1 && fl[1].count(id) ? fl[1].at(id) : 0;
        if (have < n) {
          ok = false;
          break;
        }
      }
      if (ok) kept.push_back(fl);
    }
    if (!kept.empty()) survivors = kept;
  }
  return survivors;
}

// ---------------------------------------------------------------------------
// Cross-series consistency (duality flip, outer twist, intertwining isos).
// ---------------------------------------------------------------------------

FloorList map_floors(Group g, const FloorList& fl, bool reverse,
                     const std::string& which) {
  FloorList out;
  for (const auto& f : fl) {
    Multiset m;
    for (const auto& [id, n] : f) {
      std::string t = which == "dual" ? dual_factor(g, id)
                                      : quasidual_factor(g, id);
      m[t] += n;
    }
    out.push_back(m);
  }
  if (reverse) std::reverse(out.begin(), out.end());
  return out;
}

void intersect(std::vector<FloorList>& a, const std::vector<FloorList>& b) {
  std::vector<FloorList> out;
  for (const auto& x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) out.push_back(x);
  a = out;
}

struct OrbitResult {
  std::map<std::string, SeriesData> data;                 // family|pattern
  std::map<std::string, std::vector<FloorList>> survivors;
};

std::string skey(const std::string& family, const std::string& pattern) {
  return family + "|" + pattern;
}

std::vector<std::string> group_families(Group g) {
  return g == Group::SL3 ? std::vector<std::string>{"g3", "g4", "g5", "g0p"}
                         : std::vector<std::string>{"g10", "g11", "g4p", "g0pp"};
}

const OrbitResult& orbit(Group g, const std::vector<long>& Lambda) {
  static std::map<std::string, OrbitResult> cache;
  static std::mutex mu;
  std::string key = to_string(g);
  for (long l : Lambda) key += ":" + std::to_string(l);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  OrbitResult R;
  for (const auto& fam : group_families(g))
    for (const auto& pat : family_patterns(g)) {
      std::string k = skey(fam, pat);
      R.data.emplace(k, build_series_data(g, fam, pat, Lambda));
      R.survivors[k] = raw_survivors(R.data.at(k));
    }

  // Nonzero intertwining operators between series with equal socles and
  // multiplicity-one socle factors are isomorphisms; isomorphic series share
  // their diagrams.
  std::vector<std::pair<std::string, std::string>> iso;
  if (g == Group::SP2)
    iso = {{skey("g10", "+2+1"), skey("g10", "+2-1")},
           {skey("g10", "-2+1"), skey("g10", "-2-1")},
           {skey("g11", "+1+2"), skey("g11", "+1-2")},
           {skey("g11", "-1+2"), skey("g11", "-1-2")}};

  for (int pass = 0; pass < 8; ++pass) {
    bool changed = false;
    auto shrink = [&](const std::string& k, const std::vector<FloorList>& v) {
      std::size_t before = R.survivors.at(k).size();
      intersect(R.survivors.at(k), v);
      if (R.survivors.at(k).size() != before) changed = true;
    };
    for (const auto& [k, S] : R.data) {
      // Duality: the diagram of the contragredient series is the reversed,
      // factor-dualized diagram.
      SeriesId did = identify_series(dual_series(S.inst));
      std::string dk = skey(did.family, did.pattern);
      std::vector<FloorList> mirrored;
      for (const auto& fl : R.survivors.at(dk))
        mirrored.push_back(map_floors(g, fl, true, "dual"));
      shrink(k, mirrored);
      // Outer twist: same diagram with quasi-dual factor labels.
      if (g == Group::SL3) {
        SeriesId tid = identify_series(mu_twist(S.inst));
        std::string tk = skey(tid.family, tid.pattern);
        std::vector<FloorList> twisted;
        for (const auto& fl : R.survivors.at(tk))
          twisted.push_back(map_floors(g, fl, false, "quasidual"));
        shrink(k, twisted);
      }
    }
    for (const auto& [a, b] : iso) {
      auto va = R.survivors.at(a);
      shrink(a, R.survivors.at(b));
      shrink(b, va);
    }
    if (!changed) break;
  }

  return cache.emplace(key, std::move(R)).first->second;
}

}  // namespace

bool floor_evidence(const PrincipalSeries& ps, const std::string& from,
                    const std::string& to) {
  if (from == to) return false;
  SeriesId sid = identify_series(ps);
  const OrbitResult& R = orbit(ps.group, sid.Lambda);
  const SeriesData& S = R.data.at(skey(sid.family, sid.pattern));
  auto ci = S.canon.find(to);
  auto ii = S.canon.find(from);
  if (ci == S.canon.end() || ii == S.canon.end()) return false;
  for (std::size_t ti : ci->second)
    for (std::size_t fi : ii->second)
      for (const auto& [k, v] : S.ktypes[fi].images)
        if (k == S.ktypes[ti].key && !v.empty()) return true;
  return false;
}

bool adjacency(Group g, const std::vector<long>& Lambda, const std::string& a,
               const std::string& b, long bound) {
  if (a == b) return true;
  if (g == Group::SL3) {
    auto L = lam3(Lambda);
    for (long x = 0; x <= bound; ++x) {
      if (mult_irreducible_sl3(a, L, x) == 0) continue;
      for (long y = std::max(0L, x - 2); y <= x + 2 && y <= bound; ++y)
        if (mult_irreducible_sl3(b, L, y) > 0) return true;
    }
    return false;
  }
  auto L = lam2(Lambda);
  static const std::vector<Sp2Dir> dirs{{2, 0},  {1, 1},   {0, 2},
                                        {0, -2}, {-1, -1}, {-2, 0}};
  for (int l1 = (int)-bound; l1 <= (int)bound; ++l1)
    for (int l2 = (int)-bound; l2 <= l1; ++l2) {
      U2Weight x{l1, l2};
      if (mult_irreducible_sp2(a, L, x) == 0) continue;
      for (const auto& d : dirs) {
        U2Weight y{l1 + d[0], l2 + d[1]};
        if (!y.valid()) continue;
        if (mult_irreducible_sp2(b, L, y) > 0) return true;
      }
    }
  return false;
}

std::vector<std::vector<PrincipalSeries>> intertwining_chain(
    Group g, const std::vector<long>& Lambda) {
  std::vector<std::vector<std::string>> routes;
  if (g == Group::SL3)
    routes = {{"123", "213", "231", "321"}, {"123", "132", "312", "321"}};
  else
    routes = {{"+1+2", "+2+1", "+2-1", "-1+2", "-1-2"},
              {"+1+2", "+1-2", "-2+1", "-2-1", "-1-2"}};
  std::vector<std::vector<PrincipalSeries>> out;
  for (const auto& fam : group_families(g))
    for (const auto& route : routes) {
      std::vector<PrincipalSeries> chain;
      for (const auto& pat : route)
        chain.push_back(series_instance(g, fam, pat, Lambda));
      out.push_back(std::move(chain));
    }
  return out;
}

SocleResult infer_socle(const PrincipalSeries& ps) {
  SeriesId sid = identify_series(ps);
  const OrbitResult& R = orbit(ps.group, sid.Lambda);
  const auto& surv = R.survivors.at(skey(sid.family, sid.pattern));
  if (surv.empty())
    throw InconsistentConstraints("no layered assignment for " + sid.family +
                                  " at " + sid.pattern);
  auto expand = [&](const FloorList& fl) {
    std::vector<std::vector<std::string>> floors;
    for (const auto& f : fl) floors.push_back(sorted_ids(ps.group, f));
    return floors;
  };
  if (surv.size() == 1) return SocleDiagram{ps, expand(surv[0])};
  AmbiguousReport rep;
  rep.ps = ps;
  for (const auto& fl : surv) rep.survivors.push_back(expand(fl));
  return rep;
}

std::string diagram_to_string(
    const std::vector<std::vector<std::string>>& floors) {
  std::string out;
  for (auto it = floors.rbegin(); it != floors.rend(); ++it) {
    if (!out.empty()) out += " / ";
    bool first = true;
    for (const auto& id : *it) {
      if (!first) out += "⊕";
      first = false;
      out += id.substr(1);  // strip the leading 'g'
    }
  }
  return out;
}

GoldenReport golden_verify(Group g, const std::vector<long>& Lambda) {
  std::string path = data_dir() + (g == Group::SL3 ? "/socle_sl3.txt"
                                                   : "/socle_sp2.txt");
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open golden data: " + path);

  auto split = [](const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
      if (c == sep) {
        parts.push_back(cur);
        cur.clear();
      } else if (!isspace((unsigned char)c)) {
        cur += c;
      }
    }
    parts.push_back(cur);
    return parts;
  };

  GoldenReport report;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string family, patterns, colon;
    if (!(ls >> family >> patterns >> colon) || colon != ":") continue;
    std::string rest;
    std::getline(ls, rest);
    GoldenCase gc;
    gc.family = family;
    gc.patterns = split(patterns, ',');
    std::vector<std::vector<std::string>> expected;
    for (const auto& part : split(rest, '|')) {
      auto ids = split(part, ',');
      std::sort(ids.begin(), ids.end(), [&](const auto& a, const auto& b) {
        return catalog_index(g, a) < catalog_index(g, b);
      });
      expected.push_back(ids);
    }
    gc.expected = diagram_to_string(expected);
    gc.pass = true;
    for (const auto& pat : gc.patterns) {
      PrincipalSeries inst = series_instance(g, family, pat, Lambda);
      SocleResult res = infer_socle(inst);
      if (const auto* d = std::get_if<SocleDiagram>(&res)) {
        gc.inferred = diagram_to_string(d->floors);
        if (d->floors != expected) gc.pass = false;
      } else {
        gc.inferred = "(ambiguous: " +
                      std::to_string(
                          std::get<AmbiguousReport>(res).survivors.size()) +
                      " survivors)";
        gc.pass = false;
      }
    }
    report.total += 1;
    report.passed += gc.pass ? 1 : 0;
    report.cases.push_back(std::move(gc));
  }
  return report;
}

}  // namespace soclelab
