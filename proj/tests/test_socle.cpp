#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "../src/socle.hpp"

using namespace soclelab;

namespace {

std::vector<std::vector<std::string>> floors_of(const PrincipalSeries& ps) {
  SocleResult res = infer_socle(ps);
  REQUIRE_MESSAGE(std::holds_alternative<SocleDiagram>(res),
                  "ambiguous diagram");
  return std::get<SocleDiagram>(res).floors;
}

std::vector<std::string> all_ids(
    const std::vector<std::vector<std::string>>& floors) {
  std::vector<std::string> out;
  for (const auto& f : floors) out.insert(out.end(), f.begin(), f.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("golden socle filtrations verify at the reference parameters") {
  {
    GoldenReport rep = golden_verify(Group::SL3, {1, 0, -1});
    CHECK(rep.total == 12);
    for (const auto& gc : rep.cases) {
      INFO(gc.family, " ", gc.patterns[0], ": expected ", gc.expected,
           " inferred ", gc.inferred);
      CHECK(gc.pass);
    }
    CHECK(rep.passed == rep.total);
  }
  {
    GoldenReport rep = golden_verify(Group::SP2, {2, 1});
    CHECK(rep.total == 24);
    for (const auto& gc : rep.cases) {
      INFO(gc.family, " ", gc.patterns[0], ": expected ", gc.expected,
           " inferred ", gc.inferred);
      CHECK(gc.pass);
    }
    CHECK(rep.passed == rep.total);
  }
}

TEST_CASE("golden socle filtrations are parameter independent") {
  GoldenReport rep = golden_verify(Group::SL3, {2, 0, -1});
  CHECK(rep.passed == rep.total);
}

TEST_CASE("irreducible series have one-floor diagrams") {
  for (const auto& pat : family_patterns(Group::SL3)) {
    auto inst = series_instance(Group::SL3, "g0p", pat, {1, 0, -1});
    CHECK(floors_of(inst) ==
          std::vector<std::vector<std::string>>{{"g0p"}});
  }
  for (const auto& pat : family_patterns(Group::SP2)) {
    auto inst = series_instance(Group::SP2, "g0pp", pat, {2, 1});
    CHECK(floors_of(inst) ==
          std::vector<std::vector<std::string>>{{"g0pp"}});
  }
}

TEST_CASE("structural invariants of inferred diagrams") {
  for (const auto& fam : {"g3", "g4", "g5"})
    for (const auto& pat : family_patterns(Group::SL3)) {
      auto inst = series_instance(Group::SL3, fam, pat, {1, 0, -1});
      auto floors = floors_of(inst);

      // Floor union equals the composition multiset.
      auto comp = catalog_entry(Group::SL3, fam).composition;
      std::sort(comp.begin(), comp.end());
      CHECK(all_ids(floors) == comp);

      // Lengths alternate parity floor by floor.
      for (std::size_t k = 0; k < floors.size(); ++k) {
        int p = catalog_entry(Group::SL3, floors[k][0]).length % 2;
        for (const auto& id : floors[k])
          CHECK(catalog_entry(Group::SL3, id).length % 2 == p);
        if (k > 0)
          CHECK(p != (int)catalog_entry(Group::SL3, floors[k - 1][0]).length % 2);
      }

      // The dual series' diagram is the reversed, factor-dualized diagram.
      auto dfloors = floors_of(dual_series(inst));
      REQUIRE(dfloors.size() == floors.size());
      for (std::size_t k = 0; k < floors.size(); ++k) {
        std::vector<std::string> want;
        for (const auto& id : floors[floors.size() - 1 - k])
          want.push_back(dual_factor(Group::SL3, id));
        std::sort(want.begin(), want.end());
        auto got = dfloors[k];
        std::sort(got.begin(), got.end());
        CHECK(got == want);
      }

      // The outer twist relabels floors by quasi-dual factors in place.
      auto tfloors = floors_of(mu_twist(inst));
      REQUIRE(tfloors.size() == floors.size());
      for (std::size_t k = 0; k < floors.size(); ++k) {
        std::vector<std::string> want;
        for (const auto& id : floors[k])
          want.push_back(quasidual_factor(Group::SL3, id));
        std::sort(want.begin(), want.end());
        auto got = tfloors[k];
        std::sort(got.begin(), got.end());
        CHECK(got == want);
      }
    }
}

TEST_CASE("sp2 intertwining isomorphism partners share diagrams") {
  const std::vector<std::tuple<std::string, std::string, std::string>> pairs{
      {"g10", "+2+1", "+2-1"},
      {"g10", "-2+1", "-2-1"},
      {"g11", "+1+2", "+1-2"},
      {"g11", "-1+2", "-1-2"}};
  for (const auto& [fam, pa, pb] : pairs) {
    auto a = floors_of(series_instance(Group::SP2, fam, pa, {2, 1}));
    auto b = floors_of(series_instance(Group::SP2, fam, pb, {2, 1}));
    CHECK(a == b);
  }
}

TEST_CASE("floor evidence from composed shift images") {
  auto g10 = [&](const std::string& pat) {
    return series_instance(Group::SP2, "g10", pat, {2, 1});
  };
  // Never evidence for a factor sitting above itself.
  CHECK(!floor_evidence(g10("+1+2"), "g4", "g4"));
  // In the dominant pattern the full module tops the diagram and maps onto
  // everything below; the socle maps nowhere.
  CHECK(floor_evidence(g10("+1+2"), "g10", "g7"));
  CHECK(!floor_evidence(g10("+1+2"), "g0", "g10"));
  // In the reversed pattern the socle is the full-length factor; vectors in
  // that irreducible submodule cannot reach K-types it does not contain.
  CHECK(!floor_evidence(g10("-1-2"), "g10", "g0"));
}

TEST_CASE("k-spectrum adjacency") {
  // a == b is adjacent by convention.
  CHECK(adjacency(Group::SP2, {2, 1}, "g4", "g4", 8));
  // The holomorphic/antiholomorphic pair of discrete-series factors sits two
  // shift steps apart.
  CHECK(!adjacency(Group::SP2, {2, 1}, "g2", "g3", 8));
  // Neighbours in the golden diagrams really are spectrum-adjacent.
  CHECK(adjacency(Group::SP2, {2, 1}, "g0", "g4", 8));
  CHECK(adjacency(Group::SP2, {2, 1}, "g4", "g9", 8));
  CHECK(adjacency(Group::SL3, {1, 0, -1}, "g0", "g1", 8));
  CHECK(adjacency(Group::SL3, {1, 0, -1}, "g1", "g3", 8));
}

TEST_CASE("intertwining chains cover the orbit end to end") {
  auto chains = intertwining_chain(Group::SP2, {2, 1});
  CHECK(chains.size() == 8);  // four families, two routes each
  for (const auto& chain : chains) {
    REQUIRE(chain.size() == 5);
    auto first = identify_series(chain.front());
    auto last = identify_series(chain.back());
    CHECK(first.pattern == "+1+2");
    CHECK(last.pattern == "-1-2");
    CHECK(first.family == last.family);
  }
  auto sl3 = intertwining_chain(Group::SL3, {1, 0, -1});
  CHECK(sl3.size() == 8);
  for (const auto& chain : sl3) REQUIRE(chain.size() == 4);
}
