#pragma once

// Socle filtration inference.
//
// For each principal series the engine assembles the complete socle
// filtration from exact computations: the bottom floor is the confirmed
// candidate-submodule set, the top floor is the contragredient flip of the
// dual series' socle, lengths alternate parity between consecutive floors,
// outer-twist partners share floors when the twist fixes the series, factors
// on consecutive floors must have adjacent K-spectra, and every floor prefix
// must have enough K-type capacity to hold the exactly computed images of the
// multiplicity-one K-type vectors of its members.  All layered assignments
// satisfying the constraints are enumerated; the result is the unique
// survivor, or an explicit report of the ambiguity.

#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "embeddings.hpp"
#include "groupdata.hpp"

namespace soclelab {

struct SocleDiagram {
  PrincipalSeries ps;
  // Bottom floor first; ids sorted, repeated per multiplicity.
  std::vector<std::vector<std::string>> floors;
};

struct AmbiguousReport {
  PrincipalSeries ps;
  std::vector<std::vector<std::vector<std::string>>> survivors;
};

struct InconsistentConstraints : std::runtime_error {
  explicit InconsistentConstraints(const std::string& msg)
      : std::runtime_error(msg) {}
};

using SocleResult = std::variant<SocleDiagram, AmbiguousReport>;

// True iff some composed shift of length <= 2 maps a multiplicity-one K-type
// vector of `from` to a vector with nonzero component in a multiplicity-one
// K-type line of `to` inside ps; witnesses that `from` sits strictly above
// `to` in the filtration.  Always false for from == to.
bool floor_evidence(const PrincipalSeries& ps, const std::string& from,
                    const std::string& to);

// True iff the K-spectra of the two factors (scanned up to `bound`) contain a
// pair of K-types differing by a weight of the adjoint action on the
// noncompact part; a==b counts as adjacent.
bool adjacency(Group g, const std::vector<long>& Lambda, const std::string& a,
               const std::string& b, long bound);

// Ordered chains of principal series linked by nonzero standard intertwining
// operators through the Weyl orbit, two per series family.
std::vector<std::vector<PrincipalSeries>> intertwining_chain(
    Group g, const std::vector<long>& Lambda);

// Assembles the socle filtration; throws InconsistentConstraints when no
// layered assignment satisfies every constraint.
SocleResult infer_socle(const PrincipalSeries& ps);

// Renders floors top-down, " / "-separated, ids "+"-joined within a floor.
std::string diagram_to_string(const std::vector<std::vector<std::string>>& floors);

struct GoldenCase {
  std::string family;
  std::vector<std::string> patterns;
  bool pass = false;
  std::string expected;
  std::string inferred;
};

struct GoldenReport {
  int passed = 0;
  int total = 0;
  std::vector<GoldenCase> cases;
};

// Compares inferred diagrams against the golden data file for the group,
// evaluating every record at the given parameters.
GoldenReport golden_verify(Group g, const std::vector<long>& Lambda);

}  // namespace soclelab
