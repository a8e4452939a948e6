#pragma once

// Group-level bookkeeping for the minimal principal series of SL(3,R) and
// Sp(2,R): Weyl-group actions on (sigma, nu) parameters, the catalog of
// irreducible-factor ids with lengths/duals/composition series (loaded from
// the data directory), and identification of a parameter pair with one of the
// four series families of each group via its Weyl-orbit pattern.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "compactreps.hpp"
#include "exactmath.hpp"

namespace soclelab {

enum class Group { SL3, SP2 };

std::string to_string(Group g);

// Data directory: SOCLELAB_DATA env var, else the build-time default.
std::string data_dir();

// A minimal principal series I(sigma, nu); nu has 3 entries for SL3 and 2
// for SP2.
struct PrincipalSeries {
  Group group;
  Sigma sigma;
  std::vector<Rational> nu;
};

struct NoMatch : std::runtime_error {
  explicit NoMatch(const std::string& msg) : std::runtime_error(msg) {}
};

// ---------------------------------------------------------------------------
// Weyl group action on principal-series parameters.
// Generators: SL3 "r12" (swap nu1,nu2; sigma_{i,j} -> sigma_{j,i}) and "r23"
// (swap nu2,nu3; sigma_{i,j} -> sigma_{i+j,j}); SP2 "r12" (swap nu1,nu2;
// sigma_{i,j} -> sigma_{j,i}), "e1"/"e2" (negate nu1/nu2; sigma fixed).
// ---------------------------------------------------------------------------

std::vector<std::string> weyl_generators(Group g);
Sigma weyl_act_sigma(Group g, const std::string& gen, Sigma s);
std::vector<Rational> weyl_act_nu(Group g, const std::string& gen,
                                  const std::vector<Rational>& nu);
PrincipalSeries weyl_act(const std::string& gen, const PrincipalSeries& ps);

// Full orbit with shortest generator words ("" is the identity, otherwise
// comma-separated generators applied left to right, e.g. "r12,e1").
std::vector<std::pair<std::string, PrincipalSeries>> weyl_orbit(
    const PrincipalSeries& ps);

// ---------------------------------------------------------------------------
// Catalog of irreducible factors.
// ---------------------------------------------------------------------------

struct CatalogEntry {
  std::string id;
  int length;
  std::string dual;
  std::string quasidual;
  std::vector<std::string> composition;  // factors of the standard module
};

const std::vector<CatalogEntry>& catalog(Group g);
const CatalogEntry& catalog_entry(Group g, const std::string& id);
std::string dual_factor(Group g, const std::string& id);
std::string quasidual_factor(Group g, const std::string& id);

// ---------------------------------------------------------------------------
// Series identification.  Each integral nonsingular (sigma, nu) belongs to
// exactly one of four families per group (named by the id of the standard
// module the full principal series realizes), at a parameter position
// described by a pattern:
//  * SL3: a permutation "123".."321" meaning nu = (Lambda_p1, Lambda_p2,
//    Lambda_p3) for the sorted parameters Lambda_1 > Lambda_2 > Lambda_3;
//  * SP2: a signed arrangement "+1+2", "-2+1", ... meaning nu =
//    (s Lambda_p1, t Lambda_p2) with Lambda_1 > Lambda_2 > 0.
// ---------------------------------------------------------------------------

struct SeriesId {
  std::string family;          // SL3: g3,g4,g5,g0p; SP2: g10,g11,g4p,g0pp
  std::string pattern;
  std::vector<long> Lambda;    // sorted parameters, descending
};

SeriesId identify_series(const PrincipalSeries& ps);  // throws NoMatch

// Inverse: the (sigma, nu) instance of a family at a pattern and parameters.
PrincipalSeries series_instance(Group g, const std::string& family,
                                const std::string& pattern,
                                const std::vector<long>& Lambda);

// All patterns of a family's orbit (SL3: 6, SP2: 8), in a fixed order.
std::vector<std::string> family_patterns(Group g);

// ---------------------------------------------------------------------------
// Relations between series.
// ---------------------------------------------------------------------------

// Contragredient parameters: (sigma, -nu).
PrincipalSeries dual_series(const PrincipalSeries& ps);

// SL3 outer twist I(sigma_{i,j}, nu) -> I(sigma_{i,i+j}, (-nu3,-nu2,-nu1));
// the identity for SP2.
PrincipalSeries mu_twist(const PrincipalSeries& ps);

// SL3 partner with the reversed parameter order and twisted sigma,
// I(sigma_{i,i+j}, (nu3, nu2, nu1)); carries the same factor labels.
PrincipalSeries updown_partner(const PrincipalSeries& ps);

}  // namespace soclelab
