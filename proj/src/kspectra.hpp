#pragma once

// K-type multiplicities.
//
// For each irreducible factor id (see the catalog) the multiplicity of a
// K-type in the STANDARD module X(id) has a closed form: a ladder formula for
// the SL3 non-principal factors, a Blattner-type alternating sum over Kostant
// partition counts for the Sp(2) discrete-series-like factors, interval/
// parity formulas for the intermediate Sp(2) factors, and M-isotypic
// dimensions for the factors realized by a full minimal principal series.
// Multiplicities in the irreducible quotient are recovered by inverting the
// composition series in the Grothendieck group, by increasing length.
//
// SL3 K-types are the SO(3)-modules V_lambda (lambda >= 0 an integer); Sp(2)
// K-types are U(2) highest weights (l1 >= l2).  Parameters Lambda are the
// sorted integral values defining the infinitesimal character (SL3:
// Lambda1 > Lambda2 > Lambda3; SP2: Lambda1 > Lambda2 > 0).

#include <array>
#include <string>
#include <vector>

#include "compactreps.hpp"
#include "groupdata.hpp"

namespace soclelab {

struct NegativeMultiplicity : std::runtime_error {
  explicit NegativeMultiplicity(const std::string& msg)
      : std::runtime_error(msg) {}
};

// Number of ways to write target as a nonnegative integer combination of the
// given vectors.  Coordinates are doubled so half-integral shifts stay exact.
long kostant_Q(const std::vector<std::array<long, 2>>& roots,
               std::array<long, 2> target);

long mult_standard_sl3(const std::string& id, const std::array<long, 3>& Lambda,
                       long lambda);
long mult_irreducible_sl3(const std::string& id,
                          const std::array<long, 3>& Lambda, long lambda);
long min_ktype_sl3(const std::string& id, const std::array<long, 3>& Lambda);

long mult_standard_sp2(const std::string& id, const std::array<long, 2>& Lambda,
                       U2Weight k);
long mult_irreducible_sp2(const std::string& id,
                          const std::array<long, 2>& Lambda, U2Weight k);
// Minimal K-type: in-spectrum weight minimizing (l1-l2, |l1+l2|).
U2Weight min_ktype_sp2(const std::string& id,
                       const std::array<long, 2>& Lambda);

}  // namespace soclelab
