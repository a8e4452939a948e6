#pragma once

// Shift operators between K-type strings of a minimal principal series.
//
// A K-type enters through its weight string: for SL3 the SO(3)-module
// V_lambda with basis v_q, q = -lambda..lambda; for Sp(2) the U(2)-module of
// the restricted functions, whose string coordinate runs over
// q = -l1 .. -l2 for the K-type (l1, l2).  A shift operator maps coefficient
// vectors on a source string to coefficient vectors on a target string whose
// highest weight differs by a direction: for SL3 dir in {-2,...,2} (the
// change of lambda), for Sp(2) dir in {(2,0),(1,1),(0,2),(0,-2),(-1,-1),
// (-2,0)} (the change of (l1,l2)).
//
// shift_matrix builds the operator from closed-form coefficient recurrences;
// nabla_oracle rebuilds it from first principles, by decomposing the
// covariant derivative: every Lie algebra element is expanded in explicit
// matrix form over a basis adapted to the Iwasawa decomposition, acts on the
// restricted functions through that decomposition, and the resulting section
// of (string) x (tangent directions) is projected onto each target string
// with brute-force tensor decomposition coefficients.  The two constructions
// agree up to a single overall scalar per (group, lambda, dir), independent
// of nu; tests pin this down.

#include <array>
#include <map>
#include <vector>

#include "compactreps.hpp"
#include "groupdata.hpp"

namespace soclelab {

struct StringRange {
  int lo, hi;  // inclusive; empty when hi < lo
  int size() const { return hi >= lo ? hi - lo + 1 : 0; }
  bool contains(int q) const { return lo <= q && q <= hi; }
  int index(int q) const { return q - lo; }
  bool operator==(const StringRange& o) const {
    return lo == o.lo && hi == o.hi;
  }
};

struct ShiftMatrix {
  Group group;
  StringRange src, tgt;
  ExactMatrix mat;  // tgt.size() x src.size(), rows/cols indexed by q - lo

  // Applies to a sparse coefficient vector; q's outside src are rejected.
  std::map<int, Rational> apply(const std::map<int, Rational>& c) const;
};

using Sp2Dir = std::array<int, 2>;

StringRange string_range_sl3(long lambda);
StringRange string_range_sp2(U2Weight lam);

// Closed-form shift operators.
ShiftMatrix shift_matrix(long lambda, const std::array<Rational, 3>& nu,
                         int dir);
ShiftMatrix shift_matrix(U2Weight lam, const std::array<Rational, 2>& nu,
                         Sp2Dir dir);

// Independent reconstruction from the covariant derivative.
ShiftMatrix nabla_oracle(long lambda, const std::array<Rational, 3>& nu,
                         int dir);
ShiftMatrix nabla_oracle(U2Weight lam, const std::array<Rational, 2>& nu,
                         Sp2Dir dir);

// Left-to-right composition: dirs[0] is applied first.  Intermediate K-types
// must be valid; the final target string may be empty.
ShiftMatrix compose(long lambda, const std::array<Rational, 3>& nu,
                    const std::vector<int>& dirs);
ShiftMatrix compose(U2Weight lam, const std::array<Rational, 2>& nu,
                    const std::vector<Sp2Dir>& dirs);

// Expansion coefficients for tensoring a U(2) string (a,b) with the adjoint
// pieces of highest weight (2,0) (up) and (0,-2) (down), exposed for
// property tests:
//   v_q^{(a,b)} (x) v_i^{(2,0)}  = sum_{j=0..2}   up(q,i;j)   v_{q+i}^{(a+j, b+2-j)}
//   v_q^{(a,b)} (x) v_i^{(0,-2)} = sum_{j=-2..0} down(q,i;j) v_{q+i}^{(a+j, b-2-j)}
Rational u2_tensor_up(int a, int b, int q, int i, int j);
Rational u2_tensor_down(int a, int b, int q, int i, int j);

}  // namespace soclelab
