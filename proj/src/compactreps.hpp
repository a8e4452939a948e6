#pragma once

// Finite-dimensional representation data for the maximal compact subgroups:
// sl(2) ladder actions, torus/Weyl element actions on SU(2) modules, tensor
// product decomposition coefficients (closed form and a brute-force oracle),
// U(2) module actions, and M-isotypic subspaces of K-types.
//
// Weights of sl(2)/SU(2) modules are passed doubled throughout (two_lambda =
// 2*lambda), so half-integral parameters stay integral.

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "exactmath.hpp"

namespace soclelab {

// ---------------------------------------------------------------------------
// sl(2): V_lambda with basis v_q, q = -lambda..lambda, and
//   H v_q = 2q v_q,  E v_q = (lambda-q) v_{q+1},  F v_q = (lambda+q) v_{q-1}.
// ---------------------------------------------------------------------------

struct Sl2Vector {
  int two_lambda;
  int two_q;
};

enum class Sl2Gen { H, E, F };

// Returns (coefficient, resulting doubled weight).
std::pair<Rational, int> sl2_act(Sl2Gen g, const Sl2Vector& v);

// Group elements acting on V_lambda: diag(a, 1/a) v_q = a^{2q} v_q and the
// Weyl representative w v_q = (-1)^{lambda-q} v_{-q}.
enum class Su2ElementKind { Torus, Weyl };

struct Su2Element {
  Su2ElementKind kind;
  Rational a;  // torus parameter; ignored for the Weyl element
};

std::pair<Rational, int> su2_element_act(const Su2Element& e,
                                         const Sl2Vector& v);

// ---------------------------------------------------------------------------
// Tensor decomposition V_lambda (x) V_mu = (+) V_{lambda+j}, j = -mu..mu.
// cg_coeff(q, i; j) is the coefficient of v_{q+i}^{lambda+j} in the expansion
// of v_q^lambda (x) v_i^mu.  Valid for lambda >= mu.
// ---------------------------------------------------------------------------

Rational cg_coeff(int two_lambda, int two_mu, int two_q, int two_i, int two_j);

// Brute-force decomposition by highest-weight search and exact lowering,
// normalized via the single anchor coefficient
//   c(lambda+j-mu, mu; j) = (mu-j)!.
// Keys are {two_q, two_i, two_j}; only nonzero coefficients are stored.
std::map<std::array<int, 3>, Rational> cg_oracle(int two_lambda, int two_mu);

// ---------------------------------------------------------------------------
// U(2): V_(l1,l2) with basis v_q, l2 <= q <= l1, and
//   D1 v_q = q v_q, D2 v_q = (l1+l2-q) v_q,
//   Y+ v_q = (l1-q) v_{q+1}, Y- v_q = (q-l2) v_{q-1}.
// ---------------------------------------------------------------------------

struct U2Weight {
  int l1, l2;
  bool valid() const { return l1 >= l2; }
  bool operator==(const U2Weight& o) const { return l1 == o.l1 && l2 == o.l2; }
};

enum class U2Gen { D1, D2, Yplus, Yminus };

std::pair<Rational, int> u2_act(U2Gen g, const U2Weight& hw, int q);

// ---------------------------------------------------------------------------
// M-isotypic subspaces.  sigma_{i,j} are the characters of the group M of the
// minimally split Cartan subgroup, subscripts taken mod 2.
// ---------------------------------------------------------------------------

struct Sigma {
  int i, j;
  Sigma normalized() const { return {((i % 2) + 2) % 2, ((j % 2) + 2) % 2}; }
  bool operator==(const Sigma& o) const {
    Sigma a = normalized(), b = o.normalized();
    return a.i == b.i && a.j == b.j;
  }
};

struct IncompatibleSigma : std::runtime_error {
  explicit IncompatibleSigma(const std::string& msg)
      : std::runtime_error(msg) {}
};

// SO(3)-module V_lambda (integer lambda >= 0), M = {diag Weyl-group lifts}:
// the sigma_{i,j} part is spanned by w_q = v_q + (-1)^{lambda-q+i} v_{-q} for
// q > 0 with q == i+j mod 2, plus v_0 when i == j == lambda mod 2.  The
// canonical ordering is q descending, then v_0.
bool sigma_occurs_so3(int lambda, Sigma s);
std::vector<std::map<int, Rational>> m_isotypic_so3(int lambda, Sigma s);

// U(2)-module: m_{e1,e2} acts on v_q by e1^q e2^(l1+l2-q); the sigma_{i,j}
// part is spanned by the v_q with q == i mod 2, and requires
// l1+l2 == i+j mod 2.  Returned q's are descending.
bool sigma_occurs_u2(U2Weight hw, Sigma s);
std::vector<int> m_isotypic_u2(U2Weight hw, Sigma s);

}  // namespace soclelab
