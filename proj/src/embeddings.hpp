#pragma once

// Kernel systems certifying candidate irreducible submodules.
//
// A factor gamma of a principal series can only embed as a submodule if some
// nonzero vector of its test K-type, inside the sigma-isotypic part fixed by
// the series, is annihilated by every shift operator (or composition of two)
// leading to a K-type outside gamma's spectrum.  kernel_system solves such a
// joint system exactly; candidate_submodules derives the direction batteries
// from the irreducible K-spectra and assembles the per-series candidate
// tables; closed_form_solutions_sl3 provides the SL3 degree-lowering kernels
// in closed form for cross-checking.

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "groupdata.hpp"
#include "kspectra.hpp"
#include "shiftops.hpp"

namespace soclelab {

struct CaseMismatch : std::runtime_error {
  explicit CaseMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

// A vector in one K-type, q -> coefficient on v_q, tagged with its M-type.
struct KTypeVector {
  std::map<int, Rational> coeff;
  Sigma sigma;
};

struct KernelSolution {
  PrincipalSeries ps;
  long lam_sl3 = 0;        // the K-type (SL3)
  U2Weight lam_sp2{0, 0};  // the K-type (SP2)
  std::vector<KTypeVector> basis;
};

// Joint kernel of the composed shift operators listed in `tests`, restricted
// to the sigma-isotypic subspace of the K-type.  An empty basis is a valid
// result; the basis is canonical (reduced echelon combinations of the
// isotypic basis).
KernelSolution kernel_system(const PrincipalSeries& ps, long lam,
                             const std::vector<std::vector<int>>& tests);
KernelSolution kernel_system(const PrincipalSeries& ps, U2Weight lam,
                             const std::vector<std::vector<Sp2Dir>>& tests);

// Closed-form solutions of the SL3 lowering system P_{-1} = P_{-2} = 0 on
// V_lambda, by case.  Tags (conditions on (lambda, nu)):
//   "eq12"         lambda = nu1-nu2+1, differs from nu1-nu3+1 and nu2-nu3+1
//   "generic"      lambda >= 3, none of the three conditions; empty list
//   "lambda2"      lambda = 2, none of the three conditions
//   "eq23"         lambda = nu2-nu3+1 != nu1-nu2+1
//   "eq23-eq12"    lambda = nu2-nu3+1 = nu1-nu2+1
//   "eq13-ordered" lambda = nu1-nu3+1 and nu1 > nu2 > nu3
//   "eq13-mixed"   lambda = nu1-nu3+1 and nu2 > nu1 > nu3 or nu1 > nu3 > nu2
// Throws CaseMismatch when (lambda, nu) violates the tag's hypothesis.
// Gamma-factor coefficients follow the 1/Gamma(-k) = 0 convention; vectors
// that degenerate to zero under it are dropped.
std::vector<KTypeVector> closed_form_solutions_sl3(
    const std::string& tag, long lam, const std::array<Rational, 3>& nu);

// Direction batteries.  For SL3 the test K-type is the factor's minimal
// K-type and each escape direction with multiplicity zero must annihilate.
// For SP2 the per-factor test K-types are fixed (at the reference parameter
// (2,1)) and batteries include two-step escapes through in-spectrum
// neighbours.  Returns (test K-type, list of direction sequences).
std::pair<long, std::vector<std::vector<int>>> embedding_tests_sl3(
    const std::string& id, const std::array<long, 3>& Lambda);
std::pair<U2Weight, std::vector<std::vector<Sp2Dir>>> embedding_tests_sp2(
    const std::string& id, const std::array<long, 2>& Lambda);

enum class CandidateStatus { Confirmed, Candidate };

struct CandidateEntry {
  std::string id;
  CandidateStatus status;
};

// Candidate irreducible submodules of the series, decided by exact kernel
// computations at the reference parameters (SL3: both (1,0,-1) and (2,0,-1);
// SP2: (2,1)) at the series' own orbit pattern, then filtered by horizontal
// symmetry: in a series isomorphic to its own outer twist, quasi-dual
// partners can only appear in the socle together.
std::vector<CandidateEntry> candidate_submodules(const PrincipalSeries& ps);

}  // namespace soclelab
