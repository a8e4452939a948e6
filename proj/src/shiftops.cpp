#include "shiftops.hpp"

#include <stdexcept>

namespace soclelab {

namespace {

Rational ff(const Rational& x, unsigned k) { return falling_factorial(x, k); }

ShiftMatrix make_empty(Group g, StringRange src, StringRange tgt) {
  return {g, src, tgt, ExactMatrix((std::size_t)tgt.size(),
                                   (std::size_t)src.size())};
}

}  // namespace

std::map<int, Rational> ShiftMatrix::apply(
    const std::map<int, Rational>& c) const {
  std::vector<Rational> v((std::size_t)src.size(), Rational(0));
  for (const auto& [q, val] : c) {
    if (!src.contains(q))
      throw std::invalid_argument("coefficient outside the source string");
    v[(std::size_t)src.index(q)] = val;
  }
  std::vector<Rational> w = mat.apply(v);
  std::map<int, Rational> out;
  for (int q = tgt.lo; q <= tgt.hi; ++q) {
    const Rational& x = w[(std::size_t)tgt.index(q)];
    if (x != 0) out[q] = x;
  }
  return out;
}

StringRange string_range_sl3(long lambda) {
  if (lambda < 0) return {0, -1};
  return {(int)-lambda, (int)lambda};
}

StringRange string_range_sp2(U2Weight lam) {
  if (!lam.valid()) return {0, -1};
  return {-lam.l1, -lam.l2};
}

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

ShiftMatrix shift_matrix(long lambda, const std::array<Rational, 3>& nu,
                         int dir) {
  if (lambda < 0) throw std::invalid_argument("negative K-type");
  if (dir < -2 || dir > 2) throw std::invalid_argument("bad SL3 direction");
  StringRange src = string_range_sl3(lambda);
  StringRange tgt = string_range_sl3(lambda + dir);
  ShiftMatrix out = make_empty(Group::SL3, src, tgt);

  const Rational d12 = nu[0] - nu[1];
  const Rational X = nu[0] + nu[1] - nu[2] * 2;
  const Rational L(lambda);
  for (int q = tgt.lo; q <= tgt.hi; ++q) {
    Rational Q(q);
    Rational lo, mid, hi;  // coefficients of c(q-2), c(q), c(q+2)
    switch (dir) {
      case 2:
        lo = d12 + Q - 1;
        mid = (X + 2 * L + 3) * -2;
        hi = d12 - Q - 1;
        break;
      case 1:
        lo = (L - Q + 2) * (d12 + Q - 1);
        mid = Q * 2 * (X + L + 1);
        hi = (L + Q + 2) * (d12 - Q - 1) * -1;
        break;
      case 0:
        lo = ff(L - Q + 2, 2) * (d12 + Q - 1);
        mid = (Q * Q * 3 - L * L - L) * X * Rational(-2, 3);
        hi = ff(L + Q + 2, 2) * (d12 - Q - 1);
        break;
      case -1:
        lo = ff(L - Q + 2, 3) * (d12 + Q - 1);
        mid = Q * (L - Q) * (L + Q) * (X - L) * -2;
        hi = ff(L + Q + 2, 3) * (d12 - Q - 1) * -1;
        break;
      case -2:
        lo = ff(L - Q + 2, 4) * (d12 + Q - 1);
        mid = ff(L + Q, 2) * ff(L - Q, 2) * (X - 2 * L + 1) * -2;
        hi = ff(L + Q + 2, 4) * (d12 - Q - 1);
        break;
    }
    std::size_t r = (std::size_t)tgt.index(q);
    if (src.contains(q - 2)) out.mat.at(r, (std::size_t)src.index(q - 2)) = lo;
    if (src.contains(q)) out.mat.at(r, (std::size_t)src.index(q)) = mid;
    if (src.contains(q + 2)) out.mat.at(r, (std::size_t)src.index(q + 2)) = hi;
  }
  return out;
}

ShiftMatrix shift_matrix(U2Weight lam, const std::array<Rational, 2>& nu,
                         Sp2Dir dir) {
  if (!lam.valid()) throw std::invalid_argument("invalid K-type");
  StringRange src = string_range_sp2(lam);
  StringRange tgt = string_range_sp2({lam.l1 + dir[0], lam.l2 + dir[1]});
  ShiftMatrix out = make_empty(Group::SP2, src, tgt);

  const Rational n1 = nu[0], n2 = nu[1];
  const Rational L1(lam.l1), L2(lam.l2);
  for (int q = tgt.lo; q <= tgt.hi; ++q) {
    Rational Q(q);
    Rational same, up2, dn2;  // coefficients of c(q), c(q+2), c(q-2)
    bool raising;
    if (dir == Sp2Dir{2, 0}) {
      up2 = n1 + 2 * L1 + 4 + Q;
      same = n2 + L1 + L2 + 1 + Q;
      raising = true;
    } else if (dir == Sp2Dir{1, 1}) {
      up2 = (L1 + Q + 2) * (n1 + L1 + L2 + Q + 2) * -1;
      same = (L2 + Q) * (n2 + L1 + L2 + Q + 1) * -1;
      raising = true;
    } else if (dir == Sp2Dir{0, 2}) {
      up2 = ff(L1 + Q + 2, 2) * (n1 + 2 * L2 + Q + 2);
      same = ff(L2 + Q + 1, 2) * (n2 + L1 + L2 + Q + 1);
      raising = true;
    } else if (dir == Sp2Dir{0, -2}) {
      dn2 = n1 - 2 * L2 - Q + 4;
      same = n2 - L1 - L2 - Q + 1;
      raising = false;
    } else if (dir == Sp2Dir{-1, -1}) {
      dn2 = (L2 + Q - 2) * (n1 - L1 - L2 - Q + 2) * -1;
      same = (L1 + Q) * (n2 - L1 - L2 - Q + 1) * -1;
      raising = false;
    } else if (dir == Sp2Dir{-2, 0}) {
      dn2 = ff(L2 + Q - 1, 2) * (n1 - 2 * L1 - Q + 2);
      same = ff(L1 + Q, 2) * (n2 - L1 - L2 - Q + 1);
      raising = false;
    } else {
      throw std::invalid_argument("bad SP2 direction");
    }
    std::size_t r = (std::size_t)tgt.index(q);
    if (src.contains(q)) out.mat.at(r, (std::size_t)src.index(q)) = same;
    if (raising && src.contains(q + 2))
      out.mat.at(r, (std::size_t)src.index(q + 2)) = up2;
    if (!raising && src.contains(q - 2))
      out.mat.at(r, (std::size_t)src.index(q - 2)) = dn2;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Covariant-derivative oracles
// ---------------------------------------------------------------------------

namespace {

const GaussianRational I_(Rational(0), Rational(1));

GaussianRational G(long v) { return GaussianRational(Rational(v)); }

GaussMatrix unit(std::size_t n, int r, int c) {
  GaussMatrix m(n, n);
  m.at((std::size_t)r, (std::size_t)c) = GaussianRational(Rational(1));
  return m;
}

// Expands Z in the given basis of n x n matrices; throws if not expressible.
std::vector<GaussianRational> decompose(const std::vector<GaussMatrix>& basis,
                                        const GaussMatrix& Z) {
  std::size_t n = Z.rows();
  GaussMatrix A(n * n, basis.size());
  std::vector<GaussianRational> rhs(n * n);
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        A.at(r * n + c, k) = basis[k].at(r, c);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) rhs[r * n + c] = Z.at(r, c);
  std::vector<GaussianRational> x;
  if (!A.solve(rhs, x))
    throw std::logic_error("element not in the span of the adapted basis");
  return x;
}

ExactMatrix real_part_or_throw(const GaussMatrix& m) {
  ExactMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.at(r, c).im != 0)
        throw std::logic_error("shift operator has a nonreal entry");
      out.at(r, c) = m.at(r, c).re;
    }
  return out;
}

struct NablaItem {
  int i;                          // tangent-string weight it tensors with
  Rational coef;                  // scalar in front of the term
  GaussMatrix op;                 // action on the source string coefficients
};

}  // namespace

ShiftMatrix nabla_oracle(long lambda, const std::array<Rational, 3>& nu,
                         int dir) {
  if (lambda < 0) throw std::invalid_argument("negative K-type");
  if (dir < -2 || dir > 2) throw std::invalid_argument("bad SL3 direction");
  StringRange src = string_range_sl3(lambda);
  StringRange tgt = string_range_sl3(lambda + dir);
  if (tgt.size() == 0) return make_empty(Group::SL3, src, tgt);

  // Complexified Lie algebra basis adapted to the Iwasawa decomposition:
  // compact part {D, Y+, Y-}, split Cartan {H1 = E11-E22,
  // H2 = E11+E22-2E33}, nilpotent part {E12, E13, E23}.
  auto E = [](int r, int c) { return unit(3, r, c); };
  GaussMatrix D = (E(1, 0) + E(0, 1).scaled(G(-1))).scaled(I_);
  GaussMatrix Yp = (E(2, 1) + E(1, 2).scaled(G(-1))).scaled(I_) + E(2, 0) +
                   E(0, 2).scaled(G(-1));
  GaussMatrix Ym = (E(2, 1) + E(1, 2).scaled(G(-1))).scaled(I_) +
                   E(2, 0).scaled(G(-1)) + E(0, 2);
  GaussMatrix H1 = E(0, 0) + E(1, 1).scaled(G(-1));
  GaussMatrix H2 = E(0, 0) + E(1, 1) + E(2, 2).scaled(G(-2));
  std::vector<GaussMatrix> basis{D, Yp, Ym, H1, H2, E(0, 1), E(0, 2), E(1, 2)};

  // Compact generators on the source string v_q, q = -lambda..lambda.
  std::size_t n = (std::size_t)src.size();
  GaussMatrix tD(n, n), tYp(n, n), tYm(n, n);
  for (int q = src.lo; q <= src.hi; ++q) {
    std::size_t c = (std::size_t)src.index(q);
    tD.at(c, c) = GaussianRational(Rational(q));
    if (q < src.hi)
      tYp.at(c + 1, c) = GaussianRational(Rational(lambda - q));
    if (q > src.lo)
      tYm.at(c - 1, c) = GaussianRational(Rational(lambda + q));
  }
  GaussianRational s12(nu[0] - nu[1] + 1);       // scalar of H1
  GaussianRational sX(nu[0] + nu[1] - 2 * nu[2] + 3);  // scalar of H2
  auto Lop = [&](const GaussMatrix& Z) {
    std::vector<GaussianRational> x = decompose(basis, Z);
    GaussMatrix out = tD.scaled(-x[0]) + tYp.scaled(-x[1]) + tYm.scaled(-x[2]);
    GaussianRational diag = x[3] * s12 + x[4] * sX;
    for (std::size_t c = 0; c < n; ++c) out.at(c, c) += diag;
    return out;
  };

  // 4 grad phi = L(Z_i) phi (x) v_i over the tangent string, with
  //   Z_2 = H1 - i S12 (coef 1),   Z_1 = S13 - i S23 (coef -2),
  //   Z_0 = H2 (coef -2),          Z_-1 = S13 + i S23 (coef 2),
  //   Z_-2 = H1 + i S12 (coef 1),
  // where S_jk = E_jk + E_kj.
  GaussMatrix S12 = E(0, 1) + E(1, 0);
  GaussMatrix S13 = E(0, 2) + E(2, 0);
  GaussMatrix S23 = E(1, 2) + E(2, 1);
  std::vector<NablaItem> items;
  items.push_back({2, Rational(1), Lop(H1 + S12.scaled(-I_))});
  items.push_back({1, Rational(-2), Lop(S13 + S23.scaled(-I_))});
  items.push_back({0, Rational(-2), Lop(H2)});
  items.push_back({-1, Rational(2), Lop(S13 + S23.scaled(I_))});
  items.push_back({-2, Rational(1), Lop(H1 + S12.scaled(I_))});

  // Project onto the component of highest weight lambda + dir.
  auto cg = cg_oracle(2 * (int)lambda, 4);
  GaussMatrix M((std::size_t)tgt.size(), n);
  for (const auto& item : items)
    for (int q = src.lo; q <= src.hi; ++q)
      for (int qq = src.lo; qq <= src.hi; ++qq) {
        const GaussianRational& e =
            item.op.at((std::size_t)src.index(qq), (std::size_t)src.index(q));
        if (e.is_zero()) continue;
        auto it = cg.find({2 * qq, 2 * item.i, 2 * dir});
        if (it == cg.end()) continue;
        if (!tgt.contains(qq + item.i))
          throw std::logic_error("projection left the target string");
        M.at((std::size_t)tgt.index(qq + item.i), (std::size_t)src.index(q)) +=
            e * GaussianRational(item.coef * it->second);
      }
  return {Group::SL3, src, tgt, real_part_or_throw(M)};
}

Rational u2_tensor_up(int a, int b, int q, int i, int j) {
  if (b > a || q < b || q > a || i < 0 || i > 2 || j < 0 || j > 2)
    throw std::invalid_argument("u2_tensor_up argument out of range");
  Rational Q(q), A(a), B(b);
  if (j == 2) return Rational(1);
  if (j == 1) {
    if (i == 2) return A - Q;
    if (i == 1) return (2 * Q - A - B) * Rational(-1, 2);
    return B - Q;
  }
  if (i == 2) return (Q - A + 1) * (Q - A);
  if (i == 1) return (Q - B) * (Q - A);
  return (Q - B) * (Q - B - 1);
}

Rational u2_tensor_down(int a, int b, int q, int i, int j) {
  if (b > a || q < b || q > a || i < -2 || i > 0 || j < -2 || j > 0)
    throw std::invalid_argument("u2_tensor_down argument out of range");
  Rational Q(q), A(a), B(b);
  if (j == 0) return Rational(1);
  if (j == -1) {
    if (i == 0) return A - Q;
    if (i == -1) return (2 * Q - A - B) * Rational(-1, 2);
    return B - Q;
  }
  if (i == 0) return (Q - A + 1) * (Q - A);
  if (i == -1) return (Q - B) * (Q - A);
  return (Q - B) * (Q - B - 1);
}

ShiftMatrix nabla_oracle(U2Weight lam, const std::array<Rational, 2>& nu,
                         Sp2Dir dir) {
  if (!lam.valid()) throw std::invalid_argument("invalid K-type");
  // Restricted-function string for the K-type (l1,l2): a U(2) string with
  // parameters (a,b) = (-l2,-l1).
  const int a = -lam.l2, b = -lam.l1;
  StringRange src = string_range_sp2(lam);

  // Which half of the tangent space carries the direction, and the component
  // index of the projection.
  bool up_half;
  int j;
  if (dir == Sp2Dir{2, 0}) {
    up_half = false;
    j = 0;
  } else if (dir == Sp2Dir{1, 1}) {
    up_half = false;
    j = -1;
  } else if (dir == Sp2Dir{0, 2}) {
    up_half = false;
    j = -2;
  } else if (dir == Sp2Dir{0, -2}) {
    up_half = true;
    j = 2;
  } else if (dir == Sp2Dir{-1, -1}) {
    up_half = true;
    j = 1;
  } else if (dir == Sp2Dir{-2, 0}) {
    up_half = true;
    j = 0;
  } else {
    throw std::invalid_argument("bad SP2 direction");
  }
  StringRange tgt = string_range_sp2({lam.l1 + dir[0], lam.l2 + dir[1]});
  if (tgt.size() == 0) return make_empty(Group::SP2, src, tgt);

  // Adapted basis of sp(4): compact generators {D1, D2, Y+, Y-}, split
  // Cartan {H1, H2}, nilpotent root vectors for f1-f2, f1+f2, 2f1, 2f2.
  auto E = [](int r, int c) { return unit(4, r, c); };
  GaussMatrix Xf12 = E(0, 1) + E(3, 2).scaled(G(-1));
  GaussMatrix Xf12m = E(1, 0) + E(2, 3).scaled(G(-1));   // root f2-f1
  GaussMatrix Xs = E(0, 3) + E(1, 2);                 // root f1+f2
  GaussMatrix Xsm = E(3, 0) + E(2, 1);                // root -f1-f2
  GaussMatrix X2f1 = E(0, 2);
  GaussMatrix X2f2 = E(1, 3);
  GaussMatrix D1 = (E(2, 0) + E(0, 2).scaled(G(-1))).scaled(I_);
  GaussMatrix D2 = (E(3, 1) + E(1, 3).scaled(G(-1))).scaled(I_);
  GaussMatrix Yp = ((Xf12m + Xf12.scaled(G(-1))).scaled(G(-1)) +
                    (Xsm + Xs.scaled(G(-1))).scaled(I_))
                       .scaled(GaussianRational(Rational(1, 2)));
  GaussMatrix Ym = ((Xf12m + Xf12.scaled(G(-1))) +
                    (Xsm + Xs.scaled(G(-1))).scaled(I_))
                       .scaled(GaussianRational(Rational(1, 2)));
  GaussMatrix H1 = E(0, 0) + E(2, 2).scaled(G(-1));
  GaussMatrix H2 = E(1, 1) + E(3, 3).scaled(G(-1));
  std::vector<GaussMatrix> basis{D1, D2, Yp, Ym, H1, H2, Xf12, Xs, X2f1, X2f2};

  // Compact generators on the string.
  std::size_t n = (std::size_t)src.size();
  GaussMatrix tD1(n, n), tD2(n, n), tYp(n, n), tYm(n, n);
  for (int q = src.lo; q <= src.hi; ++q) {
    std::size_t c = (std::size_t)src.index(q);
    tD1.at(c, c) = GaussianRational(Rational(q));
    tD2.at(c, c) = GaussianRational(Rational(a + b - q));
    if (q < src.hi) tYp.at(c + 1, c) = GaussianRational(Rational(a - q));
    if (q > src.lo) tYm.at(c - 1, c) = GaussianRational(Rational(q - b));
  }
  GaussianRational s1(nu[0] + 2), s2(nu[1] + 1);  // scalars of H1, H2
  auto Lop = [&](const GaussMatrix& Z) {
    std::vector<GaussianRational> x = decompose(basis, Z);
    GaussMatrix out = tD1.scaled(-x[0]) + tD2.scaled(-x[1]) +
                      tYp.scaled(-x[2]) + tYm.scaled(-x[3]);
    GaussianRational diag = x[4] * s1 + x[5] * s2;
    for (std::size_t c = 0; c < n; ++c) out.at(c, c) += diag;
    return out;
  };

  // The relevant half of 4 grad phi, written against the v_i basis of the
  // tangent strings (X_{2e1} = v_2, X_{e1+e2} = 2 v_1, X_{2e2} = v_0 and the
  // mirror for the other half):
  //   up half:   L(H1 - D1 - 2i X_{2f1}) (x) v_2
  //            - 2 L(Y+ - X_{f1-f2} + i X_{f1+f2}) (x) v_1
  //            + L(H2 - D2 - 2i X_{2f2}) (x) v_0,
  //   down half: L(H1 + D1 + 2i X_{2f1}) (x) v_-2
  //            - 2 L(Y- + X_{f1-f2} + i X_{f1+f2}) (x) v_-1
  //            + L(H2 + D2 + 2i X_{2f2}) (x) v_0.
  std::vector<NablaItem> items;
  if (up_half) {
    items.push_back(
        {2, Rational(1), Lop(H1 + D1.scaled(G(-1)) + X2f1.scaled(I_ * G(-2)))});
    items.push_back({1, Rational(-2),
                     Lop(Yp + Xf12.scaled(G(-1)) + Xs.scaled(I_))});
    items.push_back(
        {0, Rational(1), Lop(H2 + D2.scaled(G(-1)) + X2f2.scaled(I_ * G(-2)))});
  } else {
    items.push_back({-2, Rational(1), Lop(H1 + D1 + X2f1.scaled(I_ * G(2)))});
    items.push_back({-1, Rational(-2), Lop(Ym + Xf12 + Xs.scaled(I_))});
    items.push_back({0, Rational(1), Lop(H2 + D2 + X2f2.scaled(I_ * G(2)))});
  }

  GaussMatrix M((std::size_t)tgt.size(), n);
  for (const auto& item : items)
    for (int q = src.lo; q <= src.hi; ++q)
      for (int qq = src.lo; qq <= src.hi; ++qq) {
        const GaussianRational& e =
            item.op.at((std::size_t)src.index(qq), (std::size_t)src.index(q));
        if (e.is_zero()) continue;
        Rational cg = up_half ? u2_tensor_up(a, b, qq, item.i, j)
                              : u2_tensor_down(a, b, qq, item.i, j);
        if (cg == 0) continue;
        if (!tgt.contains(qq + item.i))
          throw std::logic_error("projection left the target string");
        M.at((std::size_t)tgt.index(qq + item.i), (std::size_t)src.index(q)) +=
            e * GaussianRational(item.coef * cg);
      }
  return {Group::SP2, src, tgt, real_part_or_throw(M)};
}

// ---------------------------------------------------------------------------
// Composition
// ---------------------------------------------------------------------------

ShiftMatrix compose(long lambda, const std::array<Rational, 3>& nu,
                    const std::vector<int>& dirs) {
  StringRange src = string_range_sl3(lambda);
  ShiftMatrix out{Group::SL3, src, src,
                  ExactMatrix::identity((std::size_t)src.size())};
  long cur = lambda;
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    if (cur < 0)
      throw std::invalid_argument("composition through an invalid K-type");
    ShiftMatrix step = shift_matrix(cur, nu, dirs[k]);
    out = {Group::SL3, src, step.tgt, step.mat * out.mat};
    cur += dirs[k];
  }
  return out;
}

ShiftMatrix compose(U2Weight lam, const std::array<Rational, 2>& nu,
                    const std::vector<Sp2Dir>& dirs) {
  StringRange src = string_range_sp2(lam);
  ShiftMatrix out{Group::SP2, src, src,
                  ExactMatrix::identity((std::size_t)src.size())};
  U2Weight cur = lam;
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    if (!cur.valid())
      throw std::invalid_argument("composition through an invalid K-type");
    ShiftMatrix step = shift_matrix(cur, nu, dirs[k]);
    out = {Group::SP2, src, step.tgt, step.mat * out.mat};
    cur = {cur.l1 + dirs[k][0], cur.l2 + dirs[k][1]};
  }
  return out;
}

}  // namespace soclelab
