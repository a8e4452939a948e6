#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../src/shiftops.hpp"

using namespace soclelab;

namespace {

std::array<Rational, 3> nu3(const Rational& a, const Rational& b,
                            const Rational& c) {
  return {a, b, c};
}
std::array<Rational, 2> nu2(const Rational& a, const Rational& b) {
  return {a, b};
}

bool equal_up_to_scalar(const ExactMatrix& a, const ExactMatrix& b,
                        Rational& scale) {
  // scale * a == b with a fixed nonzero scale; false if shapes differ or no
  // such scale exists.
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  scale = 0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a.at(r, c) != 0) {
        scale = b.at(r, c) / a.at(r, c);
        goto found;
      }
  return b.is_zero();
found:
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a.at(r, c) * scale != b.at(r, c)) return false;
  return true;
}

}  // namespace

TEST_CASE("sl3 closed forms on small strings") {
  // lambda = 2, nu = (1,0,-1): the raising operator sends
  // c1 (v_2 + v_-2) + c2 v_0 to (24 c1 + 4 c2)(v_2 - v_-2).
  auto nu = nu3(1, 0, -1);
  for (auto [c1, c2] : {std::pair<long, long>{1, 0}, {0, 1}, {5, 7}}) {
    auto img = shift_matrix(2, nu, 1).apply(
        {{2, Rational(c1)}, {0, Rational(c2)}, {-2, Rational(c1)}});
    Rational top = Rational(24) * c1 + Rational(4) * c2;
    std::map<int, Rational> expect;
    if (top != 0) expect = {{2, top}, {-2, -top}};
    CHECK(img == expect);
  }

  // lambda = 0: the degree-raising operators annihilate the constant iff
  // nu = (-1,0,1); the one-step raiser vanishes identically.
  std::vector<std::array<Rational, 3>> perms{
      nu3(1, 0, -1), nu3(1, -1, 0), nu3(0, 1, -1),
      nu3(0, -1, 1), nu3(-1, 1, 0), nu3(-1, 0, 1)};
  for (const auto& p : perms) {
    CHECK(shift_matrix(0, p, 1).mat.is_zero());
    bool killed = shift_matrix(0, p, 2).apply({{0, Rational(1)}}).empty();
    CHECK(killed == (p == nu3(-1, 0, 1)));
  }

  // Degenerate directions produce empty targets.
  CHECK(shift_matrix(0, nu, -1).tgt.size() == 0);
  CHECK(shift_matrix(1, nu, -2).tgt.size() == 0);
}

TEST_CASE("sp2 closed forms on small strings") {
  // One-dimensional K-type (3,3): string {-3}.
  auto img = shift_matrix(U2Weight{3, 3}, nu2(5, 7), Sp2Dir{0, -2})
                 .apply({{-3, Rational(1)}});
  CHECK(img == std::map<int, Rational>{{-1, Rational(4)}, {-3, Rational(5)}});

  // K-type (2,-2) at nu = (1,2): the (1,1)-shift of an even vector.
  auto m = shift_matrix(U2Weight{2, -2}, nu2(1, 2), Sp2Dir{1, 1});
  for (auto [a2, a0, am2] :
       {std::array<long, 3>{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {3, 5, 2}}) {
    auto v = m.apply({{2, Rational(a2)}, {0, Rational(a0)}, {-2, Rational(am2)}});
    std::map<int, Rational> expect;
    Rational e0 = Rational(-6) * (2 * Rational(a2) - Rational(a0));
    Rational em2 = Rational(-2) * (Rational(a0) - 2 * Rational(am2));
    if (e0 != 0) expect[0] = e0;
    if (em2 != 0) expect[-2] = em2;
    CHECK(v == expect);
  }
}

TEST_CASE("tensor expansion coefficients intertwine the ladder operators") {
  for (auto [a, b] : {std::pair<int, int>{3, 1}, {2, -2}, {0, 0}, {5, -1},
                      {1, 1}, {4, -4}}) {
    auto U = [&](int q, int i, int j) {
      if (q < b || q > a || i < 0 || i > 2) return Rational(0);
      return u2_tensor_up(a, b, q, i, j);
    };
    auto Dn = [&](int q, int i, int j) {
      if (q < b || q > a || i < -2 || i > 0) return Rational(0);
      return u2_tensor_down(a, b, q, i, j);
    };
    for (int q = b; q <= a; ++q) {
      for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j) {
          // Lowering: (2,0)-string weight i drops with coefficient i.
          Rational lhs = Rational(q - b) * U(q - 1, i, j) +
                         Rational(i) * U(q, i - 1, j);
          CHECK(lhs == Rational(q + i - (b + 2 - j)) * U(q, i, j));
          // Raising: coefficient 2 - i.
          Rational rhs = Rational(a - q) * U(q + 1, i, j) +
                         Rational(2 - i) * U(q, i + 1, j);
          CHECK(rhs == Rational(a + j - (q + i)) * U(q, i, j));
        }
      for (int i = -2; i <= 0; ++i)
        for (int j = -2; j <= 0; ++j) {
          // (0,-2)-string: lowering coefficient i+2, raising -i.
          Rational lhs = Rational(q - b) * Dn(q - 1, i, j) +
                         Rational(i + 2) * Dn(q, i - 1, j);
          CHECK(lhs == Rational(q + i - (b - 2 - j)) * Dn(q, i, j));
          Rational rhs = Rational(a - q) * Dn(q + 1, i, j) +
                         Rational(-i) * Dn(q, i + 1, j);
          CHECK(rhs == Rational(a + j - (q + i)) * Dn(q, i, j));
        }
    }
  }
}

TEST_CASE("sl3 covariant derivative reproduces the closed forms") {
  std::vector<std::array<Rational, 3>> nus{
      nu3(Rational(7, 3), Rational(1, 5), -2), nu3(1, 0, -1), nu3(0, -1, 1),
      nu3(2, 0, -1), nu3(-1, 2, 0)};
  for (long lambda = 0; lambda <= 4; ++lambda)
    for (int dir = -2; dir <= 2; ++dir) {
      bool have_scale = false;
      Rational scale;
      for (const auto& nu : nus) {
        ShiftMatrix V = shift_matrix(lambda, nu, dir);
        ShiftMatrix O = nabla_oracle(lambda, nu, dir);
        REQUIRE(V.src == O.src);
        REQUIRE(V.tgt == O.tgt);
        if (V.tgt.size() == 0) continue;
        Rational s;
        bool prop = equal_up_to_scalar(V.mat, O.mat, s);
        CHECK_MESSAGE(prop, "lambda=", lambda, " dir=", dir);
        REQUIRE(prop);
        if (V.mat.is_zero()) {
          CHECK(O.mat.is_zero());
          continue;
        }
        if (!have_scale) {
          scale = s;
          have_scale = true;
          CHECK(s != 0);
        } else {
          CHECK_MESSAGE(s == scale, "scale drifts with nu at lambda=", lambda,
                        " dir=", dir);
        }
      }
    }
}

TEST_CASE("sp2 covariant derivative reproduces the closed forms") {
  std::vector<std::array<Rational, 2>> nus{
      nu2(Rational(7, 3), Rational(1, 5)), nu2(1, 2), nu2(2, 1), nu2(-2, 1),
      nu2(5, 7)};
  std::vector<Sp2Dir> dirs{{2, 0}, {1, 1}, {0, 2}, {0, -2}, {-1, -1}, {-2, 0}};
  for (int l1 = -3; l1 <= 3; ++l1)
    for (int l2 = -3; l2 <= l1; ++l2)
      for (const auto& dir : dirs) {
        bool have_scale = false;
        Rational scale;
        for (const auto& nu : nus) {
          ShiftMatrix V = shift_matrix(U2Weight{l1, l2}, nu, dir);
          ShiftMatrix O = nabla_oracle(U2Weight{l1, l2}, nu, dir);
          REQUIRE(V.src == O.src);
          REQUIRE(V.tgt == O.tgt);
          if (V.tgt.size() == 0) continue;
          Rational s;
          bool prop = equal_up_to_scalar(V.mat, O.mat, s);
          CHECK_MESSAGE(prop, "lam=(", l1, ",", l2, ") dir=(", dir[0], ",",
                        dir[1], ")");
          REQUIRE(prop);
          if (V.mat.is_zero()) {
            CHECK(O.mat.is_zero());
            continue;
          }
          if (!have_scale) {
            scale = s;
            have_scale = true;
            CHECK(s != 0);
          } else {
            CHECK(s == scale);
          }
        }
      }
}

TEST_CASE("composed shifts reproduce hand-computed chains") {
  // Identity composition.
  auto id = compose(2L, nu3(1, 0, -1), {});
  CHECK(id.mat.rows() == 5);
  CHECK(id.apply({{1, Rational(3)}}) ==
        std::map<int, Rational>{{1, Rational(3)}});

  // Chains inside the spherical series at Lambda = (2,1).
  auto nu = nu2(2, 1);
  CHECK(compose(U2Weight{2, 2}, nu, {{0, -2}, {1, 1}})
            .apply({{-2, Rational(1)}}) ==
        std::map<int, Rational>{{-2, Rational(-16)}});
  CHECK(compose(U2Weight{1, -1}, nu, {{1, 1}, {0, -2}})
            .apply({{0, Rational(1)}}) ==
        std::map<int, Rational>{
            {2, Rational(8)}, {0, Rational(-12)}, {-2, Rational(-4)}});
  CHECK(compose(U2Weight{1, -1}, nu, {{1, 1}, {1, 1}})
            .apply({{0, Rational(1)}}) ==
        std::map<int, Rational>{{-2, Rational(-24)}});

  // At the neighbouring parameter (1,2).
  CHECK(shift_matrix(U2Weight{3, 1}, nu2(1, 2), Sp2Dir{0, -2})
            .apply({{-2, Rational(1)}}) ==
        std::map<int, Rational>{{0, Rational(3)}, {-2, Rational(1)}});

  // Composition through an invalid K-type is rejected.
  CHECK_THROWS_AS(compose(0L, nu3(1, 0, -1), {-1, 1}), std::invalid_argument);
}
