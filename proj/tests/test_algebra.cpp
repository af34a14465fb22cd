#include <susyw/algebra.hpp>

#include <doctest.h>

using namespace susyw;

namespace {
SuperElement e(int i, int j, const Rat& c = 1) { return SuperElement::unit(i, j, c); }
}

TEST_CASE("parity tables follow the presentation split") {
  AlgebraSpec glp(Family::GlNp1, 1);
  CHECK(glp.parity(2) == 1);
  CHECK(glp.parity(1) == 0);
  AlgebraSpec glm(Family::GlNm1, 2);
  CHECK(glm.parity(1) == 1);
  CHECK(glm.parity(2) == 0);
  AlgebraSpec even(Family::OspEven0, 1);
  CHECK(even.parity(1) == 1);
  CHECK(even.parity(2) == 0);
  CHECK(even.parity(3) == 0);
  CHECK(even.parity(4) == 1);
}

TEST_CASE("delta tables follow the case split") {
  AlgebraSpec oddp(Family::OspOddP, 1);
  CHECK(oddp.delta(4) == 1);
  CHECK(oddp.delta(1) == 0);
  CHECK(oddp.delta(2) == 0);
  AlgebraSpec even(Family::OspEven0, 1);
  CHECK(even.delta(1) == 1);
  CHECK(even.delta(2) == 0);
  CHECK(even.delta(3) == 0);
  AlgebraSpec evenp(Family::OspEvenP2, 1);
  CHECK(evenp.delta(2) == 1);
  CHECK(evenp.delta(1) == 0);
  CHECK_THROWS(AlgebraSpec(Family::GlNp1, 1).delta(1));
}

TEST_CASE("bracket and form on gl(2|1)") {
  AlgebraSpec s(Family::GlNp1, 1);
  CHECK(lie_bracket(s, e(1, 2), e(2, 1)) == e(1, 1) + e(2, 2));
  CHECK(lie_bracket(s, e(1, 1), e(1, 1)).is_zero());
  CHECK(lie_bracket(s, e(1, 2), e(2, 3)) == e(1, 3));
  CHECK(bilinear_form(s, e(1, 2), e(2, 1)) == 1);
  CHECK(bilinear_form(s, e(2, 1), e(1, 2)) == -1);
  CHECK(bilinear_form(s, e(1, 1), e(2, 2)) == 0);
}

TEST_CASE("bracket axioms of the matrix presentations") {
  for (Family f : {Family::GlNp1, Family::GlNm1, Family::OspOddP, Family::OspEven0}) {
    AlgebraSpec s(f, f == Family::GlNm1 ? 2 : 1);
    auto& basis = s.basis();
    for (auto& a : basis)
      for (auto& b : basis) {
        int pa = a.parity, pb = b.parity;
        SuperElement skew = lie_bracket(s, a.mat, b.mat) +
                            lie_bracket(s, b.mat, a.mat) * Rat(neg1pow(pa * pb));
        CHECK(skew.is_zero());
        // invariance (ab|c) pairing
        for (auto& c : basis) {
          Rat left = bilinear_form(s, lie_bracket(s, a.mat, b.mat), c.mat);
          Rat right = bilinear_form(s, a.mat, lie_bracket(s, b.mat, c.mat));
          CHECK(left == right);
        }
      }
    // jacobi on a subset of triples to keep the scan small; the affine
    // axiom suite covers the full scan
    for (size_t x = 0; x < basis.size(); x += 2)
      for (size_t y = 0; y < basis.size(); y += 2)
        for (size_t z = 0; z < basis.size(); z += 2) {
          const auto &a = basis[x], &b = basis[y], &c = basis[z];
          SuperElement jac =
              lie_bracket(s, a.mat, lie_bracket(s, b.mat, c.mat)) -
              lie_bracket(s, lie_bracket(s, a.mat, b.mat), c.mat) -
              lie_bracket(s, b.mat, lie_bracket(s, a.mat, c.mat)) * Rat(neg1pow(a.parity * b.parity));
          CHECK(jac.is_zero());
        }
  }
}

TEST_CASE("supersymmetry of the form") {
  AlgebraSpec s(Family::OspOddP, 1);
  for (auto& a : s.basis())
    for (auto& b : s.basis()) {
      CHECK(bilinear_form(s, a.mat, b.mat) ==
            bilinear_form(s, b.mat, a.mat) * Rat(neg1pow(a.parity * b.parity)));
      if (((a.parity + b.parity) % 2) == 1) CHECK(bilinear_form(s, a.mat, b.mat) == 0);
    }
}

TEST_CASE("fold basis of osp(3|2)") {
  AlgebraSpec s(Family::OspOddP, 1);
  CHECK(s.fold_F(2, 1) == e(2, 1) - e(5, 4));
  // the defining relation of the orthosymplectic condition
  SuperElement J = s.form_J();
  for (auto& b : s.basis()) {
    SuperElement cond = mat_mul(supertranspose(s, b.mat), J) + mat_mul(J, b.mat);
    CHECK(cond.is_zero());
  }
  // folded symmetry F_{j'i'} = tau(i,j) F_{ij}
  for (int i = 1; i <= s.N; ++i)
    for (int j = 1; j <= s.N; ++j)
      CHECK(s.fold_F(s.conj(j), s.conj(i)) == s.fold_F(i, j) * Rat(s.tau(i, j)));
  // basis excludes the vanishing anti-diagonal labels
  CHECK(s.fold_F(2, s.conj(2)).is_zero() == (s.parity(2) == 0));
}

TEST_CASE("fold basis spans the orthosymplectic algebra") {
  for (Family f : {Family::OspOddP, Family::OspOddM, Family::OspEven0, Family::OspEvenP2}) {
    for (int n = 1; n <= 2; ++n) {
      AlgebraSpec s(f, n);
      // expected dimension of osp(M|2N): M(M-1)/2 + N(2N+1) + 2MN
      int M = 0, halfn = 0;
      switch (f) {
        case Family::OspOddP: M = 2 * n + 1; halfn = n; break;
        case Family::OspOddM: M = 2 * n - 1; halfn = n; break;
        case Family::OspEven0: M = 2 * n; halfn = n; break;
        case Family::OspEvenP2: M = 2 * n + 2; halfn = n; break;
        default: break;
      }
      int dim = M * (M - 1) / 2 + halfn * (2 * halfn + 1) + 2 * M * halfn;
      CHECK(s.dim() == dim);
      // independence: expansion round trip on every pair sum
      for (auto& b : s.basis()) {
        auto coords = expand_in_basis(s, b.mat);
        REQUIRE(coords.size() == 1);
        CHECK(coords[0].second == 1);
      }
      // parity symmetry across the anti-diagonal involution
      for (int i = 1; i <= s.N; ++i) CHECK(s.parity(i) == s.parity(s.conj(i)));
    }
  }
}

TEST_CASE("theta is an automorphism") {
  for (Family f : {Family::OspOddP, Family::OspOddM, Family::OspEven0, Family::OspEvenP2}) {
    AlgebraSpec s(f, 1);
    auto theta = [&](const SuperElement& x) {
      SuperElement r;
      for (auto& [k, c] : x.entries) r += s.theta_unit(k.first, k.second) * c;
      return r;
    };
    for (int i = 1; i <= s.N; ++i)
      for (int j = 1; j <= s.N; ++j)
        for (int k = 1; k <= s.N; ++k)
          for (int l = 1; l <= s.N; ++l) {
            SuperElement lhs = theta(lie_bracket(s, e(i, j), e(k, l)));
            SuperElement rhs = lie_bracket(s, s.theta_unit(i, j), s.theta_unit(k, l));
            CHECK(lhs == rhs);
          }
  }
}

TEST_CASE("principal nilpotent per family") {
  AlgebraSpec glp(Family::GlNp1, 1);
  CHECK(glp.principal_f() == e(2, 1) + e(3, 2));
  AlgebraSpec oddp(Family::OspOddP, 1);
  CHECK(oddp.principal_f() == oddp.fold_F(2, 1) + oddp.fold_F(3, 2));
  AlgebraSpec even(Family::OspEven0, 1);
  CHECK(even.principal_f() == even.fold_F(3, 1) + even.fold_F(2, 1));
  // f is homogeneous of degree -1/2
  for (Family f : {Family::GlNp1, Family::GlNm1, Family::OspOddP, Family::OspOddM,
                   Family::OspEven0, Family::OspEvenP2}) {
    AlgebraSpec s(f, f == Family::GlNm1 ? 2 : 1);
    auto dd = dd_of(s, s.principal_f());
    REQUIRE(dd.has_value());
    CHECK(*dd == -1);
  }
}

TEST_CASE("grading positions") {
  AlgebraSpec s(Family::GlNp1, 1);
  CHECK(s.dd_unit(1, 3) == 2);  // degree 1
  CHECK(s.dd_unit(2, 2) == 0);
  AlgebraSpec even(Family::OspEven0, 1);
  CHECK(even.dd_unit(3, 1) == -1);  // component of f at degree -1/2
}

TEST_CASE("graded dimensions match the displayed formulas") {
  // osp(2n+1|2n): dim g_k for -2n <= k <= 0
  for (int n = 1; n <= 2; ++n) {
    AlgebraSpec s(Family::OspOddP, n);
    auto dims = graded_dims(s);
    for (int k2 = -2 * (2 * n); k2 <= 0; ++k2) {
      int expect;
      if (((k2 % 2) + 2) % 2 == 1) {
        expect = (2 * k2 + (4 * n + 1) + 2) / 2 - 1;  // k + 2n + 1/2 with k = k2/2
        expect = (k2 + 4 * n + 1) / 2;
      } else if (((k2 % 4) + 4) % 4 == 2) {
        expect = k2 / 2 + 2 * n + 1;
      } else {
        expect = k2 / 2 + 2 * n;
      }
      CHECK(dims[k2] == expect);
      CHECK(dims[k2] == dims[-k2]);
    }
  }
  // osp(2n|2n)
  for (int n = 1; n <= 2; ++n) {
    AlgebraSpec s(Family::OspEven0, n);
    auto dims = graded_dims(s);
    for (int k2 = -2 * (2 * n - 1); k2 <= 0; ++k2) {
      int expect;
      bool upper = k2 > -n * 2 || k2 == 0;  // -n < k <= 0
      upper = (k2 > -2 * n);
      if (((k2 % 2) + 2) % 2 == 1) {
        expect = upper ? (k2 + 4 * n + 1) / 2 : (k2 + 4 * n - 1) / 2;
      } else if (((k2 % 4) + 4) % 4 == 0) {
        expect = upper ? k2 / 2 + 2 * n : k2 / 2 + 2 * n - 1;
      } else {
        expect = upper ? k2 / 2 + 2 * n + 1 : k2 / 2 + 2 * n;
      }
      CHECK(dims[k2] == expect);
    }
    CHECK(dims[0] == 2 * n);
  }
  // osp(2n+2|2n)
  for (int n = 1; n <= 2; ++n) {
    AlgebraSpec s(Family::OspEvenP2, n);
    auto dims = graded_dims(s);
    for (int k2 = -4 * n; k2 <= 0; ++k2) {
      int expect;
      bool upper = k2 >= -2 * n + 1;  // -n <= k <= 0 means k2 >= -2n
      upper = (k2 >= -2 * n);
      if (((k2 % 2) + 2) % 2 == 1) {
        expect = upper ? (k2 + 4 * n + 3) / 2 : (k2 + 4 * n + 1) / 2;
      } else if (((k2 % 4) + 4) % 4 == 0) {
        expect = upper ? k2 / 2 + 2 * n + 1 : k2 / 2 + 2 * n;
      } else {
        expect = upper ? k2 / 2 + 2 * n + 2 : k2 / 2 + 2 * n + 1;
      }
      CHECK(dims[k2] == expect);
    }
    CHECK(dims[0] == 2 * n + 1);
  }
}

TEST_CASE("kernel of ad f") {
  for (Family f : {Family::GlNp1, Family::GlNm1, Family::SlNp1, Family::SlNm1, Family::OspOddP,
                   Family::OspOddM, Family::OspEven0, Family::OspEvenP2}) {
    for (int n = 1; n <= 2; ++n) {
      if ((f == Family::GlNm1 || f == Family::SlNm1) && n == 1) continue;
      AlgebraSpec s(f, n);
      auto ker = kerf_basis(s);
      SuperElement fe = s.principal_f();
      for (auto& v : ker) CHECK(lie_bracket(s, fe, v).is_zero());
      int dim0 = is_sl(f) ? graded_dims_sl(s)[0] : graded_dims(s)[0];
      CHECK(static_cast<int>(ker.size()) == dim0);
    }
  }
}

TEST_CASE("explicit odd-family kernel elements") {
  for (Family f : {Family::OspOddP, Family::OspOddM}) {
    for (int n = 1; n <= 2; ++n) {
      AlgebraSpec s(f, n);
      SuperElement fe = s.principal_f();
      for (int k = 1; k <= s.N; ++k) {
        SuperElement v = osp_odd_v(s, k);
        CHECK(lie_bracket(s, fe, v).is_zero());
        bool vanish = (k % 4 == 1 || k % 4 == 2);
        CHECK(v.is_zero() == vanish);
        if (!v.is_zero()) CHECK(*dd_of(s, v) == 1 - k);
      }
    }
  }
}

TEST_CASE("explicit even-family kernel elements") {
  for (int n = 1; n <= 2; ++n) {
    AlgebraSpec s(Family::OspEven0, n);
    SuperElement fe = s.principal_f();
    SuperElement tilde = osp_even_v_tilde(s);
    CHECK(lie_bracket(s, fe, tilde).is_zero());
    CHECK(*dd_of(s, tilde) == 1 - 2 * n);
    for (int l = 2 * n + 1; l <= 4 * n - 1; ++l) {
      SuperElement v = osp_even_v_high(s, l);
      CHECK(lie_bracket(s, fe, v).is_zero());
      CHECK(v.is_zero() == (l % 4 == 1 || l % 4 == 2));
    }
  }
  AlgebraSpec s2(Family::OspEvenP2, 1);
  CHECK(lie_bracket(s2, s2.principal_f(), osp_even_v_tilde(s2)).is_zero());
}

TEST_CASE("traceless projection data") {
  AlgebraSpec s(Family::GlNp1, 1);
  CHECK(supertrace(s, s.identity_elem()) == 1);
  AlgebraSpec s2(Family::GlNm1, 2);
  CHECK(supertrace(s2, s2.identity_elem()) == -1);
}
