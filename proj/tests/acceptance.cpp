// End-to-end acceptance suite. Each criterion prints one pass/fail line;
// the process exits nonzero when any criterion fails.

#include <susyw/jsonio.hpp>
#include <susyw/verify.hpp>

#include <cstdio>
#include <string>
#include <vector>

using namespace susyw;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& title, bool pass, const std::string& detail = "") {
  std::printf("criterion %d: %-4s %s%s%s\n", number, pass ? "PASS" : "FAIL", title.c_str(),
              detail.empty() ? "" : " - ", detail.c_str());
  if (!pass) ++g_failures;
}

bool report_ok(const Report& rep, std::string* why = nullptr) {
  if (rep.all_pass()) return true;
  if (why && rep.first_failure()) *why = rep.first_failure()->name;
  return false;
}

// 1. skew and jacobi residuals vanish on all basis pairs/triples
void criterion1() {
  struct Item {
    Family f;
    int n;
  };
  std::vector<Item> items = {{Family::GlNp1, 1}, {Family::GlNm1, 2}, {Family::OspOddP, 1},
                             {Family::OspEven0, 1}, {Family::OspEvenP2, 1}, {Family::GlNp1, 2},
                             {Family::OspOddP, 2}};
  bool ok = true;
  std::string why;
  for (auto& it : items) {
    AlgebraSpec s(it.f, it.n);
    Engine eng(s);
    Report rep = check_axioms(eng);
    if (!report_ok(rep, &why)) {
      ok = false;
      why = family_name(it.f) + " n=" + std::to_string(it.n) + ": " + why;
      break;
    }
  }
  criterion(1, "conformal algebra axioms on every basis pair and triple", ok, why);
}

// 2. gl / sl pipelines
void criterion2() {
  bool ok = true;
  std::string why;
  struct Item {
    Family f;
    int n;
    size_t count;
  };
  std::vector<Item> items = {{Family::GlNp1, 1, 3}, {Family::SlNp1, 1, 2}, {Family::GlNm1, 2, 3},
                             {Family::SlNm1, 2, 2}, {Family::GlNp1, 2, 5}, {Family::SlNp1, 2, 4},
                             {Family::GlNm1, 3, 5}, {Family::SlNm1, 3, 4}};
  for (auto& it : items) {
    AlgebraSpec s(it.f, it.n);
    Engine eng(s);
    GeneratorSet gs = generators(eng);
    if (gs.gens.size() != it.count) {
      ok = false;
      why = family_name(it.f) + ": generator count";
      break;
    }
    if (it.f == Family::GlNp1) {
      DiffPoly w1;
      for (int i = 1; i <= s.N; ++i) w1 += eng.gen_poly(s.basis_id(i, i));
      if (!(gs.gens[0].w == w1)) {
        ok = false;
        why = "w1 is not the identity trace element";
        break;
      }
      Engine esl(AlgebraSpec(Family::SlNp1, it.n), 1);
      // the projection of w1 vanishes
      if (!pi_sl(eng, gs.gens[0].w).is_zero()) {
        ok = false;
        why = "projected w1 does not vanish";
        break;
      }
    }
    Report rep = verify_all(eng, gs);
    if (!report_ok(rep, &why)) {
      ok = false;
      why = family_name(it.f) + " n=" + std::to_string(it.n) + ": " + why;
      break;
    }
  }
  criterion(2, "gl and sl generator pipelines", ok, why);
}

// 3. odd osp pipelines with explicit kernel elements
void criterion3() {
  bool ok = true;
  std::string why;
  for (Family f : {Family::OspOddP, Family::OspOddM}) {
    AlgebraSpec s(f, 1);
    Engine eng(s);
    GeneratorSet gs = generators(eng);
    Report rep = verify_all(eng, gs);
    if (!report_ok(rep, &why)) {
      ok = false;
      why = family_name(f) + ": " + why;
      break;
    }
    // minimal labels are the residues 0 and 3 and match the kernel size
    int dim0 = graded_dims(s)[0];
    if (static_cast<int>(gs.minimal.size()) != dim0) {
      ok = false;
      why = family_name(f) + ": minimal size";
      break;
    }
    for (int idx : gs.minimal) {
      int t = gs.gens[idx].t;
      if (t % 4 != 0 && t % 4 != 3) {
        ok = false;
        why = family_name(f) + ": minimal residues";
      }
    }
  }
  criterion(3, "odd osp pipelines with explicit kernel matching", ok, why);
}

// 4. osp(2n|2n) identity suite at n = 1 plus the n = 2 recursion identities
void criterion4() {
  bool ok = true;
  std::string why;
  {
    AlgebraSpec s(Family::OspEven0, 1);
    Engine eng(s);
    Report rep = identities(eng, -8);
    if (!report_ok(rep, &why)) ok = false;
    if (ok) {
      GeneratorSet gs = generators(eng, -8);
      Report rv = verify_all(eng, gs);
      if (!report_ok(rv, &why)) ok = false;
    }
  }
  if (ok) {
    AlgebraSpec s(Family::OspEven0, 2);
    Engine eng(s);
    int wf = default_floor(s);
    EvenBlocks sb = build_even_blocks(eng);
    EvenBlocks cb = even_blocks_closed_form(eng);
    int m = s.N / 2;
    for (int r = 0; r < m && ok; ++r)
      for (int c = 0; c < m; ++c)
        if (!(sb.mu11[r][c] == cb.mu11[r][c]) || !(sb.mu22[r][c] == cb.mu22[r][c]) ||
            !(sb.mu12[r][c] == cb.mu12[r][c]) || !(sb.mu21[r][c] == cb.mu21[r][c])) {
          ok = false;
          why = "n=2 surgery";
          break;
        }
    if (ok) {
      AkBk direct = ak_bk(eng, sb, wf);
      AkBk rec = ak_bk_recursion(eng, wf);
      for (int k = 0; k <= m && ok; ++k) {
        if (!(direct.a[k] == rec.a[k]) || !(direct.b[k] == rec.b[k])) {
          ok = false;
          why = "n=2 recursion";
        }
        if (ok && !(adjoint_star(direct.b[k]) == direct.a[k].scale(neg1pow((k + 1) / 2)))) {
          ok = false;
          why = "n=2 adjoint relation";
        }
      }
      if (ok) {
        auto bright = right_coeffs(direct.b[m]);
        for (int i = 0; i <= m && ok; ++i) {
          DiffPoly b_mi;
          if (auto it = bright.find(m - i); it != bright.end()) b_mi = it->second;
          int e = (m + 1) / 2 + i + (i + 1) / 2;
          if (!(b_mi == direct.a[m].coeff(m - i) * Rat(neg1pow(e)))) {
            ok = false;
            why = "n=2 coefficient mirror";
          }
        }
      }
    }
  }
  criterion(4, "osp(2n|2n) construction identities and membership", ok, why);
}

// 5. osp(2n+2|2n) pipeline at n = 1
void criterion5() {
  bool ok = true;
  std::string why;
  AlgebraSpec s(Family::OspEvenP2, 1);
  Engine eng(s);
  GeneratorSet gs = generators(eng);
  if (gs.minimal.size() != 3) {
    ok = false;
    why = "minimal count";
  }
  for (auto& g : gs.gens)
    if (g.tilde && g.t != 3) {
      ok = false;
      why = "tilde weight";
    }
  if (ok) {
    Report rep = verify_all(eng, gs);
    if (!report_ok(rep, &why)) ok = false;
  }
  if (ok) {
    Report rep = identities(eng, default_floor(s));
    if (!report_ok(rep, &why)) ok = false;
  }
  criterion(5, "osp(2n+2|2n) pipeline", ok, why);
}

// 6. graded dimension oracles and kernel sizes
void criterion6() {
  bool ok = true;
  std::string why;
  for (Family f : {Family::OspOddP, Family::OspOddM, Family::OspEven0, Family::OspEvenP2,
                   Family::GlNp1, Family::GlNm1, Family::SlNp1, Family::SlNm1}) {
    for (int n = 1; n <= 2; ++n) {
      if ((f == Family::GlNm1 || f == Family::SlNm1) && n == 1) continue;
      AlgebraSpec s(f, n);
      auto dims = graded_dims(s);
      // symmetric under reflection and totals the algebra dimension
      int total = 0;
      for (auto& [dd, d] : dims) {
        total += d;
        if (dims.count(-dd) == 0 || dims[-dd] != d) {
          ok = false;
          why = family_name(f) + ": asymmetric grading";
        }
      }
      if (total != s.dim()) {
        ok = false;
        why = family_name(f) + ": dimension total";
      }
      auto ker = kerf_basis(s);
      int dim0 = is_sl(f) ? graded_dims_sl(s)[0] : dims[0];
      if (static_cast<int>(ker.size()) != dim0) {
        ok = false;
        why = family_name(f) + " n=" + std::to_string(n) + ": kernel size";
      }
    }
  }
  // the displayed dimension formulas for the osp families
  auto expect_oddp = [](int n, int k2) {
    if (((k2 % 2) + 2) % 2 == 1) return (k2 + 4 * n + 1) / 2;
    if (((k2 % 4) + 4) % 4 == 2) return k2 / 2 + 2 * n + 1;
    return k2 / 2 + 2 * n;
  };
  auto expect_even0 = [](int n, int k2) {
    bool upper = k2 > -2 * n;
    if (((k2 % 2) + 2) % 2 == 1) return upper ? (k2 + 4 * n + 1) / 2 : (k2 + 4 * n - 1) / 2;
    if (((k2 % 4) + 4) % 4 == 0) return upper ? k2 / 2 + 2 * n : k2 / 2 + 2 * n - 1;
    return upper ? k2 / 2 + 2 * n + 1 : k2 / 2 + 2 * n;
  };
  auto expect_evenp2 = [](int n, int k2) {
    bool upper = k2 >= -2 * n;
    if (((k2 % 2) + 2) % 2 == 1) return upper ? (k2 + 4 * n + 3) / 2 : (k2 + 4 * n + 1) / 2;
    if (((k2 % 4) + 4) % 4 == 0) return upper ? k2 / 2 + 2 * n + 1 : k2 / 2 + 2 * n;
    return upper ? k2 / 2 + 2 * n + 2 : k2 / 2 + 2 * n + 1;
  };
  for (int n = 1; n <= 2 && ok; ++n) {
    {
      AlgebraSpec s(Family::OspOddP, n);
      auto dims = graded_dims(s);
      for (int k2 = -4 * n; k2 <= 0; ++k2)
        if (dims[k2] != expect_oddp(n, k2)) {
          ok = false;
          why = "osp odd display n=" + std::to_string(n);
        }
    }
    {
      AlgebraSpec s(Family::OspEven0, n);
      auto dims = graded_dims(s);
      for (int k2 = -(4 * n - 2); k2 <= 0; ++k2)
        if (dims[k2] != expect_even0(n, k2)) {
          ok = false;
          why = "osp(2n|2n) display n=" + std::to_string(n);
        }
    }
    {
      AlgebraSpec s(Family::OspEvenP2, n);
      auto dims = graded_dims(s);
      for (int k2 = -4 * n; k2 <= 0; ++k2)
        if (dims[k2] != expect_evenp2(n, k2)) {
          ok = false;
          why = "osp(2n+2|2n) display n=" + std::to_string(n);
        }
    }
  }
  criterion(6, "graded dimension oracles and kernel sizes", ok, why);
}

// 7. randomized engine identities
void criterion7() {
  bool ok = true;
  std::string why;
  AlgebraSpec s(Family::GlNp1, 1);
  Engine eng(s);
  Report rep = engine_property_checks(eng, -10, 100, 0x5EED5u);
  if (!report_ok(rep, &why)) ok = false;
  AlgebraSpec s2(Family::OspEven0, 1);
  Engine eng2(s2);
  Report rep2 = engine_property_checks(eng2, -10, 100, 0x5EED6u);
  if (ok && !report_ok(rep2, &why)) ok = false;
  criterion(7, "randomized engine identities", ok, why);
}

// 8. level two deformation
void criterion8() {
  bool ok = true;
  std::string why;
  AlgebraSpec s(Family::GlNp1, 1);
  Engine eng(s, Rat(2));
  GeneratorSet gs = generators(eng);
  Report rep = verify_membership(eng, gs);
  if (!report_ok(rep, &why)) ok = false;
  criterion(8, "membership under the level two deformation", ok, why);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
