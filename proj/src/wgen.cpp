#include <susyw/wgen.hpp>

#include <algorithm>
#include <stdexcept>

namespace susyw {

int default_floor(const AlgebraSpec& s) { return -(s.N + 4); }

namespace {

DiffPoly scaled_d(const Engine& eng) { return DiffPoly::constant(eng.level()); }

}  // namespace

DOpMatrix build_matrix(const Engine& eng) {
  const AlgebraSpec& s = eng.alg();
  if (is_osp_even(s.family)) throw std::domain_error("even osp presentations use the block matrix");
  int N = s.N;
  DOpMatrix m(N, std::vector<DOp>(N));
  for (int r = 1; r <= N; ++r) {
    for (int c = r; c <= N; ++c) {
      DOp e;
      if (r == c) e.add(1, scaled_d(eng));
      if (!is_osp(s.family)) {
        // e^{cr} = (-1)^{p(c)} e_{cr}
        e.add(0, DiffPoly::gen(eng.sym(c, r, 0), neg1pow(s.parity(c))));
      } else {
        auto ce = s.canon_E(c, r);
        if (ce.id >= 0) e.add(0, DiffPoly::gen(eng.sym(ce.id, 0), ce.c));
      }
      m[r - 1][c - 1] = std::move(e);
    }
  }
  for (int j = 1; j < N; ++j) {
    Rat v = is_osp(s.family) ? Rat(-neg1pow(s.delta(j))) : Rat(-1);
    m[j][j - 1] = DOp::from_coeff(DiffPoly::constant(v), 0);
  }
  return m;
}

EvenBlocks build_even_blocks(const Engine& eng) {
  const AlgebraSpec& s = eng.alg();
  if (!is_osp_even(s.family)) throw std::domain_error("block matrix needs an even osp presentation");
  int N = s.N, m = N / 2;
  // the N x N matrix sum_i e_ii D + q - f
  DOpMatrix M(N, std::vector<DOp>(N));
  for (int r = 1; r <= N; ++r)
    for (int c = r; c <= N; ++c) {
      DOp e;
      if (r == c) e.add(1, scaled_d(eng));
      auto ce = s.canon_E(c, r);
      if (ce.id >= 0) e.add(0, DiffPoly::gen(eng.sym(ce.id, 0), ce.c));
      M[r - 1][c - 1] = std::move(e);
    }
  SuperElement f = s.principal_f();
  for (auto& [k, v] : f.entries) {
    auto [r, c] = k;
    M[r - 1][c - 1] = DOp::from_coeff(DiffPoly::constant(-v), 0);
  }
  // column m <- column m - column m+1, then row m+1 <- row m+1 - row m
  for (int r = 1; r <= N; ++r) M[r - 1][m - 1] = M[r - 1][m - 1] - M[r - 1][m];
  for (int c = 1; c <= N; ++c) M[m][c - 1] = M[m][c - 1] - M[m - 1][c - 1];

  EvenBlocks b;
  b.mu11.assign(m, std::vector<DOp>(m));
  b.mu12.assign(m, std::vector<DOp>(m));
  b.mu21.assign(m, std::vector<DOp>(m));
  b.mu22.assign(m, std::vector<DOp>(m));
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) {
      b.mu11[r][c] = M[r][c];
      b.mu12[r][c] = M[r][m + c];
      b.mu21[r][c] = M[m + r][c];
      b.mu22[r][c] = M[m + r][m + c];
    }
  return b;
}

EvenBlocks even_blocks_closed_form(const Engine& eng) {
  const AlgebraSpec& s = eng.alg();
  if (!is_osp_even(s.family)) throw std::domain_error("block matrix needs an even osp presentation");
  int m = s.N / 2;
  auto E = [&](int i, int j) {
    auto ce = s.canon_E(i, j);
    if (ce.id < 0) return DiffPoly::zero();
    return DiffPoly::gen(eng.sym(ce.id, 0), ce.c);
  };
  EvenBlocks b;
  b.mu11.assign(m, std::vector<DOp>(m));
  b.mu12.assign(m, std::vector<DOp>(m));
  b.mu21.assign(m, std::vector<DOp>(m));
  b.mu22.assign(m, std::vector<DOp>(m));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      DOp e11;
      if (i <= j && j < m) {
        if (i == j) e11.add(1, scaled_d(eng));
        e11.add(0, E(j, i));
      } else if (i <= j) {  // j == m
        if (i == m) e11.add(1, scaled_d(eng));
        e11.add(0, E(m, i) - E(m + 1, i));
      } else if (i == j + 1) {
        e11.add(0, DiffPoly::constant(-1));
      }
      b.mu11[i - 1][j - 1] = std::move(e11);

      // mu22 indexed as (m+1-i, m+1-j)
      DOp e22;
      if (j <= i && i < m) {
        if (i == j) e22.add(1, scaled_d(eng));
        e22.add(0, E(s.conj(j), s.conj(i)));
      } else if (j <= i) {  // i == m
        if (j == m) e22.add(1, scaled_d(eng));
        e22.add(0, E(s.conj(j), s.conj(m)) - E(s.conj(j), s.conj(m + 1)));
      } else if (j == i + 1) {
        // subdiagonal (-1)^row, written as (-1)^j resp. (-1)^i in the two families
        e22.add(0, DiffPoly::constant(neg1pow(m + 1 - i)));
      }
      b.mu22[m - i][m - j] = std::move(e22);

      b.mu12[i - 1][m - j] = DOp::from_coeff(E(s.conj(j), i), 0);
      DOp e21;
      if (i == 1 && j == m) e21.add(1, scaled_d(eng) * Rat(-2));
      b.mu21[i - 1][j - 1] = std::move(e21);
    }
  return b;
}

namespace {

DOpMatrix corner_block(const DOpMatrix& mat, int k, bool upper_left) {
  int m = static_cast<int>(mat.size());
  DOpMatrix sub(k, std::vector<DOp>(k));
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c)
      sub[r][c] = upper_left ? mat[r][c] : mat[m - k + r][m - k + c];
  return sub;
}

}  // namespace

AkBk ak_bk(const Engine& eng, const EvenBlocks& blocks, int work_floor) {
  (void)eng;
  int m = static_cast<int>(blocks.mu11.size());
  AkBk r;
  r.a.resize(m + 1);
  r.b.resize(m + 1);
  r.a[0] = DOp::one();
  r.b[0] = DOp::one();
  for (int k = 1; k <= m; ++k) {
    r.a[k] = rdet(corner_block(blocks.mu11, k, true), work_floor);
    r.b[k] = rdet(corner_block(blocks.mu22, k, false), work_floor);
  }
  return r;
}

int t_sum(const AlgebraSpec& s, int i, int k) {
  if (i <= k) return 0;
  int t = 0;
  for (int j = k + 1; j <= i; ++j) t += s.delta(j);
  return t;
}

AkBk ak_bk_recursion(const Engine& eng, int work_floor) {
  const AlgebraSpec& s = eng.alg();
  int m = s.N / 2;
  auto E = [&](int i, int j) {
    auto ce = s.canon_E(i, j);
    if (ce.id < 0) return DiffPoly::zero();
    return DiffPoly::gen(eng.sym(ce.id, 0), ce.c);
  };
  AkBk r;
  r.a.resize(m + 1);
  r.b.resize(m + 1);
  r.a[0] = DOp::one();
  r.b[0] = DOp::one();
  DOp dop_d;
  dop_d.add(1, scaled_d(eng));
  for (int k = 1; k <= m; ++k) {
    // A_k = A_{k-1} (D + E_kk) + sum_i A_{i-1} X_{ki},
    // the last column carrying the difference entries
    DOp ak = compose(r.a[k - 1], dop_d + DOp::from_coeff(k < m ? E(k, k) : E(m, k) - E(m + 1, k)), work_floor);
    for (int i = 1; i <= k - 1; ++i) {
      DiffPoly x = (k < m) ? E(k, i) : E(m, i) - E(m + 1, i);
      ak += compose(r.a[i - 1], DOp::from_coeff(x), work_floor);
    }
    r.a[k] = std::move(ak);
    // B_k = (D + E_{k'k'} [- E_{k', (m+1)'} at k = m]) B_{k-1}
    //       + sum_i (-1)^{i+k+T_k(i)} (E_{i'k'} [- E_{i'(m+1)'}]) B_{i-1}
    DiffPoly head = (k < m) ? E(s.conj(k), s.conj(k))
                            : E(s.conj(m), s.conj(m)) - E(s.conj(m), s.conj(m + 1));
    DOp bk = compose(dop_d + DOp::from_coeff(head), r.b[k - 1], work_floor);
    for (int i = 1; i <= k - 1; ++i) {
      DiffPoly x = (k < m) ? E(s.conj(i), s.conj(k))
                           : E(s.conj(i), s.conj(m)) - E(s.conj(i), s.conj(m + 1));
      int sgn = neg1pow(i + k + t_sum(s, k, i));
      bk += compose(DOp::from_coeff(x * Rat(sgn)), r.b[i - 1], work_floor);
    }
    r.b[k] = std::move(bk);
  }
  return r;
}

EvenRdet rdet_osp_even(const Engine& eng, const EvenBlocks& blocks, int work_floor) {
  const AlgebraSpec& s = eng.alg();
  int m = s.N / 2;
  AkBk ab = ak_bk(eng, blocks, work_floor);
  DOp dinv = DOp::d_power(-1);
  DOp full = compose(compose(ab.a[m], dinv, work_floor), ab.b[m], work_floor);
  auto E = [&](int i, int j) {
    auto ce = s.canon_E(i, j);
    if (ce.id < 0) return DiffPoly::zero();
    return DiffPoly::gen(eng.sym(ce.id, 0), ce.c);
  };
  for (int j = 1; j <= m; ++j) {
    for (int k = 1; k <= m; ++k) {
      int sgn = (s.family == Family::OspEven0) ? neg1pow(k + t_sum(s, m, k))
                                               : neg1pow(s.n + 1 + (k + 1) / 2);
      DiffPoly mid = E(s.conj(k), j);
      if (mid.is_zero()) continue;
      DOp term = compose(compose(ab.a[j - 1], DOp::from_coeff(mid), work_floor), ab.b[k - 1],
                         work_floor);
      full += term.scale(Rat(2 * sgn));
    }
  }
  // negative tail must agree with (+-1)^... a D^{-1} a
  DiffPoly wit = ab.a[m].coeff(0);
  int tail_sign = (s.family == Family::OspEven0) ? neg1pow(s.n) : neg1pow(s.n + 1);
  DOp tail = compose(compose(DOp::from_coeff(wit), dinv, work_floor), DOp::from_coeff(wit),
                     work_floor)
                 .scale(tail_sign);
  for (int d = work_floor; d <= -1; ++d) {
    if (!(full.coeff(d) == tail.coeff(d)))
      throw std::logic_error("negative tail of the block row determinant does not match");
  }
  return {std::move(full), std::move(wit)};
}

GeneratorSet generators(const Engine& eng, std::optional<int> floor_override) {
  const AlgebraSpec& s = eng.alg();
  int wf = floor_override.value_or(default_floor(s));
  if (wf > 0) throw std::invalid_argument("floor must be <= 0");
  GeneratorSet gs;
  gs.family = s.family;
  gs.n = s.n;
  gs.level = eng.level();
  gs.floor = wf;

  auto push = [&](int t, DiffPoly w, bool tilde) {
    GenEntry e;
    e.label = (tilde ? "wt" : "w") + std::to_string(t);
    e.t = t;
    e.tilde = tilde;
    e.w = std::move(w);
    gs.gens.push_back(std::move(e));
  };

  auto level_pow = [&](int e) {
    Rat p = 1;
    for (int i = 0; i < e; ++i) p *= eng.level();
    return p;
  };

  if (!is_osp_even(s.family)) {
    DOp r = rdet(build_matrix(eng), wf);
    int topdeg = s.N;
    if (!(r.coeff(topdeg) == DiffPoly::constant(level_pow(topdeg))))
      throw std::logic_error("row determinant has a wrong leading coefficient");
    if (is_sl(s.family)) {
      DiffPoly w1 = pi_sl(eng, r.coeff(topdeg - 1));
      if (!w1.is_zero()) throw std::logic_error("trace projection of w1 must vanish");
      for (int t = 2; t <= topdeg; ++t) push(t, pi_sl(eng, r.coeff(topdeg - t)), false);
      for (size_t i = 0; i < gs.gens.size(); ++i) gs.minimal.push_back(static_cast<int>(i));
    } else {
      for (int t = 1; t <= topdeg; ++t) push(t, r.coeff(topdeg - t), false);
      if (is_osp(s.family)) {
        for (size_t i = 0; i < gs.gens.size(); ++i) {
          int t = gs.gens[i].t;
          if (t % 4 == 0 || t % 4 == 3) gs.minimal.push_back(static_cast<int>(i));
        }
      } else {
        for (size_t i = 0; i < gs.gens.size(); ++i) gs.minimal.push_back(static_cast<int>(i));
      }
    }
    return gs;
  }

  EvenBlocks blocks = build_even_blocks(eng);
  EvenRdet er = rdet_osp_even(eng, blocks, wf);
  int m = s.N / 2;
  int topdeg = 2 * m - 1;
  if (!(er.full.coeff(topdeg) == DiffPoly::constant(level_pow(topdeg + 1))))
    throw std::logic_error("row determinant has a wrong leading coefficient");
  for (int t = 1; t <= topdeg; ++t) push(t, er.full.coeff(topdeg - t), false);
  push(m, er.tail_witness, true);
  for (size_t i = 0; i < gs.gens.size(); ++i) {
    int t = gs.gens[i].t;
    if (!gs.gens[i].tilde && (t % 4 == 0 || t % 4 == 3)) gs.minimal.push_back(static_cast<int>(i));
    if (gs.gens[i].tilde) gs.minimal.push_back(static_cast<int>(i));
  }
  return gs;
}

DiffPoly pi_sl(const Engine& eng, const DiffPoly& p) {
  const AlgebraSpec& s = eng.alg();
  if (is_osp(s.family)) throw std::domain_error("trace projection applies to gl presentations");
  Rat strI = supertrace(s, s.identity_elem());
  DiffPoly out;
  for (auto& [mono, c] : p.terms) {
    DiffPoly term = DiffPoly::constant(c);
    for (Sym x : mono.s) {
      const BasisElem& b = s.basis()[sym_gen(x)];
      DiffPoly img = DiffPoly::gen(x);
      Rat tr = supertrace(s, b.mat);
      if (tr != 0) {
        Rat coeff = tr / strI;
        for (int i = 1; i <= s.N; ++i)
          img -= DiffPoly::gen(eng.sym(i, i, static_cast<int>(sym_m(x))), coeff);
      }
      term = term * img;
    }
    out += term;
  }
  return out;
}

DiffPoly linear_part(const DiffPoly& w) {
  DiffPoly r;
  for (auto& [m, c] : w.terms)
    if (m.degree() == 1 && sym_m(m.s[0]) == 0) r.add_term(m, c);
  return r;
}

Report verify_membership(const Engine& eng, const GeneratorSet& gs) {
  Report rep;
  const AlgebraSpec& s = eng.alg();
  int failures = 0;
  std::string first;
  int checked = 0;
  for (int id = 0; id < s.dim(); ++id) {
    if (!s.basis()[id].in_n) continue;
    DiffPoly nbar = eng.gen_poly(id);
    for (auto& g : gs.gens) {
      ChiPoly res = eng.project(eng.bracket(nbar, g.w));
      ++checked;
      if (!res.is_zero()) {
        ++failures;
        if (first.empty()) first = s.basis()[id].name + " against " + g.label;
      }
    }
  }
  rep.add("membership: ideal projection of brackets with the nilpotent radical",
          failures == 0,
          failures == 0 ? std::to_string(checked) + " pairs"
                        : "first failing pair " + first);
  return rep;
}

Report verify_weights(const Engine& eng, const GeneratorSet& gs) {
  Report rep;
  bool ok = true;
  std::string detail;
  for (auto& g : gs.gens) {
    try {
      int got = g.w.is_zero() ? g.t : delta2(g.w, eng.gen_dd());
      if (got != g.t) {
        ok = false;
        detail = g.label + " has doubled weight " + std::to_string(got);
        break;
      }
    } catch (const std::invalid_argument&) {
      ok = false;
      detail = g.label + " is not weight homogeneous";
      break;
    }
  }
  rep.add("weights: each generator is homogeneous of weight t/2", ok, detail);
  return rep;
}

namespace {

// coordinates of elements in the unit-matrix position space; exact rank
int rank_of(const std::vector<SuperElement>& vs) {
  std::map<std::pair<int, int>, int> cols;
  for (auto& v : vs)
    for (auto& [k, c] : v.entries)
      if (!cols.count(k)) cols[k] = static_cast<int>(cols.size());
  std::vector<std::vector<Rat>> rows;
  for (auto& v : vs) {
    std::vector<Rat> row(cols.size(), Rat(0));
    for (auto& [k, c] : v.entries) row[cols[k]] = c;
    rows.push_back(std::move(row));
  }
  int rank = 0;
  size_t ncols = cols.size();
  for (size_t c = 0; c < ncols && rank < static_cast<int>(rows.size()); ++c) {
    int sel = -1;
    for (size_t r = rank; r < rows.size(); ++r)
      if (rows[r][c] != 0) {
        sel = static_cast<int>(r);
        break;
      }
    if (sel < 0) continue;
    std::swap(rows[rank], rows[sel]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == rank || rows[r][c] == 0) continue;
      Rat f = rows[r][c] / rows[rank][c];
      for (size_t j = c; j < ncols; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

bool in_span(const std::vector<SuperElement>& basis, const SuperElement& v) {
  if (v.is_zero()) return true;
  std::vector<SuperElement> all = basis;
  all.push_back(v);
  return rank_of(all) == rank_of(basis);
}

// v = c * w for nonzero scalar c; returns c or nullopt
std::optional<Rat> proportional(const SuperElement& v, const SuperElement& w) {
  if (v.is_zero() || w.is_zero()) return std::nullopt;
  if (v.entries.size() != w.entries.size()) return std::nullopt;
  Rat c = 0;
  auto iv = v.entries.begin();
  auto iw = w.entries.begin();
  for (; iv != v.entries.end(); ++iv, ++iw) {
    if (iv->first != iw->first) return std::nullopt;
    Rat q = iv->second / iw->second;
    if (c == 0) c = q;
    else if (c != q) return std::nullopt;
  }
  return c;
}

}  // namespace

Report verify_free_generation(const Engine& eng, const GeneratorSet& gs) {
  Report rep;
  const AlgebraSpec& s = eng.alg();
  auto kerf = kerf_basis(s);

  // [f, v] = 0 for the whole returned basis
  SuperElement f = s.principal_f();
  bool kerf_ok = true;
  for (auto& v : kerf)
    if (!lie_bracket(s, f, v).is_zero()) kerf_ok = false;
  rep.add("kernel basis: every element annihilated by ad f", kerf_ok);

  int dim_gf = static_cast<int>(kerf.size());
  rep.add("kernel basis size equals the degree-zero dimension",
          dim_gf == (is_sl(s.family) ? graded_dims_sl(s)[0] : graded_dims(s)[0]),
          "size " + std::to_string(dim_gf));
  rep.add("minimal generating set size equals dim ker(ad f)",
          static_cast<int>(gs.minimal.size()) == dim_gf,
          std::to_string(gs.minimal.size()) + " generators");

  // linear parts
  std::vector<SuperElement> lins;
  bool lin_ok = true;
  std::string lin_detail;
  for (int idx : gs.minimal) {
    const GenEntry& g = gs.gens[idx];
    SuperElement lin = eng.to_super_linear(linear_part(g.w));
    if (lin.is_zero()) {
      lin_ok = false;
      lin_detail = g.label + " has no linear part";
    }
    lins.push_back(std::move(lin));
  }
  rep.add("linear parts of the minimal set are nonzero", lin_ok, lin_detail);
  rep.add("linear parts of the minimal set are independent and span ker(ad f)",
          rank_of(lins) == dim_gf);

  bool span_ok = true;
  for (auto& l : lins)
    if (!in_span(kerf, l)) span_ok = false;
  rep.add("linear parts lie in ker(ad f)", span_ok);

  bool unit_level = eng.level() == 1;
  if (is_osp(s.family) && !is_osp_even(s.family) && unit_level) {
    // exact match against the explicit folded combinations, including the
    // vanishing pattern for t = 1, 2 mod 4
    bool ok = true;
    std::string detail;
    for (auto& g : gs.gens) {
      SuperElement expect = osp_odd_v(s, g.t) * Rat(neg1pow(g.t));
      SuperElement lin = eng.to_super_linear(linear_part(g.w));
      if (!(lin == expect)) {
        ok = false;
        detail = g.label;
        break;
      }
    }
    rep.add("linear part of w_t equals (-1)^t v_t for all t", ok, detail);
  } else if (s.family == Family::OspEven0 && unit_level) {
    int m = s.N / 2;
    bool ok = true;
    std::string detail;
    for (auto& g : gs.gens) {
      SuperElement lin = eng.to_super_linear(linear_part(g.w));
      if (g.tilde) {
        if (!(lin == osp_even_v_tilde(s))) {
          ok = false;
          detail = g.label;
        }
      } else if (g.t >= m + 1) {
        if (g.t % 4 == 1 || g.t % 4 == 2) {
          if (!lin.is_zero()) {
            ok = false;
            detail = g.label;
          }
        } else {
          auto c = proportional(lin, osp_even_v_high(s, g.t));
          if (!c) {
            ok = false;
            detail = g.label;
          } else {
            if (!detail.empty()) detail += ", ";
            detail += g.label + ": " + rat_str(*c);
          }
        }
      }
    }
    rep.add("high-weight linear parts are multiples of the explicit kernel formulas", ok, detail);
  } else if (!is_osp(s.family)) {
    // each graded kernel component is one dimensional; record the scalars
    bool ok = true;
    std::string scalars;
    for (auto& g : gs.gens) {
      SuperElement lin = eng.to_super_linear(linear_part(g.w));
      auto comp = kerf_component(s, 1 - g.t, is_sl(s.family));
      if (comp.size() != 1) {
        ok = false;
        break;
      }
      auto c = proportional(lin, comp.front());
      if (!c) {
        ok = false;
        break;
      }
      if (!scalars.empty()) scalars += ", ";
      scalars += g.label + ": " + rat_str(*c);
    }
    rep.add("linear part of each w_t spans its graded kernel component", ok, scalars);
  }

  if (s.family == Family::OspEvenP2 && unit_level) {
    bool ok = true;
    for (auto& g : gs.gens) {
      if (!g.tilde) continue;
      SuperElement lin = eng.to_super_linear(linear_part(g.w));
      if (!(lin == osp_even_v_tilde(s))) ok = false;
    }
    rep.add("tilde generator linear part equals the tilde kernel element", ok);
  }

  if (is_osp(s.family)) {
    bool ok = true;
    std::string detail;
    for (auto& g : gs.gens) {
      if (g.tilde || (g.t % 4 != 1 && g.t % 4 != 2)) continue;
      if (!linear_part(g.w).is_zero()) {
        ok = false;
        detail = g.label;
      }
    }
    rep.add("redundant generators have no derivative-free linear part", ok, detail);
  }
  return rep;
}

Report verify_all(const Engine& eng, const GeneratorSet& gs) {
  Report rep;
  const AlgebraSpec& s = eng.alg();
  int expect = 0;
  switch (s.family) {
    case Family::GlNp1:
    case Family::GlNm1:
    case Family::OspOddP:
    case Family::OspOddM: expect = s.N; break;
    case Family::SlNp1:
    case Family::SlNm1: expect = s.N - 1; break;
    case Family::OspEven0:
    case Family::OspEvenP2: expect = s.N; break;  // 2m-1 coefficients + tilde
  }
  rep.add("generator count", static_cast<int>(gs.gens.size()) == expect,
          std::to_string(gs.gens.size()) + " generators");
  rep.merge(verify_weights(eng, gs));
  rep.merge(verify_membership(eng, gs));
  rep.merge(verify_free_generation(eng, gs));
  return rep;
}

}  // namespace susyw
