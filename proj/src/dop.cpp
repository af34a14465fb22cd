#include <susyw/dop.hpp>

#include <algorithm>

namespace susyw {

namespace {

std::optional<int> combine_floor(const std::optional<int>& a, const std::optional<int>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::max(*a, *b);
}

}  // namespace

DOp& DOp::operator+=(const DOp& o) {
  set_floor(combine_floor(floor, o.floor));
  for (auto& [i, p] : o.c) add(i, p);
  return *this;
}

DOp DOp::operator-() const {
  DOp r;
  r.floor = floor;
  for (auto& [i, p] : c) r.c[i] = -p;
  return r;
}

DOp DOp::scale(const Rat& a) const {
  DOp r;
  r.floor = floor;
  if (a == 0) return r;
  for (auto& [i, p] : c) r.c[i] = p * a;
  return r;
}

DOp DOp::lmul(const DiffPoly& p) const {
  DOp r;
  r.floor = floor;
  for (auto& [i, q] : c) r.add(i, p * q);
  return r;
}

namespace {

// one application of D^{-1} to p D^deg, keeping degrees >= cutoff:
// D^{-1}(a D^n) = sum_{m>=0} (-1)^m ((-1)^{p(a)} a^(2m) D^{-1-2m} + a^(2m+1) D^{-2-2m}) D^n
void d_inverse_step(const DiffPoly& p, int deg, int cutoff, std::vector<std::pair<int, DiffPoly>>& out) {
  DiffPoly cur = p;
  int m = 0;
  while (!cur.is_zero()) {
    int d1 = deg - 1 - 2 * m;
    int d2 = deg - 2 - 2 * m;
    if (d1 < cutoff && d2 < cutoff) break;
    int sgn = neg1pow(m);
    if (d1 >= cutoff) out.push_back({d1, cur.parity_signed() * Rat(sgn)});
    DiffPoly der = cur.D();
    if (d2 >= cutoff && !der.is_zero()) out.push_back({d2, der * Rat(sgn)});
    cur = der.D();
    ++m;
  }
}

// D^i o (p D^deg) as a list of (degree, coefficient), truncated at final_floor.
// truncated is set when an infinite expansion was cut.
void dpow_compose(int i, const DiffPoly& p, int deg, int final_floor,
                  std::vector<std::pair<int, DiffPoly>>& out, bool& truncated) {
  if (p.is_zero()) return;
  if (i == 0) {
    out.push_back({deg, p});
    return;
  }
  if (i > 0) {
    // D o (p D^deg) = (Dp) D^deg + (-1)^{p(p)} p D^{deg+1}
    dpow_compose(i - 1, p.D(), deg, final_floor, out, truncated);
    dpow_compose(i - 1, p.parity_signed(), deg + 1, final_floor, out, truncated);
    return;
  }
  // i < 0: peel one D^{-1}; the remaining D^{i+1} lifts degrees by at most i+1
  int cutoff = final_floor - (i + 1);
  if (!p.is_constant()) truncated = true;
  std::vector<std::pair<int, DiffPoly>> step;
  d_inverse_step(p, deg, cutoff, step);
  for (auto& [d, q] : step) dpow_compose(i + 1, q, d, final_floor, out, truncated);
}

}  // namespace

DOp compose(const DOp& a, const DOp& b, int work_floor) {
  DOp r;
  bool truncated = false;
  for (auto& [i, pa] : a.c) {
    for (auto& [j, pb] : b.c) {
      std::vector<std::pair<int, DiffPoly>> terms;
      dpow_compose(i, pb, j, work_floor, terms, truncated);
      for (auto& [d, q] : terms) r.add(d, pa * q);
    }
  }
  std::optional<int> fl;
  if (truncated) fl = work_floor;
  if (a.floor) fl = combine_floor(fl, *a.floor + b.max_deg());
  if (b.floor) fl = combine_floor(fl, *b.floor + a.max_deg());
  r.set_floor(fl);
  return r;
}

DOp adjoint_star(const DOp& a) {
  if (!a.exact() || (!a.is_zero() && a.min_deg() < 0))
    throw std::domain_error("adjoint is defined for pure differential operators");
  DOp r;
  bool dummy = false;
  for (auto& [m, p] : a.c) {
    int half = (m + 1) / 2;
    for (auto& [mono, cc] : p.terms) {
      int sgn = neg1pow(m * mono.parity() + half);
      std::vector<std::pair<int, DiffPoly>> terms;
      dpow_compose(m, DiffPoly::mono(mono, cc * sgn), 0, 0, terms, dummy);
      for (auto& [d, q] : terms) r.add(d, q);
    }
  }
  return r;
}

int ChiDOp::max_deg() const {
  int d = 0;
  bool first = true;
  for (auto& [k, p] : c) {
    if (first || k.second > d) d = k.second;
    first = false;
  }
  return d;
}

void ChiDOp::set_floor(std::optional<int> f) {
  floor = f;
  if (floor) {
    for (auto it = c.begin(); it != c.end();) {
      if (it->first.second < *floor) it = c.erase(it);
      else ++it;
    }
  }
}

ChiDOp& ChiDOp::operator+=(const ChiDOp& o) {
  set_floor(combine_floor(floor, o.floor));
  for (auto& [k, p] : o.c) add(k.first, k.second, p);
  return *this;
}

ChiDOp ChiDOp::operator-() const {
  ChiDOp r;
  r.floor = floor;
  for (auto& [k, p] : c) r.c[k] = -p;
  return r;
}

ChiDOp ChiDOp::scale(const Rat& a) const {
  ChiDOp r;
  r.floor = floor;
  if (a == 0) return r;
  for (auto& [k, p] : c) r.c[k] = p * a;
  return r;
}

ChiDOp ChiDOp::lmul(const DiffPoly& p) const {
  ChiDOp r;
  r.floor = floor;
  for (auto& [k, q] : c) {
    const DiffPoly& f = (k.first % 2 == 0) ? p : p.parity_signed();
    r.add(k.first, k.second, f * q);
  }
  return r;
}

namespace {

// D^i chi = (-1)^i chi D^i - 2 [i odd] chi^2 D^{i-1}; move D^i past chi^l.
// returns terms (extra chi, new D power, integer factor)
void move_d_past_chi(int i, int l, int coef, std::vector<std::tuple<int, int, int>>& out) {
  if (l == 0) {
    out.push_back({0, i, coef});
    return;
  }
  std::vector<std::tuple<int, int, int>> rest;
  move_d_past_chi(i, l - 1, coef * neg1pow(i), rest);
  for (auto& [lc, ic, cc] : rest) out.push_back({lc + 1, ic, cc});
  if (i % 2 != 0) {
    rest.clear();
    move_d_past_chi(i - 1, l - 1, coef * -2, rest);
    for (auto& [lc, ic, cc] : rest) out.push_back({lc + 2, ic, cc});
  }
}

}  // namespace

ChiDOp compose(const ChiDOp& a, const ChiDOp& b, int work_floor) {
  ChiDOp r;
  bool truncated = false;
  for (auto& [ka, pa] : a.c) {
    auto [chia, dega] = ka;
    for (auto& [kb, pb] : b.c) {
      auto [chib, degb] = kb;
      std::vector<std::tuple<int, int, int>> moved;
      move_d_past_chi(dega, chib, 1, moved);
      for (auto& [chix, degx, factor] : moved) {
        std::vector<std::pair<int, DiffPoly>> terms;
        dpow_compose(degx, pb, degb, work_floor, terms, truncated);
        // pa crosses chi^{chix}
        const DiffPoly& paq = (chix % 2 == 0) ? pa : pa.parity_signed();
        for (auto& [d, q] : terms) r.add(chia + chix, d, paq * q * Rat(factor));
      }
    }
  }
  std::optional<int> fl;
  if (truncated) fl = work_floor;
  if (a.floor) fl = combine_floor(fl, *a.floor + b.max_deg());
  if (b.floor) fl = combine_floor(fl, *b.floor + a.max_deg());
  r.set_floor(fl);
  return r;
}

ChiDOp chi_d_inverse(int work_floor) {
  ChiDOp r;
  for (int k = 0; -k - 1 >= work_floor; ++k) r.c[{k, -k - 1}] = DiffPoly::constant(1);
  r.floor = work_floor;
  return r;
}

ChiDOp substitute_chi(const DOp& a, int work_floor) {
  ChiDOp dpluschi;
  dpluschi.c[{0, 1}] = DiffPoly::constant(1);
  dpluschi.c[{1, 0}] = DiffPoly::constant(1);

  int maxpos = 0, minneg = 0;
  for (auto& [i, p] : a.c) {
    maxpos = std::max(maxpos, i);
    minneg = std::min(minneg, i);
  }
  std::map<int, ChiDOp> powers;
  powers[0] = ChiDOp::one();
  for (int i = 1; i <= maxpos; ++i) powers[i] = compose(dpluschi, powers[i - 1], work_floor);
  if (minneg < 0) {
    ChiDOp inv = chi_d_inverse(work_floor);
    for (int i = -1; i >= minneg; --i) powers[i] = compose(inv, powers[i + 1], work_floor);
  }
  ChiDOp r;
  for (auto& [i, p] : a.c) r += powers[i].lmul(p);
  if (a.floor) r.set_floor(combine_floor(r.floor, a.floor));
  return r;
}

DOp rdet(const DOpMatrix& m, int work_floor) {
  int n = static_cast<int>(m.size());
  // constant subdiagonal factors
  std::vector<Rat> sub(static_cast<size_t>(std::max(0, n - 1)), Rat(0));
  for (int j = 0; j + 1 < n; ++j) {
    const DOp& e = m[j + 1][j];
    if (!e.is_zero()) {
      if (e.c.size() != 1 || e.c.begin()->first != 0 || !e.c.begin()->second.is_constant())
        throw std::invalid_argument("subdiagonal entries must be constants");
      sub[j] = e.c.begin()->second.constant_value();
    }
  }
  // tails[r] = signed path sum over rows r..n
  std::vector<DOp> tails(n + 2);
  tails[n] = DOp::one();  // recursion seed; paths end at column n
  std::vector<DOp> result(n + 1);
  // R(r) = sum_{c >= r} (prod_{j=r..c-1} -sub[j]) M[r][c] R(c+1)
  std::vector<DOp> R(n + 2);
  R[n + 1] = DOp::one();
  for (int r = n; r >= 1; --r) {
    DOp acc;
    Rat skip = 1;
    for (int c = r; c <= n; ++c) {
      if (c > r) skip *= -sub[c - 2];  // skipped column c-1
      const DOp& e = m[r - 1][c - 1];
      if (!e.is_zero() && skip != 0) acc += compose(e, R[c + 1], work_floor).scale(skip);
    }
    R[r] = std::move(acc);
  }
  return R[1];
}

}  // namespace susyw
