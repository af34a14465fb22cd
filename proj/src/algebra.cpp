#include <susyw/algebra.hpp>

#include <algorithm>
#include <stdexcept>

namespace susyw {

bool is_osp(Family f) {
  switch (f) {
    case Family::OspOddP:
    case Family::OspOddM:
    case Family::OspEven0:
    case Family::OspEvenP2:
      return true;
    default:
      return false;
  }
}

bool is_osp_even(Family f) { return f == Family::OspEven0 || f == Family::OspEvenP2; }

bool is_sl(Family f) { return f == Family::SlNp1 || f == Family::SlNm1; }

std::string family_name(Family f) {
  switch (f) {
    case Family::GlNp1: return "gl(n+1|n)";
    case Family::GlNm1: return "gl(n-1|n)";
    case Family::SlNp1: return "sl(n+1|n)";
    case Family::SlNm1: return "sl(n-1|n)";
    case Family::OspOddP: return "osp(2n+1|2n)";
    case Family::OspOddM: return "osp(2n-1|2n)";
    case Family::OspEven0: return "osp(2n|2n)";
    case Family::OspEvenP2: return "osp(2n+2|2n)";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
  for (Family f : {Family::GlNp1, Family::GlNm1, Family::SlNp1, Family::SlNm1, Family::OspOddP,
                   Family::OspOddM, Family::OspEven0, Family::OspEvenP2}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

SuperElement SuperElement::unit(int i, int j, const Rat& c) {
  SuperElement e;
  if (c != 0) e.entries[{i, j}] = c;
  return e;
}

void SuperElement::add(int i, int j, const Rat& c) {
  if (c == 0) return;
  auto key = std::make_pair(i, j);
  auto it = entries.find(key);
  if (it == entries.end()) {
    entries[key] = c;
  } else {
    it->second += c;
    if (it->second == 0) entries.erase(it);
  }
}

SuperElement& SuperElement::operator+=(const SuperElement& o) {
  for (auto& [k, c] : o.entries) add(k.first, k.second, c);
  return *this;
}

SuperElement& SuperElement::operator-=(const SuperElement& o) {
  for (auto& [k, c] : o.entries) add(k.first, k.second, -c);
  return *this;
}

SuperElement SuperElement::operator+(const SuperElement& o) const {
  SuperElement r = *this;
  r += o;
  return r;
}

SuperElement SuperElement::operator-(const SuperElement& o) const {
  SuperElement r = *this;
  r -= o;
  return r;
}

SuperElement SuperElement::operator*(const Rat& c) const {
  SuperElement r;
  if (c == 0) return r;
  for (auto& [k, v] : entries) r.entries[k] = v * c;
  return r;
}

AlgebraSpec::AlgebraSpec(Family fam, int rank) : family(fam), n(rank) {
  if (n < 1) throw std::invalid_argument("rank n must be >= 1");
  if ((family == Family::GlNm1 || family == Family::SlNm1) && n < 2)
    throw std::invalid_argument("gl/sl(n-1|n) requires n >= 2");
  switch (family) {
    case Family::GlNp1:
    case Family::SlNp1: N = 2 * n + 1; break;
    case Family::GlNm1:
    case Family::SlNm1: N = 2 * n - 1; break;
    case Family::OspOddP: N = 4 * n + 1; break;
    case Family::OspOddM: N = 4 * n - 1; break;
    case Family::OspEven0: N = 4 * n; break;
    case Family::OspEvenP2: N = 4 * n + 2; break;
  }
  build_basis();
}

int AlgebraSpec::parity(int i) const {
  if (i < 1 || i > N) throw std::out_of_range("index out of range");
  switch (family) {
    case Family::GlNp1:
    case Family::SlNp1:
    case Family::OspOddP:
      return (i % 2 == 0) ? 1 : 0;
    case Family::GlNm1:
    case Family::SlNm1:
    case Family::OspOddM:
      return (i % 2 == 1) ? 1 : 0;
    case Family::OspEven0:
      if (i <= 2 * n) return (i % 2 == 0) ? 0 : 1;
      return (i % 2 == 1) ? 0 : 1;
    case Family::OspEvenP2:
      if (i <= 2 * n + 1) return (i % 2 == 1) ? 0 : 1;
      return (i % 2 == 0) ? 0 : 1;
  }
  return 0;
}

int AlgebraSpec::delta(int k) const {
  if (!is_osp(family)) throw std::domain_error("delta map is defined for osp presentations only");
  if (k < 1 || k > N) throw std::out_of_range("index out of range");
  switch (family) {
    case Family::OspOddP: return (k >= 2 * n + 2 && k % 2 == 0) ? 1 : 0;
    case Family::OspOddM: return (k >= 2 * n + 1 && k % 2 == 1) ? 1 : 0;
    case Family::OspEven0: return (k <= 2 * n - 1 && k % 2 == 1) ? 1 : 0;
    case Family::OspEvenP2: return (k >= 2 && k <= 2 * n && k % 2 == 0) ? 1 : 0;
    default: return 0;
  }
}

int AlgebraSpec::pos(int i) const {
  switch (family) {
    case Family::OspEven0: return (i <= 2 * n) ? i : i - 1;
    case Family::OspEvenP2: return (i <= 2 * n + 1) ? i + 1 : i;
    default: return i;
  }
}

int AlgebraSpec::tau(int i, int j) const {
  int e = parity(i) * parity(j) + parity(j) + 1 + delta(i) + delta(j);
  return neg1pow(e);
}

SuperElement AlgebraSpec::theta_unit(int i, int j) const {
  return SuperElement::unit(conj(j), conj(i), tau(i, j));
}

SuperElement AlgebraSpec::fold_F(int i, int j) const {
  if (!is_osp(family)) throw std::domain_error("fold basis requires an osp presentation");
  SuperElement r = SuperElement::unit(i, j);
  r += theta_unit(i, j);
  return r;
}

SuperElement AlgebraSpec::fold_E(int i, int j) const {
  return fold_F(i, j) * Rat(neg1pow(parity(i)), 2);
}

SuperElement AlgebraSpec::form_J() const {
  SuperElement r;
  for (int k = 1; k <= N; ++k) r.add(k, conj(k), neg1pow(delta(k)));
  return r;
}

SuperElement AlgebraSpec::principal_f() const {
  SuperElement f;
  if (!is_osp(family)) {
    for (int i = 1; i < N; ++i) f += SuperElement::unit(i + 1, i);
  } else if (!is_osp_even(family)) {
    for (int i = 1; i <= (N - 1) / 2; ++i) f += fold_F(i + 1, i);
  } else {
    int m = N / 2;
    f += fold_F(m + 1, m - 1);
    for (int i = 1; i <= m - 1; ++i) f += fold_F(i + 1, i);
  }
  return f;
}

SuperElement AlgebraSpec::identity_elem() const {
  SuperElement r;
  for (int i = 1; i <= N; ++i) r.add(i, i, 1);
  return r;
}

void AlgebraSpec::build_basis() {
  auto label = [&](const char* head, int i, int j) {
    return std::string(head) + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
  };
  SuperElement f = principal_f();
  if (!is_osp(family)) {
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j) {
        BasisElem b;
        b.i = i;
        b.j = j;
        b.mat = SuperElement::unit(i, j);
        b.parity = (parity(i) + parity(j)) % 2;
        b.dd = dd_unit(i, j);
        b.name = label("e", i, j);
        basis_index_[{i, j}] = static_cast<int>(basis_.size());
        basis_.push_back(std::move(b));
      }
  } else {
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j) {
        if (i + j > N + 1) continue;
        if (j == conj(i) && parity(i) == 0) continue;
        BasisElem b;
        b.i = i;
        b.j = j;
        b.mat = fold_E(i, j);
        b.parity = (parity(i) + parity(j)) % 2;
        b.dd = dd_unit(i, j);
        b.name = label("E", i, j);
        basis_index_[{i, j}] = static_cast<int>(basis_.size());
        basis_.push_back(std::move(b));
      }
  }
  for (auto& b : basis_) {
    b.in_n = b.dd > 0;
    if (b.in_n) ++dim_n_;
    b.f_pair = bilinear_form(*this, f, b.mat);
  }
}

int AlgebraSpec::basis_id(int i, int j) const {
  auto it = basis_index_.find({i, j});
  if (it == basis_index_.end()) throw std::out_of_range("not a basis label");
  return it->second;
}

AlgebraSpec::CanonE AlgebraSpec::canon_E(int i, int j) const {
  if (!is_osp(family)) throw std::domain_error("canon_E requires an osp presentation");
  if (j == conj(i) && parity(i) == 0) return {-1, Rat(0)};
  auto it = basis_index_.find({i, j});
  if (it != basis_index_.end()) return {it->second, Rat(1)};
  // E_{ij} = (-1)^{p(i)+p(j)} tau(i,j) E_{j'i'}
  int jp = conj(j), ip = conj(i);
  auto mit = basis_index_.find({jp, ip});
  if (mit == basis_index_.end()) throw std::out_of_range("fold label not reducible");
  Rat c = neg1pow(parity(i) + parity(j)) * tau(i, j);
  return {mit->second, c};
}

Rat supertrace(const AlgebraSpec& s, const SuperElement& a) {
  Rat r = 0;
  for (auto& [k, c] : a.entries)
    if (k.first == k.second) r += c * neg1pow(s.parity(k.first));
  return r;
}

SuperElement supertranspose(const AlgebraSpec& s, const SuperElement& a) {
  SuperElement r;
  for (auto& [k, c] : a.entries)
    r.add(k.second, k.first, c * neg1pow((s.parity(k.first) + 1) * s.parity(k.second)));
  return r;
}

SuperElement mat_mul(const SuperElement& a, const SuperElement& b) {
  SuperElement r;
  for (auto& [ka, ca] : a.entries)
    for (auto& [kb, cb] : b.entries)
      if (ka.second == kb.first) r.add(ka.first, kb.second, ca * cb);
  return r;
}

SuperElement lie_bracket(const AlgebraSpec& s, const SuperElement& a, const SuperElement& b) {
  SuperElement r;
  for (auto& [ka, ca] : a.entries) {
    int pa = (s.parity(ka.first) + s.parity(ka.second)) % 2;
    for (auto& [kb, cb] : b.entries) {
      int pb = (s.parity(kb.first) + s.parity(kb.second)) % 2;
      Rat c = ca * cb;
      if (ka.second == kb.first) r.add(ka.first, kb.second, c);
      if (ka.first == kb.second) r.add(kb.first, ka.second, -c * neg1pow(pa * pb));
    }
  }
  return r;
}

Rat bilinear_form(const AlgebraSpec& s, const SuperElement& a, const SuperElement& b) {
  return supertrace(s, mat_mul(a, b));
}

int parity_of(const AlgebraSpec& s, const SuperElement& a) {
  int p = -1;
  for (auto& [k, c] : a.entries) {
    int q = (s.parity(k.first) + s.parity(k.second)) % 2;
    if (p < 0) p = q;
    else if (p != q) return -1;
  }
  return p < 0 ? 0 : p;
}

std::optional<int> dd_of(const AlgebraSpec& s, const SuperElement& a) {
  std::optional<int> d;
  for (auto& [k, c] : a.entries) {
    int q = s.dd_unit(k.first, k.second);
    if (!d) d = q;
    else if (*d != q) return std::nullopt;
  }
  return d;
}

std::vector<std::pair<int, Rat>> expand_in_basis(const AlgebraSpec& s, const SuperElement& a) {
  std::vector<std::pair<int, Rat>> out;
  if (!is_osp(s.family)) {
    for (auto& [k, c] : a.entries) out.push_back({s.basis_id(k.first, k.second), c});
    return out;
  }
  SuperElement rebuilt;
  for (auto& [k, c] : a.entries) {
    auto [i, j] = k;
    if (i + j > s.N + 1) continue;
    if (i + j == s.N + 1 && s.parity(i) == 0) continue;  // zero fold direction
    int id = s.basis_id(i, j);
    const SuperElement& e = s.basis()[id].mat;
    Rat w = e.entries.at({i, j});
    Rat coeff = c / w;
    out.push_back({id, coeff});
    rebuilt += e * coeff;
  }
  if (!(rebuilt == a)) throw std::invalid_argument("element is not in the osp span");
  return out;
}

std::map<int, int> graded_dims(const AlgebraSpec& s) {
  std::map<int, int> d;
  for (auto& b : s.basis()) d[b.dd]++;
  return d;
}

std::map<int, int> graded_dims_sl(const AlgebraSpec& s) {
  if (is_osp(s.family)) throw std::domain_error("traceless grading applies to gl presentations");
  auto d = graded_dims(s);
  d[0] -= 1;
  return d;
}

namespace {

// exact null space of the linear map v -> [f, v] restricted to a component
std::vector<SuperElement> nullspace(const AlgebraSpec& s, const SuperElement& f,
                                    const std::vector<SuperElement>& comp) {
  // columns: component vectors; rows: matrix positions of the images
  std::vector<SuperElement> images;
  std::map<std::pair<int, int>, int> rowidx;
  for (auto& v : comp) {
    SuperElement im = lie_bracket(s, f, v);
    for (auto& [k, c] : im.entries)
      if (!rowidx.count(k)) rowidx[k] = static_cast<int>(rowidx.size());
    images.push_back(std::move(im));
  }
  int rows = static_cast<int>(rowidx.size());
  int cols = static_cast<int>(comp.size());
  std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols, Rat(0)));
  for (int c = 0; c < cols; ++c)
    for (auto& [k, v] : images[c].entries) m[rowidx[k]][c] = v;

  // Gaussian elimination, track pivot columns
  std::vector<int> pivot_of_row;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(m[sel], m[r]);
    Rat inv = Rat(1) / m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat factor = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    pivot_of_row.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_of_row) is_pivot[c] = true;

  std::vector<SuperElement> ker;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    SuperElement v = comp[c];
    for (int i = 0; i < static_cast<int>(pivot_of_row.size()); ++i) {
      if (m[i][c] != 0) v -= comp[pivot_of_row[i]] * m[i][c];
    }
    ker.push_back(std::move(v));
  }
  return ker;
}

}  // namespace

std::vector<SuperElement> kerf_component(const AlgebraSpec& s, int dd, bool traceless) {
  std::vector<SuperElement> comp;
  if (traceless && dd == 0) {
    // span of the traceless diagonal plus any off-diagonal degree-0 elements
    int last = s.N;
    Rat pl = neg1pow(s.parity(last));
    for (auto& b : s.basis()) {
      if (b.dd != 0) continue;
      if (b.i == b.j) {
        if (b.i == last) continue;
        SuperElement v = b.mat - SuperElement::unit(last, last, neg1pow(s.parity(b.i)) / pl);
        comp.push_back(std::move(v));
      } else {
        comp.push_back(b.mat);
      }
    }
  } else {
    for (auto& b : s.basis())
      if (b.dd == dd) comp.push_back(b.mat);
  }
  return nullspace(s, s.principal_f(), comp);
}

SuperElement osp_odd_v(const AlgebraSpec& s, int k) {
  if (is_osp_even(s.family) || !is_osp(s.family))
    throw std::domain_error("osp_odd_v requires osp(2n+-1|2n)");
  SuperElement v;
  for (int i = 1; i <= s.N + 1 - k; ++i) {
    int e = k * i;
    for (int l = 0; l <= k - 2; ++l) e += s.delta(i + l);
    v += s.fold_E(k - 1 + i, i) * Rat(neg1pow(e));
  }
  return v;
}

namespace {
int t_count(const AlgebraSpec& s, int i, int k) {
  if (i <= k) return 0;
  int t = 0;
  for (int j = k + 1; j <= i; ++j) t += s.delta(j);
  return t;
}
}  // namespace

SuperElement osp_even_v_high(const AlgebraSpec& s, int l) {
  if (s.family != Family::OspEven0)
    throw std::domain_error("explicit high-degree kernel formula is for osp(2n|2n)");
  int m = s.N / 2;  // 2n
  if (l < m + 1 || l > s.N - 1) throw std::out_of_range("l out of range");
  SuperElement v;
  for (int k = 1; k <= s.N - l; ++k) {
    int e = t_count(s, m, k) + k * l + k + l + 1;
    v += s.fold_E(s.conj(k), s.N + 1 - l - k) * Rat(2 * neg1pow(e));
  }
  return v;
}

SuperElement osp_even_v_tilde(const AlgebraSpec& s) {
  if (!is_osp_even(s.family)) throw std::domain_error("tilde kernel element is for even osp");
  int m = s.N / 2;
  return s.fold_E(m, 1) - s.fold_E(m + 1, 1);
}

std::vector<SuperElement> kerf_basis(const AlgebraSpec& s) {
  std::vector<SuperElement> out;
  if (!is_osp(s.family)) {
    bool traceless = is_sl(s.family);
    auto dims = graded_dims(s);
    int dd_min = dims.begin()->first;
    for (int dd = dd_min; dd <= 0; ++dd) {
      auto part = kerf_component(s, dd, traceless);
      for (auto& v : part) out.push_back(std::move(v));
    }
    return out;
  }
  if (!is_osp_even(s.family)) {
    for (int k = 1; k <= s.N; ++k) {
      SuperElement v = osp_odd_v(s, k);
      if (!v.is_zero()) out.push_back(std::move(v));
    }
    return out;
  }
  int m = s.N / 2;
  SuperElement tilde = osp_even_v_tilde(s);
  int dd_tilde = 1 - m;
  for (int l = 2; l <= s.N - 1; ++l) {
    if (l % 4 != 0 && l % 4 != 3) continue;
    if (s.family == Family::OspEven0 && l >= m + 1) {
      out.push_back(osp_even_v_high(s, l));
      continue;
    }
    auto ker = kerf_component(s, 1 - l, false);
    if (1 - l == dd_tilde) {
      // drop the tilde direction from the solved component
      std::vector<SuperElement> pool = ker;
      pool.push_back(tilde);
      // pick the kernel vector least aligned with tilde: eliminate tilde's leading entry
      auto lead = tilde.entries.begin()->first;
      std::vector<SuperElement> reduced;
      for (auto& v : ker) {
        SuperElement w = v;
        auto it = w.entries.find(lead);
        if (it != w.entries.end()) {
          Rat factor = it->second / tilde.entries.begin()->second;
          w -= tilde * factor;
        }
        if (!w.is_zero()) {
          reduced.push_back(std::move(w));
          break;
        }
      }
      if (reduced.empty()) throw std::runtime_error("kernel component does not extend the tilde direction");
      out.push_back(std::move(reduced.front()));
    } else {
      if (ker.size() != 1) throw std::runtime_error("unexpected kernel dimension in graded component");
      out.push_back(std::move(ker.front()));
    }
  }
  out.push_back(std::move(tilde));
  return out;
}

}  // namespace susyw
