#include <susyw/diffpoly.hpp>

#include <algorithm>
#include <stdexcept>

namespace susyw {

int normalize_mono(std::vector<Sym>& syms) {
  // insertion sort counting transpositions of odd symbol pairs
  int sign = 1;
  for (size_t i = 1; i < syms.size(); ++i) {
    Sym x = syms[i];
    int px = sym_parity(x);
    size_t j = i;
    while (j > 0 && syms[j - 1] > x) {
      syms[j] = syms[j - 1];
      if (px && sym_parity(syms[j - 1])) sign = -sign;
      --j;
    }
    syms[j] = x;
  }
  for (size_t i = 1; i < syms.size(); ++i)
    if (syms[i] == syms[i - 1] && sym_parity(syms[i])) return 0;
  return sign;
}

DiffPoly DiffPoly::constant(const Rat& c) {
  DiffPoly p;
  if (c != 0) p.terms[Mono{}] = c;
  return p;
}

DiffPoly DiffPoly::gen(Sym s, const Rat& c) {
  DiffPoly p;
  if (c != 0) p.terms[Mono{{s}}] = c;
  return p;
}

DiffPoly DiffPoly::mono(const Mono& m, const Rat& c) {
  DiffPoly p;
  if (c != 0) p.terms[m] = c;
  return p;
}

bool DiffPoly::is_constant() const {
  return terms.empty() || (terms.size() == 1 && terms.begin()->first.s.empty());
}

Rat DiffPoly::constant_value() const {
  auto it = terms.find(Mono{});
  return it == terms.end() ? Rat(0) : it->second;
}

void DiffPoly::add_term(const Mono& m, const Rat& c) {
  if (c == 0) return;
  auto it = terms.find(m);
  if (it == terms.end()) {
    terms[m] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
  for (auto& [m, c] : o.terms) add_term(m, c);
  return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) {
  for (auto& [m, c] : o.terms) add_term(m, -c);
  return *this;
}

DiffPoly DiffPoly::operator+(const DiffPoly& o) const {
  DiffPoly r = *this;
  r += o;
  return r;
}

DiffPoly DiffPoly::operator-(const DiffPoly& o) const {
  DiffPoly r = *this;
  r -= o;
  return r;
}

DiffPoly DiffPoly::operator-() const {
  DiffPoly r;
  for (auto& [m, c] : terms) r.terms[m] = -c;
  return r;
}

DiffPoly DiffPoly::operator*(const Rat& c) const {
  DiffPoly r;
  if (c == 0) return r;
  for (auto& [m, v] : terms) r.terms[m] = v * c;
  return r;
}

DiffPoly DiffPoly::operator*(const DiffPoly& o) const {
  DiffPoly r;
  for (auto& [ma, ca] : terms) {
    for (auto& [mb, cb] : o.terms) {
      // merge two sorted sequences, Koszul sign for odd-odd crossings
      std::vector<Sym> merged;
      merged.reserve(ma.s.size() + mb.s.size());
      int sign = 1;
      size_t ia = 0, ib = 0;
      int odd_rest_a = 0;
      for (Sym x : ma.s) odd_rest_a += sym_parity(x);
      bool zero = false;
      while (ia < ma.s.size() && ib < mb.s.size()) {
        if (ma.s[ia] == mb.s[ib] && sym_parity(ma.s[ia])) {
          zero = true;
          break;
        }
        if (ma.s[ia] <= mb.s[ib]) {
          odd_rest_a -= sym_parity(ma.s[ia]);
          merged.push_back(ma.s[ia++]);
        } else {
          if (sym_parity(mb.s[ib]) && (odd_rest_a & 1)) sign = -sign;
          merged.push_back(mb.s[ib++]);
        }
      }
      if (zero) continue;
      while (ia < ma.s.size()) merged.push_back(ma.s[ia++]);
      while (ib < mb.s.size()) merged.push_back(mb.s[ib++]);
      bool dup = false;
      for (size_t t = 1; t < merged.size(); ++t)
        if (merged[t] == merged[t - 1] && sym_parity(merged[t])) {
          dup = true;
          break;
        }
      if (dup) continue;
      r.add_term(Mono{std::move(merged)}, ca * cb * sign);
    }
  }
  return r;
}

DiffPoly DiffPoly::D() const {
  DiffPoly r;
  for (auto& [m, c] : terms) {
    int prefix = 0;  // parity of symbols left of the differentiated one
    for (size_t i = 0; i < m.s.size(); ++i) {
      std::vector<Sym> syms = m.s;
      syms[i] = sym_bump(syms[i]);
      int sign = normalize_mono(syms);
      if (sign != 0) r.add_term(Mono{std::move(syms)}, c * sign * neg1pow(prefix));
      prefix ^= sym_parity(m.s[i]);
    }
  }
  return r;
}

DiffPoly DiffPoly::D(int times) const {
  DiffPoly r = *this;
  for (int i = 0; i < times; ++i) r = r.D();
  return r;
}

DiffPoly DiffPoly::parity_signed() const {
  DiffPoly r;
  for (auto& [m, c] : terms) r.terms[m] = m.parity() ? -c : c;
  return r;
}

int DiffPoly::parity() const {
  int p = -1;
  for (auto& [m, c] : terms) {
    int q = m.parity();
    if (p < 0) p = q;
    else if (p != q) return -1;
  }
  return p < 0 ? 0 : p;
}

int DiffPoly::max_poly_degree() const {
  int d = 0;
  for (auto& [m, c] : terms) d = std::max(d, m.degree());
  return d;
}

int delta2_mono(const Mono& m, const std::vector<int>& gen_dd) {
  int w = 0;
  for (Sym x : m.s) w += 1 - gen_dd.at(sym_gen(x)) + static_cast<int>(sym_m(x));
  return w;
}

int delta2(const DiffPoly& p, const std::vector<int>& gen_dd) {
  if (p.is_zero()) return 0;
  int w = delta2_mono(p.terms.begin()->first, gen_dd);
  for (auto& [m, c] : p.terms) {
    if (delta2_mono(m, gen_dd) != w)
      throw std::invalid_argument("conformal weight is not homogeneous");
  }
  return w;
}

std::string render_mono(const Mono& m, const std::vector<std::string>& names) {
  std::string out;
  for (size_t i = 0; i < m.s.size(); ++i) {
    if (i) out += " ";
    out += names.at(sym_gen(m.s[i]));
    if (sym_m(m.s[i]) > 0) out += "^(" + std::to_string(sym_m(m.s[i])) + ")";
  }
  return out;
}

std::string render(const DiffPoly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto& [m, c] : p.terms) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += (a < 0) ? " - " : " + ";
      if (a < 0) a = -a;
    }
    std::string ms = render_mono(m, names);
    if (ms.empty()) {
      out += rat_str(a);
    } else {
      if (a != 1) out += rat_str(a) + " ";
      out += ms;
    }
    first = false;
  }
  return out;
}

}  // namespace susyw
