#pragma once

#include <susyw/diffpoly.hpp>

#include <map>
#include <utility>

namespace susyw {

// finite sum chi^k (x) coefficient, chi kept leftmost
struct ChiPoly {
  std::map<int, DiffPoly> c;

  static ChiPoly lift(const DiffPoly& p) {
    ChiPoly r;
    if (!p.is_zero()) r.c[0] = p;
    return r;
  }
  bool is_zero() const { return c.empty(); }
  void add(int k, const DiffPoly& p) {
    if (p.is_zero()) return;
    auto it = c.find(k);
    if (it == c.end()) {
      c[k] = p;
    } else {
      it->second += p;
      if (it->second.is_zero()) c.erase(it);
    }
  }
  ChiPoly& operator+=(const ChiPoly& o) {
    for (auto& [k, p] : o.c) add(k, p);
    return *this;
  }
  ChiPoly operator+(const ChiPoly& o) const {
    ChiPoly r = *this;
    r += o;
    return r;
  }
  ChiPoly operator-() const {
    ChiPoly r;
    for (auto& [k, p] : c) r.c[k] = -p;
    return r;
  }
  ChiPoly operator-(const ChiPoly& o) const { return *this + (-o); }
  ChiPoly scale(const Rat& a) const {
    ChiPoly r;
    if (a == 0) return r;
    for (auto& [k, p] : c) r.c[k] = p * a;
    return r;
  }
  bool operator==(const ChiPoly& o) const { return c == o.c; }

  // left multiplication by chi^s
  ChiPoly chi_shift(int s) const {
    ChiPoly r;
    for (auto& [k, p] : c) r.c[k + s] = p;
    return r;
  }

  // module action D(chi^k r) = (-1)^k chi^k Dr - 2 [k odd] chi^{k+1} r
  ChiPoly applyD() const {
    ChiPoly r;
    for (auto& [k, p] : c) {
      r.add(k, (k % 2 == 0) ? p.D() : -p.D());
      if (k % 2 != 0) r.add(k + 1, p * Rat(-2));
    }
    return r;
  }
  ChiPoly applyDplusChi() const { return applyD() + chi_shift(1); }
  ChiPoly applyMinusChiMinusD() const { return -(applyD() + chi_shift(1)); }

  // multiply coefficients from the left by v, Koszul sign past chi^k
  ChiPoly lmul(const DiffPoly& v) const {
    ChiPoly r;
    for (auto& [k, p] : c) {
      if (k % 2 == 0) {
        r.add(k, v * p);
      } else {
        r.add(k, v.parity_signed() * p);
      }
    }
    return r;
  }
  // multiply coefficients from the right by w (crosses nothing)
  ChiPoly rmul(const DiffPoly& w) const {
    ChiPoly r;
    for (auto& [k, p] : c) r.add(k, p * w);
    return r;
  }
  // map coefficients
  template <class F>
  ChiPoly map(F&& f) const {
    ChiPoly r;
    for (auto& [k, p] : c) r.add(k, f(p));
    return r;
  }
};

// finite sum chi^a gamma^b (x) coefficient, chi before gamma
struct ChiGammaPoly {
  std::map<std::pair<int, int>, DiffPoly> c;

  bool is_zero() const { return c.empty(); }
  void add(int a, int b, const DiffPoly& p) {
    if (p.is_zero()) return;
    auto key = std::make_pair(a, b);
    auto it = c.find(key);
    if (it == c.end()) {
      c[key] = p;
    } else {
      it->second += p;
      if (it->second.is_zero()) c.erase(it);
    }
  }
  ChiGammaPoly& operator+=(const ChiGammaPoly& o) {
    for (auto& [k, p] : o.c) add(k.first, k.second, p);
    return *this;
  }
  ChiGammaPoly operator-() const {
    ChiGammaPoly r;
    for (auto& [k, p] : c) r.c[k] = -p;
    return r;
  }
  ChiGammaPoly operator-(const ChiGammaPoly& o) const {
    ChiGammaPoly r = *this;
    r += -o;
    return r;
  }
  ChiGammaPoly scale(const Rat& a) const {
    ChiGammaPoly r;
    if (a == 0) return r;
    for (auto& [k, p] : c) r.c[k] = p * a;
    return r;
  }
  bool operator==(const ChiGammaPoly& o) const { return c == o.c; }

  static ChiGammaPoly from_chi(const ChiPoly& x) {
    ChiGammaPoly r;
    for (auto& [k, p] : x.c) r.add(k, 0, p);
    return r;
  }
  static ChiGammaPoly from_gamma(const ChiPoly& x) {
    ChiGammaPoly r;
    for (auto& [k, p] : x.c) r.add(0, k, p);
    return r;
  }

  // left multiplication by chi^s: no crossings
  ChiGammaPoly chi_shift(int s) const {
    ChiGammaPoly r;
    for (auto& [k, p] : c) r.c[{k.first + s, k.second}] = p;
    return r;
  }
  // left multiplication by gamma: crosses chi^a
  ChiGammaPoly gamma_lmul() const {
    ChiGammaPoly r;
    for (auto& [k, p] : c) r.add(k.first, k.second + 1, (k.first % 2) ? -p : p);
    return r;
  }
  ChiGammaPoly gamma_shift(int s) const {
    ChiGammaPoly r = *this;
    for (int t = 0; t < s; ++t) r = r.gamma_lmul();
    return r;
  }
  // (chi+gamma) from the left
  ChiGammaPoly chi_plus_gamma_lmul() const {
    ChiGammaPoly r = chi_shift(1);
    r += gamma_lmul();
    return r;
  }
};

}  // namespace susyw
