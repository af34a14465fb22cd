#pragma once

#include <susyw/chipoly.hpp>
#include <susyw/diffpoly.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace susyw {

struct FloorExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Laurent operator sum_i a_i D^i in coefficients-left normal form.
// floor: all stored coefficients at degrees >= floor are exact; degrees
// below are unknown (truncated). No floor means the operator is exact.
struct DOp {
  std::map<int, DiffPoly> c;
  std::optional<int> floor;

  static DOp zero() { return {}; }
  static DOp one() { return from_coeff(DiffPoly::constant(1), 0); }
  static DOp d_power(int i) { return from_coeff(DiffPoly::constant(1), i); }
  static DOp from_coeff(const DiffPoly& p, int deg = 0) {
    DOp r;
    if (!p.is_zero()) r.c[deg] = p;
    return r;
  }

  bool is_zero() const { return c.empty(); }
  bool exact() const { return !floor.has_value(); }
  int max_deg() const { return c.empty() ? 0 : c.rbegin()->first; }
  int min_deg() const { return c.empty() ? 0 : c.begin()->first; }
  DiffPoly coeff(int i) const {
    if (floor && i < *floor) throw FloorExhausted("coefficient below the exactness floor");
    auto it = c.find(i);
    return it == c.end() ? DiffPoly::zero() : it->second;
  }

  void add(int i, const DiffPoly& p) {
    if (p.is_zero()) return;
    if (floor && i < *floor) return;
    auto it = c.find(i);
    if (it == c.end()) {
      c[i] = p;
    } else {
      it->second += p;
      if (it->second.is_zero()) c.erase(it);
    }
  }
  void set_floor(std::optional<int> f) {
    floor = f;
    if (floor) {
      for (auto it = c.begin(); it != c.end();) {
        if (it->first < *floor) it = c.erase(it);
        else break;
      }
    }
  }

  DOp& operator+=(const DOp& o);
  DOp operator+(const DOp& o) const {
    DOp r = *this;
    r += o;
    return r;
  }
  DOp operator-() const;
  DOp operator-(const DOp& o) const { return *this + (-o); }
  DOp scale(const Rat& a) const;
  DOp lmul(const DiffPoly& p) const;  // multiply every coefficient from the left
  bool operator==(const DOp& o) const { return c == o.c && floor == o.floor; }
};

// composition A o B truncated below work_floor when infinite expansions arise
DOp compose(const DOp& a, const DOp& b, int work_floor);

// (a D^m)* = (-1)^{m p(a) + floor((m+1)/2)} D^m a; requires a pure differential operator
DOp adjoint_star(const DOp& a);

// operators with chi: sum chi^k a D^i, chi leftmost, coefficients left of D powers
struct ChiDOp {
  std::map<std::pair<int, int>, DiffPoly> c;  // (chi power, D degree) -> coeff
  std::optional<int> floor;

  static ChiDOp zero() { return {}; }
  static ChiDOp one() { return from_coeff(DiffPoly::constant(1)); }
  static ChiDOp from_coeff(const DiffPoly& p, int k = 0, int i = 0) {
    ChiDOp r;
    if (!p.is_zero()) r.c[{k, i}] = p;
    return r;
  }
  static ChiDOp from_dop(const DOp& a) {
    ChiDOp r;
    for (auto& [i, p] : a.c) r.c[{0, i}] = p;
    r.floor = a.floor;
    return r;
  }
  static ChiDOp from_chipoly(const ChiPoly& x, int deg = 0) {
    ChiDOp r;
    for (auto& [k, p] : x.c) r.c[{k, deg}] = p;
    return r;
  }

  bool is_zero() const { return c.empty(); }
  bool exact() const { return !floor.has_value(); }
  int max_deg() const;
  void add(int k, int i, const DiffPoly& p) {
    if (p.is_zero()) return;
    if (floor && i < *floor) return;
    auto key = std::make_pair(k, i);
    auto it = c.find(key);
    if (it == c.end()) {
      c[key] = p;
    } else {
      it->second += p;
      if (it->second.is_zero()) c.erase(it);
    }
  }
  void set_floor(std::optional<int> f);
  ChiDOp& operator+=(const ChiDOp& o);
  ChiDOp operator+(const ChiDOp& o) const {
    ChiDOp r = *this;
    r += o;
    return r;
  }
  ChiDOp operator-() const;
  ChiDOp operator-(const ChiDOp& o) const { return *this + (-o); }
  ChiDOp scale(const Rat& a) const;
  ChiDOp lmul(const DiffPoly& p) const;  // left coefficient, Koszul past chi
  bool operator==(const ChiDOp& o) const { return c == o.c && floor == o.floor; }
};

ChiDOp compose(const ChiDOp& a, const ChiDOp& b, int work_floor);

// replace D by D+chi; negative powers expand through the geometric series
// (chi+D)^{-1} = sum_n chi^n D^{-n-1} truncated at work_floor
ChiDOp substitute_chi(const DOp& a, int work_floor);
ChiDOp chi_d_inverse(int work_floor);

// generalized row determinant of an almost upper triangular matrix:
// sum over increasing column paths of left-to-right entry products, each
// skipped column j contributing the factor -M[j+1][j] (a constant).
using DOpMatrix = std::vector<std::vector<DOp>>;
DOp rdet(const DOpMatrix& m, int work_floor);

}  // namespace susyw
