#pragma once

#include <susyw/rational.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace susyw {

// A generator symbol a^(m): generator id, the generator's algebra parity,
// and the derivative order m. Packed so that integer order == lexicographic
// order on (gen, m).
using Sym = std::uint64_t;

inline Sym make_sym(std::uint32_t gen, int gen_parity, std::uint32_t m) {
  return (static_cast<std::uint64_t>(gen) << 33) |
         (static_cast<std::uint64_t>(gen_parity & 1) << 32) | m;
}
inline std::uint32_t sym_gen(Sym s) { return static_cast<std::uint32_t>(s >> 33); }
inline int sym_gen_parity(Sym s) { return static_cast<int>((s >> 32) & 1); }
inline std::uint32_t sym_m(Sym s) { return static_cast<std::uint32_t>(s & 0xffffffffu); }
// parity of the symbol in the differential algebra
inline int sym_parity(Sym s) { return (sym_gen_parity(s) + 1 + sym_m(s)) & 1; }
inline Sym sym_bump(Sym s) { return s + 1; }

// sorted product of symbols; empty = the constant monomial
struct Mono {
  std::vector<Sym> s;
  bool operator<(const Mono& o) const {
    if (s.size() != o.s.size()) return s.size() < o.s.size();
    return s < o.s;
  }
  bool operator==(const Mono& o) const { return s == o.s; }
  int parity() const {
    int p = 0;
    for (Sym x : s) p ^= sym_parity(x);
    return p;
  }
  int degree() const { return static_cast<int>(s.size()); }
};

// normalization of an arbitrary symbol sequence: Koszul sign of the sorting
// permutation restricted to odd symbols; zero when an odd symbol repeats.
// returns 0 sign for the zero result.
int normalize_mono(std::vector<Sym>& syms);

class DiffPoly {
 public:
  std::map<Mono, Rat> terms;

  static DiffPoly zero() { return {}; }
  static DiffPoly constant(const Rat& c);
  static DiffPoly gen(Sym s, const Rat& c = 1);
  static DiffPoly mono(const Mono& m, const Rat& c);

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // coefficient of the empty monomial

  void add_term(const Mono& m, const Rat& c);
  DiffPoly& operator+=(const DiffPoly& o);
  DiffPoly& operator-=(const DiffPoly& o);
  DiffPoly operator+(const DiffPoly& o) const;
  DiffPoly operator-(const DiffPoly& o) const;
  DiffPoly operator-() const;
  DiffPoly operator*(const Rat& c) const;
  DiffPoly operator*(const DiffPoly& o) const;
  bool operator==(const DiffPoly& o) const { return terms == o.terms; }

  // odd derivation: D(a^(m)) = a^(m+1), D(pq) = D(p)q + (-1)^p(p) p D(q)
  DiffPoly D() const;
  DiffPoly D(int times) const;

  // multiply every monomial by (-1)^{parity}
  DiffPoly parity_signed() const;

  // parity when homogeneous, -1 otherwise (constants are even)
  int parity() const;

  int max_poly_degree() const;
};

// doubled conformal weight of each monomial; gen_dd maps generator id to its
// doubled ad-x eigenvalue. Returns the common weight; throws listing the
// offending monomials when the input is mixed.
int delta2(const DiffPoly& p, const std::vector<int>& gen_dd);
// per-monomial doubled weight
int delta2_mono(const Mono& m, const std::vector<int>& gen_dd);

// canonical text rendering, symbols named via the table
std::string render(const DiffPoly& p, const std::vector<std::string>& names);
std::string render_mono(const Mono& m, const std::vector<std::string>& names);

}  // namespace susyw
