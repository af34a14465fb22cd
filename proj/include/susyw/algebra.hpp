#pragma once

#include <susyw/rational.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace susyw {

// The eight matrix presentations carrying an odd principal nilpotent.
enum class Family {
  GlNp1,      // gl(n+1|n)
  GlNm1,      // gl(n-1|n)
  SlNp1,      // sl(n+1|n)
  SlNm1,      // sl(n-1|n)
  OspOddP,    // osp(2n+1|2n)
  OspOddM,    // osp(2n-1|2n)
  OspEven0,   // osp(2n|2n)
  OspEvenP2,  // osp(2n+2|2n)
};

bool is_osp(Family f);
bool is_osp_even(Family f);
bool is_sl(Family f);
std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

// Sparse exact matrix over the unit basis e_{ij}, 1-based indices.
class SuperElement {
 public:
  std::map<std::pair<int, int>, Rat> entries;

  static SuperElement unit(int i, int j, const Rat& c = 1);
  bool is_zero() const { return entries.empty(); }
  void add(int i, int j, const Rat& c);
  SuperElement& operator+=(const SuperElement& o);
  SuperElement& operator-=(const SuperElement& o);
  SuperElement operator+(const SuperElement& o) const;
  SuperElement operator-(const SuperElement& o) const;
  SuperElement operator*(const Rat& c) const;
  SuperElement operator-() const { return *this * Rat(-1); }
  bool operator==(const SuperElement& o) const { return entries == o.entries; }
};

struct BasisElem {
  int i, j;          // presentation label: e_{ij} (gl) or E_{ij} with (i,j) in the fold basis (osp)
  SuperElement mat;  // expansion over matrix units
  int parity;        // p(i)+p(j) mod 2
  int dd;            // doubled ad-x eigenvalue (2 * degree)
  std::string name;  // "e[i,j]" or "E[i,j]"
  bool in_n;         // dd > 0
  Rat f_pair;        // (f | elem)
};

class AlgebraSpec {
 public:
  AlgebraSpec(Family family, int n);

  Family family;
  int n;
  int N;  // |I|

  int parity(int i) const;              // p(i) in {0,1}
  int delta(int k) const;               // delta_k; throws for gl/sl
  int conj(int i) const { return N + 1 - i; }
  int pos(int i) const;                 // position weight inducing the grading
  int dd_unit(int i, int j) const { return pos(j) - pos(i); }  // doubled degree of e_{ij}

  // fold data (osp only)
  int tau(int i, int j) const;          // +-1
  SuperElement theta_unit(int i, int j) const;  // theta(e_{ij})
  SuperElement fold_F(int i, int j) const;      // F_{ij} = e_{ij} + theta(e_{ij})
  SuperElement fold_E(int i, int j) const;      // E_{ij} = (1/2)(-1)^{p(i)} F_{ij}
  SuperElement form_J() const;                  // sum_k (-1)^{delta_k} e_{k k'}

  SuperElement principal_f() const;
  SuperElement identity_elem() const;           // sum_i e_{ii}

  // canonical generator basis: all e_{ij} (gl/sl) or E_{ij}, (i,j) in the fold basis (osp)
  const std::vector<BasisElem>& basis() const { return basis_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  // gl/sl: defined for all (i,j); osp: only for fold-basis pairs
  int basis_id(int i, int j) const;

  // osp: E_{ij} for arbitrary (i,j) as multiple of a basis element; id < 0 means zero
  struct CanonE {
    int id;
    Rat c;
  };
  CanonE canon_E(int i, int j) const;

  // number of basis elements with dd > 0 (the nilpotent radical)
  int dim_n() const { return dim_n_; }

 private:
  std::vector<BasisElem> basis_;
  std::map<std::pair<int, int>, int> basis_index_;
  int dim_n_ = 0;
  void build_basis();
};

Rat supertrace(const AlgebraSpec& s, const SuperElement& a);
SuperElement supertranspose(const AlgebraSpec& s, const SuperElement& a);
SuperElement mat_mul(const SuperElement& a, const SuperElement& b);
SuperElement lie_bracket(const AlgebraSpec& s, const SuperElement& a, const SuperElement& b);
Rat bilinear_form(const AlgebraSpec& s, const SuperElement& a, const SuperElement& b);

// parity / degree of an element; -1 when inhomogeneous, throws on zero input for degree
int parity_of(const AlgebraSpec& s, const SuperElement& a);
std::optional<int> dd_of(const AlgebraSpec& s, const SuperElement& a);

// expansion over the canonical basis; throws if a is not in the span
std::vector<std::pair<int, Rat>> expand_in_basis(const AlgebraSpec& s, const SuperElement& a);

// doubled-degree -> dimension of the graded component (of the full algebra; sl excludes nothing here)
std::map<int, int> graded_dims(const AlgebraSpec& s);
// same for the traceless subalgebra of a gl presentation
std::map<int, int> graded_dims_sl(const AlgebraSpec& s);

// basis of ker(ad f): explicit folded combinations where the construction gives them,
// exact kernel solving elsewhere. Every returned element v satisfies [f, v] = 0.
std::vector<SuperElement> kerf_basis(const AlgebraSpec& s);

// explicit candidates entering kerf_basis for osp presentations
SuperElement osp_odd_v(const AlgebraSpec& s, int k);     // may be zero (k = 1,2 mod 4)
SuperElement osp_even_v_high(const AlgebraSpec& s, int l);  // osp even, N/2+1 <= l < N
SuperElement osp_even_v_tilde(const AlgebraSpec& s);        // E_{m,1} - E_{m+1,1}, m = N/2

// exact kernel of ad f restricted to the doubled-degree-dd component of the algebra
// (traceless part for sl presentations)
std::vector<SuperElement> kerf_component(const AlgebraSpec& s, int dd, bool traceless);

}  // namespace susyw
