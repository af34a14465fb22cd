#pragma once

#include <susyw/algebra.hpp>
#include <susyw/chipoly.hpp>

#include <map>
#include <vector>

namespace susyw {

// chi-bracket engine of the affine structure attached to a presentation.
// level is the coupling constant in front of the chi (a|b) term.
class Engine {
 public:
  explicit Engine(const AlgebraSpec& spec, Rat level = Rat(1));

  const AlgebraSpec& alg() const { return *spec_; }
  const Rat& level() const { return level_; }

  // symbol helpers
  Sym sym(int gen_id, int m = 0) const;
  Sym sym(int i, int j, int m) const;  // by presentation label
  DiffPoly gen_poly(int gen_id, int m = 0) const { return DiffPoly::gen(sym(gen_id, m)); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& gen_dd() const { return gen_dd_; }

  // bracket of two generators (derivative order 0)
  const ChiPoly& affine(std::uint32_t g, std::uint32_t h) const;

  // full bilinear extension
  ChiPoly bracket(const DiffPoly& p, const DiffPoly& q) const;

  // projection to the non-positive half: n-symbols evaluate against f
  DiffPoly project(const DiffPoly& p) const;
  ChiPoly project(const ChiPoly& p) const;
  bool symbol_in_n(std::uint32_t gen_id) const { return spec_->basis()[gen_id].in_n; }

  // axiom residuals; zero when the axiom holds
  ChiPoly skew_defect(const DiffPoly& a, const DiffPoly& b) const;
  ChiGammaPoly jacobi_defect(const DiffPoly& a, const DiffPoly& b, const DiffPoly& c) const;

  // right-arrow product: sum_n x_{(n)}c (chi+D)^n y
  ChiPoly arrow(const ChiPoly& xc, const DiffPoly& y) const;

  // linear DiffPoly <-> SuperElement (derivative order 0 terms only)
  DiffPoly from_super(const SuperElement& a) const;
  SuperElement to_super_linear(const DiffPoly& p) const;

 private:
  const AlgebraSpec* spec_;
  Rat level_;
  std::vector<std::string> names_;
  std::vector<int> gen_dd_;
  mutable std::map<std::pair<std::uint32_t, std::uint32_t>, ChiPoly> cache_;

  ChiPoly bracket_sym_mono(Sym u, const Mono& q) const;
  ChiPoly bracket_mono(const Mono& p, const Mono& q) const;
};

}  // namespace susyw
