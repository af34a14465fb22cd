#include <susyw/bracket.hpp>

#include <stdexcept>

namespace susyw {

Engine::Engine(const AlgebraSpec& spec, Rat level) : spec_(&spec), level_(std::move(level)) {
  names_.reserve(spec.dim());
  gen_dd_.reserve(spec.dim());
  for (auto& b : spec.basis()) {
    names_.push_back(b.name);
    gen_dd_.push_back(b.dd);
  }
}

Sym Engine::sym(int gen_id, int m) const {
  return make_sym(static_cast<std::uint32_t>(gen_id), spec_->basis()[gen_id].parity,
                  static_cast<std::uint32_t>(m));
}

Sym Engine::sym(int i, int j, int m) const { return sym(spec_->basis_id(i, j), m); }

DiffPoly Engine::from_super(const SuperElement& a) const {
  DiffPoly p;
  for (auto& [id, c] : expand_in_basis(*spec_, a)) p += DiffPoly::gen(sym(id), c);
  return p;
}

SuperElement Engine::to_super_linear(const DiffPoly& p) const {
  SuperElement r;
  for (auto& [m, c] : p.terms) {
    if (m.degree() != 1 || sym_m(m.s[0]) != 0)
      throw std::invalid_argument("not a linear derivative-free polynomial");
    r += spec_->basis()[sym_gen(m.s[0])].mat * c;
  }
  return r;
}

const ChiPoly& Engine::affine(std::uint32_t g, std::uint32_t h) const {
  auto key = std::make_pair(g, h);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  const BasisElem& a = spec_->basis()[g];
  const BasisElem& b = spec_->basis()[h];
  SuperElement ab = lie_bracket(*spec_, a.mat, b.mat);
  ChiPoly r;
  // (-1)^{p(a) (p(b)+1)} [a,b]-bar  +  chi * level * (a|b)
  int sgn = neg1pow(a.parity * (b.parity + 1));
  r.add(0, from_super(ab) * Rat(sgn));
  r.add(1, DiffPoly::constant(level_ * bilinear_form(*spec_, a.mat, b.mat)));
  return cache_.emplace(key, std::move(r)).first->second;
}

ChiPoly Engine::bracket_sym_mono(Sym u, const Mono& q) const {
  // left slot: a derivative D^m u contributes (-chi)^m
  std::uint32_t m = sym_m(u);
  if (m > 0) {
    ChiPoly base = bracket_sym_mono(make_sym(sym_gen(u), sym_gen_parity(u), 0), q);
    return base.chi_shift(static_cast<int>(m)).scale(neg1pow(m));
  }
  if (q.s.empty()) return {};  // bracket with a constant
  int pu = sym_parity(u);
  if (q.s.size() == 1) {
    Sym v = q.s[0];
    std::uint32_t l = sym_m(v);
    ChiPoly base = affine(sym_gen(u), sym_gen(v));
    // right slot derivative: each D costs (-1)^{p(u)+1} (D+chi)
    for (std::uint32_t t = 0; t < l; ++t) base = base.applyDplusChi().scale(neg1pow(pu + 1));
    return base;
  }
  // Leibniz on the right: q = v. rest
  Sym v = q.s[0];
  Mono rest{std::vector<Sym>(q.s.begin() + 1, q.s.end())};
  ChiPoly t1 = bracket_sym_mono(u, rest).lmul(DiffPoly::gen(v)).scale(
      neg1pow((pu + 1) * sym_parity(v)));
  ChiPoly t2 = bracket_sym_mono(u, Mono{{v}}).rmul(DiffPoly::mono(rest, 1));
  return t1 + t2;
}

ChiPoly Engine::arrow(const ChiPoly& xc, const DiffPoly& y) const {
  ChiPoly r;
  ChiPoly pow = ChiPoly::lift(y);  // (chi+D)^n y
  int next = 0;
  for (auto& [nn, coeff] : xc.c) {
    while (next < nn) {
      pow = pow.applyDplusChi();
      ++next;
    }
    r += pow.lmul(coeff);
  }
  return r;
}

ChiPoly Engine::bracket_mono(const Mono& p, const Mono& q) const {
  if (p.s.empty()) return {};
  if (p.s.size() == 1) return bracket_sym_mono(p.s[0], q);
  // right Leibniz: p = a . b with a single
  Sym a = p.s[0];
  Mono b{std::vector<Sym>(p.s.begin() + 1, p.s.end())};
  int pa = sym_parity(a);
  int pb = b.parity();
  int pc = q.parity();
  ChiPoly xa = bracket_sym_mono(a, q);
  ChiPoly xb = bracket_mono(b, q);
  ChiPoly t1 = arrow(xa, DiffPoly::mono(b, 1)).scale(neg1pow(pc * pb));
  ChiPoly t2 = arrow(xb, DiffPoly::gen(a)).scale(neg1pow(pa * (pb + pc)));
  return t1 + t2;
}

ChiPoly Engine::bracket(const DiffPoly& p, const DiffPoly& q) const {
  ChiPoly r;
  for (auto& [mp, cp] : p.terms)
    for (auto& [mq, cq] : q.terms) r += bracket_mono(mp, mq).scale(cp * cq);
  return r;
}

DiffPoly Engine::project(const DiffPoly& p) const {
  DiffPoly r;
  for (auto& [m, c] : p.terms) {
    DiffPoly term = DiffPoly::constant(c);
    bool dead = false;
    for (Sym x : m.s) {
      const BasisElem& b = spec_->basis()[sym_gen(x)];
      if (b.in_n) {
        if (sym_m(x) > 0 || b.f_pair == 0) {
          dead = true;
          break;
        }
        term = term * b.f_pair;
      } else {
        term = term * DiffPoly::gen(x);
      }
    }
    if (!dead) r += term;
  }
  return r;
}

ChiPoly Engine::project(const ChiPoly& p) const {
  ChiPoly r;
  for (auto& [k, c] : p.c) r.add(k, project(c));
  return r;
}

ChiPoly Engine::skew_defect(const DiffPoly& a, const DiffPoly& b) const {
  int pa = a.parity(), pb = b.parity();
  if (pa < 0 || pb < 0) throw std::invalid_argument("skew check needs homogeneous inputs");
  ChiPoly lhs = bracket(a, b);
  ChiPoly ba = bracket(b, a);
  // substitute chi -> -chi-D with D acting through the module rule
  ChiPoly rhs;
  for (auto& [nn, coeff] : ba.c) {
    ChiPoly t = ChiPoly::lift(coeff);
    for (int s = 0; s < nn; ++s) t = t.applyMinusChiMinusD();
    rhs += t;
  }
  return lhs - rhs.scale(neg1pow(pa * pb));
}

ChiGammaPoly Engine::jacobi_defect(const DiffPoly& a, const DiffPoly& b,
                                   const DiffPoly& c) const {
  int pa = a.parity(), pb = b.parity();
  if (pa < 0 || pb < 0) throw std::invalid_argument("jacobi check needs homogeneous inputs");

  // lhs = [a chi [b gamma c]]
  ChiGammaPoly lhs;
  for (auto& [nn, coeff] : bracket(b, c).c) {
    ChiGammaPoly t = ChiGammaPoly::from_chi(bracket(a, coeff));
    t = t.gamma_shift(nn).scale(neg1pow(nn * (pa + 1)));
    lhs += t;
  }

  // rhs1 = (-1)^{p(a)+1} [[a chi b] chi+gamma c]
  ChiGammaPoly rhs1;
  for (auto& [nn, coeff] : bracket(a, b).c) {
    // [chi^n x _{chi+gamma} c] = (-1)^n chi^n sum_m (chi+gamma)^m x_(m) c
    ChiGammaPoly sub;
    for (auto& [mm, inner] : bracket(coeff, c).c) {
      ChiGammaPoly term = ChiGammaPoly::from_chi(ChiPoly::lift(inner));
      for (int s = 0; s < mm; ++s) term = term.chi_plus_gamma_lmul();
      sub += term;
    }
    rhs1 += sub.chi_shift(nn).scale(neg1pow(nn));
  }
  rhs1 = rhs1.scale(neg1pow(pa + 1));

  // rhs2 = (-1)^{(p(a)+1)(p(b)+1)} [b gamma [a chi c]]
  ChiGammaPoly rhs2;
  for (auto& [mm, coeff] : bracket(a, c).c) {
    ChiGammaPoly t = ChiGammaPoly::from_gamma(bracket(b, coeff));
    t = t.chi_shift(mm).scale(neg1pow(mm * (pb + 1)));
    rhs2 += t;
  }
  rhs2 = rhs2.scale(neg1pow((pa + 1) * (pb + 1)));

  ChiGammaPoly defect = lhs;
  defect += -rhs1;
  defect += -rhs2;
  return defect;
}

}  // namespace susyw
