#pragma once

#include <susyw/bracket.hpp>
#include <susyw/dop.hpp>
#include <susyw/report.hpp>

#include <optional>
#include <string>
#include <vector>

namespace susyw {

struct GenEntry {
  std::string label;  // w{t} or wt{t}
  int t = 0;          // doubled weight = t
  bool tilde = false;
  DiffPoly w;
};

struct GeneratorSet {
  Family family;
  int n = 1;
  Rat level = 1;
  int floor = 0;
  std::vector<GenEntry> gens;
  std::vector<int> minimal;  // indices into gens forming the free generating set
};

int default_floor(const AlgebraSpec& s);

// the operator matrix of a gl/sl or odd osp presentation (D scaled by the level)
DOpMatrix build_matrix(const Engine& eng);

// blocks of the even osp presentation obtained by the column/row surgery
struct EvenBlocks {
  DOpMatrix mu11, mu12, mu21, mu22;
};
EvenBlocks build_even_blocks(const Engine& eng);
// closed-form entries for cross-checking the surgery
EvenBlocks even_blocks_closed_form(const Engine& eng);

// block row determinants of the corner blocks: a[k] upper-left k x k of
// mu11, b[k] lower-right k x k of mu22, k = 0..N/2
struct AkBk {
  std::vector<DOp> a, b;
};
AkBk ak_bk(const Engine& eng, const EvenBlocks& blocks, int work_floor);
// the same operators from the displayed recursions
AkBk ak_bk_recursion(const Engine& eng, int work_floor);

// T_i(k) = delta_{k+1} + ... + delta_i (0 when i <= k)
int t_sum(const AlgebraSpec& s, int i, int k);

// full row determinant of the even presentation: polynomial part plus the
// checked negative tail; tail_witness is the constant term of A_{N/2}
struct EvenRdet {
  DOp full;          // includes negative degrees down to the floor
  DiffPoly tail_witness;
};
EvenRdet rdet_osp_even(const Engine& eng, const EvenBlocks& blocks, int work_floor);

GeneratorSet generators(const Engine& eng, std::optional<int> floor_override = std::nullopt);

// trace-normalized projection onto the traceless part, extended as a
// differential algebra homomorphism
DiffPoly pi_sl(const Engine& eng, const DiffPoly& p);

// linear part without total derivatives: degree-1 derivative-free monomials
DiffPoly linear_part(const DiffPoly& w);

Report verify_membership(const Engine& eng, const GeneratorSet& gs);
Report verify_weights(const Engine& eng, const GeneratorSet& gs);
Report verify_free_generation(const Engine& eng, const GeneratorSet& gs);
Report verify_all(const Engine& eng, const GeneratorSet& gs);

}  // namespace susyw
