#include <susyw/jsonio.hpp>

#include <map>
#include <stdexcept>

namespace susyw {

namespace {

Json emit_poly(const Engine& eng, const DiffPoly& p) {
  Json terms = Json::array();
  for (auto& [mono, c] : p.terms) {
    Json t;
    t["coeff"] = rat_str(c);
    Json ms = Json::array();
    for (Sym x : mono.s) {
      Json sj;
      sj["basis"] = eng.names()[sym_gen(x)];
      sj["deriv"] = sym_m(x);
      ms.push_back(std::move(sj));
    }
    t["monomial"] = std::move(ms);
    terms.push_back(std::move(t));
  }
  return terms;
}

}  // namespace

Json emit_generators(const Engine& eng, const GeneratorSet& gs, bool minimal_only,
                     const Report* verification) {
  Json j;
  j["family"] = family_name(gs.family);
  j["n"] = gs.n;
  j["k"] = rat_str(gs.level);
  j["floor"] = gs.floor;
  Json gens = Json::array();
  std::vector<bool> in_minimal(gs.gens.size(), false);
  for (int idx : gs.minimal) in_minimal[idx] = true;
  for (size_t i = 0; i < gs.gens.size(); ++i) {
    if (minimal_only && !in_minimal[i]) continue;
    const GenEntry& g = gs.gens[i];
    Json e;
    e["label"] = g.label;
    e["delta"] = rat_str(Rat(g.t, 2));
    e["terms"] = emit_poly(eng, g.w);
    gens.push_back(std::move(e));
  }
  j["generators"] = std::move(gens);
  Json mins = Json::array();
  for (int idx : gs.minimal) mins.push_back(gs.gens[idx].label);
  j["minimal"] = std::move(mins);
  if (verification) {
    Json v;
    v["pass"] = verification->all_pass();
    Json checks = Json::array();
    for (auto& c : verification->checks) {
      Json cj;
      cj["name"] = c.name;
      cj["pass"] = c.pass;
      if (!c.detail.empty()) cj["detail"] = c.detail;
      checks.push_back(std::move(cj));
    }
    v["checks"] = std::move(checks);
    j["verification"] = std::move(v);
  }
  return j;
}

GeneratorSet parse_generators(const AlgebraSpec& spec, const Json& j) {
  GeneratorSet gs;
  auto fam = family_from_name(j.at("family").get<std::string>());
  if (!fam || *fam != spec.family) throw std::invalid_argument("family mismatch");
  gs.family = *fam;
  gs.n = j.at("n").get<int>();
  gs.level = rat_parse(j.at("k").get<std::string>());
  gs.floor = j.at("floor").get<int>();
  std::map<std::string, int> by_name;
  for (int i = 0; i < spec.dim(); ++i) by_name[spec.basis()[i].name] = i;
  Engine eng(spec, gs.level);
  for (auto& e : j.at("generators")) {
    GenEntry g;
    g.label = e.at("label").get<std::string>();
    Rat delta2w = rat_parse(e.at("delta").get<std::string>()) * 2;
    g.t = static_cast<int>(numerator(delta2w).convert_to<long long>());
    g.tilde = g.label.rfind("wt", 0) == 0;
    for (auto& t : e.at("terms")) {
      std::vector<Sym> syms;
      for (auto& sj : t.at("monomial")) {
        auto it = by_name.find(sj.at("basis").get<std::string>());
        if (it == by_name.end()) throw std::invalid_argument("unknown basis symbol");
        syms.push_back(eng.sym(it->second, sj.at("deriv").get<int>()));
      }
      int sign = normalize_mono(syms);
      if (sign == 0) throw std::invalid_argument("monomial with a repeated odd symbol");
      g.w.add_term(Mono{std::move(syms)}, rat_parse(t.at("coeff").get<std::string>()) * sign);
    }
    gs.gens.push_back(std::move(g));
  }
  for (size_t i = 0; i < gs.gens.size(); ++i) {
    const std::string& lbl = gs.gens[i].label;
    for (auto& m : j.at("minimal"))
      if (m.get<std::string>() == lbl) gs.minimal.push_back(static_cast<int>(i));
  }
  return gs;
}

Json emit_report(const Engine& eng, const std::string& command, const Report& rep) {
  Json j;
  j["family"] = family_name(eng.alg().family);
  j["n"] = eng.alg().n;
  j["k"] = rat_str(eng.level());
  j["command"] = command;
  j["pass"] = rep.all_pass();
  Json checks = Json::array();
  for (auto& c : rep.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  return j;
}

std::string render_text(const Engine& eng, const GeneratorSet& gs, bool minimal_only) {
  std::string out;
  out += family_name(gs.family) + "  n=" + std::to_string(gs.n) + "  k=" + rat_str(gs.level) +
         "  floor=" + std::to_string(gs.floor) + "\n";
  std::vector<bool> in_minimal(gs.gens.size(), false);
  for (int idx : gs.minimal) in_minimal[idx] = true;
  for (size_t i = 0; i < gs.gens.size(); ++i) {
    if (minimal_only && !in_minimal[i]) continue;
    const GenEntry& g = gs.gens[i];
    out += g.label + "  delta=" + rat_str(Rat(g.t, 2)) + "  terms=" +
           std::to_string(g.w.terms.size()) + "\n";
    out += "  " + render(g.w, eng.names()) + "\n";
  }
  return out;
}

std::string render_report_text(const Report& rep) {
  std::string out;
  for (auto& c : rep.checks) {
    out += c.pass ? "[ok]   " : "[FAIL] ";
    out += c.name;
    if (!c.detail.empty()) out += " - " + c.detail;
    out += "\n";
  }
  out += rep.all_pass() ? "all checks passed\n" : "FAILURES present\n";
  return out;
}

}  // namespace susyw
