#include "src/cli/tasks.hpp"

#include <bit>
#include <sstream>

#include "parind/errors.hpp"

namespace parind::cli {

namespace {

using nlohmann::ordered_json;

struct Input {
  const Problem& problem;
  RootSystemPtr rs;

  SimpleMask set(const std::string& field, SimpleMask fallback = 0) const {
    auto it = problem.sets.find(field);
    if (it == problem.sets.end()) return fallback;
    try {
      return rs->parse_labels(it->second);
    } catch (const Error& e) {
      throw Error(e.code(), "$." + field + ": " + e.detail());
    }
  }

  SigmaFlags flags() const {
    SigmaFlags f;
    auto get = [&](const char* name, bool& slot) {
      if (auto it = problem.flags.find(name); it != problem.flags.end()) slot = it->second;
    };
    get("supercuspidal", f.supercuspidal);
    get("irreducible_admissible", f.irreducible_admissible);
    get("core_supercuspidal", f.core_supercuspidal);
    return f;
  }

  // Parabolic of the Levi `ambient`; out-of-range members reported with `code`.
  ParabolicSet in_levi(const std::string& field, SimpleMask members, SimpleMask ambient,
                       ErrorCode code) const {
    if (!is_subset(members, ambient))
      throw Error(code, field + " = " + rs->format_mask(members) + " does not lie in " +
                            rs->format_mask(ambient));
    return ParabolicSet(rs, members, ambient);
  }

  // (P, sigma, Q) from the payload, living in the Levi `ambient`.
  GTriple triple(SimpleMask ambient, ErrorCode code) const {
    SimpleMask P = set("P");
    auto levi = in_levi("P", P, ambient, code);
    SigmaDescriptor sigma(levi, set("trivial_on"), flags());
    return GTriple{levi, sigma, in_levi("Q", set("Q", P), ambient, code)};
  }
};

ordered_json labels(const RootSystem& rs, SimpleMask m) { return rs.labels_of(m); }

std::string fmt(const RootSystem& rs, SimpleMask m) { return rs.format_mask(m); }

ordered_json system_json(const Problem& p, const RootSystem& rs) {
  ordered_json j;
  if (p.cartan && p.cartan->type) j["type"] = *p.cartan->type;
  j["rank"] = rs.rank();
  j["labels"] = rs.cartan().labels;
  j["matrix"] = rs.cartan().matrix;
  return j;
}

ordered_json triple_json(const GTriple& t) {
  const RootSystem& rs = *t.P.root_system();
  ordered_json sigma;
  sigma["trivial_on"] = labels(rs, t.sigma.trivial_on());
  sigma["delta_sigma"] = labels(rs, t.sigma.delta_sigma());
  sigma["supercuspidal"] = t.sigma.flags().supercuspidal;
  sigma["irreducible_admissible"] = t.sigma.flags().irreducible_admissible;
  sigma["core_supercuspidal"] = t.sigma.flags().core_supercuspidal;
  ordered_json j;
  j["name"] = format_triple(t);
  j["ambient"] = labels(rs, t.P.ambient());
  j["P"] = labels(rs, t.P.members());
  j["sigma"] = sigma;
  j["Q"] = labels(rs, t.Q.members());
  j["P_sigma"] = labels(rs, p_sigma(t.sigma).members());
  return j;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Report constituents_task(const Input& in) {
  const RootSystem& rs = *in.rs;
  ParabolicSet P(in.rs, in.set("P"));
  SigmaDescriptor sigma(P, in.set("trivial_on"), in.flags());
  auto cs = constituents(P, sigma);
  Report r;
  r.json["P"] = labels(rs, P.members());
  r.json["trivial_on"] = labels(rs, sigma.trivial_on());
  r.json["delta_sigma"] = labels(rs, sigma.delta_sigma());
  r.json["P_sigma"] = labels(rs, p_sigma(sigma).members());
  r.json["count"] = cs.size();
  r.json["constituents"] = ordered_json::array();
  std::ostringstream text;
  text << "Ind_P^G σ with P = " << P.to_string() << ", Δ_σ = " << fmt(rs, sigma.delta_sigma())
       << ", P(σ) = " << p_sigma(sigma).to_string() << "\n";
  text << cs.size() << " constituent" << (cs.size() == 1 ? "" : "s") << ", each of multiplicity one:\n";
  for (const auto& t : cs) {
    r.json["constituents"].push_back(triple_json(t));
    text << "  " << format_triple(t) << "\n";
  }
  r.text = text.str();
  return r;
}

std::string element_label(const SubrepLattice& lat, const LatticeElement& e) {
  if (e.family == 0) return "0";
  const RootSystem& rs = *lat.induced_from.root_system();
  std::string out;
  for (std::size_t g : e.generators) {
    if (!out.empty()) out += " ";
    out += rs.format_mask(lat.constituents[g].marker);
  }
  return out;
}

std::string lattice_dot(const SubrepLattice& lat, const std::string& title) {
  std::ostringstream dot;
  std::size_t socle_node = 0;
  for (std::size_t i = 0; i < lat.elements.size(); ++i)
    if (lat.elements[i].size() == 1) socle_node = i;
  dot << "digraph subrepresentations {\n";
  dot << "  label=\"" << title << "\";\n";
  dot << "  rankdir=BT;\n";
  dot << "  node [shape=box, fontname=\"Helvetica\"];\n";
  for (std::size_t i = 0; i < lat.elements.size(); ++i) {
    const auto& e = lat.elements[i];
    dot << "  e" << i << " [label=\"" << element_label(lat, e) << "\"";
    if (i == lat.whole() && lat.whole() != lat.zero())
      dot << ", style=filled, fillcolor=\"#f4c7a1\", xlabel=\"cosocle "
          << lat.constituent_name(lat.cosocle()) << "\"";
    if (i == socle_node && i != lat.whole())
      dot << ", style=filled, fillcolor=\"#a9cce3\", xlabel=\"socle "
          << lat.constituent_name(lat.socle()) << "\"";
    if (i == socle_node && i == lat.whole())
      dot << ", style=filled, fillcolor=\"#c5e1a5\", xlabel=\"irreducible\"";
    dot << "];\n";
  }
  for (const auto& [lo, hi] : lat.hasse_edges) dot << "  e" << lo << " -> e" << hi << ";\n";
  dot << "}\n";
  return dot.str();
}

void lattice_body(const SubrepLattice& lat, Report& r, std::ostringstream& text) {
  const RootSystem& rs = *lat.induced_from.root_system();
  r.json["index_set"] = labels(rs, lat.index_set);
  r.json["base_Q"] = labels(rs, lat.base);
  r.json["irreducible"] = lat.elements.size() == 2;
  r.json["constituents"] = ordered_json::array();
  text << "index set: " << fmt(rs, lat.index_set) << "\n";
  text << lat.constituents.size() << " constituent" << (lat.constituents.size() == 1 ? "" : "s")
       << ":\n";
  for (std::size_t i = 0; i < lat.constituents.size(); ++i) {
    const auto& c = lat.constituents[i];
    ordered_json cj;
    cj["id"] = i;
    cj["name"] = lat.constituent_name(i);
    cj["marker"] = labels(rs, c.marker);
    cj["triple"] = triple_json(c.triple);
    r.json["constituents"].push_back(cj);
    text << "  c" << i << " marker " << fmt(rs, c.marker) << "  " << lat.constituent_name(i);
    if (i == lat.socle()) text << "  [socle]";
    if (i == lat.cosocle()) text << "  [cosocle]";
    text << "\n";
  }
  r.json["elements"] = ordered_json::array();
  text << lat.elements.size() << " subrepresentations (upper sets):\n";
  for (std::size_t i = 0; i < lat.elements.size(); ++i) {
    const auto& e = lat.elements[i];
    auto members = lat.members(e);
    ordered_json ej;
    ej["id"] = i;
    ej["generators"] = e.generators;
    ej["members"] = members;
    r.json["elements"].push_back(ej);
    text << "  e" << i << " = ";
    if (members.empty()) {
      text << "0";
    } else {
      text << "<";
      for (std::size_t k = 0; k < e.generators.size(); ++k)
        text << (k ? "," : "") << "c" << e.generators[k];
      text << "> = {";
      for (std::size_t k = 0; k < members.size(); ++k) text << (k ? "," : "") << "c" << members[k];
      text << "}";
    }
    text << "\n";
  }
  r.json["hasse_edges"] = ordered_json::array();
  text << "covering relations:";
  for (const auto& [lo, hi] : lat.hasse_edges) {
    r.json["hasse_edges"].push_back({lo, hi});
    text << " e" << lo << "<e" << hi;
  }
  text << "\n";
  r.json["socle"] = lat.socle();
  r.json["cosocle"] = lat.cosocle();
  text << "socle: c" << lat.socle() << ", cosocle: c" << lat.cosocle() << "\n";
  text << "irreducible: " << yes_no(lat.elements.size() == 2) << "\n";
}

Report lattice_task(const Input& in, const RunContext& ctx) {
  const RootSystem& rs = *in.rs;
  ParabolicSet P1(in.rs, in.set("P1"));
  GTriple t = in.triple(P1.members(), ErrorCode::InvalidM1Triple);
  auto lat = subrep_lattice(P1, t, ctx.lattice);
  Report r;
  r.json["P1"] = labels(rs, P1.members());
  r.json["triple"] = triple_json(t);
  std::ostringstream text;
  std::string title = "Ind_" + P1.to_string() + "^G " + format_triple(t);
  text << "subrepresentation lattice of " << title << "\n";
  lattice_body(lat, r, text);
  r.text = text.str();
  r.dot = lattice_dot(lat, title);
  return r;
}

Report steinberg_task(const Input& in, const RunContext& ctx) {
  const RootSystem& rs = *in.rs;
  ParabolicSet P(in.rs, in.set("P"));
  ParabolicSet Q(in.rs, in.set("Q", P.members()));
  auto lat = steinberg_lattice(P, Q, ctx.lattice);
  Report r;
  r.json["P"] = labels(rs, P.members());
  r.json["Q"] = labels(rs, Q.members());
  std::ostringstream text;
  std::string title = "Ind_" + P.to_string() + "^G St_" + Q.to_string() + "^P";
  text << "subrepresentation lattice of " << title << "\n";
  lattice_body(lat, r, text);
  r.text = text.str();
  r.dot = lattice_dot(lat, title);
  return r;
}

Report irreducible_task(const Input& in) {
  const RootSystem& rs = *in.rs;
  ParabolicSet P1(in.rs, in.set("P1"));
  GTriple t = in.triple(P1.members(), ErrorCode::InvalidM1Triple);
  bool irreducible = is_irreducible_induction(P1, t);
  SimpleMask upper = p_sigma(t.sigma.retagged(rs.full_mask())).members();
  Report r;
  r.json["P1"] = labels(rs, P1.members());
  r.json["triple"] = triple_json(t);
  r.json["P_sigma"] = labels(rs, upper);
  r.json["irreducible"] = irreducible;
  std::ostringstream text;
  text << "Ind_" << P1.to_string() << "^G " << format_triple(t) << "\n";
  text << "P(σ) = " << fmt(rs, upper) << (irreducible ? " lies" : " does not lie") << " in P1 = "
       << P1.to_string() << "\n";
  text << "irreducible: " << yes_no(irreducible) << "\n";
  r.text = text.str();
  return r;
}

Report adjoint_task(const Input& in, bool left) {
  const RootSystem& rs = *in.rs;
  ParabolicSet P1(in.rs, in.set("P1"));
  GTriple t = in.triple(rs.full_mask(), ErrorCode::QOutOfRange);
  auto res = left ? left_adjoint(P1, t) : right_adjoint(P1, t);
  Report r;
  r.json["P1"] = labels(rs, P1.members());
  r.json["triple"] = triple_json(t);
  r.json["vanishes"] = res.vanishes;
  r.json["result"] = res.result ? triple_json(*res.result) : ordered_json(nullptr);
  std::ostringstream text;
  text << (left ? "L" : "R") << "_" << P1.to_string() << " " << format_triple(t) << " = "
       << (res.result ? format_triple(*res.result) : "0") << "\n";
  r.text = text.str();
  return r;
}

Report cuspidal_task(const Input& in) {
  const RootSystem& rs = *in.rs;
  GTriple t = in.triple(rs.full_mask(), ErrorCode::QOutOfRange);
  auto c = cuspidality(t);
  Report r;
  r.json["triple"] = triple_json(t);
  r.json["left_cuspidal"] = c.left;
  r.json["right_cuspidal"] = c.right;
  r.json["supercuspidal"] = c.supercuspidal;
  r.json["label"] = c.label ? ordered_json(*c.label) : ordered_json(nullptr);
  std::ostringstream text;
  text << format_triple(t);
  if (c.label) text << " = " << *c.label;
  text << "\nleft cuspidal: " << yes_no(c.left) << "\nright cuspidal: " << yes_no(c.right)
       << "\nsupercuspidal: " << yes_no(c.supercuspidal) << "\n";
  r.text = text.str();
  return r;
}

Report twist_task(const Input& in) {
  const RootSystem& rs = *in.rs;
  ParabolicSet P1(in.rs, in.set("P1"));
  GTriple t = in.triple(P1.members(), ErrorCode::InvalidM1Triple);
  SimpleMask declared = in.set("declared_nr");
  auto rep = unramified_twist_conditions(P1, t, declared);
  std::size_t n = rep.conditions.size();
  std::string locus = n == 0 ? "empty"
                             : "union of " + std::to_string(n) + " hypersurface" +
                                   (n == 1 ? "" : "s");
  Report r;
  r.json["P1"] = labels(rs, P1.members());
  r.json["triple"] = triple_json(t);
  r.json["declared_nr"] = labels(rs, declared);
  r.json["candidate_roots"] = labels(rs, rep.candidate);
  r.json["active_roots"] = labels(rs, rep.active);
  r.json["ignored_roots"] = labels(rs, rep.ignored);
  r.json["conditions"] = rep.conditions;
  r.json["reducibility_locus"] = locus;
  r.json["irreducible_for_every_twist"] = rep.always_irreducible;
  std::ostringstream text;
  text << "Ind_" << P1.to_string() << "^G (χ ⊗ " << format_triple(t) << ")\n";
  text << "candidate roots: " << fmt(rs, rep.candidate) << "\n";
  text << "active roots: " << fmt(rs, rep.active) << "\n";
  if (rep.ignored) text << "ignored (not candidates): " << fmt(rs, rep.ignored) << "\n";
  if (n == 0) {
    text << "irreducible for every unramified χ\n";
  } else {
    text << "irreducible iff all of:\n";
    for (const auto& c : rep.conditions) text << "  " << c << "\n";
  }
  text << "reducibility locus: " << locus << "\n";
  r.text = text.str();
  return r;
}

Report geometric_task(const Input& in, const RunContext& ctx) {
  const RootSystem& rs = *in.rs;
  ParabolicSet P(in.rs, in.set("P"));
  ParabolicSet P1(in.rs, in.set("P1"));
  auto group = generate_weyl(in.rs, ctx.weyl);
  auto rep = geometric_lemma_report(group, P, P1);
  Report r;
  r.json["P"] = labels(rs, P.members());
  r.json["P1"] = labels(rs, P1.members());
  r.json["cells"] = ordered_json::array();
  std::ostringstream text;
  text << "L_" << P1.to_string() << " ∘ Ind_" << P.to_string() << ": " << rep.cells.size()
       << " double coset" << (rep.cells.size() == 1 ? "" : "s") << " in W_M\\W/W_M1\n";
  for (const auto& c : rep.cells) {
    ordered_json cj;
    cj["w"] = c.w.to_string();
    cj["length"] = c.w.length();
    cj["survives"] = c.identity;
    if (c.witness) {
      cj["witness"] = rs.format_root(*c.witness);
      cj["witness_image"] = rs.format_root(c.w.apply(*c.witness));
    } else {
      cj["witness"] = nullptr;
      cj["witness_image"] = nullptr;
    }
    r.json["cells"].push_back(cj);
    text << "  " << c.w.to_string() << ": ";
    if (c.identity)
      text << "survives, giving Ind_{P∩M1}^{M1} L_{P1∩M}^M\n";
    else if (c.witness)
      text << "vanishes, witness " << rs.format_root(*c.witness) << " -> "
           << rs.format_root(c.w.apply(*c.witness)) << "\n";
    else
      text << "NO WITNESS\n";
  }
  r.json["all_vanish_off_identity"] = rep.all_vanish_off_identity;
  r.text = text.str();
  if (!rep.all_vanish_off_identity) r.exit_code = 1;
  return r;
}

ordered_json words(const std::vector<WeylElement>& els) {
  ordered_json j = ordered_json::array();
  for (const auto& w : els) j.push_back(w.to_string());
  return j;
}

std::string word_line(const std::vector<WeylElement>& els) {
  std::string out;
  for (const auto& w : els) out += (out.empty() ? "" : " ") + w.to_string();
  return out;
}

Report coset_task(const Input& in, const RunContext& ctx) {
  const RootSystem& rs = *in.rs;
  SimpleMask Q = in.set("Q");
  auto group = generate_weyl(in.rs, ctx.weyl);
  auto reps = min_coset_reps(group, Q);
  Report r;
  r.json["Q"] = labels(rs, Q);
  r.json["group_order"] = group.size();
  r.json["parabolic_order"] = group.parabolic_subgroup(Q).size();
  r.json["count"] = reps.reps.size();
  r.json["reps"] = words(reps.reps);
  std::ostringstream text;
  text << "^QW for Q = " << fmt(rs, Q) << ": " << reps.reps.size() << " representatives (|W| = "
       << group.size() << ", |W_Q| = " << group.parabolic_subgroup(Q).size() << ")\n";
  text << word_line(reps.reps) << "\n";
  r.text = text.str();
  return r;
}

Report double_coset_task(const Input& in, const RunContext& ctx) {
  const RootSystem& rs = *in.rs;
  SimpleMask I = in.set("I"), J = in.set("J");
  auto group = generate_weyl(in.rs, ctx.weyl);
  auto reps = double_coset_reps(group, I, J);
  Report r;
  r.json["I"] = labels(rs, I);
  r.json["J"] = labels(rs, J);
  r.json["count"] = reps.size();
  r.json["reps"] = words(reps);
  std::ostringstream text;
  text << "W_I\\W/W_J for I = " << fmt(rs, I) << ", J = " << fmt(rs, J) << ": " << reps.size()
       << " double cosets, longest first\n";
  text << word_line(reps) << "\n";
  r.text = text.str();
  return r;
}

Report lemma_task(const Input& in, const RunContext& ctx) {
  auto group = generate_weyl(in.rs, ctx.weyl);
  auto sweep = sweep_witnesses(group);
  Report r;
  r.json["elements"] = sweep.elements;
  r.json["pairs"] = sweep.pairs;
  r.json["failures"] = sweep.failures;
  r.json["counterexample"] =
      sweep.failures ? ordered_json(sweep.counterexample) : ordered_json(nullptr);
  std::ostringstream text;
  text << "checked " << sweep.elements << " elements × " << sweep.pairs
       << " (Δ_M,Δ_M1) pairs: ";
  if (sweep.failures == 0)
    text << "all witnesses found\n";
  else
    text << sweep.failures << " missing, first at " << sweep.counterexample << "\n";
  r.text = text.str();
  r.exit_code = sweep.failures ? 1 : 0;
  return r;
}

Report verify_task(const Problem& p, const RunContext& ctx) {
  VerifyOptions opts;
  if (p.types)
    opts.types = *p.types;
  else if (p.cartan)
    opts.types = {*p.cartan->type};
  if (p.rank_bound) opts.rank_bound = *p.rank_bound;
  opts.bruhat = ctx.bruhat;
  opts.limits = ctx.weyl;
  auto rep = verify_all(opts);
  Report r;
  r.json["systems"] = rep.systems;
  r.json["skipped"] = rep.skipped;
  r.json["rank_bound"] = opts.rank_bound;
  r.json["invariants"] = ordered_json::array();
  std::ostringstream text;
  if (rep.systems.empty()) {
    r.json["warning"] = "nothing checked";
    text << "warning: nothing checked\n";
  } else {
    text << "systems:";
    for (const auto& s : rep.systems) text << " " << s;
    text << "\n";
  }
  if (!rep.skipped.empty()) {
    text << "skipped (rank above " << opts.rank_bound << "):";
    for (const auto& s : rep.skipped) text << " " << s;
    text << "\n";
  }
  std::size_t failed = 0;
  for (const auto& inv : rep.invariants) {
    ordered_json ij;
    ij["name"] = inv.name;
    ij["passed"] = inv.passed;
    ij["checked"] = inv.checked;
    ij["counterexample"] = inv.passed ? ordered_json(nullptr) : ordered_json(inv.counterexample);
    r.json["invariants"].push_back(ij);
    if (rep.systems.empty()) continue;
    text << (inv.passed ? "PASS " : "FAIL ") << inv.name << " (" << inv.checked << " checks)";
    if (!inv.passed) {
      ++failed;
      text << ": " << inv.counterexample;
    }
    text << "\n";
  }
  r.json["passed"] = rep.passed();
  if (!rep.systems.empty())
    text << (failed == 0 ? "all invariants hold\n"
                         : std::to_string(failed) + " invariant(s) failed\n");
  r.text = text.str();
  r.exit_code = rep.passed() ? 0 : 1;
  return r;
}

}  // namespace

Report run_task(const Problem& p, const RunContext& ctx) {
  const std::string& task = *p.task;
  Report r;
  if (task == "verify:all") {
    r = verify_task(p, ctx);
  } else {
    auto rs = build_root_system(resolve_cartan(*p.cartan));
    Input in{p, rs};
    if (task == "constituents") r = constituents_task(in);
    else if (task == "lattice") r = lattice_task(in, ctx);
    else if (task == "steinberg-lattice") r = steinberg_task(in, ctx);
    else if (task == "irreducible") r = irreducible_task(in);
    else if (task == "adjoint-left") r = adjoint_task(in, true);
    else if (task == "adjoint-right") r = adjoint_task(in, false);
    else if (task == "cuspidal") r = cuspidal_task(in);
    else if (task == "twist") r = twist_task(in);
    else if (task == "geometric-lemma") r = geometric_task(in, ctx);
    else if (task == "weyl:coset-reps") r = coset_task(in, ctx);
    else if (task == "weyl:double-cosets") r = double_coset_task(in, ctx);
    else if (task == "verify:lemma55") r = lemma_task(in, ctx);
    r.json = ordered_json{{"task", task}, {"system", system_json(p, *rs)}, {"result", r.json}};
    return r;
  }
  r.json = ordered_json{{"task", task}, {"result", r.json}};
  return r;
}

}  // namespace parind::cli
