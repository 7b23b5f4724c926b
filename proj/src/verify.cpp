#include "parind/verify.hpp"

#include <bit>
#include <sstream>

#include "parind/errors.hpp"

namespace parind {

namespace {

struct System {
  std::string type;
  RootSystemPtr rs;
  WeylGroup group;
};

struct Check {
  InvariantResult& result;
  const std::string& type;

  // Records one instance; keeps the first counterexample.
  void operator()(bool ok, const std::function<std::string()>& describe) {
    ++result.checked;
    if (ok || !result.passed) {
      if (!ok) result.passed = false;
      return;
    }
    result.passed = false;
    result.counterexample = type + ": " + describe();
  }
};

// Number of upper sets of the power set of a k-element set.
constexpr std::size_t kUpperSetCounts[] = {2, 3, 6, 20, 168, 7581};

void bruhat_axioms(const System& s, const BruhatComparator& leq, Check check) {
  const auto& els = s.group.elements();
  const auto& w0 = els.back();
  for (const auto& u : els) {
    check(leq(u, u), [&] { return "not reflexive at " + u.to_string(); });
    check(leq(els.front(), u) && leq(u, w0),
          [&] { return u.to_string() + " escapes [e, w0]"; });
    for (const auto& w : els) {
      if (&u == &w) continue;
      bool uw = leq(u, w);
      check(!(uw && leq(w, u)),
            [&] { return "antisymmetry fails for " + u.to_string() + ", " + w.to_string(); });
      check(!uw || u.length() < w.length(), [&] {
        return u.to_string() + " <= " + w.to_string() + " without a length increase";
      });
      if (!uw) continue;
      for (const auto& x : els)
        if (leq(w, x))
          check(leq(u, x), [&] {
            return "transitivity fails for " + u.to_string() + " <= " + w.to_string() +
                   " <= " + x.to_string();
          });
    }
  }
}

void w0_reversal(const System& s, const BruhatComparator& leq, Check check) {
  const auto& els = s.group.elements();
  const auto& w0 = els.back();
  for (const auto& u : els)
    for (const auto& w : els)
      check(leq(u, w) == leq(w * w0, u * w0),
            [&] { return "u=" + u.to_string() + ", w=" + w.to_string(); });
}

void coset_counts(const System& s, Check check) {
  for (SimpleMask Q = 0; Q <= s.rs->full_mask(); ++Q) {
    auto reps = min_coset_reps(s.group, Q);
    std::size_t wq = s.group.parabolic_subgroup(Q).size();
    check(reps.reps.size() * wq == s.group.size(),
          [&] { return "Q=" + s.rs->format_mask(Q) + ": |^QW|*|W_Q| != |W|"; });
  }
}

void double_coset_partition(const System& s, Check check) {
  const auto& g = s.group;
  SimpleMask all = s.rs->full_mask();
  for (SimpleMask I = 0; I <= all; ++I) {
    auto wi = g.parabolic_subgroup(I);
    for (SimpleMask J = 0; J <= all; ++J) {
      auto wj = g.parabolic_subgroup(J);
      std::vector<int> owner(g.size(), -1);
      auto reps = double_coset_reps(g, I, J);
      bool ok = true;
      for (std::size_t r = 0; r < reps.size() && ok; ++r) {
        std::size_t w = g.index_of(reps[r]);
        for (std::size_t a : wi)
          for (std::size_t b : wj) {
            std::size_t x = g.multiply(g.multiply(a, w), b);
            if (owner[x] >= 0 && owner[x] != static_cast<int>(r)) ok = false;
            owner[x] = static_cast<int>(r);
            if (g.element(x).length() < reps[r].length()) ok = false;
          }
      }
      for (int o : owner) ok = ok && o >= 0;
      check(ok, [&] {
        return "W_I\\W/W_J with I=" + s.rs->format_mask(I) + ", J=" + s.rs->format_mask(J);
      });
    }
  }
}

void witnesses(const System& s, Check check) {
  auto sweep = sweep_witnesses(s.group);
  check.result.checked += sweep.pairs * sweep.elements;
  if (sweep.failures) check(false, [&] { return sweep.counterexample; });
}

void constituent_counts(const System& s, Check check) {
  for (const auto& t : all_supercuspidal_triples(s.rs)) {
    if (t.Q != t.P) continue;  // one check per (P, sigma)
    auto cs = constituents(t.P, t.sigma);
    check(cs.size() == std::size_t{1} << std::popcount(t.sigma.delta_sigma()),
          [&] { return "P=" + t.P.to_string() + " trivial_on=" + s.rs->format_mask(t.sigma.trivial_on()); });
  }
}

void lattice_sizes(const System& s, Check check) {
  for (const auto& [P1, t] : all_m1_inductions(s.rs)) {
    auto lat = subrep_lattice(P1, t);
    int k = std::popcount(lat.index_set);
    check(lat.elements.size() == kUpperSetCounts[k] &&
              lat.constituents.size() == std::size_t{1} << k,
          [&, &P1 = P1, &t = t] { return "P1=" + P1.to_string() + " " + format_triple(t); });
  }
}

void irreducibility(const System& s, Check check) {
  for (const auto& [P1, t] : all_m1_inductions(s.rs)) {
    bool irreducible = is_irreducible_induction(P1, t);
    check(irreducible == (subrep_lattice(P1, t).elements.size() == 2),
          [&, &P1 = P1, &t = t] { return "P1=" + P1.to_string() + " " + format_triple(t); });
  }
}

void adjoint_identity(const System& s, Check check) {
  auto G = ParabolicSet::whole(s.rs);
  for (const auto& t : all_supercuspidal_triples(s.rs)) {
    auto l = left_adjoint(G, t);
    auto r = right_adjoint(G, t);
    check(!l.vanishes && *l.result == t && !r.vanishes && *r.result == t,
          [&] { return format_triple(t); });
  }
}

void cuspidality_cross_check(const System& s, Check check) {
  SimpleMask all = s.rs->full_mask();
  for (const auto& t : all_supercuspidal_triples(s.rs)) {
    bool left = true, right = true;
    for (SimpleMask p1 = 0; p1 < all; ++p1) {
      left = left && left_adjoint(ParabolicSet(s.rs, p1), t).vanishes;
      right = right && right_adjoint(ParabolicSet(s.rs, p1), t).vanishes;
    }
    auto c = cuspidality(t);
    check(c.left == left && c.right == right && c.supercuspidal == (left && right),
          [&] { return format_triple(t); });
  }
}

template <class Adjoint>
void transitivity(const System& s, Check check, Adjoint adjoint) {
  SimpleMask all = s.rs->full_mask();
  for (const auto& t : all_supercuspidal_triples(s.rs))
    for (SimpleMask p2 = 0; p2 <= all; ++p2)
      for (SimpleMask p1 = 0; p1 <= p2; ++p1) {
        if (!is_subset(p1, p2)) continue;
        auto direct = adjoint(ParabolicSet(s.rs, p1), t);
        auto outer = adjoint(ParabolicSet(s.rs, p2), t);
        AdjointResult staged;
        if (!outer.vanishes) staged = adjoint(ParabolicSet(s.rs, p1, p2), *outer.result);
        check(direct.vanishes == staged.vanishes && direct.result == staged.result, [&] {
          return format_triple(t) + " via P1=" + s.rs->format_mask(p1) +
                 ", P2=" + s.rs->format_mask(p2);
        });
      }
}

void minimalization(const System& s, Check check) {
  SimpleMask all = s.rs->full_mask();
  for (const auto& t : all_extension_triples(s.rs)) {
    GTriple m = minimize_triple(t);
    bool ok = canonical_triple(t) == canonical_triple(m) && cuspidality(t).left == cuspidality(m).left &&
              cuspidality(t).right == cuspidality(m).right;
    for (SimpleMask p1 = 0; p1 <= all && ok; ++p1) {
      ParabolicSet P1(s.rs, p1);
      auto lt = left_adjoint(P1, t), lm = left_adjoint(P1, m);
      auto rt = right_adjoint(P1, t), rm = right_adjoint(P1, m);
      ok = lt.vanishes == lm.vanishes && lt.result == lm.result && rt.vanishes == rm.vanishes &&
           rt.result == rm.result;
    }
    auto cm = canonical_triple(m);
    auto ct = canonical_triple(t);
    ok = ok && constituents(ct.P, ct.sigma) == constituents(cm.P, cm.sigma);
    check(ok, [&] { return format_triple(t) + " vs " + format_triple(m); });
  }
}

}  // namespace

BruhatComparator flipped_bruhat(int i, int j) {
  return [i, j](const WeylElement& u, const WeylElement& w) {
    if (u.length() == 1 && w.length() == 1 && u.word()[0] == i && w.word()[0] == j) return true;
    return bruhat_leq(u, w);
  };
}

bool VerifyReport::passed() const {
  for (const auto& r : invariants)
    if (!r.passed) return false;
  return true;
}

std::vector<GTriple> all_supercuspidal_triples(const RootSystemPtr& rs) {
  std::vector<GTriple> out;
  SimpleMask all = rs->full_mask();
  for (SimpleMask P : subsets_of(all))
    for (SimpleMask triv : subsets_of(all & ~P)) {
      if (!orthogonal_subsets(*rs, P, triv)) continue;
      ParabolicSet levi(rs, P);
      SigmaDescriptor sigma(levi, triv);
      for (SimpleMask extra : subsets_of(triv))
        out.push_back(GTriple{levi, sigma, ParabolicSet(rs, P | extra)});
    }
  return out;
}

std::vector<std::pair<ParabolicSet, GTriple>> all_m1_inductions(const RootSystemPtr& rs) {
  std::vector<std::pair<ParabolicSet, GTriple>> out;
  SimpleMask all = rs->full_mask();
  for (SimpleMask p1 : subsets_of(all)) {
    ParabolicSet P1(rs, p1);
    for (SimpleMask P : subsets_of(p1))
      for (SimpleMask triv : subsets_of(all & ~P)) {
        if (!orthogonal_subsets(*rs, P, triv)) continue;
        ParabolicSet levi(rs, P, p1);
        SigmaDescriptor sigma(levi, triv);
        for (SimpleMask extra : subsets_of(triv & p1))
          out.emplace_back(P1, GTriple{levi, sigma, ParabolicSet(rs, P | extra, p1)});
      }
  }
  return out;
}

std::vector<GTriple> all_extension_triples(const RootSystemPtr& rs) {
  std::vector<GTriple> out;
  SigmaFlags ext{false, true, true};
  for (const auto& t : all_supercuspidal_triples(rs)) {
    SimpleMask triv = t.sigma.trivial_on();
    SimpleMask absorbable = triv & t.Q.members() & ~t.P.members();
    for (SimpleMask extra : subsets_of(absorbable)) {
      if (extra == 0) continue;
      ParabolicSet bigger(rs, t.P.members() | extra);
      out.push_back(GTriple{bigger, SigmaDescriptor(bigger, triv, ext), t.Q});
    }
  }
  return out;
}

WitnessSweep sweep_witnesses(const WeylGroup& group) {
  const RootSystem& rs = *group.root_system();
  WitnessSweep out;
  out.elements = group.size();
  SimpleMask all = rs.full_mask();
  for (SimpleMask M = 0; M <= all; ++M)
    for (SimpleMask M1 = 0; M1 <= all; ++M1) {
      ++out.pairs;
      auto inside = parabolic_product_members(group, M, M1);
      for (std::size_t id = 0; id < group.size(); ++id) {
        if (inside[id]) continue;
        const auto& w = group.element(id);
        auto beta = unipotent_witness(group, M, M1, w);
        bool ok = beta && rs.is_positive(*beta) && !is_subset(rs.support(*beta), M1);
        if (ok) {
          RootId image = w.apply(*beta);
          ok = !rs.is_positive(image) && !is_subset(rs.support(rs.negate(image)), M);
        }
        if (!ok && out.failures++ == 0)
          out.counterexample = "M=" + rs.format_mask(M) + ", M1=" + rs.format_mask(M1) +
                               ", w=" + w.to_string();
      }
    }
  return out;
}

VerifyReport verify_all(const VerifyOptions& options) {
  VerifyReport report;
  std::vector<System> systems;
  for (const auto& type : options.types) {
    auto rs = build_root_system(CartanDatum::from_type(type));
    if (rs->rank() > options.rank_bound) {
      report.skipped.push_back(type);
      continue;
    }
    systems.push_back(System{type, rs, generate_weyl(rs, options.limits)});
    report.systems.push_back(type);
  }
  BruhatComparator leq = options.bruhat ? options.bruhat : BruhatComparator(bruhat_leq);

  auto run = [&](const std::string& name, auto body) {
    InvariantResult r;
    r.name = name;
    for (const auto& s : systems) body(s, Check{r, s.type});
    report.invariants.push_back(std::move(r));
  };
  run("bruhat-order-axioms", [&](const System& s, Check c) { bruhat_axioms(s, leq, c); });
  run("bruhat-w0-reversal", [&](const System& s, Check c) { w0_reversal(s, leq, c); });
  run("coset-representative-count", coset_counts);
  run("double-coset-partition", double_coset_partition);
  run("unipotent-witnesses", witnesses);
  run("constituent-count", constituent_counts);
  run("lattice-size", lattice_sizes);
  run("irreducibility-criterion", irreducibility);
  run("adjoint-identity", adjoint_identity);
  run("cuspidality-cross-check", cuspidality_cross_check);
  run("jacquet-transitivity-left", [](const System& s, Check c) {
    transitivity(s, c, [](const ParabolicSet& P1, const GTriple& t) { return left_adjoint(P1, t); });
  });
  run("jacquet-transitivity-right", [](const System& s, Check c) {
    transitivity(s, c, [](const ParabolicSet& P1, const GTriple& t) { return right_adjoint(P1, t); });
  });
  run("minimalization-invariance", minimalization);
  return report;
}

}  // namespace parind
