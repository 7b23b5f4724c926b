#include "parind/calculus.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

#include "parind/errors.hpp"

namespace parind {

namespace {

// Positions of the set bits of `index_set`, low to high.
std::vector<int> bit_positions(SimpleMask index_set) {
  std::vector<int> out;
  for (int i = 0; i < kMaxRank; ++i)
    if (index_set >> i & 1) out.push_back(i);
  return out;
}

SimpleMask expand(unsigned local, const std::vector<int>& positions) {
  SimpleMask m = 0;
  for (std::size_t b = 0; b < positions.size(); ++b)
    if (local >> b & 1) m |= SimpleMask{1} << positions[b];
  return m;
}

// Members S of the family all of whose one-step supersets are members.
bool can_add(std::uint64_t family, unsigned s, int k) {
  for (int i = 0; i < k; ++i)
    if (!(s >> i & 1) && !(family >> (s | 1u << i) & 1)) return false;
  return true;
}

SubrepLattice build_lattice(LatticeKind kind, const ParabolicSet& P1, SimpleMask index_set,
                            SimpleMask base, const LatticeLimits& limits,
                            const auto& make_constituent) {
  int k = std::popcount(index_set);
  int cap = std::min(limits.max_index_set, kMaxLatticeIndexSet);
  if (k > cap)
    throw Error(ErrorCode::LatticeTooLarge,
                "index set " + P1.root_system()->format_mask(index_set) + " has " +
                    std::to_string(k) + " roots, limit is " + std::to_string(cap));

  SubrepLattice lat{kind, P1, index_set, base, {}, {}, {}};
  auto positions = bit_positions(index_set);
  const unsigned n_subsets = 1u << k;

  std::vector<unsigned> locals(n_subsets);
  std::iota(locals.begin(), locals.end(), 0u);
  std::stable_sort(locals.begin(), locals.end(), [&](unsigned a, unsigned b) {
    return subset_order_less(expand(a, positions), expand(b, positions));
  });
  std::vector<std::size_t> id_of_local(n_subsets);
  for (std::size_t id = 0; id < locals.size(); ++id) {
    id_of_local[locals[id]] = id;
    SimpleMask marker = expand(locals[id], positions);
    lat.constituents.push_back(LatticeConstituent{make_constituent(base | marker), marker});
  }

  auto families = boolean_upper_sets(k);
  std::unordered_map<std::uint64_t, std::size_t> index_of;
  for (std::uint64_t f : families) {
    LatticeElement e;
    e.family = f;
    for (unsigned s = 0; s < n_subsets; ++s) {
      if (!(f >> s & 1)) continue;
      bool minimal = true;
      for (int i = 0; i < k && minimal; ++i)
        if ((s >> i & 1) && (f >> (s & ~(1u << i)) & 1)) minimal = false;
      if (minimal) e.generators.push_back(id_of_local[s]);
    }
    std::sort(e.generators.begin(), e.generators.end());
    index_of.emplace(f, lat.elements.size());
    lat.elements.push_back(std::move(e));
  }

  for (std::size_t lo = 0; lo < lat.elements.size(); ++lo) {
    std::uint64_t f = lat.elements[lo].family;
    for (unsigned s = 0; s < n_subsets; ++s)
      if (!(f >> s & 1) && can_add(f, s, k))
        lat.hasse_edges.emplace_back(lo, index_of.at(f | std::uint64_t{1} << s));
  }
  std::sort(lat.hasse_edges.begin(), lat.hasse_edges.end());
  return lat;
}

// Validates a triple handed over as living in M1 and reduces it to its
// supercuspidal-support form; every failure is an InvalidM1Triple.
GTriple canonical_m1_triple(const ParabolicSet& P1, const GTriple& t) {
  const RootSystem& rs = *P1.root_system();
  if (t.P.root_system() != P1.root_system() || t.P.ambient() != P1.members())
    throw Error(ErrorCode::InvalidM1Triple,
                "triple lives in " + rs.format_mask(t.P.ambient()) + ", expected M1 = " +
                    P1.to_string());
  try {
    return canonical_triple(t);
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidM1Triple, e.what());
  }
}

ParabolicSet g_level_p_sigma(const ParabolicSet& P1, const GTriple& t) {
  return p_sigma(t.sigma.retagged(P1.ambient()));
}

GTriple restrict_to(const ParabolicSet& P1, const GTriple& t) {
  SimpleMask m1 = P1.members();
  return GTriple{t.P.retagged(m1), t.sigma.retagged(m1),
                 ParabolicSet(t.Q.root_system(), t.Q.members() & m1, m1)};
}

}  // namespace

GTriple canonical_triple(const GTriple& t) {
  validate_triple(t);
  if (t.sigma.supercuspidal()) return t;
  if (t.sigma.flags().core_supercuspidal) return minimize_triple(t);
  throw Error(ErrorCode::NotSupercuspidal,
              "sigma on " + t.P.to_string() + " is not supercuspidal");
}

std::vector<GTriple> constituents(const ParabolicSet& P, const SigmaDescriptor& sigma) {
  require_same_ambient(P, sigma.levi());
  if (P.members() != sigma.levi().members())
    throw Error(ErrorCode::InvalidDescriptor, "sigma does not live on " + P.to_string());
  if (!sigma.supercuspidal())
    throw Error(ErrorCode::NotSupercuspidal, "sigma on " + P.to_string() + " is not supercuspidal");
  std::vector<SimpleMask> qs;
  for (SimpleMask s : subsets_of(sigma.delta_sigma())) qs.push_back(P.members() | s);
  std::sort(qs.begin(), qs.end(), subset_order_less);
  std::vector<GTriple> out;
  for (SimpleMask q : qs)
    out.push_back(GTriple{P, sigma, ParabolicSet(P.root_system(), q, P.ambient())});
  return out;
}

std::size_t LatticeElement::size() const { return std::popcount(family); }

std::size_t SubrepLattice::socle() const {
  for (std::size_t i = 0; i < constituents.size(); ++i)
    if (constituents[i].marker == index_set) return i;
  return 0;
}

std::size_t SubrepLattice::cosocle() const {
  for (std::size_t i = 0; i < constituents.size(); ++i)
    if (constituents[i].marker == 0) return i;
  return 0;
}

std::vector<std::size_t> SubrepLattice::members(const LatticeElement& e) const {
  auto positions = bit_positions(index_set);
  std::vector<std::size_t> out;
  for (std::size_t id = 0; id < constituents.size(); ++id) {
    unsigned local = 0;
    for (std::size_t b = 0; b < positions.size(); ++b)
      if (constituents[id].marker >> positions[b] & 1) local |= 1u << b;
    if (e.family >> local & 1) out.push_back(id);
  }
  return out;
}

std::string SubrepLattice::constituent_name(std::size_t id) const {
  const GTriple& t = constituents.at(id).triple;
  if (kind == LatticeKind::Steinberg) return "St_" + t.Q.to_string();
  return format_triple(t);
}

SubrepLattice subrep_lattice(const ParabolicSet& P1, const GTriple& m1_triple,
                             LatticeLimits limits) {
  GTriple t = canonical_m1_triple(P1, m1_triple);
  SimpleMask g = P1.ambient();
  ParabolicSet upper = g_level_p_sigma(P1, t);
  SimpleMask index_set = upper.members() & g & ~P1.members();
  ParabolicSet P = t.P.retagged(g);
  SigmaDescriptor sigma = t.sigma.retagged(g);
  return build_lattice(LatticeKind::Induced, P1, index_set, t.Q.members(), limits,
                       [&](SimpleMask q) {
                         return GTriple{P, sigma, ParabolicSet(P.root_system(), q, g)};
                       });
}

SubrepLattice steinberg_lattice(const ParabolicSet& P, const ParabolicSet& Q,
                                LatticeLimits limits) {
  require_same_ambient(P, Q);
  if (!Q.is_subset_of(P))
    throw Error(ErrorCode::InvalidNesting,
                "Q = " + Q.to_string() + " is not contained in P = " + P.to_string());
  SimpleMask g = P.ambient();
  ParabolicSet borel(P.root_system(), 0, g);
  SigmaDescriptor one = SigmaDescriptor::trivial_character(borel);
  return build_lattice(LatticeKind::Steinberg, P, g & ~P.members(), Q.members(), limits,
                       [&](SimpleMask q) {
                         return GTriple{borel, one, ParabolicSet(P.root_system(), q, g)};
                       });
}

SocleCosocle socle_cosocle(const SubrepLattice& lattice) {
  return SocleCosocle{lattice.constituents.at(lattice.socle()),
                      lattice.constituents.at(lattice.cosocle())};
}

bool is_irreducible_induction(const ParabolicSet& P1, const GTriple& m1_triple) {
  GTriple t = canonical_m1_triple(P1, m1_triple);
  return is_subset(g_level_p_sigma(P1, t).members(), P1.members());
}

AdjointResult left_adjoint(const ParabolicSet& P1, const GTriple& t) {
  GTriple c = canonical_triple(t);
  require_same_ambient(P1, c.P);
  ParabolicSet upper = p_sigma(c.sigma);
  bool nonzero = c.P.is_subset_of(P1) &&
                 is_subset(upper.members(), P1.members() | c.Q.members());
  if (!nonzero) return {};
  return AdjointResult{false, restrict_to(P1, c)};
}

AdjointResult right_adjoint(const ParabolicSet& P1, const GTriple& t) {
  GTriple c = canonical_triple(t);
  require_same_ambient(P1, c.P);
  if (!c.Q.is_subset_of(P1)) return {};
  return AdjointResult{false, restrict_to(P1, c)};
}

Cuspidality cuspidality(const GTriple& t) {
  GTriple c = canonical_triple(t);
  bool extends_to_whole = p_sigma(c.sigma).is_whole();
  Cuspidality out;
  out.left = c.Q == c.P && extends_to_whole;
  out.right = c.Q.is_whole() && extends_to_whole;
  out.supercuspidal = out.left && out.right;
  if (out.right)
    out.label = "e(σ)";
  else if (out.left)
    out.label = "e(σ)⊗St";
  return out;
}

TwistReport unramified_twist_conditions(const ParabolicSet& P1, const GTriple& m1_triple,
                                        SimpleMask declared) {
  GTriple t = canonical_m1_triple(P1, m1_triple);
  const RootSystem& rs = *P1.root_system();
  if (!is_subset(declared, rs.full_mask()))
    throw Error(ErrorCode::UnknownLabel, "declared_nr mentions roots outside Delta");
  TwistReport out;
  SimpleMask outside = P1.ambient() & ~P1.members();
  for (int a = 0; a < rs.rank(); ++a) {
    SimpleMask bit = SimpleMask{1} << a;
    if ((outside & bit) && orthogonal_subsets(rs, bit, t.P.members())) out.candidate |= bit;
  }
  out.active = out.candidate & declared;
  out.ignored = declared & ~out.candidate;
  for (int a = 0; a < rs.rank(); ++a)
    if (out.active >> a & 1) {
      const std::string& l = rs.label(a);
      out.conditions.push_back("χ(a_" + l + ") ≠ χ_" + l + "(a_" + l + ")");
    }
  out.always_irreducible = out.active == 0;
  out.generically_irreducible = true;
  return out;
}

GeometricLemmaReport geometric_lemma_report(const WeylGroup& group, const ParabolicSet& P,
                                            const ParabolicSet& P1) {
  require_same_ambient(P, P1);
  GeometricLemmaReport out;
  out.M = P.members();
  out.M1 = P1.members();
  for (const WeylElement& w : double_coset_reps(group, out.M, out.M1)) {
    GeometricCell cell{w, w.is_identity(), std::nullopt};
    if (!cell.identity) {
      cell.witness = unipotent_witness(group, out.M, out.M1, w);
      if (!cell.witness) out.all_vanish_off_identity = false;
    }
    out.cells.push_back(std::move(cell));
  }
  return out;
}

std::vector<std::uint64_t> boolean_upper_sets(int k) {
  if (k < 0 || k > kMaxLatticeIndexSet)
    throw Error(ErrorCode::LatticeTooLarge, "upper sets are only enumerated for k <= " +
                                                std::to_string(kMaxLatticeIndexSet));
  const unsigned n = 1u << k;
  std::vector<unsigned> order(n);
  std::iota(order.begin(), order.end(), 0u);
  // Supersets before subsets, so membership of every superset is decided first.
  std::stable_sort(order.begin(), order.end(), [](unsigned a, unsigned b) {
    return std::popcount(a) > std::popcount(b);
  });
  std::vector<std::uint64_t> out;
  std::vector<std::pair<std::size_t, std::uint64_t>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [idx, family] = stack.back();
    stack.pop_back();
    if (idx == n) {
      out.push_back(family);
      continue;
    }
    unsigned s = order[idx];
    stack.emplace_back(idx + 1, family);
    if (can_add(family, s, k)) stack.emplace_back(idx + 1, family | std::uint64_t{1} << s);
  }
  std::sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

}  // namespace parind
