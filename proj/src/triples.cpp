#include "parind/triples.hpp"

#include <bit>

#include "parind/errors.hpp"

namespace parind {

namespace {

int lowest(SimpleMask m) { return std::countr_zero(m); }

}  // namespace

SigmaDescriptor::SigmaDescriptor(ParabolicSet levi, SimpleMask trivial_on, SigmaFlags flags)
    : levi_(std::move(levi)), trivial_on_(trivial_on), flags_(flags) {
  const RootSystem& rs = *levi_.root_system();
  if (!is_subset(trivial_on_, rs.full_mask()))
    throw Error(ErrorCode::InvalidDescriptor, "trivial_on mentions roots outside Delta");
  if (flags_.supercuspidal && !flags_.irreducible_admissible)
    throw Error(ErrorCode::InvalidDescriptor, "supercuspidal requires irreducible admissible");
  if (flags_.core_supercuspidal && !flags_.irreducible_admissible)
    throw Error(ErrorCode::InvalidDescriptor,
                "an extension of a supercuspidal is irreducible admissible");
  if (flags_.supercuspidal) {
    SimpleMask inside = trivial_on_ & levi_.members();
    if (inside != 0)
      throw Error(ErrorCode::InvalidDescriptor,
                  "supercuspidal sigma must be e-minimal but is trivial on " +
                      rs.format_mask(inside) + " inside Delta_P");
    if (!orthogonal_subsets(rs, levi_.members(), trivial_on_ & ~levi_.members()))
      throw Error(ErrorCode::InvalidDescriptor,
                  "Delta_P " + rs.format_mask(levi_.members()) +
                      " is not orthogonal to Delta_sigma " +
                      rs.format_mask(trivial_on_ & ~levi_.members()));
  }
}

SigmaDescriptor SigmaDescriptor::trivial_character(const ParabolicSet& ambient_minimal) {
  ParabolicSet levi(ambient_minimal.root_system(), 0, ambient_minimal.ambient());
  return SigmaDescriptor(levi, levi.root_system()->full_mask(), SigmaFlags{});
}

SimpleMask SigmaDescriptor::delta_sigma() const {
  return trivial_on_ & levi_.ambient() & ~levi_.members();
}

SigmaDescriptor SigmaDescriptor::retagged(SimpleMask ambient) const {
  return SigmaDescriptor(levi_.retagged(ambient), trivial_on_, flags_);
}

bool SigmaDescriptor::operator==(const SigmaDescriptor& other) const {
  return levi_ == other.levi_ && trivial_on_ == other.trivial_on_ && flags_ == other.flags_;
}

ParabolicSet p_sigma(const SigmaDescriptor& sigma) {
  const auto& levi = sigma.levi();
  return ParabolicSet(levi.root_system(), levi.members() | sigma.delta_sigma(), levi.ambient());
}

MinimalForm minimize(const SigmaDescriptor& sigma) {
  const auto& levi = sigma.levi();
  ParabolicSet core(levi.root_system(), levi.members() & ~sigma.trivial_on(), levi.ambient());
  SigmaFlags flags = sigma.flags();
  flags.supercuspidal = flags.supercuspidal || flags.core_supercuspidal;
  // the core is its own extension; keep one spelling of a supercuspidal
  if (flags.supercuspidal) flags.core_supercuspidal = false;
  return MinimalForm{core, SigmaDescriptor(core, sigma.trivial_on(), flags)};
}

bool is_e_minimal(const SigmaDescriptor& sigma) {
  return (sigma.levi().members() & sigma.trivial_on()) == 0;
}

bool check_e_minimal_orthogonality(const SigmaDescriptor& sigma) {
  const RootSystem& rs = *sigma.levi().root_system();
  if (!is_e_minimal(sigma))
    throw Error(ErrorCode::NotEMinimal,
                "sigma is trivial on " +
                    rs.format_mask(sigma.levi().members() & sigma.trivial_on()) +
                    " inside Delta_P");
  return orthogonal_subsets(rs, sigma.levi().members(), sigma.delta_sigma());
}

ValidatedTriple validate_triple(const GTriple& t) {
  require_same_ambient(t.P, t.Q);
  require_same_ambient(t.P, t.sigma.levi());
  const RootSystem& rs = *t.P.root_system();
  if (t.sigma.levi().members() != t.P.members())
    throw Error(ErrorCode::InvalidDescriptor,
                "sigma lives on " + rs.format_mask(t.sigma.levi().members()) + ", not on P = " +
                    t.P.to_string());
  ParabolicSet upper = p_sigma(t.sigma);
  if (SimpleMask missing = t.P.members() & ~t.Q.members())
    throw Error(ErrorCode::QOutOfRange,
                "Q misses " + rs.label(lowest(missing)) + " of Delta_P");
  if (SimpleMask extra = t.Q.members() & ~upper.members())
    throw Error(ErrorCode::QOutOfRange,
                rs.label(lowest(extra)) + " lies in Q but not in P(sigma) = " + upper.to_string());
  return ValidatedTriple{t, upper};
}

GTriple minimize_triple(const GTriple& t) {
  validate_triple(t);
  auto [core, sigma_min] = minimize(t.sigma);
  return GTriple{core, sigma_min, t.Q};
}

GTriple make_triple(const ParabolicSet& P, SimpleMask trivial_on, const ParabolicSet& Q,
                    SigmaFlags flags) {
  return GTriple{P, SigmaDescriptor(P, trivial_on, flags), Q};
}

std::string format_triple(const GTriple& t) {
  const RootSystem& rs = *t.P.root_system();
  std::string head =
      t.P.ambient() == rs.full_mask() ? "I_G" : "I_M" + rs.format_mask(t.P.ambient());
  return head + "(" + t.P.to_string() + ", σ, " + t.Q.to_string() + ")";
}

}  // namespace parind
