#include "parind/parabolic.hpp"

#include <algorithm>
#include <bit>

#include "parind/errors.hpp"

namespace parind {

ParabolicSet::ParabolicSet(RootSystemPtr rs, SimpleMask members, SimpleMask ambient)
    : rs_(std::move(rs)), members_(members), ambient_(ambient) {
  if (!is_subset(ambient_, rs_->full_mask()))
    throw Error(ErrorCode::InvalidNesting, "ambient Levi is not a subset of Delta");
  if (!is_subset(members_, ambient_))
    throw Error(ErrorCode::InvalidNesting, rs_->format_mask(members_) +
                                               " is not contained in its ambient Levi " +
                                               rs_->format_mask(ambient_));
}

ParabolicSet::ParabolicSet(RootSystemPtr rs, SimpleMask members)
    : ParabolicSet(rs, members, rs->full_mask()) {}

ParabolicSet ParabolicSet::whole(RootSystemPtr rs) {
  SimpleMask all = rs->full_mask();
  return ParabolicSet(std::move(rs), all, all);
}

ParabolicSet ParabolicSet::minimal(RootSystemPtr rs) {
  SimpleMask all = rs->full_mask();
  return ParabolicSet(std::move(rs), 0, all);
}

int ParabolicSet::size() const { return std::popcount(members_); }

bool ParabolicSet::same_ambient(const ParabolicSet& other) const {
  return ambient_ == other.ambient_ &&
         (rs_ == other.rs_ || rs_->cartan() == other.rs_->cartan());
}

bool ParabolicSet::is_subset_of(const ParabolicSet& other) const {
  require_same_ambient(*this, other);
  return is_subset(members_, other.members_);
}

ParabolicSet ParabolicSet::retagged(SimpleMask ambient) const {
  return ParabolicSet(rs_, members_, ambient);
}

bool ParabolicSet::operator==(const ParabolicSet& other) const {
  return members_ == other.members_ && same_ambient(other);
}

void require_same_ambient(const ParabolicSet& a, const ParabolicSet& b) {
  if (!a.same_ambient(b))
    throw Error(ErrorCode::MixedAmbient,
                "parabolics live in different groups (" + a.root_system()->format_mask(a.ambient()) +
                    " vs " + b.root_system()->format_mask(b.ambient()) + ")");
}

ParabolicSet meet(const ParabolicSet& P, const ParabolicSet& P1) {
  require_same_ambient(P, P1);
  return ParabolicSet(P.root_system(), P.members() & P1.members(), P.ambient());
}

ParabolicSet join(const ParabolicSet& P, const ParabolicSet& P1) {
  require_same_ambient(P, P1);
  return ParabolicSet(P.root_system(), P.members() | P1.members(), P.ambient());
}

ParabolicSet levi_intersection(const ParabolicSet& P, const ParabolicSet& M1) {
  require_same_ambient(P, M1);
  return ParabolicSet(P.root_system(), P.members() & M1.members(), M1.members());
}

bool subset_order_less(SimpleMask a, SimpleMask b) {
  int ca = std::popcount(a), cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  // Lexicographic on ascending index lists: compare lowest differing bit.
  SimpleMask diff = a ^ b;
  if (diff == 0) return false;
  SimpleMask low = diff & (~diff + 1);
  return (a & low) != 0;
}

std::vector<SimpleMask> subsets_of(SimpleMask ambient) {
  std::vector<SimpleMask> out;
  SimpleMask s = 0;
  do {
    out.push_back(s);
    s = (s - ambient) & ambient;
  } while (s != 0);
  std::sort(out.begin(), out.end(), subset_order_less);
  return out;
}

}  // namespace parind
