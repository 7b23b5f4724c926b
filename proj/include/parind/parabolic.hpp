#pragma once

#include <string>
#include <vector>

#include "parind/rootsys.hpp"

namespace parind {

// A standard parabolic subgroup, encoded by its subset of simple roots.
// Every set carries the Levi it lives in (`ambient`, the whole of Delta for
// G-level parabolics); lattice operations refuse to mix ambients.
class ParabolicSet {
 public:
  // Throws InvalidNesting when members or ambient leave their range.
  ParabolicSet(RootSystemPtr rs, SimpleMask members, SimpleMask ambient);
  ParabolicSet(RootSystemPtr rs, SimpleMask members);

  static ParabolicSet whole(RootSystemPtr rs);
  static ParabolicSet minimal(RootSystemPtr rs);

  const RootSystemPtr& root_system() const { return rs_; }
  SimpleMask members() const { return members_; }
  SimpleMask ambient() const { return ambient_; }
  int size() const;

  bool contains(int i) const { return (members_ >> i & 1) != 0; }
  bool is_subset_of(const ParabolicSet& other) const;
  bool is_whole() const { return members_ == ambient_; }
  bool is_minimal() const { return members_ == 0; }
  bool same_ambient(const ParabolicSet& other) const;

  // The same subset, re-tagged to live in another Levi containing it.
  ParabolicSet retagged(SimpleMask ambient) const;

  std::vector<std::string> labels() const { return rs_->labels_of(members_); }
  std::string to_string() const { return rs_->format_mask(members_); }

  bool operator==(const ParabolicSet& other) const;

 private:
  RootSystemPtr rs_;
  SimpleMask members_;
  SimpleMask ambient_;
};

// Throws MixedAmbient unless both sets share root system and ambient.
void require_same_ambient(const ParabolicSet& a, const ParabolicSet& b);

ParabolicSet meet(const ParabolicSet& P, const ParabolicSet& P1);
ParabolicSet join(const ParabolicSet& P, const ParabolicSet& P1);

// P cap M1 as a standard parabolic of the Levi M1, i.e. re-tagged with
// ambient Delta_{M1}.
ParabolicSet levi_intersection(const ParabolicSet& P, const ParabolicSet& M1);

// All standard parabolics of the ambient Levi, ordered by size then by the
// sorted index list.
std::vector<SimpleMask> subsets_of(SimpleMask ambient);
bool subset_order_less(SimpleMask a, SimpleMask b);

}  // namespace parind
