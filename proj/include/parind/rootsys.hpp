#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace parind {

// Subset of the simple roots, bit i standing for the i-th simple root.
using SimpleMask = std::uint32_t;
// Position of a root inside RootSystem::roots().
using RootId = std::uint16_t;

inline constexpr int kMaxRank = 32;

inline constexpr SimpleMask mask_of_rank(int rank) {
  return rank >= 32 ? ~SimpleMask{0} : ((SimpleMask{1} << rank) - 1);
}
inline constexpr bool is_subset(SimpleMask a, SimpleMask b) { return (a & ~b) == 0; }

// Cartan matrix with entries matrix[i][j] = <alpha_i, alpha_j^vee> (Bourbaki
// convention: B2 is [[2,-2],[-1,2]], G2 is [[2,-1],[-3,2]]).
struct CartanDatum {
  int rank = 0;
  std::vector<std::vector<int>> matrix;
  std::vector<std::string> labels;

  static CartanDatum from_matrix(std::vector<std::vector<int>> matrix,
                                 std::vector<std::string> labels = {});

  // Bourbaki-numbered types, optionally joined with 'x' for reducible systems:
  // "A2", "B3", "G2", "A1xA1", "A1xA2", "E6".
  static CartanDatum from_type(std::string_view name);
  static CartanDatum from_family(char family, int rank);

  // Checks the local Cartan-matrix axioms. Finite type is checked later,
  // constructively, by build_root_system.
  void validate() const;

  bool operator==(const CartanDatum&) const = default;
};

struct Root {
  std::vector<int> coords;

  int height() const;
  bool is_positive() const;
  bool is_negative() const;
  Root operator-() const;

  auto operator<=>(const Root&) const = default;
};

struct RootSystemLimits {
  std::size_t max_roots = 10000;
};

// Reduced crystallographic root system generated by a Cartan datum. Positive
// roots are indexed 0..N-1 ordered by height, then by coordinates in
// decreasing lexicographic order (so the simple roots come first, in label
// order); root N+k is the negative of root k.
class RootSystem {
 public:
  const CartanDatum& cartan() const { return cartan_; }
  int rank() const { return cartan_.rank; }
  std::size_t num_positive() const { return num_positive_; }
  std::size_t num_roots() const { return roots_.size(); }
  SimpleMask full_mask() const { return mask_of_rank(rank()); }

  const std::vector<Root>& roots() const { return roots_; }
  const Root& root(RootId id) const { return roots_.at(id); }
  std::optional<RootId> find(const Root& r) const;
  // Throws UnknownRoot when r is not in the system.
  RootId index_of(const Root& r) const;

  bool is_positive(RootId id) const { return id < num_positive_; }
  RootId negate(RootId id) const {
    return static_cast<RootId>(is_positive(id) ? id + num_positive_ : id - num_positive_);
  }
  RootId simple(int i) const { return static_cast<RootId>(i); }
  // Simple roots occurring with non-zero coefficient.
  SimpleMask support(RootId id) const { return supports_[id]; }

  RootId reflect(int i, RootId id) const { return reflections_[i][id]; }
  Root reflect(int i, const Root& r) const;
  const std::vector<RootId>& reflection_table(int i) const { return reflections_.at(i); }

  int pairing(int i, int j) const { return cartan_.matrix[i][j]; }

  const std::string& label(int i) const { return cartan_.labels.at(i); }
  std::optional<int> label_index(std::string_view label) const;
  // Throws UnknownLabel.
  SimpleMask parse_labels(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(SimpleMask mask) const;
  std::string format_mask(SimpleMask mask) const;
  std::string format_root(RootId id) const;

 private:
  friend std::shared_ptr<const RootSystem> build_root_system(const CartanDatum&,
                                                             RootSystemLimits);
  RootSystem() = default;

  CartanDatum cartan_;
  std::size_t num_positive_ = 0;
  std::vector<Root> roots_;
  std::vector<SimpleMask> supports_;
  std::vector<std::vector<RootId>> reflections_;
  std::map<std::vector<int>, RootId> lookup_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

// Closes the simple roots under simple reflections. Throws InvalidCartan on
// malformed matrices and NonFiniteType when the closure outgrows the bound.
RootSystemPtr build_root_system(const CartanDatum& datum, RootSystemLimits limits = {});

// True iff <alpha, beta^vee> = 0 for all alpha in I, beta in J.
bool orthogonal_subsets(const RootSystem& rs, SimpleMask I, SimpleMask J);

struct PhiSplit {
  std::vector<RootId> levi_positive;  // positive roots supported on the Levi
  std::vector<RootId> unipotent;      // the remaining positive roots
};

PhiSplit phi_split(const RootSystem& rs, SimpleMask levi);

// Root of the unipotent radical N of the standard parabolic with Levi `levi`.
inline bool in_unipotent(const RootSystem& rs, SimpleMask levi, RootId id) {
  return rs.is_positive(id) && !is_subset(rs.support(id), levi);
}

}  // namespace parind
