#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "parind/rootsys.hpp"

namespace parind {

struct WeylLimits {
  std::uint64_t max_order = 10'000'000;
};

class WeylGroup;

// An element of the Weyl group, stored canonically as the permutation it
// induces on the roots. The word is the lexicographically least reduced word
// and only serves as a readable witness; equality compares permutations.
class WeylElement {
 public:
  static WeylElement identity(RootSystemPtr rs);
  static WeylElement simple_reflection(RootSystemPtr rs, int i);
  // Product s_{word[0]} * s_{word[1]} * ...; the word need not be reduced.
  static WeylElement from_word(RootSystemPtr rs, std::span<const int> word);
  // "s1*s2*s1" (1-based generator indices) or "e".
  static WeylElement parse(RootSystemPtr rs, std::string_view text);

  const RootSystemPtr& root_system() const { return rs_; }
  const std::vector<RootId>& perm() const { return perm_; }
  const std::vector<int>& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }

  RootId apply(RootId id) const { return perm_[id]; }
  Root apply(const Root& r) const { return rs_->root(perm_[rs_->index_of(r)]); }

  // Generators i with l(s_i w) < l(w), resp. l(w s_i) < l(w).
  SimpleMask left_descents() const { return left_descents_; }
  SimpleMask right_descents() const { return right_descents_; }

  WeylElement inverse() const;
  WeylElement operator*(const WeylElement& other) const;
  WeylElement left_multiply(int i) const;

  std::string to_string() const;

  bool operator==(const WeylElement& other) const { return perm_ == other.perm_; }

 private:
  friend class WeylGroup;
  friend WeylGroup generate_weyl(RootSystemPtr rs, WeylLimits limits);
  WeylElement(RootSystemPtr rs, std::vector<RootId> perm);

  RootSystemPtr rs_;
  std::vector<RootId> perm_;
  std::vector<int> word_;
  SimpleMask left_descents_ = 0;
  SimpleMask right_descents_ = 0;
};

// Order by length, then lexicographically by canonical word. A linear
// extension of the Bruhat order.
bool shortlex_less(const WeylElement& a, const WeylElement& b);

// |W| from the height distribution of the positive roots (the exponents are
// the dual partition). Saturates at UINT64_MAX.
std::uint64_t weyl_group_order(const RootSystem& rs);

// Fully enumerated Weyl group. Elements are kept in shortlex order, so index 0
// is the identity and the last index is the longest element.
class WeylGroup {
 public:
  const RootSystemPtr& root_system() const { return rs_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<WeylElement>& elements() const { return elements_; }
  const WeylElement& element(std::size_t id) const { return elements_.at(id); }
  std::size_t index_of(const WeylElement& w) const;

  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const;

  // Ids of the elements of the standard parabolic subgroup W_J.
  std::vector<std::size_t> parabolic_subgroup(SimpleMask J) const;

 private:
  friend WeylGroup generate_weyl(RootSystemPtr rs, WeylLimits limits);
  std::size_t lookup(const std::vector<RootId>& simple_images) const;

  RootSystemPtr rs_;
  std::vector<WeylElement> elements_;
  std::unordered_map<std::string, std::size_t> by_key_;
};

// Throws GroupTooLarge when |W| exceeds the limit.
WeylGroup generate_weyl(RootSystemPtr rs, WeylLimits limits = {});

WeylElement longest_element(const RootSystemPtr& rs, SimpleMask J);

// Bruhat order, decided by descending along left descents of the larger
// element (lifting property).
bool bruhat_leq(const WeylElement& u, const WeylElement& w);

struct CosetRepSet {
  SimpleMask parabolic = 0;
  std::vector<WeylElement> reps;  // shortlex order
};

// Minimal length representatives of W_Q \ W: w^{-1}(alpha) > 0 for alpha in Q.
CosetRepSet min_coset_reps(const WeylGroup& group, SimpleMask Q);

// Minimal representatives of W_I \ W / W_J, longest first; the identity cell
// is last, so every prefix is an open union of cells.
std::vector<WeylElement> double_coset_reps(const WeylGroup& group, SimpleMask I, SimpleMask J);

// Membership table (indexed by group id) of the product set W_M * W_M1.
std::vector<bool> parabolic_product_members(const WeylGroup& group, SimpleMask M,
                                            SimpleMask M1);

// Smallest root beta in Phi_{N1} with w(beta) in -Phi_N, if any.
std::optional<RootId> find_unipotent_witness(const RootSystem& rs, SimpleMask M, SimpleMask M1,
                                             const WeylElement& w);

// Absent when w lies in W_M * W_M1; otherwise the smallest witness root, which
// always exists for w outside that product.
std::optional<RootId> unipotent_witness(const WeylGroup& group, SimpleMask M, SimpleMask M1,
                                        const WeylElement& w);

struct FiltrationCell {
  WeylElement element;
  bool contributes = false;  // element lies in ^{Q1}W
};

// ^QW in shortlex order (each element Bruhat-minimal among the rest), flagging
// the cells that survive in the larger parabolic Q1. Throws InvalidNesting
// unless Q is contained in Q1.
std::vector<FiltrationCell> filtration_cells(const WeylGroup& group, SimpleMask Q, SimpleMask Q1);

}  // namespace parind
