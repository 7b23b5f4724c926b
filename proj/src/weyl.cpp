#include "parind/weyl.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "parind/errors.hpp"

namespace parind {

namespace {

std::vector<RootId> identity_perm(const RootSystem& rs) {
  std::vector<RootId> p(rs.num_roots());
  for (std::size_t k = 0; k < p.size(); ++k) p[k] = static_cast<RootId>(k);
  return p;
}

std::vector<RootId> invert(const std::vector<RootId>& p) {
  std::vector<RootId> inv(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) inv[p[k]] = static_cast<RootId>(k);
  return inv;
}

// Key determined by the images of the simple roots, which fix the element.
std::string key_of(const std::vector<RootId>& simple_images) {
  std::string k(simple_images.size() * sizeof(RootId), '\0');
  for (std::size_t i = 0; i < simple_images.size(); ++i) {
    k[2 * i] = static_cast<char>(simple_images[i] & 0xff);
    k[2 * i + 1] = static_cast<char>(simple_images[i] >> 8);
  }
  return k;
}

std::vector<RootId> simple_images(const RootSystem& rs, const std::vector<RootId>& perm) {
  std::vector<RootId> out(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) out[i] = perm[rs.simple(i)];
  return out;
}

bool has_left_descent(const RootSystem& rs, const std::vector<RootId>& perm, int i) {
  // l(s_i w) < l(w) iff w^{-1}(alpha_i) < 0.
  const RootId target = rs.simple(i);
  for (std::size_t k = 0; k < perm.size(); ++k)
    if (perm[k] == target) return !rs.is_positive(static_cast<RootId>(k));
  return false;
}

void left_multiply_in_place(const RootSystem& rs, int i, std::vector<RootId>& perm) {
  const auto& table = rs.reflection_table(i);
  for (auto& r : perm) r = table[r];
}

void check_same_system(const RootSystemPtr& a, const RootSystemPtr& b) {
  if (a != b && !(a && b && a->cartan() == b->cartan()))
    throw Error(ErrorCode::MixedAmbient, "Weyl elements from different root systems");
}

}  // namespace

WeylElement::WeylElement(RootSystemPtr rs, std::vector<RootId> perm)
    : rs_(std::move(rs)), perm_(std::move(perm)) {
  const RootSystem& sys = *rs_;
  const int n = sys.rank();
  std::vector<RootId> inv = invert(perm_);
  for (int i = 0; i < n; ++i) {
    if (!sys.is_positive(inv[sys.simple(i)])) left_descents_ |= SimpleMask{1} << i;
    if (!sys.is_positive(perm_[sys.simple(i)])) right_descents_ |= SimpleMask{1} << i;
  }
  // Peel off the smallest left descent each time; this yields the
  // lexicographically least reduced word.
  std::vector<RootId> cur_inv = inv;
  for (;;) {
    int next = -1;
    for (int i = 0; i < n; ++i) {
      if (!sys.is_positive(cur_inv[sys.simple(i)])) {
        next = i;
        break;
      }
    }
    if (next < 0) break;
    word_.push_back(next);
    // (s w)^{-1}(x) = w^{-1}(s x)
    const auto& table = sys.reflection_table(next);
    std::vector<RootId> updated(cur_inv.size());
    for (std::size_t x = 0; x < cur_inv.size(); ++x) updated[x] = cur_inv[table[x]];
    cur_inv = std::move(updated);
  }
}

WeylElement WeylElement::identity(RootSystemPtr rs) {
  auto p = identity_perm(*rs);
  return WeylElement(std::move(rs), std::move(p));
}

WeylElement WeylElement::simple_reflection(RootSystemPtr rs, int i) {
  if (i < 0 || i >= rs->rank())
    throw Error(ErrorCode::UnknownLabel, "generator index out of range");
  auto p = rs->reflection_table(i);
  return WeylElement(std::move(rs), std::move(p));
}

WeylElement WeylElement::from_word(RootSystemPtr rs, std::span<const int> word) {
  auto p = identity_perm(*rs);
  for (int i : word) {
    if (i < 0 || i >= rs->rank())
      throw Error(ErrorCode::UnknownLabel, "generator index out of range");
    const auto& table = rs->reflection_table(i);
    std::vector<RootId> next(p.size());
    for (std::size_t r = 0; r < p.size(); ++r) next[r] = p[table[r]];
    p = std::move(next);
  }
  return WeylElement(std::move(rs), std::move(p));
}

WeylElement WeylElement::parse(RootSystemPtr rs, std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  std::vector<int> word;
  if (text != "e") {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t star = text.find('*', pos);
      if (star == std::string_view::npos) star = text.size();
      std::string_view tok = trim(text.substr(pos, star - pos));
      if (tok.size() < 2 || tok[0] != 's' ||
          !std::all_of(tok.begin() + 1, tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw Error(ErrorCode::UnknownLabel, "malformed Weyl word '" + std::string(text) + "'");
      int k = std::stoi(std::string(tok.substr(1)));
      if (k < 1 || k > rs->rank())
        throw Error(ErrorCode::UnknownLabel, "generator " + std::string(tok) + " out of range");
      word.push_back(k - 1);
      pos = star + 1;
    }
  }
  return from_word(std::move(rs), word);
}

WeylElement WeylElement::inverse() const { return WeylElement(rs_, invert(perm_)); }

WeylElement WeylElement::operator*(const WeylElement& other) const {
  check_same_system(rs_, other.rs_);
  std::vector<RootId> p(perm_.size());
  for (std::size_t r = 0; r < p.size(); ++r) p[r] = perm_[other.perm_[r]];
  return WeylElement(rs_, std::move(p));
}

WeylElement WeylElement::left_multiply(int i) const {
  auto p = perm_;
  left_multiply_in_place(*rs_, i, p);
  return WeylElement(rs_, std::move(p));
}

std::string WeylElement::to_string() const {
  if (word_.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < word_.size(); ++k) {
    if (k) s += "*";
    s += "s" + std::to_string(word_[k] + 1);
  }
  return s;
}

bool shortlex_less(const WeylElement& a, const WeylElement& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.word() < b.word();
}

std::uint64_t weyl_group_order(const RootSystem& rs) {
  std::vector<std::uint64_t> by_height;
  for (std::size_t k = 0; k < rs.num_positive(); ++k) {
    auto h = static_cast<std::size_t>(rs.root(static_cast<RootId>(k)).height());
    if (by_height.size() <= h) by_height.resize(h + 1, 0);
    ++by_height[h];
  }
  std::uint64_t order = 1;
  const std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t h = 1; h < by_height.size(); ++h) {
    std::uint64_t next = h + 1 < by_height.size() ? by_height[h + 1] : 0;
    // by_height[h] - by_height[h+1] exponents are equal to h.
    for (std::uint64_t m = next; m < by_height[h]; ++m) {
      if (order > cap / (h + 1)) return cap;
      order *= h + 1;
    }
  }
  return order;
}

std::size_t WeylGroup::lookup(const std::vector<RootId>& images) const {
  auto it = by_key_.find(key_of(images));
  if (it == by_key_.end()) throw Error(ErrorCode::MixedAmbient, "element not in this group");
  return it->second;
}

std::size_t WeylGroup::index_of(const WeylElement& w) const {
  check_same_system(rs_, w.root_system());
  return lookup(simple_images(*rs_, w.perm()));
}

std::size_t WeylGroup::multiply(std::size_t a, std::size_t b) const {
  const auto& pa = elements_.at(a).perm();
  const auto& pb = elements_.at(b).perm();
  std::vector<RootId> images(rs_->rank());
  for (int i = 0; i < rs_->rank(); ++i) images[i] = pa[pb[rs_->simple(i)]];
  return lookup(images);
}

std::size_t WeylGroup::inverse(std::size_t a) const {
  const auto& p = elements_.at(a).perm();
  std::vector<RootId> inv = invert(p);
  return lookup(simple_images(*rs_, inv));
}

std::vector<std::size_t> WeylGroup::parabolic_subgroup(SimpleMask J) const {
  std::vector<std::size_t> out;
  for (std::size_t id = 0; id < elements_.size(); ++id) {
    const auto& word = elements_[id].word();
    if (std::all_of(word.begin(), word.end(), [J](int i) { return (J >> i & 1) != 0; }))
      out.push_back(id);
  }
  return out;
}

WeylGroup generate_weyl(RootSystemPtr rs, WeylLimits limits) {
  const std::uint64_t order = weyl_group_order(*rs);
  if (order > limits.max_order)
    throw Error(ErrorCode::GroupTooLarge, "|W| = " + std::to_string(order) + " exceeds guard " +
                                              std::to_string(limits.max_order));
  WeylGroup g;
  g.rs_ = rs;
  std::vector<std::vector<RootId>> perms;
  std::unordered_map<std::string, std::size_t> seen;
  perms.push_back(identity_perm(*rs));
  seen.emplace(key_of(simple_images(*rs, perms.front())), 0);
  for (std::size_t head = 0; head < perms.size(); ++head) {
    for (int i = 0; i < rs->rank(); ++i) {
      std::vector<RootId> next = perms[head];
      left_multiply_in_place(*rs, i, next);
      if (seen.emplace(key_of(simple_images(*rs, next)), perms.size()).second)
        perms.push_back(std::move(next));
    }
  }
  g.elements_.reserve(perms.size());
  for (auto& p : perms) g.elements_.push_back(WeylElement(rs, std::move(p)));
  std::sort(g.elements_.begin(), g.elements_.end(), shortlex_less);
  for (std::size_t id = 0; id < g.elements_.size(); ++id)
    g.by_key_.emplace(key_of(simple_images(*rs, g.elements_[id].perm())), id);
  return g;
}

WeylElement longest_element(const RootSystemPtr& rs, SimpleMask J) {
  WeylElement w = WeylElement::identity(rs);
  for (;;) {
    SimpleMask ascents = J & ~w.right_descents() & rs->full_mask();
    if (ascents == 0) return w;
    w = w * WeylElement::simple_reflection(rs, std::countr_zero(ascents));
  }
}

bool bruhat_leq(const WeylElement& u, const WeylElement& w) {
  check_same_system(u.root_system(), w.root_system());
  const RootSystem& rs = *u.root_system();
  std::vector<RootId> a = u.perm();
  std::vector<RootId> b = w.perm();
  int la = u.length();
  int lb = w.length();
  auto lowest_left_descent = [&](const std::vector<RootId>& p) {
    for (int i = 0; i < rs.rank(); ++i)
      if (has_left_descent(rs, p, i)) return i;
    return -1;
  };
  for (;;) {
    if (la > lb) return false;
    if (lb == 0) return la == 0;
    const int s = lowest_left_descent(b);
    left_multiply_in_place(rs, s, b);
    --lb;
    if (has_left_descent(rs, a, s)) {
      left_multiply_in_place(rs, s, a);
      --la;
    }
  }
}

CosetRepSet min_coset_reps(const WeylGroup& group, SimpleMask Q) {
  CosetRepSet out{Q, {}};
  for (const auto& w : group.elements())
    if ((w.left_descents() & Q) == 0) out.reps.push_back(w);
  return out;
}

std::vector<WeylElement> double_coset_reps(const WeylGroup& group, SimpleMask I, SimpleMask J) {
  std::vector<WeylElement> out;
  for (const auto& w : group.elements())
    if ((w.left_descents() & I) == 0 && (w.right_descents() & J) == 0) out.push_back(w);
  std::stable_sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
    return a.length() > b.length();
  });
  return out;
}

std::vector<bool> parabolic_product_members(const WeylGroup& group, SimpleMask M, SimpleMask M1) {
  std::vector<bool> member(group.size(), false);
  const auto left = group.parabolic_subgroup(M);
  const auto right = group.parabolic_subgroup(M1);
  for (auto a : left)
    for (auto b : right) member[group.multiply(a, b)] = true;
  return member;
}

std::optional<RootId> find_unipotent_witness(const RootSystem& rs, SimpleMask M, SimpleMask M1,
                                             const WeylElement& w) {
  for (std::size_t k = 0; k < rs.num_positive(); ++k) {
    auto beta = static_cast<RootId>(k);
    if (!in_unipotent(rs, M1, beta)) continue;
    RootId image = w.apply(beta);
    if (!rs.is_positive(image) && in_unipotent(rs, M, rs.negate(image))) return beta;
  }
  return std::nullopt;
}

std::optional<RootId> unipotent_witness(const WeylGroup& group, SimpleMask M, SimpleMask M1,
                                        const WeylElement& w) {
  const auto member = parabolic_product_members(group, M, M1);
  if (member[group.index_of(w)]) return std::nullopt;
  return find_unipotent_witness(*group.root_system(), M, M1, w);
}

std::vector<FiltrationCell> filtration_cells(const WeylGroup& group, SimpleMask Q,
                                             SimpleMask Q1) {
  if (!is_subset(Q, Q1))
    throw Error(ErrorCode::InvalidNesting,
                group.root_system()->format_mask(Q) + " is not contained in " +
                    group.root_system()->format_mask(Q1));
  std::vector<FiltrationCell> out;
  for (auto& w : min_coset_reps(group, Q).reps) {
    bool contributes = (w.left_descents() & Q1) == 0;
    out.push_back({std::move(w), contributes});
  }
  return out;
}

}  // namespace parind
