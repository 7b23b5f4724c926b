#include "parind/rootsys.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "parind/errors.hpp"

namespace parind {

namespace {

void link(std::vector<std::vector<int>>& m, int i, int j, int ij = -1, int ji = -1) {
  m[i][j] = ij;
  m[j][i] = ji;
}

std::vector<std::vector<int>> identity_block(int n) {
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 2;
  return m;
}

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 1; i <= n; ++i) out.push_back("a" + std::to_string(i));
  return out;
}

}  // namespace

CartanDatum CartanDatum::from_matrix(std::vector<std::vector<int>> matrix,
                                     std::vector<std::string> labels) {
  CartanDatum d;
  d.rank = static_cast<int>(matrix.size());
  d.matrix = std::move(matrix);
  d.labels = labels.empty() ? default_labels(d.rank) : std::move(labels);
  d.validate();
  return d;
}

CartanDatum CartanDatum::from_family(char family, int n) {
  auto bad = [&](const char* why) {
    return Error(ErrorCode::InvalidCartan,
                 std::string("type ") + family + std::to_string(n) + ": " + why);
  };
  family = static_cast<char>(std::toupper(static_cast<unsigned char>(family)));
  if (n < 1 || n > kMaxRank) throw bad("rank out of range");
  auto m = identity_block(n);
  switch (family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(m, i, i + 1);
      break;
    case 'B':
    case 'C':
      if (n < 2) throw bad("rank must be at least 2");
      for (int i = 0; i + 2 < n; ++i) link(m, i, i + 1);
      if (family == 'B')
        link(m, n - 2, n - 1, -2, -1);
      else
        link(m, n - 2, n - 1, -1, -2);
      break;
    case 'D':
      if (n < 4) throw bad("rank must be at least 4");
      for (int i = 0; i + 3 < n; ++i) link(m, i, i + 1);
      link(m, n - 3, n - 2);
      link(m, n - 3, n - 1);
      break;
    case 'E':
      if (n < 6 || n > 8) throw bad("rank must be 6, 7 or 8");
      link(m, 0, 2);
      link(m, 1, 3);
      for (int i = 2; i + 1 < n; ++i) link(m, i, i + 1);
      break;
    case 'F':
      if (n != 4) throw bad("rank must be 4");
      link(m, 0, 1);
      link(m, 1, 2, -2, -1);
      link(m, 2, 3);
      break;
    case 'G':
      if (n != 2) throw bad("rank must be 2");
      link(m, 0, 1, -1, -3);
      break;
    default:
      throw bad("unknown family");
  }
  return from_matrix(std::move(m));
}

CartanDatum CartanDatum::from_type(std::string_view name) {
  std::vector<std::pair<char, int>> parts;
  std::size_t pos = 0;
  while (pos < name.size()) {
    char family = name[pos++];
    if (!std::isalpha(static_cast<unsigned char>(family)))
      throw Error(ErrorCode::InvalidCartan, "malformed type '" + std::string(name) + "'");
    std::size_t start = pos;
    while (pos < name.size() && std::isdigit(static_cast<unsigned char>(name[pos]))) ++pos;
    if (start == pos)
      throw Error(ErrorCode::InvalidCartan, "missing rank in type '" + std::string(name) + "'");
    parts.emplace_back(family, std::stoi(std::string(name.substr(start, pos - start))));
    if (pos < name.size()) {
      if (name[pos] != 'x' && name[pos] != 'X')
        throw Error(ErrorCode::InvalidCartan, "malformed type '" + std::string(name) + "'");
      ++pos;
      if (pos == name.size())
        throw Error(ErrorCode::InvalidCartan, "dangling 'x' in type '" + std::string(name) + "'");
    }
  }
  if (parts.empty()) throw Error(ErrorCode::InvalidCartan, "empty type name");

  int total = 0;
  std::vector<CartanDatum> blocks;
  for (auto [family, n] : parts) {
    blocks.push_back(from_family(family, n));
    total += n;
  }
  if (total > kMaxRank) throw Error(ErrorCode::InvalidCartan, "total rank exceeds 32");
  std::vector<std::vector<int>> m(total, std::vector<int>(total, 0));
  int offset = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rank; ++i)
      for (int j = 0; j < b.rank; ++j) m[offset + i][offset + j] = b.matrix[i][j];
    offset += b.rank;
  }
  return from_matrix(std::move(m));
}

void CartanDatum::validate() const {
  auto fail = [](const std::string& why) { return Error(ErrorCode::InvalidCartan, why); };
  if (rank < 0 || rank > kMaxRank) throw fail("rank out of range");
  if (static_cast<int>(matrix.size()) != rank) throw fail("matrix has wrong number of rows");
  if (static_cast<int>(labels.size()) != rank) throw fail("label count differs from rank");
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw fail("empty root label");
    if (!seen.insert(l).second) throw fail("duplicate root label '" + l + "'");
  }
  for (int i = 0; i < rank; ++i) {
    if (static_cast<int>(matrix[i].size()) != rank)
      throw fail("row " + std::to_string(i) + " has wrong length");
  }
  for (int i = 0; i < rank; ++i) {
    if (matrix[i][i] != 2) throw fail("diagonal entry (" + std::to_string(i) + ") is not 2");
    for (int j = 0; j < rank; ++j) {
      if (i == j) continue;
      if (matrix[i][j] > 0)
        throw fail("positive off-diagonal entry at (" + std::to_string(i) + "," +
                   std::to_string(j) + ")");
      if ((matrix[i][j] == 0) != (matrix[j][i] == 0))
        throw fail("zero pattern not symmetric at (" + std::to_string(i) + "," +
                   std::to_string(j) + ")");
    }
  }
}

int Root::height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

bool Root::is_positive() const {
  bool any = false;
  for (int c : coords) {
    if (c < 0) return false;
    any = any || c > 0;
  }
  return any;
}

bool Root::is_negative() const { return (-*this).is_positive(); }

Root Root::operator-() const {
  Root r{coords};
  for (int& c : r.coords) c = -c;
  return r;
}

std::optional<RootId> RootSystem::find(const Root& r) const {
  auto it = lookup_.find(r.coords);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

RootId RootSystem::index_of(const Root& r) const {
  if (auto id = find(r)) return *id;
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < r.coords.size(); ++i) os << (i ? "," : "") << r.coords[i];
  os << ") is not a root";
  throw Error(ErrorCode::UnknownRoot, os.str());
}

Root RootSystem::reflect(int i, const Root& r) const {
  return root(reflect(i, index_of(r)));
}

std::optional<int> RootSystem::label_index(std::string_view label) const {
  for (int i = 0; i < rank(); ++i)
    if (cartan_.labels[i] == label) return i;
  return std::nullopt;
}

SimpleMask RootSystem::parse_labels(const std::vector<std::string>& labels) const {
  SimpleMask m = 0;
  for (const auto& l : labels) {
    auto i = label_index(l);
    if (!i) throw Error(ErrorCode::UnknownLabel, "unknown simple root label '" + l + "'");
    m |= SimpleMask{1} << *i;
  }
  return m;
}

std::vector<std::string> RootSystem::labels_of(SimpleMask mask) const {
  std::vector<std::string> out;
  for (int i = 0; i < rank(); ++i)
    if (mask >> i & 1) out.push_back(cartan_.labels[i]);
  return out;
}

std::string RootSystem::format_mask(SimpleMask mask) const {
  std::string s = "{";
  bool first = true;
  for (const auto& l : labels_of(mask)) {
    if (!first) s += ",";
    s += l;
    first = false;
  }
  return s + "}";
}

std::string RootSystem::format_root(RootId id) const {
  const Root& r = root(id);
  std::string s;
  for (int i = 0; i < rank(); ++i) {
    int c = r.coords[i];
    if (c == 0) continue;
    if (c < 0)
      s += "-";
    else if (!s.empty())
      s += "+";
    if (std::abs(c) != 1) s += std::to_string(std::abs(c));
    s += cartan_.labels[i];
  }
  return s;
}

RootSystemPtr build_root_system(const CartanDatum& datum, RootSystemLimits limits) {
  datum.validate();
  const int n = datum.rank;

  std::set<std::vector<int>> positives;
  std::deque<std::vector<int>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    positives.insert(e);
    queue.push_back(std::move(e));
  }
  while (!queue.empty()) {
    std::vector<int> r = std::move(queue.front());
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      int p = 0;
      for (int i = 0; i < n; ++i) p += r[i] * datum.matrix[i][j];
      if (p == 0) continue;
      std::vector<int> image = r;
      image[j] -= p;
      bool nonneg = std::all_of(image.begin(), image.end(), [](int c) { return c >= 0; });
      bool nonpos = std::all_of(image.begin(), image.end(), [](int c) { return c <= 0; });
      if (nonpos) continue;  // only s_j(alpha_j) = -alpha_j
      if (!nonneg)
        throw Error(ErrorCode::NonFiniteType, "reflection closure produced a mixed-sign vector");
      if (positives.insert(image).second) {
        if (2 * positives.size() > limits.max_roots)
          throw Error(ErrorCode::NonFiniteType,
                      "root closure exceeds " + std::to_string(limits.max_roots) + " roots");
        queue.push_back(std::move(image));
      }
    }
  }

  std::vector<Root> sorted;
  sorted.reserve(positives.size());
  for (const auto& c : positives) sorted.push_back(Root{c});
  std::sort(sorted.begin(), sorted.end(), [](const Root& a, const Root& b) {
    int ha = a.height(), hb = b.height();
    if (ha != hb) return ha < hb;
    return a.coords > b.coords;
  });

  auto rs = std::shared_ptr<RootSystem>(new RootSystem());
  rs->cartan_ = datum;
  rs->num_positive_ = sorted.size();
  rs->roots_ = sorted;
  for (const auto& r : sorted) rs->roots_.push_back(-r);
  const std::size_t total = rs->roots_.size();
  for (std::size_t k = 0; k < total; ++k) {
    rs->lookup_.emplace(rs->roots_[k].coords, static_cast<RootId>(k));
    SimpleMask supp = 0;
    for (int i = 0; i < n; ++i)
      if (rs->roots_[k].coords[i] != 0) supp |= SimpleMask{1} << i;
    rs->supports_.push_back(supp);
  }
  rs->reflections_.assign(n, std::vector<RootId>(total));
  for (int j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < total; ++k) {
      const auto& r = rs->roots_[k].coords;
      int p = 0;
      for (int i = 0; i < n; ++i) p += r[i] * datum.matrix[i][j];
      std::vector<int> image = r;
      image[j] -= p;
      auto it = rs->lookup_.find(image);
      if (it == rs->lookup_.end())
        throw Error(ErrorCode::NonFiniteType, "root set not closed under reflections");
      rs->reflections_[j][k] = it->second;
    }
  }
  return rs;
}

bool orthogonal_subsets(const RootSystem& rs, SimpleMask I, SimpleMask J) {
  for (int i = 0; i < rs.rank(); ++i) {
    if (!(I >> i & 1)) continue;
    for (int j = 0; j < rs.rank(); ++j)
      if ((J >> j & 1) && rs.pairing(i, j) != 0) return false;
  }
  return true;
}

PhiSplit phi_split(const RootSystem& rs, SimpleMask levi) {
  PhiSplit out;
  for (std::size_t k = 0; k < rs.num_positive(); ++k) {
    auto id = static_cast<RootId>(k);
    if (is_subset(rs.support(id), levi))
      out.levi_positive.push_back(id);
    else
      out.unipotent.push_back(id);
  }
  return out;
}

}  // namespace parind
