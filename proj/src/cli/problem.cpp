#include "src/cli/problem.hpp"

#include <algorithm>
#include <set>

namespace parind::cli {

namespace {

using nlohmann::json;

const std::vector<std::string> kSetFields = {"P", "Q", "P1", "trivial_on", "declared_nr", "I", "J"};
const std::vector<std::string> kFlagFields = {"supercuspidal", "irreducible_admissible",
                                              "core_supercuspidal"};

struct TaskShape {
  std::vector<std::string> allowed;
  std::vector<std::string> required;
  bool needs_cartan = true;
};

const std::map<std::string, TaskShape>& shapes() {
  static const std::vector<std::string> sigma = {"P", "trivial_on", "supercuspidal",
                                                 "irreducible_admissible", "core_supercuspidal"};
  auto with = [](std::vector<std::string> base, std::vector<std::string> more) {
    base.insert(base.end(), more.begin(), more.end());
    return base;
  };
  static const std::map<std::string, TaskShape> table = {
      {"constituents", {sigma, {}}},
      {"lattice", {with(sigma, {"Q", "P1"}), {"P1"}}},
      {"steinberg-lattice", {{"P", "Q"}, {}}},
      {"adjoint-left", {with(sigma, {"Q", "P1"}), {"P1"}}},
      {"adjoint-right", {with(sigma, {"Q", "P1"}), {"P1"}}},
      {"cuspidal", {with(sigma, {"Q"}), {}}},
      {"irreducible", {with(sigma, {"Q", "P1"}), {"P1"}}},
      {"twist", {with(sigma, {"Q", "P1", "declared_nr"}), {"P1"}}},
      {"geometric-lemma", {{"P", "P1"}, {"P1"}}},
      {"weyl:coset-reps", {{"Q"}, {}}},
      {"weyl:double-cosets", {{"I", "J"}, {}}},
      {"verify:lemma55", {{}, {}}},
      {"verify:all", {{"types", "rank_bound"}, {}, false}},
  };
  return table;
}

std::string path_of(const std::string& parent, const std::string& key) {
  return parent + "." + key;
}

std::string path_of(const std::string& parent, std::size_t index) {
  return parent + "[" + std::to_string(index) + "]";
}

std::vector<std::string> string_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) throw InputError(path_of(where, i), "expected a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

int small_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InputError(where, "expected an integer");
  auto v = j.get<std::int64_t>();
  if (v < -1000 || v > 1000) throw InputError(where, "integer out of range");
  return static_cast<int>(v);
}

std::vector<std::vector<int>> int_matrix(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where, "expected an array of rows");
  std::vector<std::vector<int>> out;
  for (std::size_t r = 0; r < j.size(); ++r) {
    auto row_path = path_of(where, r);
    if (!j[r].is_array()) throw InputError(row_path, "expected an array of integers");
    std::vector<int> row;
    for (std::size_t c = 0; c < j[r].size(); ++c)
      row.push_back(small_int(j[r][c], path_of(row_path, c)));
    out.push_back(std::move(row));
  }
  return out;
}

CartanSpec parse_cartan(const json& j, const std::string& where) {
  if (j.is_string()) return CartanSpec{j.get<std::string>(), {}, {}};
  if (!j.is_object()) throw InputError(where, "expected an object or a type name");
  CartanSpec spec;
  std::optional<int> rank;
  for (const auto& [key, value] : j.items()) {
    auto at = path_of(where, key);
    if (key == "type") {
      if (!value.is_string()) throw InputError(at, "expected a string");
      spec.type = value.get<std::string>();
    } else if (key == "rank") {
      rank = small_int(value, at);
    } else if (key == "matrix") {
      spec.matrix = int_matrix(value, at);
    } else if (key == "labels") {
      spec.labels = string_list(value, at);
    } else {
      throw InputError(at, "unknown field");
    }
  }
  if (spec.type && spec.matrix) throw InputError(where, "give either type or matrix, not both");
  if (!spec.type && !spec.matrix) throw InputError(where, "missing type or matrix");
  if (spec.type && spec.labels) throw InputError(path_of(where, "labels"), "labels need a matrix");
  if (rank) {
    if (!spec.type) throw InputError(path_of(where, "rank"), "rank needs a family type");
    if (spec.type->size() != 1)
      throw InputError(path_of(where, "rank"), "rank needs a single-letter family");
    spec.type = *spec.type + std::to_string(*rank);
  }
  return spec;
}

std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
  int line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string what = e.what();
    // drop nlohmann's "[json.exception.parse_error.101] parse error at ...: " prefix
    if (auto colon = what.rfind(": "); colon != std::string::npos) what = what.substr(colon + 2);
    throw InputError(std::to_string(line) + ":" + std::to_string(column), what);
  }
}

}  // namespace

const std::vector<std::string>& task_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, shape] : shapes()) out.push_back(name);
    return out;
  }();
  return names;
}

bool is_task(const std::string& name) { return shapes().count(name) != 0; }

Problem parse_problem(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object()) throw InputError("$", "expected a JSON object");
  Problem p;
  for (const auto& [key, value] : j.items()) {
    auto at = path_of("$", key);
    if (key == "task") {
      if (!value.is_string()) throw InputError(at, "expected a string");
      p.task = value.get<std::string>();
      if (!is_task(*p.task)) throw InputError(at, "unknown task '" + *p.task + "'");
    } else if (key == "cartan") {
      p.cartan = parse_cartan(value, at);
    } else if (std::find(kSetFields.begin(), kSetFields.end(), key) != kSetFields.end()) {
      p.sets[key] = string_list(value, at);
    } else if (std::find(kFlagFields.begin(), kFlagFields.end(), key) != kFlagFields.end()) {
      if (!value.is_boolean()) throw InputError(at, "expected true or false");
      p.flags[key] = value.get<bool>();
    } else if (key == "types") {
      p.types = string_list(value, at);
    } else if (key == "rank_bound") {
      p.rank_bound = small_int(value, at);
      if (*p.rank_bound < 0) throw InputError(at, "expected a non-negative integer");
    } else {
      throw InputError(at, "unknown field");
    }
  }
  return p;
}

CartanSpec parse_cartan_matrix(const std::string& text) {
  return CartanSpec{{}, int_matrix(parse_json(text), "--cartan-matrix"), {}};
}

void check_fields(const Problem& p) {
  if (!p.task) throw InputError("$.task", "no task given");
  const TaskShape& shape = shapes().at(*p.task);
  auto allowed = [&](const std::string& f) {
    return std::find(shape.allowed.begin(), shape.allowed.end(), f) != shape.allowed.end();
  };
  auto reject = [&](const std::string& f) {
    throw InputError(path_of("$", f), "field is not used by task '" + *p.task + "'");
  };
  for (const auto& [f, v] : p.sets)
    if (!allowed(f)) reject(f);
  for (const auto& [f, v] : p.flags)
    if (!allowed(f)) reject(f);
  if (p.types && !allowed("types")) reject("types");
  if (p.rank_bound && !allowed("rank_bound")) reject("rank_bound");
  for (const auto& f : shape.required)
    if (!p.sets.count(f)) throw InputError(path_of("$", f), "required by task '" + *p.task + "'");
  if (shape.needs_cartan && !p.cartan) throw InputError("$.cartan", "no root system given");
  if (!shape.needs_cartan && p.cartan && !p.cartan->type)
    throw InputError("$.cartan", "task '" + *p.task + "' takes named types only");
}

CartanDatum resolve_cartan(const CartanSpec& spec) {
  if (spec.type) return CartanDatum::from_type(*spec.type);
  return CartanDatum::from_matrix(*spec.matrix, spec.labels.value_or(std::vector<std::string>{}));
}

std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

}  // namespace parind::cli
