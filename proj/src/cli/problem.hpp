#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "parind/rootsys.hpp"

namespace parind::cli {

// Malformed input: bad JSON, wrong field types, missing or unexpected fields.
// `where` is a JSON path ("$.P[1]") or "line:column" for syntax errors.
class InputError : public std::runtime_error {
 public:
  InputError(std::string where, const std::string& what)
      : std::runtime_error(what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

struct CartanSpec {
  std::optional<std::string> type;
  std::optional<std::vector<std::vector<int>>> matrix;
  std::optional<std::vector<std::string>> labels;
};

struct Problem {
  std::optional<std::string> task;
  std::optional<CartanSpec> cartan;
  // Label lists: P, Q, P1, trivial_on, declared_nr, I, J.
  std::map<std::string, std::vector<std::string>> sets;
  std::map<std::string, bool> flags;  // supercuspidal, irreducible_admissible, core_supercuspidal
  std::optional<std::vector<std::string>> types;
  std::optional<int> rank_bound;
};

const std::vector<std::string>& task_names();
bool is_task(const std::string& name);

Problem parse_problem(const std::string& text);
CartanSpec parse_cartan_matrix(const std::string& text);

// Every field present must be used by the task; required fields must exist.
void check_fields(const Problem& p);

CartanDatum resolve_cartan(const CartanSpec& spec);

// Comma-separated label list as given on the command line; "" is empty.
std::vector<std::string> split_labels(const std::string& text);

}  // namespace parind::cli
