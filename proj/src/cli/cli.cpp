#include "parind/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "parind/errors.hpp"
#include "src/cli/problem.hpp"
#include "src/cli/tasks.hpp"

namespace parind::cli {

namespace {

struct Options {
  std::vector<std::string> positional;
  std::string task;
  std::string format = "text";
  std::string cartan_type;
  std::string cartan_matrix;
  std::string out;
  std::optional<int> rank_bound;
  std::optional<std::string> types;
  std::map<std::string, std::optional<std::string>> sets;
  std::map<std::string, std::optional<bool>> flags;
  std::string mutant;
};

std::string read_all(std::istream& s) {
  return std::string(std::istreambuf_iterator<char>(s), std::istreambuf_iterator<char>());
}

std::string read_problem_file(const std::string& path, std::istream& in) {
  if (path == "-") return read_all(in);
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError(path, "cannot read problem file");
  return read_all(f);
}

WeylLimits weyl_limits_from_env() {
  WeylLimits limits;
  const char* raw = std::getenv("PARIND_GUARD_WEYL");
  if (!raw || !*raw) return limits;
  std::string_view v(raw);
  std::uint64_t n = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
  if (ec != std::errc() || ptr != v.data() + v.size() || n == 0)
    throw InputError("PARIND_GUARD_WEYL", "expected a positive integer, got '" + std::string(v) + "'");
  limits.max_order = n;
  return limits;
}

Problem assemble(const Options& o, std::istream& in) {
  std::string task_arg;
  std::string file;
  for (const auto& p : o.positional) {
    if (task_arg.empty() && file.empty() && is_task(p))
      task_arg = p;
    else if (file.empty())
      file = p;
    else
      throw InputError(p, "unexpected argument");
  }
  if (!o.task.empty()) {
    if (!is_task(o.task)) throw InputError("--task", "unknown task '" + o.task + "'");
    if (!task_arg.empty() && task_arg != o.task)
      throw InputError("--task", "conflicts with subcommand '" + task_arg + "'");
    task_arg = o.task;
  }

  Problem p = file.empty() ? Problem{} : parse_problem(read_problem_file(file, in));
  if (!task_arg.empty()) p.task = task_arg;
  if (!o.cartan_type.empty() && !o.cartan_matrix.empty())
    throw InputError("--cartan-type", "give either --cartan-type or --cartan-matrix");
  if (!o.cartan_type.empty()) p.cartan = CartanSpec{o.cartan_type, {}, {}};
  if (!o.cartan_matrix.empty()) p.cartan = parse_cartan_matrix(o.cartan_matrix);
  for (const auto& [field, value] : o.sets)
    if (value) p.sets[field] = split_labels(*value);
  for (const auto& [field, value] : o.flags)
    if (value) p.flags[field] = *value;
  if (o.types) p.types = split_labels(*o.types);
  if (o.rank_bound) {
    if (*o.rank_bound < 0) throw InputError("--rank-bound", "expected a non-negative integer");
    p.rank_bound = o.rank_bound;
  }
  check_fields(p);
  return p;
}

int exit_code_for(const Error& e) {
  switch (e.category()) {
    case ErrorCategory::Validation:
      return 2;
    case ErrorCategory::Semantic:
      return 3;
    case ErrorCategory::Resource:
      return 4;
  }
  return 3;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Combinatorics of parabolic induction for reductive p-adic groups", "parind"};
  app.add_option("args", o.positional, "task name and/or problem file ('-' reads stdin)");
  app.add_option("--task", o.task, "task to run");
  app.add_option("--format", o.format, "report format")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--cartan-type", o.cartan_type, "root system by name, e.g. A2, B3, A1xA2");
  app.add_option("--cartan-matrix", o.cartan_matrix, "Cartan matrix as JSON, e.g. [[2,-1],[-1,2]]");
  app.add_option("--out", o.out, "write the report to this file");
  app.add_option("--rank-bound", o.rank_bound, "verify: skip systems above this rank");
  app.add_option("--types", o.types, "verify: comma-separated root system names");
  struct SetFlag {
    const char* flag;
    const char* field;
  };
  for (auto [flag, field] : {SetFlag{"--P", "P"}, SetFlag{"--Q", "Q"}, SetFlag{"--P1", "P1"},
                             SetFlag{"--trivial-on", "trivial_on"},
                             SetFlag{"--declared-nr", "declared_nr"}, SetFlag{"--I", "I"},
                             SetFlag{"--J", "J"}})
    app.add_option(flag, o.sets[field], std::string("simple roots of ") + field + ", e.g. a1,a2");
  for (auto [flag, field] : {SetFlag{"--supercuspidal", "supercuspidal"},
                             SetFlag{"--irreducible-admissible", "irreducible_admissible"},
                             SetFlag{"--core-supercuspidal", "core_supercuspidal"}})
    app.add_option(flag, o.flags[field], "sigma flag (true/false)");
  app.add_option("--inject-mutant", o.mutant, "verify:all: swap in a broken Bruhat comparator")
      ->check(CLI::IsMember({"bruhat-flip"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    out << "\ntasks:";
    for (const auto& t : task_names()) out << " " << t;
    out << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    Problem problem = assemble(o, in);
    RunContext ctx;
    ctx.weyl = weyl_limits_from_env();
    if (o.mutant == "bruhat-flip") {
      if (*problem.task != "verify:all")
        throw InputError("--inject-mutant", "only meaningful for verify:all");
      ctx.bruhat = flipped_bruhat();
    }
    Report report = run_task(problem, ctx);

    std::string body;
    if (o.format == "json") {
      body = report.json.dump(2) + "\n";
    } else if (o.format == "dot") {
      if (!report.dot)
        throw InputError("--format", "dot output is only available for lattice tasks");
      body = *report.dot;
    } else {
      body = report.text;
    }

    if (o.out.empty()) {
      out << body;
    } else {
      std::ofstream f(o.out, std::ios::binary);
      if (!f || !(f << body)) throw InputError(o.out, "cannot write report");
    }
    return report.exit_code;
  } catch (const InputError& e) {
    err << "error: " << e.where() << ": " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

}  // namespace parind::cli
