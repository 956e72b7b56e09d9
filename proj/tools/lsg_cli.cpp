// lsg: generate layer Sun graphs, check witness sets, solve exact minima and
// sweep parameter grids.
//
// Exit status: 0 success / predicate holds, 1 predicate fails or verify found
// a mismatch, 2 usage error, 3 solve budget exceeded.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lsg/io.hpp"
#include "lsg/report.hpp"
#include "lsg/witnesses.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FamilyFlags {
  int n = 0, m = 0, k = 0;
  bool line = false;

  lsg::LayerSunParams params() const { return {n, m, k}; }
  lsg::Variant variant() const { return line ? lsg::Variant::line : lsg::Variant::base; }
};

void add_family_flags(CLI::App* cmd, FamilyFlags& f, bool required) {
  auto* n = cmd->add_option("--n", f.n, "cycle length (>= 3)");
  auto* m = cmd->add_option("--m", f.m, "branching factor (>= 2)");
  auto* k = cmd->add_option("--k", f.k, "number of layers (>= 3)");
  if (required) {
    n->required();
    m->required();
    k->required();
  } else {
    n->needs(m, k);
    m->needs(n, k);
    k->needs(n, m);
  }
  cmd->add_flag("--line", f.line, "use the line graph variant H");
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + out);
  f << text;
}

std::string describe(lsg::Vertex v, const lsg::GraphDocument& doc) {
  std::string s = std::to_string(v);
  if (v < doc.labels.size()) s += " \"" + doc.labels[v] + "\"";
  return s;
}

lsg::ResolvingKind parse_kind(const std::string& s) {
  static const std::map<std::string, lsg::ResolvingKind> kinds = {
      {"resolving", lsg::ResolvingKind::resolving},
      {"doubly", lsg::ResolvingKind::doubly},
      {"strong", lsg::ResolvingKind::strong}};
  return kinds.at(s);
}

// --- generate ---------------------------------------------------------------

struct GenerateArgs {
  FamilyFlags family;
  std::string format = "json";
  std::string out;
};

int run_generate(const GenerateArgs& a) {
  auto g = lsg::build_family(a.family.params(), a.family.variant());
  auto doc = lsg::to_document(g);
  emit(a.format == "dot" ? lsg::to_dot(doc) : lsg::to_json(doc).dump(2) + "\n", a.out);
  return kPass;
}

// --- check ------------------------------------------------------------------

struct CheckArgs {
  FamilyFlags family;
  std::string graph_file;
  std::string witness;
  std::string set_file;
  std::string kind;
};

int run_check(const CheckArgs& a) {
  const bool from_family = a.family.n != 0;
  if (from_family == !a.graph_file.empty()) {
    throw UsageError("give either --n/--m/--k or --graph");
  }
  if (a.witness.empty() == a.set_file.empty()) throw UsageError("give either --witness or --set");
  if (!a.witness.empty() && !from_family) {
    throw UsageError("--witness needs a generated graph (--n/--m/--k)");
  }

  lsg::GraphDocument doc;
  lsg::VertexSet w;
  std::optional<lsg::ResolvingKind> kind;
  if (!a.kind.empty()) kind = parse_kind(a.kind);
  std::string subject;

  if (from_family) {
    auto g = lsg::build_family(a.family.params(), a.family.variant());
    doc = lsg::to_document(g);
    subject = std::string(a.family.line ? "H(" : "LSG(") + std::to_string(a.family.n) + "," +
              std::to_string(a.family.m) + "," + std::to_string(a.family.k) + ")";
    if (!a.witness.empty()) {
      const auto& info = lsg::find_witness(a.witness);
      if (info.variant != g.variant()) {
        throw UsageError("witness " + a.witness + " is defined on the " +
                         lsg::to_string(info.variant) + " variant");
      }
      w = info.build(g);
      if (!kind) kind = info.expectations.front().kind;
      subject = "witness " + a.witness + " on " + subject;
    }
  } else {
    doc = lsg::graph_from_json(lsg::parse_json(lsg::read_file(a.graph_file), a.graph_file));
    subject = a.graph_file;
  }
  if (!a.set_file.empty()) {
    w = lsg::set_from_json(lsg::parse_json(lsg::read_file(a.set_file), a.set_file), doc);
    subject = "set " + a.set_file + " on " + subject;
  }
  if (!kind) throw UsageError("--kind is required with --set");

  const auto d = lsg::all_pairs_distances(doc.graph);
  const lsg::SetCheck r = lsg::check_set(*kind, d, w);
  std::cout << subject << ": " << lsg::to_string(*kind) << " " << (r.passed ? "pass" : "fail")
            << ", size " << w.size() << "\n";
  if (r.violation) {
    std::cout << "violating pair: " << describe(r.violation->first, doc) << ", "
              << describe(r.violation->second, doc) << "\n";
  }
  return r.passed ? kPass : kFail;
}

// --- solve ------------------------------------------------------------------

struct SolveArgs {
  FamilyFlags family;
  std::string which = "all";
  std::uint64_t budget = lsg::SolveOptions{}.budget;
  std::string format = "csv";
  bool timings = false;
};

void report_budget(const char* name, const lsg::ComputedValue& c) {
  if (!c.requested || c.value) return;
  std::cerr << name << ": budget exceeded, bounds [" << c.bounds->first << ", "
            << c.bounds->second << "] (witness-only)\n";
}

int run_solve(const SolveArgs& a) {
  lsg::Which which{a.which == "all" || a.which == "beta", a.which == "all" || a.which == "psi",
                   a.which == "all" || a.which == "sdim"};
  auto r = lsg::full_report(a.family.params(), a.family.variant(), a.budget, which);
  if (a.format == "json") {
    std::cout << lsg::to_json(r, a.timings).dump(2) << "\n";
  } else {
    std::cout << lsg::csv_header() << "\n" << lsg::csv_row(r, a.timings) << "\n";
  }
  report_budget("beta", r.beta);
  report_budget("psi", r.psi);
  report_budget("sdim", r.sdim);
  return r.budget_exceeded() ? kBudget : kPass;
}

// --- verify -----------------------------------------------------------------

struct VerifyArgs {
  int nmax = 0, mmax = 0, kmax = 0;
  std::uint64_t budget = lsg::SolveOptions{}.budget;
  std::string out;
  bool timings = false;
};

int run_verify(const VerifyArgs& a) {
  if (a.nmax < 3 || a.mmax < 2 || a.kmax < 3) {
    throw UsageError("empty grid: need --nmax >= 3, --mmax >= 2, --kmax >= 3");
  }
  std::string csv = lsg::csv_header() + "\n";
  std::size_t instances = 0, computed = 0, matched = 0, witness_ok = 0, skipped = 0;
  std::vector<std::string> problems;
  for (int n = 3; n <= a.nmax; ++n) {
    for (int m = 2; m <= a.mmax; ++m) {
      for (int k = 3; k <= a.kmax; ++k) {
        for (auto v : {lsg::Variant::base, lsg::Variant::line}) {
          auto r = lsg::full_report({n, m, k}, v, a.budget);
          csv += lsg::csv_row(r, a.timings) + "\n";
          ++instances;
          for (const auto* c : {&r.beta, &r.psi, &r.sdim}) {
            if (!c->value) ++skipped;
          }
          auto count = [&](const lsg::ComputedValue& c, std::size_t formula) {
            if (!c.value) return;
            ++computed;
            if (*c.value == formula) ++matched;
          };
          count(r.beta, r.formula.beta);
          count(r.psi, r.formula.psi);
          count(r.sdim, r.formula.sdim);
          if (r.witnesses_ok()) ++witness_ok;
          const std::string tag = std::string(v == lsg::Variant::base ? "LSG(" : "H(") +
                                  std::to_string(n) + "," + std::to_string(m) + "," +
                                  std::to_string(k) + ")";
          for (const auto& msg : r.mismatches()) problems.push_back(tag + ": " + msg);
        }
      }
    }
  }
  emit(csv, a.out);
  std::cerr << instances << " instances; " << matched << "/" << computed
            << " computed values equal the formula; " << skipped
            << " values skipped for budget; witnesses ok on " << witness_ok << "/" << instances
            << "\n";
  for (const auto& p : problems) std::cerr << "mismatch " << p << "\n";
  return problems.empty() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Layer Sun graphs: generation, witness checks, exact resolving-set minima"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "emit LSG(n,m,k) or H as JSON or DOT");
  add_family_flags(generate, gen.family, true);
  generate->add_option("--format", gen.format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
  generate->add_option("--out", gen.out, "output path (default stdout)");

  CheckArgs chk;
  auto* check = app.add_subcommand("check", "run a named witness or a set file against a predicate");
  add_family_flags(check, chk.family, false);
  check->add_option("--graph", chk.graph_file, "graph JSON file");
  check->add_option("--witness", chk.witness, "named witness set");
  check->add_option("--set", chk.set_file, "JSON array of vertex ids or labels");
  check->add_option("--kind", chk.kind, "resolving, doubly or strong")
      ->check(CLI::IsMember({"resolving", "doubly", "strong"}));

  SolveArgs sol;
  auto* solve = app.add_subcommand("solve", "exact minima within a predicate-evaluation budget");
  add_family_flags(solve, sol.family, true);
  solve->add_option("--which", sol.which, "beta, psi, sdim or all")
      ->check(CLI::IsMember({"beta", "psi", "sdim", "all"}));
  solve->add_option("--budget", sol.budget, "maximum predicate evaluations per search");
  solve->add_option("--format", sol.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  solve->add_flag("--timings", sol.timings, "include wall time (non-reproducible)");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "sweep n=3..nmax, m=2..mmax, k=3..kmax");
  verify->add_option("--nmax", ver.nmax)->required();
  verify->add_option("--mmax", ver.mmax)->required();
  verify->add_option("--kmax", ver.kmax)->required();
  verify->add_option("--budget", ver.budget, "maximum predicate evaluations per search");
  verify->add_option("--out", ver.out, "CSV output path (default stdout)");
  verify->add_flag("--timings", ver.timings, "include wall time (non-reproducible)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*generate) return run_generate(gen);
    if (*check) return run_check(chk);
    if (*solve) return run_solve(sol);
    if (*verify) return run_verify(ver);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const lsg::Error& e) {
    std::cerr << "error: " << lsg::to_string(e.kind()) << ": " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
