#include "cegaraba/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "cegaraba/benchgen.hpp"
#include "cegaraba/oracle.hpp"
#include "cegaraba/plus.hpp"
#include "cegaraba/preferred.hpp"

namespace cegaraba {

namespace {

enum class Task { kDsPrf, kEePrf, kDcAdm, kDcCom, kEeAdm, kEeCom, kSeCom, kGr };

const std::map<std::string, Task> kTasks = {
    {"DS-PRF", Task::kDsPrf},   {"EE-PRF", Task::kEePrf}, {"DC-ADM+", Task::kDcAdm}, {"DC-COM+", Task::kDcCom},
    {"EE-ADM+", Task::kEeAdm}, {"EE-COM+", Task::kEeCom}, {"SE-COM+", Task::kSeCom}, {"GR+", Task::kGr},
};

bool is_acceptance(Task t) { return t == Task::kDsPrf || t == Task::kDcAdm || t == Task::kDcCom; }
bool is_plain(Task t) { return t == Task::kDsPrf || t == Task::kEePrf; }

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// What a task prints, independent of how it was computed.
struct Outcome {
  std::optional<Answer> answer;
  std::optional<AssumptionSet> witness;  // printed for credulous YES
  std::optional<ExtensionFamily> family;
  bool single = false;                   // find/grounded: one set or NONE
  std::optional<AssumptionSet> set;
  RunStats stats;
};

std::optional<AssumptionSet> first_in_search_order(const ExtensionFamily& fam) {
  if (fam.empty()) return std::nullopt;
  return *std::min_element(fam.begin(), fam.end(), search_order_less<AssumptionTag>);
}

Outcome solve_main(const Framework& f, Task task, std::optional<SentenceId> q, AbstractionMode mode) {
  Outcome o;
  switch (task) {
    case Task::kDsPrf: {
      const Decision d = skeptical_preferred(f, *q);
      o.answer = d.answer;
      o.stats = d.stats;
      break;
    }
    case Task::kEePrf: {
      Enumeration e = enumerate_preferred(f);
      o.family = std::move(e.sets);
      o.stats = e.stats;
      break;
    }
    case Task::kDcAdm:
    case Task::kDcCom: {
      Decision d = task == Task::kDcAdm ? credulous_adm_plus(f, *q) : credulous_com_plus(f, *q, mode);
      o.answer = d.answer;
      if (d.answer == Answer::kYes) o.witness = std::move(d.witness);
      o.stats = d.stats;
      break;
    }
    case Task::kEeAdm:
    case Task::kEeCom: {
      PlusResult r = enumerate_plus(f, task == Task::kEeAdm ? PlusSemantics::kAdmissible : PlusSemantics::kComplete, mode);
      o.family = std::move(r.family);
      o.stats = r.stats;
      break;
    }
    case Task::kSeCom:
    case Task::kGr: {
      PlusResult r = enumerate_plus(f, task == Task::kSeCom ? PlusSemantics::kFindComplete : PlusSemantics::kGrounded, mode);
      o.single = true;
      o.set = std::move(r.set);
      o.stats = r.stats;
      break;
    }
  }
  return o;
}

Outcome solve_oracle(const Framework& f, Task task, std::optional<SentenceId> q) {
  const Oracle oracle(f);
  Outcome o;
  auto deriving = [&](const ExtensionFamily& fam) {
    ExtensionFamily out;
    for (const auto& e : fam)
      if (oracle.derives(e, *q)) out.push_back(e);
    return out;
  };
  switch (task) {
    case Task::kDsPrf: {
      const ExtensionFamily prf = oracle.extensions(OracleSemantics::kPreferred);
      o.answer = deriving(prf).size() == prf.size() ? Answer::kYes : Answer::kNo;
      break;
    }
    case Task::kEePrf: o.family = oracle.extensions(OracleSemantics::kPreferred); break;
    case Task::kDcAdm:
    case Task::kDcCom: {
      const auto sem = task == Task::kDcAdm ? OracleSemantics::kAdmissiblePlus : OracleSemantics::kCompletePlus;
      o.witness = first_in_search_order(deriving(oracle.extensions(sem)));
      o.answer = o.witness ? Answer::kYes : Answer::kNo;
      break;
    }
    case Task::kEeAdm: o.family = oracle.extensions(OracleSemantics::kAdmissiblePlus); break;
    case Task::kEeCom: o.family = oracle.extensions(OracleSemantics::kCompletePlus); break;
    case Task::kSeCom:
      o.single = true;
      o.set = first_in_search_order(oracle.extensions(OracleSemantics::kCompletePlus));
      break;
    case Task::kGr: {
      o.single = true;
      const ExtensionFamily com = oracle.extensions(OracleSemantics::kCompletePlus);
      if (!com.empty()) {
        AssumptionSet meet = f.all_assumptions();
        for (const auto& e : com) meet &= e;
        o.set = std::move(meet);
      }
      break;
    }
  }
  return o;
}

void print(const Framework& f, const Outcome& o, std::ostream& out) {
  if (o.answer) {
    out << (*o.answer == Answer::kYes ? "YES" : "NO") << '\n';
    if (o.witness) out << f.format(*o.witness) << '\n';
  } else if (o.single) {
    out << (o.set ? f.format(*o.set) : std::string("NONE")) << '\n';
  } else {
    for (const auto& e : *o.family) out << f.format(e) << '\n';
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int run_gen(const GenParams& p, const std::string& out_path, std::ostream& out, std::ostream& err) {
  const std::string text = serialize(gen_framework(p));
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file || !(file << text)) {
      err << "error: cannot write " << out_path << '\n';
      return kExitInput;
    }
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"CEGAR reasoner for assumption-based argumentation with preferences", "cegaraba"};
  std::string file;
  std::string task_name;
  std::string query;
  std::string abstraction = "strong";
  bool use_oracle = false;
  std::string stats_path;
  std::uint64_t seed = 0;
  app.add_option("--file", file, "Framework file");
  app.add_option("--task", task_name, "Reasoning task")->check(CLI::IsMember([] {
    std::vector<std::string> names;
    for (const auto& [name, task] : kTasks) names.push_back(name);
    return names;
  }()));
  app.add_option("--query", query, "Query sentence for acceptance tasks");
  app.add_option("--abstraction", abstraction, "Candidate abstraction for COM+ tasks")
      ->check(CLI::IsMember({"weak", "strong"}));
  app.add_flag("--oracle", use_oracle, "Answer with the brute-force reference semantics");
  app.add_option("--stats-json", stats_path, "Write run statistics as JSON");
  app.add_option("--seed", seed, "Recorded in the statistics; solving is deterministic");

  GenParams gp;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "Generate a random framework");
  gen->add_option("--n", gp.n_sentences, "Number of sentences")->required();
  gen->add_option("--ratio", gp.asm_ratio, "Fraction of sentences that are assumptions")->required();
  gen->add_option("--pref-prob", gp.pref_prob, "Probability of each preference pair");
  gen->add_option("--seed", gp.seed, "Generator seed");
  gen->add_option("--rules-per-head-max", gp.rules_per_head_max, "Upper bound on rules per head");
  gen->add_option("--body-len-max", gp.body_len_max, "Upper bound on rule body length");
  gen->add_option("--out", gen_out, "Output path (stdout when omitted)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*gen) {
    try {
      return run_gen(gp, gen_out, out, err);
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
  }

  auto usage = [&](const std::string& msg) {
    err << "error: " << msg << '\n';
    return kExitUsage;
  };
  if (task_name.empty()) return usage("--task is required");
  if (file.empty()) return usage("--file is required");
  const Task task = kTasks.at(task_name);
  if (is_acceptance(task) && query.empty()) return usage(task_name + " needs --query");
  if (!is_acceptance(task) && !query.empty()) return usage(task_name + " takes no --query");
  const AbstractionMode mode = abstraction == "weak" ? AbstractionMode::kWeak : AbstractionMode::kStrong;

  try {
    std::vector<std::string> warnings;
    Framework f = parse_framework(read_file(file), &warnings);
    for (const auto& w : warnings) err << "warning: " << w << '\n';
    if (is_plain(task) && f.has_preferences()) {
      err << "warning: " << task_name << " ignores the preference relation\n";
      f = f.without_preferences();
    }
    std::optional<SentenceId> q;
    if (!query.empty()) {
      q = f.find(query);
      if (!q) throw InputError("unknown query sentence '" + query + "'");
    }
    const Outcome o = use_oracle ? solve_oracle(f, task, q) : solve_main(f, task, q, mode);
    print(f, o, out);
    if (!stats_path.empty()) {
      const nlohmann::json j = {{"task", task_name},
                                {"abstraction", abstraction},
                                {"oracle", use_oracle},
                                {"seed", seed},
                                {"candidates", o.stats.candidates},
                                {"engine_calls", o.stats.engine_calls}};
      std::ofstream js(stats_path, std::ios::binary);
      if (!js || !(js << j.dump(2) << '\n')) throw InputError("cannot write " + stats_path);
    }
  } catch (const FrameworkError& e) {
    for (const auto& v : e.violations())
      err << "error: " << (v.line > 0 ? "line " + std::to_string(v.line) + ": " : "") << v.message << '\n';
    return kExitInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const OracleSizeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}

}  // namespace cegaraba
