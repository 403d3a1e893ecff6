#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "sepcode/code_io.hpp"
#include "sepcode/constructions.hpp"
#include "sepcode/signal_sim.hpp"
#include "sepcode/tracing.hpp"
#include "sepcode/verifiers.hpp"
#include "sepcode/version.hpp"

namespace sepcode::cli {

using json = nlohmann::ordered_json;

namespace {

/// Bad parameter values detected after CLI parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Library indices are 0-based; reports use 1-based c_1..c_M labels.
json one_based(const IndexSet& s) {
  json a = json::array();
  for (auto i : s) a.push_back(i + 1);
  return a;
}

json witness_json(const Witness& w) {
  return std::visit(
      [](const auto& wit) -> json {
        using W = std::decay_t<decltype(wit)>;
        if constexpr (std::is_same_v<W, FrameWitness>) {
          return {{"kind", "frame"}, {"coalition", one_based(wit.coalition)}, {"framed", wit.framed + 1}};
        } else if constexpr (std::is_same_v<W, SeparationWitness>) {
          return {{"kind", "separation"}, {"first", one_based(wit.first)}, {"second", one_based(wit.second)}};
        } else {
          return {{"kind", "strong_separation"},
                  {"coalition", one_based(wit.coalition)},
                  {"alternative", one_based(wit.alternative)}};
        }
      },
      w);
}

json verdict_json(const Verdict& v) {
  json j = {{"holds", v.holds}};
  j["witness"] = v.witness ? witness_json(*v.witness) : json(nullptr);
  if (v.forbidden_type) j["forbidden_type"] = std::string(to_string(*v.forbidden_type));
  return j;
}

json trace_json(const TraceReport& r) {
  json j = {{"outcome", r.identified() ? "identified" : "overflow"}};
  if (!r.identified()) j["message"] = TraceReport::overflow_message;
  j["colluders"] = one_based(r.colluders);
  j["candidates"] = one_based(r.candidates);
  json ev = json::array();
  for (const auto& e : r.evidence) ev.push_back({{"position", e.position + 1}, {"bit", e.bit}, {"index", e.index + 1}});
  j["evidence"] = std::move(ev);
  j["operations"] = r.operations;
  return j;
}

unsigned thread_cap() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SEPCODE_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(v));
    } catch (const std::exception&) {
      throw UsageError(std::string("SEPCODE_THREADS must be a positive integer, got '") + env + "'");
    }
  }
  return n;
}

IndexSet parse_colluders(const std::vector<std::size_t>& one_based_ids, const Code& code) {
  IndexSet out;
  for (auto id : one_based_ids) {
    if (id < 1 || id > code.size())
      throw UsageError("colluder index " + std::to_string(id) + " outside 1.." + std::to_string(code.size()));
    out.push_back(id - 1);
  }
  return out;
}

json envelope(const std::string& command, json inputs, json result) {
  return {{"command", command}, {"version", kVersion}, {"inputs", std::move(inputs)}, {"result", std::move(result)}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, verify and trace separable fingerprinting codes", "sepcode"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);

  std::string json_path;
  app.add_option("--json", json_path, "Write the JSON report to this file instead of stdout");

  // construct
  auto* construct = app.add_subcommand("construct", "Build a length-3 strongly 2-separable code");
  std::int64_t cq = 0;
  std::optional<std::int64_t> cs;
  std::string cout_path;
  construct->add_option("--q", cq, "Alphabet size")->required();
  construct->add_option("--s", cs, "Number of infinity symbols (default: the size-maximizing choice)");
  construct->add_option("--out,-o", cout_path, "Output code file")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "Check a code for a separation property");
  std::string vpath, vprop = "ssc";
  std::size_t vt = 2;
  bool voracle = false;
  verify->add_option("code,--code", vpath, "Code file")->required();
  verify->add_option("--property,-p", vprop, "fpc | sc | ssc")
      ->check(CLI::IsMember({"fpc", "sc", "ssc"}));
  verify->add_option("--t", vt, "Coalition size bound")->check(CLI::PositiveNumber);
  verify->add_flag("--oracle", voracle, "Use the exhaustive subset oracle for ssc");

  // trace
  auto* trace = app.add_subcommand("trace", "Identify colluders from a feasible set R");
  std::string tpath, tr, talg = "ssc";
  std::size_t tt = 2;
  trace->add_option("code,--code", tpath, "Binary code file")->required();
  trace->add_option("--r", tr, "R as n tokens from {0,1,*}")->required();
  trace->add_option("--t", tt, "Coalition size bound")->check(CLI::PositiveNumber);
  trace->add_option("--algorithm,-a", talg, "fpc | ssc")->check(CLI::IsMember({"fpc", "ssc"}));

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Run embedding, averaging attack and detection");
  std::string spath;
  std::vector<std::size_t> scolluders;
  std::size_t sdim = 0, st = 2;
  double salpha = 0.1, seps = kDefaultEps;
  std::uint64_t sseed = 1;
  bool sthen = false;
  simulate->add_option("code,--code", spath, "Binary code file")->required();
  simulate->add_option("--colluders", scolluders, "1-based colluder indices, comma separated")
      ->required()
      ->delimiter(',');
  simulate->add_option("--dim", sdim, "Signal dimension N (default: code length)");
  simulate->add_option("--alpha", salpha, "Embedding strength");
  simulate->add_option("--seed", sseed, "RNG seed");
  simulate->add_option("--eps", seps, "Detection threshold tolerance");
  simulate->add_option("--t", st, "Coalition bound passed to the tracer")->check(CLI::PositiveNumber);
  simulate->add_flag("--then-trace", sthen, "Feed the detected R into the strongly-separable tracer");

  // compose
  auto* compose = app.add_subcommand("compose", "One-hot expand a q-ary code into a binary code");
  std::string mpath, mout;
  compose->add_option("code,--code", mpath, "Input code file")->required();
  compose->add_option("--out,-o", mout, "Output code file")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsage;
  }

  json report;
  int status = kOk;
  try {
    if (*construct) {
      const ConstructionPlan plan = cs ? plan_for(cq, *cs) : optimal_s(cq);
      const Code code = build_length3(plan.q, plan.s);
      try {
        write_code_file(cout_path, code);
      } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return kCannotCreate;
      }
      report = envelope("construct", {{"q", cq}, {"s", cs ? json(*cs) : json(nullptr)}, {"out", cout_path}},
                        {{"q", plan.q},
                         {"s", plan.s},
                         {"m", plan.m},
                         {"w", plan.w},
                         {"M", code.size()},
                         {"predicted_M", plan.predicted_M},
                         {"n", code.length()}});
    } else if (*verify) {
      const Code code = read_code_file(vpath);
      VerifyOptions opts;
      opts.threads = thread_cap();
      Verdict v;
      std::string method = "exhaustive";
      if (vprop == "fpc") v = is_fpc(code, vt, opts);
      else if (vprop == "sc") v = is_sc(code, vt, opts);
      else if (voracle) v = is_ssc_naive(code, vt, opts), method = "subset-oracle";
      else v = is_ssc(code, vt, opts), method = "delete-one";
      json result = {{"property", vprop}, {"t", vt}, {"method", method},
                     {"code", {{"n", code.length()}, {"M", code.size()}, {"q", code.alphabet_size()}}}};
      result.update(verdict_json(v));
      report = envelope("verify", {{"code", vpath}, {"property", vprop}, {"t", vt}, {"oracle", voracle}},
                        std::move(result));
      status = v.holds ? kOk : kDoesNotHold;
    } else if (*trace) {
      const Code code = read_code_file(tpath);
      FeasibleSet r;
      try {
        r = parse_binary_feasible_set(tr);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const TraceReport rep = talg == "fpc" ? lacc_identify(code, r, tt) : ssc_trace(code, r, tt);
      report = envelope("trace", {{"code", tpath}, {"r", tr}, {"t", tt}, {"algorithm", talg}}, trace_json(rep));
      status = rep.identified() ? kOk : kOverflow;
    } else if (*simulate) {
      const Code code = read_code_file(spath);
      if (!code.is_binary()) throw UsageError("simulate requires a binary code");
      const Coalition coalition(code, parse_colluders(scolluders, code));
      const std::size_t dim = sdim ? sdim : code.length();
      const EmbeddingContext ctx = make_context(dim, code.length(), salpha, sseed);
      const DetectionStatistics stats = simulate_attack(ctx, code, coalition);
      const FeasibleSet r = threshold(stats, seps);
      json result = {{"T", stats.values}, {"R", format_binary_feasible_set(r)}};
      if (sthen) {
        const TraceReport rep = ssc_trace(code, r, st);
        json tj = trace_json(rep);
        tj["match"] = rep.identified() && rep.colluders == coalition.members();
        result["trace"] = std::move(tj);
        status = rep.identified() ? kOk : kOverflow;
      }
      report = envelope("simulate",
                        {{"code", spath}, {"colluders", scolluders}, {"dim", dim}, {"alpha", salpha},
                         {"seed", sseed}, {"eps", seps}, {"t", st}, {"then_trace", sthen}},
                        std::move(result));
    } else if (*compose) {
      const Code code = read_code_file(mpath);
      const Code binary = one_hot_compose(code);
      try {
        write_code_file(mout, binary);
      } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return kCannotCreate;
      }
      report = envelope("compose", {{"code", mpath}, {"out", mout}},
                        {{"input", {{"n", code.length()}, {"M", code.size()}, {"q", code.alphabet_size()}}},
                         {"output", {{"n", binary.length()}, {"M", binary.size()}, {"q", 2}}}});
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InstanceTooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  const std::string text = report.dump(2) + "\n";
  if (json_path.empty()) {
    out << text;
  } else {
    std::ofstream f(json_path);
    if (!(f << text)) {
      err << "error: cannot write " << json_path << '\n';
      return kCannotCreate;
    }
  }
  return status;
}

}  // namespace sepcode::cli
