#pragma once

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "avoid321/dyck.hpp"
#include "avoid321/genfun.hpp"
#include "avoid321/permutation.hpp"
#include "avoid321/polynomial.hpp"
#include "avoid321/serialize.hpp"
#include "avoid321/tableaux.hpp"
#include "avoid321/verify.hpp"

namespace avoid321::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kResource = 3,
  kMath = 4,
  kDomain = 5,
};

enum class OutputFormat { kText, kJson, kCsv };

inline Limits limits_from_env() {
  Limits limits;
  if (const char* env = std::getenv("AVOID321_MAX_N")) {
    try {
      limits.max_n = std::stoi(env);
    } catch (const std::exception&) {
      throw InvalidArgument(std::string("AVOID321_MAX_N is not an integer: ") + env);
    }
  }
  return limits;
}

inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidArgument("not an integer list: '" + text + "'");
    }
  }
  return out;
}

inline std::string sign_text(int s) { return s > 0 ? "+1" : "-1"; }

inline std::string csv_set(const DescentSet& d) {
  std::string out;
  for (int i : d.members()) out += (out.empty() ? "" : ";") + std::to_string(i);
  return out;
}

struct EnumerateArgs {
  int n = 0;
  std::vector<std::string> stats;
  std::optional<std::string> b;
  std::string order = "lex";
  OutputFormat format = OutputFormat::kText;
};

inline int run_enumerate(const EnumerateArgs& args, const Limits& limits, std::ostream& out) {
  for (const auto& s : args.stats) {
    if (s != "inv" && s != "ldes" && s != "lind" && s != "sign" && s != "des" && s != "ides") {
      throw InvalidArgument("unknown statistic '" + s + "'");
    }
  }
  check_size(args.n, limits);
  std::optional<DescentSet> b;
  if (args.b) {
    const auto members = parse_int_list(*args.b);
    for (int i : members)
      if (i < 1 || i > args.n - 2) throw InvalidArgument("--B member " + std::to_string(i) + " outside [n-2]");
    b = DescentSet::from_members(args.n, members);
  }

  if (args.format == OutputFormat::kCsv) {
    out << "perm";
    for (const auto& s : args.stats) out << ',' << s;
    out << '\n';
  }
  auto emit = [&](const Permutation& p) {
    if (b && !(inverse_descent_set(p).restricted_to(args.n - 2) == *b)) return;
    switch (args.format) {
      case OutputFormat::kJson: {
        json row{{"perm", p}};
        for (const auto& s : args.stats) {
          if (s == "inv") row[s] = inv(p);
          else if (s == "ldes") row[s] = ldes(p);
          else if (s == "lind") row[s] = lind(p);
          else if (s == "sign") row[s] = sign(p);
          else if (s == "des") row[s] = descent_set(p);
          else row[s] = inverse_descent_set(p);
        }
        out << row.dump() << '\n';
        break;
      }
      case OutputFormat::kCsv: {
        out << '"' << to_string(p) << '"';
        for (const auto& s : args.stats) {
          out << ',';
          if (s == "inv") out << inv(p);
          else if (s == "ldes") out << ldes(p);
          else if (s == "lind") out << lind(p);
          else if (s == "sign") out << sign(p);
          else if (s == "des") out << csv_set(descent_set(p));
          else out << csv_set(inverse_descent_set(p));
        }
        out << '\n';
        break;
      }
      case OutputFormat::kText: {
        out << to_string(p);
        for (const auto& s : args.stats) {
          out << ' ' << s << '=';
          if (s == "inv") out << inv(p);
          else if (s == "ldes") out << ldes(p);
          else if (s == "lind") out << lind(p);
          else if (s == "sign") out << sign_text(sign(p));
          else if (s == "des") out << to_string(descent_set(p));
          else out << to_string(inverse_descent_set(p));
        }
        out << '\n';
        break;
      }
    }
  };
  if (args.order == "lex") for_each_T_lex(args.n, emit, limits);
  else for_each_T(args.n, emit, limits);
  return kOk;
}

struct GenfunArgs {
  int n = 0;
  std::string method = "brute";
  std::string spec;
  bool hat = false;
  OutputFormat format = OutputFormat::kText;
  unsigned threads = 0;
};

/// "t=1,x=-1,z=1": t addresses every t_i, tK a single one.
inline LaurentPoly apply_spec(LaurentPoly p, const std::string& spec) {
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidArgument("substitution '" + item + "' lacks '='");
    std::string name = item.substr(0, eq);
    std::erase(name, ' ');
    const auto values = parse_int_list(item.substr(eq + 1));
    if (values.size() != 1) throw InvalidArgument("substitution '" + item + "' needs one integer value");
    if (name == "t") {
      p = substitute_all_t(p, values[0]);
    } else if (const auto v = Variable::parse(name)) {
      p = substitute(p, *v, values[0]);
    } else {
      throw InvalidArgument("unknown variable '" + name + "' in --spec");
    }
  }
  return p;
}

inline int run_genfun(const GenfunArgs& args, const Limits& limits, std::ostream& out) {
  GenFunMethod method;
  if (args.method == "brute") method = GenFunMethod::kBruteForce;
  else if (args.method == "recursive") method = GenFunMethod::kRecursive;
  else throw InvalidArgument("unknown method '" + args.method + "'");
  LaurentPoly p = f(args.n, method, BuildOptions{limits, args.threads});
  if (args.hat) p = specialize_hat(p, args.n);
  p = apply_spec(std::move(p), args.spec);
  if (args.format == OutputFormat::kJson) out << json(p).dump() << '\n';
  else out << canonical_string(p) << '\n';
  return kOk;
}

struct BijectArgs {
  std::optional<std::string> perm;
  std::optional<std::string> path;
  OutputFormat format = OutputFormat::kText;
};

inline int run_biject(const BijectArgs& args, std::ostream& out) {
  if (args.perm.has_value() == args.path.has_value()) throw InvalidArgument("give exactly one of --perm, --path");
  const Permutation perm = args.perm ? parse_permutation(*args.perm) : phi_inverse(DyckPath::parse(*args.path));
  if (!is_321_avoiding(perm)) throw PatternViolation(to_string(perm) + " is not 321-avoiding");
  const SYTPair pq = rsk(perm);
  const RectTableau t = glue(pq);
  const DyckPath p = tableau_to_path(t);
  const int n = perm.size();

  if (args.format == OutputFormat::kJson) {
    json j{{"direction", args.perm ? "perm-to-path" : "path-to-perm"},
           {"perm", perm},
           {"P", pq.p()},
           {"Q", pq.q()},
           {"T", t},
           {"path", p.to_string()},
           {"perm_stats",
            {{"inv", inv(perm)},
             {"ldes", ldes(perm)},
             {"lind", lind(perm)},
             {"sign", sign(perm)},
             {"des", descent_set(perm)},
             {"ides", inverse_descent_set(perm)}}},
           {"path_stats",
            {{"peaks", peaks(p)},
             {"des", path_descents(p)},
             {"ides", path_descents_inverse(p)},
             {"ldes", path_ldes(p)},
             {"lind", path_lind(p)},
             {"tail", tail(p)}}}};
    out << j.dump() << '\n';
    return kOk;
  }
  std::string peak_text = "{";
  for (int i : peaks(p)) peak_text += (peak_text.size() > 1 ? "," : "") + std::to_string(i);
  peak_text += "}";
  out << "perm: " << to_string(perm) << '\n'
      << "P:\n" << to_text(pq.p()) << '\n'
      << "Q:\n" << to_text(pq.q()) << '\n'
      << "T:\n" << to_text(t) << '\n'
      << "path: " << p.to_string() << '\n'
      << "perm stats: n=" << n << " inv=" << inv(perm) << " ldes=" << ldes(perm) << " lind=" << lind(perm)
      << " sign=" << sign_text(sign(perm)) << " des=" << to_string(descent_set(perm))
      << " ides=" << to_string(inverse_descent_set(perm)) << '\n'
      << "path stats: peaks=" << peak_text << " des=" << to_string(path_descents(p))
      << " ides=" << to_string(path_descents_inverse(p)) << " ldes=" << path_ldes(p) << " lind=" << path_lind(p)
      << " tail=" << tail(p) << '\n';
  return kOk;
}

struct VerifyArgs {
  std::string check = "all";
  std::optional<int> max_n;
  bool slow = false;
  bool no_timing = false;
  OutputFormat format = OutputFormat::kJson;
  unsigned threads = 0;
};

inline int run_verify(const VerifyArgs& args, const Limits& limits, std::ostream& out) {
  std::vector<std::string> ids;
  if (args.check == "all") ids = check_ids();
  else if (is_check_id(args.check)) ids = {args.check};
  else throw InvalidArgument("unknown check '" + args.check + "'");

  const VerifyOptions options{limits, args.threads};
  bool all_pass = true;
  for (const auto& id : ids) {
    const int max_n = args.max_n.value_or(default_max_n(id, args.slow ? Suite::kSlow : Suite::kFast));
    const CheckReport report = run_check(id, max_n, options);
    all_pass = all_pass && report.passed();
    if (args.format == OutputFormat::kText) {
      out << (report.passed() ? "PASS " : "FAIL ") << report.check_id << " n=" << report.n_min << ".."
          << report.n_max;
      if (report.witness) out << " witness=" << report.witness->dump();
      if (!args.no_timing) out << " (" << report.elapsed.count() << " ms)";
      out << '\n';
    } else {
      out << to_json_line(report, !args.no_timing).dump() << '\n';
    }
  }
  return all_pass ? kOk : kVerificationFailed;
}

/// Entry point shared by the binary and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumeration, generating functions, bijections and exhaustive checks for 321-avoiding permutations"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads for enumeration (0 = all cores)");

  const std::map<std::string, OutputFormat> formats{
      {"text", OutputFormat::kText}, {"json", OutputFormat::kJson}, {"csv", OutputFormat::kCsv}};
  const std::map<std::string, OutputFormat> text_json{{"text", OutputFormat::kText}, {"json", OutputFormat::kJson}};

  EnumerateArgs en;
  auto* enumerate = app.add_subcommand("enumerate", "List T_n or T_n(B) with statistics");
  enumerate->add_option("--n", en.n, "Size")->required();
  enumerate->add_option("--stats", en.stats, "Statistics: inv,ldes,lind,sign,des,ides")->delimiter(',');
  enumerate->add_option("--B", en.b, "Descent class B in [n-2], comma-separated (\"\" for the empty set)");
  enumerate->add_option("--order", en.order, "lex or insertion")->check(CLI::IsMember({"lex", "insertion"}));
  enumerate->add_option("--format", en.format, "text, json or csv")->transform(CLI::CheckedTransformer(formats));

  GenfunArgs gf;
  auto* genfun = app.add_subcommand("genfun", "Print the generating function f_n, optionally specialized");
  genfun->add_option("--n", gf.n, "Size")->required();
  genfun->add_option("--method", gf.method, "brute or recursive")->check(CLI::IsMember({"brute", "recursive"}));
  genfun->add_option("--spec", gf.spec, "Substitutions, e.g. t=1,x=-1,z=1");
  genfun->add_flag("--hat", gf.hat, "Set t_{n-1} = 1 before substituting");
  genfun->add_option("--format", gf.format, "text or json")->transform(CLI::CheckedTransformer(text_json));

  BijectArgs bj;
  auto* biject = app.add_subcommand("biject", "Run the permutation <-> tableaux <-> Dyck path chain");
  auto* perm_opt = biject->add_option("--perm", bj.perm, "321-avoiding permutation, e.g. 25134");
  auto* path_opt = biject->add_option("--path", bj.path, "Dyck path, e.g. ++--+-");
  perm_opt->excludes(path_opt);
  biject->add_option("--format", bj.format, "text or json")->transform(CLI::CheckedTransformer(text_json));

  VerifyArgs vf;
  auto* verify = app.add_subcommand("verify", "Run exhaustive identity checks");
  verify->add_option("--check", vf.check, "Check id or 'all'");
  verify->add_option("--max-n", vf.max_n, "Largest size (index for the signed checks)");
  verify->add_flag("--slow", vf.slow, "Use the slow-suite default ranges");
  verify->add_flag("--no-timing", vf.no_timing, "Omit timings for byte-identical output");
  verify->add_option("--format", vf.format, "json or text")->transform(CLI::CheckedTransformer(text_json));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const Limits limits = limits_from_env();
    gf.threads = threads;
    vf.threads = threads;
    if (*enumerate) return run_enumerate(en, limits, out);
    if (*genfun) return run_genfun(gf, limits, out);
    if (*biject) return run_biject(bj, out);
    return run_verify(vf, limits, out);
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << '\n';
    return kResource;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const MathError& e) {
    err << "internal math error: " << e.what() << '\n';
    return kMath;
  } catch (const PatternViolation& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace avoid321::cli
