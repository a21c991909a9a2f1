#include "dopgb/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "dopgb/division.hpp"
#include "dopgb/errors.hpp"
#include "dopgb/groebner.hpp"
#include "dopgb/parser.hpp"

namespace dopgb::cli {

namespace {

struct Options {
  std::string file;
  std::string method = "new";
  std::string stats;
  std::string op;
  std::string strategy = "general";
  bool interreduce = false;
  CompletionOptions caps;
};

std::string read_input(const std::string& file, const std::string& stdin_text) {
  if (file == "-") return stdin_text;
  std::ifstream in(file, std::ios::binary);
  if (!in) throw InvalidInput("cannot read '" + file + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string d_monomial(const Exp& e, std::size_t n) {
  return format_op(DiffOp::monomial(Poly::constant(n, 1), e), MonomialOrder::graded_lex(n));
}

std::string describe(const Combination& c, const MonomialOrder& ord) {
  std::vector<std::string> parts;
  for (const auto& [i, mult] : c.multipliers) {
    parts.push_back("(" + format_op(mult, ord) + ")*f" + std::to_string(i + 1));
  }
  return join(parts, " + ");
}

class Runner {
 public:
  Runner(const Options& opt, const std::string& stdin_text)
      : opt_(opt), problem_(parse_problem(read_input(opt.file, stdin_text))),
        ord_(problem_.order()) {}

  void gb(std::ostream& out) {
    auto options = opt_.caps;
    options.interreduce = opt_.interreduce;
    auto report = groebner(problem_.generators, ord_, parse_method(opt_.method), options);
    if (opt_.stats == "json") {
      nlohmann::json j;
      j["method"] = to_string(report.method);
      j["basis"] = strings(report.basis);
      j["spoly_count"] = report.spoly_count;
      j["zero_reductions"] = report.zero_reductions;
      j["additions"] = strings(report.additions);
      j["elapsed_ms"] = report.elapsed_ms;
      out << j.dump(2) << '\n';
      return;
    }
    for (const auto& g : report.basis) out << format_op(g, ord_) << '\n';
  }

  void check(std::ostream& out) {
    auto method = parse_method(opt_.method);
    auto result = is_groebner(problem_.generators, ord_, method);
    std::string what = method == Method::New ? " commutative syzygy generators"
                                             : " s-polynomials";
    if (result.groebner) {
      out << "GROEBNER (" << result.checked << what << ", all remainders zero)\n";
      return;
    }
    out << "NOT-GROEBNER\n";
    out << "witness: " << describe(*result.witness, ord_) << '\n';
    out << "remainder: " << format_op(*result.witness_remainder, ord_) << '\n';
  }

  void reduce(std::ostream& out) {
    auto g = parse_op();
    auto result = divide_op(g, problem_.generators, ord_);
    for (std::size_t i = 0; i < result.quotients.size(); ++i) {
      out << "quotient f" << i + 1 << ": " << format_op(result.quotients[i], ord_) << '\n';
    }
    out << "remainder: " << format_op(result.remainder, ord_) << '\n';
  }

  void member(std::ostream& out) {
    auto g = parse_op();
    const auto& F = problem_.generators;
    if (F.empty()) {
      out << (g.is_zero() ? "YES\n" : "NO\n");
      return;
    }
    auto report = groebner(F, ord_, parse_method(opt_.method), opt_.caps);
    auto div = divide_op(g, report.basis, ord_);
    if (!div.remainder.is_zero()) {
      out << "NO\n";
      return;
    }
    std::vector<DiffOp> cof(F.size(), DiffOp(ord_.nvars()));
    for (std::size_t i = 0; i < div.quotients.size(); ++i) {
      if (div.quotients[i].is_zero()) continue;
      for (std::size_t j = 0; j < F.size(); ++j) cof[j] += div.quotients[i] * report.certificates[i][j];
    }
    DiffOp check(ord_.nvars());
    for (std::size_t j = 0; j < F.size(); ++j) check += cof[j] * F[j];
    if (check != g) throw InvariantViolation("membership cofactors do not re-expand");
    out << "YES\n";
    for (std::size_t j = 0; j < F.size(); ++j) {
      out << "h" << j + 1 << ": " << format_op(cof[j], ord_) << '\n';
    }
  }

  void syz(std::ostream& out) {
    auto set = cg_generators(problem_.generators, ord_, parse_strategy(opt_.strategy));
    const std::size_t n = ord_.nvars();
    for (std::size_t k = 0; k < set.generators.size(); ++k) {
      const auto& s = set.generators[k];
      std::vector<std::string> comps;
      for (const auto& c : s.components) comps.push_back(format_bpoly(c, ord_));
      out << "s" << k + 1 << " [" << d_monomial(s.degree, n) << "]: (" << join(comps, ", ")
          << ")\n";
    }
  }

  void compare(std::ostream& out) {
    auto cmp = compare_methods(problem_.generators, ord_, opt_.caps);
    out << "new: " << cmp.new_method.spoly_count << " reductions, basis "
        << cmp.new_method.basis.size() << '\n';
    out << "ip: " << cmp.ip_method.spoly_count << " reductions, basis "
        << cmp.ip_method.basis.size() << '\n';
    out << "same ideal: " << (cmp.same_ideal ? "yes" : "no") << '\n';
    if (!cmp.same_ideal) throw InvariantViolation("the two methods produced different ideals");
  }

 private:
  DiffOp parse_op() const {
    if (opt_.op.empty()) throw InvalidInput("--op is required");
    return parse_operator(opt_.op, ord_.nvars());
  }

  std::vector<std::string> strings(const std::vector<DiffOp>& ops) const {
    std::vector<std::string> out;
    for (const auto& f : ops) out.push_back(format_op(f, ord_));
    return out;
  }

  Options opt_;
  ProblemFile problem_;
  MonomialOrder ord_;
};

}  // namespace

std::pair<int, std::string> describe_error(std::exception_ptr error) {
  try {
    std::rethrow_exception(error);
  } catch (const ParseError& e) {
    return {kParseError, std::string("parse error: ") + e.what()};
  } catch (const ComputationCapExceeded& e) {
    return {kCapExceeded, std::string("computation cap exceeded: ") + e.what()};
  } catch (const InvariantViolation& e) {
    return {kInvariantViolation, std::string("invariant violation: ") + e.what()};
  } catch (const InvalidInput& e) {
    return {kParseError, std::string("invalid input: ") + e.what()};
  } catch (const StrategyInapplicable& e) {
    return {kParseError, std::string("strategy inapplicable: ") + e.what()};
  } catch (const DimensionError& e) {
    return {kParseError, std::string("invalid input: ") + e.what()};
  } catch (const std::exception& e) {
    return {kError, std::string("error: ") + e.what()};
  }
}

CommandResult run_command(const std::vector<std::string>& args, const std::string& stdin_text) {
  CLI::App app{"Groebner bases for left ideals of differential operators", "dopgb"};
  app.require_subcommand(1);
  Options opt;
  struct Entry {
    const char* name;
    const char* help;
    void (Runner::*fn)(std::ostream&);
  };
  const Entry entries[] = {
      {"gb", "complete the input to a Groebner basis", &Runner::gb},
      {"check", "test whether the input is a Groebner basis", &Runner::check},
      {"reduce", "divide --op by the input operators", &Runner::reduce},
      {"member", "decide whether --op lies in the left ideal", &Runner::member},
      {"syz", "print commutative syzygy generators of the initials", &Runner::syz},
      {"compare", "run both completion methods and compare", &Runner::compare},
  };
  for (const auto& e : entries) {
    auto* sub = app.add_subcommand(e.name, e.help);
    sub->add_option("file", opt.file, "problem file, or - for stdin")->required();
    sub->add_option("--method", opt.method, "new or ip")
        ->check(CLI::IsMember({"new", "ip"}))
        ->capture_default_str();
    if (std::string(e.name) == "gb") {
      sub->add_option("--stats", opt.stats, "emit statistics")->check(CLI::IsMember({"json"}));
      sub->add_flag("--interreduce", opt.interreduce, "drop redundant basis elements");
    }
    if (std::string(e.name) == "gb" || std::string(e.name) == "member" ||
        std::string(e.name) == "compare") {
      sub->add_option("--max-rounds", opt.caps.max_rounds, "completion round limit")
          ->capture_default_str();
      sub->add_option("--max-basis", opt.caps.max_basis, "basis size limit")
          ->capture_default_str();
    }
    if (std::string(e.name) == "reduce" || std::string(e.name) == "member") {
      sub->add_option("--op", opt.op, "operator expression")->required();
    }
    if (std::string(e.name) == "syz") {
      sub->add_option("--strategy", opt.strategy, "general, field or ip")
          ->check(CLI::IsMember({"general", "field", "ip"}))
          ->capture_default_str();
    }
  }

  CommandResult result;
  std::ostringstream out;
  std::ostringstream err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    result.code = code == 0 ? kOk : kParseError;
    result.out = out.str();
    result.err = err.str();
    return result;
  }

  try {
    Runner runner(opt, stdin_text);
    auto* chosen = app.get_subcommands().front();
    for (const auto& e : entries) {
      if (chosen->get_name() == e.name) (runner.*e.fn)(out);
    }
  } catch (...) {
    auto [code, message] = describe_error(std::current_exception());
    err << message << '\n';
    result.code = code;
  }
  result.out = out.str();
  result.err = err.str();
  return result;
}

}  // namespace dopgb::cli
