#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "dopgb/cli.hpp"
#include "dopgb/errors.hpp"
#include "dopgb/groebner.hpp"
#include "dopgb/parser.hpp"

using namespace dopgb;
using dopgb::cli::run_command;

namespace {

const std::string kFixture = std::string(DOPGB_DATA_DIR) + "/six_vars.dop";

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("problem files") {
  auto pf = parse_problem(slurp(kFixture));
  CHECK(pf.nvars == 6);
  CHECK(pf.kind == OrderKind::GradedLex);
  REQUIRE(pf.generators.size() == 4);
  CHECK(pf.generators[2] == parse_operator("x1*D6 + x2*D6", 6));

  auto empty = parse_problem("vars = 2\n# nothing else\n");
  CHECK(empty.generators.empty());
  CHECK(parse_problem("vars=3\norder = grevlex\nD1").kind == OrderKind::GradedRevLex);
  CHECK(parse_problem("vars=3\norder = lex\nD1").kind == OrderKind::Lex);

  CHECK_THROWS_AS(parse_problem("D1\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("vars = 0\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("vars = two\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("vars = 2\norder = elim\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("vars = 2\nD1 - D1\n"), ParseError);
  try {
    parse_problem("vars = 6\nD1\nx1 + 2*x7*D2\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 8);
  }
}

TEST_CASE("operator expressions") {
  // '*' is the product of A, so D1*x1 carries the commutator term
  CHECK(parse_operator("D1*x1", 1) == parse_operator("x1*D1 + 1", 1));
  CHECK(parse_operator("(D1 + x1)^2", 1) == parse_operator("D1^2 + 2*x1*D1 + 1 + x1^2", 1));
  CHECK(parse_operator("3/6*D2 - 1/2*D2", 2).is_zero());
  CHECK(parse_operator("-(x1 - x2)", 2) == parse_operator("x2 - x1", 2));
  CHECK_THROWS_AS(parse_operator("D1^", 1), ParseError);
  CHECK_THROWS_AS(parse_operator("x1 +", 1), ParseError);
  CHECK_THROWS_AS(parse_operator("1/0", 1), ParseError);
  CHECK_THROWS_AS(parse_operator("D1^1001", 1), ParseError);
  CHECK_THROWS_AS(parse_operator("y1", 1), ParseError);
  CHECK_THROWS_AS(parse_poly("x1*D1", 1), ParseError);
}

TEST_CASE("printed operators parse back") {
  auto ord = MonomialOrder::graded_lex(6);
  auto F = parse_problem(slurp(kFixture)).generators;
  auto rep = groebner_ip(F, ord);
  for (const auto& v : rep.spoly_values) {
    CHECK(parse_operator(format_op(v, ord), 6) == v);
  }
  auto ord2 = MonomialOrder::graded_lex(2);
  for (const char* s : {"-1/3*x1^2*D2 + (x1 - x2)*D1*D2", "0", "7", "-D1"}) {
    auto f = parse_operator(s, 2);
    CHECK(parse_operator(format_op(f, ord2), 2) == f);
  }
}

TEST_CASE("cli gb and stats") {
  auto r = run_command({"gb", kFixture});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == std::vector<std::string>{"x1*D4 + 1", "x2*D5", "(x1 + x2)*D6", "D5*D6"});

  for (const char* m : {"new", "ip"}) {
    auto j = nlohmann::json::parse(run_command({"gb", "--stats", "json", "--method", m, kFixture}).out);
    CHECK(j.size() == 6);
    CHECK(j["method"] == m);
    CHECK(j["basis"].size() == 4);
    CHECK(j["spoly_count"] == (std::string(m) == "new" ? 5 : 12));
    CHECK(j["zero_reductions"] == j["spoly_count"]);
    CHECK(j["additions"].empty());
    CHECK(j["elapsed_ms"].is_number());
  }

  auto s = run_command({"gb", "--interreduce", "-"}, "vars = 1\nx1*D1 + 1\nD1\n");
  CHECK(s.code == 0);
  CHECK(s.out == "1\n");
}

TEST_CASE("cli check, reduce, member, syz, compare") {
  CHECK(run_command({"check", kFixture}).out ==
        "GROEBNER (5 commutative syzygy generators, all remainders zero)\n");
  CHECK(run_command({"check", "--method", "ip", kFixture}).out ==
        "GROEBNER (12 s-polynomials, all remainders zero)\n");
  auto nc = run_command({"check", "-"}, "vars = 1\nx1*D1 + 1\nD1\n");
  CHECK(nc.code == 0);
  CHECK(lines(nc.out).front() == "NOT-GROEBNER");
  CHECK(lines(nc.out).back() == "remainder: 1");

  auto red = run_command({"reduce", "--op", "x1*x2*D4*D5 + x2*D5", kFixture});
  CHECK(lines(red.out).back() == "remainder: 0");
  CHECK(lines(red.out).front() == "quotient f1: x2*D5");

  auto yes = run_command({"member", "--op", "x2*D5*D6", kFixture});
  CHECK(lines(yes.out).front() == "YES");
  CHECK(run_command({"member", "--op", "D1", kFixture}).out == "NO\n");

  auto syz = lines(run_command({"syz", kFixture}).out);
  CHECK(syz.size() == 5);
  CHECK(syz[2] == "s3 [D5*D6]: (0, y6, 0, -x2)");
  CHECK(run_command({"syz", "--strategy", "field", kFixture}).code == 2);
  CHECK(run_command({"syz", "--strategy", "ip", kFixture}).code == 0);

  CHECK(run_command({"compare", kFixture}).out ==
        "new: 5 reductions, basis 4\nip: 12 reductions, basis 4\nsame ideal: yes\n");
}

TEST_CASE("cli exit codes") {
  CHECK(run_command({"gb", "-"}, "vars = 6\nx7*D1\n").code == 2);
  CHECK(run_command({"gb", "-"}, "x1\n").code == 2);
  CHECK(run_command({"gb", "--method", "fast", kFixture}).code == 2);
  CHECK(run_command({"frobnicate"}).code == 2);
  CHECK(run_command({"reduce", kFixture}).code == 2);
  CHECK(run_command({"gb", "/nonexistent/file.dop"}).code == 2);
  auto cap = run_command({"gb", "--max-rounds", "1", "-"}, "vars = 1\nx1*D1 + 1\nD1\n");
  CHECK(cap.code == 3);
  CHECK(cap.err.find("cap") != std::string::npos);
  CHECK(run_command({"compare", "--max-basis", "2", "-"}, "vars = 1\nx1*D1 + 1\nD1\n").code == 3);
  CHECK(run_command({"--help"}).code == 0);

  using cli::describe_error;
  CHECK(describe_error(std::make_exception_ptr(InvariantViolation("x"))).first == 4);
  CHECK(describe_error(std::make_exception_ptr(ComputationCapExceeded("x"))).first == 3);
  CHECK(describe_error(std::make_exception_ptr(ParseError(1, 1, "x"))).first == 2);
  CHECK(describe_error(std::make_exception_ptr(std::runtime_error("x"))).first == 1);
}
