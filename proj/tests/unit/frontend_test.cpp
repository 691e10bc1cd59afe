#include <gtest/gtest.h>

#include <random>

#include "discstab/errors.hpp"
#include "discstab/frontend/expr.hpp"
#include "discstab/frontend/printer.hpp"
#include "discstab/frontend/problem.hpp"
#include "discstab/frontend/runner.hpp"
#include "helpers.hpp"

using namespace discstab;
using namespace discstab::frontend;
using testing_support::el;
using testing_support::poly;

TEST(Parse, Examples) {
  EXPECT_EQ(parse_element("(1+z^2)/2"), DiscElement::fraction(poly({1, 0, 1}), poly({2})));
  EXPECT_EQ(parse_element("1 - 4*z^4"), el({1, 0, 0, 0, -4}));
  EXPECT_EQ(parse_element("0.125*z + 3/4"), el({Rational(3, 4), Rational(1, 8)}));
  EXPECT_EQ(parse_element("2.5e-1"), DiscElement::constant(Rational(1, 4)));
  EXPECT_EQ(parse_element("-z^2"), el({0, 0, -1}));
  EXPECT_EQ(parse_element("1/(z-2) + 1/(z-3)"), el({-5, 2}, {6, -5, 1}));
  EXPECT_EQ(parse_element("2^3*z"), el({0, 8}));
}

TEST(Parse, NegativeExponentIsAParseError) {
  try {
    parse("z^-1");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_EQ(e.position(), 2u);
    ASSERT_EQ(e.expected().size(), 1u);
  }
}

TEST(Parse, ErrorPositionsAndExpectations) {
  struct Case {
    const char* text;
    std::size_t pos;
  };
  for (const Case& c : {Case{"", 0}, Case{"1 +", 3}, Case{"(z", 2}, Case{"z)", 1}, Case{"2 z", 2}, Case{"x", 0},
                        Case{"1 + . ", 4}, Case{"1e+", 3}}) {
    try {
      parse(c.text);
      ADD_FAILURE() << c.text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.position(), c.pos) << c.text;
      EXPECT_FALSE(e.expected().empty());
    }
  }
}

TEST(Elaborate, RejectsNonUnitDivisor) {
  for (const char* text : {"1/z", "1/(1 - z^2)", "z^2/z", "1/0"}) {
    try {
      parse_element(text);
      ADD_FAILURE() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::NotUnitDenominator) << text;
    }
  }
}

TEST(PrintElement, Examples) {
  EXPECT_EQ(print_element(el({1, 0, -1})), "1 - z^2");
  const DiscElement f = DiscElement::fraction(poly({1, 2, 1}), poly({4}));
  EXPECT_EQ(print_element(divide(DiscElement::constant(21), DiscElement::constant(20) * f + DiscElement::constant(2))),
            "21 / (7 + 10*z + 5*z^2)");
  EXPECT_EQ(print_element(DiscElement()), "0");
  EXPECT_EQ(print_element(f), "(1 + 2*z + z^2) / (4)");
  EXPECT_EQ(print_element(el({-3, 0, 1})), "-3 + z^2");
  EXPECT_EQ(print_poly(poly({Rational(-1, 2), -1})), "-1/2 - z");
}

TEST(FrontendProperty, PrintParseRoundTrip) {
  std::mt19937_64 rng(109);
  for (int i = 0; i < 500; ++i) {
    const DiscElement a = testing_support::random_element(rng, 6, 12);
    const std::string text = print_element(a);
    EXPECT_EQ(parse_element(text), a) << text;
  }
}

TEST(ProblemFile, SchemaValidation) {
  using nlohmann::json;
  const auto ok = problem_from_json(json::parse(
      R"({"task":"total-reduce","pairs":[["(1+z)^2/4","z+3"]],"options":{"x_candidates":["-1/10"],"budget":"500","seed":3}})"));
  EXPECT_EQ(ok.task, Task::TotalReduce);
  EXPECT_EQ(ok.options.search.budget, 500);
  EXPECT_EQ(ok.options.search.seed, 3u);
  ASSERT_TRUE(ok.options.x_candidates.has_value());
  EXPECT_EQ(ok.options.x_candidates->at(0), Rational(-1, 10));

  for (const char* bad : {R"([])", R"({"task":"fly"})", R"({"task":"bezout"})",
                          R"({"task":"bezout","pairs":[["1"]]})", R"({"task":"bezout","pairs":[["1","0"]],"extra":1})",
                          R"({"task":"bezout","pairs":[["1","0"]],"options":{"max_degree":-1}})",
                          R"({"task":"bezout","pairs":[["1","0"]],"options":{"budget":"1/2"}})",
                          R"({"task":"bezout","pairs":[["1","0"]],"options":{"colour":1}})",
                          R"({"task":"counterexample","options":{"n":0}})"}) {
    try {
      problem_from_json(json::parse(bad));
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::SchemaError) << bad;
    }
  }
}

namespace {

ProblemFile problem(Task t, std::vector<std::array<std::string, 2>> pairs) {
  ProblemFile p;
  p.task = t;
  p.pairs = std::move(pairs);
  return p;
}

}  // namespace

TEST(Run, SignLinkedExample) {
  const auto r = run(problem(Task::SignLinked, {{"1", "z^2"}, {"4*z^2", "1"}}));
  EXPECT_EQ(r.exit_code, kExitOk);
  const auto& res = r.document["result"];
  EXPECT_EQ(res["verdict"], "SignLinked");
  ASSERT_EQ(res["singular_points"].size(), 2u);
  for (const auto& p : res["singular_points"]) {
    EXPECT_NEAR(std::abs(std::stod(p["midpoint"].get<std::string>())), 0.70710678118654752, 1e-12);
    EXPECT_NEAR(std::stod(p["lambda"].get<std::string>()), 2.0, 1e-10);
  }
}

TEST(Run, StabilizeExample) {
  const auto r = run(problem(Task::Stabilize, {{"1", "0"}, {"z^2", "1 - z^2"}}));
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.document["result"]["alpha"]["expr"], "1");
  EXPECT_EQ(r.document["result"]["beta"]["expr"], "1");
  EXPECT_EQ(r.document["result"]["targets"][1]["unit_certificate"]["valid"], true);
}

TEST(Run, TotalReduceExample) {
  auto p = problem(Task::TotalReduce, {{"(1+z)^2/4", "z+3"}});
  p.options.x_candidates = std::vector<Rational>{Rational(-1, 10)};
  const auto r = run(p);
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.document["result"]["u"]["expr"], "21 / (7 + 10*z + 5*z^2)");
  EXPECT_EQ(r.document["result"]["identity"], "1");
}

TEST(Run, ExitCodeContract) {
  EXPECT_EQ(run(problem(Task::Bezout, {{"z", "z^3"}})).exit_code, kExitPrecondition);
  EXPECT_EQ(run(problem(Task::Stabilize, {{"1", "0"}, {"z", "1 - z^2"}})).exit_code, kExitPrecondition);
  EXPECT_EQ(run(problem(Task::Corona, {{"z^-1", "1"}})).exit_code, kExitInput);
  EXPECT_EQ(run(problem(Task::Corona, {{"1/z", "1"}})).exit_code, kExitInput);
  auto tight = problem(Task::Stabilize, {{"4", "2 - 4*z"}, {"(5 + 4*z - 5*z^2)^2", "-1 + 5*z"}});
  tight.options.search.budget = 1;
  EXPECT_EQ(run(tight).exit_code, kExitBudget);
  // A root within 1e-12 of the circle cannot be placed on either side.
  EXPECT_EQ(run(problem(Task::Corona, {{"1/(z - 1 - 1/1000000000000)", "1"}})).exit_code, kExitNumerical);
}

TEST(ExitCodes, EveryErrorKindIsMapped) {
  EXPECT_EQ(exit_code_for(ErrorKind::NotSignLinked), 2);
  EXPECT_EQ(exit_code_for(ErrorKind::NotInvertiblePair), 2);
  EXPECT_EQ(exit_code_for(ErrorKind::ReducibilityViolated), 2);
  EXPECT_EQ(exit_code_for(ErrorKind::NoAdmissibleValue), 2);
  EXPECT_EQ(exit_code_for(ErrorKind::BudgetExhausted), 3);
  EXPECT_EQ(exit_code_for(ErrorKind::ParseError), 4);
  EXPECT_EQ(exit_code_for(ErrorKind::SchemaError), 4);
  EXPECT_EQ(exit_code_for(ErrorKind::Indeterminate), 5);
  EXPECT_EQ(exit_code_for(ErrorKind::DegeneratePivot), 5);
  EXPECT_EQ(exit_code_for(ErrorKind::IdentityViolated), 1);
}

TEST(Run, DocumentsAreDeterministic) {
  const auto p = problem(Task::Stabilize, {{"z^2 + 1/2", "1 - z^2"}, {"z - 3", "z^2 + z/4"}});
  EXPECT_EQ(run(p).document.dump(), run(p).document.dump());
  EXPECT_FALSE(run(p).document.contains("timing"));
  EXPECT_TRUE(run(p, true).document.contains("timing"));
}
