#include <doctest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "sextic/s6.hpp"
#include "sextic/serialize.hpp"

using namespace sextic;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("delta subcommand") {
  const Outcome o = run({"delta", "--A", "0", "--B", "1", "--T", "1", "--U", "1"});
  CHECK(o.code == cli::kExitOk);
  CHECK(nlohmann::json::parse(o.out) == nlohmann::json{{"delta", "-28"}});
  const Outcome f = run({"delta", "--A", "0/1", "--B", "2/4", "--T", "1", "--U", "0"});
  CHECK(f.code == cli::kExitOk);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"delta", "--A", "0.5", "--B", "1", "--T", "1", "--U", "1"}).code == cli::kExitUsage);
  CHECK(run({"delta", "--A", "0"}).code == cli::kExitUsage);
  CHECK(run({"nonsense"}).code == cli::kExitUsage);
  CHECK(run({"verify", "no-such-item"}).code == cli::kExitUsage);
  CHECK(run({"census", "--limit", "10"}).code == cli::kExitUsage);
  CHECK(run({"census", "--limit", "1e4", "--grid", "5e3,1e3"}).code == cli::kExitUsage);
}

TEST_CASE("pipeline subcommand") {
  const Outcome ok = run({"pipeline", "--model", "1,-4,-1,0", "--U", "5/4", "--D", "235/2704", "--T", "-5/26"});
  REQUIRE(ok.code == cli::kExitOk);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j["status"] == "ok");
  CHECK(j["delta"] == "-26");
  CHECK(j["k3"]["conductor_determined"] == "13");

  const Outcome off = run({"pipeline", "--A", "0", "--B", "1", "--U", "1", "--D", "0", "--T", "1"});
  CHECK(off.code == cli::kExitDegenerate);
  const auto d = nlohmann::json::parse(off.out);
  CHECK(d["status"] == "degenerate");
  CHECK(d["kind"] == "NotOnSurface");
  CHECK(d["residual"] == "28");
}

TEST_CASE("family subcommands") {
  const Outcome a = run({"family", "isog3", "--a", "1", "--b", "1", "--m", "2", "--n", "1"});
  REQUIRE(a.code == cli::kExitOk);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["s6point"]["U"] == "67/4");
  CHECK(j["conductor"]["product"] == "469");
  CHECK(run({"family", "160b1", "--m", "3", "--n", "5"}).code == cli::kExitOk);
  CHECK(run({"family", "e2cyclic", "--b", "1", "--c", "1", "--T", "2/3"}).code == cli::kExitOk);
}

TEST_CASE("fibration and census subcommands") {
  const Outcome f = run({"fibration", "check", "--A", "-1", "--B", "0", "--T0", "3", "--primes", "7,11,13"});
  CHECK(f.code == cli::kExitOk);
  CHECK(nlohmann::json::accept(f.out));
  const Outcome c = run({"census", "--limit", "1e4", "--grid", "1e3,1e4"});
  REQUIRE(c.code == cli::kExitOk);
  const auto j = nlohmann::json::parse(c.out);
  CHECK(j["counts"].size() == 2);
}

TEST_CASE("JSON round trip of rationals") {
  const auto r = point_to_sextic_field(CurveModel::weierstrass(1, 1), {Rational(7, 3), Rational(1), Rational(5)});
  const nlohmann::json j = to_json(r);
  const std::string text = j.dump();
  CHECK(nlohmann::json::parse(text) == j);
  CHECK(rational_from_json(to_json(Rational(-22, 7))) == Rational(-22, 7));
  CHECK(to_json(Rational(-22, 7)).is_string());
  CHECK_THROWS(rational_from_json(nlohmann::json(1.5)));
}

TEST_CASE("verify suite") {
  const Outcome list = run({"verify", "--list"});
  CHECK(list.code == cli::kExitOk);
  CHECK(list.out.find("example-160b1-1") != std::string::npos);
  const auto item = cli::run_verify_item("example-160b1-1");
  CHECK(item.passed());
  CHECK_THROWS_AS(cli::run_verify_item("missing"), std::out_of_range);
  CHECK(run({"verify", "delta-identity"}).code == cli::kExitOk);
}

TEST_CASE("a corrupted delta formula fails the identity item") {
  CHECK(cli::verify_delta_identity(delta_formula_poly()).passed());
  CHECK_FALSE(cli::verify_delta_identity(cli::delta_formula_sign_flipped()).passed());
}

TEST_CASE("verify items are idempotent") {
  const auto a = cli::to_json(cli::run_verify_item("cover-and-twist"));
  const auto b = cli::to_json(cli::run_verify_item("cover-and-twist"));
  CHECK(a == b);
  CHECK(a["passed"] == true);
}
