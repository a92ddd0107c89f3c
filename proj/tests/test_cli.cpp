#include <catch_amalgamated.hpp>

#include <json.hpp>

#include <charconv>
#include <sstream>

#include "cli.hpp"

using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream o, e;
  int code = fracinv::cli::run(args, o, e);
  return {code, o.str(), e.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST_CASE("gen-poly csv", "[cli]") {
  auto r = run({"gen-poly", "--family", "inv-hermite", "--n", "3", "--method", "rec"});
  REQUIRE(r.code == 0);
  auto L = lines(r.out);
  REQUIRE(L.size() == 5);
  CHECK(L.front() == "n,coeffs");
  CHECK(L.back() == "3,0/1 -12/1 0/1 -8/1");
  // the three constructions print the same table
  for (const char* m : {"rod", "gen"}) CHECK(run({"gen-poly", "--family", "inv-hermite", "--n", "3", "--method", m}).out == r.out);
  auto j = run({"gen-poly", "--family", "inv-jacobi", "--alpha", "1/2", "--beta", "1/2", "--n", "1", "--out", "json"});
  REQUIRE(j.code == 0);
  auto d = json::parse(j.out);
  CHECK(d["command"] == "gen-poly");
  CHECK(d["results"]["polynomials"][1]["coeffs"] == "0/1 1/2");
}

TEST_CASE("favard moments", "[cli]") {
  auto r = run({"favard", "--family", "inv-hermite", "--N", "4"});
  REQUIRE(r.code == 0);
  auto d = json::parse(r.out);
  CHECK(d["results"]["moments"] == json::array({"2/1", "0/1", "-1/1", "0/1", "3/2"}));
  CHECK(d["failures"].empty());
  for (auto key : {"command", "params", "results", "failures"}) CHECK(d.contains(key));
  auto c = run({"favard", "--family", "inv-hermite", "--N", "4", "--out", "csv"});
  CHECK(lines(c.out).back() == "4,3/2");
}

TEST_CASE("usage errors exit 2", "[cli]") {
  auto a = run({"gen-poly", "--family", "inv-hermite", "--bogus"});
  CHECK(a.code == 2);
  CHECK(a.err.find("Usage") != std::string::npos);
  CHECK(a.out.empty());
  CHECK(run({}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"gen-poly", "--family", "inv-laguerre", "--alpha", "0.5"}).code == 2);  // rationals only
  CHECK(run({"gen-poly", "--family", "inv-laguerre", "--alpha", "1/0"}).code == 2);
  CHECK(run({"gen-poly", "--family", "legendre"}).code == 2);
  CHECK(run({"frac-apply", "--fn", "wave:1"}).code == 2);
  CHECK(run({"frac-apply", "--alpha", "1.5"}).code == 2);
  CHECK(run({"spectral-demo", "--basis", "invjacobi:1/2"}).code == 2);
  CHECK(run({"quad", "--measure", "legendre"}).code == 2);
}

TEST_CASE("numeric failures exit 1 with a JSON diagnostic", "[cli]") {
  auto r = run({"favard", "--family", "inv-laguerre", "--alpha", "2", "--N", "6"});
  CHECK(r.code == 1);
  auto d = json::parse(r.out);
  CHECK(d["failures"][0]["error"] == "parameter");
  CHECK(d["results"].is_null());
  // the integral of a constant does not converge
  auto w = run({"frac-apply", "--preset", "ou", "--op", "int", "--fn", "const:1", "--x", "0"});
  CHECK(w.code == 1);
  CHECK(json::parse(w.out)["failures"][0]["error"] == "precondition");
}

TEST_CASE("frac-apply and quad output", "[cli]") {
  auto r = run({"frac-apply", "--preset", "zero", "--fn", "exp:2", "--alpha", "0.5", "--x", "0,1"});
  REQUIRE(r.code == 0);
  auto L = lines(r.out);
  REQUIRE(L.size() == 3);
  CHECK(L[0] == "x,value");
  double v = 0;
  auto s = L[1].substr(2);
  std::from_chars(s.data(), s.data() + s.size(), v);
  CHECK(v == Catch::Approx(std::sqrt(2.0)).epsilon(1e-9));

  auto q = run({"quad", "--measure", "hermite", "--N", "2"});
  auto Q = lines(q.out);
  REQUIRE(Q.size() == 3);
  CHECK(Q[0] == "i,node,weight");
  // shortest round-trip: parsing gives the same double back
  auto fields = Q[2].substr(Q[2].find(',') + 1);
  double node = 0;
  std::from_chars(fields.data(), fields.data() + fields.find(','), node);
  CHECK(node == Catch::Approx(1 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(fields.substr(0, fields.find(',')) == "0.7071067811865476");

  // rational parameter; weights add up to Gamma(3/2)
  auto lq = json::parse(run({"quad", "--measure", "laguerre", "--alpha", "1/2", "--N", "5", "--out", "json"}).out);
  double total = 0;
  for (auto& w : lq["results"]["weights"]) total += w.get<double>();
  CHECK(total == Catch::Approx(std::tgamma(1.5)).epsilon(1e-13));
  CHECK(run({"quad", "--measure", "laguerre", "--alpha", "-2"}).code == 1);
}

TEST_CASE("spectral-demo is deterministic", "[cli]") {
  std::vector<std::string> args{"spectral-demo", "--basis", "invgauss", "--modes", "6", "--op", "maximal", "--seed", "3"};
  auto a = run(args), b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  auto d = json::parse(a.out);
  CHECK(d["results"]["maximal"]["ratio"].get<double>() >= 1.0 - 1e-9);
  auto h = json::parse(run({"spectral-demo", "--basis", "invlaguerre:1/2", "--modes", "4", "--op", "heat", "--t", "0"}).out);
  CHECK(h["results"]["heat"]["coeffs"] == h["results"]["coeffs"]);
}

TEST_CASE("extension-check report", "[cli]") {
  auto r = run({"extension-check", "--preset", "zero", "--fn", "exp:1", "--alpha", "0.5", "--x", "0"});
  REQUIRE(r.code == 0);
  auto d = json::parse(r.out);
  CHECK(d["results"]["trace"]["difference"].get<double>() < 1e-4);
  CHECK(d["results"]["residual"].size() == 3);
}

TEST_CASE("verify-all report", "[cli]") {
  auto r = run({"verify-all", "--fast", "--seed", "5"});
  auto d = json::parse(r.out);
  REQUIRE(d["results"]["criteria"].size() == 12);
  bool all = true;
  for (auto& c : d["results"]["criteria"]) all = all && c["pass"].get<bool>();
  CHECK(r.code == (all ? 0 : 1));
  CHECK(d["failures"].size() == [&] {
    size_t n = 0;
    for (auto& c : d["results"]["criteria"]) n += !c["pass"].get<bool>();
    return n;
  }());
}
