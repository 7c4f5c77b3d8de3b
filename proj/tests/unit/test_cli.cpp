#include <catch2/catch_amalgamated.hpp>

#include "hq/report.hpp"

using namespace hq;

namespace {

const std::string fixtures = HQ_FIXTURES_DIR;

Json run(const std::string& cmd, const std::string& alg, CommandOptions o = {}) { return run_command(cmd, alg, o); }

bool pass(const Json& r, const std::string& verdict) { return r.at("verdicts").at(verdict).at("pass").get<bool>(); }

}  // namespace

TEST_CASE("catalog lists the required families") {
    Json r = run("catalog", "");
    std::set<std::string> names, families;
    for (const auto& e : r["results"]["entries"]) {
        names.insert(e["name"].get<std::string>());
        families.insert(e["family"].get<std::string>());
    }
    for (const char* n : {"sweedler", "oq-sl-2", "klein-bottle-group", "laurent-1", "u-solvable-2", "taft-5"})
        CHECK(names.count(n));
    CHECK(families == std::set<std::string>{"fd", "quantum", "enveloping", "group", "laurent"});
    CHECK(exit_code(r) == 0);
    CHECK_THROWS_AS(find_entry("no-such-algebra"), Error);
}

TEST_CASE("every catalog entry builds and passes its axioms at the recommended bound") {
    for (const auto& e : catalog()) {
        CommandOptions o;
        o.degree_bound = e.degree_bound;
        Json r = run("axioms", e.name, o);
        INFO(e.name);
        CHECK(exit_code(r) == 0);
    }
}

TEST_CASE("axioms on a corrupted antipode fail with a location") {
    Json r = run("axioms", fixtures + "/oq-sl-2-corrupted.hopf");
    CHECK(exit_code(r) == 1);
    const Json& f = r["results"]["axioms"]["failures"];
    REQUIRE(!f.empty());
    CHECK(f[0]["axiom"].get<std::string>().rfind("antipode", 0) == 0);
    CHECK(!f[0]["location"].get<std::string>().empty());
}

TEST_CASE("integral by descent on O_q(SL_2)") {
    CommandOptions o;
    o.method = "descent";
    Json r = run("integral", "oq-sl-2", o);
    CHECK(exit_code(r) == 0);
    CHECK(r["results"]["pi0"] == Json({{"X11", "q^2"}, {"X12", "0"}, {"X21", "0"}, {"X22", "1/q^2"}}));
    CHECK(r["certificates"]["descent"]["steps"].size() == 2);
}

TEST_CASE("integral by homology on U([x,y] = x)") {
    CommandOptions o;
    o.method = "homology";
    Json r = run("integral", "u-solvable-2", o);
    CHECK(exit_code(r) == 0);
    CHECK(r["results"]["pi0"] == Json({{"x", "0"}, {"y", "-1"}}));
    CHECK(pass(r, "ad-trace"));
}

TEST_CASE("both methods agree on the Klein bottle group") {
    CommandOptions o;
    o.method = "both";
    Json r = run("integral", "klein-bottle-group", o);
    CHECK(exit_code(r) == 0);
    CHECK(pass(r, "methods-agree"));
    CHECK(pass(r, "adjoint-trace"));
}

TEST_CASE("method and family mismatches are errors") {
    CommandOptions o;
    o.method = "descent";
    CHECK(exit_code(run("integral", "sweedler", o)) == 2);
    CHECK(exit_code(run("integral", "u-sl2", o)) == 2);
    o.method = "homology";
    Json r = run("integral", "oq-sl-2", o);
    CHECK(exit_code(r) == 2);
    CHECK(r["verdicts"]["error"]["kind"] == "MethodMismatch");
    CHECK(exit_code(run("radford", "oq-sl-2")) == 2);
    CHECK(exit_code(run("axioms", "no-such-algebra")) == 2);
    CHECK(exit_code(run("frobnicate", "sweedler")) == 2);
}

TEST_CASE("nakayama on O_q(SL_3) is diagonal with q^(2(4-i-j))") {
    Json r = run("nakayama", "oq-sl-3");
    CHECK(exit_code(r) == 0);
    const Json& d = r["results"]["nu_diagonal"];
    auto expect = [](int e) {
        if (e == 0) return std::string("1");
        return e > 0 ? "q^" + std::to_string(e) : "1/q^" + std::to_string(-e);
    };
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) CHECK(d["X" + std::to_string(i) + std::to_string(j)] == expect(2 * (4 - i - j)));
}

TEST_CASE("radford and nakayama on Sweedler") {
    Json r = run("radford", "sweedler");
    CHECK(exit_code(r) == 0);
    CHECK(pass(r, "s4-formula"));
    CHECK(pass(r, "bimodule-identity"));
    Json n = run("nakayama", "sweedler");
    CHECK(exit_code(n) == 0);
    CHECK(n["results"]["integral_order"] == 2);
}

TEST_CASE("hochschild with the nakayama twist on U([x,y] = x)") {
    CommandOptions o;
    o.twist = "nakayama";
    Json r = run("hochschild", "u-solvable-2", o);
    CHECK(exit_code(r) == 0);
    CHECK(r["results"]["top_homology"] == 1);
    CHECK(r["certificates"]["homology"]["certified"][2] == true);
    o.twist = "identity";
    Json u = run("hochschild", "u-solvable-2", o);
    CHECK(u["results"]["top_homology"] == 0);
    CHECK(pass(u, "homology-certified"));
}

TEST_CASE("custom twist files") {
    CommandOptions o;
    o.twist = "custom-file";
    o.twist_file = fixtures + "/solvable-shift.map";
    Json r = run("hochschild", "u-solvable-2", o);
    CHECK(exit_code(r) == 0);
    CHECK(r["results"]["twist"]["y"] == "y + 1");
    o.twist_file.clear();
    CHECK(exit_code(run("hochschild", "u-solvable-2", o)) == 2);
}

TEST_CASE("finite-dimensional hochschild and duality") {
    Json r = run("hochschild", "taft-3");
    CHECK(exit_code(r) == 0);
    CHECK(pass(r, "double-route"));
    CHECK(exit_code(run("duality", "group-s3")) == 0);
    CHECK(exit_code(run("duality", "sweedler")) == 2);
    CHECK(exit_code(run("duality", "laurent-2")) == 0);
}

TEST_CASE("reports round-trip byte for byte and embed the seed") {
    CommandOptions o;
    o.seed = 12345678901234ULL;
    o.method = "both";
    for (const auto& [cmd, alg] : std::vector<std::pair<std::string, std::string>>{
             {"integral", "klein-bottle-group"}, {"nakayama", "taft-3"}, {"axioms", "oq-sl-2"}, {"catalog", ""}}) {
        Json r = run(cmd, alg, cmd == "integral" ? o : CommandOptions{});
        const std::string text = dump_report(r);
        CHECK(dump_report(Json::parse(text)) == text);
        for (const char* key : {"algebra", "command", "params", "results", "certificates", "verdicts"})
            CHECK(r.contains(key));
        CHECK(r.size() == 6);
    }
    Json r = run("nakayama", "taft-3", o);
    CHECK(r["params"]["seed"] == "12345678901234");
    CHECK(dump_report(run("nakayama", "taft-3", o)) == dump_report(r));
}

TEST_CASE("file-loaded algebras match the catalog") {
    Algebra a = load_algebra("oq-sl-2", 6);
    Algebra f = load_algebra(fixtures + "/oq-sl-2-corrupted.hopf", 6);
    CHECK(f.family == "file");
    CHECK(f.presented->sys().names() == a.presented->sys().names());
    CHECK_THROWS_AS(load_algebra(fixtures + "/solvable-shift.map", 6), Error);
}

TEST_CASE("text rendering lists every verdict") {
    Json r = run("radford", "sweedler");
    std::string t = render_text(r);
    CHECK(t.find("PASS s4-formula") != std::string::npos);
    CHECK(t.find("PASS bimodule-identity") != std::string::npos);
}
