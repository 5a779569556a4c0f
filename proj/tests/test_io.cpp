#include "helpers.hpp"

#include "coquecigrue/errors.hpp"
#include "coquecigrue/io.hpp"

#include <json.hpp>

#include <doctest.h>

#include <string>

using namespace coquecigrue;

namespace {

bool message_contains(const Error& e, const std::string& needle) {
    return std::string(e.what()).find(needle) != std::string::npos;
}

InputDocument strip_digest(InputDocument doc) {
    doc.digest.clear();
    return doc;
}

} // namespace

TEST_CASE("fixture corpus parses") {
    auto h = load_fixture("heisenberg");
    CHECK(h.name == "heisenberg");
    CHECK(h.kind == "lie");
    CHECK(h.basis == std::vector<std::string>{"x", "y", "z"});
    CHECK(h.brackets.size() == 2);
    CHECK(h.digest.size() == 16);

    auto adj = load_fixture("heisenberg_adjoint");
    CHECK(adj.kind == "lm");
    CHECK(adj.module_basis == std::vector<std::string>{"m1", "m2", "m3"});
    CHECK(adj.action.size() == 2);
    CHECK(adj.delta.size() == 3);

    auto empty_v = load_fixture("trivial_v_to_0");
    CHECK(empty_v.basis.empty());
    CHECK(empty_v.module_basis == std::vector<std::string>{"u1", "u2"});

    for (const char* stem : {"sl2", "solvable2", "abelian2", "leibniz_square", "leibniz_dim3",
                             "leibniz_heisenberg_ext", "exp_module", "trivial_to_g"}) {
        CAPTURE(stem);
        CHECK_NOTHROW(load_fixture(stem));
    }
}

TEST_CASE("inline text parses with comments and defaults") {
    auto doc = parse_document_text("# comment only\n"
                                   "\n"
                                   "kind = lie\n"
                                   "basis = a, b # trailing comment\n"
                                   "bracket a b = b: 1, a: -1/2\n",
                                   "<memory>");
    CHECK(doc.name == "unnamed");
    CHECK(doc.basis == std::vector<std::string>{"a", "b"});
    REQUIRE(doc.brackets.size() == 1);
    CHECK(doc.brackets[0].value.terms ==
          std::vector<std::pair<std::string, std::string>>{{"b", "1"}, {"a", "-1/2"}});

    auto a = algebra_from_document(doc);
    CHECK(a.bracket(0, 1) == SparseVec{{0, Rational(-1, 2)}, {1, Rational(1)}});
}

TEST_CASE("parse errors carry line numbers") {
    auto expect_parse = [](const std::string& text, const std::string& needle) {
        CAPTURE(text);
        CAPTURE(needle);
        try {
            parse_document_text(text, "<memory>");
            FAIL_CHECK("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(message_contains(e, needle));
        }
    };

    expect_parse("kind = lie\nbasis = x\njunk line\n", "line 3");
    expect_parse("kind = lie\nbasis = x\njunk line\n", "expected '='");
    expect_parse("kind = lie\nbasis = x\nbracket x = x: 1\n", "malformed 'bracket'");
    expect_parse("kind = lie\nkind = lie\nbasis = x\n", "repeated 'kind'");
    expect_parse("flavour = odd\nkind = lie\nbasis = x\n", "unknown directive 'flavour'");
    expect_parse("kind = lie\nbasis = x,,y\n", "empty list item");
    expect_parse("kind = lie\nbasis = x\nbracket x x = x 1\n", "label: coefficient");
    expect_parse("kind = lie\nbasis = x\nname =\n", "empty name");
}

TEST_CASE("validation errors name the offending label") {
    auto expect_validation = [](const std::string& text, const std::string& needle) {
        CAPTURE(text);
        CAPTURE(needle);
        try {
            parse_document_text(text, "<memory>");
            FAIL_CHECK("expected ValidationError");
        } catch (const ValidationError& e) {
            CHECK(message_contains(e, needle));
        }
    };

    expect_validation("basis = x\n", "missing kind");
    expect_validation("kind = lie\n", "missing basis");
    expect_validation("kind = group\nbasis = x\n", "kind must be leibniz, lie or lm");
    expect_validation("kind = lie\nbasis = x, x\n", "duplicate label 'x'");
    expect_validation("kind = lie\nbasis = x\nbracket x q = x: 1\n", "'q'");
    expect_validation("kind = lie\nbasis = x\nbracket x x = q: 1\n", "'q'");
    expect_validation("kind = lie\nbasis = x\nbracket x x = x: 1\nbracket x x = x: 2\n",
                      "duplicate");
    expect_validation("kind = lie\nbasis = x\nmodule_basis = m\n", "module data requires kind lm");
    expect_validation("kind = lm\nbasis = x\nmodule_basis = m\naction m x = w: 1\n", "'w'");
    expect_validation("kind = lm\nbasis = x\nmodule_basis = m\ndelta m = x: 1\ndelta m = x: 1\n",
                      "duplicate");
}

TEST_CASE("coefficients are validated at parse time") {
    CHECK_THROWS_AS(parse_document_text("kind = lie\nbasis = x\nbracket x x = x: 1.5\n",
                                        "<memory>"),
                    ValidationError);
}

TEST_CASE("module builder wants an lm document") {
    CHECK_THROWS_AS(lm_algebra_from_document(load_fixture("heisenberg")), ValidationError);
}

TEST_CASE("serialization is canonical") {
    for (const char* stem : {"heisenberg", "leibniz_dim3", "heisenberg_adjoint", "exp_module"}) {
        CAPTURE(stem);
        auto doc = load_fixture(stem);
        std::string text = serialize_document(doc);
        auto reparsed = parse_document_text(text, "<memory>");
        CHECK(strip_digest(reparsed) == strip_digest(doc));
        CHECK(serialize_document(reparsed) == text);
        CHECK(reparsed.digest == fnv1a64_hex(text));
    }
}

TEST_CASE("digest matches the reference vectors") {
    CHECK(fnv1a64_hex("") == "cbf29ce484222325");
    CHECK(fnv1a64_hex("a") == "af63dc4c8601ec8c");
    CHECK(fnv1a64_hex("b") != fnv1a64_hex("a"));
    CHECK(fnv1a64_hex("kind = lie\n").size() == 16);
}

TEST_CASE("run_command rejects bad requests") {
    auto doc = load_fixture("heisenberg");
    RunOptions opt;
    CHECK_THROWS_AS(run_command("explode", doc, opt), ValidationError);
    RunOptions bad_triv;
    bad_triv.triv = "upside-down";
    CHECK_THROWS_AS(run_command("integrate", doc, bad_triv), ValidationError);
    RunOptions bad_order;
    bad_order.order = 0;
    CHECK_THROWS_AS(run_command("integrate", doc, bad_order), ValidationError);
}

TEST_CASE("check reports match the document kind") {
    RunOptions opt;

    auto lie = run_command("check", load_fixture("sl2"), opt);
    REQUIRE(lie.checks.size() == 1);
    CHECK(lie.checks[0].name == "lie");
    CHECK(lie.ok());

    auto leib = run_command("check", load_fixture("leibniz_square"), opt);
    REQUIRE(leib.checks.size() == 1);
    CHECK(leib.checks[0].name == "leibniz");
    CHECK(leib.ok());

    auto lm = run_command("check", load_fixture("heisenberg_adjoint"), opt);
    std::vector<std::string> names;
    for (const auto& c : lm.checks) {
        names.push_back(c.name);
        CHECK(c.passed);
    }
    CHECK(names == std::vector<std::string>{"lie-degree0", "right-module", "equivariance",
                                            "lm-jacobi", "blockwise-matches-componentwise"});
}

TEST_CASE("failing input turns the report red") {
    auto doc = parse_document_text("kind = lie\nbasis = x, y\nbracket x y = x: 1\n", "<memory>");
    RunOptions opt;
    auto rep = run_command("check", doc, opt);
    CHECK_FALSE(rep.ok());
    auto j = nlohmann::json::parse(rep.to_json());
    CHECK(j["status"] == "fail");
}

TEST_CASE("reports serialize deterministically") {
    auto doc = load_fixture("heisenberg_adjoint");
    RunOptions opt;
    opt.triv = "both";
    auto first = run_command("integrate", doc, opt).to_json();
    auto second = run_command("integrate", doc, opt).to_json();
    CHECK(first == second);

    auto j = nlohmann::json::parse(first);
    CHECK(j["command"] == "integrate");
    CHECK(j["input"]["name"] == "heisenberg_adjoint");
    CHECK(j["input"]["digest"] == doc.digest);
    CHECK(j["status"] == "pass");

    bool left_axioms = false, sym_axioms = false, left_claim = false;
    for (const auto& c : j["checks"]) {
        std::string name = c["name"];
        left_axioms |= name == "formal-group-axioms[left]";
        sym_axioms |= name == "formal-group-axioms[sym]";
        left_claim |= name == "claim:g1-is-generator[left]";
    }
    CHECK(left_axioms);
    CHECK(sym_axioms);
    CHECK(left_claim);
}

TEST_CASE("text rendering carries the verdict") {
    auto doc = load_fixture("heisenberg");
    RunOptions opt;
    auto rep = run_command("check", doc, opt);
    auto text = rep.to_text();
    CHECK(text.find("status: pass") != std::string::npos);
    CHECK(text.find("lie") != std::string::npos);
}

TEST_CASE("oracle command cross checks the two constructions") {
    RunOptions opt;
    for (const char* stem : {"heisenberg", "leibniz_dim3", "heisenberg_adjoint"}) {
        CAPTURE(stem);
        auto rep = run_command("oracle", load_fixture(stem), opt);
        CHECK(rep.ok());
        bool agree = false;
        for (const auto& c : rep.checks)
            if (c.name == "cbh-agreement") {
                agree = true;
                CHECK(c.passed);
            }
        CHECK(agree);
    }
}

TEST_CASE("liezation command rejects module documents") {
    RunOptions opt;
    CHECK_THROWS_AS(run_command("liezation", load_fixture("heisenberg_adjoint"), opt),
                    ValidationError);
    CHECK(run_command("liezation", load_fixture("leibniz_heisenberg_ext"), opt).ok());
}
