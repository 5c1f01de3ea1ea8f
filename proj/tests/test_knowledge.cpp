#include <catch2/catch_amalgamated.hpp>

#include <doldw/knowledge.hpp>

#include <fstream>
#include <sstream>

using namespace doldw;

TEST_CASE("builtin fact table loads and is self-consistent") {
    const KnowledgeBase kb = KnowledgeBase::builtin();
    CHECK(!kb.facts().empty());
    CHECK_NOTHROW(kb.check_consistency());
}

TEST_CASE("shipped fact file matches the compiled-in table byte for byte") {
    std::ifstream in(DOLDW_FACTS_FILE, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == builtin_facts_text());
}

TEST_CASE("every citation id carries its registered quote") {
    const KnowledgeBase kb = KnowledgeBase::builtin();
    const auto& reg = citation_registry();
    for (const auto& f : kb.facts()) {
        CAPTURE(f.id);
        auto it = reg.find(f.citation_id);
        REQUIRE(it != reg.end());
        CHECK(it->second == f.quote);
    }
}

TEST_CASE("projective-space suspension table is total") {
    const KnowledgeBase kb = KnowledgeBase::builtin();
    for (int k = 0; k <= 12; ++k)
        for (int m = 1; m <= 64; ++m) {
            CAPTURE(k, m);
            CHECK(kb.rp_w_trivial(k, m).value != Tri::Unknown);
        }
}

TEST_CASE("lookup fixtures") {
    const KnowledgeBase kb = KnowledgeBase::builtin();
    CHECK(kb.rp_w_trivial(2, 1).value == Tri::True);
    CHECK(kb.rp_w_trivial(2, 2).value == Tri::False);
    CHECK(kb.rp_w_trivial(3, 5).value == Tri::False);
    CHECK(kb.rp_w_trivial(3, 4).value == Tri::True);
    CHECK(kb.rp_w_trivial(0, 7).value == Tri::False);
    CHECK(kb.rp_w_trivial(6, 3).value == Tri::False);
    CHECK(kb.rp_w_trivial(6, 4).value == Tri::True);
    CHECK(kb.rp_w_trivial(9, 100).value == Tri::True);

    CHECK(kb.cp_w_trivial(8, 4).value == Tri::True);
    CHECK(kb.cp_w_trivial(6, 2).value == Tri::True);
    CHECK(kb.cp_w_trivial(6, 3).value == Tri::Unknown);  // odd n not covered by these rows
    CHECK(kb.cp_w_trivial(4, 3).value == Tri::False);
    CHECK(kb.cp_w_trivial(4, 1).value == Tri::False);
    CHECK(kb.cp_w_trivial(10, 7).value == Tri::True);
    CHECK(kb.cp_w_trivial(5, 2).value == Tri::Unknown);

    CHECK(kb.stunted_w_trivial(12, 7, 3).value == Tri::True);
    CHECK(kb.stunted_w_trivial(5, 4, 2).value == Tri::True);
    CHECK(kb.stunted_w_trivial(2, 1, 0).value == Tri::True);
    CHECK(kb.stunted_w_trivial(2, 2, 0).value == Tri::False);
    CHECK(kb.stunted_w_trivial(3, 1, 0).value == Tri::False);  // m+k = 4
    CHECK_THROWS_AS(kb.stunted_w_trivial(3, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(kb.stunted_w_trivial(3, 2, -1), std::invalid_argument);

    CHECK(kb.ko_vanishes(3, 10).value == Tri::True);
    CHECK(kb.ko_vanishes(3, 9).value == Tri::Unknown);
    CHECK(kb.ko_vanishes(2, 1).value == Tri::True);
    CHECK(kb.ko_vanishes(2, 2).value == Tri::Unknown);
    CHECK(kb.ko_vanishes(5, 8).value == Tri::True);
    CHECK(kb.ko_vanishes(7, 7).value == Tri::True);
    CHECK(kb.ko_vanishes(4, 4).value == Tri::Unknown);

    CHECK(kb.explicit_dold_facts(3, 4, 5).value == Tri::True);
    CHECK(kb.explicit_dold_facts(5, 6, 3).value == Tri::True);
    CHECK(kb.explicit_dold_facts(5, 3, 3).value == Tri::Unknown);
    CHECK(kb.explicit_dold_facts(4, 1, 6).value == Tri::False);
    CHECK(kb.explicit_dold_facts(4, 1, 3).value == Tri::Unknown);
    CHECK(kb.explicit_dold_facts(4, 1, 1).value == Tri::Unknown);  // row requires n > 1
}

TEST_CASE("lookups report the governing fact") {
    const KnowledgeBase kb = KnowledgeBase::builtin();
    auto hit = kb.rp_w_trivial(2, 2);
    REQUIRE(hit.fact != nullptr);
    CHECK(hit.fact->citation_id == "rp-nt-pow2");
    CHECK(kb.rp_w_trivial(9, 100).fact->citation_id == "susp-nine");
    CHECK(kb.explicit_dold_facts(4, 1, 6).fact->citation_id == "dold-41-nt");
    CHECK(kb.cp_w_trivial(5, 2).fact == nullptr);
}

TEST_CASE("pattern grammar") {
    auto fact_value = [](const std::string& line, int k, int m, int n) {
        const KnowledgeBase kb = KnowledgeBase::from_string(line);
        return kb.explicit_dold_facts(k, m, n).value;
    };
    const std::string base = "dold_trivial | %K | %M | %N | %C | dold-35 | q";
    auto render = [&](const std::string& K, const std::string& M, const std::string& N,
                      const std::string& C) {
        std::string s = base;
        s.replace(s.find("%K"), 2, K);
        s.replace(s.find("%M"), 2, M);
        s.replace(s.find("%N"), 2, N);
        s.replace(s.find("%C"), 2, C);
        return s;
    };
    CHECK(fact_value(render("3", "*", "*", "-"), 3, 7, 7) == Tri::True);
    CHECK(fact_value(render("3", "*", "*", "-"), 4, 7, 7) == Tri::Unknown);
    CHECK(fact_value(render("1,4", "*", "*", "-"), 4, 1, 1) == Tri::True);
    CHECK(fact_value(render("2..5", "*", "*", "-"), 5, 1, 1) == Tri::True);
    CHECK(fact_value(render("2..5", "*", "*", "-"), 6, 1, 1) == Tri::Unknown);
    CHECK(fact_value(render("6..", "*", "*", "-"), 100, 1, 1) == Tri::True);
    CHECK(fact_value(render("*", "8t+3", "*", "-"), 1, 11, 1) == Tri::True);
    CHECK(fact_value(render("*", "8t+3", "*", "-"), 1, 12, 1) == Tri::Unknown);
    CHECK(fact_value(render("*", "*", "even", "-"), 1, 1, 4) == Tri::True);
    CHECK(fact_value(render("*", "*", "even", "-"), 1, 1, 5) == Tri::Unknown);
    CHECK(fact_value(render("*", "*", "odd", "-"), 1, 1, 5) == Tri::True);
    // side conditions
    CHECK(fact_value(render("*", "*", "*", "m>=k"), 3, 3, 1) == Tri::True);
    CHECK(fact_value(render("*", "*", "*", "m>=k"), 3, 2, 1) == Tri::Unknown);
    CHECK(fact_value(render("*", "*", "*", "m+k=4,8"), 5, 3, 1) == Tri::True);
    CHECK(fact_value(render("*", "*", "*", "m+k=4,8"), 5, 4, 1) == Tri::Unknown);
    CHECK(fact_value(render("*", "*", "*", "m!=2,3"), 1, 4, 1) == Tri::True);
    CHECK(fact_value(render("*", "*", "*", "m!=2,3"), 1, 3, 1) == Tri::Unknown);
    CHECK(fact_value(render("*", "*", "*", "n%4!=3"), 1, 1, 7) == Tri::Unknown);
    CHECK(fact_value(render("*", "*", "*", "n%4!=3"), 1, 1, 6) == Tri::True);
    CHECK(fact_value(render("*", "*", "*", "m<k n>=2"), 2, 1, 2) == Tri::True);
    CHECK(fact_value(render("*", "*", "*", "m<k n>=2"), 2, 1, 1) == Tri::Unknown);
}

TEST_CASE("malformed fact lines are rejected with the line number") {
    auto expect_bad = [](const std::string& text, const std::string& needle) {
        try {
            KnowledgeBase::from_string(text);
            FAIL("expected a parse failure for: " << text);
        } catch (const ConsistencyError&) {
            FAIL("consistency error instead of a parse failure for: " << text);
        } catch (const std::runtime_error& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_bad("bogus_kind | 1 | * | * | - | x | q", "line 1");
    expect_bad("dold_trivial | 1 | * | * | - | x", "line 1");          // missing column
    expect_bad("dold_trivial | 8z+1 | * | * | - | x | q", "line 1");   // bad pattern
    expect_bad("dold_trivial | 1 | * | * | m?3 | x | q", "line 1");    // bad condition
    expect_bad("\n\ndold_trivial | 1 | * | * | - | x", "line 3");
}

TEST_CASE("contradictory fact tables are rejected naming both rows") {
    const std::string text =
        "rp_trivial     | 2 | 1 | * | - | a-yes | q1\n"
        "rp_not_trivial | 2 | 1 | * | - | a-no  | q2\n";
    try {
        KnowledgeBase::from_string(text);
        FAIL("expected a consistency failure");
    } catch (const ConsistencyError& e) {
        CHECK(e.first_id == "rp_trivial#1");
        CHECK(e.second_id == "rp_not_trivial#1");
        const std::string msg = e.what();
        CHECK(msg.find("rp_trivial#1") != std::string::npos);
        CHECK(msg.find("rp_not_trivial#1") != std::string::npos);
    }
}

TEST_CASE("missing fact file raises a readable error") {
    CHECK_THROWS_AS(KnowledgeBase::from_file("/nonexistent/facts.txt"), std::runtime_error);
}
