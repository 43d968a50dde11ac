#include <catch_amalgamated.hpp>

#include <random>

#include "lexpath/word.hpp"
#include "oracles.hpp"

using namespace lexpath;

TEST_CASE("periodic word lists residues") {
    CHECK(periodic_word(3, 7).to_string() == "0120120");
    CHECK(periodic_word(2, 6).to_string() == "010101");
    CHECK(periodic_word(2, 1).to_string() == "0");
    CHECK_THROWS_AS(periodic_word(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(periodic_word(2, 0), std::invalid_argument);
}

TEST_CASE("sturmian generator against the morphism and slope oracles") {
    SturmianDirective fib{{1, 1, 1, 1, 1, 1}};
    CHECK(sturmian_word(fib, 13).to_string() == "0100101001001");
    CHECK(sturmian_word(SturmianDirective{{1}}, 1).to_string() == "0");
    CHECK(sturmian_word(SturmianDirective{{2, 1, 1, 1}}, 5).to_string() == "00100");
    CHECK_THROWS_WITH(sturmian_word(SturmianDirective{{1}}, 3),
                      Catch::Matchers::ContainsSubstring("extend the continued-fraction"));

    // long-prefix agreement with both independent oracles
    const long n = 500;
    SturmianDirective deep_fib{std::vector<int>(30, 1)};
    Word w = sturmian_word(deep_fib, n);
    CHECK(w.to_string() == oracles::morphism_word(n));
    std::vector<int> slope_cf{2};  // [0; 1+a1, a2, ...] with a_i = 1
    slope_cf.insert(slope_cf.end(), 40, 1);
    auto [p, q] = oracles::convergent(slope_cf);
    REQUIRE(q > n + 2);
    CHECK(w.to_string() == oracles::characteristic_by_slope(p, q, n));

    std::vector<int> d2{2};
    d2.insert(d2.end(), 25, 1);
    Word w2 = sturmian_word(SturmianDirective{d2}, n);
    std::vector<int> cf2{3};
    cf2.insert(cf2.end(), 40, 1);
    auto [p2, q2] = oracles::convergent(cf2);
    REQUIRE(q2 > n + 2);
    CHECK(w2.to_string() == oracles::characteristic_by_slope(p2, q2, n));
}

TEST_CASE("sturmian factor complexity is n+1") {
    for (auto dir : {std::vector<int>(20, 1), std::vector<int>{2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
                     std::vector<int>{1, 2, 1, 2, 1, 2, 1, 2, 1, 2}}) {
        Word w = sturmian_word(SturmianDirective{dir}, 400);
        FactorSet f = factor_set(w, 20);
        for (int n = 1; n <= 20; ++n) CHECK(f.level(n).size() == size_t(n + 1));
    }
}

TEST_CASE("run lengths and the locality threshold") {
    Word fib = sturmian_word(SturmianDirective{std::vector<int>(12, 1)}, 50);
    CHECK(run_lengths(fib) == std::pair<int, int>{2, 1});
    CHECK(run_lengths(make_word("010101")) == std::pair<int, int>{1, 1});
    CHECK(run_lengths(make_word("001100")) == std::pair<int, int>{2, 2});
    CHECK_THROWS_AS(run_lengths(make_word("0000")), std::invalid_argument);

    CHECK(locality_threshold(periodic_word(2, 20)) == 6);
    CHECK(locality_threshold(fib) == 7);
    CHECK(locality_threshold(make_word("00110011")) == 7);
    CHECK(stable_locality_threshold("periodic:k=2") == 6);
    CHECK(stable_locality_threshold("sturmian:cf=1,1,1,1,1,1,1,1,1,1") == 7);
    CHECK(stable_locality_threshold("sturmian:cf=2,1,1,1,1,1,1,1,1,1") == 9);
}

TEST_CASE("factor sets enumerate distinct blocks") {
    FactorSet f = factor_set(make_word("010101"), 2);
    CHECK(f.level(1) == std::set<std::string>{"0", "1"});
    CHECK(f.level(2) == std::set<std::string>{"01", "10"});

    Word fib = sturmian_word(SturmianDirective{std::vector<int>(10, 1)}, 30);
    FactorSet g = factor_set(fib, 3);
    CHECK(g.level(1) == std::set<std::string>{"0", "1"});
    CHECK(g.level(2) == std::set<std::string>{"00", "01", "10"});
    CHECK(g.level(3) == std::set<std::string>{"001", "010", "100", "101"});

    FactorSet h = factor_set(make_word("000"), 2);
    CHECK(h.level(1) == std::set<std::string>{"0"});
    CHECK(h.level(2) == std::set<std::string>{"00"});
}

TEST_CASE("factor sets are closed downward") {
    Word w = sturmian_word(SturmianDirective{{2, 1, 2, 1, 2, 1, 1, 1}}, 120);
    FactorSet f = factor_set(w, 6);
    for (int n = 1; n <= 6; ++n)
        for (const auto& fac : f.level(n)) {
            CHECK(is_factor(make_word(fac), w));
            for (int m = 1; m < n; ++m)
                for (int off = 0; off + m <= n; ++off)
                    CHECK(f.level(m).count(fac.substr(size_t(off), size_t(m))) == 1);
        }
    for (int n = 1; n <= 6; ++n)
        CHECK(f.level(n).size() <= size_t(std::min<long>(1L << n, w.size() - n + 1)));
}

TEST_CASE("factor membership") {
    CHECK(is_factor(make_word("010"), make_word("0100101")));
    Word fib = sturmian_word(SturmianDirective{std::vector<int>(10, 1)}, 100);
    CHECK_FALSE(is_factor(make_word("11"), fib));
    CHECK(is_factor(Word{{}, 2, "explicit"}, make_word("0100101")));  // empty word
    CHECK_THROWS_AS(is_factor(periodic_word(3, 2), periodic_word(2, 4)),
                    std::invalid_argument);
}

TEST_CASE("subword embedding agrees with brute force and is a partial order") {
    CHECK(is_subword(make_word("011"), make_word("0101")));
    CHECK_FALSE(is_subword(make_word("110"), make_word("0101")));
    CHECK(is_subword(make_word("0101"), make_word("0101")));

    std::mt19937 rng(20240811);
    std::vector<Word> pool;
    for (int i = 0; i < 40; ++i) {
        int len = 1 + int(rng() % 12);
        std::string s;
        for (int j = 0; j < len; ++j) s.push_back(char('0' + rng() % 2));
        pool.push_back(make_word(s));
    }
    for (const auto& v : pool)
        for (const auto& u : pool) {
            bool got = is_subword(v, u);
            CHECK(got == oracles::subsequence_brute(v.to_string(), u.to_string()));
            if (got && is_subword(u, v)) CHECK(u.to_string() == v.to_string());
        }
    // transitivity on a sample
    for (const auto& a : pool)
        for (const auto& b : pool)
            if (is_subword(a, b))
                for (const auto& c : pool)
                    if (is_subword(b, c)) CHECK(is_subword(a, c));
}

TEST_CASE("recurrence bounds") {
    Word fib = sturmian_word(SturmianDirective{std::vector<int>(14, 1)}, 200);
    CHECK(recurrence_bound(fib, 1) == 3);
    CHECK(recurrence_bound(periodic_word(2, 100), 1) == 2);

    Word half = make_word(std::string(50, '0') + std::string(50, '1'));
    CHECK_FALSE(recurrence_bound(half, 1).has_value());

    // monotone where defined
    std::optional<long> prev;
    for (int n = 1; n <= 8; ++n) {
        auto b = recurrence_bound(fib, n);
        REQUIRE(b.has_value());
        if (prev) CHECK(*b >= *prev);
        prev = b;
    }
}

TEST_CASE("age equivalence of factor sets") {
    auto F = [](const std::string& s, int n) { return factor_set(make_word(s), n); };
    CHECK(ages_equivalent(F("010101010101", 4), F("101010101010", 4)));

    Word fib = sturmian_word(SturmianDirective{std::vector<int>(12, 1)}, 200);
    CHECK(ages_equivalent(factor_set(fib, 5), factor_set(complement(fib), 5)));

    Word other = sturmian_word(SturmianDirective{{2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}}, 200);
    CHECK_FALSE(ages_equivalent(factor_set(fib, 5), factor_set(other, 5)));
}

TEST_CASE("age equivalence is an equivalence relation") {
    std::vector<FactorSet> family;
    for (const std::string& spec :
         {"periodic:k=2", "sturmian:cf=1,1,1,1,1,1,1,1", "sturmian:cf=2,1,1,1,1,1,1,1",
          "explicit:001100110011001100", "explicit:110011001100110011"}) {
        Word w = parse_word_spec(spec, 18);
        family.push_back(factor_set(w, 4));
        family.push_back(factor_set(complement(w), 4));
        family.push_back(factor_set(reversed(w), 4));
    }
    for (const auto& a : family) CHECK(ages_equivalent(a, a));
    for (const auto& a : family)
        for (const auto& b : family) CHECK(ages_equivalent(a, b) == ages_equivalent(b, a));
    for (const auto& a : family)
        for (const auto& b : family)
            if (ages_equivalent(a, b))
                for (const auto& c : family)
                    if (ages_equivalent(b, c)) CHECK(ages_equivalent(a, c));
}

TEST_CASE("trace language identities") {
    Word fib = sturmian_word(SturmianDirective{std::vector<int>(12, 1)}, 120);
    Word alt = periodic_word(2, 120);
    const int depth = 6;

    for (const Word& u : {alt, fib}) {
        // the scanned factor sets happen to be closed under reversal, which
        // keeps the expected unions small; assert that before relying on it
        FactorSet fu = factor_set(u, depth);
        FactorSet fc = factor_set(complement(u), depth);
        for (int n = 1; n <= depth; ++n)
            CHECK(detail::reversed_level(fu.level(n)) == fu.level(n));

        // boolean sum: letter * factors = factors of u and of its complement
        FactorSet a = trace_language(u, boolean_sum_table(), depth);
        for (int n = 1; n <= depth; ++n) {
            std::set<std::string> expect = fu.level(n);
            expect.insert(fc.level(n).begin(), fc.level(n).end());
            CHECK(a.level(n) == expect);
        }
        // complement invariance
        FactorSet a_bar = trace_language(complement(u), boolean_sum_table(), depth);
        for (int n = 1; n <= depth; ++n) CHECK(a.level(n) == a_bar.level(n));

        // second projection: factors on one side, constants on the other
        FactorSet b = trace_language(u, projection_table(Projection::Second), depth);
        for (int n = 1; n <= depth; ++n) {
            std::set<std::string> expect = fu.level(n);
            expect.insert(std::string(size_t(n), '0'));
            expect.insert(std::string(size_t(n), '1'));
            CHECK(b.level(n) == expect);
        }
    }

    // first projection on the alternating word at depth 2
    FactorSet c = trace_language(periodic_word(2, 10), projection_table(Projection::First), 2);
    CHECK(c.level(1) == std::set<std::string>{"0", "1"});
    CHECK(c.level(2) == std::set<std::string>{"00", "01", "10", "11"});
}

TEST_CASE("word specs parse and reject") {
    CHECK(parse_word_spec("periodic:k=3", 5).to_string() == "01201");
    CHECK(parse_word_spec("sturmian:cf=1,1,1,1,1,1", 13).to_string() == "0100101001001");
    CHECK(parse_word_spec("explicit:0100101", 3).to_string() == "0100101");
    CHECK_THROWS_AS(parse_word_spec("explicit:0", 5), std::invalid_argument);
    CHECK_THROWS_AS(parse_word_spec("fancy:1", 1), std::invalid_argument);
}
