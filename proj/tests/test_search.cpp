#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "posetlab/error.hpp"
#include "posetlab/search.hpp"

using namespace posetlab;

TEST_CASE("poset enumeration counts") {
    const std::vector<std::size_t> expected{1, 1, 2, 5, 16, 63, 318};
    for (int n = 1; n <= 6; ++n) CHECK(enumerate_posets(n).size() == expected[n]);
}

TEST_CASE("random instances are reproducible and respect the caps") {
    for (std::uint64_t i = 0; i < 200; ++i) {
        const auto a = random_instance(7, i, 4, 8, 3);
        const auto b = random_instance(7, i, 4, 8, 3);
        CHECK(a.poset == b.poset);
        CHECK(a.triple == b.triple);
        CHECK(a.poset.size() >= 4);
        CHECK(a.poset.size() <= 8);
        CHECK(width(a.poset) <= 3);
        CHECK(is_chain_triple(a.poset, a.triple));
    }
    CHECK(!(random_instance(7, 0, 8, 8, 3).poset == random_instance(8, 0, 8, 8, 3).poset &&
            random_instance(7, 1, 8, 8, 3).poset == random_instance(8, 1, 8, 8, 3).poset));
}

TEST_CASE("search does not depend on the thread count") {
    SearchJob job;
    job.target = SearchTarget::cpc2;
    job.seed = 3;
    job.budget = 3000;
    std::vector<std::string> one, many;
    job.threads = 1;
    const auto s1 = run_search(job, [&](const Certificate& c) { one.push_back(json_line(certificate_to_json(c))); });
    job.threads = 4;
    const auto s4 = run_search(job, [&](const Certificate& c) { many.push_back(json_line(certificate_to_json(c))); });
    CHECK(one == many);
    CHECK(s1.instances == 3000);
    CHECK(s1.holds == s4.holds);
    CHECK(s1.fails == s4.fails);
    CHECK(s1.critical == 0);
}

TEST_CASE("certificates survive a round trip and re-verify") {
    SearchJob job;
    job.target = SearchTarget::gcpc;
    job.seed = 42;
    job.budget = 20000;
    job.threads = 2;
    std::vector<Certificate> certs;
    run_search(job, [&](const Certificate& c) { certs.push_back(c); });
    REQUIRE(!certs.empty());
    for (const auto& c : certs) {
        const auto back = certificate_from_json(Json::parse(json_line(certificate_to_json(c))));
        CHECK(back.poset == c.poset);
        CHECK(back.triple == c.triple);
        CHECK(back.lhs == c.lhs);
        CHECK(reverifies(back));
    }
}

TEST_CASE("search output file is appended") {
    const std::string path = "search_append_test.jsonl";
    std::remove(path.c_str());
    SearchJob job;
    job.target = SearchTarget::cpc2;
    job.seed = 42;
    job.budget = 5000;
    job.out_path = path;
    const auto s = run_search(job);
    run_search(job);
    std::ifstream in(path);
    std::size_t lines = 0;
    for (std::string line; std::getline(in, line);) ++lines;
    CHECK(lines == 2 * s.certificates);
    std::remove(path.c_str());

    job.out_path = "/nonexistent-dir/x.jsonl";
    try {
        run_search(job);
        FAIL("expected IoError");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::io_error);
    }
}

TEST_CASE("target names") {
    CHECK(parse_target("gcpc") == SearchTarget::gcpc);
    CHECK(std::string(to_string(SearchTarget::cpc1)) == "cpc1");
    CHECK_THROWS_AS(parse_target("bogus"), Error);
}
