// test_capi.cpp
// Surface tests of the C API: status codes, the thread-local error slot,
// and the rendered command output.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "crystalkit.h"

namespace {

std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out(s);
    ck_string_free(s);
    return out;
}

bool has(const std::string& s, const std::string& needle) {
    return s.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("capi: version and error slot") {
    CHECK(std::string(ck_version()) == "1.0.0");
    long v = 0;
    REQUIRE(ck_lr_coefficient("3,2,1", "2,1", "2,1", &v) == CK_OK);
    CHECK(v == 2);
    CHECK(std::string(ck_last_error()).empty());

    CHECK(ck_lr_coefficient("1,2", "1", "1", &v) == CK_DOMAIN_ERROR);
    CHECK(has(ck_last_error(), "partition"));
    CHECK(ck_lr_coefficient(nullptr, "1", "1", &v) == CK_DOMAIN_ERROR);
    CHECK(ck_lr_coefficient("1", "1", "", nullptr) == CK_DOMAIN_ERROR);

    REQUIRE(ck_lr_coefficient("2,1", "1,1", "1", &v) == CK_OK);
    CHECK(v == 1);
    CHECK(std::string(ck_last_error()).empty());
}

TEST_CASE("capi: transition coefficients") {
    long v = 0;
    REQUIRE(ck_m_coeff("1", "1", "", "", &v) == CK_OK);
    CHECK(v == 1);
    REQUIRE(ck_m_coeff("2,1", "2,1", "1", "1", &v) == CK_OK);
    CHECK(v == 2);
    REQUIRE(ck_n_coeff("1", "1", "", "", &v) == CK_OK);
    CHECK(v == -1);
    REQUIRE(ck_n_coeff("2", "1,1", "", "", &v) == CK_OK);
    CHECK(v == 1);
    CHECK(ck_m_coeff("bad", "1", "", "", &v) == CK_DOMAIN_ERROR);
}

TEST_CASE("capi: highest weight set sizes match the transition coefficients") {
    long size = 0, m = 0;
    REQUIRE(ck_hset_size("1", "1", "", "", 0, &size) == CK_OK);
    CHECK(size == 1);
    REQUIRE(ck_hset_size("2,1", "2,1", "1", "1", 0, &size) == CK_OK);
    REQUIRE(ck_m_coeff("2,1", "2,1", "1", "1", &m) == CK_OK);
    CHECK(size == m);
    REQUIRE(ck_hset_size("2", "1", "1", "", 0, &size) == CK_OK);
    REQUIRE(ck_m_coeff("2", "1", "1", "", &m) == CK_OK);
    CHECK(size == m);
}

TEST_CASE("capi: identity checks") {
    CHECK(ck_transition_check(2) == CK_OK);
    CHECK(ck_transition_check(-1) == CK_DOMAIN_ERROR);

    char* detail = nullptr;
    CHECK(ck_cauchy_verify("ee", 1, 2, &detail) == CK_OK);
    CHECK(detail == nullptr);
    CHECK(ck_cauchy_verify("E-H", 1, 1, nullptr) == CK_OK);
    CHECK(ck_cauchy_verify("xy", 1, 1, nullptr) == CK_DOMAIN_ERROR);
    CHECK(has(ck_last_error(), "kind"));
    CHECK(ck_cauchy_verify("ee", 0, 1, nullptr) == CK_DOMAIN_ERROR);
}

TEST_CASE("capi: rendered scalar and table output") {
    char* out = nullptr;
    REQUIRE(ck_render_lr("3,2,1", "2,1", "2,1", 0, &out) == CK_OK);
    CHECK(take(out) == "2\n");
    out = nullptr;
    REQUIRE(ck_render_lr("3,2,1", "2,1", "2,1", 1, &out) == CK_OK);
    std::string js = take(out);
    CHECK(has(js, "\"schema\": \"crystalkit/lr/1\""));
    CHECK(has(js, "\"coefficient\": 2"));

    out = nullptr;
    REQUIRE(ck_render_howe(2, 2, 0, &out) == CK_OK);
    CHECK(take(out) ==
          "() () 1 1\n"
          "(1) (1) 4 1\n"
          "(1,1) (2) 3 1\n"
          "(2) (1,1) 3 1\n"
          "(2,1) (2,1) 4 1\n"
          "(2,2) (2,2) 1 1\n");

    out = nullptr;
    REQUIRE(ck_render_tensor_decompose("1", "", "", "1", 0, 0, &out) == CK_OK);
    CHECK(take(out) == "rank 4\n((),()) 1\n((1),(1)) 1\n");
}

TEST_CASE("capi: rendered socle table") {
    char* out = nullptr;
    REQUIRE(ck_render_socle("1", "", "", "1", 1, 0, &out) == CK_OK);
    std::string s = take(out);
    CHECK(has(s, "\"layer\": 1"));
    CHECK(has(s, "\"plus\": []"));
    CHECK(has(s, "\"mult\": 1"));

    out = nullptr;
    REQUIRE(ck_render_socle("1", "", "", "1", -1, 1, &out) == CK_OK);
    std::string all = take(out);
    CHECK(has(all, "\"schema\": \"crystalkit/socle/1\""));
    CHECK(has(all, "\"layers\""));
    CHECK(has(all, "\"layer\": 0"));
    CHECK(has(all, "\"layer\": 1"));

    out = nullptr;
    CHECK(ck_render_socle("1", "", "", "1", 5, 0, &out) == CK_DOMAIN_ERROR);
    CHECK(out == nullptr);
}

TEST_CASE("capi: rendered wedge output") {
    char* out = nullptr;
    REQUIRE(ck_render_straighten(2, 2, "2,1;1,1", "leftmost", 0, &out) == CK_OK);
    CHECK(take(out) == "(1)*w[(2,1),(1,1)]\n");

    out = nullptr;
    REQUIRE(ck_render_straighten(2, 2, "1,1;2,1", "", 0, &out) == CK_OK);
    std::string rel = take(out);
    CHECK(has(rel, "q"));
    out = nullptr;
    REQUIRE(ck_render_straighten(2, 2, "1,1;2,1", "rightmost", 0, &out) == CK_OK);
    CHECK(take(out) == rel);
    CHECK(ck_render_straighten(2, 2, "1,1;oops", "", 0, &out) == CK_DOMAIN_ERROR);
    CHECK(ck_render_straighten(2, 2, "1,1", "sideways", 0, &out) == CK_DOMAIN_ERROR);

    out = nullptr;
    REQUIRE(ck_render_canonical_basis(2, 2, "1,1", "1,1", 0, &out) == CK_OK);
    CHECK(take(out) == "key,1001,0110\n1001,1,0\n0110,1*q^1,1\n");

    out = nullptr;
    REQUIRE(ck_render_canonical_basis(2, 2, "1,1", "1,1", 1, &out) == CK_OK);
    std::string js = take(out);
    CHECK(has(js, "\"schema\": \"crystalkit/canonical-basis/1\""));
    CHECK(has(js, "\"coeff\": \"1*q^1\""));
    CHECK(ck_render_canonical_basis(2, 2, "1,1", "2,1", 0, &out) == CK_DOMAIN_ERROR);
}

TEST_CASE("capi: rendered crystal structures") {
    char* out = nullptr;
    REQUIRE(ck_render_bitableaux("1", "1", 2, 0, 0, &out) == CK_OK);
    std::string s = take(out);
    CHECK(has(s, "size 3\n"));

    out = nullptr;
    REQUIRE(ck_render_bitableaux("2,1", "1", 4, 1, 0, &out) == CK_OK);
    CHECK(take(out) == "ok\n");

    out = nullptr;
    REQUIRE(ck_render_hset("1", "1", "", "", 0, 1, &out) == CK_OK);
    std::string hj = take(out);
    CHECK(has(hj, "\"size\": 1"));
    CHECK(has(hj, "\"members\""));

    out = nullptr;
    REQUIRE(ck_render_crystal_graph("sst", "1,1", "", 0, 0, 3, 0, &out) == CK_OK);
    std::string dot = take(out);
    CHECK(has(dot, "digraph crystal"));
    CHECK(has(dot, "[label=\"1\"]"));
    CHECK(ck_render_crystal_graph("heap", "", "", 0, 0, 1, 0, &out) == CK_DOMAIN_ERROR);
    CHECK(ck_render_crystal_graph("sst", "1", "", 0, 0, 0, 0, &out) == CK_DOMAIN_ERROR);

    out = nullptr;
    REQUIRE(ck_render_crystal_graph("matrix", "", "", 2, 2, 0, 1, &out) == CK_OK);
    std::string gj = take(out);
    CHECK(has(gj, "\"truncated\": false"));
    CHECK(has(gj, "\"edges\""));
}

TEST_CASE("capi: rendered identity checks") {
    char* out = nullptr;
    REQUIRE(ck_render_transition_check(2, 0, &out) == CK_OK);
    CHECK(take(out) == "ok\n");
    out = nullptr;
    REQUIRE(ck_render_cauchy_verify("eh", 1, 2, 1, &out) == CK_OK);
    std::string js = take(out);
    CHECK(has(js, "\"equal\": true"));
    CHECK(has(js, "\"kind\": \"eh\""));
}

TEST_CASE("capi: element budget") {
    const long before = ck_element_budget();
    CHECK(before > 0);
    CHECK(ck_set_element_budget(0) == CK_DOMAIN_ERROR);
    REQUIRE(ck_set_element_budget(2) == CK_OK);
    CHECK(ck_element_budget() == 2);
    char* out = nullptr;
    CHECK(ck_render_howe(3, 3, 0, &out) == CK_BUDGET_EXCEEDED);
    CHECK(has(ck_last_error(), "budget"));
    REQUIRE(ck_set_element_budget(before) == CK_OK);
    CHECK(ck_element_budget() == before);
    ck_string_free(nullptr);
}
