// Links only the shared library.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "jorcon/jorcon.h"

TEST_CASE("named matrices") {
  jorcon_matrix* m = nullptr;
  REQUIRE(jorcon_matrix_named("Rh", 2, &m) == JORCON_OK);
  CHECK(jorcon_matrix_size(m) == 4);
  CHECK(std::string(jorcon_matrix_entry(m, 1, 4)) == "h^2");
  CHECK(std::string(jorcon_matrix_entry(m, 2, 4)) == "h");
  CHECK(jorcon_matrix_entry(m, 5, 1) == nullptr);

  jorcon_matrix* c = nullptr;
  REQUIRE(jorcon_matrix_named("Rh-closed", 2, &c) == JORCON_OK);
  CHECK(jorcon_matrix_equal(m, c) == 1);
  jorcon_matrix_free(c);
  jorcon_matrix_free(m);
}

TEST_CASE("errors and poles") {
  jorcon_matrix* m = nullptr;
  CHECK(jorcon_matrix_named("nope", 2, &m) == JORCON_ERR_INVALID_ARGUMENT);
  CHECK(std::string(jorcon_last_error()).find("nope") != std::string::npos);
  CHECK(jorcon_last_pole(nullptr, nullptr) == 0);

  CHECK(jorcon_matrix_named("Ch", 3, &m) == JORCON_ERR_POLE_AT_Q1);
  int row = 0, col = 0;
  CHECK(jorcon_last_pole(&row, &col) == 1);
  CHECK(row == 3);
  CHECK(col == 3);
  CHECK(std::string(jorcon_status_name(JORCON_ERR_POLE_AT_Q1)) == "PoleAtQ1");

  CHECK(jorcon_matrix_named("Ch", 4, &m) == JORCON_OK);
  jorcon_matrix_free(m);
}

TEST_CASE("matrix JSON round trip") {
  jorcon_matrix* m = nullptr;
  REQUIRE(jorcon_matrix_named("Rtilde-q", 2, &m) == JORCON_OK);
  const std::string text = jorcon_matrix_json(m);
  jorcon_matrix* back = nullptr;
  REQUIRE(jorcon_matrix_from_json(text.c_str(), &back) == JORCON_OK);
  CHECK(std::string(jorcon_matrix_json(back)) == text);
  CHECK(jorcon_matrix_equal(m, back) == 1);
  jorcon_matrix_free(back);
  jorcon_matrix_free(m);
  CHECK(jorcon_matrix_from_json("[1,2", &back) == JORCON_ERR_PARSE);
}

TEST_CASE("relation sets") {
  jorcon_relations_spec spec{2, 1, 1, "hh", "compact", 0, JORCON_BASIS_PLAIN};
  jorcon_relset* a = nullptr;
  REQUIRE(jorcon_relations_build(&spec, &a) == JORCON_OK);
  CHECK(jorcon_relset_count(a) == 6);

  spec.form = "explicit";
  jorcon_relset* b = nullptr;
  REQUIRE(jorcon_relations_build(&spec, &b) == JORCON_OK);
  int equal = 0;
  CHECK(jorcon_relset_span_equal(a, b, &equal) == JORCON_OK);
  CHECK(equal == 1);
  jorcon_relset_free(b);

  spec.family = "contracted";
  spec.form = nullptr;
  spec.variant = 2;
  REQUIRE(jorcon_relations_build(&spec, &b) == JORCON_OK);
  CHECK(jorcon_relset_span_equal(a, b, &equal) == JORCON_OK);
  CHECK(equal == 1);
  jorcon_relset_free(b);
  jorcon_relset_free(a);

  jorcon_relations_spec tilde{3, 1, 1, "hh", "compact", 0, JORCON_BASIS_TILDE};
  CHECK(jorcon_relations_build(&tilde, &a) == JORCON_ERR_UNSUPPORTED_DIMENSION);
  tilde.family = "contracted";
  tilde.variant = 1;
  CHECK(jorcon_relations_build(&tilde, &a) == JORCON_ERR_POLE_AT_Q1);
  CHECK(jorcon_last_pole(nullptr, nullptr) == 1);
}

TEST_CASE("command results") {
  jorcon_result* r = nullptr;
  REQUIRE(jorcon_cgc_table(&r) == JORCON_OK);
  CHECK(std::string(jorcon_result_text(r)).find("(h/2)") == std::string::npos);
  CHECK(std::string(jorcon_result_json(r)).find("\"rows\"") != std::string::npos);
  jorcon_result_free(r);

  REQUIRE(jorcon_fock_report(-1, 2, JORCON_BASIS_BOTH, &r) == JORCON_OK);
  CHECK(jorcon_result_passed(r) == 1);
  jorcon_result_free(r);
  CHECK(jorcon_fock_report(1, 1, JORCON_BASIS_TILDE, &r) == JORCON_ERR_INVALID_CUTOFF);
  CHECK(jorcon_fock_report(1, 3, JORCON_BASIS_TILDE, &r) == JORCON_ERR_TRUNCATION_TOO_SMALL);

  jorcon_verify_spec spec;
  jorcon_verify_spec_init(&spec);
  spec.suite = "rmatrix";
  spec.timing = 0;
  REQUIRE(jorcon_verify(&spec, &r) == JORCON_OK);
  CHECK(jorcon_result_passed(r) == 1);
  CHECK(std::string(jorcon_result_text(r)).find("timing") == std::string::npos);
  jorcon_result_free(r);
}
