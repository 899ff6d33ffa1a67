#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "seqlrc/error.hpp"
#include "seqlrc/io.hpp"

using namespace seqlrc;

TEST_CASE("graph text round trip") {
  const auto g = fixtures::fano();
  std::ostringstream out;
  write_graph(out, g);
  const std::string text = out.str();
  CHECK(text.rfind("7 3\n0 ", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 22);

  std::istringstream in(text);
  const auto back = read_graph(in);
  CHECK(back.L() == 7);
  CHECK(back.edges() == g.edges());
}

TEST_CASE("graph text errors") {
  std::istringstream short_list("2 2\n0 0\n0 1\n");
  CHECK_THROWS_AS(read_graph(short_list), Error);
  std::istringstream junk("1 1\n0 x\n");
  CHECK_THROWS_AS(read_graph(junk), Error);
}

TEST_CASE("alist layout") {
  const auto h = BitMatrix::from_dense({{1, 1, 0}, {0, 1, 1}});
  std::ostringstream out;
  write_alist(out, h);
  CHECK(out.str() ==
        "3 2\n"
        "2 2\n"
        "1 2 1\n"
        "2 2\n"
        "1\n"
        "1 2\n"
        "2\n"
        "1 2\n"
        "2 3\n");
}

TEST_CASE("alist round trip on random matrices") {
  Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const auto h = fixtures::random_matrix(rng, uniform_below(rng, 30), 1 + uniform_below(rng, 90), 10);
    std::stringstream s;
    write_alist(s, h);
    CHECK(read_alist(s) == h);
  }
}

TEST_CASE("alist rejects inconsistent lists") {
  std::istringstream bad("2 1\n1 1\n1 0\n1\n1\n\n2\n");
  CHECK_THROWS_AS(read_alist(bad), Error);
}

TEST_CASE("code json round trip and tamper detection") {
  const auto code = build_t5(fixtures::fano());
  const auto j = code_to_json(code);
  CHECK(j["n"] == 122);
  CHECK(j["k"] == 63);
  CHECK(j["t"] == 5);
  CHECK(j["L"] == 7);
  CHECK(j["row_count"] == 59);
  CHECK(j["labels"][0] == "edge/i=1/e=0");
  CHECK(j["labels"][121] == "S/2");

  const auto back = code_from_json(nlohmann::json::parse(j.dump()));
  CHECK(back.H() == code.H());
  CHECK(matrix_hash(back.H()) == matrix_hash(code.H()));

  auto tampered = j;
  tampered["h_hash"] = "fnv1a64:0000000000000000";
  CHECK_THROWS_AS(code_from_json(tampered), Error);
  auto missing = j;
  missing.erase("graph");
  CHECK_THROWS_AS(code_from_json(missing), Error);
}

TEST_CASE("matrix hash depends on every bit") {
  auto h = BitMatrix(5, 70);
  const auto base = matrix_hash(h);
  CHECK(base.rfind("fnv1a64:", 0) == 0);
  CHECK(base.size() == 8 + 16);
  h.set(4, 69);
  CHECK(matrix_hash(h) != base);
  CHECK(matrix_hash(BitMatrix(5, 71)) != base);
}

TEST_CASE("pattern text") {
  CHECK(parse_pattern("").empty());
  CHECK(parse_pattern("  3 1\t 40 ") == std::vector<std::size_t>{3, 1, 40});
  CHECK(parse_pattern("3,1, 40") == std::vector<std::size_t>{3, 1, 40});
  CHECK_THROWS_AS(parse_pattern("1 -2"), Error);
  CHECK_THROWS_AS(parse_pattern("1 2x"), Error);

  std::stringstream s;
  write_labeled_patterns(s, "peel-stuck t=5", {{1, 2, 3}, {4}});
  CHECK(s.str() == "# peel-stuck t=5\n1 2 3\n# peel-stuck t=5\n4\n");
  CHECK(read_patterns(s) == std::vector<std::vector<std::size_t>>{{1, 2, 3}, {4}});
}

TEST_CASE("report json") {
  CHECK(rational_to_json(Rational(18, 34)) == nlohmann::json{{"num", 9}, {"den", 17}});
  const auto audit = audit_to_json(bound_audit(build_t4(fixtures::fano())));
  CHECK(audit["m"] == 56);
  CHECK(audit["checks"]["length_bound_tight"] == true);
  CHECK(audit["length_lhs"]["num"] == 357);
}
