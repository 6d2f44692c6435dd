#include "doctest.h"

#include <filesystem>

#include "rook/diagonal/diagonal.hpp"
#include "rook/io/json_io.hpp"
#include "rook/walks/walks.hpp"

using namespace rook;

TEST_CASE("sequence files") {
  SeqTable s = diagonal_sequence(DirectionSet::rook(), 6);
  Json j = to_json(s);
  CHECK(j["terms"][2] == "222");
  CHECK(j["provenance"] == "dp");
  SeqTable back = seqtable_from_json(parse_json(dump(j)));
  CHECK(same_terms(back, s));
  CHECK(back.name == s.name);
  CHECK_THROWS_AS(seqtable_from_json(parse_json(R"({"name":"a","provenance":"dp","terms":["1x"]})")), FormatError);
  CHECK_THROWS_AS(seqtable_from_json(parse_json(R"({"name":"a","terms":[]})")), FormatError);
  CHECK_THROWS_AS(parse_json("{"), FormatError);
}

TEST_CASE("operator files") {
  DiffOp P = rook_p2();
  CHECK(diffop_from_json(parse_json(dump(to_json(P)))) == P);
  Vars v = xst_vars();
  DiffOp Q(v);
  Q.add_term(mono::make({1, 2, 0, 0}), parse_ratfun("(s-x)/(t^2+1)", v));
  Q.add_term(0, parse_ratfun("3/7", v));
  std::string t = dump(to_json(Q));
  CHECK(dump(to_json(diffop_from_json(parse_json(t)))) == t);
  RecOp r = short_recurrence();
  Json rj = to_json(r);
  CHECK(rj["kind"] == "shift");
  CHECK(recop_from_json(parse_json(dump(rj))) == r);
  CHECK_THROWS_AS(diffop_from_json(rj), FormatError);
  CHECK_THROWS_AS(recop_from_json(to_json(P)), FormatError);
}

TEST_CASE("certificate files round-trip byte-identically") {
  Vars v = xst_vars();
  Certificate c{DiffOp::d(v, "s"), parse_ratfun("s/(t-x)", v), parse_ratfun("-x^2/3", v), true, {"a", "b"}};
  std::string t = dump(to_json(c));
  Certificate back = certificate_from_json(parse_json(t));
  CHECK(back.P == c.P);
  CHECK(back.S == c.S);
  CHECK(back.T == c.T);
  CHECK(back.verified);
  CHECK(back.stage_log == c.stage_log);
  CHECK(dump(to_json(back)) == t);
  auto path = std::filesystem::temp_directory_path() / "rook_io_test" / "cert.json";
  write_file(path, t);
  CHECK(read_file(path) == t);
  std::filesystem::remove_all(path.parent_path());
  CHECK_THROWS_AS(read_file(path), FormatError);
}

TEST_CASE("report records") {
  Json j = to_json(CheckReport{"x", true, "fine", 30});
  CHECK(j["status"] == "PASS");
  CHECK(j["order"] == 30);
  CHECK(!to_json(CheckReport{"y", false, "", -1}).contains("order"));
}
