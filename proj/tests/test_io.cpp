#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "imag/error.hpp"
#include "imag/io.hpp"

using namespace imag;

namespace {
std::string data(const char* name) { return std::string(TEST_DATA_DIR) + "/" + name; }
}  // namespace

TEST_CASE("state files") {
  const LoadedState pure = load_state_file(data("plus_i.json"));
  CHECK(pure.pure);
  CHECK(pure.rho.matrix()(0, 1).imag() == doctest::Approx(-0.5));

  const LoadedState mixed = load_state_file(data("mixed.json"));
  CHECK_FALSE(mixed.pure);
  CHECK(mixed.rho.matrix()(1, 0) == Complex(0.1, 0.2));

  CHECK_THROWS_WITH_AS(load_state_file(data("bad_field.json")),
                       doctest::Contains("re[1][1]"), ParseError);
  CHECK_THROWS_WITH_AS(load_state_file(data("malformed.json")),
                       doctest::Contains("line"), ParseError);
  CHECK_THROWS_WITH_AS(load_state_file(data("not_psd.json")),
                       doctest::Contains("positive semidefinite"), ValidationError);
  CHECK_THROWS_AS(load_state_file(data("missing.json")), IoError);
}

TEST_CASE("state text") {
  CHECK_THROWS_WITH_AS(parse_state_json(R"({"dim": 2})"), doctest::Contains("'re'"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_state_json(R"({"re": [[1]]})"), doctest::Contains("'dim'"),
                       ParseError);
  CHECK_THROWS_AS(parse_state_json(R"({"re": [1, 1]})"), ValidationError);
  CHECK(parse_state_json(R"({"re": [1, 0]})").pure);
}

TEST_CASE("channel specs") {
  CHECK(parse_channel_spec("bf:m=0.25").label() == bit_flip(0.25).label());
  CHECK(parse_channel_spec("pd:n=0").kraus().size() == 2);
  CHECK(parse_channel_spec("ad:p=1").kraus().size() == 2);
  CHECK_THROWS_AS(parse_channel_spec("bf:n=0.2"), ParseError);
  CHECK_THROWS_AS(parse_channel_spec("bf:m=abc"), ParseError);
  CHECK_THROWS_AS(parse_channel_spec("xx:m=0.1"), ParseError);
  CHECK_THROWS_AS(parse_channel_spec("bf"), ParseError);
  CHECK_THROWS_AS(parse_channel_spec("bf:m=1.5"), ValidationError);

  const KrausChannel f = parse_channel_spec("file:" + data("dephase.json"));
  CHECK(f.kraus().size() == 2);
  CHECK(is_real_channel(f));
  CHECK_THROWS_AS(parse_channel_spec("file:" + data("not_tp.json")), ValidationError);
  CHECK_THROWS_AS(parse_channel_spec("file:" + data("missing.json")), IoError);
}

TEST_CASE("writing files") {
  const std::string path = "io_test_output.txt";
  write_text_file(path, "a,b\n1,2\n");
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  CHECK(s.str() == "a,b\n1,2\n");
  std::remove(path.c_str());
  CHECK_THROWS_AS(write_text_file("/nonexistent-dir/x.csv", "x"), IoError);
}
