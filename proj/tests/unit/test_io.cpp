#include "curling/cache.hpp"
#include "curling/io.hpp"

#include "helpers.hpp"

#include <filesystem>
#include <random>

using namespace curling;
namespace fs = std::filesystem;

namespace {
struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("curling-test-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};
}  // namespace

TEST_SUITE("io") {

TEST_CASE("b-file round trip") {
  const BFile b{3, {"1", "-4", "123456789012345678901234567890"}};
  const auto text = to_bfile(b);
  CHECK(text == "3 1\n4 -4\n5 123456789012345678901234567890\n");
  CHECK(parse_bfile(text) == b);
  CHECK(parse_bfile("") == BFile{});
}

TEST_CASE("b-file reader is strict") {
  CHECK_CODE(parse_bfile("1 2"), ErrorCode::BadFormat);
  CHECK_CODE(parse_bfile("1 2 \n"), ErrorCode::BadFormat);
  CHECK_CODE(parse_bfile("1  2\n"), ErrorCode::BadFormat);
  CHECK_CODE(parse_bfile("1 2\n3 4\n"), ErrorCode::BadFormat);
  CHECK_CODE(parse_bfile("1 x\n"), ErrorCode::BadFormat);
  CHECK_CODE(parse_bfile("1 2\r\n"), ErrorCode::BadFormat);
}

TEST_CASE("csv quoting") {
  CsvTable t;
  t.header = {"name", "value"};
  t.rows = {{"plain", "1"}, {"a,b", "say \"hi\""}, {"two\nlines", ""}};
  const auto text = to_csv(t);
  CHECK(text.find("\"a,b\",\"say \"\"hi\"\"\"") != std::string::npos);
  CHECK(parse_csv(text) == t);
  CHECK(t.column("value") == 1);
  CHECK_CODE(t.column("missing"), ErrorCode::BadFormat);
  CHECK_CODE(parse_csv("a,b\n1\n"), ErrorCode::BadFormat);
}

TEST_CASE("digests and atomic writes") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  TempDir tmp;
  const auto file = tmp.path / "out.txt";
  write_file_atomic(file, "first");
  write_file_atomic(file, "second");
  CHECK(read_file(file) == "second");
  CHECK(std::distance(fs::directory_iterator(tmp.path), fs::directory_iterator{}) == 1);
}

TEST_CASE("cache store and load") {
  TempDir tmp;
  const Cache cache(tmp.path / "cache");
  CHECK_FALSE(cache.load("c", "n=8").has_value());
  cache.store("c", "n=8", "payload bytes");
  CHECK(cache.load("c", "n=8") == std::optional<std::string>("payload bytes"));
  CHECK_FALSE(cache.load("c", "n=9").has_value());
  CHECK_FALSE(cache.load("p", "n=8").has_value());
  CHECK(cache.payload_path("c", "n=8") != cache.payload_path("c", "n=9"));
  CHECK(cache.payload_path("c", "n=8").filename().string().rfind("c-", 0) == 0);
}

TEST_CASE("cache invalidation") {
  TempDir tmp;
  const Cache cache(tmp.path);
  cache.store("c", "n=8", "payload");

  write_file_atomic(cache.payload_path("c", "n=8"), "tampered");
  std::string why;
  CHECK_FALSE(cache.load("c", "n=8", &why).has_value());
  CHECK_FALSE(why.empty());

  cache.store("c", "n=8", "payload");
  auto side = read_file(cache.sidecar_path("c", "n=8"));
  const auto at = side.find("\"version\": 1");
  REQUIRE(at != std::string::npos);
  side.replace(at, 12, "\"version\": 0");
  write_file_atomic(cache.sidecar_path("c", "n=8"), side);
  CHECK_FALSE(cache.load("c", "n=8").has_value());

  cache.store("c", "n=8", "payload");
  write_file_atomic(cache.sidecar_path("c", "n=8"), "{not json");
  CHECK_FALSE(cache.load("c", "n=8").has_value());
  fs::remove(cache.sidecar_path("c", "n=8"));
  CHECK_FALSE(cache.load("c", "n=8").has_value());
}

}
