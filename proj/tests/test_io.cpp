#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <fstream>

#include "pierce/generators.hpp"
#include "pierce/io.hpp"

using namespace pierce;

namespace {

struct TmpFile {
  std::string path;
  explicit TmpFile(const std::string& name) : path("/tmp/pierce_io_" + name) {}
  ~TmpFile() { std::remove(path.c_str()); }
  void write(const std::string& text) {
    std::ofstream out(path);
    out << text;
  }
};

}  // namespace

TEST_CASE("minimal family file") {
  TmpFile f("minimal.json");
  f.write(R"({"sets":[{"id":"a","vertices":[[0,0]]}]})");
  FamilyR fam = load_family(f.path);
  REQUIRE(fam.sets.size() == 1);
  CHECK(fam.sets[0].id == "a");
  CHECK(fam.sets[0].is_point());
  CHECK(fam.colors.empty());
}

TEST_CASE("numbers: plain doubles and exact strings") {
  TmpFile f("numbers.json");
  f.write(R"({"sets":[{"id":"a","vertices":[[0.5,"1/3"],["0.1",-2]]}]})");
  FamilyR fam = load_family(f.path);
  const auto& v = fam.sets[0].vertices;
  REQUIRE(v.size() == 2);
  // vertices get canonical rotation but values survive exactly:
  bool found_half = false, found_tenth = false;
  for (const auto& p : v) {
    if (p.x == rat(1, 2)) {
      found_half = true;
      CHECK(p.y == rat(1, 3));  // string form is exact
    }
    if (p.x == rat(1, 10)) {
      found_tenth = true;  // "0.1" as a STRING is exactly 1/10
      CHECK(p.y == rat(-2));
    }
  }
  CHECK(found_half);
  CHECK(found_tenth);

  // 0.1 as a plain JSON number is the binary double, not 1/10
  TmpFile g("numbers2.json");
  g.write(R"({"sets":[{"id":"a","vertices":[[0.1,0]]}]})");
  FamilyR fam2 = load_family(g.path);
  CHECK(fam2.sets[0].vertices[0].x != rat(1, 10));
  CHECK(fam2.sets[0].vertices[0].x == rat_from_double(0.1));
}

TEST_CASE("colors load and validate") {
  TmpFile f("colors.json");
  f.write(R"({"sets":[{"id":"a","vertices":[[0,0]]},{"id":"b","vertices":[[1,1]]}],
              "colors":{"a":0,"b":1}})");
  FamilyR fam = load_family(f.path);
  CHECK(fam.colors.at("a") == 0);
  CHECK(fam.colors.at("b") == 1);

  TmpFile partial("colors_partial.json");
  partial.write(R"({"sets":[{"id":"a","vertices":[[0,0]]},{"id":"b","vertices":[[1,1]]}],
                    "colors":{"a":0}})");
  CHECK_THROWS_AS(load_family(partial.path), io_error);

  TmpFile unknown("colors_unknown.json");
  unknown.write(R"({"sets":[{"id":"a","vertices":[[0,0]]}],"colors":{"zz":0}})");
  CHECK_THROWS_AS(load_family(unknown.path), io_error);

  TmpFile negative("colors_negative.json");
  negative.write(R"({"sets":[{"id":"a","vertices":[[0,0]]}],"colors":{"a":-1}})");
  CHECK_THROWS_AS(load_family(negative.path), io_error);
}

TEST_CASE("schema violations carry locations") {
  TmpFile dup("dup.json");
  dup.write(R"({"sets":[{"id":"a","vertices":[[0,0]]},{"id":"a","vertices":[[1,1]]}]})");
  try {
    load_family(dup.path);
    FAIL("expected io_error");
  } catch (const io_error& e) {
    const std::string msg = e.what();
    CHECK(msg.find("sets[1]") != std::string::npos);
    CHECK(msg.find("duplicate") != std::string::npos);
  }

  TmpFile arity("arity.json");
  arity.write(R"({"sets":[{"id":"a","vertices":[[0,0,0]]}]})");
  try {
    load_family(arity.path);
    FAIL("expected io_error");
  } catch (const io_error& e) {
    CHECK(std::string(e.what()).find("vertices[0]") != std::string::npos);
  }

  TmpFile nosets("nosets.json");
  nosets.write(R"({"shapes":[]})");
  CHECK_THROWS_AS(load_family(nosets.path), io_error);

  TmpFile noid("noid.json");
  noid.write(R"({"sets":[{"vertices":[[0,0]]}]})");
  CHECK_THROWS_AS(load_family(noid.path), io_error);

  TmpFile empty_verts("emptyverts.json");
  empty_verts.write(R"({"sets":[{"id":"a","vertices":[]}]})");
  CHECK_THROWS_AS(load_family(empty_verts.path), io_error);

  TmpFile badnum("badnum.json");
  badnum.write(R"({"sets":[{"id":"a","vertices":[[true,0]]}]})");
  CHECK_THROWS_AS(load_family(badnum.path), io_error);

  TmpFile notjson("notjson.json");
  notjson.write("{ nope");
  CHECK_THROWS_AS(load_family(notjson.path), io_error);

  CHECK_THROWS_AS(load_family("/tmp/pierce_io_no_such_file_anywhere.json"), io_error);
}

TEST_CASE("invalid geometry is an io error with the set location") {
  TmpFile cw("cw.json");  // clockwise square
  cw.write(R"({"sets":[{"id":"a","vertices":[[0,0],[0,1],[1,1],[1,0]]}]})");
  try {
    load_family(cw.path);
    FAIL("expected io_error");
  } catch (const io_error& e) {
    CHECK(std::string(e.what()).find("sets[0]") != std::string::npos);
  }
}

TEST_CASE("save/load round-trips exactly") {
  RandomFamilyParams par;
  par.n = 6;
  par.filter = RandomFamilyParams::Filter::rainbow;
  par.color_classes = 2;
  FamilyR fam = random_family(11, par);

  TmpFile f("roundtrip.json");
  save_family(fam, f.path);
  FamilyR back = load_family(f.path);
  REQUIRE(back.sets.size() == fam.sets.size());
  for (std::size_t i = 0; i < fam.sets.size(); ++i) {
    CHECK(back.sets[i].id == fam.sets[i].id);
    CHECK(back.sets[i].vertices == fam.sets[i].vertices);
  }
  CHECK(back.colors == fam.colors);

  // a second save emits identical bytes
  TmpFile g("roundtrip2.json");
  save_family(back, g.path);
  std::ifstream a(f.path), b(g.path);
  std::string sa((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
  std::string sb((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
  CHECK(sa == sb);
  CHECK(!sa.empty());
}

TEST_CASE("deep rationals survive the round trip") {
  FamilyR fam;
  Rational big = rat_from_string("123456789123456789/987654321987654321");
  fam.sets.push_back(make_convex_set("deep", {{big, rat(1, 3)}}));
  TmpFile f("deep.json");
  save_family(fam, f.path);
  FamilyR back = load_family(f.path);
  CHECK(back.sets[0].vertices[0].x == big);
  CHECK(back.sets[0].vertices[0].y == rat(1, 3));
}

TEST_CASE("save failures surface as io errors") {
  FamilyR fam;
  fam.sets.push_back(make_convex_set("a", {{rat(0), rat(0)}}));
  CHECK_THROWS_AS(save_family(fam, "/no/such/dir/x.json"), io_error);
}
