#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "symorb/io.hpp"

using namespace symorb;

namespace {

OrbitRecord d12_record() {
  SymmetryGroup G = named_group("d12");
  MinimizeOptions opt;
  opt.N = 12;
  opt.restarts = 1;
  OrbitRecord r;
  r.group_name = "d12";
  r.generators = format_generators(G.generators());
  r.group_order = G.order();
  r.omega = 0;
  r.alpha = 1;
  r.result = minimize(G, Masses{}, 0.0, 1.0, opt);
  return r;
}

ErrorKind kind_of(const std::string& text) {
  try {
    orbit_from_json(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::DomainError;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("orbit round trip") {
    OrbitRecord r = d12_record();
    auto path = (std::filesystem::temp_directory_path() / "symorb_io_roundtrip.json").string();
    save_orbit(path, r);
    OrbitRecord back = load_orbit(path);
    std::filesystem::remove(path);
    CHECK(back.result.action == r.result.action);
    CHECK(back.result.loop.modes == r.result.loop.modes);
    CHECK(back.group_order == 12);
    CHECK(generate_closure(parse_generators(back.generators)).order() == 12);
    CHECK(action(back.result.loop, 0.0, 1.0) == doctest::Approx(r.result.action).epsilon(1e-15));
  }

  TEST_CASE("damaged files") {
    std::string text = orbit_to_json(d12_record());
    CHECK(kind_of(text.substr(0, text.size() / 2)) == ErrorKind::SchemaError);
    CHECK(kind_of("{}") == ErrorKind::SchemaError);

    // flip one digit inside the modes array
    std::string bad = text;
    auto pos = bad.find("\"modes\"");
    pos = bad.find_first_of("123456789", bad.find('.', pos));
    bad[pos] = bad[pos] == '9' ? '8' : static_cast<char>(bad[pos] + 1);
    CHECK(kind_of(bad) == ErrorKind::ChecksumMismatch);

    std::string order = text;
    auto at = order.find("\"group_order\": 12");
    REQUIRE(at != std::string::npos);
    order.replace(at, 17, "\"group_order\": 6");
    CHECK(kind_of(order) == ErrorKind::SchemaError);
  }

  TEST_CASE("trajectory csv") {
    Loop x(Masses{}, 1);
    x.c(0, 1) = 1;
    x.c(1, 1) = -1;
    std::string csv = trajectory_csv(x, 8);
    CHECK(csv.rfind("t,x1re,x1im,x2re,x2im,x3re,x3im\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 9);
  }
}
