#include <string>

#include "doctest.h"
#include "json.hpp"

#include "csr/dynamics.hpp"
#include "csr/game.hpp"
#include "csr/graph.hpp"
#include "csr/io.hpp"
#include "test_helpers.hpp"

using csr::Allocation;
using csr::Instance;
using csr::InstanceFile;

TEST_CASE("instance files round-trip through text") {
  InstanceFile file;
  file.n = 4;
  file.edges = {{0, 1}, {1, 2}, {2, 3}};
  file.k = 3;
  file.init = Allocation{0, 1, 2, 0};
  file.meta = nlohmann::json{{"family", "path"}, {"params", {{"n", 4}}}};

  const std::string text = serialize_instance(file);
  CHECK(csr::parse_instance(text) == file);

  const nlohmann::json doc = nlohmann::json::parse(text);
  CHECK(doc.at("version") == "csr-v1");
  CHECK(text.back() == '\n');

  // Optional fields stay absent.
  InstanceFile bare;
  bare.n = 2;
  bare.edges = {{0, 1}};
  bare.k = 2;
  const nlohmann::json bare_doc = nlohmann::json::parse(csr::serialize_instance(bare));
  CHECK_FALSE(bare_doc.contains("init"));
  CHECK_FALSE(bare_doc.contains("meta"));
  CHECK(csr::parse_instance(csr::serialize_instance(bare)) == bare);
}

TEST_CASE("instance parsing points at the offending field") {
  using doctest::Contains;
  const auto parse = [](const std::string& text) { return csr::parse_instance(text); };

  CHECK_THROWS_WITH_AS(parse("{"), Contains("not valid JSON"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse("[1,2]"), Contains("top level"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse(R"({"n":2,"edges":[],"k":1})"), Contains("'version'"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse(R"({"version":"csr-v0","n":2,"edges":[],"k":1})"),
                       Contains("'version'"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse(R"({"version":"csr-v1","edges":[],"k":1})"), Contains("'n'"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse(R"({"version":"csr-v1","n":2.5,"edges":[],"k":1})"),
                       Contains("'n'"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse(R"({"version":"csr-v1","n":2,"k":1})"), Contains("'edges'"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse(R"({"version":"csr-v1","n":2,"edges":[[0]],"k":1})"),
                       Contains("'edges'"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse(R"({"version":"csr-v1","n":2,"edges":[[0,1]]})"),
                       Contains("'k'"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse(R"({"version":"csr-v1","n":2,"edges":[[0,1]],"k":2,"init":3})"),
                       Contains("'init'"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      parse(R"({"version":"csr-v1","n":2,"edges":[[0,1]],"k":2,"init":[0,"x"]})"),
      Contains("'init'"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse(R"({"version":"csr-v1","n":2,"edges":[[0,1]],"k":2,"meta":7})"),
                       Contains("'meta'"), std::invalid_argument);
}

TEST_CASE("instance build validates graph structure and embedded init") {
  InstanceFile file;
  file.n = 3;
  file.edges = {{0, 1}, {1, 2}};
  file.k = 2;
  const Instance inst = csr::to_instance(file);
  CHECK(inst.node_count() == 3);
  CHECK(inst.resource_count == 2);

  file.init = Allocation{0, 1};  // wrong length
  CHECK_THROWS_AS(csr::to_instance(file), std::invalid_argument);
  file.init = Allocation{0, 1, 5};  // resource out of range
  CHECK_THROWS_AS(csr::to_instance(file), std::invalid_argument);
  file.init.reset();
  file.edges = {{0, 1}};  // disconnected
  CHECK_THROWS_AS(csr::to_instance(file), std::invalid_argument);

  const InstanceFile back = csr::from_instance(inst, Allocation{1, 0, 1});
  CHECK(back.n == 3);
  CHECK(back.k == 2);
  CHECK(back.edges == std::vector<csr::Edge>{{0, 1}, {1, 2}});
  CHECK(back.init == Allocation{1, 0, 1});
}

TEST_CASE("file save and load round-trip") {
  const auto dir = testutil::fresh_temp_dir("io");
  InstanceFile file;
  file.n = 3;
  file.edges = {{0, 1}, {1, 2}};
  file.k = 2;
  const auto path = (dir / "inst.json").string();
  csr::save_instance_file(file, path);
  CHECK(csr::load_instance_file(path) == file);
  CHECK_THROWS_AS(csr::load_instance_file((dir / "missing.json").string()),
                  std::invalid_argument);
}

TEST_CASE("allocation lists parse strictly and print back") {
  CHECK(csr::parse_allocation_list("0,1,0") == Allocation{0, 1, 0});
  CHECK(csr::parse_allocation_list("2") == Allocation{2});
  CHECK(csr::format_allocation_list({0, 1, 0}) == "0,1,0");
  CHECK(csr::format_allocation_list({}) == "");
  CHECK_THROWS_AS(csr::parse_allocation_list(""), std::invalid_argument);
  CHECK_THROWS_AS(csr::parse_allocation_list("0,,1"), std::invalid_argument);
  CHECK_THROWS_AS(csr::parse_allocation_list("0,x"), std::invalid_argument);
  CHECK_THROWS_AS(csr::parse_allocation_list("1,2,"), std::invalid_argument);
}

TEST_CASE("reals print with twelve significant digits") {
  CHECK(csr::format_real(2.0) == "2");
  CHECK(csr::format_real(0.5) == "0.5");
  CHECK(csr::format_real(1.0 / 3.0) == "0.333333333333");
  CHECK(csr::format_real(123456789012345.0) == "1.23456789012e+14");
  CHECK(csr::format_real(2.5, 3) == "2.5");
}

TEST_CASE("trace CSV layout is stable") {
  const Instance inst(csr::make_path(3), 2);
  const auto result = csr::run_lbr(inst, {0, 0, 0});
  std::ostringstream out;
  csr::write_trace_csv(result.trace, out);
  CHECK(out.str() ==
        "step,player,old_resource,new_resource,old_radius,new_radius,potential,social_cost\n"
        "0,0,0,1,1,2,2.46696544837,4\n"
        "1,2,0,1,1,2,1.4008963451,3\n");

  // Empty traces still carry the header.
  std::ostringstream empty;
  csr::write_trace_csv(csr::run_lbr(inst, {0, 1, 0}).trace, empty);
  CHECK(empty.str() ==
        "step,player,old_resource,new_resource,old_radius,new_radius,potential,social_cost\n");
}

TEST_CASE("dot export colors nodes by held resource") {
  const csr::Graph g = csr::make_path(3);
  const Allocation alloc{0, 1, 0};
  std::ostringstream out;
  csr::write_dot(g, &alloc, out);
  const std::string text = out.str();
  CHECK(text.find("graph csr {") != std::string::npos);
  CHECK(text.find("0 [label=\"0:o0\", fillcolor=lightblue]") != std::string::npos);
  CHECK(text.find("1 [label=\"1:o1\", fillcolor=lightcoral]") != std::string::npos);
  CHECK(text.find("0 -- 1;") != std::string::npos);
  CHECK(text.find("1 -- 2;") != std::string::npos);

  std::ostringstream plain;
  csr::write_dot(g, nullptr, plain);
  CHECK(plain.str().find("fillcolor") == std::string::npos);
}
