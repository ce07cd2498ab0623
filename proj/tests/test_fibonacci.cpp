#include <doctest.h>

#include <set>

#include "gcontract/beta.hpp"
#include "gcontract/fibonacci.hpp"
#include "gcontract/io.hpp"

using namespace gcontract;

namespace {

std::uint64_t fib_by_recurrence(std::size_t j) {
  std::vector<std::uint64_t> f{0, 1};
  while (f.size() <= j)
    f.push_back(f[f.size() - 1] + f[f.size() - 2]);
  return f[j];
}

} // namespace

TEST_CASE("fib_number") {
  CHECK(fib_number(0) == 0);
  CHECK(fib_number(1) == 1);
  CHECK(fib_by_recurrence(10) == 55);
  CHECK(fib_number(10) == 55);
  for (std::size_t j = 0; j <= 90; ++j)
    REQUIRE(fib_number(j) == fib_by_recurrence(j));
}

TEST_CASE("generate_fib_instance small levels") {
  SUBCASE("level 0") {
    const auto inst = generate_fib_instance(0);
    CHECK(inst.graph.order() == 1);
    CHECK(inst.graph.size() == 0);
  }
  SUBCASE("level 1: leaf 0, old root 1") {
    const auto inst = generate_fib_instance(1);
    const std::vector<Edge> edge{{0, 1}};
    CHECK(inst.graph == new_graph(2, edge, {0, 0}));
    CHECK(inst.prev_order == 1);
  }
  SUBCASE("level 2") {
    const auto inst = generate_fib_instance(2);
    CHECK(inst.graph.edge_list() == std::vector<Edge>{{0, 2}, {1, 2}});
    CHECK(evaluate_contraction_mapping(inst.graph).becomes == std::vector<Vertex>{0, 1, 0});
  }
  SUBCASE("level 6 has F_8 = 21 vertices") {
    CHECK(generate_fib_instance(6).graph.order() == 21);
  }
  CHECK_THROWS_AS(generate_fib_instance(kMaxFibLevel + 1), GraphError);
}

TEST_CASE("verify_fib_instance") {
  SUBCASE("level 0 passes with no iteration") {
    const auto report = verify_fib_instance(generate_fib_instance(0));
    CHECK(report.ok());
    CHECK(report.iterations == 0);
  }
  SUBCASE("level 2 steps to level 1 and needs two iterations") {
    const auto report = verify_fib_instance(generate_fib_instance(2));
    CHECK(report.ok());
    CHECK(report.iterations == 2);
  }
  SUBCASE("level 12: 377 vertices, 12 iterations") {
    const auto inst = generate_fib_instance(12);
    CHECK(inst.graph.order() == 377);
    const auto report = verify_fib_instance(inst);
    for (const auto& c : report.checks)
      CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
    CHECK(report.iterations == 12);
    CHECK(golden_ratio_bound(377) == 12);
  }
  SUBCASE("every level up to 16") {
    for (std::size_t level = 0; level <= 16; ++level)
      REQUIRE(verify_fib_instance(generate_fib_instance(level)).ok());
  }
  SUBCASE("a relabelled instance fails the checks") {
    auto inst = generate_fib_instance(5);
    inst.roles[0] = FibRole::Q;
    CHECK_FALSE(verify_fib_instance(inst).ok());
    auto shifted = generate_fib_instance(5);
    shifted.graph = generate_fib_instance(4).graph;
    CHECK_FALSE(verify_fib_instance(shifted).ok());
  }
}

TEST_CASE("each contraction step reproduces the previous instance") {
  ContractOptions options;
  options.trace = true;
  const auto result = contract_to_fixpoint(generate_fib_instance(9).graph, options);
  REQUIRE(result.trace.iterations == 9);
  for (std::size_t k = 0; k <= 9; ++k)
    CHECK(result.trace.graphs[k] == generate_fib_instance(9 - k).graph);
}

TEST_CASE("role export yields three style classes") {
  const auto inst = generate_fib_instance(3);
  const std::set<FibRole> distinct(inst.roles.begin(), inst.roles.end());
  REQUIRE(distinct.size() == 3);
  const auto dot = export_dot(inst.graph, &inst.roles);
  std::set<std::string> classes;
  for (std::size_t pos = dot.find("class=\""); pos != std::string::npos;
       pos = dot.find("class=\"", pos + 1))
    classes.insert(dot.substr(pos + 7, dot.find('"', pos + 7) - pos - 7));
  CHECK(classes == std::set<std::string>{"P", "Q", "R"});
}
