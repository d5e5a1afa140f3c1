#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

#include "severi/enumerate.hpp"
#include "support/known_templates.hpp"

using namespace severi;

TEST_CASE("template counts for small cogenus") {
  CHECK(templates_of_cogenus(0).empty());
  CHECK(templates_of_cogenus(1).size() == 2);
  CHECK(templates_of_cogenus(2).size() == 7);
}

TEST_CASE("enumerated templates match the known delta <= 2 set") {
  std::set<TauGraph> expected_d1, expected_d2;
  for (const auto& row : testing::known_template_rows()) {
    (row.delta == 1 ? expected_d1 : expected_d2).insert(row.graph);
  }
  std::set<TauGraph> got_d1, got_d2;
  for (const Template& t : templates_of_cogenus(1)) got_d1.insert(t.graph());
  for (const Template& t : templates_of_cogenus(2)) got_d2.insert(t.graph());
  CHECK(got_d1 == expected_d1);
  CHECK(got_d2 == expected_d2);
}

TEST_CASE("every result is a template of the right cogenus, without duplicates") {
  for (unsigned delta = 1; delta <= 4; ++delta) {
    const auto& templates = templates_of_cogenus(delta);
    CHECK(std::is_sorted(templates.begin(), templates.end()));
    for (std::size_t i = 0; i + 1 < templates.size(); ++i) {
      CHECK(templates[i] < templates[i + 1]);  // strictly, so no duplicates
    }
    for (const Template& t : templates) {
      CHECK(t.graph().is_template());
      CHECK(t.cogenus() == delta);
      CHECK(t.graph().minv() == 0);
    }
  }
}

TEST_CASE("conjugation is an automorphism of each template set") {
  for (unsigned delta = 1; delta <= 3; ++delta) {
    std::set<TauGraph> all;
    for (const Template& t : templates_of_cogenus(delta)) all.insert(t.graph());
    for (const Template& t : templates_of_cogenus(delta)) {
      CHECK(all.count(t.conjugate().graph()) == 1);
    }
  }
}

TEST_CASE("the endpoint window [0, delta+1] is not binding") {
  for (unsigned delta = 1; delta <= 4; ++delta) {
    const auto wide = enumerate_templates_in_window(delta, delta + 2);
    const auto& standard = templates_of_cogenus(delta);
    REQUIRE(wide.size() == standard.size());
    for (std::size_t i = 0; i < wide.size(); ++i) {
      CHECK(wide[i] == standard[i]);
      CHECK(wide[i].graph().maxv() <= delta + 1);
    }
  }
}

TEST_CASE("bounded graph enumeration") {
  CHECK(graphs_of_cogenus_bounded(0, 5).empty());
  const auto one = graphs_of_cogenus_bounded(1, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == TauGraph({{0, 1, 2}}, {1}));

  const auto three = graphs_of_cogenus_bounded(1, 2);
  REQUIRE(three.size() == 3);
  const std::set<TauGraph> expected{TauGraph({{0, 1, 2}}, {1}), TauGraph({{1, 2, 2}}, {1}),
                                    TauGraph({{0, 2, 1}}, {1})};
  CHECK(std::set<TauGraph>(three.begin(), three.end()) == expected);

  const auto packed = graphs_of_cogenus_bounded(2, 1);
  REQUIRE(packed.size() == 2);
  const std::set<TauGraph> expected2{TauGraph({{0, 1, 3}}, {1}), TauGraph({{0, 1, 2}}, {2})};
  CHECK(std::set<TauGraph>(packed.begin(), packed.end()) == expected2);

  for (const TauGraph& g : graphs_of_cogenus_bounded(3, 4)) {
    CHECK(g.cogenus() == 3);
    CHECK(g.maxv() <= 4);
  }
}

TEST_CASE("template disk cache round trip and recovery") {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("severi_cache_test_" + std::to_string(std::rand()));
  TemplateCache cache(dir);

  const auto first = cache.get(2);
  REQUIRE(first.size() == 7);
  CHECK(std::filesystem::exists(dir / "templates_delta_2.json"));

  const auto second = cache.get(2);  // now served from disk
  REQUIRE(second.size() == 7);
  for (std::size_t i = 0; i < 7; ++i) CHECK(first[i] == second[i]);

  // A corrupt file must fall back to regeneration.
  {
    std::ofstream out(dir / "templates_delta_2.json");
    out << "{not json";
  }
  const auto recovered = cache.get(2);
  CHECK(recovered.size() == 7);

  // So must a file written by a different format version.
  {
    std::ofstream out(dir / "templates_delta_2.json");
    out << "{\"format_version\": 0, \"delta\": 2, \"templates\": []}";
  }
  CHECK(cache.get(2).size() == 7);

  std::filesystem::remove_all(dir);
}
