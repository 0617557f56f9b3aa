#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdio>

#include "support.hpp"
#include "vts/document.hpp"

using namespace vts;

TEST_CASE("emit then parse returns the same system") {
  const Vts v = fixture_fig1();
  const std::string text = emit_vts(v);
  const Vts back = parse_vts(text);
  CHECK(back.num_nodes == v.num_nodes);
  CHECK(back.num_molecules == v.num_molecules);
  CHECK(back.node_labels == v.node_labels);
  CHECK(back.node_activity == v.node_activity);
  CHECK(back.pairing == v.pairing);
  REQUIRE(back.edges.size() == v.edges.size());
  // emitter output is canonical, so a second trip is byte-identical
  CHECK(emit_vts(back) == text);
}

TEST_CASE("emitter sorts edges into canonical order") {
  Vts v = fixture_fig1();
  std::reverse(v.edges.begin(), v.edges.end());
  CHECK(emit_vts(v) == emit_vts(fixture_fig1()));
}

TEST_CASE("witness block round trip") {
  const Vts v = fixture_fig1();
  WitnessInfo wi;
  wi.dropped = {{2, 0, 0}, {0, 1, 0}};
  wi.disconnected_pair = {0, 2};
  const std::string text = emit_document(v, wi);
  const ParsedDocument doc = parse_document(text);
  REQUIRE(doc.witness.has_value());
  // dropped list comes back sorted
  REQUIRE(doc.witness->dropped.size() == 2);
  CHECK(doc.witness->dropped[0] == std::tuple<int, int, int>{0, 1, 0});
  CHECK(doc.witness->dropped[1] == std::tuple<int, int, int>{2, 0, 0});
  CHECK(doc.witness->disconnected_pair == std::pair<int, int>{0, 2});
}

TEST_CASE("parser rejects malformed documents with located errors") {
  auto err = [](const std::string& text) {
    return test::error_of([&] { parse_document(text); });
  };

  CHECK(err("not json at all").substr(0, 26) == "document is not valid JSON");
  CHECK(err("[1,2]") == "document root must be an object");
  CHECK(err("{}") == "document: missing field 'num_molecules'");
  CHECK(err(R"({"num_molecules": 3})") == "document: missing 'nodes' list");
  CHECK(err(R"({"num_molecules": 65, "nodes": []})") ==
        "num_molecules out of range [0, 64]");

  // node list problems
  CHECK(err(R"({"num_molecules": 2, "nodes": [{"id": 0}]})") ==
        "node 0: missing 'molecules'");
  CHECK(err(R"({"num_molecules": 2,
                "nodes": [{"id": 0, "molecules": [0], "active": []},
                          {"id": 0, "molecules": [0], "active": []}]})") ==
        "duplicate node id 0");
  CHECK(err(R"({"num_molecules": 2,
                "nodes": [{"id": 0, "molecules": [5], "active": []}]})") ==
        "node 0: molecule 5 out of range [0, 2)");
  CHECK(err(R"({"num_molecules": 2,
                "nodes": [{"id": 0, "molecules": [1, 1], "active": []}]})") ==
        "node 0: duplicate molecule 1");

  // edge and pairing problems
  const std::string one_node =
      R"({"num_molecules": 2,
          "nodes": [{"id": 0, "molecules": [0], "active": [0]}],)";
  CHECK(err(one_node + R"( "edges": [{"src": 0, "dst": 0}]})") ==
        "edge: missing field 'slot'");
  CHECK(err(one_node + R"( "edges": []})") ==
        "document: missing 'pairing' list");
  CHECK(err(one_node + R"( "edges": [], "pairing": [[0]]})") ==
        "pairing: entries must be [edge_molecule, node_molecule]");
  CHECK(err(one_node + R"( "edges": [], "pairing": [[0, 9]]})") ==
        "pairing: index out of range in (0,9)");
}

TEST_CASE("parser enforces structural invariants") {
  // edge carries a molecule its endpoint lacks
  const std::string text =
      R"({"num_molecules": 2,
          "nodes": [{"id": 0, "molecules": [0], "active": [0]},
                    {"id": 1, "molecules": [0], "active": [0]}],
          "edges": [{"src": 0, "dst": 1, "slot": 0,
                     "molecules": [1], "active": []}],
          "pairing": []})";
  const std::string msg = test::error_of([&] { parse_document(text); });
  CHECK(msg.find("V4") != std::string::npos);
}

TEST_CASE("parser rejects bad witness blocks") {
  const Vts v = fixture_fig1();
  auto patch = [&](const std::string& witness) {
    std::string text = emit_vts(v);
    // splice a witness member into the root object
    const auto pos = text.rfind('}');
    return text.substr(0, pos) + ", \"witness\": " + witness + "}";
  };
  auto err = [&](const std::string& witness) {
    return test::error_of([&] { parse_document(patch(witness)); });
  };
  CHECK(err("[]") == "witness: must be an object");
  CHECK(err("{}") == "witness: missing 'dropped' list");
  CHECK(err(R"({"dropped": [[9, 9, 9]], "disconnected_pair": [0, 1]})") ==
        "witness: dropped edge (9,9,9) is not an edge of the system");
  CHECK(err(R"({"dropped": [], "disconnected_pair": [0, 0]})") ==
        "witness: disconnected_pair out of range");
  CHECK(err(R"({"dropped": [], "disconnected_pair": [0]})") ==
        "witness: missing 'disconnected_pair' [i, j]");
}

TEST_CASE("file io round trip") {
  const std::string path = "test_document_tmp.json";
  const std::string text = emit_vts(fixture_fig1());
  write_file(path, text);
  CHECK(read_file(path) == text);
  std::remove(path.c_str());
  CHECK(test::error_of([&] { read_file(path); }) ==
        "cannot open file: " + path);
}
