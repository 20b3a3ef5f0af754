#include <algorithm>

#include "clrp/catalog.hpp"
#include "clrp/io.hpp"
#include "doctest.h"

using namespace clrp;

TEST_CASE("every named network round-trips through the text format") {
  const std::vector<std::string> names = catalog::network_names();
  CHECK(!names.empty());
  for (const std::string& name : names) {
    CAPTURE(name);
    const NetworkInstance net = catalog::network(name);
    CHECK_NOTHROW(net.validate());
    const NetworkInstance again = parse_network(catalog::dump(name));
    CHECK(again.k == net.k);
    CHECK(again.N == net.N);
    CHECK(again.relations == net.relations);
  }
}

TEST_CASE("every named access structure round-trips through the text format") {
  for (const std::string& name : catalog::access_names()) {
    CAPTURE(name);
    const AccessStructure acc = catalog::access(name);
    CHECK_NOTHROW(acc.validate());
    const AccessStructure again = parse_access_structure(catalog::dump(name));
    CHECK(again.N == acc.N);
    CHECK(again.minimal_auth == acc.minimal_auth);
  }
}

TEST_CASE("every named rank vector parses and is a polymatroid") {
  for (const std::string& name : catalog::rank_vector_names()) {
    CAPTURE(name);
    const RankVector h = catalog::rank_vector(name);
    const RankVector again = parse_rank_vector(catalog::dump(name));
    CHECK(again == h);
    std::string why;
    CHECK_MESSAGE(h.is_polymatroid(&why), why);
  }
}

TEST_CASE("expected entries are present") {
  for (const char* name :
       {"fano", "nonfano", "vamos", "u24", "hn1", "fig6", "mdcs"}) {
    CAPTURE(name);
    CHECK(catalog::has_entry(name));
    CHECK_NOTHROW(catalog::network(name));
  }
  CHECK(catalog::has_entry("benaloh"));
  CHECK(catalog::has_entry("linrank6"));
  CHECK(catalog::has_entry("u24rank"));
  CHECK(catalog::access("benaloh").N == 5);
  CHECK(catalog::rank_vector("linrank6").N == 6);
  CHECK(catalog::rank_vector("u24rank").N == 4);
}

TEST_CASE("specific catalog shapes") {
  const NetworkInstance fano = catalog::network("fano");
  CHECK(fano.k == 3);
  CHECK(fano.N == 7);
  CHECK(fano.relations.size() == 7);
  int decoders = 0;
  for (std::size_t i = 0; i < fano.relations.size(); ++i)
    if (fano.relation_is_decoder(i)) ++decoders;
  CHECK(decoders == 3);

  const NetworkInstance mdcs = catalog::network("mdcs");
  CHECK(mdcs.k == 3);
  CHECK(mdcs.N == 7);

  const AccessStructure ben = catalog::access("benaloh");
  CHECK(ben.minimal_auth ==
        std::vector<std::vector<int>>{{2, 3}, {3, 4}, {4, 5}});
  CHECK(ben.closure().size() == 8);
}

TEST_CASE("unknown names are rejected") {
  CHECK(!catalog::has_entry("no-such-entry"));
  CHECK_THROWS_AS(catalog::network("no-such-entry"), error);
  CHECK_THROWS_AS(catalog::access("fano"), error);
  CHECK_THROWS_AS(catalog::rank_vector("fano"), error);
  CHECK_THROWS_AS(catalog::dump("no-such-entry"), error);
}
