#include <doctest.h>

#include <fstream>

#include "parlab/catalog.hpp"

using namespace parlab;

namespace {

const CatalogOutcome* find(const std::vector<CatalogOutcome>& out, const std::string& id) {
  for (const auto& o : out)
    if (o.id == id) return &o;
  return nullptr;
}

}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("shipped catalog parses completely") {
    const auto& cat = shipped_catalog();
    CHECK(cat.size() == 76);
    for (const auto& e : cat) {
      CAPTURE(e.id);
      CHECK(e.record.has_value());
      CHECK(e.error.empty());
    }
    CHECK(select(cat, "euler-t").size() == 9);
    CHECK(select(cat, "jacobi-t").size() == 9);
    CHECK(select(cat, "genfcn").size() == 23);
    CHECK(select(cat, "euler").size() == 1);
    CHECK(select(cat, "genfcn:7").size() == 1);
    CHECK(select(cat, "nope").empty());
  }

  TEST_CASE("shipped catalog verifies except the f_34^4 form of the 1/(f_1 f_17) dissection") {
    const auto out = verify_catalog(shipped_catalog(), 2000);
    for (const auto& o : out) {
      CAPTURE(o.id);
      CAPTURE(o.message);
      if (o.id == "zhao-f1f17") continue;
      CHECK(o.status == VerifyStatus::pass);
      CHECK(o.trunc >= 1000);
    }
    const auto* z = find(out, "zhao-f1f17");
    REQUIRE(z);
    CHECK(z->status == VerifyStatus::fail);
    CHECK(z->first_mismatch == 39);
    CHECK(find(out, "zhao-f1f17-amended")->status == VerifyStatus::pass);
    CHECK(find(out, "k17-odd")->status == VerifyStatus::pass);
  }

  TEST_CASE("the f_5^5/f_1 four-theta certificate") {
    const auto sel = select(shipped_catalog(), "keith-f5pow5");
    REQUIRE(sel.size() == 1);
    CHECK(verify_record(*sel[0]->record, 3000).status == VerifyStatus::pass);
  }

  TEST_CASE("a corrupted record fails with a finite mismatch") {
    const auto cat = load_catalog(R"([
      {"id": "f5f1", "lhs": "f5/f1", "rhs": "f1^4 + q*f5^6/f1^2"},
      {"id": "f5f1-mutated", "lhs": "f5/f1", "rhs": "f1^4 + q*f5^6/f1^3"},
      {"id": "euler-mutated", "lhs": "f1", "rhs": {"theta": [[3, -1, 0, 1]]}}
    ])");
    const auto out = verify_catalog(cat, 500);
    CHECK(out[0].status == VerifyStatus::pass);
    CHECK(out[1].status == VerifyStatus::fail);
    REQUIRE(out[1].first_mismatch);
    CHECK(*out[1].first_mismatch < 500);
    CHECK(out[2].status == VerifyStatus::fail);
    CHECK(out[2].first_mismatch == 1);
  }

  TEST_CASE("record errors stay per record") {
    const auto cat = load_catalog(R"([
      {"id": "ok", "lhs": "f1^2", "rhs": {"theta": [[3, -1, 0, 1]]}, "min_trunc": 100},
      {"id": "bad-expr", "lhs": "f1^", "rhs": "f1"},
      {"id": "bad-form", "lhs": "f1", "rhs": {"theta": [[3, 2, 0, 2]]}},
      {"id": "bad-step", "lhs": {"expr": "f1", "steps": [{"twist": 2}]}, "rhs": "f1"},
      {"id": "two-sources", "lhs": {"expr": "f1", "theta": [[3, -1, 0, 2]]}, "rhs": "f1"},
      {"id": "bad-range", "lhs": "f1", "rhs": {"theta": [[3, -1, 0, 2, "sideways"]]}},
      {"lhs": "f1"}
    ])");
    REQUIRE(cat.size() == 7);
    CHECK(cat[0].record);
    for (std::size_t i = 1; i < cat.size(); ++i) {
      CAPTURE(i);
      CHECK(!cat[i].record);
      CHECK(!cat[i].error.empty());
    }
    CHECK(cat[6].id == "#6");
    const auto out = verify_catalog(cat, 100);
    CHECK(out[0].status == VerifyStatus::pass);
    CHECK(out[1].status == VerifyStatus::error);
  }

  TEST_CASE("top-level errors throw") {
    CHECK_THROWS(load_catalog("{}"));
    CHECK_THROWS(load_catalog("[1, "));
    CHECK_THROWS(load_catalog_file("/nonexistent/catalog.json"));
  }

  TEST_CASE("theta ranges and sums in records") {
    const auto cat = load_catalog(R"([
      {"id": "jacobi", "lhs": "f1^3", "rhs": {"theta": [[1, 1, 0, 2, "nonnegative"]]}},
      {"id": "jacobi-two-sided", "lhs": "q^0 + q^0", "rhs": {"theta": [[1, 1, 0, 2, "all"]]}},
      {"id": "squares", "lhs": {"theta": [[1, 0, 0, 1, true]]},
       "rhs": {"theta": [[1, 0, 0, 1, "positive"]]}},
      {"id": "sum", "lhs": ["f1", "q*f1"], "rhs": {"theta_sum": [[[3, -1, 0, 2]], [[3, -1, 2, 2]]]}},
      {"id": "singular", "lhs": {"singular": [20, 5]}, "rhs": "f5^3/f1"},
      {"id": "steps", "lhs": {"expr": "f1", "steps": [{"magnify": 2}, {"shift": 1}, {"extract": [2, 1]}]},
       "rhs": "f1"},
      {"id": "mul-add", "lhs": {"expr": "f1", "steps": [{"mul": "f1"}, {"add": "f2"}]}, "rhs": "q^0 + q^0"}
    ])");
    for (const auto& o : verify_catalog(cat, 600)) {
      CAPTURE(o.id);
      CAPTURE(o.message);
      CHECK(o.status == VerifyStatus::pass);
    }
  }

  TEST_CASE("verification uses the larger of N and min_trunc") {
    const auto cat = load_catalog(R"([{"id": "e", "lhs": "f1", "rhs": "f1", "min_trunc": 3000}])");
    CHECK(verify_record(*cat[0].record, 100).trunc == 3000);
    CHECK(verify_record(*cat[0].record, 5000).trunc == 5000);
  }

  TEST_CASE("catalog files load from disk") {
    const std::string path = "parlab_test_catalog.json";
    {
      std::ofstream out(path);
      out << shipped_catalog_json();
    }
    CHECK(load_catalog_file(path).size() == shipped_catalog().size());
    std::remove(path.c_str());
  }
}
