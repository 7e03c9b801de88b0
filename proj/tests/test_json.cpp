#include <gtest/gtest.h>

#include <fstream>

#include "gtmod/json_io.hpp"
#include "helpers.hpp"

using namespace gtmod;
using namespace testutil;

TEST(Json, PointRoundTrip) {
  for (int t = 0; t < 50; ++t) {
    Point p = random_point(4);
    json j = json::parse(to_json(p).dump());
    EXPECT_EQ(point_from_json(j), p);
  }
  Point q = Point::from_rows({{Affine(make_q(-3, 2))}, {Affine::parse("a+1/3"), Affine(0)}});
  EXPECT_EQ(point_from_json(to_json(q)), q);
}

TEST(Json, ShiftPermutationVectorRoundTrip) {
  for (int t = 0; t < 30; ++t) {
    Shift z = random_shift(4, -3, 3);
    EXPECT_EQ(shift_from_json(4, json::parse(to_json(z).dump())), z);
    Permutation s = random_perm(4);
    EXPECT_EQ(permutation_from_json(json::parse(to_json(s).dump())), s);
  }
  UniversalModule M{Point(4)};
  TableauVector r = M.act_E(4, 3, M.act_E(3, 2, M.act_E(2, 1, socle_generator(M))));
  r.add(TableauKey{Shift(4), Permutation::identity(4)}, Scalar(make_q(7, 3)));
  EXPECT_EQ(tableau_vector_from_json(4, json::parse(to_json(r).dump())), r);
}

TEST(Json, GraphRoundTrip) {
  for (int t = 0; t < 20; ++t) {
    Point seed = random_seed(4);
    GtGraph g = reduce(orient(seed));
    EXPECT_EQ(graph_from_json(json::parse(to_json(g).dump())), g);
    GtGraph u = graph_of(seed);
    EXPECT_EQ(graph_from_json(to_json(u)), u);
  }
}

TEST(Json, SampleInputsParse) {
  std::ifstream f(GTMOD_DATA_DIR "/example_point.json");
  ASSERT_TRUE(f);
  Point p = point_from_json(json::parse(f));
  EXPECT_EQ(p.n(), 5);
  EXPECT_TRUE(is_seed(seed_of(p).seed));
  std::ifstream g(GTMOD_DATA_DIR "/n4_socle_vector.json");
  ASSERT_TRUE(g);
  EXPECT_EQ(tableau_vector_from_json(4, json::parse(g)), socle_generator(UniversalModule{Point(4)}));
}

TEST(Json, MalformedInputs) {
  EXPECT_THROW(point_from_json(json::parse(R"({"n": 3, "rows": [["0"], ["0", "0"]]})")), std::invalid_argument);
  EXPECT_THROW(point_from_json(json::parse(R"([["0"], ["0", "x*y"]])")), std::invalid_argument);
  EXPECT_THROW(point_from_json(json::parse(R"([["0"], [true, 1]])")), std::invalid_argument);
  EXPECT_THROW(shift_from_json(3, json::parse(R"([[1], [0, 0], [0, 0, 1]])")), std::invalid_argument);
  EXPECT_THROW(tableau_vector_from_json(2, json::parse(R"([{"z": [[0]], "sigma": [[1], [1, 2]], "coeff": "a"}])")),
               std::invalid_argument);
  EXPECT_THROW(json::parse("{rows:"), json::parse_error);
}
