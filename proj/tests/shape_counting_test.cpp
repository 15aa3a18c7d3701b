#include <gtest/gtest.h>

#include <algorithm>

#include "perm4/generators.hpp"
#include "perm4/shape_counting.hpp"
#include "test_util.hpp"

namespace perm4 {
namespace {

using testing::for_each_permutation;

PointSet points4(const char* digits) { return points_of(testing::perm_of(Pattern::from_digits(digits))); }

Pattern pat(const char* d) { return Pattern::from_digits(d); }

std::size_t shape_slot(const Shape& s) {
  const auto all = all_shapes();
  return static_cast<std::size_t>(std::find(all.begin(), all.end(), s) - all.begin());
}

TEST(EasyShapes, Families) {
  EXPECT_EQ(easy_shapes().size(), 18u);
  int product = 0, end = 0, corner = 0;
  for (const auto& s : easy_shapes()) {
    switch (shape_family(s)) {
      case ShapeFamily::kProduct: ++product; break;
      case ShapeFamily::kEndDoubled: ++end; break;
      case ShapeFamily::kCornerDoubled: ++corner; break;
      default: ADD_FAILURE() << s.to_string();
    }
  }
  EXPECT_EQ(product, 6);
  EXPECT_EQ(end, 8);
  EXPECT_EQ(corner, 4);
  EXPECT_EQ(shape_family(Shape{1, 1, 1, 1}), ShapeFamily::kFourPartite);
  EXPECT_EQ(shape_family(Shape{2, 0, 2, 0}), ShapeFamily::kNonProper);
}

TEST(ProductShape, Examples) {
  const auto div = PlaneDivision::from_doubled(5, 5);
  EXPECT_EQ(count_product_shape(points4("2143"), div, pat("2143"), Shape{0, 2, 2, 0}), Count{1});
  EXPECT_EQ(count_product_shape(points4("2143"), div, pat("1234"), Shape{0, 2, 2, 0}), Count{0});
  const auto id8 = points_of(Permutation::identity(8));
  EXPECT_EQ(count_product_shape(id8, PlaneDivision::from_doubled(9, 9), pat("1234"), Shape{0, 3, 1, 0}), Count{16});
  EXPECT_THROW(count_product_shape(id8, div, pat("1234"), Shape{1, 1, 0, 2}), std::invalid_argument);
}

TEST(Shape1102, Examples) {
  const auto ps = points4("2413");
  const auto div = PlaneDivision::from_doubled(3, 5);
  const auto brute = brute_shape_counts(DividedInstance::from(ps, div));
  ASSERT_EQ(brute[shape_slot(Shape{0, 2, 1, 1})][pat("2413").index()], Count{1});
  EXPECT_EQ(count_shape_1102(ps, div, pat("2413"), Shape{0, 2, 1, 1}), Count{1});
  // No point in the doubled region.
  EXPECT_EQ(count_shape_1102(points4("1234"), PlaneDivision::from_doubled(5, 5), pat("1234"), Shape{1, 1, 0, 2}),
            Count{0});
  EXPECT_THROW(count_shape_1102(ps, div, pat("2413"), Shape{1, 2, 0, 1}), std::invalid_argument);
}

TEST(Shape1201, Examples) {
  // q in TL and r in BR, both between the TR pair a, b.
  const auto ps = points4("3412");
  const auto div = PlaneDivision::from_doubled(3, 3);
  const auto brute = brute_shape_counts(DividedInstance::from(ps, div));
  ASSERT_EQ(brute[shape_slot(Shape{1, 2, 0, 1})][pat("3412").index()], Count{1});
  EXPECT_EQ(count_shape_1201(ps, div, pat("3412"), Shape{1, 2, 0, 1}), Count{1});
  EXPECT_EQ(count_shape_1201(points4("3412"), PlaneDivision::from_doubled(3, 1), pat("3412"), Shape{1, 2, 0, 1}),
            Count{0});
  EXPECT_THROW(count_shape_1201(ps, div, pat("3412"), Shape{0, 2, 2, 0}), std::invalid_argument);
}

TEST(AllEasyShapes, Examples) {
  EXPECT_EQ(count_all_easy_shapes(points4("1324"), PlaneDivision::from_doubled(1, 1), pat("1324")), Count{0});
  EXPECT_EQ(count_all_easy_shapes(points4("1324"), PlaneDivision::from_doubled(5, 5), pat("1324")), Count{0});
  EXPECT_EQ(count_all_easy_shapes(points4("2143"), PlaneDivision::from_doubled(5, 5), pat("2143")), Count{1});
}

TEST(CountShape, RejectsNonEasyShapes) {
  const auto inst = random_instance(10, 1);
  EXPECT_THROW(count_shape(inst, Shape{1, 1, 1, 1}), std::invalid_argument);
  EXPECT_THROW(count_shape(inst, Shape{4, 0, 0, 0}), std::invalid_argument);
}

// Per shape and pattern against the oracle, on the enumeration path (s <= 10)
// and the sweep path.
TEST(CountShape, RandomInstancesMatchOracle) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto s = static_cast<std::uint32_t>(4 + seed % 37);
    const auto inst = random_instance(s, seed);
    const auto brute = brute_shape_counts(inst);
    PatternCounts easy{};
    for (const auto& shape : easy_shapes()) {
      const auto got = count_shape(inst, shape);
      for (int i = 0; i < 24; ++i) {
        ASSERT_EQ(got[i], brute[shape_slot(shape)][i]) << "seed " << seed << " shape " << shape.to_string();
        ASSERT_LE(got[i], binomial(s, 4));
        easy[i] += got[i];
      }
    }
    EXPECT_EQ(count_easy_shapes(inst), easy);
  }
}

TEST(CountShape, SkewedDivisions) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto inst = random_instance(30, seed);
    inst.cx = static_cast<std::uint32_t>(seed % 4);
    inst.cy = static_cast<std::uint32_t>(30 - seed % 5);
    const auto brute = brute_shape_counts(inst);
    for (const auto& shape : easy_shapes()) ASSERT_EQ(count_shape(inst, shape), brute[shape_slot(shape)]);
  }
}

TEST(CountShape, PerPatternEntryPoints) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = random_instance(25, 500 + seed);
    const auto ps = inst.point_set();
    const auto div = inst.division();
    const auto brute = brute_shape_counts(inst);
    for (const auto& shape : easy_shapes())
      for (int i = 0; i < 24; ++i) {
        const Pattern p = Pattern::from_index4(i);
        Count got = 0;
        switch (shape_family(shape)) {
          case ShapeFamily::kProduct: got = count_product_shape(ps, div, p, shape); break;
          case ShapeFamily::kEndDoubled: got = count_shape_1102(ps, div, p, shape); break;
          default: got = count_shape_1201(ps, div, p, shape); break;
        }
        ASSERT_EQ(got, brute[shape_slot(shape)][i]);
      }
  }
}

TEST(CountShape, ReflectionTransport) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto inst = random_instance(18, 900 + seed);
    for (const auto& g : dihedral_group()) {
      const auto moved = g.apply(inst);
      for (const auto& shape : easy_shapes()) {
        const auto here = count_shape(inst, shape);
        const auto there = count_shape(moved, g.apply(shape));
        for (int i = 0; i < 24; ++i) ASSERT_EQ(here[i], there[g.apply(Pattern::from_index4(i)).index()]);
      }
    }
  }
}

TEST(AllEasyShapes, ExhaustiveCentralDivision) {
  for (std::size_t n = 4; n <= 7; ++n)
    for_each_permutation(n, [&](const Permutation& perm) {
      const auto ps = points_of(perm);
      const auto div = PlaneDivision::between(static_cast<std::int64_t>(n / 2), static_cast<std::int64_t>(n / 2));
      const auto brute = brute_shape_counts(DividedInstance::from(ps, div));
      for (int i = 0; i < 24; ++i) {
        Count want = 0;
        for (const auto& shape : easy_shapes()) want += brute[shape_slot(shape)][i];
        ASSERT_EQ(count_all_easy_shapes(ps, div, Pattern::from_index4(i)), want);
      }
    });
}

TEST(AllEasyShapes, PartitionOfAllOccurrences) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto inst = random_instance(20, 1300 + seed);
    const auto brute = brute_shape_counts(inst);
    const auto easy = count_easy_shapes(inst);
    const auto all = all_shapes();
    for (int i = 0; i < 24; ++i) {
      Count rest = 0;
      for (std::size_t k = 0; k < all.size(); ++k)
        if (!all[k].proper() || all[k].four_partite()) rest += brute[k][i];
      EXPECT_EQ(easy[i] + rest, brute_count_pattern(inst.point_set(), Pattern::from_index4(i)));
    }
  }
}

TEST(TrivialPatterns, NeverFourPartite) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto inst = random_instance(16, 2000 + seed);
    const auto brute = brute_shape_counts(inst);
    for (int i = 0; i < 24; ++i) {
      if (!is_trivial(Pattern::from_index4(i))) continue;
      EXPECT_EQ(brute[shape_slot(Shape{1, 1, 1, 1})][i], Count{0});
    }
  }
}

}  // namespace
}  // namespace perm4
