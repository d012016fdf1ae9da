#include <gtest/gtest.h>

#include "permgraph/error.hpp"
#include "permgraph/group.hpp"
#include "permgraph/group_spec.hpp"

using namespace permgraph;

TEST(GroupSpecParse, Families) {
  EXPECT_EQ(parse_group_spec("Z 12"), GroupSpec::cyclic(12));
  EXPECT_EQ(parse_group_spec("D 8"), GroupSpec::dihedral(8));
  EXPECT_EQ(parse_group_spec("Q 8"), GroupSpec::quaternion(8));
  EXPECT_EQ(parse_group_spec("M 3 3"), GroupSpec::modular(3, 3));
  EXPECT_EQ(parse_group_spec("SD 7 3 1 1"), GroupSpec::semidirect(7, 3, 1, 1));
  EXPECT_EQ(parse_group_spec("S 4"), GroupSpec::symmetric(4));
  EXPECT_EQ(parse_group_spec("A 4"), GroupSpec::alternating(4));
}

TEST(GroupSpecParse, ProductsFlatten) {
  const GroupSpec s = parse_group_spec("Z 2 x Z 2 x Q 8");
  EXPECT_EQ(s.family, Family::direct_product);
  ASSERT_EQ(s.factors.size(), 3u);
  EXPECT_EQ(s.factors[2], GroupSpec::quaternion(8));
  EXPECT_EQ(build_group(s).order(), 32u);
}

TEST(GroupSpecParse, PermutationGenerators) {
  const GroupSpec s = parse_group_spec("P (0 1 2);(1 2 3)");
  EXPECT_EQ(s.family, Family::perm_generated);
  EXPECT_EQ(build_group(s).order(), 12u);
}

TEST(GroupSpecParse, RoundTrip) {
  for (const char* text : {"Z 12", "Z 4 x Z 2", "D 10", "Q 12", "M 2 4", "SD 5 2 2 2", "S 3", "A 5",
                           "P (0 1 2 3);(0 1)", "D 6 x Z 3"}) {
    const GroupSpec s = parse_group_spec(text);
    EXPECT_EQ(parse_group_spec(format_group_spec(s)), s) << text;
  }
  EXPECT_EQ(format_group_spec(parse_group_spec("  Z   4 X   Z 2 ")), "Z 4 x Z 2");
}

TEST(GroupSpecParse, Errors) {
  for (const char* text : {"", "Z", "Z x", "Z 4 x", "W 3", "Z 3.5", "Z 3 4", "P (0 1", "SD 7 3 1", "Z 4 xx Z 2"}) {
    try {
      parse_group_spec(text);
      ADD_FAILURE() << "accepted '" << text << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::parse_error) << text;
    }
  }
}

TEST(GroupSpecBuild, ParameterConstraints) {
  try {
    build_group(parse_group_spec("D 5"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_parameter);
  }
  EXPECT_THROW(build_group(parse_group_spec("Q 6")), Error);
  EXPECT_THROW(build_group(parse_group_spec("Z -3")), Error);
  EXPECT_THROW(build_group(parse_group_spec("M 4 3")), Error);
  EXPECT_THROW(build_group(parse_group_spec("SD 7 2 1 2")), Error);
}
