#include <gtest/gtest.h>

#include "partopt/instance_io.hpp"
#include "support/reference.hpp"

using namespace partopt;
using partopt::testing::random_instance;
using partopt::testing::two_node_instance;

namespace {

constexpr const char* kTwoNode =
    "partopt 1\n"
    "nodes 2\n"
    "edges 1\n"
    "s0 5\n"
    "node 0 3 5\n"
    "node 1 4 2\n"
    "edge 0 1 6\n";

std::size_t error_line(const std::string& doc) {
  try {
    parse_instance(doc);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "document parsed without error";
  return 0;
}

std::string error_text(const std::string& doc) {
  try {
    parse_instance(doc);
  } catch (const ParseError& e) {
    return e.what();
  }
  ADD_FAILURE() << "document parsed without error";
  return {};
}

}  // namespace

TEST(WriteInstance, CanonicalForm) { EXPECT_EQ(write_instance(two_node_instance()), kTwoNode); }

TEST(ParseInstance, TwoNodeRoundTrip) {
  EXPECT_EQ(parse_instance(kTwoNode), two_node_instance());
  EXPECT_EQ(parse_instance(write_instance(two_node_instance())), two_node_instance());
}

TEST(ParseInstance, CommentsAndBlankLines) {
  const std::string doc =
      "# CRC-style fragment\n"
      "partopt 1   # magic\n"
      "\n"
      "nodes 2\nedges 1\ns0 5\n"
      "  node 0 3 5\n"
      "node\t1 4 2\r\n"
      "# edge list\n"
      "edge 0 1 6\n\n";
  EXPECT_EQ(parse_instance(doc), two_node_instance());
}

TEST(ParseInstance, SelfLoopReportsItsLine) {
  const std::string doc = "partopt 1\nnodes 2\nedges 1\ns0 5\nnode 0 3 5\nnode 1 4 2\nedge 0 0 5\n";
  EXPECT_EQ(error_line(doc), 7U);
  EXPECT_NE(error_text(doc).find("self-loop"), std::string::npos);
}

TEST(ParseInstance, MissingS0) {
  const std::string doc = "partopt 1\nnodes 1\nedges 0\nnode 0 1 1\n";
  EXPECT_NE(error_text(doc).find("missing field 's0'"), std::string::npos);
  EXPECT_EQ(error_line(doc), 4U);
}

TEST(ParseInstance, Errors) {
  const std::string head = "partopt 1\nnodes 2\nedges 1\ns0 5\n";
  EXPECT_NE(error_text(head + "node 0 3 5\nnode 1 4 2\nedje 0 1 6\n").find("unknown keyword"),
            std::string::npos);
  EXPECT_NE(error_text(head + "node 0 3 5\nnode 0 4 2\nedge 0 1 6\n").find("duplicate node id"),
            std::string::npos);
  EXPECT_NE(error_text(head + "node 1 3 5\nnode 0 4 2\nedge 0 1 6\n").find("missing node id 0"),
            std::string::npos);
  EXPECT_NE(error_text(head + "node 0 3 5\nnode 1 4 2\nedge 1 0 6\nedge 0 1 1\n")
                .find("unexpected record"),
            std::string::npos);
  EXPECT_NE(error_text(head + "node 0 3 5\nnode 1 4 2\n").find("missing field 'edge 0'"),
            std::string::npos);
  EXPECT_NE(error_text(head + "node 0 3 5\nnode 1 4 2\nedge 0 7 6\n").find("out of range"),
            std::string::npos);
  EXPECT_NE(error_text(head + "node 0 3 5\nnode 1 x 2\nedge 0 1 6\n").find("expected an integer"),
            std::string::npos);
  EXPECT_NE(error_text(head + "node 0 3 5\nnode 1 4 2\nedge 0 1\n").find("expects 3"),
            std::string::npos);
  EXPECT_NE(error_text(head + "node 0 -3 5\nnode 1 4 2\nedge 0 1 6\n").find("negative"),
            std::string::npos);
  EXPECT_NE(error_text("partopt 2\nnodes 1\nedges 0\ns0 0\nnode 0 1 1\n").find("version"),
            std::string::npos);
  EXPECT_NE(error_text("partopt 1\nnodes 0\nedges 0\ns0 0\n").find("at least one node"),
            std::string::npos);
  EXPECT_NE(error_text("").find("missing field 'partopt'"), std::string::npos);
}

TEST(ParseInstance, DuplicateEdgeInReverseOrientation) {
  const std::string doc =
      "partopt 1\nnodes 2\nedges 2\ns0 5\nnode 0 3 5\nnode 1 4 2\nedge 0 1 6\nedge 1 0 2\n";
  EXPECT_EQ(error_line(doc), 8U);
  EXPECT_NE(error_text(doc).find("duplicate edge"), std::string::npos);
}

TEST(ParseInstance, IntegerOverflow) {
  const std::string too_big =
      "partopt 1\nnodes 1\nedges 0\ns0 99999999999999999999\nnode 0 1 1\n";
  EXPECT_EQ(error_line(too_big), 4U);
  EXPECT_NE(error_text(too_big).find("overflow"), std::string::npos);

  const std::string sum =
      "partopt 1\nnodes 2\nedges 0\ns0 0\nnode 0 9223372036854775807 0\nnode 1 1 0\n";
  EXPECT_EQ(error_line(sum), 6U);
  EXPECT_NE(error_text(sum).find("overflow"), std::string::npos);
}

TEST(ParseInstance, RoundTripProperty) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto inst = random_instance(seed, 1, 30, 80, 1000);
    const std::string text = write_instance(inst);
    const ProblemInstance back = parse_instance(text);
    ASSERT_EQ(back, inst);
    ASSERT_EQ(write_instance(back), text);
  }
}
