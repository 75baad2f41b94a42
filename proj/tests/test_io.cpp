#include <gtest/gtest.h>

#include <sstream>

#include "dp1/cliques.hpp"
#include "dp1/io.hpp"

using namespace dp1;

namespace {

std::string db_text(const std::vector<Clique>& ks, const Clique& required) {
  std::ostringstream out;
  CliqueDbHeader h;
  h.required = required;
  h.generator = "test";
  write_clique_db(out, h, ks);
  return out.str();
}

std::size_t error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    read_clique_db(in);
  } catch (const FormatError& e) {
    return e.line;
  }
  return 0;
}

}  // namespace

TEST(Io, CliqueLineRoundTrip) {
  const auto k = pinned_type8();
  const auto line = clique_line(k);
  EXPECT_EQ(parse_clique_line(line), k);
  EXPECT_NE(line.find("1 1 1 0 0 0 0 0 0"), std::string::npos);  // l12
  EXPECT_THROW(parse_clique_line("1 1 1 0 0 0 0 0 0;;"), std::invalid_argument);
  EXPECT_THROW(parse_clique_line("2 1 1 0 0 0 0 0 0"), std::invalid_argument);
}

TEST(Io, DatabaseRoundTrip) {
  const auto& g = WeightedGraph::instance();
  const auto fl = four_lines();
  const auto ks = enumerate_cliques(g, weight_set({1, 2}), 10, fl);
  ASSERT_FALSE(ks.empty());
  std::istringstream in(db_text(ks, fl));
  const auto db = read_clique_db(in);
  EXPECT_EQ(db.header.size, 10);
  EXPECT_EQ(db.header.weights, weight_set({1, 2}));
  EXPECT_EQ(db.header.required, fl);
  EXPECT_EQ(db.header.generator, "test");
  EXPECT_EQ(db.cliques, ks);
}

TEST(Io, DatabaseErrorsCarryLineNumbers) {
  const auto& g = WeightedGraph::instance();
  const auto fl = four_lines();
  auto ks = enumerate_cliques(g, weight_set({1, 2}), 10, fl);
  ks.resize(3);
  const std::string good = db_text(ks, fl);
  EXPECT_EQ(error_line(good), 0u);

  // Truncated final line: a partial class.
  const std::string truncated = good.substr(0, good.size() - 9);
  EXPECT_EQ(error_line(truncated), 7u);

  // Lines out of order.
  std::string swapped = db_text({ks[1], ks[0], ks[2]}, fl);
  EXPECT_EQ(error_line(swapped), 6u);

  // Missing header.
  EXPECT_EQ(error_line(good.substr(good.find('\n') + 1)), 4u);

  // Wrong size declared.
  std::string sized = good;
  sized.replace(sized.find("size=10"), 7, "size=9");
  EXPECT_EQ(error_line(sized), 5u);

  // Not a clique for weights {1}.
  std::string w1 = good;
  w1.replace(w1.find("weights=1,2"), 11, "weights=1");
  EXPECT_EQ(error_line(w1), 5u);

  EXPECT_EQ(error_line("# weights=1,2\n# size=10\n# required=\n# generator=x\n\n"), 5u);
  EXPECT_EQ(error_line("# bogus\n"), 1u);
}

TEST(Io, ClassList) {
  std::istringstream in("# representative\n1 1 1 0 0 0 0 0 0\n1 0 0 1 1 0 0 0 0 ; 0 0 0 0 0 0 0 0 -1\n");
  const auto v = read_class_list(in);
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[0], line(1, 2));
  EXPECT_EQ(v[2], blowup(8));
  std::istringstream bad("1 1 1 0 0 0 0 0 0\n\n1 1 1 1 0 0 0 0 0\n");
  try {
    read_class_list(bad);
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_EQ(e.line, 3u);
  }
}

TEST(Io, Config) {
  std::istringstream in("setup=A\nfield=Q\nparams=3/5 -1 5/4 -1 1/2 -2/4\n");
  const auto c = read_config(in);
  EXPECT_EQ(c.setup, 'A');
  EXPECT_EQ(c.p, 0u);
  EXPECT_EQ(c.params[5], mpq_class(-1, 2));
  std::istringstream again(to_text(c));
  EXPECT_EQ(read_config(again).params, c.params);
  const auto cfg = instantiate(RationalField{}, c);
  EXPECT_EQ(cfg.points[1][2], mpq_class(3, 5));

  std::istringstream f19("# example\nsetup=A\nfield=19\nparams=2 4 16 7 18 16\n");
  const auto c19 = read_config(f19);
  EXPECT_EQ(c19.p, 19u);
  const PrimeField field(19);
  EXPECT_EQ(instantiate(field, c19).points[6][0].v, 7u);

  for (const char* bad : {"setup=C\nfield=Q\nparams=1 2 3 4 5 6\n", "setup=A\nfield=21\nparams=1 2 3 4 5 6\n",
                          "setup=A\nfield=Q\nparams=1 2 3\n", "setup=A\nfield=7\nparams=1 2 3 4 5 9\n",
                          "setup=A\nfield=Q\nparams=1/0 2 3 4 5 6\n", "setup=A\nparams=1 2 3 4 5 6\n"}) {
    std::istringstream s(bad);
    EXPECT_THROW(read_config(s), FormatError) << bad;
  }
}
