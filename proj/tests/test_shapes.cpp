#include <doctest.h>

#include <algorithm>
#include <set>

#include "nvs/hp.hpp"
#include "nvs/matrix.hpp"
#include "nvs/partition.hpp"
#include "nvs/ssyt.hpp"

using namespace nvs;

namespace {

// transpose oracle: flip the cell set and read off row lengths
Partition conjugate_brute(const Partition& p) {
  std::vector<int> cols;
  for (int i = 1; i <= p.length(); ++i)
    for (int j = 1; j <= p.part(i); ++j) {
      if (j > static_cast<int>(cols.size())) cols.resize(j, 0);
      cols[j - 1] += 1;
    }
  return Partition(std::move(cols));
}

std::vector<Partition> partitions_of_weight_at_most(int w) {
  std::vector<Partition> out;
  for (const Partition& p : partitions_in_box(w, w))
    if (p.weight() <= w) out.push_back(p);
  return out;
}

// brute force: all |cells|-tuples with entries in [M], filtered
std::uint64_t ssyt_count_brute(const SkewShape& shape, int M) {
  auto cells = shape.cells();
  std::uint64_t count = 0;
  std::vector<int> vals(cells.size(), 1);
  auto valid = [&]() {
    for (std::size_t a = 0; a < cells.size(); ++a)
      for (std::size_t b = 0; b < cells.size(); ++b) {
        if (cells[b].row == cells[a].row && cells[b].col == cells[a].col + 1 &&
            vals[b] < vals[a])
          return false;
        if (cells[b].col == cells[a].col && cells[b].row == cells[a].row + 1 &&
            vals[b] <= vals[a])
          return false;
      }
    return true;
  };
  if (cells.empty()) return 1;
  while (true) {
    if (valid()) ++count;
    std::size_t k = cells.size();
    while (k-- > 0) {
      if (vals[k] < M) {
        ++vals[k];
        for (std::size_t j = k + 1; j < cells.size(); ++j) vals[j] = 1;
        break;
      }
      if (k == 0) return count;
    }
  }
}

}  // namespace

TEST_CASE("conjugate on worked shapes") {
  CHECK(Partition({3, 2, 2, 1}).conjugate() == Partition({4, 3, 1}));
  CHECK(Partition().conjugate() == Partition());
  CHECK(Partition({5, 5, 5, 3}).conjugate() == Partition({4, 4, 4, 3, 3}));
}

TEST_CASE("conjugate is a weight-preserving involution up to weight 12") {
  for (const Partition& p : partitions_of_weight_at_most(12)) {
    Partition c = p.conjugate();
    CHECK(c.conjugate() == p);
    CHECK(c.weight() == p.weight());
    CHECK(c == conjugate_brute(p));
  }
}

TEST_CASE("frobenius coordinates") {
  FrobeniusCoords f = frobenius(Partition({5, 5, 5, 3}));
  CHECK(f.alpha == std::vector<int>({4, 3, 2}));
  CHECK(f.beta == std::vector<int>({3, 2, 1}));
  FrobeniusCoords g = frobenius(Partition({3, 2}));
  CHECK(g.alpha == std::vector<int>({2, 0}));
  CHECK(g.beta == std::vector<int>({1, 0}));
  CHECK(frobenius(Partition()).hooks() == 0);
}

TEST_CASE("frobenius round trip in the 6x6 box") {
  for (const Partition& p : partitions_in_box(6, 6)) {
    CHECK(from_frobenius(frobenius(p)) == p);
  }
  CHECK_THROWS(from_frobenius({{2, 2}, {1, 0}}));  // not strictly decreasing
}

TEST_CASE("maya diagrams") {
  MayaDiagram m = maya(Partition({2, 1}), 2, 4);
  CHECK(m.indices == std::vector<int>({2, 4}));
  CHECK(maya(Partition(), 3, 5).indices == std::vector<int>({1, 2, 3}));
  MayaDiagram mu = maya(Partition({1}), 2, 4);
  CHECK(mu.indices == std::vector<int>({1, 3}));
  // complement matches {r + a - mu'_a}
  Partition muc = Partition({1}).conjugate();
  std::vector<int> expect;
  for (int a = 1; a <= 2; ++a) expect.push_back(2 + a - muc.part(a));
  CHECK(maya_complement(mu) == expect);
  CHECK_THROWS(maya(Partition({4}), 2, 5));  // does not fit (3^2)
  for (const Partition& p : partitions_in_box(3, 3)) {
    MayaDiagram d = maya(p, 4, 8);
    CHECK(std::is_sorted(d.indices.begin(), d.indices.end()));
    CHECK(partition_from_maya(d) == p);
  }
}

TEST_CASE("corners") {
  // row 3 has two cells, so its corner sits at (3,2); this also matches the
  // (r_i, m_i) corner decomposition that drives the border operators
  auto cs = corners(SkewShape::parse("5,4,2"));
  CHECK(cs == std::vector<Cell>({{1, 5}, {2, 4}, {3, 2}}));
  CHECK(corners(SkewShape(rectangle(3, 4))) == std::vector<Cell>({{3, 4}}));
  CHECK(corners(SkewShape::parse("2,2,1/1")) ==
        std::vector<Cell>({{2, 2}, {3, 1}}));
}

TEST_CASE("borders follow the strip traversal") {
  auto ob = outside_border(Partition({5, 4, 2}));
  CHECK(ob == std::vector<Cell>({{1, 6},
                                 {2, 6},
                                 {2, 5},
                                 {3, 5},
                                 {3, 4},
                                 {3, 3},
                                 {4, 3},
                                 {4, 2},
                                 {4, 1}}));
  auto ib = inside_border(Partition({5, 4, 2}));
  CHECK(ib == std::vector<Cell>(
                  {{1, 5}, {1, 4}, {2, 4}, {2, 3}, {2, 2}, {3, 2}, {3, 1}}));
  CHECK(outside_border(Partition({1})) ==
        std::vector<Cell>({{1, 2}, {2, 2}, {2, 1}}));
  CHECK(inside_border(Partition({1})) == std::vector<Cell>({{1, 1}}));
  CHECK(inside_border(Partition({2, 2})) ==
        std::vector<Cell>({{1, 2}, {2, 2}, {2, 1}}));
  CHECK_THROWS(outside_border(Partition()));
}

TEST_CASE("add and remove operators reproduce the worked composites") {
  Partition la({5, 4, 2});
  CHECK(add_rem(la, BorderOp::Add, {1, 2}, {3, 2}) == Partition({5, 5, 5, 5}));
  CHECK(add_rem(la, BorderOp::Remove, {1, 2}, {3, 2}) == Partition({1, 1}));
  // single corner on a rectangle: full row below / rightmost row removed
  CHECK(add_rem(rectangle(2, 3), BorderOp::Add, {1}, {1}) == rectangle(3, 3));
  CHECK(add_rem(rectangle(2, 3), BorderOp::Remove, {1}, {1}) == rectangle(1, 3));
  CHECK_THROWS(add_rem(la, BorderOp::Add, {2, 1}, {3, 2}));  // ps not increasing
}

TEST_CASE("add grows and remove shrinks over the 5x5 box") {
  for (const Partition& la : partitions_in_box(5, 5)) {
    if (la.empty()) continue;
    int n = corner_decomposition(la).n();
    for (int p = 1; p <= n; ++p)
      for (int q = p; q <= n; ++q) {
        Partition grown = add_rem(la, BorderOp::Add, {p}, {q});
        Partition cut = add_rem(la, BorderOp::Remove, {p}, {q});
        CHECK(grown.weight() > la.weight());
        CHECK(grown.contains(la));
        CHECK(cut.weight() < la.weight());
        CHECK(la.contains(cut));
      }
  }
}

TEST_CASE("row shifts") {
  CHECK(shift_rows(Partition({3, 2, 2, 1}), 1, 2) == Partition({4, 3, 2, 1}));
  CHECK(shift_rows(Partition({3, 2, 2, 1}), -1, 3) == Partition({2, 1, 1, 1}));
  CHECK(shift_rows(Partition({3, 2}), 0, 2) == Partition({3, 2}));
  CHECK_THROWS(shift_rows(Partition({2, 2}), -1, 1));  // breaks monotonicity
  CHECK_THROWS(shift_rows(Partition({1, 1}), -1, 2));  // rows too short
}

TEST_CASE("rectangle notations") {
  CHECK(rectangle(3, 2) == Partition({2, 2, 2}));
  CHECK(rectangle_lk(3, 2, 2, 1) == Partition({3, 3, 2, 1}));
  CHECK(rectangle_lk(3, 2, 0, 0) == rectangle(3, 2));
  CHECK(rectangle_lk(2, 3, 2, 0) == Partition({4, 4}));
  CHECK_THROWS(rectangle_lk(2, 3, 3, 0));
  CHECK_THROWS(rectangle_lk(2, 3, 0, 4));
}

TEST_CASE("ssyt enumeration matches brute force") {
  CHECK(ssyt_count(SkewShape::parse("2"), 2) == 3);
  CHECK(ssyt_count(SkewShape::parse("1,1"), 1) == 0);
  CHECK(ssyt_count(SkewShape::parse("2,1"), 3) == 8);
  for (const std::string& text : {"2,1", "3,1", "2,2/1", "3,2,1/1"})
    for (int M = 0; M <= 3; ++M) {
      SkewShape shape = SkewShape::parse(text);
      CHECK(ssyt_count(shape, M) == ssyt_count_brute(shape, M));
    }
  // streams are single-consumer cursors: two siblings are independent
  SsytStream s1(SkewShape::parse("2,1"), 3), s2(SkewShape::parse("2,1"), 3);
  (void)s1.next();
  auto a = s1.next(), b = s2.next();
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(a->entries != b->entries);
}

TEST_CASE("ssyt count equals the binomial determinant") {
  // principal specialization: |SSYT_M(lambda)| = det C(M + la_i - i + j - 1,
  // la_i - i + j)
  for (const Partition& la : partitions_in_box(4, 4)) {
    if (la.empty()) continue;
    for (int M = 1; M <= 4; ++M) {
      int n = la.length();
      Matrix<Rational> m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          m(i - 1, j - 1) =
              binomial_rat(M + la.part(i) - i + j - 1, la.part(i) - i + j);
      Rational expect = det_bareiss(m);
      CHECK(Rational(static_cast<long>(ssyt_count(SkewShape(la), M))) == expect);
    }
  }
}

TEST_CASE("corner decomposition reconstructs its partition") {
  for (const Partition& la : partitions_in_box(5, 5)) {
    CornerDecomposition d = corner_decomposition(la);
    CHECK(d.n() == static_cast<int>(corners(SkewShape(la)).size()));
    std::vector<int> parts;
    int prev_rows = 0;
    for (int i = 0; i < d.n(); ++i) {
      for (int k = prev_rows; k < d.row_indices[static_cast<std::size_t>(i)]; ++k)
        parts.push_back(d.col_lengths[static_cast<std::size_t>(i)]);
      prev_rows = d.row_indices[static_cast<std::size_t>(i)];
    }
    CHECK(Partition(std::move(parts)) == la);
  }
}

TEST_CASE("content diagrams carry the superscript offset") {
  std::string d = content_diagram(SkewShape::parse("3,3,2,1/1,1"), 1);
  // first row: inner dot then contents 2, 3 shifted by m = 1
  CHECK(d.find(".   2   3") != std::string::npos);
  CHECK(d.find("-2") != std::string::npos);  // cell (4,1): 1 + 1 - 4
}

TEST_CASE("parsing and printing") {
  CHECK(Partition::parse("5,4,2").str() == "5,4,2");
  CHECK(Partition::parse("0").empty());
  CHECK(SkewShape::parse("5,4,2/3,1").inner() == Partition({3, 1}));
  CHECK(SkewShape::parse("2/0").outer() == Partition({2}));
  CHECK_THROWS(Partition::parse("1,3"));
  CHECK_THROWS(SkewShape(Partition({1}), Partition({2})));
}
