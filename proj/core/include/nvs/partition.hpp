#pragma once

#include <optional>
#include <string>
#include <vector>

namespace nvs {

struct Cell {
  int row = 0, col = 0;  // 1-based
  friend bool operator==(Cell a, Cell b) {
    return a.row == b.row && a.col == b.col;
  }
  int content() const { return col - row; }
};

// Weakly decreasing positive parts; trailing zeros are stripped on
// construction and formulas indexing past the length read 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  static Partition parse(const std::string& text);  // "5,4,2"; "" or "0" empty
  static std::optional<Partition> from_sequence(const std::vector<int>& seq);

  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  bool empty() const { return parts_.empty(); }
  int part(int i) const {  // 1-based; 0 beyond the stored length
    return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
  }
  const std::vector<int>& parts() const { return parts_; }

  Partition conjugate() const;
  bool contains(const Partition& mu) const;
  int multiplicity(int value) const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.parts_ < b.parts_;
  }
  std::string str() const;

 private:
  std::vector<int> parts_;
};

class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Partition outer, Partition inner);  // requires inner within outer
  explicit SkewShape(Partition outer) : SkewShape(std::move(outer), {}) {}
  static SkewShape parse(const std::string& text);  // "5,4,2/3,1" or "5,4,2"

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  bool contains_cell(int i, int j) const {
    return j > inner_.part(i) && j <= outer_.part(i);
  }
  std::vector<Cell> cells() const;  // row-major
  int cell_count() const;
  SkewShape conjugate() const;
  std::string str() const;

 private:
  Partition outer_, inner_;
};

struct FrobeniusCoords {
  std::vector<int> alpha, beta;  // strictly decreasing, >= 0, equal length
  int hooks() const { return static_cast<int>(alpha.size()); }
};

FrobeniusCoords frobenius(const Partition& p);
Partition from_frobenius(const FrobeniusCoords& f);

struct MayaDiagram {
  std::vector<int> indices;  // strictly increasing subset of [N], size r
  int r = 0, N = 0;
};

// j_a = lambda_{r+1-a} + a; requires the shape to fit the (N-r)^r rectangle.
MayaDiagram maya(const Partition& p, int r, int N);
Partition partition_from_maya(const MayaDiagram& m);
std::vector<int> maya_complement(const MayaDiagram& m);

std::vector<Cell> corners(const SkewShape& shape);  // ordered by row

// lambda = (m_1^{r_1} m_2^{r_2-r_1} ... m_n^{r_n-r_{n-1}}),
// m_1 > ... > m_n > 0, r_1 < ... < r_n.
struct CornerDecomposition {
  std::vector<int> col_lengths;  // m_i
  std::vector<int> row_indices;  // r_i
  int n() const { return static_cast<int>(col_lengths.size()); }
};
CornerDecomposition corner_decomposition(const Partition& p);

// Border strips traversed from top-right to bottom-left.
std::vector<Cell> outside_border(const Partition& p);
std::vector<Cell> inside_border(const Partition& p);

// Cell-indexed border operators: add (remove) the substrip of the current
// outside (inside) border running from u to v inclusive.  Throws when the
// endpoints are off the border, out of order, or the result is not a
// Young diagram.
Partition add_strip(const Partition& p, Cell u, Cell v);
Partition remove_strip(const Partition& p, Cell u, Cell v);

enum class BorderOp { Add, Remove };

// Corner-indexed iterated operators; endpoint cells are taken from the
// corner data of the original partition, composed right to left.
// Requires 1 <= ps[0] < ... < ps[t-1] <= qs[t-1] < ... < qs[0] <= n.
Partition add_rem(const Partition& p, BorderOp kind, const std::vector<int>& ps,
                  const std::vector<int>& qs);

// lambda +- (a^ell); validates that the result is a partition.
Partition shift_rows(const Partition& p, int a, int ell);

// [p|q] = (q^p) and [p|q]^l_k = ((q+1)^l, q^{p-l}, k), l <= p, k <= q.
Partition rectangle(int p, int q);
Partition rectangle_lk(int p, int q, int l, int k);

std::vector<Partition> partitions_in_box(int max_rows, int max_cols);
std::vector<Partition> subpartitions(const Partition& p);

// Content diagram with superscript offset m: each cell shows m + (j - i),
// inner cells show dots.  Mirrors the graphical tableau notation used for
// shifted superscripts.
std::string content_diagram(const SkewShape& shape, int m = 0);

}  // namespace nvs
