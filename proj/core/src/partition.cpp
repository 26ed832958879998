#include "nvs/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace nvs {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("parts must be positive");
    if (i > 0 && parts_[i - 1] < parts_[i])
      throw std::invalid_argument("parts must be weakly decreasing");
  }
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::string t = text;
  if (t.empty() || t == "0") return Partition();
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    parts.push_back(std::stoi(item));
  }
  return Partition(std::move(parts));
}

std::optional<Partition> Partition::from_sequence(const std::vector<int>& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] < 0) return std::nullopt;
    if (i > 0 && seq[i - 1] < seq[i]) return std::nullopt;
  }
  std::vector<int> parts = seq;
  return Partition(std::move(parts));
}

int Partition::weight() const {
  int w = 0;
  for (int p : parts_) w += p;
  return w;
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  if (parts_.empty()) return Partition();
  out.resize(parts_[0]);
  for (int i = 0; i < static_cast<int>(out.size()); ++i) {
    int cnt = 0;
    for (int p : parts_)
      if (p >= i + 1) ++cnt;
    out[i] = cnt;
  }
  return Partition(std::move(out));
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 1; i <= mu.length(); ++i)
    if (part(i) < mu.part(i)) return false;
  return true;
}

int Partition::multiplicity(int value) const {
  int cnt = 0;
  for (int p : parts_)
    if (p == value) ++cnt;
  return cnt;
}

std::string Partition::str() const {
  if (parts_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  return os.str();
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_))
    throw std::invalid_argument("inner shape not contained in outer");
}

SkewShape SkewShape::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return SkewShape(Partition::parse(text));
  return SkewShape(Partition::parse(text.substr(0, slash)),
                   Partition::parse(text.substr(slash + 1)));
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> out;
  for (int i = 1; i <= outer_.length(); ++i)
    for (int j = inner_.part(i) + 1; j <= outer_.part(i); ++j)
      out.push_back({i, j});
  return out;
}

int SkewShape::cell_count() const {
  return outer_.weight() - inner_.weight();
}

SkewShape SkewShape::conjugate() const {
  return SkewShape(outer_.conjugate(), inner_.conjugate());
}

std::string SkewShape::str() const {
  if (inner_.empty()) return outer_.str();
  return outer_.str() + "/" + inner_.str();
}

FrobeniusCoords frobenius(const Partition& p) {
  FrobeniusCoords f;
  Partition conj = p.conjugate();
  for (int i = 1; i <= p.length(); ++i) {
    if (p.part(i) < i) break;
    f.alpha.push_back(p.part(i) - i);
    f.beta.push_back(conj.part(i) - i);
  }
  return f;
}

Partition from_frobenius(const FrobeniusCoords& f) {
  int p = f.hooks();
  if (static_cast<int>(f.beta.size()) != p)
    throw std::invalid_argument("frobenius arm/leg length mismatch");
  for (int i = 0; i + 1 < p; ++i)
    if (f.alpha[i] <= f.alpha[i + 1] || f.beta[i] <= f.beta[i + 1])
      throw std::invalid_argument("frobenius coordinates must strictly decrease");
  for (int i = 0; i < p; ++i)
    if (f.alpha[i] < 0 || f.beta[i] < 0)
      throw std::invalid_argument("frobenius coordinates must be nonnegative");
  int rows = p == 0 ? 0 : f.beta[0] + 1;
  std::vector<int> parts(rows, 0);
  for (int i = 0; i < p; ++i) parts[i] = f.alpha[i] + i + 1;
  // column lengths beta_i + i + 1 fill the rows below the diagonal
  for (int j = 0; j < p; ++j) {
    int height = f.beta[j] + j + 1;
    for (int i = p; i < height; ++i) parts[i] = std::max(parts[i], j + 1);
  }
  return Partition(std::move(parts));
}

MayaDiagram maya(const Partition& p, int r, int N) {
  if (p.length() > r || p.part(1) > N - r)
    throw std::invalid_argument("shape does not fit the (s^r) rectangle");
  MayaDiagram m;
  m.r = r;
  m.N = N;
  for (int a = 1; a <= r; ++a) m.indices.push_back(p.part(r + 1 - a) + a);
  return m;
}

Partition partition_from_maya(const MayaDiagram& m) {
  std::vector<int> parts;
  for (int a = 1; a <= m.r; ++a)
    parts.push_back(m.indices[static_cast<std::size_t>(a - 1)] - a);
  std::reverse(parts.begin(), parts.end());
  return Partition(std::move(parts));
}

std::vector<int> maya_complement(const MayaDiagram& m) {
  std::vector<int> out;
  std::size_t k = 0;
  for (int v = 1; v <= m.N; ++v) {
    if (k < m.indices.size() && m.indices[k] == v) {
      ++k;
      continue;
    }
    out.push_back(v);
  }
  return out;
}

std::vector<Cell> corners(const SkewShape& shape) {
  std::vector<Cell> out;
  for (const Cell& c : shape.cells())
    if (!shape.contains_cell(c.row + 1, c.col) &&
        !shape.contains_cell(c.row, c.col + 1))
      out.push_back(c);
  return out;
}

CornerDecomposition corner_decomposition(const Partition& p) {
  CornerDecomposition d;
  for (int i = 1; i <= p.length(); ++i) {
    if (p.part(i) > p.part(i + 1)) {  // corner row
      d.col_lengths.push_back(p.part(i));
      d.row_indices.push_back(i);
    }
  }
  return d;
}

// Row i of OB(lambda) holds columns [lambda_i + 1, lambda_{i-1} + 1]
// (lambda_0 := lambda_1), plus the final row ell+1 with [1, lambda_ell + 1].
std::vector<Cell> outside_border(const Partition& p) {
  if (p.empty()) throw std::invalid_argument("border of the empty partition");
  std::vector<Cell> out;
  int ell = p.length();
  for (int i = 1; i <= ell + 1; ++i) {
    int hi = (i == 1 ? p.part(1) : p.part(i - 1)) + 1;
    int lo = i <= ell ? p.part(i) + 1 : 1;
    for (int j = hi; j >= lo; --j) out.push_back({i, j});
  }
  return out;
}

// Row i of IB(lambda) holds columns [max(lambda_{i+1},1), lambda_i].
std::vector<Cell> inside_border(const Partition& p) {
  if (p.empty()) throw std::invalid_argument("border of the empty partition");
  std::vector<Cell> out;
  int ell = p.length();
  for (int i = 1; i <= ell; ++i) {
    int hi = p.part(i);
    int lo = std::max(p.part(i + 1), 1);
    for (int j = hi; j >= lo; --j) out.push_back({i, j});
  }
  return out;
}

namespace {

std::pair<std::size_t, std::size_t> strip_range(const std::vector<Cell>& path,
                                                Cell u, Cell v) {
  auto iu = std::find(path.begin(), path.end(), u);
  auto iv = std::find(path.begin(), path.end(), v);
  if (iu == path.end() || iv == path.end())
    throw std::invalid_argument("strip endpoint is not on the border");
  if (iv < iu) throw std::invalid_argument("strip endpoints out of order");
  return {static_cast<std::size_t>(iu - path.begin()),
          static_cast<std::size_t>(iv - path.begin())};
}

}  // namespace

namespace {

// Per-row column span of a contiguous path segment; the border path is
// monotone in the row index, so each row is visited in one run.
std::map<int, std::pair<int, int>> row_spans(const std::vector<Cell>& path,
                                             std::size_t a, std::size_t b) {
  std::map<int, std::pair<int, int>> spans;
  for (std::size_t k = a; k <= b; ++k) {
    Cell c = path[k];
    auto it = spans.find(c.row);
    if (it == spans.end()) {
      spans.emplace(c.row, std::make_pair(c.col, c.col));
    } else {
      it->second.first = std::min(it->second.first, c.col);
      it->second.second = std::max(it->second.second, c.col);
    }
  }
  return spans;
}

}  // namespace

Partition add_strip(const Partition& p, Cell u, Cell v) {
  auto path = outside_border(p);
  auto [a, b] = strip_range(path, u, v);
  std::vector<int> rows(static_cast<std::size_t>(p.length()) + 2, 0);
  for (int i = 1; i <= p.length(); ++i) rows[i] = p.part(i);
  for (const auto& [row, span] : row_spans(path, a, b)) {
    auto [lo, hi] = span;
    if (lo != rows[static_cast<std::size_t>(row)] + 1)
      throw std::invalid_argument("added strip leaves a gap");
    rows[static_cast<std::size_t>(row)] = hi;
  }
  std::vector<int> parts(rows.begin() + 1, rows.end());
  auto q = Partition::from_sequence(parts);
  if (!q) throw std::invalid_argument("added strip is not a Young diagram");
  return *q;
}

Partition remove_strip(const Partition& p, Cell u, Cell v) {
  auto path = inside_border(p);
  auto [a, b] = strip_range(path, u, v);
  std::vector<int> rows(static_cast<std::size_t>(p.length()) + 1, 0);
  for (int i = 1; i <= p.length(); ++i) rows[i] = p.part(i);
  for (const auto& [row, span] : row_spans(path, a, b)) {
    auto [lo, hi] = span;
    if (hi != rows[static_cast<std::size_t>(row)])
      throw std::invalid_argument("removed strip is not right-justified");
    rows[static_cast<std::size_t>(row)] = lo - 1;
  }
  std::vector<int> parts(rows.begin() + 1, rows.end());
  auto q = Partition::from_sequence(parts);
  if (!q) throw std::invalid_argument("removed strip breaks the diagram");
  return *q;
}

Partition add_rem(const Partition& p, BorderOp kind, const std::vector<int>& ps,
                  const std::vector<int>& qs) {
  if (ps.empty() || ps.size() != qs.size())
    throw std::invalid_argument("operator index sequences mismatch");
  std::size_t t = ps.size();
  CornerDecomposition d = corner_decomposition(p);
  int n = d.n();
  for (std::size_t i = 0; i < t; ++i) {
    if (ps[i] < 1 || qs[i] > n || ps[i] > qs[i])
      throw std::invalid_argument("operator index out of range");
    if (i + 1 < t && (ps[i] >= ps[i + 1] || qs[i] <= qs[i + 1]))
      throw std::invalid_argument("operator indices must nest");
  }
  if (ps[t - 1] > qs[t - 1])
    throw std::invalid_argument("innermost operator indices cross");
  auto m = [&](int i) {  // m_{n+1} = 0
    return i <= n ? d.col_lengths[static_cast<std::size_t>(i - 1)] : 0;
  };
  auto r = [&](int i) { return d.row_indices[static_cast<std::size_t>(i - 1)]; };
  Partition cur = p;
  for (std::size_t i = t; i-- > 0;) {
    int pp = ps[i], qq = qs[i];
    if (kind == BorderOp::Add) {
      cur = add_strip(cur, {r(pp) + 1, m(pp)}, {r(qq) + 1, m(qq + 1) + 1});
    } else {
      cur = remove_strip(cur, {r(pp), m(pp)}, {r(qq), m(qq + 1) + 1});
    }
  }
  return cur;
}

Partition shift_rows(const Partition& p, int a, int ell) {
  if (ell < 1 || ell > p.length())
    throw std::invalid_argument("row range out of bounds");
  if (a < 0) {
    for (int i = 1; i <= ell; ++i)
      if (p.part(i) <= -a)
        throw std::invalid_argument("rows too short to shift down");
    if (p.part(ell) + a < p.part(ell + 1))
      throw std::invalid_argument("shift breaks monotonicity");
  }
  std::vector<int> parts = p.parts();
  for (int i = 0; i < ell; ++i) parts[static_cast<std::size_t>(i)] += a;
  return Partition(std::move(parts));
}

Partition rectangle(int p, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("negative rectangle");
  if (p == 0 || q == 0) return Partition();
  return Partition(std::vector<int>(static_cast<std::size_t>(p), q));
}

Partition rectangle_lk(int p, int q, int l, int k) {
  if (l < 0 || l > p || k < 0 || k > q)
    throw std::invalid_argument("rectangle decoration out of range");
  std::vector<int> parts;
  for (int i = 0; i < l; ++i) parts.push_back(q + 1);
  for (int i = 0; i < p - l; ++i) parts.push_back(q);
  if (k > 0) parts.push_back(k);
  return Partition(std::move(parts));
}

std::vector<Partition> partitions_in_box(int max_rows, int max_cols) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rows_left, int bound) {
    out.push_back(Partition(std::vector<int>(cur)));
    if (rows_left == 0) return;
    for (int v = bound; v >= 1; --v) {
      cur.push_back(v);
      rec(rows_left - 1, v);
      cur.pop_back();
    }
  };
  rec(max_rows, max_cols);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string content_diagram(const SkewShape& shape, int m) {
  std::ostringstream os;
  const Partition& outer = shape.outer();
  const Partition& inner = shape.inner();
  for (int i = 1; i <= outer.length(); ++i) {
    for (int j = 1; j <= outer.part(i); ++j) {
      if (j > 1) os << " ";
      if (j <= inner.part(i))
        os << "  .";
      else {
        int v = m + j - i;
        os << (v < 0 ? "" : " ") << (v < 10 && v > -10 ? " " : "") << v;
      }
    }
    os << "\n";
  }
  return os.str();
}

std::vector<Partition> subpartitions(const Partition& p) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int row, int bound) {
    out.push_back(Partition(std::vector<int>(cur)));
    if (row > p.length()) return;
    int hi = std::min(bound, p.part(row));
    for (int v = hi; v >= 1; --v) {
      cur.push_back(v);
      rec(row + 1, v);
      cur.pop_back();
    }
  };
  rec(1, p.length() == 0 ? 0 : p.part(1));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace nvs
