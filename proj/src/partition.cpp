#include "fss/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fss {

Partition::Partition(std::vector<int> rows) : rows_(std::move(rows)) {
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] <= 0) throw std::domain_error("partition rows must be positive");
    if (i > 0 && rows_[i] > rows_[i - 1])
      throw std::domain_error("partition rows must be weakly decreasing");
  }
  size_ = std::accumulate(rows_.begin(), rows_.end(), 0);
}

Partition Partition::parse(const std::string& text) {
  std::istringstream in(text);
  std::vector<int> rows;
  int v;
  while (in >> v) rows.push_back(v);
  return Partition(std::move(rows));
}

int Partition::row(int i) const {
  if (i < 1) throw std::domain_error("row index must be >= 1");
  return i <= rows() ? rows_[i - 1] : 0;
}

int Partition::col(int j) const {
  if (j < 1) throw std::domain_error("column index must be >= 1");
  int c = 0;
  for (int r : rows_)
    if (r >= j) ++c;
  return c;
}

Partition Partition::conjugate() const {
  std::vector<int> cols;
  if (!rows_.empty()) {
    cols.resize(rows_[0]);
    for (int j = 1; j <= rows_[0]; ++j) cols[j - 1] = col(j);
  }
  return Partition(std::move(cols));
}

bool Partition::contains(const Partition& mu) const {
  if (mu.rows() > rows()) return false;
  for (int i = 1; i <= mu.rows(); ++i)
    if (mu.row(i) > row(i)) return false;
  return true;
}

std::string Partition::to_text() const {
  std::string out;
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(rows_[i]);
  }
  return out;
}

bool Partition::operator<(const Partition& o) const {
  if (size_ != o.size_) return size_ < o.size_;
  return rows_ > o.rows_;  // lexicographically descending within a size class
}

static void check_box(const Partition& lam, int i, int j) {
  if (i < 1 || j < 1 || lam.row(i) < j)
    throw std::domain_error("box (" + std::to_string(i) + "," +
                            std::to_string(j) + ") is not in the diagram");
}

int hook_length(const Partition& lam, int i, int j) {
  check_box(lam, i, j);
  return lam.row(i) - j + lam.col(j) - i + 1;
}

int brauer_content(const Partition& lam, int i, int j) {
  check_box(lam, i, j);
  if (i <= j) return lam.row(i) + lam.row(j) - i - j;
  return -lam.col(i) - lam.col(j) + i + j - 2;
}

std::vector<Partition> add_box(const Partition& lam) {
  std::vector<Partition> out;
  for (int i = 1; i <= lam.rows() + 1; ++i) {
    if (i == 1 || lam.row(i) < lam.row(i - 1)) {
      std::vector<int> rows = lam.row_lengths();
      if (i <= lam.rows())
        rows[i - 1] += 1;
      else
        rows.push_back(1);
      out.emplace_back(std::move(rows));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> remove_box(const Partition& lam) {
  std::vector<Partition> out;
  for (int i = 1; i <= lam.rows(); ++i) {
    if (i == lam.rows() || lam.row(i) > lam.row(i + 1)) {
      std::vector<int> rows = lam.row_lengths();
      rows[i - 1] -= 1;
      if (rows[i - 1] == 0) rows.pop_back();
      out.emplace_back(std::move(rows));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Backtracking LR filling. Cells of lam/mu are visited row by row, right to
// left within a row, so the running word is the reverse reading word; the
// lattice condition can then be checked incrementally.
struct LrState {
  const Partition& lam;
  const Partition& mu;
  const Partition& beta;
  std::vector<std::vector<int>> fill;  // 0 = empty
  std::vector<int> used;               // count of each entry so far
  long count = 0;

  LrState(const Partition& l, const Partition& m, const Partition& b)
      : lam(l), mu(m), beta(b) {
    fill.resize(lam.rows());
    for (int i = 0; i < lam.rows(); ++i) fill[i].assign(lam.row(i + 1), 0);
    used.assign(beta.rows() + 1, 0);
  }

  void run(int i, int j) {
    // advance to next skew cell; order: rows top to bottom, right to left
    while (i <= lam.rows() && (j < 1 || j <= mu.row(i))) {
      ++i;
      j = (i <= lam.rows()) ? lam.row(i) : 0;
    }
    if (i > lam.rows()) {
      ++count;
      return;
    }
    for (int v = 1; v <= beta.rows(); ++v) {
      if (used[v] >= beta.row(v)) continue;
      // lattice word: after placing v, #v <= #(v-1)
      if (v > 1 && used[v] + 1 > used[v - 1]) continue;
      // weakly increasing along the row (cell to the right already filled)
      if (j < lam.row(i) && fill[i - 1][j] < v) continue;
      // strictly increasing down the column; the cell above, if a skew cell,
      // was filled while processing the previous row
      if (i > 1 && j > mu.row(i - 1) && fill[i - 2][j - 1] >= v) continue;
      fill[i - 1][j - 1] = v;
      ++used[v];
      run(i, j - 1);
      --used[v];
      fill[i - 1][j - 1] = 0;
    }
  }
};

}  // namespace

long lr_coefficient(const Partition& lam, const Partition& mu,
                    const Partition& beta) {
  if (mu.size() + beta.size() != lam.size()) return 0;
  if (!lam.contains(mu)) return 0;
  if (beta.size() == 0) return 1;
  LrState st(lam, mu, beta);
  st.run(1, lam.row(1));
  return st.count;
}

namespace {
void enum_rec(int remaining, int max_part, int rows_left,
              std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (rows_left == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    enum_rec(remaining - p, p, rows_left - 1, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int n, int max_width, int max_rows) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  enum_rec(n, std::min(n, max_width), max_rows, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> even_row_partitions(int n) {
  std::vector<Partition> out;
  for (const Partition& p : partitions_of(n)) {
    bool ok = true;
    for (int r : p.row_lengths())
      if (r % 2) ok = false;
    if (ok) out.push_back(p);
  }
  return out;
}

std::vector<Partition> even_col_partitions(int n) {
  std::vector<Partition> out;
  for (const Partition& p : partitions_of(n)) {
    bool ok = true;
    for (int j = 1; j <= p.row(1); ++j)
      if (p.col(j) % 2) ok = false;
    if (ok) out.push_back(p);
  }
  return out;
}

}  // namespace fss
