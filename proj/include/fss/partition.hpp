#pragma once

#include <string>
#include <vector>

namespace fss {

// Young diagram given by weakly decreasing positive row lengths.
// Empty vector = empty diagram.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> rows);

  // Parses "4 3 1"; empty or whitespace-only text gives the empty diagram.
  static Partition parse(const std::string& text);

  int size() const { return size_; }
  int rows() const { return static_cast<int>(rows_.size()); }

  // 1-based row length, 0 past the last row.
  int row(int i) const;
  // 1-based column length (conjugate row), 0 past the last column.
  int col(int j) const;

  Partition conjugate() const;
  bool contains(const Partition& mu) const;

  const std::vector<int>& row_lengths() const { return rows_; }
  std::string to_text() const;

  bool operator==(const Partition& o) const { return rows_ == o.rows_; }
  bool operator!=(const Partition& o) const { return rows_ != o.rows_; }
  // Canonical order: size ascending, then lexicographically descending rows.
  bool operator<(const Partition& o) const;

 private:
  std::vector<int> rows_;
  int size_ = 0;
};

// Hook length of box (i,j), 1-based. Throws std::domain_error off-diagram.
int hook_length(const Partition& lam, int i, int j);

// The content-like quantity d(i,j):
//   i <= j:  lam_i + lam_j - i - j          (row lengths, 0-padded)
//   i >  j: -lam'_i - lam'_j + i + j - 2    (column lengths, 0-padded)
// Throws std::domain_error off-diagram.
int brauer_content(const Partition& lam, int i, int j);

std::vector<Partition> add_box(const Partition& lam);
std::vector<Partition> remove_box(const Partition& lam);

// Littlewood-Richardson coefficient c^lam_{mu,beta} by exhaustive
// enumeration of LR skew tableaux of shape lam/mu with content beta.
long lr_coefficient(const Partition& lam, const Partition& mu,
                    const Partition& beta);

// All partitions of n with bounded width / row count, canonical order.
std::vector<Partition> partitions_of(int n, int max_width = 1 << 20,
                                     int max_rows = 1 << 20);

// Partitions of n with all rows even / all columns even.
std::vector<Partition> even_row_partitions(int n);
std::vector<Partition> even_col_partitions(int n);

}  // namespace fss
