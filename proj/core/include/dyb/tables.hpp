#ifndef DYB_TABLES_HPP
#define DYB_TABLES_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace dyb {

/// Malformed table dimensions or out-of-range entries.
class ShapeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A required precondition (usually "input verifies") does not hold.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction produced an output that fails its own verifier.
/// Signals a bug or an unverified input, never a bad user table.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Evaluation of a partial map off its domain, or a non-permutation row
/// where a permutation is required.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense d0 x d1 table of small non-negative integers.
class Table2 {
 public:
  Table2() = default;
  Table2(int d0, int d1, int fill = 0)
      : d0_(d0), d1_(d1), v_(static_cast<size_t>(d0) * d1, fill) {
    if (d0 < 0 || d1 < 0) throw ShapeError("Table2: negative dimension");
  }

  static Table2 from_rows(const std::vector<std::vector<int>>& rows) {
    Table2 t(static_cast<int>(rows.size()),
             rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(rows[i].size()) != t.d1_)
        throw ShapeError("Table2: ragged rows");
      for (size_t j = 0; j < rows[i].size(); ++j)
        t.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    }
    return t;
  }

  int at(int i, int j) const { return v_[static_cast<size_t>(i) * d1_ + j]; }
  int& at(int i, int j) { return v_[static_cast<size_t>(i) * d1_ + j]; }
  int dim0() const { return d0_; }
  int dim1() const { return d1_; }
  bool empty() const { return v_.empty(); }
  const std::vector<int>& flat() const { return v_; }
  std::vector<int>& mutable_flat() { return v_; }

  /// Every entry in [0, bound)?
  bool entries_in_range(int bound) const {
    for (int x : v_)
      if (x < 0 || x >= bound) return false;
    return true;
  }

  friend bool operator==(const Table2&, const Table2&) = default;

 private:
  int d0_ = 0, d1_ = 0;
  std::vector<int> v_;
};

/// Dense d0 x d1 x d2 table of small non-negative integers.
class Table3 {
 public:
  Table3() = default;
  Table3(int d0, int d1, int d2, int fill = 0)
      : d0_(d0), d1_(d1), d2_(d2),
        v_(static_cast<size_t>(d0) * d1 * d2, fill) {
    if (d0 < 0 || d1 < 0 || d2 < 0) throw ShapeError("Table3: negative dimension");
  }

  static Table3 from_slices(const std::vector<std::vector<std::vector<int>>>& s) {
    int d0 = static_cast<int>(s.size());
    int d1 = d0 ? static_cast<int>(s[0].size()) : 0;
    int d2 = (d1 && d0) ? static_cast<int>(s[0][0].size()) : 0;
    Table3 t(d0, d1, d2);
    for (int i = 0; i < d0; ++i) {
      if (static_cast<int>(s[i].size()) != d1) throw ShapeError("Table3: ragged slices");
      for (int j = 0; j < d1; ++j) {
        if (static_cast<int>(s[i][j].size()) != d2) throw ShapeError("Table3: ragged rows");
        for (int k = 0; k < d2; ++k) t.at(i, j, k) = s[i][j][k];
      }
    }
    return t;
  }

  int at(int i, int j, int k) const {
    return v_[(static_cast<size_t>(i) * d1_ + j) * d2_ + k];
  }
  int& at(int i, int j, int k) {
    return v_[(static_cast<size_t>(i) * d1_ + j) * d2_ + k];
  }
  int dim0() const { return d0_; }
  int dim1() const { return d1_; }
  int dim2() const { return d2_; }
  bool empty() const { return v_.empty(); }
  const std::vector<int>& flat() const { return v_; }
  std::vector<int>& mutable_flat() { return v_; }

  bool entries_in_range(int bound) const {
    for (int x : v_)
      if (x < 0 || x >= bound) return false;
    return true;
  }

  friend bool operator==(const Table3&, const Table3&) = default;

 private:
  int d0_ = 0, d1_ = 0, d2_ = 0;
  std::vector<int> v_;
};

/// True iff row (as function i -> row[i]) is a permutation of 0..n-1.
bool is_permutation_row(const std::vector<int>& row, int n);

}  // namespace dyb

#endif
