#pragma once

#include <functional>
#include <string>
#include <vector>

#include "frobforge/mod/quotient_ring.hpp"

namespace frobforge {

/// Matrix over R of a map R^cols -> R^rows. Entries are kept in normal form
/// modulo I and stored column-major.
class ModuleMap {
 public:
  ModuleMap() = default;
  ModuleMap(RingPtr ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring_->base())) {}

  /// Row-major entries, reduced on the way in.
  static ModuleMap from_rows(RingPtr ring, const std::vector<std::vector<Polynomial>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    ModuleMap A(ring, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw StructuralError("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) A.set(i, j, rows[i][j]);
    }
    return A;
  }

  static ModuleMap identity(RingPtr ring, std::size_t n) {
    ModuleMap A(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) A.at_mut(i, i) = ring->one();
    return A;
  }

  /// Columns given as module elements with positions < rows.
  static ModuleMap from_columns(RingPtr ring, std::size_t rows, const std::vector<gb::MVec>& columns) {
    ModuleMap A(ring, rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      std::vector<std::vector<Term>> parts(rows);
      for (const auto& t : columns[c]) {
        if (t.pos >= rows) throw StructuralError("column entry outside the target rank");
        parts[t.pos].push_back({t.mon, t.coef});
      }
      for (std::size_t r = 0; r < rows; ++r) {
        A.at_mut(r, c) = ring->reduce(Polynomial::from_sorted(ring->base(), std::move(parts[r])));
      }
    }
    return A;
  }

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const Polynomial& at(std::size_t r, std::size_t c) const { return entries_[c * rows_ + r]; }
  void set(std::size_t r, std::size_t c, const Polynomial& f) { at_mut(r, c) = ring_->reduce(f); }

  gb::MVec column(std::size_t c, std::uint32_t offset = 0) const {
    gb::MVec v;
    for (std::size_t r = 0; r < rows_; ++r) {
      for (const auto& t : at(r, c).terms()) v.push_back({t.mon, static_cast<std::uint32_t>(r + offset), t.coef});
    }
    return v;
  }

  std::vector<gb::MVec> columns(std::uint32_t offset = 0) const {
    std::vector<gb::MVec> out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c, offset));
    return out;
  }

  bool is_zero() const {
    for (const auto& e : entries_) {
      if (!e.is_zero()) return false;
    }
    return true;
  }

  bool column_is_zero(std::size_t c) const {
    for (std::size_t r = 0; r < rows_; ++r) {
      if (!at(r, c).is_zero()) return false;
    }
    return true;
  }

  /// Every entry lies in m (zero constant term).
  bool entries_in_maximal_ideal() const {
    for (const auto& e : entries_) {
      if (e.constant_coeff() != 0) return false;
    }
    return true;
  }

  friend ModuleMap operator*(const ModuleMap& A, const ModuleMap& B) {
    require_same_ring(A.ring_, B.ring_);
    if (A.cols_ != B.rows_) {
      throw StructuralError("cannot compose " + std::to_string(A.rows_) + "x" + std::to_string(A.cols_) +
                            " with " + std::to_string(B.rows_) + "x" + std::to_string(B.cols_));
    }
    ModuleMap C(A.ring_, A.rows_, B.cols_);
    for (std::size_t i = 0; i < A.rows_; ++i) {
      for (std::size_t j = 0; j < B.cols_; ++j) {
        Polynomial acc(A.ring_->base());
        for (std::size_t k = 0; k < A.cols_; ++k) {
          if (A.at(i, k).is_zero() || B.at(k, j).is_zero()) continue;
          acc = acc + A.at(i, k) * B.at(k, j);
        }
        C.set(i, j, acc);
      }
    }
    return C;
  }

  ModuleMap transpose() const {
    ModuleMap T(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) T.at_mut(j, i) = at(i, j);
    }
    return T;
  }

  /// A (x) Id_s: generator (b, j) has index b*s + j.
  ModuleMap kron_identity(std::size_t s) const {
    ModuleMap K(ring_, rows_ * s, cols_ * s);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        if (at(r, c).is_zero()) continue;
        for (std::size_t j = 0; j < s; ++j) K.at_mut(r * s + j, c * s + j) = at(r, c);
      }
    }
    return K;
  }

  /// Block-diagonal sum of `copies` copies of this matrix.
  ModuleMap block_diagonal(std::size_t copies) const {
    ModuleMap D(ring_, rows_ * copies, cols_ * copies);
    for (std::size_t b = 0; b < copies; ++b) {
      for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) D.at_mut(b * rows_ + r, b * cols_ + c) = at(r, c);
      }
    }
    return D;
  }

  friend ModuleMap hconcat(const ModuleMap& A, const ModuleMap& B) {
    require_same_ring(A.ring_, B.ring_);
    if (A.rows_ != B.rows_) throw StructuralError("hconcat of matrices with different row counts");
    ModuleMap C(A.ring_, A.rows_, A.cols_ + B.cols_);
    for (std::size_t c = 0; c < A.cols_; ++c) {
      for (std::size_t r = 0; r < A.rows_; ++r) C.at_mut(r, c) = A.at(r, c);
    }
    for (std::size_t c = 0; c < B.cols_; ++c) {
      for (std::size_t r = 0; r < B.rows_; ++r) C.at_mut(r, A.cols_ + c) = B.at(r, c);
    }
    return C;
  }

  friend ModuleMap direct_sum(const ModuleMap& A, const ModuleMap& B) {
    require_same_ring(A.ring_, B.ring_);
    ModuleMap C(A.ring_, A.rows_ + B.rows_, A.cols_ + B.cols_);
    for (std::size_t c = 0; c < A.cols_; ++c) {
      for (std::size_t r = 0; r < A.rows_; ++r) C.at_mut(r, c) = A.at(r, c);
    }
    for (std::size_t c = 0; c < B.cols_; ++c) {
      for (std::size_t r = 0; r < B.rows_; ++r) C.at_mut(A.rows_ + r, A.cols_ + c) = B.at(r, c);
    }
    return C;
  }

  ModuleMap top_rows(std::size_t count) const {
    ModuleMap T(ring_, count, cols_);
    for (std::size_t c = 0; c < cols_; ++c) {
      for (std::size_t r = 0; r < count; ++r) T.at_mut(r, c) = at(r, c);
    }
    return T;
  }

  ModuleMap without_row(std::size_t row) const {
    ModuleMap T(ring_, rows_ - 1, cols_);
    for (std::size_t c = 0; c < cols_; ++c) {
      for (std::size_t r = 0, o = 0; r < rows_; ++r) {
        if (r != row) T.at_mut(o++, c) = at(r, c);
      }
    }
    return T;
  }

  ModuleMap without_column(std::size_t col) const {
    ModuleMap T(ring_, rows_, cols_ - 1);
    for (std::size_t c = 0, o = 0; c < cols_; ++c) {
      if (c == col) continue;
      for (std::size_t r = 0; r < rows_; ++r) T.at_mut(r, o) = at(r, c);
      ++o;
    }
    return T;
  }

  /// Drops zero columns and repeated columns, keeping first occurrences.
  ModuleMap pruned_columns() const {
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (column_is_zero(c)) continue;
      bool dup = false;
      for (std::size_t k : keep) {
        bool same = true;
        for (std::size_t r = 0; r < rows_ && same; ++r) same = at(r, c) == at(r, k);
        if (same) {
          dup = true;
          break;
        }
      }
      if (!dup) keep.push_back(c);
    }
    ModuleMap T(ring_, rows_, keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
      for (std::size_t r = 0; r < rows_; ++r) T.at_mut(r, i) = at(r, keep[i]);
    }
    return T;
  }

  ModuleMap map_entries(const std::function<Polynomial(const Polynomial&)>& fn) const {
    ModuleMap T(ring_, rows_, cols_);
    for (std::size_t c = 0; c < cols_; ++c) {
      for (std::size_t r = 0; r < rows_; ++r) T.set(r, c, fn(at(r, c)));
    }
    return T;
  }

  std::vector<std::vector<std::string>> to_strings() const {
    std::vector<std::vector<std::string>> out(rows_, std::vector<std::string>(cols_));
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out[r][c] = at(r, c).to_string();
    }
    return out;
  }

  std::string to_string() const {
    if (rows_ == 0 || cols_ == 0) return "zeros(" + std::to_string(rows_) + "," + std::to_string(cols_) + ")";
    std::string s = "[";
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r) s += ", ";
      s += "[";
      for (std::size_t c = 0; c < cols_; ++c) {
        if (c) s += ", ";
        s += at(r, c).to_string();
      }
      s += "]";
    }
    return s + "]";
  }

  friend bool operator==(const ModuleMap& A, const ModuleMap& B) {
    return A.rows_ == B.rows_ && A.cols_ == B.cols_ && A.entries_ == B.entries_;
  }

  // Unchecked access; callers store only reduced entries.
  Polynomial& at_mut(std::size_t r, std::size_t c) { return entries_[c * rows_ + r]; }

 private:
  RingPtr ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Polynomial> entries_;
};

}  // namespace frobforge
