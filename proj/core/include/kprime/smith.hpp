#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kprime {

  using Integer = boost::multiprecision::cpp_int;

  // Dense row-major integer matrix.
  class IntMatrix {
   public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : _rows(rows), _cols(cols), _data(rows * cols) {}
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::vector<std::vector<Integer>> const& rows, std::size_t cols);

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }
    Integer& at(std::size_t i, std::size_t j) {
      return _data[i * _cols + j];
    }
    Integer const& at(std::size_t i, std::size_t j) const {
      return _data[i * _cols + j];
    }
    std::vector<Integer> row(std::size_t i) const;

    IntMatrix operator*(IntMatrix const& other) const;
    bool      operator==(IntMatrix const& other) const = default;
    bool      is_identity() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row[dst] += q * row[src]
    void add_row(std::size_t dst, std::size_t src, Integer const& q);
    // col[dst] += q * col[src]
    void add_col(std::size_t dst, std::size_t src, Integer const& q);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

   private:
    std::size_t          _rows = 0;
    std::size_t          _cols = 0;
    std::vector<Integer> _data;
  };

  // Exact determinant by fraction-free (Bareiss) elimination.
  Integer determinant(IntMatrix const& m);

  struct SmithForm {
    // u * input * v = diagonal; u_inv and v_inv are the exact inverses.
    IntMatrix            u, u_inv, v, v_inv;
    // min(rows, cols) entries, non-negative, each dividing the next; zeros
    // come last.
    std::vector<Integer> diagonal;
    std::size_t          rank = 0;  // number of non-zero diagonal entries
  };

  SmithForm smith_normal_form(IntMatrix const& input);

  // Basis of {x : x * m = 0} as rows.
  std::vector<std::vector<Integer>> left_kernel(IntMatrix const& m);

  // A subgroup of Z^n kept in Hermite form: at most one row per pivot
  // column, pivots positive. Rows are inserted incrementally with extended
  // gcd steps, so sparse relation lists never need a dense matrix.
  class Lattice {
   public:
    explicit Lattice(std::size_t dim) : _dim(dim) {}

    std::size_t dim() const noexcept {
      return _dim;
    }
    // Inserts v (length dim); returns false when v was already a member.
    bool insert(std::vector<Integer> v);
    bool insert_sparse(std::map<std::size_t, Integer> const& v);
    bool contains(std::vector<Integer> v) const;
    // The Hermite basis, rows in increasing pivot order, fully reduced.
    IntMatrix   basis() const;
    std::size_t rank() const noexcept {
      return _rows.size();
    }

   private:
    // Reduce v against the basis; returns the first column where it could
    // not be cleared, or dim if v reduced to zero.
    std::size_t reduce(std::vector<Integer>& v) const;

    std::size_t                                  _dim;
    std::map<std::size_t, std::vector<Integer>> _rows;  // pivot column -> row
  };

  std::string to_string(Integer const& v);

}  // namespace kprime
